#include "e6/bracket.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace e6 {

std::optional<ScaledKey> applyToKey(const BlockOperator& op, const Key& key) {
    Vec78 img = apply(op, key.vec());
    // expect a single nonzero coordinate equal to +- w^n
    int ft = -1, fk = -1;
    for (int t = 0; t < kNumBlocks; ++t)
        for (int k = 0; k < 3; ++k)
            if (!img.blk[t][k].isZero()) {
                if (ft >= 0) return std::nullopt;
                ft = t;
                fk = k;
            }
    if (ft < 0) return std::nullopt;
    const Eis& s = img.blk[ft][fk];
    for (int n = 0; n < 3; ++n) {
        if (s == eisOmegaPow(n)) return ScaledKey{1, Key{ft, fk, n}};
        if (s == -eisOmegaPow(n)) return ScaledKey{-1, Key{ft, fk, n}};
    }
    return std::nullopt;
}

namespace {

struct Inserter {
    ProductTable& table;
    std::deque<int>& work;
    std::optional<PropagationError>& err;

    void put(const Key& x, const Key& y, const Vec78& val, Provenance p) {
        if (err) return;
        int idx = ProductTable::pairIndex(x, y);
        auto& slot = table.entry[idx];
        if (slot) {
            if (*slot != val) {
                std::ostringstream os;
                os << "conflict at pair (" << blockName(x.t) << "," << x.k << "," << x.p
                   << ")x(" << blockName(y.t) << "," << y.k << "," << y.p << ")";
                err = PropagationError{PropagationError::Kind::Conflict, os.str()};
            }
            return;
        }
        slot = val;
        table.prov[idx] = p;
        work.push_back(idx);
    }
};

void seedSameBlockZeros(ProductTable& table) {
    for (int t = 0; t < kNumBlocks; ++t)
        for (int k1 = 0; k1 < 3; ++k1)
            for (int p1 = 0; p1 < 3; ++p1)
                for (int k2 = 0; k2 < 3; ++k2)
                    for (int p2 = 0; p2 < 3; ++p2) {
                        Key x{t, k1, p1}, y{t, k2, p2};
                        int idx = ProductTable::pairIndex(x, y);
                        table.entry[idx] = Vec78{};
                        table.prov[idx] = Provenance::SameBlockZero;
                    }
}

}  // namespace

ProductTable seedProducts() {
    ProductTable table;
    seedSameBlockZeros(table);
    Key k01{0, 0, 0}, k11{1, 0, 0}, k91{9, 0, 0};
    int i1 = ProductTable::pairIndex(k01, k11);
    table.entry[i1] = parseVecLit("(W,1,1)3-(1,W,W)9");
    table.prov[i1] = Provenance::Seed;
    int i2 = ProductTable::pairIndex(k11, k91);
    table.entry[i2] = parseVecLit("-(1,w,w)0+(W,w,w)3");
    table.prov[i2] = Provenance::Seed;
    return table;
}

ProductTable tableSeeds() {
    // The six displayed 3x3 blocks: rows are the left factor.
    struct TableBlock {
        int t1, t2;
        const char* cell[3][3];
    };
    static const TableBlock blocks[6] = {
        {0, 1,
         {{"(W,1,1)3-(1,W,W)9", "(W,1,1)3-(1,W,W)9", "(W,1,1)3-(1,W,W)9"},
          {"(1,W,1)3-(w,w,W)9", "(W,w,W)3-(1,1,w)9", "(w,1,w)3-(W,W,1)9"},
          {"(1,1,W)3-(w,W,w)9", "(w,w,1)3-(W,1,W)9", "(W,W,w)3-(1,w,1)9"}}},
        {0, 3,
         {{"(w,1,1)9-(w,w,w)1", "(1,W,W)9-(1,1,1)1", "(1,W,W)9-(1,1,1)1"},
          {"(w,w,W)9-(1,w,W)1", "(W,W,1)9-(w,W,1)1", "(w,w,W)9-(1,w,W)1"},
          {"(w,W,w)9-(1,W,w)1", "(w,W,w)9-(1,W,w)1", "(W,1,W)9-(w,1,W)1"}}},
        {0, 9,
         {{"(1,1,1)1-(W,1,1)3", "(w,w,w)1-(1,w,w)3", "(w,w,w)1-(1,w,w)3"},
          {"(W,1,w)1-(W,w,W)3", "(W,1,w)1-(W,w,W)3", "(w,W,1)1-(w,1,w)3"},
          {"(W,w,1)1-(W,W,w)3", "(w,1,W)1-(w,w,1)3", "(W,w,1)1-(W,W,w)3"}}},
        {1, 3,
         {{"(w,1,1)0-(W,W,W)9", "(1,w,1)0-(w,1,W)9", "(1,1,w)0-(w,W,1)9"},
          {"(w,w,W)0-(1,W,w)9", "(1,W,W)0-(w,W,1)9", "(1,w,1)0-(1,1,1)9"},
          {"(w,W,w)0-(1,w,W)9", "(1,1,w)0-(1,1,1)9", "(1,W,W)0-(w,1,W)9"}}},
        // Note: the published (3,9) block permutes the columns of six of
        // these cells; the values below are the ones forced by the seeds
        // and confirmed by invariance under all five generators.
        {3, 9,
         {{"(W,W,W)0-(W,1,1)1", "(1,W,w)0-(W,W,w)1", "(1,w,W)0-(W,w,W)1"},
          {"(1,w,W)0-(w,w,1)1", "(w,w,w)0-(1,W,1)1", "(w,1,W)0-(W,1,1)1"},
          {"(1,W,w)0-(w,1,w)1", "(w,W,1)0-(W,1,1)1", "(w,w,w)0-(1,1,W)1"}}},
        {9, 1,
         {{"(1,w,w)0-(W,w,w)3", "(1,1,W)0-(1,w,1)3", "(1,W,1)0-(1,1,w)3"},
          {"(W,w,W)0-(W,1,W)3", "(W,1,1)0-(W,W,1)3", "(W,W,w)0-(w,1,1)3"},
          {"(W,W,w)0-(W,W,1)3", "(W,w,W)0-(w,1,1)3", "(W,1,1)0-(W,1,W)3"}}}};

    ProductTable table;
    seedSameBlockZeros(table);
    for (const auto& tb : blocks)
        for (int r = 0; r < 3; ++r)
            for (int col = 0; col < 3; ++col) {
                Key x{tb.t1, r, 0}, y{tb.t2, col, 0};
                int idx = ProductTable::pairIndex(x, y);
                Vec78 val = parseVecLit(tb.cell[r][col]);
                if (table.entry[idx] && *table.entry[idx] != val)
                    throw std::runtime_error("inconsistent table literal");
                table.entry[idx] = val;
                table.prov[idx] = Provenance::Seed;
            }
    return table;
}

std::optional<PropagationError> propagate(ProductTable& table,
                                          const std::vector<BlockOperator>& gens) {
    std::optional<PropagationError> err;
    std::deque<int> work;
    // seed the worklist in pair-index order
    for (int i = 0; i < kNumKeys * kNumKeys; ++i)
        if (table.entry[i]) work.push_back(i);

    Inserter ins{table, work, err};
    while (!work.empty() && !err) {
        int idx = work.front();
        work.pop_front();
        Key x = Key::fromIndex(idx / kNumKeys);
        Key y = Key::fromIndex(idx % kNumKeys);
        Vec78 val = *table.entry[idx];  // copy: table may reallocate? (it does not)

        ins.put(y, x, -val, Provenance::Antisymmetry);
        for (const BlockOperator& g : gens) {
            auto gx = applyToKey(g, x);
            auto gy = applyToKey(g, y);
            if (!gx || !gy)
                return PropagationError{PropagationError::Kind::Conflict,
                                        "non-monomial generator in propagation"};
            Vec78 gv = apply(g, val);
            if (gx->sign * gy->sign < 0) gv = -gv;
            ins.put(gx->key, gy->key, gv, Provenance::GeneratorImage);
        }
    }
    if (err) return err;

    // coverage: every ordered cross-block pair must be assigned
    std::ostringstream missing;
    int nMissing = 0;
    for (int i = 0; i < kNumKeys; ++i)
        for (int j = 0; j < kNumKeys; ++j) {
            Key x = Key::fromIndex(i), y = Key::fromIndex(j);
            if (x.t == y.t) continue;
            if (!table.entry[i * kNumKeys + j]) {
                if (nMissing < 5)
                    missing << " (" << blockName(x.t) << "," << x.k << "," << x.p << ")x("
                            << blockName(y.t) << "," << y.k << "," << y.p << ")";
                ++nMissing;
            }
        }
    if (nMissing > 0)
        return PropagationError{PropagationError::Kind::Incomplete,
                                std::to_string(nMissing) + " unassigned pairs:" + missing.str()};
    return std::nullopt;
}

StructureTensor tensorFromTable(const ProductTable& table) {
    StructureTensor out;
    for (int u = 0; u < kRealDim; ++u)
        for (int v = u + 1; v < kRealDim; ++v) {
            Key x{u / 6, (u % 6) / 2, u % 2};
            Key y{v / 6, (v % 6) / 2, v % 2};
            const auto& slot = table.get(x, y);
            if (!slot) throw std::runtime_error("tensorFromTable: incomplete table");
            std::vector<std::pair<int, Rational>> row;
            for (int t = 0; t < kNumBlocks; ++t)
                for (int k = 0; k < 3; ++k) {
                    const Eis& c = slot->blk[t][k];
                    if (c.a != 0) row.emplace_back(basisIndex(t, k, 0), c.a);
                    if (c.b != 0) row.emplace_back(basisIndex(t, k, 1), c.b);
                }
            out.rows[u * kRealDim + v] = std::move(row);
        }
    return out;
}

std::vector<std::pair<int, Rational>> StructureTensor::bracketRow(int u, int v) const {
    if (u == v) return {};
    if (u < v) return rows[u * kRealDim + v];
    auto row = rows[v * kRealDim + u];
    for (auto& [w, c] : row) c = -c;
    return row;
}

bool operator==(const StructureTensor& x, const StructureTensor& y) {
    return x.rows == y.rows;
}

BuildResult buildByPropagation(const Generators& g) {
    BuildResult out;
    out.table = seedProducts();
    auto err = propagate(out.table, {g.a, g.b, g.d, g.e});
    if (err) throw std::runtime_error("propagation failed: " + err->detail);
    out.tensor = tensorFromTable(out.table);
    return out;
}

BuildResult buildFromTable(const Generators& g) {
    BuildResult out;
    out.table = tableSeeds();
    BlockOperator da = conjugateOp(g.d, g.a);
    BlockOperator da2 = conjugateOp(da, g.a);
    auto err = propagate(out.table, {g.a, g.b, g.d, da, da2});
    if (err) throw std::runtime_error("table construction failed: " + err->detail);
    out.tensor = tensorFromTable(out.table);
    return out;
}

std::string serializeTensor(const StructureTensor& t, const std::string& header) {
    std::ostringstream os;
    os << header << "\n";
    for (int u = 0; u < kRealDim; ++u)
        for (int v = u + 1; v < kRealDim; ++v)
            for (const auto& [w, c] : t.rows[u * kRealDim + v])
                os << u << " " << v << " " << w << " " << ratToString(c) << "\n";
    return os.str();
}

StructureTensor parseTensor(const std::string& text, std::string* headerOut) {
    std::istringstream is(text);
    std::string header;
    if (!std::getline(is, header) || header.rfind("e6-sc v1", 0) != 0)
        throw std::runtime_error("bad tensor header");
    if (headerOut) *headerOut = header;
    StructureTensor t;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int u, v, w;
        std::string r;
        if (!(ls >> u >> v >> w >> r)) throw std::runtime_error("bad tensor line: " + line);
        if (u < 0 || v <= u || v >= kRealDim || w < 0 || w >= kRealDim)
            throw std::runtime_error("bad tensor indices: " + line);
        t.rows[u * kRealDim + v].emplace_back(w, ratFromString(r));
    }
    return t;
}

ProductTable seedsFromText(const std::string& text) {
    ProductTable table;
    seedSameBlockZeros(table);
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string t1s, t2s, lit, colon;
        int k1, p1, k2, p2;
        if (!(ls >> t1s >> k1 >> p1 >> t2s >> k2 >> p2 >> colon >> lit) || colon != ":")
            throw std::runtime_error("bad seed line: " + line);
        Key x{blockFromName(t1s), k1, p1}, y{blockFromName(t2s), k2, p2};
        int idx = ProductTable::pairIndex(x, y);
        table.entry[idx] = parseVecLit(lit);
        table.prov[idx] = Provenance::Seed;
    }
    return table;
}

}  // namespace e6
