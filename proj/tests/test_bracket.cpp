#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "e6/bracket.hpp"

using namespace e6;

namespace {
const Generators& gens() {
    static Generators g = buildGenerators();
    return g;
}
const BuildResult& propagated() {
    static BuildResult r = buildByPropagation(gens());
    return r;
}
}  // namespace

TEST_CASE("seed products match the construction") {
    ProductTable t = seedProducts();
    Key k00{0, 0, 0}, k10{1, 0, 0}, k90{9, 0, 0};
    REQUIRE(t.get(k00, k10).has_value());
    CHECK(*t.get(k00, k10) == parseVecLit("(W,1,1)3-(1,W,W)9"));
    REQUIRE(t.get(k10, k90).has_value());
    CHECK(*t.get(k10, k90) == parseVecLit("-(1,w,w)0+(W,w,w)3"));
    // same-block products are zero
    CHECK(*t.get(Key{0, 1, 0}, Key{0, 2, 0}) == Vec78{});
}

TEST_CASE("monomial key images") {
    const auto& g = gens();
    auto img = applyToKey(g.a, Key{0, 0, 0});
    REQUIRE(img.has_value());
    CHECK(img->sign == 1);
    CHECK(img->key == Key{1, 0, 0});
    // b sends (1,0,0)_1 to w*(1,0,0)_3
    img = applyToKey(g.b, Key{1, 0, 0});
    REQUIRE(img.has_value());
    CHECK(img->sign == 1);
    CHECK(img->key == Key{3, 0, 1});
    // c is not monomial on block 2
    CHECK(!applyToKey(g.c, Key{2, 0, 0}).has_value());
}

TEST_CASE("propagation covers all cross-block pairs conflict-free") {
    const auto& r = propagated();
    int assigned = 0;
    for (const auto& e : r.table.entry)
        if (e) ++assigned;
    CHECK(assigned == kNumKeys * kNumKeys);
}

TEST_CASE("propagated products match displayed values") {
    const auto& t = propagated().table;
    auto prod = [&](Key x, Key y) {
        REQUIRE(t.get(x, y).has_value());
        return *t.get(x, y);
    };
    CHECK(prod(Key{0, 1, 0}, Key{1, 0, 0}) == parseVecLit("(1,W,1)3-(w,w,W)9"));
    CHECK(prod(Key{1, 0, 0}, Key{3, 0, 0}) == parseVecLit("(w,1,1)0-(W,W,W)9"));
    // full 3x3 table of V_0 x V_1 unit products
    const char* table01[3][3] = {
        {"(W,1,1)3-(1,W,W)9", "(W,1,1)3-(1,W,W)9", "(W,1,1)3-(1,W,W)9"},
        {"(1,W,1)3-(w,w,W)9", "(W,w,W)3-(1,1,w)9", "(w,1,w)3-(W,W,1)9"},
        {"(1,1,W)3-(w,W,w)9", "(w,w,1)3-(W,1,W)9", "(W,W,w)3-(1,w,1)9"}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(prod(Key{0, i, 0}, Key{1, j, 0}) == parseVecLit(table01[i][j]));
}

TEST_CASE("block support follows the lines") {
    const auto& t = propagated().table;
    for (int i = 0; i < kNumKeys; ++i)
        for (int j = 0; j < kNumKeys; ++j) {
            Key x = Key::fromIndex(i), y = Key::fromIndex(j);
            if (x.t == y.t) continue;
            Line l = lineThrough(x.t, y.t);
            const Vec78& v = *t.entry[i * kNumKeys + j];
            for (int tb = 0; tb < kNumBlocks; ++tb)
                for (int k = 0; k < 3; ++k)
                    if (!v.blk[tb][k].isZero()) {
                        bool onLine = std::find(l.begin(), l.end(), tb) != l.end();
                        CHECK(onLine);
                        CHECK(tb != x.t);
                        CHECK(tb != y.t);
                    }
        }
}

TEST_CASE("antisymmetry of the table") {
    const auto& t = propagated().table;
    for (int i = 0; i < kNumKeys; ++i)
        for (int j = 0; j < kNumKeys; ++j) {
            Key x = Key::fromIndex(i), y = Key::fromIndex(j);
            CHECK(*t.get(x, y) == -*t.get(y, x));
        }
}

TEST_CASE("table-driven construction matches propagation bit-exactly") {
    const auto& byProp = propagated();
    BuildResult byTable = buildFromTable(gens());
    CHECK(byTable.tensor == byProp.tensor);
}

TEST_CASE("structure constants are integers") {
    const auto& tensor = propagated().tensor;
    for (const auto& row : tensor.rows)
        for (const auto& [w, c] : row) {
            CHECK(c.get_den() == 1);
            CHECK(c != 0);
        }
}

TEST_CASE("tensor export round-trip and determinism") {
    const auto& tensor = propagated().tensor;
    std::string text = serializeTensor(tensor);
    CHECK(text.rfind("e6-sc v1 basis=6t+2k+s seed=paper", 0) == 0);
    StructureTensor back = parseTensor(text);
    CHECK(back == tensor);
    // a second build from scratch is bit-identical
    BuildResult again = buildByPropagation(gens());
    CHECK(serializeTensor(again.tensor) == text);
}

TEST_CASE("seed file parsing reproduces the canonical seeds") {
    std::string text =
        "0 0 0 1 0 0 : (W,1,1)3-(1,W,W)9\n"
        "1 0 0 9 0 0 : -(1,w,w)0+(W,w,w)3\n";
    ProductTable t = seedsFromText(text);
    ProductTable canonical = seedProducts();
    auto err = propagate(t, {gens().a, gens().b, gens().d, gens().e});
    CHECK(!err.has_value());
    CHECK(tensorFromTable(t) == propagated().tensor);
}
