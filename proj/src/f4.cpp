#include "e6/f4.hpp"

#include <sstream>
#include <stdexcept>

namespace e6 {

bool WVector::isZero() const {
    for (const auto& x : q)
        if (!x.isZero()) return false;
    return true;
}

WVector operator+(const WVector& u, const WVector& v) {
    WVector r;
    for (int t = 0; t < kNumBlocks; ++t) r.q[t] = u.q[t] + v.q[t];
    return r;
}

WVector operator-(const WVector& u, const WVector& v) {
    WVector r;
    for (int t = 0; t < kNumBlocks; ++t) r.q[t] = u.q[t] - v.q[t];
    return r;
}

WVector operator-(const WVector& v) {
    WVector r;
    for (int t = 0; t < kNumBlocks; ++t) r.q[t] = -v.q[t];
    return r;
}

bool operator==(const WVector& u, const WVector& v) { return u.q == v.q; }

Vec78 embedQuat(int t, const Quat& q) {
    // w*(-theta,0,0) + x*(1,1,1) + y*(1,w,w) + z*(1,W,W)
    Vec78 v;
    v.blk[t][0] = Eis(q.x + q.y + q.z - q.w, Rational(-2) * q.w);
    v.blk[t][1] = Eis(q.x - q.z, q.y - q.z);
    v.blk[t][2] = v.blk[t][1];
    return v;
}

Vec78 embedW(const WVector& v) {
    Vec78 out;
    for (int t = 0; t < kNumBlocks; ++t)
        if (!v.q[t].isZero()) {
            Vec78 part = embedQuat(t, v.q[t]);
            out.blk[t] = part.blk[t];
        }
    return out;
}

bool inW(const Vec78& v) {
    for (int t = 0; t < kNumBlocks; ++t)
        if (v.blk[t][1] != v.blk[t][2]) return false;
    return true;
}

std::optional<WVector> projectW(const Vec78& v) {
    if (!inW(v)) return std::nullopt;
    WVector r;
    for (int t = 0; t < kNumBlocks; ++t) {
        const Rational& A = v.blk[t][0].a;
        const Rational& B = v.blk[t][0].b;
        const Rational& C = v.blk[t][1].a;
        const Rational& D = v.blk[t][1].b;
        Rational w = -B / 2;
        Rational z = (A + w - C - D) / 3;
        r.q[t] = Quat(w, C + z, D + z, z);
    }
    return r;
}

WVector f4Bracket(const StructureTensor& tensor, const WVector& x, const WVector& y) {
    Vec78 prod = bracketEval(tensor, embedW(x), embedW(y));
    auto w = projectW(Rational(-1, 3) * prod);
    if (!w) throw std::runtime_error("f4Bracket: product escapes W");
    return *w;
}

namespace {

const Quat& unitQuat(int u) {
    static const Quat units[4] = {Quat(1), quatI(), quatJ(), quatK()};
    return units[u];
}

Quat prefixQuat(char pre) {
    switch (pre) {
        case 'w': return quatOmega();
        case 'W': return quatOmegaBar();
        case 't': return quatTheta();
        default: return Quat(1);
    }
}

/// Parse a quaternionic sum literal such as "-t*10+t*k9" or "j3+k9":
/// terms are [sign][prefix*]<unit><block> with unit in {1,i,j,k}, prefix in
/// {w,W,t} acting by left multiplication, and a single block character.
WVector parseWLit(const std::string& s) {
    WVector out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+') ++pos;
        else if (s[pos] == '-') {
            sign = -1;
            ++pos;
        }
        Quat pre(1);
        if (pos + 1 < s.size() && s[pos + 1] == '*') {
            pre = prefixQuat(s[pos]);
            pos += 2;
        }
        char uc = s[pos++];
        int u = uc == '1' ? 0 : uc == 'i' ? 1 : uc == 'j' ? 2 : 3;
        int t = blockFromName(std::string(1, s[pos++]));
        out.q[t] = out.q[t] + Rational(sign) * (pre * unitQuat(u));
    }
    return out;
}

Vec78 conjVec(const Vec78& v) {
    Vec78 r;
    for (int t = 0; t < kNumBlocks; ++t)
        for (int k = 0; k < 3; ++k) r.blk[t][k] = conj(v.blk[t][k]);
    return r;
}

struct QRule {
    int src, dst, sign;
    bool st;  // apply the * automorphism first
    Quat right;
};

Quat applyRule(const QRule& r, const Quat& q) {
    return Rational(r.sign) * ((r.st ? star(q) : q) * r.right);
}

Quat qw() { return quatOmega(); }
Quat qwb() { return quatOmegaBar(); }

std::vector<QRule> rulesC() {
    return {{0, 0, 1, true, Quat(1)},          {1, 1, -1, false, Quat(1)},
            {3, 9, -1, false, qw()},           {9, 3, -1, false, qwb()},
            {4, 10, -1, true, Quat(1)},        {10, 4, -1, true, Quat(1)},
            {12, 12, -1, true, Quat(1)},       {2, 2, -1, true, quatJ() * qw()},
            {8, 8, -1, true, quatI()},         {5, 6, -1, true, quatK() * qw()},
            {6, 5, -1, true, quatI() * qw()},  {7, 11, -1, true, quatJ()},
            {11, 7, -1, true, quatK()}};
}

std::vector<QRule> rulesWord1() {  // c^(a^-1).c.c^a
    return {{0, 0, 1, false, Quat(1)},
            {1, 1, -1, false, quatK() * qwb()},
            {2, 12, 1, false, quatJ() * qw()},
            {3, 3, -1, false, quatI() * qwb()},
            {4, 7, 1, true, quatI() * qw()},
            {5, 4, 1, false, quatI() * qw()},
            {6, 10, 1, false, quatK() * qw()},
            {7, 5, -1, true, quatJ()},
            {8, 2, -1, true, quatI() * qwb()},
            {9, 9, -1, false, quatJ() * qwb()},
            {10, 11, 1, true, quatJ() * qwb()},
            {11, 6, -1, true, quatK() * qw()},
            {12, 8, 1, true, quatK()}};
}

std::vector<QRule> rulesWord2() {  // (c^(a^-2).c^(a^5).c^(a^-2).c)^2.b
    return {{0, 0, 1, false, Quat(1)},
            {1, 3, 1, false, qw()},
            {2, 12, 1, false, quatJ()},
            {3, 9, -1, false, quatI()},
            {4, 4, 1, false, qwb()},
            {5, 5, -1, false, quatK() * qwb()},
            {6, 11, 1, true, qwb()},
            {7, 7, 1, false, quatK() * qw()},
            {8, 2, 1, true, quatK() * qw()},
            {9, 1, 1, false, quatI() * qwb()},
            {10, 6, -1, false, quatJ() * qw()},
            {11, 10, 1, true, quatI() * qw()},
            {12, 8, 1, true, quatJ() * qw()}};
}

std::vector<QRule> rulesWord3() {  // (b.c^(a^-1).b)^2
    return {{0, 0, 1, false, qw()},
            {1, 1, 1, false, Quat(1)},
            {3, 3, 1, false, quatK() * qw()},
            {9, 9, -1, false, quatJ() * qwb()},
            {2, 10, 1, false, quatJ()},
            {10, 4, 1, false, qwb()},
            {4, 2, -1, false, quatI() * qw()},
            {5, 8, 1, true, quatJ()},
            {8, 6, 1, true, qw()},
            {6, 5, 1, false, quatI() * qwb()},
            {7, 12, 1, true, quatK()},
            {12, 11, 1, true, quatI()},
            {11, 7, -1, false, quatK()}};
}

BlockOperator word1Op(const Generators& g) {
    return compose(compose(conjugateOp(g.c, inverse(g.a)), g.c), conjugateOp(g.c, g.a));
}

BlockOperator word2Op(const Generators& g) {
    BlockOperator cam2 = conjugateOp(g.c, opPow(g.a, -2));
    BlockOperator inner = compose(compose(compose(cam2, conjugateOp(g.c, opPow(g.a, 5))), cam2), g.c);
    return compose(opPow(inner, 2), g.b);
}

BlockOperator word3Op(const Generators& g) {
    return opPow(compose(compose(g.b, conjugateOp(g.c, inverse(g.a))), g.b), 2);
}

void checkRules(SuiteReport& r, const BlockOperator& op, const std::vector<QRule>& rules,
                const std::string& name) {
    ++r.checks;
    if (rules.size() != kNumBlocks) {
        r.failures.push_back(name + ": rule list incomplete");
        return;
    }
    for (const QRule& rule : rules)
        for (int u = 0; u < 4; ++u) {
            ++r.checks;
            Vec78 got = apply(op, embedQuat(rule.src, unitQuat(u)));
            Vec78 want = embedQuat(rule.dst, applyRule(rule, unitQuat(u)));
            if (got != want)
                r.failures.push_back(name + ": rule " + blockName(rule.src) + "->" +
                                     blockName(rule.dst) + " fails on unit " + std::to_string(u));
        }
}

/// Rank over Q of a list of vectors, by Gaussian elimination.
int rankOf(std::vector<std::array<Rational, kRealDim>> m) {
    int rank = 0;
    for (int col = 0; col < kRealDim && rank < (int)m.size(); ++col) {
        int pivot = -1;
        for (int row = rank; row < (int)m.size(); ++row)
            if (m[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int row = 0; row < (int)m.size(); ++row)
            if (row != rank && m[row][col] != 0) {
                Rational f = m[row][col] / m[rank][col];
                for (int c2 = col; c2 < kRealDim; ++c2) m[row][c2] -= f * m[rank][c2];
            }
        ++rank;
    }
    return rank;
}

}  // namespace

SuiteReport verifyWClosure(const StructureTensor& tensor, const Generators& g) {
    SuiteReport r;
    r.name = "f4-closure";
    std::vector<std::pair<int, int>> span;  // (block, unit)
    for (int t = 0; t < kNumBlocks; ++t)
        for (int u = 0; u < 4; ++u) span.emplace_back(t, u);
    // dimension 52
    std::vector<std::array<Rational, kRealDim>> m;
    for (auto [t, u] : span) m.push_back(realCoords(embedQuat(t, unitQuat(u))));
    ++r.checks;
    if (rankOf(m) != 52) r.failures.push_back("W has dimension 52");
    // closed under the scaled bracket
    for (std::size_t i = 0; i < span.size(); ++i)
        for (std::size_t j = i + 1; j < span.size(); ++j) {
            ++r.checks;
            Vec78 prod = bracketEval(tensor, embedQuat(span[i].first, unitQuat(span[i].second)),
                                     embedQuat(span[j].first, unitQuat(span[j].second)));
            if (!inW(prod)) {
                r.failures.push_back("bracket leaves W at spanning pair " + std::to_string(i) +
                                     "," + std::to_string(j));
                if (r.failures.size() > 20) return r;
            }
        }
    // a, b, c, d preserve W; e does not
    const struct {
        const BlockOperator* op;
        const char* name;
    } keep[] = {{&g.a, "a"}, {&g.b, "b"}, {&g.c, "c"}, {&g.d, "d"}};
    for (const auto& item : keep)
        for (auto [t, u] : span) {
            ++r.checks;
            if (!inW(apply(*item.op, embedQuat(t, unitQuat(u)))))
                r.failures.push_back(std::string(item.name) + " fails to preserve W");
        }
    ++r.checks;
    if (inW(apply(g.e, embedQuat(1, quatJ()))))
        r.failures.push_back("e unexpectedly preserves W on j_1");
    return r;
}

SuiteReport verifyTable2(const StructureTensor& tensor) {
    SuiteReport r;
    r.name = "f4-table";
    struct Grid {
        int rowBlock, colBlock;
        char rowPre, colPre;
        const char* cells[4][4];
    };
    static const Grid grids[6] = {
        {0, 1, 'W', 'W',
         {{"j3+k9", "t*j3+t*k9", "-j3-k9", "j3+k9"},
          {"-i3+j9", "-j3+k9", "13-19", "k3-i9"},
          {"k3+19", "-j3+k9", "i3+i9", "-13+j9"},
          {"-13-i9", "-j3+k9", "-k3-j9", "-i3+19"}}},
        {0, 3, ' ', 'W',
         {{"k9+i1", "k9+i1", "t*k9+t*i1", "-k9-i1"},
          {"-19-j1", "-j9+11", "-k9+i1", "-i9-k1"},
          {"-j9+k1", "i9-j1", "-k9+i1", "19-11"},
          {"i9+11", "-19+k1", "-k9+i1", "j9+j1"}}},
        {0, 9, 'w', 'W',
         {{"i1+j3", "-i1-j3", "i1+j3", "t*i1+t*j3"},
          {"j1+13", "k1+k3", "-11+i3", "-i1+j3"},
          {"-11-k3", "-j1-i3", "-k1+13", "-i1+j3"},
          {"-k1+i3", "11-13", "j1-k3", "-i1+j3"}}},
        {1, 3, ' ', 'W',
         {{"-k0-i9", "-i0+j9", "10-k9", "j0-19"},
          {"-10-k9", "-10-k9", "-t*10+t*k9", "10+k9"},
          {"i0-19", "j0+i9", "-10+k9", "-k0+j9"},
          {"-j0+j9", "-k0+19", "10-k9", "i0+i9"}}},
        {3, 9, 'W', ' ',
         {{"-i0-j1", "k0-11", "-j0+k1", "10-i1"},
          {"-k0+k1", "j0+j1", "-i0+11", "10-i1"},
          {"-10-i1", "10+i1", "-10-i1", "-t*10+t*i1"},
          {"j0-11", "-i0+k1", "k0+j1", "-10+i1"}}},
        {9, 1, 'w', 'w',
         {{"-j0-k3", "10-j3", "i0-13", "-k0+i3"},
          {"k0-13", "-10+j3", "-j0+i3", "i0+k3"},
          {"-i0+i3", "10-j3", "k0+k3", "-j0+13"},
          {"-10-j3", "-t*10+t*j3", "10+j3", "-10-j3"}}}};
    for (const Grid& grid : grids)
        for (int row = 0; row < 4; ++row)
            for (int col = 0; col < 4; ++col) {
                WVector x, y;
                x.q[grid.rowBlock] = prefixQuat(grid.rowPre) * unitQuat(row);
                y.q[grid.colBlock] = prefixQuat(grid.colPre) * unitQuat(col);
                WVector want = parseWLit(grid.cells[row][col]);
                ++r.checks;
                if (f4Bracket(tensor, x, y) != want)
                    r.failures.push_back("cell (" + std::to_string(grid.rowBlock) + "," +
                                         std::to_string(grid.colBlock) + ") row " +
                                         std::to_string(row) + " col " + std::to_string(col));
            }
    return r;
}

SuiteReport verifyQuatActions(const Generators& g) {
    SuiteReport r;
    r.name = "f4-actions";
    auto check = [&](bool ok, const std::string& what) {
        ++r.checks;
        if (!ok) r.failures.push_back(what);
    };
    // M1..M4 act on a quaternionic block as right multiplication
    const Quat rights[4] = {quatJ() * qw(), quatI(), quatK() * qw(), quatJ()};
    for (int m = 1; m <= 4; ++m)
        for (int u = 0; u < 4; ++u) {
            Vec78 in = embedQuat(0, unitQuat(u));
            Vec78 got;
            for (int kk = 0; kk < 3; ++kk) {
                Eis s;
                for (int l = 0; l < 3; ++l) s += in.blk[0][l] * matM(m)[l][kk];
                got.blk[0][kk] = s;
            }
            check(got == embedQuat(0, unitQuat(u) * rights[m - 1]),
                  "M" + std::to_string(m) + " is right multiplication, unit " + std::to_string(u));
        }
    // d is left multiplication by the listed powers of omega
    auto exps = dExponents(g.d);
    check(exps.has_value(), "d is a diagonal scalar operator");
    if (exps)
        for (int t = 0; t < kNumBlocks; ++t) {
            Quat scale = (*exps)[t] == 0 ? Quat(1) : (*exps)[t] == 1 ? qw() : qwb();
            for (int u = 0; u < 4; ++u)
                check(apply(g.d, embedQuat(t, unitQuat(u))) == embedQuat(t, scale * unitQuat(u)),
                      "d left-multiplies block " + blockName(t));
        }
    // b combines right multiplication by omega with t -> 3t
    for (int t = 0; t < kNumBlocks; ++t)
        for (int u = 0; u < 4; ++u)
            check(apply(g.b, embedQuat(t, unitQuat(u))) ==
                      embedQuat((3 * t) % kNumBlocks, unitQuat(u) * qw()),
                  "b on block " + blockName(t));
    // complex conjugation is the negative of *, and left scalars match
    for (int u = 0; u < 4; ++u) {
        check(conjVec(embedQuat(2, unitQuat(u))) == embedQuat(2, -star(unitQuat(u))),
              "conjugation is -* on unit " + std::to_string(u));
        check(eisScale(eisOmega(), embedQuat(5, unitQuat(u))) ==
                  embedQuat(5, qw() * unitQuat(u)),
              "left omega matches quaternion omega on unit " + std::to_string(u));
    }
    // the four displayed word actions
    checkRules(r, g.c, rulesC(), "c");
    checkRules(r, word1Op(g), rulesWord1(), "c^(a^-1).c.c^a");
    checkRules(r, word2Op(g), rulesWord2(), "(c^(a^-2).c^(a^5).c^(a^-2).c)^2.b");
    checkRules(r, word3Op(g), rulesWord3(), "(b.c^(a^-1).b)^2");
    return r;
}

SuiteReport verifyF4Eigen(const StructureTensor& tensor, const Generators& g) {
    SuiteReport r;
    r.name = "f4-eigen";
    auto check = [&](bool ok, const std::string& what) {
        ++r.checks;
        if (!ok) r.failures.push_back(what);
    };
    const struct {
        int unit;
        const char* v1;
        const char* v2;
    } planes[] = {
        {0, "i1+W*j3+k9", "w*i1+j3+w*k9"},
        {1, "1T-W*j2+k8", "w*1T-j2+W*k8"},
        {2, "1X+w*iE-w*k6", "w*1X+iE-W*k6"},
        {3, "14-i5+W*j7", "w*14-w*i5+w*j7"},
    };
    BlockOperator w1 = word1Op(g), w2 = word2Op(g);
    BlockOperator da = conjugateOp(g.d, g.a);
    const struct {
        const BlockOperator* op;
        const char* name;
    } stab[] = {{&g.d, "d"},
                {&da, "d^a"},
                {&w1, "c^(a^-1).c.c^a"},
                {&w2, "(c^(a^-2).c^(a^5).c^(a^-2).c)^2.b"}};
    // the stabilizer generators fix W_0 pointwise, cube to 1, and commute
    for (std::size_t i = 0; i < 4; ++i) {
        for (int u = 0; u < 4; ++u)
            check(apply(*stab[i].op, embedQuat(0, unitQuat(u))) == embedQuat(0, unitQuat(u)),
                  std::string(stab[i].name) + " fixes W_0 pointwise");
        check(opPow(*stab[i].op, 3) == identityOp(), std::string(stab[i].name) + " cubes to 1");
        for (std::size_t j = i + 1; j < 4; ++j)
            check(compose(*stab[i].op, *stab[j].op) == compose(*stab[j].op, *stab[i].op),
                  std::string(stab[i].name) + " commutes with " + stab[j].name);
    }
    // each displayed plane is invariant under the pointwise stabilizer and
    // under the scaled bracket with its direction in W_0
    for (const auto& plane : planes) {
        Vec78 v1 = embedW(parseWLit(plane.v1));
        Vec78 v2 = embedW(parseWLit(plane.v2));
        std::string tag = "plane for unit " + std::to_string(plane.unit);
        WVector dir;
        dir.q[0] = unitQuat(plane.unit);
        for (const Vec78* v : {&v1, &v2}) {
            Vec78 prod = Rational(-1, 3) * bracketEval(tensor, embedW(dir), *v);
            check(inSpan2(prod, v1, v2), tag + ": ad(direction)-invariant");
            check(!prod.isZero(), tag + ": direction acts nontrivially");
            for (const auto& s : stab)
                check(inSpan2(apply(*s.op, *v), v1, v2), tag + ": invariant under " + s.name);
        }
    }
    return r;
}

bool operator==(const F4TableEntry& a, const F4TableEntry& b) {
    return a.t1 == b.t1 && a.q1 == b.q1 && a.t2 == b.t2 && a.q2 == b.q2 && a.value == b.value;
}

std::vector<F4TableEntry> f4TableEntries(const StructureTensor& tensor) {
    std::vector<F4TableEntry> out;
    const struct {
        int rowBlock, colBlock;
        char rowPre, colPre;
    } grids[6] = {{0, 1, 'W', 'W'}, {0, 3, ' ', 'W'}, {0, 9, 'w', 'W'},
                  {1, 3, ' ', 'W'}, {3, 9, 'W', ' '}, {9, 1, 'w', 'w'}};
    for (const auto& grid : grids)
        for (int row = 0; row < 4; ++row)
            for (int col = 0; col < 4; ++col) {
                F4TableEntry e;
                e.t1 = grid.rowBlock;
                e.q1 = prefixQuat(grid.rowPre) * unitQuat(row);
                e.t2 = grid.colBlock;
                e.q2 = prefixQuat(grid.colPre) * unitQuat(col);
                WVector x, y;
                x.q[e.t1] = e.q1;
                y.q[e.t2] = e.q2;
                e.value = f4Bracket(tensor, x, y);
                out.push_back(std::move(e));
            }
    return out;
}

std::string serializeF4Table(const std::vector<F4TableEntry>& entries) {
    std::ostringstream os;
    os << "f4-table v1 unit=-(t,0,0) scale=-1/3\n";
    for (const auto& e : entries) {
        os << blockName(e.t1) << " " << quatToString(e.q1) << " " << blockName(e.t2) << " "
           << quatToString(e.q2) << " ->";
        for (int t = 0; t < kNumBlocks; ++t)
            if (!e.value.q[t].isZero()) os << " " << blockName(t) << " " << quatToString(e.value.q[t]);
        os << "\n";
    }
    return os.str();
}

std::vector<F4TableEntry> parseF4Table(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line.rfind("f4-table v1", 0) != 0)
        throw std::runtime_error("parseF4Table: bad header");
    std::vector<F4TableEntry> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string t1, q1, t2, q2, arrow;
        if (!(ls >> t1 >> q1 >> t2 >> q2 >> arrow) || arrow != "->")
            throw std::runtime_error("parseF4Table: bad line: " + line);
        F4TableEntry e;
        e.t1 = blockFromName(t1);
        e.q1 = quatFromString(q1);
        e.t2 = blockFromName(t2);
        e.q2 = quatFromString(q2);
        std::string tb, qb;
        while (ls >> tb >> qb) e.value.q[blockFromName(tb)] = quatFromString(qb);
        out.push_back(std::move(e));
    }
    return out;
}

std::string exportF4Table(const StructureTensor& tensor) {
    return serializeF4Table(f4TableEntries(tensor));
}

}  // namespace e6
