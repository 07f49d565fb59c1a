#include "e6/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <thread>

namespace e6 {

std::string SuiteReport::render() const {
    std::ostringstream os;
    os << "suite=" << name << " checks=" << checks << " failures=" << failures.size() << "\n";
    for (const auto& n : notes) os << "note: " << n << "\n";
    for (const auto& f : failures) os << "FAIL: " << f << "\n";
    return os.str();
}

std::array<Rational, kRealDim> realCoords(const Vec78& v) {
    std::array<Rational, kRealDim> c;
    for (int t = 0; t < kNumBlocks; ++t)
        for (int k = 0; k < 3; ++k) {
            c[basisIndex(t, k, 0)] = v.blk[t][k].a;
            c[basisIndex(t, k, 1)] = v.blk[t][k].b;
        }
    return c;
}

Vec78 fromRealCoords(const std::array<Rational, kRealDim>& c) {
    Vec78 v;
    for (int t = 0; t < kNumBlocks; ++t)
        for (int k = 0; k < 3; ++k)
            v.blk[t][k] = Eis(c[basisIndex(t, k, 0)], c[basisIndex(t, k, 1)]);
    return v;
}

Vec78 basisVec(int index) {
    int t = index / 6, k = (index % 6) / 2, s = index % 2;
    return monomialVec(t, k, s == 0 ? Eis(1) : eisOmega());
}

namespace {

// Accumulate factor * [e_i, e_j] into buf, tracking touched targets.
void addRow(const StructureTensor& tensor, int i, int j, const Rational& factor,
            std::array<Rational, kRealDim>& buf, std::vector<int>& touched) {
    if (i == j) return;
    bool flip = i > j;
    const auto& row = flip ? tensor.rows[j * kRealDim + i] : tensor.rows[i * kRealDim + j];
    for (const auto& [w, c] : row) {
        if (buf[w] == 0) touched.push_back(w);
        if (flip)
            buf[w] -= factor * c;
        else
            buf[w] += factor * c;
    }
}

struct SparseVec {
    std::vector<std::pair<int, Rational>> nz;
};

SparseVec sparsify(const Vec78& v) {
    SparseVec s;
    auto c = realCoords(v);
    for (int i = 0; i < kRealDim; ++i)
        if (c[i] != 0) s.nz.emplace_back(i, c[i]);
    return s;
}

}  // namespace

Vec78 bracketEval(const StructureTensor& tensor, const Vec78& x, const Vec78& y) {
    SparseVec xs = sparsify(x), ys = sparsify(y);
    std::array<Rational, kRealDim> buf{};
    std::vector<int> touched;
    for (const auto& [u, cu] : xs.nz)
        for (const auto& [v, cv] : ys.nz) addRow(tensor, u, v, cu * cv, buf, touched);
    return fromRealCoords(buf);
}

SuiteReport verifyRelations(const Generators& g) {
    SuiteReport r;
    r.name = "relations";
    auto check = [&](bool ok, const std::string& what) {
        ++r.checks;
        if (!ok) r.failures.push_back(what);
    };
    check(operatorOrder(g.a, 20) == 13, "order of a is 13");
    check(operatorOrder(g.b, 4) == 3, "order of b is 3");
    check(operatorOrder(g.c, 4) == 2, "order of c is 2");
    check(operatorOrder(g.d, 4) == 3, "order of d is 3");
    check(operatorOrder(g.e, 4) == 3, "order of e is 3");
    check(conjugateOp(g.a, g.b) == opPow(g.a, 3), "a^b = a^3");
    check(conjugateOp(g.e, g.b) == g.e, "e^b = e");
    check(compose(g.d, conjugateOp(g.d, inverse(g.a))) == conjugateOp(g.d, opPow(g.a, -3)),
          "d.d^(a^-1) = d^(a^-3)");
    // e^a.e = e^(a^3).delta^-1 for a unique delta in D
    BlockOperator ea = conjugateOp(g.e, g.a);
    BlockOperator ea3 = conjugateOp(g.e, opPow(g.a, 3));
    BlockOperator delta = compose(inverse(compose(ea, g.e)), ea3);
    auto dList = enumerateD(g);
    check(std::find(dList.begin(), dList.end(), delta) != dList.end(),
          "E-relation closes with an element of D");
    check(delta == conjugateOp(g.d, g.a), "E-relation element is d^a");
    r.notes.push_back("E-relation: e^a.e = e^(a^3).(d^a)^-1");
    // D = <d, d^a, d^(a^2)> is elementary abelian of order 27
    check(dList.size() == 27, "|D| = 27");
    bool distinct = true, commuting = true, cubes = true;
    for (std::size_t i = 0; i < dList.size(); ++i) {
        if (!(opPow(dList[i], 3) == identityOp())) cubes = false;
        for (std::size_t j = i + 1; j < dList.size(); ++j) {
            if (dList[i] == dList[j]) distinct = false;
            if (!(compose(dList[i], dList[j]) == compose(dList[j], dList[i]))) commuting = false;
        }
    }
    check(distinct, "D-elements pairwise distinct");
    check(commuting, "D abelian");
    check(cubes, "D-elements cube to 1");
    return r;
}

SuiteReport verifyRootPreservation(const Generators& g) {
    SuiteReport r;
    r.name = "roots";
    auto roots = buildRootSet();
    ++r.checks;
    if (roots.size() != 936) r.failures.push_back("root count is 936");
    const struct {
        const BlockOperator* op;
        const char* name;
    } gens[] = {{&g.a, "a"}, {&g.b, "b"}, {&g.c, "c"}, {&g.d, "d"}, {&g.e, "e"}};
    for (const auto& gen : gens) {
        long bad = 0;
        for (const Vec78& root : roots)
            if (roots.count(apply(*gen.op, root)) == 0) ++bad;
        r.checks += static_cast<long>(roots.size());
        if (bad) r.failures.push_back(std::string("generator ") + gen.name + " moves " +
                                      std::to_string(bad) + " roots off the root set");
    }
    return r;
}

SuiteReport verifyAntisymmetry(const ProductTable& table) {
    SuiteReport r;
    r.name = "antisymmetry";
    for (int i = 0; i < kNumKeys; ++i)
        for (int j = 0; j < kNumKeys; ++j) {
            Key x = Key::fromIndex(i), y = Key::fromIndex(j);
            ++r.checks;
            const auto& xy = table.get(x, y);
            const auto& yx = table.get(y, x);
            if (!xy || !yx || !(*xy == -*yx)) {
                r.failures.push_back("pair (" + std::to_string(x.t) + "," + std::to_string(x.k) +
                                     "," + std::to_string(x.p) + ")x(" + std::to_string(y.t) + "," +
                                     std::to_string(y.k) + "," + std::to_string(y.p) + ")");
                if (r.failures.size() > 20) return r;
            }
        }
    return r;
}

namespace {

void jacobiRange(const StructureTensor& tensor, int uBegin, int uEnd, long* checks,
                 std::vector<std::string>* failures) {
    std::array<Rational, kRealDim> buf{};
    std::vector<int> touched;
    touched.reserve(kRealDim);
    for (int u = uBegin; u < uEnd; ++u)
        for (int v = u + 1; v < kRealDim; ++v) {
            const auto& ruv = tensor.rows[u * kRealDim + v];
            for (int w = v + 1; w < kRealDim; ++w) {
                for (const auto& [p, c] : ruv) addRow(tensor, p, w, c, buf, touched);
                for (const auto& [p, c] : tensor.rows[v * kRealDim + w])
                    addRow(tensor, p, u, c, buf, touched);
                for (const auto& [p, c] : tensor.rows[u * kRealDim + w])
                    addRow(tensor, p, v, -c, buf, touched);  // [[w,u],v] = -[[u,w],v]
                ++*checks;
                bool zero = true;
                for (int idx : touched) {
                    if (buf[idx] != 0) zero = false;
                    buf[idx] = 0;
                }
                touched.clear();
                if (!zero && failures->size() <= 20)
                    failures->push_back("triple (" + std::to_string(u) + "," + std::to_string(v) +
                                        "," + std::to_string(w) + ")");
            }
        }
}

}  // namespace

SuiteReport verifyJacobiAll(const StructureTensor& tensor, int threads) {
    SuiteReport r;
    r.name = "jacobi";
    if (threads < 1) threads = 1;
    if (threads > kRealDim) threads = kRealDim;
    std::vector<long> checks(threads, 0);
    std::vector<std::vector<std::string>> fails(threads);
    if (threads == 1) {
        jacobiRange(tensor, 0, kRealDim, &checks[0], &fails[0]);
    } else {
        // balanced static partition of the outer index
        std::vector<std::thread> pool;
        std::vector<std::pair<int, int>> ranges;
        // weight of outer index u is roughly (78-u)^2; slice by cumulative weight
        double total = 0;
        for (int u = 0; u < kRealDim; ++u) total += double(kRealDim - u) * (kRealDim - u);
        int begin = 0;
        double acc = 0;
        for (int u = 0; u < kRealDim && (int)ranges.size() < threads - 1; ++u) {
            acc += double(kRealDim - u) * (kRealDim - u);
            if (acc >= total * (ranges.size() + 1) / threads) {
                ranges.emplace_back(begin, u + 1);
                begin = u + 1;
            }
        }
        ranges.emplace_back(begin, kRealDim);
        for (std::size_t i = 0; i < ranges.size(); ++i)
            pool.emplace_back(jacobiRange, std::cref(tensor), ranges[i].first, ranges[i].second,
                              &checks[i], &fails[i]);
        for (auto& th : pool) th.join();
    }
    for (int i = 0; i < threads; ++i) {
        r.checks += checks[i];
        for (auto& f : fails[i]) r.failures.push_back(std::move(f));
    }
    std::sort(r.failures.begin(), r.failures.end());
    return r;
}

SuiteReport verifyJacobiCases(const StructureTensor& tensor) {
    SuiteReport r;
    r.name = "jacobi-cases";
    Vec78 x = parseVecLit("(1,0,0)0");
    Vec78 y = parseVecLit("(1,0,0)1");
    const struct {
        const char* lit;
        const char* what;
    } cases[] = {
        {"(1,0,0)2", "non-collinear third point"},
        {"(1,0,0)3", "collinear distinct unit"},
        {"(w,0,0)3", "collinear distinct w-scaled"},
        {"(w,0,0)0", "repeated block, w-scaled"},
        {"(0,1,0)0", "repeated block, second coordinate"},
    };
    for (const auto& cs : cases) {
        Vec78 z = parseVecLit(cs.lit);
        Vec78 j = bracketEval(tensor, bracketEval(tensor, x, y), z) +
                  bracketEval(tensor, bracketEval(tensor, y, z), x) +
                  bracketEval(tensor, bracketEval(tensor, z, x), y);
        ++r.checks;
        if (!j.isZero()) r.failures.push_back(std::string("jacobiator nonzero: ") + cs.what);
    }
    return r;
}

SuiteReport verifyInvariance(const StructureTensor& tensor, const BlockOperator& op,
                             const std::string& opName) {
    SuiteReport r;
    r.name = "invariance-" + opName;
    std::vector<Vec78> image(kRealDim);
    for (int u = 0; u < kRealDim; ++u) image[u] = apply(op, basisVec(u));
    for (int u = 0; u < kRealDim; ++u)
        for (int v = u + 1; v < kRealDim; ++v) {
            std::array<Rational, kRealDim> buf{};
            std::vector<int> touched;
            for (const auto& [w, c] : tensor.rows[u * kRealDim + v]) buf[w] = c;
            Vec78 rhs = apply(op, fromRealCoords(buf));
            Vec78 lhs = bracketEval(tensor, image[u], image[v]);
            ++r.checks;
            if (lhs != rhs) {
                r.failures.push_back("pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
                if (r.failures.size() > 20) return r;
            }
        }
    return r;
}

GramMatrix killingGram(const StructureTensor& tensor) {
    // dense ad-matrices: ad[u][p][q] = coefficient of e_p in [e_u, e_q]
    std::vector<std::vector<std::array<Rational, kRealDim>>> ad(
        kRealDim, std::vector<std::array<Rational, kRealDim>>(kRealDim));
    std::vector<std::vector<std::pair<int, int>>> support(kRealDim);
    std::array<Rational, kRealDim> buf{};
    std::vector<int> touched;
    for (int u = 0; u < kRealDim; ++u)
        for (int q = 0; q < kRealDim; ++q) {
            addRow(tensor, u, q, Rational(1), buf, touched);
            for (int p : touched) {
                if (buf[p] != 0) {
                    ad[u][p][q] = buf[p];
                    support[u].emplace_back(p, q);
                }
                buf[p] = 0;
            }
            touched.clear();
        }
    GramMatrix K(kRealDim, std::vector<Rational>(kRealDim, Rational(0)));
    for (int u = 0; u < kRealDim; ++u)
        for (int v = u; v < kRealDim; ++v) {
            Rational s(0);
            for (const auto& [p, q] : support[u]) s += ad[u][p][q] * ad[v][q][p];
            K[u][v] = s;
            K[v][u] = s;
        }
    return K;
}

SuiteReport verifyKilling(const StructureTensor& tensor, Rational* lambdaOut) {
    SuiteReport r;
    r.name = "killing";
    GramMatrix K = killingGram(tensor);
    // real Gram of the Hermitian norm: within each complex coordinate the
    // 2x2 block [[1,-1/2],[-1/2,1]], zero across coordinates
    auto gram = [](int u, int v) -> Rational {
        if (u / 2 != v / 2) return 0;
        return u == v ? Rational(1) : Rational(-1, 2);
    };
    Rational lambda = K[0][0];
    if (lambdaOut) *lambdaOut = lambda;
    r.notes.push_back("lambda = " + ratToString(lambda));
    ++r.checks;
    if (!(lambda < 0)) r.failures.push_back("lambda is negative");
    long bad = 0;
    for (int u = 0; u < kRealDim; ++u)
        for (int v = 0; v < kRealDim; ++v) {
            ++r.checks;
            if (K[u][v] != lambda * gram(u, v)) ++bad;
        }
    if (bad) r.failures.push_back("K deviates from lambda * Gram at " + std::to_string(bad) +
                                  " entries");
    // exact LDL^T: all pivots negative
    GramMatrix L(kRealDim, std::vector<Rational>(kRealDim, Rational(0)));
    std::vector<Rational> piv(kRealDim);
    bool allNeg = true;
    for (int j = 0; j < kRealDim; ++j) {
        Rational d = K[j][j];
        for (int k = 0; k < j; ++k) d -= L[j][k] * L[j][k] * piv[k];
        piv[j] = d;
        if (!(d < 0)) {
            allNeg = false;
            break;
        }
        L[j][j] = 1;
        for (int i = j + 1; i < kRealDim; ++i) {
            Rational s = K[i][j];
            for (int k = 0; k < j; ++k) s -= L[i][k] * L[j][k] * piv[k];
            L[i][j] = s / d;
        }
    }
    ++r.checks;
    if (!allNeg) r.failures.push_back("LDL^T pivots all negative (negative definiteness)");
    // associativity K([x,y],z) = K(x,[y,z]) on random basis triples
    std::mt19937 rng(20240213);
    std::uniform_int_distribution<int> pick(0, kRealDim - 1);
    std::array<Rational, kRealDim> buf{};
    std::vector<int> touched;
    for (int trial = 0; trial < 100; ++trial) {
        int u = pick(rng), v = pick(rng), w = pick(rng);
        Rational lhs(0), rhs(0);
        addRow(tensor, u, v, Rational(1), buf, touched);
        for (int idx : touched) {
            lhs += buf[idx] * K[idx][w];
            buf[idx] = 0;
        }
        touched.clear();
        addRow(tensor, v, w, Rational(1), buf, touched);
        for (int idx : touched) {
            rhs += K[u][idx] * buf[idx];
            buf[idx] = 0;
        }
        touched.clear();
        ++r.checks;
        if (lhs != rhs)
            r.failures.push_back("K not associative on triple (" + std::to_string(u) + "," +
                                 std::to_string(v) + "," + std::to_string(w) + ")");
    }
    return r;
}

bool inSpan2(const Vec78& target, const Vec78& v1, const Vec78& v2) {
    auto t = realCoords(target), c1 = realCoords(v1), c2 = realCoords(v2);
    // find a 2x2 invertible minor of (c1|c2)
    for (int i = 0; i < kRealDim; ++i)
        for (int j = i + 1; j < kRealDim; ++j) {
            Rational det = c1[i] * c2[j] - c1[j] * c2[i];
            if (det == 0) continue;
            Rational alpha = (t[i] * c2[j] - t[j] * c2[i]) / det;
            Rational beta = (c1[i] * t[j] - c1[j] * t[i]) / det;
            for (int k = 0; k < kRealDim; ++k)
                if (t[k] != alpha * c1[k] + beta * c2[k]) return false;
            return true;
        }
    return target.isZero();
}

SuiteReport verifyCartanRoots(const StructureTensor& tensor, const Generators& g) {
    SuiteReport r;
    r.name = "cartan";
    auto check = [&](bool ok, const std::string& what) {
        ++r.checks;
        if (!ok) r.failures.push_back(what);
    };
    // V_0 (block 0) is abelian
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            check(tensor.rows[i * kRealDim + j].empty(),
                  "[V0,V0] = 0 at pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    // ...and maximal among coordinate subspaces: nothing outside centralizes it
    for (int u = 6; u < kRealDim; ++u) {
        bool moved = false;
        for (int j = 0; j < 6 && !moved; ++j)
            if (!tensor.rows[j * kRealDim + u].empty()) moved = true;
        check(moved, "basis vector " + std::to_string(u) + " does not centralize V0");
    }
    // displayed eigenvector identities for v
    Vec78 v = parseVecLit("(1,1,1)1+(w,W,W)3+(w,1,1)9");
    Eis th3 = Eis(3) * eisTheta();
    check(bracketEval(tensor, parseVecLit("(1,0,0)0"), v) == eisScale(th3, v),
          "[(1,0,0)_0, v] = 3 theta v");
    check(bracketEval(tensor, parseVecLit("(w,0,0)0"), v) == eisScale(-th3, v),
          "[(w,0,0)_0, v] = -3 theta v");
    for (const char* lit : {"(0,1,0)0", "(0,w,0)0", "(0,0,1)0", "(0,0,w)0"})
        check(bracketEval(tensor, parseVecLit(lit), v).isZero(),
              std::string("[") + lit + ", v] = 0");
    // the four displayed root-space correspondences are ad(V0)-invariant
    const struct {
        const char* v1;
        const char* v2;
        const char* what;
    } spans[] = {
        {"(1,1,1)1+(W,1,1)3+(1,W,W)9", "(w,w,w)1+(1,w,w)3+(w,1,1)9", "span for +-(theta,0,0)"},
        {"(t,0,0)T+(W,1,1)2-(1,W,W)8", "(tw,0,0)T+(1,w,w)2-(W,w,w)8", "span for +-(1,1,1)"},
        {"(t,0,0)X-(w,w,w)E+(w,1,1)6", "(tw,0,0)X-(1,1,1)E+(W,w,w)6", "span for +-(1,w,w)"},
        {"(t,0,0)4+(1,1,1)5-(W,1,1)7", "(tw,0,0)4+(w,w,w)5-(w,W,W)7", "span for +-(1,W,W)"},
    };
    for (const auto& sp : spans) {
        Vec78 v1 = parseVecLit(sp.v1), v2 = parseVecLit(sp.v2);
        for (int h = 0; h < 6; ++h) {
            check(inSpan2(bracketEval(tensor, basisVec(h), v1), v1, v2),
                  std::string(sp.what) + " invariant under ad(e_" + std::to_string(h) + ")");
            check(inSpan2(bracketEval(tensor, basisVec(h), v2), v1, v2),
                  std::string(sp.what) + " invariant under ad(e_" + std::to_string(h) + ")");
        }
    }
    // the five words stabilizing V0 pointwise
    BlockOperator ca = conjugateOp(g.c, g.a);
    BlockOperator cam1 = conjugateOp(g.c, inverse(g.a));
    BlockOperator w1 = compose(compose(cam1, g.c), ca);
    BlockOperator cam2 = conjugateOp(g.c, opPow(g.a, -2));
    BlockOperator ca5 = conjugateOp(g.c, opPow(g.a, 5));
    BlockOperator inner = compose(compose(compose(cam2, ca5), cam2), g.c);
    BlockOperator w2 = compose(opPow(inner, 2), g.b);
    const struct {
        const BlockOperator* op;
        const char* name;
    } words[] = {{&g.d, "d"},
                 {nullptr, "d^a"},
                 {&g.e, "e"},
                 {&w1, "c^(a^-1).c.c^a"},
                 {&w2, "(c^(a^-2).c^(a^5).c^(a^-2).c)^2.b"}};
    BlockOperator da = conjugateOp(g.d, g.a);
    std::vector<const BlockOperator*> ops;
    for (const auto& wd : words) ops.push_back(wd.op ? wd.op : &da);
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (int h = 0; h < 6; ++h)
            check(apply(*ops[i], basisVec(h)) == basisVec(h),
                  std::string(words[i].name) + " fixes V0 pointwise");
        check(opPow(*ops[i], 3) == identityOp(), std::string(words[i].name) + " cubes to 1");
        for (std::size_t j = i + 1; j < ops.size(); ++j)
            check(compose(*ops[i], *ops[j]) == compose(*ops[j], *ops[i]),
                  std::string(words[i].name) + " commutes with " + words[j].name);
    }
    // each word scales v through some element of D
    auto dList = enumerateD(g);
    for (std::size_t i = 0; i < ops.size(); ++i) {
        Vec78 img = apply(*ops[i], v);
        bool found = false;
        for (const auto& el : dList)
            if (apply(el, v) == img) {
                found = true;
                break;
            }
        check(found, std::string(words[i].name) + " maps v into its D-orbit");
    }
    return r;
}

}  // namespace e6
