#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "e6/rep78.hpp"

using namespace e6;

namespace {
const Generators& gens() {
    static Generators g = buildGenerators();
    return g;
}
}  // namespace

TEST_CASE("generator block actions from the defining lists") {
    const auto& g = gens();
    Eis th = eisTheta(), w = eisOmega(), wb = eisOmegaBar(), one(1);

    CHECK(apply(g.a, blockVec(0, th, Eis(0), Eis(0))) == blockVec(1, th, Eis(0), Eis(0)));
    CHECK(apply(g.b, blockVec(2, one, one, one)) == blockVec(6, w, wb, wb));
    CHECK(apply(g.d, blockVec(1, one, Eis(0), Eis(0))) == blockVec(1, w, Eis(0), Eis(0)));
    CHECK(apply(g.d, blockVec(0, one, one, one)) == blockVec(0, one, one, one));
    // c on block 3: (x,y,z)_3 -> -(xw, zW, yW)_9
    CHECK(apply(g.c, blockVec(3, one, Eis(2), Eis(5))) ==
          blockVec(9, -w, Eis(-5) * wb, Eis(-2) * wb));
    // e cycles the coordinates of block 1
    CHECK(apply(g.e, monomialVec(1, 0, one)) == monomialVec(1, 1, one));
    CHECK(apply(g.e, monomialVec(1, 1, one)) == monomialVec(1, 2, one));
    CHECK(apply(g.e, monomialVec(1, 2, one)) == monomialVec(1, 0, one));
    CHECK(apply(identityOp(), blockVec(5, w, th, one)) == blockVec(5, w, th, one));
}

TEST_CASE("generator matrices are unitary") {
    const auto& g = gens();
    for (int i = 1; i <= 4; ++i) CHECK(mat3IsUnitary(matM(i)));
    for (const auto* op : {&g.a, &g.b, &g.c, &g.d, &g.e})
        for (int t = 0; t < kNumBlocks; ++t) CHECK(mat3IsUnitary(op->mat[t]));
}

TEST_CASE("generator orders") {
    const auto& g = gens();
    CHECK(operatorOrder(g.a, 20) == 13);
    CHECK(operatorOrder(g.b, 4) == 3);
    CHECK(operatorOrder(g.c, 4) == 2);
    CHECK(operatorOrder(g.d, 4) == 3);
    CHECK(operatorOrder(g.e, 4) == 3);
    CHECK(!operatorOrder(g.a, 12).has_value());
}

TEST_CASE("compose and inverse") {
    const auto& g = gens();
    CHECK(compose(g.a, inverse(g.a)) == identityOp());
    CHECK(compose(inverse(g.c), g.c) == identityOp());
    CHECK(compose(inverse(g.e), g.e) == identityOp());
    BlockOperator fg = compose(g.c, g.e);
    CHECK(inverse(fg) == compose(inverse(g.e), inverse(g.c)));
    // associativity on a sample word
    CHECK(compose(compose(g.a, g.b), g.c) == compose(g.a, compose(g.b, g.c)));
    // compose(f,g) applies g after f
    Vec78 v = blockVec(7, eisTheta(), Eis(1), eisOmega());
    CHECK(apply(compose(g.a, g.b), v) == apply(g.b, apply(g.a, v)));
}

TEST_CASE("group relations") {
    const auto& g = gens();
    CHECK(conjugateOp(g.a, g.b) == opPow(g.a, 3));
    CHECK(conjugateOp(g.e, g.b) == g.e);
    BlockOperator dam1 = conjugateOp(g.d, inverse(g.a));
    BlockOperator dam3 = conjugateOp(g.d, opPow(g.a, -3));
    CHECK(compose(g.d, dam1) == dam3);
}

TEST_CASE("E-relation discovers its D-element") {
    const auto& g = gens();
    BlockOperator ea = conjugateOp(g.e, g.a);
    BlockOperator ea3 = conjugateOp(g.e, opPow(g.a, 3));
    // e^a.e = e^{a^3}.delta^{-1} for some delta in D
    BlockOperator delta = compose(inverse(compose(ea, g.e)), ea3);
    auto dList = enumerateD(g);
    auto it = std::find(dList.begin(), dList.end(), delta);
    REQUIRE(it != dList.end());
    // the element comes out as d^a, not d itself
    CHECK(delta == conjugateOp(g.d, g.a));
}

TEST_CASE("D is elementary abelian of order 27") {
    const auto& g = gens();
    auto dList = enumerateD(g);
    REQUIRE(dList.size() == 27);
    for (std::size_t i = 0; i < dList.size(); ++i)
        for (std::size_t j = i + 1; j < dList.size(); ++j) {
            CHECK(!(dList[i] == dList[j]));
            CHECK(compose(dList[i], dList[j]) == compose(dList[j], dList[i]));
        }
    for (const auto& el : dList) CHECK(opPow(el, 3) == identityOp());
}

TEST_CASE("D scalar patterns on the line 0,1,3,9") {
    const auto& g = gens();
    auto dList = enumerateD(g);
    bool saw1 = false, saw2 = false;
    for (const auto& el : dList) {
        auto exps = dExponents(el);
        REQUIRE(exps.has_value());
        std::array<int, 4> onLine = {(*exps)[0], (*exps)[1], (*exps)[3], (*exps)[9]};
        if (onLine == std::array<int, 4>{0, 1, 1, 1}) saw1 = true;   // (1,w,w,w)
        if (onLine == std::array<int, 4>{1, 0, 1, 2}) saw2 = true;   // (w,1,w,W)
    }
    CHECK(saw1);
    CHECK(saw2);
}

TEST_CASE("c block permutation") {
    const auto& g = gens();
    for (int t : {0, 1, 2, 8, 12}) CHECK(g.c.src[t] == t);
    CHECK(g.c.src[9] == 3);
    CHECK(g.c.src[3] == 9);
    CHECK(g.c.src[10] == 4);
    CHECK(g.c.src[4] == 10);
    CHECK(g.c.src[6] == 5);
    CHECK(g.c.src[5] == 6);
    CHECK(g.c.src[11] == 7);
    CHECK(g.c.src[7] == 11);
}

TEST_CASE("generators preserve the hermitian norm") {
    const auto& g = gens();
    Vec78 v = parseVecLit("(W,1,1)3-(1,W,W)9+t*(w,0,1)5");
    Rational n = hermNorm(v);
    for (const auto* op : {&g.a, &g.b, &g.c, &g.d, &g.e}) CHECK(hermNorm(apply(*op, v)) == n);
}

TEST_CASE("extraspecial image on block 0") {
    const auto& g = gens();
    BlockOperator ea = conjugateOp(g.e, g.a);
    BlockOperator ea2 = conjugateOp(g.e, opPow(g.a, 2));
    // restrictions to block 0 (both fix all blocks set-wise)
    REQUIRE(ea.src[0] == 0);
    REQUIRE(ea2.src[0] == 0);
    std::vector<Mat3> grp = {mat3Identity()};
    auto contains = [&](const Mat3& m) {
        return std::any_of(grp.begin(), grp.end(), [&](const Mat3& x) { return mat3Equal(x, m); });
    };
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < grp.size() && grp.size() <= 40; ++i)
            for (const Mat3* gen : {&ea.mat[0], &ea2.mat[0]}) {
                Mat3 m = mat3Mul(grp[i], *gen);
                if (!contains(m)) {
                    grp.push_back(m);
                    grew = true;
                }
            }
    }
    CHECK(grp.size() == 27);
    int central = 0;
    for (const auto& z : grp) {
        bool cen = std::all_of(grp.begin(), grp.end(), [&](const Mat3& x) {
            return mat3Equal(mat3Mul(z, x), mat3Mul(x, z));
        });
        if (cen) ++central;
    }
    CHECK(central == 3);  // extraspecial 3^{1+2}
}

TEST_CASE("projective plane lines") {
    CHECK(lineThrough(0, 1) == Line{0, 1, 3, 9});
    CHECK(!collinear(0, 1, 2));
    CHECK(collinear(0, 1, 3));
    CHECK(collinear(0, 1, 9));
    // any two distinct points lie on exactly one line
    auto lines = allLines();
    for (int r = 0; r < 13; ++r)
        for (int s = r + 1; s < 13; ++s) {
            int count = 0;
            for (const Line& l : lines) {
                bool hasR = std::find(l.begin(), l.end(), r) != l.end();
                bool hasS = std::find(l.begin(), l.end(), s) != l.end();
                if (hasR && hasS) ++count;
            }
            CHECK(count == 1);
        }
}

TEST_CASE("five lines fixed by c") {
    const auto& g = gens();
    auto lines = allLines();
    std::vector<Line> fixed;
    for (Line l : lines) {
        Line img;
        for (int i = 0; i < 4; ++i) {
            // block s maps to the target t with c.src[t] == s
            int s = l[i];
            for (int t = 0; t < kNumBlocks; ++t)
                if (g.c.src[t] == s) img[i] = t;
        }
        std::sort(img.begin(), img.end());
        if (img == l) fixed.push_back(l);
    }
    REQUIRE(fixed.size() == 5);
    auto sortedLine = [](std::array<int, 4> l) {
        std::sort(l.begin(), l.end());
        return l;
    };
    for (auto want : {std::array<int, 4>{0, 1, 3, 9}, {1, 2, 4, 10}, {5, 6, 8, 1},
                      {11, 12, 1, 7}, {12, 0, 2, 8}})
        CHECK(std::find(fixed.begin(), fixed.end(), sortedLine(want)) != fixed.end());
}

TEST_CASE("root set built and preserved") {
    const auto& g = gens();
    auto roots = buildRootSet();
    REQUIRE(roots.size() == 936);
    for (const auto* op : {&g.a, &g.b, &g.c, &g.d, &g.e})
        for (const Vec78& r : roots) CHECK(roots.count(apply(*op, r)) == 1);
}

TEST_CASE("c squares to the identity on the basis") {
    const auto& g = gens();
    BlockOperator c2 = compose(g.c, g.c);
    for (int t = 0; t < kNumBlocks; ++t)
        for (int k = 0; k < 3; ++k) {
            Vec78 v = monomialVec(t, k, Eis(1));
            CHECK(apply(c2, v) == v);
            Vec78 vw = monomialVec(t, k, eisOmega());
            CHECK(apply(c2, vw) == vw);
        }
}

TEST_CASE("operator serialization round-trip") {
    const auto& g = gens();
    for (const auto* op : {&g.a, &g.b, &g.c, &g.d, &g.e}) {
        std::string text = serializeOp(*op);
        CHECK(parseOp(text) == *op);
    }
    BlockOperator word = compose(compose(g.c, g.b), conjugateOp(g.e, g.a));
    CHECK(parseOp(serializeOp(word)) == word);
}
