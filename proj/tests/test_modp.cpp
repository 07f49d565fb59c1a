#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "e6/modp.hpp"

using namespace e6;

namespace {
const Generators& gens() {
    static Generators g = buildGenerators();
    return g;
}
const StructureTensor& tensor() {
    static StructureTensor t = buildByPropagation(gens()).tensor;
    return t;
}
}  // namespace

TEST_CASE("integrality of the structure constants") {
    SuiteReport r = verifyIntegrality(tensor());
    CHECK(r.ok());
    CHECK(r.checks > 0);
}

TEST_CASE("characteristic 3 is rejected") {
    CHECK_THROWS_WITH_AS(reduceTensor(tensor(), 3), "characteristic 3 unsupported",
                         std::invalid_argument);
    CHECK_THROWS_AS(reduceOp(gens().a, 3), std::invalid_argument);
    CHECK_THROWS_AS(reduceTensor(tensor(), 1), std::invalid_argument);
}

TEST_CASE("reduction matches hand arithmetic") {
    ModTensor t5 = reduceTensor(tensor(), 5);
    CHECK(t5.p == 5);
    // [e_u, e_v] mod 5 agrees with the exact row reduced by hand for the
    // first seed pair (1,0,0)_0 x (1,0,0)_1
    int u = basisIndex(0, 0, 0), v = basisIndex(1, 0, 0);
    ModVec eu{}, ev{};
    eu[u] = 1;
    ev[v] = 1;
    ModVec prod = modBracketEval(t5, eu, ev);
    Vec78 exact = parseVecLit("(W,1,1)3-(1,W,W)9");
    CHECK(prod == reduceVec(exact, 5));
}

TEST_CASE("reduced operators act like the exact ones") {
    for (long p : {2L, 5L, 7L, 13L}) {
        CAPTURE(p);
        for (const BlockOperator* op : {&gens().a, &gens().b, &gens().c, &gens().d, &gens().e}) {
            ModOperator m = reduceOp(*op, p);
            Vec78 v = parseVecLit("(W,1,1)3-(1,W,W)9+t*(w,0,1)5+(0,t,1)7");
            CHECK(applyMod(m, reduceVec(v, p)) == reduceVec(apply(*op, v), p));
        }
    }
}

TEST_CASE("full mod-p verification for the four supported primes") {
    for (long p : {2L, 5L, 7L, 13L}) {
        CAPTURE(p);
        SuiteReport r = verifyModp(tensor(), gens(), p);
        for (const auto& f : r.failures) MESSAGE(f);
        CHECK(r.ok());
        CHECK(r.checks == 3003 + 76076 + 5 * 3003);
    }
}

TEST_CASE("characteristic 2 ideal") {
    SuiteReport r = verifyChar2Ideal(tensor(), gens());
    for (const auto& f : r.failures) MESSAGE(f);
    CHECK(r.ok());
}

TEST_CASE("mod tensor export round-trip") {
    for (long p : {2L, 7L}) {
        ModTensor t = reduceTensor(tensor(), p);
        std::string text = serializeModTensor(t);
        CHECK(text.rfind("e6-sc v1 mod=" + std::to_string(p), 0) == 0);
        CHECK(parseModTensor(text) == t);
        // deterministic
        CHECK(serializeModTensor(reduceTensor(tensor(), p)) == text);
    }
    CHECK_THROWS_AS(parseModTensor("e6-sc v1 mod=3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parseModTensor("bogus\n"), std::runtime_error);
}
