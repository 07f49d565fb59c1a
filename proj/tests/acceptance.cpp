// Acceptance harness: one pass/fail line per criterion, nonzero exit on
// any failure.
#include <chrono>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "e6/f4.hpp"
#include "e6/modp.hpp"

using namespace e6;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int criterion, bool ok, double elapsed, const std::string& what,
            const std::vector<std::string>& diagnostics = {}) {
    std::printf("criterion %2d: %s (%6.2f s) %s\n", criterion, ok ? "PASS" : "FAIL", elapsed,
                what.c_str());
    if (!ok) {
        ++failures;
        for (const auto& d : diagnostics) std::printf("              %s\n", d.c_str());
    }
}

bool timed(bool ok, double elapsed, double limit) { return ok && elapsed < limit; }

}  // namespace

int main() {
    Generators g = buildGenerators();

    // 1: generator relations, including the discovered D-element
    {
        auto t0 = Clock::now();
        SuiteReport r = verifyRelations(g);
        double dt = seconds(t0);
        report(1, timed(r.ok(), dt, 1.0), dt,
               "generator relations (orders, a^b=a^3, e^b=e, D- and E-relations)", r.failures);
    }

    // 2: the five generators permute the 936 roots
    {
        auto t0 = Clock::now();
        SuiteReport r = verifyRootPreservation(g);
        double dt = seconds(t0);
        report(2, timed(r.ok(), dt, 5.0), dt, "all five generators permute the 936 roots",
               r.failures);
    }

    // 3: conflict-free propagation matching the table-driven build
    auto t3 = Clock::now();
    BuildResult byProp = buildByPropagation(g);
    BuildResult byTable = buildFromTable(g);
    {
        bool covered = true;
        for (const auto& e : byProp.table.entry)
            if (!e) covered = false;
        bool ok = covered && byProp.tensor == byTable.tensor;
        double dt = seconds(t3);
        report(3, timed(ok, dt, 30.0), dt,
               "seed propagation is conflict-free, total, and matches the table construction");
    }
    const StructureTensor& tensor = byProp.tensor;
    const ProductTable& table = byProp.table;

    // 4: displayed products reproduce exactly
    {
        auto t0 = Clock::now();
        std::vector<std::string> bad;
        int tableCells = 0;
        ProductTable seeds = tableSeeds();
        for (int i = 0; i < kNumKeys; ++i)
            for (int j = 0; j < kNumKeys; ++j) {
                int idx = i * kNumKeys + j;
                if (seeds.prov[idx] != Provenance::Seed) continue;
                ++tableCells;
                if (!(*seeds.entry[idx] == *table.entry[idx]))
                    bad.push_back("table cell " + std::to_string(i) + "x" + std::to_string(j));
            }
        if (tableCells != 54) bad.push_back("expected 54 table cells, saw " +
                                            std::to_string(tableCells));
        const char* products[][3] = {
            {"(1,0,0)0", "(1,0,0)1", "(W,1,1)3-(1,W,W)9"},
            {"(1,0,0)T", "(1,0,0)0", "(W,1,1)2-(1,W,W)8"},
            {"(1,0,0)9", "(1,0,0)X", "(W,1,1)T-(1,W,W)5"},
            {"(1,0,0)1", "(1,0,0)3", "(w,1,1)0-(W,W,W)9"},
            {"(1,0,0)X", "(1,0,0)T", "(w,1,1)9-(W,W,W)5"},
            {"(1,0,0)T", "(1,0,0)1", "(w,1,1)E-(W,W,W)7"},
            {"(1,0,0)8", "(1,0,0)9", "(W,1,1)E-(1,W,W)4"},
            {"(1,0,0)8", "(1,0,0)3", "-(1,w,w)7+(W,w,w)X"},
            // the published versions of the next two equations misprint the
            // last two coordinates of each term; these are the values forced
            // by the invariant product (the first also follows from applying
            // b to the equation above)
            {"(w,0,0)E", "(w,0,0)9", "(1,1,1)4-(w,1,1)8"},
            {"(1,0,0)9", "(1,0,0)E", "(w,1,1)8-(W,W,W)4"},
            // intermediate products of the Jacobi calculation
            {"(W,1,1)3", "(1,0,0)2", "-t*(w,W,W)5+t*(W,w,w)E"},
            {"(W,1,1)4", "(1,0,0)0", "3*(W,0,0)5+t*(1,W,W)7"},
            {"(1,W,W)X", "(1,0,0)0", "-t*(w,w,w)6-3*(w,0,0)E"},
            {"(1,0,0)2", "(1,W,W)9", "t*(W,1,1)6+3*(W,0,0)7"},
            {"(w,1,1)T", "(1,0,0)1", "t*(1,w,w)E+t*(w,W,W)7"},
            {"(W,W,W)8", "(1,0,0)1", "t*(1,W,W)5+t*(1,W,W)6"},
        };
        for (const auto& p : products)
            if (bracketEval(tensor, parseVecLit(p[0]), parseVecLit(p[1])) != parseVecLit(p[2]))
                bad.push_back(std::string("[") + p[0] + "," + p[1] + "] != " + p[2]);
        double dt = seconds(t0);
        report(4, bad.empty(), dt,
               "54 table cells, 10 displayed invariance products, 6 Jacobi intermediates", bad);
    }

    // 5: antisymmetry and the full Jacobi sweep
    {
        auto t0 = Clock::now();
        SuiteReport anti = verifyAntisymmetry(table);
        int workers = 8;
        SuiteReport jac = verifyJacobiAll(tensor, workers);
        double dt = seconds(t0);
        bool ok = anti.ok() && jac.ok() && jac.checks == 76076;
        std::vector<std::string> bad = anti.failures;
        bad.insert(bad.end(), jac.failures.begin(), jac.failures.end());
        report(5, timed(ok, dt, 60.0), dt,
               "antisymmetry on all pairs, Jacobi on all 76076 triples (8 workers)", bad);
    }

    // 6: invariance under all five generators
    {
        auto t0 = Clock::now();
        std::vector<std::string> bad;
        const struct {
            const BlockOperator* op;
            const char* name;
        } list[] = {{&g.a, "a"}, {&g.b, "b"}, {&g.c, "c"}, {&g.d, "d"}, {&g.e, "e"}};
        for (const auto& item : list) {
            SuiteReport r = verifyInvariance(tensor, *item.op, item.name);
            bad.insert(bad.end(), r.failures.begin(), r.failures.end());
        }
        double dt = seconds(t0);
        report(6, timed(bad.empty(), dt, 60.0), dt,
               "[g(u),g(v)] = g([u,v]) for all five generators on all basis pairs", bad);
    }

    // 7: Killing form negative definite and proportional to the norm Gram
    {
        auto t0 = Clock::now();
        Rational lambda;
        SuiteReport r = verifyKilling(tensor, &lambda);
        double dt = seconds(t0);
        report(7, timed(r.ok(), dt, 120.0), dt,
               "Killing form = lambda * norm Gram, negative definite (lambda = " +
                   ratToString(lambda) + ")",
               r.failures);
    }

    // 8: eigenvector identities and root-space data for the Cartan subalgebra
    {
        auto t0 = Clock::now();
        SuiteReport r = verifyCartanRoots(tensor, g);
        double dt = seconds(t0);
        report(8, r.ok(), dt,
               "Cartan subalgebra, displayed eigen-identities and root-space planes", r.failures);
    }

    // 9: the quaternionic F4 subalgebra
    {
        auto t0 = Clock::now();
        SuiteReport closure = verifyWClosure(tensor, g);
        SuiteReport tbl = verifyTable2(tensor);
        SuiteReport act = verifyQuatActions(g);
        SuiteReport eig = verifyF4Eigen(tensor, g);
        double dt = seconds(t0);
        std::vector<std::string> bad;
        for (const SuiteReport* r : {&closure, &tbl, &act, &eig})
            bad.insert(bad.end(), r->failures.begin(), r->failures.end());
        report(9, bad.empty(), dt,
               "W closed of dimension 52; quaternionic table, M-restrictions, word actions", bad);
    }

    // 10: modular reductions
    {
        auto t0 = Clock::now();
        std::vector<std::string> bad;
        SuiteReport integral = verifyIntegrality(tensor);
        bad.insert(bad.end(), integral.failures.begin(), integral.failures.end());
        for (long p : {2L, 5L, 7L, 13L}) {
            SuiteReport r = verifyModp(tensor, g, p);
            bad.insert(bad.end(), r.failures.begin(), r.failures.end());
        }
        bool rejected = false;
        try {
            reduceTensor(tensor, 3);
        } catch (const std::invalid_argument& e) {
            rejected = std::string(e.what()) == "characteristic 3 unsupported";
        }
        if (!rejected) bad.push_back("p = 3 was not rejected with a diagnostic");
        double dt = seconds(t0);
        report(10, bad.empty(), dt,
               "integral constants; mod-p algebra verified for p = 2, 5, 7, 13; p = 3 rejected",
               bad);
    }

    // 11: the characteristic-2 ideal
    {
        auto t0 = Clock::now();
        SuiteReport r = verifyChar2Ideal(tensor, g);
        double dt = seconds(t0);
        report(11, r.ok(), dt, "26-dimensional ideal of the reduced F4 with its product table",
               r.failures);
    }

    std::printf("%s\n", failures == 0 ? "ACCEPTANCE: all criteria passed"
                                      : "ACCEPTANCE: criteria failed");
    return failures == 0 ? 0 : 1;
}
