#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "e6/f4.hpp"
#include "e6/modp.hpp"

using namespace e6;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

int writeOut(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream os(path);
    os << text;
    os.flush();
    if (!os) {
        std::cerr << "error: cannot write " << path << "\n";
        return kExitUsage;
    }
    return 0;
}

std::string rootLine(const Vec78& root) {
    for (int t = 0; t < kNumBlocks; ++t)
        for (int k = 0; k < 3; ++k)
            if (!root.blk[t][k].isZero())
                return blockName(t) + " " + eisToString(root.blk[t][0]) + " " +
                       eisToString(root.blk[t][1]) + " " + eisToString(root.blk[t][2]);
    return "";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construction and verification of the compact Lie algebra of type E6\n"
                 "as the unique product invariant under a group of shape 3^(3+3):SL(3,3)"};
    app.require_subcommand(1);

    std::string mode = "both", outPath, seedFile, inPath;
    std::vector<std::string> suites;
    std::vector<long> primes;
    int threads = 1;

    CLI::App* cmdBuild = app.add_subcommand("build", "construct the structure constants");
    cmdBuild->add_option("--mode", mode, "propagate, table, or both (cross-check)")
        ->check(CLI::IsMember({"propagate", "table", "both"}));
    cmdBuild->add_option("--out", outPath, "output file (default stdout)");
    cmdBuild->add_option("--seed-file", seedFile, "replacement seed products");

    CLI::App* cmdVerify = app.add_subcommand("verify", "run verification suites");
    cmdVerify->add_option("--suite", suites,
                          "relations, roots, antisymmetry, jacobi, jacobi-cases, invariance, "
                          "killing, cartan, f4, modp, char2, or all");
    cmdVerify->add_option("--p", primes, "primes for the modp suite (default 2 5 7 13)");
    cmdVerify->add_option("--threads", threads, "worker threads for the Jacobi sweep")
        ->check(CLI::PositiveNumber);
    cmdVerify->add_option("--in", inPath, "verify a previously exported tensor file");

    CLI::App* cmdF4 = app.add_subcommand("f4", "export the quaternionic multiplication table");
    cmdF4->add_option("--out", outPath, "output file (default stdout)");

    CLI::App* cmdRoots = app.add_subcommand("roots", "list the 936 roots");
    cmdRoots->add_option("--out", outPath, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        Generators g = buildGenerators();

        if (*cmdBuild) {
            StructureTensor tensor;
            if (!seedFile.empty()) {
                std::ifstream is(seedFile);
                if (!is) {
                    std::cerr << "error: cannot read " << seedFile << "\n";
                    return kExitUsage;
                }
                std::stringstream buf;
                buf << is.rdbuf();
                ProductTable table = seedsFromText(buf.str());
                auto err = propagate(table, {g.a, g.b, g.d, g.e});
                if (err) {
                    std::cerr << "error: " << err->detail << "\n";
                    return kExitVerifyFailure;
                }
                tensor = tensorFromTable(table);
            } else if (mode == "propagate") {
                tensor = buildByPropagation(g).tensor;
            } else if (mode == "table") {
                tensor = buildFromTable(g).tensor;
            } else {
                BuildResult byProp = buildByPropagation(g);
                BuildResult byTable = buildFromTable(g);
                if (!(byProp.tensor == byTable.tensor)) {
                    std::cerr << "error: propagation and table construction disagree\n";
                    return kExitVerifyFailure;
                }
                tensor = byProp.tensor;
            }
            return writeOut(outPath, serializeTensor(tensor));
        }

        if (*cmdVerify) {
            if (suites.empty()) suites.push_back("all");
            if (primes.empty()) primes = {2, 5, 7, 13};
            for (long p : primes)
                if (p == 3 || p < 2) {
                    std::cerr << "error: characteristic 3 unsupported\n";
                    return kExitUsage;
                }
            auto wants = [&](const std::string& name) {
                for (const auto& s : suites)
                    if (s == name || s == "all") return true;
                return false;
            };
            for (const auto& s : suites)
                if (s != "all" && s != "relations" && s != "roots" && s != "antisymmetry" &&
                    s != "jacobi" && s != "jacobi-cases" && s != "invariance" && s != "killing" &&
                    s != "cartan" && s != "f4" && s != "modp" && s != "char2") {
                    std::cerr << "error: unknown suite " << s << "\n";
                    return kExitUsage;
                }

            bool needTensor = false;
            for (const char* s : {"antisymmetry", "jacobi", "jacobi-cases", "invariance",
                                  "killing", "cartan", "f4", "modp", "char2"})
                if (wants(s)) needTensor = true;
            BuildResult built;
            StructureTensor tensor;
            if (needTensor) {
                built = buildByPropagation(g);
                tensor = built.tensor;
            }
            if (!inPath.empty()) {
                std::ifstream is(inPath);
                if (!is) {
                    std::cerr << "error: cannot read " << inPath << "\n";
                    return kExitUsage;
                }
                std::stringstream buf;
                buf << is.rdbuf();
                tensor = parseTensor(buf.str());
            }

            std::vector<SuiteReport> reports;
            if (wants("relations")) reports.push_back(verifyRelations(g));
            if (wants("roots")) reports.push_back(verifyRootPreservation(g));
            if (wants("antisymmetry")) reports.push_back(verifyAntisymmetry(built.table));
            if (wants("jacobi")) reports.push_back(verifyJacobiAll(tensor, threads));
            if (wants("jacobi-cases")) reports.push_back(verifyJacobiCases(tensor));
            if (wants("invariance")) {
                reports.push_back(verifyInvariance(tensor, g.a, "a"));
                reports.push_back(verifyInvariance(tensor, g.b, "b"));
                reports.push_back(verifyInvariance(tensor, g.c, "c"));
                reports.push_back(verifyInvariance(tensor, g.d, "d"));
                reports.push_back(verifyInvariance(tensor, g.e, "e"));
            }
            if (wants("killing")) reports.push_back(verifyKilling(tensor));
            if (wants("cartan")) reports.push_back(verifyCartanRoots(tensor, g));
            if (wants("f4")) {
                reports.push_back(verifyWClosure(tensor, g));
                reports.push_back(verifyTable2(tensor));
                reports.push_back(verifyQuatActions(g));
                reports.push_back(verifyF4Eigen(tensor, g));
            }
            if (wants("modp")) {
                reports.push_back(verifyIntegrality(tensor));
                for (long p : primes) reports.push_back(verifyModp(tensor, g, p));
            }
            if (wants("char2")) reports.push_back(verifyChar2Ideal(tensor, g));

            bool ok = true;
            for (const auto& r : reports) {
                std::cout << r.render();
                if (!r.ok()) ok = false;
            }
            return ok ? 0 : kExitVerifyFailure;
        }

        if (*cmdF4) {
            StructureTensor tensor = buildByPropagation(g).tensor;
            return writeOut(outPath, exportF4Table(tensor));
        }

        if (*cmdRoots) {
            auto roots = buildRootSet();
            std::ostringstream os;
            os << "e6-roots v1 count=" << roots.size() << "\n";
            for (const Vec78& root : roots) os << rootLine(root) << "\n";
            return writeOut(outPath, os.str());
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
