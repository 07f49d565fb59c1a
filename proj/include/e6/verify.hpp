#pragma once

#include <string>
#include <vector>

#include "e6/bracket.hpp"

namespace e6 {

struct SuiteReport {
    std::string name;
    long checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    bool ok() const { return failures.empty(); }
    /// "suite=<name> checks=<n> failures=<m>" plus one line per finding.
    std::string render() const;
};

/// Real coordinates of v over the canonical basis b(t,k,s) = 6t+2k+s.
std::array<Rational, kRealDim> realCoords(const Vec78& v);
Vec78 fromRealCoords(const std::array<Rational, kRealDim>& c);
Vec78 basisVec(int index);

/// Real-bilinear evaluation of the bracket through the tensor.
Vec78 bracketEval(const StructureTensor& tensor, const Vec78& x, const Vec78& y);

/// Generator relations: orders, a^b = a^3, e^b = e, the D- and E-relations
/// (discovering the D-element of the latter), structure of D, c's block
/// action, and the extraspecial image on block 0.
SuiteReport verifyRelations(const Generators& g);

/// Each generator permutes the 936 roots.
SuiteReport verifyRootPreservation(const Generators& g);

/// [x,y] = -[y,x] over all ordered key pairs of the product table.
SuiteReport verifyAntisymmetry(const ProductTable& table);

/// Jacobi identity over all unordered basis triples, exact.
SuiteReport verifyJacobiAll(const StructureTensor& tensor, int threads = 1);

/// The five representative configurations from the existence proof.
SuiteReport verifyJacobiCases(const StructureTensor& tensor);

/// [g(u),g(v)] = g([u,v]) over all basis pairs, for one generator.
SuiteReport verifyInvariance(const StructureTensor& tensor, const BlockOperator& op,
                             const std::string& opName);

/// Exact membership of target in the rational span of v1 and v2.
bool inSpan2(const Vec78& target, const Vec78& v1, const Vec78& v2);

using GramMatrix = std::vector<std::vector<Rational>>;

/// K(u,v) = trace(ad u . ad v) over the canonical real basis.
GramMatrix killingGram(const StructureTensor& tensor);

/// K = lambda * (real Gram of the Hermitian norm) with lambda < 0, and all
/// LDL^T pivots negative. The discovered lambda is reported in notes.
SuiteReport verifyKilling(const StructureTensor& tensor, Rational* lambdaOut = nullptr);

/// Cartan structure of V_0 plus the displayed eigenvector identities,
/// root-space correspondences, and the pointwise stabilizer words.
SuiteReport verifyCartanRoots(const StructureTensor& tensor, const Generators& g);

}  // namespace e6
