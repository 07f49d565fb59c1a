#pragma once

#include <string>
#include <vector>

#include "e6/verify.hpp"

namespace e6 {

/// Structure constants reduced modulo a prime p (p != 3). Same storage
/// convention as StructureTensor: rows for u < v only, entries in [0,p).
struct ModTensor {
    long p = 0;
    std::vector<std::vector<std::pair<int, long>>> rows;

    ModTensor() : rows(kRealDim * kRealDim) {}

    friend bool operator==(const ModTensor& x, const ModTensor& y);
};

/// All structure constants are integers (reduction needs no denominators).
SuiteReport verifyIntegrality(const StructureTensor& tensor);

/// Reduce the exact tensor mod p. Throws std::invalid_argument for p = 3
/// ("characteristic 3 unsupported") and for p < 2.
ModTensor reduceTensor(const StructureTensor& tensor, long p);

/// Coordinate vector over F_p in the canonical real basis.
using ModVec = std::array<long, kRealDim>;

/// Generator action with all scalars reduced mod p; the matrix entries have
/// only powers of 3 in their denominators, so any p != 3 works.
struct ModOperator {
    long p = 0;
    std::array<int, kNumBlocks> src{};
    std::array<bool, kNumBlocks> cj{};
    // 3x3 matrices of (a, b) pairs representing a + b*w mod p
    std::array<std::array<std::array<std::array<long, 2>, 3>, 3>, kNumBlocks> mat{};
};

ModOperator reduceOp(const BlockOperator& op, long p);
ModVec applyMod(const ModOperator& op, const ModVec& v);
ModVec reduceVec(const Vec78& v, long p);

/// [x, y] mod p through the reduced tensor.
ModVec modBracketEval(const ModTensor& t, const ModVec& x, const ModVec& y);

/// Reduction mod p commutes with the bracket, antisymmetry and the Jacobi
/// identity hold over F_p, and all five generators leave the reduced
/// product invariant.
SuiteReport verifyModp(const StructureTensor& tensor, const Generators& g, long p);

/// In characteristic 2 the subalgebra of type F4 (spanned by the reduced
/// Hurwitz units 1, i, j, (1+i+j+k)/2 in every block) acquires a
/// 26-dimensional ideal spanned by i+j and j+k in every block; checks its
/// dimension, the ideal property, the 9 displayed products and their
/// translates under a and b.
SuiteReport verifyChar2Ideal(const StructureTensor& tensor, const Generators& g);

/// Canonical export: header "e6-sc v1 mod=p" then "u v w c" lines.
std::string serializeModTensor(const ModTensor& t);
ModTensor parseModTensor(const std::string& text);

}  // namespace e6
