#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "e6/scalars.hpp"

namespace e6 {

constexpr int kNumBlocks = 13;
constexpr int kRealDim = 78;

/// Block labels: 0-9 plus X=10, E=11, T=12.
std::string blockName(int t);
int blockFromName(const std::string& s);

/// Element of the 78-dimensional real space V: 13 blocks of complex row
/// vectors (x,y,z)_t over the Eisenstein rationals.
struct Vec78 {
    std::array<std::array<Eis, 3>, kNumBlocks> blk{};

    bool isZero() const;
    friend Vec78 operator+(const Vec78& u, const Vec78& v);
    friend Vec78 operator-(const Vec78& u, const Vec78& v);
    friend Vec78 operator-(const Vec78& v);
    friend Vec78 operator*(const Rational& r, const Vec78& v);
    friend bool operator==(const Vec78& u, const Vec78& v);
    friend bool operator!=(const Vec78& u, const Vec78& v) { return !(u == v); }
    bool operator<(const Vec78& o) const;
};

/// Per-coordinate multiplication by an Eisenstein scalar.
Vec78 eisScale(const Eis& s, const Vec78& v);

/// Vector with the given scalar in coordinate k of block t, zero elsewhere.
Vec78 monomialVec(int t, int k, const Eis& s);
Vec78 blockVec(int t, const Eis& x, const Eis& y, const Eis& z);

/// Sum over all coordinates of x*conj(x); preserved by all generators.
Rational hermNorm(const Vec78& v);

using Mat3 = std::array<std::array<Eis, 3>, 3>;

Mat3 mat3Identity();
Mat3 mat3Mul(const Mat3& A, const Mat3& B);
Mat3 mat3Conj(const Mat3& A);
Mat3 mat3Transpose(const Mat3& A);
Mat3 mat3Inverse(const Mat3& A);
Mat3 mat3Scale(const Eis& s, const Mat3& A);
bool mat3Equal(const Mat3& A, const Mat3& B);
/// M * conj(M)^T == I.
bool mat3IsUnitary(const Mat3& M);

/// Invertible operator on V: per target block t, a source block, a 3x3
/// matrix, and a conjugation flag. Vectors are rows and operators act on
/// the right: out_t = conj^{flag}(v_{src[t]}) * mat[t].
struct BlockOperator {
    std::array<int, kNumBlocks> src{};
    std::array<bool, kNumBlocks> cj{};
    std::array<Mat3, kNumBlocks> mat{};

    friend bool operator==(const BlockOperator& f, const BlockOperator& g);
    friend bool operator!=(const BlockOperator& f, const BlockOperator& g) { return !(f == g); }
};

BlockOperator identityOp();
Vec78 apply(const BlockOperator& op, const Vec78& v);
/// compose(f,g) applied = apply g after f.
BlockOperator compose(const BlockOperator& f, const BlockOperator& g);
BlockOperator inverse(const BlockOperator& f);
/// x^y = y^{-1} x y.
BlockOperator conjugateOp(const BlockOperator& x, const BlockOperator& y);
BlockOperator opPow(const BlockOperator& f, int n);
/// Least n <= bound with f^n = 1, or nullopt.
std::optional<int> operatorOrder(const BlockOperator& f, int bound);

/// The matrices M1..M4 used in the definition of c (i in 1..4).
Mat3 matM(int i);

struct Generators {
    BlockOperator a, b, c, d, e;
};
Generators buildGenerators();

/// The 27 elements of D = <d, d^a, d^{a^2}>, each acting as a power of w
/// on every block. Returned with the identity first, otherwise in a fixed
/// canonical order.
std::vector<BlockOperator> enumerateD(const Generators& g);
/// Exponent pattern of a D-element: n_t with block t scaled by w^{n_t};
/// nullopt if the operator is not a diagonal scalar operator of that form.
std::optional<std::array<int, kNumBlocks>> dExponents(const BlockOperator& op);

/// Serialization: 13 lines "t <- s [conj] ; m00 m01 ... m22".
std::string serializeOp(const BlockOperator& op);
BlockOperator parseOp(const std::string& text);

// --- Projective plane of order 3 on F_13 ---

using Line = std::array<int, 4>;  // sorted point labels

std::array<Line, kNumBlocks> allLines();
Line lineThrough(int r, int s);
bool collinear(int r, int s, int t);

// --- The 936 roots ---

/// Per block, the 72 E6 roots: images of +-(theta,0,0) and +-(1,1,1)
/// under coordinate permutations and per-coordinate powers of w.
std::set<Vec78> buildRootSet();

/// Parse short vector literals used for displayed product values,
/// e.g. "(W,1,1)3-(1,W,W)9" or "3*(W,0,0)5+t*(1,W,W)7".
/// Components: 0, 1, w, W (= conj w), t (= theta), tw, tW, each optionally
/// negated; term coefficients: 3 or t. Blocks named 0-9, X, E, T.
Vec78 parseVecLit(const std::string& s);

}  // namespace e6
