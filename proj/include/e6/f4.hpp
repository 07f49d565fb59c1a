#pragma once

#include <optional>
#include <string>
#include <vector>

#include "e6/verify.hpp"

namespace e6 {

/// Element of the 52-dimensional subspace W: one quaternion per block,
/// through the identification 1 = -(theta,0,0), i = (1,1,1), j = (1,w,w),
/// k = (1,W,W) within each block.
struct WVector {
    std::array<Quat, kNumBlocks> q{};

    bool isZero() const;
    friend WVector operator+(const WVector& u, const WVector& v);
    friend WVector operator-(const WVector& u, const WVector& v);
    friend WVector operator-(const WVector& v);
    friend bool operator==(const WVector& u, const WVector& v);
    friend bool operator!=(const WVector& u, const WVector& v) { return !(u == v); }
};

/// The quaternion q placed in block t of V, through the identification.
Vec78 embedQuat(int t, const Quat& q);
Vec78 embedW(const WVector& v);

/// v lies in W iff the last two complex coordinates agree in every block.
bool inW(const Vec78& v);
std::optional<WVector> projectW(const Vec78& v);

/// The 78-dimensional bracket restricted to W and divided by -3; closed on
/// W. Throws std::runtime_error if the inputs fail to multiply into W.
WVector f4Bracket(const StructureTensor& tensor, const WVector& x, const WVector& y);

/// W-closure of the bracket over all spanning pairs, dimension 52, and the
/// generator action on W: a, b, c, d preserve it, e does not.
SuiteReport verifyWClosure(const StructureTensor& tensor, const Generators& g);

/// The six displayed 4x4 blocks of the quaternionic multiplication table.
SuiteReport verifyTable2(const StructureTensor& tensor);

/// Quaternionic form of the generator actions on W: the M-matrices as right
/// multiplications, b and d, complex conjugation and left scalars, and the
/// four displayed word actions (c and three derived words).
SuiteReport verifyQuatActions(const Generators& g);

/// The four displayed eigenplane correspondences for the pointwise
/// stabilizer of W_0, and the stabilizer generators themselves.
SuiteReport verifyF4Eigen(const StructureTensor& tensor, const Generators& g);

struct F4TableEntry {
    int t1;
    Quat q1;
    int t2;
    Quat q2;
    WVector value;

    friend bool operator==(const F4TableEntry& a, const F4TableEntry& b);
};

/// The 96 displayed cells, rows before columns, grids in display order.
std::vector<F4TableEntry> f4TableEntries(const StructureTensor& tensor);

/// One line per entry: "t1 q1 t2 q2 -> t q [t q ...]" with quaternions
/// rendered as "w+xi+yj+zk".
std::string serializeF4Table(const std::vector<F4TableEntry>& entries);
std::vector<F4TableEntry> parseF4Table(const std::string& text);

std::string exportF4Table(const StructureTensor& tensor);

}  // namespace e6
