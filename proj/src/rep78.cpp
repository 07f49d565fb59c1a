#include "e6/rep78.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace e6 {

std::string blockName(int t) {
    static const char* names[] = {"0", "1", "2", "3", "4", "5", "6", "7", "8", "9", "X", "E", "T"};
    return names[t];
}

int blockFromName(const std::string& s) {
    for (int t = 0; t < kNumBlocks; ++t)
        if (blockName(t) == s) return t;
    throw std::runtime_error("bad block name: " + s);
}

bool Vec78::isZero() const {
    for (const auto& b : blk)
        for (const auto& x : b)
            if (!x.isZero()) return false;
    return true;
}

Vec78 operator+(const Vec78& u, const Vec78& v) {
    Vec78 out;
    for (int t = 0; t < kNumBlocks; ++t)
        for (int k = 0; k < 3; ++k) out.blk[t][k] = u.blk[t][k] + v.blk[t][k];
    return out;
}

Vec78 operator-(const Vec78& u, const Vec78& v) {
    Vec78 out;
    for (int t = 0; t < kNumBlocks; ++t)
        for (int k = 0; k < 3; ++k) out.blk[t][k] = u.blk[t][k] - v.blk[t][k];
    return out;
}

Vec78 operator-(const Vec78& v) {
    Vec78 out;
    for (int t = 0; t < kNumBlocks; ++t)
        for (int k = 0; k < 3; ++k) out.blk[t][k] = -v.blk[t][k];
    return out;
}

Vec78 operator*(const Rational& r, const Vec78& v) {
    Vec78 out;
    for (int t = 0; t < kNumBlocks; ++t)
        for (int k = 0; k < 3; ++k) out.blk[t][k] = r * v.blk[t][k];
    return out;
}

bool operator==(const Vec78& u, const Vec78& v) {
    for (int t = 0; t < kNumBlocks; ++t)
        for (int k = 0; k < 3; ++k)
            if (u.blk[t][k] != v.blk[t][k]) return false;
    return true;
}

bool Vec78::operator<(const Vec78& o) const {
    for (int t = 0; t < kNumBlocks; ++t)
        for (int k = 0; k < 3; ++k) {
            int c = eisCmp(blk[t][k], o.blk[t][k]);
            if (c != 0) return c < 0;
        }
    return false;
}

Vec78 eisScale(const Eis& s, const Vec78& v) {
    Vec78 out;
    for (int t = 0; t < kNumBlocks; ++t)
        for (int k = 0; k < 3; ++k) out.blk[t][k] = s * v.blk[t][k];
    return out;
}

Vec78 monomialVec(int t, int k, const Eis& s) {
    Vec78 out;
    out.blk[t][k] = s;
    return out;
}

Vec78 blockVec(int t, const Eis& x, const Eis& y, const Eis& z) {
    Vec78 out;
    out.blk[t][0] = x;
    out.blk[t][1] = y;
    out.blk[t][2] = z;
    return out;
}

Rational hermNorm(const Vec78& v) {
    Rational n(0);
    for (int t = 0; t < kNumBlocks; ++t)
        for (int k = 0; k < 3; ++k) n += eisNorm(v.blk[t][k]);
    return n;
}

Mat3 mat3Identity() {
    Mat3 m{};
    for (int i = 0; i < 3; ++i) m[i][i] = Eis(1);
    return m;
}

Mat3 mat3Mul(const Mat3& A, const Mat3& B) {
    Mat3 out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Eis s;
            for (int k = 0; k < 3; ++k) s += A[i][k] * B[k][j];
            out[i][j] = s;
        }
    return out;
}

Mat3 mat3Conj(const Mat3& A) {
    Mat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i][j] = conj(A[i][j]);
    return out;
}

Mat3 mat3Transpose(const Mat3& A) {
    Mat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i][j] = A[j][i];
    return out;
}

Mat3 mat3Scale(const Eis& s, const Mat3& A) {
    Mat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i][j] = s * A[i][j];
    return out;
}

bool mat3Equal(const Mat3& A, const Mat3& B) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (A[i][j] != B[i][j]) return false;
    return true;
}

Mat3 mat3Inverse(const Mat3& A) {
    auto det2 = [&](int r0, int r1, int c0, int c1) {
        return A[r0][c0] * A[r1][c1] - A[r0][c1] * A[r1][c0];
    };
    Eis det = A[0][0] * det2(1, 2, 1, 2) - A[0][1] * det2(1, 2, 0, 2) + A[0][2] * det2(1, 2, 0, 1);
    if (det.isZero()) throw std::runtime_error("singular 3x3 matrix");
    Eis inv = eisInv(det);
    Mat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            // adjugate: cofactor of (j,i)
            Eis cof = A[r0][c0] * A[r1][c1] - A[r0][c1] * A[r1][c0];
            // sign is absorbed by the cyclic choice of rows/cols
            out[i][j] = inv * cof;
        }
    return out;
}

bool mat3IsUnitary(const Mat3& M) {
    return mat3Equal(mat3Mul(M, mat3Transpose(mat3Conj(M))), mat3Identity());
}

bool operator==(const BlockOperator& f, const BlockOperator& g) {
    for (int t = 0; t < kNumBlocks; ++t) {
        if (f.src[t] != g.src[t] || f.cj[t] != g.cj[t]) return false;
        if (!mat3Equal(f.mat[t], g.mat[t])) return false;
    }
    return true;
}

BlockOperator identityOp() {
    BlockOperator op;
    for (int t = 0; t < kNumBlocks; ++t) {
        op.src[t] = t;
        op.cj[t] = false;
        op.mat[t] = mat3Identity();
    }
    return op;
}

Vec78 apply(const BlockOperator& op, const Vec78& v) {
    Vec78 out;
    for (int t = 0; t < kNumBlocks; ++t) {
        const auto& in = v.blk[op.src[t]];
        std::array<Eis, 3> row;
        for (int i = 0; i < 3; ++i) row[i] = op.cj[t] ? conj(in[i]) : in[i];
        for (int j = 0; j < 3; ++j) {
            Eis s;
            for (int i = 0; i < 3; ++i) s += row[i] * op.mat[t][i][j];
            out.blk[t][j] = s;
        }
    }
    return out;
}

BlockOperator compose(const BlockOperator& f, const BlockOperator& g) {
    BlockOperator out;
    for (int t = 0; t < kNumBlocks; ++t) {
        int u = g.src[t];
        out.src[t] = f.src[u];
        out.cj[t] = f.cj[u] != g.cj[t];
        Mat3 A = g.cj[t] ? mat3Conj(f.mat[u]) : f.mat[u];
        out.mat[t] = mat3Mul(A, g.mat[t]);
    }
    return out;
}

BlockOperator inverse(const BlockOperator& f) {
    BlockOperator out;
    for (int t = 0; t < kNumBlocks; ++t) {
        int s = f.src[t];
        out.src[s] = t;
        out.cj[s] = f.cj[t];
        Mat3 inv = mat3Inverse(f.mat[t]);
        out.mat[s] = f.cj[t] ? mat3Conj(inv) : inv;
    }
    return out;
}

BlockOperator conjugateOp(const BlockOperator& x, const BlockOperator& y) {
    return compose(compose(inverse(y), x), y);
}

BlockOperator opPow(const BlockOperator& f, int n) {
    if (n < 0) return opPow(inverse(f), -n);
    BlockOperator out = identityOp();
    for (int i = 0; i < n; ++i) out = compose(out, f);
    return out;
}

std::optional<int> operatorOrder(const BlockOperator& f, int bound) {
    BlockOperator id = identityOp();
    BlockOperator cur = f;
    for (int n = 1; n <= bound; ++n) {
        if (cur == id) return n;
        cur = compose(cur, f);
    }
    return std::nullopt;
}

Mat3 matM(int i) {
    const Eis w = eisOmega();
    const Eis wb = eisOmegaBar();
    const Eis one(1);
    Mat3 m;
    switch (i) {
        case 1:
            m = {{{w, one, one}, {one, w, one}, {one, one, w}}};
            break;
        case 2:
            m = {{{one, one, one}, {one, wb, w}, {one, w, wb}}};
            break;
        case 3:
            m = {{{w, w, w}, {wb, w, one}, {wb, one, w}}};
            break;
        case 4:
            m = {{{one, w, w}, {wb, wb, w}, {wb, w, wb}}};
            break;
        default:
            throw std::runtime_error("matM index out of range");
    }
    Eis thetaThird(Rational(1, 3), Rational(2, 3));  // theta/3
    return mat3Scale(thetaThird, m);
}

namespace {

// Matrix sending row vector (x,y,z) to the given images of the unit
// vectors: row i of the matrix is the image of coordinate i.
Mat3 rowsMat(const std::array<Eis, 3>& r0, const std::array<Eis, 3>& r1,
             const std::array<Eis, 3>& r2) {
    return {{r0, r1, r2}};
}

Mat3 permCycle312() {
    // (x,y,z) -> (z,x,y)
    const Eis o(1), z(0);
    return rowsMat({z, o, z}, {z, z, o}, {o, z, z});
}

Mat3 permCycle231() {
    // (x,y,z) -> (y,z,x)
    const Eis o(1), z(0);
    return rowsMat({z, z, o}, {o, z, z}, {z, o, z});
}

Mat3 diagMat(const Eis& d0, const Eis& d1, const Eis& d2) {
    Mat3 m{};
    m[0][0] = d0;
    m[1][1] = d1;
    m[2][2] = d2;
    return m;
}

}  // namespace

Generators buildGenerators() {
    const Eis w = eisOmega();
    const Eis wb = eisOmegaBar();
    const Eis one(1), zero(0);

    Generators g;

    // a: v_t -> v_{t+1}
    for (int t = 0; t < kNumBlocks; ++t) {
        g.a.src[t] = (t + 12) % 13;
        g.a.cj[t] = false;
        g.a.mat[t] = mat3Identity();
    }

    // b: v_t -> v_{3t}, then multiply by diag(w, wb, wb)
    for (int t = 0; t < kNumBlocks; ++t) {
        g.b.src[t] = (9 * t) % 13;  // 9 = 3^{-1} mod 13
        g.b.cj[t] = false;
        g.b.mat[t] = diagMat(w, wb, wb);
    }

    // d: diagonal powers of w per block.
    static const int dpow[kNumBlocks] = {0, 1, 0, 1, 1, 1, 2, 2, 0, 1, 2, 1, 0};
    for (int t = 0; t < kNumBlocks; ++t) {
        g.d.src[t] = t;
        g.d.cj[t] = false;
        Eis s = eisOmegaPow(dpow[t]);
        g.d.mat[t] = diagMat(s, s, s);
    }

    // c: semilinear on most blocks; written per target block.
    auto setC = [&](int target, int source, bool cflag, const Mat3& m) {
        g.c.src[target] = source;
        g.c.cj[target] = cflag;
        g.c.mat[target] = m;
    };
    Mat3 negSwapYZ = rowsMat({-one, zero, zero}, {zero, zero, -one}, {zero, -one, zero});
    setC(0, 0, true, negSwapYZ);                    // (x,y,z)_0 -> -(X,Z,Y)_0
    setC(1, 1, false, negSwapYZ);                   // (x,y,z)_1 -> -(x,z,y)_1
    setC(9, 3, false,                               // (x,y,z)_3 -> -(xw, zW, yW)_9
         rowsMat({-w, zero, zero}, {zero, zero, -wb}, {zero, -wb, zero}));
    setC(3, 9, false,                               // (x,y,z)_9 -> -(xW, zw, yw)_3
         rowsMat({-wb, zero, zero}, {zero, zero, -w}, {zero, -w, zero}));
    setC(10, 4, true, mat3Identity());              // 4 <-> X with conjugation
    setC(4, 10, true, mat3Identity());
    setC(12, 12, true, mat3Identity());             // T fixed with conjugation
    setC(2, 2, true, matM(1));
    setC(8, 8, true, matM(2));
    setC(6, 5, true, matM(3));                      // 5 -> 6 via M3
    setC(5, 6, true, mat3Transpose(matM(3)));       // 6 -> 5 via M3^T
    setC(11, 7, true, matM(4));                     // 7 -> E via M4
    setC(7, 11, true, mat3Transpose(matM(4)));      // E -> 7 via M4^T

    // e: fixes every block set-wise; monomial per block.
    auto mono = [&](const Eis& toX, int posX, const Eis& toY, int posY, const Eis& toZ,
                    int posZ) {
        // coordinate i of the input lands in coordinate pos_i scaled.
        Mat3 m{};
        m[0][posX] = toX;
        m[1][posY] = toY;
        m[2][posZ] = toZ;
        return m;
    };
    for (int t = 0; t < kNumBlocks; ++t) {
        g.e.src[t] = t;
        g.e.cj[t] = false;
    }
    g.e.mat[0] = mat3Identity();
    g.e.mat[1] = mono(one, 1, one, 2, one, 0);     // (x,y,z)->(z,x,y)
    g.e.mat[2] = mono(w, 2, wb, 0, one, 1);        // (x,y,z)->(yW,z,xw)
    g.e.mat[3] = mono(w, 1, one, 2, wb, 0);        // (x,y,z)->(zW,xw,y)
    g.e.mat[4] = diagMat(one, w, wb);
    g.e.mat[5] = mono(one, 2, one, 0, one, 1);     // (x,y,z)->(y,z,x)
    g.e.mat[6] = mono(wb, 2, w, 0, one, 1);        // (x,y,z)->(yw,z,xW)
    g.e.mat[7] = mono(w, 1, one, 2, wb, 0);        // (x,y,z)->(zW,xw,y)
    g.e.mat[8] = mono(wb, 1, one, 2, w, 0);        // (x,y,z)->(zw,xW,y)
    g.e.mat[9] = mono(wb, 1, one, 2, w, 0);        // (x,y,z)->(zw,xW,y)
    g.e.mat[10] = diagMat(one, w, wb);
    g.e.mat[11] = mono(one, 1, one, 2, one, 0);    // (x,y,z)->(z,x,y)
    g.e.mat[12] = diagMat(one, w, wb);

    return g;
}

std::vector<BlockOperator> enumerateD(const Generators& g) {
    BlockOperator da = conjugateOp(g.d, g.a);
    BlockOperator da2 = conjugateOp(da, g.a);
    std::vector<BlockOperator> out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                BlockOperator el =
                    compose(compose(opPow(g.d, i), opPow(da, j)), opPow(da2, k));
                out.push_back(el);
            }
    return out;
}

std::optional<std::array<int, kNumBlocks>> dExponents(const BlockOperator& op) {
    std::array<int, kNumBlocks> out{};
    for (int t = 0; t < kNumBlocks; ++t) {
        if (op.src[t] != t || op.cj[t]) return std::nullopt;
        const Mat3& m = op.mat[t];
        int found = -1;
        for (int n = 0; n < 3; ++n) {
            if (mat3Equal(m, diagMat(eisOmegaPow(n), eisOmegaPow(n), eisOmegaPow(n)))) found = n;
        }
        if (found < 0) return std::nullopt;
        out[t] = found;
    }
    return out;
}

std::string serializeOp(const BlockOperator& op) {
    std::ostringstream os;
    for (int t = 0; t < kNumBlocks; ++t) {
        os << blockName(t) << " <- " << blockName(op.src[t]);
        if (op.cj[t]) os << " conj";
        os << " ;";
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) os << " " << eisToString(op.mat[t][i][j]);
        os << "\n";
    }
    return os.str();
}

BlockOperator parseOp(const std::string& text) {
    BlockOperator op;
    std::istringstream is(text);
    std::string line;
    std::array<bool, kNumBlocks> seen{};
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tgt, arrow, srcName, tok;
        ls >> tgt >> arrow >> srcName;
        if (arrow != "<-") throw std::runtime_error("bad operator line: " + line);
        int t = blockFromName(tgt);
        op.src[t] = blockFromName(srcName);
        ls >> tok;
        if (tok == "conj") {
            op.cj[t] = true;
            ls >> tok;
        } else {
            op.cj[t] = false;
        }
        if (tok != ";") throw std::runtime_error("bad operator line: " + line);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (!(ls >> tok)) throw std::runtime_error("short operator line: " + line);
                op.mat[t][i][j] = eisFromString(tok);
            }
        seen[t] = true;
    }
    for (bool s : seen)
        if (!s) throw std::runtime_error("operator text missing blocks");
    return op;
}

std::array<Line, kNumBlocks> allLines() {
    std::array<Line, kNumBlocks> out;
    for (int t = 0; t < kNumBlocks; ++t) {
        Line l = {t, (t + 1) % 13, (t + 3) % 13, (t + 9) % 13};
        std::sort(l.begin(), l.end());
        out[t] = l;
    }
    return out;
}

Line lineThrough(int r, int s) {
    if (r == s) throw std::runtime_error("lineThrough requires distinct points");
    for (const Line& l : allLines()) {
        bool hasR = std::find(l.begin(), l.end(), r) != l.end();
        bool hasS = std::find(l.begin(), l.end(), s) != l.end();
        if (hasR && hasS) return l;
    }
    throw std::runtime_error("no line found");  // unreachable
}

bool collinear(int r, int s, int t) {
    if (r == s || s == t || r == t) return true;
    Line l = lineThrough(r, s);
    return std::find(l.begin(), l.end(), t) != l.end();
}

std::set<Vec78> buildRootSet() {
    std::set<Vec78> roots;
    const Eis theta = eisTheta();
    for (int t = 0; t < kNumBlocks; ++t) {
        // +- w^n (theta,0,0) in each coordinate position: 18 per block
        for (int k = 0; k < 3; ++k)
            for (int n = 0; n < 3; ++n)
                for (int sgn : {1, -1}) {
                    Eis s = Rational(sgn) * (eisOmegaPow(n) * theta);
                    roots.insert(monomialVec(t, k, s));
                }
        // +- (w^i, w^j, w^k): 54 per block
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    for (int sgn : {1, -1}) {
                        Rational r(sgn);
                        roots.insert(blockVec(t, r * eisOmegaPow(i), r * eisOmegaPow(j),
                                              r * eisOmegaPow(k)));
                    }
    }
    return roots;
}

namespace {

Eis parseComponent(std::string tok) {
    bool neg = false;
    if (!tok.empty() && tok[0] == '-') {
        neg = true;
        tok = tok.substr(1);
    }
    Eis v;
    if (tok == "0") v = Eis(0);
    else if (tok == "1") v = Eis(1);
    else if (tok == "w") v = eisOmega();
    else if (tok == "W") v = eisOmegaBar();
    else if (tok == "t") v = eisTheta();
    else if (tok == "tw") v = eisTheta() * eisOmega();
    else if (tok == "tW") v = eisTheta() * eisOmegaBar();
    else throw std::runtime_error("bad vector component: " + tok);
    return neg ? -v : v;
}

}  // namespace

Vec78 parseVecLit(const std::string& s) {
    Vec78 out;
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+') {
            ++i;
        } else if (s[i] == '-') {
            sign = -1;
            ++i;
        } else if (!first) {
            throw std::runtime_error("expected sign in vector literal: " + s);
        }
        first = false;
        Eis coef(1);
        if (s[i] != '(') {
            // term coefficient "3*" or "t*"
            std::size_t star = s.find('*', i);
            if (star == std::string::npos) throw std::runtime_error("bad term in: " + s);
            std::string c = s.substr(i, star - i);
            if (c == "3") coef = Eis(3);
            else if (c == "t") coef = eisTheta();
            else throw std::runtime_error("bad term coefficient: " + c);
            i = star + 1;
        }
        if (s[i] != '(') throw std::runtime_error("expected '(' in: " + s);
        std::size_t close = s.find(')', i);
        if (close == std::string::npos) throw std::runtime_error("unclosed '(' in: " + s);
        std::string inner = s.substr(i + 1, close - i - 1);
        std::array<Eis, 3> comps;
        std::size_t p = 0;
        for (int k = 0; k < 3; ++k) {
            std::size_t comma = (k < 2) ? inner.find(',', p) : inner.size();
            if (comma == std::string::npos) throw std::runtime_error("bad triple in: " + s);
            comps[k] = parseComponent(inner.substr(p, comma - p));
            p = comma + 1;
        }
        i = close + 1;
        if (i >= s.size()) throw std::runtime_error("missing block in: " + s);
        int t = blockFromName(s.substr(i, 1));
        ++i;
        Eis sc = Rational(sign) * coef;
        out = out + blockVec(t, sc * comps[0], sc * comps[1], sc * comps[2]);
    }
    return out;
}

}  // namespace e6
