#pragma once

#include <gmpxx.h>

#include <string>

namespace e6 {

using Rational = mpq_class;

/// Element a + b*w of Q(w), where w = e^{2*pi*i/3} satisfies w^2 = -1-w.
struct Eis {
    Rational a;
    Rational b;

    Eis() : a(0), b(0) {}
    Eis(long v) : a(v), b(0) {}
    Eis(Rational av, Rational bv) : a(std::move(av)), b(std::move(bv)) {}

    bool isZero() const { return a == 0 && b == 0; }
    bool isRational() const { return b == 0; }

    friend Eis operator+(const Eis& x, const Eis& y) { return {x.a + y.a, x.b + y.b}; }
    friend Eis operator-(const Eis& x, const Eis& y) { return {x.a - y.a, x.b - y.b}; }
    friend Eis operator-(const Eis& x) { return {-x.a, -x.b}; }
    friend Eis operator*(const Eis& x, const Eis& y) {
        // (a1+b1 w)(a2+b2 w) with w^2 = -1-w
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
    }
    friend Eis operator*(const Rational& r, const Eis& x) { return {r * x.a, r * x.b}; }
    friend bool operator==(const Eis& x, const Eis& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Eis& x, const Eis& y) { return !(x == y); }

    Eis& operator+=(const Eis& y) {
        a += y.a;
        b += y.b;
        return *this;
    }
};

/// Ring involution fixing the rationals, w -> -1-w.
inline Eis conj(const Eis& x) { return {x.a - x.b, -x.b}; }

/// Hermitian norm x * conj(x) = a^2 - a*b + b^2, a rational.
inline Rational eisNorm(const Eis& x) { return x.a * x.a - x.a * x.b + x.b * x.b; }

inline Eis eisInv(const Eis& x) {
    Rational n = eisNorm(x);
    Eis c = conj(x);
    return {c.a / n, c.b / n};
}

inline Eis eisOmega() { return {Rational(0), Rational(1)}; }
inline Eis eisOmegaBar() { return {Rational(-1), Rational(-1)}; }
/// theta = sqrt(-3) = w - conj(w) = 1 + 2w; theta^2 = -3.
inline Eis eisTheta() { return {Rational(1), Rational(2)}; }
/// w^n for n mod 3.
inline Eis eisOmegaPow(int n);

/// Total order on Eis values (for canonical sets and maps).
int eisCmp(const Eis& x, const Eis& y);

/// Canonical rendering "a+b*w" with rationals as "n/d" (d omitted when 1).
std::string ratToString(const Rational& r);
std::string eisToString(const Eis& x);
Rational ratFromString(const std::string& s);
Eis eisFromString(const std::string& s);

/// Rational quaternion w + x*i + y*j + z*k with the Hamilton relations.
struct Quat {
    Rational w, x, y, z;

    Quat() : w(0), x(0), y(0), z(0) {}
    Quat(long v) : w(v), x(0), y(0), z(0) {}
    Quat(Rational wv, Rational xv, Rational yv, Rational zv)
        : w(std::move(wv)), x(std::move(xv)), y(std::move(yv)), z(std::move(zv)) {}

    bool isZero() const { return w == 0 && x == 0 && y == 0 && z == 0; }

    friend Quat operator+(const Quat& p, const Quat& q) {
        return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
    }
    friend Quat operator-(const Quat& p, const Quat& q) {
        return {p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z};
    }
    friend Quat operator-(const Quat& q) { return {-q.w, -q.x, -q.y, -q.z}; }
    friend Quat operator*(const Rational& r, const Quat& q) {
        return {r * q.w, r * q.x, r * q.y, r * q.z};
    }
    friend Quat operator*(const Quat& p, const Quat& q) {
        return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
                p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
                p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
                p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
    }
    friend bool operator==(const Quat& p, const Quat& q) {
        return p.w == q.w && p.x == q.x && p.y == q.y && p.z == q.z;
    }
    friend bool operator!=(const Quat& p, const Quat& q) { return !(p == q); }
};

/// The automorphism * which negates i and swaps j with -k.
inline Quat star(const Quat& q) { return {q.w, -q.x, -q.z, -q.y}; }

inline Rational quatNorm(const Quat& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline Quat quatI() { return {0, 1, 0, 0}; }
inline Quat quatJ() { return {0, 0, 1, 0}; }
inline Quat quatK() { return {0, 0, 0, 1}; }
/// The quaternion (-1+i+j+k)/2; satisfies w^2+w+1 = 0, so has order 3.
inline Quat quatOmega() {
    Rational h(1, 2);
    return {-h, h, h, h};
}
inline Quat quatOmegaBar() { return quatOmega() * quatOmega(); }
/// i+j+k = quatOmega() - quatOmegaBar(); squares to -3.
inline Quat quatTheta() { return {0, 1, 1, 1}; }

std::string quatToString(const Quat& q);
Quat quatFromString(const std::string& s);

inline Eis eisOmegaPow(int n) {
    n %= 3;
    if (n < 0) n += 3;
    switch (n) {
        case 0: return Eis(1);
        case 1: return eisOmega();
        default: return eisOmegaBar();
    }
}

}  // namespace e6
