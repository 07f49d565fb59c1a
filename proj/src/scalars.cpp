#include "e6/scalars.hpp"

#include <stdexcept>

namespace e6 {

int eisCmp(const Eis& x, const Eis& y) {
    int c = cmp(x.a, y.a);
    if (c != 0) return c;
    return cmp(x.b, y.b);
}

std::string ratToString(const Rational& r) { return r.get_str(); }

Rational ratFromString(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::runtime_error("bad rational: " + s);
    r.canonicalize();
    return r;
}

std::string eisToString(const Eis& x) {
    if (x.b == 0) return ratToString(x.a);
    std::string out = ratToString(x.a);
    if (x.b < 0) {
        out += "-" + ratToString(Rational(-x.b)) + "*w";
    } else {
        out += "+" + ratToString(x.b) + "*w";
    }
    return out;
}

Eis eisFromString(const std::string& s) {
    // "a" or "a+b*w" / "a-b*w"; signs inside rationals occur only at the
    // front, so the separator is the last '+'/'-' at position > 0.
    auto star = s.rfind("*w");
    if (star == std::string::npos) return Eis(ratFromString(s), Rational(0));
    std::size_t sep = std::string::npos;
    for (std::size_t i = star; i > 0; --i) {
        if (s[i] == '+' || s[i] == '-') {
            sep = i;
            break;
        }
    }
    if (sep == std::string::npos || sep == 0) throw std::runtime_error("bad eis: " + s);
    Rational a = ratFromString(s.substr(0, sep));
    Rational b = ratFromString(s.substr(sep + 1, star - sep - 1));
    if (s[sep] == '-') b = -b;
    return Eis(a, b);
}

std::string quatToString(const Quat& q) {
    auto term = [](const Rational& r, const char* unit, bool first) {
        std::string out;
        if (r >= 0 && !first) out += "+";
        out += ratToString(r);
        out += unit;
        return out;
    };
    std::string out = term(q.w, "", true);
    out += term(q.x, "i", false);
    out += term(q.y, "j", false);
    out += term(q.z, "k", false);
    return out;
}

Quat quatFromString(const std::string& s) {
    Quat q;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = pos + 1;  // sign (if any) belongs to this term
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string term = s.substr(pos, end - pos);
        char unit = term.back();
        Rational* slot = &q.w;
        if (unit == 'i' || unit == 'j' || unit == 'k') {
            term.pop_back();
            slot = unit == 'i' ? &q.x : unit == 'j' ? &q.y : &q.z;
        }
        if (!term.empty() && term[0] == '+') term.erase(0, 1);
        *slot = ratFromString(term);
        pos = end;
    }
    return q;
}

}  // namespace e6
