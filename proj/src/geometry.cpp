#include "tropbt/geometry.hpp"

#include "tropbt/errors.hpp"

#include <numeric>

namespace tropbt {

long det(const IVec& a, const IVec& b) { return a.x * b.y - a.y * b.x; }

long gcdl(long a, long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

IVec primitive(const IVec& v) {
    long g = gcdl(v.x, v.y);
    if (g == 0) return v;
    return {v.x / g, v.y / g};
}

IVec undirected(const IVec& v) {
    if (v.x < 0 || (v.x == 0 && v.y < 0)) return -v;
    return v;
}

std::string to_string(const IVec& v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

Rat det(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }

Rat dot(const Pt& a, const IVec& b) { return a.x * b.x + a.y * b.y; }

std::string to_string(const Pt& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

bool lex_less(const Pt& a, const Pt& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

Line Line::through(const Pt& p, const IVec& dir) {
    IVec d = primitive(dir);
    if (d.x == 0 && d.y == 0) fail(errc::internal, "line through point with zero direction");
    IVec n = rot90(d);
    if (n.x < 0 || (n.x == 0 && n.y < 0)) n = -n;
    Line l;
    l.a = n.x;
    l.b = n.y;
    l.c = Rat(n.x) * p.x + Rat(n.y) * p.y;
    return l;
}

bool Line::operator<(const Line& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
}

std::optional<Pt> intersect(const Line& l, const Line& m) {
    long d = l.a * m.b - l.b * m.a;
    if (d == 0) return std::nullopt;
    Rat dr(d);
    return Pt{(l.c * m.b - Rat(l.b) * m.c) / dr, (Rat(l.a) * m.c - l.c * Rat(m.a)) / dr};
}

bool Span1::contains(const Pt& q) const {
    Pt r = q - p0;
    if (r.x * dir.y != r.y * dir.x) return false;
    Rat t = (dir.x != 0) ? r.x / dir.x : r.y / dir.y;
    if (t < 0) return false;
    return unbounded || t <= len;
}

} // namespace tropbt
