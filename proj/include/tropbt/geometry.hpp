#ifndef TROPBT_GEOMETRY_HPP
#define TROPBT_GEOMETRY_HPP

#include "tropbt/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tropbt {

/// Primitive integer direction / lattice vector.
struct IVec {
    long x = 0;
    long y = 0;

    friend bool operator==(const IVec&, const IVec&) = default;
    friend auto operator<=>(const IVec&, const IVec&) = default;
    IVec operator-() const { return {-x, -y}; }
    IVec operator+(const IVec& o) const { return {x + o.x, y + o.y}; }
    IVec operator-(const IVec& o) const { return {x - o.x, y - o.y}; }
};

long det(const IVec& a, const IVec& b);
long gcdl(long a, long b);
/// Divide out the gcd; (0,0) stays (0,0).
IVec primitive(const IVec& v);
/// Rotate by 90 degrees counterclockwise: (x,y) -> (-y,x).
inline IVec rot90(const IVec& v) { return {-v.y, v.x}; }
/// Canonical sign of an undirected direction: first nonzero coordinate > 0.
IVec undirected(const IVec& v);
std::string to_string(const IVec& v);

/// Exact point in the plane.
struct Pt {
    Rat x, y;

    Pt() : x(0), y(0) {}
    Pt(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}

    friend bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }
    Pt operator+(const Pt& o) const { return {x + o.x, y + o.y}; }
    Pt operator-(const Pt& o) const { return {x - o.x, y - o.y}; }
};

inline Pt operator*(const Rat& s, const IVec& v) { return {s * v.x, s * v.y}; }
inline Pt operator+(const Pt& p, const IVec& v) { return {p.x + v.x, p.y + v.y}; }
Rat det(const Pt& a, const Pt& b);
Rat dot(const Pt& a, const IVec& b);
std::string to_string(const Pt& p);
/// Strict ordering for map keys, lexicographic on (x, y).
bool lex_less(const Pt& a, const Pt& b);

/// Value of the form a + b*eps for an infinitesimal eps > 0. Comparisons are
/// lexicographic, i.e. they hold for every sufficiently small eps > 0.
struct Eps {
    Rat a, b;

    Eps() : a(0), b(0) {}
    Eps(Rat a0, Rat b0) : a(std::move(a0)), b(std::move(b0)) {}
    explicit Eps(const Rat& a0) : a(a0), b(0) {}

    Eps operator+(const Eps& o) const { return {a + o.a, b + o.b}; }
    Eps operator-(const Eps& o) const { return {a - o.a, b - o.b}; }
    Eps operator*(const Rat& s) const { return {a * s, b * s}; }
    Eps operator/(const Rat& s) const { return {a / s, b / s}; }

    int cmp(const Eps& o) const {
        if (a != o.a) return a < o.a ? -1 : 1;
        if (b != o.b) return b < o.b ? -1 : 1;
        return 0;
    }
    bool operator<(const Eps& o) const { return cmp(o) < 0; }
    bool operator<=(const Eps& o) const { return cmp(o) <= 0; }
    bool operator==(const Eps& o) const { return cmp(o) == 0; }
    bool is_zero() const { return a == 0 && b == 0; }
};

/// Oriented line a*x + b*y = c with primitive integer normal (a, b),
/// normalized so the normal's leading nonzero coordinate is positive.
struct Line {
    long a = 0, b = 0;
    Rat c;

    static Line through(const Pt& p, const IVec& dir);
    IVec direction() const { return {b, -a}; }
    Rat eval(const Pt& p) const { return Rat(a) * p.x + Rat(b) * p.y - c; }
    bool contains(const Pt& p) const { return eval(p) == 0; }

    friend bool operator==(const Line&, const Line&) = default;
    bool operator<(const Line& o) const;
};

std::optional<Pt> intersect(const Line& l, const Line& m);

/// One-dimensional piece of a polyhedral set: p0 + t*dir for t in [0, len],
/// or t in [0, inf) when unbounded. `dir` is primitive, so `len` is the
/// lattice length.
struct Span1 {
    Pt p0;
    IVec dir;
    Rat len;             // ignored when unbounded
    bool unbounded = false;

    Pt at(const Rat& t) const { return p0 + t * dir; }
    Pt endpoint() const { return at(len); }
    bool contains(const Pt& q) const;
};

} // namespace tropbt

#endif
