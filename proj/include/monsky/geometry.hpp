#pragma once

#include <string>

#include "rational.hpp"

namespace monsky {

template <class T>
struct Pt {
    T x, y;

    friend bool operator==(const Pt &a, const Pt &b) { return a.x == b.x && a.y == b.y; }
    friend Pt operator+(const Pt &a, const Pt &b) { return {T(a.x + b.x), T(a.y + b.y)}; }
    friend Pt operator-(const Pt &a, const Pt &b) { return {T(a.x - b.x), T(a.y - b.y)}; }
};

using Point = Pt<BigRational>;

/// Twice the signed area: det [[1,1,1],[x1,x2,x3],[y1,y2,y3]].
template <class T>
T doubled_area(const Pt<T> &a, const Pt<T> &b, const Pt<T> &c) {
    return T((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
}

/// Signed area, positive for counterclockwise triangles.
template <class T>
T triangle_area(const Pt<T> &a, const Pt<T> &b, const Pt<T> &c) {
    return T(doubled_area(a, b, c) * BigRational(1, 2));
}

inline int orientation(const Point &a, const Point &b, const Point &c) { return sgn(doubled_area(a, b, c)); }

inline bool collinear(const Point &a, const Point &b, const Point &c) { return orientation(a, b, c) == 0; }

inline std::string to_string(const Point &p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

} // namespace monsky
