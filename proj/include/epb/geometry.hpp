#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace epb {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

inline Vec2 midpoint(Vec2 a, Vec2 b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }

/// Total length of the polyline through the given points (0 for fewer than 2).
double polyline_length(std::span<const Vec2> points);

/// Axis-aligned bounding box.
struct Bounds {
    Vec2 lo{0.0, 0.0};
    Vec2 hi{0.0, 0.0};
    bool empty = true;

    void expand(Vec2 p) {
        if (empty) {
            lo = hi = p;
            empty = false;
            return;
        }
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }

    double width() const { return empty ? 0.0 : hi.x - lo.x; }
    double height() const { return empty ? 0.0 : hi.y - lo.y; }
    double diagonal() const { return empty ? 0.0 : distance(lo, hi); }
};

/// Distance from point p to the segment [a, b].
double distance_point_segment(Vec2 p, Vec2 a, Vec2 b);

} // namespace epb
