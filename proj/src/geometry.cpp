#include "epb/geometry.hpp"

namespace epb {

double polyline_length(std::span<const Vec2> points) {
    double total = 0.0;
    for (size_t i = 1; i < points.size(); ++i) {
        total += distance(points[i - 1], points[i]);
    }
    return total;
}

double distance_point_segment(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = ab.x * ab.x + ab.y * ab.y;
    if (len2 == 0.0) return distance(p, a);
    double t = ((p.x - a.x) * ab.x + (p.y - a.y) * ab.y) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, {a.x + t * ab.x, a.y + t * ab.y});
}

} // namespace epb
