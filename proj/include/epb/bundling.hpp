#pragma once

#include <optional>
#include <vector>

#include "epb/drawing.hpp"
#include "epb/graph.hpp"

namespace epb {

/// Which quantity the detour threshold k is tested against.
enum class DetourTest {
    geometry, // path arc length vs k * straight-line length (default)
    weight,   // path weighted cost vs k * edge weight
};

struct BundlingParams {
    double max_distortion_k = 2.0;     // detour budget factor, must be > 1
    double edge_weight_exponent_d = 2; // edge weight = length^d
    int smoothing = 2;                 // midpoint insertion rounds + 1
    int curve_samples_per_segment = 8; // spline samples per knot span
    DetourTest detour_test = DetourTest::geometry;

    void validate() const; // throws input_error
};

/// A path found by the constrained search.
struct PathResult {
    std::vector<int> vertices;  // s first, t last
    double weighted_cost = 0.0; // sum of edge weights along the path
    double geometric_length = 0.0;
};

/// Minimum-weight s-t path over the non-skipped edges, subject to the
/// geometric budget: only paths whose accumulated Euclidean length stays
/// within `geometric_budget` are considered. Returns nullopt when no such
/// path exists.
///
/// The search settles (weight, length) labels with a priority queue, smallest
/// weight first, then smallest length, then smallest vertex id. A label is
/// discarded once its length, plus the straight-line distance still to cover,
/// exceeds the budget: lengths are non-negative and only grow along any
/// extension, so no feasible path is lost. This is the early termination that
/// keeps searches local instead of graph-wide.
std::optional<PathResult> constrained_dijkstra(const Graph& g, const Layout& layout,
                                               const std::vector<double>& edge_weight,
                                               const std::vector<char>& skip_edge, int s, int t,
                                               double geometric_budget);

/// Same search with the budget applied to the weighted cost instead of the
/// geometric length (the DetourTest::weight reading). Objective and
/// constraint coincide, so this is a plain Dijkstra with an early stop.
std::optional<PathResult> weight_budget_dijkstra(const Graph& g, const Layout& layout,
                                                 const std::vector<double>& edge_weight,
                                                 const std::vector<char>& skip_edge, int s, int t,
                                                 double weight_budget);

/// Midpoint smoothing of a control polyline. A factor of 1 returns the input
/// unchanged; each further step inserts the midpoint of every consecutive
/// pair, applied recursively: n points become (n-1)*2^(smoothing-1)+1.
std::vector<Vec2> smooth_control_points(const std::vector<Vec2>& points, int smoothing);

/// Sample a smooth curve through the control points. Two points pass through
/// unchanged (a straight edge). Otherwise the curve is a clamped uniform
/// cubic B-spline (end points triplicated), evaluated at samples_per_segment
/// points per knot span; it starts and ends exactly on the end control points
/// and stays inside their convex hull.
std::vector<Vec2> curve_polyline(const std::vector<Vec2>& control_points, int samples_per_segment);

/// Edge-Path bundling. Edges are processed in decreasing weight order (ties
/// by ascending edge id). Each unlocked edge is excluded from its own search
/// and bundled onto the minimum-weight path between its endpoints when one
/// exists within the detour budget; the path's edges become locked (they act
/// as control geometry and are never bundled themselves, but stay usable in
/// later searches), and the bundled edge stays excluded from all future
/// searches. Rejected edges are reintroduced. Any graph yields a drawing,
/// possibly with zero bundles.
Drawing edge_path_bundle(const Graph& g, const Layout& layout, const BundlingParams& params);

struct BundleStats {
    int bundled_count = 0;
    int locked_count = 0;
    int unbundled_count = 0; // neither bundled nor locked
    int max_path_hops = 0;
};

/// Counts recomputed from a drawing produced by edge_path_bundle. Locked
/// edges are the ones lying on some bundle path.
BundleStats bundle_stats(const Drawing& drawing);

} // namespace epb
