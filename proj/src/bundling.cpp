#include "epb/bundling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <tuple>

#include "epb/errors.hpp"

namespace epb {

void BundlingParams::validate() const {
    if (!(max_distortion_k > 1.0)) {
        throw input_error("max distortion k must be > 1 (k <= 1 rejects every detour)");
    }
    if (edge_weight_exponent_d < 0.0) {
        throw input_error("edge weight exponent d must be >= 0");
    }
    if (smoothing < 1) throw input_error("smoothing must be >= 1");
    if (curve_samples_per_segment < 2) throw input_error("curve samples must be >= 2");
}

namespace {

/// One partial path in the label-setting search.
struct Label {
    double weight;
    double geom;
    int vertex;
    int parent; // label index, -1 at the source
    int via_edge;
};

struct QueueEntry {
    double weight;
    double geom;
    int vertex;
    int label;

    // Smallest weight first, then smallest geometric length, then smallest
    // vertex id, then insertion order. Total and deterministic.
    bool operator>(const QueueEntry& o) const {
        return std::tie(weight, geom, vertex, label) > std::tie(o.weight, o.geom, o.vertex, o.label);
    }
};

PathResult reconstruct(const std::vector<Label>& labels, int last) {
    PathResult out;
    out.weighted_cost = labels[static_cast<size_t>(last)].weight;
    out.geometric_length = labels[static_cast<size_t>(last)].geom;
    for (int i = last; i != -1; i = labels[static_cast<size_t>(i)].parent) {
        out.vertices.push_back(labels[static_cast<size_t>(i)].vertex);
    }
    std::reverse(out.vertices.begin(), out.vertices.end());
    return out;
}

} // namespace

std::optional<PathResult> constrained_dijkstra(const Graph& g, const Layout& layout,
                                               const std::vector<double>& edge_weight,
                                               const std::vector<char>& skip_edge, int s, int t,
                                               double geometric_budget) {
    if (s == t) throw internal_error("constrained search needs distinct endpoints");

    // Labels settle in (weight, geom) order, so the settled geometric lengths
    // at a vertex strictly decrease over time: a new label is useful exactly
    // when its length beats the best settled one. Lengths are non-negative
    // and only grow along any extension, so a label whose length plus the
    // straight-line distance to t already exceeds the budget can be dropped
    // without losing any feasible path.
    std::vector<double> best_geom(static_cast<size_t>(g.vertex_count()),
                                  std::numeric_limits<double>::infinity());
    std::vector<Label> labels;
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> queue;

    const Vec2 goal = layout.at(t);
    auto lower_bound_to_goal = [&](int v) { return distance(layout.at(v), goal); };

    if (lower_bound_to_goal(s) > geometric_budget) return std::nullopt;
    labels.push_back({0.0, 0.0, s, -1, -1});
    queue.push({0.0, 0.0, s, 0});

    while (!queue.empty()) {
        const QueueEntry top = queue.top();
        queue.pop();
        if (top.geom >= best_geom[static_cast<size_t>(top.vertex)]) continue; // dominated
        best_geom[static_cast<size_t>(top.vertex)] = top.geom;
        if (top.vertex == t) return reconstruct(labels, top.label);

        for (const auto& [next, edge_id] : g.out_neighbors(top.vertex)) {
            if (skip_edge[static_cast<size_t>(edge_id)]) continue;
            const double step =
                distance(layout.at(top.vertex), layout.at(next));
            const double geom = top.geom + step;
            if (geom + lower_bound_to_goal(next) > geometric_budget) continue;
            if (geom >= best_geom[static_cast<size_t>(next)]) continue;
            const double weight = top.weight + edge_weight[static_cast<size_t>(edge_id)];
            const int label = static_cast<int>(labels.size());
            labels.push_back({weight, geom, next, top.label, edge_id});
            queue.push({weight, geom, next, label});
        }
    }
    return std::nullopt;
}

std::optional<PathResult> weight_budget_dijkstra(const Graph& g, const Layout& layout,
                                                 const std::vector<double>& edge_weight,
                                                 const std::vector<char>& skip_edge, int s, int t,
                                                 double weight_budget) {
    if (s == t) throw internal_error("constrained search needs distinct endpoints");

    // Objective and budget coincide here, so one label per vertex suffices.
    std::vector<char> settled(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<Label> labels;
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> queue;
    labels.push_back({0.0, 0.0, s, -1, -1});
    queue.push({0.0, 0.0, s, 0});

    while (!queue.empty()) {
        const QueueEntry top = queue.top();
        queue.pop();
        if (settled[static_cast<size_t>(top.vertex)]) continue;
        settled[static_cast<size_t>(top.vertex)] = 1;
        if (top.vertex == t) return reconstruct(labels, top.label);

        for (const auto& [next, edge_id] : g.out_neighbors(top.vertex)) {
            if (skip_edge[static_cast<size_t>(edge_id)]) continue;
            if (settled[static_cast<size_t>(next)]) continue;
            const double weight = top.weight + edge_weight[static_cast<size_t>(edge_id)];
            if (weight > weight_budget) continue;
            const double geom = top.geom + distance(layout.at(top.vertex), layout.at(next));
            const int label = static_cast<int>(labels.size());
            labels.push_back({weight, geom, next, top.label, edge_id});
            queue.push({weight, geom, next, label});
        }
    }
    return std::nullopt;
}

std::vector<Vec2> smooth_control_points(const std::vector<Vec2>& points, int smoothing) {
    if (smoothing < 1) throw input_error("smoothing must be >= 1");
    if (points.size() < 2) throw internal_error("smoothing needs at least two points");
    std::vector<Vec2> current = points;
    for (int round = 1; round < smoothing; ++round) {
        std::vector<Vec2> refined;
        refined.reserve(current.size() * 2 - 1);
        for (size_t i = 0; i + 1 < current.size(); ++i) {
            refined.push_back(current[i]);
            refined.push_back(midpoint(current[i], current[i + 1]));
        }
        refined.push_back(current.back());
        current = std::move(refined);
    }
    return current;
}

std::vector<Vec2> curve_polyline(const std::vector<Vec2>& control_points,
                                 int samples_per_segment) {
    if (control_points.size() < 2) throw internal_error("curve needs at least two points");
    if (samples_per_segment < 2) throw input_error("curve samples must be >= 2");
    if (control_points.size() == 2) return control_points;

    // Clamped uniform cubic B-spline: triplicated end points make the curve
    // interpolate them; everything in between stays in the control hull.
    std::vector<Vec2> q;
    q.reserve(control_points.size() + 4);
    q.push_back(control_points.front());
    q.push_back(control_points.front());
    for (const Vec2& p : control_points) q.push_back(p);
    q.push_back(control_points.back());
    q.push_back(control_points.back());

    const size_t spans = q.size() - 3;
    std::vector<Vec2> out;
    out.reserve(spans * static_cast<size_t>(samples_per_segment) + 1);
    for (size_t i = 1; i <= spans; ++i) {
        const Vec2 p0 = q[i - 1];
        const Vec2 p1 = q[i];
        const Vec2 p2 = q[i + 1];
        const Vec2 p3 = q[i + 2];
        const int last = (i == spans) ? samples_per_segment : samples_per_segment - 1;
        for (int j = 0; j <= last; ++j) {
            const double t = static_cast<double>(j) / samples_per_segment;
            const double t2 = t * t;
            const double t3 = t2 * t;
            const double b0 = (1.0 - t) * (1.0 - t) * (1.0 - t) / 6.0;
            const double b1 = (3.0 * t3 - 6.0 * t2 + 4.0) / 6.0;
            const double b2 = (-3.0 * t3 + 3.0 * t2 + 3.0 * t + 1.0) / 6.0;
            const double b3 = t3 / 6.0;
            out.push_back(b0 * p0 + b1 * p1 + b2 * p2 + b3 * p3);
        }
    }
    out.front() = control_points.front();
    out.back() = control_points.back();
    return out;
}

Drawing edge_path_bundle(const Graph& g, const Layout& layout, const BundlingParams& params) {
    params.validate();
    if (layout.size() != g.vertex_count()) {
        throw input_error("layout does not cover every vertex");
    }

    const int edge_count = g.edge_count();
    std::vector<double> weight(static_cast<size_t>(edge_count));
    for (int id = 0; id < edge_count; ++id) {
        weight[static_cast<size_t>(id)] =
            std::pow(euclidean_length(layout, g.edge(id)), params.edge_weight_exponent_d);
    }

    std::vector<int> order(static_cast<size_t>(edge_count));
    for (int id = 0; id < edge_count; ++id) order[static_cast<size_t>(id)] = id;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double wa = weight[static_cast<size_t>(a)];
        const double wb = weight[static_cast<size_t>(b)];
        if (wa != wb) return wa > wb;
        return a < b; // ties by ascending id, keeps runs reproducible
    });

    std::vector<char> lock(static_cast<size_t>(edge_count), 0);
    std::vector<char> skip(static_cast<size_t>(edge_count), 0);
    std::vector<std::vector<int>> paths(static_cast<size_t>(edge_count));

    for (const int id : order) {
        if (lock[static_cast<size_t>(id)]) continue;
        skip[static_cast<size_t>(id)] = 1; // the edge never routes through itself
        const Edge& e = g.edge(id);
        const double straight = euclidean_length(layout, e);

        std::optional<PathResult> path;
        bool accepted = false;
        if (params.detour_test == DetourTest::geometry) {
            const double budget = params.max_distortion_k * straight;
            path = constrained_dijkstra(g, layout, weight, skip, e.source, e.target, budget);
            accepted = path.has_value() && path->geometric_length <= budget;
        } else {
            const double budget = params.max_distortion_k * weight[static_cast<size_t>(id)];
            path = weight_budget_dijkstra(g, layout, weight, skip, e.source, e.target, budget);
            accepted = path.has_value() && path->weighted_cost <= budget;
        }

        if (!accepted) {
            skip[static_cast<size_t>(id)] = 0; // rejected, back into future searches
            continue;
        }
        for (size_t i = 0; i + 1 < path->vertices.size(); ++i) {
            const auto locked_edge = g.find_edge(path->vertices[i], path->vertices[i + 1]);
            if (!locked_edge) throw internal_error("bundle path step is not an edge");
            lock[static_cast<size_t>(*locked_edge)] = 1;
        }
        paths[static_cast<size_t>(id)] = std::move(path->vertices);
        // skip stays set: the edge is drawn as a curve and never carries paths
    }

    Drawing out;
    out.graph = g;
    out.layout = layout;
    out.curves.resize(static_cast<size_t>(edge_count));
    for (int id = 0; id < edge_count; ++id) {
        EdgeCurve& curve = out.curves[static_cast<size_t>(id)];
        const Edge& e = g.edge(id);
        if (paths[static_cast<size_t>(id)].empty()) {
            curve.control_points = {layout.at(e.source), layout.at(e.target)};
            curve.polyline = curve.control_points;
            continue;
        }
        curve.bundled = true;
        curve.path_vertices = std::move(paths[static_cast<size_t>(id)]);
        std::vector<Vec2> raw;
        raw.reserve(curve.path_vertices.size());
        for (const int v : curve.path_vertices) raw.push_back(layout.at(v));
        curve.control_points = smooth_control_points(raw, params.smoothing);
        curve.polyline = curve_polyline(curve.control_points, params.curve_samples_per_segment);
    }
    return out;
}

BundleStats bundle_stats(const Drawing& drawing) {
    BundleStats stats;
    std::vector<char> locked(static_cast<size_t>(drawing.graph.edge_count()), 0);
    for (const EdgeCurve& curve : drawing.curves) {
        if (!curve.bundled) continue;
        ++stats.bundled_count;
        stats.max_path_hops =
            std::max(stats.max_path_hops, static_cast<int>(curve.path_vertices.size()) - 1);
        for (size_t i = 0; i + 1 < curve.path_vertices.size(); ++i) {
            const auto id =
                drawing.graph.find_edge(curve.path_vertices[i], curve.path_vertices[i + 1]);
            if (id) locked[static_cast<size_t>(*id)] = 1;
        }
    }
    for (int id = 0; id < drawing.graph.edge_count(); ++id) {
        if (locked[static_cast<size_t>(id)] && !drawing.curves[static_cast<size_t>(id)].bundled) {
            ++stats.locked_count;
        }
    }
    stats.unbundled_count = drawing.graph.edge_count() - stats.bundled_count - stats.locked_count;
    return stats;
}

} // namespace epb
