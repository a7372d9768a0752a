#include "epb/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "epb/errors.hpp"

namespace epb {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}

/// Acute angle between two undirected directions, in [0, pi/2].
double acute_between(double a, double b) {
    double d = std::fabs(a - b);
    d = std::fmod(d, std::numbers::pi);
    return std::min(d, std::numbers::pi - d);
}

/// Absolute directed angle difference folded to [0, pi].
double directed_difference(double a, double b) {
    double d = std::fabs(a - b);
    d = std::fmod(d, kTwoPi);
    return std::min(d, kTwoPi - d);
}

} // namespace

double ink_reduction(const RasterImage& bundled, const RasterImage& baseline, int gray_threshold) {
    if (bundled.width != baseline.width || bundled.height != baseline.height) {
        throw input_error("ink reduction needs images of equal dimensions");
    }
    const long base = baseline.occupied(gray_threshold);
    if (base == 0) throw input_error("baseline image has no occupied pixels");
    return static_cast<double>(bundled.occupied(gray_threshold)) / static_cast<double>(base);
}

DistortionResult distortion(const Drawing& drawing) {
    const int edge_count = drawing.graph.edge_count();
    if (edge_count == 0) throw input_error("distortion needs at least one edge");

    DistortionResult out;
    out.per_edge.reserve(static_cast<size_t>(edge_count));
    double sum = 0.0;
    for (int id = 0; id < edge_count; ++id) {
        const Edge& e = drawing.graph.edge(id);
        const double straight = distance(drawing.layout.at(e.source), drawing.layout.at(e.target));
        if (straight == 0.0) throw input_error("zero-length edge in distortion");
        const double arc = polyline_length(drawing.curves[static_cast<size_t>(id)].polyline);
        const double ratio = arc / straight;
        out.per_edge.push_back(ratio);
        sum += ratio;
    }
    out.mean = sum / edge_count;

    std::vector<double> sorted = out.per_edge;
    std::sort(sorted.begin(), sorted.end());
    const size_t n = sorted.size();
    out.median = (n % 2 == 1) ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    return out;
}

void AmbiguityConfig::validate() const {
    if (angle_threshold_deg <= 0.0 || angle_threshold_deg >= 90.0) {
        throw input_error("angle threshold must be in (0, 90) degrees");
    }
    if (window_cells < 1 || window_cells % 2 == 0) {
        throw input_error("window size must be a positive odd cell count");
    }
    if (grid_cell_px < 1) throw input_error("grid cell size must be at least one pixel");
    if (deltas.empty()) throw input_error("at least one hop threshold is required");
    for (const int d : deltas) {
        if (d < 1) throw input_error("hop thresholds must be >= 1");
    }
}

double CellEntry::mean_angle() const {
    return wrap_angle(std::atan2(sin_sum, cos_sum));
}

AmbiguityGrid build_ambiguity_grid(const Drawing& drawing, const AmbiguityConfig& config) {
    config.validate();
    const RasterTransform t =
        make_transform(drawing.bounds(), config.raster_width_px, kRasterMarginPx);
    const int cell = config.effective_cell_px();

    AmbiguityGrid grid;
    grid.cell_px = cell;
    grid.cells_x = (t.width + cell - 1) / cell;
    grid.cells_y = (t.height + cell - 1) / cell;
    grid.cells.resize(static_cast<size_t>(grid.cells_x) * grid.cells_y);

    auto record = [&](int cx, int cy, int edge, double angle) {
        if (cx < 0 || cx >= grid.cells_x || cy < 0 || cy >= grid.cells_y) return;
        auto& entries = grid.cells[static_cast<size_t>(cy) * grid.cells_x + cx];
        // Edges are walked in id order, their segments consecutively, so the
        // entry for this edge can only be the most recent one.
        if (entries.empty() || entries.back().edge != edge) {
            entries.push_back({edge, 0.0, 0.0, 0});
        }
        CellEntry& entry = entries.back();
        entry.sin_sum += std::sin(angle);
        entry.cos_sum += std::cos(angle);
        entry.segments += 1;
    };

    for (int id = 0; id < drawing.graph.edge_count(); ++id) {
        const auto& polyline = drawing.curves[static_cast<size_t>(id)].polyline;
        for (size_t i = 0; i + 1 < polyline.size(); ++i) {
            const Vec2 a = polyline[i];
            const Vec2 b = polyline[i + 1];
            if (a == b) continue;
            // Angles live in drawing space (y up), walked source to target.
            const double angle = wrap_angle(std::atan2(b.y - a.y, b.x - a.x));

            // Grid traversal in pixel space, visiting every cell the segment
            // passes through.
            const Vec2 pa = t.to_pixel(a);
            const Vec2 pb = t.to_pixel(b);
            int cx = static_cast<int>(std::floor(pa.x / cell));
            int cy = static_cast<int>(std::floor(pa.y / cell));
            const int ex = static_cast<int>(std::floor(pb.x / cell));
            const int ey = static_cast<int>(std::floor(pb.y / cell));
            const double dx = pb.x - pa.x;
            const double dy = pb.y - pa.y;
            const int step_x = dx > 0 ? 1 : -1;
            const int step_y = dy > 0 ? 1 : -1;
            // Parameter t in [0,1] of the next vertical / horizontal cell
            // boundary crossing.
            auto boundary_t = [](double start, double delta, int c, int step, int size) {
                if (delta == 0.0) return std::numeric_limits<double>::infinity();
                const double edge_coord = (step > 0 ? (c + 1) : c) * static_cast<double>(size);
                return (edge_coord - start) / delta;
            };
            double tx = boundary_t(pa.x, dx, cx, step_x, cell);
            double ty = boundary_t(pa.y, dy, cy, step_y, cell);
            const double tx_step = dx != 0.0 ? std::fabs(cell / dx) : 0.0;
            const double ty_step = dy != 0.0 ? std::fabs(cell / dy) : 0.0;

            record(cx, cy, id, angle);
            int guard = 4 * (grid.cells_x + grid.cells_y);
            while ((cx != ex || cy != ey) && guard-- > 0) {
                if (tx <= ty) {
                    cx += step_x;
                    tx += tx_step;
                } else {
                    cy += step_y;
                    ty += ty_step;
                }
                record(cx, cy, id, angle);
            }
        }
    }
    return grid;
}

std::vector<AmbiguousPair> detect_ambiguous_pairs(const AmbiguityGrid& grid,
                                                  const AmbiguityConfig& config) {
    config.validate();
    const double threshold_rad = config.angle_threshold_deg * std::numbers::pi / 180.0;
    const int w = std::min({config.window_cells, grid.cells_x, grid.cells_y});

    std::vector<AmbiguousPair> pairs;
    std::set<std::pair<int, int>> seen;
    bool warned = false;

    struct WindowEdge {
        int edge;
        double sin_sum;
        double cos_sum;
    };
    std::vector<WindowEdge> window_edges;

    for (int wy = 0; wy + w <= grid.cells_y; ++wy) {
        for (int wx = 0; wx + w <= grid.cells_x; ++wx) {
            window_edges.clear();
            for (int cy = wy; cy < wy + w; ++cy) {
                for (int cx = wx; cx < wx + w; ++cx) {
                    for (const CellEntry& entry : grid.cell(cx, cy)) {
                        const double a = entry.mean_angle();
                        window_edges.push_back({entry.edge, std::sin(a), std::cos(a)});
                    }
                }
            }
            if (window_edges.empty()) continue;
            std::sort(window_edges.begin(), window_edges.end(),
                      [](const WindowEdge& a, const WindowEdge& b) { return a.edge < b.edge; });
            // Aggregate cells of the same edge: circular mean of cell angles.
            size_t unique = 0;
            for (size_t i = 0; i < window_edges.size();) {
                WindowEdge merged = window_edges[i];
                while (++i < window_edges.size() && window_edges[i].edge == merged.edge) {
                    merged.sin_sum += window_edges[i].sin_sum;
                    merged.cos_sum += window_edges[i].cos_sum;
                }
                window_edges[unique++] = merged;
            }
            window_edges.resize(unique);
            if (static_cast<int>(window_edges.size()) > config.max_edges_per_window) {
                if (!warned) {
                    std::fprintf(stderr,
                                 "warning: %zu edges in one ambiguity window, capping at %d\n",
                                 window_edges.size(), config.max_edges_per_window);
                    warned = true;
                }
                window_edges.resize(static_cast<size_t>(config.max_edges_per_window));
            }

            for (size_t i = 0; i < window_edges.size(); ++i) {
                const double angle_i = wrap_angle(
                    std::atan2(window_edges[i].sin_sum, window_edges[i].cos_sum));
                for (size_t j = i + 1; j < window_edges.size(); ++j) {
                    const double angle_j = wrap_angle(
                        std::atan2(window_edges[j].sin_sum, window_edges[j].cos_sum));
                    if (acute_between(angle_i, angle_j) >= threshold_rad) continue;
                    const auto key = std::make_pair(window_edges[i].edge, window_edges[j].edge);
                    if (!seen.insert(key).second) continue;
                    AmbiguousPair pair;
                    pair.edge_a = key.first;
                    pair.edge_b = key.second;
                    pair.window_x = wx;
                    pair.window_y = wy;
                    pair.aligned = directed_difference(angle_i, angle_j) < std::numbers::pi / 2.0;
                    pairs.push_back(pair);
                }
            }
        }
    }
    return pairs;
}

AmbiguityResult ambiguity(const Drawing& drawing, const Graph& graph,
                          const AmbiguityConfig& config) {
    if (graph.edge_count() != drawing.graph.edge_count() ||
        graph.vertex_count() != drawing.graph.vertex_count()) {
        throw input_error("graph does not match the drawing");
    }

    AmbiguityResult out;
    const AmbiguityGrid grid = build_ambiguity_grid(drawing, config);
    out.pairs = detect_ambiguous_pairs(grid, config);
    out.cells_x = grid.cells_x;
    out.cells_y = grid.cells_y;

    const int edge_count = graph.edge_count();
    out.neighbors.of_source.resize(static_cast<size_t>(edge_count));
    out.neighbors.of_target.resize(static_cast<size_t>(edge_count));
    for (int id = 0; id < edge_count; ++id) {
        // The opposite endpoint is always perceived as connected, and that
        // perception is correct by the edge itself.
        out.neighbors.of_source[static_cast<size_t>(id)].insert(graph.edge(id).target);
        out.neighbors.of_target[static_cast<size_t>(id)].insert(graph.edge(id).source);
    }
    for (const AmbiguousPair& pair : out.pairs) {
        const Edge& ea = graph.edge(pair.edge_a);
        const Edge& eb = graph.edge(pair.edge_b);
        if (pair.aligned) {
            out.neighbors.of_source[static_cast<size_t>(pair.edge_a)].insert(eb.target);
            out.neighbors.of_target[static_cast<size_t>(pair.edge_a)].insert(eb.source);
            out.neighbors.of_source[static_cast<size_t>(pair.edge_b)].insert(ea.target);
            out.neighbors.of_target[static_cast<size_t>(pair.edge_b)].insert(ea.source);
        } else {
            out.neighbors.of_source[static_cast<size_t>(pair.edge_a)].insert(eb.source);
            out.neighbors.of_target[static_cast<size_t>(pair.edge_a)].insert(eb.target);
            out.neighbors.of_source[static_cast<size_t>(pair.edge_b)].insert(ea.source);
            out.neighbors.of_target[static_cast<size_t>(pair.edge_b)].insert(ea.target);
        }
    }

    // Hop distances from every endpoint that owns a set, capped at the
    // largest threshold.
    int delta_max = 1;
    for (const int d : config.deltas) delta_max = std::max(delta_max, d);
    std::unordered_map<int, std::vector<int>> hops_from;
    auto hops_for = [&](int v) -> const std::vector<int>& {
        auto it = hops_from.find(v);
        if (it == hops_from.end()) {
            it = hops_from.emplace(v, hop_distances_from(graph, v, delta_max)).first;
        }
        return it->second;
    };

    long denominator = 0;
    std::map<int, long> false_count;
    for (const int d : config.deltas) false_count[d] = 0;
    for (int id = 0; id < edge_count; ++id) {
        const Edge& e = graph.edge(id);
        const auto tally = [&](int endpoint, int opposite, const std::set<int>& members) {
            const std::vector<int>& hops = hops_for(endpoint);
            for (const int m : members) {
                ++denominator;
                if (m == opposite) continue; // always true
                const int h = hops[static_cast<size_t>(m)];
                for (const int d : config.deltas) {
                    if (h == kUnreachable || h > d) ++false_count[d];
                }
            }
        };
        tally(e.source, e.target, out.neighbors.of_source[static_cast<size_t>(id)]);
        tally(e.target, e.source, out.neighbors.of_target[static_cast<size_t>(id)]);
    }
    for (const int d : config.deltas) {
        out.amb[d] = denominator == 0
                         ? 0.0
                         : static_cast<double>(false_count[d]) / static_cast<double>(denominator);
    }

    // Heatmap counts: a cell is incident to an ambiguous pair when the
    // detection window centered on it contains both edges, i.e. the cell
    // lies within the window radius of both edges' cells.
    out.cell_counts.assign(static_cast<size_t>(grid.cells_x) * grid.cells_y, 0);
    std::unordered_map<int, std::vector<int>> cells_of_edge;
    for (int cy = 0; cy < grid.cells_y; ++cy) {
        for (int cx = 0; cx < grid.cells_x; ++cx) {
            for (const CellEntry& entry : grid.cell(cx, cy)) {
                cells_of_edge[entry.edge].push_back(cy * grid.cells_x + cx);
            }
        }
    }
    const int radius = config.window_cells / 2;
    std::unordered_map<int, std::vector<int>> dilated;
    std::vector<char> stamp(out.cell_counts.size(), 0);
    auto dilate = [&](int edge) -> const std::vector<int>& {
        auto it = dilated.find(edge);
        if (it != dilated.end()) return it->second;
        std::vector<int> cells;
        for (const int index : cells_of_edge[edge]) {
            const int cx = index % grid.cells_x;
            const int cy = index / grid.cells_x;
            for (int dy = -radius; dy <= radius; ++dy) {
                for (int dx = -radius; dx <= radius; ++dx) {
                    const int nx = cx + dx;
                    const int ny = cy + dy;
                    if (nx < 0 || nx >= grid.cells_x || ny < 0 || ny >= grid.cells_y) {
                        continue;
                    }
                    const int n = ny * grid.cells_x + nx;
                    if (!stamp[static_cast<size_t>(n)]) {
                        stamp[static_cast<size_t>(n)] = 1;
                        cells.push_back(n);
                    }
                }
            }
        }
        for (const int n : cells) stamp[static_cast<size_t>(n)] = 0;
        std::sort(cells.begin(), cells.end());
        return dilated.emplace(edge, std::move(cells)).first->second;
    };
    for (const AmbiguousPair& pair : out.pairs) {
        const auto& ca = dilate(pair.edge_a);
        const auto& cb = dilate(pair.edge_b);
        size_t i = 0;
        size_t j = 0;
        while (i < ca.size() && j < cb.size()) {
            if (ca[i] < cb[j]) {
                ++i;
            } else if (cb[j] < ca[i]) {
                ++j;
            } else {
                ++out.cell_counts[static_cast<size_t>(ca[i])];
                ++i;
                ++j;
            }
        }
    }
    return out;
}

MetricsReport evaluate(const Drawing& drawing, const Drawing& baseline, const Graph& graph,
                       const MetricsConfig& config) {
    if (drawing.graph.edge_count() != baseline.graph.edge_count() ||
        drawing.graph.vertex_count() != baseline.graph.vertex_count()) {
        throw input_error("baseline does not match the drawing");
    }

    MetricsReport report;

    // One transform for both images so occupied pixel counts are comparable.
    Bounds shared = drawing.bounds();
    const Bounds base_bounds = baseline.bounds();
    if (!base_bounds.empty) {
        shared.expand(base_bounds.lo);
        shared.expand(base_bounds.hi);
    }
    const RasterTransform t = make_transform(shared, config.raster_width_px, kRasterMarginPx);

    const RasterImage with_disks = rasterize_with(drawing, t, config.line_width_px,
                                                  config.vertex_diameter_px, true);
    const RasterImage base_with = rasterize_with(baseline, t, config.line_width_px,
                                                 config.vertex_diameter_px, true);
    report.ink_ratio = ink_reduction(with_disks, base_with, config.gray_threshold);

    const RasterImage no_disks =
        rasterize_with(drawing, t, config.line_width_px, config.vertex_diameter_px, false);
    const RasterImage base_no =
        rasterize_with(baseline, t, config.line_width_px, config.vertex_diameter_px, false);
    report.ink_ratio_no_vertices = ink_reduction(no_disks, base_no, config.gray_threshold);

    const DistortionResult dist = distortion(drawing);
    report.distortion_mean = dist.mean;
    report.distortion_median = dist.median;
    report.distortion_per_edge = dist.per_edge;

    AmbiguityConfig amb_config = config.ambiguity;
    amb_config.raster_width_px = config.raster_width_px;
    const AmbiguityResult amb = ambiguity(drawing, graph, amb_config);
    report.amb = amb.amb;
    report.ambiguity_cell_counts = amb.cell_counts;
    report.cells_x = amb.cells_x;
    report.cells_y = amb.cells_y;
    return report;
}

std::string metrics_to_json(const MetricsReport& report) {
    nlohmann::json doc;
    doc["ink_ratio"] = report.ink_ratio;
    doc["ink_ratio_no_vertices"] = report.ink_ratio_no_vertices;
    doc["distortion"]["mean"] = report.distortion_mean;
    doc["distortion"]["median"] = report.distortion_median;
    doc["distortion"]["per_edge"] = report.distortion_per_edge;
    nlohmann::json amb = nlohmann::json::object();
    for (const auto& [delta, value] : report.amb) {
        amb[std::to_string(delta)] = value;
    }
    doc["amb"] = std::move(amb);
    doc["ambiguity_cells"]["width"] = report.cells_x;
    doc["ambiguity_cells"]["height"] = report.cells_y;
    doc["ambiguity_cells"]["counts"] = report.ambiguity_cell_counts;
    return doc.dump(1);
}

} // namespace epb
