#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "epb/drawing.hpp"
#include "epb/raster.hpp"

namespace epb {

struct DistortionResult {
    double mean = 1.0;
    double median = 1.0;
    std::vector<double> per_edge;
};

/// Ratio of binarized occupied pixels, bundled over baseline. A pixel is
/// occupied when its gray value is >= gray_threshold (ink is high). Throws
/// input_error when the baseline is blank or dimensions differ.
double ink_reduction(const RasterImage& bundled, const RasterImage& baseline, int gray_threshold);

/// Per-edge distortion: polyline arc length over straight endpoint distance.
/// A straight edge scores exactly 1. Median of an even count is the average
/// of the two middle values.
DistortionResult distortion(const Drawing& drawing);

struct AmbiguityConfig {
    double angle_threshold_deg = 7.5; // crossing angle below this is ambiguous
    int grid_cell_px = 8;             // cell size at the raster scale
    double proximity_epsilon_px = 0;  // 0 means one grid cell
    int window_cells = 3;             // sliding window side, odd
    std::vector<int> deltas = {1, 2, 3, 4, 5};
    int raster_width_px = 1600;
    int max_edges_per_window = 512; // dense-window cap, warns when hit

    int effective_cell_px() const {
        return proximity_epsilon_px > 0 ? static_cast<int>(proximity_epsilon_px) : grid_cell_px;
    }
    void validate() const;
};

/// Per-cell record of one edge passing through: directed angles of its
/// segments in that cell, aggregated as a circular mean.
struct CellEntry {
    int edge = -1;
    double sin_sum = 0.0;
    double cos_sum = 0.0;
    int segments = 0;

    double mean_angle() const; // in [0, 2*pi)
};

struct AmbiguityGrid {
    int cells_x = 0;
    int cells_y = 0;
    int cell_px = 0;
    std::vector<std::vector<CellEntry>> cells; // row major, entries by edge id

    const std::vector<CellEntry>& cell(int cx, int cy) const {
        return cells[static_cast<size_t>(cy) * cells_x + cx];
    }
};

/// Walk every polyline source to target and record, per grid cell, the edges
/// passing through with their mean directed angle. The grid covers the same
/// pixel space as the rasterizer at config.raster_width_px.
AmbiguityGrid build_ambiguity_grid(const Drawing& drawing, const AmbiguityConfig& config);

struct AmbiguousPair {
    int edge_a = 0; // edge_a < edge_b
    int edge_b = 0;
    int window_x = 0; // window position of first detection
    int window_y = 0;
    bool aligned = true; // directed angle difference < 90 degrees
};

/// Slide a window_cells x window_cells window over the grid (stride 1). Each
/// edge present in a window gets one direction (circular mean over its cell
/// angles); every pair of edges closer than the angle threshold in acute
/// angle is ambiguous. Pairs are reported once, at their first detection in
/// row-major window order.
std::vector<AmbiguousPair> detect_ambiguous_pairs(const AmbiguityGrid& grid,
                                                  const AmbiguityConfig& config);

/// Reachable-neighbor sets per (edge, endpoint). Index 0 is the source side,
/// 1 the target side.
struct NeighborSets {
    std::vector<std::set<int>> of_source; // per edge: members of N(source, e)
    std::vector<std::set<int>> of_target;
};

struct AmbiguityResult {
    std::map<int, double> amb; // delta -> value in [0, 1]
    NeighborSets neighbors;
    std::vector<AmbiguousPair> pairs;
    std::vector<int> cell_counts; // ambiguous pair incidences, grid row major
    int cells_x = 0;
    int cells_y = 0;
};

/// The ambiguity metric. Neighbor sets are built from ambiguous pairs: for
/// an aligned pair e=(s,t), e'=(u,v), v joins N(s,e) and u joins N(t,e)
/// (and t joins N(u,e'), s joins N(v,e')); anti-aligned swaps the roles.
/// The opposite endpoint of an edge is always a member of each set and is
/// always true. Other members are true when within delta hops of the set's
/// endpoint (unreachable counts false). amb = false members / all members,
/// summed over all (edge, endpoint) pairs.
AmbiguityResult ambiguity(const Drawing& drawing, const Graph& graph,
                          const AmbiguityConfig& config);

struct MetricsReport {
    double ink_ratio = 1.0;
    double ink_ratio_no_vertices = 1.0;
    double distortion_mean = 1.0;
    double distortion_median = 1.0;
    std::vector<double> distortion_per_edge;
    std::map<int, double> amb;
    std::vector<int> ambiguity_cell_counts;
    int cells_x = 0;
    int cells_y = 0;
};

struct MetricsConfig {
    int raster_width_px = 1600;
    double line_width_px = 1.0;
    double vertex_diameter_px = 4.0;
    int gray_threshold = 1;
    AmbiguityConfig ambiguity;
};

/// Run all three metrics with a shared rasterization transform.
MetricsReport evaluate(const Drawing& drawing, const Drawing& baseline, const Graph& graph,
                       const MetricsConfig& config);

std::string metrics_to_json(const MetricsReport& report);

} // namespace epb
