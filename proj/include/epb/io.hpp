#pragma once

#include <string>
#include <vector>

#include "epb/drawing.hpp"
#include "epb/graph.hpp"

namespace epb {

enum class GraphFormat { edge_list, trail_set, auto_detect };

enum class Directedness { auto_detect, directed, undirected };

/// What the loader had to clean up.
struct LoadReport {
    int dropped_self_loops = 0;
    int dropped_duplicates = 0;
    int merged_trail_endpoints = 0; // trail sets only
};

struct LoadedGraph {
    Graph graph;
    Layout layout;
    std::vector<std::string> labels; // external vertex names, reporting only
    LoadReport report;
};

/// Load a graph and layout from an edge-list or trail-set file.
///
/// Edge-list format: a header line `directed` or `undirected`, then
/// `v <label> <x> <y>` lines, then `e <source-label> <target-label>` lines.
/// Tokens are whitespace separated; `#` starts a comment. Vertex ids are
/// assigned densely in file order.
///
/// Trail-set format: one trail per line, `x0 y0 x1 y1 ... xn yn`. Endpoints
/// closer than 1e-6 of the bounding-box diagonal merge into one vertex; each
/// trail becomes the edge (first point, last point). Trail sets default to
/// directed unless overridden.
///
/// Self loops are dropped, duplicate edges collapse (by unordered endpoint
/// pair when undirected), and both counts are reported.
LoadedGraph load_graph(const std::string& path, GraphFormat format = GraphFormat::auto_detect,
                       Directedness directedness = Directedness::auto_detect);

/// Load a trail set as a pre-bundled drawing for metric evaluation: vertices
/// are the quantized trail endpoints, each edge keeps its full trail as the
/// render polyline.
Drawing load_trails_as_drawing(const std::string& path,
                               Directedness directedness = Directedness::auto_detect,
                               LoadReport* report = nullptr);

/// Write a graph and layout in the edge-list format.
void save_edge_list(const std::string& path, const Graph& g, const Layout& layout);

GraphFormat detect_format(const std::string& path);

} // namespace epb
