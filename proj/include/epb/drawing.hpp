#pragma once

#include <string>
#include <vector>

#include "epb/graph.hpp"

namespace epb {

/// Geometry of one drawn edge.
///
/// control_points always starts at the source position and ends at the target
/// position. Unbundled edges carry exactly their two endpoints; bundled edges
/// carry the positions of consecutive vertices of a path in the graph,
/// possibly refined by midpoint smoothing. polyline is the sampled curve that
/// gets rendered and measured.
struct EdgeCurve {
    std::vector<Vec2> control_points;
    std::vector<Vec2> polyline;
    bool bundled = false;
    /// Vertex ids of the bundle path (pre smoothing). Empty for unbundled
    /// edges and for drawings loaded from interchange files.
    std::vector<int> path_vertices;
};

/// A drawing in the interchange representation: the graph, its layout and a
/// curve per edge. This is the contract between bundling, metrics and render,
/// and the ingestion point for third-party bundler output.
struct Drawing {
    Graph graph;
    Layout layout;
    std::vector<EdgeCurve> curves;

    /// Bounding box over vertex positions and all polyline points.
    Bounds bounds() const;
};

/// The unbundled input drawing: every edge a straight segment.
Drawing straight_drawing(const Graph& g, const Layout& layout);

/// Interchange JSON:
///   { "directed": bool,
///     "vertices": [[x,y],...],
///     "edges": [{"s":int,"t":int,"polyline":[[x,y],...],
///                "bundled":bool,"control_points":[[x,y],...]},...] }
/// "bundled" and "control_points" are optional on input.
std::string drawing_to_json(const Drawing& d);
Drawing drawing_from_json(const std::string& text);

void save_drawing(const std::string& path, const Drawing& d);
Drawing load_drawing(const std::string& path);

} // namespace epb
