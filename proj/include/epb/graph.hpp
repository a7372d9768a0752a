#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "epb/geometry.hpp"

namespace epb {

/// An edge of the abstract graph. Its id is its index in Graph::edges().
struct Edge {
    int source = -1;
    int target = -1;
};

/// Immutable graph topology: dense vertex ids, an ordered edge list and a
/// directedness flag. Edge ids are stable list indices. Self loops are not
/// representable (the loaders drop them before construction).
class Graph {
  public:
    Graph() = default;
    Graph(int vertex_count, std::vector<Edge> edges, bool directed);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool directed() const { return directed_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[static_cast<size_t>(id)]; }

    /// Neighbors reachable from v by traversing one edge, respecting edge
    /// direction when the graph is directed. Pairs of (neighbor, edge id).
    const std::vector<std::pair<int, int>>& out_neighbors(int v) const {
        return out_adj_[static_cast<size_t>(v)];
    }

    /// Neighbors of v with direction ignored.
    const std::vector<std::pair<int, int>>& undirected_neighbors(int v) const {
        return undir_adj_[static_cast<size_t>(v)];
    }

    /// Edge id joining u to v (directed: u->v; undirected: either order).
    std::optional<int> find_edge(int u, int v) const;

  private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    bool directed_ = false;
    std::vector<std::vector<std::pair<int, int>>> out_adj_;
    std::vector<std::vector<std::pair<int, int>>> undir_adj_;
};

/// Vertex positions of the input drawing, one per vertex, all finite.
struct Layout {
    std::vector<Vec2> positions;

    const Vec2& at(int v) const { return positions[static_cast<size_t>(v)]; }
    int size() const { return static_cast<int>(positions.size()); }

    Bounds bounds() const {
        Bounds b;
        for (const Vec2& p : positions) b.expand(p);
        return b;
    }
};

inline double euclidean_length(const Layout& layout, const Edge& e) {
    return distance(layout.at(e.source), layout.at(e.target));
}

constexpr int kUnreachable = -1;

/// Hop distance from s to v: the length of the shortest unweighted path,
/// found by breadth-first search truncated at `cap` hops. Traversal respects
/// edge direction on directed graphs. Returns kUnreachable when v is not
/// reached within cap hops.
int hop_distance(const Graph& g, int s, int v, int cap);

/// Batched variant: hop distances from s to every vertex, capped. Entries
/// beyond the cap hold kUnreachable.
std::vector<int> hop_distances_from(const Graph& g, int s, int cap);

/// Weakly connected components (direction ignored). Component ids are dense
/// from 0, assigned in order of first appearance by vertex id.
std::vector<int> connected_components(const Graph& g);

} // namespace epb
