#include "epb/graph.hpp"

#include <deque>

#include "epb/errors.hpp"

namespace epb {

Graph::Graph(int vertex_count, std::vector<Edge> edges, bool directed)
    : vertex_count_(vertex_count), edges_(std::move(edges)), directed_(directed) {
    out_adj_.resize(static_cast<size_t>(vertex_count_));
    undir_adj_.resize(static_cast<size_t>(vertex_count_));
    for (int id = 0; id < edge_count(); ++id) {
        const Edge& e = edges_[static_cast<size_t>(id)];
        if (e.source < 0 || e.source >= vertex_count_ || e.target < 0 ||
            e.target >= vertex_count_) {
            throw internal_error("edge endpoint out of range");
        }
        if (e.source == e.target) {
            throw internal_error("self loop in graph construction");
        }
        out_adj_[static_cast<size_t>(e.source)].emplace_back(e.target, id);
        if (!directed_) {
            out_adj_[static_cast<size_t>(e.target)].emplace_back(e.source, id);
        }
        undir_adj_[static_cast<size_t>(e.source)].emplace_back(e.target, id);
        undir_adj_[static_cast<size_t>(e.target)].emplace_back(e.source, id);
    }
}

std::optional<int> Graph::find_edge(int u, int v) const {
    for (const auto& [w, id] : out_neighbors(u)) {
        if (w == v) return id;
    }
    return std::nullopt;
}

std::vector<int> hop_distances_from(const Graph& g, int s, int cap) {
    std::vector<int> dist(static_cast<size_t>(g.vertex_count()), kUnreachable);
    dist[static_cast<size_t>(s)] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        const int du = dist[static_cast<size_t>(u)];
        if (du >= cap) continue;
        for (const auto& [v, id] : g.out_neighbors(u)) {
            if (dist[static_cast<size_t>(v)] == kUnreachable) {
                dist[static_cast<size_t>(v)] = du + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

int hop_distance(const Graph& g, int s, int v, int cap) {
    if (s == v) return 0;
    std::vector<int> dist(static_cast<size_t>(g.vertex_count()), kUnreachable);
    dist[static_cast<size_t>(s)] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        const int du = dist[static_cast<size_t>(u)];
        if (du >= cap) continue;
        for (const auto& [w, id] : g.out_neighbors(u)) {
            if (dist[static_cast<size_t>(w)] != kUnreachable) continue;
            dist[static_cast<size_t>(w)] = du + 1;
            if (w == v) return du + 1;
            queue.push_back(w);
        }
    }
    return kUnreachable;
}

std::vector<int> connected_components(const Graph& g) {
    std::vector<int> component(static_cast<size_t>(g.vertex_count()), -1);
    int next_id = 0;
    std::deque<int> queue;
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (component[static_cast<size_t>(start)] != -1) continue;
        const int id = next_id++;
        component[static_cast<size_t>(start)] = id;
        queue.push_back(start);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (const auto& [v, edge_id] : g.undirected_neighbors(u)) {
                if (component[static_cast<size_t>(v)] == -1) {
                    component[static_cast<size_t>(v)] = id;
                    queue.push_back(v);
                }
            }
        }
    }
    return component;
}

} // namespace epb
