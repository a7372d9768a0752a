#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "epb/graph.hpp"

namespace epb {

/// Deterministic random source. Each purpose draws from its own stream so
/// adding draws to one purpose does not reshuffle the others. The engine is
/// std::mt19937_64 (fully specified by the standard); the uniform mappings
/// below avoid std:: distributions, whose output is implementation defined.
class Rng {
  public:
    Rng(uint64_t seed, uint64_t stream) : engine_(mix(seed, stream)) {}

    /// Uniform in [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n), n > 0, by rejection.
    uint64_t next_below(uint64_t n);

    template <typename T> void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[static_cast<size_t>(next_below(i))]);
        }
    }

  private:
    static uint64_t mix(uint64_t seed, uint64_t stream);
    std::mt19937_64 engine_;
};

enum class CubesVariant { v1R, v2R, v3R, v4R };

/// Four clusters of vertices in axis-parallel squares, two of them joined
/// left-right (or diagonally for 4R) by random edges. The vertical gap
/// between the top and bottom squares depends on the variant: +s/10 for 1R
/// and 4R, 0 for 2R, -s/5 for 3R (overlapping).
struct CubesSpec {
    int total_vertices = 100; // must divide by 4
    double side_s = 1.0;
    CubesVariant variant = CubesVariant::v2R;
    bool directed = false;
    uint64_t seed = 0;
    /// Random intra-square edges beyond the spanning tree; -1 means the
    /// default of (vertices per square) / 8.
    int extra_edges_per_square = -1;

    double delta_gap() const {
        switch (variant) {
            case CubesVariant::v1R:
            case CubesVariant::v4R: return side_s / 10.0;
            case CubesVariant::v2R: return 0.0;
            case CubesVariant::v3R: return -side_s / 5.0;
        }
        return 0.0;
    }
};

struct NoiseSpec {
    int total_vertices = 1000; // must be even
    uint64_t seed = 0;
};

struct GeneratedGraph {
    Graph graph;
    Layout layout;
};

GeneratedGraph generate_cubes(const CubesSpec& spec);

/// Vertices uniform in the unit square, connected by a random perfect
/// matching: |E| = |V|/2 edges, every component a single edge.
GeneratedGraph generate_noise(const NoiseSpec& spec);

/// A random spanning tree over the given vertex ids (random walk on the
/// complete graph, first-entry edges). n vertices give n-1 edges.
std::vector<Edge> random_spanning_tree(const std::vector<int>& vertex_ids, Rng& rng);

/// Random geometric graph helper for scale tests: n vertices uniform in the
/// unit square, each joined to the others within the connect radius. The
/// radius is chosen to land near the requested edge count.
GeneratedGraph generate_geometric(int vertices, int target_edges, uint64_t seed);

} // namespace epb
