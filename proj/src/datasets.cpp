#include "epb/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_set>

#include "epb/errors.hpp"

namespace epb {

namespace {

// Stream tags: one per draw purpose so parameter changes stay local.
constexpr uint64_t kStreamPlacement = 0x706c6163;
constexpr uint64_t kStreamTree = 0x74726565;
constexpr uint64_t kStreamExtra = 0x65787472;
constexpr uint64_t kStreamInter = 0x696e7472;
constexpr uint64_t kStreamMatch = 0x6d617463;
constexpr uint64_t kStreamOrient = 0x6f72696e;

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct PairHash {
    size_t operator()(const std::pair<int, int>& p) const {
        return std::hash<int64_t>()((static_cast<int64_t>(p.first) << 32) ^
                                    static_cast<uint32_t>(p.second));
    }
};

} // namespace

uint64_t Rng::mix(uint64_t seed, uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream));
}

uint64_t Rng::next_below(uint64_t n) {
    if (n == 0) throw internal_error("next_below(0)");
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

std::vector<Edge> random_spanning_tree(const std::vector<int>& vertex_ids, Rng& rng) {
    if (vertex_ids.empty()) throw input_error("spanning tree needs at least one vertex");
    const size_t n = vertex_ids.size();
    std::vector<Edge> edges;
    if (n == 1) return edges;

    // Random walk on the complete graph; first-entry edges form the tree.
    std::vector<char> visited(n, 0);
    size_t current = rng.next_below(n);
    visited[current] = 1;
    size_t remaining = n - 1;
    while (remaining > 0) {
        size_t next = rng.next_below(n - 1);
        if (next >= current) ++next; // uniform over the other vertices
        if (!visited[next]) {
            visited[next] = 1;
            --remaining;
            edges.push_back({vertex_ids[current], vertex_ids[next]});
        }
        current = next;
    }
    return edges;
}

GeneratedGraph generate_noise(const NoiseSpec& spec) {
    if (spec.total_vertices < 2 || spec.total_vertices % 2 != 0) {
        throw input_error("noise needs an even vertex count of at least 2");
    }
    GeneratedGraph out;
    Rng place(spec.seed, kStreamPlacement);
    out.layout.positions.reserve(static_cast<size_t>(spec.total_vertices));
    for (int v = 0; v < spec.total_vertices; ++v) {
        out.layout.positions.push_back({place.next_double(), place.next_double()});
    }

    Rng match(spec.seed, kStreamMatch);
    std::vector<int> ids(static_cast<size_t>(spec.total_vertices));
    for (int v = 0; v < spec.total_vertices; ++v) ids[static_cast<size_t>(v)] = v;
    match.shuffle(ids);
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(spec.total_vertices) / 2);
    for (size_t i = 0; i + 1 < ids.size(); i += 2) {
        edges.push_back({ids[i], ids[i + 1]});
    }
    out.graph = Graph(spec.total_vertices, std::move(edges), false);
    return out;
}

GeneratedGraph generate_cubes(const CubesSpec& spec) {
    if (spec.total_vertices < 4 || spec.total_vertices % 4 != 0) {
        throw input_error("cubes needs a vertex count divisible by 4");
    }
    if (spec.side_s <= 0.0) throw input_error("cube side must be positive");

    const int per_square = spec.total_vertices / 4;
    const double s = spec.side_s;
    const double delta = spec.delta_gap();

    // Square origins: bottom row at y = 0, top row above the gap, right
    // column across a fixed 2s horizontal space.
    //   0: top left   1: top right   2: bottom left   3: bottom right
    const Vec2 origins[4] = {
        {0.0, s + delta}, {3.0 * s, s + delta}, {0.0, 0.0}, {3.0 * s, 0.0}};

    GeneratedGraph out;
    Rng place(spec.seed, kStreamPlacement);
    out.layout.positions.reserve(static_cast<size_t>(spec.total_vertices));
    for (int sq = 0; sq < 4; ++sq) {
        for (int i = 0; i < per_square; ++i) {
            out.layout.positions.push_back({origins[sq].x + s * place.next_double(),
                                            origins[sq].y + s * place.next_double()});
        }
    }
    auto square_ids = [&](int sq) {
        std::vector<int> ids(static_cast<size_t>(per_square));
        for (int i = 0; i < per_square; ++i) ids[static_cast<size_t>(i)] = sq * per_square + i;
        return ids;
    };

    std::vector<Edge> edges;
    std::unordered_set<std::pair<int, int>, PairHash> seen;
    auto add_unique = [&](int a, int b) {
        if (a == b) return false;
        auto key = std::minmax(a, b);
        if (!seen.insert({key.first, key.second}).second) return false;
        edges.push_back({a, b});
        return true;
    };

    Rng tree(spec.seed, kStreamTree);
    for (int sq = 0; sq < 4; ++sq) {
        for (const Edge& e : random_spanning_tree(square_ids(sq), tree)) {
            add_unique(e.source, e.target);
        }
    }

    const int extra =
        spec.extra_edges_per_square >= 0 ? spec.extra_edges_per_square : per_square / 8;
    Rng extra_rng(spec.seed, kStreamExtra);
    for (int sq = 0; sq < 4; ++sq) {
        int added = 0;
        int attempts = 0;
        while (added < extra && attempts < 100 * (extra + 1)) {
            ++attempts;
            const int a = sq * per_square + static_cast<int>(extra_rng.next_below(per_square));
            const int b = sq * per_square + static_cast<int>(extra_rng.next_below(per_square));
            if (add_unique(a, b)) ++added;
        }
    }

    // Inter-component edges: |V|/2 in total, split evenly across the two
    // pairings. 1R-3R pair horizontally, 4R diagonally.
    const bool diagonal = spec.variant == CubesVariant::v4R;
    const std::pair<int, int> pairings[2] = {
        diagonal ? std::pair<int, int>{0, 3} : std::pair<int, int>{0, 1},
        diagonal ? std::pair<int, int>{2, 1} : std::pair<int, int>{2, 3}};
    const int inter_total = spec.total_vertices / 2;
    Rng inter(spec.seed, kStreamInter);
    std::vector<std::pair<size_t, bool>> directed_flips; // edge index, flip
    for (int p = 0; p < 2; ++p) {
        const int count = inter_total / 2 + (p == 0 ? inter_total % 2 : 0);
        const auto [left_sq, right_sq] = pairings[p];
        int added = 0;
        int attempts = 0;
        while (added < count && attempts < 100 * (count + 1)) {
            ++attempts;
            const int a = left_sq * per_square + static_cast<int>(inter.next_below(per_square));
            const int b = right_sq * per_square + static_cast<int>(inter.next_below(per_square));
            if (add_unique(a, b)) {
                // Alternate left-to-right and right-to-left in the directed
                // variant.
                directed_flips.push_back({edges.size() - 1, added % 2 == 1});
                ++added;
            }
        }
    }

    if (spec.directed) {
        Rng orient(spec.seed, kStreamOrient);
        // Intra-square edges get a random orientation.
        std::vector<char> is_inter(edges.size(), 0);
        for (const auto& [index, flip] : directed_flips) {
            is_inter[index] = 1;
            if (flip) std::swap(edges[index].source, edges[index].target);
        }
        for (size_t i = 0; i < edges.size(); ++i) {
            if (!is_inter[i] && orient.next_below(2) == 1) {
                std::swap(edges[i].source, edges[i].target);
            }
        }
    }

    out.graph = Graph(spec.total_vertices, std::move(edges), spec.directed);
    return out;
}

GeneratedGraph generate_geometric(int vertices, int target_edges, uint64_t seed) {
    if (vertices < 2) throw input_error("geometric graph needs at least 2 vertices");
    GeneratedGraph out;
    Rng place(seed, kStreamPlacement);
    out.layout.positions.reserve(static_cast<size_t>(vertices));
    for (int v = 0; v < vertices; ++v) {
        out.layout.positions.push_back({place.next_double(), place.next_double()});
    }
    // Expected edges within radius r: n^2/2 * pi r^2 in the unit square
    // (ignoring border effects), solved for r.
    const double r = std::sqrt(2.0 * target_edges /
                               (std::numbers::pi * static_cast<double>(vertices) * vertices));

    // Uniform grid lookup keeps this O(n) for fixed density.
    const int cells = std::max(1, static_cast<int>(1.0 / r));
    std::vector<std::vector<int>> grid(static_cast<size_t>(cells) * cells);
    auto cell_index = [&](Vec2 p) {
        const int cx = std::min(cells - 1, static_cast<int>(p.x * cells));
        const int cy = std::min(cells - 1, static_cast<int>(p.y * cells));
        return static_cast<size_t>(cy) * cells + cx;
    };
    for (int v = 0; v < vertices; ++v) {
        grid[cell_index(out.layout.at(v))].push_back(v);
    }
    std::vector<Edge> edges;
    for (int v = 0; v < vertices; ++v) {
        const Vec2 p = out.layout.at(v);
        const int cx = std::min(cells - 1, static_cast<int>(p.x * cells));
        const int cy = std::min(cells - 1, static_cast<int>(p.y * cells));
        for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
                const int nx = cx + dx;
                const int ny = cy + dy;
                if (nx < 0 || nx >= cells || ny < 0 || ny >= cells) continue;
                for (const int u : grid[static_cast<size_t>(ny) * cells + nx]) {
                    if (u <= v) continue;
                    if (distance(p, out.layout.at(u)) <= r) {
                        edges.push_back({v, u});
                    }
                }
            }
        }
    }
    out.graph = Graph(vertices, std::move(edges), false);
    return out;
}

} // namespace epb
