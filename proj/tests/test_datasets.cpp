#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epb/datasets.hpp"
#include "epb/errors.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

using namespace epb;

namespace {

int square_of(const CubesSpec& spec, int v) { return v / (spec.total_vertices / 4); }

} // namespace

TEST_CASE("noise: counts and component structure") {
    NoiseSpec spec;
    spec.total_vertices = 1000;
    spec.seed = 11;
    const GeneratedGraph gen = generate_noise(spec);
    CHECK(gen.graph.edge_count() == 500);
    CHECK(oracle::component_count(gen.graph) == 500);
    for (const Vec2& p : gen.layout.positions) {
        CHECK(p.x >= 0.0);
        CHECK(p.x < 1.0);
        CHECK(p.y >= 0.0);
        CHECK(p.y < 1.0);
    }
    // a perfect matching touches every vertex exactly once
    std::vector<int> degree(1000, 0);
    for (const Edge& e : gen.graph.edges()) {
        ++degree[static_cast<size_t>(e.source)];
        ++degree[static_cast<size_t>(e.target)];
    }
    for (const int d : degree) CHECK(d == 1);
}

TEST_CASE("noise: two vertices give the single edge") {
    NoiseSpec spec;
    spec.total_vertices = 2;
    const GeneratedGraph gen = generate_noise(spec);
    REQUIRE(gen.graph.edge_count() == 1);
}

TEST_CASE("noise: odd counts rejected") {
    NoiseSpec spec;
    spec.total_vertices = 7;
    CHECK_THROWS_AS(generate_noise(spec), input_error);
}

TEST_CASE("generators are deterministic in the seed") {
    NoiseSpec noise;
    noise.seed = 42;
    const GeneratedGraph a = generate_noise(noise);
    const GeneratedGraph b = generate_noise(noise);
    REQUIRE(a.graph.edge_count() == b.graph.edge_count());
    for (int id = 0; id < a.graph.edge_count(); ++id) {
        CHECK(a.graph.edge(id).source == b.graph.edge(id).source);
        CHECK(a.graph.edge(id).target == b.graph.edge(id).target);
    }
    for (int v = 0; v < a.graph.vertex_count(); ++v) {
        CHECK(a.layout.at(v) == b.layout.at(v));
    }

    CubesSpec cubes;
    cubes.seed = 42;
    cubes.variant = CubesVariant::v3R;
    const GeneratedGraph c = generate_cubes(cubes);
    const GeneratedGraph d = generate_cubes(cubes);
    REQUIRE(c.graph.edge_count() == d.graph.edge_count());
    for (int id = 0; id < c.graph.edge_count(); ++id) {
        CHECK(c.graph.edge(id).source == d.graph.edge(id).source);
        CHECK(c.graph.edge(id).target == d.graph.edge(id).target);
    }
    for (int v = 0; v < c.graph.vertex_count(); ++v) {
        CHECK(c.layout.at(v) == d.layout.at(v));
    }
}

TEST_CASE("cubes 2R has exactly two weakly connected components") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        CubesSpec spec;
        spec.variant = CubesVariant::v2R;
        spec.seed = seed;
        const GeneratedGraph gen = generate_cubes(spec);
        CHECK(oracle::component_count(gen.graph) == 2);
    }
}

TEST_CASE("cubes 3R: top and bottom squares overlap vertically") {
    CubesSpec spec;
    spec.variant = CubesVariant::v3R;
    spec.seed = 5;
    const GeneratedGraph gen = generate_cubes(spec);
    const int per_square = spec.total_vertices / 4;
    double min_top_y = 1e30;
    double max_bottom_y = -1e30;
    for (int v = 0; v < spec.total_vertices; ++v) {
        const int sq = v / per_square;
        if (sq <= 1) {
            min_top_y = std::min(min_top_y, gen.layout.at(v).y);
        } else {
            max_bottom_y = std::max(max_bottom_y, gen.layout.at(v).y);
        }
    }
    CHECK(min_top_y < max_bottom_y);
}

TEST_CASE("cubes 1R keeps a vertical gap") {
    CubesSpec spec;
    spec.variant = CubesVariant::v1R;
    spec.seed = 5;
    const GeneratedGraph gen = generate_cubes(spec);
    const int per_square = spec.total_vertices / 4;
    double min_top_y = 1e30;
    double max_bottom_y = -1e30;
    for (int v = 0; v < spec.total_vertices; ++v) {
        if (v / per_square <= 1) {
            min_top_y = std::min(min_top_y, gen.layout.at(v).y);
        } else {
            max_bottom_y = std::max(max_bottom_y, gen.layout.at(v).y);
        }
    }
    CHECK(min_top_y > max_bottom_y);
}

TEST_CASE("cubes pairings stay separate across variants") {
    for (const auto variant :
         {CubesVariant::v1R, CubesVariant::v2R, CubesVariant::v3R, CubesVariant::v4R}) {
        for (uint64_t seed = 0; seed < 5; ++seed) {
            CubesSpec spec;
            spec.variant = variant;
            spec.seed = seed;
            const GeneratedGraph gen = generate_cubes(spec);
            CHECK(oracle::component_count(gen.graph) == 2);
            // No edge joins the two pair-components.
            const bool diagonal = variant == CubesVariant::v4R;
            for (const Edge& e : gen.graph.edges()) {
                const int sa = square_of(spec, e.source);
                const int sb = square_of(spec, e.target);
                // squares 0,1 on top, 2,3 below; pairing horizontal or diagonal
                const auto group = [&](int sq) {
                    if (diagonal) return (sq == 0 || sq == 3) ? 0 : 1;
                    return (sq == 0 || sq == 1) ? 0 : 1;
                };
                CHECK(group(sa) == group(sb));
            }
        }
    }
}

TEST_CASE("cubes geometry: squares sit inside their declared boxes") {
    CubesSpec spec;
    spec.variant = CubesVariant::v1R;
    spec.seed = 9;
    spec.side_s = 2.0;
    const GeneratedGraph gen = generate_cubes(spec);
    const double s = spec.side_s;
    const double delta = spec.delta_gap();
    const int per_square = spec.total_vertices / 4;
    const Vec2 origins[4] = {{0, s + delta}, {3 * s, s + delta}, {0, 0}, {3 * s, 0}};
    for (int v = 0; v < spec.total_vertices; ++v) {
        const Vec2 o = origins[v / per_square];
        const Vec2 p = gen.layout.at(v);
        CHECK(p.x >= o.x);
        CHECK(p.x <= o.x + s);
        CHECK(p.y >= o.y);
        CHECK(p.y <= o.y + s);
    }
}

TEST_CASE("cubes: directed variant balances inter-component direction") {
    CubesSpec spec;
    spec.variant = CubesVariant::v2R;
    spec.directed = true;
    spec.seed = 3;
    const GeneratedGraph gen = generate_cubes(spec);
    CHECK(gen.graph.directed());
    int left_to_right = 0;
    int right_to_left = 0;
    for (const Edge& e : gen.graph.edges()) {
        const int sa = square_of(spec, e.source);
        const int sb = square_of(spec, e.target);
        if (sa == sb) continue;
        const bool source_left = sa == 0 || sa == 2;
        if (source_left) {
            ++left_to_right;
        } else {
            ++right_to_left;
        }
    }
    CHECK(left_to_right + right_to_left == spec.total_vertices / 2);
    CHECK(std::abs(left_to_right - right_to_left) <= 2);
}

TEST_CASE("cubes: invalid divisibility rejected") {
    CubesSpec spec;
    spec.total_vertices = 102;
    CHECK_THROWS_AS(generate_cubes(spec), input_error);
}

TEST_CASE("spanning tree: single vertex gives no edges") {
    Rng rng(1, 2);
    CHECK(random_spanning_tree({7}, rng).empty());
}

TEST_CASE("spanning tree: n-1 edges, connected, acyclic") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed, 99);
        std::vector<int> ids;
        for (int i = 0; i < 25; ++i) ids.push_back(i);
        const std::vector<Edge> edges = random_spanning_tree(ids, rng);
        REQUIRE(edges.size() == 24);
        CHECK(oracle::is_acyclic(edges, 25));
        const Graph g(25, edges, false);
        CHECK(oracle::component_count(g) == 1);
    }
}

TEST_CASE("geometric generator lands near the requested edge count") {
    const GeneratedGraph gen = generate_geometric(500, 2000, 4);
    CHECK(gen.graph.vertex_count() == 500);
    CHECK(gen.graph.edge_count() > 1000);
    CHECK(gen.graph.edge_count() < 4000);
}
