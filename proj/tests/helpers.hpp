#pragma once

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "epb/datasets.hpp"
#include "epb/graph.hpp"

namespace epb::test {

inline std::filesystem::path temp_dir() {
    static int counter = 0;
    const auto dir = std::filesystem::temp_directory_path() /
                     ("epb_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::string write_file(const std::filesystem::path& dir, const std::string& name,
                              const std::string& content) {
    const auto path = dir / name;
    std::ofstream out(path);
    out << content;
    return path.string();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Random graph with an embedded layout: n vertices uniform in the unit
/// square, m edges over distinct random pairs.
inline std::pair<Graph, Layout> random_embedded_graph(int n, int m, uint64_t seed,
                                                      bool directed = false) {
    Rng rng(seed, 0x7465737447ULL);
    Layout layout;
    for (int v = 0; v < n; ++v) {
        layout.positions.push_back({rng.next_double(), rng.next_double()});
    }
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    int attempts = 0;
    while (static_cast<int>(edges.size()) < m && attempts < 50 * (m + 1)) {
        ++attempts;
        const int a = static_cast<int>(rng.next_below(static_cast<uint64_t>(n)));
        const int b = static_cast<int>(rng.next_below(static_cast<uint64_t>(n)));
        if (a == b) continue;
        const auto key = directed ? std::make_pair(a, b) : std::make_pair(std::min(a, b), std::max(a, b));
        if (!seen.insert(key).second) continue;
        edges.push_back({a, b});
    }
    return {Graph(n, std::move(edges), directed), std::move(layout)};
}

} // namespace epb::test
