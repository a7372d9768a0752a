#include "epb/io.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "epb/errors.hpp"

namespace epb {

namespace {

std::string strip_comment(const std::string& line) {
    const size_t pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool is_blank(const std::string& line) {
    return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

[[noreturn]] void parse_fail(const std::string& path, int line_no, const std::string& what) {
    std::ostringstream msg;
    msg << path << ":" << line_no << ": " << what;
    throw input_error(msg.str());
}

double parse_coord(const std::string& path, int line_no, const std::string& token) {
    size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(token, &consumed);
    } catch (const std::exception&) {
        parse_fail(path, line_no, "expected a number, got '" + token + "'");
    }
    if (consumed != token.size()) {
        parse_fail(path, line_no, "trailing characters in number '" + token + "'");
    }
    if (!std::isfinite(value)) {
        parse_fail(path, line_no, "coordinate is not finite");
    }
    return value;
}

std::ifstream open_or_fail(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    return in;
}

struct EdgeKey {
    int64_t packed;
    bool operator==(const EdgeKey& o) const { return packed == o.packed; }
};

struct EdgeKeyHash {
    size_t operator()(const EdgeKey& k) const { return std::hash<int64_t>()(k.packed); }
};

EdgeKey make_key(int a, int b, bool directed) {
    if (!directed && a > b) std::swap(a, b);
    return {static_cast<int64_t>(a) * (1LL << 31) + b};
}

LoadedGraph load_edge_list(const std::string& path, Directedness directedness) {
    std::ifstream in = open_or_fail(path);

    std::vector<std::string> labels;
    std::unordered_map<std::string, int> label_to_id;
    std::vector<Vec2> positions;
    std::vector<Edge> edges;
    std::unordered_set<EdgeKey, EdgeKeyHash> seen;
    LoadReport report;

    bool directed = false;
    bool header_seen = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_comment(line);
        if (is_blank(line)) continue;
        std::istringstream tokens(line);
        if (!header_seen) {
            std::string kind;
            tokens >> kind;
            if (kind == "directed") {
                directed = true;
            } else if (kind == "undirected") {
                directed = false;
            } else {
                parse_fail(path, line_no, "expected header 'directed' or 'undirected'");
            }
            header_seen = true;
            continue;
        }
        std::string kind;
        tokens >> kind;
        if (kind == "v") {
            std::string label, xs, ys;
            if (!(tokens >> label >> xs >> ys)) {
                parse_fail(path, line_no, "vertex line needs 'v <id> <x> <y>'");
            }
            if (label_to_id.count(label)) {
                parse_fail(path, line_no, "vertex '" + label + "' defined twice");
            }
            label_to_id.emplace(label, static_cast<int>(labels.size()));
            labels.push_back(label);
            positions.push_back({parse_coord(path, line_no, xs), parse_coord(path, line_no, ys)});
        } else if (kind == "e") {
            std::string a, b;
            if (!(tokens >> a >> b)) {
                parse_fail(path, line_no, "edge line needs 'e <source> <target>'");
            }
            const auto sa = label_to_id.find(a);
            const auto sb = label_to_id.find(b);
            if (sa == label_to_id.end()) {
                parse_fail(path, line_no, "vertex '" + a + "' referenced without coordinates");
            }
            if (sb == label_to_id.end()) {
                parse_fail(path, line_no, "vertex '" + b + "' referenced without coordinates");
            }
            if (sa->second == sb->second) {
                ++report.dropped_self_loops;
                continue;
            }
            if (!seen.insert(make_key(sa->second, sb->second, directed)).second) {
                ++report.dropped_duplicates;
                continue;
            }
            edges.push_back({sa->second, sb->second});
        } else {
            parse_fail(path, line_no, "unknown record '" + kind + "'");
        }
    }
    if (!header_seen) parse_fail(path, line_no, "missing header line");

    if (directedness == Directedness::directed) directed = true;
    if (directedness == Directedness::undirected && directed) {
        // Collapse to the undirected view.
        directed = false;
        std::vector<Edge> collapsed;
        std::unordered_set<EdgeKey, EdgeKeyHash> useen;
        for (const Edge& e : edges) {
            if (useen.insert(make_key(e.source, e.target, false)).second) {
                collapsed.push_back(e);
            } else {
                ++report.dropped_duplicates;
            }
        }
        edges = std::move(collapsed);
    }

    LoadedGraph out;
    out.graph = Graph(static_cast<int>(labels.size()), std::move(edges), directed);
    out.layout = Layout{std::move(positions)};
    out.labels = std::move(labels);
    out.report = report;
    return out;
}

/// Merges trail endpoints closer than 1e-6 of the bounding-box diagonal.
class EndpointQuantizer {
  public:
    EndpointQuantizer(double tolerance) : tol_(tolerance) {}

    int id_for(Vec2 p, std::vector<Vec2>& positions, int* merged) {
        const int64_t cx = cell_of(p.x);
        const int64_t cy = cell_of(p.y);
        for (int64_t dy = -1; dy <= 1; ++dy) {
            for (int64_t dx = -1; dx <= 1; ++dx) {
                const auto it = grid_.find(pack(cx + dx, cy + dy));
                if (it == grid_.end()) continue;
                for (const int v : it->second) {
                    if (distance(positions[static_cast<size_t>(v)], p) < tol_ ||
                        positions[static_cast<size_t>(v)] == p) {
                        if (merged) ++*merged;
                        return v;
                    }
                }
            }
        }
        const int v = static_cast<int>(positions.size());
        positions.push_back(p);
        grid_[pack(cx, cy)].push_back(v);
        return v;
    }

  private:
    int64_t cell_of(double c) const {
        return tol_ > 0 ? static_cast<int64_t>(std::floor(c / tol_)) : 0;
    }
    static uint64_t pack(int64_t a, int64_t b) {
        return (static_cast<uint64_t>(a) << 32) ^ static_cast<uint64_t>(b & 0xffffffff);
    }

    double tol_;
    std::unordered_map<uint64_t, std::vector<int>> grid_;
};

struct ParsedTrails {
    std::vector<std::vector<Vec2>> trails;
    Bounds bounds;
};

ParsedTrails parse_trails(const std::string& path) {
    std::ifstream in = open_or_fail(path);
    ParsedTrails out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_comment(line);
        if (is_blank(line)) continue;
        std::istringstream tokens(line);
        std::vector<Vec2> trail;
        std::string xs, ys;
        while (tokens >> xs) {
            if (!(tokens >> ys)) {
                parse_fail(path, line_no, "odd number of coordinates in trail");
            }
            trail.push_back({parse_coord(path, line_no, xs), parse_coord(path, line_no, ys)});
        }
        if (trail.size() < 2) {
            parse_fail(path, line_no, "trail needs at least two points");
        }
        for (const Vec2& p : trail) out.bounds.expand(p);
        out.trails.push_back(std::move(trail));
    }
    if (out.trails.empty()) throw input_error(path + ": no trails found");
    return out;
}

} // namespace

GraphFormat detect_format(const std::string& path) {
    std::ifstream in = open_or_fail(path);
    std::string line;
    while (std::getline(in, line)) {
        line = strip_comment(line);
        if (is_blank(line)) continue;
        std::istringstream tokens(line);
        std::string first;
        tokens >> first;
        if (first == "directed" || first == "undirected") return GraphFormat::edge_list;
        return GraphFormat::trail_set;
    }
    throw input_error(path + ": empty file");
}

LoadedGraph load_graph(const std::string& path, GraphFormat format, Directedness directedness) {
    if (format == GraphFormat::auto_detect) format = detect_format(path);
    if (format == GraphFormat::edge_list) return load_edge_list(path, directedness);

    // Trail set: quantize endpoints, one edge per trail. Directed by default
    // since trails run source to target.
    const bool directed = directedness != Directedness::undirected;
    const ParsedTrails parsed = parse_trails(path);
    const double tol = 1e-6 * parsed.bounds.diagonal();

    LoadedGraph out;
    std::vector<Vec2> positions;
    EndpointQuantizer quantizer(tol);
    std::vector<Edge> edges;
    std::unordered_set<EdgeKey, EdgeKeyHash> seen;
    for (const auto& trail : parsed.trails) {
        const int s = quantizer.id_for(trail.front(), positions, &out.report.merged_trail_endpoints);
        const int t = quantizer.id_for(trail.back(), positions, &out.report.merged_trail_endpoints);
        if (s == t) {
            ++out.report.dropped_self_loops;
            continue;
        }
        if (!seen.insert(make_key(s, t, directed)).second) {
            ++out.report.dropped_duplicates;
            continue;
        }
        edges.push_back({s, t});
    }
    out.labels.reserve(positions.size());
    for (size_t i = 0; i < positions.size(); ++i) out.labels.push_back(std::to_string(i));
    out.graph = Graph(static_cast<int>(positions.size()), std::move(edges), directed);
    out.layout = Layout{std::move(positions)};
    return out;
}

Drawing load_trails_as_drawing(const std::string& path, Directedness directedness,
                               LoadReport* report) {
    const bool directed = directedness != Directedness::undirected;
    const ParsedTrails parsed = parse_trails(path);
    const double tol = 1e-6 * parsed.bounds.diagonal();

    LoadReport local;
    std::vector<Vec2> positions;
    EndpointQuantizer quantizer(tol);
    std::vector<Edge> edges;
    std::vector<EdgeCurve> curves;
    std::unordered_set<EdgeKey, EdgeKeyHash> seen;
    for (const auto& trail : parsed.trails) {
        const int s = quantizer.id_for(trail.front(), positions, &local.merged_trail_endpoints);
        const int t = quantizer.id_for(trail.back(), positions, &local.merged_trail_endpoints);
        if (s == t) {
            ++local.dropped_self_loops;
            continue;
        }
        if (!seen.insert(make_key(s, t, directed)).second) {
            ++local.dropped_duplicates;
            continue;
        }
        edges.push_back({s, t});
        EdgeCurve curve;
        curve.polyline = trail;
        // Snap trail ends onto the quantized vertex positions.
        curve.polyline.front() = positions[static_cast<size_t>(s)];
        curve.polyline.back() = positions[static_cast<size_t>(t)];
        curve.control_points = {curve.polyline.front(), curve.polyline.back()};
        curve.bundled = trail.size() > 2;
        curves.push_back(std::move(curve));
    }
    if (report) *report = local;

    Drawing out;
    out.graph = Graph(static_cast<int>(positions.size()), std::move(edges), directed);
    out.layout = Layout{std::move(positions)};
    out.curves = std::move(curves);
    return out;
}

void save_edge_list(const std::string& path, const Graph& g, const Layout& layout) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write " + path);
    out << (g.directed() ? "directed" : "undirected") << "\n";
    out.precision(17);
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "v " << v << " " << layout.at(v).x << " " << layout.at(v).y << "\n";
    }
    for (const Edge& e : g.edges()) {
        out << "e " << e.source << " " << e.target << "\n";
    }
    if (!out) throw input_error("write failed: " + path);
}

} // namespace epb
