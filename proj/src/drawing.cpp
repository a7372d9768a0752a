#include "epb/drawing.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "epb/errors.hpp"

namespace epb {

using nlohmann::json;

Bounds Drawing::bounds() const {
    Bounds b;
    for (const Vec2& p : layout.positions) b.expand(p);
    for (const EdgeCurve& c : curves) {
        for (const Vec2& p : c.polyline) b.expand(p);
    }
    return b;
}

Drawing straight_drawing(const Graph& g, const Layout& layout) {
    Drawing d;
    d.graph = g;
    d.layout = layout;
    d.curves.resize(static_cast<size_t>(g.edge_count()));
    for (int id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        EdgeCurve& c = d.curves[static_cast<size_t>(id)];
        c.control_points = {layout.at(e.source), layout.at(e.target)};
        c.polyline = c.control_points;
        c.bundled = false;
    }
    return d;
}

namespace {

json points_to_json(const std::vector<Vec2>& pts) {
    json arr = json::array();
    for (const Vec2& p : pts) arr.push_back(json::array({p.x, p.y}));
    return arr;
}

std::vector<Vec2> points_from_json(const json& arr, const char* what) {
    if (!arr.is_array()) throw input_error(std::string(what) + " must be an array");
    std::vector<Vec2> pts;
    pts.reserve(arr.size());
    for (const json& p : arr) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
            throw input_error(std::string(what) + " entries must be [x, y]");
        }
        pts.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return pts;
}

} // namespace

std::string drawing_to_json(const Drawing& d) {
    json doc;
    doc["directed"] = d.graph.directed();
    doc["vertices"] = points_to_json(d.layout.positions);
    json edges = json::array();
    for (int id = 0; id < d.graph.edge_count(); ++id) {
        const Edge& e = d.graph.edge(id);
        const EdgeCurve& c = d.curves[static_cast<size_t>(id)];
        json entry;
        entry["s"] = e.source;
        entry["t"] = e.target;
        entry["polyline"] = points_to_json(c.polyline);
        entry["bundled"] = c.bundled;
        entry["control_points"] = points_to_json(c.control_points);
        edges.push_back(std::move(entry));
    }
    doc["edges"] = std::move(edges);
    return doc.dump(1);
}

Drawing drawing_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("drawing JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("directed") || !doc.contains("vertices") ||
        !doc.contains("edges")) {
        throw input_error("drawing JSON needs 'directed', 'vertices' and 'edges'");
    }

    Drawing d;
    const bool directed = doc["directed"].get<bool>();
    d.layout.positions = points_from_json(doc["vertices"], "vertices");
    const int n = d.layout.size();
    for (const Vec2& p : d.layout.positions) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw input_error("vertex coordinate is not finite");
        }
    }

    std::vector<Edge> edges;
    for (const json& entry : doc["edges"]) {
        if (!entry.contains("s") || !entry.contains("t")) {
            throw input_error("edge entry needs 's' and 't'");
        }
        const int s = entry["s"].get<int>();
        const int t = entry["t"].get<int>();
        if (s < 0 || s >= n || t < 0 || t >= n) {
            throw input_error("edge endpoint out of range");
        }
        if (s == t) throw input_error("self loop in drawing");
        edges.push_back({s, t});

        EdgeCurve c;
        if (entry.contains("polyline")) {
            c.polyline = points_from_json(entry["polyline"], "polyline");
        }
        if (c.polyline.size() < 2) {
            c.polyline = {d.layout.at(s), d.layout.at(t)};
        }
        if (entry.contains("control_points")) {
            c.control_points = points_from_json(entry["control_points"], "control_points");
        }
        if (c.control_points.size() < 2) {
            c.control_points = {c.polyline.front(), c.polyline.back()};
        }
        c.bundled = entry.value("bundled", false);
        d.curves.push_back(std::move(c));
    }
    d.graph = Graph(n, std::move(edges), directed);
    return d;
}

void save_drawing(const std::string& path, const Drawing& d) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write " + path);
    out << drawing_to_json(d) << "\n";
    if (!out) throw input_error("write failed: " + path);
}

Drawing load_drawing(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return drawing_from_json(buf.str());
}

} // namespace epb
