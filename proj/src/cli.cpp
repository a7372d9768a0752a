#include "epb/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "epb/bundling.hpp"
#include "epb/datasets.hpp"
#include "epb/errors.hpp"
#include "epb/io.hpp"
#include "epb/metrics.hpp"
#include "epb/render.hpp"

namespace epb::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

/// EPB_OUT_DIR redirects relative output paths into a default directory.
std::string out_path(const std::string& path) {
    const char* dir = std::getenv("EPB_OUT_DIR");
    if (!dir || *dir == '\0' || fs::path(path).is_absolute()) return path;
    fs::create_directories(dir);
    return (fs::path(dir) / path).string();
}

class PhaseTimer {
  public:
    void start() { t0_ = std::chrono::steady_clock::now(); }

    void lap(const std::string& phase) {
        const auto now = std::chrono::steady_clock::now();
        phases_[phase].push_back(std::chrono::duration<double, std::milli>(now - t0_).count());
        if (order_.empty() || order_.back() != phase) {
            if (std::find(order_.begin(), order_.end(), phase) == order_.end()) {
                order_.push_back(phase);
            }
        }
        t0_ = now;
    }

    json to_json() const {
        json out = json::object();
        for (const auto& name : order_) {
            const auto& samples = phases_.at(name);
            out[name]["mean_ms"] = mean(samples);
            out[name]["stddev_ms"] = stddev(samples);
            out[name]["runs"] = samples.size();
        }
        return out;
    }

    void print(std::ostream& os) const {
        for (const auto& name : order_) {
            const auto& samples = phases_.at(name);
            os << "  " << name << ": " << mean(samples) << " ms";
            if (samples.size() > 1) {
                os << " +/- " << stddev(samples) << " (" << samples.size() << " runs)";
            }
            os << "\n";
        }
    }

    static double mean(const std::vector<double>& v) {
        double sum = 0.0;
        for (const double x : v) sum += x;
        return v.empty() ? 0.0 : sum / static_cast<double>(v.size());
    }

    static double stddev(const std::vector<double>& v) {
        if (v.size() < 2) return 0.0;
        const double m = mean(v);
        double acc = 0.0;
        for (const double x : v) acc += (x - m) * (x - m);
        return std::sqrt(acc / static_cast<double>(v.size() - 1));
    }

  private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
    std::map<std::string, std::vector<double>> phases_;
    std::vector<std::string> order_;
};

Directedness parse_directedness(const std::string& v) {
    if (v == "auto") return Directedness::auto_detect;
    if (v == "on") return Directedness::directed;
    if (v == "off") return Directedness::undirected;
    throw input_error("--directed must be auto, on or off");
}

GraphFormat parse_format(const std::string& v) {
    if (v == "auto") return GraphFormat::auto_detect;
    if (v == "edge-list") return GraphFormat::edge_list;
    if (v == "trail-set") return GraphFormat::trail_set;
    throw input_error("--format must be auto, edge-list or trail-set");
}

/// Accepts "1..5", "3" or "1,2,4".
std::vector<int> parse_delta_range(const std::string& text) {
    std::vector<int> out;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (lo < 1 || hi < lo) throw input_error("bad --delta range: " + text);
        for (int d = lo; d <= hi; ++d) out.push_back(d);
        return out;
    }
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw input_error("bad --delta range: " + text);
    return out;
}

enum class FileKind { json_drawing, edge_list, trail_set };

FileKind sniff_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    char c = '\0';
    while (in.get(c)) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return FileKind::json_drawing;
        break;
    }
    return detect_format(path) == GraphFormat::edge_list ? FileKind::edge_list
                                                         : FileKind::trail_set;
}

/// Load any drawing source: interchange JSON, a trail set (pre-bundled
/// curves) or an edge-list graph (becomes the straight-line drawing).
Drawing load_any_drawing(const std::string& path, Directedness directedness) {
    switch (sniff_file(path)) {
        case FileKind::json_drawing: return load_drawing(path);
        case FileKind::trail_set: return load_trails_as_drawing(path, directedness);
        case FileKind::edge_list: {
            const LoadedGraph lg = load_graph(path, GraphFormat::edge_list, directedness);
            return straight_drawing(lg.graph, lg.layout);
        }
    }
    throw internal_error("unhandled file kind");
}

struct MetricFlags {
    double theta = 7.5;
    std::string delta = "1..5";
    int cell_px = 8;
    double epsilon_px = 0.0;
    int window = 3;
    int gray_threshold = 1;
    int width = 1600;
    double line_width = 1.0;
    double vertex_diameter = 4.0;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--theta", theta, "Ambiguity crossing-angle threshold in degrees");
        cmd->add_option("--delta", delta, "Hop thresholds, e.g. 1..5 or 1,2,3");
        cmd->add_option("--cell-px", cell_px, "Ambiguity grid cell size in pixels");
        cmd->add_option("--epsilon-px", epsilon_px,
                        "Proximity threshold in pixels (0 = one grid cell)");
        cmd->add_option("--window", window, "Sliding window size in cells (odd)");
        cmd->add_option("--gray-threshold", gray_threshold,
                        "Gray value at which a pixel counts as occupied");
        cmd->add_option("--width", width, "Raster width in pixels");
        cmd->add_option("--line-width", line_width, "Stroke width in pixels");
        cmd->add_option("--vertex-diameter", vertex_diameter, "Vertex disk diameter in pixels");
    }

    MetricsConfig to_config() const {
        MetricsConfig config;
        config.raster_width_px = width;
        config.line_width_px = line_width;
        config.vertex_diameter_px = vertex_diameter;
        config.gray_threshold = gray_threshold;
        config.ambiguity.angle_threshold_deg = theta;
        config.ambiguity.grid_cell_px = cell_px;
        config.ambiguity.proximity_epsilon_px = epsilon_px;
        config.ambiguity.window_cells = window;
        config.ambiguity.deltas = parse_delta_range(delta);
        config.ambiguity.raster_width_px = width;
        return config;
    }
};

void emit(const json& doc, bool as_json, const std::string& human) {
    if (as_json) {
        std::cout << doc.dump(1) << "\n";
    } else if (!human.empty()) {
        std::cout << human;
    }
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
    std::string kind;
    std::string variant = "2R";
    int n = 0;
    uint64_t seed = 0;
    double side = 1.0;
    bool directed = false;
    int extra_per_square = -1;
    std::string out;
    bool as_json = false;
};

int run_generate(const GenerateArgs& args) {
    GeneratedGraph gen;
    if (args.kind == "cubes") {
        CubesSpec spec;
        spec.total_vertices = args.n > 0 ? args.n : 100;
        spec.seed = args.seed;
        spec.side_s = args.side;
        spec.directed = args.directed;
        spec.extra_edges_per_square = args.extra_per_square;
        if (args.variant == "1R") spec.variant = CubesVariant::v1R;
        else if (args.variant == "2R") spec.variant = CubesVariant::v2R;
        else if (args.variant == "3R") spec.variant = CubesVariant::v3R;
        else if (args.variant == "4R") spec.variant = CubesVariant::v4R;
        else throw input_error("--variant must be one of 1R, 2R, 3R, 4R");
        gen = generate_cubes(spec);
    } else {
        NoiseSpec spec;
        spec.total_vertices = args.n > 0 ? args.n : 1000;
        spec.seed = args.seed;
        gen = generate_noise(spec);
    }
    const std::string path = out_path(args.out);
    save_edge_list(path, gen.graph, gen.layout);

    const auto components = connected_components(gen.graph);
    const int component_count =
        components.empty() ? 0 : *std::max_element(components.begin(), components.end()) + 1;
    json doc;
    doc["vertices"] = gen.graph.vertex_count();
    doc["edges"] = gen.graph.edge_count();
    doc["components"] = component_count;
    doc["out"] = path;
    std::ostringstream human;
    human << "wrote " << path << ": " << gen.graph.vertex_count() << " vertices, "
          << gen.graph.edge_count() << " edges, " << component_count << " components\n";
    emit(doc, args.as_json, human.str());
    return 0;
}

// ---------------------------------------------------------------- bundle

struct BundleArgs {
    std::string input;
    std::string format = "auto";
    std::string directed = "auto";
    double k = 2.0;
    double d = 2.0;
    int smoothing = 2;
    int samples = 8;
    std::string threshold_on = "geometry";
    std::string out;
    std::string straight_out;
    int repeat = 1;
    bool as_json = false;
};

int run_bundle(const BundleArgs& args) {
    BundlingParams params;
    params.max_distortion_k = args.k;
    params.edge_weight_exponent_d = args.d;
    params.smoothing = args.smoothing;
    params.curve_samples_per_segment = args.samples;
    if (args.threshold_on == "geometry") {
        params.detour_test = DetourTest::geometry;
    } else if (args.threshold_on == "weight") {
        params.detour_test = DetourTest::weight;
    } else {
        throw input_error("--threshold-on must be geometry or weight");
    }
    params.validate();
    if (args.repeat < 1) throw input_error("--repeat must be >= 1");

    PhaseTimer timer;
    Drawing drawing;
    LoadedGraph loaded;
    for (int run = 0; run < args.repeat; ++run) {
        timer.start();
        loaded = load_graph(args.input, parse_format(args.format),
                            parse_directedness(args.directed));
        timer.lap("load");
        drawing = edge_path_bundle(loaded.graph, loaded.layout, params);
        timer.lap("bundle");
    }
    timer.start();
    const std::string path = out_path(args.out);
    save_drawing(path, drawing);
    if (!args.straight_out.empty()) {
        save_drawing(out_path(args.straight_out), straight_drawing(loaded.graph, loaded.layout));
    }
    timer.lap("write");

    const BundleStats stats = bundle_stats(drawing);
    json doc;
    doc["vertices"] = loaded.graph.vertex_count();
    doc["edges"] = loaded.graph.edge_count();
    doc["dropped_self_loops"] = loaded.report.dropped_self_loops;
    doc["dropped_duplicates"] = loaded.report.dropped_duplicates;
    doc["bundled"] = stats.bundled_count;
    doc["locked"] = stats.locked_count;
    doc["unbundled"] = stats.unbundled_count;
    doc["max_path_hops"] = stats.max_path_hops;
    doc["timing"] = timer.to_json();
    doc["out"] = path;

    std::ostringstream human;
    human << "bundled " << stats.bundled_count << " of " << loaded.graph.edge_count()
          << " edges (" << stats.locked_count << " locked, " << stats.unbundled_count
          << " untouched), longest path " << stats.max_path_hops << " hops\n";
    if (loaded.report.dropped_self_loops || loaded.report.dropped_duplicates) {
        human << "dropped " << loaded.report.dropped_self_loops << " self loops, "
              << loaded.report.dropped_duplicates << " duplicate edges\n";
    }
    human << "wrote " << path << "\n";
    std::ostringstream timing;
    timer.print(timing);
    human << "timing:\n" << timing.str();
    emit(doc, args.as_json, human.str());
    return 0;
}

// ---------------------------------------------------------------- metrics

struct MetricsArgs {
    std::string drawing;
    std::string baseline;
    std::string graph;
    std::string directed = "auto";
    MetricFlags flags;
    std::string out;
    std::string heatmap;
    int repeat = 1;
    bool as_json = false;
};

int run_metrics(const MetricsArgs& args) {
    if (args.repeat < 1) throw input_error("--repeat must be >= 1");
    const MetricsConfig config = args.flags.to_config();

    PhaseTimer timer;
    MetricsReport report;
    Drawing drawing;
    for (int run = 0; run < args.repeat; ++run) {
        timer.start();
        drawing = load_any_drawing(args.drawing, parse_directedness(args.directed));
        Drawing baseline = load_any_drawing(args.baseline, parse_directedness(args.directed));
        std::optional<Graph> graph;
        if (!args.graph.empty()) {
            graph = load_graph(args.graph, GraphFormat::auto_detect,
                               parse_directedness(args.directed))
                        .graph;
            if (graph->edge_count() != drawing.graph.edge_count() ||
                graph->vertex_count() != drawing.graph.vertex_count()) {
                throw input_error("graph file does not match the drawing");
            }
        }
        timer.lap("load");
        report = evaluate(drawing, baseline, graph ? *graph : drawing.graph, config);
        timer.lap("metrics");
    }

    timer.start();
    std::string path;
    if (!args.out.empty()) {
        path = out_path(args.out);
        std::ofstream out(path);
        if (!out) throw input_error("cannot write " + path);
        out << metrics_to_json(report) << "\n";
    }
    if (!args.heatmap.empty()) {
        int global_max = 0;
        for (const int c : report.ambiguity_cell_counts) global_max = std::max(global_max, c);
        write_pgm(out_path(args.heatmap),
                  ambiguity_heatmap(report.ambiguity_cell_counts, report.cells_x, report.cells_y,
                                    config.ambiguity.effective_cell_px(), global_max));
    }
    timer.lap("write");

    json doc = json::parse(metrics_to_json(report));
    doc.erase("ambiguity_cells"); // bulky; the file output keeps it
    doc["timing"] = timer.to_json();
    if (!path.empty()) doc["out"] = path;

    std::ostringstream human;
    human.precision(4);
    human << "ink " << report.ink_ratio << " (no disks " << report.ink_ratio_no_vertices
          << "), distortion " << report.distortion_mean << " / " << report.distortion_median
          << "\n";
    for (const auto& [delta, value] : report.amb) {
        human << "amb^" << delta << " = " << value << "\n";
    }
    std::ostringstream timing;
    timer.print(timing);
    human << "timing:\n" << timing.str();
    emit(doc, args.as_json, human.str());
    return 0;
}

// ---------------------------------------------------------------- render

struct RenderArgs {
    std::string drawing;
    std::string directed = "auto";
    std::string mode = "plain";
    std::string background = "white";
    std::string out;
    std::string raster;
    int width = 1600;
    double line_width = 1.0;
    double vertex_diameter = 4.0;
    bool no_fold = false;
    bool as_json = false;
};

int run_render(const RenderArgs& args) {
    RenderStyle style;
    style.width_px = args.width;
    style.line_width_px = args.line_width;
    style.vertex_diameter_px = args.vertex_diameter;
    style.fold_angle = !args.no_fold;
    if (args.mode == "plain") style.mode = RenderMode::plain;
    else if (args.mode == "angle") style.mode = RenderMode::angle_colormap;
    else if (args.mode == "distortion") style.mode = RenderMode::distortion_colormap;
    else throw input_error("--mode must be plain, angle or distortion");
    if (args.background == "white") style.background = Background::white;
    else if (args.background == "black") style.background = Background::black;
    else throw input_error("--background must be white or black");

    const Drawing drawing = load_any_drawing(args.drawing, parse_directedness(args.directed));
    const std::string path = out_path(args.out);
    {
        std::ofstream out(path);
        if (!out) throw input_error("cannot write " + path);
        out << render_svg(drawing, style);
    }
    if (!args.raster.empty()) {
        write_pgm(out_path(args.raster), rasterize(drawing, style.width_px, style.line_width_px,
                                                   style.vertex_diameter_px, true));
    }
    json doc;
    doc["out"] = path;
    emit(doc, args.as_json, "wrote " + path + "\n");
    return 0;
}

// ---------------------------------------------------------------- compare

struct CompareArgs {
    std::string baseline;
    std::vector<std::string> drawings;
    std::vector<std::string> labels;
    std::string graph;
    std::string directed = "auto";
    MetricFlags flags;
    std::string out_dir;
    bool as_json = false;
};

int run_compare(const CompareArgs& args) {
    if (args.drawings.empty()) throw input_error("compare needs at least one --drawing");
    if (!args.labels.empty() && args.labels.size() != args.drawings.size()) {
        throw input_error("--labels must match --drawings in count");
    }
    const MetricsConfig config = args.flags.to_config();
    const Directedness directedness = parse_directedness(args.directed);

    const Drawing baseline = load_any_drawing(args.baseline, directedness);
    std::optional<Graph> graph;
    if (!args.graph.empty()) {
        graph = load_graph(args.graph, GraphFormat::auto_detect, directedness).graph;
    }

    std::vector<std::string> labels = args.labels;
    if (labels.empty()) {
        for (const auto& path : args.drawings) labels.push_back(fs::path(path).stem().string());
    }

    std::vector<Drawing> drawings;
    std::vector<MetricsReport> reports;
    reports.push_back(evaluate(baseline, baseline, graph ? *graph : baseline.graph, config));
    for (const auto& path : args.drawings) {
        drawings.push_back(load_any_drawing(path, directedness));
        reports.push_back(
            evaluate(drawings.back(), baseline, graph ? *graph : drawings.back().graph, config));
    }
    labels.insert(labels.begin(), "baseline");

    const fs::path dir = out_path(args.out_dir);
    fs::create_directories(dir);

    // Table, text and CSV.
    const std::vector<int>& deltas = config.ambiguity.deltas;
    std::ostringstream text;
    std::ostringstream csv;
    csv << "label,ink,dist_mean,dist_median";
    text << "label          ink   dist(mean/median)";
    for (const int d : deltas) {
        csv << ",amb" << d;
        text << "  amb^" << d;
    }
    csv << "\n";
    text << "\n";
    for (size_t i = 0; i < reports.size(); ++i) {
        const MetricsReport& r = reports[i];
        char row[160];
        std::snprintf(row, sizeof(row), "%-14s %.2f  %.2f / %.2f        ", labels[i].c_str(),
                      r.ink_ratio, r.distortion_mean, r.distortion_median);
        text << row;
        csv << labels[i] << "," << r.ink_ratio << "," << r.distortion_mean << ","
            << r.distortion_median;
        for (const int d : deltas) {
            char cell[32];
            std::snprintf(cell, sizeof(cell), "  %.2f", r.amb.at(d));
            text << cell;
            csv << "," << r.amb.at(d);
        }
        text << "\n";
        csv << "\n";
    }
    {
        std::ofstream out(dir / "table.txt");
        out << text.str();
        std::ofstream csv_out(dir / "table.csv");
        csv_out << csv.str();
    }

    // Ambiguity heatmaps normalized by the shared maximum.
    int global_max = 0;
    for (const MetricsReport& r : reports) {
        for (const int c : r.ambiguity_cell_counts) global_max = std::max(global_max, c);
    }
    for (size_t i = 0; i < reports.size(); ++i) {
        const MetricsReport& r = reports[i];
        write_pgm((dir / ("amb_" + labels[i] + ".pgm")).string(),
                  ambiguity_heatmap(r.ambiguity_cell_counts, r.cells_x, r.cells_y,
                                    config.ambiguity.effective_cell_px(), global_max));
    }

    // Distortion drawings on a shared scale.
    RenderStyle style;
    style.width_px = config.raster_width_px;
    style.line_width_px = config.line_width_px;
    style.vertex_diameter_px = config.vertex_diameter_px;
    std::vector<const Drawing*> pointers{&baseline};
    std::vector<std::vector<double>> per_edge{reports[0].distortion_per_edge};
    for (size_t i = 0; i < drawings.size(); ++i) {
        pointers.push_back(&drawings[i]);
        per_edge.push_back(reports[i + 1].distortion_per_edge);
    }
    const std::vector<std::string> svgs = distortion_heatmap(pointers, per_edge, style);
    for (size_t i = 0; i < svgs.size(); ++i) {
        std::ofstream out(dir / ("dist_" + labels[i] + ".svg"));
        out << svgs[i];
    }

    json doc;
    doc["out_dir"] = dir.string();
    doc["rows"] = json::array();
    for (size_t i = 0; i < reports.size(); ++i) {
        json row;
        row["label"] = labels[i];
        row["ink"] = reports[i].ink_ratio;
        row["dist_mean"] = reports[i].distortion_mean;
        row["dist_median"] = reports[i].distortion_median;
        for (const auto& [d, v] : reports[i].amb) row["amb"][std::to_string(d)] = v;
        doc["rows"].push_back(std::move(row));
    }
    emit(doc, args.as_json, text.str() + "wrote " + dir.string() + "\n");
    return 0;
}

// ---------------------------------------------------------------- wiring

void require_value(const std::string& value, const char* flag) {
    if (value.empty()) throw input_error(std::string(flag) + " is required");
}

struct LeafCommands {
    CLI::App* cubes = nullptr;
    CLI::App* noise = nullptr;
    CLI::App* bundle = nullptr;
    CLI::App* metrics = nullptr;
    CLI::App* render = nullptr;
    CLI::App* compare = nullptr;
};

/// Flat key=value config. Applied after parsing, and only to options the
/// command line left untouched, so flags always win.
void apply_config(CLI::App* cmd, const std::string& path) {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw input_error("cannot open config file " + path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        const size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw input_error(path + ":" + std::to_string(line_no) + ": expected key=value");
        }
        auto trim = [](std::string s) {
            const size_t a = s.find_first_not_of(" \t\r");
            const size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "config") continue;
        CLI::Option* opt = cmd->get_option_no_throw("--" + key);
        if (!opt) {
            throw input_error(path + ":" + std::to_string(line_no) + ": unknown key '" + key +
                              "' for subcommand " + cmd->get_name());
        }
        if (opt->count() > 0) continue; // the command line wins
        opt->add_result(value);
        opt->run_callback();
    }
}

void build_app(CLI::App& app, LeafCommands& leafs, GenerateArgs& gen, BundleArgs& bundle,
               MetricsArgs& metrics, RenderArgs& render, CompareArgs& compare,
               std::string& config_path) {
    app.require_subcommand(0, 1);
    app.option_defaults()->always_capture_default();

    auto* generate = app.add_subcommand("generate", "Generate a synthetic benchmark graph");
    generate->require_subcommand(1);
    auto* cubes = generate->add_subcommand("cubes", "Four vertex clusters, two joined pairs");
    cubes->add_option("--variant", gen.variant, "Cluster arrangement: 1R, 2R, 3R or 4R");
    cubes->add_option("--n", gen.n, "Total vertex count (divisible by 4)")->default_str("100");
    cubes->add_option("--seed", gen.seed, "Random seed");
    cubes->add_option("--side", gen.side, "Square side length");
    cubes->add_flag("--directed", gen.directed, "Generate the directed variant");
    cubes->add_option("--extra-per-square", gen.extra_per_square,
                      "Extra random edges per square (-1 = size/8)");
    cubes->add_option("--out", gen.out, "Output edge-list path (required)");
    auto* noise = generate->add_subcommand("noise", "Random perfect matching in a square");
    noise->add_option("--n", gen.n, "Total vertex count (even)")->default_str("1000");
    noise->add_option("--seed", gen.seed, "Random seed");
    noise->add_option("--out", gen.out, "Output edge-list path (required)");
    for (auto* cmd : {cubes, noise}) {
        cmd->add_flag("--json", gen.as_json, "Machine-readable output");
    }

    auto* b = app.add_subcommand("bundle", "Bundle edges onto weighted shortest paths");
    b->add_option("--input", bundle.input, "Input graph, edge list or trail set (required)");
    b->add_option("--format", bundle.format, "Input format: auto, edge-list or trail-set");
    b->add_option("--directed", bundle.directed, "Directedness: auto, on or off");
    b->add_option("--k", bundle.k, "Maximum detour factor (> 1)");
    b->add_option("--d", bundle.d, "Edge weight exponent (weight = length^d)");
    b->add_option("--smoothing", bundle.smoothing, "Control point smoothing factor (>= 1)");
    b->add_option("--samples", bundle.samples, "Curve samples per spline span");
    b->add_option("--threshold-on", bundle.threshold_on,
                  "Detour test reading: geometry or weight");
    b->add_option("--out", bundle.out, "Output drawing JSON (required)");
    b->add_option("--straight-out", bundle.straight_out,
                  "Also write the unbundled drawing here");
    b->add_option("--repeat", bundle.repeat, "Repeat for timing statistics");
    b->add_flag("--json", bundle.as_json, "Machine-readable output");

    auto* m = app.add_subcommand("metrics", "Ink, distortion and ambiguity of a drawing");
    m->add_option("--drawing", metrics.drawing, "Drawing JSON, trail set or edge list (required)");
    m->add_option("--baseline", metrics.baseline,
                  "Baseline drawing, usually straight-line (required)");
    m->add_option("--graph", metrics.graph, "Graph file (defaults to the drawing's topology)");
    m->add_option("--directed", metrics.directed, "Directedness: auto, on or off");
    metrics.flags.add_to(m);
    m->add_option("--out", metrics.out, "Metrics JSON output path");
    m->add_option("--heatmap", metrics.heatmap, "Ambiguity heatmap PGM path");
    m->add_option("--repeat", metrics.repeat, "Repeat for timing statistics");
    m->add_flag("--json", metrics.as_json, "Machine-readable output");

    auto* r = app.add_subcommand("render", "Render a drawing to SVG");
    r->add_option("--drawing", render.drawing, "Drawing JSON, trail set or edge list (required)");
    r->add_option("--directed", render.directed, "Directedness: auto, on or off");
    r->add_option("--mode", render.mode, "plain, angle or distortion");
    r->add_option("--background", render.background, "white or black");
    r->add_option("--out", render.out, "SVG output path (required)");
    r->add_option("--raster", render.raster, "Also write a PGM raster here");
    r->add_option("--width", render.width, "Image width in pixels");
    r->add_option("--line-width", render.line_width, "Stroke width in pixels");
    r->add_option("--vertex-diameter", render.vertex_diameter, "Vertex disk diameter in pixels");
    r->add_flag("--no-fold", render.no_fold, "Color by full-turn angle instead of half-turn");
    r->add_flag("--json", render.as_json, "Machine-readable output");

    auto* c = app.add_subcommand("compare", "Metric table for drawings against one baseline");
    c->add_option("--baseline", compare.baseline, "Baseline drawing (required)");
    c->add_option("--drawings", compare.drawings, "Drawings to evaluate (required)")
        ->expected(-1);
    c->add_option("--labels", compare.labels, "Row labels, one per drawing")->expected(-1);
    c->add_option("--graph", compare.graph, "Graph file shared by all drawings");
    c->add_option("--directed", compare.directed, "Directedness: auto, on or off");
    compare.flags.add_to(c);
    c->add_option("--out-dir", compare.out_dir, "Output directory (required)");
    c->add_flag("--json", compare.as_json, "Machine-readable output");

    leafs = {cubes, noise, b, m, r, c};
    for (auto* cmd : {cubes, noise, b, m, r, c}) {
        cmd->add_option("--config", config_path,
                        "Flat key=value file mirroring these flags; flags win");
    }
}

} // namespace

std::string help_text() {
    CLI::App app{"Edge-Path bundling toolkit"};
    LeafCommands leafs;
    GenerateArgs gen;
    BundleArgs bundle;
    MetricsArgs metrics;
    RenderArgs render;
    CompareArgs compare;
    std::string config_path;
    build_app(app, leafs, gen, bundle, metrics, render, compare, config_path);
    return app.help("", CLI::AppFormatMode::All);
}

int run(const std::vector<std::string>& args) {
    CLI::App app{"Edge-Path bundling toolkit"};
    LeafCommands leafs;
    GenerateArgs gen;
    BundleArgs bundle;
    MetricsArgs metrics;
    RenderArgs render;
    CompareArgs compare;
    std::string config_path;
    build_app(app, leafs, gen, bundle, metrics, render, compare, config_path);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand("generate")) {
            auto* generate = app.get_subcommand("generate");
            const bool is_cubes = generate->got_subcommand("cubes");
            apply_config(is_cubes ? leafs.cubes : leafs.noise, config_path);
            gen.kind = is_cubes ? "cubes" : "noise";
            require_value(gen.out, "--out");
            return run_generate(gen);
        }
        if (app.got_subcommand("bundle")) {
            apply_config(leafs.bundle, config_path);
            require_value(bundle.input, "--input");
            require_value(bundle.out, "--out");
            return run_bundle(bundle);
        }
        if (app.got_subcommand("metrics")) {
            apply_config(leafs.metrics, config_path);
            require_value(metrics.drawing, "--drawing");
            require_value(metrics.baseline, "--baseline");
            return run_metrics(metrics);
        }
        if (app.got_subcommand("render")) {
            apply_config(leafs.render, config_path);
            require_value(render.drawing, "--drawing");
            require_value(render.out, "--out");
            return run_render(render);
        }
        if (app.got_subcommand("compare")) {
            apply_config(leafs.compare, config_path);
            require_value(compare.baseline, "--baseline");
            require_value(compare.out_dir, "--out-dir");
            return run_compare(compare);
        }
        std::cout << app.help();
        return 0;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace epb::cli
