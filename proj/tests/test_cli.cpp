#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <filesystem>
#include <unistd.h>

#include <json.hpp>

#include "epb/cli.hpp"
#include "epb/drawing.hpp"
#include "epb/io.hpp"
#include "epb/metrics.hpp"
#include "epb/raster.hpp"

#include "helpers.hpp"

using namespace epb;
namespace fs = std::filesystem;

namespace {

int run(std::initializer_list<std::string> args) {
    return cli::run(std::vector<std::string>(args));
}

} // namespace

TEST_CASE("full pipeline: generate, bundle, metrics, render") {
    const auto dir = test::temp_dir();
    const auto graph_path = (dir / "noise.txt").string();
    const auto drawing_path = (dir / "drawing.json").string();
    const auto straight_path = (dir / "straight.json").string();
    const auto metrics_path = (dir / "metrics.json").string();
    const auto svg_path = (dir / "out.svg").string();
    const auto heatmap_path = (dir / "amb.pgm").string();

    CHECK(run({"generate", "noise", "--n", "200", "--seed", "1", "--out", graph_path}) == 0);
    CHECK(run({"bundle", "--input", graph_path, "--out", drawing_path, "--straight-out",
               straight_path}) == 0);
    CHECK(run({"metrics", "--drawing", drawing_path, "--baseline", straight_path, "--graph",
               graph_path, "--width", "400", "--out", metrics_path, "--heatmap",
               heatmap_path}) == 0);
    CHECK(run({"render", "--drawing", drawing_path, "--mode", "angle", "--out", svg_path}) == 0);

    REQUIRE(fs::exists(metrics_path));
    const auto doc = nlohmann::json::parse(test::read_file(metrics_path));
    CHECK(doc["ink_ratio"].get<double>() == doctest::Approx(1.0).epsilon(0.01));
    CHECK(doc["distortion"]["mean"].get<double>() == 1.0);
    CHECK(doc["distortion"]["median"].get<double>() == 1.0);
    CHECK(fs::exists(svg_path));
    CHECK(fs::exists(heatmap_path));
    CHECK(read_pgm(heatmap_path).width > 0);
}

TEST_CASE("bundle rejects k at or below 1 with exit code 1") {
    const auto dir = test::temp_dir();
    const auto graph_path = (dir / "g.txt").string();
    REQUIRE(run({"generate", "noise", "--n", "10", "--seed", "0", "--out", graph_path}) == 0);
    CHECK(run({"bundle", "--input", graph_path, "--k", "0.5", "--out",
               (dir / "d.json").string()}) == 1);
    CHECK(run({"bundle", "--input", graph_path, "--k", "1.0", "--out",
               (dir / "d.json").string()}) == 1);
}

TEST_CASE("unknown flags and missing files exit with 1") {
    const auto dir = test::temp_dir();
    CHECK(run({"bundle", "--no-such-flag"}) == 1);
    CHECK(run({"bundle", "--input", (dir / "missing.txt").string(), "--out",
               (dir / "d.json").string()}) == 1);
    CHECK(run({"generate", "cubes", "--variant", "9R", "--out", (dir / "g.txt").string()}) == 1);
}

TEST_CASE("graph/drawing schema mismatch exits with 1") {
    const auto dir = test::temp_dir();
    const auto g1 = (dir / "g1.txt").string();
    const auto g2 = (dir / "g2.txt").string();
    const auto d1 = (dir / "d1.json").string();
    REQUIRE(run({"generate", "noise", "--n", "10", "--seed", "0", "--out", g1}) == 0);
    REQUIRE(run({"generate", "noise", "--n", "12", "--seed", "0", "--out", g2}) == 0);
    REQUIRE(run({"bundle", "--input", g1, "--out", d1}) == 0);
    CHECK(run({"metrics", "--drawing", d1, "--baseline", d1, "--graph", g2}) == 1);
}

TEST_CASE("compare writes the table and shared heatmaps") {
    const auto dir = test::temp_dir();
    const auto graph_path = (dir / "cubes.txt").string();
    const auto drawing_path = (dir / "bundled.json").string();
    const auto straight_path = (dir / "straight.json").string();
    const auto out_dir = (dir / "results").string();

    REQUIRE(run({"generate", "cubes", "--variant", "2R", "--n", "100", "--seed", "3", "--out",
                 graph_path}) == 0);
    REQUIRE(run({"bundle", "--input", graph_path, "--out", drawing_path, "--straight-out",
                 straight_path}) == 0);
    CHECK(run({"compare", "--baseline", straight_path, "--drawings", drawing_path, "--labels",
               "edge-path", "--graph", graph_path, "--width", "400", "--out-dir", out_dir}) == 0);

    CHECK(fs::exists(fs::path(out_dir) / "table.txt"));
    CHECK(fs::exists(fs::path(out_dir) / "table.csv"));
    CHECK(fs::exists(fs::path(out_dir) / "amb_baseline.pgm"));
    CHECK(fs::exists(fs::path(out_dir) / "amb_edge-path.pgm"));
    CHECK(fs::exists(fs::path(out_dir) / "dist_edge-path.svg"));

    const std::string csv = test::read_file((fs::path(out_dir) / "table.csv").string());
    CHECK(csv.find("label,ink,dist_mean,dist_median,amb1") == 0);
    CHECK(csv.find("baseline,1,1,1") != std::string::npos);
}

TEST_CASE("comparing a drawing against itself gives the identity row") {
    const auto dir = test::temp_dir();
    const auto graph_path = (dir / "g.txt").string();
    const auto straight_path = (dir / "s.json").string();
    REQUIRE(run({"generate", "noise", "--n", "50", "--seed", "2", "--out", graph_path}) == 0);
    REQUIRE(run({"bundle", "--input", graph_path, "--out", (dir / "d.json").string(),
                 "--straight-out", straight_path}) == 0);
    const auto out_dir = (dir / "self").string();
    CHECK(run({"compare", "--baseline", straight_path, "--drawings", straight_path, "--width",
               "400", "--out-dir", out_dir}) == 0);
    const std::string csv = test::read_file((fs::path(out_dir) / "table.csv").string());
    // two identical rows: baseline and the drawing
    CHECK(csv.find("baseline,1,1,1") != std::string::npos);
    CHECK(csv.find("s,1,1,1") != std::string::npos);
}

TEST_CASE("config file supplies defaults, flags win") {
    const auto dir = test::temp_dir();
    const auto graph_path = (dir / "g.txt").string();
    const auto config_path =
        test::write_file(dir, "epb.conf", "n=30\nseed=9\nout=" + graph_path + "\n");
    CHECK(run({"generate", "noise", "--config", config_path}) == 0);
    const LoadedGraph loaded = load_graph(graph_path);
    CHECK(loaded.graph.vertex_count() == 30);

    // command line overrides the file
    CHECK(run({"generate", "noise", "--config", config_path, "--n", "44"}) == 0);
    CHECK(load_graph(graph_path).graph.vertex_count() == 44);
}

TEST_CASE("EPB_OUT_DIR redirects relative outputs") {
    const auto dir = test::temp_dir();
    const auto out_dir = dir / "redirected";
    setenv("EPB_OUT_DIR", out_dir.c_str(), 1);
    CHECK(run({"generate", "noise", "--n", "10", "--seed", "0", "--out", "env.txt"}) == 0);
    unsetenv("EPB_OUT_DIR");
    CHECK(fs::exists(out_dir / "env.txt"));
}

TEST_CASE("timing report with --repeat") {
    const auto dir = test::temp_dir();
    const auto graph_path = (dir / "g.txt").string();
    REQUIRE(run({"generate", "noise", "--n", "50", "--seed", "1", "--out", graph_path}) == 0);
    // --json carries per-phase mean and stddev over the requested runs
    CHECK(run({"bundle", "--input", graph_path, "--out", (dir / "d.json").string(), "--repeat",
               "3", "--json"}) == 0);
    CHECK(run({"bundle", "--input", graph_path, "--out", (dir / "d.json").string(), "--repeat",
               "0"}) == 1);
}

TEST_CASE("phase times sum to no more than the wall clock") {
    const auto dir = test::temp_dir();
    const auto graph_path = (dir / "g.txt").string();
    REQUIRE(run({"generate", "noise", "--n", "100", "--seed", "4", "--out", graph_path}) == 0);

    // capture the json report through a temp stdout redirect
    const auto json_path = (dir / "stdout.json").string();
    fflush(stdout);
    const int saved = dup(1);
    FILE* sink = freopen(json_path.c_str(), "w", stdout);
    REQUIRE(sink != nullptr);
    const auto t0 = std::chrono::steady_clock::now();
    const int code =
        run({"bundle", "--input", graph_path, "--out", (dir / "d.json").string(), "--json"});
    const double total_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    fflush(stdout);
    dup2(saved, 1);
    close(saved);
    REQUIRE(code == 0);

    const auto doc = nlohmann::json::parse(test::read_file(json_path));
    double phase_sum = 0.0;
    for (const auto& [name, phase] : doc["timing"].items()) {
        phase_sum += phase["mean_ms"].get<double>();
    }
    CHECK(phase_sum > 0.0);
    CHECK(phase_sum <= total_ms);
}

TEST_CASE("metrics accepts comma lists for --delta") {
    const auto dir = test::temp_dir();
    const auto graph_path = (dir / "g.txt").string();
    const auto drawing_path = (dir / "d.json").string();
    const auto metrics_path = (dir / "m.json").string();
    REQUIRE(run({"generate", "noise", "--n", "20", "--seed", "1", "--out", graph_path}) == 0);
    REQUIRE(run({"bundle", "--input", graph_path, "--out", drawing_path}) == 0);
    CHECK(run({"metrics", "--drawing", drawing_path, "--baseline", drawing_path, "--delta",
               "1,3", "--width", "400", "--out", metrics_path}) == 0);
    const auto doc = nlohmann::json::parse(test::read_file(metrics_path));
    CHECK(doc["amb"].contains("1"));
    CHECK(doc["amb"].contains("3"));
    CHECK_FALSE(doc["amb"].contains("2"));
}

TEST_CASE("trail sets work as drawings for metrics and render") {
    const auto dir = test::temp_dir();
    const auto trails = test::write_file(dir, "trails.txt",
                                         "0 0 0.5 0.4 1 0\n"
                                         "0 1 1 1\n"
                                         "1 0 0.5 0.2 0 1\n");
    const auto metrics_path = (dir / "m.json").string();
    CHECK(run({"metrics", "--drawing", trails, "--baseline", trails, "--width", "400", "--out",
               metrics_path}) == 0);
    const auto doc = nlohmann::json::parse(test::read_file(metrics_path));
    CHECK(doc["ink_ratio"].get<double>() == 1.0);
    CHECK(doc["distortion"]["mean"].get<double>() > 1.0); // curved trails
    CHECK(run({"render", "--drawing", trails, "--mode", "distortion", "--out",
               (dir / "t.svg").string()}) == 0);
    CHECK(fs::exists(dir / "t.svg"));
}

TEST_CASE("help text documents the defaults") {
    const std::string help = cli::help_text();
    for (const char* needle :
         {"--k", "2", "--d", "--smoothing", "--theta", "7.5", "--delta", "1..5", "--cell-px",
          "8", "--window", "3", "--gray-threshold", "1", "--width", "1600"}) {
        CAPTURE(needle);
        CHECK(help.find(needle) != std::string::npos);
    }
}

TEST_CASE("same seed and flags give byte-identical artifacts") {
    const auto dir_a = test::temp_dir();
    const auto dir_b = test::temp_dir();
    for (const auto& dir : {dir_a, dir_b}) {
        REQUIRE(run({"generate", "cubes", "--variant", "3R", "--n", "60", "--seed", "5", "--out",
                     (dir / "g.txt").string()}) == 0);
        REQUIRE(run({"bundle", "--input", (dir / "g.txt").string(), "--out",
                     (dir / "d.json").string(), "--straight-out",
                     (dir / "s.json").string()}) == 0);
        REQUIRE(run({"render", "--drawing", (dir / "d.json").string(), "--mode", "angle",
                     "--out", (dir / "d.svg").string(), "--raster",
                     (dir / "d.pgm").string()}) == 0);
    }
    for (const char* name : {"g.txt", "d.json", "s.json", "d.svg", "d.pgm"}) {
        CAPTURE(name);
        CHECK(test::read_file((dir_a / name).string()) ==
              test::read_file((dir_b / name).string()));
    }
}

TEST_CASE("drawing json round trip preserves the drawing") {
    const auto dir = test::temp_dir();
    const auto [g, layout] = test::random_embedded_graph(15, 25, 3);
    const Drawing d = straight_drawing(g, layout);
    const auto path = (dir / "d.json").string();
    save_drawing(path, d);
    const Drawing back = load_drawing(path);
    CHECK(back.graph.edge_count() == d.graph.edge_count());
    CHECK(back.graph.directed() == d.graph.directed());
    for (int v = 0; v < g.vertex_count(); ++v) {
        CHECK(back.layout.at(v) == d.layout.at(v));
    }
    for (size_t i = 0; i < d.curves.size(); ++i) {
        CHECK(back.curves[i].polyline == d.curves[i].polyline);
        CHECK(back.curves[i].bundled == d.curves[i].bundled);
    }
}
