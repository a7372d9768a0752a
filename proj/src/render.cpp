#include "epb/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "epb/errors.hpp"
#include "epb/metrics.hpp"

namespace epb {

namespace {

std::string hex_color(Rgb c) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", c.r, c.g, c.b);
    return buf;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

} // namespace

Rgb angle_color(double angle_rad, bool fold) {
    const double period = fold ? std::numbers::pi : 2.0 * std::numbers::pi;
    double a = std::fmod(angle_rad, period);
    if (a < 0.0) a += period;
    const int index = std::min(255, static_cast<int>(a / period * 256.0));
    return cyclic_palette()[static_cast<size_t>(index)];
}

Rgb sequential_color(double value, double min_value, double max_value) {
    double norm = 0.0;
    if (max_value > min_value) {
        norm = std::clamp((value - min_value) / (max_value - min_value), 0.0, 1.0);
    }
    const int index = static_cast<int>(std::lround(norm * 255.0));
    return sequential_palette()[static_cast<size_t>(index)];
}

std::string render_svg_colored(const Drawing& drawing, const RenderStyle& style,
                               const std::vector<Rgb>& edge_colors) {
    if (static_cast<int>(edge_colors.size()) != drawing.graph.edge_count()) {
        throw internal_error("one stroke color per edge required");
    }
    const RasterTransform t = make_transform(drawing.bounds(), style.width_px, kRasterMarginPx);
    const bool dark = style.background == Background::black;
    const std::string bg = dark ? "#000000" : "#ffffff";
    const std::string vertex_fill = dark ? "#ffffff" : "#000000";

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << t.width << "\" height=\""
        << t.height << "\" viewBox=\"0 0 " << t.width << " " << t.height << "\">\n";
    svg << "<rect width=\"" << t.width << "\" height=\"" << t.height << "\" fill=\"" << bg
        << "\"/>\n";
    for (int id = 0; id < drawing.graph.edge_count(); ++id) {
        const auto& polyline = drawing.curves[static_cast<size_t>(id)].polyline;
        if (polyline.size() < 2) continue;
        svg << "<path d=\"";
        for (size_t i = 0; i < polyline.size(); ++i) {
            const Vec2 p = t.to_pixel(polyline[i]);
            svg << (i == 0 ? "M" : " L") << fmt(p.x) << "," << fmt(p.y);
        }
        svg << "\" fill=\"none\" stroke=\"" << hex_color(edge_colors[static_cast<size_t>(id)])
            << "\" stroke-width=\"" << fmt(style.line_width_px) << "\"/>\n";
    }
    const double radius = style.vertex_diameter_px / 2.0;
    for (const Vec2& p : drawing.layout.positions) {
        const Vec2 c = t.to_pixel(p);
        svg << "<circle cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(c.y) << "\" r=\"" << fmt(radius)
            << "\" fill=\"" << vertex_fill << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string render_svg(const Drawing& drawing, const RenderStyle& style) {
    const int edge_count = drawing.graph.edge_count();
    std::vector<Rgb> colors(static_cast<size_t>(edge_count));
    switch (style.mode) {
        case RenderMode::plain: {
            const Rgb stroke =
                style.background == Background::black ? Rgb{255, 255, 255} : Rgb{0, 0, 0};
            std::fill(colors.begin(), colors.end(), stroke);
            break;
        }
        case RenderMode::angle_colormap: {
            for (int id = 0; id < edge_count; ++id) {
                const Edge& e = drawing.graph.edge(id);
                const Vec2 d = drawing.layout.at(e.target) - drawing.layout.at(e.source);
                colors[static_cast<size_t>(id)] =
                    angle_color(std::atan2(d.y, d.x), style.fold_angle);
            }
            break;
        }
        case RenderMode::distortion_colormap: {
            const DistortionResult dist = distortion(drawing);
            const auto [lo, hi] = std::minmax_element(dist.per_edge.begin(), dist.per_edge.end());
            for (int id = 0; id < edge_count; ++id) {
                colors[static_cast<size_t>(id)] =
                    sequential_color(dist.per_edge[static_cast<size_t>(id)], *lo, *hi);
            }
            break;
        }
    }
    return render_svg_colored(drawing, style, colors);
}

std::vector<std::string> distortion_heatmap(const std::vector<const Drawing*>& drawings,
                                            const std::vector<std::vector<double>>& per_edge,
                                            const RenderStyle& style) {
    if (drawings.empty() || drawings.size() != per_edge.size()) {
        throw input_error("distortion heatmap needs one distortion vector per drawing");
    }
    // Shared normalization across the whole set.
    double lo = per_edge.front().empty() ? 1.0 : per_edge.front().front();
    double hi = lo;
    for (const auto& values : per_edge) {
        for (const double v : values) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    std::vector<std::string> out;
    out.reserve(drawings.size());
    for (size_t i = 0; i < drawings.size(); ++i) {
        std::vector<Rgb> colors;
        colors.reserve(per_edge[i].size());
        for (const double v : per_edge[i]) colors.push_back(sequential_color(v, lo, hi));
        out.push_back(render_svg_colored(*drawings[i], style, colors));
    }
    return out;
}

RasterImage ambiguity_heatmap(const std::vector<int>& cell_counts, int cells_x, int cells_y,
                              int cell_px, int global_max) {
    if (static_cast<size_t>(cells_x) * cells_y != cell_counts.size()) {
        throw input_error("cell count grid does not match its dimensions");
    }
    for (const int c : cell_counts) {
        if (c > global_max) throw input_error("global max below a cell count");
    }
    RasterImage img;
    img.width = cells_x * cell_px;
    img.height = cells_y * cell_px;
    img.pixels.assign(static_cast<size_t>(img.width) * img.height, 0);
    if (global_max <= 0) return img; // all black
    for (int cy = 0; cy < cells_y; ++cy) {
        for (int cx = 0; cx < cells_x; ++cx) {
            const int count = cell_counts[static_cast<size_t>(cy) * cells_x + cx];
            const auto value = static_cast<uint8_t>(
                std::lround(255.0 * count / static_cast<double>(global_max)));
            if (value == 0) continue;
            for (int y = cy * cell_px; y < (cy + 1) * cell_px; ++y) {
                for (int x = cx * cell_px; x < (cx + 1) * cell_px; ++x) {
                    img.at(x, y) = value;
                }
            }
        }
    }
    return img;
}

} // namespace epb
