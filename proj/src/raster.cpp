#include "epb/raster.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "epb/errors.hpp"

namespace epb {

long RasterImage::occupied(int threshold) const {
    long count = 0;
    for (const uint8_t v : pixels) {
        if (v >= threshold) ++count;
    }
    return count;
}

RasterTransform make_transform(const Bounds& bounds, int width_px, double margin_px) {
    if (bounds.empty || (bounds.width() == 0.0 && bounds.height() == 0.0)) {
        throw input_error("drawing has a degenerate bounding box");
    }
    const double content_w = width_px - 2.0 * margin_px;
    if (content_w <= 0) throw input_error("image width too small for the margin");

    RasterTransform t;
    // One uniform scale for both axes keeps the aspect ratio exact.
    t.scale = bounds.width() > 0.0 ? content_w / bounds.width() : content_w / bounds.height();
    t.offset_x = margin_px - bounds.lo.x * t.scale;
    t.offset_y = margin_px;
    t.max_y = bounds.hi.y;
    t.width = width_px;
    t.height = static_cast<int>(std::lround(bounds.height() * t.scale)) +
               static_cast<int>(2 * margin_px);
    t.height = std::max(t.height, 1);
    return t;
}

namespace {

/// (pixel index, coverage) contributions of one stroke, merged by max within
/// the stroke before they reach the image.
using Contributions = std::vector<std::pair<int32_t, float>>;

void stamp_segment(Contributions& out, const RasterTransform& t, Vec2 a, Vec2 b,
                   double half_width) {
    const double reach = half_width + 0.5;
    // Walk the segment in one-pixel steps and stamp the stroke neighborhood
    // of each step. Every pixel center within `reach` of the segment lies
    // within reach + 0.5 of some step point, so nothing is missed; coverage
    // still comes from the exact distance to the segment, and the per-stroke
    // max merge removes the overlap between steps.
    const double length = distance(a, b);
    const int steps = std::max(1, static_cast<int>(std::ceil(length)));
    const int box = static_cast<int>(std::ceil(reach + 0.5));
    for (int s = 0; s <= steps; ++s) {
        const Vec2 p = a + (static_cast<double>(s) / steps) * (b - a);
        const int cx = static_cast<int>(std::floor(p.x));
        const int cy = static_cast<int>(std::floor(p.y));
        const int x0 = std::max(0, cx - box);
        const int x1 = std::min(t.width - 1, cx + box);
        const int y0 = std::max(0, cy - box);
        const int y1 = std::min(t.height - 1, cy + box);
        for (int y = y0; y <= y1; ++y) {
            for (int x = x0; x <= x1; ++x) {
                const Vec2 center{x + 0.5, y + 0.5};
                const double d = distance_point_segment(center, a, b);
                const double cov = std::clamp(reach - d, 0.0, 1.0);
                if (cov > 0.0) {
                    out.emplace_back(y * t.width + x, static_cast<float>(cov));
                }
            }
        }
    }
}

void stamp_disk(Contributions& out, const RasterTransform& t, Vec2 c, double radius) {
    const double reach = radius + 0.5;
    const int x0 = std::max(0, static_cast<int>(std::floor(c.x - reach)));
    const int x1 = std::min(t.width - 1, static_cast<int>(std::ceil(c.x + reach)));
    const int y0 = std::max(0, static_cast<int>(std::floor(c.y - reach)));
    const int y1 = std::min(t.height - 1, static_cast<int>(std::ceil(c.y + reach)));
    for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
            const double d = distance(Vec2{x + 0.5, y + 0.5}, c);
            const double cov = std::clamp(reach - d, 0.0, 1.0);
            if (cov > 0.0) {
                out.emplace_back(y * t.width + x, static_cast<float>(cov));
            }
        }
    }
}

void blend_max_then_add(RasterImage& img, Contributions& contributions) {
    std::sort(contributions.begin(), contributions.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    size_t i = 0;
    while (i < contributions.size()) {
        const int32_t index = contributions[i].first;
        float cov = contributions[i].second;
        while (++i < contributions.size() && contributions[i].first == index) {
            cov = std::max(cov, contributions[i].second);
        }
        const int value = img.pixels[static_cast<size_t>(index)] +
                          static_cast<int>(std::lround(cov * 255.0));
        img.pixels[static_cast<size_t>(index)] = static_cast<uint8_t>(std::min(value, 255));
    }
    contributions.clear();
}

} // namespace

RasterImage rasterize_with(const Drawing& drawing, const RasterTransform& t, double line_width_px,
                           double vertex_diameter_px, bool draw_vertices) {
    RasterImage img;
    img.width = t.width;
    img.height = t.height;
    img.pixels.assign(static_cast<size_t>(t.width) * t.height, 0);

    Contributions scratch;
    for (const EdgeCurve& curve : drawing.curves) {
        for (size_t i = 0; i + 1 < curve.polyline.size(); ++i) {
            stamp_segment(scratch, t, t.to_pixel(curve.polyline[i]),
                          t.to_pixel(curve.polyline[i + 1]), line_width_px / 2.0);
        }
        blend_max_then_add(img, scratch);
    }
    if (draw_vertices) {
        for (const Vec2& p : drawing.layout.positions) {
            stamp_disk(scratch, t, t.to_pixel(p), vertex_diameter_px / 2.0);
            blend_max_then_add(img, scratch);
        }
    }
    return img;
}

RasterImage rasterize(const Drawing& drawing, int width_px, double line_width_px,
                      double vertex_diameter_px, bool draw_vertices) {
    const RasterTransform t = make_transform(drawing.bounds(), width_px, kRasterMarginPx);
    return rasterize_with(drawing, t, line_width_px, vertex_diameter_px, draw_vertices);
}

void write_pgm(const std::string& path, const RasterImage& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write " + path);
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
    if (!out) throw input_error("write failed: " + path);
}

RasterImage read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open " + path);
    std::string magic;
    in >> magic;
    if (magic != "P5") throw input_error(path + ": not a binary PGM");
    auto next_int = [&]() {
        int value = 0;
        in >> std::ws;
        while (in.peek() == '#') {
            std::string comment;
            std::getline(in, comment);
            in >> std::ws;
        }
        if (!(in >> value)) throw input_error(path + ": malformed PGM header");
        return value;
    };
    RasterImage img;
    img.width = next_int();
    img.height = next_int();
    const int maxval = next_int();
    if (img.width <= 0 || img.height <= 0 || maxval != 255) {
        throw input_error(path + ": unsupported PGM header");
    }
    in.get(); // single whitespace after maxval
    img.pixels.resize(static_cast<size_t>(img.width) * img.height);
    in.read(reinterpret_cast<char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.pixels.size())) {
        throw input_error(path + ": truncated PGM data");
    }
    return img;
}

RasterImage inverted(const RasterImage& img) {
    RasterImage out = img;
    for (uint8_t& v : out.pixels) v = static_cast<uint8_t>(255 - v);
    return out;
}

} // namespace epb
