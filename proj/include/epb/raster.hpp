#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "epb/drawing.hpp"

namespace epb {

/// Grayscale bitmap. Ink convention: 0 is blank, 255 is full ink.
struct RasterImage {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> pixels; // row major, width * height

    uint8_t at(int x, int y) const { return pixels[static_cast<size_t>(y) * width + x]; }
    uint8_t& at(int x, int y) { return pixels[static_cast<size_t>(y) * width + x]; }

    /// Number of pixels with value >= threshold.
    long occupied(int threshold) const;
};

/// Mapping from drawing coordinates to pixel coordinates: uniform scale to a
/// fixed image width (aspect ratio preserved exactly), y flipped, plus a
/// fixed margin so border strokes are not clipped.
struct RasterTransform {
    double scale = 1.0;
    double offset_x = 0.0;
    double offset_y = 0.0; // applied after the y flip
    double max_y = 0.0;    // drawing-space y that maps to the top
    int width = 0;
    int height = 0;

    Vec2 to_pixel(Vec2 p) const {
        return {offset_x + (p.x) * scale, offset_y + (max_y - p.y) * scale};
    }
};

/// Border kept free of content so strokes at the bounding box are not
/// clipped. Shared by the rasterizer, the SVG renderer and the ambiguity
/// grid so they all see the same pixel space.
constexpr double kRasterMarginPx = 4.0;

/// Transform for a drawing-space bounding box. Throws input_error when the
/// box is degenerate (all points coincident).
RasterTransform make_transform(const Bounds& bounds, int width_px, double margin_px);

/// Anti-aliased grayscale rendering of all edge polylines (and optionally
/// vertex disks) at the given stroke width. Coverage is combined by maximum
/// within one edge and saturating addition across edges and disks, so ink
/// accumulates toward 255. Deterministic.
RasterImage rasterize(const Drawing& drawing, int width_px, double line_width_px,
                      double vertex_diameter_px, bool draw_vertices);

/// rasterize with an externally fixed transform (shared between drawings).
RasterImage rasterize_with(const Drawing& drawing, const RasterTransform& t, double line_width_px,
                           double vertex_diameter_px, bool draw_vertices);

void write_pgm(const std::string& path, const RasterImage& img);
RasterImage read_pgm(const std::string& path);

/// Invert (ink-on-white view) for human consumption; metrics use the raw
/// ink-is-high image.
RasterImage inverted(const RasterImage& img);

} // namespace epb
