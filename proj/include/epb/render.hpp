#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "epb/drawing.hpp"
#include "epb/raster.hpp"

namespace epb {

struct Rgb {
    uint8_t r = 0;
    uint8_t g = 0;
    uint8_t b = 0;

    friend bool operator==(Rgb a, Rgb b) { return a.r == b.r && a.g == b.g && a.b == b.b; }
};

/// 256-entry palettes shipped as static data (see resources/*.csv for the
/// same tables in CSV form).
std::span<const Rgb, 256> cyclic_palette();
std::span<const Rgb, 256> sequential_palette();

enum class RenderMode { plain, angle_colormap, distortion_colormap };
enum class Background { white, black };

struct RenderStyle {
    int width_px = 1600;
    double line_width_px = 1.0;
    double vertex_diameter_px = 4.0;
    RenderMode mode = RenderMode::plain;
    Background background = Background::white;
    /// Fold edge angles to [0, pi) so direction does not matter. Defaults to
    /// folding; directed drawings may use the full turn instead.
    bool fold_angle = true;
};

/// Color for an edge angle (radians, from the straight-line drawing, not the
/// curve). Cyclic over 2*pi, or over pi when folded.
Rgb angle_color(double angle_rad, bool fold = true);

/// Sequential color for a value normalized against [min, max]; min == max
/// maps everything to the palette minimum.
Rgb sequential_color(double value, double min_value, double max_value);

/// SVG document: one path per edge in ascending edge id order, then one
/// circle per vertex. Bit-stable output for fixed inputs.
std::string render_svg(const Drawing& drawing, const RenderStyle& style);

/// render_svg with explicit per-edge stroke colors (size = edge count).
std::string render_svg_colored(const Drawing& drawing, const RenderStyle& style,
                               const std::vector<Rgb>& edge_colors);

/// One SVG per drawing, edges colored by their distortion on a sequential
/// scale normalized by the shared min and max across the whole set.
std::vector<std::string> distortion_heatmap(const std::vector<const Drawing*>& drawings,
                                            const std::vector<std::vector<double>>& per_edge,
                                            const RenderStyle& style);

/// Grayscale heatmap of per-cell ambiguous pair counts: pixel = 255 * count /
/// global_max (0 when global_max is 0), each cell drawn as a cell_px block.
RasterImage ambiguity_heatmap(const std::vector<int>& cell_counts, int cells_x, int cells_y,
                              int cell_px, int global_max);

} // namespace epb
