#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "catbench/benchmarking.hpp"

namespace catbench {

/// Externally supplied category ordering, highest multidimensional prestige
/// first.
struct PrestigeOrder {
  std::vector<std::string> categories;
};

/// One category name per line; blank lines and lines starting with `#` are
/// ignored; surrounding whitespace is trimmed. Throws DuplicateError on a
/// repeated name.
PrestigeOrder parse_prestige_order(std::istream& in);
PrestigeOrder load_prestige_order(const std::string& path);

struct HelioDot {
  std::string label;
  double angle_degrees = 0.0;
  double radius_fraction = 0.0;
  double gain = 0.0;
};

struct HelioLayout {
  std::string center_label;
  std::vector<HelioDot> dots;
  double r_min = 0.15;
  double r_max = 1.0;
};

struct LayoutOptions {
  double r_min = 0.15;
  double r_max = 1.0;
};

/// Places the ranking's categories clockwise from the top of the circle.
/// Dot i sits at 90 - i * 360 / count degrees. With a prestige order, dots
/// follow it and unlisted categories come last by ascending gain; without
/// one, dots follow ascending gain. Radius is affine in gain between r_min
/// and r_max (all r_min when the gains are equal).
/// Throws InvalidInputError on an empty ranking.
HelioLayout layout_map(const BenchmarkResult& result,
                       const std::optional<PrestigeOrder>& order = std::nullopt,
                       const LayoutOptions& options = {});

struct SvgStyle {
  double width = 800.0;
  double height = 800.0;
  double margin = 140.0;
  std::string font_family = "Helvetica, Arial, sans-serif";
  double font_size = 11.0;
  double center_font_size = 14.0;
  double dot_radius = 5.0;
  bool show_rings = true;
  std::string dot_color = "#1f77b4";
  std::string ring_color = "#cccccc";
};

/// Self-contained SVG 1.1 document. Pure function of its arguments.
std::string render_svg(const HelioLayout& layout, const SvgStyle& style = {});

}  // namespace catbench
