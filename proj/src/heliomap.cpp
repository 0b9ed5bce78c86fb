#include "catbench/heliomap.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <numbers>
#include <set>

#include <fmt/format.h>

#include "catbench/error.hpp"

namespace catbench {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

PrestigeOrder parse_prestige_order(std::istream& in) {
  PrestigeOrder order;
  std::set<std::string, std::less<>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    view = trim(view);
    if (view.empty() || view.front() == '#') continue;
    if (!seen.emplace(view).second) {
      throw DuplicateError(fmt::format("line {}: category '{}' listed twice", line_no, view));
    }
    order.categories.emplace_back(view);
  }
  return order;
}

PrestigeOrder load_prestige_order(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(fmt::format("cannot open prestige file '{}'", path));
  return parse_prestige_order(in);
}

HelioLayout layout_map(const BenchmarkResult& result, const std::optional<PrestigeOrder>& order,
                       const LayoutOptions& options) {
  if (result.ranking.empty()) throw InvalidInputError("cannot lay out an empty ranking");
  if (!(options.r_min >= 0.0 && options.r_min <= options.r_max)) {
    throw InvalidInputError(
        fmt::format("radius bounds [{}, {}] out of order", options.r_min, options.r_max));
  }

  std::vector<RankedCategory> entries = result.ranking;
  if (order) {
    std::map<std::string_view, std::size_t> prestige;
    for (std::size_t i = 0; i < order->categories.size(); ++i) {
      prestige.emplace(order->categories[i], i);
    }
    const auto key = [&](const RankedCategory& e) {
      const auto it = prestige.find(e.category);
      return it == prestige.end() ? order->categories.size() : it->second;
    };
    std::sort(entries.begin(), entries.end(), [&](const auto& a, const auto& b) {
      const auto ka = key(a), kb = key(b);
      if (ka != kb) return ka < kb;
      if (a.gain != b.gain) return a.gain < b.gain;
      return a.category < b.category;
    });
  } else {
    sort_ranking(entries);
  }

  const auto [lo, hi] = std::minmax_element(
      entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.gain < b.gain; });
  const double g_min = lo->gain;
  const double g_max = hi->gain;
  const double step = 360.0 / static_cast<double>(entries.size());

  HelioLayout layout;
  layout.center_label = result.reference;
  layout.r_min = options.r_min;
  layout.r_max = options.r_max;
  layout.dots.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    HelioDot dot;
    dot.label = entries[i].category;
    dot.gain = entries[i].gain;
    dot.angle_degrees = 90.0 - static_cast<double>(i) * step;
    dot.radius_fraction =
        g_max > g_min ? options.r_min + (options.r_max - options.r_min) *
                                            (entries[i].gain - g_min) / (g_max - g_min)
                      : options.r_min;
    layout.dots.push_back(std::move(dot));
  }
  return layout;
}

namespace {

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

// Fixed two-decimal coordinates; "-0.00" is folded to "0.00".
std::string num(double v) {
  auto s = fmt::format("{:.2f}", v);
  if (s == "-0.00") s = "0.00";
  return s;
}

}  // namespace

std::string render_svg(const HelioLayout& layout, const SvgStyle& style) {
  if (layout.dots.empty()) throw InvalidInputError("cannot render an empty layout");

  const double cx = style.width / 2.0;
  const double cy = style.height / 2.0;
  const double full = std::min(style.width, style.height) / 2.0 - style.margin;
  if (!(full > 0.0)) throw InvalidInputError("margin leaves no room for the map");

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  svg += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\">\n",
      num(style.width), num(style.height));
  svg += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>\n",
                     num(style.width), num(style.height));

  if (style.show_rings) {
    svg += fmt::format("<g class=\"rings\" fill=\"none\" stroke=\"{}\" stroke-width=\"1\">\n",
                       xml_escape(style.ring_color));
    for (const double f : {0.25, 0.5, 0.75, 1.0}) {
      svg += fmt::format("<circle class=\"ring\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>\n", num(cx),
                         num(cy), num(f * full));
    }
    svg += "</g>\n";
  }

  svg += fmt::format("<g class=\"dots\" font-family=\"{}\" font-size=\"{}\">\n",
                     xml_escape(style.font_family), num(style.font_size));
  const double label_gap = style.dot_radius + 4.0;
  for (std::size_t i = 0; i < layout.dots.size(); ++i) {
    const auto& dot = layout.dots[i];
    const double theta = dot.angle_degrees * std::numbers::pi / 180.0;
    const double r = dot.radius_fraction * full;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double x = cx + r * c;
    const double y = cy - r * s;

    // Even dots carry their label outside the dot, odd ones inside.
    const bool outer = i % 2 == 0;
    const double lr = outer ? r + label_gap : std::max(0.0, r - label_gap);
    const double lx = cx + lr * c;
    const double ly = cy - lr * s;
    std::string_view anchor = "middle";
    if (c > 0.05) anchor = outer ? "start" : "end";
    if (c < -0.05) anchor = outer ? "end" : "start";

    svg += fmt::format("<circle class=\"dot\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\"/>\n",
                       num(x), num(y), num(style.dot_radius), xml_escape(style.dot_color));
    svg += fmt::format(
        "<text class=\"label\" x=\"{}\" y=\"{}\" text-anchor=\"{}\" "
        "dominant-baseline=\"middle\">{}</text>\n",
        num(lx), num(ly), anchor, xml_escape(dot.label));
  }
  svg += "</g>\n";

  svg += fmt::format(
      "<circle class=\"center\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#d62728\"/>\n", num(cx),
      num(cy), num(style.dot_radius * 1.6));
  svg += fmt::format(
      "<text class=\"center-label\" x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-family=\"{}\" "
      "font-size=\"{}\" font-weight=\"bold\">{}</text>\n",
      num(cx), num(cy + style.dot_radius * 1.6 + style.center_font_size + 2.0),
      xml_escape(style.font_family), num(style.center_font_size),
      xml_escape(layout.center_label));
  svg += "</svg>\n";
  return svg;
}

}  // namespace catbench
