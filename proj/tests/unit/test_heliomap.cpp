#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <regex>
#include <sstream>

#include <fmt/format.h>

#include "catbench/error.hpp"
#include "catbench/heliomap.hpp"

using namespace catbench;

namespace {

BenchmarkResult result_with(std::vector<RankedCategory> ranking) {
  BenchmarkResult r;
  r.reference = "Cell Biology";
  r.ranking = std::move(ranking);
  sort_ranking(r.ranking);
  return r;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

std::string unescape(std::string s) {
  const std::pair<std::string, std::string> entities[] = {
      {"&lt;", "<"}, {"&gt;", ">"}, {"&quot;", "\""}, {"&apos;", "'"}, {"&amp;", "&"}};
  for (const auto& [from, to] : entities) {
    for (auto pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
      s.replace(pos, from.size(), to);
    }
  }
  return s;
}

std::vector<std::string> labels(const std::string& svg) {
  static const std::regex label(R"re(<text class="label"[^>]*>([^<]*)</text>)re");
  std::vector<std::string> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), label); it != std::sregex_iterator();
       ++it) {
    out.push_back(unescape((*it)[1].str()));
  }
  return out;
}

}  // namespace

TEST_CASE("four dots without a prestige order") {
  const auto layout = layout_map(result_with({{"a", 0.1}, {"b", 0.2}, {"c", 0.3}, {"d", 0.4}}));
  REQUIRE(layout.dots.size() == 4);
  CHECK(layout.center_label == "Cell Biology");
  CHECK(layout.dots[0].angle_degrees == 90.0);
  CHECK(layout.dots[1].angle_degrees == 0.0);
  CHECK(layout.dots[2].angle_degrees == -90.0);
  CHECK(layout.dots[3].angle_degrees == -180.0);
  CHECK(layout.dots[0].label == "a");
  CHECK(layout.dots[3].label == "d");
}

TEST_CASE("equal gains sit on the inner radius") {
  const auto layout = layout_map(result_with({{"a", 0.1}, {"b", 0.1}, {"c", 0.1}}));
  for (const auto& d : layout.dots) CHECK(d.radius_fraction == 0.15);
}

TEST_CASE("radius is affine in gain") {
  const auto layout = layout_map(result_with({{"a", 0.0}, {"b", 0.5}, {"c", 1.0}}));
  CHECK(layout.dots[0].radius_fraction == doctest::Approx(0.15).epsilon(1e-15));
  CHECK(layout.dots[1].radius_fraction == doctest::Approx(0.575).epsilon(1e-15));
  CHECK(layout.dots[2].radius_fraction == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("prestige order drives the clockwise order") {
  const auto r = result_with({{"a", 0.1}, {"b", 0.2}, {"c", 0.3}, {"d", 0.4}, {"e", 0.05}});
  const PrestigeOrder order{{"c", "zzz", "a", "d"}};
  const auto layout = layout_map(r, order);
  std::vector<std::string> got;
  for (const auto& d : layout.dots) got.push_back(d.label);
  // Unlisted b and e follow, by ascending gain.
  CHECK(got == std::vector<std::string>{"c", "a", "d", "e", "b"});
  // Radii still follow gain, not position.
  CHECK(layout.dots[3].radius_fraction == 0.15);
  CHECK(layout.dots[2].radius_fraction == 1.0);
}

TEST_CASE("layout invariants on random rankings") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> gain(0.0, 2.0);
  for (std::size_t n = 1; n <= 60; ++n) {
    std::vector<RankedCategory> ranking;
    for (std::size_t i = 0; i < n; ++i) ranking.push_back({fmt::format("c{}", i), gain(rng)});
    const auto layout = layout_map(result_with(ranking));
    const double step = 360.0 / static_cast<double>(n);
    CHECK(layout.dots[0].angle_degrees == 90.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      CHECK(std::fabs((layout.dots[i].angle_degrees - layout.dots[i + 1].angle_degrees) - step) <
            1e-9);
    }
    for (const auto& d : layout.dots) {
      CHECK(d.radius_fraction >= layout.r_min);
      CHECK(d.radius_fraction <= layout.r_max);
    }
    for (const auto& a : layout.dots) {
      for (const auto& b : layout.dots) {
        if (a.gain < b.gain) CHECK(a.radius_fraction <= b.radius_fraction);
      }
    }
  }
}

TEST_CASE("empty ranking is rejected") {
  CHECK_THROWS_AS(layout_map(BenchmarkResult{}), InvalidInputError);
}

TEST_CASE("prestige file parsing") {
  std::istringstream in("# comment\n  Alpha  \n\nBeta\r\n#Gamma\n");
  CHECK(parse_prestige_order(in).categories == std::vector<std::string>{"Alpha", "Beta"});
  std::istringstream dup("A\nB\nA\n");
  CHECK_THROWS_AS(parse_prestige_order(dup), DuplicateError);
  CHECK(load_prestige_order(std::string(CATBENCH_FIXTURES) + "/prestige.txt").categories.front() ==
        "Gamma, Applied");
  CHECK_THROWS_AS(load_prestige_order("/nonexistent"), InputError);
}

TEST_CASE("svg element counts") {
  const auto layout =
      layout_map(result_with({{"a", 0.1}, {"b", 0.2}, {"c & d", 0.3}, {"<e>", 0.4}}));
  SvgStyle no_rings;
  no_rings.show_rings = false;
  const auto svg = render_svg(layout, no_rings);
  CHECK(count(svg, "<circle") == 5);
  CHECK(count(svg, "class=\"dot\"") == 4);
  CHECK(count(svg, "class=\"center\"") == 1);

  const auto with_rings = render_svg(layout);
  CHECK(count(with_rings, "class=\"ring\"") == 4);
  CHECK(with_rings.starts_with("<?xml"));
  CHECK(with_rings.find("width=\"800.00\"") != std::string::npos);
  CHECK(with_rings.find("c &amp; d") != std::string::npos);
}

TEST_CASE("svg labels match categories verbatim, once each") {
  std::vector<RankedCategory> ranking;
  for (int i = 0; i < 30; ++i) ranking.push_back({fmt::format("Field & \"{}\"", i), 0.01 * i});
  const auto layout = layout_map(result_with(ranking));
  const auto svg = render_svg(layout);
  auto got = labels(svg);
  REQUIRE(got.size() == 30);
  for (std::size_t i = 0; i < 30; ++i) {
    CHECK_FALSE(got[i].empty());
    CHECK(got[i] == layout.dots[i].label);
  }
  std::sort(got.begin(), got.end());
  CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
}

TEST_CASE("rendering is deterministic") {
  const auto layout = layout_map(result_with({{"a", 0.1}, {"b", 0.7}, {"c", 0.3}}));
  CHECK(render_svg(layout) == render_svg(layout));
}
