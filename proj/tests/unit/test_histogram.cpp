#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "catbench/error.hpp"
#include "catbench/histogram.hpp"
#include "oracle.hpp"

using namespace catbench;

namespace {

Corpus parse(const std::string& body) {
  std::istringstream in("journal,category,impact_factor,eigenfactor,immediacy\n" + body);
  return parse_corpus(in);
}

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

}  // namespace

TEST_CASE("linear spec edges") {
  const BinSpec spec{0.0, 4.0, 2, Scale::Linear};
  CHECK(spec.edges() == std::vector<double>{0.0, 2.0, 4.0});
  CHECK_THROWS_AS((BinSpec{0.0, 1.0, 1, Scale::Linear}.validate()), InvalidInputError);
  CHECK_THROWS_AS((BinSpec{2.0, 1.0, 4, Scale::Linear}.validate()), InvalidInputError);
  CHECK_THROWS_AS((BinSpec{0.0, 1.0, 4, Scale::Logarithmic}.validate()), InvalidInputError);
}

TEST_CASE("logarithmic spec edges are geometric") {
  const BinSpec spec{0.001, 10.0, 4, Scale::Logarithmic};
  const auto e = spec.edges();
  REQUIRE(e.size() == 5);
  CHECK(e.front() == 0.001);
  CHECK(e.back() == 10.0);
  for (std::size_t i = 1; i < e.size(); ++i) CHECK(e[i] / e[i - 1] == doctest::Approx(10.0));
}

TEST_CASE("pooled spec over the corpus") {
  SUBCASE("max 10, 20 linear bins") {
    const auto c = parse("A,X,10.0,1,1\nB,Y,2.5,1,1\nC,Y,,1,1\n");
    const auto spec = pooled_bin_spec(c, Indicator::ImpactFactor, 20, Scale::Linear);
    CHECK(spec.lower == 0.0);
    CHECK(spec.upper == doctest::Approx(10.0 * (1 + kUpperMargin)).epsilon(1e-15));
    CHECK(spec.upper > 10.0);
    const auto e = spec.edges();
    REQUIRE(e.size() == 21);
    for (std::size_t i = 0; i <= 20; ++i) CHECK(std::fabs(e[i] - 0.5 * i) < 1e-7);
    // The maximum lands inside the last bin without clamping.
    const auto h = build_histogram(std::vector<double>{10.0}, spec, 0.0);
    CHECK(h.counts.back() == 1);
    CHECK(h.clamped() == 0);
  }
  SUBCASE("single distinct value") {
    const auto c = parse("A,X,3.0,1,1\nB,X,3.0,1,1\n");
    const auto spec = pooled_bin_spec(c, Indicator::ImpactFactor, 20, Scale::Linear);
    CHECK(spec.lower == 0.0);
    CHECK(spec.upper > 3.0);
    CHECK(spec.upper < 3.0 + 1e-8);
    CHECK(spec.bin_count == 20);
  }
  SUBCASE("all values missing") {
    const auto c = parse("A,X,,1,1\nB,X,,1,1\n");
    CHECK_THROWS_AS(pooled_bin_spec(c, Indicator::ImpactFactor, 20, Scale::Linear),
                    EmptyDataError);
  }
  SUBCASE("logarithmic lower bound is the smallest positive value") {
    const auto c = parse("A,X,1,0,1\nB,X,1,0.0004,1\nC,X,1,0.2,1\n");
    const auto spec = pooled_bin_spec(c, Indicator::Eigenfactor, 10, Scale::Logarithmic);
    CHECK(spec.lower == 0.0004);
    CHECK(spec.upper > 0.2);
    const auto h = build_histogram(std::vector<double>{0.0, 0.0004, 0.2}, spec, 0.0);
    CHECK(h.counts.front() == 2);
    CHECK(h.counts.back() == 1);
    CHECK(h.clamped_below == 1);  // the zero
  }
  SUBCASE("all zeros") {
    const auto c = parse("A,X,0,0,1\n");
    const auto spec = pooled_bin_spec(c, Indicator::ImpactFactor, 4, Scale::Linear);
    CHECK(spec.upper > 0.0);
    CHECK_THROWS_AS(pooled_bin_spec(c, Indicator::Eigenfactor, 4, Scale::Logarithmic),
                    EmptyDataError);
  }
}

TEST_CASE("unsmoothed histogram is the empirical frequency") {
  const BinSpec spec{0.0, 4.0, 2, Scale::Linear};
  const auto h = build_histogram(std::vector<double>{1.0, 1.0, 3.0}, spec, 0.0);
  CHECK(h.counts == std::vector<std::size_t>{2, 1});
  CHECK(h.probabilities[0] == 2.0 / 3.0);
  CHECK(h.probabilities[1] == 1.0 / 3.0);
  CHECK(h.sample_count == 3);
}

TEST_CASE("pseudo-count smoothing") {
  const BinSpec spec{0.0, 4.0, 2, Scale::Linear};
  // counts [2, 1], alpha 1: (2+1)/(3+2), (1+1)/(3+2).
  const auto h = build_histogram(std::vector<double>{1.0, 1.0, 3.0}, spec, 1.0);
  CHECK(h.probabilities[0] == doctest::Approx(3.0 / 5.0).epsilon(1e-15));
  CHECK(h.probabilities[1] == doctest::Approx(2.0 / 5.0).epsilon(1e-15));

  const auto uniform = build_histogram(std::vector<double>{}, BinSpec{0, 1, 4}, 1.0);
  for (const double p : uniform.probabilities) CHECK(p == 0.25);

  CHECK_THROWS_AS(build_histogram(std::vector<double>{}, spec, 0.0), EmptyDataError);
  CHECK_THROWS_AS(build_histogram(std::vector<double>{1.0}, spec, -0.5), InvalidInputError);
}

TEST_CASE("values outside the spec clamp to the end bins and are tallied") {
  const BinSpec spec{1.0, 3.0, 2, Scale::Linear};
  const auto h = build_histogram(std::vector<double>{0.5, 1.0, 2.0, 3.0, 9.0}, spec, 0.0);
  CHECK(h.counts == std::vector<std::size_t>{2, 3});
  CHECK(h.clamped_below == 1);
  CHECK(h.clamped_above == 2);
}

TEST_CASE("bin edges are half-open") {
  const BinSpec spec{0.0, 8.0, 8, Scale::Linear};
  const auto e = spec.edges();
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(bin_index(e, static_cast<double>(i)) == i);
    CHECK(bin_index(e, static_cast<double>(i) + 0.999) == i);
  }
}

TEST_CASE("properties over random inputs") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> value(0.0, 16.0);
  std::uniform_int_distribution<std::size_t> size(0, 60);
  std::uniform_int_distribution<std::size_t> bins(2, 50);
  std::uniform_real_distribution<double> alpha(0.0, 5.0);

  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> values(size(rng));
    for (auto& v : values) v = value(rng);
    const BinSpec spec{0.0, 16.0, bins(rng), Scale::Linear};
    const double a = values.empty() ? 0.5 + alpha(rng) : alpha(rng);
    const auto h = build_histogram(values, spec, a);

    CHECK(std::fabs(sum(h.probabilities) - 1.0) < 1e-12);
    for (const double p : h.probabilities) {
      CHECK(p >= 0.0);
      if (a > 0.0) CHECK(p > 0.0);
    }
    CHECK(std::accumulate(h.counts.begin(), h.counts.end(), std::size_t{0}) == values.size());

    // Power-of-two rescaling is exact, so bin membership must not move.
    for (const double c : {0.25, 2.0, 8.0}) {
      std::vector<double> scaled = values;
      for (auto& v : scaled) v *= c;
      const BinSpec scaled_spec{spec.lower * c, spec.upper * c, spec.bin_count, Scale::Linear};
      CHECK(build_histogram(scaled, scaled_spec, a).probabilities == h.probabilities);
    }
  }
}

TEST_CASE("counts agree with a linear-scan oracle") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> quarter(-4, 70);  // some values out of range
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> values(20);
    for (auto& v : values) v = 0.25 * quarter(rng);
    const BinSpec spec{0.0, 16.0, 8, Scale::Linear};
    const auto h = build_histogram(values, spec, 0.0);
    CHECK(h.counts == testing::count_oracle(values, 0.0, 16.0, 8));
  }
}

TEST_CASE("large pseudo-count approaches uniform") {
  const BinSpec spec{0.0, 4.0, 7, Scale::Linear};
  const auto h = build_histogram(std::vector<double>{0.1, 0.2, 3.9}, spec, 1e9);
  for (const double p : h.probabilities) CHECK(std::fabs(p - 1.0 / 7.0) < 1e-6);
}

TEST_CASE("histogram json") {
  const auto h = build_histogram(std::vector<double>{1.0, 5.0}, BinSpec{0, 4, 2}, 0.5);
  const auto j = to_json(h);
  CHECK(j["counts"] == std::vector<std::size_t>{1, 1});
  CHECK(j["clamped"]["above"] == 1);
  CHECK(j["alpha"] == 0.5);
  CHECK(j["bins"]["edges"].size() == 3);
  CHECK(j["bins"]["scale"] == "linear");
}
