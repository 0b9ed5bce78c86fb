#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "catbench/corpus.hpp"
#include "catbench/indicator.hpp"

namespace catbench {

enum class Scale { Linear, Logarithmic };

std::string_view to_string(Scale scale);
std::optional<Scale> parse_scale(std::string_view text);

/// Default scale per indicator: Eigenfactor values crowd near zero and span
/// several decades, so they are binned logarithmically.
Scale default_scale(Indicator indicator);

/// Smallest lower bound allowed for a logarithmic spec.
inline constexpr double kLogFloor = 1e-12;
/// Relative widening applied to the observed maximum so that it falls inside
/// the last half-open interval.
inline constexpr double kUpperMargin = 1e-9;

/// Interval layout shared by every histogram of one indicator.
///
/// Linear: edge_i = lower + i * width with width = (upper - lower) / bin_count.
/// Logarithmic: edges are geometric between lower and upper.
/// In both cases the last edge is exactly `upper`.
struct BinSpec {
  double lower = 0.0;
  double upper = 1.0;
  std::size_t bin_count = 2;
  Scale scale = Scale::Linear;

  /// Throws InvalidInputError if the invariants do not hold.
  void validate() const;
  std::vector<double> edges() const;
  double width() const { return (upper - lower) / static_cast<double>(bin_count); }

  friend bool operator==(const BinSpec&, const BinSpec&) = default;
};

/// Spec covering every present value of `indicator` across the whole corpus.
/// Throws EmptyDataError when no value is present (or, for logarithmic
/// scale, when no value is positive).
BinSpec pooled_bin_spec(const Corpus& corpus, Indicator indicator, std::size_t bin_count,
                        Scale scale);

struct Histogram {
  BinSpec spec;
  std::vector<double> probabilities;
  std::vector<std::size_t> counts;
  std::size_t sample_count = 0;
  double smoothing = 0.0;
  std::size_t clamped_below = 0;
  std::size_t clamped_above = 0;

  std::size_t clamped() const noexcept { return clamped_below + clamped_above; }
};

/// Bin of `value` given precomputed edges; values outside clamp to the ends.
std::size_t bin_index(std::span<const double> edges, double value);

/// p_i = (c_i + alpha) / (N + alpha * bin_count).
/// Throws EmptyDataError when alpha == 0 and values is empty.
Histogram build_histogram(std::span<const double> values, const BinSpec& spec, double alpha);

nlohmann::json to_json(const BinSpec& spec);
nlohmann::json to_json(const Histogram& histogram);

}  // namespace catbench
