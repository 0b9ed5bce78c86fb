#include "catbench/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "catbench/error.hpp"

namespace catbench {

std::string_view to_string(Scale scale) {
  return scale == Scale::Linear ? "linear" : "log";
}

std::optional<Scale> parse_scale(std::string_view text) {
  if (text == "linear") return Scale::Linear;
  if (text == "log" || text == "logarithmic") return Scale::Logarithmic;
  return std::nullopt;
}

Scale default_scale(Indicator indicator) {
  return indicator == Indicator::Eigenfactor ? Scale::Logarithmic : Scale::Linear;
}

void BinSpec::validate() const {
  if (bin_count < 2) throw InvalidInputError(fmt::format("bin count {} < 2", bin_count));
  if (!std::isfinite(lower) || !std::isfinite(upper) || lower < 0.0 || !(upper > lower)) {
    throw InvalidInputError(fmt::format("invalid bin range [{}, {})", lower, upper));
  }
  if (scale == Scale::Logarithmic && lower < kLogFloor) {
    throw InvalidInputError(fmt::format("logarithmic lower bound {} below {}", lower, kLogFloor));
  }
}

std::vector<double> BinSpec::edges() const {
  validate();
  std::vector<double> e(bin_count + 1);
  const double n = static_cast<double>(bin_count);
  if (scale == Scale::Linear) {
    const double step = width();
    for (std::size_t i = 0; i < bin_count; ++i) e[i] = lower + static_cast<double>(i) * step;
  } else {
    const double log_lower = std::log(lower);
    const double log_step = (std::log(upper) - log_lower) / n;
    e[0] = lower;
    for (std::size_t i = 1; i < bin_count; ++i) {
      e[i] = std::exp(log_lower + static_cast<double>(i) * log_step);
    }
  }
  e[bin_count] = upper;
  return e;
}

BinSpec pooled_bin_spec(const Corpus& corpus, Indicator indicator, std::size_t bin_count,
                        Scale scale) {
  bool any = false;
  double max_value = 0.0;
  double min_positive = std::numeric_limits<double>::infinity();
  for (const auto& r : corpus.records()) {
    const auto v = r.value(indicator);
    if (!v) continue;
    any = true;
    max_value = std::max(max_value, *v);
    if (*v > 0.0) min_positive = std::min(min_positive, *v);
  }
  if (!any) {
    throw EmptyDataError(fmt::format("no {} values in corpus", column_name(indicator)));
  }

  BinSpec spec;
  spec.bin_count = bin_count;
  spec.scale = scale;
  if (scale == Scale::Linear) {
    spec.lower = 0.0;
    spec.upper = max_value > 0.0 ? max_value * (1.0 + kUpperMargin) : kUpperMargin;
  } else {
    if (!std::isfinite(min_positive)) {
      throw EmptyDataError(
          fmt::format("no positive {} values for logarithmic bins", column_name(indicator)));
    }
    spec.lower = std::max(min_positive, kLogFloor);
    spec.upper = std::max(max_value, spec.lower) * (1.0 + kUpperMargin);
  }
  spec.validate();
  return spec;
}

std::size_t bin_index(std::span<const double> edges, double value) {
  const std::size_t bins = edges.size() - 1;
  if (!(value >= edges.front())) return 0;
  if (value >= edges.back()) return bins - 1;
  const auto it = std::upper_bound(edges.begin(), edges.end(), value);
  return static_cast<std::size_t>(it - edges.begin()) - 1;
}

Histogram build_histogram(std::span<const double> values, const BinSpec& spec, double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw InvalidInputError(fmt::format("smoothing pseudo-count {} must be >= 0", alpha));
  }
  if (alpha == 0.0 && values.empty()) {
    throw EmptyDataError("no values and no smoothing: distribution undefined");
  }
  const auto edges = spec.edges();

  Histogram h;
  h.spec = spec;
  h.smoothing = alpha;
  h.sample_count = values.size();
  h.counts.assign(spec.bin_count, 0);
  for (const double v : values) {
    if (!(v >= edges.front())) {
      ++h.clamped_below;
    } else if (v >= edges.back()) {
      ++h.clamped_above;
    }
    ++h.counts[bin_index(edges, v)];
  }

  const double total =
      static_cast<double>(values.size()) + alpha * static_cast<double>(spec.bin_count);
  h.probabilities.resize(spec.bin_count);
  for (std::size_t i = 0; i < spec.bin_count; ++i) {
    h.probabilities[i] = (static_cast<double>(h.counts[i]) + alpha) / total;
  }
  return h;
}

nlohmann::json to_json(const BinSpec& spec) {
  return {
      {"lower", spec.lower},
      {"upper", spec.upper},
      {"bin_count", spec.bin_count},
      {"scale", std::string(to_string(spec.scale))},
      {"edges", spec.edges()},
  };
}

nlohmann::json to_json(const Histogram& histogram) {
  return {
      {"bins", to_json(histogram.spec)},
      {"probabilities", histogram.probabilities},
      {"counts", histogram.counts},
      {"sample_count", histogram.sample_count},
      {"alpha", histogram.smoothing},
      {"clamped", {{"below", histogram.clamped_below}, {"above", histogram.clamped_above}}},
  };
}

}  // namespace catbench
