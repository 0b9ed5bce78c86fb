#include "catbench/info_gain.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "catbench/compensated_sum.hpp"
#include "catbench/error.hpp"
#include "catbench/kernels.hpp"

namespace catbench {

namespace {

double log_in(double x, LogBase base) {
  return base == LogBase::Natural ? std::log(x) : std::log2(x);
}

void check_lengths(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw InvalidInputError(
        fmt::format("distributions have {} and {} bins", p.size(), q.size()));
  }
}

void check_support(const Histogram& p, const Histogram& q) {
  if (!(p.spec == q.spec)) {
    throw IncompatibleSupportError("histograms are built on different bin specs");
  }
}

void check_probability(double p, std::size_t bin) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError(fmt::format("bin {}: probability {} outside [0, 1]", bin, p));
  }
}

[[noreturn]] void continuity_violation(std::size_t bin, double p) {
  throw AbsoluteContinuityError(
      bin, fmt::format("bin {}: q = 0 where p = {}; smooth the input histogram", bin, p));
}

// Rebuilds `error` with `prefix` in front of its message, preserving the type
// the CLI uses to pick an exit code.
[[noreturn]] void rethrow_annotated(std::exception_ptr error, const std::string& prefix) {
  try {
    std::rethrow_exception(error);
  } catch (const AbsoluteContinuityError& e) {
    throw AbsoluteContinuityError(e.bin(), prefix + e.what());
  } catch (const IncompatibleSupportError& e) {
    throw IncompatibleSupportError(prefix + e.what());
  } catch (const InvalidInputError& e) {
    throw InvalidInputError(prefix + e.what());
  } catch (const DomainError& e) {
    throw DomainError(prefix + e.what());
  } catch (const Error& e) {
    throw Error(prefix + e.what());
  }
}

}  // namespace

void DivergenceConfig::validate() const {
  if (!std::isfinite(scale) || scale < 0.0) {
    throw DomainError(fmt::format("scale constant {} must be finite and >= 0", scale));
  }
}

double unexpectedness(double p, LogBase base) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw DomainError(fmt::format("unexpectedness needs 0 < p <= 1, got {}", p));
  }
  return -log_in(p, base);
}

double expected_unexpectedness(std::span<const double> p, std::span<const double> q,
                               LogBase base) {
  check_lengths(p, q);
  CompensatedSum sum;
  for (std::size_t i = 0; i < p.size(); ++i) {
    check_probability(p[i], i);
    check_probability(q[i], i);
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) continuity_violation(i, p[i]);
    sum += p[i] * unexpectedness(q[i], base);
  }
  return sum.value();
}

double expected_unexpectedness(const Histogram& p, const Histogram& q, LogBase base) {
  check_support(p, q);
  return expected_unexpectedness(p.probabilities, q.probabilities, base);
}

double information_gain(std::span<const double> p, std::span<const double> q,
                        const DivergenceConfig& cfg) {
  cfg.validate();
  check_lengths(p, q);
  CompensatedSum sum;
  for (std::size_t i = 0; i < p.size(); ++i) {
    check_probability(p[i], i);
    check_probability(q[i], i);
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) continuity_violation(i, p[i]);
    sum += p[i] * log_in(p[i] / q[i], cfg.base);
  }
  return cfg.scale * std::max(0.0, sum.value());
}

double information_gain_from_unexpectedness(std::span<const double> p,
                                            std::span<const double> q,
                                            const DivergenceConfig& cfg) {
  cfg.validate();
  const double cross = expected_unexpectedness(p, q, cfg.base);
  const double self = expected_unexpectedness(p, p, cfg.base);
  return cfg.scale * (cross - self);
}

GainValue information_gain(const Histogram& p, const Histogram& q, const DivergenceConfig& cfg,
                           std::string reference, std::string input) {
  check_support(p, q);
  return {information_gain(p.probabilities, q.probabilities, cfg), std::move(reference),
          std::move(input)};
}

std::vector<GainValue> gains_against_reference(std::string_view reference_name,
                                               const Histogram& reference,
                                               const std::map<std::string, Histogram>& candidates,
                                               const DivergenceConfig& cfg) {
  cfg.validate();
  std::vector<std::string> names;
  std::vector<Histogram> inputs;
  for (const auto& [name, histogram] : candidates) {
    if (name == reference_name) continue;
    names.push_back(name);
    inputs.push_back(histogram);
  }

  std::vector<double> values;
  try {
    values = kernels::parallel::gains(reference, inputs, cfg);
  } catch (const kernels::KernelError& e) {
    rethrow_annotated(e.cause(), fmt::format("candidate '{}': ", names[e.index()]));
  }

  std::vector<GainValue> gains;
  gains.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    gains.push_back({values[i], std::string(reference_name), names[i]});
  }
  return gains;
}

}  // namespace catbench
