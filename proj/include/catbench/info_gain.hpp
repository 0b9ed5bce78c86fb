#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "catbench/histogram.hpp"

namespace catbench {

enum class LogBase { Natural, Base2 };

struct DivergenceConfig {
  /// Non-negative multiplicative constant in front of the divergence.
  double scale = 1.0;
  LogBase base = LogBase::Natural;

  void validate() const;
};

struct GainValue {
  double value = 0.0;
  std::string reference;
  std::string input;
};

/// Surprise of an event with probability p: -log p in the chosen base.
/// Throws DomainError unless 0 < p <= 1.
double unexpectedness(double p, LogBase base = LogBase::Natural);

/// U_P(Q) = sum_i p_i * h(q_i), with 0 * h(q) taken as 0.
/// Throws InvalidInputError on length mismatch and AbsoluteContinuityError
/// when q_i == 0 while p_i > 0.
double expected_unexpectedness(std::span<const double> p, std::span<const double> q,
                               LogBase base = LogBase::Natural);
double expected_unexpectedness(const Histogram& p, const Histogram& q,
                               LogBase base = LogBase::Natural);

/// Information gain of the reference distribution p relative to q:
/// scale * sum_i p_i log(p_i / q_i). Accumulated with compensation; tiny
/// negative rounding residue is clamped to zero.
double information_gain(std::span<const double> p, std::span<const double> q,
                        const DivergenceConfig& cfg = {});
/// Same quantity computed as scale * (U_P(Q) - U_P(P)).
double information_gain_from_unexpectedness(std::span<const double> p,
                                            std::span<const double> q,
                                            const DivergenceConfig& cfg = {});

/// Throws IncompatibleSupportError when the specs differ.
GainValue information_gain(const Histogram& p, const Histogram& q, const DivergenceConfig& cfg,
                           std::string reference = {}, std::string input = {});

/// Gain of `reference` against every candidate except the reference itself,
/// ordered by candidate name. Errors are rethrown with the candidate named.
std::vector<GainValue> gains_against_reference(std::string_view reference_name,
                                               const Histogram& reference,
                                               const std::map<std::string, Histogram>& candidates,
                                               const DivergenceConfig& cfg = {});

}  // namespace catbench
