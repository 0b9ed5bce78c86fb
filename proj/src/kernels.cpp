#include "catbench/kernels.hpp"

#include <fmt/format.h>

namespace catbench::kernels {

KernelError::KernelError(std::size_t index, std::exception_ptr cause)
    : index_(index), cause_(std::move(cause)) {
  try {
    std::rethrow_exception(cause_);
  } catch (const std::exception& e) {
    message_ = fmt::format("item {}: {}", index_, e.what());
  } catch (...) {
    message_ = fmt::format("item {}: unknown error", index_);
  }
}

namespace {

void raise_first(const std::vector<std::exception_ptr>& errors) {
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (errors[i]) throw KernelError(i, errors[i]);
  }
}

double gain_or_throw(const Histogram& reference, const Histogram& candidate,
                     const DivergenceConfig& cfg) {
  return information_gain(reference, candidate, cfg).value;
}

}  // namespace

namespace serial {

std::vector<Histogram> build_histograms(std::span<const std::vector<double>> samples,
                                        const BinSpec& spec, double alpha) {
  std::vector<Histogram> out;
  out.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    try {
      out.push_back(build_histogram(samples[i], spec, alpha));
    } catch (...) {
      throw KernelError(i, std::current_exception());
    }
  }
  return out;
}

std::vector<double> gains(const Histogram& reference, std::span<const Histogram> candidates,
                          const DivergenceConfig& cfg) {
  std::vector<double> out(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    try {
      out[i] = gain_or_throw(reference, candidates[i], cfg);
    } catch (...) {
      throw KernelError(i, std::current_exception());
    }
  }
  return out;
}

}  // namespace serial

namespace parallel {

std::vector<Histogram> build_histograms(std::span<const std::vector<double>> samples,
                                        const BinSpec& spec, double alpha) {
  const auto n = static_cast<std::ptrdiff_t>(samples.size());
  std::vector<Histogram> out(samples.size());
  std::vector<std::exception_ptr> errors(samples.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = build_histogram(samples[i], spec, alpha);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  raise_first(errors);
  return out;
}

std::vector<double> gains(const Histogram& reference, std::span<const Histogram> candidates,
                          const DivergenceConfig& cfg) {
  const auto n = static_cast<std::ptrdiff_t>(candidates.size());
  std::vector<double> out(candidates.size());
  std::vector<std::exception_ptr> errors(candidates.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = gain_or_throw(reference, candidates[i], cfg);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  raise_first(errors);
  return out;
}

}  // namespace parallel

}  // namespace catbench::kernels
