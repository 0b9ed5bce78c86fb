#pragma once

// Data-parallel loops behind the benchmark pipeline. Each kernel has a
// serial reference version and an OpenMP version; both produce identical
// results and surface the error of the lowest failing index.

#include <cstddef>
#include <exception>
#include <span>
#include <string>
#include <vector>

#include "catbench/histogram.hpp"
#include "catbench/info_gain.hpp"

namespace catbench::kernels {

/// Raised by a kernel when one of its items failed. `cause` holds the
/// original exception of the lowest failing index.
class KernelError : public std::exception {
 public:
  KernelError(std::size_t index, std::exception_ptr cause);
  const char* what() const noexcept override { return message_.c_str(); }
  std::size_t index() const noexcept { return index_; }
  std::exception_ptr cause() const noexcept { return cause_; }

 private:
  std::size_t index_;
  std::exception_ptr cause_;
  std::string message_;
};

namespace serial {

std::vector<Histogram> build_histograms(std::span<const std::vector<double>> samples,
                                        const BinSpec& spec, double alpha);

/// gains[i] = information_gain(reference, candidates[i]).
std::vector<double> gains(const Histogram& reference, std::span<const Histogram> candidates,
                          const DivergenceConfig& cfg);

}  // namespace serial

namespace parallel {

std::vector<Histogram> build_histograms(std::span<const std::vector<double>> samples,
                                        const BinSpec& spec, double alpha);

std::vector<double> gains(const Histogram& reference, std::span<const Histogram> candidates,
                          const DivergenceConfig& cfg);

}  // namespace parallel

}  // namespace catbench::kernels
