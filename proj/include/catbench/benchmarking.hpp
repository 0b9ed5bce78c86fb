#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "catbench/corpus.hpp"
#include "catbench/histogram.hpp"
#include "catbench/indicator.hpp"
#include "catbench/info_gain.hpp"

namespace catbench {

struct RankedCategory {
  std::string category;
  double gain = 0.0;

  friend bool operator==(const RankedCategory&, const RankedCategory&) = default;
};

struct BenchmarkResult {
  std::string reference;
  Indicator indicator = Indicator::ImpactFactor;
  BinSpec spec;
  double alpha = 0.0;
  /// Ascending by gain, ties by category name. Never contains the reference.
  std::vector<RankedCategory> ranking;
  /// Candidates left out because they have no value for this indicator.
  std::vector<std::string> skipped;
  /// Size of the ranking before any top-k truncation.
  std::size_t candidate_count = 0;
};

struct BenchmarkRequest {
  std::string reference;
  std::vector<Indicator> indicators{kAllIndicators.begin(), kAllIndicators.end()};
  std::size_t bin_count = 20;
  /// Indicators not listed here use default_scale().
  std::map<Indicator, Scale> scales;
  double alpha = 0.5;
  std::size_t k = 30;
  std::optional<std::string> prestige_file;
  DivergenceConfig divergence;

  Scale scale_for(Indicator indicator) const;
  void validate() const;
};

/// One full ranking per requested indicator, in request order.
std::vector<BenchmarkResult> run_benchmark(const Corpus& corpus, const BenchmarkRequest& request);

/// Orders by ascending gain, then by category name.
void sort_ranking(std::vector<RankedCategory>& ranking);

BenchmarkResult top_k(BenchmarkResult result, std::size_t k);

struct SummaryRow {
  std::string category;
  /// 1-based rank per input result; nullopt where the category is absent.
  std::vector<std::optional<std::size_t>> ranks;
  std::size_t appearances = 0;
};

struct SummaryTable {
  std::string reference;
  std::vector<Indicator> indicators;
  /// Descending appearance count, then by category name.
  std::vector<SummaryRow> rows;
};

/// Tabulates the rankings as given; apply top_k beforehand to summarise the
/// top-k sets. Throws InvalidInputError when references differ.
SummaryTable cross_indicator_summary(const std::vector<BenchmarkResult>& results);

nlohmann::json to_json(const BenchmarkResult& result);
/// Header `rank,category,gain,indicator`.
void write_ranking_csv(std::ostream& out, const std::vector<BenchmarkResult>& results);
/// Header `category,rank_<ind>...,appearances`; absent ranks are empty cells.
void write_summary_csv(std::ostream& out, const SummaryTable& table);

/// Double-quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& text);

}  // namespace catbench
