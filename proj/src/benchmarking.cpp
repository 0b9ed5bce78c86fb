#include "catbench/benchmarking.hpp"

#include <algorithm>
#include <ostream>

#include <fmt/format.h>

#include "catbench/error.hpp"
#include "catbench/kernels.hpp"

namespace catbench {

Scale BenchmarkRequest::scale_for(Indicator indicator) const {
  const auto it = scales.find(indicator);
  return it == scales.end() ? default_scale(indicator) : it->second;
}

void BenchmarkRequest::validate() const {
  if (reference.empty()) throw InvalidInputError("no reference category given");
  if (indicators.empty()) throw InvalidInputError("no indicator requested");
  if (bin_count < 2) throw InvalidInputError(fmt::format("bin count {} < 2", bin_count));
  if (!(alpha >= 0.0)) throw InvalidInputError(fmt::format("alpha {} < 0", alpha));
  if (k < 1) throw InvalidInputError("k must be at least 1");
  divergence.validate();
}

void sort_ranking(std::vector<RankedCategory>& ranking) {
  std::sort(ranking.begin(), ranking.end(), [](const auto& a, const auto& b) {
    if (a.gain != b.gain) return a.gain < b.gain;
    return a.category < b.category;
  });
}

namespace {

BenchmarkResult benchmark_indicator(const Corpus& corpus, const BenchmarkRequest& request,
                                    Indicator indicator) {
  const auto reference_values = category_values(corpus, request.reference, indicator);
  if (reference_values.values.empty()) {
    throw EmptyDataError(fmt::format("reference '{}' has no {} values", request.reference,
                                     column_name(indicator)));
  }

  BenchmarkResult result;
  result.reference = request.reference;
  result.indicator = indicator;
  result.alpha = request.alpha;
  result.spec = pooled_bin_spec(corpus, indicator, request.bin_count, request.scale_for(indicator));

  std::vector<std::string> names;
  std::vector<std::vector<double>> samples;
  for (const auto& name : corpus.categories()) {
    auto values = category_values(corpus, name, indicator);
    if (values.values.empty()) {
      if (name != request.reference) result.skipped.push_back(name);
      continue;
    }
    names.push_back(name);
    samples.push_back(std::move(values.values));
  }

  std::vector<Histogram> histograms;
  try {
    histograms = kernels::parallel::build_histograms(samples, result.spec, request.alpha);
  } catch (const kernels::KernelError& e) {
    std::rethrow_exception(e.cause());
  }

  std::map<std::string, Histogram> candidates;
  const Histogram* reference = nullptr;
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto [it, _] = candidates.emplace(names[i], std::move(histograms[i]));
    if (names[i] == request.reference) reference = &it->second;
  }

  const auto gains =
      gains_against_reference(request.reference, *reference, candidates, request.divergence);
  result.ranking.reserve(gains.size());
  for (const auto& g : gains) result.ranking.push_back({g.input, g.value});
  sort_ranking(result.ranking);
  result.candidate_count = result.ranking.size();
  return result;
}

}  // namespace

std::vector<BenchmarkResult> run_benchmark(const Corpus& corpus, const BenchmarkRequest& request) {
  request.validate();
  if (!corpus.has_category(request.reference)) {
    throw NotFoundError(fmt::format("unknown reference category '{}'", request.reference));
  }
  std::vector<BenchmarkResult> results;
  results.reserve(request.indicators.size());
  for (const auto indicator : request.indicators) {
    results.push_back(benchmark_indicator(corpus, request, indicator));
  }
  return results;
}

BenchmarkResult top_k(BenchmarkResult result, std::size_t k) {
  if (result.ranking.size() > k) result.ranking.resize(k);
  return result;
}

SummaryTable cross_indicator_summary(const std::vector<BenchmarkResult>& results) {
  SummaryTable table;
  if (results.empty()) return table;
  table.reference = results.front().reference;
  for (const auto& r : results) {
    if (r.reference != table.reference) {
      throw InvalidInputError(fmt::format("mixed references '{}' and '{}' in summary",
                                          table.reference, r.reference));
    }
    table.indicators.push_back(r.indicator);
  }

  std::map<std::string, SummaryRow> rows;
  for (std::size_t col = 0; col < results.size(); ++col) {
    const auto& ranking = results[col].ranking;
    for (std::size_t pos = 0; pos < ranking.size(); ++pos) {
      auto& row = rows[ranking[pos].category];
      if (row.ranks.empty()) {
        row.category = ranking[pos].category;
        row.ranks.resize(results.size());
      }
      row.ranks[col] = pos + 1;
      ++row.appearances;
    }
  }
  for (auto& [_, row] : rows) table.rows.push_back(std::move(row));
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const auto& a, const auto& b) { return a.appearances > b.appearances; });
  return table;
}

nlohmann::json to_json(const BenchmarkResult& result) {
  nlohmann::json ranking = nlohmann::json::array();
  for (std::size_t i = 0; i < result.ranking.size(); ++i) {
    ranking.push_back({{"rank", i + 1},
                       {"category", result.ranking[i].category},
                       {"gain", result.ranking[i].gain}});
  }
  return {
      {"reference", result.reference},
      {"indicator", std::string(short_name(result.indicator))},
      {"indicator_name", std::string(display_name(result.indicator))},
      {"bins", to_json(result.spec)},
      {"alpha", result.alpha},
      {"candidate_count", result.candidate_count},
      {"skipped", result.skipped},
      {"ranking", ranking},
  };
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_ranking_csv(std::ostream& out, const std::vector<BenchmarkResult>& results) {
  out << "rank,category,gain,indicator\n";
  for (const auto& r : results) {
    for (std::size_t i = 0; i < r.ranking.size(); ++i) {
      out << fmt::format("{},{},{},{}\n", i + 1, csv_field(r.ranking[i].category),
                         r.ranking[i].gain, short_name(r.indicator));
    }
  }
}

void write_summary_csv(std::ostream& out, const SummaryTable& table) {
  out << "category";
  for (const auto indicator : table.indicators) out << ",rank_" << short_name(indicator);
  out << ",appearances\n";
  for (const auto& row : table.rows) {
    out << csv_field(row.category);
    for (const auto& rank : row.ranks) {
      out << ',';
      if (rank) out << *rank;
    }
    out << ',' << row.appearances << '\n';
  }
}

}  // namespace catbench
