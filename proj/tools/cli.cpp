#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "catbench/benchmarking.hpp"
#include "catbench/corpus.hpp"
#include "catbench/error.hpp"
#include "catbench/heliomap.hpp"
#include "catbench/histogram.hpp"

namespace catbench::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string input;
  std::string indicator = "all";
  std::size_t bins = 20;
  std::string scale;  // empty: per-indicator default
  double alpha = 0.5;
  std::size_t k = 30;
  std::string reference;
  std::vector<std::string> categories;
  std::string prestige;
  std::string out_dir;
  std::string format = "json";
  std::size_t min_records = 5;
  bool full = false;
};

std::vector<Indicator> selected_indicators(const Options& o) {
  if (o.indicator == "all") return {kAllIndicators.begin(), kAllIndicators.end()};
  return {*parse_indicator(o.indicator)};
}

std::map<Indicator, Scale> selected_scales(const Options& o) {
  std::map<Indicator, Scale> scales;
  if (o.scale.empty()) return scales;
  for (const auto indicator : kAllIndicators) scales[indicator] = *parse_scale(o.scale);
  return scales;
}

Corpus read_input(const Options& o) {
  if (o.input.empty()) throw InputError("--input is required");
  return load_corpus(o.input);
}

std::string slug(std::string_view name) {
  std::string s;
  for (const unsigned char c : name) {
    if (std::isalnum(c)) {
      s.push_back(static_cast<char>(std::tolower(c)));
    } else if (!s.empty() && s.back() != '_') {
      s.push_back('_');
    }
  }
  while (!s.empty() && s.back() == '_') s.pop_back();
  return s.empty() ? "category" : s;
}

void write_file(const fs::path& path, const std::string& content, std::ostream& err) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw InputError(fmt::format("cannot write '{}'", path.string()));
  file << content;
  if (!file) throw InputError(fmt::format("write failed for '{}'", path.string()));
  err << "wrote " << path.string() << '\n';
}

fs::path prepare_out_dir(const std::string& dir) {
  fs::path path(dir);
  std::error_code ec;
  fs::create_directories(path, ec);
  if (ec) throw InputError(fmt::format("cannot create '{}': {}", dir, ec.message()));
  return path;
}

BenchmarkRequest make_request(const Options& o) {
  BenchmarkRequest request;
  request.reference = o.reference;
  request.indicators = selected_indicators(o);
  request.bin_count = o.bins;
  request.scales = selected_scales(o);
  request.alpha = o.alpha;
  request.k = o.k;
  if (!o.prestige.empty()) request.prestige_file = o.prestige;
  return request;
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  const auto corpus = read_input(o);
  const auto report = to_json(validate_corpus(corpus, o.min_records)).dump(2) + "\n";
  if (o.out_dir.empty()) {
    out << report;
  } else {
    write_file(prepare_out_dir(o.out_dir) / "validation.json", report, err);
  }
  return kOk;
}

int cmd_hist(const Options& o, std::ostream& out, std::ostream& err) {
  const auto corpus = read_input(o);
  std::vector<std::string> categories = o.categories;
  if (categories.empty() && !o.reference.empty()) categories.push_back(o.reference);
  if (categories.empty()) categories = corpus.categories();
  for (const auto& c : categories) {
    if (!corpus.has_category(c)) throw NotFoundError(fmt::format("unknown category '{}'", c));
  }

  const auto scales = selected_scales(o);
  std::optional<fs::path> dir;
  if (!o.out_dir.empty()) dir = prepare_out_dir(o.out_dir);

  for (const auto indicator : selected_indicators(o)) {
    const auto it = scales.find(indicator);
    const auto scale = it == scales.end() ? default_scale(indicator) : it->second;
    const auto spec = pooled_bin_spec(corpus, indicator, o.bins, scale);
    for (const auto& category : categories) {
      const auto values = category_values(corpus, category, indicator);
      auto doc = to_json(build_histogram(values.values, spec, o.alpha));
      doc["category"] = category;
      doc["indicator"] = std::string(short_name(indicator));
      doc["missing"] = values.skipped;
      if (dir) {
        write_file(*dir / fmt::format("hist_{}_{}.json", slug(category), short_name(indicator)),
                   doc.dump(2) + "\n", err);
      } else {
        out << doc.dump() << '\n';
      }
    }
  }
  return kOk;
}

std::vector<BenchmarkResult> ranked_results(const Options& o, const Corpus& corpus) {
  auto results = run_benchmark(corpus, make_request(o));
  if (!o.full) {
    for (auto& r : results) r = top_k(std::move(r), o.k);
  }
  return results;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  const auto corpus = read_input(o);
  const auto results = ranked_results(o, corpus);
  const bool csv = o.format == "csv";

  if (o.out_dir.empty()) {
    if (csv) {
      write_ranking_csv(out, results);
    } else {
      nlohmann::json docs = nlohmann::json::array();
      for (const auto& r : results) docs.push_back(to_json(r));
      out << docs.dump(2) << '\n';
    }
    return kOk;
  }

  const auto dir = prepare_out_dir(o.out_dir);
  for (const auto& r : results) {
    const auto stem = fmt::format("bench_{}", short_name(r.indicator));
    if (csv) {
      std::ostringstream text;
      write_ranking_csv(text, {r});
      write_file(dir / (stem + ".csv"), text.str(), err);
    } else {
      write_file(dir / (stem + ".json"), to_json(r).dump(2) + "\n", err);
    }
  }
  std::ostringstream summary;
  write_summary_csv(summary, cross_indicator_summary(results));
  write_file(dir / "summary.csv", summary.str(), err);
  return kOk;
}

int cmd_map(const Options& o, std::ostream& /*out*/, std::ostream& err) {
  const auto corpus = read_input(o);
  std::optional<PrestigeOrder> order;
  if (!o.prestige.empty()) order = load_prestige_order(o.prestige);
  auto results = run_benchmark(corpus, make_request(o));

  const auto dir = prepare_out_dir(o.out_dir.empty() ? "." : o.out_dir);
  for (auto& r : results) {
    const auto layout = layout_map(top_k(std::move(r), o.k), order);
    write_file(dir / fmt::format("map_{}.svg", short_name(r.indicator)), render_svg(layout), err);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Benchmark journal categories by information gain between impact histograms",
               "catbench"};
  app.set_config("--config", "", "key=value configuration file; command-line flags win");
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--input", o.input, "Journal CSV: journal,category,impact_factor,eigenfactor,immediacy");
  app.add_option("--indicator", o.indicator, "Indicator to process")
      ->check(CLI::IsMember({"if", "es", "ii", "all"}))
      ->capture_default_str();
  app.add_option("--bins", o.bins, "Number of histogram intervals")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000}))
      ->capture_default_str();
  app.add_option("--scale", o.scale, "Bin scale for every indicator (default: log for es, linear otherwise)")
      ->check(CLI::IsMember({"linear", "log"}));
  app.add_option("--alpha", o.alpha, "Additive smoothing pseudo-count")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--k", o.k, "Number of most similar categories kept")
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
  app.add_option("--reference", o.reference, "Reference category");
  app.add_option("--category", o.categories, "Category to histogram (repeatable; default all)");
  app.add_option("--prestige", o.prestige, "Category order file, highest prestige first");
  app.add_option("--out", o.out_dir, "Output directory (default: standard output; map: .)");
  app.add_option("--format", o.format, "Ranking output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--min-records", o.min_records, "Validation: flag smaller categories")
      ->capture_default_str();
  app.add_flag("--full", o.full, "bench: keep the full ranking instead of the top k");

  auto* validate = app.add_subcommand("validate", "Check a corpus and print a JSON report");
  auto* hist = app.add_subcommand("hist", "Print per-category histograms as JSON");
  auto* bench = app.add_subcommand("bench", "Rank categories by information gain to the reference");
  auto* map = app.add_subcommand("map", "Render heliocentric clockwise maps as SVG");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  err << "# resolved configuration\n" << app.config_to_str(true, false);

  try {
    if (*validate) return cmd_validate(o, out, err);
    if (*hist) return cmd_hist(o, out, err);
    if (*bench) {
      if (o.reference.empty()) throw InputError("bench needs --reference");
      return cmd_bench(o, out, err);
    }
    if (*map) {
      if (o.reference.empty()) throw InputError("map needs --reference");
      return cmd_map(o, out, err);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace catbench::cli
