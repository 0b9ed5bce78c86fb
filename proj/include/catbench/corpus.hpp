#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "catbench/indicator.hpp"

namespace catbench {

/// One journal's membership in one category together with its three
/// indicator values. A journal listed under several categories is stored as
/// several records.
struct JournalRecord {
  std::string journal_id;
  std::string category;
  std::optional<double> impact_factor;
  std::optional<double> eigenfactor;
  std::optional<double> immediacy;

  std::optional<double> value(Indicator indicator) const;

  friend bool operator==(const JournalRecord&, const JournalRecord&) = default;
};

/// Immutable, validated set of journal records with a category index.
/// Categories iterate in lexicographic order.
class Corpus {
 public:
  Corpus() = default;
  /// Throws DuplicateError on a repeated (journal_id, category) pair and
  /// InputError on an empty journal or category name.
  explicit Corpus(std::vector<JournalRecord> records);

  const std::vector<JournalRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }

  bool has_category(std::string_view category) const;
  std::vector<std::string> categories() const;
  std::size_t category_count() const noexcept { return index_.size(); }

  /// Indices into records(), in input order. Throws NotFoundError.
  const std::vector<std::size_t>& category_records(std::string_view category) const;

  friend bool operator==(const Corpus& a, const Corpus& b) { return a.records_ == b.records_; }

 private:
  std::vector<JournalRecord> records_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> index_;
};

/// Reads the `journal,category,impact_factor,eigenfactor,immediacy` CSV.
/// Fields may be double-quoted (RFC 4180); an empty indicator cell is missing.
Corpus parse_corpus(std::istream& source);
Corpus load_corpus(const std::string& path);

/// Writes records back out in the same CSV dialect; parse_corpus of the
/// output reproduces the corpus exactly.
void write_corpus(std::ostream& out, const Corpus& corpus);

struct CategoryValues {
  std::vector<double> values;
  std::size_t skipped = 0;
};

/// Present values of one indicator for one category, in input order.
CategoryValues category_values(const Corpus& corpus, std::string_view category,
                               Indicator indicator);

struct ValidationReport {
  std::size_t record_count = 0;
  std::size_t min_records = 5;
  std::map<std::string, std::size_t> category_records;
  std::array<std::size_t, 3> missing{};  // indexed by Indicator
  std::vector<std::string> under_populated;

  std::size_t missing_count(Indicator indicator) const {
    return missing[static_cast<std::size_t>(indicator)];
  }
};

ValidationReport validate_corpus(const Corpus& corpus, std::size_t min_records = 5);
nlohmann::json to_json(const ValidationReport& report);

}  // namespace catbench
