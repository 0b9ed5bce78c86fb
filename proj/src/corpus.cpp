#include "catbench/corpus.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <utility>

#include <fmt/format.h>

#include "catbench/error.hpp"

namespace catbench {

namespace {

constexpr std::string_view kHeader[] = {"journal", "category", "impact_factor", "eigenfactor",
                                        "immediacy"};
constexpr std::size_t kColumns = std::size(kHeader);

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// RFC 4180 field split for a single physical line.
std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool after_quote = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
          after_quote = true;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      after_quote = false;
    } else if (c == '"' && trim(field).empty() && !after_quote) {
      field.clear();
      quoted = true;
    } else if (after_quote) {
      if (c != ' ' && c != '\t') throw ParseError(line_no, "unexpected text after closing quote");
    } else {
      field.push_back(c);
    }
  }
  if (quoted) throw ParseError(line_no, "unterminated quoted field");
  fields.push_back(std::move(field));
  return fields;
}

std::optional<double> parse_indicator_cell(std::string_view cell, std::string_view column,
                                           std::size_t line_no) {
  cell = trim(cell);
  if (cell.empty()) return std::nullopt;
  double value = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw ValueError(line_no, fmt::format("{} is not a number: '{}'", column, cell));
  }
  if (value < 0.0) {
    throw ValueError(line_no, fmt::format("{} is negative: {}", column, cell));
  }
  return value == 0.0 ? 0.0 : value;  // drop the sign of -0
}

std::string format_cell(const std::optional<double>& value) {
  return value ? fmt::format("{}", *value) : std::string{};
}

}  // namespace

std::optional<double> JournalRecord::value(Indicator indicator) const {
  switch (indicator) {
    case Indicator::ImpactFactor: return impact_factor;
    case Indicator::Eigenfactor: return eigenfactor;
    case Indicator::Immediacy: return immediacy;
  }
  return std::nullopt;
}

Corpus::Corpus(std::vector<JournalRecord> records) : records_(std::move(records)) {
  std::set<std::pair<std::string_view, std::string_view>> seen;
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const auto& r = records_[i];
    if (r.journal_id.empty()) throw InputError(fmt::format("record {}: empty journal id", i + 1));
    if (r.category.empty()) throw InputError(fmt::format("record {}: empty category", i + 1));
    for (const auto indicator : kAllIndicators) {
      const auto v = r.value(indicator);
      if (v && (!std::isfinite(*v) || *v < 0.0)) {
        throw InputError(fmt::format("record {}: {} must be finite and non-negative", i + 1,
                                     column_name(indicator)));
      }
    }
    if (!seen.emplace(r.journal_id, r.category).second) {
      throw DuplicateError(fmt::format("duplicate journal '{}' in category '{}'", r.journal_id,
                                       r.category));
    }
    index_[r.category].push_back(i);
  }
}

bool Corpus::has_category(std::string_view category) const {
  return index_.find(category) != index_.end();
}

std::vector<std::string> Corpus::categories() const {
  std::vector<std::string> names;
  names.reserve(index_.size());
  for (const auto& [name, _] : index_) names.push_back(name);
  return names;
}

const std::vector<std::size_t>& Corpus::category_records(std::string_view category) const {
  const auto it = index_.find(category);
  if (it == index_.end()) throw NotFoundError(fmt::format("unknown category '{}'", category));
  return it->second;
}

Corpus parse_corpus(std::istream& source) {
  std::vector<JournalRecord> records;
  std::set<std::pair<std::string, std::string>> seen;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;

  while (std::getline(source, line)) {
    ++line_no;
    std::string_view view = line;
    if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (trim(view).empty()) continue;

    auto fields = split_csv_line(view, line_no);
    if (fields.size() != kColumns) {
      throw ParseError(line_no,
                       fmt::format("expected {} columns, found {}", kColumns, fields.size()));
    }
    if (!header_seen) {
      for (std::size_t c = 0; c < kColumns; ++c) {
        if (trim(fields[c]) != kHeader[c]) {
          throw ParseError(line_no, fmt::format("expected header column '{}', found '{}'",
                                                kHeader[c], fields[c]));
        }
      }
      header_seen = true;
      continue;
    }

    JournalRecord record;
    record.journal_id = std::string(trim(fields[0]));
    record.category = std::string(trim(fields[1]));
    if (record.journal_id.empty()) throw ParseError(line_no, "empty journal");
    if (record.category.empty()) throw ParseError(line_no, "empty category");
    record.impact_factor = parse_indicator_cell(fields[2], kHeader[2], line_no);
    record.eigenfactor = parse_indicator_cell(fields[3], kHeader[3], line_no);
    record.immediacy = parse_indicator_cell(fields[4], kHeader[4], line_no);

    if (!seen.emplace(record.journal_id, record.category).second) {
      throw DuplicateError(fmt::format("line {}: duplicate journal '{}' in category '{}'",
                                       line_no, record.journal_id, record.category));
    }
    records.push_back(std::move(record));
  }
  if (source.bad()) throw InputError("read failure");
  if (!header_seen) throw ParseError(line_no == 0 ? 1 : line_no, "missing header row");
  return Corpus(std::move(records));
}

Corpus load_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(fmt::format("cannot open '{}'", path));
  return parse_corpus(in);
}

namespace {

std::string quote_if_needed(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos && trim(text) == text) return text;
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

void write_corpus(std::ostream& out, const Corpus& corpus) {
  out << "journal,category,impact_factor,eigenfactor,immediacy\n";
  for (const auto& r : corpus.records()) {
    out << quote_if_needed(r.journal_id) << ',' << quote_if_needed(r.category) << ','
        << format_cell(r.impact_factor) << ',' << format_cell(r.eigenfactor) << ','
        << format_cell(r.immediacy) << '\n';
  }
}

CategoryValues category_values(const Corpus& corpus, std::string_view category,
                               Indicator indicator) {
  CategoryValues result;
  const auto& rows = corpus.category_records(category);
  result.values.reserve(rows.size());
  for (const auto i : rows) {
    if (const auto v = corpus.records()[i].value(indicator)) {
      result.values.push_back(*v);
    } else {
      ++result.skipped;
    }
  }
  return result;
}

ValidationReport validate_corpus(const Corpus& corpus, std::size_t min_records) {
  ValidationReport report;
  report.record_count = corpus.size();
  report.min_records = min_records;
  for (const auto& r : corpus.records()) {
    ++report.category_records[r.category];
    for (const auto indicator : kAllIndicators) {
      if (!r.value(indicator)) ++report.missing[static_cast<std::size_t>(indicator)];
    }
  }
  for (const auto& [name, count] : report.category_records) {
    if (count < min_records) report.under_populated.push_back(name);
  }
  return report;
}

nlohmann::json to_json(const ValidationReport& report) {
  nlohmann::json categories = nlohmann::json::array();
  for (const auto& [name, count] : report.category_records) {
    categories.push_back({{"category", name}, {"records", count}});
  }
  nlohmann::json missing = nlohmann::json::object();
  for (const auto indicator : kAllIndicators) {
    missing[std::string(column_name(indicator))] = report.missing_count(indicator);
  }
  return {
      {"record_count", report.record_count},
      {"category_count", report.category_records.size()},
      {"min_records", report.min_records},
      {"categories", categories},
      {"missing", missing},
      {"under_populated", report.under_populated},
  };
}

}  // namespace catbench
