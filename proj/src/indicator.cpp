#include "catbench/indicator.hpp"

namespace catbench {

std::string_view short_name(Indicator indicator) {
  switch (indicator) {
    case Indicator::ImpactFactor: return "if";
    case Indicator::Eigenfactor: return "es";
    case Indicator::Immediacy: return "ii";
  }
  return "?";
}

std::string_view column_name(Indicator indicator) {
  switch (indicator) {
    case Indicator::ImpactFactor: return "impact_factor";
    case Indicator::Eigenfactor: return "eigenfactor";
    case Indicator::Immediacy: return "immediacy";
  }
  return "?";
}

std::string_view display_name(Indicator indicator) {
  switch (indicator) {
    case Indicator::ImpactFactor: return "Impact Factor";
    case Indicator::Eigenfactor: return "Eigenfactor Score";
    case Indicator::Immediacy: return "Immediacy Index";
  }
  return "?";
}

std::optional<Indicator> parse_indicator(std::string_view text) {
  for (const auto indicator : kAllIndicators) {
    if (text == short_name(indicator) || text == column_name(indicator)) return indicator;
  }
  return std::nullopt;
}

}  // namespace catbench
