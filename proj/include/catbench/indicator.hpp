#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace catbench {

enum class Indicator { ImpactFactor, Eigenfactor, Immediacy };

inline constexpr std::array<Indicator, 3> kAllIndicators = {
    Indicator::ImpactFactor, Indicator::Eigenfactor, Indicator::Immediacy};

/// Short CLI token: "if", "es", "ii".
std::string_view short_name(Indicator indicator);
/// CSV column name: "impact_factor", "eigenfactor", "immediacy".
std::string_view column_name(Indicator indicator);
std::string_view display_name(Indicator indicator);

/// Accepts either the short token or the column name, case-sensitive.
std::optional<Indicator> parse_indicator(std::string_view text);

}  // namespace catbench
