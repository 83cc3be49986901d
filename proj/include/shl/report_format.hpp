#pragma once

#include "shl/theorems.hpp"

#include <optional>
#include <string>
#include <vector>

namespace shl {

/// Flat `key = value` lines. With `degree`, per-degree keys are limited to
/// that degree. Basis rows are emitted as `basis.<space>.<i> = [c1, c2, ...]`.
std::string format_report_machine(const CohomologyReport& report, std::optional<int> degree = std::nullopt);

/// Aligned text table for people.
std::string format_report_table(const CohomologyReport& report, std::optional<int> degree = std::nullopt);

/// `verdict.<id> = consistent|INCONSISTENT` plus `.hypothesis`, `.conclusion`
/// and `.witness.<name>` keys.
std::string format_verdicts_machine(const std::vector<TheoremVerdict>& verdicts);

std::string format_verdicts_table(const std::vector<TheoremVerdict>& verdicts);

/// Coordinate rows of the basis vectors, `[a, b, ...]` separated by `; `.
std::string format_basis(const Subspace& s);

}  // namespace shl
