#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "permrules/rules.hpp"

// Closed-form predictions for the run counters, all in exact integer or
// rational arithmetic, plus the tabulated rule report.

namespace permrules {

struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(std::uint64_t num, std::uint64_t den);  // reduced

// Total weighted element moves over a full run: sum over k = 0..n-2 of
// n!/k!, i.e. n!(1 + 1 + 1/2! + ...).  Returns 0 for n < 2 (no transitions).
std::uint64_t predicted_weighted_moves(int n);

struct RulePrediction {
    RuleCoordinates coords;
    std::uint64_t base_index = 0;
    std::uint64_t step = 0;
    std::uint64_t count = 0;  // applications per full run, n!/(m+1)!
};

struct CountReport {
    std::vector<RulePrediction> rules;        // flatten order
    std::uint64_t total_rules = 0;            // C(n,2)
    std::uint64_t total_applications = 0;     // n! - 1
};

CountReport predicted_counts(int n);

struct ScanCostReport {
    std::uint64_t total = 0;  // sum of list_position * count over all rules
    Rational average;         // total / (n!-1)
    Rational bound;           // C(n,2)/2, the coarse worst-case average
};

// Exact search cost of the scan backend over a full run.  Each query costs
// the hit entry's list position, so the total is a closed-form integer.
ScanCostReport expected_scan_comparisons(int n);

enum class ReportFormat { table, json, csv };

std::optional<ReportFormat> report_format_from_string(std::string_view name);

// One row per rule: base index, full n-wide rule, step, applicable indices
// (small sets in full, large ones elided to the first four and the last),
// count.  CSV columns are m,i,base_index,step,count,moves with the moves
// space-separated.  The table form is guarded to n <= 12.
void emit_rule_report(int n, ReportFormat format, std::ostream& out);

} // namespace permrules
