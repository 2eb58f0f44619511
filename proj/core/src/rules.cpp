#include "permrules/rules.hpp"

#include <stdexcept>
#include <string>

#include "permrules/errors.hpp"

namespace permrules {

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) {
        throw std::invalid_argument("factorial: n must be in [0, 20], got " + std::to_string(n));
    }
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

std::uint64_t RuleCoordinates::base_index() const {
    return factorial(m) * static_cast<std::uint64_t>(i);
}

std::uint64_t RuleCoordinates::step() const { return factorial(m + 1); }

std::uint64_t RuleCoordinates::application_count(int n) const { return factorial(n) / step(); }

int Rule::nonzero_moves() const {
    int count = 0;
    for (Displacement d : moves) count += (d != 0);
    return count;
}

Displacement rule_entry(int m, int i, int c) {
    if (m < 1 || i < 1 || i > m || c < 1 || c > m + 1) {
        throw std::invalid_argument("rule_entry: need 1 <= i <= m and 1 <= c <= m+1, got m=" +
                                    std::to_string(m) + " i=" + std::to_string(i) +
                                    " c=" + std::to_string(c));
    }
    if (c == 1) return i;
    const int j = c - 1;  // column within the trailing m x m block
    if (j == m + 1 - i) return i - (m + 1);
    return m + 1 - 2 * j;
}

Rule make_rule(int n, RuleCoordinates coords) {
    if (coords.m >= n) {
        throw std::invalid_argument("make_rule: matrix index m=" + std::to_string(coords.m) +
                                    " needs n > m, got n=" + std::to_string(n));
    }
    if (coords.m < 1 || coords.i < 1 || coords.i > coords.m) {
        throw std::invalid_argument("make_rule: bad coordinates m=" + std::to_string(coords.m) +
                                    " i=" + std::to_string(coords.i));
    }
    Rule rule;
    rule.width = coords.m + 1;
    rule.moves.assign(static_cast<std::size_t>(n), 0);
    const int pad = n - rule.width;
    for (int c = 1; c <= rule.width; ++c) {
        rule.moves[static_cast<std::size_t>(pad + c - 1)] = rule_entry(coords.m, coords.i, c);
    }
    return rule;
}

bool validate_rule(const Rule& rule, int n) {
    if (rule.size() != n) {
        throw std::invalid_argument("validate_rule: rule length " + std::to_string(rule.size()) +
                                    " does not match n=" + std::to_string(n));
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) {
        const int target = k + rule.moves[static_cast<std::size_t>(k)];
        if (target < 0 || target >= n) return false;
        if (seen[static_cast<std::size_t>(target)]) return false;
        seen[static_cast<std::size_t>(target)] = 1;
    }
    return true;
}

const RuleTableEntry& RuleTable::at(RuleCoordinates coords) const {
    // Flatten order: m-1 full matrices of 1..m-1 rows precede row i of RM_m.
    const std::size_t index =
        static_cast<std::size_t>(coords.m) * (coords.m - 1) / 2 + static_cast<std::size_t>(coords.i) - 1;
    if (coords.m < 1 || coords.i < 1 || coords.i > coords.m || index >= entries.size()) {
        throw std::invalid_argument("RuleTable::at: no entry for m=" + std::to_string(coords.m) +
                                    " i=" + std::to_string(coords.i));
    }
    return entries[index];
}

std::uint64_t RuleTable::displacement_entries() const {
    std::uint64_t total = 0;
    for (const auto& entry : entries) total += static_cast<std::uint64_t>(entry.rule.size());
    return total;
}

RuleTable build_rule_table(int n) {
    if (n < 0) throw std::invalid_argument("build_rule_table: n must be >= 0");
    factorial(n);  // range guard

    RuleTable table;
    table.n = n;
    if (n >= 2) table.entries.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int m = 1; m <= n - 1; ++m) {
        for (int i = 1; i <= m; ++i) {
            const RuleCoordinates coords{m, i};
            table.entries.push_back(
                {coords, coords.base_index(), coords.step(), make_rule(n, coords)});
        }
    }
    return table;
}

} // namespace permrules
