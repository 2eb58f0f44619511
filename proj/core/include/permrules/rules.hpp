#pragma once

#include <cstdint>
#include <vector>

// Transition rules for lexicographic permutation sequences.
//
// Number the n! arrangements of n symbols P_1 (sorted) through P_{n!}
// (reverse sorted).  Every transition P_p -> P_{p+1} is described by a rule:
// a length-n vector of signed displacements, where the element at position k
// moves to position k + rule[k].  Only C(n,2) distinct rules occur across
// the whole sequence.  They group into n-1 matrices: RM_m is m x (m+1) and
// its row i is the non-padded tail of the rule that first applies at index
// m!*i and then recurs every (m+1)! steps.  The matrix contents follow a
// closed form, implemented by rule_entry below.

namespace permrules {

// Signed move in positions; positive is rightward.
using Displacement = int;

// Exact n! for 0 <= n <= 20 (the uint64 range); throws std::invalid_argument
// outside it.
std::uint64_t factorial(int n);

// Identifies one rule: matrix index m (1..n-1) and row i (1..m).
struct RuleCoordinates {
    int m = 0;
    int i = 0;

    std::uint64_t base_index() const;               // m! * i, first applicable index
    std::uint64_t step() const;                     // (m+1)!, spacing between applications
    std::uint64_t application_count(int n) const;   // n! / (m+1)!

    friend bool operator==(const RuleCoordinates&, const RuleCoordinates&) = default;
};

// One transition rule, stored at full length n: n-(m+1) leading zeros, then
// the m+1 entries of the matrix row.
struct Rule {
    std::vector<Displacement> moves;
    int width = 0;  // trailing non-padded entries, m+1 for a table rule

    int size() const { return static_cast<int>(moves.size()); }
    int leading_zeros() const { return size() - width; }
    int nonzero_moves() const;

    // Rules are equal when they move elements identically.
    friend bool operator==(const Rule& a, const Rule& b) { return a.moves == b.moves; }
};

// Entry (i, c) of matrix RM_m, 1-based, c in 1..m+1.  Column 1 holds the row
// index i; deleting it leaves an m x m block whose upwards diagonal (row i,
// column m+1-i) holds i-(m+1) and whose remaining column j holds m+1-2j.
Displacement rule_entry(int m, int i, int c);

// Full-length rule for the given coordinates, leading zeros filled in.
Rule make_rule(int n, RuleCoordinates coords);

// True iff k -> k + rule[k] permutes the n positions (no collision, none out
// of range).  Length mismatch throws.
bool validate_rule(const Rule& rule, int n);

struct RuleTableEntry {
    RuleCoordinates coords;
    std::uint64_t base_index = 0;
    std::uint64_t step = 0;
    Rule rule;
};

// All C(n,2) rules in flatten order: rows of RM_1, then RM_2, ... RM_{n-1}.
// Immutable after construction; safe to share across threads.
struct RuleTable {
    int n = 0;
    std::vector<RuleTableEntry> entries;

    std::size_t size() const { return entries.size(); }
    const RuleTableEntry& at(RuleCoordinates coords) const;
    std::uint64_t displacement_entries() const;  // total stored moves, n * C(n,2)
};

// n <= 1 gives an empty table (no transitions to describe).
RuleTable build_rule_table(int n);

} // namespace permrules
