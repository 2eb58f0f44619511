#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "permrules/engine.hpp"
#include "permrules/rules.hpp"

// Independent oracles the rule-driven engine is validated against.

namespace permrules {

// Classic successor computation.  The symbol order is fixed by the starting
// arrangement, so any alphabet works.
class NextPermutationOracle {
public:
    // Duplicate symbols throw std::invalid_argument.
    explicit NextPermutationOracle(Permutation start);

    const Permutation& current() const { return perm_; }

    // Steps to the lexicographic successor; returns false once the
    // descending arrangement has been passed (the state then wraps back to
    // the start).
    bool advance();

private:
    Permutation perm_;
    std::array<int, 256> rank_{};
};

struct RecursiveLexResult {
    std::vector<Permutation> sequence;
    // Element placements into freshly materialized sequences: the prepends
    // and block concatenations the rule-driven engine never performs.
    std::uint64_t concatenations = 0;
    // Most symbols simultaneously held in materialized sequences.
    std::uint64_t peak_elements = 0;
};

// Builds the whole sequence the slow way: for each i, take the i-th symbol
// and prepend it to every arrangement of the remaining ones, recursing;
// blocks are concatenated in i order.  Materializes all n! permutations by
// design, so it is capped at n <= 9.
RecursiveLexResult recursive_lex(const Permutation& permutee);

// The unique displacement vector r with q[k + r[k]] = p[k]; the inverse of
// apply_rule.  Symbol mismatch throws std::invalid_argument.
Rule diff_as_rule(const Permutation& p, const Permutation& q);

} // namespace permrules
