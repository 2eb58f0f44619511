#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "permrules/errors.hpp"
#include "permrules/schedule.hpp"

namespace permrules {

using Symbol = char;
using Permutation = std::vector<Symbol>;

// 'a', 'b', 'c', ... — the default alphabet.
Permutation identity_permutation(int n);

// Exact counters for one full run.
struct RunStats {
    std::uint64_t applications = 0;      // rules applied, n!-1 for a complete run
    std::uint64_t weighted_moves = 0;    // rule width m+1 per application, zeros included
    std::uint64_t nonzero_moves = 0;     // displacement entries != 0 actually applied
    std::uint64_t comparisons = 0;       // scan-backend search cost, 0 elsewhere
    std::uint64_t peak_rule_storage = 0; // displacement entries held by the table
};

// Out-of-place application: result[k + rule[k]] = perm[k].  A collision or
// out-of-range target means the rule is no bijection: invariant_error.
Permutation apply_rule(const Permutation& perm, const Rule& rule);

struct GenerateOptions {
    // Re-validate every step: rule bijection plus symbol-multiset
    // preservation.  Off by default to keep the benchmark path clean.
    bool validate_steps = false;
};

namespace detail {

// Unchecked hot-path application; returns the count of nonzero moves.
inline int apply_counting(const Permutation& from, const Rule& rule, Permutation& to) {
    const std::size_t n = from.size();
    int nonzero = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const Displacement d = rule.moves[k];
        to[static_cast<std::size_t>(static_cast<std::ptrdiff_t>(k) + d)] = from[k];
        nonzero += (d != 0);
    }
    return nonzero;
}

void require_distinct(const Permutation& permutee);
void check_multiset(const Permutation& produced, const Permutation& sorted_reference,
                    std::uint64_t p);

} // namespace detail

// Streams the full lexicographic sequence: emits the permutee (rank 1), then
// for p = 1..n!-1 looks up the rule for p, applies it and emits the result.
// The sink sees exactly n! permutations.  Failures mid-run carry the failing
// sequence index.
template <class Sink>
RunStats generate_sequence(const Permutation& permutee, Scheduler& scheduler, Sink&& sink,
                           const GenerateOptions& options = {}) {
    detail::require_distinct(permutee);
    const int n = static_cast<int>(permutee.size());
    if (scheduler.table().n != n) {
        throw std::invalid_argument("generate_sequence: scheduler built for n=" +
                                    std::to_string(scheduler.table().n) + ", permutee has n=" +
                                    std::to_string(n));
    }

    RunStats stats;
    stats.peak_rule_storage = scheduler.table().displacement_entries();

    Permutation current = permutee;
    Permutation scratch(permutee.size());
    Permutation sorted_reference;
    if (options.validate_steps) {
        sorted_reference = permutee;
        std::sort(sorted_reference.begin(), sorted_reference.end());
    }

    sink(std::as_const(current));

    const std::uint64_t total = factorial(n);
    for (std::uint64_t p = 1; p < total; ++p) {
        try {
            const Rule& rule = scheduler.lookup(p);
            if (options.validate_steps) {
                scratch = apply_rule(current, rule);
                detail::check_multiset(scratch, sorted_reference, p);
                stats.nonzero_moves += static_cast<std::uint64_t>(rule.nonzero_moves());
            } else {
                stats.nonzero_moves +=
                    static_cast<std::uint64_t>(detail::apply_counting(current, rule, scratch));
            }
            current.swap(scratch);
            ++stats.applications;
            stats.weighted_moves += static_cast<std::uint64_t>(rule.width);
        } catch (const invariant_error& e) {
            throw invariant_error("sequence index " + std::to_string(p) + ": " + e.what());
        }
        sink(std::as_const(current));
    }

    stats.comparisons = scheduler.comparisons();
    return stats;
}

// Convenience: builds the rule table and scheduler for the chosen backend.
template <class Sink>
RunStats generate_sequence(const Permutation& permutee, Backend backend, Sink&& sink,
                           const GenerateOptions& options = {}) {
    const RuleTable table = build_rule_table(static_cast<int>(permutee.size()));
    auto scheduler = make_scheduler(table, backend);
    return generate_sequence(permutee, *scheduler, std::forward<Sink>(sink), options);
}

// Sinks --------------------------------------------------------------------

struct NullSink {
    void operator()(const Permutation&) const noexcept {}
};

class CollectSink {
public:
    void operator()(const Permutation& perm) { collected_.push_back(perm); }
    const std::vector<Permutation>& permutations() const { return collected_; }

private:
    std::vector<Permutation> collected_;
};

// Space-separated symbols, one permutation per line.  An optional cap stops
// printing after `limit` lines while the run carries on.
class LineSink {
public:
    static constexpr std::uint64_t unlimited = ~std::uint64_t{0};

    explicit LineSink(std::ostream& out, std::uint64_t limit = unlimited)
        : out_(&out), remaining_(limit) {}

    void operator()(const Permutation& perm) {
        if (remaining_ == 0) return;
        --remaining_;
        line_.clear();
        for (std::size_t k = 0; k < perm.size(); ++k) {
            if (k > 0) line_.push_back(' ');
            line_.push_back(perm[k]);
        }
        line_.push_back('\n');
        out_->write(line_.data(), static_cast<std::streamsize>(line_.size()));
    }

private:
    std::ostream* out_;
    std::uint64_t remaining_;
    std::string line_;
};

} // namespace permrules
