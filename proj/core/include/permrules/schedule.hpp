#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

#include "permrules/rules.hpp"

namespace permrules {

enum class Backend { scan, queue, direct };

std::string_view to_string(Backend backend);
std::optional<Backend> backend_from_string(std::string_view name);

// A rule paired with the next sequence index it applies to.  advance() moves
// the index one step; next_index stays congruent to the base index mod step.
struct ScheduledRule {
    std::uint64_t next_index = 0;
    std::uint64_t step = 0;
    const Rule* rule = nullptr;  // borrowed from the owning table
    int list_position = 0;       // 1-based position in flatten order

    void advance() { next_index += step; }
};

// Answers "which rule applies at sequence index p?" and consumes the slot.
// The scan and queue backends are stateful: they require p = 1, 2, ...,
// n!-1, each exactly once and in order, and throw invariant_error otherwise.
// A query no rule matches is a fatal invariant_error, never a silent skip.
// The table must outlive the scheduler.
class Scheduler {
public:
    virtual ~Scheduler() = default;

    virtual const Rule& lookup(std::uint64_t p) = 0;
    virtual Backend backend() const = 0;

    const RuleTable& table() const { return table_; }

    // Equality comparisons spent searching; only the scan backend counts
    // (each hit costs its list position).
    virtual std::uint64_t comparisons() const { return 0; }

    // Times each table entry has been returned, flatten order.  The direct
    // backend is pure and does not tally; its counts stay zero.
    const std::vector<std::uint64_t>& hit_counts() const { return hits_; }

protected:
    explicit Scheduler(const RuleTable& table);

    void require_in_turn(std::uint64_t p);

    const RuleTable& table_;
    std::vector<std::uint64_t> hits_;
    std::uint64_t expected_next_ = 1;
};

// The searched mutable list, in flatten order.  Frequent rules sit at the
// front, so measured search cost runs well under the C(n,2)/2 bound.
class ScanScheduler final : public Scheduler {
public:
    explicit ScanScheduler(const RuleTable& table);
    const Rule& lookup(std::uint64_t p) override;
    Backend backend() const override { return Backend::scan; }
    std::uint64_t comparisons() const override { return comparisons_; }

private:
    std::vector<ScheduledRule> slots_;
    std::uint64_t comparisons_ = 0;
};

// Min-heap on next_index.  The applicable-index sets are disjoint, so two
// entries sharing a front index is an invariant breach, not a tie to break.
class QueueScheduler final : public Scheduler {
public:
    explicit QueueScheduler(const RuleTable& table);
    const Rule& lookup(std::uint64_t p) override;
    Backend backend() const override { return Backend::queue; }

private:
    using HeapEntry = std::pair<std::uint64_t, std::size_t>;  // next_index, entry index
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> heap_;
};

// Stateless closed form: no search, no mutation, freely shareable.  Doubles
// as a cross-check oracle for the stateful backends.
class DirectScheduler final : public Scheduler {
public:
    explicit DirectScheduler(const RuleTable& table);
    const Rule& lookup(std::uint64_t p) override;
    Backend backend() const override { return Backend::direct; }
};

std::unique_ptr<Scheduler> make_scheduler(const RuleTable& table, Backend backend);

// Coordinates of the rule owning sequence index p: m is the largest value
// with m! dividing p, i = (p / m!) mod (m+1).  Throws for p = 0 or p >= n!.
RuleCoordinates direct_coordinates(int n, std::uint64_t p);

} // namespace permrules
