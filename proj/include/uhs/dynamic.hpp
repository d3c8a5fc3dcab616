// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace uhs {

/// One step of a priority-queue workload: push a value, or extract the max.
struct DynamicOp {
    enum class Kind { Push, Extract };
    Kind kind = Kind::Push;
    std::int64_t value = 0; // ignored for Extract

    friend bool operator==(const DynamicOp&, const DynamicOp&) = default;
};

/// Seeded workload of `steps` operations. Pushes come with probability 2/3;
/// an extract is never generated while the queue is empty.
std::vector<DynamicOp> make_dynamic_workload(std::size_t steps, std::uint64_t seed);

struct DynamicStep {
    bool agree = true;
    std::optional<std::int64_t> heap_result;   // extracted key, if an extract
    std::optional<std::int64_t> oracle_result;
    std::uint64_t heap_comparisons = 0; // cumulative
    std::uint64_t oracle_shifts = 0;    // cumulative
};

struct DynamicTrace {
    std::vector<DynamicStep> steps;
    std::optional<std::size_t> first_disagreement;
    /// Shortest workload prefix that reproduces the first disagreement.
    std::vector<DynamicOp> failing_prefix;

    bool agreed() const noexcept { return !first_disagreement; }
    std::uint64_t heap_comparisons() const noexcept { return steps.empty() ? 0 : steps.back().heap_comparisons; }
    std::uint64_t oracle_shifts() const noexcept { return steps.empty() ? 0 : steps.back().oracle_shifts; }
};

/// Replay the workload on a max-heap and on a brute-force sorted list kept
/// in ascending order, comparing every extracted key. The heap is charged in
/// comparisons, the list in element shifts made by its insertions.
/// Throws DomainError on an extract from an empty queue.
DynamicTrace dynamic_scenario(std::span<const DynamicOp> ops);

} // namespace uhs
