// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "uhs/baseline_sorts.hpp"
#include "uhs/counters.hpp"
#include "uhs/element.hpp"
#include "uhs/error.hpp"
#include "uhs/uhs_sort.hpp"

namespace uhs {

enum class AlgorithmId { Insertion, Merge, Quick, Bucket, Radix, Bubble, UHS };

inline constexpr std::array<AlgorithmId, 7> kAllAlgorithms = {
    AlgorithmId::Insertion, AlgorithmId::Merge, AlgorithmId::Quick, AlgorithmId::Bucket,
    AlgorithmId::Radix,     AlgorithmId::Bubble, AlgorithmId::UHS,
};

std::string_view algorithm_name(AlgorithmId id) noexcept;
/// Accepts the canonical names plus a few aliases ("heapsort", "quicksort").
std::optional<AlgorithmId> parse_algorithm(std::string_view name) noexcept;

std::string_view pivot_rule_name(PivotRule rule) noexcept;
std::optional<PivotRule> parse_pivot_rule(std::string_view name) noexcept;

/// True for the algorithms expected to keep equal keys in input order.
bool expected_stable(AlgorithmId id) noexcept;

struct SortOptions {
    PivotRule pivot = PivotRule::LastElement;
    std::uint64_t pivot_seed = 0;
    std::optional<RadixPlan> radix_plan;
    std::optional<std::size_t> bucket_count;
};

/// Run `algorithm` in place on `elements`, charging `counters`. Bucket sort
/// needs floating keys and radix sort needs integer keys; any other pairing
/// is a DomainError.
template <Keyed T>
void sort_with(AlgorithmId algorithm, std::span<T> elements, SortOrder order, OpCounters& counters,
               const SortOptions& options = {})
{
    using Key = key_type_t<T>;
    switch (algorithm) {
    case AlgorithmId::Insertion:
        return insertion_sort(elements, order, counters);
    case AlgorithmId::Merge:
        return merge_sort(elements, order, counters);
    case AlgorithmId::Quick:
        return quicksort(elements, order, counters, options.pivot, options.pivot_seed);
    case AlgorithmId::Bubble:
        return bubble_sort(elements, order, counters);
    case AlgorithmId::UHS:
        return uhs_sort(elements, order, counters);
    case AlgorithmId::Bucket:
        if constexpr (std::floating_point<Key>)
            return bucket_sort(elements, order, counters, options.bucket_count);
        else
            throw DomainError("bucket sort requires decimal keys in [0, 1)");
    case AlgorithmId::Radix:
        if constexpr (std::integral<Key>)
            return radix_sort(elements, order, counters, options.radix_plan);
        else
            throw DomainError("radix sort requires non-negative integer keys");
    }
}

template <SortKey K>
struct CountedRun {
    std::vector<Element<K>> elements;
    OpCounters counters;
};

/// Sort a copy with fresh counters and hand back both.
template <SortKey K>
CountedRun<K> counted_sort(AlgorithmId algorithm, std::vector<Element<K>> elements, SortOrder order,
                           const SortOptions& options = {})
{
    CountedRun<K> run{std::move(elements), {}};
    sort_with(algorithm, std::span<Element<K>>(run.elements), order, run.counters, options);
    return run;
}

} // namespace uhs
