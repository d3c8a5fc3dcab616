// SPDX-License-Identifier: Apache-2.0
#include "uhs/instrumentation.hpp"

#include <algorithm>
#include <stdexcept>

#include "uhs/heap.hpp"
#include "uhs/random.hpp"

namespace uhs {

namespace {

template <SortKey K>
bool has_inversion(std::span<const Element<K>> sorted)
{
    // Equal keys are contiguous after sorting, so adjacent pairs suffice.
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i - 1].key == sorted[i].key && sorted[i - 1].payload > sorted[i].payload)
            return true;
    return false;
}

template <SortKey K, class MapKey>
bool sort_and_check(AlgorithmId algorithm, std::span<const std::int64_t> keys, SortOrder order,
                    const SortOptions& options, MapKey map_key)
{
    std::vector<Element<K>> elements(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i)
        elements[i] = {map_key(keys[i]), i};
    OpCounters counters;
    sort_with(algorithm, std::span<Element<K>>(elements), order, counters, options);
    return has_inversion(std::span<const Element<K>>(elements));
}

// Every sequence of length n over {0, 1, 2}, in lexicographic order.
template <class Visit>
bool for_each_small_sequence(std::size_t n, Visit visit)
{
    std::vector<std::int64_t> keys(n, 0);
    for (;;) {
        if (visit(std::span<const std::int64_t>(keys)))
            return true;
        std::size_t i = n;
        while (i > 0 && keys[i - 1] == 2)
            keys[--i] = 0;
        if (i == 0)
            return false;
        ++keys[i - 1];
    }
}

constexpr std::size_t kExhaustiveMaxLength = 6;

} // namespace

bool inverts_equal_keys(AlgorithmId algorithm, std::span<const std::int64_t> keys, SortOrder order,
                        const SortOptions& options)
{
    if (algorithm == AlgorithmId::Bucket) {
        std::int64_t max_key = 0;
        for (std::int64_t k : keys) {
            if (k < 0)
                throw DomainError("bucket stability keys must be non-negative");
            max_key = std::max(max_key, k);
        }
        const double scale = static_cast<double>(max_key) + 1.0;
        return sort_and_check<double>(algorithm, keys, order, options,
                                      [scale](std::int64_t k) { return static_cast<double>(k) / scale; });
    }
    return sort_and_check<std::int64_t>(algorithm, keys, order, options, [](std::int64_t k) { return k; });
}

StabilityVerdict stability_check(AlgorithmId algorithm, std::size_t trials, std::size_t max_n, std::uint64_t seed,
                                 const SortOptions& options)
{
    if (trials == 0)
        throw DomainError("stability_check needs at least one trial");

    std::optional<UnstableWitness> witness;
    for (SortOrder order : {SortOrder::Ascending, SortOrder::Descending}) {
        for (std::size_t n = 2; n <= kExhaustiveMaxLength && !witness; ++n) {
            for_each_small_sequence(n, [&](std::span<const std::int64_t> keys) {
                if (!inverts_equal_keys(algorithm, keys, order, options))
                    return false;
                witness = UnstableWitness{{keys.begin(), keys.end()}, order};
                return true;
            });
        }
        if (witness)
            break;
    }

    Rng rng(derive_seed({seed, static_cast<std::uint64_t>(algorithm)}));
    std::uniform_int_distribution<std::size_t> pick_n(0, max_n);
    for (std::size_t t = 0; t < trials && !witness; ++t) {
        const std::size_t n = pick_n(rng);
        const auto top = static_cast<std::int64_t>(std::max<std::size_t>(1, n / 4));
        std::uniform_int_distribution<std::int64_t> pick_key(0, top);
        std::vector<std::int64_t> keys(n);
        for (auto& k : keys)
            k = pick_key(rng);
        const SortOrder order = t % 2 == 0 ? SortOrder::Ascending : SortOrder::Descending;
        if (inverts_equal_keys(algorithm, keys, order, options))
            witness = UnstableWitness{std::move(keys), order};
    }

    if (!witness)
        return StableOverTrials{trials};
    if (!inverts_equal_keys(algorithm, witness->keys, witness->order, options))
        throw std::logic_error("stability witness did not reproduce its inversion");
    return *witness;
}

BuildAudit build_cost_audit(std::span<const std::size_t> n_values, std::uint64_t seed)
{
    BuildAudit audit;
    for (std::size_t n : n_values) {
        if (n == 0)
            throw DomainError("build_cost_audit: n must be at least 1");
        const auto keys = random_permutation(n, derive_seed({seed, n}));
        std::vector<Element<std::int64_t>> elements(n);
        for (std::size_t i = 0; i < n; ++i)
            elements[i] = {keys[i], i};
        OpCounters counters;
        build_heap(std::span<Element<std::int64_t>>(elements), HeapOrder::MaxAtRoot, counters);
        audit.rows.push_back({n, counters.comparisons, static_cast<double>(counters.comparisons) / n});
        if (!audit.failed_n && counters.comparisons > 2 * (n - 1))
            audit.failed_n = n;
    }
    return audit;
}

} // namespace uhs
