// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <type_traits>
#include <utility>

#include "uhs/counters.hpp"
#include "uhs/element.hpp"
#include "uhs/error.hpp"

namespace uhs {

// Insertion sort. Stable; no scratch.
template <Keyed T>
void insertion_sort(std::span<T> elements, SortOrder order, OpCounters& counters)
{
    const CountedOrder cmp(order, counters);
    for (std::size_t i = 1; i < elements.size(); ++i) {
        T held = std::move(elements[i]);
        std::size_t j = i;
        while (j > 0 && cmp.before(held, elements[j - 1])) {
            elements[j] = std::move(elements[j - 1]);
            ++counters.element_moves;
            --j;
        }
        if (j != i) {
            elements[j] = std::move(held);
            ++counters.element_moves;
        }
    }
}

// Bubble sort with early exit after a pass without swaps. Stable.
template <Keyed T>
void bubble_sort(std::span<T> elements, SortOrder order, OpCounters& counters)
{
    const CountedOrder cmp(order, counters);
    for (std::size_t unsorted = elements.size(); unsorted > 1; --unsorted) {
        bool swapped = false;
        for (std::size_t j = 0; j + 1 < unsorted; ++j) {
            if (cmp.before(elements[j + 1], elements[j])) {
                counted_swap(elements[j], elements[j + 1], counters);
                swapped = true;
            }
        }
        if (!swapped)
            break;
    }
}

namespace detail {

template <Keyed T>
void merge_sort_range(std::span<T> a, std::span<T> scratch, std::size_t lo, std::size_t hi,
                      const CountedOrder& cmp)
{
    if (hi - lo < 2)
        return;
    OpCounters& counters = cmp.counters();
    const CallFrame frame(counters);
    const std::size_t mid = lo + (hi - lo) / 2;
    merge_sort_range(a, scratch, lo, mid, cmp);
    merge_sort_range(a, scratch, mid, hi, cmp);

    for (std::size_t k = lo; k < hi; ++k)
        scratch[k] = a[k];
    counters.element_moves += hi - lo;

    std::size_t i = lo, j = mid, out = lo;
    while (i < mid && j < hi) {
        // Equal keys take the left run first.
        if (cmp.before(scratch[j], scratch[i]))
            a[out++] = scratch[j++];
        else
            a[out++] = scratch[i++];
        ++counters.element_moves;
    }
    for (; i < mid; ++i, ++out, ++counters.element_moves)
        a[out] = scratch[i];
    for (; j < hi; ++j, ++out, ++counters.element_moves)
        a[out] = scratch[j];
}

} // namespace detail

/// Top-down merge sort. Stable. One scratch buffer of exactly n slots is
/// allocated up front and shared by every merge.
template <Keyed T>
void merge_sort(std::span<T> elements, SortOrder order, OpCounters& counters)
{
    if (elements.empty())
        return;
    ScratchBuffer<T> scratch(elements.size(), counters);
    detail::merge_sort_range(elements, scratch.span(), 0, elements.size(), CountedOrder(order, counters));
}

enum class PivotRule { LastElement, MedianOfThree, RandomSeeded };

namespace detail {

template <Keyed T>
class Quicksorter {
public:
    Quicksorter(std::span<T> a, SortOrder order, OpCounters& counters, PivotRule rule, std::uint64_t seed)
        : a_(a), cmp_(order, counters), rule_(rule), rng_(seed)
    {
    }

    // Recurses only into the smaller side and loops on the larger one, so
    // metered depth stays within log2(n) + 1 whatever the pivots do.
    void sort(std::size_t lo, std::size_t hi)
    {
        const CallFrame frame(cmp_.counters());
        while (hi - lo > 1) {
            const std::size_t p = partition(lo, hi);
            if (p - lo < hi - (p + 1)) {
                sort(lo, p);
                lo = p + 1;
            } else {
                sort(p + 1, hi);
                hi = p;
            }
        }
    }

private:
    void swap_at(std::size_t i, std::size_t j)
    {
        if (i != j)
            counted_swap(a_[i], a_[j], cmp_.counters());
    }

    void place_pivot(std::size_t lo, std::size_t hi)
    {
        const std::size_t last = hi - 1;
        switch (rule_) {
        case PivotRule::LastElement:
            return;
        case PivotRule::RandomSeeded: {
            std::uniform_int_distribution<std::size_t> pick(lo, last);
            swap_at(pick(rng_), last);
            return;
        }
        case PivotRule::MedianOfThree: {
            if (hi - lo < 3)
                return;
            const std::size_t mid = lo + (hi - lo) / 2;
            // Order a[lo], a[mid], a[last]; the median ends up at mid.
            if (cmp_.before(a_[mid], a_[lo]))
                swap_at(mid, lo);
            if (cmp_.before(a_[last], a_[lo]))
                swap_at(last, lo);
            if (cmp_.before(a_[last], a_[mid]))
                swap_at(last, mid);
            swap_at(mid, last);
            return;
        }
        }
    }

    // Lomuto partition of [lo, hi) around a[hi - 1]; returns the pivot's slot.
    std::size_t partition(std::size_t lo, std::size_t hi)
    {
        place_pivot(lo, hi);
        const std::size_t last = hi - 1;
        std::size_t store = lo;
        for (std::size_t j = lo; j < last; ++j) {
            if (cmp_.before(a_[j], a_[last])) {
                swap_at(store, j);
                ++store;
            }
        }
        swap_at(store, last);
        return store;
    }

    std::span<T> a_;
    CountedOrder cmp_;
    PivotRule rule_;
    std::mt19937_64 rng_;
};

} // namespace detail

/// Lomuto quicksort with a configurable pivot rule. Not stable. LastElement
/// on already sorted input is the n(n-1)/2-comparison worst case.
template <Keyed T>
void quicksort(std::span<T> elements, SortOrder order, OpCounters& counters,
               PivotRule pivot = PivotRule::LastElement, std::uint64_t seed = 0)
{
    if (elements.size() < 2)
        return;
    detail::Quicksorter<T>(elements, order, counters, pivot, seed).sort(0, elements.size());
}

/// Bucket sort over keys in [0, 1). Elements are distributed into
/// `bucket_count` (default n) equal-width buckets in input order, each bucket
/// is insertion-sorted, and the result is copied back. Stable. Scratch is n
/// element slots plus one offset per bucket.
template <Keyed T>
    requires std::floating_point<key_type_t<T>>
void bucket_sort(std::span<T> elements, SortOrder order, OpCounters& counters,
                 std::optional<std::size_t> bucket_count = std::nullopt)
{
    for (const T& e : elements)
        if (!(e.key >= 0 && e.key < 1))
            throw DomainError("bucket sort requires keys in [0, 1)");
    const std::size_t n = elements.size();
    if (n == 0)
        return;
    const std::size_t buckets = bucket_count.value_or(n);
    if (buckets == 0)
        throw DomainError("bucket sort requires at least one bucket");

    auto bucket_of = [&](const T& e) {
        auto b = static_cast<std::size_t>(e.key * static_cast<key_type_t<T>>(buckets));
        if (b >= buckets)
            b = buckets - 1;
        return order == SortOrder::Ascending ? b : buckets - 1 - b;
    };

    ScratchBuffer<std::size_t> ends(buckets, counters);
    ScratchBuffer<T> staged(n, counters);
    for (const T& e : elements)
        ++ends[bucket_of(e)];
    // Exclusive prefix sums: ends[b] becomes bucket b's start, and after the
    // scatter below it is the bucket's end.
    std::size_t running = 0;
    for (std::size_t b = 0; b < buckets; ++b)
        running += std::exchange(ends[b], running);
    for (const T& e : elements) {
        staged[ends[bucket_of(e)]++] = e;
        ++counters.element_moves;
    }
    std::size_t begin = 0;
    for (std::size_t b = 0; b < buckets; ++b) {
        insertion_sort(staged.span().subspan(begin, ends[b] - begin), order, counters);
        begin = ends[b];
    }
    for (std::size_t i = 0; i < n; ++i)
        elements[i] = staged[i];
    counters.element_moves += n;
}

/// Digit plan for LSD radix sort: `digit_count` digits of base `base`.
struct RadixPlan {
    std::uint64_t base = 256;
    std::uint32_t digit_count = 1;

    /// Smallest byte-wise plan covering every key up to `max_key`.
    static RadixPlan covering(std::uint64_t max_key)
    {
        const auto bits = static_cast<std::uint32_t>(std::bit_width(max_key));
        return RadixPlan{256, bits == 0 ? 1u : (bits + 7) / 8};
    }

    /// base^digit_count, saturated at UINT64_MAX.
    std::uint64_t capacity() const noexcept
    {
        std::uint64_t cap = 1;
        for (std::uint32_t i = 0; i < digit_count; ++i) {
            if (cap > UINT64_MAX / base)
                return UINT64_MAX;
            cap *= base;
        }
        return cap;
    }

    bool covers(std::uint64_t key) const noexcept
    {
        const std::uint64_t cap = capacity();
        return cap == UINT64_MAX ? true : key < cap;
    }
};

/// LSD radix sort: one stable counting pass per digit, least significant
/// first. Makes no key comparisons. Each pass scatters all n elements, so
/// element_moves is exactly digit_count * n. Scratch is n element slots plus
/// `base` counters, reused across passes.
template <Keyed T>
    requires std::integral<key_type_t<T>>
void radix_sort(std::span<T> elements, SortOrder order, OpCounters& counters,
                std::optional<RadixPlan> plan = std::nullopt)
{
    std::uint64_t max_key = 0;
    for (const T& e : elements) {
        if constexpr (std::is_signed_v<key_type_t<T>>)
            if (e.key < 0)
                throw DomainError("radix sort requires non-negative keys");
        max_key = std::max(max_key, static_cast<std::uint64_t>(e.key));
    }
    const RadixPlan p = plan.value_or(RadixPlan::covering(max_key));
    if (p.base < 2 || p.digit_count == 0)
        throw DomainError("radix plan needs base >= 2 and at least one digit");
    if (!p.covers(max_key))
        throw DomainError("key " + std::to_string(max_key) + " not covered by radix plan");
    const std::size_t n = elements.size();
    if (n == 0)
        return;

    ScratchBuffer<T> other(n, counters);
    ScratchBuffer<std::size_t> count(static_cast<std::size_t>(p.base), counters);
    std::span<T> src = elements;
    std::span<T> dst = other.span();
    unsigned __int128 divisor = 1;
    for (std::uint32_t pass = 0; pass < p.digit_count; ++pass) {
        auto slot = [&](const T& e) {
            const auto digit = static_cast<std::size_t>((static_cast<std::uint64_t>(e.key) / divisor) % p.base);
            return order == SortOrder::Ascending ? digit : static_cast<std::size_t>(p.base) - 1 - digit;
        };
        std::fill(count.span().begin(), count.span().end(), std::size_t{0});
        for (const T& e : src)
            ++count[slot(e)];
        std::size_t running = 0;
        for (std::size_t& c : count.span())
            running += std::exchange(c, running);
        for (const T& e : src)
            dst[count[slot(e)]++] = e;
        counters.element_moves += n;
        std::swap(src, dst);
        // Past 2^64 every digit is zero, but the pass still runs.
        if (divisor <= UINT64_MAX)
            divisor *= p.base;
    }
    // Odd pass counts leave the result in scratch. The hand-back is not a
    // digit placement and is not charged as element moves.
    if (src.data() != elements.data())
        std::copy(src.begin(), src.end(), elements.begin());
}

} // namespace uhs
