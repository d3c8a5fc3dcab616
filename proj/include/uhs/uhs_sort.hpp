// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>

#include "uhs/counters.hpp"
#include "uhs/element.hpp"
#include "uhs/heap.hpp"

namespace uhs {

struct NoSortObserver {
    template <class T>
    void operator()(std::span<const T>, std::size_t) const noexcept
    {
    }
};

/// In-place heapsort. Builds a heap over the whole array, then repeatedly
/// swaps the root with the last live element, shrinks the heap by one and
/// restores it from the root, until one element is left.
///
/// Ascending order runs on a max-heap, descending on a min-heap. No auxiliary
/// element storage is used and the sift-down is iterative, so aux_peak_slots
/// and recursion_peak both stay at zero.
///
/// `observe(elements, heap_size)` is called after the build and after every
/// extraction; tests use it to check the heap-prefix / sorted-suffix split.
template <Keyed T, class Observer = NoSortObserver>
void uhs_sort(std::span<T> elements, SortOrder order, OpCounters& counters, Observer&& observe = {})
{
    const std::size_t n = elements.size();
    if (n <= 1)
        return;
    const HeapOrder heap_order = heap_order_for(order);
    build_heap(elements, heap_order, counters);
    observe(std::span<const T>(elements), n);
    for (std::size_t end = n - 1; end > 0; --end) {
        counted_swap(elements[0], elements[end], counters);
        sift_down(elements, end, 0, heap_order, counters);
        observe(std::span<const T>(elements), end);
    }
}

/// True when [0, heap_size) is a heap, [heap_size, n) is in final sorted
/// order, and no heap element belongs after the first sorted element.
template <Keyed T>
bool sorted_region_invariant(std::span<const T> elements, std::size_t heap_size, SortOrder order)
{
    if (heap_size > elements.size())
        throw DomainError("sorted_region_invariant: heap size exceeds sequence length");
    const HeapOrder heap_order = heap_order_for(order);
    if (!is_heap(elements, heap_size, heap_order))
        return false;
    auto belongs_before = [order](const T& a, const T& b) {
        return order == SortOrder::Ascending ? a.key < b.key : b.key < a.key;
    };
    for (std::size_t i = heap_size + 1; i < elements.size(); ++i)
        if (belongs_before(elements[i], elements[i - 1]))
            return false;
    if (heap_size == 0 || heap_size == elements.size())
        return true;
    const T& boundary = elements[heap_size];
    for (std::size_t i = 0; i < heap_size; ++i)
        if (belongs_before(boundary, elements[i]))
            return false;
    return true;
}

} // namespace uhs
