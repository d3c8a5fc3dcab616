// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "uhs/counters.hpp"
#include "uhs/element.hpp"
#include "uhs/error.hpp"

namespace uhs {

enum class HeapOrder { MaxAtRoot, MinAtRoot };

/// Ascending sorts leave maxima at the tail, so they extract from a max-heap.
constexpr HeapOrder heap_order_for(SortOrder order) noexcept
{
    return order == SortOrder::Ascending ? HeapOrder::MaxAtRoot : HeapOrder::MinAtRoot;
}

// 0-based complete binary tree layout.
constexpr std::size_t left_child(std::size_t i) noexcept { return 2 * i + 1; }
constexpr std::size_t right_child(std::size_t i) noexcept { return 2 * i + 2; }

constexpr std::size_t parent_index(std::size_t i)
{
    if (i == 0)
        throw DomainError("the root has no parent");
    return (i - 1) / 2;
}

/// Height of a node above the leaf level.
struct NodeHeight {
    std::size_t value = 0;
    friend auto operator<=>(const NodeHeight&, const NodeHeight&) = default;
};

/// Height of node `i` in a complete tree of `n` nodes; leaves are 0.
NodeHeight node_height(std::size_t i, std::size_t n);

/// Strict dominance: `a` belongs strictly above `b` in a heap of this order.
template <Keyed T>
constexpr bool outranks(const T& a, const T& b, HeapOrder order)
{
    return order == HeapOrder::MaxAtRoot ? b.key < a.key : a.key < b.key;
}

template <Keyed T>
bool is_heap(std::span<const T> elements, std::size_t size, HeapOrder order)
{
    if (size > elements.size())
        throw DomainError("is_heap: size exceeds sequence length");
    for (std::size_t i = 1; i < size; ++i)
        if (outranks(elements[i], elements[(i - 1) / 2], order))
            return false;
    return true;
}

template <Keyed T>
bool is_heap(std::span<T> elements, std::size_t size, HeapOrder order)
{
    return is_heap(std::span<const T>(elements), size, order);
}

namespace testing {
// Fault hook for exercising the verification harness: when set, sift_down
// descends into the losing child whenever a node has two children.
void set_sift_child_fault(bool enabled) noexcept;
bool sift_child_fault() noexcept;
} // namespace testing

/// Let `elements[i]` float down until the subtree at `i` is a heap. Both child
/// subtrees must already be heaps. Ties never cause a swap, and when both
/// children tie and beat the parent the left one is taken. Costs at most two
/// comparisons per level.
template <Keyed T>
void sift_down(std::span<T> elements, std::size_t heap_size, std::size_t i, HeapOrder order,
               OpCounters& counters)
{
    if (heap_size > elements.size())
        throw DomainError("sift_down: heap size exceeds sequence length");
    if (i >= heap_size)
        throw IndexOutOfHeap("sift_down: index outside the live heap");

    const bool fault = testing::sift_child_fault();
    for (;;) {
        const std::size_t l = left_child(i);
        if (l >= heap_size)
            return;
        const std::size_t r = l + 1;
        std::size_t top = i;
        ++counters.comparisons;
        if (outranks(elements[l], elements[top], order))
            top = l;
        if (r < heap_size) {
            ++counters.comparisons;
            if (outranks(elements[r], elements[top], order))
                top = r;
            if (fault && top != i)
                top = top == l ? r : l;
        }
        if (top == i)
            return;
        counted_swap(elements[i], elements[top], counters);
        i = top;
    }
}

/// Let `elements[i]` rise while it outranks its parent. Returns its final index.
template <Keyed T>
std::size_t sift_up(std::span<T> elements, std::size_t i, HeapOrder order, OpCounters& counters)
{
    while (i > 0) {
        const std::size_t p = (i - 1) / 2;
        ++counters.comparisons;
        if (!outranks(elements[i], elements[p], order))
            break;
        counted_swap(elements[i], elements[p], counters);
        i = p;
    }
    return i;
}

/// Bottom-up heap construction: sift_down on every internal node from the
/// last one to the root. Total cost is at most 2(n-1) comparisons.
template <Keyed T>
void build_heap(std::span<T> elements, HeapOrder order, OpCounters& counters)
{
    const std::size_t n = elements.size();
    for (std::size_t i = n / 2; i-- > 0;)
        sift_down(elements, n, i, order, counters);
}

/// Binary heap owning its storage.
///
/// Mirrors the array-plus-boundary model: `elements()` is the backing array
/// and `size()` the live heap boundary. Removals park the removed element just
/// past the boundary, so draining a max-heap with pop_root leaves the backing
/// array sorted ascending. push reuses a parked slot before growing.
template <Keyed T>
class Heap {
public:
    explicit Heap(HeapOrder order = HeapOrder::MaxAtRoot) : order_(order) {}

    static Heap build(std::vector<T> elements, HeapOrder order, OpCounters& counters)
    {
        Heap heap(order);
        heap.elements_ = std::move(elements);
        heap.heap_size_ = heap.elements_.size();
        build_heap(std::span<T>(heap.elements_), order, counters);
        return heap;
    }

    std::size_t size() const noexcept { return heap_size_; }
    bool empty() const noexcept { return heap_size_ == 0; }
    HeapOrder order() const noexcept { return order_; }

    std::span<const T> elements() const noexcept { return elements_; }
    std::span<const T> live() const noexcept { return std::span<const T>(elements_).first(heap_size_); }

    bool valid() const { return is_heap(elements(), heap_size_, order_); }

    const T& peek() const
    {
        if (empty())
            throw EmptyHeap("peek on an empty heap");
        return elements_.front();
    }

    void push(T x, OpCounters& counters)
    {
        if (heap_size_ < elements_.size())
            elements_[heap_size_] = std::move(x);
        else
            elements_.push_back(std::move(x));
        ++heap_size_;
        sift_up(std::span<T>(elements_), heap_size_ - 1, order_, counters);
    }

    T pop_root(OpCounters& counters)
    {
        if (empty())
            throw EmptyHeap("pop_root on an empty heap");
        return remove_at(0, counters);
    }

    /// Remove the element at heap index `i`. The last live element takes its
    /// place and is sifted up, or down if it cannot rise.
    T remove_at(std::size_t i, OpCounters& counters)
    {
        if (i >= heap_size_)
            throw IndexOutOfHeap("remove_at: index outside the live heap");
        const std::size_t last = heap_size_ - 1;
        std::span<T> all(elements_);
        if (i != last)
            counted_swap(elements_[i], elements_[last], counters);
        heap_size_ = last;
        if (i < heap_size_ && sift_up(all.first(heap_size_), i, order_, counters) == i)
            sift_down(all, heap_size_, i, order_, counters);
        return elements_[last];
    }

private:
    std::vector<T> elements_;
    std::size_t heap_size_ = 0;
    HeapOrder order_;
};

} // namespace uhs
