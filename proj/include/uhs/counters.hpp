// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "uhs/element.hpp"

namespace uhs {

/// Machine-independent cost of one sorting or heap run.
///
/// Every algorithm in the library takes an `OpCounters&` and charges it as it
/// works; nothing is global, so runs on disjoint data can proceed in parallel
/// with one counter set each. All fields only ever grow during a run.
struct OpCounters {
    std::uint64_t comparisons = 0;
    std::uint64_t swaps = 0;
    std::uint64_t element_moves = 0;
    /// Peak number of auxiliary slots held through ScratchBuffer.
    std::uint64_t aux_peak_slots = 0;
    /// Deepest nesting of metered calls (CallFrame).
    std::uint64_t recursion_peak = 0;

    void acquire_aux(std::uint64_t slots) noexcept
    {
        aux_live_ += slots;
        aux_peak_slots = std::max(aux_peak_slots, aux_live_);
    }
    void release_aux(std::uint64_t slots) noexcept { aux_live_ -= slots; }

    void enter_call() noexcept
    {
        ++depth_live_;
        recursion_peak = std::max(recursion_peak, depth_live_);
    }
    void leave_call() noexcept { --depth_live_; }

    friend bool operator==(const OpCounters&, const OpCounters&) = default;

private:
    std::uint64_t aux_live_ = 0;
    std::uint64_t depth_live_ = 0;
};

/// Auxiliary storage metered against an OpCounters for its whole lifetime.
/// This is the only way library algorithms obtain element-sized scratch space.
template <class T>
class ScratchBuffer {
public:
    ScratchBuffer(std::size_t slots, OpCounters& counters)
        : data_(slots), counters_(&counters)
    {
        counters_->acquire_aux(slots);
    }
    ~ScratchBuffer() { counters_->release_aux(data_.size()); }

    ScratchBuffer(const ScratchBuffer&) = delete;
    ScratchBuffer& operator=(const ScratchBuffer&) = delete;

    std::span<T> span() noexcept { return data_; }
    T& operator[](std::size_t i) noexcept { return data_[i]; }
    const T& operator[](std::size_t i) const noexcept { return data_[i]; }
    std::size_t size() const noexcept { return data_.size(); }

private:
    std::vector<T> data_;
    OpCounters* counters_;
};

class CallFrame {
public:
    explicit CallFrame(OpCounters& counters) : counters_(&counters) { counters_->enter_call(); }
    ~CallFrame() { counters_->leave_call(); }
    CallFrame(const CallFrame&) = delete;
    CallFrame& operator=(const CallFrame&) = delete;

private:
    OpCounters* counters_;
};

/// Strict "comes before" under a sort order, charging one comparison per call.
class CountedOrder {
public:
    CountedOrder(SortOrder order, OpCounters& counters) : order_(order), counters_(&counters) {}

    template <Keyed T>
    bool before(const T& a, const T& b) const
    {
        ++counters_->comparisons;
        return order_ == SortOrder::Ascending ? a.key < b.key : b.key < a.key;
    }

    SortOrder order() const noexcept { return order_; }
    OpCounters& counters() const noexcept { return *counters_; }

private:
    SortOrder order_;
    OpCounters* counters_;
};

template <class T>
void counted_swap(T& a, T& b, OpCounters& counters)
{
    using std::swap;
    swap(a, b);
    ++counters.swaps;
}

} // namespace uhs
