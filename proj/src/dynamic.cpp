// SPDX-License-Identifier: Apache-2.0
#include "uhs/dynamic.hpp"

#include "uhs/element.hpp"
#include "uhs/error.hpp"
#include "uhs/heap.hpp"
#include "uhs/random.hpp"

#include <string>

namespace uhs {

namespace {

class SortedListQueue {
public:
    void push(std::int64_t value)
    {
        std::size_t i = items_.size();
        items_.push_back(value);
        while (i > 0 && items_[i - 1] > value) {
            items_[i] = items_[i - 1];
            ++shifts_;
            --i;
        }
        items_[i] = value;
    }

    std::int64_t extract_max()
    {
        const std::int64_t top = items_.back();
        items_.pop_back();
        return top;
    }

    bool empty() const noexcept { return items_.empty(); }
    std::size_t size() const noexcept { return items_.size(); }
    std::uint64_t shifts() const noexcept { return shifts_; }

private:
    std::vector<std::int64_t> items_;
    std::uint64_t shifts_ = 0;
};

} // namespace

std::vector<DynamicOp> make_dynamic_workload(std::size_t steps, std::uint64_t seed)
{
    Rng rng(seed);
    std::uniform_int_distribution<int> coin(0, 2);
    std::uniform_int_distribution<std::int64_t> value(0, 999'999);
    std::vector<DynamicOp> ops;
    ops.reserve(steps);
    std::size_t live = 0;
    for (std::size_t i = 0; i < steps; ++i) {
        if (live > 0 && coin(rng) == 0) {
            ops.push_back({DynamicOp::Kind::Extract, 0});
            --live;
        } else {
            ops.push_back({DynamicOp::Kind::Push, value(rng)});
            ++live;
        }
    }
    return ops;
}

DynamicTrace dynamic_scenario(std::span<const DynamicOp> ops)
{
    DynamicTrace trace;
    trace.steps.reserve(ops.size());
    Heap<Element<std::int64_t>> heap(HeapOrder::MaxAtRoot);
    SortedListQueue oracle;
    OpCounters counters;

    for (std::size_t i = 0; i < ops.size(); ++i) {
        DynamicStep step;
        if (ops[i].kind == DynamicOp::Kind::Push) {
            heap.push({ops[i].value, i}, counters);
            oracle.push(ops[i].value);
        } else {
            if (oracle.empty())
                throw DomainError("dynamic_scenario: extract from an empty queue at step " + std::to_string(i));
            step.oracle_result = oracle.extract_max();
            if (!heap.empty())
                step.heap_result = heap.pop_root(counters).key;
            step.agree = step.heap_result == step.oracle_result;
        }
        if (heap.size() != oracle.size() || !heap.valid())
            step.agree = false;
        step.heap_comparisons = counters.comparisons;
        step.oracle_shifts = oracle.shifts();
        if (!step.agree && !trace.first_disagreement) {
            trace.first_disagreement = i;
            trace.failing_prefix.assign(ops.begin(), ops.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        }
        trace.steps.push_back(step);
    }
    return trace;
}

} // namespace uhs
