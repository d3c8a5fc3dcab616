// SPDX-License-Identifier: Apache-2.0
#include "uhs/heap.hpp"

#include <atomic>

namespace uhs {

NodeHeight node_height(std::size_t i, std::size_t n)
{
    if (i >= n)
        throw DomainError("node_height: index outside the tree");
    // The leftmost path below a node of a complete tree is its longest.
    std::size_t h = 0;
    for (std::size_t j = left_child(i); j < n; j = left_child(j))
        ++h;
    return NodeHeight{h};
}

namespace testing {

namespace {
std::atomic<bool> g_sift_child_fault{false};
}

void set_sift_child_fault(bool enabled) noexcept { g_sift_child_fault.store(enabled, std::memory_order_relaxed); }
bool sift_child_fault() noexcept { return g_sift_child_fault.load(std::memory_order_relaxed); }

} // namespace testing

} // namespace uhs
