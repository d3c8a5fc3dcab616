// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <concepts>
#include <cstdint>
#include <type_traits>
#include <utility>

namespace uhs {

template <class K>
concept SortKey = std::totally_ordered<K> && std::copyable<K>;

/// A sort key with an opaque payload riding along. Only the key takes part in
/// comparisons; stability checks store the element's original index in the
/// payload.
template <SortKey K>
struct Element {
    K key{};
    std::uint64_t payload = 0;

    friend bool operator==(const Element&, const Element&) = default;
};

template <class T>
concept Keyed = requires(const T& t) {
    requires SortKey<std::remove_cvref_t<decltype(t.key)>>;
};

template <Keyed T>
using key_type_t = std::remove_cvref_t<decltype(std::declval<const T&>().key)>;

enum class SortOrder { Ascending, Descending };

} // namespace uhs
