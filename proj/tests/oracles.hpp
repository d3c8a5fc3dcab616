// SPDX-License-Identifier: Apache-2.0
// Reference implementations the suites check the library against. None of
// them share code with the library.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "uhs/element.hpp"

namespace oracle {

using Item = uhs::Element<std::int64_t>;

inline std::vector<Item> tag(const std::vector<std::int64_t>& keys)
{
    std::vector<Item> out(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i)
        out[i] = {keys[i], i};
    return out;
}

inline std::vector<std::int64_t> keys_of(const std::vector<Item>& items)
{
    std::vector<std::int64_t> out;
    out.reserve(items.size());
    for (const auto& e : items)
        out.push_back(e.key);
    return out;
}

template <class T>
std::vector<T> stable_sorted(std::vector<T> v, bool ascending)
{
    std::stable_sort(v.begin(), v.end(), [ascending](const T& a, const T& b) {
        return ascending ? a.key < b.key : b.key < a.key;
    });
    return v;
}

// Checks every node against every ancestor, not just its parent.
template <class T>
bool heap_by_ancestors(const std::vector<T>& v, std::size_t size, bool max_at_root)
{
    for (std::size_t i = 1; i < size; ++i)
        for (std::size_t a = i; a > 0;) {
            a = (a - 1) / 2;
            if (max_at_root ? v[a].key < v[i].key : v[i].key < v[a].key)
                return false;
        }
    return true;
}

inline long long height(std::size_t i, std::size_t n)
{
    if (i >= n)
        return -1;
    return 1 + std::max(height(2 * i + 1, n), height(2 * i + 2, n));
}

template <class T>
std::map<decltype(T::key), std::size_t> multiset(const std::vector<T>& v, std::size_t size)
{
    std::map<decltype(T::key), std::size_t> m;
    for (std::size_t i = 0; i < size; ++i)
        ++m[v[i].key];
    return m;
}

// Two equal keys leave in the opposite order to the one they came in.
template <class T>
bool inverts_equal_keys(const std::vector<T>& sorted)
{
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            if (sorted[i].key == sorted[j].key && sorted[i].payload > sorted[j].payload)
                return true;
    return false;
}

constexpr std::uint64_t choose2(std::uint64_t n) { return n * (n - 1) / 2; }

inline std::uint64_t ceil_log2(std::uint64_t n)
{
    std::uint64_t k = 0;
    while ((std::uint64_t{1} << k) < n)
        ++k;
    return k;
}

// Build cost plus n - 1 root sift-downs, two comparisons per level.
inline std::uint64_t heapsort_bound(std::uint64_t n)
{
    return 2 * (n - 1) * ceil_log2(n) + 2 * (n - 1);
}

inline std::vector<std::int64_t> random_keys(std::size_t n, std::int64_t hi, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::int64_t> d(0, hi);
    std::vector<std::int64_t> v(n);
    for (auto& k : v)
        k = d(rng);
    return v;
}

} // namespace oracle
