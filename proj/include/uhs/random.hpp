// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace uhs {

using Rng = std::mt19937_64;

/// Combine a base seed with run coordinates into a child seed (splitmix64).
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts) noexcept;

/// Seeded uniform permutation of 0..n-1.
std::vector<std::int64_t> random_permutation(std::size_t n, std::uint64_t seed);

} // namespace uhs
