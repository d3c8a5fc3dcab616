// SPDX-License-Identifier: Apache-2.0
#include "uhs/random.hpp"

#include <algorithm>
#include <numeric>

namespace uhs {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts) noexcept
{
    std::uint64_t h = 0x6a09e667f3bcc908ULL;
    for (std::uint64_t p : parts)
        h = splitmix64(h ^ splitmix64(p));
    return h;
}

std::vector<std::int64_t> random_permutation(std::size_t n, std::uint64_t seed)
{
    std::vector<std::int64_t> keys(n);
    std::iota(keys.begin(), keys.end(), std::int64_t{0});
    Rng rng(seed);
    std::shuffle(keys.begin(), keys.end(), rng);
    return keys;
}

} // namespace uhs
