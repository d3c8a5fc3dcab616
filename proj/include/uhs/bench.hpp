// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uhs/algorithm.hpp"
#include "uhs/counters.hpp"

namespace uhs {

enum class Distribution { Random, Sorted, Reversed, FewUnique, Uniform01 };

inline constexpr Distribution kAllDistributions[] = {Distribution::Random, Distribution::Sorted,
                                                     Distribution::Reversed, Distribution::FewUnique,
                                                     Distribution::Uniform01};

std::string_view distribution_name(Distribution d) noexcept;
std::optional<Distribution> parse_distribution(std::string_view name) noexcept;

/// Non-negative integer keys plus the exclusive upper bound of their range.
/// Bucket sort sees key / key_range, which lies in [0, 1).
struct Dataset {
    std::vector<std::int64_t> keys;
    double key_range = 1;
};

/// Random: permutation of 0..n-1. Sorted / Reversed: 0..n-1 ascending or
/// descending. FewUnique: i.i.d. over 8 values. Uniform01: i.i.d. uniform
/// over [0, 2^32).
Dataset make_dataset(Distribution distribution, std::size_t n, std::uint64_t seed);

struct BenchRecord {
    AlgorithmId algorithm = AlgorithmId::UHS;
    std::size_t n = 0;
    Distribution distribution = Distribution::Random;
    std::size_t trial = 0;
    OpCounters counters;
    std::int64_t wall_nanos = 0; // informational only
};

/// Sort a dataset with fresh counters and check the output order.
/// Bucket sort receives scaled decimal keys. Throws std::logic_error if the
/// result is not sorted.
OpCounters run_counted(AlgorithmId algorithm, const Dataset& data, SortOrder order, const SortOptions& options,
                       std::int64_t* wall_nanos = nullptr);

struct BenchConfig {
    std::vector<AlgorithmId> algorithms{kAllAlgorithms.begin(), kAllAlgorithms.end()};
    std::vector<std::size_t> sizes;
    std::vector<Distribution> distributions{std::begin(kAllDistributions), std::end(kAllDistributions)};
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    SortOrder order = SortOrder::Ascending;
    SortOptions options;
};

/// One record for every (algorithm, n, distribution, trial), in that nesting
/// order. Every algorithm sees the same input for a given (n, distribution,
/// trial); the RandomSeeded pivot seed is derived from the same coordinates.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

BenchRecord run_bench_cell(AlgorithmId algorithm, std::size_t n, Distribution distribution, std::size_t trial,
                           std::uint64_t seed, SortOrder order, const SortOptions& options);

inline constexpr std::string_view kBenchCsvHeader =
    "algorithm,n,distribution,trial,comparisons,swaps,element_moves,aux_peak_slots,recursion_peak,wall_nanos";

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records);

/// "1024,2048" or a doubling range "2^10..2^16". Throws DomainError.
std::vector<std::size_t> parse_sizes(std::string_view text);

} // namespace uhs
