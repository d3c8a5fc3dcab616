// SPDX-License-Identifier: Apache-2.0
#include "uhs/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "uhs/random.hpp"

namespace uhs {

namespace {

constexpr std::pair<std::string_view, Distribution> kDistributionNames[] = {
    {"random", Distribution::Random},         {"sorted", Distribution::Sorted},
    {"reversed", Distribution::Reversed},     {"few-unique", Distribution::FewUnique},
    {"uniform01", Distribution::Uniform01},
};

constexpr std::int64_t kFewUniqueValues = 8;
constexpr double kUniformRange = 4294967296.0; // 2^32

template <SortKey K>
bool in_order(std::span<const Element<K>> elements, SortOrder order)
{
    return std::is_sorted(elements.begin(), elements.end(), [order](const auto& a, const auto& b) {
        return order == SortOrder::Ascending ? a.key < b.key : b.key < a.key;
    });
}

template <SortKey K, class MapKey>
OpCounters timed_sort(AlgorithmId algorithm, const Dataset& data, SortOrder order, const SortOptions& options,
                      std::int64_t* wall_nanos, MapKey map_key)
{
    std::vector<Element<K>> elements(data.keys.size());
    for (std::size_t i = 0; i < elements.size(); ++i)
        elements[i] = {map_key(data.keys[i]), i};
    OpCounters counters;
    const auto start = std::chrono::steady_clock::now();
    sort_with(algorithm, std::span<Element<K>>(elements), order, counters, options);
    const auto stop = std::chrono::steady_clock::now();
    if (wall_nanos)
        *wall_nanos = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
    if (!in_order(std::span<const Element<K>>(elements), order))
        throw std::logic_error(std::string(algorithm_name(algorithm)) + " produced unsorted output");
    return counters;
}

std::size_t parse_count(std::string_view text)
{
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw DomainError("invalid size '" + std::string(text) + "'");
    return value;
}

// "2^k" or a plain count.
std::size_t parse_size_term(std::string_view text)
{
    if (text.starts_with("2^")) {
        const std::size_t exponent = parse_count(text.substr(2));
        if (exponent >= 63)
            throw DomainError("size exponent too large: " + std::string(text));
        return std::size_t{1} << exponent;
    }
    return parse_count(text);
}

} // namespace

std::string_view distribution_name(Distribution d) noexcept
{
    for (const auto& [name, value] : kDistributionNames)
        if (value == d)
            return name;
    return "?";
}

std::optional<Distribution> parse_distribution(std::string_view name) noexcept
{
    for (const auto& [candidate, value] : kDistributionNames)
        if (candidate == name)
            return value;
    return std::nullopt;
}

Dataset make_dataset(Distribution distribution, std::size_t n, std::uint64_t seed)
{
    Dataset data;
    data.key_range = std::max<double>(1.0, static_cast<double>(n));
    switch (distribution) {
    case Distribution::Random:
        data.keys = random_permutation(n, seed);
        break;
    case Distribution::Sorted:
        data.keys.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            data.keys[i] = static_cast<std::int64_t>(i);
        break;
    case Distribution::Reversed:
        data.keys.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            data.keys[i] = static_cast<std::int64_t>(n - 1 - i);
        break;
    case Distribution::FewUnique: {
        Rng rng(seed);
        std::uniform_int_distribution<std::int64_t> pick(0, kFewUniqueValues - 1);
        data.keys.resize(n);
        for (auto& k : data.keys)
            k = pick(rng);
        data.key_range = kFewUniqueValues;
        break;
    }
    case Distribution::Uniform01: {
        Rng rng(seed);
        data.keys.resize(n);
        for (auto& k : data.keys)
            k = static_cast<std::int64_t>(rng() >> 32);
        data.key_range = kUniformRange;
        break;
    }
    }
    return data;
}

OpCounters run_counted(AlgorithmId algorithm, const Dataset& data, SortOrder order, const SortOptions& options,
                       std::int64_t* wall_nanos)
{
    if (algorithm == AlgorithmId::Bucket) {
        const double range = data.key_range;
        return timed_sort<double>(algorithm, data, order, options, wall_nanos,
                                  [range](std::int64_t k) { return static_cast<double>(k) / range; });
    }
    return timed_sort<std::int64_t>(algorithm, data, order, options, wall_nanos, [](std::int64_t k) { return k; });
}

BenchRecord run_bench_cell(AlgorithmId algorithm, std::size_t n, Distribution distribution, std::size_t trial,
                           std::uint64_t seed, SortOrder order, const SortOptions& options)
{
    const std::uint64_t cell_seed = derive_seed({seed, n, static_cast<std::uint64_t>(distribution), trial});
    const Dataset data = make_dataset(distribution, n, cell_seed);
    SortOptions cell_options = options;
    cell_options.pivot_seed = derive_seed({cell_seed, options.pivot_seed});
    BenchRecord record{algorithm, n, distribution, trial, {}, 0};
    record.counters = run_counted(algorithm, data, order, cell_options, &record.wall_nanos);
    return record;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config)
{
    std::vector<BenchRecord> records;
    records.reserve(config.algorithms.size() * config.sizes.size() * config.distributions.size() * config.trials);
    for (AlgorithmId algorithm : config.algorithms)
        for (std::size_t n : config.sizes)
            for (Distribution distribution : config.distributions)
                for (std::size_t trial = 0; trial < config.trials; ++trial)
                    records.push_back(
                        run_bench_cell(algorithm, n, distribution, trial, config.seed, config.order, config.options));
    return records;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records)
{
    out << kBenchCsvHeader << '\n';
    for (const auto& r : records) {
        const auto& c = r.counters;
        out << algorithm_name(r.algorithm) << ',' << r.n << ',' << distribution_name(r.distribution) << ','
            << r.trial << ',' << c.comparisons << ',' << c.swaps << ',' << c.element_moves << ','
            << c.aux_peak_slots << ',' << c.recursion_peak << ',' << r.wall_nanos << '\n';
    }
}

std::vector<std::size_t> parse_sizes(std::string_view text)
{
    std::vector<std::size_t> sizes;
    if (const auto dots = text.find(".."); dots != std::string_view::npos) {
        const std::size_t lo = parse_size_term(text.substr(0, dots));
        const std::size_t hi = parse_size_term(text.substr(dots + 2));
        if (lo == 0 || hi < lo)
            throw DomainError("invalid size range '" + std::string(text) + "'");
        for (std::size_t n = lo; n <= hi; n *= 2)
            sizes.push_back(n);
        return sizes;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        sizes.push_back(parse_size_term(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return sizes;
}

} // namespace uhs
