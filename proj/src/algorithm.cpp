// SPDX-License-Identifier: Apache-2.0
#include "uhs/algorithm.hpp"

#include <utility>

namespace uhs {

namespace {

constexpr std::pair<std::string_view, AlgorithmId> kAlgorithmNames[] = {
    {"insertion", AlgorithmId::Insertion}, {"merge", AlgorithmId::Merge},   {"quick", AlgorithmId::Quick},
    {"bucket", AlgorithmId::Bucket},       {"radix", AlgorithmId::Radix},   {"bubble", AlgorithmId::Bubble},
    {"uhs", AlgorithmId::UHS},             {"heapsort", AlgorithmId::UHS},  {"quicksort", AlgorithmId::Quick},
    {"heap", AlgorithmId::UHS},
};

constexpr std::pair<std::string_view, PivotRule> kPivotNames[] = {
    {"last", PivotRule::LastElement},
    {"median3", PivotRule::MedianOfThree},
    {"random", PivotRule::RandomSeeded},
};

} // namespace

std::string_view algorithm_name(AlgorithmId id) noexcept
{
    for (const auto& [name, value] : kAlgorithmNames)
        if (value == id)
            return name;
    return "?";
}

std::optional<AlgorithmId> parse_algorithm(std::string_view name) noexcept
{
    for (const auto& [candidate, value] : kAlgorithmNames)
        if (candidate == name)
            return value;
    return std::nullopt;
}

std::string_view pivot_rule_name(PivotRule rule) noexcept
{
    for (const auto& [name, value] : kPivotNames)
        if (value == rule)
            return name;
    return "?";
}

std::optional<PivotRule> parse_pivot_rule(std::string_view name) noexcept
{
    for (const auto& [candidate, value] : kPivotNames)
        if (candidate == name)
            return value;
    return std::nullopt;
}

bool expected_stable(AlgorithmId id) noexcept
{
    return id != AlgorithmId::Quick && id != AlgorithmId::UHS;
}

} // namespace uhs
