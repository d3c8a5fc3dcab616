// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "uhs/algorithm.hpp"
#include "uhs/counters.hpp"

namespace uhs {

// ---- stability -------------------------------------------------------------

struct StableOverTrials {
    std::size_t trials = 0;
};

/// An input whose sorted output puts two equal keys in reverse input order.
struct UnstableWitness {
    std::vector<std::int64_t> keys;
    SortOrder order = SortOrder::Ascending;
};

using StabilityVerdict = std::variant<StableOverTrials, UnstableWitness>;

inline bool is_unstable(const StabilityVerdict& v) noexcept { return std::holds_alternative<UnstableWitness>(v); }

/// Sort `keys` tagged with their input positions and report whether any two
/// equal keys come out inverted. Integer keys k are fed to bucket sort as
/// k / (max_key + 1).
bool inverts_equal_keys(AlgorithmId algorithm, std::span<const std::int64_t> keys, SortOrder order,
                        const SortOptions& options = {});

/// Hunt for a stability witness. First every key sequence of length <= 6 over
/// {0, 1, 2} is tried in both orders; if none inverts, `trials` random inputs
/// of length <= max_n with heavy key duplication are tried. A witness is
/// re-sorted before it is returned and must reproduce its inversion.
///
/// StableOverTrials means no counterexample was found, not that stability is
/// proven.
StabilityVerdict stability_check(AlgorithmId algorithm, std::size_t trials, std::size_t max_n,
                                 std::uint64_t seed, const SortOptions& options = {});

// ---- build cost ------------------------------------------------------------

struct BuildAuditRow {
    std::size_t n = 0;
    std::uint64_t comparisons = 0;
    double ratio = 0; // comparisons / n
};

struct BuildAudit {
    std::vector<BuildAuditRow> rows;
    /// First n whose build exceeded 2(n-1) comparisons.
    std::optional<std::size_t> failed_n;

    bool passed() const noexcept { return !failed_n; }
};

/// Build a max-heap from a seeded random permutation for each n and check the
/// linear bound comparisons <= 2(n-1). Every n must be at least 1.
BuildAudit build_cost_audit(std::span<const std::size_t> n_values, std::uint64_t seed);

} // namespace uhs
