// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "uhs/algorithm.hpp"
#include "uhs/bench.hpp"

namespace uhs {

enum class CellStatus { Match, Mismatch, DeclaredDiscrepancy };

struct ReportCell {
    int table = 1; // 1 running time, 2 space, 3 stability
    AlgorithmId algorithm = AlgorithmId::UHS;
    std::string column;
    std::string claim;
    std::string measured;
    CellStatus status = CellStatus::Mismatch;
};

struct SweepConfig {
    std::vector<std::size_t> sizes = parse_sizes("2^10..2^16");
    /// Sizes for runs expected to be quadratic, kept small so the sweep stays fast.
    std::vector<std::size_t> quadratic_sizes = parse_sizes("2^10..2^13");
    std::size_t trials = 3;
    std::size_t space_n = 4096;
    std::size_t depth_trials = 100;
    std::size_t stability_trials = 10'000;
    std::size_t stability_max_n = 64;
};

struct TablesReport {
    std::vector<ReportCell> cells;

    /// Every cell matched or is a declared discrepancy.
    bool reproduced() const noexcept;
    std::vector<const ReportCell*> failures() const;
    std::string render_text() const;
};

/// Measure every running-time, space and stability cell for the seven
/// algorithms and set each measurement against the published claim.
///
/// Running time: growth classes fitted to counted comparisons on the
/// worst-case and average-case inputs of each algorithm. Bucket sort's
/// average is checked as comparisons/n <= 4 on uniform keys and its worst case
/// uses a derived single-bucket adversary. Radix sort is checked structurally
/// (d*n moves, no comparisons). Space: metered aux slots at `space_n`; the
/// quicksort cell is always a declared discrepancy, since the stack measured
/// here is O(log n) and the claim is O(n log n). Stability: stability_check.
TablesReport reproduce_tables(std::uint64_t seed, const SweepConfig& config = {});

} // namespace uhs
