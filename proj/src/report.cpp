// SPDX-License-Identifier: Apache-2.0
#include "uhs/report.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>

#include "uhs/growth.hpp"
#include "uhs/instrumentation.hpp"
#include "uhs/random.hpp"

namespace uhs {

namespace {

struct Claims {
    const char* worst;
    const char* average;
    const char* space;
    const char* stable;
};

Claims claims_for(AlgorithmId id)
{
    switch (id) {
    case AlgorithmId::Insertion:
        return {"Θ(n^2)", "Θ(n^2)", "O(1)", "YES"};
    case AlgorithmId::Merge:
        return {"Θ(nlogn)", "Θ(nlogn)", "O(n)", "YES"};
    case AlgorithmId::Quick:
        return {"Θ(n^2)", "Θ(nlogn) (expected)", "O(nlogn)", "NO"};
    case AlgorithmId::Bucket:
        return {"Θ(n^2)", "Θ(n) (average-case)", "O(n)", "YES"};
    case AlgorithmId::Radix:
        return {"Θ(d(n+k))", "Θ(d(n+k))", "O(n+k)", "YES"};
    case AlgorithmId::Bubble:
        return {"Θ(n^2)", "Θ(n^2)", "O(1)", "YES"};
    case AlgorithmId::UHS:
        return {"Θ(nlogn)", "Θ(nlogn)", "O(1)", "NO"};
    }
    return {"?", "?", "?", "?"};
}

SortOptions pivot_options(PivotRule rule, std::uint64_t seed = 0)
{
    SortOptions options;
    options.pivot = rule;
    options.pivot_seed = seed;
    return options;
}

using DatasetMaker = std::function<Dataset(std::size_t n, std::size_t trial)>;

DatasetMaker standard(Distribution d, std::uint64_t seed)
{
    return [d, seed](std::size_t n, std::size_t trial) {
        return make_dataset(d, n, derive_seed({seed, n, static_cast<std::uint64_t>(d), trial}));
    };
}

// Distinct keys squeezed into [0, 1/n): bucket sort puts all of them in one
// bucket and degenerates to insertion sort.
DatasetMaker single_bucket(std::uint64_t seed)
{
    return [seed](std::size_t n, std::size_t trial) {
        Dataset data;
        data.keys = random_permutation(n, derive_seed({seed, n, 0xb0c7e7, trial}));
        data.key_range = static_cast<double>(n) * static_cast<double>(n);
        return data;
    };
}

struct Probe {
    AlgorithmId algorithm;
    SortOptions options;
    std::vector<DatasetMaker> inputs; // worst cost over these, per n
};

// Mean comparisons over trials, then max over inputs, for each n.
std::vector<GrowthPoint> measure(const Probe& probe, const std::vector<std::size_t>& sizes, std::size_t trials,
                                 std::uint64_t seed)
{
    std::vector<GrowthPoint> points;
    for (std::size_t n : sizes) {
        double worst = 0;
        for (const auto& make : probe.inputs) {
            double total = 0;
            for (std::size_t t = 0; t < trials; ++t) {
                SortOptions options = probe.options;
                options.pivot_seed = derive_seed({seed, n, t, 0x9170});
                total += static_cast<double>(
                    run_counted(probe.algorithm, make(n, t), SortOrder::Ascending, options).comparisons);
            }
            worst = std::max(worst, total / static_cast<double>(trials));
        }
        points.push_back({static_cast<double>(n), worst});
    }
    return points;
}

std::string describe_fit(const GrowthClass& fit)
{
    std::ostringstream s;
    s << complexity_name(fit.complexity) << " (c=" << std::setprecision(3) << fit.coefficient << ")";
    return s.str();
}

ReportCell fitted_cell(AlgorithmId id, const char* column, const char* claim, Complexity expected,
                       const std::string& inputs_label, const std::vector<GrowthPoint>& points)
{
    ReportCell cell{1, id, column, claim, {}, CellStatus::Mismatch};
    const GrowthClass fit = growth_fit(points);
    cell.measured = describe_fit(fit) + " on " + inputs_label;
    cell.status = fit.complexity == expected ? CellStatus::Match : CellStatus::Mismatch;
    return cell;
}

ReportCell bucket_average_cell(const SweepConfig& cfg, std::uint64_t seed)
{
    ReportCell cell{1, AlgorithmId::Bucket, "average", claims_for(AlgorithmId::Bucket).average, {},
                    CellStatus::Match};
    double worst_ratio = 0;
    for (std::size_t n : cfg.sizes) {
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            const auto data = make_dataset(Distribution::Uniform01, n, derive_seed({seed, n, 0x01, t}));
            const auto c = run_counted(AlgorithmId::Bucket, data, SortOrder::Ascending, {});
            worst_ratio = std::max(worst_ratio, static_cast<double>(c.comparisons) / static_cast<double>(n));
        }
    }
    std::ostringstream s;
    s << "comparisons/n <= " << std::fixed << std::setprecision(3) << worst_ratio << " (bound 4) on uniform01";
    cell.measured = s.str();
    cell.status = worst_ratio <= 4.0 ? CellStatus::Match : CellStatus::Mismatch;
    return cell;
}

ReportCell radix_cell(const char* column, Distribution distribution, const SweepConfig& cfg, std::uint64_t seed)
{
    ReportCell cell{1, AlgorithmId::Radix, column, "Θ(d(n+k))", {}, CellStatus::Match};
    bool ok = true;
    std::uint32_t digits_seen = 0;
    for (std::size_t n : cfg.sizes) {
        const auto data = make_dataset(distribution, n, derive_seed({seed, n, 0x7ad, 0}));
        const auto max_key = data.keys.empty() ? 0 : *std::max_element(data.keys.begin(), data.keys.end());
        const RadixPlan plan = RadixPlan::covering(static_cast<std::uint64_t>(max_key));
        const auto c = run_counted(AlgorithmId::Radix, data, SortOrder::Ascending, {});
        digits_seen = std::max(digits_seen, plan.digit_count);
        ok = ok && c.comparisons == 0 && c.element_moves == std::uint64_t{plan.digit_count} * n &&
             c.aux_peak_slots <= n + plan.base;
    }
    std::ostringstream s;
    s << "moves = d*n, 0 comparisons, k=256 counters (d<=" << digits_seen << ") on "
      << distribution_name(distribution);
    cell.measured = s.str();
    cell.status = ok ? CellStatus::Match : CellStatus::Mismatch;
    return cell;
}

void running_time_cells(TablesReport& report, const SweepConfig& cfg, std::uint64_t seed)
{
    const auto random = standard(Distribution::Random, seed);
    const auto sorted = standard(Distribution::Sorted, seed);
    const auto reversed = standard(Distribution::Reversed, seed);
    const SortOptions last_pivot = pivot_options(PivotRule::LastElement);
    const SortOptions random_pivot = pivot_options(PivotRule::RandomSeeded);
    auto add = [&](AlgorithmId id, bool worst, Complexity expected, const SortOptions& options,
                   std::vector<DatasetMaker> inputs, const std::string& label, bool quadratic) {
        const Claims c = claims_for(id);
        const auto points =
            measure({id, options, std::move(inputs)}, quadratic ? cfg.quadratic_sizes : cfg.sizes, cfg.trials, seed);
        report.cells.push_back(
            fitted_cell(id, worst ? "worst" : "average", worst ? c.worst : c.average, expected, label, points));
    };

    add(AlgorithmId::Insertion, true, Complexity::Quadratic, {}, {reversed}, "reversed", true);
    add(AlgorithmId::Insertion, false, Complexity::Quadratic, {}, {random}, "random", true);
    add(AlgorithmId::Merge, true, Complexity::Linearithmic, {}, {random, sorted, reversed},
        "max(random, sorted, reversed)", false);
    add(AlgorithmId::Merge, false, Complexity::Linearithmic, {}, {random}, "random", false);
    add(AlgorithmId::Quick, true, Complexity::Quadratic, last_pivot, {sorted}, "sorted, last-element pivot", true);
    add(AlgorithmId::Quick, false, Complexity::Linearithmic, random_pivot, {random}, "random, random pivot", false);
    add(AlgorithmId::Bucket, true, Complexity::Quadratic, {}, {single_bucket(seed)},
        "single-bucket input (derived adversary)", true);
    report.cells.push_back(bucket_average_cell(cfg, seed));
    report.cells.push_back(radix_cell("worst", Distribution::Uniform01, cfg, seed));
    report.cells.push_back(radix_cell("average", Distribution::Random, cfg, seed));
    add(AlgorithmId::Bubble, true, Complexity::Quadratic, {}, {reversed}, "reversed", true);
    add(AlgorithmId::Bubble, false, Complexity::Quadratic, {}, {random}, "random", true);
    add(AlgorithmId::UHS, true, Complexity::Linearithmic, {}, {random, sorted, reversed},
        "max(random, sorted, reversed)", false);
    add(AlgorithmId::UHS, false, Complexity::Linearithmic, {}, {random}, "random", false);
}

ReportCell quick_space_cell(const SweepConfig& cfg, std::uint64_t seed)
{
    const std::size_t n = cfg.space_n;
    const double bound = 2.0 * std::log2(static_cast<double>(n));
    std::uint64_t deepest = 0;
    for (std::size_t t = 0; t < cfg.depth_trials; ++t) {
        const auto data = make_dataset(Distribution::Random, n, derive_seed({seed, n, 0xd3, t}));
        const SortOptions options = pivot_options(PivotRule::RandomSeeded, derive_seed({seed, t, 0x9170}));
        deepest = std::max(deepest, run_counted(AlgorithmId::Quick, data, SortOrder::Ascending, options).recursion_peak);
    }
    const auto sorted = make_dataset(Distribution::Sorted, n, seed);
    const auto worst_depth = run_counted(AlgorithmId::Quick, sorted, SortOrder::Ascending, {}).recursion_peak;

    std::ostringstream s;
    s << "discrepancy: recursion depth O(log n); peak " << deepest << " over " << cfg.depth_trials
      << " random-pivot runs at n=" << n << " (bound " << std::fixed << std::setprecision(0) << bound
      << "), peak " << worst_depth << " on sorted input with last-element pivot; aux element slots 0";
    const bool within = static_cast<double>(deepest) <= bound;
    return {2, AlgorithmId::Quick, "space", claims_for(AlgorithmId::Quick).space, s.str(),
            within ? CellStatus::DeclaredDiscrepancy : CellStatus::Mismatch};
}

void space_cells(TablesReport& report, const SweepConfig& cfg, std::uint64_t seed)
{
    const std::size_t n = cfg.space_n;
    for (AlgorithmId id : kAllAlgorithms) {
        if (id == AlgorithmId::Quick) {
            report.cells.push_back(quick_space_cell(cfg, seed));
            continue;
        }
        const Distribution d = id == AlgorithmId::Bucket ? Distribution::Uniform01 : Distribution::Random;
        const auto c = run_counted(id, make_dataset(d, n, derive_seed({seed, n, 0x5ace})), SortOrder::Ascending, {});
        bool ok = false;
        std::ostringstream s;
        s << "aux_peak_slots=" << c.aux_peak_slots << " at n=" << n;
        switch (id) {
        case AlgorithmId::Insertion:
        case AlgorithmId::Bubble:
            ok = c.aux_peak_slots == 0;
            break;
        case AlgorithmId::UHS:
            ok = c.aux_peak_slots == 0 && c.recursion_peak == 0;
            s << ", recursion_peak=" << c.recursion_peak;
            break;
        case AlgorithmId::Merge:
            ok = c.aux_peak_slots == n;
            s << " (= n)";
            break;
        case AlgorithmId::Bucket:
            ok = c.aux_peak_slots <= 2 * n;
            s << " (<= 2n)";
            break;
        case AlgorithmId::Radix:
            ok = c.aux_peak_slots <= n + 256;
            s << " (<= n+k, k=256)";
            break;
        case AlgorithmId::Quick:
            break;
        }
        report.cells.push_back({2, id, "space", claims_for(id).space, s.str(),
                                ok ? CellStatus::Match : CellStatus::Mismatch});
    }
}

void stability_cells(TablesReport& report, const SweepConfig& cfg, std::uint64_t seed)
{
    for (AlgorithmId id : kAllAlgorithms) {
        const auto verdict = stability_check(id, cfg.stability_trials, cfg.stability_max_n, seed);
        std::ostringstream s;
        if (const auto* w = std::get_if<UnstableWitness>(&verdict)) {
            s << "UNSTABLE witness=";
            for (std::size_t i = 0; i < w->keys.size(); ++i)
                s << (i ? "," : "") << w->keys[i];
        } else {
            s << "STABLE(trials=" << std::get<StableOverTrials>(verdict).trials << ")";
        }
        const bool ok = is_unstable(verdict) != expected_stable(id);
        report.cells.push_back({3, id, "stable", claims_for(id).stable, s.str(),
                                ok ? CellStatus::Match : CellStatus::Mismatch});
    }
}

std::string_view status_text(CellStatus s)
{
    switch (s) {
    case CellStatus::Match:
        return "match";
    case CellStatus::Mismatch:
        return "MISMATCH";
    case CellStatus::DeclaredDiscrepancy:
        return "declared discrepancy";
    }
    return "?";
}

// Θ is two bytes in UTF-8 but one column wide.
std::size_t display_width(const std::string& s)
{
    std::size_t w = 0;
    for (unsigned char ch : s)
        w += (ch & 0xC0) != 0x80;
    return w;
}

} // namespace

bool TablesReport::reproduced() const noexcept
{
    return std::none_of(cells.begin(), cells.end(), [](const auto& c) { return c.status == CellStatus::Mismatch; });
}

std::vector<const ReportCell*> TablesReport::failures() const
{
    std::vector<const ReportCell*> out;
    for (const auto& c : cells)
        if (c.status == CellStatus::Mismatch)
            out.push_back(&c);
    return out;
}

std::string TablesReport::render_text() const
{
    static const char* const kTitles[] = {"", "Table 1: running time", "Table 2: space", "Table 3: stability"};
    std::size_t claim_w = 5;
    for (const auto& c : cells)
        claim_w = std::max(claim_w, display_width(c.claim));

    std::ostringstream out;
    int current = 0;
    for (const auto& c : cells) {
        if (c.table != current) {
            current = c.table;
            out << (current == 1 ? "" : "\n") << kTitles[current] << '\n';
            out << std::left << std::setw(11) << "algorithm" << std::setw(9) << "column" << "claim"
                << std::string(claim_w - 5 + 2, ' ') << std::setw(22) << "verdict" << "measured\n";
        }
        out << std::left << std::setw(11) << algorithm_name(c.algorithm) << std::setw(9) << c.column << c.claim
            << std::string(claim_w - display_width(c.claim) + 2, ' ') << std::setw(22) << status_text(c.status)
            << c.measured << '\n';
    }
    return out.str();
}

TablesReport reproduce_tables(std::uint64_t seed, const SweepConfig& config)
{
    TablesReport report;
    running_time_cells(report, config, seed);
    space_cells(report, config, seed);
    stability_cells(report, config, seed);
    return report;
}

} // namespace uhs
