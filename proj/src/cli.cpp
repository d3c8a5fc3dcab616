// SPDX-License-Identifier: Apache-2.0
#include "uhs/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>

#include "uhs/algorithm.hpp"
#include "uhs/bench.hpp"
#include "uhs/dynamic.hpp"
#include "uhs/heap.hpp"
#include "uhs/instrumentation.hpp"
#include "uhs/random.hpp"
#include "uhs/report.hpp"

namespace uhs::cli {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CliConfig {
    std::string algorithm = "uhs";
    std::string order = "asc";
    std::string pivot = "last";
    std::string input = "-";
    std::string output = "-";
    bool decimal = false;
    bool stats = false;
    std::string algorithms = "all";
    std::string sizes = "2^10..2^13";
    std::string distributions = "all";
    std::size_t trials = 0; // 0: subcommand default
    std::size_t max_n = 64;
    std::uint64_t seed = 0;
    std::string only;
    std::string fault;
};

std::vector<std::string_view> split_list(std::string_view text)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        if (comma > start)
            parts.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
    return parts;
}

SortOrder parse_order(std::string_view text)
{
    if (text == "asc")
        return SortOrder::Ascending;
    if (text == "desc")
        return SortOrder::Descending;
    throw InputError("unknown order '" + std::string(text) + "' (expected asc or desc)");
}

AlgorithmId parse_algorithm_or_throw(std::string_view name)
{
    if (auto id = parse_algorithm(name))
        return *id;
    throw InputError("unknown algorithm '" + std::string(name) + "'");
}

std::vector<AlgorithmId> parse_algorithm_list(std::string_view text)
{
    if (text == "all")
        return {kAllAlgorithms.begin(), kAllAlgorithms.end()};
    std::vector<AlgorithmId> ids;
    for (auto name : split_list(text))
        ids.push_back(parse_algorithm_or_throw(name));
    if (ids.empty())
        throw InputError("no algorithms selected");
    return ids;
}

std::vector<Distribution> parse_distribution_list(std::string_view text)
{
    if (text == "all")
        return {std::begin(kAllDistributions), std::end(kAllDistributions)};
    std::vector<Distribution> out;
    for (auto name : split_list(text)) {
        auto d = parse_distribution(name);
        if (!d)
            throw InputError("unknown distribution '" + std::string(name) + "'");
        out.push_back(*d);
    }
    if (out.empty())
        throw InputError("no distributions selected");
    return out;
}

SortOptions parse_sort_options(const CliConfig& cfg)
{
    SortOptions options;
    auto pivot = parse_pivot_rule(cfg.pivot);
    if (!pivot)
        throw InputError("unknown pivot rule '" + cfg.pivot + "' (expected last, median3 or random)");
    options.pivot = *pivot;
    options.pivot_seed = cfg.seed;
    return options;
}

// ---- sort ------------------------------------------------------------------

std::string_view trim(std::string_view s)
{
    constexpr std::string_view ws = " \t\r\v\f";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

template <class K>
K parse_value(std::string_view text, std::size_t line)
{
    K value{};
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end)
        throw InputError("line " + std::to_string(line) + ": cannot parse '" + std::string(text) + "' as " +
                         (std::is_floating_point_v<K> ? "a decimal" : "a 64-bit integer"));
    if constexpr (std::is_floating_point_v<K>)
        if (std::isnan(value))
            throw InputError("line " + std::to_string(line) + ": NaN is not orderable");
    return value;
}

template <class K>
std::vector<Element<K>> read_values(std::istream& in)
{
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::vector<Element<K>> values;
    std::size_t start = 0, line = 1;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string::npos)
            nl = text.size();
        values.push_back({parse_value<K>(trim(std::string_view(text).substr(start, nl - start)), line), line - 1});
        start = nl + 1;
        ++line;
    }
    return values;
}

template <class K>
void write_values(std::ostream& out, const std::vector<Element<K>>& values)
{
    char buf[64];
    for (const auto& e : values) {
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, e.key);
        out.write(buf, ptr - buf);
        out.put('\n');
    }
}

std::string counters_line(const OpCounters& c)
{
    std::ostringstream s;
    s << "comparisons=" << c.comparisons << " swaps=" << c.swaps << " element_moves=" << c.element_moves
      << " aux_peak_slots=" << c.aux_peak_slots << " recursion_peak=" << c.recursion_peak;
    return s.str();
}

// Resolves "-" to the supplied standard stream.
class InputSource {
public:
    InputSource(const std::string& path, std::istream& standard)
    {
        if (path == "-") {
            stream_ = &standard;
            return;
        }
        file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
        if (!*file_)
            throw InputError("cannot open input '" + path + "'");
        stream_ = file_.get();
    }
    std::istream& get() { return *stream_; }

private:
    std::unique_ptr<std::ifstream> file_;
    std::istream* stream_ = nullptr;
};

class OutputSink {
public:
    OutputSink(const std::string& path, std::ostream& standard)
    {
        if (path == "-") {
            stream_ = &standard;
            return;
        }
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
        stream_ = file_.get();
    }
    bool ok() const { return static_cast<bool>(*stream_); }
    std::ostream& get() { return *stream_; }
    bool finish()
    {
        stream_->flush();
        return ok();
    }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_ = nullptr;
};

template <class K>
int sort_values(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err)
{
    const AlgorithmId algorithm = parse_algorithm_or_throw(cfg.algorithm);
    const SortOrder order = parse_order(cfg.order);
    const SortOptions options = parse_sort_options(cfg);
    InputSource source(cfg.input, in);
    auto values = read_values<K>(source.get());
    OpCounters counters;
    sort_with(algorithm, std::span<Element<K>>(values), order, counters, options);

    OutputSink sink(cfg.output, out);
    if (!sink.ok()) {
        err << "uhsort: cannot write output '" << cfg.output << "'\n";
        return kCheckFailed;
    }
    write_values(sink.get(), values);
    if (!sink.finish()) {
        err << "uhsort: write to '" << cfg.output << "' failed\n";
        return kCheckFailed;
    }
    if (cfg.stats)
        err << counters_line(counters) << '\n';
    return kSuccess;
}

int cmd_sort(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err)
{
    return cfg.decimal ? sort_values<double>(cfg, in, out, err) : sort_values<std::int64_t>(cfg, in, out, err);
}

// ---- bench -----------------------------------------------------------------

int cmd_bench(const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    BenchConfig bench;
    bench.algorithms = parse_algorithm_list(cfg.algorithms);
    try {
        bench.sizes = parse_sizes(cfg.sizes);
    } catch (const DomainError& e) {
        throw InputError(e.what());
    }
    bench.distributions = parse_distribution_list(cfg.distributions);
    bench.trials = cfg.trials == 0 ? 1 : cfg.trials;
    bench.seed = cfg.seed;
    bench.order = parse_order(cfg.order);
    bench.options = parse_sort_options(cfg);

    OutputSink sink(cfg.output, out);
    if (!sink.ok()) {
        err << "uhsort: cannot write output '" << cfg.output << "'\n";
        return kCheckFailed;
    }
    std::vector<BenchRecord> records;
    try {
        records = run_bench(bench);
    } catch (const std::logic_error& e) {
        err << "uhsort: benchmark failure: " << e.what() << '\n';
        return kCheckFailed;
    }
    write_bench_csv(sink.get(), records);
    if (!sink.finish()) {
        err << "uhsort: write to '" << cfg.output << "' failed\n";
        return kCheckFailed;
    }
    return kSuccess;
}

// ---- stability -------------------------------------------------------------

std::string verdict_line(AlgorithmId id, const StabilityVerdict& verdict)
{
    std::ostringstream s;
    s << algorithm_name(id) << ": ";
    if (const auto* w = std::get_if<UnstableWitness>(&verdict)) {
        s << "UNSTABLE witness=";
        for (std::size_t i = 0; i < w->keys.size(); ++i)
            s << (i ? "," : "") << w->keys[i];
        if (w->order == SortOrder::Descending)
            s << " (desc)";
    } else {
        s << "STABLE(trials=" << std::get<StableOverTrials>(verdict).trials << ")";
    }
    return s.str();
}

int cmd_stability(const CliConfig& cfg, std::ostream& out)
{
    const auto algorithms = parse_algorithm_list(cfg.algorithms);
    const SortOptions options = parse_sort_options(cfg);
    const std::size_t trials = cfg.trials == 0 ? 10'000 : cfg.trials;
    bool all_expected = true;
    for (AlgorithmId id : algorithms) {
        const auto verdict = stability_check(id, trials, cfg.max_n, cfg.seed, options);
        const bool expected = is_unstable(verdict) != expected_stable(id);
        all_expected = all_expected && expected;
        out << verdict_line(id, verdict);
        if (!expected)
            out << "  [expected " << (expected_stable(id) ? "stable" : "unstable") << "]";
        out << '\n';
    }
    return all_expected ? kSuccess : kCheckFailed;
}

// ---- verify ----------------------------------------------------------------

struct CheckResult {
    bool passed = true;
    std::string detail;
};

CheckResult check_build_cost(std::uint64_t seed)
{
    std::vector<std::size_t> sizes;
    for (int e = 10; e <= 20; e += 2)
        sizes.push_back(std::size_t{1} << e);
    const auto audit = build_cost_audit(sizes, seed);
    std::ostringstream s;
    if (!audit.passed()) {
        s << "build comparisons exceed 2(n-1) at n=" << *audit.failed_n;
        return {false, s.str()};
    }
    double worst = 0;
    for (const auto& row : audit.rows)
        worst = std::max(worst, row.ratio);
    s << "comparisons <= 2(n-1) for n=2^10..2^20, max comparisons/n " << std::fixed << std::setprecision(3)
      << worst;
    return {true, s.str()};
}

CheckResult check_heap_invariant(std::uint64_t seed)
{
    Rng rng(derive_seed({seed, 0x4ea9}));
    for (std::size_t n = 0; n <= 4096; n = n < 16 ? n + 1 : n * 2) {
        std::vector<Element<std::int64_t>> values(n);
        std::uniform_int_distribution<std::int64_t> key(0, static_cast<std::int64_t>(n / 2 + 1));
        for (std::size_t i = 0; i < n; ++i)
            values[i] = {key(rng), i};
        for (HeapOrder order : {HeapOrder::MaxAtRoot, HeapOrder::MinAtRoot}) {
            OpCounters c;
            auto heap = Heap<Element<std::int64_t>>::build(values, order, c);
            if (!heap.valid())
                return {false, "is_heap failed after build of n=" + std::to_string(n)};
        }
    }
    Heap<Element<std::int64_t>> heap;
    OpCounters c;
    std::uniform_int_distribution<int> op(0, 3);
    std::uniform_int_distribution<std::int64_t> key(0, 99);
    for (std::size_t step = 0; step < 20'000; ++step) {
        const int kind = op(rng);
        if (heap.empty() || kind <= 1) {
            heap.push({key(rng), step}, c);
        } else if (kind == 2) {
            heap.pop_root(c);
        } else {
            std::uniform_int_distribution<std::size_t> at(0, heap.size() - 1);
            heap.remove_at(at(rng), c);
        }
        if (!heap.valid())
            return {false, "is_heap failed after step " + std::to_string(step) + " of a push/pop/remove run"};
    }
    return {true, "is_heap holds after build (n<=4096) and 20000 push/pop_root/remove_at steps"};
}

CheckResult check_differential(std::uint64_t seed)
{
    Rng rng(derive_seed({seed, 0xd1ff}));
    std::uniform_int_distribution<std::size_t> pick_n(0, 512);
    constexpr std::size_t kArrays = 10'000;
    for (std::size_t t = 0; t < kArrays; ++t) {
        const std::size_t n = pick_n(rng);
        const auto max_key = static_cast<std::int64_t>(t % 3 == 0 ? 7 : 4 * n + 1);
        std::uniform_int_distribution<std::int64_t> key(0, max_key);
        Dataset data;
        data.keys.resize(n);
        for (auto& k : data.keys)
            k = key(rng);
        data.key_range = static_cast<double>(max_key + 1);
        const SortOrder order = t % 2 ? SortOrder::Descending : SortOrder::Ascending;
        for (AlgorithmId id : kAllAlgorithms) {
            try {
                SortOptions options;
                options.pivot = t % 3 == 0 ? PivotRule::RandomSeeded : PivotRule::LastElement;
                options.pivot_seed = t;
                run_counted(id, data, order, options);
            } catch (const std::logic_error& e) {
                return {false, std::string(e.what()) + " on array " + std::to_string(t)};
            }
        }
        // Stable sorts must agree with the reference element for element.
        std::vector<Element<std::int64_t>> reference(n);
        for (std::size_t i = 0; i < n; ++i)
            reference[i] = {data.keys[i], i};
        std::stable_sort(reference.begin(), reference.end(), [order](const auto& a, const auto& b) {
            return order == SortOrder::Ascending ? a.key < b.key : b.key < a.key;
        });
        for (AlgorithmId id : {AlgorithmId::Insertion, AlgorithmId::Merge, AlgorithmId::Radix, AlgorithmId::Bubble}) {
            std::vector<Element<std::int64_t>> values(n);
            for (std::size_t i = 0; i < n; ++i)
                values[i] = {data.keys[i], i};
            OpCounters c;
            sort_with(id, std::span(values), order, c);
            if (values != reference)
                return {false, std::string(algorithm_name(id)) + " differs from the reference on array " +
                                   std::to_string(t)};
        }
    }
    return {true, "all seven algorithms sort 10000 random arrays (n<=512) in order; stable ones match exactly"};
}

CheckResult check_dynamic(std::uint64_t seed)
{
    const auto ops = make_dynamic_workload(10'000, derive_seed({seed, 0xd7}));
    const auto trace = dynamic_scenario(ops);
    std::ostringstream s;
    if (!trace.agreed()) {
        s << "heap disagrees with the sorted-list oracle at step " << *trace.first_disagreement
          << " (failing prefix of " << trace.failing_prefix.size() << " ops)";
        return {false, s.str()};
    }
    s << "10000 ops agree; heap comparisons " << trace.heap_comparisons() << " vs oracle shifts "
      << trace.oracle_shifts();
    if (trace.heap_comparisons() >= trace.oracle_shifts())
        return {false, s.str()};
    return {true, s.str()};
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    using Check = std::function<CheckResult()>;
    TablesReport report;
    const std::vector<std::pair<std::string, Check>> checks = {
        {"heap-invariant", [&] { return check_heap_invariant(cfg.seed); }},
        {"build-cost", [&] { return check_build_cost(cfg.seed); }},
        {"differential", [&] { return check_differential(cfg.seed); }},
        {"dynamic", [&] { return check_dynamic(cfg.seed); }},
        {"tables",
         [&] {
             report = reproduce_tables(cfg.seed);
             std::string detail = report.reproduced() ? "every cell matches or is declared" : "mismatched cells:";
             for (const auto* cell : report.failures())
                 detail += " table" + std::to_string(cell->table) + "/" +
                           std::string(algorithm_name(cell->algorithm)) + "/" + cell->column;
             return CheckResult{report.reproduced(), detail};
         }},
    };

    std::vector<std::string_view> only = split_list(cfg.only);
    for (auto name : only)
        if (std::none_of(checks.begin(), checks.end(), [&](const auto& c) { return c.first == name; }))
            throw InputError("unknown check '" + std::string(name) + "'");

    struct FaultScope {
        explicit FaultScope(bool on) { testing::set_sift_child_fault(on); }
        ~FaultScope() { testing::set_sift_child_fault(false); }
    };
    if (!cfg.fault.empty() && cfg.fault != "sift-child")
        throw InputError("unknown fault '" + cfg.fault + "'");
    const FaultScope fault(cfg.fault == "sift-child");

    std::vector<std::string> failed;
    for (const auto& [name, run] : checks) {
        if (!only.empty() && std::find(only.begin(), only.end(), name) == only.end())
            continue;
        CheckResult result;
        try {
            result = run();
        } catch (const std::exception& e) {
            result = {false, e.what()};
        }
        out << (result.passed ? "PASS " : "FAIL ") << name << ": " << result.detail << '\n';
        if (name == "tables" && !report.cells.empty())
            out << '\n' << report.render_text() << '\n';
        if (!result.passed)
            failed.push_back(name);
    }
    if (!failed.empty()) {
        err << "uhsort: verification failed:";
        for (const auto& f : failed)
            err << ' ' << f;
        err << '\n';
        return kCheckFailed;
    }
    return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Instrumented heapsort and baseline sorts"};
    app.name(args.empty() ? "uhsort" : args.front());
    app.require_subcommand(1);
    CliConfig cfg;

    auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", cfg.seed, "RNG seed (default 0)"); };
    auto add_pivot = [&](CLI::App* sub) {
        sub->add_option("--pivot", cfg.pivot, "quicksort pivot rule: last, median3, random");
    };

    auto* sort = app.add_subcommand("sort", "sort newline-delimited values");
    sort->add_option("-a,--algorithm", cfg.algorithm, "insertion, merge, quick, bucket, radix, bubble, uhs");
    sort->add_option("--order", cfg.order, "asc or desc");
    sort->add_option("-i,--input", cfg.input, "input path, - for stdin");
    sort->add_option("-o,--output", cfg.output, "output path, - for stdout");
    sort->add_flag("--float", cfg.decimal, "parse values as decimals");
    sort->add_flag("--stats", cfg.stats, "print operation counters to stderr");
    add_pivot(sort);
    add_seed(sort);

    auto* bench = app.add_subcommand("bench", "run a counted benchmark sweep and write CSV");
    bench->add_option("--algorithms", cfg.algorithms, "comma list or 'all'");
    bench->add_option("--sizes", cfg.sizes, "comma list or doubling range 2^a..2^b");
    bench->add_option("--distributions", cfg.distributions,
                      "comma list of random, sorted, reversed, few-unique, uniform01, or 'all'");
    bench->add_option("--trials", cfg.trials, "trials per cell (default 1)");
    bench->add_option("--order", cfg.order, "asc or desc");
    bench->add_option("-o,--output,--csv", cfg.output, "CSV path, - for stdout");
    add_pivot(bench);
    add_seed(bench);

    auto* stability = app.add_subcommand("stability", "search for stability witnesses");
    stability->add_option("--algorithms,-a,--algorithm", cfg.algorithms, "comma list or 'all'");
    stability->add_option("--trials", cfg.trials, "randomized trials (default 10000)");
    stability->add_option("--max-n", cfg.max_n, "largest randomized input (default 64)");
    add_pivot(stability);
    add_seed(stability);

    auto* verify = app.add_subcommand("verify", "run the full verification suite");
    verify->add_option("--only", cfg.only,
                       "comma list of checks: heap-invariant, build-cost, differential, dynamic, tables");
    verify->add_option("--inject-fault", cfg.fault)->group("");
    add_seed(verify);

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInputError;
    }

    try {
        if (sort->parsed())
            return cmd_sort(cfg, in, out, err);
        if (bench->parsed())
            return cmd_bench(cfg, out, err);
        if (stability->parsed())
            return cmd_stability(cfg, out);
        return cmd_verify(cfg, out, err);
    } catch (const InputError& e) {
        err << "uhsort: " << e.what() << '\n';
        return kInputError;
    } catch (const DomainError& e) {
        err << "uhsort: " << e.what() << '\n';
        return kInputError;
    }
}

} // namespace uhs::cli
