// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "uhs/bench.hpp"
#include "uhs/cli.hpp"
#include "uhs/heap.hpp"

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args, const std::string& input = "")
{
    args.insert(args.begin(), "uhsort");
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = uhs::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> v;
    std::istringstream s(text);
    for (std::string line; std::getline(s, line);)
        v.push_back(line);
    return v;
}

std::vector<std::string> fields(const std::string& row)
{
    std::vector<std::string> v;
    std::istringstream s(row);
    for (std::string f; std::getline(s, f, ',');)
        v.push_back(f);
    return v;
}

} // namespace

TEST_CASE("cli.sort.examples")
{
    const auto r = invoke({"sort"}, "3\n1\n2\n");
    CHECK(r.code == 0);
    CHECK(r.out == "1\n2\n3\n");

    const auto empty = invoke({"sort"}, "");
    CHECK(empty.code == 0);
    CHECK(empty.out.empty());

    const auto bad = invoke({"sort"}, "abc\n");
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 1") != std::string::npos);
}

TEST_CASE("cli.sort.options")
{
    CHECK(invoke({"sort", "--order", "desc", "-a", "merge"}, "3\n1\n2\n").out == "3\n2\n1\n");
    CHECK(invoke({"sort", "-a", "bucket", "--float"}, "0.5\n0.25\n").out == "0.25\n0.5\n");
    CHECK(invoke({"sort", "-a", "bucket", "--float"}, "1.5\n").code == 2);
    CHECK(invoke({"sort", "-a", "radix"}, "-4\n").code == 2);
    CHECK(invoke({"sort", "-a", "nope"}, "1\n").code == 2);
    CHECK(invoke({"sort", "--order", "sideways"}, "1\n").code == 2);
    CHECK(invoke({"sort", "2\n"}, "").code == 2);

    const auto stats = invoke({"sort", "--stats"}, "3\n1\n2\n");
    CHECK(stats.err.find("comparisons=") != std::string::npos);
    CHECK(stats.err.find("aux_peak_slots=0") != std::string::npos);
}

TEST_CASE("cli.sort.files")
{
    const auto dir = std::filesystem::temp_directory_path() / "uhsort_cli_test";
    std::filesystem::create_directories(dir);
    const auto in = dir / "in.txt";
    const auto out = dir / "out.txt";
    std::ofstream(in) << "10\n-2\n7\n";
    CHECK(invoke({"sort", "-i", in.string(), "-o", out.string()}).code == 0);
    std::ifstream back(out);
    std::stringstream text;
    text << back.rdbuf();
    CHECK(text.str() == "-2\n7\n10\n");
    CHECK(invoke({"sort", "-i", (dir / "missing.txt").string()}).code == 2);
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli.bench.rows")
{
    const auto one = invoke({"bench", "--algorithms", "uhs", "--sizes", "64", "--distributions", "random"});
    CHECK(one.code == 0);
    const auto rows = lines(one.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == uhs::kBenchCsvHeader);

    const auto grid = invoke({"bench", "--algorithms", "uhs,merge,radix", "--sizes", "2^4..2^6", "--trials", "2"});
    CHECK(grid.code == 0);
    CHECK(lines(grid.out).size() == 1 + 3 * 3 * 5 * 2);

    const auto dflt = invoke({"bench"});
    CHECK(dflt.code == 0);
    CHECK(lines(dflt.out).size() == 1 + 7 * 4 * 5);
}

TEST_CASE("cli.bench.uhs_doubling_ratio")
{
    const auto r = invoke({"bench", "--algorithms", "uhs", "--sizes", "2^12..2^16", "--distributions", "random"});
    REQUIRE(r.code == 0);
    std::vector<double> comparisons;
    for (const auto& row : lines(r.out))
        if (row.rfind("uhs,", 0) == 0)
            comparisons.push_back(std::stod(fields(row)[4]));
    REQUIRE(comparisons.size() == 5);
    for (std::size_t i = 1; i < comparisons.size(); ++i) {
        const double ratio = comparisons[i] / comparisons[i - 1];
        CHECK(ratio >= 1.9);
        CHECK(ratio <= 2.4);
    }
}

TEST_CASE("cli.bench.errors")
{
    CHECK(invoke({"bench", "--sizes", "2^9..2^3"}).code == 2);
    CHECK(invoke({"bench", "--distributions", "lumpy"}).code == 2);
    CHECK(invoke({"bench", "--sizes", "8", "-o", "/nonexistent-dir/x.csv"}).code == 1);
}

TEST_CASE("cli.stability")
{
    const auto r = invoke({"stability"});
    CHECK(r.code == 0);
    std::map<std::string, std::string> verdict;
    for (const auto& line : lines(r.out)) {
        const auto colon = line.find(':');
        if (colon != std::string::npos)
            verdict[line.substr(0, colon)] = line.substr(colon + 2);
    }
    CHECK(verdict["uhs"].rfind("UNSTABLE witness=", 0) == 0);
    CHECK(verdict["quick"].rfind("UNSTABLE witness=", 0) == 0);
    CHECK(verdict["insertion"] == "STABLE(trials=10000)");
    for (const char* name : {"merge", "bucket", "radix", "bubble"})
        CHECK(verdict[name] == "STABLE(trials=10000)");

    const auto heap_only = invoke({"stability", "-a", "heapsort"});
    CHECK(heap_only.code == 0);
    CHECK(lines(heap_only.out).size() == 1);
}

TEST_CASE("cli.verify.only")
{
    const auto r = invoke({"verify", "--only", "build-cost"});
    CHECK(r.code == 0);
    const auto out = lines(r.out);
    REQUIRE(out.size() == 1);
    CHECK(out[0].rfind("PASS build-cost", 0) == 0);
    CHECK(invoke({"verify", "--only", "nonsense"}).code == 2);
}

TEST_CASE("cli.verify.injected_fault")
{
    const auto r = invoke({"verify", "--only", "heap-invariant,build-cost", "--inject-fault", "sift-child"});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL heap-invariant") != std::string::npos);
    CHECK(r.out.find("is_heap") != std::string::npos);
    CHECK(r.err.find("heap-invariant") != std::string::npos);
    CHECK_FALSE(uhs::testing::sift_child_fault());
    CHECK(invoke({"verify", "--only", "heap-invariant"}).code == 0);
}

TEST_CASE("cli.usage_errors")
{
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}
