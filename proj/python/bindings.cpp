// SPDX-License-Identifier: Apache-2.0
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "uhs/algorithm.hpp"
#include "uhs/bench.hpp"
#include "uhs/dynamic.hpp"
#include "uhs/growth.hpp"
#include "uhs/heap.hpp"
#include "uhs/instrumentation.hpp"
#include "uhs/report.hpp"

namespace py = pybind11;

namespace {

using IntElement = uhs::Element<std::int64_t>;

uhs::SortOrder to_order(const std::string& order)
{
    if (order == "asc")
        return uhs::SortOrder::Ascending;
    if (order == "desc")
        return uhs::SortOrder::Descending;
    throw py::value_error("order must be 'asc' or 'desc'");
}

uhs::AlgorithmId to_algorithm(const std::string& name)
{
    if (auto id = uhs::parse_algorithm(name))
        return *id;
    throw py::value_error("unknown algorithm '" + name + "'");
}

uhs::SortOptions to_options(const std::string& pivot, std::uint64_t seed)
{
    auto rule = uhs::parse_pivot_rule(pivot);
    if (!rule)
        throw py::value_error("pivot must be 'last', 'median3' or 'random'");
    return uhs::SortOptions{*rule, seed, std::nullopt, std::nullopt};
}

template <class K>
py::tuple sort_keys(const std::vector<K>& keys, const std::string& algorithm, const std::string& order,
                    const std::string& pivot, std::uint64_t seed)
{
    std::vector<uhs::Element<K>> elements(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i)
        elements[i] = {keys[i], i};
    auto run = uhs::counted_sort(to_algorithm(algorithm), std::move(elements), to_order(order),
                                 to_options(pivot, seed));
    std::vector<K> sorted;
    sorted.reserve(run.elements.size());
    for (const auto& e : run.elements)
        sorted.push_back(e.key);
    return py::make_tuple(sorted, run.counters);
}

uhs::HeapOrder to_heap_order(const std::string& order)
{
    if (order == "max")
        return uhs::HeapOrder::MaxAtRoot;
    if (order == "min")
        return uhs::HeapOrder::MinAtRoot;
    throw py::value_error("heap order must be 'max' or 'min'");
}

// Python-facing heap over integer keys with its own counters.
class PyHeap {
public:
    explicit PyHeap(const std::string& order) : heap_(to_heap_order(order)) {}

    static PyHeap from_keys(const std::vector<std::int64_t>& keys, const std::string& order)
    {
        PyHeap h(order);
        std::vector<IntElement> elements(keys.size());
        for (std::size_t i = 0; i < keys.size(); ++i)
            elements[i] = {keys[i], i};
        h.heap_ = uhs::Heap<IntElement>::build(std::move(elements), to_heap_order(order), h.counters_);
        return h;
    }

    void push(std::int64_t key) { heap_.push({key, next_tag_++}, counters_); }
    std::int64_t pop() { return heap_.pop_root(counters_).key; }
    std::int64_t peek() const { return heap_.peek().key; }
    std::int64_t remove_at(std::size_t i) { return heap_.remove_at(i, counters_).key; }
    std::size_t size() const { return heap_.size(); }
    bool valid() const { return heap_.valid(); }
    std::vector<std::int64_t> keys() const
    {
        std::vector<std::int64_t> out;
        for (const auto& e : heap_.live())
            out.push_back(e.key);
        return out;
    }
    const uhs::OpCounters& counters() const { return counters_; }

private:
    uhs::Heap<IntElement> heap_;
    uhs::OpCounters counters_;
    std::uint64_t next_tag_ = 0;
};

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Instrumented heapsort, baseline sorts and complexity analysis";

    py::register_exception<uhs::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<uhs::EmptyHeap>(m, "EmptyHeap", PyExc_IndexError);
    py::register_exception<uhs::IndexOutOfHeap>(m, "IndexOutOfHeap", PyExc_IndexError);
    py::register_exception<uhs::InsufficientData>(m, "InsufficientData", PyExc_ValueError);

    py::class_<uhs::OpCounters>(m, "OpCounters")
        .def(py::init<>())
        .def_readonly("comparisons", &uhs::OpCounters::comparisons)
        .def_readonly("swaps", &uhs::OpCounters::swaps)
        .def_readonly("element_moves", &uhs::OpCounters::element_moves)
        .def_readonly("aux_peak_slots", &uhs::OpCounters::aux_peak_slots)
        .def_readonly("recursion_peak", &uhs::OpCounters::recursion_peak)
        .def("__eq__", [](const uhs::OpCounters& a, const uhs::OpCounters& b) { return a == b; })
        .def("__repr__", [](const uhs::OpCounters& c) {
            return "OpCounters(comparisons=" + std::to_string(c.comparisons) + ", swaps=" + std::to_string(c.swaps) +
                   ", element_moves=" + std::to_string(c.element_moves) +
                   ", aux_peak_slots=" + std::to_string(c.aux_peak_slots) +
                   ", recursion_peak=" + std::to_string(c.recursion_peak) + ")";
        });

    m.def("algorithms", [] {
        std::vector<std::string> names;
        for (auto id : uhs::kAllAlgorithms)
            names.emplace_back(uhs::algorithm_name(id));
        return names;
    });

    m.def("sort_ints", &sort_keys<std::int64_t>, py::arg("keys"), py::arg("algorithm") = "uhs",
          py::arg("order") = "asc", py::arg("pivot") = "last", py::arg("seed") = 0,
          "Sort integer keys; returns (sorted keys, OpCounters).");
    m.def("sort_floats", &sort_keys<double>, py::arg("keys"), py::arg("algorithm") = "uhs",
          py::arg("order") = "asc", py::arg("pivot") = "last", py::arg("seed") = 0,
          "Sort decimal keys; returns (sorted keys, OpCounters).");

    m.def(
        "is_heap",
        [](const std::vector<std::int64_t>& keys, const std::string& order) {
            std::vector<IntElement> elements(keys.size());
            for (std::size_t i = 0; i < keys.size(); ++i)
                elements[i] = {keys[i], i};
            return uhs::is_heap(std::span<const IntElement>(elements), elements.size(), to_heap_order(order));
        },
        py::arg("keys"), py::arg("order") = "max");
    m.def("node_height", [](std::size_t i, std::size_t n) { return uhs::node_height(i, n).value; });

    py::class_<PyHeap>(m, "Heap")
        .def(py::init<const std::string&>(), py::arg("order") = "max")
        .def_static("build", &PyHeap::from_keys, py::arg("keys"), py::arg("order") = "max")
        .def("push", &PyHeap::push)
        .def("pop", &PyHeap::pop)
        .def("peek", &PyHeap::peek)
        .def("remove_at", &PyHeap::remove_at)
        .def("valid", &PyHeap::valid)
        .def("keys", &PyHeap::keys)
        .def_property_readonly("counters", &PyHeap::counters)
        .def("__len__", &PyHeap::size);

    m.def(
        "growth_fit",
        [](const std::vector<std::pair<double, double>>& points) {
            std::vector<uhs::GrowthPoint> pts;
            for (auto [n, cost] : points)
                pts.push_back({n, cost});
            const auto fit = uhs::growth_fit(pts);
            return py::make_tuple(std::string(uhs::complexity_name(fit.complexity)), fit.fit_residual,
                                  fit.coefficient);
        },
        py::arg("points"), "Fit (n, cost) points; returns (class name, residual, coefficient).");

    m.def(
        "stability_check",
        [](const std::string& algorithm, std::size_t trials, std::size_t max_n, std::uint64_t seed,
           const std::string& pivot) -> py::object {
            const auto verdict =
                uhs::stability_check(to_algorithm(algorithm), trials, max_n, seed, to_options(pivot, seed));
            if (const auto* w = std::get_if<uhs::UnstableWitness>(&verdict))
                return py::dict(py::arg("stable") = false, py::arg("witness") = w->keys);
            return py::dict(py::arg("stable") = true,
                            py::arg("trials") = std::get<uhs::StableOverTrials>(verdict).trials);
        },
        py::arg("algorithm"), py::arg("trials") = 10'000, py::arg("max_n") = 64, py::arg("seed") = 0,
        py::arg("pivot") = "last");

    m.def(
        "build_cost_audit",
        [](const std::vector<std::size_t>& sizes, std::uint64_t seed) {
            const auto audit = uhs::build_cost_audit(sizes, seed);
            py::list rows;
            for (const auto& r : audit.rows)
                rows.append(py::make_tuple(r.n, r.comparisons, r.ratio));
            return py::make_tuple(audit.passed(), rows);
        },
        py::arg("sizes"), py::arg("seed") = 0, "Returns (passed, [(n, comparisons, ratio), ...]).");

    m.def(
        "dynamic_scenario",
        [](std::size_t steps, std::uint64_t seed) {
            const auto ops = uhs::make_dynamic_workload(steps, seed);
            const auto trace = uhs::dynamic_scenario(ops);
            return py::dict(py::arg("agreed") = trace.agreed(),
                            py::arg("heap_comparisons") = trace.heap_comparisons(),
                            py::arg("oracle_shifts") = trace.oracle_shifts());
        },
        py::arg("steps"), py::arg("seed") = 0);

    m.def(
        "reproduce_tables",
        [](std::uint64_t seed) {
            const auto report = uhs::reproduce_tables(seed);
            return py::make_tuple(report.reproduced(), report.render_text());
        },
        py::arg("seed") = 0, "Returns (reproduced, report text). Takes a few seconds.");

    m.def(
        "bench_csv",
        [](const std::vector<std::string>& algorithms, const std::string& sizes,
           const std::vector<std::string>& distributions, std::size_t trials, std::uint64_t seed) {
            uhs::BenchConfig cfg;
            cfg.algorithms.clear();
            for (const auto& a : algorithms)
                cfg.algorithms.push_back(to_algorithm(a));
            cfg.sizes = uhs::parse_sizes(sizes);
            cfg.distributions.clear();
            for (const auto& d : distributions) {
                auto dist = uhs::parse_distribution(d);
                if (!dist)
                    throw py::value_error("unknown distribution '" + d + "'");
                cfg.distributions.push_back(*dist);
            }
            cfg.trials = trials;
            cfg.seed = seed;
            std::ostringstream out;
            const auto records = uhs::run_bench(cfg);
            uhs::write_bench_csv(out, records);
            return out.str();
        },
        py::arg("algorithms"), py::arg("sizes"), py::arg("distributions") = std::vector<std::string>{"random"},
        py::arg("trials") = 1, py::arg("seed") = 0);
}
