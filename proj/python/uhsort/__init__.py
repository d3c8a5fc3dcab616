# SPDX-License-Identifier: Apache-2.0
"""Instrumented heapsort, baseline sorts and operation-count analysis."""

from ._core import (
    DomainError,
    EmptyHeap,
    Heap,
    IndexOutOfHeap,
    InsufficientData,
    OpCounters,
    algorithms,
    bench_csv,
    build_cost_audit,
    dynamic_scenario,
    growth_fit,
    is_heap,
    node_height,
    reproduce_tables,
    sort_floats,
    sort_ints,
    stability_check,
)

__all__ = [
    "DomainError",
    "EmptyHeap",
    "Heap",
    "IndexOutOfHeap",
    "InsufficientData",
    "OpCounters",
    "algorithms",
    "bench_csv",
    "build_cost_audit",
    "dynamic_scenario",
    "growth_fit",
    "is_heap",
    "node_height",
    "reproduce_tables",
    "sort_floats",
    "sort_ints",
    "stability_check",
]
