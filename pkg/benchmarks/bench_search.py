#!/usr/bin/env python3
"""Benchmark the two search kernels (Cython extension vs pure Python).

Runs the same workloads through both kernels via find_labeling(kernel=...)
and reports wall time plus the speedup.  Workloads: the exhaustive scan
over all trees on 10 vertices, an exhausted cycle, and a found cycle.
"""

import time

from nplabel import _searchcore
from nplabel.families import cycle_graph
from nplabel.search import SearchConfig, find_labeling
from nplabel.treescan import enumerate_free_trees

try:
    from nplabel import _searchext
except ImportError:
    _searchext = None


def time_workload(name, fn):
    rows = []
    for label, kernel in (("pure-python", _searchcore), ("cython", _searchext)):
        if kernel is None:
            rows.append((label, None, None))
            continue
        start = time.perf_counter()
        result = fn(kernel)
        rows.append((label, time.perf_counter() - start, result))
    print(name)
    base = rows[0][1]
    for label, seconds, result in rows:
        if seconds is None:
            print("  %-12s not built" % label)
            continue
        speedup = " (%.1fx)" % (base / seconds) if label != "pure-python" else ""
        print("  %-12s %8.3fs  %s%s" % (label, seconds, result, speedup))
    print()


TREES_N12 = None


def scan_trees_n12(kernel):
    global TREES_N12
    if TREES_N12 is None:  # enumerate once, outside the comparison
        TREES_N12 = list(enumerate_free_trees(12))
    cfg = SearchConfig()
    statuses = [find_labeling(t, cfg, kernel=kernel).status for t in TREES_N12]
    return "%d trees, %d found" % (len(statuses), statuses.count("found"))


def cycle_workload(n, budget=None):
    cfg = SearchConfig(node_budget=budget) if budget else SearchConfig()

    def run(kernel):
        out = find_labeling(cycle_graph(n), cfg, kernel=kernel)
        return "%s after %d nodes" % (out.status, out.nodes_explored)

    return run


def main():
    global TREES_N12
    TREES_N12 = list(enumerate_free_trees(12))
    time_workload("scan all 551 trees on 12 vertices", scan_trees_n12)
    time_workload("cycle C10 (exhaustive refutation)", cycle_workload(10))
    time_workload("cycle C13 (first solution)", cycle_workload(13))
    time_workload("cycle C14 (1e6-node budget)", cycle_workload(14, budget=10**6))


if __name__ == "__main__":
    main()
