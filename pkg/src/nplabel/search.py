"""Exact search for neighborhood-prime labelings plus a brute-force oracle.

The hot inner loop lives in a kernel with two interchangeable builds: the
Cython extension ``nplabel._searchext`` and the pure-Python fallback
``nplabel._searchcore``.  The extension is used when importable unless the
environment variable ``NPLABEL_PURE`` is set.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import permutations
from typing import List, Optional, Tuple

from . import _searchcore
from .errors import UsageError
from .graph import Graph, verify

try:
    if os.environ.get("NPLABEL_PURE"):
        raise ImportError
    from . import _searchext as _kernel

    HAVE_EXT = True
except ImportError:
    _kernel = _searchcore
    HAVE_EXT = False

DEFAULT_BUDGET = 10_000_000

ORDER_DEGREE = "degree"
ORDER_NATURAL = "natural"

FOUND = "found"
EXHAUSTED = "exhausted"
INCONCLUSIVE = "inconclusive"

_STATUS_NAMES = {
    _searchcore.STATUS_FOUND: FOUND,
    _searchcore.STATUS_EXHAUSTED: EXHAUSTED,
    _searchcore.STATUS_INCONCLUSIVE: INCONCLUSIVE,
}


def kernel_name() -> str:
    return "cython" if HAVE_EXT else "pure-python"


@dataclass(frozen=True)
class SearchConfig:
    node_budget: Optional[int] = DEFAULT_BUDGET
    order: str = ORDER_DEGREE
    find_all: bool = False

    def __post_init__(self):
        if self.node_budget is not None and self.node_budget < 1:
            raise UsageError("node_budget must be >= 1 when present")
        if self.order not in (ORDER_DEGREE, ORDER_NATURAL):
            raise UsageError("order must be %r or %r" % (ORDER_DEGREE, ORDER_NATURAL))


@dataclass(frozen=True)
class SearchOutcome:
    status: str  # found | exhausted | inconclusive
    labeling: Optional[Tuple[int, ...]]
    nodes_explored: int
    all_solutions: Optional[Tuple[Tuple[int, ...], ...]] = None


def _csr(g: Graph):
    indptr = [0]
    indices = []
    for v in range(1, g.n + 1):
        indices.extend(u - 1 for u in g.adj[v])
        indptr.append(len(indices))
    return indptr, indices


def _vertex_order(g: Graph, order: str):
    if order == ORDER_NATURAL:
        return list(range(g.n))
    return sorted(range(g.n), key=lambda v: (-len(g.adj[v + 1]), v))


def find_labeling(
    g: Graph, cfg: SearchConfig = SearchConfig(), kernel=None
) -> SearchOutcome:
    """Depth-first exact search; sound and complete within the node budget.

    A branch is pruned as soon as some vertex of degree >= 2 has its whole
    neighborhood labeled with gcd >= 2.  With ``find_all`` the full solution
    list is returned; a budget hit during enumeration yields Inconclusive
    with the partial list.
    """
    if kernel is None:
        kernel = _kernel
    indptr, indices = _csr(g)
    order = _vertex_order(g, cfg.order)
    budget = cfg.node_budget if cfg.node_budget is not None else 0
    status, nodes, solutions = kernel.run_search(
        g.n, indptr, indices, order, budget, cfg.find_all
    )
    return _outcome(status, nodes, solutions, cfg.find_all)


def _outcome(status, nodes, solutions, find_all):
    name = _STATUS_NAMES[status]
    labeling = tuple(solutions[0]) if solutions else None
    all_sols = tuple(tuple(s) for s in solutions) if find_all else None
    return SearchOutcome(name, labeling, nodes, all_sols)


def brute_force_oracle(g: Graph, find_all: bool = False) -> SearchOutcome:
    """Ground truth by checking all n! bijections with the verifier."""
    if g.n > 9:
        raise UsageError("brute_force_oracle limited to n <= 9, got %d" % g.n)
    solutions: List[Tuple[int, ...]] = []
    checked = 0
    for perm in permutations(range(1, g.n + 1)):
        checked += 1
        if verify(g, perm).ok:
            solutions.append(perm)
            if not find_all:
                break
    status = FOUND if solutions else EXHAUSTED
    labeling = solutions[0] if solutions else None
    all_sols = tuple(solutions) if find_all else None
    return SearchOutcome(status, labeling, checked, all_sols)
