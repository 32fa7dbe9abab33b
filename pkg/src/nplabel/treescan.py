"""Free-tree enumeration and the conjecture scan over all small trees.

Two independent generators back each other up: the primary walks canonical
rooted level sequences (Beyer-Hedetniemi successor) and keeps one
centroid-canonical rooting per free tree; the secondary grows trees by
leaf attachment with AHU deduplication.  Matching counts between the two
is the self-validation the scan relies on.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterator, List, Tuple

from .errors import UsageError
from .graph import Graph, is_tree
from .search import (
    EXHAUSTED,
    FOUND,
    INCONCLUSIVE,
    SearchConfig,
    find_labeling,
)

MAX_ENUM_N = 18


def ahu_canonical(t: Graph) -> str:
    """Canonical string of a free tree: AHU encoding rooted at the center
    (both centers tried for bicentral trees, lexicographic minimum taken)."""
    if not is_tree(t):
        raise UsageError("ahu_canonical requires a tree")
    return min(_rooted_encoding(t, c) for c in tree_centers(t))


def tree_centers(t: Graph) -> List[int]:
    """The 1 or 2 centers of a tree, by iterative leaf stripping."""
    n = t.n
    if n == 1:
        return [1]
    degree = [len(t.adj[v]) if v else 0 for v in range(n + 1)]
    layer = [v for v in range(1, n + 1) if degree[v] == 1]
    removed = len(layer)
    while removed < n:
        nxt = []
        for v in layer:
            for u in t.adj[v]:
                degree[u] -= 1
                if degree[u] == 1:
                    nxt.append(u)
        removed += len(nxt)
        layer = nxt
    return sorted(layer)


def _rooted_encoding(t: Graph, root: int) -> str:
    """AHU parenthesis string of the tree rooted at ``root``."""
    # iterative post-order to stay clear of the recursion limit
    parent = [0] * (t.n + 1)
    order = [root]
    parent[root] = -1
    for v in order:
        for u in t.adj[v]:
            if parent[u] == 0 and u != root:
                parent[u] = v
                order.append(u)
    code: Dict[int, str] = {}
    for v in reversed(order):
        kids = sorted(code[u] for u in t.adj[v] if parent[u] == v)
        code[v] = "(" + "".join(kids) + ")"
    return code[root]


# -- primary generator: canonical rooted level sequences ---------------------


def _level_sequences(n: int) -> Iterator[List[int]]:
    """Beyer-Hedetniemi successor enumeration of canonical rooted-tree level
    sequences on n vertices (root at level 1)."""
    levels = list(range(1, n + 1))
    yield levels[:]
    if n <= 2:
        return
    while True:
        p = max((i for i in range(n) if levels[i] > 2), default=-1)
        if p < 0:
            return
        q = max(i for i in range(p) if levels[i] == levels[p] - 1)
        for i in range(p, n):
            levels[i] = levels[i - (p - q)]
        yield levels[:]


def _tree_from_levels(levels: List[int]) -> Tuple[Graph, List[int]]:
    """Graph (vertex i+1 = position i) and 0-based parent array (-1 = root)."""
    n = len(levels)
    parent = [-1] * n
    stack = [0]
    for i in range(1, n):
        while levels[stack[-1]] != levels[i] - 1:
            stack.pop()
        parent[i] = stack[-1]
        stack.append(i)
    edges = [(parent[i] + 1, i + 1) for i in range(1, n)]
    return Graph(n, edges), parent


def _subtree_sizes(parent: List[int]) -> List[int]:
    n = len(parent)
    size = [1] * n
    for i in range(n - 1, 0, -1):
        size[parent[i]] += size[i]
    return size


def _centroids(parent: List[int], size: List[int]) -> List[int]:
    n = len(parent)
    best = None
    out = []
    for v in range(n):
        heaviest = n - size[v]
        for u in range(n):
            if parent[u] == v and size[u] > heaviest:
                heaviest = size[u]
        if best is None or heaviest < best:
            best = heaviest
            out = [v]
        elif heaviest == best:
            out.append(v)
    return out


def _rooted_code(children: List[List[int]], v: int) -> str:
    kids = sorted(_rooted_code(children, u) for u in children[v])
    return "(" + "".join(kids) + ")"


def _is_free_canonical(parent: List[int]) -> bool:
    """Keep exactly one rooted representative per free tree: the root must be
    a centroid, and for bicentroidal trees the centroid subtree must not
    out-rank the root's half."""
    n = len(parent)
    size = _subtree_sizes(parent)
    cents = _centroids(parent, size)
    if 0 not in cents:
        return False
    if len(cents) == 1:
        return True
    other = cents[0] if cents[0] != 0 else cents[1]
    if parent[other] != 0:
        return False  # the two centroids are always adjacent
    children = [[] for _ in range(n)]
    for i in range(1, n):
        children[parent[i]].append(i)
    half_a = _rooted_code(children, other)
    children[0] = [u for u in children[0] if u != other]
    half_b = _rooted_code(children, 0)
    return half_a <= half_b


def enumerate_free_trees(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of trees on n vertices."""
    if not (1 <= n <= MAX_ENUM_N):
        raise UsageError("tree enumeration supports 1 <= n <= %d" % MAX_ENUM_N)
    if n == 1:
        yield Graph(1, [])
        return
    for levels in _level_sequences(n):
        g, parent = _tree_from_levels(levels)
        if _is_free_canonical(parent):
            yield g


# -- secondary and tertiary generators (cross-checks) ------------------------


def enumerate_free_trees_by_extension(n: int) -> List[Graph]:
    """Independent generator: grow trees one leaf at a time, deduplicating
    with the AHU canonical form."""
    if not (1 <= n <= MAX_ENUM_N):
        raise UsageError("tree enumeration supports 1 <= n <= %d" % MAX_ENUM_N)
    current: Dict[str, Graph] = {ahu_canonical(Graph(1, [])): Graph(1, [])}
    for size in range(2, n + 1):
        nxt: Dict[str, Graph] = {}
        for g in current.values():
            for v in range(1, g.n + 1):
                h = Graph(g.n + 1, list(g.edges) + [(v, g.n + 1)])
                code = ahu_canonical(h)
                if code not in nxt:
                    nxt[code] = h
        current = nxt
    return [current[c] for c in sorted(current)]


def count_free_trees_by_pruefer(n: int) -> int:
    """Exhaustive Pruefer-sequence sweep with AHU dedup; n <= 8 only (the
    sequence space grows as n^(n-2))."""
    if n < 1 or n > 8:
        raise UsageError("Pruefer sweep limited to 1 <= n <= 8")
    if n <= 2:
        return 1
    from .families import tree_from_pruefer

    seen = set()
    for seq in product(range(1, n + 1), repeat=n - 2):
        seen.add(ahu_canonical(tree_from_pruefer(n, list(seq))))
    return len(seen)


def crosscheck_tree_counts(max_n: int) -> List[Tuple[int, int, int]]:
    """(n, primary count, secondary count) for n = 1..max_n."""
    rows = []
    for n in range(1, max_n + 1):
        a = sum(1 for _ in enumerate_free_trees(n))
        b = len(enumerate_free_trees_by_extension(n))
        rows.append((n, a, b))
    return rows


# -- conjecture scan ---------------------------------------------------------


@dataclass(frozen=True)
class SizeResult:
    n: int
    tree_count: int
    solved_count: int
    failures: Tuple[str, ...]  # canonical encodings of Exhausted trees
    inconclusive: Tuple[str, ...]
    seconds: float
    failure_graphs: Tuple[Graph, ...] = ()


@dataclass(frozen=True)
class ConjectureReport:
    max_n: int
    rows: Tuple[SizeResult, ...]

    @property
    def conjecture_holds(self) -> bool:
        return all(not r.failures for r in self.rows)

    def table(self) -> str:
        lines = ["%4s %8s %8s %8s %12s %9s" % ("n", "trees", "solved", "failed", "inconclusive", "seconds")]
        for r in self.rows:
            lines.append(
                "%4d %8d %8d %8d %12d %9.2f"
                % (r.n, r.tree_count, r.solved_count, len(r.failures), len(r.inconclusive), r.seconds)
            )
        return "\n".join(lines) + "\n"


def _scan_one(args):
    g, cfg = args
    return g, find_labeling(g, cfg).status


def scan_conjecture(
    max_n: int, cfg: SearchConfig = SearchConfig(), jobs: int = 1
) -> ConjectureReport:
    """Run the exact searcher over every non-isomorphic tree of each size up
    to max_n; any Exhausted tree would falsify the conjecture and is
    surfaced with its canonical encoding and graph."""
    if not (1 <= max_n <= MAX_ENUM_N):
        raise UsageError("max_n must be within 1..%d" % MAX_ENUM_N)
    rows = []
    for n in range(1, max_n + 1):
        start = time.perf_counter()
        trees = list(enumerate_free_trees(n))
        failures, inconclusive, fail_graphs = [], [], []
        solved = 0
        if jobs > 1:
            import multiprocessing

            with multiprocessing.Pool(jobs) as pool:
                results = pool.map(_scan_one, [(g, cfg) for g in trees])
        else:
            results = [_scan_one((g, cfg)) for g in trees]
        for g, status in results:
            if status == FOUND:
                solved += 1
            elif status == EXHAUSTED:
                failures.append(ahu_canonical(g))
                fail_graphs.append(g)
            else:
                inconclusive.append(ahu_canonical(g))
        rows.append(
            SizeResult(
                n=n,
                tree_count=len(trees),
                solved_count=solved,
                failures=tuple(failures),
                inconclusive=tuple(inconclusive),
                seconds=time.perf_counter() - start,
                failure_graphs=tuple(fail_graphs),
            )
        )
    return ConjectureReport(max_n, tuple(rows))
