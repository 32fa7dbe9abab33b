"""Pure-Python backtracking kernel for neighborhood-prime label search.

Mirrors the Cython kernel in ``_searchext.pyx``; :mod:`nplabel.search`
picks whichever is importable.  Semantics of both kernels are identical:
depth-first assignment of labels to vertices in a fixed order, pruning a
branch as soon as some vertex of degree >= 2 has its whole neighborhood
labeled with gcd >= 2.
"""

from __future__ import annotations

from math import gcd

STATUS_FOUND = 0
STATUS_EXHAUSTED = 1
STATUS_INCONCLUSIVE = 2


def run_search(n, indptr, indices, order, budget, find_all):
    """Search for labelings of a graph in CSR form (0-based vertex ids).

    Returns ``(status, nodes, solutions)`` where each solution is a list
    with ``solution[v]`` = label of vertex v.  ``budget`` <= 0 means
    unlimited.  Deterministic: vertices tried in ``order``, labels ascending.
    """
    deg = [indptr[v + 1] - indptr[v] for v in range(n)]
    g = [0] * n  # running gcd of labeled neighbors (0 = none yet)
    rem = deg[:]  # unlabeled-neighbor count
    label_of = [0] * n
    used = [False] * (n + 1)
    last = [0] * (n + 1)  # last label tried at each depth
    trail = []  # (vertex, previous gcd) undo records
    tstart = [0] * (n + 1)

    nodes = 0
    solutions = []
    status = STATUS_EXHAUSTED
    d = 0
    while d >= 0:
        if d == n:
            solutions.append(label_of[:])
            if not find_all:
                status = STATUS_FOUND
                break
            d -= 1
            _undo(order[d], label_of, used, trail, tstart[d], g, rem)
            continue
        v = order[d]
        lab = last[d] + 1
        advanced = False
        while lab <= n:
            if not used[lab]:
                nodes += 1
                if budget > 0 and nodes > budget:
                    status = STATUS_INCONCLUSIVE
                    d = -1
                    break
                tstart[d] = len(trail)
                if _apply(v, lab, indptr, indices, deg, g, rem, trail):
                    used[lab] = True
                    label_of[v] = lab
                    last[d] = lab
                    d += 1
                    last[d] = 0
                    advanced = True
                    break
            lab += 1
        if d == -1:
            break
        if not advanced:
            d -= 1
            if d >= 0:
                _undo(order[d], label_of, used, trail, tstart[d], g, rem)
    if solutions and status != STATUS_INCONCLUSIVE:
        status = STATUS_FOUND
    return status, nodes, solutions


def _apply(v, lab, indptr, indices, deg, g, rem, trail):
    """Propagate label ``lab`` at vertex v; False (with rollback) on prune."""
    start = len(trail)
    for i in range(indptr[v], indptr[v + 1]):
        u = indices[i]
        if deg[u] < 2:
            continue
        trail.append((u, g[u]))
        g[u] = gcd(g[u], lab)
        rem[u] -= 1
        if rem[u] == 0 and g[u] != 1:
            while len(trail) > start:
                w, old = trail.pop()
                g[w] = old
                rem[w] += 1
            return False
    return True


def _undo(v, label_of, used, trail, start, g, rem):
    used[label_of[v]] = False
    label_of[v] = 0
    while len(trail) > start:
        w, old = trail.pop()
        g[w] = old
        rem[w] += 1
