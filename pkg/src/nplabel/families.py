"""Deterministic constructors for every graph family the labelers handle.

Each family has a documented canonical vertex numbering; the constructive
labelers in :mod:`nplabel.labelers` are formulas over these numberings.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence, Tuple

from .errors import InvalidSpec, UsageError
from .graph import Graph, contract


@dataclass(frozen=True)
class FamilySpec:
    """Tagged parameter record selecting one graph family.

    ``kind`` is the family name used by the CLI grammar; ``args`` are its
    parameters in the order documented for each constructor below.
    """

    kind: str
    args: Tuple


def path_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidSpec("path requires n >= 1, got %d" % n)
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidSpec("cycle requires n >= 3, got %d" % n)
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def gear_graph(n: int) -> Graph:
    """Gear on 2n+1 vertices: hub = 1, rim cycle 2..2n+1, spokes to the
    odd-indexed rim vertices 3, 5, ..., 2n+1."""
    if n < 3:
        raise InvalidSpec("gear requires n >= 3, got %d" % n)
    edges = [(i, i + 1) for i in range(2, 2 * n + 1)] + [(2, 2 * n + 1)]
    edges += [(1, 2 * i + 1) for i in range(1, n + 1)]
    return Graph(2 * n + 1, edges)


def snake_vertex_count(k: int, n: int) -> int:
    return (n - 1) * (k - 1) + 1


def snake_base_vertex(k: int, j: int) -> int:
    """Trace id of the j-th base-path vertex u_j (1-based)."""
    return (j - 1) * (k - 1) + 1


def snake_graph(k: int, n: int) -> Graph:
    """k-polygonal snake on the zigzag trace numbering: a path v_1..v_m with
    m = (n-1)(k-1)+1 plus base chords between consecutive base vertices."""
    if k < 3:
        raise InvalidSpec("snake requires k >= 3, got k=%d" % k)
    if n < 2:
        raise InvalidSpec("snake requires n >= 2, got n=%d" % n)
    m = snake_vertex_count(k, n)
    edges = [(i, i + 1) for i in range(1, m)]
    edges += [(i * (k - 1) + 1, (i + 1) * (k - 1) + 1) for i in range(n - 1)]
    return Graph(m, edges)


def star_gon_graph(k: int, n: int) -> Graph:
    """Star (k,n)-gon: the snake S_{k,n+1} with its two end base vertices
    contracted (merged vertex gets id 1)."""
    if k < 3:
        raise InvalidSpec("star-gon requires k >= 3, got k=%d" % k)
    if n < 3:
        raise InvalidSpec("star-gon requires n >= 3, got n=%d" % n)
    g = snake_graph(k, n + 1)
    return contract(g, 1, g.n)


def book_graph(k: int, n: int) -> Graph:
    """k-polygonal book: n k-gons sharing the edge u1-u2.  u1=1, u2=2, then
    the k-2 interior page vertices numbered page by page."""
    if k not in (3, 4, 5):
        raise InvalidSpec("book requires k in {3,4,5}, got k=%d" % k)
    if n < 1:
        raise InvalidSpec("book requires n >= 1, got n=%d" % n)
    edges = [(1, 2)]
    for i in range(n):
        page = [3 + i * (k - 2) + j for j in range(k - 2)]
        chain = [1] + page + [2]
        edges += list(zip(chain, chain[1:]))
    return Graph(2 + n * (k - 2), edges)


def mobius_graph(n: int) -> Graph:
    """Moebius ladder M_2n: u_1..u_n = 1..n, v_1..v_n = n+1..2n, ladder
    edges plus the two cross edges v_1 u_n and u_1 v_n."""
    if n < 3:
        raise InvalidSpec("mobius requires n >= 3, got %d" % n)
    edges = [(i, i + 1) for i in range(1, n)]
    edges += [(n + i, n + i + 1) for i in range(1, n)]
    edges += [(i, n + i) for i in range(1, n + 1)]
    edges += [(n, n + 1), (1, 2 * n)]
    return Graph(2 * n, edges)


def caterpillar_graph(pendant_counts: Sequence[int]) -> Graph:
    """Caterpillar with spine 1..s (s = len(counts)+2) and counts[j] pendants
    at interior spine vertex j+2, pendants numbered group by group."""
    counts = list(pendant_counts)
    if any(c < 0 for c in counts):
        raise InvalidSpec("pendant counts must be nonnegative")
    s = len(counts) + 2
    edges = [(i, i + 1) for i in range(1, s)]
    nxt = s + 1
    for j, c in enumerate(counts):
        spine_v = j + 2
        for _ in range(c):
            edges.append((spine_v, nxt))
            nxt += 1
    return Graph(nxt - 1, edges)


def spider_graph(leg_lengths: Sequence[int]) -> Graph:
    """Spider with center 1 and legs numbered consecutively outward."""
    lengths = list(leg_lengths)
    if len(lengths) < 3:
        raise InvalidSpec("spider requires >= 3 legs, got %d" % len(lengths))
    if any(l < 1 for l in lengths):
        raise InvalidSpec("spider legs must have length >= 1")
    edges = []
    nxt = 2
    for l in lengths:
        prev = 1
        for _ in range(l):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt - 1, edges)


def banana_graph(n: int, k: int) -> Graph:
    """(n,k)-banana tree: root 1; star i occupies ids 2+(i-1)k .. 1+ik as
    u_i (root-adjacent leaf), w_i (center), then the k-2 remaining leaves."""
    if n < 1:
        raise InvalidSpec("banana requires n >= 1, got n=%d" % n)
    if k < 3:
        raise InvalidSpec("banana requires k >= 3, got k=%d" % k)
    edges = []
    for i in range(n):
        u = 2 + i * k
        w = u + 1
        edges += [(1, u), (u, w)]
        edges += [(w, leaf) for leaf in range(w + 1, u + k)]
    return Graph(n * k + 1, edges)


def firecracker_graph(n: int, k: int) -> Graph:
    """(n,k)-firecracker: path u_1..u_n = 1..n, star centers v_i = n+i,
    first extra leaf w_i = 2n+i, remaining k-3 leaves numbered after 3n
    grouped by star."""
    if n < 1:
        raise InvalidSpec("firecracker requires n >= 1, got n=%d" % n)
    if k < 1:
        raise InvalidSpec("firecracker requires k >= 1, got k=%d" % k)
    edges = [(i, i + 1) for i in range(1, n)]
    if k >= 2:
        edges += [(i, n + i) for i in range(1, n + 1)]
    if k >= 3:
        edges += [(n + i, 2 * n + i) for i in range(1, n + 1)]
        nxt = 3 * n + 1
        for i in range(1, n + 1):
            for _ in range(k - 3):
                edges.append((n + i, nxt))
                nxt += 1
    return Graph(n * k, edges)


def _rooted_tree_from_pattern(child_counts):
    """Build a level-order numbered rooted tree; child_counts[i] children for
    node i+1, children ids assigned consecutively in processing order."""
    edges = []
    nxt = 2
    for v, c in enumerate(child_counts, start=1):
        if v > 1 and v >= nxt:
            raise InvalidSpec("shape pattern declares unreachable node %d" % v)
        for _ in range(c):
            if nxt > len(child_counts):
                raise InvalidSpec("shape pattern creates more nodes than bits")
            edges.append((v, nxt))
            nxt += 1
    if nxt != len(child_counts) + 1:
        raise InvalidSpec(
            "shape pattern inconsistent: %d nodes declared, %d reachable"
            % (len(child_counts), nxt - 1)
        )
    return Graph(len(child_counts), edges)


def full_binary_graph(shape: Sequence[int]) -> Graph:
    """Full binary tree from level-order internal/leaf bits (1 = internal)."""
    bits = list(shape)
    if not bits or any(b not in (0, 1) for b in bits):
        raise InvalidSpec("shape must be a nonempty 0/1 sequence")
    return _rooted_tree_from_pattern([2 if b else 0 for b in bits])


def full_kary_graph(k: int, shape: Sequence[int]) -> Graph:
    """Full k-ary tree (every node has 0 or k children) from level-order bits."""
    if k < 2:
        raise InvalidSpec("k-ary tree requires k >= 2, got k=%d" % k)
    bits = list(shape)
    if not bits or any(b not in (0, 1) for b in bits):
        raise InvalidSpec("shape must be a nonempty 0/1 sequence")
    return _rooted_tree_from_pattern([k if b else 0 for b in bits])


def cayley_graph(k: int, shape: Sequence[int]) -> Graph:
    """k-Cayley tree (every non-leaf has degree exactly k) from level-order
    bits; the internal root gets k children, other internals k-1."""
    if k < 3:
        raise InvalidSpec("Cayley tree requires k >= 3, got k=%d" % k)
    bits = list(shape)
    if not bits or any(b not in (0, 1) for b in bits):
        raise InvalidSpec("shape must be a nonempty 0/1 sequence")
    counts = []
    for i, b in enumerate(bits):
        if not b:
            counts.append(0)
        else:
            counts.append(k if i == 0 else k - 1)
    return _rooted_tree_from_pattern(counts)


def complete_binary_graph(n_nodes: int) -> Graph:
    """Complete binary tree on ids 1..n with children 2v and 2v+1."""
    if n_nodes < 1:
        raise InvalidSpec("complete binary tree requires >= 1 node")
    edges = []
    for v in range(1, n_nodes + 1):
        for c in (2 * v, 2 * v + 1):
            if c <= n_nodes:
                edges.append((v, c))
    return Graph(n_nodes, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniformly random labeled tree via a random Pruefer sequence."""
    if n < 1:
        raise UsageError("random_tree requires n >= 1, got %d" % n)
    if n == 1:
        return Graph(1, [])
    if n == 2:
        return Graph(2, [(1, 2)])
    rng = random.Random(seed)
    seq = [rng.randint(1, n) for _ in range(n - 2)]
    return tree_from_pruefer(n, seq)


def tree_from_pruefer(n: int, seq: Sequence[int]) -> Graph:
    """Decode a Pruefer sequence of length n-2 into a labeled tree."""
    if len(seq) != n - 2:
        raise UsageError("Pruefer sequence must have length n-2")
    degree = [1] * (n + 1)
    for x in seq:
        degree[x] += 1
    edges = []
    import heapq

    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x) if leaf < x else (x, leaf))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v) if u < v else (v, u))
    return Graph(n, edges)


_GENERATORS = {
    "path": lambda args: path_graph(*_ints(args, 1)),
    "cycle": lambda args: cycle_graph(*_ints(args, 1)),
    "gear": lambda args: gear_graph(*_ints(args, 1)),
    "snake": lambda args: snake_graph(*_ints(args, 2)),
    "stargon": lambda args: star_gon_graph(*_ints(args, 2)),
    "book": lambda args: book_graph(*_ints(args, 2)),
    "book5": lambda args: book_graph(5, *_ints(args, 1)),
    "mobius": lambda args: mobius_graph(*_ints(args, 1)),
    "caterpillar": lambda args: caterpillar_graph(_ints(args, None)),
    "spider": lambda args: spider_graph(_ints(args, None)),
    "banana": lambda args: banana_graph(*_ints(args, 2)),
    "firecracker": lambda args: firecracker_graph(*_ints(args, 2)),
    "fullbinary": lambda args: full_binary_graph(_bits(args, 0)),
    "kary": lambda args: full_kary_graph(_int(args[0]), _bits(args, 1)),
    "cayley": lambda args: cayley_graph(_int(args[0]), _bits(args, 1)),
    "completebinary": lambda args: complete_binary_graph(*_ints(args, 1)),
    "randomtree": lambda args: random_tree(*_ints(args, 2)),
}


def _int(tok):
    try:
        return int(tok)
    except (TypeError, ValueError):
        raise InvalidSpec("expected an integer, got %r" % (tok,))


def _ints(args, expect):
    vals = [_int(a) for a in args]
    if expect is not None and len(vals) != expect:
        raise InvalidSpec("expected %d parameters, got %d" % (expect, len(vals)))
    return vals


def _bits(args, pos):
    if len(args) != pos + 1:
        raise InvalidSpec("expected a shape bit-string parameter")
    tok = str(args[pos])
    if not tok or any(c not in "01" for c in tok):
        raise InvalidSpec("shape must be a string of 0/1 bits, got %r" % tok)
    return [int(c) for c in tok]


def generate(spec: FamilySpec) -> Graph:
    """Build the canonical graph for a family spec; deterministic."""
    if spec.kind not in _GENERATORS:
        raise InvalidSpec("unknown family %r" % spec.kind)
    return _GENERATORS[spec.kind](spec.args)


def parse_family(text: str) -> FamilySpec:
    """Parse the CLI family grammar ``name:arg,arg,...`` (e.g. ``gear:7``,
    ``snake:9,3``, ``spider:2,2,4,4,4,6``, ``fullbinary:1100100``)."""
    name, sep, rest = text.partition(":")
    name = name.strip().lower()
    if name not in _GENERATORS:
        raise InvalidSpec("unknown family %r" % name)
    args = tuple(a.strip() for a in rest.split(",") if a.strip()) if sep else ()
    return FamilySpec(name, args)
