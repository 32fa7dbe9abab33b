"""Edge-list / label-file parsing and writing, plus DOT export.

Edge-list format: line 1 is ``n m``, then m lines ``u v`` with
1 <= u < v <= n.  ``#`` starts a comment line; blank lines are ignored.
Label format: n lines, line v holds the label of vertex v.
"""

from __future__ import annotations

from typing import List, Optional

from .errors import ParseError
from .graph import Graph, Labeling, VerificationReport


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format; raises ParseError with a line number."""
    header = None
    edges = []
    seen = set()
    n = m = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise ParseError("header must be 'n m'", lineno)
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError("header must hold two integers", lineno)
            if n < 1 or m < 0:
                raise ParseError("need n >= 1 and m >= 0", lineno)
            header = lineno
            continue
        if len(parts) != 2:
            raise ParseError("edge line must be 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("edge endpoints must be integers", lineno)
        if not (1 <= u < v <= n):
            raise ParseError("edge (%d,%d) violates 1 <= u < v <= %d" % (u, v, n), lineno)
        if (u, v) in seen:
            raise ParseError("duplicate edge (%d,%d)" % (u, v), lineno)
        seen.add((u, v))
        edges.append((u, v))
    if header is None:
        raise ParseError("missing header line")
    if len(edges) != m:
        raise ParseError("header declares %d edges but %d given" % (m, len(edges)))
    return Graph(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = ["%d %d" % (g.n, len(g.edges))]
    lines += ["%d %d" % e for e in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def parse_labels(text: str) -> List[int]:
    labels = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            labels.append(int(line))
        except ValueError:
            raise ParseError("label must be an integer, got %r" % line, lineno)
    if not labels:
        raise ParseError("no labels found")
    return labels


def write_labels(labels: Labeling) -> str:
    return "\n".join(str(x) for x in labels) + "\n"


def to_dot(
    g: Graph,
    labels: Optional[Labeling] = None,
    report: Optional[VerificationReport] = None,
) -> str:
    """DOT export; violation vertices from a failed report are colored red."""
    bad = {v.vertex for v in report.violations} if report else set()
    lines = ["graph G {"]
    for v in range(1, g.n + 1):
        attrs = []
        if labels is not None:
            attrs.append('label="%d"' % labels[v - 1])
        if v in bad:
            attrs.append('color="red"')
            attrs.append('style="filled"')
            attrs.append('fillcolor="lightpink"')
        lines.append(
            "  v%d%s;" % (v, " [" + ", ".join(attrs) + "]" if attrs else "")
        )
    for u, v in sorted(g.edges):
        lines.append("  v%d -- v%d;" % (u, v))
    lines.append("}")
    return "\n".join(lines) + "\n"
