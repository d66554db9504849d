"""Plain-text graph and ordering formats.

Graph files: optional comment lines starting with ``c``, then a header
``p <n> <m>``, then exactly m edge lines ``e <u> <v>``. Parsing is strict —
duplicate edges, self-loops, bad vertex ids and count mismatches are all
rejected with the offending line number, so m in the header is trustworthy.

Ordering files: a single line of n whitespace-separated vertex ids forming a
permutation of 1..n.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidOrdering, ParseError
from .graph import Graph, VertexOrdering, _check_size
from ._bitops import row_width


def _as_text(data: str | bytes) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"input is not valid UTF-8: {e}") from e
    return data


def parse_graph_text(data: str | bytes, *, cap: int | None = None) -> Graph:
    """Parse the edge-list text format into a Graph."""
    text = _as_text(data)
    n = m = -1
    header_line = 0
    edges_seen = 0
    u_buf: list[int] = []
    v_buf: list[int] = []
    seen: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if n < 0:
            if fields[0] != "p" or len(fields) != 3:
                raise ParseError("expected header 'p <n> <m>'", lineno)
            try:
                n, m = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError("header counts must be integers", lineno) from None
            if n < 0 or m < 0:
                raise ParseError("header counts must be non-negative", lineno)
            _check_size(n, cap)
            header_line = lineno
            continue
        if fields[0] != "e" or len(fields) != 3:
            raise ParseError("expected edge line 'e <u> <v>'", lineno)
        try:
            u, v = int(fields[1]), int(fields[2])
        except ValueError:
            raise ParseError("edge endpoints must be integers", lineno) from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"edge ({u}, {v}) outside vertex range 1..{n}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        lo, hi = (u, v) if u < v else (v, u)
        key = lo * n + hi
        if key in seen:
            raise ParseError(f"duplicate edge ({lo}, {hi})", lineno)
        seen.add(key)
        edges_seen += 1
        if edges_seen > m:
            raise ParseError(f"more than the declared {m} edges", lineno)
        u_buf.append(u)
        v_buf.append(v)
    if n < 0:
        raise ParseError("missing header 'p <n> <m>'")
    if edges_seen != m:
        raise ParseError(
            f"header declares {m} edges but {edges_seen} found", header_line
        )
    if not u_buf:
        return Graph(n, np.zeros((n, row_width(n)), dtype=np.uint8), 0)
    return Graph._from_numpy_edges(
        n, np.asarray(u_buf, dtype=np.int64), np.asarray(v_buf, dtype=np.int64)
    )


def write_graph_text(g: Graph) -> str:
    """Serialize a Graph; edges come out u < v, ascending."""
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_ordering_text(data: str | bytes, n: int) -> VertexOrdering:
    """Parse a one-line permutation of 1..n."""
    text = _as_text(data)
    fields = text.split()
    try:
        values = [int(f) for f in fields]
    except ValueError as e:
        raise ParseError(f"ordering entries must be integers: {e}") from None
    if len(values) != n:
        raise InvalidOrdering(f"expected {n} entries, got {len(values)}")
    return VertexOrdering(values)


def write_ordering_text(ordering: VertexOrdering) -> str:
    return " ".join(str(v) for v in ordering.order) + "\n"
