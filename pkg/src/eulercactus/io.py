"""Text edge-list format and DOT export.

Format::

    digraph            # or: multigraph
    <n> <m>
    <tail> <head>      # m edge lines; "<u> <v>" for a multigraph

Blank lines and lines starting with ``#`` are ignored.  A line ``u u`` is a
loop and is only accepted for a digraph parsed with ``loops=True``.
"""

from __future__ import annotations

from pathlib import Path

from .errors import InvalidArgument, ParseError
from .graph import Digraph, Multigraph

__all__ = ["parse_graph", "format_graph", "read_graph", "write_graph", "to_dot"]


def _content_lines(text):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line


def _ints(line, no, count):
    parts = line.split()
    if len(parts) != count:
        raise ParseError(f"expected {count} integers, got {line!r}", no)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"expected integers, got {line!r}", no) from None


def parse_graph(text: str, loops: bool = False):
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty input", 1)
    no, kind = lines[0]
    if kind not in ("digraph", "multigraph"):
        raise ParseError(f"first line must be 'digraph' or 'multigraph', got {kind!r}", no)
    if len(lines) < 2:
        raise ParseError("missing '<n> <m>' line", no + 1)
    no, header = lines[1]
    n, m = _ints(header, no, 2)
    if n < 1 or m < 0:
        raise ParseError(f"need n >= 1 and m >= 0, got n={n} m={m}", no)
    body = lines[2:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else no + 1)
        raise ParseError(f"expected {m} edge lines, found {len(body)}", where)
    edges = []
    for no, line in body:
        t, h = _ints(line, no, 2)
        if not (0 <= t < n and 0 <= h < n):
            raise ParseError(f"vertex out of range 0..{n - 1}: {line!r}", no)
        if t == h:
            if kind == "multigraph":
                raise ParseError("multigraphs have no loops", no)
            if not loops:
                raise ParseError("loop edge needs --loops", no)
        edges.append((t, h))
    try:
        if kind == "digraph":
            return Digraph(n, tuple(edges), allow_loops=loops)
        return Multigraph(n, tuple(edges))
    except InvalidArgument as exc:
        raise ParseError(str(exc), lines[1][0]) from exc


def format_graph(g) -> str:
    kind = "digraph" if g.directed else "multigraph"
    rows = [kind, f"{g.n} {g.m}"] + [f"{a} {b}" for a, b in g.edges]
    return "\n".join(rows) + "\n"


def read_graph(path, loops: bool = False):
    return parse_graph(Path(path).read_text(), loops=loops)


def write_graph(g, path) -> None:
    Path(path).write_text(format_graph(g))


def to_dot(g, name: str = "G") -> str:
    """Graphviz source; edges are labelled with their ids."""
    arrow = "->" if g.directed else "--"
    kind = "digraph" if g.directed else "graph"
    rows = [f"{kind} {name} {{"]
    rows += [f"  {v};" for v in range(g.n)]
    rows += [f'  {a} {arrow} {b} [label="e{e}"];' for e, (a, b) in enumerate(g.edges)]
    rows.append("}")
    return "\n".join(rows) + "\n"
