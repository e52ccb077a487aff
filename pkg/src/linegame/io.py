"""Reading and writing graphs: a plain edge-list text format and graph6.

Edge-list (``.el``): first line ``n m``, then ``m`` lines ``u v`` with
0-based vertex ids. Everything after ``#`` on a line is a comment.

graph6 (``.g6``): the standard printable encoding used by enumeration
corpora, one graph per line, optionally preceded by ``>>graph6<<``.
"""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, GraphError, build_graph


class ParseError(GraphError):
    pass


# --- edge list ------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: expected two integers, got {line!r}") from None
    if not rows:
        raise ParseError("missing 'n m' header")
    (n, m), edges = rows[0], rows[1:]
    if n < 0 or m < 0:
        raise ParseError("negative count in header")
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{a} {b}" for a, b in g.edges]
    return "\n".join(lines) + "\n"


# --- graph6 ---------------------------------------------------------------------


def _encode_n(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n < 258048:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]


def _decode_n(data: list[int]) -> tuple[int, int]:
    if not data:
        raise ParseError("empty graph6 string")
    if data[0] != 63:
        return data[0], 1
    if len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise ParseError("truncated graph6 size")
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        return n, 8
    if len(data) < 4:
        raise ParseError("truncated graph6 size")
    return (data[1] << 12) | (data[2] << 6) | data[3], 4


def from_graph6(line: str) -> Graph:
    line = line.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    data = [ord(ch) - 63 for ch in line]
    if any(not 0 <= x <= 63 for x in data):
        raise ParseError(f"character outside the graph6 range in {line!r}")
    n, pos = _decode_n(data)
    bits_needed = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (bits_needed + 5) // 6:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {(bits_needed + 5) // 6}")
    bits = []
    for x in body:
        bits.extend((x >> s) & 1 for s in range(5, -1, -1))
    if any(bits[bits_needed:]):
        raise ParseError("nonzero padding bits")
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return build_graph(n, edges)


def to_graph6(g: Graph) -> str:
    n = g.n
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = [int("".join(map(str, bits[i:i + 6])), 2) for i in range(0, len(bits), 6)]
    return "".join(chr(x + 63) for x in _encode_n(n) + body)


# --- files ----------------------------------------------------------------------


def read_graphs(path: str | Path) -> list[Graph]:
    """All graphs in a file; the format follows the extension."""
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".g6":
        return [from_graph6(line) for line in text.splitlines() if line.strip()]
    if path.suffix == ".el":
        return [parse_edge_list(text)]
    raise ParseError(f"unknown graph file extension {path.suffix!r} (use .el or .g6)")


def read_graph(path: str | Path) -> Graph:
    graphs = read_graphs(path)
    if len(graphs) != 1:
        raise ParseError(f"{path}: expected one graph, found {len(graphs)}")
    return graphs[0]


def write_graph(path: str | Path, g: Graph) -> None:
    path = Path(path)
    if path.suffix == ".g6":
        path.write_text(to_graph6(g) + "\n")
    elif path.suffix == ".el":
        path.write_text(format_edge_list(g))
    else:
        raise ParseError(f"unknown graph file extension {path.suffix!r} (use .el or .g6)")
