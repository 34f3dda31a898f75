"""graph6, edge-list and DOT formats."""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, GraphError, build_graph

GRAPH6_HEADER = ">>graph6<<"
MAX_GRAPH6_ORDER = 62


def _upper_bits(G: Graph):
    # graph6 order: columns j = 1..n-1, rows i = 0..j-1
    for j in range(1, G.n):
        for i in range(j):
            yield 1 if j in G.adj[i] else 0


def emit_graph6(G: Graph) -> str:
    if G.n > MAX_GRAPH6_ORDER:
        raise GraphError("graph6 long form (n >= 63) is not supported")
    bits = list(_upper_bits(G))
    bits += [0] * (-len(bits) % 6)
    chars = [chr(63 + G.n)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = (value << 1) | b
        chars.append(chr(63 + value))
    return "".join(chars)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    if not s:
        raise GraphError("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise GraphError(f"malformed graph6 byte in {s!r}")
    n = codes[0]
    if n == 63:
        raise GraphError("graph6 long form (n >= 63) is not supported")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(codes) - 1 != need:
        raise GraphError(f"graph6 bit field has {len(codes) - 1} bytes, expected {need}")
    bits = []
    for c in codes[1:]:
        bits.extend((c >> (5 - t)) & 1 for t in range(6))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def emit_edgelist(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines += [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (0-based).

    Blank lines and ``#`` comments are ignored.
    """
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise GraphError("empty edge list")
    try:
        n, m = (int(x) for x in rows[0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphError("malformed edge list") from exc
    if len(edges) != m:
        raise GraphError(f"edge list header promises {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def emit_dot(G: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(G.n)]
    lines += [f"  {u} -- {v};" for u, v in G.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    """Read a ``.g6`` or ``.edges`` file (format chosen by extension)."""
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".g6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphError(f"{path} holds {len(lines)} graphs, expected 1")
        return parse_graph6(lines[0])
    if path.suffix in (".edges", ".txt"):
        return parse_edgelist(text)
    raise GraphError(f"cannot infer graph format from extension {path.suffix!r}")


def format_graph(G: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return emit_graph6(G) + "\n"
    if fmt == "edgelist":
        return emit_edgelist(G)
    if fmt == "dot":
        return emit_dot(G)
    raise GraphError(f"unknown output format {fmt!r}")
