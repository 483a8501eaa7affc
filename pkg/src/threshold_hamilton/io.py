"""Edge-list, creation-sequence and DOT formats.

Edge list: first non-comment line ``n m``, then ``m`` lines ``u v`` with
``0 <= u < v < n``. Lines starting with ``#`` are ignored.
"""

from __future__ import annotations

from .core import CreationSymbol, Graph, recognize
from .errors import FormatError


def parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise FormatError("empty edge list")
    try:
        header = [int(t) for t in lines[0].split()]
    except ValueError:
        raise FormatError(f"bad header line: {lines[0]!r}") from None
    if len(header) != 2 or header[0] < 0 or header[1] < 0:
        raise FormatError(f"header must be 'n m', got {lines[0]!r}")
    n, m = header
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header promises {m} edges, found {len(body)}")
    edges = set()
    for ln in body:
        parts = ln.split()
        try:
            u, v = (int(t) for t in parts)
        except ValueError:
            raise FormatError(f"bad edge line: {ln!r}") from None
        if not 0 <= u < v < n:
            raise FormatError(f"edge {ln!r} must satisfy 0 <= u < v < {n}")
        if (u, v) in edges:
            raise FormatError(f"duplicate edge {ln!r}")
        edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def read_edge_list(path: str) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph, comments: list[str] | None = None) -> str:
    out = [f"# {c}" for c in comments or ()]
    edges = g.edges()
    out.append(f"{g.n} {len(edges)}")
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


def write_edge_list(g: Graph, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(format_edge_list(g))


def parse_creation_sequence(text: str) -> list[CreationSymbol]:
    """``"IDD"`` -> symbols for vertices 1, 2, 3 (vertex 0 is implicit)."""
    text = text.strip()
    bad = set(text) - {"I", "D"}
    if bad:
        raise FormatError(f"creation sequence may only contain I and D, got {sorted(bad)}")
    return [CreationSymbol(c) for c in text]


def format_creation_sequence(seq) -> str:
    return "".join(s.value if isinstance(s, CreationSymbol) else str(s) for s in seq)


def to_dot(g: Graph, name: str = "G") -> str:
    """Undirected DOT; threshold graphs get ``D_i`` labels and rank by partition index."""
    p = recognize(g)
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        label = f"{v}\\ndeg {g.degree(v)}"
        if p is not None:
            label += f"\\nD{p.index_of(v)}"
        lines.append(f'  {v} [label="{label}"];')
    if p is not None:
        for members in p.sets:
            if members:
                lines.append("  { rank=same; " + " ".join(str(v) for v in members) + "; }")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
