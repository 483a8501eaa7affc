"""Shared oracles and fixtures.

The oracles here deliberately avoid the package's algorithms: cycles are
counted by walking vertex permutations, thresholdness is tested through the
forbidden induced subgraphs 2K2, P4 and C4, and isomorphism by minimizing an
edge code over all relabelings.
"""

import itertools

import pytest
from hypothesis import strategies as st

from threshold_hamilton.core import Graph

ACCEPTANCE_LINES: list[str] = []


def adj_matrix(g: Graph) -> list[list[bool]]:
    return [[bool((g.rows[u] >> v) & 1) for v in range(g.n)] for u in range(g.n)]


def permutation_cycles(g: Graph) -> set[tuple[int, ...]]:
    """All Hamilton cycles, each once, by walking permutations of 1..n-1."""
    n = g.n
    if n < 3:
        return set()
    a = adj_matrix(g)
    found = set()
    for perm in itertools.permutations(range(1, n)):
        if perm[0] > perm[-1]:
            continue
        cyc = (0,) + perm
        if all(a[cyc[i]][cyc[(i + 1) % n]] for i in range(n)):
            found.add(cyc)
    return found


def permutation_count(g: Graph) -> int:
    return len(permutation_cycles(g))


def has_forbidden_induced(g: Graph) -> bool:
    """True iff ``g`` has an induced 2K2, P4 or C4."""
    a = adj_matrix(g)
    for quad in itertools.combinations(range(g.n), 4):
        edges = [(u, v) for u, v in itertools.combinations(quad, 2) if a[u][v]]
        degs = sorted(sum(a[u][v] for v in quad if v != u) for u in quad)
        if len(edges) == 2 and degs == [1, 1, 1, 1]:
            return True  # 2K2
        if len(edges) == 3 and degs == [1, 1, 2, 2]:
            return True  # P4
        if len(edges) == 4 and degs == [2, 2, 2, 2]:
            return True  # C4
    return False


def canonical_code(g: Graph) -> tuple:
    """Lexicographically smallest edge list over all relabelings."""
    best = None
    edges = g.edges()
    for perm in itertools.permutations(range(g.n)):
        code = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or code < best:
            best = code
    return best


def all_labeled_graphs(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if (mask >> i) & 1])


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, c in zip(pairs, chosen) if c])


creation_sequences = st.lists(st.sampled_from("ID"), max_size=11).map("".join)


@pytest.fixture
def record():
    """Append one PASS/FAIL line per acceptance criterion to the terminal summary."""

    def _record(label: str, ok: bool, detail: str = "") -> None:
        line = f"{'PASS' if ok else 'FAIL'}  {label}"
        if detail:
            line += f"  [{detail}]"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
