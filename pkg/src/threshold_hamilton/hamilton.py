"""Hamiltonicity of threshold graphs and exact Hamilton cycle counting.

Cycles are undirected and counted once each: rotations and reflections are
identified, so the triangle has exactly one Hamilton cycle.
"""

from __future__ import annotations

from collections.abc import Iterator
from typing import NamedTuple

from ._dp import hamilton_path_counts
from .core import DegreePartition, Graph
from .errors import CapacityError, InvariantViolation, UsageError

DP_CAP = 28
ORACLE_CAP = 12
CYCLE_ENUM_CAP = 14


class HamiltonVerdict(NamedTuple):
    """Outcome of the partition test.

    ``failed_k`` names the first violated prefix inequality; ``reason`` is
    ``None`` when the graph is hamiltonian.
    """

    hamiltonian: bool
    reason: str | None = None
    failed_k: int | None = None


def hamiltonicity_verdict(p: DegreePartition) -> HamiltonVerdict:
    """Decide hamiltonicity of a threshold graph from its degree partition.

    Requires order at least 3, no isolated vertices, and for every
    ``k <= (m - 1) // 2`` strictly fewer vertices in the ``k`` lowest degree
    sets than in the ``k`` highest; for even ``m`` the two halves must also
    satisfy ``low <= high``.
    """
    if p.n < 3:
        return HamiltonVerdict(False, "order below 3")
    if p.sets[0]:
        return HamiltonVerdict(False, "isolated vertices present")
    m = p.m
    sizes = p.sizes
    low = high = 0
    for k in range(1, (m - 1) // 2 + 1):
        low += sizes[k]
        high += sizes[m + 1 - k]
        if not low < high:
            return HamiltonVerdict(False, f"prefix inequality fails at k={k}: {low} >= {high}", k)
    if m % 2 == 0 and m > 0:
        half = m // 2
        low = sum(sizes[1 : half + 1])
        high = sum(sizes[half + 1 :])
        if not low <= high:
            return HamiltonVerdict(False, f"half inequality fails at k={half}: {low} > {high}", half)
    return HamiltonVerdict(True)


def is_hamiltonian(p: DegreePartition) -> bool:
    return hamiltonicity_verdict(p).hamiltonian


def _check_dp_cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise CapacityError("Hamilton cycle counting", g.n, cap)


def count_hamilton_cycles(g: Graph, *, cap: int = DP_CAP) -> int:
    """Number of Hamilton cycles of ``g``.

    Counts directed cycles through vertex 0 with a subset DP and halves the
    total. Orders 1 and 2 have no cycles.
    """
    _check_dp_cap(g, cap)
    if g.n < 3:
        return 0
    ends = hamilton_path_counts(g.rows, 0)
    directed = sum(c for v, c in ends.items() if (g.rows[0] >> v) & 1)
    if directed % 2:
        raise InvariantViolation("odd directed Hamilton cycle count")
    return directed // 2


def count_hamilton_cycles_through_edge(g: Graph, e: tuple[int, int], *, cap: int = DP_CAP) -> int:
    """Number of Hamilton cycles that use edge ``e``.

    Each such cycle is a Hamilton path between the endpoints closed by ``e``.
    """
    u, v = e
    if not g.has_edge(u, v):
        raise UsageError(f"({u}, {v}) is not an edge")
    _check_dp_cap(g, cap)
    if g.n < 3:
        return 0
    return hamilton_path_counts(g.rows, u)[v]


# ---------------------------------------------------------------------------
# backtracking: search, enumeration, oracle
# ---------------------------------------------------------------------------


def canonical_cycle(cycle: list[int] | tuple[int, ...]) -> tuple[int, ...]:
    """Rotate to start at 0 and orient so the second vertex is the smaller neighbour."""
    i = cycle.index(0)
    c = list(cycle[i:]) + list(cycle[:i])
    if len(c) > 2 and c[-1] < c[1]:
        c = [c[0]] + c[:0:-1]
    return tuple(c)


def _extend(rows: tuple[int, ...], path: list[int], visited: int, full: int, close_to: int) -> Iterator[list[int]]:
    """Yield every completion of ``path`` to a Hamilton path ending next to ``close_to``."""
    last = path[-1]
    if visited == full:
        if (rows[last] >> close_to) & 1:
            yield path
        return
    # prune: the cycle must still be able to close, and every unvisited vertex
    # needs two usable neighbours
    reachable = ~visited | (1 << last) | (1 << close_to)
    if not rows[close_to] & ~visited:
        return
    free = full & ~visited
    m = free
    while m:
        low = m & -m
        w = low.bit_length() - 1
        if (rows[w] & reachable & ~(1 << w)).bit_count() < 2:
            return
        m ^= low
    cand = rows[last] & free
    while cand:
        low = cand & -cand
        w = low.bit_length() - 1
        cand ^= low
        path.append(w)
        yield from _extend(rows, path, visited | low, full, close_to)
        path.pop()


def iter_hamilton_cycles(g: Graph, *, cap: int = CYCLE_ENUM_CAP) -> Iterator[tuple[int, ...]]:
    """Yield every Hamilton cycle once, in canonical form."""
    if g.n > cap:
        raise CapacityError("Hamilton cycle enumeration", g.n, cap)
    if g.n < 3:
        return
    full = (1 << g.n) - 1
    for c in _extend(g.rows, [0], 1, full, 0):
        if c[1] < c[-1]:
            yield tuple(c)


def find_hamilton_cycle(
    g: Graph, required_edge: tuple[int, int] | None = None
) -> tuple[int, ...] | None:
    """A canonical Hamilton cycle (through ``required_edge`` if given), or ``None``."""
    if required_edge is not None:
        x, y = required_edge
        if not g.has_edge(x, y):
            raise UsageError(f"({x}, {y}) is not an edge")
    if g.n < 3:
        return None
    full = (1 << g.n) - 1
    if required_edge is None:
        start = [0]
        close_to = 0
    else:
        # walk x -> y -> ... and close back at x
        start = [x, y]
        close_to = x
    visited = 0
    for v in start:
        visited |= 1 << v
    for c in _extend(g.rows, start, visited, full, close_to):
        return canonical_cycle(c)
    return None


def cycle_exchange(g: Graph, cycle: tuple[int, ...], x: int, y: int) -> tuple[int, ...]:
    """Reroute a Hamilton cycle so it uses edge ``xy``.

    With successors ``s`` of ``x`` and ``t`` of ``y`` along the cycle, drop
    ``xs`` and ``yt`` and add ``xy`` and ``st``. Requires ``s ~ t``, which
    holds for key edges of threshold graphs; either orientation is tried.
    """
    if not g.has_edge(x, y):
        raise UsageError(f"({x}, {y}) is not an edge")
    c = list(cycle)
    n = len(c)
    for orient in (c, c[::-1]):
        i = orient.index(x)
        walk = orient[i:] + orient[:i]
        if walk[1] == y or walk[-1] == y:
            return canonical_cycle(walk)
        j = walk.index(y)
        s, t = walk[1], walk[(j + 1) % n]
        if g.has_edge(s, t):
            return canonical_cycle([x] + walk[1 : j + 1][::-1] + walk[j + 1 :])
    raise UsageError(f"no cycle exchange adds ({x}, {y})")


def is_hamilton_cycle(g: Graph, cycle: tuple[int, ...]) -> bool:
    if sorted(cycle) != list(range(g.n)) or g.n < 3:
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % g.n]) for i in range(g.n))


def brute_force_hamiltonian(g: Graph, *, cap: int = ORACLE_CAP) -> bool:
    """Plain backtracking existence test, blind to threshold structure."""
    if g.n > cap:
        raise CapacityError("brute-force hamiltonicity oracle", g.n, cap)
    n = g.n
    if n < 3:
        return False
    adj = [[bool((g.rows[u] >> v) & 1) for v in range(n)] for u in range(n)]
    used = [False] * n
    used[0] = True

    def go(last: int, depth: int) -> bool:
        if depth == n:
            return adj[last][0]
        for w in range(1, n):
            if not used[w] and adj[last][w]:
                used[w] = True
                if go(w, depth + 1):
                    return True
                used[w] = False
        return False

    return go(0, 1)
