"""Threshold graphs: construction, recognition and structural queries.

Graphs are stored as tuples of adjacency bitmasks (Python ints), so any order
works and neighbourhood tests are a single ``&``.

A threshold graph is fully described by its degree partition ``D_0, ..., D_m``
(vertices grouped by degree, ``D_0`` the isolated ones, distinct positive
degrees ``delta_1 < ... < delta_m``): a vertex of ``D_i`` and a vertex of
``D_j`` are adjacent exactly when ``i + j > m``.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from .errors import InvariantViolation, NotThresholdError, UsageError


# ---------------------------------------------------------------------------
# plain simple graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Graph:
    """Labeled simple graph on vertices ``0..n-1``.

    ``rows[v]`` has bit ``u`` set iff ``u ~ v``. Equality is labeled equality;
    use :func:`same_graph` for the unlabeled comparison of threshold graphs.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.rows) != self.n:
            raise UsageError(f"need {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full or (row >> v) & 1:
                raise UsageError(f"row {v} is out of range or has a loop")
            for u in _bits(row):
                if not (self.rows[u] >> v) & 1:
                    raise UsageError(f"adjacency is not symmetric at ({v}, {u})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise UsageError(f"bad edge ({u}, {v}) for order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u] >> u << u) if u < v]

    @property
    def size(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    @property
    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees in non-increasing order."""
        return tuple(sorted(self.degrees(), reverse=True))

    def has_edge(self, u: int, v: int) -> bool:
        self._check_pair(u, v)
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise UsageError(f"({u}, {v}) is not an edge")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def add_edge(self, u: int, v: int) -> Graph:
        self._check_pair(u, v)
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def remove_vertex(self, v: int) -> Graph:
        """Delete ``v``; vertices above ``v`` shift down by one."""
        if not 0 <= v < self.n:
            raise UsageError(f"vertex {v} out of range")
        low = (1 << v) - 1
        rows = []
        for u, row in enumerate(self.rows):
            if u != v:
                rows.append((row & low) | ((row >> (v + 1)) << v))
        return Graph(self.n - 1, tuple(rows))

    def relabel(self, order: Sequence[int]) -> Graph:
        """Graph where new vertex ``i`` is old vertex ``order[i]``."""
        if sorted(order) != list(range(self.n)):
            raise UsageError("relabeling must be a permutation")
        new_id = {old: new for new, old in enumerate(order)}
        rows = []
        for old in order:
            row = 0
            for u in _bits(self.rows[old]):
                row |= 1 << new_id[u]
            rows.append(row)
        return Graph(self.n, tuple(rows))

    def plain(self) -> Graph:
        return Graph(self.n, self.rows)

    def _check_pair(self, u: int, v: int) -> None:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise UsageError(f"vertex pair ({u}, {v}) out of range for order {self.n}")
        if u == v:
            raise UsageError(f"vertex pair ({u}, {v}) is a loop")


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


# ---------------------------------------------------------------------------
# degree partition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DegreePartition:
    """Vertices grouped by degree.

    ``sets[0]`` is ``D_0`` (isolated vertices, possibly empty) and ``sets[i]``
    for ``i >= 1`` holds the vertices of degree ``deltas[i - 1]``.
    """

    deltas: tuple[int, ...]
    sets: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.deltas)

    @property
    def n(self) -> int:
        return sum(len(s) for s in self.sets)

    @property
    def sizes(self) -> tuple[int, ...]:
        """``(|D_0|, |D_1|, ..., |D_m|)``."""
        return tuple(len(s) for s in self.sets)

    def delta(self, i: int) -> int:
        return 0 if i == 0 else self.deltas[i - 1]

    @cached_property
    def _index(self) -> dict[int, int]:
        return {v: i for i, s in enumerate(self.sets) for v in s}

    def index_of(self, v: int) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UsageError(f"vertex {v} not in partition") from None

    def mask(self, i: int) -> int:
        out = 0
        for v in self.sets[i]:
            out |= 1 << v
        return out


def degree_partition(g: Graph) -> DegreePartition:
    by_degree: dict[int, list[int]] = {}
    for v, d in enumerate(g.degrees()):
        by_degree.setdefault(d, []).append(v)
    deltas = tuple(sorted(d for d in by_degree if d > 0))
    sets = (tuple(by_degree.get(0, ())),) + tuple(tuple(by_degree[d]) for d in deltas)
    return DegreePartition(deltas, sets)


def _expected_rows(p: DegreePartition, n: int) -> list[int]:
    # suffix[i] = union of D_i..D_m
    m = p.m
    suffix = [0] * (m + 2)
    for i in range(m, 0, -1):
        suffix[i] = suffix[i + 1] | p.mask(i)
    rows = [0] * n
    for i, members in enumerate(p.sets):
        if i == 0:
            continue
        nbhd = suffix[m + 1 - i]
        for v in members:
            rows[v] = nbhd & ~(1 << v)
    return rows


def recognize(g: Graph) -> DegreePartition | None:
    """Return the degree partition if ``g`` is a threshold graph, else ``None``.

    Every vertex of ``D_i`` must be adjacent to exactly the vertices of
    ``D_j`` with ``i + j > m`` (isolated vertices to nothing).
    """
    p = degree_partition(g)
    if list(g.rows) != _expected_rows(p, g.n):
        return None
    return p


def check_degree_recurrence(p: DegreePartition) -> bool:
    """Check ``delta_{k+1} = delta_k + |D_{m-k}|`` (minus one at ``k = m // 2``)."""
    m = p.m
    sizes = p.sizes
    for k in range(m):
        expected = p.delta(k) + sizes[m - k] - (1 if k == m // 2 else 0)
        if p.delta(k + 1) != expected:
            return False
    return True


# ---------------------------------------------------------------------------
# threshold graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ThresholdGraph(Graph):
    """A :class:`Graph` certified threshold at construction.

    Raises :class:`NotThresholdError` if the adjacency fails the
    partition-index rule.
    """

    partition: DegreePartition = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        super().__post_init__()
        p = recognize(self)
        if p is None:
            raise NotThresholdError("graph is not a threshold graph")
        object.__setattr__(self, "partition", p)

    @classmethod
    def from_graph(cls, g: Graph) -> ThresholdGraph:
        return cls(g.n, g.rows)

    @property
    def m(self) -> int:
        return self.partition.m

    def canonical(self) -> ThresholdGraph:
        """Relabel so partition index is non-decreasing with vertex id.

        Ties inside a degree set keep their current relative order.
        """
        order = [v for members in self.partition.sets for v in sorted(members)]
        return as_threshold(self.relabel(order))


def as_threshold(g: Graph) -> ThresholdGraph:
    if isinstance(g, ThresholdGraph):
        return g
    return ThresholdGraph.from_graph(g)


def same_graph(a: Graph, b: Graph) -> bool:
    """Unlabeled equality of two threshold graphs (equal degree multisets)."""
    return a.degree_sequence == b.degree_sequence


def adjacency(g: ThresholdGraph, u: int, v: int) -> bool:
    """Adjacency read off the partition: ``u ~ v`` iff ``index(u) + index(v) > m``."""
    g._check_pair(u, v)
    p = g.partition
    return p.index_of(u) + p.index_of(v) > p.m


class CreationSymbol(enum.Enum):
    ISOLATED = "I"
    DOMINATING = "D"


def _symbols(seq: Sequence[CreationSymbol | str] | str) -> list[CreationSymbol]:
    try:
        return [s if isinstance(s, CreationSymbol) else CreationSymbol(s) for s in seq]
    except ValueError as exc:
        raise UsageError(f"bad creation symbol: {exc}") from None


def from_creation_sequence(seq: Sequence[CreationSymbol | str] | str) -> ThresholdGraph:
    """Build the graph where vertex ``i + 1`` joins as symbol ``i`` says.

    A dominating vertex is joined to all earlier vertices, an isolated one to
    none. Vertex 0 is implicit, so the order is ``len(seq) + 1``.
    """
    symbols = _symbols(seq)
    n = len(symbols) + 1
    rows = [0] * n
    for i, s in enumerate(symbols, start=1):
        if s is CreationSymbol.DOMINATING:
            rows[i] = (1 << i) - 1
            for u in range(i):
                rows[u] |= 1 << i
    return ThresholdGraph(n, tuple(rows))


def creation_rows(n: int, code: int) -> tuple[int, ...]:
    """Adjacency rows for the creation sequence whose bit ``i`` is vertex ``i + 1``.

    Bit set means dominating. Used by the enumerator to skip symbol objects.
    """
    rows = [0] * n
    for i in range(1, n):
        if (code >> (i - 1)) & 1:
            rows[i] = (1 << i) - 1
            bit = 1 << i
            for u in range(i):
                rows[u] |= bit
    return tuple(rows)


def from_degree_sequence(ds: Iterable[int]) -> ThresholdGraph | None:
    """The unique threshold realization of ``ds``, or ``None`` if there is none.

    The candidate partition groups equal degrees; adjacency is wired by the
    index rule and the realized degrees are compared with ``ds``. The result
    is canonically labeled (``D_0`` first, then ``D_1``, ...).
    """
    ds = sorted(ds)
    if any(d < 0 for d in ds):
        raise UsageError("degrees must be nonnegative")
    n = len(ds)
    deltas = tuple(sorted({d for d in ds if d > 0}))
    sets: list[tuple[int, ...]] = []
    v = 0
    for target in (0,) + deltas:
        count = ds.count(target)
        sets.append(tuple(range(v, v + count)))
        v += count
    p = DegreePartition(deltas, tuple(sets))
    rows = _expected_rows(p, n)
    if sorted(r.bit_count() for r in rows) != ds:
        return None
    return ThresholdGraph(n, tuple(rows))


# ---------------------------------------------------------------------------
# size and weights
# ---------------------------------------------------------------------------


def graph_size(g: ThresholdGraph) -> int:
    """Number of edges, computed from degrees and from the split structure.

    The upper half of the partition is a clique and the lower half an
    independent set whose ``D_i`` sees ``D_{m+1-i} .. D_m``; both counts must
    agree.
    """
    from_degrees = sum(g.degrees()) // 2
    p = g.partition
    m = p.m
    sizes = p.sizes
    clique = sum(sizes[m // 2 + 1 :])
    from_split = clique * (clique - 1) // 2
    for i in range(1, m // 2 + 1):
        from_split += sizes[i] * sum(sizes[m + 1 - i :])
    if from_degrees != from_split:
        raise InvariantViolation(f"size mismatch: {from_degrees} vs {from_split}")
    return from_degrees


@dataclass(frozen=True)
class WeightRealization:
    """Vertex weights and threshold with ``u ~ v`` iff ``w[u] + w[v] > t``."""

    weights: tuple[int, ...]
    threshold: int

    def adjacent(self, u: int, v: int) -> bool:
        return self.weights[u] + self.weights[v] > self.threshold


def realize_weights(g: ThresholdGraph) -> WeightRealization:
    p = g.partition
    w = WeightRealization(tuple(p.index_of(v) for v in range(g.n)), p.m)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if w.adjacent(u, v) != bool((g.rows[u] >> v) & 1):
                raise InvariantViolation(f"weights disagree with adjacency at ({u}, {v})")
    return w
