"""The extremal graph ``G_n`` and exhaustive sweeps over threshold graphs.

``G_n`` has degree sequence ``n-1, n-1, n-2, ..., ceil(n/2), ceil(n/2), ..., 3, 2``.
Among hamiltonian threshold graphs of order ``n`` it is the unique one with
the fewest Hamilton cycles, ``2 ** ((n - 3) // 2)``, and the unique one with
the fewest edges.
"""

from __future__ import annotations

import math
import time
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .core import ThresholdGraph, as_threshold, creation_rows, from_degree_sequence, graph_size
from .errors import CapacityError, InvariantViolation, UsageError
from .hamilton import (
    CYCLE_ENUM_CAP,
    DP_CAP,
    count_hamilton_cycles,
    is_hamiltonian,
    iter_hamilton_cycles,
)

ENUMERATION_CAP = 20
SWEEP_CAP = 14


def _need_order(n: int) -> None:
    if n < 3:
        raise UsageError(f"order must be at least 3, got {n}")


def gn_degree_sequence(n: int) -> tuple[int, ...]:
    _need_order(n)
    ds = list(range(n - 1, 1, -1)) + [n - 1, math.ceil(n / 2)]
    return tuple(sorted(ds, reverse=True))


def build_gn(n: int) -> ThresholdGraph:
    g = from_degree_sequence(gn_degree_sequence(n))
    if g is None or not is_hamiltonian(g.partition):
        raise InvariantViolation(f"G_{n} is not a hamiltonian threshold graph")
    return g


def gn_formula_count(n: int) -> int:
    _need_order(n)
    return 2 ** ((n - 3) // 2)


def min_size_formula(n: int) -> int:
    _need_order(n)
    if n % 2:
        return (n * n + 2 * n - 3) // 4
    return (n * n + 2 * n - 4) // 4


def _check_enum_cap(n: int, cap: int) -> None:
    if n < 1:
        raise UsageError(f"order must be positive, got {n}")
    if n > cap:
        raise CapacityError("threshold graph enumeration", n, cap)


def _graphs_in_range(n: int, lo: int, hi: int) -> Iterator[ThresholdGraph]:
    for code in range(lo, hi):
        yield ThresholdGraph(n, creation_rows(n, code))


def enumerate_threshold_graphs(n: int, *, cap: int = ENUMERATION_CAP) -> Iterator[ThresholdGraph]:
    """One graph per unlabeled threshold graph of order ``n``.

    Walks all ``2 ** (n - 1)`` creation sequences; the degree multisets are
    checked to be pairwise distinct as they stream past.
    """
    _check_enum_cap(n, cap)
    seen: set[tuple[int, ...]] = set()
    for g in _graphs_in_range(n, 0, 1 << (n - 1)):
        ds = g.degree_sequence
        if ds in seen:
            raise InvariantViolation(f"two creation sequences give degrees {ds}")
        seen.add(ds)
        yield g


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------


@dataclass
class ExtremalReport:
    n: int
    theorem: str
    min_count: int | None = None
    formula_count: int | None = None
    minimizers: list[tuple[int, ...]] = field(default_factory=list)
    hamiltonian_total: int = 0
    min_size: int | None = None
    size_formula: int | None = None
    size_minimizers: list[tuple[int, ...]] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def unique(self) -> bool:
        if self.theorem == "theorem7":
            return len(self.size_minimizers) == 1
        return len(self.minimizers) == 1

    @property
    def passed(self) -> bool:
        gn = gn_degree_sequence(self.n)
        size_ok = self.min_size == self.size_formula and self.size_minimizers == [gn]
        if self.theorem == "theorem7":
            return size_ok
        return self.min_count == self.formula_count and self.minimizers == [gn]

    def to_json(self) -> dict:
        def dec(x):
            return None if x is None else str(x)

        return {
            "n": self.n,
            "theorem": self.theorem,
            "pass": self.passed,
            "min_count": dec(self.min_count),
            "formula_count": dec(self.formula_count),
            "minimizers": [list(d) for d in self.minimizers],
            "unique": self.unique,
            "hamiltonian_total": self.hamiltonian_total,
            "min_size": self.min_size,
            "size_formula": self.size_formula,
            "size_minimizers": [list(d) for d in self.size_minimizers],
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def _sweep_chunk(args: tuple[int, int, int, bool, int]) -> tuple:
    """Partial minima over creation codes ``lo..hi-1``."""
    n, lo, hi, with_counts, dp_cap = args
    ham = 0
    best_count = best_size = None
    count_min: list[tuple[int, ...]] = []
    size_min: list[tuple[int, ...]] = []
    for g in _graphs_in_range(n, lo, hi):
        if not is_hamiltonian(g.partition):
            continue
        ham += 1
        ds = g.degree_sequence
        size = graph_size(g)
        if best_size is None or size < best_size:
            best_size, size_min = size, [ds]
        elif size == best_size:
            size_min.append(ds)
        if with_counts:
            c = count_hamilton_cycles(g, cap=dp_cap)
            if best_count is None or c < best_count:
                best_count, count_min = c, [ds]
            elif c == best_count:
                count_min.append(ds)
    return ham, best_count, count_min, best_size, size_min


def _merge(parts: list[tuple]) -> tuple:
    ham = 0
    best_count = best_size = None
    count_min: list = []
    size_min: list = []
    for h, c, cm, s, sm in parts:
        ham += h
        if c is not None:
            if best_count is None or c < best_count:
                best_count, count_min = c, list(cm)
            elif c == best_count:
                count_min += cm
        if s is not None:
            if best_size is None or s < best_size:
                best_size, size_min = s, list(sm)
            elif s == best_size:
                size_min += sm
    return ham, best_count, sorted(count_min, reverse=True), best_size, sorted(size_min, reverse=True)


def _sweep(n: int, with_counts: bool, jobs: int, cap: int, dp_cap: int) -> tuple:
    total = 1 << (n - 1)
    if jobs <= 1:
        return _merge([_sweep_chunk((n, 0, total, with_counts, dp_cap))])
    step = max(1, -(-total // (jobs * 4)))
    tasks = [(n, lo, min(lo + step, total), with_counts, dp_cap) for lo in range(0, total, step)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return _merge(list(pool.map(_sweep_chunk, tasks)))


def verify_theorem6(
    n: int, *, jobs: int = 1, cap: int = SWEEP_CAP, dp_cap: int = DP_CAP
) -> ExtremalReport:
    """Minimum Hamilton cycle count over all hamiltonian threshold graphs of order ``n``.

    Also records the size minima, which come for free. Aggregation is
    independent of ``jobs``.
    """
    _need_order(n)
    _check_enum_cap(n, cap)
    start = time.perf_counter()
    ham, c, cm, s, sm = _sweep(n, True, jobs, cap, dp_cap)
    return ExtremalReport(
        n=n,
        theorem="theorem6",
        min_count=c,
        formula_count=gn_formula_count(n),
        minimizers=cm,
        hamiltonian_total=ham,
        min_size=s,
        size_formula=min_size_formula(n),
        size_minimizers=sm,
        elapsed_ms=(time.perf_counter() - start) * 1000,
    )


def verify_theorem7(n: int, *, jobs: int = 1, cap: int = ENUMERATION_CAP) -> ExtremalReport:
    """Minimum size over all hamiltonian threshold graphs of order ``n``."""
    _need_order(n)
    _check_enum_cap(n, cap)
    start = time.perf_counter()
    ham, _, _, s, sm = _sweep(n, False, jobs, cap, DP_CAP)
    return ExtremalReport(
        n=n,
        theorem="theorem7",
        hamiltonian_total=ham,
        min_size=s,
        size_formula=min_size_formula(n),
        size_minimizers=sm,
        elapsed_ms=(time.perf_counter() - start) * 1000,
    )


# ---------------------------------------------------------------------------
# the recurrence f(2k-1) = f(2k), f(2k+1) = 2 f(2k)
# ---------------------------------------------------------------------------


def recurrence_table(k_max: int, *, dp_cap: int = DP_CAP) -> dict[int, int]:
    """DP counts of ``G_n`` for ``3 <= n <= 2 * k_max + 1``."""
    if k_max < 2:
        raise UsageError("k_max must be at least 2")
    if 2 * k_max + 1 > dp_cap:
        raise CapacityError("Hamilton cycle counting", 2 * k_max + 1, dp_cap)
    return {n: count_hamilton_cycles(build_gn(n), cap=dp_cap) for n in range(3, 2 * k_max + 2)}


def verify_recurrence_claim(k_max: int, *, dp_cap: int = DP_CAP) -> bool:
    f = recurrence_table(k_max, dp_cap=dp_cap)
    return all(f[2 * k - 1] == f[2 * k] and f[2 * k + 1] == 2 * f[2 * k] for k in range(2, k_max + 1))


def middle_pair(g: ThresholdGraph) -> tuple[int, int]:
    """The two vertices of the doubled middle degree of ``G_n``, i.e. ``D_{ceil(m/2)}``."""
    p = g.partition
    pair = p.sets[(p.m + 1) // 2]
    if len(pair) != 2:
        raise InvariantViolation(f"middle degree set has {len(pair)} vertices")
    return pair[0], pair[1]


def forced_path_vertices(k: int) -> tuple[ThresholdGraph, int, int, int]:
    """``G_{2k}`` with its nonadjacent degree-``k`` pair ``x, y`` and a degree-``k+1`` vertex ``z``.

    For ``k >= 3`` the vertex ``z`` is the only one of its degree; in ``G_4``
    both degree-3 vertices qualify and the lower id is taken.
    """
    if k < 2:
        raise UsageError("k must be at least 2")
    g = build_gn(2 * k)
    p = g.partition
    half = p.m // 2
    x, y = middle_pair(g)
    zs = p.sets[half + 1]
    if p.delta(half) != k or p.delta(half + 1) != k + 1:
        raise InvariantViolation("unexpected degrees around the middle of G_2k")
    return g, x, y, min(zs)


def verify_forced_path(k: int, *, cap: int = CYCLE_ENUM_CAP) -> bool:
    """Every Hamilton cycle of ``G_{2k}`` passes ``x - z - y``.

    Also requires that removing ``xz`` or ``yz`` kills hamiltonicity by the
    partition test.
    """
    if 2 * k > cap:
        raise CapacityError("Hamilton cycle enumeration", 2 * k, cap)
    g, x, y, z = forced_path_vertices(k)
    for u in (x, y):
        smaller = as_threshold(g.remove_edge(u, z))
        if is_hamiltonian(smaller.partition):
            return False
    cycles = list(iter_hamilton_cycles(g, cap=cap))
    if not cycles:
        return False
    for c in cycles:
        i = c.index(z)
        around = {c[i - 1], c[(i + 1) % len(c)]}
        if around != {x, y}:
            return False
    return True


def vertex_to_edge_expansion(k: int) -> bool:
    """In ``G_{2k+1}`` the middle pair ``u, v`` is an edge and ``G_{2k+1} - v`` is ``G_{2k}``."""
    g = build_gn(2 * k + 1)
    u, v = middle_pair(g)
    if not g.has_edge(u, v):
        return False
    nu = g.rows[u] & ~(1 << v)
    nv = g.rows[v] & ~(1 << u)
    return nu == nv and g.remove_vertex(v).degree_sequence == gn_degree_sequence(2 * k)
