"""Exhaustive structural checks over all threshold graphs up to a given order.

Each check walks every creation sequence and collects failures instead of
stopping at the first one, so a report shows how widespread a problem is.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass, field

from .core import (
    ThresholdGraph,
    check_degree_recurrence,
    from_degree_sequence,
    graph_size,
    realize_weights,
    recognize,
)
from .errors import InvariantViolation
from .extremal import enumerate_threshold_graphs
from .hamilton import (
    brute_force_hamiltonian,
    count_hamilton_cycles,
    count_hamilton_cycles_through_edge,
    cycle_exchange,
    find_hamilton_cycle,
    is_hamilton_cycle,
    is_hamiltonian,
)
from .key_edges import delete_key_edge, key_edges


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        # keep reports readable when everything breaks
        if len(self.failures) < 20:
            self.failures.append(msg)


def all_threshold_graphs(max_order: int, min_order: int = 1) -> Iterator[ThresholdGraph]:
    for n in range(min_order, max_order + 1):
        yield from enumerate_threshold_graphs(n)


def check_structure(max_order: int) -> CheckResult:
    """Recognition, degree recurrence, middle-set bound, weights, size, rebuild."""
    res = CheckResult("structure")
    for g in all_threshold_graphs(max_order):
        res.checked += 1
        ds = g.degree_sequence
        p = recognize(g)
        if p is None:
            res.fail(f"{ds}: not recognized")
            continue
        if not check_degree_recurrence(p):
            res.fail(f"{ds}: degree recurrence fails")
        if p.m >= 1 and len(p.sets[(p.m + 1) // 2]) < 2:
            res.fail(f"{ds}: middle degree set is a singleton")
        try:
            realize_weights(g)
            graph_size(g)
        except InvariantViolation as exc:
            res.fail(f"{ds}: {exc}")
        rebuilt = from_degree_sequence(ds)
        if rebuilt is None or rebuilt.rows != g.canonical().rows:
            res.fail(f"{ds}: not rebuilt from its degree sequence")
    return res


def check_injectivity(max_order: int) -> CheckResult:
    res = CheckResult("degree-multiset injectivity")
    for n in range(1, max_order + 1):
        try:
            res.checked += sum(1 for _ in enumerate_threshold_graphs(n))
        except InvariantViolation as exc:
            res.fail(str(exc))
    return res


def check_key_edge_deletion(max_order: int) -> CheckResult:
    """Every key-edge deletion stays threshold with the predicted change in ``m``."""
    res = CheckResult("key-edge deletion")
    for g in all_threshold_graphs(max_order):
        for e in key_edges(g):
            res.checked += 1
            try:
                delete_key_edge(g, e)
            except InvariantViolation as exc:
                res.fail(f"{g.degree_sequence} {e}: {exc}")
    return res


def check_key_edges_on_cycles(max_order: int) -> CheckResult:
    """Every key edge of a hamiltonian threshold graph lies on a Hamilton cycle.

    Checked by the DP count, and constructively by rerouting a found cycle.
    """
    res = CheckResult("key edges on Hamilton cycles")
    for g in all_threshold_graphs(max_order, 3):
        if not is_hamiltonian(g.partition):
            continue
        base = find_hamilton_cycle(g)
        for e in key_edges(g):
            res.checked += 1
            if count_hamilton_cycles_through_edge(g, e.endpoints) < 1:
                res.fail(f"{g.degree_sequence} {e}: on no Hamilton cycle")
                continue
            c = cycle_exchange(g, base, e.x, e.y)
            if not is_hamilton_cycle(g, c) or not _uses(c, e.x, e.y):
                res.fail(f"{g.degree_sequence} {e}: cycle exchange failed")
    return res


def _uses(cycle: tuple[int, ...], x: int, y: int) -> bool:
    n = len(cycle)
    return any({cycle[i], cycle[(i + 1) % n]} == {x, y} for i in range(n))


def check_hamiltonicity_oracle(max_order: int) -> CheckResult:
    res = CheckResult("hamiltonicity criterion vs backtracking")
    for g in all_threshold_graphs(max_order):
        res.checked += 1
        if is_hamiltonian(g.partition) != brute_force_hamiltonian(g):
            res.fail(f"{g.degree_sequence}: criterion and backtracking disagree")
    return res


def check_key_edge_count_drop(max_order: int) -> CheckResult:
    """Deleting a key edge of a hamiltonian graph strictly lowers the cycle count.

    For order at least 4, when ``|D_m| >= 3`` and the edge joins ``D_1`` to
    ``D_m``, the smaller graph must also stay hamiltonian (the triangle is
    the lone exception below that).
    """
    res = CheckResult("key-edge deletion lowers count")
    for g in all_threshold_graphs(max_order, 3):
        p = g.partition
        if not is_hamiltonian(p):
            continue
        total = count_hamilton_cycles(g)
        for e in key_edges(g):
            res.checked += 1
            out = delete_key_edge(g, e)
            if not count_hamilton_cycles(out.result) < total:
                res.fail(f"{g.degree_sequence} {e}: count did not drop")
            if g.n >= 4 and len(p.sets[p.m]) >= 3 and e.j == 1 and not is_hamiltonian(out.result.partition):
                res.fail(f"{g.degree_sequence} {e}: lost hamiltonicity")
    return res


STRUCTURE_CHECKS: dict[str, Callable[[int], CheckResult]] = {
    "structure": check_structure,
    "injectivity": check_injectivity,
    "key-edge-deletion": check_key_edge_deletion,
    "key-edges-on-cycles": check_key_edges_on_cycles,
    "hamiltonicity-oracle": check_hamiltonicity_oracle,
    "count-drop": check_key_edge_count_drop,
}


def run_structure_suite(max_order: int) -> list[CheckResult]:
    return [check(max_order) for check in STRUCTURE_CHECKS.values()]
