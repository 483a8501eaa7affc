"""Key edges of threshold graphs and what deleting one does to the partition.

A key edge joins ``D_j`` to ``D_{m+1-j}`` for some ``1 <= j <= ceil(m/2)``;
for odd ``m`` the middle bracket is the clique on ``D_{(m+1)/2}``. Deleting
a key edge always leaves a threshold graph, and the change in the number of
distinct positive degrees follows from the sizes of the two sets involved.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import ThresholdGraph, recognize
from .errors import InvariantViolation, UsageError
from .hamilton import count_hamilton_cycles_through_edge, is_hamiltonian


@dataclass(frozen=True, order=True)
class KeyEdge:
    j: int
    x: int
    y: int
    other: int  # m + 1 - j

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.x, self.y)


class DeletionCase(enum.Enum):
    CASE1 = "CASE1"  # |D_j| = 1, |D_{m+1-j}| = 1
    CASE2 = "CASE2"  # |D_j| = 1, |D_{m+1-j}| >= 2
    CASE3 = "CASE3"  # |D_j| >= 2, |D_{m+1-j}| = 1
    CASE4 = "CASE4"  # |D_j| >= 2, |D_{m+1-j}| >= 2
    ODD_MIDDLE_SIZE2 = "ODD_MIDDLE_SIZE2"
    ODD_MIDDLE_SIZE3PLUS = "ODD_MIDDLE_SIZE3PLUS"


@dataclass(frozen=True)
class DeletionOutcome:
    result: ThresholdGraph
    case_label: DeletionCase
    m_delta: int


def key_edges(g: ThresholdGraph) -> list[KeyEdge]:
    """All key edges, ordered by ``(j, x, y)``."""
    p = g.partition
    m = p.m
    out = []
    for j in range(1, (m + 1) // 2 + 1):
        other = m + 1 - j
        if j == other:
            members = sorted(p.sets[j])
            for a, x in enumerate(members):
                for y in members[a + 1 :]:
                    out.append(KeyEdge(j, x, y, other))
        else:
            for x in sorted(p.sets[j]):
                for y in sorted(p.sets[other]):
                    out.append(KeyEdge(j, x, y, other))
    return out


def classify_key_edge(g: ThresholdGraph, e: KeyEdge) -> tuple[DeletionCase, tuple[int, ...]]:
    """Case label and the allowed values of ``m' - m``, from the partition of ``g`` alone."""
    p = g.partition
    m = p.m
    j = e.j
    if j == e.other:
        if len(p.sets[j]) == 2:
            return DeletionCase.ODD_MIDDLE_SIZE2, (-1,)
        return DeletionCase.ODD_MIDDLE_SIZE3PLUS, (1,)
    low, high = len(p.sets[j]), len(p.sets[e.other])
    # the even-m middle pair D_{m/2} of size 2 sits one degree below D_{m/2+1}
    tight_middle = m % 2 == 0 and j == m // 2 and low == 2
    if low == 1 and high == 1:
        return DeletionCase.CASE1, (-2,)
    if low == 1:
        return DeletionCase.CASE2, (0,)
    if high == 1:
        return DeletionCase.CASE3, ((-1,) if tight_middle else (0,))
    return DeletionCase.CASE4, ((1,) if tight_middle else (2,))


def _validate_key_edge(g: ThresholdGraph, e: KeyEdge) -> None:
    p = g.partition
    m = p.m
    if not 1 <= e.j <= (m + 1) // 2 or e.other != m + 1 - e.j:
        raise UsageError(f"{e} has invalid partition coordinates for m={m}")
    if e.x == e.y or not (0 <= e.x < g.n and 0 <= e.y < g.n):
        raise UsageError(f"{e} has invalid endpoints")
    if p.index_of(e.x) != e.j or p.index_of(e.y) != e.other:
        raise UsageError(f"{e} endpoints are not in D_{e.j} and D_{e.other}")


def as_key_edge(g: ThresholdGraph, u: int, v: int) -> KeyEdge:
    """Orient ``uv`` as a :class:`KeyEdge`, or raise if it is not one."""
    g._check_pair(u, v)
    p = g.partition
    iu, iv = p.index_of(u), p.index_of(v)
    if iu > iv or (iu == iv and u > v):
        u, v, iu, iv = v, u, iv, iu
    if iu < 1 or iu + iv != p.m + 1:
        raise UsageError(f"({u}, {v}) is not a key edge")
    return KeyEdge(iu, u, v, iv)


def delete_key_edge(g: ThresholdGraph, e: KeyEdge) -> DeletionOutcome:
    """Delete a key edge, re-recognize the result and label the case.

    The label comes from the partition before deletion; the observed
    ``m' - m`` must be one the case allows.
    """
    _validate_key_edge(g, e)
    label, allowed = classify_key_edge(g, e)
    smaller = g.remove_edge(e.x, e.y)
    p = recognize(smaller)
    if p is None:
        raise InvariantViolation(f"deleting key edge {e} left a non-threshold graph")
    delta = p.m - g.partition.m
    if delta not in allowed:
        raise InvariantViolation(f"{label.value}: m changed by {delta}, expected one of {allowed}")
    return DeletionOutcome(ThresholdGraph(smaller.n, smaller.rows), label, delta)


def verify_key_edges_in_hamilton_cycles(g: ThresholdGraph) -> bool:
    """True iff every key edge of the hamiltonian graph ``g`` lies on a Hamilton cycle."""
    if not is_hamiltonian(g.partition):
        raise UsageError("graph is not hamiltonian")
    return all(count_hamilton_cycles_through_edge(g, e.endpoints) >= 1 for e in key_edges(g))
