import pytest
from hypothesis import given

from conftest import creation_sequences
from threshold_hamilton.core import as_threshold, complete_graph, from_creation_sequence, from_degree_sequence, recognize
from threshold_hamilton.errors import UsageError
from threshold_hamilton.extremal import build_gn, enumerate_threshold_graphs
from threshold_hamilton.hamilton import count_hamilton_cycles, is_hamiltonian
from threshold_hamilton.key_edges import (
    DeletionCase,
    KeyEdge,
    as_key_edge,
    delete_key_edge,
    key_edges,
    verify_key_edges_in_hamilton_cycles,
)


def brackets(g, pairs):
    """Edges of the union of brackets ``[D_a, D_b]``, as a set of frozensets."""
    p = g.partition
    out = set()
    for a, b in pairs:
        for x in p.sets[a]:
            for y in p.sets[b]:
                if x != y:
                    out.add(frozenset((x, y)))
    return out


def as_set(edges):
    return {frozenset(e.endpoints) for e in edges}


def test_key_edges_m4():
    g = build_gn(6)
    assert g.m == 4
    assert as_set(key_edges(g)) == brackets(g, [(1, 4), (2, 3)])
    assert len(key_edges(g)) == 1 * 2 + 2 * 1


def test_key_edges_m5():
    g = build_gn(7)
    assert g.m == 5
    assert as_set(key_edges(g)) == brackets(g, [(1, 5), (2, 4), (3, 3)])


def test_key_edges_k3_all_edges():
    g = as_threshold(complete_graph(3))
    assert as_set(key_edges(g)) == {frozenset(e) for e in g.edges()}


@given(creation_sequences)
def test_key_edges_are_edges_and_ordered(seq):
    g = from_creation_sequence(seq)
    edges = key_edges(g)
    assert edges == sorted(edges)
    assert len(as_set(edges)) == len(edges)
    for e in edges:
        assert g.has_edge(e.x, e.y)
        assert e.j + e.other == g.m + 1 and 1 <= e.j <= e.other


def test_delete_case2_on_g6():
    g = build_gn(6)
    p = g.partition
    e = as_key_edge(g, p.sets[1][0], p.sets[4][0])
    out = delete_key_edge(g, e)
    assert out.case_label is DeletionCase.CASE2
    assert out.m_delta == 0
    assert out.result.degree_sequence == (5, 4, 4, 3, 3, 1)


def test_delete_odd_middle_size2():
    g = build_gn(5)
    p = g.partition
    assert p.m == 3 and len(p.sets[2]) == 2
    out = delete_key_edge(g, as_key_edge(g, *p.sets[2]))
    assert out.case_label is DeletionCase.ODD_MIDDLE_SIZE2 and out.m_delta == -1


def test_delete_case1():
    g = build_gn(8)
    p = g.partition
    assert len(p.sets[2]) == len(p.sets[5]) == 1
    out = delete_key_edge(g, as_key_edge(g, p.sets[2][0], p.sets[5][0]))
    assert out.case_label is DeletionCase.CASE1 and out.m_delta == -2


def test_delete_odd_middle_size3plus():
    g = as_threshold(complete_graph(4))
    out = delete_key_edge(g, key_edges(g)[0])
    assert out.case_label is DeletionCase.ODD_MIDDLE_SIZE3PLUS and out.m_delta == 1


def test_case3_both_branches():
    # P3: m = 2, D_1 the two leaves, D_2 the centre -> tight middle, m drops by one
    p3 = from_degree_sequence([2, 1, 1])
    out = delete_key_edge(p3, key_edges(p3)[0])
    assert out.case_label is DeletionCase.CASE3 and out.m_delta == -1
    labels = set()
    for g in enumerate_threshold_graphs(8):
        for e in key_edges(g):
            out = delete_key_edge(g, e)
            labels.add((out.case_label, out.m_delta))
    assert {(DeletionCase.CASE3, -1), (DeletionCase.CASE3, 0)} <= labels
    assert {(DeletionCase.CASE4, 1), (DeletionCase.CASE4, 2)} <= labels
    assert len({lab for lab, _ in labels}) == 6


def test_delete_rejects_non_key_edge():
    g = build_gn(6)
    x, y = g.partition.sets[4]
    with pytest.raises(UsageError):
        as_key_edge(g, x, y)
    with pytest.raises(UsageError):
        delete_key_edge(g, KeyEdge(4, x, y, 4))
    with pytest.raises(UsageError):
        delete_key_edge(g, KeyEdge(1, x, y, 4))


def test_deletion_does_not_mutate():
    g = build_gn(7)
    rows = g.rows
    delete_key_edge(g, key_edges(g)[0])
    assert g.rows == rows


@pytest.mark.parametrize("n", range(4, 13))
def test_key_edges_on_cycles_gn(n):
    assert verify_key_edges_in_hamilton_cycles(build_gn(n))


def test_key_edges_on_cycles_k3():
    assert verify_key_edges_in_hamilton_cycles(as_threshold(complete_graph(3)))


def test_key_edges_on_cycles_rejects_non_hamiltonian():
    with pytest.raises(UsageError):
        verify_key_edges_in_hamilton_cycles(from_degree_sequence([3, 1, 1, 1]))


@given(creation_sequences)
def test_deleting_any_edge_never_raises_count(seq):
    g = from_creation_sequence(seq)
    if g.n > 9:
        return
    base = count_hamilton_cycles(g)
    for u, v in g.edges():
        assert count_hamilton_cycles(g.remove_edge(u, v)) <= base
    if is_hamiltonian(g.partition):
        for e in key_edges(g):
            assert count_hamilton_cycles(delete_key_edge(g, e).result) < base


def test_deletion_result_recognized_exhaustive_n7():
    for g in enumerate_threshold_graphs(7):
        for e in key_edges(g):
            assert recognize(delete_key_edge(g, e).result) is not None
