import logging

import networkx as nx
import numpy as np
import pytest

from conftest import CC3, CC3_EDGES, INTERVAL_COUNTS, edge_coordinates
from tamaricc import (
    CC, IndexRangeError, InvariantError, PosetInstance, SizeCapError, SizeError, check_counts, count_cc, enumerate_cc,
    is_synchronized, join, join_table, meet, meet_table
)


def test_cc3(cc3):
    assert len(cc3) == 13
    assert set(cc3.elements) == CC3
    assert list(cc3.elements) == sorted(CC3)
    assert len(cc3.hasse) == 18
    assert edge_coordinates(cc3) == CC3_EDGES
    assert list(cc3.hasse) == sorted(cc3.hasse)


def test_small_sizes():
    cc1 = enumerate_cc(1)
    assert cc1.elements == ((), )
    assert cc1.hasse == ()
    assert cc1.minimum == cc1.maximum == 0
    cc2 = enumerate_cc(2)
    assert cc2.elements == ((-1, ), (0, ), (1, ))
    assert cc2.hasse == ((0, 1), (1, 2))


@pytest.mark.parametrize('n', range(1, 6))
def test_counts(n):
    assert count_cc(n) == INTERVAL_COUNTS[n]


def test_count_cc4(cc4):
    assert len(cc4) == 68


@pytest.mark.slow
@pytest.mark.parametrize('n', [5, 6, 7, 8])
def test_enumerate_cc_counts(n):
    assert len(enumerate_cc(n)) == INTERVAL_COUNTS[n]


def test_cap():
    with pytest.raises(SizeCapError):
        enumerate_cc(9)
    with pytest.raises(SizeCapError):
        enumerate_cc(4, cap=3)
    with pytest.warns(UserWarning, match='above the default'):
        enumerate_cc(2, cap=9)


def test_logs(caplog):
    caplog.set_level(logging.DEBUG, logger='tamaricc.lattice')
    enumerate_cc(2)
    assert 'enumerate_cc: n=2, 3 elements, 2 cover edges' in caplog.text


def test_index_of(cc3):
    assert cc3.index_of(CC((0, 0))) == 5
    assert cc3.elements[cc3.minimum] == (-1, -2)
    assert cc3.elements[cc3.maximum] == (2, 1)
    with pytest.raises(IndexRangeError):
        cc3.index_of((1, 1))


def test_instance_invariants():
    with pytest.raises(InvariantError):
        PosetInstance(2, (CC((-1, )), CC((0, )), CC((1, ))), ((0, 1), ))
    with pytest.raises(InvariantError):
        PosetInstance(2, (CC((0, )), CC((0, ))), ((0, 1), ))


def test_meet_join_values(cc3):
    def at(c):
        return cc3.index_of(CC(c))

    assert cc3.elements[meet(cc3, at((1, 0)), at((0, 1)))] == (0, 0)
    assert cc3.elements[join(cc3, at((1, -1)), at((0, 1)))] == (2, 1)
    assert cc3.elements[join(cc3, at((-1, 1)), at((1, -2)))] == (2, 1)
    assert cc3.elements[meet(cc3, at((-1, 1)), at((1, -2)))] == (-1, -2)
    assert meet(cc3, at((0, 0)), at((0, 0))) == at((0, 0))
    with pytest.raises(IndexRangeError):
        meet(cc3, 0, 13)
    with pytest.raises(IndexRangeError):
        join(cc3, -1, 0)


def test_tables_agree(cc3):
    meets, joins = meet_table(cc3), join_table(cc3)
    for a in range(len(cc3)):
        for b in range(len(cc3)):
            assert meets[a, b] == meet(cc3, a, b)
            assert joins[a, b] == join(cc3, a, b)
    assert (meets == meets.T).all()
    assert (np.diag(joins) == np.arange(len(cc3))).all()


def test_lattice_laws(cc4):
    meets, joins = meet_table(cc4), join_table(cc4)
    size = len(cc4)
    for a in range(size):
        assert (joins[a, meets[a]] == a).all()
        assert (meets[a, joins[a]] == a).all()
    rng = np.random.default_rng(1)
    for a, b, c in rng.integers(0, size, (500, 3)):
        assert meets[a, meets[b, c]] == meets[meets[a, b], c]
        assert joins[a, joins[b, c]] == joins[joins[a, b], c]


def test_up_degree(cc3, cc4):
    for poset in (cc3, cc4):
        degree = poset.up_degree()
        assert degree.sum() == len(poset.hasse)
        full = int((degree == poset.n - 1).sum())
        assert full == sum(1 for c in poset.elements if is_synchronized(c))
    assert cc3.up_degree()[cc3.maximum] == 0


def test_graph(cc4):
    graph = cc4.to_graph()
    assert graph.number_of_nodes() == 68
    assert graph.nodes[0]['c'] == cc4.elements[0]
    assert nx.is_directed_acyclic_graph(graph)
    assert set(nx.transitive_reduction(graph).edges) == set(graph.edges)
    closure = nx.transitive_closure(graph, reflexive=True)
    matrix = cc4.leq_matrix()
    assert set(closure.edges) == {(int(a), int(b)) for a, b in zip(*np.nonzero(matrix))}


def test_down_up_sets(cc3):
    zero = cc3.index_of(CC((0, 0)))
    assert {cc3.elements[k] for k in np.flatnonzero(cc3.down_set(zero))} == \
        {(-1, -2), (-1, 0), (0, -2), (0, -1), (0, 0)}
    assert {cc3.elements[k] for k in np.flatnonzero(cc3.up_set(zero))} == {(0, 0), (1, 0), (0, 1), (2, 0), (2, 1)}
    assert cc3.leq(cc3.minimum, zero) and not cc3.leq(zero, cc3.minimum)


def test_check_counts():
    report = check_counts(4)
    assert report.ok
    assert report.mismatches() == []
    assert [row.cc for row in report.rows] == [1, 3, 13, 68]
    assert [row.tree_pairs for row in report.rows] == [1, 3, 13, 68]
    assert str(report).splitlines()[2] == 'n=3: formula=13 tids=13 cc=13 tree-pairs=13'
    assert check_counts(2, tree_pairs_max=1).rows[1].tree_pairs is None
    with pytest.raises(SizeCapError):
        check_counts(5, cap=4)
    with pytest.raises(SizeError):
        check_counts(0)


@pytest.mark.slow
def test_cc5_tables(cc5):
    assert len(cc5) == 399
    meets, joins = meet_table(cc5), join_table(cc5)
    assert (meets[cc5.maximum] == np.arange(len(cc5))).all()
    assert (joins[cc5.minimum] == np.arange(len(cc5))).all()


@pytest.mark.slow
def test_cc5_lattice_laws(cc5):
    meets, joins = meet_table(cc5), join_table(cc5)
    a, b, c = np.random.default_rng(5).integers(0, len(cc5), (3, 10_000))
    assert (meets[a, joins[a, b]] == a).all()
    assert (joins[a, meets[a, b]] == a).all()
    assert (meets[a, meets[b, c]] == meets[meets[a, b], c]).all()
    assert (joins[a, joins[b, c]] == joins[joins[a, b], c]).all()
