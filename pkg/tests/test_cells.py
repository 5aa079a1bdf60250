import pytest

from conftest import CC3_CELLS, CELL_GAMMA, CELL_MAX, CELL_MIN
from tamaricc import (
    CC, Cell, InvariantError, PreconditionError, SizeError, apply_increases, cell_vertices, divergent_orders,
    enumerate_cc, enumerate_cells, gamma_map, interior_points, is_minimal_cellular, is_synchronized,
    maximal_correspondent
)


def test_worked_example():
    c = CC(CELL_MIN)
    assert is_minimal_cellular(c)
    assert maximal_correspondent(c) == CELL_MAX
    cell = Cell.from_minimal(c)
    assert cell.n == 10
    assert gamma_map(cell) == CELL_GAMMA
    assert is_synchronized(gamma_map(cell))
    assert len(cell_vertices(cell)) == 512


def test_cc3_cells(cc3):
    cells = list(enumerate_cells(3, poset=cc3))
    assert {cell.c_min: (cell.c_max, gamma_map(cell)) for cell in cells} == CC3_CELLS
    assert [cell.c_min for cell in cells] == sorted(CC3_CELLS)
    assert {c for c in cc3.elements if is_minimal_cellular(c)} == set(CC3_CELLS)


def test_cc2_cells():
    cells = list(enumerate_cells(2))
    assert [(cell.c_min, cell.c_max, gamma_map(cell)) for cell in cells] == [
        ((-1, ), (0, ), (-1, )),
        ((0, ), (1, ), (1, )),
    ]


def test_cc1_cell():
    (cell, ) = enumerate_cells(1)
    assert cell.c_min == cell.c_max == ()
    assert cell_vertices(cell) == {()}


def test_increase_order_matters():
    assert apply_increases(CC((0, 0)), [2, 1]) == (2, 1)
    assert apply_increases(CC((0, 0)), [1, 2]) is None
    assert apply_increases(CC((0, 0)), []) == (0, 0)
    assert divergent_orders(CC((0, 0))) == [(1, 2)]
    assert divergent_orders(CC((-1, -2))) == [(1, 2)]
    assert divergent_orders(CC((-1, ))) == []


def test_preconditions():
    with pytest.raises(PreconditionError):
        maximal_correspondent(CC((2, 1)))
    with pytest.raises(PreconditionError):
        Cell((2, 1), (2, 1))
    with pytest.raises(InvariantError):
        Cell((0, 0), (1, 0))
    with pytest.raises(SizeError):
        Cell((0, ), (0, 0))
    with pytest.raises(SizeError):
        list(enumerate_cells(3, poset=enumerate_cc(2)))


def test_cell_str():
    assert str(Cell((0, 0), (2, 1))) == '⟨(0,0), (2,1)⟩'
    assert Cell((0, 0), (2, 1)) == Cell.from_minimal(CC((0, 0)))


def test_interior_points():
    points = interior_points(Cell((-1, -2), (0, 0)))
    assert points == {(-1, -2), (-1, 0), (0, -2), (0, -1), (0, 0)}
    assert interior_points(Cell((0, 0), (2, 1))) == {(0, 0), (0, 1), (1, 0), (2, 0), (2, 1)}


@pytest.mark.parametrize('n, count', [(2, 2), (3, 6), (4, 22), (5, 91)])
def test_cells_biject_synchronized(n, count):
    cells = list(enumerate_cells(n))
    images = [gamma_map(cell) for cell in cells]
    assert len(cells) == len(set(images)) == count
    assert all(is_synchronized(c) for c in images)


def test_cell_vertices_cc4(cc4):
    elements = set(cc4.elements)
    for cell in enumerate_cells(4, poset=cc4):
        vertices = cell_vertices(cell)
        assert len(vertices) == 8
        assert vertices <= elements
        assert vertices <= interior_points(cell)
        for lo, hi in zip(cell.c_min, cell.c_max):
            assert lo != hi
            assert (lo < 0) == (hi <= 0)
