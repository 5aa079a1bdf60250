from typing import Set, Tuple

import pytest

from tamaricc import CubicCoordinate, PosetInstance, enumerate_cc

CC3 = frozenset({
    (-1, -2), (-1, 0), (-1, 1), (0, -2), (0, -1), (0, 0), (0, 1),
    (1, -2), (1, -1), (1, 0), (2, -1), (2, 0), (2, 1),
})

CC3_EDGES = frozenset({
    ((-1, -2), (0, -2)), ((-1, -2), (-1, 0)),
    ((-1, 0), (0, 0)), ((-1, 0), (-1, 1)),
    ((-1, 1), (0, 1)),
    ((0, -2), (1, -2)), ((0, -2), (0, -1)),
    ((0, -1), (1, -1)), ((0, -1), (0, 0)),
    ((0, 0), (1, 0)), ((0, 0), (0, 1)),
    ((0, 1), (2, 1)),
    ((1, -2), (1, -1)),
    ((1, -1), (2, -1)), ((1, -1), (1, 0)),
    ((1, 0), (2, 0)),
    ((2, -1), (2, 0)),
    ((2, 0), (2, 1)),
})

CC3_SYNCHRONIZED = frozenset({(-1, -2), (-1, 1), (1, -2), (1, -1), (2, -1), (2, 1)})

# c_min -> (c_max, gamma)
CC3_CELLS = {
    (-1, -2): ((0, 0), (-1, -2)),
    (-1, 0): ((0, 1), (-1, 1)),
    (0, -2): ((1, -1), (1, -2)),
    (0, -1): ((1, 0), (1, -1)),
    (0, 0): ((2, 1), (2, 1)),
    (1, -1): ((2, 0), (2, -1)),
}

EXAMPLE_C = (9, -1, 2, 1, -4, 4, 3, 1, -2)
EXAMPLE_U = (9, 0, 2, 1, 0, 4, 3, 1, 0, 0)
EXAMPLE_V = (0, 0, 1, 0, 0, 4, 0, 0, 0, 2)

CELL_MIN = (0, -1, 1, -1, -5, 0, 1, -1, -3)
CELL_MAX = (1, 0, 2, 0, -4, 3, 2, 0, -2)
CELL_GAMMA = (1, -1, 2, -1, -5, 3, 2, -1, -3)

INTERVAL_COUNTS = {1: 1, 2: 3, 3: 13, 4: 68, 5: 399, 6: 2530, 7: 16965, 8: 118668}


def edge_coordinates(poset: PosetInstance) -> Set[Tuple[CubicCoordinate, CubicCoordinate]]:
    return {(poset.elements[lo], poset.elements[hi]) for lo, hi in poset.hasse}


@pytest.fixture(scope='session')
def cc3() -> PosetInstance:
    return enumerate_cc(3)


@pytest.fixture(scope='session')
def cc4() -> PosetInstance:
    return enumerate_cc(4)


@pytest.fixture(scope='session')
def cc5() -> PosetInstance:
    return enumerate_cc(5)
