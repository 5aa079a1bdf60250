"""Cubic coordinates of Tamari intervals"""

# flake8: noqa
from . import cells, cubic, diagrams, export, lattice, oracle, posets, trees, types, util
from .cells import *
from .cubic import *
from .diagrams import *
from .export import *
from .lattice import *
from .oracle import *
from .posets import *
from .trees import *
from .types import *
from .util import *

CC = CubicCoordinate
TID = TamariIntervalDiagram
up = min_increase
