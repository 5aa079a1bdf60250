"""JSON and text codecs for every representation, and the realization document"""
from __future__ import annotations

__all__ = [
    'cc_to_dict', 'cc_from_dict', 'tid_to_dict', 'tid_from_dict', 'poset_to_dict', 'poset_from_dict',
    'tree_to_dict', 'tree_from_dict', 'interval_to_dict', 'interval_from_dict', 'tree_pair_to_dict',
    'cell_to_dict', 'hasse_to_dict',
    'encode', 'decode', 'convert',
    'Vertex', 'RealizationDocument'
]

import csv
import io
import json
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple, Union

from .cells import Cell, gamma_map, is_minimal_cellular
from .cubic import CubicCoordinate, is_new, is_synchronized, phi, phi_inverse, rank
from .diagrams import TamariIntervalDiagram
from .lattice import PosetInstance
from .posets import IntervalPoset, chi, chi_inverse
from .trees import BinaryTree, TamariInterval, rho, rho_inverse
from .types import REPRESENTATION, TARGET, Edge, JSONDict, ParseError, Representation, SizeError, Target
from .util import parse_word

Decoded = Union[CubicCoordinate, TamariIntervalDiagram, IntervalPoset, TamariInterval]


def _field(data: JSONDict, key: str, func_name: str) -> Any:
    try:
        return data[key]
    except (KeyError, TypeError):
        raise ParseError(f'{func_name}: missing "{key}"') from None


@contextmanager
def _parsing(func_name: str) -> Iterator[None]:
    """Wrong JSON types surface as ParseError"""
    try:
        yield
    except TypeError as err:
        raise ParseError(f'{func_name}: {err}') from err


def _check_n(data: JSONDict, actual: int, func_name: str) -> None:
    if 'n' in data and data['n'] != actual:
        raise SizeError(f'{func_name}: "n" is {data["n"]} but the content has size {actual}')


def cc_to_dict(c: CubicCoordinate) -> JSONDict:
    return {'n': len(c) + 1, 'c': list(c)}


def cc_from_dict(data: JSONDict) -> CubicCoordinate:
    with _parsing('cc_from_dict'):
        c = CubicCoordinate(_field(data, 'c', 'cc_from_dict'))
    _check_n(data, c.n, 'cc_from_dict')
    return c


def tid_to_dict(tid: TamariIntervalDiagram) -> JSONDict:
    return {'n': tid.n, 'u': list(tid.u), 'v': list(tid.v)}


def tid_from_dict(data: JSONDict) -> TamariIntervalDiagram:
    with _parsing('tid_from_dict'):
        tid = TamariIntervalDiagram(_field(data, 'u', 'tid_from_dict'), _field(data, 'v', 'tid_from_dict'))
    _check_n(data, tid.n, 'tid_from_dict')
    return tid


def poset_to_dict(poset: IntervalPoset) -> JSONDict:
    """Strict pairs ``[j, i]`` meaning ``x_j ⊲ x_i``, closure included"""
    return {'n': poset.n, 'relations': [list(p) for p in poset]}


def poset_from_dict(data: JSONDict) -> IntervalPoset:
    relations = _field(data, 'relations', 'poset_from_dict')
    try:
        pairs = frozenset((int(a), int(b)) for a, b in relations)
    except (TypeError, ValueError):
        raise ParseError('poset_from_dict: relations must be pairs of integers') from None
    with _parsing('poset_from_dict'):
        return IntervalPoset(_field(data, 'n', 'poset_from_dict'), pairs)


def tree_to_dict(tree: Optional[BinaryTree]) -> Optional[JSONDict]:
    """Nested ``{"l": ..., "r": ...}``, empty subtrees are null"""
    if tree is None:
        return None
    return {'l': tree_to_dict(tree.left), 'r': tree_to_dict(tree.right)}


def tree_from_dict(data: Any) -> BinaryTree:
    def _build(node: Any) -> Optional[BinaryTree]:
        if node is None:
            return None
        if not isinstance(node, dict) or set(node) != {'l', 'r'}:
            raise ParseError(f'tree_from_dict: {node!r} is not a {{"l", "r"}} node')
        return BinaryTree(_build(node['l']), _build(node['r']))

    tree = _build(data)
    if tree is None:
        raise ParseError('tree_from_dict: empty tree')
    return tree


def _tree(data: Any) -> BinaryTree:
    return BinaryTree.from_brackets(data) if isinstance(data, str) else tree_from_dict(data)


def interval_to_dict(interval: TamariInterval) -> JSONDict:
    return {'n': interval.n, 'lower': tree_to_dict(interval.lower), 'upper': tree_to_dict(interval.upper)}


def interval_from_dict(data: JSONDict) -> TamariInterval:
    """Trees are nested dictionaries or bracket words"""
    interval = TamariInterval(
        _tree(_field(data, 'lower', 'interval_from_dict')), _tree(_field(data, 'upper', 'interval_from_dict'))
    )
    _check_n(data, interval.n, 'interval_from_dict')
    return interval


def tree_pair_to_dict(interval: TamariInterval) -> JSONDict:
    return {'n': interval.n, 'lower': interval.lower.to_brackets(), 'upper': interval.upper.to_brackets()}


def cell_to_dict(cell: Cell) -> JSONDict:
    return {'n': cell.n, 'cmin': list(cell.c_min), 'cmax': list(cell.c_max), 'gamma': list(gamma_map(cell))}


def hasse_to_dict(poset: PosetInstance) -> JSONDict:
    return {
        'n': poset.n,
        'nodes': [{'id': k, 'c': list(c)} for k, c in enumerate(poset.elements)],
        'edges': [list(e) for e in poset.hasse]
    }


def encode(obj: Decoded, target: Optional[Target] = None) -> JSONDict:
    """JSON-ready dictionary of any representation. ``Target.TREE_PAIR`` writes intervals as bracket words."""
    if isinstance(obj, CubicCoordinate):
        return cc_to_dict(obj)
    if isinstance(obj, TamariIntervalDiagram):
        return tid_to_dict(obj)
    if isinstance(obj, IntervalPoset):
        return poset_to_dict(obj)
    if isinstance(obj, TamariInterval):
        return tree_pair_to_dict(obj) if target == Target.TREE_PAIR else interval_to_dict(obj)
    raise TypeError(f'encode: cannot encode {type(obj).__name__}')


def decode(rep: Union[Representation, REPRESENTATION], text: str) -> Decoded:
    """
    Parses a representation from JSON, or from its short text form:
    comma-separated entries for ``cc``, ``u; v`` for ``tid`` and ``S; T`` bracket words for ``interval``.

    Raises:
        ParseError: Neither form applies.
        ValidationError: The value breaks the axioms of its type.
    """
    rep = Representation(rep)
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = None

    if rep is Representation.CC:
        if isinstance(data, dict):
            return cc_from_dict(data)
        if isinstance(data, list):
            with _parsing('decode'):
                return CubicCoordinate(data)
        return CubicCoordinate.from_text(text)
    if rep is Representation.TID:
        if isinstance(data, dict):
            return tid_from_dict(data)
        return TamariIntervalDiagram(*_halves(text, 'decode', parse_word))
    if rep is Representation.POSET:
        if isinstance(data, dict):
            return poset_from_dict(data)
        raise ParseError('decode: an interval-poset must be given as JSON')
    if isinstance(data, dict):
        return interval_from_dict(data)
    return TamariInterval(*_halves(text, 'decode', BinaryTree.from_brackets))


def _halves(text: str, func_name: str, parse: Callable[[str], Any]) -> List[Any]:
    parts = text.split(';')
    if len(parts) != 2:
        raise ParseError(f'{func_name}: expected two parts separated by ";" in "{text}"')
    return [parse(part) for part in parts]


def _to_tid(obj: Decoded) -> TamariIntervalDiagram:
    if isinstance(obj, CubicCoordinate):
        return phi(obj)
    if isinstance(obj, TamariIntervalDiagram):
        return obj
    if isinstance(obj, IntervalPoset):
        return chi_inverse(obj)
    return chi_inverse(rho_inverse(obj))


def convert(obj: Decoded, target: Union[Target, TARGET]) -> Decoded:
    """Moves any representation along the bijections to ``target``, through its Tamari interval diagram"""
    target = Target(target)
    tid = _to_tid(obj)
    if target is Target.CC:
        return phi_inverse(tid)
    if target is Target.TID:
        return tid
    if target is Target.POSET:
        return chi(tid)
    return rho(chi(tid))


@dataclass(frozen=True)
class Vertex:
    id: int
    c: CubicCoordinate
    synchronized: bool
    new: bool
    minimal_cellular: bool

    def to_dict(self) -> JSONDict:
        return {
            'id': self.id, 'c': list(self.c),
            'flags': {'synchronized': self.synchronized, 'new': self.new, 'minimal_cellular': self.minimal_cellular}
        }


@dataclass(frozen=True)
class RealizationDocument:
    """
    The cubic realization of CC_n: each coordinate is a point of R^(n-1),
    each cover an edge from the lower to the upper point.
    Vertices are sorted lexicographically, edges by (lower, upper), so every rendering is byte-stable.
    """
    n: int
    vertices: Tuple[Vertex, ...]
    edges: Tuple[Edge, ...]

    @classmethod
    def from_poset(cls, poset: PosetInstance) -> RealizationDocument:
        vertices = tuple(
            Vertex(k, c, is_synchronized(c), is_new(c), is_minimal_cellular(c))
            for k, c in enumerate(poset.elements)
        )
        return cls(poset.n, vertices, poset.hasse)

    def to_dict(self) -> JSONDict:
        return {'n': self.n, 'vertices': [v.to_dict() for v in self.vertices], 'edges': [list(e) for e in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + '\n'

    def to_dot(self) -> str:
        """Graphviz digraph, vertices of equal rank on one row"""
        by_rank: Dict[int, List[int]] = {}
        for v in self.vertices:
            by_rank.setdefault(rank(v.c), []).append(v.id)
        lines = [f'digraph CC_{self.n} {{', '    rankdir=BT;']
        lines += [f'    {v.id} [label="({",".join(map(str, v.c))})"];' for v in self.vertices]
        lines += [f'    {{ rank=same; {" ".join(f"{i};" for i in ids)} }}' for _, ids in sorted(by_rank.items())]
        lines += [f'    {lo} -> {hi};' for lo, hi in self.edges]
        lines.append('}')
        return '\n'.join(lines) + '\n'

    def to_csv(self) -> Tuple[str, str]:
        """(vertex table, edge table). Vertex columns are id, c_1 ... c_(n-1) and the three flags."""
        vertices = io.StringIO()
        writer = csv.writer(vertices, lineterminator='\n')
        writer.writerow(['id', *(f'c_{i}' for i in range(1, self.n)), 'synchronized', 'new', 'minimal_cellular'])
        for v in self.vertices:
            writer.writerow([v.id, *v.c, int(v.synchronized), int(v.new), int(v.minimal_cellular)])
        edges = io.StringIO()
        writer = csv.writer(edges, lineterminator='\n')
        writer.writerow(['lower', 'upper'])
        writer.writerows(self.edges)
        return vertices.getvalue(), edges.getvalue()
