"""Implication tables built from effect algebras.

Cells are sorted tuples of element indices.  Single-valued tables simply
hold singletons, so the same evaluator serves the lattice and general case.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from itertools import product

from .algebra import UNDEFINED, EffectAlgebra, MalformedTable, max_lower_cone
from .report import Report

ElemSet = tuple[int, ...]


class NotLattice(ValueError):
    """The induced order lacks a join or meet for some pair."""


class KindMismatch(ValueError):
    pass


class EmptyArgument(ValueError):
    pass


class Kind(str, enum.Enum):
    NATURAL = "NaturalLattice"
    SASAKI = "Sasaki"
    SET = "SetValued"
    # a table given directly (file or transform input), not built from an effect algebra
    ABSTRACT = "Abstract"


def elemset(xs: Iterable[int]) -> ElemSet:
    return tuple(sorted(set(xs)))


@dataclass(frozen=True)
class ImplicationTable:
    size: int
    imp: tuple[tuple[ElemSet, ...], ...]
    zero: int
    kind: Kind = Kind.ABSTRACT

    def __post_init__(self):
        n = self.size
        if not isinstance(n, int) or n < 1:
            raise MalformedTable(f"size must be a positive integer, got {n!r}")
        if not (isinstance(self.zero, int) and 0 <= self.zero < n):
            raise MalformedTable(f"zero={self.zero!r} is not an element index")
        try:
            imp = tuple(tuple(elemset(cell) for cell in row) for row in self.imp)
        except TypeError as exc:
            raise MalformedTable(f"cells must be index arrays: {exc}") from None
        if len(imp) != n or any(len(row) != n for row in imp):
            raise MalformedTable(f"imp must be a {n}x{n} table")
        for x, y in product(range(n), repeat=2):
            cell = imp[x][y]
            if not cell:
                raise MalformedTable(f"imp[{x}][{y}] is empty")
            if any(not isinstance(v, int) or not 0 <= v < n for v in cell):
                raise MalformedTable(f"imp[{x}][{y}]={list(cell)} has an out-of-range entry")
        object.__setattr__(self, "imp", imp)
        object.__setattr__(self, "kind", Kind(self.kind))

    def cell(self, x: int, y: int) -> ElemSet:
        return self.imp[x][y]

    @property
    def one(self) -> ElemSet:
        """The value set of ``0 -> 0``."""
        return self.cell(self.zero, self.zero)

    @property
    def single_valued(self) -> bool:
        return all(len(c) == 1 for row in self.imp for c in row)

    def value(self, x: int, y: int) -> int:
        cell = self.imp[x][y]
        if len(cell) != 1:
            raise KindMismatch(f"cell ({x},{y}) holds {len(cell)} values")
        return cell[0]

    def max_cell_size(self) -> int:
        return max(len(c) for row in self.imp for c in row)

    @classmethod
    def from_dict(cls, doc: Mapping) -> ImplicationTable:
        try:
            return cls(doc["size"], doc["imp"], doc["zero"], Kind(doc.get("kind", Kind.ABSTRACT.value)))
        except KeyError as exc:
            raise MalformedTable(f"missing field {exc.args[0]!r}") from None
        except ValueError as exc:
            if isinstance(exc, MalformedTable):
                raise
            raise MalformedTable(str(exc)) from None

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "zero": self.zero,
            "kind": self.kind.value,
            "imp": [[list(c) for c in row] for row in self.imp],
        }

    @classmethod
    def from_values(cls, values, zero: int, kind: Kind = Kind.ABSTRACT) -> ImplicationTable:
        """Build from a plain ``size x size`` table of single elements."""
        rows = [[(v,) for v in row] for row in values]
        return cls(len(rows), rows, zero, kind)


def _require_lattice(E: EffectAlgebra):
    order = E.order
    if not order.is_lattice:
        raise NotLattice("the induced order is not a lattice; use set_implication_table")
    return order


def natural_implication_table(E: EffectAlgebra) -> ImplicationTable:
    """``x -> y = y + (x v y)'``."""
    join = _require_lattice(E).join
    n = E.size
    rows = []
    for x in range(n):
        row = []
        for y in range(n):
            s = E.plus[y][E.comp[join[x][y]]]
            assert s is not UNDEFINED
            row.append((s,))
        rows.append(row)
    return ImplicationTable(n, rows, E.zero, Kind.NATURAL)


def sasaki_implication_table(E: EffectAlgebra) -> ImplicationTable:
    """``x -> y = x' + (x ^ y)``."""
    meet = _require_lattice(E).meet
    n = E.size
    rows = []
    for x in range(n):
        row = []
        for y in range(n):
            s = E.plus[E.comp[x]][meet[x][y]]
            assert s is not UNDEFINED
            row.append((s,))
        rows.append(row)
    return ImplicationTable(n, rows, E.zero, Kind.SASAKI)


def set_implication_table(E: EffectAlgebra) -> ImplicationTable:
    """``x -> y = { y + m : m maximal in L(x', y') }``; defined for every finite algebra."""
    n = E.size
    rows = []
    for x in range(n):
        row = []
        for y in range(n):
            cone = max_lower_cone(E, E.comp[x], E.comp[y])
            row.append(elemset(E.plus[y][m] for m in cone))
        rows.append(row)
    return ImplicationTable(n, rows, E.zero, Kind.SET)


def lift_to_sets(T: ImplicationTable, a: int, A: Iterable[int]) -> ElemSet:
    """``a -> A``: the union of the cells ``a -> x`` over ``x`` in ``A``."""
    A = list(A)
    if not A:
        raise EmptyArgument("a -> A needs a nonempty A")
    out: set[int] = set()
    for x in A:
        out.update(T.cell(a, x))
    return elemset(out)


def imp_sets(T: ImplicationTable, A: Iterable[int], B: Iterable[int]) -> ElemSet:
    """Full set-lifted product ``A -> B``."""
    B = list(B)
    out: set[int] = set()
    for a in A:
        out.update(lift_to_sets(T, a, B))
    return elemset(out)


NATURAL_CLAUSES = [f"natimp({r})" for r in ("i", "ii", "iii", "iv", "v")] + [
    f"natid({r})" for r in ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii")
]
SET_CLAUSES = [f"setimp({r})" for r in ("i", "ii", "iii", "iv", "v", "vi", "vii")]


def check_implication_laws(E: EffectAlgebra, T: ImplicationTable) -> Report:
    """Check the implication laws appropriate to the table's kind.

    Natural tables get the order/sum laws and the eight derived identities;
    set-valued tables get the general laws, the last one read through
    :func:`lift_to_sets`.  All failures are collected.
    """
    if T.size != E.size or T.zero != E.zero:
        raise KindMismatch("table and algebra have different carriers")
    if T.kind is Kind.NATURAL:
        return _check_natural(E, T)
    if T.kind is Kind.SET:
        return _check_set_valued(E, T)
    raise KindMismatch(f"no law suite for {T.kind.value} tables")


def _check_natural(E: EffectAlgebra, T: ImplicationTable) -> Report:
    rep = Report("natural implication laws", list(NATURAL_CLAUSES))
    n, one, comp, plus = E.size, E.one, E.comp, E.plus
    leq, join = E.order.leq, E.order.join
    imp = lambda x, y: T.value(x, y)  # noqa: E731
    elems = range(n)
    for a, b in product(elems, repeat=2):
        if leq[a][b] != (imp(a, b) == one):
            rep.add("natimp(i)", f"a<=b is {leq[a][b]} but a->b={imp(a, b)}", a=a, b=b)
        if leq[a][comp[b]] and imp(comp[a], b) != plus[a][b]:
            rep.add("natimp(ii)", f"a+b={plus[a][b]} but a'->b={imp(comp[a], b)}", a=a, b=b)
        if leq[b][a]:
            if imp(a, b) != plus[comp[a]][b]:
                rep.add("natimp(iii)", f"a->b={imp(a, b)} but a'+b={plus[comp[a]][b]}", a=a, b=b)
            if imp(a, b) != imp(comp[b], comp[a]):
                rep.add("natimp(iv)", f"a->b={imp(a, b)} but b'->a'={imp(comp[b], comp[a])}", a=a, b=b)
    for a, b, c in product(elems, repeat=3):
        if leq[a][b] and not leq[imp(b, c)][imp(a, c)]:
            rep.add("natimp(v)", "a<=b but not b->c <= a->c", a=a, b=b, c=c)
    for x in elems:
        if imp(x, E.zero) != comp[x]:
            rep.add("natid(i)", f"x->0={imp(x, E.zero)}", x=x)
        if imp(one, x) != x:
            rep.add("natid(ii)", f"1->x={imp(one, x)}", x=x)
    for x, y in product(elems, repeat=2):
        xy = imp(x, y)
        xyy = imp(xy, y)
        if imp(x, imp(y, x)) != one:
            rep.add("natid(iii)", x=x, y=y)
        if xyy != join[x][y]:
            rep.add("natid(iv)", f"(x->y)->y={xyy} but x v y={join[x][y]}", x=x, y=y)
        if imp(xyy, y) != xy:
            rep.add("natid(v)", x=x, y=y)
        if imp(x, xyy) != one:
            rep.add("natid(vi)", x=x, y=y)
        if imp(y, xyy) != one:
            rep.add("natid(vii)", x=x, y=y)
        if imp(comp[y], comp[xyy]) != xy:
            rep.add("natid(viii)", x=x, y=y)
    return rep


def _check_set_valued(E: EffectAlgebra, T: ImplicationTable) -> Report:
    rep = Report("set-valued implication laws", list(SET_CLAUSES))
    n, comp, plus = E.size, E.comp, E.plus
    leq = E.order.leq
    one = (E.one,)
    elems = range(n)
    for a, b in product(elems, repeat=2):
        ab = T.cell(a, b)
        if leq[a][b] != (ab == one):
            rep.add("setimp(i)", f"a<=b is {leq[a][b]} but a->b={list(ab)}", a=a, b=b)
        if leq[a][comp[b]] and T.cell(comp[a], b) != (plus[a][b],):
            rep.add("setimp(ii)", f"a+b={plus[a][b]} but a'->b={list(T.cell(comp[a], b))}", a=a, b=b)
        if leq[b][a]:
            if ab != (plus[comp[a]][b],):
                rep.add("setimp(iii)", f"a->b={list(ab)} but a'+b={plus[comp[a]][b]}", a=a, b=b)
            if ab != T.cell(comp[b], comp[a]):
                rep.add("setimp(iv)", a=a, b=b)
        lifted = lift_to_sets(T, comp[b], max_lower_cone(E, comp[a], comp[b]))
        if lifted != ab:
            rep.add("setimp(vii)", f"b'->Max L(a',b')={list(lifted)} but a->b={list(ab)}", a=a, b=b)
    for a in elems:
        if T.cell(a, E.zero) != (comp[a],):
            rep.add("setimp(v)", f"a->0={list(T.cell(a, E.zero))}", a=a)
        if T.cell(E.one, a) != (a,):
            rep.add("setimp(vi)", f"1->a={list(T.cell(E.one, a))}", a=a)
    return rep
