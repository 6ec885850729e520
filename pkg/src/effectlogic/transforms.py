"""Passing between effect algebras and implication algebras.

``effect_to_implication`` gives the natural table for lattice-ordered
algebras and the set-valued table otherwise; ``implication_to_effect``
reads ``x + y := x' -> y`` (defined iff ``x -> y' = 1``) back off a table.
Transforms never permute indices, so round trips compare tables literally.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from itertools import product

from .algebra import UNDEFINED, EffectAlgebra, assignments, max_lower_cone, validate_effect_axioms
from .implication import (
    ImplicationTable,
    Kind,
    KindMismatch,
    imp_sets,
    lift_to_sets,
    natural_implication_table,
    set_implication_table,
)
from .report import Report, Violation

LEIA = "LEIA"
EIA = "EIA"


class NotAnImplicationAlgebra(ValueError):
    """The effect structure read off an implication table breaks E1-E4."""

    def __init__(self, message: str, report: Report | None = None, diagnosis: Report | None = None):
        super().__init__(message)
        self.report = report
        self.diagnosis = diagnosis


class SetValuedNotRoundTrippable(ValueError):
    """A cell needed to read off ``+`` or ``'`` is not a singleton."""


@dataclass(frozen=True)
class ImplicationAlgebra:
    """A total single-valued algebra ``(I, ->, 0)``."""

    size: int
    imp: tuple[tuple[int, ...], ...]
    zero: int

    def __post_init__(self):
        object.__setattr__(self, "imp", tuple(tuple(row) for row in self.imp))

    def table(self) -> ImplicationTable:
        return ImplicationTable.from_values(self.imp, self.zero)

    @classmethod
    def from_table(cls, T: ImplicationTable) -> ImplicationAlgebra:
        if not T.single_valued:
            raise KindMismatch("table is set-valued")
        return cls(T.size, [[c[0] for c in row] for row in T.imp], T.zero)


def _as_table(I) -> ImplicationTable:
    return I.table() if isinstance(I, ImplicationAlgebra) else I


def effect_to_implication(E: EffectAlgebra) -> ImplicationTable:
    if E.is_lattice:
        return natural_implication_table(E)
    return set_implication_table(E)


def _single(T: ImplicationTable, x: int, y: int, what: str) -> int:
    cell = T.cell(x, y)
    if len(cell) != 1:
        raise SetValuedNotRoundTrippable(f"{what}: cell ({x},{y}) = {list(cell)} is not a singleton")
    return cell[0]


def read_effect_tables(I) -> dict:
    """The raw ``+``/``'`` tables defined by an implication table, unvalidated."""
    T = _as_table(I)
    n, zero = T.size, T.zero
    one = _single(T, zero, zero, "0 -> 0")
    comp = [_single(T, x, zero, "x -> 0") for x in range(n)]
    plus = [[UNDEFINED] * n for _ in range(n)]
    for x, y in product(range(n), repeat=2):
        if T.cell(x, comp[y]) == (one,):
            plus[x][y] = _single(T, comp[x], y, "x' -> y")
    return {"size": n, "plus": plus, "comp": comp, "zero": zero, "one": one}


def implication_to_effect(I) -> EffectAlgebra:
    T = _as_table(I)
    raw = read_effect_tables(T)
    rep = validate_effect_axioms(raw)
    if not rep.ok:
        mode = LEIA if T.single_valued else EIA
        raise NotAnImplicationAlgebra(
            f"derived structure violates {', '.join(sorted({v.clause for v in rep.violations}))}",
            report=rep,
            diagnosis=validate_implication_axioms(T, mode),
        )
    return EffectAlgebra.from_dict(raw)


_ROMAN = ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi", "xii")
LEIA_CLAUSES = [f"LEIA({r})" for r in _ROMAN]
EIA_CLAUSES = [f"EIA({r})" for r in _ROMAN[:8]] + ["EIA(chain)"]


def validate_implication_axioms(T, mode: str = LEIA, at: Mapping[str, int] | None = None) -> Report:
    """Clause-by-clause check of the implication-algebra axioms.

    ``mode`` is ``"LEIA"`` (twelve clauses, single-valued tables only) or
    ``"EIA"`` (eight clauses plus the chain condition).  Terms are evaluated
    set-wise: ``A -> B`` is the union of the cells, ``= 1`` means the value
    set is exactly ``{1}``, and equations compare value sets.  With ``at``
    only that assignment of ``x, y, z`` is examined.
    """
    T = _as_table(T)
    if mode not in (LEIA, EIA):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == LEIA and not T.single_valued:
        raise KindMismatch("LEIA mode needs a single-valued table")

    n = T.size
    Z = (T.zero,)
    ONE = T.one

    def I(A, B):
        return imp_sets(T, A, B)

    def c(A):
        return imp_sets(T, A, Z)

    def is1(A):
        return A == ONE

    tags = LEIA_CLAUSES if mode == LEIA else EIA_CLAUSES
    rep = Report(f"{mode} axioms", list(tags))
    tag = dict(zip(_ROMAN, tags))
    if mode == EIA:
        # clauses shared with the lattice list, renumbered
        tag = {"i": tags[0], "ii": tags[1], "iii": tags[2], "iv": tags[3], "v": tags[4],
               "ix": tags[5], "x": tags[6], "xii": tags[7]}
        rep.notes["EIA(chain)"] = "vacuous: finite carrier"
    if len(ONE) != 1 and (at is None or at.get("x") == T.zero):
        rep.add(tag["i"], f"0->0={list(ONE)} is not a single element", x=T.zero)

    for (x,) in assignments(n, "x", at):
        X = (x,)
        for label, val in (("0->x", I(Z, X)), ("x->x", I(X, X)), ("x->1", I(X, ONE))):
            if not is1(val):
                rep.add(tag["i"], f"{label}={list(val)}", x=x)
        if c(c(X)) != X:
            rep.add(tag["v"], f"x''={list(c(c(X)))}", x=x)

    for x, y in assignments(n, "xy", at):
        X, Y = (x,), (y,)
        xy, yx = I(X, Y), I(Y, X)
        if is1(xy) and is1(yx) and x != y:
            rep.add(tag["ii"], x=x, y=y)
        if is1(xy) and not is1(I(c(Y), c(X))):
            rep.add(tag["iv"], f"y'->x'={list(I(c(Y), c(X)))}", x=x, y=y)
        if is1(xy) and yx != I(c(X), c(Y)):
            rep.add(tag["ix"], f"y->x={list(yx)} but x'->y'={list(I(c(X), c(Y)))}", x=x, y=y)
        if not is1(I(X, yx)):
            rep.add(tag["xii"], f"x->(y->x)={list(I(X, yx))}", x=x, y=y)
        if mode == LEIA:
            joined = I(xy, Y)
            if not is1(I(X, joined)):
                rep.add(tag["vi"], x=x, y=y)
            if not is1(I(Y, joined)):
                rep.add(tag["vii"], x=x, y=y)
            lhs = I(c(Y), c(joined))
            if lhs != xy:
                rep.add(tag["xi"], f"y'->((x->y)->y)'={list(lhs)} but x->y={list(xy)}", x=x, y=y)

    for x, y, z in assignments(n, "xyz", at):
        X, Y, Zz = (x,), (y,), (z,)
        if is1(I(X, Y)) and is1(I(Y, Zz)) and not is1(I(X, Zz)):
            rep.add(tag["iii"], x=x, y=y, z=z)
        if mode == LEIA and is1(I(X, Zz)) and is1(I(Y, Zz)):
            if not is1(I(I(I(X, Y), Y), Zz)):
                rep.add(tag["viii"], x=x, y=y, z=z)
        xcy = I(c(X), Y)
        ycz = I(c(Y), Zz)
        left = is1(I(X, c(Y))) and is1(I(xcy, c(Zz)))
        right = is1(I(Y, c(Zz))) and is1(I(X, c(ycz)))
        if left != right:
            side = "left" if left else "right"
            rep.add(tag["x"], f"only the {side} hypothesis holds", x=x, y=y, z=z)
        if left or right:
            a, b = I(c(xcy), Zz), I(c(X), ycz)
            if a != b:
                rep.add(tag["x"], f"(x'->y)'->z={list(a)} but x'->(y'->z)={list(b)}", x=x, y=y, z=z)
    return rep


def check_identity_11(E) -> Report:
    """``x -> y`` equals ``y' -> Max L(x', y')`` on every cell.

    ``E`` is an effect algebra (checked against its implication table) or an
    implication table (checked against the order of the algebra it induces).
    """
    if isinstance(E, EffectAlgebra):
        T = set_implication_table(E)
        A = E
    else:
        T = _as_table(E)
        A = implication_to_effect(T)
    rep = Report("max-cone identity", ["identity-11"])
    for x, y in product(range(A.size), repeat=2):
        lifted = lift_to_sets(T, A.comp[y], max_lower_cone(A, A.comp[x], A.comp[y]))
        if lifted != T.cell(x, y):
            rep.add("identity-11", f"y'->Max L={list(lifted)} but x->y={list(T.cell(x, y))}", x=x, y=y)
    return rep


def _diff_algebras(A: EffectAlgebra, B: EffectAlgebra) -> list[str]:
    if A.size != B.size:
        return [f"size {A.size} vs {B.size}"]
    out = []
    if (A.zero, A.one) != (B.zero, B.one):
        out.append(f"constants {(A.zero, A.one)} vs {(B.zero, B.one)}")
    out += [f"comp[{x}] {A.comp[x]} vs {B.comp[x]}" for x in A.elements if A.comp[x] != B.comp[x]]
    out += [
        f"plus[{x}][{y}] {A.plus[x][y]} vs {B.plus[x][y]}"
        for x, y in product(A.elements, repeat=2)
        if A.plus[x][y] != B.plus[x][y]
    ]
    return out


def _diff_tables(S: ImplicationTable, T: ImplicationTable) -> list[str]:
    if S.size != T.size or S.zero != T.zero:
        return ["carrier or zero differ"]
    return [
        f"cell ({x},{y}) {list(S.cell(x, y))} vs {list(T.cell(x, y))}"
        for x, y in product(range(S.size), repeat=2)
        if S.cell(x, y) != T.cell(x, y)
    ]


def round_trip_check(obj) -> Report:
    """Compare ``E(I(E))`` with ``E`` and ``I(E(I))`` with ``I`` table for table."""
    rep = Report("round trip", ["E->I->E", "I->E->I"])
    if isinstance(obj, EffectAlgebra):
        E = obj
        T = effect_to_implication(E)
    else:
        T = _as_table(obj)
        E = implication_to_effect(T)
    E2 = implication_to_effect(T)
    for d in _diff_algebras(E, E2):
        rep.violations.append(Violation("E->I->E", {}, d))
    T2 = effect_to_implication(E2)
    for d in _diff_tables(T, T2):
        rep.violations.append(Violation("I->E->I", {}, d))
    return rep

