"""Finite effect algebras as explicit tables.

An effect algebra on ``size`` elements is stored as a partial addition
table (``None`` marks an undefined sum), an explicit complement table and
the indices of the two constants.  Nothing here mutates; derived structure
(order, lattice tables) is computed once and cached on the instance.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

from .report import Report

UNDEFINED = None

Element = int
Cell = Element | None


class MalformedTable(ValueError):
    """Tables are ragged, mis-sized or reference elements outside the carrier."""


class SizeMismatch(ValueError):
    pass


def _check_shape(size, plus, comp, zero, one, names=None) -> None:
    if not isinstance(size, int) or isinstance(size, bool) or size < 1:
        raise MalformedTable(f"size must be a positive integer, got {size!r}")

    def is_index(v) -> bool:
        return isinstance(v, int) and not isinstance(v, bool) and 0 <= v < size

    for label, v in (("zero", zero), ("one", one)):
        if not is_index(v):
            raise MalformedTable(f"{label}={v!r} is not an element index")
    if len(comp) != size:
        raise MalformedTable(f"comp has {len(comp)} entries, expected {size}")
    for x, v in enumerate(comp):
        if not is_index(v):
            raise MalformedTable(f"comp[{x}]={v!r} is not an element index")
    if len(plus) != size:
        raise MalformedTable(f"plus has {len(plus)} rows, expected {size}")
    for x, row in enumerate(plus):
        if len(row) != size:
            raise MalformedTable(f"plus row {x} has {len(row)} entries, expected {size}")
        for y, v in enumerate(row):
            if v is not UNDEFINED and not is_index(v):
                raise MalformedTable(f"plus[{x}][{y}]={v!r} is neither null nor an element index")
    if names is not None and len(names) != size:
        raise MalformedTable(f"names has {len(names)} entries, expected {size}")


@dataclass(frozen=True)
class OrderStructure:
    leq: tuple[tuple[bool, ...], ...]
    is_lattice: bool
    join: tuple[tuple[int, ...], ...] | None = None
    meet: tuple[tuple[int, ...], ...] | None = None

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq[x][y]


@dataclass(frozen=True)
class Isomorphism:
    map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]


@dataclass(frozen=True)
class EffectAlgebra:
    size: int
    plus: tuple[tuple[Cell, ...], ...]
    comp: tuple[int, ...]
    zero: int
    one: int
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        try:
            plus = tuple(tuple(row) for row in self.plus)
            comp = tuple(self.comp)
            names = None if self.names is None else tuple(str(n) for n in self.names)
        except TypeError as exc:
            raise MalformedTable(str(exc)) from None
        _check_shape(self.size, plus, comp, self.zero, self.one, names)
        object.__setattr__(self, "plus", plus)
        object.__setattr__(self, "comp", comp)
        object.__setattr__(self, "names", names)

    @classmethod
    def from_dict(cls, doc: Mapping) -> EffectAlgebra:
        try:
            return cls(
                size=doc["size"],
                plus=doc["plus"],
                comp=doc["comp"],
                zero=doc["zero"],
                one=doc["one"],
                names=doc.get("names"),
            )
        except KeyError as exc:
            raise MalformedTable(f"missing field {exc.args[0]!r}") from None

    def to_dict(self) -> dict:
        doc = {
            "size": self.size,
            "zero": self.zero,
            "one": self.one,
            "comp": list(self.comp),
            "plus": [list(row) for row in self.plus],
        }
        if self.names is not None:
            doc["names"] = list(self.names)
        return doc

    @property
    def elements(self) -> range:
        return range(self.size)

    def add(self, x: Cell, y: Cell) -> Cell:
        """``x + y`` with undefinedness propagating from either argument."""
        if x is UNDEFINED or y is UNDEFINED:
            return UNDEFINED
        return self.plus[x][y]

    def label(self, x: int) -> str:
        return self.names[x] if self.names else str(x)

    @cached_property
    def order(self) -> OrderStructure:
        return induced_order(self)

    def leq(self, x: int, y: int) -> bool:
        return self.order.leq[x][y]

    @property
    def is_lattice(self) -> bool:
        return self.order.is_lattice

    def relabel(self, perm: Sequence[int]) -> EffectAlgebra:
        """Copy of this algebra where old element ``x`` becomes ``perm[x]``."""
        n = self.size
        inv = [0] * n
        for x, px in enumerate(perm):
            inv[px] = x
        plus = [
            [
                UNDEFINED if self.plus[inv[i]][inv[j]] is UNDEFINED else perm[self.plus[inv[i]][inv[j]]]
                for j in range(n)
            ]
            for i in range(n)
        ]
        comp = [perm[self.comp[inv[i]]] for i in range(n)]
        names = None if self.names is None else [self.names[inv[i]] for i in range(n)]
        return EffectAlgebra(n, plus, comp, perm[self.zero], perm[self.one], names)


def raw_tables(candidate):
    if isinstance(candidate, EffectAlgebra):
        return candidate.size, candidate.plus, candidate.comp, candidate.zero, candidate.one
    try:
        size, plus, comp = candidate["size"], candidate["plus"], candidate["comp"]
        zero, one = candidate["zero"], candidate["one"]
    except KeyError as exc:
        raise MalformedTable(f"missing field {exc.args[0]!r}") from None
    except TypeError:
        raise MalformedTable("candidate must be a mapping of tables") from None
    try:
        plus = [list(row) for row in plus]
        comp = list(comp)
    except TypeError as exc:
        raise MalformedTable(str(exc)) from None
    _check_shape(size, plus, comp, zero, one, candidate.get("names"))
    return size, plus, comp, zero, one


AXIOM_CLAUSES = ["degenerate", "E1", "E2", "E3", "E4", "involution", "comp-zero"]


def validate_effect_axioms(candidate) -> Report:
    """Check E1-E4 plus the complement sanity clauses on raw tables.

    ``candidate`` is an :class:`EffectAlgebra` or a mapping with the model
    file fields.  Raises :class:`MalformedTable` for format errors; axiom
    failures are reported, never raised.
    """
    return effect_axiom_report(*raw_tables(candidate))


def assignments(n: int, names: str, at: Mapping[str, int] | None):
    """All assignments to ``names``, or just the one fixed by ``at``."""
    if at is None:
        return product(range(n), repeat=len(names))
    if any(k not in at for k in names):
        return iter(())
    return iter([tuple(at[k] for k in names)])


def effect_axiom_report(n, plus, comp, zero, one, at: Mapping[str, int] | None = None) -> Report:
    """The clause checks behind :func:`validate_effect_axioms` on validated raw tables.

    With ``at`` only that one assignment is examined, for each clause whose
    variables it covers.
    """
    rep = Report("effect algebra axioms", list(AXIOM_CLAUSES))

    def add(a, b):
        return UNDEFINED if a is UNDEFINED or b is UNDEFINED else plus[a][b]

    if at is None and zero == one:
        rep.add("degenerate", "zero and one coincide", zero=zero)
    for x, y in assignments(n, "xy", at):
        if plus[x][y] != plus[y][x]:
            rep.add("E1", f"{x}+{y}={plus[x][y]} but {y}+{x}={plus[y][x]}", x=x, y=y)
    for x, y, z in assignments(n, "xyz", at):
        left = add(add(x, y), z)
        right = add(x, add(y, z))
        if left != right:
            rep.add("E2", f"(x+y)+z={left} but x+(y+z)={right}", x=x, y=y, z=z)
    for x, y in assignments(n, "xy", at):
        if (plus[x][y] == one) != (y == comp[x]):
            if y == comp[x]:
                rep.add("E3", f"y=x' but x+y={plus[x][y]}", x=x, y=y)
            else:
                rep.add("E3", "x+y=1 but y is not x'", x=x, y=y)
    for (x,) in assignments(n, "x", at):
        if plus[one][x] is not UNDEFINED and x != zero:
            rep.add("E4", f"1+x={plus[one][x]} is defined", x=x)
    for (x,) in assignments(n, "x", at):
        if comp[comp[x]] != x:
            rep.add("involution", f"x''={comp[comp[x]]}", x=x)
    if (at is None or at.get("x") == zero) and comp[zero] != one:
        rep.add("comp-zero", f"0'={comp[zero]}", x=zero)
    return rep


def _leq_from_plus(n, plus) -> list[list[bool]]:
    leq = [[False] * n for _ in range(n)]
    for x in range(n):
        for v in plus[x]:
            if v is not UNDEFINED:
                leq[x][v] = True
    return leq


def _bound_tables(n, leq):
    """Join and meet tables, or ``(None, None)`` when some pair lacks one."""
    join = [[0] * n for _ in range(n)]
    meet = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            ups = [u for u in range(n) if leq[x][u] and leq[y][u]]
            least = [u for u in ups if all(leq[u][w] for w in ups)]
            downs = [d for d in range(n) if leq[d][x] and leq[d][y]]
            greatest = [d for d in downs if all(leq[w][d] for w in downs)]
            if len(least) != 1 or len(greatest) != 1:
                return None, None
            join[x][y] = least[0]
            meet[x][y] = greatest[0]
    return join, meet


def induced_order(E: EffectAlgebra) -> OrderStructure:
    n = E.size
    leq = _leq_from_plus(n, E.plus)
    join, meet = _bound_tables(n, leq)
    as_tuple = lambda t: None if t is None else tuple(map(tuple, t))  # noqa: E731
    return OrderStructure(
        leq=as_tuple(leq),
        is_lattice=join is not None,
        join=as_tuple(join),
        meet=as_tuple(meet),
    )


BASIC_LAW_CLAUSES = [f"basic({r})" for r in ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii")]


def check_basic_laws(E) -> Report:
    """Evaluate the elementary consequences of E1-E4 on every tuple.

    Accepts any dimensionally consistent candidate so that it can be played
    against :func:`validate_effect_axioms`; the order used is the relation
    ``x <= y iff x + z = y for some z`` read off the table.
    """
    n, plus, comp, zero, one = raw_tables(E)
    leq = _leq_from_plus(n, plus)
    rep = Report("basic laws", list(BASIC_LAW_CLAUSES))
    elems = range(n)

    def add(a, b):
        return UNDEFINED if a is UNDEFINED or b is UNDEFINED else plus[a][b]

    for a, b in product(elems, repeat=2):
        if leq[a][b] and not leq[comp[b]][comp[a]]:
            rep.add("basic(i)", "a<=b but not b'<=a'", a=a, b=b)
        if (plus[a][b] is not UNDEFINED) != leq[a][comp[b]]:
            rep.add("basic(iii)", "a+b defined does not match a<=b'", a=a, b=b)
        if leq[a][b]:
            s = add(a, comp[add(a, comp[b])]) if add(a, comp[b]) is not UNDEFINED else UNDEFINED
            if s != b:
                rep.add("basic(vi)", f"a+(a+b')'={s}", a=a, b=b)
            inner = add(comp[b], a)
            t = add(comp[b], comp[inner]) if inner is not UNDEFINED else UNDEFINED
            if t is UNDEFINED or comp[t] != a:
                rep.add("basic(vi)", f"(b'+(b'+a)')'={None if t is None else comp[t]}", a=a, b=b)
    for a in elems:
        if comp[comp[a]] != a:
            rep.add("basic(ii)", a=a)
        if plus[a][zero] != a:
            rep.add("basic(vii)", f"a+0={plus[a][zero]}", a=a)
    for a, b, c in product(elems, repeat=3):
        ac, bc = plus[a][c], plus[b][c]
        if leq[a][b] and bc is not UNDEFINED:
            if ac is UNDEFINED or not leq[ac][bc]:
                rep.add("basic(iv)", "a<=b, b+c defined, but not a+c<=b+c", a=a, b=b, c=c)
        if ac is not UNDEFINED and bc is not UNDEFINED and leq[ac][bc] != leq[a][b]:
            rep.add("basic(v)", "a+c<=b+c does not match a<=b", a=a, b=b, c=c)
    if comp[zero] != one:
        rep.add("basic(viii)", "0' is not 1", x=zero)
    if comp[one] != zero:
        rep.add("basic(viii)", "1' is not 0", x=one)
    return rep


def missing_join(E: EffectAlgebra) -> tuple[int, int] | None:
    """A pair with no least upper bound, or ``None`` for lattices."""
    leq = E.order.leq
    n = E.size
    for x, y in product(range(n), repeat=2):
        ups = [u for u in range(n) if leq[x][u] and leq[y][u]]
        if not any(all(leq[u][v] for v in ups) for u in ups):
            return x, y
    return None


def max_elements(E: EffectAlgebra, subset: Iterable[int]) -> tuple[int, ...]:
    """Maximal elements of ``subset`` under the induced order, ascending."""
    items = sorted(set(subset))
    leq = E.order.leq
    return tuple(z for z in items if not any(w != z and leq[z][w] for w in items))


def lower_cone(E: EffectAlgebra, x: int, y: int) -> tuple[int, ...]:
    leq = E.order.leq
    return tuple(z for z in E.elements if leq[z][x] and leq[z][y])


def max_lower_cone(E: EffectAlgebra, x: int, y: int) -> tuple[int, ...]:
    return max_elements(E, lower_cone(E, x, y))


def _signature(E: EffectAlgebra, x: int) -> tuple:
    row_defined = sum(v is not UNDEFINED for v in E.plus[x])
    below = sum(E.order.leq[z][x] for z in E.elements)
    return (E.comp[x] == x, row_defined, below)


def find_isomorphism(E1: EffectAlgebra, E2: EffectAlgebra) -> Isomorphism | None:
    """A structure-preserving bijection ``E1 -> E2``, or ``None``.

    Backtracks over the non-constant elements, assigning complements in
    pairs and pruning on a per-element signature.  Exact.
    """
    if E1.size != E2.size:
        raise SizeMismatch(f"sizes differ: {E1.size} vs {E2.size}")
    n = E1.size
    sig1 = [_signature(E1, x) for x in range(n)]
    sig2 = [_signature(E2, x) for x in range(n)]
    if sorted(sig1) != sorted(sig2):
        return None
    m = [-1] * n
    used = [False] * n

    def assign(x, y) -> list[int]:
        """Map x->y and x'->y'; returns what was newly set, or raises on conflict."""
        newly = []
        for a, b in ((x, y), (E1.comp[x], E2.comp[y])):
            if m[a] == -1:
                if used[b] or sig1[a] != sig2[b]:
                    raise LookupError
                m[a] = b
                used[b] = True
                newly.append(a)
            elif m[a] != b:
                raise LookupError
        return newly

    def undo(xs):
        for a in xs:
            used[m[a]] = False
            m[a] = -1

    def consistent(newly) -> bool:
        for a in newly:
            for b in range(n):
                if m[b] == -1:
                    continue
                for p, q in ((a, b), (b, a)):
                    s1, s2 = E1.plus[p][q], E2.plus[m[p]][m[q]]
                    if (s1 is UNDEFINED) != (s2 is UNDEFINED):
                        return False
                    if s1 is not UNDEFINED and m[s1] != -1 and m[s1] != s2:
                        return False
        return True

    def search(i) -> bool:
        while i < n and m[i] != -1:
            i += 1
        if i == n:
            return _is_isomorphism(E1, E2, m)
        for y in range(n):
            if used[y]:
                continue
            try:
                newly = assign(i, y)
            except LookupError:
                continue
            if consistent(newly) and search(i + 1):
                return True
            undo(newly)
        return False

    try:
        base = assign(E1.zero, E2.zero)
        base += assign(E1.one, E2.one)
    except LookupError:
        return None
    if not consistent(base):
        return None
    return Isomorphism(tuple(m)) if search(0) else None


def _is_isomorphism(E1: EffectAlgebra, E2: EffectAlgebra, m: Sequence[int]) -> bool:
    if sorted(m) != list(range(E1.size)):
        return False
    if m[E1.zero] != E2.zero or m[E1.one] != E2.one:
        return False
    for x in E1.elements:
        if m[E1.comp[x]] != E2.comp[m[x]]:
            return False
        for y in E1.elements:
            s1, s2 = E1.plus[x][y], E2.plus[m[x]][m[y]]
            if (s1 is UNDEFINED) != (s2 is UNDEFINED):
                return False
            if s1 is not UNDEFINED and m[s1] != s2:
                return False
    return True


def is_isomorphism(E1: EffectAlgebra, E2: EffectAlgebra, iso: Isomorphism) -> bool:
    return E1.size == E2.size and _is_isomorphism(E1, E2, iso.map)
