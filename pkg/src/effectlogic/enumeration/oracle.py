"""Independent generators used to cross-check the main enumerator.

``rows_first`` fills whole plus rows before anything else and reads the
complement off the finished table.  ``brute_force`` tries every partial
table outright and groups the survivors with ``find_isomorphism``, so it
shares no code with the canonical-form machinery.
"""

from __future__ import annotations

from itertools import product

from ..algebra import EffectAlgebra, find_isomorphism, validate_effect_axioms
from .generate import canonicalize


def _derive_comp(n: int, plus) -> list[int] | None:
    comp = []
    for x in range(n):
        tops = [y for y in range(n) if plus[x][y] == n - 1]
        if len(tops) != 1:
            return None
        comp.append(tops[0])
    return comp


def rows_first(n: int) -> list[EffectAlgebra]:
    """All labelled effect algebras on ``0..n-1`` (zero 0, one n-1), row by row."""
    one = n - 1
    middle = range(1, one)
    plus: list[list[int | None]] = [[None] * n for _ in range(n)]
    for x in range(n):
        plus[0][x] = plus[x][0] = x
    values = (None, *range(1, n))

    def known(a, b, row):
        return a in (0, one) or b in (0, one) or min(a, b) <= row

    def add(a, b):
        return None if a is None or b is None else plus[a][b]

    def assoc_ok(row):
        done = [x for x in middle if x <= row]
        for x in done:
            for y in range(1, one):
                for z in range(1, one):
                    cells = [(x, y), (y, z)]
                    if not all(known(a, b, row) for a, b in cells):
                        continue
                    xy, yz = plus[x][y], plus[y][z]
                    if xy is not None and not known(xy, z, row):
                        continue
                    if yz is not None and not known(x, yz, row):
                        continue
                    if add(xy, z) != add(x, yz):
                        return False
        return True

    out = []

    def fill(row):
        if row == one:
            comp = _derive_comp(n, plus)
            if comp is None:
                return
            cand = {"size": n, "plus": [r[:] for r in plus], "comp": comp, "zero": 0, "one": one}
            if validate_effect_axioms(cand).ok:
                out.append(EffectAlgebra(n, cand["plus"], comp, 0, one))
            return
        cols = list(range(row, one))
        for choice in product(values, repeat=len(cols)):
            for y, v in zip(cols, choice):
                plus[row][y] = plus[y][row] = v
            # exactly one partner sums to one; nothing but zero sums with one
            if sum(1 for y in range(n) if plus[row][y] == one) == 1 and assoc_ok(row):
                fill(row + 1)
        for y in cols:
            plus[row][y] = plus[y][row] = None

    fill(1)
    return out


def rows_first_codes(n: int) -> list[bytes]:
    return sorted({canonicalize(E) for E in rows_first(n)})


def brute_force(n: int) -> list[EffectAlgebra]:
    """Representatives of the isomorphism classes among all partial tables on ``n`` points.

    Every cell ranges over undefined and all ``n`` elements; zero is 0 and
    one is ``n - 1``.  Feasible for ``n <= 3`` only.
    """
    if n > 3:
        raise ValueError("brute force is limited to n <= 3")
    cells = [(i, j) for i in range(n) for j in range(n)]
    reps: list[EffectAlgebra] = []
    for choice in product((None, *range(n)), repeat=n * n):
        plus = [list(choice[i * n : (i + 1) * n]) for i in range(n)]
        if any(plus[i][j] != plus[j][i] for i, j in cells):
            continue
        comp = _derive_comp(n, plus)
        if comp is None:
            continue
        cand = {"size": n, "plus": plus, "comp": comp, "zero": 0, "one": n - 1}
        if not validate_effect_axioms(cand).ok:
            continue
        E = EffectAlgebra(n, plus, comp, 0, n - 1)
        if not any(find_isomorphism(E, R) is not None for R in reps):
            reps.append(E)
    return reps
