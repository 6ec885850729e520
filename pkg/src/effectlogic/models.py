"""Hand-built small effect algebras used as fixtures and CLI examples."""

from __future__ import annotations

from .algebra import UNDEFINED, EffectAlgebra


def chain(n: int) -> EffectAlgebra:
    """The ``n``-element chain ``0 < 1 < ... < n-1`` with truncated-free addition.

    ``x + y`` is defined iff ``x + y <= n - 1``; complement is ``n-1-x``.
    """
    if n < 2:
        raise ValueError("a chain needs at least two elements")
    top = n - 1
    plus = [[x + y if x + y <= top else UNDEFINED for y in range(n)] for x in range(n)]
    comp = [top - x for x in range(n)]
    names = ["0", *(f"{k}/{top}" for k in range(1, top)), "1"]
    return EffectAlgebra(n, plus, comp, 0, top, names)


def e2() -> EffectAlgebra:
    return chain(2)


def c3() -> EffectAlgebra:
    return EffectAlgebra(
        3,
        [[0, 1, 2], [1, 2, None], [2, None, None]],
        [2, 1, 0],
        0,
        2,
        ["0", "a", "1"],
    )


def c4() -> EffectAlgebra:
    """Chain ``0 < a < b < 1`` with ``a' = b`` and ``a + a = b``."""
    return EffectAlgebra(
        4,
        [[0, 1, 2, 3], [1, 2, 3, None], [2, 3, None, None], [3, None, None, None]],
        [3, 2, 1, 0],
        0,
        3,
        ["0", "a", "b", "1"],
    )


def b4() -> EffectAlgebra:
    """Boolean algebra ``2^2``: atoms ``a, b`` with ``a' = b``."""
    return EffectAlgebra(
        4,
        [[0, 1, 2, 3], [1, None, 3, None], [2, 3, None, None], [3, None, None, None]],
        [3, 2, 1, 0],
        0,
        3,
        ["0", "a", "b", "1"],
    )


def horizontal_sum(A: EffectAlgebra, B: EffectAlgebra) -> EffectAlgebra:
    """Glue ``A`` and ``B`` along their constants; cross sums are undefined."""
    a_mid = [x for x in A.elements if x not in (A.zero, A.one)]
    b_mid = [x for x in B.elements if x not in (B.zero, B.one)]
    n = 2 + len(a_mid) + len(b_mid)
    top = n - 1
    amap = {A.zero: 0, A.one: top, **{x: i + 1 for i, x in enumerate(a_mid)}}
    bmap = {B.zero: 0, B.one: top, **{x: i + 1 + len(a_mid) for i, x in enumerate(b_mid)}}
    plus = [[UNDEFINED] * n for _ in range(n)]
    comp = [0] * n
    for src, emap in ((A, amap), (B, bmap)):
        for x in src.elements:
            comp[emap[x]] = emap[src.comp[x]]
            for y in src.elements:
                s = src.plus[x][y]
                if s is not UNDEFINED:
                    plus[emap[x]][emap[y]] = emap[s]
    names = ["0"] * n
    for src, emap, tag in ((A, amap, "A"), (B, bmap, "B")):
        for x, i in emap.items():
            if 0 < i < top:
                names[i] = f"{tag}{src.label(x)}"
    names[top] = "1"
    return EffectAlgebra(n, plus, comp, 0, top, names)


def hs() -> EffectAlgebra:
    """Horizontal sum of two copies of ``c3``: the diamond with ``a + a = b + b = 1``."""
    E = horizontal_sum(c3(), c3())
    return EffectAlgebra(E.size, E.plus, E.comp, E.zero, E.one, ["0", "a", "b", "1"])


def twin_atoms() -> EffectAlgebra:
    """Six elements, not lattice-ordered.

    Atoms ``a, b`` with ``a + a = d = a'``, ``b + b = d`` and ``a + b = c = b'``;
    both ``c`` and ``d`` are minimal upper bounds of ``{a, b}``.
    """
    # indices: 0, a=1, b=2, c=3, d=4, 1=5
    U = UNDEFINED
    plus = [
        [0, 1, 2, 3, 4, 5],
        [1, 4, 3, U, 5, U],
        [2, 3, 4, 5, U, U],
        [3, U, 5, U, U, U],
        [4, 5, U, U, U, U],
        [5, U, U, U, U, U],
    ]
    comp = [5, 4, 3, 2, 1, 0]
    return EffectAlgebra(6, plus, comp, 0, 5, ["0", "a", "b", "c", "d", "1"])


NAMED = {
    "e2": e2,
    "c3": c3,
    "c4": c4,
    "b4": b4,
    "hs": hs,
    "c5": lambda: chain(5),
    "twin_atoms": twin_atoms,
}
