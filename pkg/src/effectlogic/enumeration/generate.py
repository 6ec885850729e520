"""Generation of effect algebras up to isomorphism (complements first).

A complement involution is fixed first; the kernel then fills the plus
table among the middle elements with associativity pruning.  Labelled
solutions are reduced to canonical codes, so the output holds one algebra
per isomorphism class, in code order.
"""

from __future__ import annotations

from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor

from ..algebra import UNDEFINED, EffectAlgebra, validate_effect_axioms
from .kernels import get_kernel

DEFAULT_CAP = 6


class CapExceeded(ValueError):
    pass


def _check_size(n: int, cap: int) -> None:
    if n < 2:
        raise ValueError("effect algebras have at least two elements")
    if n > cap:
        raise CapExceeded(f"size {n} exceeds the cap {cap}; raise the cap explicitly")


def involutions(n: int) -> Iterator[tuple[int, ...]]:
    """Complement candidates: involutions of the middle elements, 0 and 1 swapped."""
    middle = tuple(range(1, n - 1))

    def go(rest, pairs):
        if not rest:
            yield dict(pairs)
            return
        a, tail = rest[0], rest[1:]
        pairs[a] = a
        yield from go(tail, pairs)
        del pairs[a]
        for b in tail:
            pairs[a], pairs[b] = b, a
            yield from go(tuple(t for t in tail if t != b), pairs)
            del pairs[a], pairs[b]

    for c in go(middle, {}):
        yield (n - 1, *(c[x] for x in middle), 0)


def complement_classes(n: int) -> list[tuple[int, ...]]:
    """One involution per conjugacy class: ``k`` swapped pairs ``(1 2)(3 4)...``.

    Relabelling the middle elements conjugates the complement, so every
    algebra is isomorphic to one whose complement is on this list.
    """
    m = n - 2
    out = []
    for k in range(m // 2 + 1):
        c = list(range(n))
        c[0], c[n - 1] = n - 1, 0
        for i in range(k):
            a, b = 2 * i + 1, 2 * i + 2
            c[a], c[b] = b, a
        out.append(tuple(c))
    return out


def _codes_for(args) -> set[bytes]:
    n, comp, kernel = args
    k = get_kernel(kernel)
    return {k.canonical_code(n, table) for table in k.fill_plus(n, comp)}


def canonical_codes(n: int, jobs: int = 1, kernel: str | None = None, cap: int = DEFAULT_CAP) -> list[bytes]:
    """Sorted canonical codes of all effect algebras of size ``n``."""
    _check_size(n, cap)
    tasks = [(n, comp, kernel) for comp in complement_classes(n)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_codes_for, tasks))
    else:
        parts = [_codes_for(t) for t in tasks]
    return sorted(set().union(*parts))


def _flat(E: EffectAlgebra) -> tuple[list[int], list[int]]:
    """Relabel so zero is 0 and one is n-1; return the flat table and complement."""
    n = E.size
    rest = [x for x in range(n) if x not in (E.zero, E.one)]
    perm = [0] * n
    perm[E.zero] = 0
    perm[E.one] = n - 1
    for new, old in enumerate(rest, 1):
        perm[old] = new
    F = E.relabel(perm)
    table = [-1 if v is UNDEFINED else v for row in F.plus for v in row]
    return table, list(F.comp)


def canonicalize(E: EffectAlgebra, kernel: str | None = None) -> bytes:
    """Equal for two algebras exactly when they are isomorphic."""
    table, _ = _flat(E)
    return get_kernel(kernel).canonical_code(E.size, table)


def _default_names(n: int) -> list[str]:
    letters = "abcdefghijklmnopqrstuvwxyz"
    return ["0", *letters[: n - 2], "1"]


def decode(code: bytes) -> EffectAlgebra:
    """The algebra whose canonical table is ``code`` (zero is 0, one is n-1)."""
    if not code:
        raise ValueError("empty code")
    n = code[0]
    if len(code) != 1 + n * n:
        raise ValueError(f"code length {len(code)} does not fit size {n}")
    cells = [None if b == 0 else b - 1 for b in code[1:]]
    plus = [cells[i * n : (i + 1) * n] for i in range(n)]
    comp = []
    for x in range(n):
        tops = [y for y in range(n) if plus[x][y] == n - 1]
        if len(tops) != 1:
            raise ValueError(f"element {x} has {len(tops)} candidate complements")
        comp.append(tops[0])
    return EffectAlgebra(n, plus, comp, 0, n - 1, _default_names(n))


def enumerate_effect_algebras(
    n: int, cap: int = DEFAULT_CAP, jobs: int = 1, kernel: str | None = None
) -> Iterator[EffectAlgebra]:
    """One algebra per isomorphism class of size ``n``, in canonical-code order.

    Each emitted algebra is re-validated against the axioms.
    """
    for code in canonical_codes(n, jobs=jobs, kernel=kernel, cap=cap):
        E = decode(code)
        rep = validate_effect_axioms(E)
        if not rep.ok:  # a kernel bug, never a property of the input
            raise AssertionError(f"kernel emitted an invalid table:\n{rep}")
        yield E


def all_up_to(cap: int, jobs: int = 1, kernel: str | None = None) -> list[EffectAlgebra]:
    """Every class of every size ``2..cap``."""
    return [E for n in range(2, cap + 1) for E in enumerate_effect_algebras(n, cap=cap, jobs=jobs, kernel=kernel)]
