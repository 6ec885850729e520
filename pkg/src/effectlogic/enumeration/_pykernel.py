"""Pure-Python enumeration kernel; same interface as the compiled one.

Tables are flat ``n * n`` lists, ``-1`` meaning undefined.  Element ``0``
is zero and ``n - 1`` is one; only the cells among the middle elements
``1 .. n-2`` are searched.
"""

from __future__ import annotations

from itertools import permutations

UNKNOWN = -2
UNDEF = -1


def base_table(n: int, comp) -> list[int]:
    """Everything the axioms force once ``comp`` is chosen; other cells unknown."""
    one = n - 1
    P = [UNKNOWN] * (n * n)
    for x in range(n):
        for y in range(n):
            if x == 0 or y == 0:
                P[x * n + y] = x + y  # one of them is zero
            elif x == one or y == one:
                P[x * n + y] = UNDEF
    for x in range(1, one):
        P[x * n + comp[x]] = one
    return P


def _sum(P, n, a, b):
    if a < 0:
        return a
    return P[a * n + b]


def assoc_ok(P, n: int) -> bool:
    """No triple of middle elements with both bracketings known and different."""
    one = n - 1
    for x in range(1, one):
        for y in range(1, one):
            xy = P[x * n + y]
            if xy == UNKNOWN:
                continue
            for z in range(1, one):
                yz = P[y * n + z]
                if yz == UNKNOWN:
                    continue
                left = _sum(P, n, xy, z)
                if left == UNKNOWN:
                    continue
                right = _sum(P, n, yz, x)
                if right == UNKNOWN:
                    continue
                if left != right:
                    return False
    return True


def _row_ok(P, n, x, v) -> bool:
    # cancellation: a row never repeats a defined value
    row = P[x * n : x * n + n]
    return v not in row


def fill_plus(n: int, comp) -> list[tuple[int, ...]]:
    """All commutative, associative completions of the forced table for ``comp``."""
    one = n - 1
    P = base_table(n, comp)
    cells = [(i, j) for i in range(1, one) for j in range(i, one) if P[i * n + j] == UNKNOWN]
    out: list[tuple[int, ...]] = []

    def go(k: int) -> None:
        if k == len(cells):
            out.append(tuple(P))
            return
        i, j = cells[k]
        for v in [UNDEF, *range(1, one)]:
            if v != UNDEF:
                if v == i or v == j or not _row_ok(P, n, i, v) or not _row_ok(P, n, j, v):
                    continue
            P[i * n + j] = v
            P[j * n + i] = v
            if assoc_ok(P, n):
                go(k + 1)
            P[i * n + j] = UNKNOWN
            P[j * n + i] = UNKNOWN

    go(0)
    return out


def relabellings(n: int):
    """Bijections fixing 0 and 1."""
    for perm in permutations(range(1, n - 1)):
        yield [0, *perm, n - 1]


def canonical_code(n: int, table) -> bytes:
    """Least relabelled table, one byte per cell (value + 1, so undefined is 0).

    The minimum runs over every permutation of the middle elements, so two
    tables get the same code exactly when they are isomorphic.
    """
    best = None
    for pi in relabellings(n):
        q = [0] * (n * n)
        for x in range(n):
            for y in range(n):
                v = table[x * n + y]
                q[pi[x] * n + pi[y]] = v + 1 if v < 0 else pi[v] + 1
        code = bytes([n, *q])
        if best is None or code < best:
            best = code
    return best
