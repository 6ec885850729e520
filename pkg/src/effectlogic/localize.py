"""Which table cells a reported violation depends on.

A violation is replayed at its witness assignment against a table that
records every cell it is asked for.  When a single cell of a passing table
has been changed, the replay of any violation must read that cell; the
negative controls use this to confirm the planted defect is the one
reported.
"""

from __future__ import annotations

from .algebra import raw_tables, effect_axiom_report
from .implication import ImplicationTable, elemset
from .report import Violation
from .transforms import EIA, LEIA, validate_implication_axioms

Cell = tuple[int, int]


class _Row:
    def __init__(self, x: int, row, seen: set[Cell]):
        self.x, self.row, self.seen = x, row, seen

    def __getitem__(self, y: int):
        self.seen.add((self.x, y))
        return self.row[y]

    def __len__(self) -> int:
        return len(self.row)


class _Rows:
    def __init__(self, plus, seen: set[Cell]):
        self.rows = [_Row(x, row, seen) for x, row in enumerate(plus)]

    def __getitem__(self, x: int) -> _Row:
        return self.rows[x]

    def __len__(self) -> int:
        return len(self.rows)


class _RecordingTable:
    """Duck-typed stand-in for :class:`ImplicationTable` that logs cell reads."""

    def __init__(self, T: ImplicationTable, seen: set[Cell]):
        self.T, self.seen = T, seen
        self.size, self.zero, self.kind = T.size, T.zero, T.kind

    def cell(self, x: int, y: int):
        self.seen.add((x, y))
        return self.T.cell(x, y)

    @property
    def one(self):
        return self.cell(self.zero, self.zero)

    @property
    def single_valued(self) -> bool:
        return self.T.single_valued


def _replayed(rep, v: Violation) -> bool:
    return any(w.clause == v.clause and w.witness == v.witness for w in rep.violations)


def effect_cells_read(candidate, v: Violation) -> set[Cell] | None:
    """Cells of ``+`` read when replaying ``v``; ``None`` if it does not reproduce."""
    n, plus, comp, zero, one = raw_tables(candidate)
    seen: set[Cell] = set()
    rep = effect_axiom_report(n, _Rows(plus, seen), comp, zero, one, at=v.witness)
    return seen if _replayed(rep, v) else None


def implication_cells_read(T: ImplicationTable, v: Violation, mode: str = LEIA) -> set[Cell] | None:
    """Cells of ``->`` read when replaying ``v``; ``None`` if it does not reproduce."""
    if mode not in (LEIA, EIA):
        raise ValueError(f"unknown mode {mode!r}")
    seen: set[Cell] = set()
    rep = validate_implication_axioms(_RecordingTable(T, seen), mode, at=v.witness)
    return seen if _replayed(rep, v) else None


def mutate_cell(T: ImplicationTable, x: int, y: int, value) -> ImplicationTable:
    """Copy of ``T`` with the single cell ``(x, y)`` replaced."""
    imp = [list(row) for row in T.imp]
    imp[x][y] = elemset(value if isinstance(value, (list, tuple, set, frozenset)) else [value])
    return ImplicationTable(T.size, imp, T.zero, T.kind)
