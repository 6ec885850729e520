"""Census of small effect algebras.

All counts here come from running the enumerator; none are quoted from
elsewhere, and the text report says so.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

from ..algebra import EffectAlgebra
from ..equational import SUITE_NAMES, builtin_suite, run_suite
from ..implication import natural_implication_table, sasaki_implication_table, set_implication_table
from ..transforms import EIA, check_identity_11, round_trip_check, validate_implication_axioms
from .generate import DEFAULT_CAP, CapExceeded, canonicalize, enumerate_effect_algebras

NOT_FOUND = "NotFoundUpToCap"


@dataclass
class SizeEntry:
    size: int
    total: int
    lattice: int
    non_lattice: int
    max_cell: int
    sasaki_differs: int = 0


@dataclass
class Finding:
    """Checks that fail on one non-lattice algebra under set semantics."""

    size: int
    code: str
    failing: list[str]


@dataclass
class CensusReport:
    cap: int
    sizes: list[SizeEntry]
    minimal_non_lattice_size: int | str
    findings: list[Finding] = field(default_factory=list)

    def entry(self, n: int) -> SizeEntry:
        return next(e for e in self.sizes if e.size == n)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_text(self) -> str:
        out = [
            f"census up to size {self.cap} (all counts computed by this enumerator, up to isomorphism)",
            f"{'size':>4} {'total':>6} {'lattice':>8} {'non-lat':>8} {'max|x->y|':>10} {'sasaki!=nat':>12}",
        ]
        for e in self.sizes:
            out.append(
                f"{e.size:>4} {e.total:>6} {e.lattice:>8} {e.non_lattice:>8} {e.max_cell:>10} {e.sasaki_differs:>12}"
            )
        out.append(f"minimal non-lattice size: {self.minimal_non_lattice_size}")
        for f in self.findings:
            shown = ", ".join(f.failing) if f.failing else "none"
            out.append(f"size {f.size} non-lattice {f.code}: failing set-semantics checks: {shown}")
        return "\n".join(out)


def code_name(E: EffectAlgebra) -> str:
    """Short stable file stem derived from the canonical code."""
    return hashlib.sha1(canonicalize(E)).hexdigest()[:16]


def set_semantics_findings(E: EffectAlgebra) -> list[str]:
    """Labels of every shipped check that fails on the set-valued table of ``E``."""
    T = set_implication_table(E)
    failing = []
    for name in SUITE_NAMES:
        for q, cm in run_suite(T, builtin_suite(name)):
            if cm is not None:
                failing.append(q.label)
    for rep in (validate_implication_axioms(T, EIA), check_identity_11(E), round_trip_check(E)):
        failing.extend(v.clause for v in rep.violations if v.clause not in failing)
    return failing


def census(
    cap: int = DEFAULT_CAP,
    jobs: int = 1,
    kernel: str | None = None,
    findings: bool = False,
    limit: int = DEFAULT_CAP,
) -> CensusReport:
    """Per-size statistics for sizes ``2..cap``; ``cap`` above ``limit`` is refused.

    With ``findings`` every non-lattice member is also run through all
    the shipped suites under set semantics and the failures are listed.
    """
    if cap < 2:
        raise ValueError("the census starts at size 2")
    if cap > limit:
        raise CapExceeded(f"cap {cap} exceeds the limit {limit}")
    sizes, found, minimal = [], [], None
    for n in range(2, cap + 1):
        entry = SizeEntry(n, 0, 0, 0, 0)
        for E in enumerate_effect_algebras(n, cap=limit, jobs=jobs, kernel=kernel):
            entry.total += 1
            entry.max_cell = max(entry.max_cell, set_implication_table(E).max_cell_size())
            if E.is_lattice:
                entry.lattice += 1
                if natural_implication_table(E).imp != sasaki_implication_table(E).imp:
                    entry.sasaki_differs += 1
            else:
                entry.non_lattice += 1
                if minimal is None:
                    minimal = n
                if findings:
                    found.append(Finding(n, code_name(E), set_semantics_findings(E)))
        sizes.append(entry)
    return CensusReport(cap, sizes, NOT_FOUND if minimal is None else minimal, found)


def write_algebras(directory: str | Path, algebras) -> list[Path]:
    """Write ``<hash>.ea.json`` files named by canonical code."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for E in algebras:
        path = directory / f"{code_name(E)}.ea.json"
        path.write_text(json.dumps(E.to_dict(), indent=2) + "\n")
        paths.append(path)
    return paths
