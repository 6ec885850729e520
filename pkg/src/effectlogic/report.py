"""Clause-by-clause check reports shared by every validator."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Violation:
    clause: str
    witness: dict[str, int]
    detail: str = ""

    def __str__(self) -> str:
        wit = ", ".join(f"{k}={v}" for k, v in self.witness.items())
        text = f"{self.clause}: fails at {wit}" if wit else f"{self.clause}: fails"
        return f"{text} ({self.detail})" if self.detail else text


@dataclass
class Report:
    """Outcome of checking a list of named clauses.

    Every clause in ``clauses`` was evaluated; a clause passes iff no
    violation carries its tag.  ``notes`` holds per-clause remarks such as
    "vacuous on finite carriers".
    """

    subject: str
    clauses: list[str] = field(default_factory=list)
    violations: list[Violation] = field(default_factory=list)
    notes: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, clause: str, detail: str = "", **witness: int) -> None:
        self.violations.append(Violation(clause, dict(witness), detail))

    def passed(self, clause: str) -> bool:
        return all(v.clause != clause for v in self.violations)

    def failures(self, clause: str | None = None) -> list[Violation]:
        if clause is None:
            return list(self.violations)
        return [v for v in self.violations if v.clause == clause]

    def extend(self, other: Report, prefix: str = "") -> None:
        self.clauses.extend(prefix + c for c in other.clauses)
        for v in other.violations:
            self.violations.append(Violation(prefix + v.clause, v.witness, v.detail))
        self.notes.update({prefix + k: v for k, v in other.notes.items()})

    def lines(self, max_witnesses: int = 3) -> list[str]:
        out = []
        for clause in self.clauses:
            bad = self.failures(clause)
            if not bad:
                note = self.notes.get(clause)
                out.append(f"{clause}: pass" + (f" ({note})" if note else ""))
            else:
                out.append(f"{clause}: FAIL ({len(bad)} witness(es))")
                out.extend(f"    {v}" for v in bad[:max_witnesses])
        # violations under tags that were not pre-registered (e.g. malformed input)
        for v in self.violations:
            if v.clause not in self.clauses:
                out.append(f"{v}")
        return out

    def __str__(self) -> str:
        head = f"{self.subject}: {'ok' if self.ok else 'VIOLATIONS'}"
        return "\n".join([head, *("  " + line for line in self.lines())])
