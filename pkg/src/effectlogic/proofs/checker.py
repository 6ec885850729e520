"""Derivations and the line checker.

Line numbers are 1-based; a hypothesis justification indexes the
derivation's hypothesis list from 0.  Every justification carries its
substitution explicitly; the checker never unifies.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field

from ..terms import Term, format_term, parse_term, substitute
from .schemas import (
    SYSTEMS,
    MissingSchemaVariable,
    PremiseMismatch,
    UnknownJustification,
    apply_rule,
    schema_instances,
)

Subst = Mapping[str, Term]


class MalformedDerivation(ValueError):
    pass


@dataclass(frozen=True)
class Hypothesis:
    index: int


@dataclass(frozen=True)
class Axiom:
    schema: str
    subst: tuple[tuple[str, Term], ...]


@dataclass(frozen=True)
class Rule:
    rule: str
    premises: tuple[int, ...]
    subst: tuple[tuple[str, Term], ...] = ()


@dataclass(frozen=True)
class Lemma:
    fixture: str
    subst: tuple[tuple[str, Term], ...] = ()


Justification = Hypothesis | Axiom | Rule | Lemma


def freeze_subst(subst: Subst | None) -> tuple[tuple[str, Term], ...]:
    return tuple(sorted((subst or {}).items()))


@dataclass(frozen=True)
class ProofLine:
    formula: Term
    just: Justification


@dataclass(frozen=True)
class Derivation:
    system: str
    hypotheses: tuple[Term, ...]
    lines: tuple[ProofLine, ...]
    conclusion: Term
    id: str = field(default="", compare=False)

    @property
    def closed(self) -> bool:
        return not self.hypotheses

    def to_dict(self) -> dict:
        doc = {
            "system": self.system,
            "hypotheses": [format_term(h) for h in self.hypotheses],
            "lines": [{"formula": format_term(ln.formula), "just": _just_to_dict(ln.just)} for ln in self.lines],
            "conclusion": format_term(self.conclusion),
        }
        if self.id:
            doc = {"id": self.id, **doc}
        return doc

    @classmethod
    def from_dict(cls, doc: Mapping) -> Derivation:
        try:
            return cls(
                system=doc["system"],
                hypotheses=tuple(parse_term(h) for h in doc.get("hypotheses", [])),
                lines=tuple(
                    ProofLine(parse_term(ln["formula"]), _just_from_dict(ln["just"])) for ln in doc["lines"]
                ),
                conclusion=parse_term(doc["conclusion"]),
                id=doc.get("id", ""),
            )
        except (KeyError, TypeError) as exc:
            raise MalformedDerivation(f"bad derivation document: {exc!r}") from None


def _subst_to_dict(subst) -> dict[str, str]:
    return {k: format_term(v) for k, v in subst}


def _subst_from_dict(doc) -> tuple[tuple[str, Term], ...]:
    return freeze_subst({k: parse_term(v) for k, v in (doc or {}).items()})


def _just_to_dict(j: Justification) -> dict:
    if isinstance(j, Hypothesis):
        return {"kind": "hyp", "index": j.index}
    if isinstance(j, Axiom):
        return {"kind": "axiom", "schema": j.schema, "subst": _subst_to_dict(j.subst)}
    if isinstance(j, Rule):
        return {"kind": "rule", "rule": j.rule, "premises": list(j.premises), "subst": _subst_to_dict(j.subst)}
    return {"kind": "lemma", "fixture": j.fixture, "subst": _subst_to_dict(j.subst)}


def _just_from_dict(doc: Mapping) -> Justification:
    kind = doc["kind"]
    if kind == "hyp":
        return Hypothesis(int(doc["index"]))
    if kind == "axiom":
        return Axiom(doc["schema"], _subst_from_dict(doc.get("subst")))
    if kind == "rule":
        return Rule(doc["rule"], tuple(int(p) for p in doc["premises"]), _subst_from_dict(doc.get("subst")))
    if kind == "lemma":
        return Lemma(doc["fixture"], _subst_from_dict(doc.get("subst")))
    raise MalformedDerivation(f"unknown justification kind {kind!r}")


@dataclass(frozen=True)
class ProofCheck:
    """``ok`` is the Verified verdict; otherwise ``line``/``reason`` locate the failure."""

    ok: bool
    line: int | None = None
    reason: str = ""

    def __str__(self) -> str:
        return "Verified" if self.ok else f"Invalid at line {self.line}: {self.reason}"


VERIFIED = ProofCheck(True)


class Checker:
    """Checks derivations against a registry of named fixtures used as lemmas."""

    def __init__(self, registry: Mapping[str, Derivation] | None = None):
        self.registry = dict(registry or {})
        self._verdicts: dict[str, ProofCheck] = {}
        self._active: set[str] = set()

    def lemma_status(self, name: str) -> ProofCheck:
        if name in self._verdicts:
            return self._verdicts[name]
        if name in self._active:
            return ProofCheck(False, None, f"circular lemma reference to {name!r}")
        self._active.add(name)
        try:
            verdict = self.check(self.registry[name])
        finally:
            self._active.discard(name)
        self._verdicts[name] = verdict
        return verdict

    def check(self, d: Derivation) -> ProofCheck:
        if d.system not in SYSTEMS:
            return ProofCheck(False, None, f"unknown system {d.system!r}")
        if not d.lines:
            return ProofCheck(False, None, "derivation has no lines")
        for num, line in enumerate(d.lines, 1):
            reason = self._check_line(d, num, line)
            if reason:
                return ProofCheck(False, num, reason)
        if d.lines[-1].formula != d.conclusion:
            return ProofCheck(False, len(d.lines), "last line is not the stated conclusion")
        return VERIFIED

    def _check_line(self, d: Derivation, num: int, line: ProofLine) -> str:
        j = line.just
        if isinstance(j, Hypothesis):
            if not 0 <= j.index < len(d.hypotheses):
                return f"no hypothesis #{j.index}"
            if d.hypotheses[j.index] != line.formula:
                return f"formula is not hypothesis #{j.index}"
            return ""
        if isinstance(j, Axiom):
            if j.schema not in SYSTEMS[d.system]:
                return f"{j.schema} is not an axiom of system {d.system}"
            try:
                instances = schema_instances(j.schema, dict(j.subst))
            except (MissingSchemaVariable, UnknownJustification) as exc:
                return str(exc)
            if line.formula not in instances:
                return f"formula is not the {j.schema} instance under the given substitution"
            return ""
        if isinstance(j, Rule):
            bad = [p for p in j.premises if not 1 <= p < num]
            if bad:
                return f"premise line {bad[0]} does not precede line {num}"
            try:
                concl = apply_rule(j.rule, [d.lines[p - 1].formula for p in j.premises], dict(j.subst))
            except PremiseMismatch as exc:
                return f"PremiseMismatch (premise {exc.index + 1}): {exc}"
            except (MissingSchemaVariable, UnknownJustification) as exc:
                return str(exc)
            if concl != line.formula:
                return f"{j.rule} yields {format_term(concl)}, not this formula"
            return ""
        if isinstance(j, Lemma):
            lemma = self.registry.get(j.fixture)
            if lemma is None:
                return f"unknown lemma {j.fixture!r}"
            if lemma.hypotheses:
                return f"lemma {j.fixture!r} has hypotheses; only closed fixtures may be cited"
            if lemma.system != d.system:
                return f"lemma {j.fixture!r} belongs to system {lemma.system}"
            status = self.lemma_status(j.fixture)
            if not status.ok:
                return f"lemma {j.fixture!r} does not check ({status})"
            if substitute(lemma.conclusion, dict(j.subst)) != line.formula:
                return f"formula is not an instance of lemma {j.fixture!r}"
            return ""
        return f"unknown justification {j!r}"


def check_derivation(d: Derivation, registry: Mapping[str, Derivation] | None = None) -> ProofCheck:
    """Verify every line of ``d``; lemma lines resolve through ``registry``.

    Without a registry the shipped fixture corpus is used.
    """
    if registry is None:
        from .corpus import corpus

        registry = corpus()
    return Checker(registry).check(d)
