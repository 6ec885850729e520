"""The shipped derivation corpus.

Object variables ``p, q, r`` stand for the metavariables of each derived
law.  Biconditional laws are split into two fixtures (suffixes ``1``/``2``).
The transitivity step used throughout is inlined as Sf followed by MP, so
only closed fixtures are ever cited as lemmas.
"""

from __future__ import annotations

import json
from functools import lru_cache
from pathlib import Path

from ..terms import Term, format_term, parse_term, substitute
from .checker import Axiom, Derivation, Hypothesis, Lemma, ProofLine, Rule, freeze_subst
from .schemas import RULES, apply_rule, match, schema_instances


def _t(x: str | Term) -> Term:
    return parse_term(x) if isinstance(x, str) else x


class ProofBuilder:
    def __init__(self, ident: str, system: str, hypotheses=(), lemmas: dict[str, Derivation] | None = None):
        self.id = ident
        self.system = system
        self.hypotheses = tuple(_t(h) for h in hypotheses)
        self.lines: list[ProofLine] = []
        self.lemmas = lemmas or {}

    def _push(self, formula: Term, just) -> int:
        self.lines.append(ProofLine(formula, just))
        return len(self.lines)

    def formula(self, num: int) -> Term:
        return self.lines[num - 1].formula

    def hyp(self, index: int) -> int:
        return self._push(self.hypotheses[index], Hypothesis(index))

    def ax(self, schema: str, direction: int = 0, **subst) -> int:
        s = {k: _t(v) for k, v in subst.items()}
        return self._push(schema_instances(schema, s)[direction], Axiom(schema, freeze_subst(s)))

    def rule(self, name: str, *premises: int, **subst) -> int:
        s = {k: _t(v) for k, v in subst.items()}
        concl = apply_rule(name, [self.formula(p) for p in premises], s)
        # record the full substitution so the line does not rely on matching
        full = dict(s)
        for pat, p in zip(RULES[name][0], premises):
            match(pat, self.formula(p), full)
        return self._push(concl, Rule(name, tuple(premises), freeze_subst(full)))

    def lemma(self, fixture: str, **subst) -> int:
        s = {k: _t(v) for k, v in subst.items()}
        concl = substitute(self.lemmas[fixture].conclusion, s)
        return self._push(concl, Lemma(fixture, freeze_subst(s)))

    def chain(self, first: int, second: int) -> int:
        """From ``a -> b`` (line ``first``) and ``b -> c`` (line ``second``) get ``a -> c``."""
        c = self.formula(second).right
        step = self.rule("Sf", first, chi=c)
        return self.rule("MP", second, step)

    def build(self) -> Derivation:
        return Derivation(self.system, self.hypotheses, tuple(self.lines), self.lines[-1].formula, self.id)


def _contraposition_converse(b: ProofBuilder, imp_line: int, dneg) -> int:
    """From ``a -> c`` derive ``(c -> a) -> (~a -> ~c)``.

    ``dneg(t, direction)`` must push ``t -> ~~t`` (0) or ``~~t -> t`` (1).
    """
    ac = b.formula(imp_line)
    a, c = ac.left, ac.right
    neg_step = b.rule("Sf", imp_line, chi="0")  # ~c -> ~a
    r1 = b.rule("R1", neg_step)  # (~~c -> ~~a) -> (~a -> ~c)
    dn_c = dneg(c, 1)  # ~~c -> c
    sf = b.rule("Sf", dn_c, chi=a)  # (c -> a) -> (~~c -> a)
    a_dn = dneg(a, 0)
    dn_a = dneg(a, 1)
    wpf = b.rule("WPf", a_dn, dn_a, chi=b.formula(dn_c).left)  # (~~c -> a) -> (~~c -> ~~a)
    both = b.chain(sf, wpf)
    return b.chain(both, r1)


def _system_a() -> dict[str, Derivation]:
    fx: dict[str, Derivation] = {}

    def add(b: ProofBuilder):
        fx[b.id] = b.build()

    def new(ident, hyps=()):
        return ProofBuilder(ident, "A", hyps, fx)

    b = new("th9a", ["p -> q", "q -> r"])
    h1, h2 = b.hyp(0), b.hyp(1)
    b.rule("MP", h2, b.rule("Sf", h1, chi="r"))
    add(b)

    b = new("th9b")
    l1 = b.ax("A1", phi="1", psi="p")
    l2 = b.ax("A3", phi="0")
    b.rule("MP", l2, l1)
    add(b)

    b = new("th9c-aux")
    l1 = b.ax("A1", phi="q", psi="p -> q")
    l2 = b.ax("A1", phi="p", psi="q")
    l3 = b.rule("Sf", l2, chi="p")
    l4 = b.ax("A2", phi="p", psi="q")
    l5 = b.rule("Sf", l4, chi="p -> p")
    l6 = b.rule("MP", l3, l5)
    b.chain(l1, l6)
    add(b)

    b = new("th9c")
    l1 = b.ax("A3", phi="0")
    l2 = b.lemma("th9c-aux", q="1", p="p")
    b.rule("MP", l1, l2)
    add(b)

    b = new("th9d")
    l1 = b.ax("A1", phi="q", psi="p -> q")
    l2 = b.ax("A2", phi="p", psi="q")
    b.chain(l1, l2)
    add(b)

    b = new("th9e1")
    l1 = b.ax("A2", phi="p", psi="0")
    l2 = b.lemma("th9d", q="0 -> p", p="p")
    l3 = b.ax("A3", phi="p")
    l4 = b.rule("MP", l3, l2)
    b.chain(l1, l4)
    add(b)

    b = new("th9e2")
    b.lemma("th9d", q="p", p="0")
    add(b)

    def dneg_a(builder):
        def push(t, direction):
            return builder.lemma("th9e2" if direction == 0 else "th9e1", p=t)

        return push

    b = new("th9f1", ["p -> q"])
    b.rule("R1", b.hyp(0))
    add(b)

    b = new("th9f2", ["p -> q"])
    _contraposition_converse(b, b.hyp(0), dneg_a(b))
    add(b)

    b = new("th9g1")
    b.ax("A1", phi="q", psi="p -> q")
    add(b)
    b = new("th9g2")
    b.ax("A2", phi="p", psi="q")
    add(b)
    b = new("th9g3")
    b.ax("A2", phi="q", psi="p")
    add(b)

    b = new("th9h", ["p -> q", "r -> q"])
    l1 = b.hyp(0)
    l2 = b.rule("Sf", l1, chi="r")
    l3 = b.rule("Sf", l2, chi="r")
    l4 = b.ax("A2", phi="q", psi="r")
    l5 = b.hyp(1)
    l6 = b.lemma("th9d", q="r -> q", p="q")
    l7 = b.rule("MP", l5, l6)
    l8 = b.chain(l3, l4)
    b.chain(l8, l7)
    add(b)

    b = new("th9i1")
    b.lemma("th9d", q="p -> q", p="q")
    add(b)

    b = new("th9i2")
    l1 = b.ax("A2", phi="p -> q", psi="q")
    l2 = b.ax("A1", phi="q", psi="p")
    l3 = b.lemma("th9d", q="q -> (p -> q)", p="p -> q")
    l4 = b.rule("MP", l2, l3)
    b.chain(l1, l4)
    add(b)

    # J = q \/ p = (q -> p) -> p
    b = new("th9j1")
    i2 = b.lemma("th9i2", p="q", q="p")  # (J -> p) -> (q -> p)
    up = b.ax("A1", phi="p", psi="q -> p")  # p -> J
    f1 = b.rule("R1", up)  # (~p -> ~J) -> (J -> p)
    b.chain(f1, i2)
    add(b)

    b = new("th9j2")
    i1 = b.lemma("th9i1", p="q", q="p")  # (q -> p) -> (J -> p)
    up = b.ax("A1", phi="p", psi="q -> p")
    f2 = _contraposition_converse(b, up, dneg_a(b))  # (J -> p) -> (~p -> ~J)
    b.chain(i1, f2)
    add(b)
    return fx


def _system_b() -> dict[str, Derivation]:
    fx: dict[str, Derivation] = {}

    def add(b: ProofBuilder):
        fx[b.id] = b.build()

    def new(ident, hyps=()):
        return ProofBuilder(ident, "B", hyps, fx)

    b = new("sec6a", ["p -> q", "q -> r"])
    h1, h2 = b.hyp(0), b.hyp(1)
    b.rule("MP", h2, b.rule("Sf", h1, chi="r"))
    add(b)

    b = new("sec6b")
    l1 = b.ax("B1", phi="1", psi="p")
    l2 = b.ax("B4", phi="0")
    b.rule("MP", l2, l1)
    add(b)

    b = new("sec6c1")
    b.ax("B3", 1, phi="p")
    add(b)
    b = new("sec6c2")
    b.ax("B3", 0, phi="p")
    add(b)

    b = new("sec6d1", ["p -> q"])
    b.rule("R1", b.hyp(0))
    add(b)

    b = new("sec6d2", ["p -> q"])

    def dneg_b(t, direction):
        return b.ax("B3", direction, phi=t)

    _contraposition_converse(b, b.hyp(0), dneg_b)
    add(b)
    return fx


@lru_cache(maxsize=1)
def _corpus() -> tuple[tuple[str, Derivation], ...]:
    return tuple({**_system_a(), **_system_b()}.items())


def corpus() -> dict[str, Derivation]:
    """Fixture id -> derivation, system A fixtures first."""
    return dict(_corpus())


def statements() -> dict[str, str]:
    """Human-readable statement of every fixture, ``hyps |- conclusion``."""
    out = {}
    for name, d in corpus().items():
        hyps = ", ".join(format_term(h) for h in d.hypotheses)
        out[name] = f"{hyps} |- {format_term(d.conclusion)}".strip()
    return out


def uses_lemmas(d: Derivation) -> bool:
    return any(isinstance(ln.just, Lemma) for ln in d.lines)


def write_corpus(directory: str | Path) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, d in corpus().items():
        path = directory / f"{name}.prf.json"
        path.write_text(json.dumps(d.to_dict(), indent=2) + "\n")
        paths.append(path)
    return paths
