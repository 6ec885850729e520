"""Identities, quasi-identities and equational consequence over finite tables.

Checking is exhaustive over assignments (``n ** v`` for ``v`` variables) and
uses set semantics throughout: ``s ≈ t`` holds under an assignment iff both
sides evaluate to the same value set.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from itertools import product

from .implication import ImplicationTable
from .terms import ONE, Imp, ParseError, Term, evaluate_term, format_term, parse_term, variables


class UnknownSuite(KeyError):
    pass


@dataclass(frozen=True)
class Identity:
    lhs: Term
    rhs: Term

    def __str__(self) -> str:
        return f"{format_term(self.lhs)} == {format_term(self.rhs)}"


@dataclass(frozen=True)
class QuasiIdentity:
    premises: tuple[Identity, ...]
    conclusion: Identity
    label: str = field(default="", compare=False)

    def __str__(self) -> str:
        if not self.premises:
            return str(self.conclusion)
        return ", ".join(map(str, self.premises)) + f" => {self.conclusion}"


@dataclass
class Countermodel:
    assignment: dict[str, int]
    lhs: tuple[int, ...]
    rhs: tuple[int, ...]
    model_index: int | None = None

    def describe(self, names: Sequence[str] | None = None) -> str:
        lab = (lambda v: names[v]) if names else str
        asg = ", ".join(f"{k}={lab(v)}" for k, v in self.assignment.items())
        fmt = lambda s: "{" + ",".join(lab(v) for v in s) + "}"  # noqa: E731
        where = f"model #{self.model_index}: " if self.model_index is not None else ""
        return f"{where}{asg} gives {fmt(self.lhs)} vs {fmt(self.rhs)}"


def _split_top(text: str, sep: str) -> list[str]:
    parts, depth, start, i = [], 0, 0, 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and text.startswith(sep, i):
            parts.append(text[start:i])
            start = i + len(sep)
            i = start
            continue
        i += 1
    parts.append(text[start:])
    return parts


def parse_identity(text: str) -> Identity:
    norm = text.replace("≈", "==")
    sides = _split_top(norm, "==")
    if len(sides) != 2:
        raise ParseError(text, len(text) if len(sides) < 2 else 0, {"=="})
    return Identity(parse_term(sides[0]), parse_term(sides[1]))


def parse_quasi(text: str, label: str = "") -> QuasiIdentity:
    """``p1 == q1, ..., pk == qk => t1 == t2`` (premises optional)."""
    chunks = _split_top(text, "=>")
    if len(chunks) > 2:
        raise ParseError(text, 0, {"at most one '=>'"})
    premises = ()
    if len(chunks) == 2:
        premises = tuple(parse_identity(p) for p in _split_top(chunks[0], ",") if p.strip())
    return QuasiIdentity(premises, parse_identity(chunks[-1]), label)


def parse_identity_file(text: str) -> list[QuasiIdentity]:
    out = []
    for n, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(parse_quasi(line, label=f"line {n}"))
    return out


def _vars_of(ids: Sequence[Identity]) -> list[str]:
    seen: dict[str, None] = {}
    for ident in ids:
        for t in (ident.lhs, ident.rhs):
            for v in variables(t):
                seen.setdefault(v)
    return list(seen)


def _assignments(n: int, names: list[str]):
    for values in product(range(n), repeat=len(names)):
        yield dict(zip(names, values))


def _holds(T, ident: Identity, asg) -> tuple[bool, tuple, tuple]:
    a = evaluate_term(ident.lhs, T, asg)
    b = evaluate_term(ident.rhs, T, asg)
    return a == b, a, b


def check_quasiidentity(T: ImplicationTable, q: QuasiIdentity) -> Countermodel | None:
    """``None`` when ``q`` holds in ``T``, else the first failing assignment."""
    names = _vars_of([*q.premises, q.conclusion])
    for asg in _assignments(T.size, names):
        if all(_holds(T, p, asg)[0] for p in q.premises):
            ok, a, b = _holds(T, q.conclusion, asg)
            if not ok:
                return Countermodel(asg, a, b)
    return None


def check_identity(T: ImplicationTable, ident: Identity) -> Countermodel | None:
    return check_quasiidentity(T, QuasiIdentity((), ident))


def semantic_consequence(
    K: Sequence[ImplicationTable], sigma: Sequence[Identity], goal: Identity
) -> Countermodel | None:
    """Does ``goal`` follow from ``sigma`` in every member of ``K``?"""
    if not K:
        raise ValueError("model class must be nonempty")
    q = QuasiIdentity(tuple(sigma), goal)
    for i, T in enumerate(K):
        cm = check_quasiidentity(T, q)
        if cm is not None:
            cm.model_index = i
            return cm
    return None


def defining_identity(phi: Term, mode: str = "one") -> Identity:
    """Translate a formula to an identity: ``phi ≈ 1`` or ``phi ≈ phi -> phi``."""
    if mode == "one":
        return Identity(phi, ONE)
    if mode == "delta":
        return Identity(phi, Imp(phi, phi))
    raise ValueError(f"unknown translation {mode!r}")


def translate(hypotheses: Sequence[Term], conclusion: Term, mode: str = "one"):
    return [defining_identity(h, mode) for h in hypotheses], defining_identity(conclusion, mode)


def check_algebraization(T: ImplicationTable) -> list[str]:
    """Instance checks of the algebraization data on one table.

    Returns failure descriptions: the two defining translations must agree
    on every element, and ``p ≈ q`` must be equivalent to
    ``{p -> q ≈ 1, q -> p ≈ 1}``.
    """
    fails = []
    p = parse_term("p")
    for a in range(T.size):
        one_way = evaluate_term(defining_identity(p, "one").rhs, T, {"p": a}) == (a,)
        delta = evaluate_term(defining_identity(p, "delta").rhs, T, {"p": a}) == (a,)
        if one_way != delta:
            fails.append(f"translations disagree at p={a}")
    forward = [parse_quasi("p == q => p -> q == 1"), parse_quasi("p == q => q -> p == 1")]
    backward = parse_quasi("p -> q == 1, q -> p == 1 => p == q")
    for q in [*forward, backward]:
        cm = check_quasiidentity(T, q)
        if cm is not None:
            fails.append(f"{q}: {cm.describe()}")
    return fails


def _suite(prefix: str, rows: list[tuple[str, str]]) -> list[QuasiIdentity]:
    return [parse_quasi(text, label=f"{prefix}({num})") for num, text in rows]


_HYP_LEFT = "x -> ~y == 1, (~x -> y) -> ~z == 1"
_HYP_RIGHT = "y -> ~z == 1, x -> ~(~y -> z) == 1"

_SUITES: dict[str, list[tuple[str, str]]] = {
    "TH10": [
        ("1", "x -> (y -> x) == 1"),
        ("2", "((x -> y) -> y) -> ((y -> x) -> x) == 1"),
        ("3", "0 -> x == 1"),
        ("4", "x -> x == 1"),
        ("5", "x == 1, x -> y == 1 => y == 1"),
        ("6", "x -> y == 1 => (y -> z) -> (x -> z) == 1"),
        ("7", "x -> y == 1 => (~x -> ~y) -> (y -> x) == 1"),
        ("8", "x -> y == 1, y -> x == 1 => x == y"),
        ("9", f"{_HYP_LEFT} => (~(~x -> y) -> z) -> (~x -> (~y -> z)) == 1"),
    ],
    "SEC6": [
        ("1", "x -> (y -> x) == 1"),
        ("2a", "x -> ~~x == 1"),
        ("2b", "~~x -> x == 1"),
        ("3", "0 -> x == 1"),
        ("4", "x -> x == 1"),
        ("5", "x == 1, x -> y == 1 => y == 1"),
        ("6", "x -> y == 1 => (y -> z) -> (x -> z) == 1"),
        ("7", "x -> y == 1 => (~x -> ~y) -> (y -> x) == 1"),
        ("8", "x -> y == 1, y -> x == 1 => x == y"),
        ("9", f"{_HYP_LEFT} => (~(~x -> y) -> z) -> (~x -> (~y -> z)) == 1"),
        ("10", "x -> y == 1 => (y -> x) -> x == y"),
    ],
    "TH4": [
        ("i", "x -> 0 == ~x"),
        ("ii", "1 -> x == x"),
        ("iii", "x -> (y -> x) == 1"),
        ("iv", "(x -> y) -> y == x \\/ y"),
        ("v", "((x -> y) -> y) -> y == x -> y"),
        ("vi", "x -> ((x -> y) -> y) == 1"),
        ("vii", "y -> ((x -> y) -> y) == 1"),
        ("viii", "~y -> ~((x -> y) -> y) == x -> y"),
    ],
}

_LATTICE_ONLY = [
    ("vi", "x -> ((x -> y) -> y) == 1"),
    ("vii", "y -> ((x -> y) -> y) == 1"),
    ("viii", "x -> z == 1, y -> z == 1 => ((x -> y) -> y) -> z == 1"),
]
_SHARED_HEAD = [
    ("i.a", "0 -> x == 1"),
    ("i.b", "x -> x == 1"),
    ("i.c", "x -> 1 == 1"),
    ("ii", "x -> y == 1, y -> x == 1 => x == y"),
    ("iii", "x -> y == 1, y -> z == 1 => x -> z == 1"),
    ("iv", "x -> y == 1 => ~y -> ~x == 1"),
    ("v", "~~x == x"),
]


def _exchange(num: str) -> list[tuple[str, str]]:
    return [
        (f"{num}.a", f"{_HYP_LEFT} => y -> ~z == 1"),
        (f"{num}.b", f"{_HYP_LEFT} => x -> ~(~y -> z) == 1"),
        (f"{num}.c", f"{_HYP_RIGHT} => x -> ~y == 1"),
        (f"{num}.d", f"{_HYP_RIGHT} => (~x -> y) -> ~z == 1"),
        (f"{num}.e", f"{_HYP_LEFT} => ~(~x -> y) -> z == ~x -> (~y -> z)"),
        (f"{num}.f", f"{_HYP_RIGHT} => ~(~x -> y) -> z == ~x -> (~y -> z)"),
    ]


_SUITES["DEF31"] = [
    *_SHARED_HEAD,
    *_LATTICE_ONLY,
    ("ix", "x -> y == 1 => y -> x == ~x -> ~y"),
    *_exchange("x"),
    ("xi", "~y -> ~((x -> y) -> y) == x -> y"),
    ("xii", "x -> (y -> x) == 1"),
]
_SUITES["DEF52"] = [
    *_SHARED_HEAD,
    ("vi", "x -> y == 1 => y -> x == ~x -> ~y"),
    *_exchange("vii"),
    ("viii", "x -> (y -> x) == 1"),
]

SUITE_NAMES = tuple(_SUITES)


def builtin_suite(name: str) -> list[QuasiIdentity]:
    key = name.upper()
    if key not in _SUITES:
        raise UnknownSuite(name)
    return _suite(key.lower(), _SUITES[key])


def run_suite(T: ImplicationTable, suite: Sequence[QuasiIdentity]) -> list[tuple[QuasiIdentity, Countermodel | None]]:
    return [(q, check_quasiidentity(T, q)) for q in suite]
