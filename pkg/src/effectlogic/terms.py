"""Terms of the ``{->, 0}`` language: syntax tree, parser, printer, evaluator.

Grammar (``->`` right-associative and loosest, ``\\/`` left-associative)::

    expr   := join ( "->" expr )?
    join   := unary ( "\\/" unary )*
    unary  := "~" unary | atom
    atom   := IDENT | "0" | "1" | "(" expr ")"

Sugar is expanded while parsing: ``~t`` is ``t -> 0``, ``1`` is ``0 -> 0``
and ``s \\/ t`` is ``(s -> t) -> t``.
"""

from __future__ import annotations

import re
from collections.abc import Mapping
from dataclasses import dataclass

from .implication import ImplicationTable, imp_sets


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class Imp:
    left: Term
    right: Term


Term = Var | Zero | Imp

ZERO = Zero()
ONE = Imp(ZERO, ZERO)


def neg(t: Term) -> Term:
    return Imp(t, ZERO)


def join(s: Term, t: Term) -> Term:
    return Imp(Imp(s, t), t)


class ParseError(ValueError):
    def __init__(self, text: str, pos: int, expected: set[str]):
        self.text = text
        self.pos = pos
        self.expected = frozenset(expected)
        found = text[pos : pos + 8] or "end of input"
        super().__init__(f"at position {pos}: expected one of {sorted(self.expected)}, found {found!r}")


class UnboundVariable(KeyError):
    pass


_TOKEN = re.compile(r"\s*(?:(?P<imp>->)|(?P<join>\\/)|(?P<neg>~)|(?P<lp>\()|(?P<rp>\))"
                    r"|(?P<const>[01](?![A-Za-z0-9_']))|(?P<ident>[A-Za-z_][A-Za-z0-9_']*))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(text, pos, {"->", "\\/", "~", "(", ")", "0", "1", "identifier"})
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind: str, expected: set[str]):
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(self.text, tok[2], expected)
        self.i += 1
        return tok

    def expr(self) -> Term:
        left = self.join()
        if self.peek()[0] == "imp":
            self.i += 1
            return Imp(left, self.expr())
        return left

    def join(self) -> Term:
        t = self.unary()
        while self.peek()[0] == "join":
            self.i += 1
            t = join(t, self.unary())
        return t

    def unary(self) -> Term:
        if self.peek()[0] == "neg":
            self.i += 1
            return neg(self.unary())
        return self.atom()

    def atom(self) -> Term:
        kind, val, pos = self.peek()
        if kind == "ident":
            self.i += 1
            return Var(val)
        if kind == "const":
            self.i += 1
            return ZERO if val == "0" else ONE
        if kind == "lp":
            self.i += 1
            t = self.expr()
            self.take("rp", {")", "->", "\\/"})
            return t
        raise ParseError(self.text, pos, {"identifier", "0", "1", "~", "("})


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.expr()
    tok = p.peek()
    if tok[0] != "end":
        raise ParseError(text, tok[2], {"->", "\\/", "end of input"})
    return t


def format_term(t: Term) -> str:
    """Print with ``~``/``1`` sugar and minimal parentheses; re-parses to ``t``."""
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Zero):
        return "0"
    if t == ONE:
        return "1"
    if t.right == ZERO:
        inner = format_term(t.left)
        return "~" + (inner if _is_atomic(t.left) else f"({inner})")
    left = format_term(t.left)
    if isinstance(t.left, Imp) and not _is_atomic(t.left):
        left = f"({left})"
    return f"{left} -> {format_term(t.right)}"


def _is_atomic(t: Term) -> bool:
    return not isinstance(t, Imp) or t == ONE or t.right == ZERO


def variables(t: Term) -> list[str]:
    """Variable names in order of first occurrence."""
    seen: dict[str, None] = {}
    stack = [t]
    while stack:
        u = stack.pop()
        if isinstance(u, Var):
            seen.setdefault(u.name)
        elif isinstance(u, Imp):
            stack.append(u.right)
            stack.append(u.left)
    return list(seen)


def depth(t: Term) -> int:
    if isinstance(t, Imp):
        return 1 + max(depth(t.left), depth(t.right))
    return 0


def substitute(t: Term, subst: Mapping[str, Term]) -> Term:
    """Simultaneous substitution of terms for variables."""
    if isinstance(t, Var):
        return subst.get(t.name, t)
    if isinstance(t, Imp):
        return Imp(substitute(t.left, subst), substitute(t.right, subst))
    return t


def evaluate_term(t: Term, T: ImplicationTable, asg: Mapping[str, int]) -> tuple[int, ...]:
    """Value set of ``t``; ``s -> u`` is the union of cells over both value sets."""
    if isinstance(t, Zero):
        return (T.zero,)
    if isinstance(t, Var):
        try:
            return (asg[t.name],)
        except KeyError:
            raise UnboundVariable(t.name) from None
    return imp_sets(T, evaluate_term(t.left, T, asg), evaluate_term(t.right, T, asg))


def evaluate_single(t: Term, T: ImplicationTable, asg: Mapping[str, int]) -> int:
    """Naive recursive evaluation on a single-valued table."""
    if isinstance(t, Zero):
        return T.zero
    if isinstance(t, Var):
        return asg[t.name]
    return T.value(evaluate_single(t.left, T, asg), evaluate_single(t.right, T, asg))

