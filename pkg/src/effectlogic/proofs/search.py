"""Bounded backward proof search.

Goals may contain metavariables (``Var`` names starting with ``?``, which
the term parser can never produce).  A goal is closed by a hypothesis, by
unifying it with an axiom schema, or by unifying it with a rule conclusion
and recursing on the premises.  Iterative deepening over the number of
proof-tree nodes means the first derivation found is a smallest one, and
the fixed exploration order makes the result deterministic.  Whatever is
found goes through the checker before it is returned.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import count

from ..terms import ZERO, Imp, Term, Var, depth, substitute
from .checker import Axiom, Derivation, Hypothesis, ProofLine, Rule, check_derivation, freeze_subst
from .schemas import AXIOMS, RULES, SYSTEMS, match, schema_vars

# tried in this order; MP last because its premise is unconstrained
_RULE_ORDER = ("Sf", "WPf", "R1", "R2", "MP")


@dataclass(frozen=True)
class Bound:
    max_lines: int = 30
    max_depth: int = 8
    max_nodes: int = 200_000


@dataclass(frozen=True)
class NotFoundWithinBound:
    """No derivation inside the bound; says nothing about derivability."""

    bound: Bound
    reason: str = "search space exhausted"

    def __bool__(self) -> bool:
        return False

    def __str__(self) -> str:
        return f"not found within {self.bound.max_lines} lines / depth {self.bound.max_depth} ({self.reason})"


class _OutOfNodes(Exception):
    pass


def _is_meta(t: Term) -> bool:
    return isinstance(t, Var) and t.name.startswith("?")


def _walk(t: Term, s: dict) -> Term:
    while _is_meta(t) and t.name in s:
        t = s[t.name]
    return t


def _resolve(t: Term, s: dict) -> Term:
    t = _walk(t, s)
    if isinstance(t, Imp):
        return Imp(_resolve(t.left, s), _resolve(t.right, s))
    return t


def _occurs(name: str, t: Term, s: dict) -> bool:
    t = _walk(t, s)
    if _is_meta(t):
        return t.name == name
    if isinstance(t, Imp):
        return _occurs(name, t.left, s) or _occurs(name, t.right, s)
    return False


def unify(a: Term, b: Term, s: dict) -> dict | None:
    """Most general unifier extending ``s`` (a new dict), or ``None``."""
    s = dict(s)
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        x, y = _walk(x, s), _walk(y, s)
        if x == y:
            continue
        if _is_meta(x) or _is_meta(y):
            if not _is_meta(x):
                x, y = y, x
            if _occurs(x.name, y, s):
                return None
            s[x.name] = y
        elif isinstance(x, Imp) and isinstance(y, Imp):
            stack.append((x.right, y.right))
            stack.append((x.left, y.left))
        else:
            return None
    return s


@dataclass
class _Node:
    goal: Term
    kind: str  # "hyp" | "axiom" | "rule"
    name: str | int
    children: tuple[_Node, ...] = ()
    direction: int = 0


class _Search:
    def __init__(self, system: str, hypotheses: Sequence[Term], bound: Bound):
        self.axioms = [(name, k, alt) for name in SYSTEMS[system] for k, alt in enumerate(AXIOMS[name])]
        self.hypotheses = list(hypotheses)
        self.bound = bound
        self.fresh = count()
        self.nodes = 0

    def rename(self, schema: Term, table: dict) -> Term:
        for v in sorted(schema_vars(schema)):
            if v not in table:
                table[v] = Var(f"?{next(self.fresh)}")
        return substitute(schema, table)

    def too_deep(self, t: Term, s: dict) -> bool:
        return depth(_resolve(t, s)) > self.bound.max_depth

    def solve(self, goals: list[Term], s: dict, budget: int):
        """Yield ``(subst, nodes, used)`` closing every goal in order."""
        if not goals:
            yield s, [], 0
            return
        if len(goals) > budget:
            return
        first, rest = goals[0], goals[1:]
        for s1, node, used in self.solve_one(first, s, budget - len(rest)):
            for s2, nodes, used2 in self.solve(rest, s1, budget - used):
                yield s2, [node, *nodes], used + used2

    def solve_one(self, goal: Term, s: dict, budget: int):
        if budget < 1:
            return
        self.nodes += 1
        if self.nodes > self.bound.max_nodes:
            raise _OutOfNodes
        if self.too_deep(goal, s):
            return
        for i, h in enumerate(self.hypotheses):
            s1 = unify(goal, h, s)
            if s1 is not None:
                yield s1, _Node(goal, "hyp", i), 1
        # a bare metavariable matches every axiom; leave it to other goals
        bare = _is_meta(_walk(goal, s))
        if not bare:
            for name, k, alt in self.axioms:
                s1 = unify(goal, self.rename(alt, {}), s)
                if s1 is not None:
                    yield s1, _Node(goal, "axiom", name, direction=k), 1
        if budget < 2:
            return
        for rule in _RULE_ORDER:
            prem, concl = RULES[rule]
            if bare and rule != "MP":
                continue
            table: dict = {}
            s1 = unify(goal, self.rename(concl, table), s)
            if s1 is None:
                continue
            premises = [self.rename(p, table) for p in prem]
            if rule == "MP":
                # the major premise constrains the minor one, so solve it first
                premises = premises[::-1]
            for s2, kids, used in self.solve(premises, s1, budget - 1):
                if rule == "MP":
                    kids = kids[::-1]
                yield s2, _Node(goal, "rule", rule, tuple(kids)), used + 1


def _ground(t: Term, s: dict) -> Term:
    t = _resolve(t, s)
    if _is_meta(t):
        return ZERO
    if isinstance(t, Imp):
        return Imp(_ground(t.left, s), _ground(t.right, s))
    return t


def _linearize(node: _Node, s: dict, lines: list[ProofLine], index: dict[Term, int]) -> int:
    formula = _ground(node.goal, s)
    if formula in index:
        return index[formula]
    if node.kind == "hyp":
        just = Hypothesis(node.name)
    elif node.kind == "axiom":
        binding: dict = {}
        match(AXIOMS[node.name][node.direction], formula, binding)
        just = Axiom(node.name, freeze_subst(binding))
    else:
        nums = tuple(_linearize(k, s, lines, index) for k in node.children)
        prem, concl = RULES[node.name]
        binding = {}
        for pat, num in zip(prem, nums):
            match(pat, lines[num - 1].formula, binding)
        match(concl, formula, binding)
        just = Rule(node.name, nums, freeze_subst(binding))
    if formula in index:  # produced while linearizing a premise
        return index[formula]
    lines.append(ProofLine(formula, just))
    index[formula] = len(lines)
    return len(lines)


def search_proof(
    system: str, hypotheses: Sequence[Term], goal: Term, bound: Bound | None = None
) -> Derivation | NotFoundWithinBound:
    """Smallest derivation of ``goal`` from ``hypotheses`` within ``bound``."""
    bound = bound or Bound()
    if system not in SYSTEMS:
        raise ValueError(f"unknown system {system!r}")
    hypotheses = tuple(hypotheses)
    search = _Search(system, hypotheses, bound)
    try:
        for budget in range(1, bound.max_lines + 1):
            for s, nodes, _ in search.solve([goal], {}, budget):
                lines: list[ProofLine] = []
                _linearize(nodes[0], s, lines, {})
                if len(lines) > bound.max_lines:
                    continue
                if any(depth(ln.formula) > bound.max_depth for ln in lines):
                    continue
                d = Derivation(system, hypotheses, tuple(lines), goal)
                if check_derivation(d, {}).ok:
                    return d
    except _OutOfNodes:
        return NotFoundWithinBound(bound, f"node limit {bound.max_nodes} reached")
    return NotFoundWithinBound(bound)
