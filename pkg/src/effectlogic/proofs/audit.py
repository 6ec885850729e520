"""Semantic soundness checks of derivations, axioms and rules on finite tables.

A formula is "true" under an assignment when its value set is exactly
``{1}``.  Everything here is exhaustive over assignments of elements to
variables.
"""

from __future__ import annotations

from collections.abc import Sequence
from itertools import product

from ..implication import ImplicationTable
from ..report import Report
from ..terms import Term, evaluate_term, format_term, variables
from .checker import Derivation
from .schemas import AXIOMS, RULES, schema_vars


def _true(t: Term, T: ImplicationTable, asg) -> bool:
    return evaluate_term(t, T, asg) == T.one


def _names(terms: Sequence[Term]) -> list[str]:
    seen: dict[str, None] = {}
    for t in terms:
        for v in variables(t):
            seen.setdefault(v)
    return list(seen)


def soundness_audit(d: Derivation, K: Sequence[ImplicationTable]) -> Report:
    """Every line must be true wherever all hypotheses are true.

    Only the first counterexample per line is recorded.
    """
    rep = Report(f"soundness of {d.id or 'derivation'}", clauses=["lines"])
    names = _names([*d.hypotheses, *(ln.formula for ln in d.lines)])
    bad_lines: set[int] = set()
    for m, T in enumerate(K):
        for values in product(range(T.size), repeat=len(names)):
            asg = dict(zip(names, values))
            if not all(_true(h, T, asg) for h in d.hypotheses):
                continue
            for num, ln in enumerate(d.lines, 1):
                if num not in bad_lines and not _true(ln.formula, T, asg):
                    bad_lines.add(num)
                    rep.add(
                        "lines",
                        f"line {num} {format_term(ln.formula)} evaluates to "
                        f"{set(evaluate_term(ln.formula, T, asg))}",
                        model=m,
                        **asg,
                    )
    rep.notes["lines"] = f"{len(K)} model(s)"
    return rep


def axiom_soundness(schema: str, K: Sequence[ImplicationTable]) -> Report:
    """Every atomic instance of ``schema`` is true in every table of ``K``."""
    rep = Report(f"axiom {schema}", clauses=[schema])
    alts = AXIOMS[schema]
    names = sorted(set().union(*(schema_vars(a) for a in alts)))
    for m, T in enumerate(K):
        for values in product(range(T.size), repeat=len(names)):
            asg = dict(zip(names, values))
            for k, alt in enumerate(alts):
                if not _true(alt, T, asg):
                    rep.add(schema, f"direction {k}" if len(alts) > 1 else "", model=m, **asg)
                    break
            else:
                continue
            break
    return rep


def rule_soundness(rule: str, K: Sequence[ImplicationTable]) -> Report:
    """Premises true implies conclusion true, for atomic instances of ``rule``."""
    rep = Report(f"rule {rule}", clauses=[rule])
    prem, concl = RULES[rule]
    names = sorted(schema_vars(concl).union(*(schema_vars(p) for p in prem)))
    for m, T in enumerate(K):
        for values in product(range(T.size), repeat=len(names)):
            asg = dict(zip(names, values))
            if all(_true(p, T, asg) for p in prem) and not _true(concl, T, asg):
                rep.add(rule, model=m, **asg)
                break
    return rep
