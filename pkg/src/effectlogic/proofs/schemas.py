"""Axiom schemas and inference rules of the two Hilbert systems."""

from __future__ import annotations

from collections.abc import Mapping

from ..terms import ZERO, Imp, Term, Var, neg, substitute

PHI, PSI, CHI = Var("phi"), Var("psi"), Var("chi")
SCHEMA_VARS = ("phi", "psi", "chi")


class MissingSchemaVariable(KeyError):
    pass


class PremiseMismatch(ValueError):
    def __init__(self, index: int, message: str):
        super().__init__(message)
        self.index = index


class UnknownJustification(KeyError):
    pass


def _imp(*parts: Term) -> Term:
    """Right-nested implication ``a -> (b -> (... -> z))``."""
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = Imp(p, out)
    return out


# each schema is a tuple of alternatives; only the biconditional has two
AXIOMS: dict[str, tuple[Term, ...]] = {
    "A1": (_imp(PHI, PSI, PHI),),
    "A2": (Imp(Imp(Imp(PHI, PSI), PSI), Imp(Imp(PSI, PHI), PHI)),),
    "A3": (Imp(ZERO, PHI),),
    "B1": (_imp(PHI, PSI, PHI),),
    "B2": (Imp(PHI, PHI),),
    "B3": (Imp(PHI, neg(neg(PHI))), Imp(neg(neg(PHI)), PHI)),
    "B4": (Imp(ZERO, PHI),),
}

RULES: dict[str, tuple[tuple[Term, ...], Term]] = {
    "MP": ((PHI, Imp(PHI, PSI)), PSI),
    "Sf": ((Imp(PHI, PSI),), Imp(Imp(PSI, CHI), Imp(PHI, CHI))),
    "WPf": ((Imp(PHI, PSI), Imp(PSI, PHI)), Imp(Imp(CHI, PHI), Imp(CHI, PSI))),
    "R1": ((Imp(PHI, PSI),), Imp(Imp(neg(PHI), neg(PSI)), Imp(PSI, PHI))),
    "R2": (
        (Imp(PHI, neg(PSI)), Imp(Imp(neg(PHI), PSI), neg(CHI))),
        Imp(Imp(neg(Imp(neg(PHI), PSI)), CHI), Imp(neg(PHI), Imp(neg(PSI), CHI))),
    ),
}

SYSTEMS: dict[str, tuple[str, ...]] = {
    "A": ("A1", "A2", "A3"),
    "B": ("B1", "B2", "B3", "B4"),
}
RULE_NAMES = tuple(RULES)


def schema_vars(t: Term) -> set[str]:
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, Imp):
        return schema_vars(t.left) | schema_vars(t.right)
    return set()


def _need(names, subst: Mapping[str, Term], what: str) -> None:
    missing = sorted(set(names) - set(subst))
    if missing:
        raise MissingSchemaVariable(f"{what} needs {', '.join(missing)}")


def schema_instances(schema: str, subst: Mapping[str, Term]) -> tuple[Term, ...]:
    try:
        alts = AXIOMS[schema]
    except KeyError:
        raise UnknownJustification(f"no axiom schema {schema!r}") from None
    _need(set().union(*(schema_vars(a) for a in alts)), subst, schema)
    return tuple(substitute(a, subst) for a in alts)


def instantiate_schema(schema: str, subst: Mapping[str, Term]) -> Term | tuple[Term, Term]:
    """One instance, or the pair of directions for the biconditional schema."""
    inst = schema_instances(schema, subst)
    return inst[0] if len(inst) == 1 else inst


def match(pattern: Term, term: Term, binding: dict[str, Term]) -> bool:
    """One-way matching of a schema against a ground formula; extends ``binding``."""
    if isinstance(pattern, Var):
        bound = binding.get(pattern.name)
        if bound is None:
            binding[pattern.name] = term
            return True
        return bound == term
    if isinstance(pattern, Imp):
        return isinstance(term, Imp) and match(pattern.left, term.left, binding) and match(
            pattern.right, term.right, binding
        )
    return pattern == term


def apply_rule(rule: str, premises, subst: Mapping[str, Term] | None = None) -> Term:
    """Conclusion of ``rule`` from ``premises`` under ``subst``.

    Schema variables occurring in the premises may be left out of ``subst``;
    they are read off the premises.  Variables that only occur in the
    conclusion (``chi`` of Sf and WPf) must be supplied.
    """
    try:
        prem_schemas, concl = RULES[rule]
    except KeyError:
        raise UnknownJustification(f"no rule {rule!r}") from None
    premises = list(premises)
    if len(premises) != len(prem_schemas):
        raise PremiseMismatch(
            min(len(premises), len(prem_schemas)),
            f"{rule} takes {len(prem_schemas)} premise(s), got {len(premises)}",
        )
    binding = dict(subst or {})
    for i, (pat, got) in enumerate(zip(prem_schemas, premises)):
        if not match(pat, got, binding):
            raise PremiseMismatch(i, f"{rule} premise {i + 1} does not have the required shape")
    _need(schema_vars(concl), binding, rule)
    for i, (pat, got) in enumerate(zip(prem_schemas, premises)):
        if substitute(pat, binding) != got:
            raise PremiseMismatch(i, f"{rule} premise {i + 1} does not match the substitution")
    return substitute(concl, binding)
