import json
from dataclasses import replace

import pytest
from hypothesis import given, settings, strategies as st

from effectlogic import models
from effectlogic.implication import natural_implication_table, set_implication_table
from effectlogic.proofs import (
    Axiom,
    Bound,
    Derivation,
    Hypothesis,
    Lemma,
    MissingSchemaVariable,
    PremiseMismatch,
    ProofLine,
    Rule,
    apply_rule,
    axiom_soundness,
    check_derivation,
    corpus,
    instantiate_schema,
    rule_soundness,
    search_proof,
    soundness_audit,
    write_corpus,
)
from effectlogic.proofs.checker import freeze_subst
from effectlogic.proofs.corpus import statements, uses_lemmas
from effectlogic.proofs.schemas import SYSTEMS
from effectlogic.proofs.search import NotFoundWithinBound, unify
from effectlogic.terms import Imp, Var, neg, parse_term

P = parse_term


def test_schema_instances():
    assert instantiate_schema("A1", {"phi": P("p"), "psi": P("q")}) == P("p -> q -> p")
    assert instantiate_schema("B3", {"phi": P("p")}) == (P("p -> ~~p"), P("~~p -> p"))
    with pytest.raises(MissingSchemaVariable):
        instantiate_schema("A1", {"phi": P("p")})


def test_rules():
    assert apply_rule("MP", [P("p"), P("p -> q")]) == P("q")
    assert apply_rule("Sf", [P("p -> q")], {"chi": P("r")}) == P("(q -> r) -> (p -> r)")
    with pytest.raises(MissingSchemaVariable):
        apply_rule("Sf", [P("p -> q")])
    with pytest.raises(PremiseMismatch) as info:
        apply_rule("MP", [P("p"), P("q -> r")])
    assert info.value.index == 1


def _mp_proof(bad_minor=False):
    hyps = (P("p"), P("p -> q"))
    lines = (
        ProofLine(P("r") if bad_minor else P("p"), Hypothesis(0)),
        ProofLine(P("p -> q"), Hypothesis(1)),
        ProofLine(P("q"), Rule("MP", (1, 2))),
    )
    return Derivation("A", hyps, lines, P("q"), "mp")


def test_mp_proof_checks():
    assert check_derivation(_mp_proof(), {}).ok


def test_wrong_hypothesis_is_localized():
    res = check_derivation(_mp_proof(bad_minor=True), {})
    assert not res.ok and res.line == 1


def test_forward_premise_reference():
    d = _mp_proof()
    lines = list(d.lines)
    lines[2] = ProofLine(P("q"), Rule("MP", (1, 3)))
    res = check_derivation(replace(d, lines=tuple(lines)), {})
    assert res.line == 3 and "precede" in res.reason


def test_axiom_from_other_system_rejected():
    line = ProofLine(P("p -> p"), Axiom("B2", freeze_subst({"phi": P("p")})))
    res = check_derivation(Derivation("A", (), (line,), P("p -> p")), {})
    assert not res.ok and "not an axiom of system A" in res.reason


def test_conclusion_must_match():
    d = replace(_mp_proof(), conclusion=P("p"))
    assert check_derivation(d, {}).line == 3


def test_lemma_rules():
    base = corpus()
    inst = ProofLine(P("~q -> ~q"), Lemma("th9c", freeze_subst({"p": P("~q")})))
    assert check_derivation(Derivation("A", (), (inst,), P("~q -> ~q")), base).ok
    wrong = ProofLine(P("q -> p"), Lemma("th9c", freeze_subst({"p": P("q")})))
    assert "not an instance" in check_derivation(Derivation("A", (), (wrong,), P("q -> p")), base).reason
    hyp_lemma = next(k for k, v in base.items() if v.hypotheses)
    d2 = Derivation("A", (), (ProofLine(P("p"), Lemma(hyp_lemma)),), P("p"))
    assert "closed" in check_derivation(d2, base).reason
    other = next(k for k, v in base.items() if v.system == "B" and not v.hypotheses)
    d3 = Derivation("A", (), (ProofLine(base[other].conclusion, Lemma(other)),), base[other].conclusion)
    assert "belongs to system B" in check_derivation(d3, base).reason


def test_circular_lemmas():
    loop = Derivation("A", (), (ProofLine(P("p"), Lemma("loop")),), P("p"), "loop")
    assert not check_derivation(loop, {"loop": loop}).ok


def test_every_fixture_verifies():
    ds = corpus()
    assert len(ds) == 23
    for name, d in ds.items():
        assert check_derivation(d).ok, (name, check_derivation(d))
    assert any(uses_lemmas(d) for d in ds.values())
    assert set(statements()) == set(ds)


def test_json_round_trip(tmp_path):
    for path in write_corpus(tmp_path):
        d = Derivation.from_dict(json.loads(path.read_text()))
        assert d == corpus()[d.id]


def _insert(d: Derivation, at: int, line: ProofLine) -> Derivation:
    def shift(j):
        if isinstance(j, Rule):
            return Rule(j.rule, tuple(p + 1 if p > at else p for p in j.premises), j.subst)
        return j

    lines = [ProofLine(ln.formula, shift(ln.just)) for ln in d.lines]
    lines.insert(at, line)
    return replace(d, lines=tuple(lines))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(sorted(corpus())), st.integers(0, 100))
def test_inserting_a_valid_line_keeps_a_proof_valid(name, where):
    d = corpus()[name]
    at = where % len(d.lines)
    schema = SYSTEMS[d.system][0]
    extra = ProofLine(P("z -> (z -> z)"), Axiom(schema, freeze_subst({"phi": P("z"), "psi": P("z")})))
    assert check_derivation(_insert(d, at, extra)).ok


def test_unify_occurs_check():
    a, b = Var("?1"), Var("?2")
    assert unify(a, Imp(a, b), {}) is None
    s = unify(Imp(a, b), P("p -> q"), {})
    assert s == {"?1": P("p"), "?2": P("q")}


@pytest.mark.parametrize(
    "system,hyps,goal,lines",
    [
        ("A", [], "p -> q -> p", 1),
        ("B", [], "p -> p", 1),
        ("B", [], "p -> 1", 3),
        ("A", ["p -> q", "q -> r"], "p -> r", 4),
    ],
)
def test_search_finds_short_proofs(system, hyps, goal, lines):
    d = search_proof(system, [P(h) for h in hyps], P(goal), Bound(max_lines=8, max_nodes=50_000))
    assert d and len(d.lines) == lines
    assert check_derivation(d, {}).ok


def test_search_gives_up_within_bound():
    res = search_proof("A", [], P("p"), Bound(max_lines=4, max_nodes=5_000))
    assert isinstance(res, NotFoundWithinBound) and not res


def test_audit_accepts_fixtures_on_c4():
    K = [natural_implication_table(models.c4())]
    for d in corpus().values():
        if d.closed and d.system == "A":
            assert soundness_audit(d, K).ok


def test_audit_catches_an_unsound_line():
    # p -> q is not valid; pretend it was a hypothesis-free conclusion
    d = Derivation("A", (), (ProofLine(P("p -> q"), Hypothesis(0)),), P("p -> q"), "bogus")
    rep = soundness_audit(d, [natural_implication_table(models.e2())])
    assert not rep.ok
    assert rep.violations[0].witness == {"model": 0, "p": 1, "q": 0}


def test_schema_and_rule_soundness_on_lattices():
    K = [natural_implication_table(models.NAMED[n]()) for n in ("e2", "c3", "b4", "hs")]
    for schema in (*SYSTEMS["A"], *SYSTEMS["B"]):
        assert axiom_soundness(schema, K).ok, schema
    for rule in ("MP", "Sf", "WPf", "R1", "R2"):
        assert rule_soundness(rule, K).ok, rule


def test_set_valued_model_breaks_a2_and_sf():
    K = [set_implication_table(models.twin_atoms())]
    assert not axiom_soundness("A2", K).ok
    assert not rule_soundness("Sf", K).ok


def test_negated_line_is_rejected_at_that_line():
    for name, d in corpus().items():
        k = len(d.lines) // 2
        lines = list(d.lines)
        lines[k] = ProofLine(neg(lines[k].formula), lines[k].just)
        res = check_derivation(replace(d, lines=tuple(lines)))
        assert not res.ok and res.line == k + 1, name
