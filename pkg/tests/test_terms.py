import pytest
from hypothesis import given, strategies as st

from effectlogic import models
from effectlogic.implication import natural_implication_table, set_implication_table
from effectlogic.terms import (
    ONE,
    ZERO,
    Imp,
    ParseError,
    UnboundVariable,
    Var,
    depth,
    evaluate_single,
    evaluate_term,
    format_term,
    join,
    neg,
    parse_term,
    substitute,
    variables,
)

terms = st.recursive(
    st.sampled_from([Var("p"), Var("q"), Var("r"), ZERO]),
    lambda sub: st.builds(Imp, sub, sub),
    max_leaves=12,
)


@given(terms)
def test_format_parse_round_trip(t):
    assert parse_term(format_term(t)) == t


def test_arrow_associates_right():
    assert parse_term("p -> q -> r") == Imp(Var("p"), Imp(Var("q"), Var("r")))


def test_sugar():
    assert parse_term("~p") == Imp(Var("p"), ZERO)
    assert parse_term("1") == ONE == Imp(ZERO, ZERO)
    assert parse_term("p \\/ q") == join(Var("p"), Var("q")) == Imp(Imp(Var("p"), Var("q")), Var("q"))
    assert format_term(neg(neg(Var("p")))) == "~~p"
    assert format_term(parse_term("(p -> q) -> r")) == "(p -> q) -> r"


@pytest.mark.parametrize("text", ["", "p ->", "(p", "p q", "->", "p )"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_term(text)


def test_variables_depth_substitute():
    t = parse_term("q -> (p -> q)")
    assert variables(t) == ["q", "p"]
    assert depth(t) == 2
    assert substitute(t, {"q": ZERO, "p": Var("q")}) == parse_term("0 -> (q -> 0)")


def test_unbound():
    with pytest.raises(UnboundVariable):
        evaluate_term(Var("p"), natural_implication_table(models.c3()), {})


@given(terms, st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
def test_set_evaluation_agrees_with_single_on_lattices(t, p, q, r):
    T = natural_implication_table(models.hs())
    asg = {"p": p, "q": q, "r": r}
    assert evaluate_term(t, T, asg) == (evaluate_single(t, T, asg),)


def test_set_evaluation_unions_cells():
    # twin atoms: a -> b = {c, d}; then (a -> b) -> 0 is {c', d'} = {b, a}
    T = set_implication_table(models.twin_atoms())
    asg = {"p": 1, "q": 2}
    assert evaluate_term(parse_term("p -> q"), T, asg) == (3, 4)
    assert evaluate_term(parse_term("~(p -> q)"), T, asg) == (1, 2)
