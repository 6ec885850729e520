import pytest

from effectlogic import models
from effectlogic.equational import (
    SUITE_NAMES,
    UnknownSuite,
    builtin_suite,
    check_algebraization,
    check_identity,
    check_quasiidentity,
    defining_identity,
    parse_identity,
    parse_identity_file,
    parse_quasi,
    run_suite,
    semantic_consequence,
)
from effectlogic.implication import natural_implication_table, set_implication_table
from effectlogic.terms import ONE, ParseError, parse_term


@pytest.fixture(scope="module")
def c3():
    return natural_implication_table(models.c3())


def test_suite_sizes():
    assert len(builtin_suite("th4")) == 8
    assert len(builtin_suite("TH10")) == 9
    assert len(builtin_suite("sec6")) == 11
    assert set(SUITE_NAMES) == {"TH10", "SEC6", "TH4", "DEF31", "DEF52"}
    with pytest.raises(UnknownSuite):
        builtin_suite("nope")


@pytest.mark.parametrize("name", ["TH4", "TH10", "SEC6", "DEF31", "DEF52"])
def test_suites_hold_on_c3(c3, name):
    assert all(cm is None for _, cm in run_suite(c3, builtin_suite(name)))


def test_countermodel_for_a_false_identity(c3):
    # x -> y == y -> x fails at x=0, y=a: 0->a = 1, a->0 = a
    cm = check_identity(c3, parse_identity("x -> y == y -> x"))
    assert cm.assignment == {"x": 0, "y": 1}
    assert (cm.lhs, cm.rhs) == ((2,), (1,))


def test_premises_filter_assignments(c3):
    # x -> y == 1 holds only for x <= y, where x == y fails only off the diagonal
    q = parse_quasi("x -> y == 1 => x == y")
    assert check_quasiidentity(c3, q).assignment == {"x": 0, "y": 1}
    assert check_quasiidentity(c3, parse_quasi("x -> y == 1, y -> x == 1 => x == y")) is None


def test_parsing():
    assert parse_identity("x ≈ x") == parse_identity("x == x")
    with pytest.raises(ParseError):
        parse_identity("x -> y")
    sigma = parse_identity_file("# comment\np == 1\n\np -> q == 1  # tail\n")
    assert [q.label for q in sigma] == ["line 2", "line 4"]


def test_semantic_consequence():
    K = [natural_implication_table(models.NAMED[n]()) for n in ("e2", "c3", "b4")]
    sigma = [parse_identity("p == 1"), parse_identity("p -> q == 1")]
    assert semantic_consequence(K, sigma, parse_identity("q == 1")) is None
    cm = semantic_consequence(K, [parse_identity("p -> q == 1")], parse_identity("q == 1"))
    assert cm is not None and cm.model_index == 0
    with pytest.raises(ValueError):
        semantic_consequence([], sigma, parse_identity("q == 1"))


def test_defining_identity():
    p = parse_term("p")
    assert defining_identity(p).rhs == ONE
    assert defining_identity(p, "delta").rhs == parse_term("p -> p")


@pytest.mark.parametrize("name", sorted(models.NAMED))
def test_algebraization(name):
    assert check_algebraization(set_implication_table(models.NAMED[name]())) == []


def test_suites_over_every_small_algebra(upto5):
    lattice_suites = [q for name in ("TH10", "TH4", "DEF31") for q in builtin_suite(name)]
    for E in upto5:
        S = set_implication_table(E)
        assert all(cm is None for _, cm in run_suite(S, builtin_suite("DEF52")))
        if S.single_valued:
            assert all(cm is None for _, cm in run_suite(S, builtin_suite("SEC6")))
        if E.is_lattice:
            N = natural_implication_table(E)
            assert all(cm is None for _, cm in run_suite(N, lattice_suites))
