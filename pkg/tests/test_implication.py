from itertools import product

import pytest

from effectlogic import models
from effectlogic.implication import (
    EmptyArgument,
    ImplicationTable,
    Kind,
    KindMismatch,
    NotLattice,
    check_implication_laws,
    imp_sets,
    lift_to_sets,
    natural_implication_table,
    sasaki_implication_table,
    set_implication_table,
)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_chain_implications_are_lukasiewicz(n):
    # on a chain 0 < 1 < ... < top both implications reduce to min(top, top - x + y)
    E = models.chain(n)
    top = n - 1
    for builder in (natural_implication_table, sasaki_implication_table, set_implication_table):
        T = builder(E)
        for x, y in product(range(n), repeat=2):
            assert T.cell(x, y) == (min(top, top - x + y),)


def test_b4_is_classical():
    # elements as subsets of {a, b}: 0={}, a={a}, b={b}, 1={a,b}
    sets = [frozenset(), frozenset("a"), frozenset("b"), frozenset("ab")]
    index = {s: i for i, s in enumerate(sets)}
    T = natural_implication_table(models.b4())
    for x, y in product(range(4), repeat=2):
        expect = index[(frozenset("ab") - sets[x]) | sets[y]]
        assert T.value(x, y) == expect


def test_sasaki_differs_on_hs_only_off_diagonal():
    E = models.hs()
    nat, sas = natural_implication_table(E), sasaki_implication_table(E)
    a, b = 1, 2
    diff = {(x, y) for x, y in product(range(4), repeat=2) if nat.cell(x, y) != sas.cell(x, y)}
    assert diff == {(a, b), (b, a)}
    # natural: a -> b = b + (a v b)' = b + 0 = b; sasaki: a' + (a ^ b) = a + 0 = a
    assert nat.value(a, b) == b and sas.value(a, b) == a


def test_set_valued_cell_in_twin_atoms():
    E = models.twin_atoms()
    T = set_implication_table(E)
    assert T.cell(1, 2) == (3, 4)
    assert T.max_cell_size() == 2
    assert not T.single_valued


def test_natural_requires_lattice():
    with pytest.raises(NotLattice):
        natural_implication_table(models.twin_atoms())
    with pytest.raises(NotLattice):
        sasaki_implication_table(models.twin_atoms())


def test_lifting():
    T = set_implication_table(models.twin_atoms())
    assert lift_to_sets(T, 1, [2]) == T.cell(1, 2)
    assert lift_to_sets(T, 1, [0, 2]) == tuple(sorted(set(T.cell(1, 0)) | set(T.cell(1, 2))))
    assert imp_sets(T, [1, 2], [2]) == tuple(sorted(set(T.cell(1, 2)) | set(T.cell(2, 2))))
    with pytest.raises(EmptyArgument):
        lift_to_sets(T, 1, [])


@pytest.mark.parametrize("name", ["e2", "c3", "c4", "b4", "hs", "c5"])
def test_laws_on_lattices(name):
    E = models.NAMED[name]()
    assert check_implication_laws(E, natural_implication_table(E)).ok
    assert check_implication_laws(E, set_implication_table(E)).ok


def test_set_laws_on_twin_atoms():
    E = models.twin_atoms()
    assert check_implication_laws(E, set_implication_table(E)).ok


def test_sasaki_table_is_not_checked_as_natural():
    E = models.hs()
    with pytest.raises(KindMismatch):
        check_implication_laws(E, sasaki_implication_table(E))


def test_dict_round_trip_and_kind():
    T = set_implication_table(models.twin_atoms())
    assert T.kind is Kind.SET
    assert ImplicationTable.from_dict(T.to_dict()) == T


def test_set_equals_natural_on_every_small_lattice(upto5):
    for E in upto5:
        if E.is_lattice:
            assert set_implication_table(E).imp == natural_implication_table(E).imp
