import pytest

from effectlogic import models
from effectlogic.implication import ImplicationTable, natural_implication_table, set_implication_table
from effectlogic.localize import implication_cells_read, mutate_cell
from effectlogic.transforms import (
    EIA,
    LEIA,
    ImplicationAlgebra,
    NotAnImplicationAlgebra,
    check_identity_11,
    effect_to_implication,
    implication_to_effect,
    read_effect_tables,
    round_trip_check,
    validate_implication_axioms,
)
from effectlogic.implication import KindMismatch


def test_e2_passes_leia():
    rep = validate_implication_axioms(natural_implication_table(models.e2()), LEIA)
    assert rep.ok and len(rep.clauses) == 12


def test_c3_clause_xi_instance():
    # x = 1, y = a: a' -> ((1 -> a) -> a)' = a -> (a -> a)' = a -> 0 = a = 1 -> a
    T = natural_implication_table(models.c3())
    one, a, zero = 2, 1, 0
    assert T.value(T.value(a, zero), zero) == a
    assert T.value(a, T.value(T.value(T.value(one, a), a), zero)) == T.value(one, a)


def test_eia_reports_chain_clause_as_vacuous():
    rep = validate_implication_axioms(set_implication_table(models.twin_atoms()), EIA)
    assert rep.ok
    assert "vacuous" in rep.notes["EIA(chain)"]


def test_leia_refuses_set_valued_tables():
    with pytest.raises(KindMismatch):
        validate_implication_axioms(set_implication_table(models.twin_atoms()), LEIA)


def test_effect_to_implication_picks_the_kind():
    assert effect_to_implication(models.b4()).single_valued
    assert not effect_to_implication(models.twin_atoms()).single_valued


@pytest.mark.parametrize("name", sorted(models.NAMED))
def test_round_trips(name):
    E = models.NAMED[name]()
    assert round_trip_check(E).ok
    assert implication_to_effect(effect_to_implication(E)) == E


def test_read_back_tables_of_hs():
    raw = read_effect_tables(natural_implication_table(models.hs()))
    assert raw["comp"] == [3, 1, 2, 0]
    assert raw["plus"][1][1] == 3 and raw["plus"][1][2] is None


def test_identity_11_on_named_models():
    for name, make in models.NAMED.items():
        assert check_identity_11(make()).ok, name


def test_corrupted_table_is_not_an_implication_algebra():
    T = natural_implication_table(models.c3())
    bad = mutate_cell(T, 1, 0, 0)  # a' = 0 breaks the involution
    with pytest.raises(NotAnImplicationAlgebra) as info:
        implication_to_effect(bad)
    assert info.value.report is not None and not info.value.report.ok


def test_single_valued_wrapper():
    T = natural_implication_table(models.c4())
    I = ImplicationAlgebra.from_table(T)
    assert I.table().imp == T.imp
    assert implication_to_effect(I) == models.c4()


def test_violation_replay_reads_the_planted_cell():
    T = natural_implication_table(models.b4())
    M = mutate_cell(T, 1, 2, 1)
    rep = validate_implication_axioms(M, LEIA)
    assert not rep.ok
    reads = [implication_cells_read(M, v, LEIA) for v in rep.violations]
    assert all(r is not None for r in reads)
    assert all((1, 2) in r for r in reads)


def test_table_read_from_values_is_the_chain_image():
    # Lukasiewicz values on a five-element chain: the table is I(C5), so (11) holds
    T = ImplicationTable.from_values(
        [[4, 4, 4, 4, 4], [3, 4, 4, 4, 4], [2, 3, 4, 4, 4], [1, 2, 3, 4, 4], [0, 1, 2, 3, 4]], 0
    )
    assert T.imp == natural_implication_table(models.chain(5)).imp
    assert check_identity_11(T).ok
