from effectlogic import models
from effectlogic.algebra import validate_effect_axioms
from effectlogic.implication import natural_implication_table, set_implication_table
from effectlogic.localize import effect_cells_read, implication_cells_read, mutate_cell
from effectlogic.report import Violation
from effectlogic.transforms import EIA, LEIA, check_identity_11, validate_implication_axioms


def _mutant(E, x, y, v):
    doc = E.to_dict()
    doc["plus"][x][y] = v
    return doc


def test_asymmetric_cell_is_found():
    doc = _mutant(models.c4(), 1, 2, None)  # a + b undefined, b + a still defined
    rep = validate_effect_axioms(doc)
    assert not rep.passed("E1")
    for v in rep.violations:
        assert (1, 2) in effect_cells_read(doc, v)


def test_every_violation_of_a_mutant_reads_the_mutated_cell():
    E = models.b4()
    for x in range(4):
        for y in range(4):
            for v in [None, *range(4)]:
                if v == E.plus[x][y]:
                    continue
                doc = _mutant(E, x, y, v)
                rep = validate_effect_axioms(doc)
                for viol in rep.violations:
                    reads = effect_cells_read(doc, viol)
                    assert reads is not None and (x, y) in reads, (x, y, v, viol)


def test_fake_violation_does_not_replay():
    doc = models.c3().to_dict()
    assert effect_cells_read(doc, Violation("E1", {"x": 1, "y": 1})) is None


def test_implication_replay():
    T = natural_implication_table(models.c4())
    M = mutate_cell(T, 2, 1, 3)
    rep = validate_implication_axioms(M, LEIA)
    assert not rep.ok
    assert all((2, 1) in implication_cells_read(M, v, LEIA) for v in rep.violations)


def test_set_valued_replay():
    T = set_implication_table(models.twin_atoms())
    M = mutate_cell(T, 1, 2, [0])
    rep = validate_implication_axioms(M, EIA)
    assert not rep.ok
    assert all((1, 2) in implication_cells_read(M, v, EIA) for v in rep.violations)


def test_shrunken_cell_needs_the_max_cone_identity():
    # dropping d from a -> b = {c, d} keeps every EIA clause true
    T = set_implication_table(models.twin_atoms())
    M = mutate_cell(T, 1, 2, [3])
    assert validate_implication_axioms(M, EIA).ok
    rep = check_identity_11(M)
    assert [v.witness for v in rep.violations] == [{"x": 1, "y": 2}]


def test_mutate_cell_leaves_the_original():
    T = natural_implication_table(models.c3())
    M = mutate_cell(T, 0, 0, 1)
    assert T.cell(0, 0) == (2,) and M.cell(0, 0) == (1,)
