"""Finite effect algebras, their implication algebras, and two Hilbert systems.

The most used entry points are re-exported here; the submodules hold the
rest.
"""

from .algebra import (
    EffectAlgebra,
    MalformedTable,
    check_basic_laws,
    find_isomorphism,
    induced_order,
    validate_effect_axioms,
)
from .equational import builtin_suite, check_identity, check_quasiidentity, semantic_consequence
from .implication import (
    ImplicationTable,
    natural_implication_table,
    sasaki_implication_table,
    set_implication_table,
)
from .report import Report, Violation
from .terms import evaluate_term, format_term, parse_term
from .transforms import (
    EIA,
    LEIA,
    effect_to_implication,
    implication_to_effect,
    round_trip_check,
    validate_implication_axioms,
)

__version__ = "0.1.0"
