"""Hilbert-style derivations: schemas, checker, search, soundness audit, fixtures."""

from .audit import axiom_soundness, rule_soundness, soundness_audit
from .checker import (
    Axiom,
    Checker,
    Derivation,
    Hypothesis,
    Lemma,
    ProofCheck,
    ProofLine,
    Rule,
    check_derivation,
)
from .corpus import corpus, write_corpus
from .schemas import MissingSchemaVariable, PremiseMismatch, apply_rule, instantiate_schema
from .search import Bound, search_proof
