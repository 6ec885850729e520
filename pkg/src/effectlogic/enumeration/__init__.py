"""Exhaustive enumeration of small effect algebras up to isomorphism."""

from .census import NOT_FOUND, CensusReport, SizeEntry, census, set_semantics_findings, write_algebras
from .generate import (
    DEFAULT_CAP,
    CapExceeded,
    all_up_to,
    canonical_codes,
    canonicalize,
    decode,
    enumerate_effect_algebras,
    complement_classes,
    involutions,
)
from .kernels import BACKEND, available, get_kernel
from .oracle import brute_force, rows_first, rows_first_codes
