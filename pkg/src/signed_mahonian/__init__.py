"""Signed Mahonian polynomials on colored permutation groups G_{r,n}.

Exact arithmetic in Z[zeta_r][q], permutation statistics (maj_F, fmaj,
Dmaj), restricted-set enumeration, the constructive bijections, closed
product formulas and a harness that checks each formula against brute
force.
"""
from .cycring import CycCoeff, QPolynomial, SignedMonomial, q_bracket
from .perm import (
    CharacterSpec,
    ColoredPermutation,
    ColoredWord,
    col,
    dmaj,
    fmaj,
    inv,
    maj_F,
    parse_permutation,
    parse_word,
    stats,
)
from .sets import RestrictionSpec, enumerate, signed_mahonian_sum
from .verify import CATALOG, VerificationReport, verify_identity, verify_pointwise_lemma

__version__ = "0.1.0"

__all__ = [
    "CATALOG", "CharacterSpec", "ColoredPermutation", "ColoredWord", "CycCoeff", "QPolynomial",
    "RestrictionSpec", "SignedMonomial", "VerificationReport", "col", "dmaj", "enumerate", "fmaj",
    "inv", "maj_F", "parse_permutation", "parse_word", "q_bracket", "signed_mahonian_sum", "stats",
    "verify_identity", "verify_pointwise_lemma",
]
