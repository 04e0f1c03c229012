"""
Verification Module
Exhaustive property suites and the brute-force oracles they compare against
"""

from .oracles_module import (
    brute_class,
    brute_double_minimum,
    brute_extremum,
    brute_idempotents,
    brute_left_forms,
    brute_left_minimum,
    brute_right_minimum,
    brute_vanilla_forms,
    bruhat_maximum,
    circ_candidates,
    partial_injections,
    rook_product,
    rook_transpose,
    subword_bruhat_leq,
    subword_values,
)
from .verification_module import (
    SUITES,
    PropertyResult,
    PropertyViolation,
    VerificationReport,
    Verifier,
)

__all__ = [
    'SUITES',
    'PropertyResult',
    'PropertyViolation',
    'VerificationReport',
    'Verifier',
    'brute_class',
    'brute_double_minimum',
    'brute_extremum',
    'brute_idempotents',
    'brute_left_forms',
    'brute_left_minimum',
    'brute_right_minimum',
    'brute_vanilla_forms',
    'bruhat_maximum',
    'circ_candidates',
    'partial_injections',
    'rook_product',
    'rook_transpose',
    'subword_bruhat_leq',
    'subword_values',
]
