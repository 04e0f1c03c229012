"""
Greens Module
Green's relations, absolute class extrema and the rook counterexample
"""

from .greens_module import (
    EXTREMA,
    RELATIONS,
    SUBMONOIDS,
    ClassExtrema,
    all_extrema,
    check_relation,
    class_leq,
    class_of,
    classes,
    exists_criterion_leq,
    extremum,
    min_criterion_leq,
    related,
    special_submonoid,
)
from .counterexample_module import (
    Claim,
    CounterexampleError,
    CounterexampleReport,
    verify_counterexample,
)

__all__ = [
    'EXTREMA',
    'RELATIONS',
    'SUBMONOIDS',
    'Claim',
    'ClassExtrema',
    'CounterexampleError',
    'CounterexampleReport',
    'all_extrema',
    'check_relation',
    'class_leq',
    'class_of',
    'classes',
    'exists_criterion_leq',
    'extremum',
    'min_criterion_leq',
    'related',
    'special_submonoid',
    'verify_counterexample',
]
