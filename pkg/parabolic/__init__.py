"""
Parabolic Module
Parabolic subgroups, coset representatives and the optimization operator
"""

from .parabolic_module import (
    GeneratorSubset,
    OverlappingSubsetsError,
    all_subsets,
    circ,
    conjugate_subset,
    double_coset_decompose,
    is_in_parabolic,
    is_min_double_coset_rep,
    longest_in_parabolic,
    minimal_left_representatives,
    minimal_right_representatives,
    parabolic_elements,
    parabolics_commute,
    project_double,
    project_left,
    project_right,
    split_commuting,
)

__all__ = [
    'GeneratorSubset',
    'OverlappingSubsetsError',
    'all_subsets',
    'circ',
    'conjugate_subset',
    'double_coset_decompose',
    'is_in_parabolic',
    'is_min_double_coset_rep',
    'longest_in_parabolic',
    'minimal_left_representatives',
    'minimal_right_representatives',
    'parabolic_elements',
    'parabolics_commute',
    'project_double',
    'project_left',
    'project_right',
    'split_commuting',
]
