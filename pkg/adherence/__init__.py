"""
Adherence Module
Adherence orders, vanilla form and Hasse diagram export
"""

from .adherence_module import (
    EPSILONS,
    MINUS,
    PLUS,
    NotRelatedError,
    VanillaForm,
    check_epsilon,
    class_witness,
    in_second_middle_set,
    is_vanilla,
    leq,
    leq_fast_in_class,
    leq_minus,
    leq_plus,
    leq_plus_vanilla,
    middle_bounds,
    middle_set,
    opposite_system,
    product_set,
    sandwich,
    side_element,
    vanilla_form,
    witness,
    witness_minus,
    witness_plus,
)
from .hasse_module import cover_graph, cover_pairs, hasse_covers, is_partial_order, order_matrix, to_dot

__all__ = [
    'EPSILONS',
    'MINUS',
    'PLUS',
    'NotRelatedError',
    'VanillaForm',
    'check_epsilon',
    'class_witness',
    'cover_graph',
    'cover_pairs',
    'hasse_covers',
    'in_second_middle_set',
    'is_partial_order',
    'is_vanilla',
    'leq',
    'leq_fast_in_class',
    'leq_minus',
    'leq_plus',
    'leq_plus_vanilla',
    'middle_bounds',
    'middle_set',
    'opposite_system',
    'order_matrix',
    'product_set',
    'sandwich',
    'side_element',
    'to_dot',
    'vanilla_form',
    'witness',
    'witness_minus',
    'witness_plus',
]
