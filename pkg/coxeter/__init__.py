"""
Coxeter Module
Finite Coxeter groups with exact combinatorial element models
"""

from .coxeter_matrix_module import (
    BudgetExceededError,
    CoxeterError,
    CoxeterMatrix,
    GroupMismatchError,
    UnsupportedMatrixError,
)
from .coxeter_group_module import (
    CoxeterElement,
    CoxeterGroup,
    group_from_name,
    load_group,
    new_group,
    symmetric_group,
)

__all__ = [
    'BudgetExceededError',
    'CoxeterElement',
    'CoxeterError',
    'CoxeterGroup',
    'CoxeterMatrix',
    'GroupMismatchError',
    'UnsupportedMatrixError',
    'group_from_name',
    'load_group',
    'new_group',
    'symmetric_group',
]
