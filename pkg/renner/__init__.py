"""
Renner Module
Renner-Coxeter systems, their elements and standard forms, and the rook monoid
"""

from .renner_system_module import (
    CrossSectionLattice,
    HybridForm,
    LatticeError,
    LeftForm,
    MonoidAction,
    NotMinimalRepresentativeError,
    ParseError,
    RennerElement,
    RennerError,
    RennerSystem,
    RightForm,
    SystemMismatchError,
    fixing_generators,
    validate_system,
)
from .rook_monoid_module import (
    RookAction,
    compose,
    from_matrix,
    from_vector,
    is_rook_system,
    partial_injection_count,
    rank_of,
    rook_domains,
    rook_system,
    to_matrix,
    to_vector,
)
from .system_loader_module import TableAction, load_system, parse_system_text, resolve_system

__all__ = [
    'CrossSectionLattice',
    'HybridForm',
    'LatticeError',
    'LeftForm',
    'MonoidAction',
    'NotMinimalRepresentativeError',
    'ParseError',
    'RennerElement',
    'RennerError',
    'RennerSystem',
    'RightForm',
    'RookAction',
    'SystemMismatchError',
    'TableAction',
    'compose',
    'fixing_generators',
    'from_matrix',
    'from_vector',
    'is_rook_system',
    'load_system',
    'parse_system_text',
    'partial_injection_count',
    'rank_of',
    'resolve_system',
    'rook_domains',
    'rook_system',
    'to_matrix',
    'to_vector',
    'validate_system',
]
