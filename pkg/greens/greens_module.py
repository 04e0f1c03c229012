"""
Greens Module
Green's relations, class extrema, the GJ/JG/N/O submonoids and the class-level order
"""

import logging
from dataclasses import dataclass
from typing import Dict, Hashable, List, Optional, Tuple

from adherence import MINUS, PLUS, check_epsilon, leq, middle_bounds, side_element, vanilla_form
from renner import RennerElement, RennerError, RennerSystem

logger = logging.getLogger(__name__)

RELATIONS = ('J', 'L', 'R', 'H')
SUBMONOIDS = {'GJ': 'L', 'JG': 'R', 'N': 'J', 'O': 'H'}
EXTREMA = ('min', 'max')


def check_relation(relation: str) -> str:
    if relation not in RELATIONS:
        raise RennerError(f'unknown Green relation {relation!r}; expected one of {", ".join(RELATIONS)}')
    return relation


def related(r: RennerElement, s: RennerElement, relation: str,
            system: Optional[RennerSystem] = None) -> bool:
    """r T s for T in J, L, R, H, read off the standard forms"""
    check_relation(relation)
    system = system or r.system
    return system.green_key(r, relation) == system.green_key(s, relation)


def class_of(r: RennerElement, relation: str) -> List[RennerElement]:
    """T_r, in enumeration order"""
    check_relation(relation)
    system = r.system
    key = system.green_key(r, relation)
    return [s for s in system.enumerate_monoid() if system.green_key(s, relation) == key]


def classes(system: RennerSystem, relation: str) -> List[List[RennerElement]]:
    """Partition of the monoid into T-classes, ordered by first member"""
    check_relation(relation)
    groups: Dict[Tuple[Hashable, ...], List[RennerElement]] = {}
    for r in system.enumerate_monoid():
        groups.setdefault(system.green_key(r, relation), []).append(r)
    logger.debug('%s: %d %s-classes', system.name, len(groups), relation)
    return list(groups.values())


def _extremum_plus(r: RennerElement, relation: str, which: str, system: RennerSystem) -> RennerElement:
    form = vanilla_form(r, system)
    identity = system.group.identity
    lower, upper = middle_bounds(system, form.e_minus, form.e_plus)
    if which == 'min':
        side = side_element(system, form.e_minus, form.e_plus)
        outer_minus = side if relation in ('L', 'J') else form.sigma_minus
        outer_plus = side if relation in ('R', 'J') else form.sigma_plus
        return form.replace(sigma_minus=outer_minus, sigma_zero=lower, sigma_plus=outer_plus).assemble()
    outer_minus = identity if relation in ('L', 'J') else form.sigma_minus
    outer_plus = identity if relation in ('R', 'J') else form.sigma_plus
    return form.replace(sigma_minus=outer_minus, sigma_zero=upper, sigma_plus=outer_plus).assemble()


def extremum(r: RennerElement, relation: str, epsilon: str = PLUS, which: str = 'min',
             system: Optional[RennerSystem] = None) -> RennerElement:
    """
    Absolute minimum or maximum of the T-class of r under <=^epsilon

    Built from the vanilla form of r by substituting the prescribed components;
    the class is never scanned. For epsilon = '-' the construction runs over
    the opposite lattice and the result is brought back.

    Args:
        r: Any element of the class
        relation: 'J', 'L', 'R' or 'H'
        epsilon: '+' or '-'
        which: 'min' or 'max'
        system: Lattice the order refers to (default: r's own system)

    Returns:
        The extremum, as an element of system
    """
    check_relation(relation)
    check_epsilon(epsilon)
    if which not in EXTREMA:
        raise ValueError(f'which must be "min" or "max", got {which!r}')
    system = system or r.system
    if epsilon == MINUS:
        return system.coerce(_extremum_plus(r, relation, which, system.opposite()))
    return _extremum_plus(r, relation, which, system)


@dataclass(frozen=True)
class ClassExtrema:
    """One T-class with its absolute minimum and maximum under <=^epsilon"""
    relation: str
    epsilon: str
    min: RennerElement
    max: RennerElement
    members: Tuple[RennerElement, ...]

    def to_dict(self) -> dict:
        return {
            'relation': self.relation,
            'epsilon': self.epsilon,
            'min': str(self.min),
            'max': str(self.max),
            'members': [str(r) for r in self.members],
        }


def all_extrema(system: RennerSystem, relation: str, epsilon: str = PLUS) -> List[ClassExtrema]:
    return [
        ClassExtrema(
            relation,
            epsilon,
            extremum(members[0], relation, epsilon, 'min', system),
            extremum(members[0], relation, epsilon, 'max', system),
            tuple(members),
        )
        for members in classes(system, relation)
    ]


def special_submonoid(system: RennerSystem, which: str, epsilon: str = PLUS) -> List[RennerElement]:
    """
    GJ, JG, N or O: the elements that are their own L-, R-, J- or H-class minimum

    O does not depend on epsilon.
    """
    if which not in SUBMONOIDS:
        raise ValueError(f'unknown submonoid {which!r}; expected one of {", ".join(SUBMONOIDS)}')
    relation = SUBMONOIDS[which]
    return [r for r in system.enumerate_monoid() if extremum(r, relation, epsilon, 'min', system) == r]


def class_leq(r: RennerElement, s: RennerElement, relation: str, epsilon: str = PLUS) -> bool:
    """T_r <= T_s, decided on the class maxima (valid for all four relations)"""
    return leq(extremum(r, relation, epsilon, 'max'), extremum(s, relation, epsilon, 'max'), epsilon, r.system)


def min_criterion_leq(r: RennerElement, s: RennerElement, relation: str, epsilon: str = PLUS) -> bool:
    """
    T_r <= T_s decided on the class minima

    Raises:
        ValueError: relation is H, where minima do not reflect the class order
    """
    if relation == 'H':
        raise ValueError('the minimum criterion does not decide the order of H-classes')
    return leq(extremum(r, relation, epsilon, 'min'), extremum(s, relation, epsilon, 'min'), epsilon, r.system)


def exists_criterion_leq(r: RennerElement, s: RennerElement, relation: str, epsilon: str = PLUS) -> bool:
    """Some a in T_r and b in T_s have a <=^epsilon b"""
    upper = class_of(s, relation)
    return any(leq(a, b, epsilon, r.system) for a in class_of(r, relation) for b in upper)
