"""
Adherence Module
The adherence orders on a Renner-Coxeter monoid, the opposite lattice and vanilla form
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from coxeter import CoxeterElement, CoxeterGroup
from parabolic import (
    GeneratorSubset,
    is_min_double_coset_rep,
    parabolic_elements,
    project_double,
    project_right,
)
from renner import RennerElement, RennerError, RennerSystem, SystemMismatchError

logger = logging.getLogger(__name__)

PLUS = '+'
MINUS = '-'
EPSILONS = (PLUS, MINUS)


class NotRelatedError(RennerError):
    """A class-restricted comparison was asked for elements in different classes"""


def check_epsilon(epsilon: str) -> str:
    if epsilon not in EPSILONS:
        raise ValueError(f'epsilon must be "+" or "-", got {epsilon!r}')
    return epsilon


def product_set(group: CoxeterGroup, first: GeneratorSubset,
                second: GeneratorSubset) -> Tuple[CoxeterElement, ...]:
    """W_I W_J without repeats, shortest first; memoized on the group"""
    key = (first, second)
    cached = group.product_cache.get(key)
    if cached is not None:
        return cached
    seen = {}
    for a in parabolic_elements(group, first):
        for b in parabolic_elements(group, second):
            product = a * b
            seen.setdefault(product.value, product)
    result = tuple(sorted(seen.values(), key=lambda w: (w.length(), w.reduced_word())))
    group.product_cache[key] = result
    return result


def _resolve(r: RennerElement, s: RennerElement,
             system: Optional[RennerSystem]) -> Tuple[RennerSystem, RennerElement, RennerElement]:
    if not isinstance(r, RennerElement) or not isinstance(s, RennerElement):
        raise SystemMismatchError('adherence orders compare monoid elements')
    system = system or r.system
    return system, system.coerce(r), system.coerce(s)


def witness_plus(r: RennerElement, s: RennerElement,
                 system: Optional[RennerSystem] = None) -> Optional[CoxeterElement]:
    """
    The w of r <=+ s, or None

    With left forms r = x e y and s = a f b: e <= f and some
    w in W_{lambda^*(f)} W_{lambda_*(e)} has x <= a w and w^-1 b <= y.
    """
    system, r, s = _resolve(r, s, system)
    group = system.group
    if not system.lattice.leq(r.e, s.e):
        return None
    for w in product_set(group, system.lam_star(s.e), system.lam_substar(r.e)):
        if group.bruhat_leq(r.x, s.x * w) and group.bruhat_leq(w.inverse() * s.y, r.y):
            return w
    return None


def witness_minus(r: RennerElement, s: RennerElement,
                  system: Optional[RennerSystem] = None) -> Optional[CoxeterElement]:
    """
    The w of r <=- s, or None

    With right forms r = y e x and s = b f a: e <= f and some
    w in W_{lambda_*(e)} W_{lambda^*(f)} has x <= w a and b w^-1 <= y.
    """
    system, r, s = _resolve(r, s, system)
    group = system.group
    if not system.lattice.leq(r.e, s.e):
        return None
    y, _, x = system.right_standard_form(r)
    b, _, a = system.right_standard_form(s)
    for w in product_set(group, system.lam_substar(r.e), system.lam_star(s.e)):
        if group.bruhat_leq(x, w * a) and group.bruhat_leq(b * w.inverse(), y):
            return w
    return None


def leq_plus(r: RennerElement, s: RennerElement, system: Optional[RennerSystem] = None) -> bool:
    return witness_plus(r, s, system) is not None


def leq_minus(r: RennerElement, s: RennerElement, system: Optional[RennerSystem] = None) -> bool:
    return witness_minus(r, s, system) is not None


def witness(r: RennerElement, s: RennerElement, epsilon: str = PLUS,
            system: Optional[RennerSystem] = None) -> Optional[CoxeterElement]:
    if check_epsilon(epsilon) == PLUS:
        return witness_plus(r, s, system)
    return witness_minus(r, s, system)


def leq(r: RennerElement, s: RennerElement, epsilon: str = PLUS,
        system: Optional[RennerSystem] = None) -> bool:
    """
    r <=^epsilon s

    Args:
        r: Lower candidate
        s: Upper candidate
        epsilon: '+' for the left-form order, '-' for the right-form order
        system: Lattice the order refers to (default: r's own system)

    Returns:
        True iff r <=^epsilon s with respect to system's cross-section
    """
    return witness(r, s, epsilon, system) is not None


def opposite_system(system: RennerSystem) -> RennerSystem:
    """(R, w0 Lambda w0, S)"""
    return system.opposite()


@dataclass(frozen=True)
class VanillaForm:
    """r = sigma_minus e_minus sigma_zero e_plus sigma_plus with e_minus in the opposite lattice"""
    system: RennerSystem
    sigma_minus: CoxeterElement
    e_minus: str
    sigma_zero: CoxeterElement
    e_plus: str
    sigma_plus: CoxeterElement

    @property
    def opposite(self) -> RennerSystem:
        return self.system.opposite()

    def assemble(self) -> RennerElement:
        """The element itself, read as (sigma_minus sigma_zero) e_plus sigma_plus"""
        return self.system.normalize(self.sigma_minus * self.sigma_zero, self.e_plus, self.sigma_plus)

    def replace(self, sigma_minus: Optional[CoxeterElement] = None,
                sigma_zero: Optional[CoxeterElement] = None,
                sigma_plus: Optional[CoxeterElement] = None) -> 'VanillaForm':
        return VanillaForm(
            self.system,
            self.sigma_minus if sigma_minus is None else sigma_minus,
            self.e_minus,
            self.sigma_zero if sigma_zero is None else sigma_zero,
            self.e_plus,
            self.sigma_plus if sigma_plus is None else sigma_plus,
        )

    def __str__(self) -> str:
        return (f'{self.sigma_minus} * {self.e_minus}^- * {self.sigma_zero} '
                f'* {self.e_plus} * {self.sigma_plus}')


def vanilla_form(r: RennerElement, system: Optional[RennerSystem] = None) -> VanillaForm:
    """
    Vanilla form of r

    From the left form x e y: f = w0 e w0 in the opposite lattice,
    z = (x w0)^{lambda(f)} with x w0 = z u, and
    sigma_zero = ^{lambda_*(f)}(u w0)^{lambda_*(e)}.
    """
    system = system or r.system
    r = system.coerce(r)
    opposite = system.opposite()
    w0 = system.group.longest_element()
    z, u = project_right(r.x * w0, opposite.lam(r.e))
    v = project_double(opposite.lam_substar(r.e), u * w0, system.lam_substar(r.e))
    return VanillaForm(system, z, r.e, v, r.e, r.y)


def middle_bounds(system: RennerSystem, e_minus: str, e_plus: str) -> Tuple[CoxeterElement, CoxeterElement]:
    """
    (^{lambda(e-)}w0^{lambda(e+)}, ^{lambda_*(e-)}w0^{lambda_*(e+)})

    The least and greatest sigma_zero a vanilla form over (e_minus, e_plus) can carry.
    """
    opposite = system.opposite()
    w0 = system.group.longest_element()
    lower = project_double(opposite.lam(e_minus), w0, system.lam(e_plus))
    upper = project_double(opposite.lam_substar(e_minus), w0, system.lam_substar(e_plus))
    return lower, upper


def side_element(system: RennerSystem, e_minus: str, e_plus: str) -> CoxeterElement:
    """^{lambda(e+)}w0^{lambda(e-)}, the outer factor of the class minima"""
    return project_double(system.lam(e_plus), system.group.longest_element(),
                          system.opposite().lam(e_minus))


def middle_set(system: RennerSystem, e_minus: str, e_plus: str) -> List[CoxeterElement]:
    """W_{lambda^*(e-)} (^{lambda_*(e-)}w0^{lambda_*(e+)}) W_{lambda^*(e+)}"""
    opposite = system.opposite()
    _, upper = middle_bounds(system, e_minus, e_plus)
    seen = {}
    for a in parabolic_elements(system.group, opposite.lam_star(e_minus)):
        for b in parabolic_elements(system.group, system.lam_star(e_plus)):
            product = a * upper * b
            seen.setdefault(product.value, product)
    return sorted(seen.values(), key=lambda w: (w.length(), w.reduced_word()))


def is_vanilla(form: VanillaForm) -> bool:
    """The coset conditions on the five components, first description of the middle set"""
    system, opposite = form.system, form.opposite
    group = system.group
    if any(group.is_left_descent(form.sigma_plus, i) for i in system.lam(form.e_plus)):
        return False
    if any(group.is_right_descent(form.sigma_minus, i) for i in opposite.lam(form.e_minus)):
        return False
    return form.sigma_zero in middle_set(system, form.e_minus, form.e_plus)


def in_second_middle_set(form: VanillaForm) -> bool:
    """sigma_zero in ^{lambda_*(e-)}(W_{lambda(e-)} w0 W_{lambda(e+)})^{lambda_*(e+)}"""
    system, opposite = form.system, form.opposite
    w0 = system.group.longest_element()
    left, right = opposite.lam(form.e_minus), system.lam(form.e_plus)
    return (
        project_double(left, form.sigma_zero, right) == project_double(left, w0, right)
        and is_min_double_coset_rep(form.sigma_zero, opposite.lam_substar(form.e_minus),
                                    system.lam_substar(form.e_plus))
    )


def _vanilla_witness(p: VanillaForm, q: VanillaForm, minus_set: Tuple[CoxeterElement, ...],
                     plus_set: Tuple[CoxeterElement, ...]) -> Optional[Tuple[CoxeterElement, CoxeterElement]]:
    group = p.system.group
    for w_minus in minus_set:
        if not group.bruhat_leq(q.sigma_minus * w_minus.inverse(), p.sigma_minus):
            continue
        for w_plus in plus_set:
            if (group.bruhat_leq(p.sigma_zero, w_minus * q.sigma_zero * w_plus)
                    and group.bruhat_leq(w_plus.inverse() * q.sigma_plus, p.sigma_plus)):
                return w_minus, w_plus
    return None


def leq_plus_vanilla(r: RennerElement, s: RennerElement, system: Optional[RennerSystem] = None) -> bool:
    """
    r <=+ s through vanilla forms

    Needs e- <= f- and e+ <= f+, then searches w- in W_{lambda_*(e-)} W_{lambda^*(f-)}
    and w+ in W_{lambda^*(f+)} W_{lambda_*(e+)} with tau- w-^-1 <= sigma-,
    sigma0 <= w- tau0 w+ and w+^-1 tau+ <= sigma+.
    """
    system, r, s = _resolve(r, s, system)
    p, q = vanilla_form(r, system), vanilla_form(s, system)
    opposite = system.opposite()
    if not (opposite.lattice.leq(p.e_minus, q.e_minus) and system.lattice.leq(p.e_plus, q.e_plus)):
        return False
    group = system.group
    minus_set = product_set(group, opposite.lam_substar(p.e_minus), opposite.lam_star(q.e_minus))
    plus_set = product_set(group, system.lam_star(q.e_plus), system.lam_substar(p.e_plus))
    return _vanilla_witness(p, q, minus_set, plus_set) is not None


def class_witness(r: RennerElement, s: RennerElement,
                  system: Optional[RennerSystem] = None) -> Optional[Tuple[CoxeterElement, CoxeterElement]]:
    """
    (w-, w+) showing r <=+ s for J-related r and s, or None

    Inside one J-class the search shrinks to w- in W_{lambda^*(e-)}, w+ in W_{lambda^*(e+)}.
    """
    system, r, s = _resolve(r, s, system)
    if r.e != s.e:
        raise NotRelatedError(f'{r} and {s} are not J-related')
    p, q = vanilla_form(r, system), vanilla_form(s, system)
    group = system.group
    empty = GeneratorSubset.empty(group.rank)
    minus_set = product_set(group, system.opposite().lam_star(p.e_minus), empty)
    plus_set = product_set(group, system.lam_star(p.e_plus), empty)
    return _vanilla_witness(p, q, minus_set, plus_set)


def leq_fast_in_class(r: RennerElement, s: RennerElement, relation: str, epsilon: str = PLUS,
                      system: Optional[RennerSystem] = None) -> bool:
    """
    r <=^epsilon s for elements of one Green's class, by a single Bruhat comparison

    Args:
        r: Lower candidate
        s: Upper candidate, T-related to r
        relation: 'J', 'L', 'R' or 'H'
        epsilon: '+' or '-'
        system: Lattice the order refers to (default: r's own system)

    Raises:
        NotRelatedError: r and s are not related under relation
    """
    check_epsilon(epsilon)
    system, r, s = _resolve(r, s, system)
    if system.green_key(r, relation) != system.green_key(s, relation):
        raise NotRelatedError(f'{r} and {s} are not {relation}-related')
    group = system.group

    if epsilon == MINUS:
        if relation == 'R':
            return group.bruhat_leq(system.right_standard_form(r).x, system.right_standard_form(s).x)
        if relation == 'H':
            return group.bruhat_leq(system.hybrid_standard_form(r).y, system.hybrid_standard_form(s).y)
        # <=- over Lambda is <=+ over the opposite lattice
        return leq_fast_in_class(r, s, relation, PLUS, system.opposite())

    if relation == 'L':
        return group.bruhat_leq(r.x, s.x)
    if relation == 'J':
        return class_witness(r, s, system) is not None
    p, q = vanilla_form(r, system), vanilla_form(s, system)
    if relation == 'R':
        return group.bruhat_leq(p.sigma_zero * p.sigma_plus, q.sigma_zero * q.sigma_plus)
    return group.bruhat_leq(p.sigma_zero, q.sigma_zero)


def sandwich(r: RennerElement, s: RennerElement,
             system: Optional[RennerSystem] = None) -> Tuple[RennerElement, RennerElement]:
    """
    Elements t, u with r <=+ t <=+ s, r <=+ u <=+ s, r R t L s and r L u R s

    Raises:
        NotRelatedError: r and s are not J-related, or r is not below s
    """
    system, r, s = _resolve(r, s, system)
    pair = class_witness(r, s, system)
    if pair is None:
        raise NotRelatedError(f'{r} is not below {s} in the +-order')
    w_minus, w_plus = pair
    p, q = vanilla_form(r, system), vanilla_form(s, system)
    t = q.replace(sigma_minus=p.sigma_minus, sigma_zero=w_minus * q.sigma_zero).assemble()
    u = q.replace(sigma_zero=q.sigma_zero * w_plus, sigma_plus=p.sigma_plus).assemble()
    logger.debug('sandwich of %s <= %s: t = %s, u = %s', r, s, t, u)
    return t, u
