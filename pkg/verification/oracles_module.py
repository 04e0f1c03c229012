"""
Oracles Module
Brute-force reference computations that cross-check the production code paths

Nothing in here is used by the coxeter, parabolic, renner, adherence or greens
packages; every function rebuilds its answer from definitions by exhaustive search.
"""

from itertools import combinations, permutations, product
from typing import Callable, Hashable, Iterable, List, Optional, Sequence, Set, Tuple

from coxeter import CoxeterElement, CoxeterGroup
from parabolic import GeneratorSubset, parabolic_elements
from renner import RennerElement, RennerSystem

Vector = Tuple[int, ...]


# Coxeter groups

def subword_values(group: CoxeterGroup, word: Sequence[int]) -> Set[Hashable]:
    """Values of all subword products of a word"""
    values = set()
    for mask in product((False, True), repeat=len(word)):
        values.add(group.from_word([s for s, keep in zip(word, mask) if keep]).value)
    return values


def subword_bruhat_leq(u: CoxeterElement, v: CoxeterElement) -> bool:
    """u <= v iff u is a subword product of a reduced word of v"""
    return u.value in subword_values(v.group, v.reduced_word())


def _shortest(elements: Iterable[CoxeterElement]) -> CoxeterElement:
    return min(elements, key=lambda w: (w.length(), w.reduced_word()))


def brute_right_minimum(w: CoxeterElement, subset: GeneratorSubset) -> CoxeterElement:
    """Shortest element of w W_I by scanning the coset"""
    return _shortest(w * p for p in parabolic_elements(w.group, subset))


def brute_left_minimum(subset: GeneratorSubset, w: CoxeterElement) -> CoxeterElement:
    """Shortest element of W_I w"""
    return _shortest(p * w for p in parabolic_elements(w.group, subset))


def brute_double_minimum(left: GeneratorSubset, w: CoxeterElement, right: GeneratorSubset) -> CoxeterElement:
    """Shortest element of W_I w W_J"""
    group = w.group
    return _shortest(
        a * w * b for a in parabolic_elements(group, left) for b in parabolic_elements(group, right)
    )


def bruhat_maximum(elements: Iterable[CoxeterElement]) -> Optional[CoxeterElement]:
    """The Bruhat-largest element of a set, or None if the set has no maximum"""
    pool = list({w.value: w for w in elements}.values())
    for candidate in pool:
        if all(subword_bruhat_leq(w, candidate) for w in pool):
            return candidate
    return None


def circ_candidates(u: CoxeterElement, v: CoxeterElement) -> List[Optional[CoxeterElement]]:
    """
    Maxima of {u'v : u' <= u}, {uv' : v' <= v} and {u'v' : u' <= u, v' <= v}

    All three equal the optimization operator u o v.
    """
    group = u.group
    below_u = [w for w in group.enumerate() if subword_bruhat_leq(w, u)]
    below_v = [w for w in group.enumerate() if subword_bruhat_leq(w, v)]
    return [
        bruhat_maximum(a * v for a in below_u),
        bruhat_maximum(u * b for b in below_v),
        bruhat_maximum(a * b for a in below_u for b in below_v),
    ]


# Rook monoid

def partial_injections(n: int) -> List[Vector]:
    """All partial injections of 1..n as vectors, 0 where undefined"""
    result = []
    for k in range(n + 1):
        for domain in combinations(range(n), k):
            for images in permutations(range(1, n + 1), k):
                vector = [0] * n
                for position, image in zip(domain, images):
                    vector[position] = image
                result.append(tuple(vector))
    return result


def rook_product(v: Vector, w: Vector) -> Vector:
    """Matrix product of the two partial permutation matrices, read back as a vector"""
    n = len(v)
    result = [0] * n
    for column in range(n):
        middle = w[column]
        if middle:
            result[column] = v[middle - 1]
    return tuple(result)


def rook_transpose(v: Vector) -> Vector:
    result = [0] * len(v)
    for column, row in enumerate(v, start=1):
        if row:
            result[row - 1] = column
    return tuple(result)


# Renner systems

def brute_idempotents(system: RennerSystem) -> List[RennerElement]:
    return [r for r in system.enumerate_monoid() if r * r == r]


def brute_left_forms(r: RennerElement) -> List[Tuple[CoxeterElement, str, CoxeterElement]]:
    """Every (x, e, y) with x in W^{lambda_*(e)}, y in ^{lambda(e)}W and x e y = r"""
    system = r.system
    group = system.group
    found = []
    for e in system.lattice.idems:
        idem = system.idempotent(e)
        for x in group.enumerate():
            if any(group.is_right_descent(x, i) for i in system.lam_substar(e)):
                continue
            for y in group.enumerate():
                if any(group.is_left_descent(y, i) for i in system.lam(e)):
                    continue
                if system.unit(x) * idem * system.unit(y) == r:
                    found.append((x, e, y))
    return found


def brute_class(r: RennerElement, relation: str) -> List[RennerElement]:
    """T_r from principal ideals: W r for L, r W for R, both for H and W r W for J"""
    system = r.system
    units = [system.unit(w) for w in system.group.enumerate()]
    left = {u * r for u in units}
    right = {r * u for u in units}
    if relation == 'J':
        keep = {u * s for u in units for s in right}
    elif relation == 'L':
        keep = left
    elif relation == 'R':
        keep = right
    else:
        keep = left & right
    return [s for s in system.enumerate_monoid() if s in keep]


def brute_extremum(members: Sequence[RennerElement],
                   relation: Callable[[RennerElement, RennerElement], bool],
                   which: str) -> Optional[RennerElement]:
    """The member below (min) or above (max) every other member, if one exists"""
    for candidate in members:
        if which == 'min' and all(relation(candidate, t) for t in members):
            return candidate
        if which == 'max' and all(relation(t, candidate) for t in members):
            return candidate
    return None


def brute_vanilla_forms(r: RennerElement) -> List[Tuple[CoxeterElement, CoxeterElement, CoxeterElement]]:
    """
    Every (sigma_minus, sigma_zero, sigma_plus) over e = r.e with r = sigma_minus e^- sigma_zero e sigma_plus

    sigma_minus in W^{lambda(e^-)}, sigma_plus in ^{lambda(e)}W and sigma_zero ranges over
    W_{lambda^*(e^-)} (^{lambda_*(e^-)}w0^{lambda_*(e)}) W_{lambda^*(e)}.
    """
    system = r.system
    opposite = system.opposite()
    group = system.group
    e = r.e
    upper = brute_double_minimum(opposite.lam_substar(e), group.longest_element(), system.lam_substar(e))
    middles = {
        (a * upper * b).value: a * upper * b
        for a in parabolic_elements(group, opposite.lam_star(e))
        for b in parabolic_elements(group, system.lam_star(e))
    }
    e_minus, e_plus = opposite.idempotent(e), system.idempotent(e)
    found = []
    for sigma_minus in group.enumerate():
        if any(group.is_right_descent(sigma_minus, i) for i in opposite.lam(e)):
            continue
        for sigma_plus in group.enumerate():
            if any(group.is_left_descent(sigma_plus, i) for i in system.lam(e)):
                continue
            for sigma_zero in middles.values():
                candidate = (system.unit(sigma_minus) * e_minus * system.unit(sigma_zero)
                             * e_plus * system.unit(sigma_plus))
                if candidate == r:
                    found.append((sigma_minus, sigma_zero, sigma_plus))
    return found
