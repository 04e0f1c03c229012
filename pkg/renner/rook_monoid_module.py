"""
Rook Monoid Module
The rook monoid R_n of partial injections as a Renner-Coxeter system over S_n
"""

import logging
from math import comb, factorial
from typing import Dict, FrozenSet, Optional, Sequence, Tuple

import numpy as np

import config
from coxeter import symmetric_group
from parabolic import GeneratorSubset

from .renner_system_module import (
    CrossSectionLattice,
    MonoidAction,
    ParseError,
    RennerElement,
    RennerError,
    RennerSystem,
)

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


def compose(v: Sequence[int], w: Sequence[int]) -> Vector:
    """(v w)[k] = v[w[k]] where w[k] is defined, 0 elsewhere"""
    return tuple(v[k - 1] if k else 0 for k in w)


def check_vector(vector: Sequence[int], n: int) -> Vector:
    """Validate a partial injection vector of length n with entries 0..n"""
    vector = tuple(vector)
    if len(vector) != n:
        raise ParseError(f'{vector} has {len(vector)} entries, expected {n}')
    images = [k for k in vector if k]
    if any(not 0 <= k <= n for k in vector) or len(set(images)) != len(images):
        raise ParseError(f'{vector} is not a partial injection of 1..{n}')
    return vector


class RookAction(MonoidAction):
    """Partial permutation action: idempotents are partial identities on fixed domains"""

    def __init__(self, n: int, domains: Dict[str, FrozenSet[int]]):
        self.n = n
        self.domains = dict(domains)

    def idempotent_vector(self, e: str) -> Vector:
        domain = self.domains[e]
        return tuple(j if j in domain else 0 for j in range(1, self.n + 1))

    def vector(self, r: RennerElement) -> Vector:
        return compose(compose(r.x.value, self.idempotent_vector(r.e)), r.y.value)

    def factor(self, system: RennerSystem, vector: Sequence[int]) -> RennerElement:
        """
        Factor a partial injection as u e z and normalize

        z sends the sorted domain of v onto the sorted domain D of e and the rest
        onto the rest; u carries D to the images of v and fills up increasingly.
        """
        vector = check_vector(vector, self.n)
        defined = [j for j in range(1, self.n + 1) if vector[j - 1]]
        labels = [e for e, domain in self.domains.items() if len(domain) == len(defined)]
        if len(labels) != 1:
            raise RennerError(f'no unique idempotent of rank {len(defined)} in {system.name}')
        e = labels[0]
        domain = sorted(self.domains[e])
        outside = [k for k in range(1, self.n + 1) if k not in self.domains[e]]
        undefined = [j for j in range(1, self.n + 1) if not vector[j - 1]]

        z = [0] * self.n
        for source, target in zip(defined, domain):
            z[source - 1] = target
        for source, target in zip(undefined, outside):
            z[source - 1] = target

        u = [0] * self.n
        for source in defined:
            u[z[source - 1] - 1] = vector[source - 1]
        spare = iter(sorted(set(range(1, self.n + 1)) - set(vector)))
        for position in outside:
            u[position - 1] = next(spare)

        group = system.group
        return system.normalize(group.element(tuple(u)), e, group.element(tuple(z)))

    def parse(self, system, text):
        try:
            vector = tuple(int(token) for token in text.replace(' ', '').strip('[]').split(','))
        except ValueError:
            raise ParseError(f'{text!r} is not a comma-separated rook vector') from None
        return self.factor(system, vector)

    def format(self, system, r):
        return ','.join(str(k) for k in self.vector(r))

    def centralizer(self, system, e):
        return self.commuting_generators(system.group, e)

    def stabilizer(self, system, e):
        return self.absorbed_generators(system.group, e)

    def conjugate(self, system, s, e):
        generator = system.group.generator(s).value
        image = compose(compose(generator, self.idempotent_vector(e)), generator)
        return next((f for f in self.domains if self.idempotent_vector(f) == image), None)

    def commuting_generators(self, group, e: str) -> GeneratorSubset:
        idem = self.idempotent_vector(e)
        return GeneratorSubset.of(group.rank, (
            i for i, s in enumerate(group.generators, start=1)
            if compose(s.value, idem) == compose(idem, s.value)
        ))

    def absorbed_generators(self, group, e: str) -> GeneratorSubset:
        idem = self.idempotent_vector(e)
        return GeneratorSubset.of(group.rank, (
            i for i, s in enumerate(group.generators, start=1)
            if compose(s.value, idem) == idem == compose(idem, s.value)
        ))

    def opposite(self, group):
        """Partial identities conjugated by w0 = [n, ..., 1]"""
        return RookAction(self.n, {
            e: frozenset(self.n + 1 - j for j in domain) for e, domain in self.domains.items()
        })


def rook_domains(n: int, orientation: str) -> Dict[str, FrozenSet[int]]:
    """Domains of the partial identities e0..en for an orientation"""
    if orientation not in config.ROOK_ORIENTATIONS:
        raise RennerError(f'unknown rook orientation {orientation!r}')
    if orientation == 'leading':
        return {f'e{k}': frozenset(range(1, k + 1)) for k in range(n + 1)}
    return {f'e{k}': frozenset(range(n - k + 1, n + 1)) for k in range(n + 1)}


def rook_system(n: int, orientation: Optional[str] = None, budget: Optional[int] = None) -> RennerSystem:
    """
    R_n over S_n with the chain of partial identities as cross-section

    Args:
        n: Matrix size, at least 1
        orientation: 'leading' or 'trailing' diagonal ones (default from config)
        budget: Element budget

    Returns:
        RennerSystem whose type maps are read off the partial permutation action
    """
    if n < 1:
        raise RennerError(f'rook monoid needs n >= 1, got {n}')
    orientation = orientation or config.ROOK_IDEMPOTENT_ORIENTATION
    group = symmetric_group(n, budget=budget)
    action = RookAction(n, rook_domains(n, orientation))

    labels = [f'e{k}' for k in range(n + 1)]
    meet = {(a, b): labels[min(i, j)] for i, a in enumerate(labels) for j, b in enumerate(labels)}
    lam_star, lam_substar = {}, {}
    for e in labels:
        centralizer = action.commuting_generators(group, e)
        lam_substar[e] = action.absorbed_generators(group, e)
        lam_star[e] = centralizer - lam_substar[e]

    suffix = '' if orientation == config.ROOK_IDEMPOTENT_ORIENTATION else f':{orientation}'
    system = RennerSystem(
        group,
        CrossSectionLattice(group.rank, labels, meet, lam_star, lam_substar),
        action=action,
        name=f'rook:{n}{suffix}',
    )
    logger.debug('built %s with orientation %s', system.name, orientation)
    return system


def is_rook_system(system: RennerSystem) -> bool:
    return isinstance(system.action, RookAction)


def to_vector(r: RennerElement) -> Vector:
    if not is_rook_system(r.system):
        raise RennerError(f'{r.system.name} is not a rook monoid')
    return r.system.action.vector(r)


def from_vector(system: RennerSystem, vector: Sequence[int]) -> RennerElement:
    if not is_rook_system(system):
        raise RennerError(f'{system.name} is not a rook monoid')
    return system.action.factor(system, vector)


def to_matrix(r: RennerElement) -> np.ndarray:
    """0/1 partial permutation matrix; column j has its one in row v[j]"""
    vector = to_vector(r)
    matrix = np.zeros((len(vector), len(vector)), dtype=np.int8)
    for column, row in enumerate(vector):
        if row:
            matrix[row - 1, column] = 1
    return matrix


def from_matrix(system: RennerSystem, matrix: np.ndarray) -> RennerElement:
    matrix = np.asarray(matrix)
    n = system.action.n if is_rook_system(system) else -1
    if matrix.shape != (n, n) or not np.isin(matrix, (0, 1)).all():
        raise ParseError(f'expected a 0/1 matrix of shape ({n}, {n}), got shape {matrix.shape}')
    if (matrix.sum(axis=0) > 1).any() or (matrix.sum(axis=1) > 1).any():
        raise ParseError('matrix has a row or column with more than one 1')
    vector = [int(np.argmax(matrix[:, column])) + 1 if matrix[:, column].any() else 0
              for column in range(n)]
    return from_vector(system, vector)


def rank_of(r: RennerElement) -> int:
    return sum(1 for k in to_vector(r) if k)


def partial_injection_count(n: int) -> int:
    """sum over k of C(n,k)^2 k!"""
    return sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1))
