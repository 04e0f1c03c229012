"""
Coxeter Models Module
Faithful combinatorial element models for the supported finite families
"""

from abc import ABC, abstractmethod
from typing import Hashable, List, Sequence, Tuple

from .coxeter_matrix_module import Component, CoxeterError, CoxeterMatrix


class GroupModel(ABC):
    """Concrete faithful action of a Coxeter group; generators are 0-based here"""

    rank: int

    @abstractmethod
    def identity(self) -> Hashable:
        pass

    @abstractmethod
    def generator(self, index: int) -> Hashable:
        pass

    @abstractmethod
    def multiply(self, left: Hashable, right: Hashable) -> Hashable:
        pass

    @abstractmethod
    def inverse(self, value: Hashable) -> Hashable:
        pass

    @abstractmethod
    def is_right_descent(self, value: Hashable, index: int) -> bool:
        pass

    @abstractmethod
    def format(self, value: Hashable) -> str:
        pass

    @abstractmethod
    def parse(self, text: str) -> Hashable:
        pass


class PermutationModel(GroupModel):
    """S_n as one-line permutations of 1..n; (uv)(i) = u(v(i))"""

    def __init__(self, points: int):
        if points < 1:
            raise CoxeterError(f'a permutation model needs at least one point, got {points}')
        self.points = points
        self.rank = points - 1

    def identity(self) -> Tuple[int, ...]:
        return tuple(range(1, self.points + 1))

    def generator(self, index: int) -> Tuple[int, ...]:
        value = list(range(1, self.points + 1))
        value[index], value[index + 1] = value[index + 1], value[index]
        return tuple(value)

    def multiply(self, left, right):
        return tuple(left[k - 1] for k in right)

    def inverse(self, value):
        result = [0] * self.points
        for position, image in enumerate(value, start=1):
            result[image - 1] = position
        return tuple(result)

    def is_right_descent(self, value, index):
        return value[index] > value[index + 1]

    def format(self, value):
        return '[' + ','.join(str(k) for k in value) + ']'

    def parse(self, text):
        value = _parse_tuple(text)
        if sorted(value) != list(range(1, self.points + 1)):
            raise CoxeterError(f'{text!r} is not a permutation of 1..{self.points}')
        return value


class SignedPermutationModel(GroupModel):
    """
    B_n as signed permutations with u(-k) = -u(k)

    Generator 1 negates position 1; generator i >= 2 swaps positions i-1 and i.
    """

    def __init__(self, rank: int):
        if rank < 1:
            raise CoxeterError(f'type B needs rank at least 1, got {rank}')
        self.rank = rank

    def identity(self):
        return tuple(range(1, self.rank + 1))

    def generator(self, index):
        value = list(range(1, self.rank + 1))
        if index == 0:
            value[0] = -1
        else:
            value[index - 1], value[index] = value[index], value[index - 1]
        return tuple(value)

    def multiply(self, left, right):
        return tuple(left[k - 1] if k > 0 else -left[-k - 1] for k in right)

    def inverse(self, value):
        result = [0] * self.rank
        for position, image in enumerate(value, start=1):
            result[abs(image) - 1] = position if image > 0 else -position
        return tuple(result)

    def is_right_descent(self, value, index):
        if index == 0:
            return value[0] < 0
        return value[index - 1] > value[index]

    def format(self, value):
        return '[' + ','.join(str(k) for k in value) + ']'

    def parse(self, text):
        value = _parse_tuple(text)
        if sorted(abs(k) for k in value) != list(range(1, self.rank + 1)):
            raise CoxeterError(f'{text!r} is not a signed permutation of 1..{self.rank}')
        return value


class DihedralModel(GroupModel):
    """
    I2(m) as pairs (k, flip) standing for rho^k tau^flip

    s1 = tau and s2 = rho tau, so rho = s2 s1.
    """

    def __init__(self, m: int):
        if m < 2:
            raise CoxeterError(f'dihedral order parameter must be at least 2, got {m}')
        self.m = m
        self.rank = 2

    def identity(self):
        return (0, 0)

    def generator(self, index):
        return (0, 1) if index == 0 else (1, 1)

    def multiply(self, left, right):
        a, f = left
        b, g = right
        return ((a + (b if f == 0 else -b)) % self.m, f ^ g)

    def inverse(self, value):
        k, flip = value
        return value if flip else ((-k) % self.m, 0)

    def length(self, value) -> int:
        k, flip = value
        if not flip:
            return 2 * min(k, self.m - k)
        candidates = [2 * ((self.m - k) % self.m) + 1]
        if k >= 1:
            candidates.append(2 * k - 1)
        return min(candidates)

    def is_right_descent(self, value, index):
        return self.length(self.multiply(value, self.generator(index))) < self.length(value)

    def format(self, value):
        return f'({value[0]},{value[1]})'

    def parse(self, text):
        value = _parse_tuple(text)
        if len(value) != 2 or value[1] not in (0, 1) or not 0 <= value[0] < self.m:
            raise CoxeterError(f'{text!r} is not a dihedral element (k,flip) with 0 <= k < {self.m}')
        return value


class ProductModel(GroupModel):
    """Direct product of irreducible factors placed on arbitrary global generators"""

    def __init__(self, rank: int, factors: Sequence[Tuple[GroupModel, Tuple[int, ...]]]):
        self.rank = rank
        self.factors = list(factors)
        self._single = len(self.factors) == 1
        self._placement: List[Tuple[int, int]] = [(-1, -1)] * rank
        for slot, (_, generators) in enumerate(self.factors):
            for local, global_index in enumerate(generators):
                self._placement[global_index] = (slot, local)

    def _wrap(self, parts):
        return parts[0] if self._single else tuple(parts)

    def _parts(self, value):
        return (value,) if self._single else value

    def identity(self):
        return self._wrap([model.identity() for model, _ in self.factors])

    def generator(self, index):
        slot, local = self._placement[index]
        parts = [model.identity() for model, _ in self.factors]
        parts[slot] = self.factors[slot][0].generator(local)
        return self._wrap(parts)

    def multiply(self, left, right):
        return self._wrap([
            model.multiply(a, b)
            for (model, _), a, b in zip(self.factors, self._parts(left), self._parts(right))
        ])

    def inverse(self, value):
        return self._wrap([
            model.inverse(part) for (model, _), part in zip(self.factors, self._parts(value))
        ])

    def is_right_descent(self, value, index):
        slot, local = self._placement[index]
        return self.factors[slot][0].is_right_descent(self._parts(value)[slot], local)

    def format(self, value):
        if not self.factors:
            return 'e'
        return 'x'.join(
            model.format(part) for (model, _), part in zip(self.factors, self._parts(value))
        )

    def parse(self, text):
        if not self.factors:
            if text.strip() in ('', 'e', '()'):
                return ()
            raise CoxeterError(f'{text!r} is not the identity of the trivial group')
        tokens = text.replace(' ', '').split('x')
        if len(tokens) != len(self.factors):
            raise CoxeterError(f'{text!r} needs {len(self.factors)} factors joined by "x"')
        return self._wrap([model.parse(token) for (model, _), token in zip(self.factors, tokens)])


def build_model(matrix: CoxeterMatrix) -> GroupModel:
    """
    Choose the model for a matrix

    A single component already in 1..rank order is modelled directly; anything
    else goes through ProductModel so the global generator labels are kept.
    """
    components = matrix.classify()
    factors = [(_component_model(component), component.generators) for component in components]
    if len(factors) == 1 and factors[0][1] == tuple(range(matrix.rank)):
        return factors[0][0]
    return ProductModel(matrix.rank, factors)


def _component_model(component: Component) -> GroupModel:
    if component.kind == 'A':
        return PermutationModel(component.parameter)
    if component.kind == 'B':
        return SignedPermutationModel(component.parameter)
    return DihedralModel(component.parameter)


def _parse_tuple(text: str) -> Tuple[int, ...]:
    body = text.strip().strip('[]()')
    try:
        return tuple(int(token) for token in body.split(',') if token.strip())
    except ValueError:
        raise CoxeterError(f'cannot read {text!r} as a comma-separated element') from None
