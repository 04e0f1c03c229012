"""
Coxeter Group Module
Finite Coxeter systems: arithmetic, length, reduced words, descents, Bruhat and weak orders
"""

import logging
from collections import deque
from typing import Dict, FrozenSet, Hashable, List, Optional, Sequence, Tuple

import config

from .coxeter_matrix_module import (
    BudgetExceededError,
    CoxeterError,
    CoxeterMatrix,
    GroupMismatchError,
)
from .coxeter_models_module import GroupModel, PermutationModel, build_model

logger = logging.getLogger(__name__)


class CoxeterElement:
    """Immutable group element identified by its canonical model value"""

    __slots__ = ('group', 'value')

    def __init__(self, group: 'CoxeterGroup', value: Hashable):
        self.group = group
        self.value = value

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CoxeterElement)
            and self.group is other.group
            and self.value == other.value
        )

    def __hash__(self) -> int:
        return hash(self.value)

    def __mul__(self, other: 'CoxeterElement') -> 'CoxeterElement':
        return self.group.multiply(self, other)

    def inverse(self) -> 'CoxeterElement':
        return self.group.inverse(self)

    def length(self) -> int:
        return self.group.length(self)

    def reduced_word(self) -> Tuple[int, ...]:
        return self.group.reduced_word(self)

    def is_identity(self) -> bool:
        return self.value == self.group.identity.value

    def __str__(self) -> str:
        return self.group.format(self)

    def __repr__(self) -> str:
        return f'CoxeterElement({self.group.format(self)})'


class CoxeterGroup:
    """Finite Coxeter system (W, S) over a faithful combinatorial model"""

    def __init__(self, matrix: CoxeterMatrix, budget: Optional[int] = None,
                 model: Optional[GroupModel] = None, name: Optional[str] = None):
        """
        Build the group and verify its defining relations

        Args:
            matrix: Coxeter matrix; rejected if no model covers it
            budget: Element budget for enumeration (default from config)
            model: Explicit model, used by symmetric_group to keep n points at rank 0
            name: Display name
        """
        self.matrix = matrix
        self.rank = matrix.rank
        self.model = model if model is not None else build_model(matrix)
        if self.model.rank != self.rank:
            raise CoxeterError(f'model rank {self.model.rank} does not match matrix rank {self.rank}')
        self.name = name or matrix.describe()
        self.budget = config.element_budget(budget)

        self.identity = CoxeterElement(self, self.model.identity())
        self._generator_values = [self.model.generator(i) for i in range(self.rank)]
        self.generators = [CoxeterElement(self, value) for value in self._generator_values]

        self._length_cache: Dict[Hashable, int] = {}
        self._word_cache: Dict[Hashable, Tuple[int, ...]] = {}
        self._bruhat_cache: Dict[Tuple[Hashable, Hashable], bool] = {}
        # Parabolic products W_I W_J, filled by adherence.product_set
        self.product_cache: Dict[Tuple[Hashable, Hashable], Tuple['CoxeterElement', ...]] = {}
        self._elements: Optional[List[CoxeterElement]] = None
        self._longest: Optional[CoxeterElement] = None

        self._check_relations()

    def __repr__(self) -> str:
        return f'CoxeterGroup({self.name})'

    def _check_relations(self):
        """(st)^m(s,t) = 1 with m(s,t) the exact order, for every pair"""
        for i in range(1, self.rank + 1):
            for j in range(i, self.rank + 1):
                m = self.matrix.m(i, j)
                product = self.generator(i) * self.generator(j)
                power = product
                for k in range(1, m):
                    if power.is_identity():
                        raise CoxeterError(f'(s{i}s{j})^{k} = 1 but m = {m}; model is not faithful')
                    power = power * product
                if not power.is_identity():
                    raise CoxeterError(f'(s{i}s{j})^{m} != 1 under the model')

    # Construction helpers

    def _check(self, *elements: CoxeterElement):
        for element in elements:
            if not isinstance(element, CoxeterElement) or element.group is not self:
                raise GroupMismatchError(f'{element!r} does not belong to {self!r}')

    def _check_index(self, index: int):
        if not 1 <= index <= self.rank:
            raise CoxeterError(f'generator index {index} outside 1..{self.rank}')

    def generator(self, index: int) -> CoxeterElement:
        """Generator s_index, 1-based"""
        self._check_index(index)
        return self.generators[index - 1]

    def from_word(self, word: Sequence[int]) -> CoxeterElement:
        value = self.identity.value
        for index in word:
            self._check_index(index)
            value = self.model.multiply(value, self._generator_values[index - 1])
        return CoxeterElement(self, value)

    def element(self, value: Hashable) -> CoxeterElement:
        return CoxeterElement(self, value)

    def parse_element(self, text: str) -> CoxeterElement:
        """
        Read an element literal

        Comma or bracket literals go to the model ('2,3,1', '[-1,2]', '(2,1)');
        'e' or 'id' is the identity; otherwise space-separated generator indices.
        """
        body = text.strip()
        if body in ('e', 'id'):
            return self.identity
        if ',' in body or body.startswith(('[', '(')):
            return CoxeterElement(self, self.model.parse(body))
        try:
            word = [int(token) for token in body.split()]
        except ValueError:
            raise CoxeterError(f'cannot read {text!r} as an element of {self.name}') from None
        return self.from_word(word)

    def format(self, element: CoxeterElement) -> str:
        return self.model.format(element.value)

    # Arithmetic

    def multiply(self, u: CoxeterElement, v: CoxeterElement) -> CoxeterElement:
        self._check(u, v)
        return CoxeterElement(self, self.model.multiply(u.value, v.value))

    def inverse(self, w: CoxeterElement) -> CoxeterElement:
        self._check(w)
        return CoxeterElement(self, self.model.inverse(w.value))

    def is_right_descent(self, w: CoxeterElement, index: int) -> bool:
        self._check_index(index)
        return self.model.is_right_descent(w.value, index - 1)

    def is_left_descent(self, w: CoxeterElement, index: int) -> bool:
        self._check_index(index)
        return self.model.is_right_descent(self.model.inverse(w.value), index - 1)

    def right_descents(self, w: CoxeterElement) -> FrozenSet[int]:
        """{s : l(ws) < l(w)} as 1-based indices"""
        self._check(w)
        return frozenset(
            i + 1 for i in range(self.rank) if self.model.is_right_descent(w.value, i)
        )

    def left_descents(self, w: CoxeterElement) -> FrozenSet[int]:
        """{s : l(sw) < l(w)} as 1-based indices"""
        self._check(w)
        inverse = self.model.inverse(w.value)
        return frozenset(
            i + 1 for i in range(self.rank) if self.model.is_right_descent(inverse, i)
        )

    def length(self, w: CoxeterElement) -> int:
        """Word length, by stripping right descents until none remain"""
        self._check(w)
        cached = self._length_cache.get(w.value)
        if cached is not None:
            return cached
        value, steps = w.value, 0
        while True:
            for i in range(self.rank):
                if self.model.is_right_descent(value, i):
                    value = self.model.multiply(value, self._generator_values[i])
                    steps += 1
                    break
            else:
                break
        self._length_cache[w.value] = steps
        return steps

    def reduced_word(self, w: CoxeterElement) -> Tuple[int, ...]:
        """Reduced word built by stripping the lowest-index left descent first"""
        self._check(w)
        cached = self._word_cache.get(w.value)
        if cached is not None:
            return cached
        word: List[int] = []
        current = w
        while True:
            descents = self.left_descents(current)
            if not descents:
                break
            s = min(descents)
            word.append(s)
            current = self.generators[s - 1] * current
        result = tuple(word)
        self._word_cache[w.value] = result
        return result

    def support(self, w: CoxeterElement) -> FrozenSet[int]:
        """Generators occurring in any (hence every) reduced word"""
        return frozenset(self.reduced_word(w))

    # Orders

    def bruhat_leq(self, u: CoxeterElement, v: CoxeterElement) -> bool:
        """
        Bruhat order by the descent recursion

        For s a left descent of v: u <= v iff min(u, su) <= sv.
        """
        self._check(u, v)
        key = (u.value, v.value)
        cached = self._bruhat_cache.get(key)
        if cached is not None:
            return cached

        lu, lv = self.length(u), self.length(v)
        if lu > lv:
            result = False
        elif lu == lv:
            result = u.value == v.value
        else:
            s = min(self.left_descents(v))
            generator = self.generators[s - 1]
            smaller_u = generator * u if self.is_left_descent(u, s) else u
            result = self.bruhat_leq(smaller_u, generator * v)

        self._bruhat_cache[key] = result
        return result

    def weak_leq_left(self, u: CoxeterElement, v: CoxeterElement) -> bool:
        """u <=_L v iff l(v) = l(u) + l(v u^-1)"""
        self._check(u, v)
        return self.length(v) == self.length(u) + self.length(v * u.inverse())

    def weak_leq_right(self, u: CoxeterElement, v: CoxeterElement) -> bool:
        """u <=_R v iff l(v) = l(u) + l(u^-1 v)"""
        self._check(u, v)
        return self.length(v) == self.length(u) + self.length(u.inverse() * v)

    def longest_element(self) -> CoxeterElement:
        """w0 by greedy ascent"""
        if self._longest is None:
            current = self.identity
            while True:
                ascents = [i for i in range(1, self.rank + 1) if not self.is_right_descent(current, i)]
                if not ascents:
                    break
                current = current * self.generators[ascents[0] - 1]
            self._longest = current
        return self._longest

    def conjugate_by_longest(self, index: int) -> int:
        """The generator index j with w0 s_index w0 = s_j"""
        w0 = self.longest_element()
        image = w0 * self.generator(index) * w0
        for j, generator in enumerate(self.generators, start=1):
            if generator == image:
                return j
        raise CoxeterError(f'w0 s{index} w0 is not a generator')

    # Enumeration

    def enumerate(self) -> List[CoxeterElement]:
        """
        All elements, sorted by (length, reduced word)

        Raises:
            BudgetExceededError: The group is larger than the element budget
        """
        if self._elements is None:
            seen = {self.identity.value}
            queue = deque([self.identity.value])
            while queue:
                value = queue.popleft()
                for generator in self._generator_values:
                    product = self.model.multiply(value, generator)
                    if product not in seen:
                        seen.add(product)
                        if len(seen) > self.budget:
                            raise BudgetExceededError(
                                f'{self.name} has more than {self.budget} elements'
                            )
                        queue.append(product)
            elements = [CoxeterElement(self, value) for value in seen]
            elements.sort(key=lambda w: (self.length(w), self.reduced_word(w)))
            logger.debug('enumerated %s: %d elements', self.name, len(elements))
            self._elements = elements
        return list(self._elements)

    def order(self) -> int:
        return len(self.enumerate())

    def bruhat_interval(self, u: CoxeterElement, v: CoxeterElement) -> List[CoxeterElement]:
        """[u, v] in Bruhat order"""
        self._check(u, v)
        return [w for w in self.enumerate() if self.bruhat_leq(u, w) and self.bruhat_leq(w, v)]


def new_group(matrix: CoxeterMatrix, budget: Optional[int] = None) -> CoxeterGroup:
    return CoxeterGroup(matrix, budget=budget)


def symmetric_group(points: int, budget: Optional[int] = None) -> CoxeterGroup:
    """S_points as a type A group; points = 1 gives the trivial group of rank 0"""
    return CoxeterGroup(
        CoxeterMatrix.type_a(points - 1),
        budget=budget,
        model=PermutationModel(points),
        name=f'S{points}',
    )


def group_from_name(name: str, budget: Optional[int] = None) -> CoxeterGroup:
    return CoxeterGroup(CoxeterMatrix.from_name(name), budget=budget)


def load_group(path: str, budget: Optional[int] = None) -> CoxeterGroup:
    return CoxeterGroup(CoxeterMatrix.load(path), budget=budget)
