"""
Parabolic Module
Standard parabolic subgroups, minimal coset representatives and the optimization operator
"""

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple

from coxeter import CoxeterElement, CoxeterError, CoxeterGroup, GroupMismatchError


class OverlappingSubsetsError(CoxeterError):
    """Two generator subsets that must be disjoint share a generator"""


@dataclass(frozen=True)
class GeneratorSubset:
    """Subset I of the generators 1..rank, stored as a bitset"""
    rank: int
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.rank:
            raise CoxeterError(f'bitset {self.bits:b} has generators outside 1..{self.rank}')

    @classmethod
    def of(cls, rank: int, generators: Iterable[int]) -> 'GeneratorSubset':
        bits = 0
        for index in generators:
            if not 1 <= index <= rank:
                raise CoxeterError(f'generator {index} outside 1..{rank}')
            bits |= 1 << (index - 1)
        return cls(rank, bits)

    @classmethod
    def empty(cls, rank: int) -> 'GeneratorSubset':
        return cls(rank, 0)

    @classmethod
    def full(cls, rank: int) -> 'GeneratorSubset':
        return cls(rank, (1 << rank) - 1)

    @classmethod
    def parse(cls, rank: int, text: str) -> 'GeneratorSubset':
        """Read '1,3'; '-' or '' is the empty set"""
        body = text.strip().strip('{}')
        if body in ('', '-'):
            return cls.empty(rank)
        try:
            return cls.of(rank, (int(token) for token in body.split(',')))
        except ValueError:
            raise CoxeterError(f'cannot read generator subset {text!r}') from None

    def __contains__(self, index: int) -> bool:
        return 1 <= index <= self.rank and bool(self.bits >> (index - 1) & 1)

    def __iter__(self) -> Iterator[int]:
        return (i for i in range(1, self.rank + 1) if self.bits >> (i - 1) & 1)

    def __len__(self) -> int:
        return bin(self.bits).count('1')

    def _same_rank(self, other: 'GeneratorSubset'):
        if self.rank != other.rank:
            raise CoxeterError(f'subsets of rank {self.rank} and {other.rank} do not mix')

    def __or__(self, other: 'GeneratorSubset') -> 'GeneratorSubset':
        self._same_rank(other)
        return GeneratorSubset(self.rank, self.bits | other.bits)

    def __and__(self, other: 'GeneratorSubset') -> 'GeneratorSubset':
        self._same_rank(other)
        return GeneratorSubset(self.rank, self.bits & other.bits)

    def __sub__(self, other: 'GeneratorSubset') -> 'GeneratorSubset':
        self._same_rank(other)
        return GeneratorSubset(self.rank, self.bits & ~other.bits)

    def issubset(self, other: 'GeneratorSubset') -> bool:
        self._same_rank(other)
        return self.bits & ~other.bits == 0

    def isdisjoint(self, other: 'GeneratorSubset') -> bool:
        self._same_rank(other)
        return self.bits & other.bits == 0

    def __str__(self) -> str:
        return ','.join(str(i) for i in self) or '-'


def all_subsets(rank: int) -> List[GeneratorSubset]:
    return [GeneratorSubset(rank, bits) for bits in range(1 << rank)]


def _check_rank(group: CoxeterGroup, subset: GeneratorSubset):
    if subset.rank != group.rank:
        raise CoxeterError(f'subset of rank {subset.rank} used with {group!r} of rank {group.rank}')


def project_right(w: CoxeterElement, subset: GeneratorSubset) -> Tuple[CoxeterElement, CoxeterElement]:
    """
    Split w = w^I * w_I with w^I minimal in w W_I

    Args:
        w: Group element
        subset: The generator subset I

    Returns:
        (w_min, w_par) with lengths adding up to l(w)
    """
    group = w.group
    _check_rank(group, subset)
    current, parabolic = w, group.identity
    while True:
        for index in subset:
            if group.is_right_descent(current, index):
                generator = group.generators[index - 1]
                current = current * generator
                parabolic = generator * parabolic
                break
        else:
            return current, parabolic


def project_left(subset: GeneratorSubset, w: CoxeterElement) -> Tuple[CoxeterElement, CoxeterElement]:
    """Split w = w_I * ^I w; returns (w_par, w_min)"""
    group = w.group
    _check_rank(group, subset)
    current, parabolic = w, group.identity
    while True:
        for index in subset:
            if group.is_left_descent(current, index):
                generator = group.generators[index - 1]
                current = generator * current
                parabolic = parabolic * generator
                break
        else:
            return parabolic, current


def project_double(left: GeneratorSubset, w: CoxeterElement, right: GeneratorSubset) -> CoxeterElement:
    """Minimum ^I w^J of W_I w W_J, computed as ^I(w^J)"""
    return project_left(left, project_right(w, right)[0])[1]


def double_coset_decompose(left: GeneratorSubset, w: CoxeterElement,
                           right: GeneratorSubset) -> Tuple[CoxeterElement, CoxeterElement, CoxeterElement]:
    """One length-additive factorization w = u * ^I w^J * v with u in W_I, v in W_J"""
    head, tail = project_right(w, right)
    prefix, middle = project_left(left, head)
    return prefix, middle, tail


def is_min_double_coset_rep(w: CoxeterElement, left: GeneratorSubset, right: GeneratorSubset) -> bool:
    group = w.group
    _check_rank(group, left)
    _check_rank(group, right)
    return (
        not any(group.is_left_descent(w, index) for index in left)
        and not any(group.is_right_descent(w, index) for index in right)
    )


def is_in_parabolic(w: CoxeterElement, subset: GeneratorSubset) -> bool:
    _check_rank(w.group, subset)
    return all(index in subset for index in w.group.support(w))


def circ(u: CoxeterElement, v: CoxeterElement) -> CoxeterElement:
    """
    Optimization operator: the Bruhat maximum of {u'v : u' <= u}

    Peels the lowest left descent s of u, recurses on (su, v) and keeps the
    longer of x and sx.
    """
    group = u.group
    if v.group is not group:
        raise GroupMismatchError(f'{u!r} and {v!r} belong to different groups')
    if u.is_identity():
        return v
    s = min(group.left_descents(u))
    generator = group.generators[s - 1]
    partial = circ(generator * u, v)
    lifted = generator * partial
    return lifted if lifted.length() > partial.length() else partial


def parabolics_commute(group: CoxeterGroup, first: GeneratorSubset, second: GeneratorSubset) -> bool:
    """
    True iff m(s, t) = 2 for all s in the first subset and t in the second

    Raises:
        OverlappingSubsetsError: The subsets share a generator
    """
    _check_rank(group, first)
    _check_rank(group, second)
    if not first.isdisjoint(second):
        raise OverlappingSubsetsError(f'subsets {{{first}}} and {{{second}}} overlap')
    return all(group.matrix.m(s, t) == 2 for s in first for t in second)


def parabolic_elements(group: CoxeterGroup, subset: GeneratorSubset) -> List[CoxeterElement]:
    """All of W_I, sorted by (length, reduced word)"""
    _check_rank(group, subset)
    generators = [group.generators[index - 1] for index in subset]
    seen = {group.identity}
    queue = deque([group.identity])
    while queue:
        current = queue.popleft()
        for generator in generators:
            product = current * generator
            if product not in seen:
                seen.add(product)
                queue.append(product)
    return sorted(seen, key=lambda w: (w.length(), w.reduced_word()))


def longest_in_parabolic(group: CoxeterGroup, subset: GeneratorSubset) -> CoxeterElement:
    """w0(I) by greedy ascent inside W_I"""
    _check_rank(group, subset)
    current = group.identity
    while True:
        ascents = [index for index in subset if not group.is_right_descent(current, index)]
        if not ascents:
            return current
        current = current * group.generators[ascents[0] - 1]


def split_commuting(w: CoxeterElement, first: GeneratorSubset,
                    second: GeneratorSubset) -> Tuple[CoxeterElement, CoxeterElement]:
    """
    Factor w in W_{I u J} as a * b with a in W_I and b in W_J

    Requires I and J disjoint and commuting, so the factors commute too.
    """
    head, tail = project_right(w, second)
    if not is_in_parabolic(head, first):
        raise CoxeterError(f'{w} does not lie in W_{{{first | second}}}')
    return head, tail


def minimal_right_representatives(group: CoxeterGroup, subset: GeneratorSubset) -> List[CoxeterElement]:
    """W^I: elements with no right descent in I"""
    return [
        w for w in group.enumerate()
        if not any(group.is_right_descent(w, index) for index in subset)
    ]


def minimal_left_representatives(group: CoxeterGroup, subset: GeneratorSubset) -> List[CoxeterElement]:
    """^I W: elements with no left descent in I"""
    return [
        w for w in group.enumerate()
        if not any(group.is_left_descent(w, index) for index in subset)
    ]


def conjugate_subset(group: CoxeterGroup, subset: GeneratorSubset) -> GeneratorSubset:
    """w0 I w0, again a set of generators"""
    _check_rank(group, subset)
    return GeneratorSubset.of(group.rank, (group.conjugate_by_longest(index) for index in subset))
