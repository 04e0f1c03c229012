"""
Verification Module
Named property suites run exhaustively against one Renner-Coxeter system
"""

import json
import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

import numpy as np

import config
from adherence import (
    EPSILONS,
    MINUS,
    PLUS,
    in_second_middle_set,
    is_partial_order,
    is_vanilla,
    leq,
    leq_fast_in_class,
    leq_minus,
    leq_plus,
    leq_plus_vanilla,
    middle_bounds,
    order_matrix,
    product_set,
    sandwich,
    side_element,
    vanilla_form,
)
from coxeter import CoxeterElement, CoxeterGroup, group_from_name
from greens import (
    RELATIONS,
    SUBMONOIDS,
    class_leq,
    class_of,
    classes,
    exists_criterion_leq,
    extremum,
    min_criterion_leq,
    special_submonoid,
    verify_counterexample,
)
from parabolic import (
    GeneratorSubset,
    all_subsets,
    circ,
    conjugate_subset,
    is_min_double_coset_rep,
    minimal_left_representatives,
    minimal_right_representatives,
    parabolic_elements,
    parabolics_commute,
    project_double,
    project_left,
    project_right,
)
from renner import (
    RennerElement,
    RennerSystem,
    from_vector,
    is_rook_system,
    partial_injection_count,
    rook_domains,
    to_vector,
    validate_system,
)

from .oracles_module import (
    brute_class,
    brute_double_minimum,
    brute_extremum,
    brute_idempotents,
    brute_left_forms,
    brute_left_minimum,
    brute_right_minimum,
    brute_vanilla_forms,
    circ_candidates,
    partial_injections,
    rook_product,
    rook_transpose,
    subword_bruhat_leq,
    subword_values,
)

logger = logging.getLogger(__name__)

SUITES = ('coxeter', 'parabolic', 'renner', 'adherence', 'greens')

Check = Callable[[], int]


class PropertyViolation(ValueError):
    """A named property failed on a concrete witness"""

    def __init__(self, name: str, detail: str):
        super().__init__(f'{name}: {detail}')
        self.name = name
        self.detail = detail


class _Mismatch(Exception):
    pass


def _require(condition: bool, detail: str):
    if not condition:
        raise _Mismatch(detail)


@lru_cache(maxsize=8)
def reference_group(name: str) -> CoxeterGroup:
    """A named group shared by every verifier, so its caches survive between runs"""
    return group_from_name(name)


@dataclass
class GroupTables:
    """A finite group indexed by position in enumerate(), with its product and order tables"""
    group: CoxeterGroup
    elements: List[CoxeterElement]
    index: Dict[Hashable, int]
    lengths: np.ndarray
    inverse: np.ndarray
    product: np.ndarray
    bruhat: np.ndarray
    weak_left: np.ndarray
    weak_right: np.ndarray

    @classmethod
    def build(cls, group: CoxeterGroup) -> 'GroupTables':
        elements = group.enumerate()
        index = {w.value: i for i, w in enumerate(elements)}
        return cls(
            group=group,
            elements=elements,
            index=index,
            lengths=np.array([w.length() for w in elements]),
            inverse=np.array([index[w.inverse().value] for w in elements]),
            product=np.array([[index[(u * v).value] for v in elements] for u in elements]),
            bruhat=order_matrix(elements, group.bruhat_leq),
            weak_left=order_matrix(elements, group.weak_leq_left),
            weak_right=order_matrix(elements, group.weak_leq_right),
        )

    def of(self, w: CoxeterElement) -> int:
        return self.index[w.value]

    def indices(self, elements: Sequence[CoxeterElement]) -> List[int]:
        return [self.index[w.value] for w in elements]

    def below(self, j: int) -> np.ndarray:
        return np.nonzero(self.bruhat[:, j])[0]

    def above(self, i: int) -> np.ndarray:
        return np.nonzero(self.bruhat[i, :])[0]

    def additive(self, i: int, j: int) -> bool:
        """l(uv) = l(u) + l(v)"""
        return self.lengths[self.product[i, j]] == self.lengths[i] + self.lengths[j]

    @property
    def longest(self) -> int:
        return int(np.argmax(self.lengths))


@dataclass
class PropertyResult:
    suite: str
    name: str
    passed: bool
    checked: int = 0
    detail: str = ''

    def to_dict(self) -> dict:
        return {
            'suite': self.suite,
            'name': self.name,
            'pass': self.passed,
            'checked': self.checked,
            'detail': self.detail,
        }


@dataclass
class VerificationReport:
    system: str
    results: List[PropertyResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    @property
    def first_failure(self) -> Optional[PropertyResult]:
        return next((result for result in self.results if not result.passed), None)

    def to_dict(self) -> dict:
        return {
            'system': self.system,
            'passed': self.passed,
            'results': [result.to_dict() for result in self.results],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def summary(self) -> str:
        lines = []
        for result in self.results:
            mark = 'ok  ' if result.passed else 'FAIL'
            line = f'[{mark}] {result.suite}: {result.name} ({result.checked} checks)'
            if not result.passed:
                line += f': {result.detail}'
            lines.append(line)
        held = sum(result.passed for result in self.results)
        lines.append(f'{self.system}: {held}/{len(self.results)} properties hold')
        return '\n'.join(lines)

    def raise_for_failure(self):
        """
        Raises:
            PropertyViolation: for the first failing property
        """
        failure = self.first_failure
        if failure is not None:
            raise PropertyViolation(f'{failure.suite}: {failure.name}', failure.detail)


class Verifier:
    """Runs the property suites of one system and collects a report"""

    def __init__(self, system: RennerSystem, workers: Optional[int] = None,
                 reference_groups: Optional[Sequence[str]] = None):
        """
        Initialize verifier

        Args:
            system: System under test; its group is checked by the coxeter and parabolic suites
            workers: Thread fan-out for the checks (default: config.DEFAULT_WORKERS)
            reference_groups: Named groups checked beside the system's own (default: config.REFERENCE_GROUPS)
        """
        self.system = system
        self.group = system.group
        self.opposite = system.opposite()
        self.workers = workers or config.DEFAULT_WORKERS
        if self.workers < 1:
            raise ValueError(f'workers must be positive, got {self.workers}')

        names = config.REFERENCE_GROUPS if reference_groups is None else reference_groups
        self.groups = [self.group]
        for name in names:
            group = reference_group(name)
            if all(group.matrix != known.matrix for known in self.groups):
                self.groups.append(group)

        self._lock = threading.Lock()
        self._elements: Optional[List[RennerElement]] = None
        self._index: Dict[RennerElement, int] = {}
        self._matrices: Dict[Tuple[str, bool], np.ndarray] = {}
        self._tables: Dict[CoxeterGroup, GroupTables] = {}

    # Running

    def properties(self, suite: str) -> List[Tuple[str, Check]]:
        if suite not in SUITES:
            raise ValueError(f'unknown suite {suite!r}; expected one of {", ".join(SUITES)}')
        return getattr(self, f'_{suite}_properties')()

    def run(self, suites: Optional[Sequence[str]] = None) -> VerificationReport:
        """
        Run the named suites (default: all) and report every property

        Checks fan out on a thread pool when workers > 1; the report keeps
        declaration order either way.
        """
        suites = list(suites or SUITES)
        jobs = [(suite, name, check) for suite in suites for name, check in self.properties(suite)]
        logger.debug('verifying %s: %d properties on %d workers', self.system.name, len(jobs), self.workers)

        if self.workers > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                results = list(pool.map(lambda job: self._evaluate(*job), jobs))
        else:
            results = [self._evaluate(*job) for job in jobs]

        report = VerificationReport(self.system.name, results)
        failure = report.first_failure
        if failure is not None:
            logger.warning('%s: %s failed: %s', self.system.name, failure.name, failure.detail)
        return report

    def _evaluate(self, suite: str, name: str, check: Check) -> PropertyResult:
        try:
            checked = check()
        except _Mismatch as exc:
            return PropertyResult(suite, name, False, detail=str(exc))
        except ValueError as exc:
            return PropertyResult(suite, name, False, detail=f'{type(exc).__name__}: {exc}')
        logger.debug('%s: %s held on %d checks', suite, name, checked)
        return PropertyResult(suite, name, True, checked)

    # Shared data

    @property
    def elements(self) -> List[RennerElement]:
        with self._lock:
            if self._elements is None:
                self._elements = self.system.enumerate_monoid()
                self._index = {r: i for i, r in enumerate(self._elements)}
        return self._elements

    def index(self, r: RennerElement) -> int:
        self.elements
        return self._index[r]

    def matrix(self, epsilon: str, opposite: bool = False) -> np.ndarray:
        """<=^epsilon on all elements, over Lambda or its opposite"""
        key = (epsilon, opposite)
        elements = self.elements
        with self._lock:
            if key not in self._matrices:
                system = self.opposite if opposite else self.system
                order = leq_plus if epsilon == PLUS else leq_minus
                self._matrices[key] = order_matrix(elements, lambda r, s: order(r, s, system))
            return self._matrices[key]

    def _comparator(self, epsilon: str) -> Callable[[RennerElement, RennerElement], bool]:
        order = self.matrix(epsilon)

        def below(r: RennerElement, s: RennerElement) -> bool:
            return bool(order[self.index(r), self.index(s)])

        return below

    # Group tables

    def tables(self, group: CoxeterGroup) -> GroupTables:
        with self._lock:
            if group not in self._tables:
                self._tables[group] = GroupTables.build(group)
            return self._tables[group]

    def _each_group(self) -> List[GroupTables]:
        return [self.tables(group) for group in self.groups]

    # coxeter

    def _coxeter_properties(self) -> List[Tuple[str, Check]]:
        return [
            ('generator relations', self._check_relations),
            ('bruhat order matches subwords', self._check_bruhat_subwords),
            ('bruhat order is a partial order', self._check_bruhat_partial_order),
            ('bruhat order bounds length and commutes with inversion', self._check_bruhat_monotone),
            ('w0 reverses bruhat order', self._check_w0_reversal),
            ('lengths, reduced words and descents', self._check_descents),
            ('longest element', self._check_longest),
            ('bruhat intervals are bounded', self._check_intervals),
            ('weak orders refine bruhat order', self._check_weak_orders),
            ('lifting property', self._check_lifting),
            ('length-additive products are monotone', self._check_additive_products),
            ('weakly absorbed factors multiply monotonically', self._check_weak_products),
        ]

    def _check_relations(self) -> int:
        count = 0
        for group in self.groups:
            for i in range(1, group.rank + 1):
                for j in range(1, group.rank + 1):
                    m = group.matrix.m(i, j)
                    _require(group.from_word((i, j) * m).is_identity(),
                             f'{group.name}: (s{i}s{j})^{m} is not the identity')
                    count += 1
        return count

    def _check_bruhat_subwords(self) -> int:
        count = 0
        for tables in self._each_group():
            group = tables.group
            for j, v in enumerate(tables.elements):
                below = subword_values(group, v.reduced_word())
                for i, u in enumerate(tables.elements):
                    _require(bool(tables.bruhat[i, j]) == (u.value in below),
                             f'{group.name}: bruhat_leq({u}, {v}) disagrees with the subword oracle')
                    count += 1
        return count

    def _check_bruhat_partial_order(self) -> int:
        count = 0
        for tables in self._each_group():
            group = tables.group
            for w in tables.elements:
                _require(group.bruhat_leq(w, w), f'{group.name}: {w} is not below itself')
            _require(is_partial_order(tables.bruhat), f'{group.name}: bruhat order is not antisymmetric and transitive')
            count += len(tables.elements) ** 3
        return count

    def _check_bruhat_monotone(self) -> int:
        count = 0
        for tables in self._each_group():
            inverse = tables.inverse
            for i, j in np.argwhere(tables.bruhat):
                u, v = tables.elements[i], tables.elements[j]
                _require(tables.lengths[i] <= tables.lengths[j], f'{u} <= {v} but l({u}) > l({v})')
                _require(tables.bruhat[inverse[i], inverse[j]], f'{u} <= {v} but {u}^-1 is not below {v}^-1')
                count += 1
        return count

    def _check_w0_reversal(self) -> int:
        count = 0
        for tables in self._each_group():
            flip = tables.product[tables.longest]
            size = len(tables.elements)
            for i in range(size):
                for j in range(size):
                    _require(tables.bruhat[i, j] == tables.bruhat[flip[j], flip[i]],
                             f'{tables.elements[i]} <= {tables.elements[j]} is not reversed by w0')
            count += size ** 2
        return count

    def _check_descents(self) -> int:
        count = 0
        for group in self.groups:
            for w in group.enumerate():
                word = w.reduced_word()
                _require(len(word) == w.length() and group.from_word(word) == w, f'bad reduced word for {w}')
                _require(w.inverse().length() == w.length(), f'l({w}^-1) != l({w})')
                for i in range(1, group.rank + 1):
                    s = group.generator(i)
                    _require(group.is_right_descent(w, i) == ((w * s).length() < w.length()),
                             f'right descent s{i} of {w}')
                    _require(group.is_left_descent(w, i) == ((s * w).length() < w.length()),
                             f'left descent s{i} of {w}')
            count += group.order()
        return count

    def _check_longest(self) -> int:
        count = 0
        for group in self.groups:
            w0 = group.longest_element()
            _require((w0 * w0).is_identity(), f'w0 of {group.name} is not an involution')
            for w in group.enumerate():
                _require(group.bruhat_leq(w, w0), f'{w} is not below w0')
                _require((w0 * w).length() == w0.length() - w.length(), f'l(w0 {w}) != l(w0) - l({w})')
                _require((w * w0).length() == w0.length() - w.length(), f'l({w} w0) != l(w0) - l({w})')
            count += group.order()
        return count

    def _check_intervals(self) -> int:
        count = 0
        for group in self.groups:
            for v in group.enumerate():
                below = group.bruhat_interval(group.identity, v)
                _require(len(below) <= 2 ** v.length(), f'[1, {v}] has {len(below)} elements')
            count += group.order()
        return count

    def _check_weak_orders(self) -> int:
        count = 0
        for tables in self._each_group():
            weak = tables.weak_left | tables.weak_right
            stray = np.argwhere(weak & ~tables.bruhat)
            if len(stray):
                i, j = stray[0]
                _require(False, f'{tables.elements[i]} is weakly below {tables.elements[j]} but not in bruhat order')
            _require(weak[:, tables.longest].all(), f'some element is not weakly below w0 of {tables.group.name}')
            count += len(tables.elements) ** 2
        return count

    def _check_lifting(self) -> int:
        """u <= v gives su <= max(v, sv) and us <= max(v, vs)"""
        count = 0
        for tables in self._each_group():
            product, lengths, bruhat = tables.product, tables.lengths, tables.bruhat
            generators = tables.indices(tables.group.generators)
            for i, j in np.argwhere(bruhat):
                u, v = tables.elements[i], tables.elements[j]
                for k, s in enumerate(generators, start=1):
                    left = max(j, product[s, j], key=lambda w: lengths[w])
                    right = max(j, product[j, s], key=lambda w: lengths[w])
                    _require(bruhat[product[s, i], left], f'{u} <= {v} but s{k} {u} is not below max({v}, s{k} {v})')
                    _require(bruhat[product[i, s], right], f'{u} <= {v} but {u} s{k} is not below max({v}, {v} s{k})')
                    count += 2
        return count

    def _check_additive_products(self) -> int:
        """u <= v, x <= y and l(vy) = l(v) + l(y) give ux <= vy"""
        count = 0
        for tables in self._each_group():
            product, bruhat = tables.product, tables.bruhat
            size = len(tables.elements)
            for v in range(size):
                for y in range(size):
                    if not tables.additive(v, y):
                        continue
                    lower = product[np.ix_(tables.below(v), tables.below(y))]
                    _require(bruhat[lower, product[v, y]].all(),
                             f'a product below {tables.elements[v]} {tables.elements[y]} is not below it')
                    count += lower.size
        return count

    def _check_weak_products(self) -> int:
        """
        ux <= vy when u <= v, y <= x and x^-1 <=_L u; likewise when v <= u, x <= y and u^-1 <=_R x
        """
        count = 0
        for tables in self._each_group():
            product, bruhat, inverse = tables.product, tables.bruhat, tables.inverse
            size = len(tables.elements)
            for u in range(size):
                for x in range(size):
                    pair = f'{tables.elements[u]}, {tables.elements[x]}'
                    if tables.weak_left[inverse[x], u]:
                        targets = product[np.ix_(tables.above(u), tables.below(x))]
                        _require(bruhat[product[u, x], targets].all(), f'{pair}: ux is not below every vy (left weak)')
                        count += targets.size
                    if tables.weak_right[inverse[u], x]:
                        targets = product[np.ix_(tables.below(u), tables.above(x))]
                        _require(bruhat[product[u, x], targets].all(), f'{pair}: ux is not below every vy (right weak)')
                        count += targets.size
        return count

    # parabolic

    def _parabolic_properties(self) -> List[Tuple[str, Check]]:
        return [
            ('coset minima match brute force', self._check_coset_minima),
            ('coset factorizations are unique', self._check_unique_factorization),
            ('double coset minima match brute force', self._check_double_minima),
            ('double coset minima are monotone', self._check_double_minima_monotone),
            ('double coset minima are the one-sided intersections', self._check_double_intersections),
            ('inversion swaps double coset sides', self._check_double_inverse),
            ('double coset minima bound their cosets', self._check_double_bounds),
            ('parabolic multiples keep the order', self._check_parabolic_multiples),
            ('comparisons across coset representatives split', self._check_coset_splits),
            ('coset representatives lie weakly below w0 cosets', self._check_weak_cosets),
            ('optimization operator matches its three descriptions', self._check_circ),
            ('optimization operator is the product exactly when lengths add', self._check_circ_additive),
            ('commuting parabolics factor their span', self._check_commuting_factors),
            ('type maps split into commuting parabolics', self._check_type_map_split),
        ]

    def _check_coset_minima(self) -> int:
        group = self.group
        count = 0
        for subset in all_subsets(group.rank):
            for w in group.enumerate():
                w_min, w_par = project_right(w, subset)
                _require(w_min == brute_right_minimum(w, subset), f'{w}^{{{subset}}}')
                _require(w_min * w_par == w and w_min.length() + w_par.length() == w.length(),
                         f'{w} = {w_min} * {w_par} is not length additive')
                left_par, left_min = project_left(subset, w)
                _require(left_min == brute_left_minimum(subset, w), f'^{{{subset}}}{w}')
                _require(left_par * left_min == w, f'{w} != {left_par} * {left_min}')
                count += 1
        return count

    def _check_unique_factorization(self) -> int:
        count = 0
        for tables in self._each_group():
            group = tables.group
            for subset in all_subsets(group.rank):
                minima = tables.indices(minimal_right_representatives(group, subset))
                parabolic = tables.indices(parabolic_elements(group, subset))
                products = tables.product[np.ix_(minima, parabolic)]
                _require(len(np.unique(products)) == products.size == len(tables.elements),
                         f'{group.name}: W^{{{subset}}} W_{{{subset}}} does not cover W exactly once')
                for row, a in enumerate(minima):
                    for column, b in enumerate(parabolic):
                        w = tables.elements[products[row, column]]
                        _require(tables.additive(a, b), f'{w} = {tables.elements[a]} {tables.elements[b]} is not length additive')
                        _require(project_right(w, subset) == (tables.elements[a], tables.elements[b]),
                                 f'project_right({w}, {{{subset}}}) is not the factorization')
                        count += 1
        return count

    def _check_double_minima(self) -> int:
        group = self.group
        subsets = all_subsets(group.rank)
        count = 0
        for left in subsets:
            for right in subsets:
                for w in group.enumerate():
                    least = project_double(left, w, right)
                    _require(least == brute_double_minimum(left, w, right), f'^{{{left}}}{w}^{{{right}}}')
                    _require(is_min_double_coset_rep(least, left, right), f'{least} has a descent')
                    count += 1
        return count

    @staticmethod
    def _double_minima(tables: GroupTables) -> Dict[Tuple[GeneratorSubset, GeneratorSubset], np.ndarray]:
        """Index of the minimum of W_I w W_J for every w, per pair (I, J)"""
        subsets = all_subsets(tables.group.rank)
        return {
            (left, right): np.array([tables.of(project_double(left, w, right)) for w in tables.elements])
            for left in subsets for right in subsets
        }

    def _check_double_minima_monotone(self) -> int:
        count = 0
        for tables in self._each_group():
            pairs = np.argwhere(tables.bruhat)
            for (left, right), least in self._double_minima(tables).items():
                for i, j in pairs:
                    _require(tables.bruhat[least[i], least[j]],
                             f'{tables.elements[i]} <= {tables.elements[j]} but not their ({left} | {right}) minima')
                count += len(pairs)
        return count

    def _check_double_intersections(self) -> int:
        count = 0
        for tables in self._each_group():
            group = tables.group
            for (left, right), least in self._double_minima(tables).items():
                both = (set(tables.indices(minimal_left_representatives(group, left)))
                        & set(tables.indices(minimal_right_representatives(group, right))))
                _require(set(least.tolist()) == both, f'double coset minima for ({left} | {right}) are not ^IW meet W^J')
                flagged = {i for i, w in enumerate(tables.elements) if is_min_double_coset_rep(w, left, right)}
                _require(flagged == both, f'is_min_double_coset_rep disagrees for ({left} | {right})')
                count += 1
        return count

    def _check_double_inverse(self) -> int:
        count = 0
        for tables in self._each_group():
            minima = self._double_minima(tables)
            inverse = tables.inverse
            for (left, right), least in minima.items():
                swapped = minima[(right, left)]
                for i, u in enumerate(tables.elements):
                    _require(inverse[least[i]] == swapped[inverse[i]],
                             f'the ({left} | {right}) minimum of {u}, inverted, is not the ({right} | {left}) minimum of {u}^-1')
                    count += 1
        return count

    def _check_double_bounds(self) -> int:
        """A double coset minimum u is below v iff it is below the whole coset of v"""
        count = 0
        for tables in self._each_group():
            for (left, right), least in self._double_minima(tables).items():
                cosets: Dict[int, List[int]] = {}
                for i, m in enumerate(least.tolist()):
                    cosets.setdefault(m, []).append(i)
                for u in cosets:
                    for members in cosets.values():
                        row = tables.bruhat[u, members]
                        _require(row.all() or not row.any(),
                                 f'{tables.elements[u]} is below part of W_{{{left}}} {tables.elements[members[0]]} W_{{{right}}}')
                        count += len(members)
        return count

    def _check_parabolic_multiples(self) -> int:
        """u <= v gives uw <= vw for v in W^I and wu <= wv for v in ^IW, w in W_I"""
        count = 0
        for tables in self._each_group():
            group, product, bruhat = tables.group, tables.product, tables.bruhat
            for subset in all_subsets(group.rank):
                parabolic = tables.indices(parabolic_elements(group, subset))
                for v in tables.indices(minimal_right_representatives(group, subset)):
                    below = tables.below(v)
                    for w in parabolic:
                        _require(bruhat[product[below, w], product[v, w]].all(),
                                 f'uw is not below {tables.elements[v]} {tables.elements[w]} for some u <= {tables.elements[v]}')
                        count += len(below)
                for v in tables.indices(minimal_left_representatives(group, subset)):
                    below = tables.below(v)
                    for w in parabolic:
                        _require(bruhat[product[w, below], product[w, v]].all(),
                                 f'wu is not below {tables.elements[w]} {tables.elements[v]} for some u <= {tables.elements[v]}')
                        count += len(below)
        return count

    def _check_coset_splits(self) -> int:
        """
        Comparisons across coset representatives split the parabolic factor

        For a, b in W^I and x, y in W_I with ax <= by some length-additive x = uv
        has au <= b and v <= y; for a, b in ^IW with xa <= yb some x = vu has
        ua <= b and v <= y.
        """
        count = 0
        for tables in self._each_group():
            group, product, bruhat, inverse = tables.group, tables.product, tables.bruhat, tables.inverse
            for subset in all_subsets(group.rank):
                parabolic = tables.indices(parabolic_elements(group, subset))
                splits = {
                    x: [(p, product[inverse[p], x]) for p in parabolic if tables.additive(p, product[inverse[p], x])]
                    for x in parabolic
                }
                right_reps = tables.indices(minimal_right_representatives(group, subset))
                left_reps = tables.indices(minimal_left_representatives(group, subset))
                for a in right_reps:
                    for b in right_reps:
                        for x in parabolic:
                            for y in parabolic:
                                if not bruhat[product[a, x], product[b, y]]:
                                    continue
                                _require(any(bruhat[product[a, u], b] and bruhat[v, y] for u, v in splits[x]),
                                         f'{tables.elements[a]} {tables.elements[x]} <= '
                                         f'{tables.elements[b]} {tables.elements[y]} does not split over {{{subset}}}')
                                count += 1
                for a in left_reps:
                    for b in left_reps:
                        for x in parabolic:
                            for y in parabolic:
                                if not bruhat[product[x, a], product[y, b]]:
                                    continue
                                _require(any(bruhat[product[u, a], b] and bruhat[v, y] for v, u in splits[x]),
                                         f'{tables.elements[x]} {tables.elements[a]} <= '
                                         f'{tables.elements[y]} {tables.elements[b]} does not split over {{{subset}}}')
                                count += 1
        return count

    def _check_weak_cosets(self) -> int:
        """W^I lies <=_L below W_{w0 I w0} w0 W_I and ^IW lies <=_R below W_I w0 W_{w0 I w0}"""
        count = 0
        for tables in self._each_group():
            group = tables.group
            w0 = group.longest_element()
            for subset in all_subsets(group.rank):
                flipped = conjugate_subset(group, subset)
                lefts = {tables.of(a * w0 * b) for a in parabolic_elements(group, flipped)
                         for b in parabolic_elements(group, subset)}
                rights = {tables.of(a * w0 * b) for a in parabolic_elements(group, subset)
                          for b in parabolic_elements(group, flipped)}
                for u in tables.indices(minimal_right_representatives(group, subset)):
                    for v in lefts:
                        _require(tables.weak_left[u, v], f'{tables.elements[u]} is not <=_L {tables.elements[v]}')
                        count += 1
                for u in tables.indices(minimal_left_representatives(group, subset)):
                    for v in rights:
                        _require(tables.weak_right[u, v], f'{tables.elements[u]} is not <=_R {tables.elements[v]}')
                        count += 1
        return count

    def _check_circ(self) -> int:
        elements = self.group.enumerate()
        for u in elements:
            for v in elements:
                value = circ(u, v)
                _require(all(candidate == value for candidate in circ_candidates(u, v)),
                         f'{u} o {v} = {value} disagrees with the brute-force maxima')
        return len(elements) ** 2

    def _check_circ_additive(self) -> int:
        count = 0
        for tables in self._each_group():
            for i, u in enumerate(tables.elements):
                for j, v in enumerate(tables.elements):
                    _require((circ(u, v) == u * v) == tables.additive(i, j),
                             f'{u} o {v} = {circ(u, v)} against l({u} {v}) = {tables.lengths[tables.product[i, j]]}')
                    count += 1
        return count

    def _check_commuting_factors(self) -> int:
        """For J inside I: J and I - J commute iff W_I = W_{I-J} x W_J"""
        count = 0
        for tables in self._each_group():
            group = tables.group
            for whole in all_subsets(group.rank):
                span = {w.value for w in parabolic_elements(group, whole)}
                for part in all_subsets(group.rank):
                    if not part.issubset(whole):
                        continue
                    rest = whole - part
                    products = product_set(group, rest, part)
                    factors = len(parabolic_elements(group, rest)) * len(parabolic_elements(group, part))
                    direct = {w.value for w in products} == span and len(products) == factors
                    _require(parabolics_commute(group, part, rest) == direct,
                             f'{group.name}: {{{part}}} and {{{rest}}} commute iff W_{{{whole}}} is their product')
                    count += 1
        return count

    def _check_type_map_split(self) -> int:
        system, group = self.system, self.group
        for e in system.lattice.idems:
            upper, lower = system.lam_star(e), system.lam_substar(e)
            _require(parabolics_commute(group, upper, lower), f'lambda^*({e}), lambda_*({e}) do not commute')
            normal = {w.value for w in parabolic_elements(group, lower)}
            for v in parabolic_elements(group, system.lam(e)):
                for u in parabolic_elements(group, lower):
                    _require((v * u * v.inverse()).value in normal,
                             f'W_lambda_*({e}) is not normal in W_lambda({e})')
        return len(system.lattice.idems)

    # renner

    def _renner_properties(self) -> List[Tuple[str, Check]]:
        checks = [
            ('system axioms', lambda: self._check_axioms(self.system)),
            ('opposite system axioms', lambda: self._check_axioms(self.opposite)),
            ('left standard form is unique', self._check_left_forms),
            ('hybrid form recombines into both standard forms', self._check_hybrid_forms),
            ('multiplication is associative', self._check_associativity),
            ('inverse monoid laws', self._check_star),
            ('godelle meet is e w f', self._check_meet_products),
            ('idempotents are the conjugates of the lattice', self._check_idempotents),
            ('transport keeps the element', self._check_transport),
        ]
        if is_rook_system(self.system):
            checks += [
                ('rook monoid is all partial injections', self._check_rook_enumeration),
                ('multiplication is partial injection composition', self._check_rook_products),
            ]
        return checks

    def _check_axioms(self, system: RennerSystem) -> int:
        violations = validate_system(system)
        _require(not violations, '; '.join(violations))
        return len(system.lattice.idems)

    def _check_left_forms(self) -> int:
        for r in self.elements:
            found = brute_left_forms(r)
            _require(found == [(r.x, r.e, r.y)], f'{r} has left forms {found}')
        return len(self.elements)

    def _check_hybrid_forms(self) -> int:
        system = self.system
        for r in self.elements:
            head, e, middle, tail = system.hybrid_standard_form(r)
            _require(head * middle == r.x and tail == r.y, f'(xy) e z is not the left form of {r}')
            right = system.right_standard_form(r)
            _require(right.y == head and right.x == middle * tail, f'x e (yz) is not the right form of {r}')
            _require(not any(self.group.is_left_descent(right.x, i) for i in system.lam_substar(e)),
                     f'right form of {r} has a left descent in lambda_*({e})')
        return len(self.elements)

    def _check_associativity(self) -> int:
        elements = self.elements
        size = len(elements)
        if size ** 3 <= config.ASSOCIATIVITY_SAMPLE:
            triples = [(i, j, k) for i in range(size) for j in range(size) for k in range(size)]
        else:
            rng = np.random.default_rng(config.RANDOM_SEED)
            triples = rng.integers(0, size, size=(config.ASSOCIATIVITY_SAMPLE, 3)).tolist()
        for i, j, k in triples:
            r, s, t = elements[i], elements[j], elements[k]
            _require((r * s) * t == r * (s * t), f'({r} {s}) {t} != {r} ({s} {t})')
        return len(triples)

    def _check_star(self) -> int:
        rook = is_rook_system(self.system)
        for r in self.elements:
            star = r.star()
            _require(star.star() == r, f'{r}** != {r}')
            _require(r * star * r == r and star * r * star == star, f'{r} breaks the inverse laws')
            if rook:
                _require(to_vector(star) == rook_transpose(to_vector(r)), f'{r}* is not the transpose')
        return len(self.elements)

    def _check_meet_products(self) -> int:
        system = self.system
        if not system.contains_unit_idem:
            return 0
        count = 0
        for e in system.lattice.idems:
            for f in system.lattice.idems:
                for w in self.group.enumerate():
                    if not is_min_double_coset_rep(w, system.lam(e), system.lam(f)):
                        continue
                    g = system.idempotent(system.godelle_meet(e, w, f))
                    left = system.idempotent(e) * system.unit(w) * system.idempotent(f)
                    right = system.idempotent(f) * system.unit(w.inverse()) * system.idempotent(e)
                    _require(g == left == right, f'{e} ^_{w} {f} = {g} but e w f = {left}, f w^-1 e = {right}')
                    count += 1
        return count

    def _check_idempotents(self) -> int:
        generated = set(self.system.idempotents())
        brute = set(brute_idempotents(self.system))
        _require(generated == brute, f'{len(generated)} generated idempotents, {len(brute)} by squaring')
        return len(brute)

    def _check_transport(self) -> int:
        for r in self.elements:
            moved = self.opposite.coerce(r)
            _require(moved == r and self.system.coerce(moved).left_form() == r.left_form(),
                     f'{r} changes under transport')
        return len(self.elements)

    def _check_rook_enumeration(self) -> int:
        n = self.system.action.n
        vectors = sorted(to_vector(r) for r in self.elements)
        _require(vectors == sorted(partial_injections(n)), f'enumeration of {self.system.name} misses vectors')
        _require(len(vectors) == partial_injection_count(n), f'{len(vectors)} elements')
        for vector in vectors:
            _require(to_vector(from_vector(self.system, vector)) == vector, f'{vector} does not factor back')
        return len(vectors)

    def _check_rook_products(self) -> int:
        vectors = [to_vector(r) for r in self.elements]
        for r, v in zip(self.elements, vectors):
            for s, w in zip(self.elements, vectors):
                _require(to_vector(r * s) == rook_product(v, w), f'{r} * {s} = {r * s}')
        return len(vectors) ** 2

    # adherence

    def _adherence_properties(self) -> List[Tuple[str, Check]]:
        checks = [
            ('+ order is a partial order', lambda: self._check_partial_order(PLUS)),
            ('- order is a partial order', lambda: self._check_partial_order(MINUS)),
            ('vanilla form is unique and standard', self._check_vanilla_forms),
            ('six formulations of the order agree', self._check_six_way),
            ('vanilla criterion matches the + order', self._check_vanilla_order),
            ('in-class comparisons match the orders', self._check_fast_in_class),
            ('J-class sandwich', self._check_sandwich),
            ('order on idempotents is the natural order', self._check_idempotent_order),
        ]
        if self.system.contains_unit_idem:
            checks.append(('order on units is bruhat order', self._check_unit_order))
        return checks

    def _check_partial_order(self, epsilon: str) -> int:
        for r in self.elements:
            _require(leq(r, r, epsilon, self.system), f'{r} is not below itself')
        _require(is_partial_order(self.matrix(epsilon)), f'<={epsilon} is not antisymmetric and transitive')
        return len(self.elements) ** 3

    def _check_unit_order(self) -> int:
        system = self.system
        units = self.group.enumerate()
        for epsilon in EPSILONS:
            for u in units:
                for v in units:
                    _require(leq(system.unit(u), system.unit(v), epsilon) == subword_bruhat_leq(u, v),
                             f'units {u}, {v} under <={epsilon}')
        return 2 * len(units) ** 2

    def _check_idempotent_order(self) -> int:
        system = self.system
        idempotents = system.idempotents()
        for epsilon in EPSILONS:
            for p in idempotents:
                for q in idempotents:
                    _require(leq(p, q, epsilon) == system.idempotent_leq(p, q),
                             f'idempotents {p}, {q} under <={epsilon}')
        return 2 * len(idempotents) ** 2

    def _check_six_way(self) -> int:
        system = self.system
        plus, minus = self.matrix(PLUS), self.matrix(MINUS)
        plus_opposite, minus_opposite = self.matrix(PLUS, True), self.matrix(MINUS, True)
        star = [self.index(system.star(r)) for r in self.elements]
        flip = [self.index(system.conjugate_by_longest(r)) for r in self.elements]
        size = len(self.elements)
        for i in range(size):
            for j in range(size):
                values = (
                    plus[i, j],
                    minus[star[i], star[j]],
                    plus_opposite[flip[i], flip[j]],
                    minus_opposite[i, j],
                    plus_opposite[star[i], star[j]],
                    minus[flip[i], flip[j]],
                )
                _require(len(set(bool(v) for v in values)) == 1,
                         f'{self.elements[i]}, {self.elements[j]}: {values}')
        return size ** 2

    def _check_vanilla_forms(self) -> int:
        system = self.system
        for r in self.elements:
            form = vanilla_form(r, system)
            _require(form.assemble() == r, f'vanilla form of {r} multiplies to {form.assemble()}')
            _require(is_vanilla(form) and in_second_middle_set(form), f'{form} breaks the coset conditions')
            found = brute_vanilla_forms(r)
            _require(found == [(form.sigma_minus, form.sigma_zero, form.sigma_plus)],
                     f'{r} has {len(found)} vanilla forms')
            _require(r.x == form.sigma_minus * form.sigma_zero and r.y == form.sigma_plus,
                     f'(s- s0) e s+ is not the left form of {r}')
            right = self.opposite.right_standard_form(r)
            _require(right.y == form.sigma_minus and right.x == form.sigma_zero * form.sigma_plus,
                     f's- e (s0 s+) is not the opposite right form of {r}')
        return len(self.elements)

    def _check_vanilla_order(self) -> int:
        plus = self.matrix(PLUS)
        for i, r in enumerate(self.elements):
            for j, s in enumerate(self.elements):
                _require(leq_plus_vanilla(r, s, self.system) == bool(plus[i, j]), f'{r}, {s}')
        return len(self.elements) ** 2

    def _check_fast_in_class(self) -> int:
        system = self.system
        count = 0
        for epsilon in EPSILONS:
            order = self.matrix(epsilon)
            for relation in RELATIONS:
                for members in classes(system, relation):
                    for r in members:
                        for s in members:
                            expected = bool(order[self.index(r), self.index(s)])
                            _require(leq_fast_in_class(r, s, relation, epsilon, system) == expected,
                                     f'{r} <={epsilon} {s} inside a {relation}-class')
                            count += 1
        return count

    def _check_sandwich(self) -> int:
        system = self.system
        plus = self.matrix(PLUS)
        count = 0
        for members in classes(system, 'J'):
            for r in members:
                for s in members:
                    if not plus[self.index(r), self.index(s)]:
                        continue
                    t, u = sandwich(r, s, system)
                    below = self._comparator(PLUS)
                    _require(below(r, t) and below(t, s) and below(r, u) and below(u, s),
                             f'sandwich of {r} <= {s} is not between them')
                    _require(system.green_key(r, 'R') == system.green_key(t, 'R')
                             and system.green_key(t, 'L') == system.green_key(s, 'L'),
                             f'{t} is not R-related to {r} and L-related to {s}')
                    _require(system.green_key(r, 'L') == system.green_key(u, 'L')
                             and system.green_key(u, 'R') == system.green_key(s, 'R'),
                             f'{u} is not L-related to {r} and R-related to {s}')
                    count += 1
        return count

    # greens

    def _greens_properties(self) -> List[Tuple[str, Check]]:
        checks = [
            ('classes match principal ideals', self._check_classes),
            ('relations nest and J is L then R', self._check_relation_nesting),
            ('constructed extrema bound their classes', self._check_extrema),
            ('extrema follow class inclusion', self._check_monotone_extrema),
            ('extrema carry the prescribed vanilla components', self._check_extrema_components),
            ('special submonoids are closed', self._check_submonoids),
            ('one class minimum per class', self._check_one_minimum),
            ('maximal elements are w0 translates', self._check_maxima_translates),
            ('star swaps GJ and JG', self._check_star_duality),
            ('class order criteria agree', self._check_class_criteria),
            ('orders are convex on classes', self._check_chains),
            ('w0 reverses the order inside L- and R-classes', self._check_flip),
            ('+ order descends to L-class minima', self._check_minimum_projection),
        ]
        if self._is_calibrated_rook3():
            checks.append(('3x3 rook counterexample', self._check_counterexample))
        return checks

    def _is_calibrated_rook3(self) -> bool:
        system = self.system
        return (
            is_rook_system(system) and not system.is_opposite and system.action.n == 3
            and system.action.domains == rook_domains(3, config.ROOK_IDEMPOTENT_ORIENTATION)
        )

    def _check_classes(self) -> int:
        count = 0
        for relation in RELATIONS:
            for r in self.elements:
                expected = set(brute_class(r, relation))
                _require(set(class_of(r, relation)) == expected, f'{relation}-class of {r}')
                count += 1
        return count

    def _check_relation_nesting(self) -> int:
        system = self.system
        keys = {
            relation: [system.green_key(r, relation) for r in self.elements] for relation in RELATIONS
        }
        size = len(self.elements)
        for i in range(size):
            for j in range(size):
                related = {relation: keys[relation][i] == keys[relation][j] for relation in RELATIONS}
                pair = f'{self.elements[i]}, {self.elements[j]}'
                _require(not related['H'] or (related['L'] and related['R']), f'{pair}: H without L and R')
                _require(not (related['L'] or related['R']) or related['J'], f'{pair}: L or R without J')
                through = any(keys['L'][i] == keys['L'][k] and keys['R'][k] == keys['R'][j] for k in range(size))
                _require(related['J'] == through, f'{pair}: J is not witnessed by L then R')
        return size ** 2

    def _check_extrema(self) -> int:
        system = self.system
        count = 0
        for epsilon in EPSILONS:
            below = self._comparator(epsilon)
            for relation in RELATIONS:
                for members in classes(system, relation):
                    for which in ('min', 'max'):
                        built = extremum(members[0], relation, epsilon, which, system)
                        brute = brute_extremum(members, below, which)
                        _require(brute is not None and built == brute,
                                 f'{which}{epsilon} {relation}-class of {members[0]}: built {built}, scan {brute}')
                        count += 1
        return count

    def _check_monotone_extrema(self) -> int:
        """A class inside a larger one has its maximum below and its minimum above the larger class's"""
        system = self.system
        count = 0
        for epsilon in EPSILONS:
            below = self._comparator(epsilon)
            for smaller, larger in (('H', 'L'), ('H', 'R'), ('L', 'J'), ('R', 'J')):
                for members in classes(system, smaller):
                    r = members[0]
                    inner = [extremum(r, smaller, epsilon, which, system) for which in ('min', 'max')]
                    outer = [extremum(r, larger, epsilon, which, system) for which in ('min', 'max')]
                    _require(below(outer[0], inner[0]) and below(inner[1], outer[1]),
                             f'{smaller}-class extrema of {r} leave the {larger}-class extrema under <={epsilon}')
                    count += 1
        return count

    def _check_extrema_components(self) -> int:
        system = self.system
        identity = self.group.identity
        count = 0
        for relation in RELATIONS:
            for members in classes(system, relation):
                form = vanilla_form(members[0], system)
                lower, upper = middle_bounds(system, form.e_minus, form.e_plus)
                side = side_element(system, form.e_minus, form.e_plus)
                least = vanilla_form(extremum(members[0], relation, PLUS, 'min', system), system)
                most = vanilla_form(extremum(members[0], relation, PLUS, 'max', system), system)
                _require(least.sigma_zero == lower and most.sigma_zero == upper,
                         f'middle factors of the {relation}-class extrema of {members[0]}')
                if relation in ('L', 'J'):
                    _require(least.sigma_minus == side and most.sigma_minus == identity,
                             f'left factors of the {relation}-class extrema of {members[0]}')
                if relation in ('R', 'J'):
                    _require(least.sigma_plus == side and most.sigma_plus == identity,
                             f'right factors of the {relation}-class extrema of {members[0]}')
                count += 1
        return count

    def _check_submonoids(self) -> int:
        system = self.system
        count = 0
        for which in SUBMONOIDS:
            for epsilon in EPSILONS:
                members = special_submonoid(system, which, epsilon)
                contained = set(members)
                for r in members:
                    for s in members:
                        _require(r * s in contained, f'{which}{epsilon} is not closed: {r} * {s}')
                        count += 1
                if which == 'O':
                    _require({r.star() for r in members} == contained, 'O is not closed under *')
                if which == 'N':
                    both = set(special_submonoid(system, 'GJ', epsilon)) & set(special_submonoid(system, 'JG', epsilon))
                    _require(contained == both, f'N{epsilon} is not GJ{epsilon} meet JG{epsilon}')
        _require(set(special_submonoid(system, 'O', PLUS)) == set(special_submonoid(system, 'O', MINUS)),
                 'O depends on epsilon')
        return count

    def _check_one_minimum(self) -> int:
        system = self.system
        count = 0
        for which, relation in SUBMONOIDS.items():
            for epsilon in EPSILONS:
                contained = set(special_submonoid(system, which, epsilon))
                for members in classes(system, relation):
                    hits = [r for r in members if r in contained]
                    _require(len(hits) == 1, f'{relation}-class of {members[0]} meets {which}{epsilon} {len(hits)} times')
                    count += 1
        return count

    def _check_maxima_translates(self) -> int:
        system = self.system
        if not system.contains_unit_idem:
            return 0
        w0 = system.longest_unit()
        lattice = [system.idempotent(e) for e in system.lattice.idems]

        def tops(relation: str, epsilon: str) -> set:
            return {r for r in self.elements if extremum(r, relation, epsilon, 'max', system) == r}

        o_set = special_submonoid(system, 'O', PLUS)
        _require({w0 * r for r in o_set} == {r * w0 for r in o_set}, 'w0 O != O w0')
        for epsilon in EPSILONS:
            _require(tops('H', epsilon) == {w0 * r for r in o_set}, f'max{epsilon} H elements are not w0 O')
            gj = special_submonoid(system, 'GJ', epsilon)
            _require(tops('L', epsilon) == {w0 * r for r in gj}, f'max{epsilon} L elements are not w0 GJ')
            jg = special_submonoid(system, 'JG', epsilon)
            _require(tops('R', epsilon) == {r * w0 for r in jg}, f'max{epsilon} R elements are not JG w0')
        _require(tops('J', PLUS) == {w0 * e for e in lattice}, 'max+ J elements are not w0 Lambda')
        _require(tops('J', MINUS) == {e * w0 for e in lattice}, 'max- J elements are not Lambda w0')
        return len(self.elements)

    def _check_star_duality(self) -> int:
        system = self.system
        for gj, jg in ((PLUS, MINUS), (MINUS, PLUS)):
            left = {r.star() for r in special_submonoid(system, 'JG', jg)}
            _require(set(special_submonoid(system, 'GJ', gj)) == left, f'GJ{gj} is not (JG{jg})*')
        return len(self.elements)

    def _check_class_criteria(self) -> int:
        system = self.system
        count = 0
        for epsilon in EPSILONS:
            for relation in RELATIONS:
                representatives = [members[0] for members in classes(system, relation)]
                for r in representatives:
                    for s in representatives:
                        by_max = class_leq(r, s, relation, epsilon)
                        _require(by_max == exists_criterion_leq(r, s, relation, epsilon),
                                 f'max and existential criteria differ on {relation}-classes of {r}, {s}')
                        if relation != 'H':
                            _require(by_max == min_criterion_leq(r, s, relation, epsilon),
                                     f'max and min criteria differ on {relation}-classes of {r}, {s}')
                        count += 1
        return count

    def _check_chains(self) -> int:
        system = self.system
        count = 0
        for epsilon in EPSILONS:
            order = self.matrix(epsilon)
            for relation in RELATIONS:
                for members in classes(system, relation):
                    inside = {self.index(r) for r in members}
                    for i in inside:
                        for j in inside:
                            if not order[i, j]:
                                continue
                            between = np.nonzero(order[i, :] & order[:, j])[0]
                            _require(set(between.tolist()) <= inside,
                                     f'a <={epsilon} chain leaves the {relation}-class of {members[0]}')
                            count += 1
        return count

    def _check_flip(self) -> int:
        system = self.system
        if not system.contains_unit_idem:
            return 0
        w0 = system.longest_unit()
        count = 0
        for epsilon in EPSILONS:
            below = self._comparator(epsilon)
            for r in self.elements:
                for s in self.elements:
                    if r == s or not below(r, s):
                        continue
                    if system.green_key(r, 'L') == system.green_key(s, 'L'):
                        _require(below(w0 * s, w0 * r), f'w0 does not flip {r} <={epsilon} {s}')
                        count += 1
                    if system.green_key(r, 'R') == system.green_key(s, 'R'):
                        _require(below(s * w0, r * w0), f'w0 does not flip {r} <={epsilon} {s} on the right')
                        count += 1
        return count

    def _check_minimum_projection(self) -> int:
        system = self.system
        plus = self.matrix(PLUS)
        least = [self.index(extremum(r, 'L', PLUS, 'min', system)) for r in self.elements]
        size = len(self.elements)
        for i in range(size):
            for j in range(size):
                if plus[i, j]:
                    _require(plus[least[i], least[j]],
                             f'{self.elements[i]} <=+ {self.elements[j]} but their L-class minima are not')
        return size ** 2

    def _check_counterexample(self) -> int:
        report = verify_counterexample(self.system)
        failure = report.first_failure
        if failure is not None:
            raise _Mismatch(f'{failure.name}: expected {failure.expected}, got {failure.actual}')
        return len(report.claims)
