"""
Counterexample Module
The 3x3 rook monoid pair on which H-class minima fail to follow the adherence order
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Any, List, Optional

from adherence import PLUS, check_epsilon, leq
from renner import RennerError, RennerSystem, from_vector, is_rook_system, rook_system

from .greens_module import extremum

logger = logging.getLogger(__name__)

R_VECTOR = (3, 2, 0)
S_VECTOR = (3, 2, 1)
MIN_H_R = '2,3,0'
MIN_H_S = '1,2,3'


class CounterexampleError(AssertionError):
    """A claim about the rook counterexample did not hold"""


@dataclass
class Claim:
    name: str
    expected: Any
    actual: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_dict(self) -> dict:
        return {'name': self.name, 'expected': self.expected, 'actual': self.actual, 'pass': self.passed}


@dataclass
class CounterexampleReport:
    system: str
    epsilon: str
    claims: List[Claim] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(claim.passed for claim in self.claims)

    @property
    def first_failure(self) -> Optional[Claim]:
        return next((claim for claim in self.claims if not claim.passed), None)

    def to_dict(self) -> dict:
        return {
            'system': self.system,
            'epsilon': self.epsilon,
            'claims': [claim.to_dict() for claim in self.claims],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def summary(self) -> str:
        lines = [f'{self.system} ({self.epsilon}): '
                 f'{sum(claim.passed for claim in self.claims)}/{len(self.claims)} claims hold']
        for claim in self.claims:
            mark = 'ok  ' if claim.passed else 'FAIL'
            lines.append(f'  [{mark}] {claim.name}: expected {claim.expected}, got {claim.actual}')
        return '\n'.join(lines)


def verify_counterexample(system: Optional[RennerSystem] = None, epsilon: str = PLUS,
                          strict: bool = False) -> CounterexampleReport:
    """
    Check the four facts about r = 3,2,0 and s = 3,2,1 in R_3

    r <= s, min H_r = 2,3,0, min H_s = identity, and yet min H_r is not below
    min H_s. Only the '+' order under the leading orientation is expected to
    reproduce all four.

    Args:
        system: A rook monoid of size 3 (default: calibrated R_3)
        epsilon: Order to evaluate the claims in
        strict: Raise on the first failing claim instead of reporting it

    Returns:
        CounterexampleReport

    Raises:
        CounterexampleError: strict and a claim failed
    """
    check_epsilon(epsilon)
    system = system or rook_system(3)
    if not is_rook_system(system) or system.action.n != 3:
        raise RennerError(f'the counterexample lives in the 3x3 rook monoid, not {system.name}')

    r, s = from_vector(system, R_VECTOR), from_vector(system, S_VECTOR)
    min_r = extremum(r, 'H', epsilon, 'min')
    min_s = extremum(s, 'H', epsilon, 'min')
    report = CounterexampleReport(system.name, epsilon, [
        Claim(f'r <={epsilon} s', True, leq(r, s, epsilon)),
        Claim(f'min{epsilon} H_r', MIN_H_R, str(min_r)),
        Claim(f'min{epsilon} H_s', MIN_H_S, str(min_s)),
        Claim(f'min{epsilon} H_r not <={epsilon} min{epsilon} H_s', True, not leq(min_r, min_s, epsilon)),
    ])
    logger.debug('%s', report.summary())

    failure = report.first_failure
    if strict and failure is not None:
        raise CounterexampleError(f'{failure.name}: expected {failure.expected}, got {failure.actual}')
    return report
