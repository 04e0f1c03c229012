"""
System Loader Module
Text format for user-supplied finite Renner-Coxeter systems and system descriptors
"""

import logging
import os
from typing import Dict, List, Optional, Tuple

from coxeter import CoxeterError, CoxeterGroup, CoxeterMatrix
from parabolic import GeneratorSubset, conjugate_subset

from .renner_system_module import (
    CrossSectionLattice,
    LatticeError,
    MonoidAction,
    ParseError,
    RennerSystem,
    validate_system,
)
from .rook_monoid_module import rook_system

logger = logging.getLogger(__name__)

LATTICE_KEYWORDS = ('idempotent', 'meet', 'centralizer', 'stabilizer', 'action')


class TableAction(MonoidAction):
    """Centralizer, stabilizer and generator conjugation tables read from a system file"""

    def __init__(self, centralizers: Dict[str, GeneratorSubset], stabilizers: Dict[str, GeneratorSubset],
                 conjugations: Optional[Dict[Tuple[int, str], str]] = None):
        self.centralizers = dict(centralizers)
        self.stabilizers = dict(stabilizers)
        self.conjugations = dict(conjugations or {})

    def centralizer(self, system, e):
        return self.centralizers.get(e)

    def stabilizer(self, system, e):
        return self.stabilizers.get(e)

    def conjugate(self, system, s, e):
        return self.conjugations.get((s, e))

    def opposite(self, group):
        # w0 Lambda w0 keeps the labels; s e s becomes (w0 s w0) e (w0 s w0)
        return TableAction(
            {e: conjugate_subset(group, subset) for e, subset in self.centralizers.items()},
            {e: conjugate_subset(group, subset) for e, subset in self.stabilizers.items()},
            {(group.conjugate_by_longest(s), e): image for (s, e), image in self.conjugations.items()},
        )


def _subset(rank: int, token: str, number: int) -> GeneratorSubset:
    try:
        return GeneratorSubset.parse(rank, token)
    except CoxeterError as exc:
        raise ParseError(f'line {number}: {exc}') from None


def _generator(rank: int, token: str, number: int) -> int:
    try:
        index = int(token)
    except ValueError:
        raise ParseError(f'line {number}: {token!r} is not a generator index') from None
    if not 1 <= index <= rank:
        raise ParseError(f'line {number}: generator {index} outside 1..{rank}')
    return index


def parse_system_text(text: str, name: str = '', budget: Optional[int] = None,
                      validate: bool = True) -> RennerSystem:
    """
    Build a system from its text description

    Lines:
        rank n                          Coxeter rank, then 'i j m' entries as in a matrix file
        idempotent NAME UPPER LOWER     lambda^* and lambda_* as '1,3' lists, '-' for empty
        meet A B C                      A ^ B = C; e ^ e = e is implied
        centralizer NAME GENS           optional {s : se = es} from a concrete action
        stabilizer NAME GENS            optional {s : se = es = e}
        action GEN NAME IMAGE           optional s e s = IMAGE, both idempotents of Lambda

    Args:
        text: File contents
        name: Display name
        budget: Element budget for the group
        validate: Run validate_system and reject the data on any violation

    Returns:
        RennerSystem with a TableAction

    Raises:
        ParseError: Malformed line
        LatticeError: The data violates the system axioms
    """
    matrix_lines: List[str] = []
    lattice_lines: List[Tuple[int, List[str]]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] in LATTICE_KEYWORDS:
            lattice_lines.append((number, fields))
            matrix_lines.append('')
        else:
            matrix_lines.append(line)

    try:
        matrix = CoxeterMatrix.parse('\n'.join(matrix_lines))
        group = CoxeterGroup(matrix, budget=budget)
    except CoxeterError as exc:
        raise ParseError(f'{name or "system"}: {exc}') from None

    idems: List[str] = []
    upper: Dict[str, GeneratorSubset] = {}
    lower: Dict[str, GeneratorSubset] = {}
    meet: Dict[Tuple[str, str], str] = {}
    centralizers: Dict[str, GeneratorSubset] = {}
    stabilizers: Dict[str, GeneratorSubset] = {}
    conjugations: Dict[Tuple[int, str], str] = {}

    for number, fields in lattice_lines:
        keyword = fields[0]
        if keyword == 'idempotent':
            if len(fields) != 4:
                raise ParseError(f'line {number}: expected "idempotent NAME UPPER LOWER"')
            label = fields[1]
            if label in upper:
                raise ParseError(f'line {number}: idempotent {label!r} declared twice')
            idems.append(label)
            upper[label] = _subset(group.rank, fields[2], number)
            lower[label] = _subset(group.rank, fields[3], number)
        elif keyword == 'meet':
            if len(fields) != 4:
                raise ParseError(f'line {number}: expected "meet A B C"')
            meet[(fields[1], fields[2])] = fields[3]
        elif keyword == 'action':
            if len(fields) != 4:
                raise ParseError(f'line {number}: expected "action GEN NAME IMAGE"')
            key = (_generator(group.rank, fields[1], number), fields[2])
            if key in conjugations:
                raise ParseError(f'line {number}: action of s{key[0]} on {key[1]!r} given twice')
            conjugations[key] = fields[3]
        else:
            if len(fields) != 3:
                raise ParseError(f'line {number}: expected "{keyword} NAME GENS"')
            table = centralizers if keyword == 'centralizer' else stabilizers
            table[fields[1]] = _subset(group.rank, fields[2], number)

    if not idems:
        raise ParseError(f'{name or "system"}: no idempotents declared')
    for (a, b), c in meet.items():
        for label in (a, b, c):
            if label not in upper:
                raise ParseError(f'meet {a} {b} {c}: unknown idempotent {label!r}')
    action_labels = [label for (_, e), image in conjugations.items() for label in (e, image)]
    for label in list(centralizers) + list(stabilizers) + action_labels:
        if label not in upper:
            raise ParseError(f'unknown idempotent {label!r} in action table')

    system = RennerSystem(
        group,
        CrossSectionLattice(group.rank, idems, meet, upper, lower),
        action=TableAction(centralizers, stabilizers, conjugations),
        name=name or f'R({group.name})',
    )
    if validate:
        violations = validate_system(system)
        if violations:
            raise LatticeError(f'{system.name} violates the system axioms: ' + '; '.join(violations))
    logger.debug('loaded %s with %d idempotents', system.name, len(idems))
    return system


def load_system(path: str, budget: Optional[int] = None) -> RennerSystem:
    with open(path, 'r', encoding='utf-8') as handle:
        text = handle.read()
    name = os.path.splitext(os.path.basename(path))[0]
    return parse_system_text(text, name=name, budget=budget)


def resolve_system(descriptor: str, budget: Optional[int] = None) -> RennerSystem:
    """
    Turn a command-line descriptor into a system

    'rook:N' and 'rook:N:ORIENTATION' build the rook monoid; anything else is
    read as a system file path.
    """
    if descriptor.startswith('rook:'):
        parts = descriptor.split(':')
        if len(parts) not in (2, 3):
            raise ParseError(f'{descriptor!r}: expected rook:N or rook:N:ORIENTATION')
        try:
            n = int(parts[1])
        except ValueError:
            raise ParseError(f'{descriptor!r}: {parts[1]!r} is not a matrix size') from None
        orientation = parts[2] if len(parts) == 3 else None
        return rook_system(n, orientation=orientation, budget=budget)
    if not os.path.exists(descriptor):
        raise ParseError(f'no system file {descriptor!r} (built-in systems are rook:N)')
    return load_system(descriptor, budget=budget)
