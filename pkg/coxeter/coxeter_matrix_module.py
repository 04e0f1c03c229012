"""
Coxeter Matrix Module
Coxeter matrices, their text format, and classification into supported families
"""

import math
import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, NamedTuple, Tuple


class CoxeterError(ValueError):
    """Base error for Coxeter group construction and arithmetic"""


class UnsupportedMatrixError(CoxeterError):
    """Matrix is valid but has no faithful combinatorial model here"""


class GroupMismatchError(CoxeterError):
    """Elements from different groups were combined"""


class BudgetExceededError(CoxeterError):
    """Enumeration grew past the configured element budget"""


class Component(NamedTuple):
    """One connected component of a Coxeter graph"""
    kind: str  # 'A', 'B' or 'I'
    generators: Tuple[int, ...]  # 0-based global indices in model order
    parameter: int  # points for A, rank for B, m for I


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric table m(s, t) over generators 1..rank"""
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, 'entries', tuple(tuple(row) for row in self.entries))
        rank = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != rank:
                raise CoxeterError(f'row {i + 1} has {len(row)} entries, expected {rank}')
        for i, row in enumerate(self.entries):
            for j, value in enumerate(row):
                if value is None or (isinstance(value, float) and math.isinf(value)):
                    raise UnsupportedMatrixError(
                        f'm({i + 1},{j + 1}) is infinite; only finite groups are modelled'
                    )
                if value != int(value):
                    raise CoxeterError(f'm({i + 1},{j + 1}) = {value} is not an integer')
                if i == j and value != 1:
                    raise CoxeterError(f'diagonal entry m({i + 1},{i + 1}) = {value}, expected 1')
                if i != j and value < 2:
                    raise CoxeterError(f'off-diagonal entry m({i + 1},{j + 1}) = {value} is below 2')
                if self.entries[j][i] != value:
                    raise CoxeterError(f'matrix is not symmetric at ({i + 1},{j + 1})')

    @property
    def rank(self) -> int:
        return len(self.entries)

    def m(self, i: int, j: int) -> int:
        """Entry m(s_i, s_j) for 1-based generator indices"""
        return self.entries[i - 1][j - 1]

    @classmethod
    def from_pairs(cls, rank: int, pairs: Dict[Tuple[int, int], int]) -> 'CoxeterMatrix':
        """
        Build a matrix from the non-commuting pairs

        Args:
            rank: Number of generators
            pairs: Map (i, j) -> m for 1-based i != j; unlisted pairs commute

        Returns:
            CoxeterMatrix
        """
        rows = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]
        for (i, j), value in pairs.items():
            if not (1 <= i <= rank and 1 <= j <= rank) or i == j:
                raise CoxeterError(f'bad generator pair ({i},{j}) for rank {rank}')
            for a, b in ((i, j), (j, i)):
                previous = rows[a - 1][b - 1]
                if previous != 2 and previous != value:
                    raise CoxeterError(f'conflicting values for pair ({i},{j})')
                rows[a - 1][b - 1] = value
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def parse(cls, text: str) -> 'CoxeterMatrix':
        """
        Parse the text format: 'rank n' then 'i j m' lines

        Blank lines and '#' comments are ignored. 'inf' marks an infinite entry,
        which is rejected.
        """
        rank = None
        pairs: Dict[Tuple[int, int], int] = {}
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if rank is None:
                if len(fields) != 2 or fields[0] != 'rank':
                    raise CoxeterError(f'line {number}: expected "rank n"')
                rank = _parse_int(fields[1], number)
                if rank < 0:
                    raise CoxeterError(f'line {number}: rank must be non-negative')
                continue
            if len(fields) != 3:
                raise CoxeterError(f'line {number}: expected "i j m"')
            i, j = _parse_int(fields[0], number), _parse_int(fields[1], number)
            if fields[2].lower() in ('inf', 'oo', 'infinity'):
                raise UnsupportedMatrixError(f'line {number}: infinite entry m({i},{j})')
            pairs[(i, j)] = _parse_int(fields[2], number)
        if rank is None:
            raise CoxeterError('missing "rank n" header')
        return cls.from_pairs(rank, pairs)

    @classmethod
    def load(cls, path: str) -> 'CoxeterMatrix':
        with open(path, 'r', encoding='utf-8') as handle:
            return cls.parse(handle.read())

    def to_text(self) -> str:
        lines = [f'rank {self.rank}']
        for i in range(1, self.rank + 1):
            for j in range(i + 1, self.rank + 1):
                if self.m(i, j) != 2:
                    lines.append(f'{i} {j} {self.m(i, j)}')
        return '\n'.join(lines) + '\n'

    @classmethod
    def type_a(cls, rank: int) -> 'CoxeterMatrix':
        """A_rank: path of 3s, modelled by permutations of rank + 1 points"""
        return cls.from_pairs(rank, {(i, i + 1): 3 for i in range(1, rank)})

    @classmethod
    def type_b(cls, rank: int) -> 'CoxeterMatrix':
        """B_rank with the 4 between generators 1 and 2"""
        pairs = {(i, i + 1): 3 for i in range(2, rank)}
        if rank >= 2:
            pairs[(1, 2)] = 4
        return cls.from_pairs(rank, pairs)

    @classmethod
    def dihedral(cls, m: int) -> 'CoxeterMatrix':
        if m < 2:
            raise CoxeterError(f'dihedral parameter must be at least 2, got {m}')
        return cls.from_pairs(2, {(1, 2): m} if m > 2 else {})

    @classmethod
    def direct_sum(cls, *blocks: 'CoxeterMatrix') -> 'CoxeterMatrix':
        """Block-diagonal matrix of commuting factors"""
        rank = sum(block.rank for block in blocks)
        pairs: Dict[Tuple[int, int], int] = {}
        offset = 0
        for block in blocks:
            for i in range(1, block.rank + 1):
                for j in range(i + 1, block.rank + 1):
                    if block.m(i, j) != 2:
                        pairs[(offset + i, offset + j)] = block.m(i, j)
            offset += block.rank
        return cls.from_pairs(rank, pairs)

    @classmethod
    def from_name(cls, name: str) -> 'CoxeterMatrix':
        """
        Build a matrix from a Cartan-style name

        Accepts 'A3', 'B2', 'I2(5)' and products joined by 'x', e.g. 'A1xA1'.
        """
        blocks = []
        for token in name.replace(' ', '').split('x'):
            match = re.fullmatch(r'([ABab])(\d+)|[Ii]2\((\d+)\)', token)
            if match is None:
                raise UnsupportedMatrixError(f'unknown group name {token!r}')
            if match.group(3) is not None:
                blocks.append(cls.dihedral(int(match.group(3))))
            elif match.group(1).upper() == 'A':
                blocks.append(cls.type_a(int(match.group(2))))
            else:
                blocks.append(cls.type_b(int(match.group(2))))
        return cls.direct_sum(*blocks)

    def components(self) -> List[List[int]]:
        """Connected components of the Coxeter graph as sorted 0-based index lists"""
        seen = set()
        result = []
        for start in range(self.rank):
            if start in seen:
                continue
            stack, component = [start], []
            seen.add(start)
            while stack:
                node = stack.pop()
                component.append(node)
                for other in range(self.rank):
                    if other not in seen and self.entries[node][other] >= 3:
                        seen.add(other)
                        stack.append(other)
            result.append(sorted(component))
        return result

    def classify(self) -> List[Component]:
        """
        Split the matrix into supported irreducible components

        Returns:
            One Component per connected piece of the Coxeter graph

        Raises:
            UnsupportedMatrixError: A component is not of type A, B or I2(m)
        """
        return [self._classify_component(nodes) for nodes in self.components()]

    def _classify_component(self, nodes: List[int]) -> Component:
        if len(nodes) == 1:
            return Component('A', (nodes[0],), 2)

        if len(nodes) == 2:
            a, b = nodes
            m = self.entries[a][b]
            if m == 3:
                return Component('A', (a, b), 3)
            if m == 4:
                return Component('B', (a, b), 2)
            return Component('I', (a, b), m)

        neighbours = {
            node: [other for other in nodes if other != node and self.entries[node][other] >= 3]
            for node in nodes
        }
        ends = [node for node in nodes if len(neighbours[node]) == 1]
        if any(len(adjacent) > 2 for adjacent in neighbours.values()) or len(ends) != 2:
            raise UnsupportedMatrixError(
                f'generators {_one_based(nodes)} do not form a path; types D/E and cycles are not modelled'
            )

        labels = [
            self.entries[node][other]
            for node in nodes for other in neighbours[node] if node < other
        ]
        if any(label > 4 for label in labels) or labels.count(4) > 1:
            raise UnsupportedMatrixError(
                f'generators {_one_based(nodes)} carry labels {sorted(labels)}; only A_n and B_n paths are modelled'
            )

        if labels.count(4) == 0:
            path = _walk(min(ends), neighbours)
            return Component('A', tuple(path), len(path) + 1)

        for end in ends:
            if self.entries[end][neighbours[end][0]] == 4:
                path = _walk(end, neighbours)
                return Component('B', tuple(path), len(path))
        raise UnsupportedMatrixError(
            f'generators {_one_based(nodes)}: label 4 is not at the end of the path (type F is not modelled)'
        )

    def describe(self) -> str:
        """Short Cartan-style name such as 'A2' or 'B2xA1'"""
        if self.rank == 0:
            return 'A0'
        parts = []
        for component in self.classify():
            if component.kind == 'I':
                parts.append(f'I2({component.parameter})')
            else:
                parts.append(f'{component.kind}{len(component.generators)}')
        return 'x'.join(parts)


def _walk(start: int, neighbours: Dict[int, List[int]]) -> List[int]:
    path, previous = [start], None
    while True:
        following = [node for node in neighbours[path[-1]] if node != previous]
        if not following:
            return path
        previous = path[-1]
        path.append(following[0])


def _parse_int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise CoxeterError(f'line {line}: {token!r} is not an integer') from None


def _one_based(nodes: Iterable[int]) -> List[int]:
    return [node + 1 for node in nodes]
