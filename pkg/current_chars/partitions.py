"""
Partitions, standard Young tableaux, major index and the fake-degree
polynomials f_sigma(u) of the coinvariant ring.
"""
import functools
import logging
import math
import typing

import attr

from current_chars.exceptions import ArgumentError
from current_chars.laurent import LaurentPolynomial


logger = logging.getLogger(__name__)


def _strip_zeros(parts) -> typing.Tuple[int, ...]:
    try:
        parts = tuple(int(p) for p in parts)
    except (TypeError, ValueError):
        raise ArgumentError(f'Partition parts must be integers, got: {parts!r}')

    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def _check_parts(instance, attribute, parts):
    if any(p < 1 for p in parts):
        raise ArgumentError(f'Partition parts must be positive integers, got: {parts}')
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ArgumentError(f'Partition parts must be weakly decreasing, got: {parts}')


@attr.s(frozen=True, slots=True, repr=False, order=False)
class Partition:
    """
    Weakly decreasing tuple of positive integers. Trailing zeros are
    stripped on construction, so the empty partition is the unique
    partition of 0.

    Attributes:
        parts:
            The parts, largest first.
        size:
            Sum of the parts.
    """
    parts = attr.ib(converter=_strip_zeros, validator=_check_parts)
    size = attr.ib(init=False, eq=False)

    def __attrs_post_init__(self):
        object.__setattr__(self, 'size', sum(self.parts))

    @classmethod
    def from_string(cls, text: str) -> 'Partition':
        """
        Parse the command-line form "3,1,1".

        Raises:
            ArgumentError
        """
        text = text.strip()
        if not text:
            return cls(())
        try:
            parts = [int(piece) for piece in text.split(',')]
        except ValueError:
            raise ArgumentError(
                f'Malformed partition: {text!r}. Expected comma-separated '
                'descending positive integers, e.g. "3,1"'
            )
        return cls(parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __str__(self):
        return '(' + ','.join(str(p) for p in self.parts) + ')'

    def __repr__(self):
        return f'Partition{self.parts}'

    def conjugate(self) -> 'Partition':
        if not self.parts:
            return self
        return Partition(tuple(
            sum(1 for p in self.parts if p > j) for j in range(self.parts[0])
        ))

    def cells(self) -> typing.List[typing.Tuple[int, int]]:
        return [(i, j) for i, p in enumerate(self.parts) for j in range(p)]

    def to_json(self) -> typing.List[int]:
        return list(self.parts)


def enumerate_partitions(m: int, max_parts: typing.Optional[int]=None) -> typing.List[Partition]:
    """
    All partitions of m in lexicographically descending order, e.g.
    (4), (3,1), (2,2), (2,1,1), (1,1,1,1). With `max_parts` only partitions
    with at most that many parts are returned.

    Raises:
        ArgumentError
    """
    if m < 0:
        raise ArgumentError(f'Can not enumerate partitions of a negative integer: {m}')
    return [Partition(p) for p in _partitions(m, m, max_parts)]


@functools.lru_cache(maxsize=None)
def _partitions(m: int, largest: int, max_parts) -> typing.Tuple[typing.Tuple[int, ...], ...]:
    if m == 0:
        return ((),)
    if max_parts == 0:
        return ()

    result = []
    rest_parts = None if max_parts is None else max_parts - 1
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions(m - first, first, rest_parts):
            result.append((first,) + rest)
    return tuple(result)


def conjugate(p: Partition) -> Partition:
    return p.conjugate()


def dominates(p: Partition, q: Partition) -> bool:
    """
    Dominance order: p >= q iff every partial sum of p is at least the
    matching partial sum of q.

    Raises:
        ArgumentError
    """
    if p.size != q.size:
        raise ArgumentError(f'Dominance compares partitions of one size, got: {p} and {q}')

    total_p = total_q = 0
    for i in range(max(len(p), len(q))):
        total_p += p.parts[i] if i < len(p) else 0
        total_q += q.parts[i] if i < len(q) else 0
        if total_p < total_q:
            return False
    return True


def hook_lengths(p: Partition) -> typing.List[int]:
    conj = p.conjugate()
    return [(p[i] - j - 1) + (conj[j] - i - 1) + 1 for i, j in p.cells()]


def dim_irrep(p: Partition) -> int:
    """ dim S(p), by the hook-length formula. """
    return math.factorial(p.size) // math.prod(hook_lengths(p))


def _check_rows(instance, attribute, rows):
    entries = sorted(e for row in rows for e in row)
    if entries != list(range(1, len(entries) + 1)):
        raise ArgumentError(f'Tableau entries must be 1..m, each once, got: {rows}')

    for row in rows:
        if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
            raise ArgumentError(f'Tableau rows must strictly increase, got: {rows}')

    for i in range(1, len(rows)):
        if len(rows[i]) > len(rows[i - 1]):
            raise ArgumentError(f'Tableau rows must form a Young diagram, got: {rows}')
        if any(rows[i - 1][j] >= rows[i][j] for j in range(len(rows[i]))):
            raise ArgumentError(f'Tableau columns must strictly increase, got: {rows}')


def _freeze_rows(rows) -> typing.Tuple[typing.Tuple[int, ...], ...]:
    return tuple(tuple(row) for row in rows if len(row) > 0)


@attr.s(frozen=True, slots=True)
class StandardTableau:
    """
    Standard Young tableau stored as a tuple of rows.

    Attributes:
        rows:
            Rows of the filling, top to bottom; entries are 1..m.
    """
    rows = attr.ib(converter=_freeze_rows, validator=_check_rows)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    @property
    def reading_word(self) -> typing.Tuple[int, ...]:
        return tuple(e for row in self.rows for e in row)

    def row_of(self) -> typing.Dict[int, int]:
        return {e: i for i, row in enumerate(self.rows) for e in row}

    def conjugate(self) -> 'StandardTableau':
        """ T^v: transpose of the diagram, a standard tableau of the conjugate shape. """
        if not self.rows:
            return self
        return StandardTableau([
            [row[j] for row in self.rows if len(row) > j]
            for j in range(len(self.rows[0]))
        ])

    def descent_set(self) -> typing.FrozenSet[int]:
        """ All a such that a+1 sits in a row strictly below the row of a. """
        row = self.row_of()
        return frozenset(a for a in range(1, self.size) if row[a + 1] > row[a])

    def major_index(self) -> int:
        return sum(self.descent_set())


@functools.lru_cache(maxsize=None)
def _tableaux(parts: typing.Tuple[int, ...]) -> typing.Tuple[typing.Tuple[typing.Tuple[int, ...], ...], ...]:
    m = sum(parts)
    if m == 0:
        return ((),)

    result = []
    # The largest entry m sits in a removable corner
    for i, p in enumerate(parts):
        if i + 1 < len(parts) and parts[i + 1] == p:
            continue
        smaller = list(parts)
        smaller[i] -= 1
        for rows in _tableaux(_strip_zeros(smaller)):
            rows = [list(row) for row in rows]
            if i == len(rows):
                rows.append([])
            rows[i].append(m)
            result.append(tuple(tuple(row) for row in rows))

    return tuple(sorted(result, key=lambda rows: tuple(e for row in rows for e in row)))


def standard_tableaux(p: Partition) -> typing.List[StandardTableau]:
    """ All standard tableaux of shape p, ordered lexicographically by reading word. """
    return [StandardTableau(rows) for rows in _tableaux(p.parts)]


def descent_set(tableau: StandardTableau) -> typing.FrozenSet[int]:
    return tableau.descent_set()


def major_index(tableau: StandardTableau) -> int:
    return tableau.major_index()


@functools.lru_cache(maxsize=None)
def fake_degree(p: Partition) -> LaurentPolynomial:
    """
    f_p(u) = sum over standard tableaux T of shape p of u^maj(T), the
    graded multiplicity of S(p) in the coinvariant ring.
    """
    counts = {}
    for tableau in standard_tableaux(p):
        maj = tableau.major_index()
        counts[maj] = counts.get(maj, 0) + 1
    logger.debug(f'Fake degree of {p}: {counts}')
    return LaurentPolynomial(counts)
