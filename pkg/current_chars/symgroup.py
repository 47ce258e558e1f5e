"""
Character theory of the symmetric group: character tables by the
Murnaghan-Nakayama rule, Kronecker coefficients, Kostka numbers.
"""
import collections
import functools
import logging
import math
import typing

import attr

from current_chars.config import Limits, current_limits
from current_chars.exceptions import ArgumentError, ConsistencyError, LimitExceeded
from current_chars.partitions import Partition, enumerate_partitions


logger = logging.getLogger(__name__)


def z_lambda(cycle_type: Partition) -> int:
    """ Order of the centraliser of a permutation of the given cycle type. """
    multiplicities = collections.Counter(cycle_type.parts)
    return math.prod(i ** k * math.factorial(k) for i, k in multiplicities.items())


def class_size(cycle_type: Partition) -> int:
    """ Number of permutations in S_m with the given cycle type. """
    return math.factorial(cycle_type.size) // z_lambda(cycle_type)


def _remove_rim_hooks(parts: typing.Tuple[int, ...], length: int):
    """
    Yield (remaining shape, leg length) for every rim hook of the given
    length. Works on beta-numbers: removing a rim hook of length l moves
    one bead from b to b - l, and the leg length is the number of beads
    jumped over.
    """
    k = len(parts)
    beta = [parts[i] + (k - 1 - i) for i in range(k)]
    occupied = set(beta)

    for i, b in enumerate(beta):
        target = b - length
        if target < 0 or target in occupied:
            continue
        leg = sum(1 for c in beta if target < c < b)
        moved = sorted(beta[:i] + [target] + beta[i + 1:], reverse=True)
        remaining = tuple(nb - (k - 1 - j) for j, nb in enumerate(moved))
        yield tuple(p for p in remaining if p > 0), leg


@functools.lru_cache(maxsize=None)
def _mn_character(parts: typing.Tuple[int, ...], cycles: typing.Tuple[int, ...]) -> int:
    """ chi^parts on the class with cycle lengths `cycles`, largest cycle first. """
    if not cycles:
        return 1 if not parts else 0

    value = 0
    for remaining, leg in _remove_rim_hooks(parts, cycles[0]):
        value += (-1) ** leg * _mn_character(remaining, cycles[1:])
    return value


def character_value(irrep: Partition, cycle_type: Partition) -> int:
    """
    Raises:
        ArgumentError
    """
    if irrep.size != cycle_type.size:
        raise ArgumentError(
            f'Irreducible {irrep} and class {cycle_type} belong to different '
            'symmetric groups'
        )
    return _mn_character(irrep.parts, cycle_type.parts)


@attr.s(frozen=True, slots=True)
class CharacterTable:
    """
    Character table of S_m.

    Attributes:
        m:
            Degree of the symmetric group.
        labels:
            Partitions of m in enumeration order; they label both the
            irreducibles (rows) and the cycle types (columns).
        values:
            values[i][j] = chi^{labels[i]}(class labels[j]).
        class_sizes:
            class_sizes[j] = number of permutations of cycle type labels[j].
    """
    m = attr.ib()
    labels = attr.ib()
    values = attr.ib()
    class_sizes = attr.ib()

    def index(self, p: Partition) -> int:
        try:
            return self.labels.index(p)
        except ValueError:
            raise ArgumentError(f'{p} is not a partition of {self.m}')

    def value(self, irrep: Partition, cycle_type: Partition) -> int:
        return self.values[self.index(irrep)][self.index(cycle_type)]

    def row(self, irrep: Partition) -> typing.Tuple[int, ...]:
        return self.values[self.index(irrep)]

    def class_size(self, cycle_type: Partition) -> int:
        return self.class_sizes[self.index(cycle_type)]

    def check_orthogonality(self):
        """
        Raises:
            ConsistencyError
        """
        order = math.factorial(self.m)
        count = len(self.labels)

        if sum(self.class_sizes) != order:
            raise ConsistencyError(f'Class sizes of S_{self.m} do not add up to {order}')

        for a in range(count):
            for b in range(count):
                row_product = sum(
                    self.class_sizes[c] * self.values[a][c] * self.values[b][c]
                    for c in range(count)
                )
                if row_product != (order if a == b else 0):
                    raise ConsistencyError(
                        f'Row orthogonality fails for {self.labels[a]}, {self.labels[b]}'
                    )

                column_product = sum(
                    self.values[i][a] * self.values[i][b] for i in range(count)
                )
                expected = order // self.class_sizes[a] if a == b else 0
                if column_product != expected:
                    raise ConsistencyError(
                        f'Column orthogonality fails for classes '
                        f'{self.labels[a]}, {self.labels[b]}'
                    )


@functools.lru_cache(maxsize=None)
def _build_character_table(m: int) -> CharacterTable:
    logger.info(f'Building character table of S_{m}')
    labels = tuple(enumerate_partitions(m))
    values = tuple(
        tuple(_mn_character(irrep.parts, cls.parts) for cls in labels)
        for irrep in labels
    )
    return CharacterTable(
        m=m,
        labels=labels,
        values=values,
        class_sizes=tuple(class_size(cls) for cls in labels),
    )


def character_table(m: int, limits: typing.Optional[Limits]=None) -> CharacterTable:
    """
    Character table of S_m, cached per m.

    Raises:
        ArgumentError
        LimitExceeded
    """
    limits = limits if limits is not None else current_limits()

    if m < 1:
        raise ArgumentError(f'Character tables need m >= 1, got: {m}')
    if m > limits.max_table_m:
        raise LimitExceeded(
            f'Character table of S_{m} exceeds the configured limit '
            f'max_table_m={limits.max_table_m}'
        )
    return _build_character_table(m)


def project(table: CharacterTable, irrep: Partition, traces: typing.Sequence[int]) -> int:
    """
    Multiplicity of S(irrep) in a representation whose traces on the
    classes of `table` (in label order) are `traces`.

    Raises:
        ConsistencyError
    """
    total = sum(
        size * chi * trace
        for size, chi, trace in zip(table.class_sizes, table.row(irrep), traces)
    )
    multiplicity, remainder = divmod(total, math.factorial(table.m))
    if remainder != 0 or multiplicity < 0:
        raise ConsistencyError(
            f'Character projection onto {irrep} is not a non-negative integer: '
            f'{total}/{math.factorial(table.m)}'
        )
    return multiplicity


def kronecker(tau: Partition, sigma: Partition, gamma: Partition) -> int:
    """
    Kronecker coefficient: the multiplicity of S(gamma) in S(tau) (x) S(sigma).

    Raises:
        ArgumentError
        ConsistencyError
        LimitExceeded
    """
    if not tau.size == sigma.size == gamma.size:
        raise ArgumentError(
            f'Kronecker coefficients need partitions of one size, got: '
            f'{tau}, {sigma}, {gamma}'
        )
    character_table(tau.size)
    return _kronecker(tau, sigma, gamma)


@functools.lru_cache(maxsize=None)
def _kronecker(tau: Partition, sigma: Partition, gamma: Partition) -> int:
    table = _build_character_table(tau.size)
    traces = [a * b for a, b in zip(table.row(tau), table.row(sigma))]
    return project(table, gamma, traces)


def sign_twist(tau: Partition) -> Partition:
    """ S(tau) (x) sgn = S(tau^v). """
    return tau.conjugate()


def _check_content(shape: Partition, content: typing.Sequence[int]) -> typing.Tuple[int, ...]:
    content = tuple(content)
    if any(not isinstance(a, int) or a < 0 for a in content):
        raise ArgumentError(f'Content must consist of non-negative integers, got: {content}')
    if sum(content) != shape.size:
        raise ArgumentError(
            f'Content {content} does not fill shape {shape}: '
            f'{sum(content)} != {shape.size}'
        )
    return content


def _horizontal_strips(parts: typing.Tuple[int, ...], k: int):
    """ Yield every inner shape mu with parts/mu a horizontal strip of k cells. """
    def rows(i, left):
        if i == len(parts):
            if left == 0:
                yield ()
            return
        # mu_i lies between parts[i+1] and parts[i]
        floor = parts[i + 1] if i + 1 < len(parts) else 0
        for mu_i in range(parts[i], floor - 1, -1):
            removed = parts[i] - mu_i
            if removed > left:
                break
            for rest in rows(i + 1, left - removed):
                yield (mu_i,) + rest

    for mu in rows(0, k):
        yield tuple(p for p in mu if p > 0)


def semistandard_tableaux(shape: Partition, content: typing.Sequence[int]):
    """
    Yield every semistandard tableau of `shape` with `content` (content[i]
    copies of i+1), as a tuple of rows. The largest entry is placed first:
    its cells form a horizontal strip.

    Raises:
        ArgumentError
    """
    content = _check_content(shape, content)

    def fill(parts, letters):
        if not letters:
            if not parts:
                yield ()
            return
        letter = len(letters)
        for inner in _horizontal_strips(parts, letters[-1]):
            for rows in fill(inner, letters[:-1]):
                rows = [list(r) for r in rows] + [[] for _ in range(len(parts) - len(rows))]
                for i, p in enumerate(parts):
                    inner_len = inner[i] if i < len(inner) else 0
                    rows[i].extend([letter] * (p - inner_len))
                yield tuple(tuple(r) for r in rows)

    yield from fill(shape.parts, content)


def kostka(tau: Partition, content: typing.Sequence[int]) -> int:
    """
    K_{tau, content}: the number of semistandard tableaux of shape tau and
    the given content, i.e. the multiplicity of S(tau) in the Young
    permutation module Ind_{Y(content)}^{S_m} triv.

    Raises:
        ArgumentError
    """
    return sum(1 for _ in semistandard_tableaux(tau, content))


def young_permutation_character(content: typing.Sequence[int], cycle_type: Partition) -> int:
    """
    Character of Ind_{Y(content)}^{S_m} triv at the given class: the number
    of ways to distribute the cycles among blocks of sizes `content`.
    """
    content = [a for a in content if a > 0]
    if sum(content) != cycle_type.size:
        raise ArgumentError(f'Content {content} and class {cycle_type} have different sizes')

    @functools.lru_cache(maxsize=None)
    def count(i, remaining):
        if i == len(cycle_type.parts):
            return 1 if not any(remaining) else 0
        length = cycle_type.parts[i]
        total = 0
        for b, capacity in enumerate(remaining):
            if capacity >= length:
                reduced = remaining[:b] + (capacity - length,) + remaining[b + 1:]
                total += count(i + 1, reduced)
        return total

    return count(0, tuple(content))
