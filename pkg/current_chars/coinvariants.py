"""
The coinvariant ring A_m^coin = C[t_1, ..., t_m] / (e_1, ..., e_m) built
degree by degree with exact row reduction, together with the S_m action
on every graded piece.
"""
import fractions
import functools
import itertools
import logging
import math
import typing

from current_chars.config import Limits, current_limits
from current_chars.exceptions import ArgumentError, ConsistencyError, LimitExceeded
from current_chars.laurent import LaurentPolynomial
from current_chars.linalg import (
    EchelonBasis,
    SparseMatrix,
    SparseVector,
    compose,
    identity,
    is_zero,
    subtract,
    trace,
)
from current_chars.logutils import contextual_logger
from current_chars.partitions import Partition
from current_chars.symgroup import character_table, project


logger = logging.getLogger(__name__)


Monomial = typing.Tuple[int, ...]


@functools.lru_cache(maxsize=None)
def _monomials(m: int, d: int) -> typing.Tuple[Monomial, ...]:
    """ Exponent vectors of degree d in m variables, lexicographically descending. """
    if m == 0:
        return ((),) if d == 0 else ()
    return tuple(
        (first,) + rest
        for first in range(d, -1, -1)
        for rest in _monomials(m - 1, d - first)
    )


def class_representative_word(cycle_type: Partition) -> typing.List[int]:
    """
    Word in the adjacent transpositions s_1, ..., s_{m-1} for a permutation
    of the given cycle type: a cycle on the block a, ..., a+l-1 is
    s_a s_{a+1} ... s_{a+l-2}.
    """
    word = []
    start = 1
    for length in cycle_type.parts:
        word.extend(range(start, start + length - 1))
        start += length
    return word


class CoinvariantRing:

    def __init__(self, m: int, limits: typing.Optional[Limits]=None):
        """
        Coinvariant ring of S_m.

        Every graded piece R[d] is the span of degree-d monomials modulo
        sum_j e_j * A_m[d-j]. The basis of R[d] is the set of standard
        monomials: the non-pivot monomials of the reduced ideal slice.

        Attributes:
            m:
                Number of variables.
            graded_basis:
                graded_basis[d] lists the standard monomials of degree d.
            transposition_actions:
                transposition_actions[d][a] is the matrix of s_a, the swap of
                t_a and t_{a+1} (1 <= a < m), on R[d] in the standard basis.

        Raises:
            ArgumentError
            LimitExceeded
            ConsistencyError
        """
        limits = limits if limits is not None else current_limits()
        if not isinstance(m, int) or m < 1:
            raise ArgumentError(f'Coinvariant ring needs m >= 1, got: {m!r}')
        if m > limits.oracle_max_m:
            raise LimitExceeded(
                f'Coinvariant ring of S_{m} exceeds the configured limit '
                f'oracle_max_m={limits.oracle_max_m}'
            )

        self.m = m
        self.log = contextual_logger(logger, f'Coinvariants[m={m}]')
        self.graded_basis: typing.List[typing.List[Monomial]] = []
        self._ideal: typing.List[EchelonBasis] = []
        self._positions: typing.List[typing.Dict[int, int]] = []
        self._class_traces: typing.Dict[typing.Tuple[int, Partition], int] = {}

        d = 0
        while True:
            ideal = self._ideal_slice(d)
            standard = ideal.complement(len(_monomials(m, d)))
            if not standard:
                break
            monomials = _monomials(m, d)
            self.graded_basis.append([monomials[i] for i in standard])
            self._ideal.append(ideal)
            self._positions.append({index: k for k, index in enumerate(standard)})
            self.log.debug(f'Degree {d}: {len(standard)} standard monomials')
            d += 1

        if self.dimension != math.factorial(m):
            raise ConsistencyError(
                f'Coinvariant ring of S_{m} has dimension {self.dimension}, '
                f'expected {math.factorial(m)}'
            )

        self.transposition_actions = [
            {a: self._transposition_matrix(d, a) for a in range(1, m)}
            for d in range(len(self.graded_basis))
        ]
        self.log.info(f'Built, dimensions by degree: {self.dimensions}')

    def __str__(self):
        return f'CoinvariantRing(m={self.m})'

    def _ideal_slice(self, d: int) -> EchelonBasis:
        index = {mono: i for i, mono in enumerate(_monomials(self.m, d))}
        slice_ = EchelonBasis()

        for j in range(1, min(self.m, d) + 1):
            subsets = list(itertools.combinations(range(self.m), j))
            for mono in _monomials(self.m, d - j):
                generator = {}
                for subset in subsets:
                    product = list(mono)
                    for i in subset:
                        product[i] += 1
                    k = index[tuple(product)]
                    generator[k] = generator.get(k, 0) + fractions.Fraction(1)
                slice_.add(generator)
        return slice_

    @property
    def top_degree(self) -> int:
        return len(self.graded_basis) - 1

    @property
    def dimensions(self) -> typing.List[int]:
        return [len(basis) for basis in self.graded_basis]

    @property
    def dimension(self) -> int:
        return sum(self.dimensions)

    def reduce(self, monomial: Monomial) -> SparseVector:
        """
        Coordinates of the coset of `monomial` in the standard basis of its
        degree.

        Raises:
            ArgumentError
        """
        monomial = tuple(monomial)
        if len(monomial) != self.m or any(e < 0 for e in monomial):
            raise ArgumentError(f'Not a monomial in {self.m} variables: {monomial}')

        d = sum(monomial)
        if d > self.top_degree:
            return {}

        index = _monomials(self.m, d).index(monomial)
        normal_form = self._ideal[d].reduce({index: fractions.Fraction(1)})
        positions = self._positions[d]
        return {positions[i]: value for i, value in normal_form.items()}

    def reduction_map(self, d: int) -> typing.Dict[Monomial, SparseVector]:
        """ Every degree-d monomial with its coset coordinates. """
        return {mono: self.reduce(mono) for mono in _monomials(self.m, d)}

    def _transposition_matrix(self, d: int, a: int) -> SparseMatrix:
        matrix = {}
        for k, mono in enumerate(self.graded_basis[d]):
            swapped = list(mono)
            swapped[a - 1], swapped[a] = swapped[a], swapped[a - 1]
            matrix[k] = self.reduce(tuple(swapped))
        return matrix

    def word_matrix(self, d: int, word: typing.Sequence[int]) -> SparseMatrix:
        """ Matrix of s_{w_1} s_{w_2} ... s_{w_k} on R[d]. """
        matrix = identity(len(self.graded_basis[d]))
        for a in word:
            matrix = compose(matrix, self.transposition_actions[d][a])
        return matrix

    def class_trace(self, d: int, cycle_type: Partition) -> int:
        """
        Raises:
            ArgumentError
            ConsistencyError
        """
        if cycle_type.size != self.m:
            raise ArgumentError(f'Class {cycle_type} is not a cycle type of S_{self.m}')
        if d > self.top_degree:
            return 0
        if (d, cycle_type) in self._class_traces:
            return self._class_traces[d, cycle_type]

        value = trace(self.word_matrix(d, class_representative_word(cycle_type)))
        if value.denominator != 1:
            raise ConsistencyError(
                f'Trace of class {cycle_type} on degree {d} of {self} is not an integer: {value}'
            )
        self._class_traces[d, cycle_type] = int(value)
        return self._class_traces[d, cycle_type]

    def check_relations(self):
        """
        Involution and braid relations of the transposition actions in every
        degree.

        Raises:
            ConsistencyError
        """
        for d, actions in enumerate(self.transposition_actions):
            size = len(self.graded_basis[d])
            for a, s in actions.items():
                if not is_zero(subtract(compose(s, s), identity(size))):
                    raise ConsistencyError(f'(s_{a})^2 != 1 in degree {d} of {self}')
                if a + 1 in actions:
                    t = actions[a + 1]
                    if not is_zero(subtract(compose(s, compose(t, s)), compose(t, compose(s, t)))):
                        raise ConsistencyError(
                            f'Braid relation fails for s_{a}, s_{a + 1} in degree {d} of {self}'
                        )
                for b in range(a + 2, self.m):
                    t = actions[b]
                    if not is_zero(subtract(compose(s, t), compose(t, s))):
                        raise ConsistencyError(
                            f's_{a} and s_{b} do not commute in degree {d} of {self}'
                        )


def build_coinvariant_ring(m: int, limits: typing.Optional[Limits]=None) -> CoinvariantRing:
    return _build_coinvariant_ring(m, limits if limits is not None else current_limits())


@functools.lru_cache(maxsize=None)
def _build_coinvariant_ring(m: int, limits: Limits) -> CoinvariantRing:
    return CoinvariantRing(m, limits)


def coinvariant_hilbert_series(ring: CoinvariantRing) -> LaurentPolynomial:
    return LaurentPolynomial({d: n for d, n in enumerate(ring.dimensions)})


def coinvariant_isotypic_series(ring: CoinvariantRing, sigma: Partition) -> LaurentPolynomial:
    """
    sum_d mult(S(sigma), R[d]) u^d by character projection on each degree.

    Raises:
        ArgumentError
        ConsistencyError
    """
    if sigma.size != ring.m:
        raise ArgumentError(f'Partition {sigma} does not partition m={ring.m}')

    table = character_table(ring.m)
    counts = {}
    for d in range(ring.top_degree + 1):
        traces = [ring.class_trace(d, cls) for cls in table.labels]
        counts[d] = project(table, sigma, traces)
    return LaurentPolynomial(counts)
