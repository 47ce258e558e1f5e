"""
Brute-force model of M_loc = V^{(x)m} (x) A_m^coin.

Basis vectors are triples (k, word, j): the coinvariant degree k, a word
in the basis of V (one letter per tensor factor) and the index j of a
standard monomial of degree k. S_m permutes tensor factors and acts on
the coinvariant ring at the same time; the Lie algebra acts on words by
the Leibniz rule.
"""
import collections
import fractions
import itertools
import logging
import math
import typing

import attr

from current_chars.charformula import GradedCharacter
from current_chars.coinvariants import (
    CoinvariantRing,
    build_coinvariant_ring,
    class_representative_word,
)
from current_chars.config import Limits, current_limits
from current_chars.exceptions import ArgumentError, LimitExceeded
from current_chars.laurent import LaurentPolynomial, q_factorial
from current_chars.linalg import add_scaled
from current_chars.lieweights import Weight, is_dominant, tensor_power_character
from current_chars.logutils import contextual_logger
from current_chars.modules import ExplicitModule
from current_chars.partitions import Partition
from current_chars.symgroup import character_table, project


logger = logging.getLogger(__name__)


BasisKey = typing.Tuple[int, typing.Tuple[int, ...], int]


def _permutation_of_word(m: int, word: typing.Sequence[int]) -> typing.Tuple[int, ...]:
    """ Positions 0..m-1 permuted by s_{w_1} s_{w_2} ... (s_a swaps a-1 and a). """
    perm = list(range(m))
    for a in reversed(word):
        perm = [a if p == a - 1 else a - 1 if p == a else p for p in perm]
    return tuple(perm)


class MLocModule:

    def __init__(self, V: ExplicitModule, m: int, ring: CoinvariantRing):
        """
        Graded (g, S_m)-bimodule V^{(x)m} (x) A_m^coin.

        Attributes:
            V:
                `modules.ExplicitModule` tensored with itself.
            m:
                Number of tensor factors.
            ring:
                `coinvariants.CoinvariantRing` of S_m.
            words:
                All words of length m in the basis of V.
        """
        self.V = V
        self.m = m
        self.ring = ring
        self.words = list(itertools.product(range(V.dimension), repeat=m))
        self.log = contextual_logger(
            logger, f'Oracle[{V.rs} dim={V.dimension} m={m}]'
        )
        self._word_weights = {w: self._weight_of(w) for w in self.words}
        self._fixed_words = {}

    def __str__(self):
        return f'M_loc({self.V}, m={self.m})'

    def _weight_of(self, word) -> Weight:
        rank = self.V.rs.rank
        return tuple(
            sum(self.V.basis_weights[letter][i] for letter in word) for i in range(rank)
        )

    def weight(self, key: BasisKey) -> Weight:
        return self._word_weights[key[1]]

    @property
    def top_degree(self) -> int:
        return self.ring.top_degree

    def graded_dimensions(self) -> typing.List[int]:
        return [len(self.words) * n for n in self.ring.dimensions]

    @property
    def dimension(self) -> int:
        return sum(self.graded_dimensions())

    def basis(self, k: int) -> typing.Iterator[BasisKey]:
        for word in self.words:
            for j in range(self.ring.dimensions[k]):
                yield (k, word, j)

    def weight_dimensions(self, k: int) -> typing.Dict[Weight, int]:
        counts = collections.Counter(self._word_weights.values())
        return {mu: n * self.ring.dimensions[k] for mu, n in counts.items()}

    def weights(self) -> typing.List[Weight]:
        """ Distinct weights of V^{(x)m}, sorted. """
        return sorted(set(self._word_weights.values()))

    def fixed_words(self, cycle_type: Partition) -> typing.Dict[Weight, int]:
        """ Words fixed by the class representative of `cycle_type`, counted by weight. """
        if cycle_type in self._fixed_words:
            return self._fixed_words[cycle_type]

        perm = _permutation_of_word(self.m, class_representative_word(cycle_type))
        counts = collections.Counter()
        for word in self.words:
            if all(word[perm[p]] == word[p] for p in range(self.m)):
                counts[self._word_weights[word]] += 1
        self._fixed_words[cycle_type] = dict(counts)
        return self._fixed_words[cycle_type]

    def class_trace(self, k: int, mu: Weight, cycle_type: Partition) -> int:
        """ Trace of the class representative on the weight space (M[k])_mu. """
        words = self.fixed_words(cycle_type).get(tuple(mu), 0)
        if not words:
            return 0
        return words * self.ring.class_trace(k, cycle_type)

    def act_generator(self, matrix, vector: typing.Dict[BasisKey, fractions.Fraction]):
        """ A Chevalley generator of V acting on every tensor factor. """
        result = {}
        for (k, word, j), coeff in vector.items():
            for p, letter in enumerate(word):
                for target, value in matrix.get(letter, {}).items():
                    image = word[:p] + (target,) + word[p + 1:]
                    add_scaled(result, {(k, image, j): value}, coeff)
        return result

    def act_transposition(self, a: int, vector: typing.Dict[BasisKey, fractions.Fraction]):
        """ s_a swapping tensor factors a, a+1 and the variables t_a, t_{a+1}. """
        result = {}
        for (k, word, j), coeff in vector.items():
            swapped = list(word)
            swapped[a - 1], swapped[a] = swapped[a], swapped[a - 1]
            swapped = tuple(swapped)
            column = self.ring.transposition_actions[k][a].get(j, {})
            add_scaled(result, {(k, swapped, i): v for i, v in column.items()}, coeff)
        return result


def build_M_loc(V: ExplicitModule, m: int, limits: typing.Optional[Limits]=None) -> MLocModule:
    """
    Raises:
        ArgumentError
        LimitExceeded
        ConsistencyError
    """
    limits = limits if limits is not None else current_limits()
    if not isinstance(m, int) or m < 1:
        raise ArgumentError(f'Number of tensor factors must be a positive integer, got: {m!r}')

    size = V.dimension ** m * math.factorial(m)
    if size > limits.oracle_max_dimension:
        raise LimitExceeded(
            f'M_loc for {V} and m={m} has dimension {V.dimension}^{m} * {m}! = '
            f'{size}, above the configured budget '
            f'oracle_max_dimension={limits.oracle_max_dimension}'
        )

    ring = build_coinvariant_ring(m, limits)
    module = MLocModule(V, m, ring)
    module.log.info(f'Built, graded dimensions: {module.graded_dimensions()}')
    return module


def oracle_graded_char_B_loc(
    V: ExplicitModule,
    m: int,
    gamma: Partition,
    limits: typing.Optional[Limits]=None
) -> GradedCharacter:
    """
    Graded character of the multiplicity space of S(gamma) in M_loc from
    explicit traces: for every grade and dominant weight the traces of the
    class representatives are projected onto chi^gamma.

    Raises:
        ArgumentError
        LimitExceeded
        ConsistencyError
    """
    if gamma.size != m:
        raise ArgumentError(f'Partition {gamma} does not partition m={m}')

    module = build_M_loc(V, m, limits)
    table = character_table(m)
    dominant = [mu for mu in module.weights() if is_dominant(mu)]

    terms = {}
    for mu in dominant:
        counts = {}
        for k in range(module.top_degree + 1):
            traces = [module.class_trace(k, mu, cls) for cls in table.labels]
            counts[k] = project(table, gamma, traces)
        terms[mu] = LaurentPolynomial(counts)

    module.log.debug(f'B_loc({gamma}) from explicit traces: {len(terms)} weights')
    return GradedCharacter(V.rs, terms, m=m, gamma=gamma)


@attr.s(frozen=True, slots=True)
class CommutationReport:
    """
    Attributes:
        module:
            Name of the checked M_loc.
        basis_size:
            Number of basis vectors every pair was checked on.
        pairs_checked:
            Number of (generator, transposition) pairs.
        failures:
            Description of every basis vector on which a check failed.
    """
    module = attr.ib()
    basis_size = attr.ib()
    pairs_checked = attr.ib()
    failures = attr.ib(factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            'module': self.module,
            'basis_size': self.basis_size,
            'pairs_checked': self.pairs_checked,
            'passed': self.passed,
            'failures': list(self.failures),
        }


def verify_commuting_actions(module: MLocModule) -> CommutationReport:
    """
    Check on every basis vector of M_loc that each x_i^+- commutes with each
    adjacent transposition and that the transpositions keep weights. Every
    failing basis vector is recorded in the report.
    """
    V = module.V
    generators = [
        (f'x_{i + 1}^{sign}', matrix)
        for i in range(V.rs.rank)
        for sign, matrix in (('+', V.raising_actions[i]), ('-', V.lowering_actions[i]))
    ]
    one = fractions.Fraction(1)
    basis_size = 0
    failures = []

    for k in range(module.top_degree + 1):
        for key in module.basis(k):
            basis_size += 1
            vector = {key: one}
            for a in range(1, module.m):
                image = module.act_transposition(a, vector)
                if any(module.weight(target) != module.weight(key) for target in image):
                    failures.append(f's_{a} does not preserve the weight of {key}')
                for name, matrix in generators:
                    left = module.act_transposition(a, module.act_generator(matrix, vector))
                    right = module.act_generator(matrix, image)
                    add_scaled(left, right, -1)
                    if left:
                        failures.append(f'{name} and s_{a} do not commute on {key}')

    report = CommutationReport(
        str(module), basis_size, len(generators) * (module.m - 1), failures
    )
    if report.passed:
        module.log.info(f'{report.pairs_checked} pairs commute on {basis_size} basis vectors')
    else:
        module.log.warning(f'{len(failures)} commutation failures in {module}')
    return report


@attr.s(frozen=True, slots=True)
class WeightSpaceReport:
    """
    Per-grade, per-weight comparison.

    Attributes:
        name:
            Which check produced the report.
        checked:
            Number of (grade, weight) pairs compared.
        mismatches:
            (grade, weight, expected, found) for every disagreement.
    """
    name = attr.ib()
    checked = attr.ib()
    mismatches = attr.ib(factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            'name': self.name,
            'checked': self.checked,
            'passed': self.passed,
            'mismatches': [
                {'grade': k, 'weight': list(mu), 'expected': expected, 'found': found}
                for k, mu, expected, found in self.mismatches
            ],
        }


def verify_weight_space_duality(
    V: ExplicitModule,
    m: int,
    limits: typing.Optional[Limits]=None
) -> WeightSpaceReport:
    """
    The S_m-character of (M_loc)_mu in each grade equals that of the
    M_loc built on V^* at the weight -mu.

    Raises:
        ArgumentError
        LimitExceeded
        ConsistencyError
    """
    module = build_M_loc(V, m, limits)
    dual = build_M_loc(V.dual(), m, limits)
    labels = character_table(m).labels

    checked = 0
    mismatches = []
    for k in range(module.top_degree + 1):
        for mu in module.weights():
            negative = tuple(-c for c in mu)
            expected = [module.class_trace(k, mu, cls) for cls in labels]
            found = [dual.class_trace(k, negative, cls) for cls in labels]
            checked += 1
            if expected != found:
                mismatches.append((k, mu, expected, found))

    return WeightSpaceReport('weight-space duality', checked, mismatches)


def verify_weight_space_dimensions(module: MLocModule) -> WeightSpaceReport:
    """
    dim (M_loc[k])_mu against the coefficient of e(mu) u^k in chV^m [m]_u!.

    Raises:
        ConsistencyError
    """
    power = tensor_power_character(module.V.character(), module.m, module.V.rs.rank)
    hilbert = q_factorial(module.m)

    checked = 0
    mismatches = []
    for k in range(max(module.top_degree, hilbert.degree) + 1):
        found = module.weight_dimensions(k) if k <= module.top_degree else {}
        for mu, mult in power:
            expected = mult * hilbert[k]
            checked += 1
            if found.get(mu, 0) != expected:
                mismatches.append((k, mu, expected, found.get(mu, 0)))

    return WeightSpaceReport('weight-space dimensions', checked, mismatches)
