"""
Graded characters of the multiplicity spaces B_loc(gamma, V) and B(gamma, V)
of (V (x) C[t])^{(x)m} under S_m, their graded duals and the duality between
conjugate partitions and dual modules.

A graded character is stored on Weyl-orbit sums:

    sum over dominant lambda of g_lambda(u) e(O(lambda))

where e(O(lambda)) is the sum of e(w) over the Weyl orbit of lambda.
"""
import functools
import logging
import math
import typing

import attr

from current_chars.exceptions import ArgumentError, ConsistencyError
from current_chars.laurent import (
    LaurentPolynomial,
    invariant_hilbert_series,
    q_factorial,
)
from current_chars.lieweights import (
    RootSystem,
    Weight,
    WeightMultiset,
    dual_weight,
    is_dominant,
    module_character,
    s_mu_table,
    tensor_power_character,
    weyl_orbit,
)
from current_chars.partitions import (
    Partition,
    dim_irrep,
    enumerate_partitions,
    fake_degree,
)
from current_chars.symgroup import character_table, kostka, kronecker


logger = logging.getLogger(__name__)


def _merge_highest_weights(highest_weights) -> typing.Tuple[typing.Tuple[Weight, int], ...]:
    if isinstance(highest_weights, dict):
        highest_weights = highest_weights.items()

    merged = {}
    for weight, mult in highest_weights:
        weight = tuple(weight)
        merged[weight] = merged.get(weight, 0) + mult
    return tuple(sorted(merged.items()))


@attr.s(frozen=True, slots=True)
class ModuleSpec:
    """
    Finite-dimensional module V given by its highest weights.

    Attributes:
        rs:
            `lieweights.RootSystem` of the Lie algebra.
        highest_weights:
            Sorted (dominant weight, positive multiplicity) pairs; repeated
            weights are merged.
    """
    rs = attr.ib()
    highest_weights = attr.ib(converter=_merge_highest_weights)

    def __attrs_post_init__(self):
        if not self.highest_weights:
            raise ArgumentError('Module needs at least one highest weight')

        for weight, mult in self.highest_weights:
            if len(weight) != self.rs.rank or not all(isinstance(c, int) for c in weight):
                raise ArgumentError(
                    f'Highest weight of {self.rs} must be {self.rs.rank} integers, '
                    f'got: {weight}'
                )
            if not is_dominant(weight):
                raise ArgumentError(f'Highest weight {weight} of {self.rs} is not dominant')
            if not isinstance(mult, int) or mult < 1:
                raise ArgumentError(
                    f'Multiplicity of highest weight {weight} must be a positive '
                    f'integer, got: {mult!r}'
                )

    @classmethod
    def from_weights(cls, rs: RootSystem, weights: typing.Iterable[Weight]):
        """ One summand per weight; a weight given k times has multiplicity k. """
        return cls(rs, [(tuple(w), 1) for w in weights])

    def __str__(self):
        summands = []
        for weight, mult in self.highest_weights:
            summand = 'V(' + ','.join(str(c) for c in weight) + ')'
            summands.append(summand if mult == 1 else f'{mult}*{summand}')
        return ' + '.join(summands) + f' of {self.rs}'

    def dual(self) -> 'ModuleSpec':
        """ V^*: every highest weight replaced by its dual weight. """
        return ModuleSpec(
            self.rs,
            [(dual_weight(self.rs, weight), mult) for weight, mult in self.highest_weights]
        )

    def character(self) -> WeightMultiset:
        return module_character(self.rs, self.highest_weights)

    @property
    def dimension(self) -> int:
        return self.character().dimension


def natural_module_spec(n: int) -> ModuleSpec:
    """ V(w_1) of sl_{n+1}. """
    rs = RootSystem.from_label('A', n)
    return ModuleSpec(rs, [(tuple(1 if i == 0 else 0 for i in range(n)), 1)])


def _clean_graded_terms(terms) -> typing.Tuple[typing.Tuple[Weight, LaurentPolynomial], ...]:
    if isinstance(terms, dict):
        terms = terms.items()

    collected = {}
    for weight, poly in terms:
        weight = tuple(weight)
        if not isinstance(poly, LaurentPolynomial):
            poly = LaurentPolynomial.constant(poly)
        collected[weight] = collected.get(weight, LaurentPolynomial.zero()) + poly
    return tuple(sorted((w, p) for w, p in collected.items() if not p.is_zero))


@attr.s(frozen=True, slots=True, repr=False)
class GradedCharacter:
    """
    Graded character on Weyl-orbit sums.

    Attributes:
        rs:
            `lieweights.RootSystem` the weights belong to.
        terms:
            Sorted (dominant weight, non-zero LaurentPolynomial) pairs.
        m:
            Number of tensor factors the character came from, if any.
        gamma:
            `partitions.Partition` labelling the multiplicity space, if any.
        truncated_at:
            Degree above which the terms were dropped; None for exact
            characters.

    Equality compares `rs` and `terms` only.
    """
    rs = attr.ib()
    terms = attr.ib(converter=_clean_graded_terms, factory=tuple)
    m = attr.ib(default=None, eq=False)
    gamma = attr.ib(default=None, eq=False)
    truncated_at = attr.ib(default=None, eq=False)

    def __attrs_post_init__(self):
        for weight, _ in self.terms:
            if len(weight) != self.rs.rank or not is_dominant(weight):
                raise ArgumentError(
                    f'Graded characters of {self.rs} are indexed by dominant '
                    f'weights, got: {weight}'
                )

    def _evolve(self, terms, **metadata) -> 'GradedCharacter':
        values = {
            'm': self.m,
            'gamma': self.gamma,
            'truncated_at': self.truncated_at,
        }
        values.update(metadata)
        return GradedCharacter(self.rs, terms, **values)

    def as_dict(self) -> typing.Dict[Weight, LaurentPolynomial]:
        return dict(self.terms)

    def weights(self) -> typing.List[Weight]:
        return [w for w, _ in self.terms]

    def coefficient(self, weight: Weight) -> LaurentPolynomial:
        return self.as_dict().get(tuple(weight), LaurentPolynomial.zero())

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def _check_compatible(self, other: 'GradedCharacter'):
        if self.rs != other.rs:
            raise ArgumentError(
                f'Can not combine characters of different root systems: '
                f'{self.rs} and {other.rs}'
            )

    def __add__(self, other: 'GradedCharacter') -> 'GradedCharacter':
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        self._check_compatible(other)
        bounds = [d for d in (self.truncated_at, other.truncated_at) if d is not None]
        return GradedCharacter(
            self.rs,
            self.terms + other.terms,
            m=self.m if self.m == other.m else None,
            truncated_at=min(bounds) if bounds else None,
        )

    def __neg__(self) -> 'GradedCharacter':
        return self._evolve(tuple((w, -p) for w, p in self.terms))

    def __sub__(self, other: 'GradedCharacter') -> 'GradedCharacter':
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        return self + (-other)

    def __mul__(self, factor) -> 'GradedCharacter':
        """ Scale every coefficient by a LaurentPolynomial or an integer. """
        if isinstance(factor, int) and not isinstance(factor, bool):
            factor = LaurentPolynomial.constant(factor)
        if not isinstance(factor, LaurentPolynomial):
            return NotImplemented
        return self._evolve(tuple((w, p * factor) for w, p in self.terms))

    __rmul__ = __mul__

    def shift(self, k: int) -> 'GradedCharacter':
        """ Multiply by u^k. """
        return self._evolve(tuple((w, p.shift(k)) for w, p in self.terms))

    def truncate(self, max_degree: int) -> 'GradedCharacter':
        return self._evolve(
            tuple((w, p.truncate(max_degree)) for w, p in self.terms),
            truncated_at=max_degree,
        )

    def at_one(self) -> WeightMultiset:
        """ Ungraded character: u = 1 and every orbit sum expanded. """
        entries = {}
        for weight, poly in self.terms:
            value = poly.evaluate(1)
            for image in weyl_orbit(self.rs, weight):
                entries[image] = entries.get(image, 0) + value
        return WeightMultiset(entries)

    @property
    def dimension(self) -> int:
        return sum(
            poly.evaluate(1) * len(weyl_orbit(self.rs, weight))
            for weight, poly in self.terms
        )

    def difference(self, other: 'GradedCharacter') -> typing.Dict[Weight, typing.Tuple[LaurentPolynomial, LaurentPolynomial]]:
        """ Weights at which the two characters differ, with both coefficients. """
        self._check_compatible(other)
        mine, theirs = self.as_dict(), other.as_dict()
        zero = LaurentPolynomial.zero()
        return {
            w: (mine.get(w, zero), theirs.get(w, zero))
            for w in sorted(set(mine) | set(theirs))
            if mine.get(w, zero) != theirs.get(w, zero)
        }

    def to_json(self) -> dict:
        return {
            'type': self.rs.type_label,
            'rank': self.rs.rank,
            'm': self.m,
            'gamma': self.gamma.to_json() if self.gamma is not None else None,
            'terms': [
                {'weight': list(weight), 'poly': poly.to_json()}
                for weight, poly in self.terms
            ],
            'truncated_at': self.truncated_at,
        }

    @classmethod
    def from_json(cls, document: dict) -> 'GradedCharacter':
        """
        Raises:
            ArgumentError
        """
        try:
            rs = RootSystem.from_label(document['type'], document['rank'])
            gamma = document.get('gamma')
            return cls(
                rs,
                [
                    (tuple(term['weight']), LaurentPolynomial.from_json(term['poly']))
                    for term in document['terms']
                ],
                m=document.get('m'),
                gamma=Partition(gamma) if gamma is not None else None,
                truncated_at=document.get('truncated_at'),
            )
        except (KeyError, TypeError) as error:
            raise ArgumentError(
                f'Malformed graded character document. Exception occurred '
                f'({error.__class__.__name__}): {error}'
            )

    def __str__(self):
        if not self.terms:
            return '0'

        lines = []
        for weight, poly in self.terms:
            orbit = 'e(O(' + ','.join(str(c) for c in weight) + '))'
            factor = str(poly)
            if len(poly.terms) > 1:
                factor = f'({factor})'
            lines.append(f'{orbit} * {factor}')
        text = '\n+ '.join(lines)
        if self.truncated_at is not None:
            text += f'\n+ O(u^{self.truncated_at + 1})'
        return text

    def __repr__(self):
        return f'GradedCharacter({self.rs!r}, {len(self.terms)} terms)'


def _check_m(m: int):
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ArgumentError(f'Number of tensor factors must be a positive integer, got: {m!r}')


def _check_gamma(gamma: Partition, m: int):
    _check_m(m)
    if gamma.size != m:
        raise ArgumentError(f'Partition {gamma} does not partition m={m}')
    character_table(m)


def _map(executor, fn, items) -> list:
    if executor is None:
        return [fn(item) for item in items]
    return list(executor.map(fn, items))


@functools.lru_cache(maxsize=None)
def _coinvariant_multiplicities(gamma: Partition) -> typing.Tuple[typing.Tuple[Partition, LaurentPolynomial], ...]:
    """ P_tau(u) = sum_sigma c^gamma_{tau sigma} f_sigma(u) for every tau of m. """
    labels = character_table(gamma.size).labels
    result = []
    for tau in labels:
        poly = LaurentPolynomial.zero()
        for sigma in labels:
            c = kronecker(tau, sigma, gamma)
            if c:
                poly = poly + fake_degree(sigma) * c
        result.append((tau, poly))
    return tuple(result)


def _dominant_support(chV: WeightMultiset, m: int, rank: int) -> typing.List[Weight]:
    return tensor_power_character(chV, m, rank).dominant_part().weights()


def _b_loc_term(rs, chV, m, p_tau, mu) -> typing.Tuple[Weight, LaurentPolynomial]:
    s = s_mu_table(rs, chV, m, mu)
    poly = LaurentPolynomial.zero()
    for tau, p in p_tau:
        if s[tau]:
            poly = poly + p * s[tau]
    return mu, poly


def _check_coinvariant_bounds(chi: GradedCharacter, m: int):
    top = math.comb(m, 2)
    for weight, poly in chi.terms:
        if not poly.has_nonnegative_coefficients() or not poly.is_polynomial() or poly.degree > top:
            raise ConsistencyError(
                f'Coefficient of e(O({weight})) is not a non-negative polynomial '
                f'of degree <= {top}: {poly}'
            )


def graded_char_B_loc(
    gamma: Partition,
    V: ModuleSpec,
    m: int,
    executor=None
) -> GradedCharacter:
    """
    Graded character of B_loc(gamma, V):

        sum_mu sum_{tau, sigma} s_mu(tau, V) c^gamma_{tau sigma} f_sigma(u) e(O(mu))

    mu runs over the dominant weights of V^{(x)m}. With an
    `concurrent.futures.Executor` the mu-terms are computed through
    `executor.map`; the result does not depend on it.

    Raises:
        ArgumentError
        ConsistencyError
        LimitExceeded
    """
    _check_gamma(gamma, m)
    logger.info(f'Computing B_loc({gamma}) of {V}, m={m}')

    chV = V.character()
    p_tau = _coinvariant_multiplicities(gamma)
    support = _dominant_support(chV, m, V.rs.rank)
    logger.debug(f'Dominant support of V^{m}: {len(support)} weights')

    terms = _map(executor, functools.partial(_b_loc_term, V.rs, chV, m, p_tau), support)
    chi = GradedCharacter(V.rs, terms, m=m, gamma=gamma)
    _check_coinvariant_bounds(chi, m)
    return chi


def graded_char_B(
    gamma: Partition,
    V: ModuleSpec,
    m: int,
    max_degree: int,
    executor=None
) -> GradedCharacter:
    """
    Graded character of B(gamma, V) up to u^max_degree: the B_loc character
    times the Hilbert series prod_{i=1}^m (1 - u^i)^-1 of the symmetric
    invariants.

    Raises:
        ArgumentError
        ConsistencyError
        LimitExceeded
    """
    if not isinstance(max_degree, int) or max_degree < 0:
        raise ArgumentError(f'Truncation degree must be a non-negative integer, got: {max_degree!r}')

    local = graded_char_B_loc(gamma, V, m, executor)
    series = invariant_hilbert_series(m, max_degree)
    return (local * series).truncate(max_degree)


def dual_graded_char(chi: GradedCharacter) -> GradedCharacter:
    """ sum g_lambda(u^-1) e(O(lambda^v)); an involution. """
    return GradedCharacter(
        chi.rs,
        [(dual_weight(chi.rs, w), p.invert()) for w, p in chi.terms],
        m=chi.m,
        truncated_at=chi.truncated_at,
    )


@attr.s(frozen=True, slots=True)
class DualityReport:
    """
    Both sides of chi B_loc(gamma, V) = u^{m(m-1)/2} dual(chi B_loc(gamma^v, V^*)).

    Attributes:
        gamma:
            Partition of the left-hand side.
        conjugate:
            gamma^v.
        m:
            Number of tensor factors.
        shift:
            The exponent m(m-1)/2.
        lhs, rhs:
            The two `GradedCharacter`s.
        differences:
            Weights where the sides disagree, with both coefficients.
    """
    gamma = attr.ib()
    conjugate = attr.ib()
    m = attr.ib()
    shift = attr.ib()
    lhs = attr.ib()
    rhs = attr.ib()
    differences = attr.ib(factory=dict)

    @property
    def passed(self) -> bool:
        return not self.differences

    def to_json(self) -> dict:
        return {
            'gamma': self.gamma.to_json(),
            'conjugate': self.conjugate.to_json(),
            'm': self.m,
            'shift': self.shift,
            'passed': self.passed,
            'lhs': self.lhs.to_json(),
            'rhs': self.rhs.to_json(),
            'differences': [
                {'weight': list(w), 'lhs': a.to_json(), 'rhs': b.to_json()}
                for w, (a, b) in self.differences.items()
            ],
        }


def check_duality(gamma: Partition, V: ModuleSpec, m: int, executor=None) -> DualityReport:
    """
    Compare both sides of the duality between conjugate partitions and dual
    modules. A mismatch is reported, not raised.

    Raises:
        ArgumentError
        LimitExceeded
    """
    _check_gamma(gamma, m)
    shift = math.comb(m, 2)
    conjugate = gamma.conjugate()

    lhs = graded_char_B_loc(gamma, V, m, executor)
    rhs = dual_graded_char(graded_char_B_loc(conjugate, V.dual(), m, executor)).shift(shift)
    differences = lhs.difference(rhs)

    if differences:
        logger.warning(
            f'Duality fails for gamma={gamma}, V={V}, m={m} at '
            f'{len(differences)} weights'
        )
    return DualityReport(gamma, conjugate, m, shift, lhs, rhs, differences)


def natural_rep_weight(n: int, a: typing.Sequence[int]) -> Weight:
    """
    Weight of the basis vector v_{a_0} (x) ... of V(w_1)^{(x)m} of sl_{n+1}
    with a_i tensor factors equal to v_i: sum_{i=1}^n (a_{i-1} - a_i) w_i.

    Raises:
        ArgumentError
    """
    a = tuple(a)
    if len(a) != n + 1:
        raise ArgumentError(f'Composition for rank {n} must have {n + 1} entries, got: {a}')
    if any(not isinstance(x, int) or x < 0 for x in a):
        raise ArgumentError(f'Composition entries must be non-negative integers, got: {a}')
    return tuple(a[i - 1] - a[i] for i in range(1, n + 1))


def _natural_term(n, p_tau, content) -> typing.Tuple[Weight, LaurentPolynomial]:
    padded = tuple(content) + (0,) * (n + 1 - len(content))
    poly = LaurentPolynomial.zero()
    for tau, p in p_tau:
        k = kostka(tau, padded)
        if k:
            poly = poly + p * k
    return natural_rep_weight(n, padded), poly


def graded_char_natural(gamma: Partition, n: int, m: int, executor=None) -> GradedCharacter:
    """
    B_loc(gamma, V(w_1)) for sl_{n+1} through Kostka numbers:
    s_mu(tau, V(w_1)) = K_{tau, a} where mu is the weight of the partition a
    of m with at most n+1 parts.

    Raises:
        ArgumentError
        LimitExceeded
    """
    _check_gamma(gamma, m)
    rs = RootSystem.from_label('A', n)
    logger.info(f'Computing B_loc({gamma}) of the natural module of {rs} by Kostka numbers, m={m}')

    p_tau = _coinvariant_multiplicities(gamma)
    contents = [p.parts for p in enumerate_partitions(m, max_parts=n + 1)]
    terms = _map(executor, functools.partial(_natural_term, n, p_tau), contents)
    return GradedCharacter(rs, terms, m=m, gamma=gamma)


def total_graded_character(V: ModuleSpec, m: int) -> GradedCharacter:
    """ chV^m [m]_u!, the graded character of V^{(x)m} (x) A_m^coin. """
    _check_m(m)
    hilbert = q_factorial(m)
    dominant = tensor_power_character(V.character(), m, V.rs.rank).dominant_part()
    return GradedCharacter(V.rs, [(w, hilbert * c) for w, c in dominant], m=m)


def current_module_character(V: ModuleSpec, max_degree: int) -> GradedCharacter:
    """ chg V[t] = sum_{r <= max_degree} ch V u^r. """
    if not isinstance(max_degree, int) or max_degree < 0:
        raise ArgumentError(f'Truncation degree must be a non-negative integer, got: {max_degree!r}')

    grades = LaurentPolynomial({r: 1 for r in range(max_degree + 1)})
    dominant = V.character().dominant_part()
    return GradedCharacter(
        V.rs,
        [(w, grades * c) for w, c in dominant],
        m=1,
        truncated_at=max_degree,
    )


def weight_space_hilbert_series(V: ModuleSpec, m: int, mu: Weight) -> LaurentPolynomial:
    """
    H((M_loc)_mu) = sum_{tau, sigma, gamma} s_mu(tau, V) c^gamma_{tau sigma}
    f_sigma(u) dim S(gamma). It agrees with the coefficient of e(mu) in
    chV^m [m]_u!.

    Raises:
        ArgumentError
        ConsistencyError
        LimitExceeded
    """
    _check_m(m)
    table = character_table(m)
    s = s_mu_table(V.rs, V.character(), m, mu)

    series = LaurentPolynomial.zero()
    for tau in table.labels:
        if not s[tau]:
            continue
        for sigma in table.labels:
            weight = sum(kronecker(tau, sigma, gamma) * dim_irrep(gamma) for gamma in table.labels)
            if weight:
                series = series + fake_degree(sigma) * (s[tau] * weight)
    return series
