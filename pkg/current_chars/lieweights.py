"""
Root-system data, Weyl orbits, dual weights, irreducible characters and
S_m-equivariant traces on weight spaces of tensor powers.

Weights are integer tuples in the fundamental-weight basis:
coords[i] = <lambda, alpha_i^v>.
"""
import collections
import fractions
import functools
import logging
import math
import typing

import attr
import sympy

from current_chars.exceptions import ArgumentError, ConsistencyError
from current_chars.partitions import Partition
from current_chars.symgroup import character_table, project


logger = logging.getLogger(__name__)


Weight = typing.Tuple[int, ...]


WEYL_ORDERS = {
    ('E', 6): 51840,
    ('E', 7): 2903040,
    ('E', 8): 696729600,
    ('F', 4): 1152,
    ('G', 2): 12,
}


def _cartan_entry(label: str, n: int, i: int, j: int) -> int:
    """
    Cartan matrix entry <alpha_i, alpha_j^v> (0-based indices). Classical
    types follow Bourbaki numbering; E_n is the chain 0..n-2 with node
    n-1 attached to node 2.
    """
    if i == j:
        return 2

    if label == 'B' and (i, j) == (n - 2, n - 1):
        return -2
    if label == 'C' and (i, j) == (n - 1, n - 2):
        return -2
    if label == 'F' and (i, j) == (1, 2):
        return -2
    if label == 'G' and (i, j) == (0, 1):
        return -3

    if label == 'D':
        if {i, j} == {n - 1, n - 2}:
            return 0
        if {i, j} == {n - 1, n - 3}:
            return -1
    if label == 'E':
        if {i, j} == {n - 1, n - 2}:
            return 0
        if {i, j} == {n - 1, 2}:
            return -1

    return -1 if abs(i - j) == 1 else 0


def _check_label(label: str, n: int):
    minimal = {'A': 1, 'B': 2, 'C': 2, 'D': 4}
    exceptional = {'E': (6, 7, 8), 'F': (4,), 'G': (2,)}

    if label in minimal:
        if not isinstance(n, int) or n < minimal[label]:
            raise ArgumentError(
                f'Type {label} needs rank >= {minimal[label]}, got: {n}'
            )
    elif label in exceptional:
        if n not in exceptional[label]:
            raise ArgumentError(
                f'Type {label} exists only in ranks {exceptional[label]}, got: {n}'
            )
    else:
        raise ArgumentError(
            f'Unknown root system type: {label!r}. Valid types: A, B, C, D, E, F, G'
        )


def _weyl_order(label: str, n: int) -> int:
    if label == 'A':
        return math.factorial(n + 1)
    if label in ('B', 'C'):
        return 2 ** n * math.factorial(n)
    if label == 'D':
        return 2 ** (n - 1) * math.factorial(n)
    return WEYL_ORDERS[(label, n)]


@attr.s(frozen=True, slots=True, repr=False)
class RootSystem:
    """
    Root system of a simple Lie algebra.

    Attributes:
        type_label:
            One of A, B, C, D, E, F, G.
        rank:
            Number of simple roots n.
        cartan_matrix:
            n x n integer matrix with entries <alpha_i, alpha_j^v>; row i
            is alpha_i in fundamental coordinates.
        inverse_cartan:
            Exact rational inverse (sympy matrix).
        root_lengths:
            d_i = (alpha_i, alpha_i) / 2, normalised so that d_0 = 1.
        weyl_order:
            Order of the Weyl group.
    """
    type_label = attr.ib()
    rank = attr.ib()
    cartan_matrix = attr.ib(init=False, eq=False)
    inverse_cartan = attr.ib(init=False, eq=False)
    root_lengths = attr.ib(init=False, eq=False)
    weyl_order = attr.ib(init=False, eq=False)
    _inverse = attr.ib(init=False, eq=False, repr=False)
    _gram = attr.ib(init=False, eq=False, repr=False)

    def __attrs_post_init__(self):
        _check_label(self.type_label, self.rank)
        n = self.rank
        cartan = tuple(
            tuple(_cartan_entry(self.type_label, n, i, j) for j in range(n))
            for i in range(n)
        )
        inverse = sympy.Matrix(cartan).inv()
        if inverse * sympy.Matrix(cartan) != sympy.eye(n):
            raise ConsistencyError(f'Cartan matrix of {self} is not invertible')

        object.__setattr__(self, 'cartan_matrix', cartan)
        object.__setattr__(self, 'inverse_cartan', inverse)
        lengths = _symmetrizer(cartan)
        object.__setattr__(self, 'root_lengths', lengths)
        # Fraction copies of C^-1 and of the Gram matrix (w_i, w_j) = (C^-1)_{ji} d_i
        rational = tuple(
            tuple(fractions.Fraction(int(inverse[i, j].p), int(inverse[i, j].q)) for j in range(n))
            for i in range(n)
        )
        object.__setattr__(self, '_inverse', rational)
        object.__setattr__(self, '_gram', tuple(
            tuple(rational[j][i] * lengths[i] for j in range(n)) for i in range(n)
        ))
        object.__setattr__(self, 'weyl_order', _weyl_order(self.type_label, n))

    @classmethod
    def from_label(cls, type_label: str, rank: int) -> 'RootSystem':
        """
        Raises:
            ArgumentError
        """
        return cls(str(type_label).upper(), rank)

    def __repr__(self):
        return f'RootSystem({self.type_label}{self.rank})'

    def __str__(self):
        return f'{self.type_label}{self.rank}'

    def simple_root(self, i: int) -> Weight:
        return self.cartan_matrix[i]

    def inner_product(self, a: Weight, b: Weight) -> fractions.Fraction:
        """ Invariant form on fundamental coordinates: (w_i, w_j) = (C^-1)_{ji} d_i. """
        total = fractions.Fraction(0)
        for i in range(self.rank):
            if a[i] == 0:
                continue
            for j in range(self.rank):
                if b[j]:
                    total += a[i] * b[j] * self._gram[i][j]
        return total

    def to_root_coordinates(self, weight: Weight) -> typing.Tuple[fractions.Fraction, ...]:
        """ Coefficients of `weight` on the simple roots (exact rationals). """
        n = self.rank
        return tuple(sum(weight[j] * self._inverse[j][k] for j in range(n)) for k in range(n))


def _symmetrizer(cartan) -> typing.Tuple[fractions.Fraction, ...]:
    """ d with C_ij d_j = C_ji d_i, found along the Dynkin diagram. """
    n = len(cartan)
    d = [None] * n
    d[0] = fractions.Fraction(1)
    queue = [0]
    while queue:
        i = queue.pop()
        for j in range(n):
            if i != j and cartan[i][j] != 0 and d[j] is None:
                d[j] = fractions.Fraction(cartan[j][i]) * d[i] / cartan[i][j]
                queue.append(j)
    return tuple(d)


def is_dominant(weight: Weight) -> bool:
    return all(c >= 0 for c in weight)


def _check_weight(rs: RootSystem, weight: Weight) -> Weight:
    weight = tuple(weight)
    if len(weight) != rs.rank or not all(isinstance(c, int) for c in weight):
        raise ArgumentError(
            f'Weight of {rs} must be {rs.rank} integers, got: {weight}'
        )
    return weight


def _check_dominant(rs: RootSystem, weight: Weight) -> Weight:
    weight = _check_weight(rs, weight)
    if not is_dominant(weight):
        raise ArgumentError(
            f'Weight {weight} of {rs} is not dominant. Normalize it with '
            'dominant_representative first'
        )
    return weight


def simple_reflection(rs: RootSystem, i: int, mu: Weight) -> Weight:
    """
    s_i(mu) = mu - <mu, alpha_i^v> alpha_i, with 1 <= i <= rank.

    Raises:
        ArgumentError
    """
    if not 1 <= i <= rs.rank:
        raise ArgumentError(f'Simple reflection index must be in 1..{rs.rank}, got: {i}')
    return _reflect(rs, i - 1, tuple(mu))


def _reflect(rs: RootSystem, i: int, mu: Weight) -> Weight:
    coeff = mu[i]
    if coeff == 0:
        return mu
    row = rs.cartan_matrix[i]
    return tuple(c - coeff * a for c, a in zip(mu, row))


def weyl_orbit(rs: RootSystem, lam: Weight) -> typing.FrozenSet[Weight]:
    """
    Orbit of a dominant weight, closed under simple reflections.

    Raises:
        ArgumentError
    """
    return _weyl_orbit(rs, _check_dominant(rs, lam))


@functools.lru_cache(maxsize=None)
def _weyl_orbit(rs: RootSystem, lam: Weight) -> typing.FrozenSet[Weight]:
    orbit = {lam}
    frontier = [lam]
    while frontier:
        weight = frontier.pop()
        for i in range(rs.rank):
            image = _reflect(rs, i, weight)
            if image not in orbit:
                orbit.add(image)
                frontier.append(image)
    return frozenset(orbit)


def dominant_representative(rs: RootSystem, mu: Weight) -> Weight:
    """ The unique dominant weight in the Weyl orbit of mu. """
    mu = _check_weight(rs, mu)
    while True:
        negative = next((i for i, c in enumerate(mu) if c < 0), None)
        if negative is None:
            return mu
        mu = _reflect(rs, negative, mu)


def dual_weight(rs: RootSystem, lam: Weight) -> Weight:
    """
    lambda^v = -w_0 lambda, the highest weight of V(lambda)^*.

    Raises:
        ArgumentError
    """
    lam = _check_dominant(rs, lam)
    return dominant_representative(rs, tuple(-c for c in lam))


@functools.lru_cache(maxsize=None)
def positive_roots(rs: RootSystem) -> typing.Tuple[typing.Tuple[int, ...], ...]:
    """
    Positive roots in simple-root coordinates, by height. A root beta
    extends to beta + alpha_i when the alpha_i-string through beta goes up:
    q = p - <beta, alpha_i^v> > 0.
    """
    n = rs.rank
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    roots = list(simple)
    known = set(simple)
    layer = list(simple)

    while layer:
        next_layer = []
        for beta in layer:
            pairing = [
                sum(beta[k] * rs.cartan_matrix[k][i] for k in range(n))
                for i in range(n)
            ]
            for i in range(n):
                p = 0
                lower = list(beta)
                while True:
                    lower[i] -= 1
                    if tuple(lower) not in known:
                        break
                    p += 1
                if p - pairing[i] > 0:
                    raised = tuple(b + (1 if k == i else 0) for k, b in enumerate(beta))
                    if raised not in known:
                        known.add(raised)
                        next_layer.append(raised)
                        roots.append(raised)
        layer = next_layer

    return tuple(roots)


def root_to_weight(rs: RootSystem, root: typing.Tuple[int, ...]) -> Weight:
    """ Simple-root coordinates to fundamental coordinates. """
    n = rs.rank
    return tuple(sum(root[k] * rs.cartan_matrix[k][i] for k in range(n)) for i in range(n))


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    """
    dim V(lambda) = prod over positive roots beta of
    (lambda + rho, beta) / (rho, beta).

    Raises:
        ArgumentError
    """
    lam = _check_dominant(rs, lam)
    rho = tuple(1 for _ in range(rs.rank))
    shifted = tuple(c + 1 for c in lam)

    result = fractions.Fraction(1)
    for beta in positive_roots(rs):
        # (mu, alpha_k) = mu_k d_k
        numerator = sum(beta[k] * shifted[k] * rs.root_lengths[k] for k in range(rs.rank))
        denominator = sum(beta[k] * rho[k] * rs.root_lengths[k] for k in range(rs.rank))
        result *= fractions.Fraction(numerator) / denominator

    if result.denominator != 1:
        raise ConsistencyError(f'Weyl dimension of {lam} in {rs} is not an integer: {result}')
    return int(result)


def _clean_entries(entries) -> typing.Tuple[typing.Tuple[Weight, int], ...]:
    if isinstance(entries, dict):
        items = entries.items()
    else:
        items = entries

    collected = {}
    for weight, mult in items:
        weight = tuple(weight)
        collected[weight] = collected.get(weight, 0) + mult
    return tuple(sorted((w, c) for w, c in collected.items() if c != 0))


@attr.s(frozen=True, slots=True)
class WeightMultiset:
    """
    Finite formal sum of weights with integer multiplicities, e.g. the
    character sum_lambda dim M_lambda e(lambda) of a module.

    Attributes:
        entries:
            Sorted (weight, multiplicity) pairs, no zero multiplicity.
    """
    entries = attr.ib(converter=_clean_entries, factory=tuple)

    @classmethod
    def single(cls, weight: Weight, mult: int=1):
        return cls({tuple(weight): mult})

    def as_dict(self) -> typing.Dict[Weight, int]:
        return dict(self.entries)

    def multiplicity(self, weight: Weight) -> int:
        return self.as_dict().get(tuple(weight), 0)

    def weights(self) -> typing.List[Weight]:
        return [w for w, _ in self.entries]

    @property
    def dimension(self) -> int:
        return sum(c for _, c in self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __add__(self, other: 'WeightMultiset') -> 'WeightMultiset':
        return WeightMultiset(self.entries + other.entries)

    def scale(self, factor: int) -> 'WeightMultiset':
        return WeightMultiset(tuple((w, c * factor) for w, c in self.entries))

    def negate(self) -> 'WeightMultiset':
        """ Character of the dual module: every weight replaced by its negative. """
        return WeightMultiset(tuple((tuple(-x for x in w), c) for w, c in self.entries))

    def dilate(self, factor: int) -> 'WeightMultiset':
        """ sum mult(nu) e(factor * nu). """
        return WeightMultiset(tuple((tuple(factor * x for x in w), c) for w, c in self.entries))

    def __mul__(self, other: 'WeightMultiset') -> 'WeightMultiset':
        """ Convolution: the character of a tensor product. """
        product = collections.defaultdict(int)
        for w1, c1 in self.entries:
            for w2, c2 in other.entries:
                product[tuple(a + b for a, b in zip(w1, w2))] += c1 * c2
        return WeightMultiset(product)

    def power(self, m: int, rank: int) -> 'WeightMultiset':
        result = WeightMultiset.single(tuple(0 for _ in range(rank)))
        for _ in range(m):
            result = result * self
        return result

    def dominant_part(self) -> 'WeightMultiset':
        return WeightMultiset(tuple((w, c) for w, c in self.entries if is_dominant(w)))

    def is_weyl_invariant(self, rs: RootSystem) -> bool:
        mults = self.as_dict()
        return all(
            mults.get(_reflect(rs, i, w), 0) == c
            for w, c in self.entries for i in range(rs.rank)
        )


def _dominant_weights_below(rs: RootSystem, lam: Weight) -> typing.List[Weight]:
    """ Dominant weights of V(lambda): close {lambda} under subtracting positive roots. """
    roots = [root_to_weight(rs, beta) for beta in positive_roots(rs)]
    found = {lam}
    frontier = [lam]
    while frontier:
        weight = frontier.pop()
        for root in roots:
            lower = tuple(a - b for a, b in zip(weight, root))
            if is_dominant(lower) and lower not in found:
                found.add(lower)
                frontier.append(lower)

    # Sort by depth below lambda so that higher weights come first
    def depth(weight):
        return sum(rs.to_root_coordinates(tuple(a - b for a, b in zip(lam, weight))))
    return sorted(found, key=lambda w: (depth(w), tuple(-c for c in w)))


def dominant_multiplicities(rs: RootSystem, lam: Weight) -> typing.Tuple[typing.Tuple[Weight, int], ...]:
    """
    Multiplicities of the dominant weights of V(lambda) by Freudenthal's
    formula:

        ((lam+rho, lam+rho) - (mu+rho, mu+rho)) m(mu)
            = 2 sum_{beta > 0} sum_{k >= 1} m(mu + k beta) (mu + k beta, beta)

    Raises:
        ArgumentError
        ConsistencyError
    """
    return _dominant_multiplicities(rs, _check_dominant(rs, lam))


@functools.lru_cache(maxsize=None)
def _dominant_multiplicities(rs: RootSystem, lam: Weight) -> typing.Tuple[typing.Tuple[Weight, int], ...]:
    roots = [root_to_weight(rs, beta) for beta in positive_roots(rs)]
    rho = tuple(1 for _ in range(rs.rank))
    dominant = _dominant_weights_below(rs, lam)
    allowed = set(dominant)

    def shifted_norm(weight):
        w = tuple(a + b for a, b in zip(weight, rho))
        return rs.inner_product(w, w)

    top = shifted_norm(lam)
    mults = {lam: fractions.Fraction(1)}

    for mu in dominant[1:]:
        total = fractions.Fraction(0)
        for root in roots:
            k = 1
            while True:
                above = tuple(a + k * b for a, b in zip(mu, root))
                rep = dominant_representative(rs, above)
                if rep not in allowed:
                    break
                total += mults.get(rep, 0) * rs.inner_product(above, root)
                k += 1
        mults[mu] = 2 * total / (top - shifted_norm(mu))

    result = []
    for mu in dominant:
        value = mults[mu]
        if value.denominator != 1 or value < 0:
            raise ConsistencyError(
                f'Freudenthal multiplicity of {mu} in V({lam}) is not a '
                f'non-negative integer: {value}'
            )
        if value:
            result.append((mu, int(value)))
    return tuple(result)


def irreducible_character(rs: RootSystem, lam: Weight) -> WeightMultiset:
    """
    Character of V(lambda): Freudenthal multiplicities on dominant weights
    spread over their Weyl orbits.

    Raises:
        ArgumentError
        ConsistencyError
    """
    return _irreducible_character(rs, _check_dominant(rs, lam))


@functools.lru_cache(maxsize=None)
def _irreducible_character(rs: RootSystem, lam: Weight) -> WeightMultiset:
    entries = {}
    for mu, mult in _dominant_multiplicities(rs, lam):
        for weight in weyl_orbit(rs, mu):
            entries[weight] = mult
    character = WeightMultiset(entries)

    expected = weyl_dimension(rs, lam)
    if character.dimension != expected:
        raise ConsistencyError(
            f'Character of V({lam}) in {rs} has dimension {character.dimension}, '
            f'Weyl dimension formula gives {expected}'
        )
    logger.debug(f'Character of V({lam}) in {rs}: dimension {expected}')
    return character


def module_character(
    rs: RootSystem,
    highest_weights: typing.Sequence[typing.Tuple[Weight, int]]
) -> WeightMultiset:
    """ Character of the direct sum of V(lambda)^{mult}. """
    character = WeightMultiset()
    for lam, mult in highest_weights:
        character = character + irreducible_character(rs, tuple(lam)).scale(mult)
    return character


def tensor_power_character(chV: WeightMultiset, m: int, rank: int) -> WeightMultiset:
    return chV.power(m, rank)


@functools.lru_cache(maxsize=None)
def class_trace_character(chV: WeightMultiset, cycle_type: Partition, rank: int) -> WeightMultiset:
    """
    Weight-graded trace of a permutation of the given cycle type on
    V^{(x)m}: a basis tuple is fixed iff it is constant on cycles, so the
    trace is the product over cycles of the dilated character
    sum_nu mult(nu) e(l * nu). Factors are multiplied smallest support first.
    """
    factors = sorted((chV.dilate(length) for length in cycle_type.parts), key=len)
    result = WeightMultiset.single(tuple(0 for _ in range(rank)))
    for factor in factors:
        result = result * factor
    return result


def tensor_power_class_trace(
    rs: RootSystem,
    chV: WeightMultiset,
    cycle_type: Partition,
    mu: Weight
) -> int:
    """
    Trace of any permutation of the given cycle type on (V^{(x)m})_mu.

    Raises:
        ArgumentError
    """
    mu = _check_weight(rs, mu)
    return class_trace_character(chV, cycle_type, rs.rank).multiplicity(mu)


def s_mu_table(rs: RootSystem, chV: WeightMultiset, m: int, mu: Weight) -> typing.Dict[Partition, int]:
    """
    s_mu(tau, V) for every tau of m: the multiplicity of S(tau) in the
    mu-weight space of V^{(x)m} under place permutation.

    Raises:
        ArgumentError
        ConsistencyError
    """
    mu = _check_weight(rs, mu)
    table = character_table(m)
    traces = [
        class_trace_character(chV, cls, rs.rank).multiplicity(mu)
        for cls in table.labels
    ]
    return {tau: project(table, tau, traces) for tau in table.labels}


def s_mu(rs: RootSystem, chV: WeightMultiset, tau: Partition, mu: Weight) -> int:
    """
    Raises:
        ArgumentError
        ConsistencyError
    """
    return s_mu_table(rs, chV, tau.size, mu)[tau]
