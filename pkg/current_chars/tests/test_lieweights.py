""" Unit tests for lieweights.py module """
import fractions
import random

import pytest

from current_chars.exceptions import ArgumentError
from current_chars.lieweights import (
    RootSystem,
    WeightMultiset,
    class_trace_character,
    dominant_multiplicities,
    dominant_representative,
    dual_weight,
    irreducible_character,
    is_dominant,
    module_character,
    positive_roots,
    s_mu_table,
    simple_reflection,
    tensor_power_class_trace,
    weyl_dimension,
    weyl_orbit,
)
from current_chars.partitions import Partition, dim_irrep


CARTAN_MATRICES = [
    ('A', 2, ((2, -1), (-1, 2))),
    ('B', 2, ((2, -2), (-1, 2))),
    ('C', 2, ((2, -1), (-2, 2))),
    ('G', 2, ((2, -3), (-1, 2))),
]

POSITIVE_ROOT_COUNTS = [
    ('A', 1, 1),
    ('A', 4, 10),
    ('B', 3, 9),
    ('C', 3, 9),
    ('D', 4, 12),
    ('G', 2, 6),
    ('F', 4, 24),
    ('E', 6, 36),
    ('E', 7, 63),
]

WEYL_ORDERS = [
    ('A', 2, 6),
    ('B', 2, 8),
    ('G', 2, 12),
    ('A', 3, 24),
    ('B', 3, 48),
    ('C', 3, 48),
]

WEYL_DIMENSIONS = [
    ('A', 1, (3,), 4),
    ('A', 2, (1, 1), 8),
    ('A', 2, (2, 0), 6),
    ('B', 2, (1, 0), 5),
    ('B', 2, (0, 1), 4),
    ('C', 2, (1, 0), 4),
    ('C', 2, (0, 1), 5),
    ('G', 2, (0, 1), 7),
    ('G', 2, (1, 0), 14),
    ('D', 4, (0, 1, 0, 0), 28),
    ('E', 6, (1, 0, 0, 0, 0, 0), 27),
]

DUAL_WEIGHTS = [
    ('A', 1, (3,), (3,)),
    ('A', 2, (1, 0), (0, 1)),
    ('A', 3, (1, 2, 0), (0, 2, 1)),
    ('B', 2, (1, 0), (1, 0)),
    ('G', 2, (0, 1), (0, 1)),
]

INVALID_LABELS = [
    ('X', 2),
    ('A', 0),
    ('B', 1),
    ('D', 3),
    ('E', 5),
    ('G', 3),
]


@pytest.mark.parametrize('label, rank, cartan', CARTAN_MATRICES)
def test_cartan_matrix(label, rank, cartan):
    assert cartan == RootSystem.from_label(label, rank).cartan_matrix


@pytest.mark.parametrize('label, rank', INVALID_LABELS)
def test_invalid_root_system(label, rank):
    with pytest.raises(ArgumentError):
        RootSystem.from_label(label, rank)


def test_label_is_case_insensitive():
    assert RootSystem('A', 2) == RootSystem.from_label('a', 2)
    assert 'B3' == str(RootSystem.from_label('b', 3))


@pytest.mark.parametrize('label, rank, count', POSITIVE_ROOT_COUNTS)
def test_positive_root_count(label, rank, count):
    assert count == len(positive_roots(RootSystem.from_label(label, rank)))


@pytest.mark.parametrize('label, rank, order', WEYL_ORDERS)
def test_regular_orbit_size(label, rank, order):
    rs = RootSystem.from_label(label, rank)
    rho = tuple(1 for _ in range(rank))
    assert order == rs.weyl_order
    assert order == len(weyl_orbit(rs, rho))


@pytest.mark.parametrize('label, rank, lam, dimension', WEYL_DIMENSIONS)
def test_weyl_dimension(label, rank, lam, dimension):
    assert dimension == weyl_dimension(RootSystem.from_label(label, rank), lam)


@pytest.mark.parametrize('label, rank, lam, dual', DUAL_WEIGHTS)
def test_dual_weight(label, rank, lam, dual):
    assert dual == dual_weight(RootSystem.from_label(label, rank), lam)


def test_inner_product():
    a1 = RootSystem.from_label('A', 1)
    assert fractions.Fraction(1, 2) == a1.inner_product((1,), (1,))
    b2 = RootSystem.from_label('B', 2)
    # the short simple root has half the squared length of the long one
    alpha_1, alpha_2 = b2.simple_root(0), b2.simple_root(1)
    assert 2 * b2.inner_product(alpha_2, alpha_2) == b2.inner_product(alpha_1, alpha_1)


def test_to_root_coordinates():
    a2 = RootSystem.from_label('A', 2)
    assert (fractions.Fraction(2, 3), fractions.Fraction(1, 3)) == a2.to_root_coordinates((1, 0))
    assert (1, 0) == a2.to_root_coordinates(a2.simple_root(0))


def test_simple_reflection():
    a2 = RootSystem.from_label('A', 2)
    assert (-1, 1) == simple_reflection(a2, 1, (1, 0))
    assert (1, 0) == simple_reflection(a2, 2, (1, 0))
    with pytest.raises(ArgumentError):
        simple_reflection(a2, 3, (1, 0))


def test_weyl_orbit_needs_dominant_weight():
    with pytest.raises(ArgumentError):
        weyl_orbit(RootSystem.from_label('A', 2), (-1, 1))
    with pytest.raises(ArgumentError):
        weyl_orbit(RootSystem.from_label('A', 2), (1,))


def test_weyl_orbit_a2():
    orbit = weyl_orbit(RootSystem.from_label('A', 2), (1, 0))
    assert {(1, 0), (-1, 1), (0, -1)} == orbit


def test_dominant_representative():
    rng = random.Random(2019)
    systems = [RootSystem.from_label(*label) for label in (('A', 3), ('B', 3), ('C', 2), ('G', 2))]
    for _ in range(200):
        rs = rng.choice(systems)
        mu = tuple(rng.randint(-4, 4) for _ in range(rs.rank))
        rep = dominant_representative(rs, mu)
        assert is_dominant(rep)
        assert mu in weyl_orbit(rs, rep)


def test_freudenthal_against_weyl():
    rng = random.Random(7)
    systems = [RootSystem.from_label(*label) for label in (('A', 2), ('A', 3), ('B', 2), ('C', 3), ('G', 2))]
    for _ in range(20):
        rs = rng.choice(systems)
        lam = tuple(rng.randint(0, 2) for _ in range(rs.rank))
        character = irreducible_character(rs, lam)
        assert weyl_dimension(rs, lam) == character.dimension
        assert character.is_weyl_invariant(rs)
        assert 1 == character.multiplicity(lam)


def test_adjoint_multiplicities():
    a2 = RootSystem.from_label('A', 2)
    assert ((((1, 1), 1), ((0, 0), 2))) == dominant_multiplicities(a2, (1, 1))
    character = irreducible_character(a2, (1, 1))
    assert 2 == character.multiplicity((0, 0))
    assert 7 == len(character)


def test_sl2_character():
    a1 = RootSystem.from_label('A', 1)
    assert {(2,): 1, (0,): 1, (-2,): 1} == irreducible_character(a1, (2,)).as_dict()


def test_module_character():
    a1 = RootSystem.from_label('A', 1)
    character = module_character(a1, (((1,), 2), ((0,), 1)))
    assert {(1,): 2, (0,): 1, (-1,): 2} == character.as_dict()
    assert 5 == character.dimension


def test_weight_multiset():
    chV = WeightMultiset({(1,): 1, (-1,): 1})
    assert {(2,): 1, (0,): 2, (-2,): 1} == chV.power(2, 1).as_dict()
    assert {(2,): 1, (-2,): 1} == chV.dilate(2).as_dict()
    assert WeightMultiset() == chV + chV.scale(-1)
    assert {(3,): 1, (-1,): 1} == WeightMultiset({(-3,): 1, (1,): 1}).negate().as_dict()


def test_class_trace_character():
    chV = WeightMultiset({(1,): 1, (-1,): 1})
    assert {(2,): 1, (-2,): 1} == class_trace_character(chV, Partition((2,)), 1).as_dict()
    a1 = RootSystem.from_label('A', 1)
    assert 0 == tensor_power_class_trace(a1, chV, Partition((2,)), (0,))
    assert 2 == tensor_power_class_trace(a1, chV, Partition((1, 1)), (0,))


def test_s_mu_table():
    a1 = RootSystem.from_label('A', 1)
    chV = irreducible_character(a1, (1,))
    zero = s_mu_table(a1, chV, 2, (0,))
    assert {Partition((2,)): 1, Partition((1, 1)): 1} == zero
    top = s_mu_table(a1, chV, 2, (2,))
    assert {Partition((2,)): 1, Partition((1, 1)): 0} == top


TENSOR_POWER_CASES = [
    (label, rank, hw, m)
    for label, rank, hw in [('A', 1, (1,)), ('A', 1, (2,)), ('A', 2, (1, 0)), ('A', 2, (1, 1))]
    for m in range(1, 5)
]


def _tensor_power(label, rank, hw, m):
    rs = RootSystem.from_label(label, rank)
    chV = irreducible_character(rs, hw)
    return rs, chV, chV.power(m, rs.rank)


@pytest.mark.parametrize('label, rank, hw, m', TENSOR_POWER_CASES)
def test_s_mu_sums_to_weight_multiplicity(label, rank, hw, m):
    rs, chV, power = _tensor_power(label, rank, hw, m)
    for mu in power.weights():
        table = s_mu_table(rs, chV, m, mu)
        assert power.multiplicity(mu) == sum(n * dim_irrep(tau) for tau, n in table.items())


@pytest.mark.parametrize('label, rank, hw, m', TENSOR_POWER_CASES)
def test_s_mu_is_weyl_invariant(label, rank, hw, m):
    rs, chV, power = _tensor_power(label, rank, hw, m)
    for mu in power.weights():
        assert s_mu_table(rs, chV, m, mu) == s_mu_table(rs, chV, m, dominant_representative(rs, mu))


@pytest.mark.parametrize('label, rank, hw, m', TENSOR_POWER_CASES)
def test_s_mu_of_dual_module(label, rank, hw, m):
    rs, chV, power = _tensor_power(label, rank, hw, m)
    dual = chV.negate()
    for mu in power.weights():
        negative = tuple(-c for c in mu)
        assert s_mu_table(rs, chV, m, mu) == s_mu_table(rs, dual, m, negative)
