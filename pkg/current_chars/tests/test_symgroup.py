""" Unit tests for symgroup.py module """
import math

import pytest

from current_chars.config import Limits, configure
from current_chars.exceptions import ArgumentError, LimitExceeded
from current_chars.partitions import Partition, dim_irrep, enumerate_partitions
from current_chars.symgroup import (
    character_table,
    character_value,
    class_size,
    kostka,
    kronecker,
    project,
    semistandard_tableaux,
    sign_twist,
    young_permutation_character,
    z_lambda,
)


S3_VALUES = (
    (1, 1, 1),
    (-1, 0, 2),
    (1, -1, 1),
)

CHARACTER_VALUES = [
    ((2, 2), (2, 2), 2),
    ((3, 1), (4,), -1),
    ((2, 1, 1), (2, 1, 1), -1),
    ((3, 2), (5,), 0),
    ((3, 2), (2, 2, 1), 1),
    ((4, 2), (1, 1, 1, 1, 1, 1), 9),
]

KRONECKERS = [
    ((2, 1), (2, 1), (3,), 1),
    ((2, 1), (2, 1), (2, 1), 1),
    ((2, 1), (2, 1), (1, 1, 1), 1),
    ((2, 2), (2, 2), (2, 2), 1),
    ((2, 2), (2, 2), (3, 1), 0),
    ((3, 1), (3, 1), (2, 1, 1), 1),
]

KOSTKAS = [
    ((2, 1), (1, 1, 1), 2),
    ((3,), (1, 1, 1), 1),
    ((2, 1), (2, 1), 1),
    ((1, 1, 1), (2, 1), 0),
    ((2, 1), (1, 2), 1),
    ((2, 2), (2, 1, 1), 1),
    ((3, 1), (2, 1, 1), 2),
    ((2, 1, 1), (1, 1, 1, 1), 3),
    ((2, 1), (1, 1, 1, 0), 2),
]


def test_s3_character_table():
    table = character_table(3)
    assert [(3,), (2, 1), (1, 1, 1)] == [p.parts for p in table.labels]
    assert S3_VALUES == table.values
    assert (2, 3, 1) == table.class_sizes


@pytest.mark.parametrize('irrep, cycle_type, value', CHARACTER_VALUES)
def test_character_value(irrep, cycle_type, value):
    assert value == character_value(Partition(irrep), Partition(cycle_type))


def test_character_value_size_mismatch():
    with pytest.raises(ArgumentError):
        character_value(Partition((2,)), Partition((2, 1)))


def test_identity_column_is_dimension():
    table = character_table(6)
    identity = Partition((1,) * 6)
    for irrep in table.labels:
        assert dim_irrep(irrep) == table.value(irrep, identity)


def test_orthogonality():
    for m in range(1, 11):
        character_table(m).check_orthogonality()


def test_centraliser_orders():
    assert 2 == z_lambda(Partition((2, 1)))
    assert 8 == z_lambda(Partition((2, 2)))
    assert 3 == class_size(Partition((2, 2)))
    assert 20 == class_size(Partition((3, 1, 1)))


def test_character_table_limits():
    with pytest.raises(LimitExceeded):
        character_table(4, Limits(max_table_m=3))
    with pytest.raises(ArgumentError):
        character_table(0)


def test_project_regular_representation():
    table = character_table(4)
    traces = [math.factorial(4) if cls.parts == (1, 1, 1, 1) else 0 for cls in table.labels]
    for irrep in table.labels:
        assert dim_irrep(irrep) == project(table, irrep, traces)


@pytest.mark.parametrize('tau, sigma, gamma, coefficient', KRONECKERS)
def test_kronecker(tau, sigma, gamma, coefficient):
    assert coefficient == kronecker(Partition(tau), Partition(sigma), Partition(gamma))


def test_kronecker_size_mismatch():
    with pytest.raises(ArgumentError):
        kronecker(Partition((2,)), Partition((2,)), Partition((2, 1)))


def test_kronecker_respects_a_lowered_limit():
    tau = Partition((2, 1, 1))
    assert 1 == kronecker(tau, tau, Partition((4,)))
    configure(Limits(max_table_m=3))
    with pytest.raises(LimitExceeded):
        kronecker(tau, tau, Partition((4,)))


def test_kronecker_trivial_and_sign():
    for m in range(1, 6):
        trivial, sign = Partition((m,)), Partition((1,) * m)
        for tau in enumerate_partitions(m):
            for gamma in enumerate_partitions(m):
                assert (1 if gamma == tau else 0) == kronecker(trivial, tau, gamma)
                assert (1 if gamma == sign_twist(tau) else 0) == kronecker(sign, tau, gamma)


def test_kronecker_conjugation_and_symmetry():
    for m in range(1, 7):
        partitions = enumerate_partitions(m)
        for tau in partitions:
            for sigma in partitions:
                dimension_sum = 0
                for gamma in partitions:
                    c = kronecker(tau, sigma, gamma)
                    assert c == kronecker(tau, sigma.conjugate(), gamma.conjugate())
                    assert c == kronecker(sigma, tau, gamma)
                    assert c == kronecker(tau, gamma, sigma)
                    assert c == kronecker(gamma, sigma, tau)
                    dimension_sum += c * dim_irrep(gamma)
                assert dim_irrep(tau) * dim_irrep(sigma) == dimension_sum


@pytest.mark.parametrize('shape, content, number', KOSTKAS)
def test_kostka(shape, content, number):
    assert number == kostka(Partition(shape), content)


def test_kostka_content_mismatch():
    with pytest.raises(ArgumentError):
        kostka(Partition((2, 1)), (1, 1))
    with pytest.raises(ArgumentError):
        kostka(Partition((2, 1)), (4, -1))


def test_semistandard_tableaux():
    tableaux = set(semistandard_tableaux(Partition((2, 1)), (1, 1, 1)))
    assert {((1, 2), (3,)), ((1, 3), (2,))} == tableaux


def test_kostka_diagonal_and_dominance():
    for m in range(1, 7):
        for tau in enumerate_partitions(m):
            assert 1 == kostka(tau, tau.parts)
            assert dim_irrep(tau) == kostka(tau, (1,) * m)


def test_youngs_rule():
    for m in range(1, 6):
        table = character_table(m)
        for content in table.labels:
            traces = [young_permutation_character(content.parts, cls) for cls in table.labels]
            for tau in table.labels:
                assert kostka(tau, content.parts) == project(table, tau, traces)


def test_young_permutation_character():
    # Ind from S_2 x S_1 to S_3 is the permutation action on 3 points
    assert 3 == young_permutation_character((2, 1), Partition((1, 1, 1)))
    assert 1 == young_permutation_character((2, 1), Partition((2, 1)))
    assert 0 == young_permutation_character((2, 1), Partition((3,)))
