""" Unit tests for oracle.py module """
import fractions

import pytest

from current_chars.charformula import ModuleSpec, graded_char_B_loc
from current_chars.config import Limits
from current_chars.exceptions import ArgumentError, LimitExceeded
from current_chars.lieweights import RootSystem
from current_chars.modules import build_natural_module, build_sl2_module
from current_chars.oracle import (
    MLocModule,
    build_M_loc,
    oracle_graded_char_B_loc,
    verify_commuting_actions,
    verify_weight_space_dimensions,
    verify_weight_space_duality,
)
from current_chars.partitions import Partition, enumerate_partitions


A1 = RootSystem.from_label('A', 1)
A2 = RootSystem.from_label('A', 2)

ORACLE_CASES = [
    (build_sl2_module(1), ModuleSpec(A1, [((1,), 1)]), 4),
    (build_sl2_module(2), ModuleSpec(A1, [((2,), 1)]), 3),
    (build_natural_module(2), ModuleSpec(A2, [((1, 0), 1)]), 3),
    (build_natural_module(2).dual(), ModuleSpec(A2, [((0, 1), 1)]), 3),
]


def test_graded_dimensions():
    module = build_M_loc(build_sl2_module(1), 2)
    assert [4, 4] == module.graded_dimensions()
    assert 8 == module.dimension
    assert [(-2,), (0,), (2,)] == module.weights()
    assert {(2,): 1, (0,): 2, (-2,): 1} == module.weight_dimensions(1)

    module = build_M_loc(build_sl2_module(1), 3)
    assert [8, 16, 16, 8] == module.graded_dimensions()
    assert 16 == len(list(module.basis(1)))


def test_budget():
    with pytest.raises(LimitExceeded):
        build_M_loc(build_sl2_module(1), 6)
    with pytest.raises(LimitExceeded):
        build_M_loc(build_natural_module(2), 5)
    with pytest.raises(LimitExceeded):
        build_M_loc(build_sl2_module(1), 3, Limits(oracle_max_dimension=47))
    with pytest.raises(ArgumentError):
        build_M_loc(build_sl2_module(1), 0)


def test_fixed_words():
    module = build_M_loc(build_sl2_module(1), 2)
    assert {(2,): 1, (-2,): 1} == module.fixed_words(Partition((2,)))
    assert {(2,): 1, (0,): 2, (-2,): 1} == module.fixed_words(Partition((1, 1)))
    assert 0 == module.class_trace(1, (0,), Partition((2,)))
    assert 2 == module.class_trace(1, (0,), Partition((1, 1)))
    assert -1 == module.class_trace(1, (2,), Partition((2,)))


def test_actions():
    module = build_M_loc(build_sl2_module(1), 2)
    one = fractions.Fraction(1)
    lowering = module.V.lowering_actions[0]

    assert {(0, (1, 1), 0): 1} == module.act_generator(lowering, {(0, (0, 1), 0): one})
    assert {(0, (1, 0), 0): 1, (0, (0, 1), 0): 1} == module.act_generator(
        lowering, {(0, (0, 0), 0): one}
    )
    # s_1 swaps the factors and acts by -1 on t_2
    assert {(1, (1, 0), 0): -1} == module.act_transposition(1, {(1, (0, 1), 0): one})


@pytest.mark.parametrize('V, spec, max_m', ORACLE_CASES)
def test_oracle_matches_formula(V, spec, max_m):
    for m in range(1, max_m + 1):
        for gamma in enumerate_partitions(m):
            assert graded_char_B_loc(gamma, spec, m) == oracle_graded_char_B_loc(V, m, gamma)


def test_oracle_gamma_mismatch():
    with pytest.raises(ArgumentError):
        oracle_graded_char_B_loc(build_sl2_module(1), 3, Partition((2,)))


def test_commuting_actions():
    module = build_M_loc(build_natural_module(2), 3)
    report = verify_commuting_actions(module)
    assert report.passed
    assert module.dimension == report.basis_size
    assert 2 * 2 * 2 == report.pairs_checked
    assert report.to_json()['passed']


class SignedTranspositions(MLocModule):
    """ s_a picks up a sign on words whose factor a carries the highest weight vector. """

    def act_transposition(self, a, vector):
        image = super().act_transposition(a, vector)
        return {key: -v if key[1][a - 1] == 0 else v for key, v in image.items()}


def test_commuting_actions_records_failures():
    V = build_sl2_module(1)
    module = SignedTranspositions(V, 2, build_M_loc(V, 2).ring)
    report = verify_commuting_actions(module)
    assert not report.passed
    assert report.failures
    assert all('do not commute' in failure for failure in report.failures)
    assert not report.to_json()['passed']


def test_weight_space_duality():
    report = verify_weight_space_duality(build_sl2_module(1), 3)
    assert report.passed
    assert 4 * 4 == report.checked

    report = verify_weight_space_duality(build_natural_module(2), 2)
    assert report.passed
    assert [] == report.to_json()['mismatches']


def test_weight_space_dimensions():
    for V, m in ((build_sl2_module(1), 3), (build_sl2_module(2), 3), (build_natural_module(2), 3)):
        report = verify_weight_space_dimensions(build_M_loc(V, m))
        assert report.passed, report.mismatches
