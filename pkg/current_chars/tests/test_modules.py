""" Unit tests for modules.py module """
import fractions

import pytest

from current_chars.charformula import ModuleSpec, natural_module_spec
from current_chars.exceptions import ArgumentError, ConsistencyError
from current_chars.lieweights import RootSystem, irreducible_character
from current_chars.modules import (
    ExplicitModule,
    ModuleFactory,
    build_natural_module,
    build_sl2_module,
    build_trivial_module,
    explicit_module_for,
)


A1 = RootSystem.from_label('A', 1)

FACTORY_MODULES = [
    ('natural', {'rank': 3}, 4),
    ('natural-dual', {'rank': 2}, 3),
    ('sl2', {'highest_weight': 4}, 5),
    ('explicit', {
        'type': 'A',
        'rank': 1,
        'weights': [[1], [-1]],
        'raising': [[[1, 0, 1]]],
        'lowering': [[[0, 1, 1]]],
    }, 2),
]

EXPLICIT_SPECS = [
    (ModuleSpec.from_weights(A1, [(3,)]), 4),
    (ModuleSpec.from_weights(A1, [(1,), (0,), (1,)]), 5),
    (ModuleSpec.from_weights(RootSystem.from_label('A', 2), [(0, 1)]), 3),
    (ModuleSpec.from_weights(RootSystem.from_label('A', 3), [(1, 0, 0), (0, 0, 0)]), 5),
]


def broken_sl2_module() -> ExplicitModule:
    # x^+ is twice too large, so [x^+, x^-] != h
    one = fractions.Fraction(1)
    return ExplicitModule(A1, [(1,), (-1,)], [{1: {0: 2 * one}}], [{0: {1: one}}], name='broken')


def test_natural_module():
    module = build_natural_module(2)
    assert [(1, 0), (-1, 1), (0, -1)] == module.basis_weights
    assert natural_module_spec(2).character() == module.character()
    assert 'natural module of A2' == str(module)
    module.check_relations()


def test_natural_module_action():
    module = build_natural_module(2)
    assert {1: 1} == module.apply(module.lowering_actions[0], {0: 1})
    assert {2: 1} == module.apply(module.lowering_actions[1], {1: 1})
    assert {} == module.apply(module.raising_actions[0], {0: 1})
    assert {0: {0: 1}, 1: {1: -1}} == module.cartan_action(0)


def test_sl2_module():
    for k in range(6):
        module = build_sl2_module(k)
        module.check_relations()
        assert irreducible_character(A1, (k,)) == module.character()
    with pytest.raises(ArgumentError):
        build_sl2_module(-1)


def test_dual_module():
    module = build_natural_module(3).dual()
    module.check_relations()
    assert natural_module_spec(3).dual().character() == module.character()
    assert 'natural module of A3*' == str(module)


def test_direct_sum():
    module = build_sl2_module(1).direct_sum(build_trivial_module(A1)).direct_sum(build_sl2_module(2))
    assert 6 == module.dimension
    module.check_relations()
    with pytest.raises(ArgumentError):
        module.direct_sum(build_natural_module(2))


def test_broken_commutator():
    module = broken_sl2_module()
    with pytest.raises(ConsistencyError):
        module.check_relations()


def test_wrong_weight_shift():
    one = fractions.Fraction(1)
    module = ExplicitModule(A1, [(1,), (-1,)], [{0: {1: one}}], [{}])
    with pytest.raises(ConsistencyError):
        module.check_relations()


def test_invalid_module():
    with pytest.raises(ArgumentError):
        ExplicitModule(A1, [(1,), (-1,)], [{0: {2: 1}}], [{}])
    with pytest.raises(ArgumentError):
        ExplicitModule(A1, [(1,), (-1,)], [], [])
    with pytest.raises(ArgumentError):
        ExplicitModule(A1, [(1, 0)], [{}], [{}])


@pytest.mark.parametrize('kind, config, dimension', FACTORY_MODULES)
def test_module_factory(kind, config, dimension):
    module = ModuleFactory().create_module(kind, config)
    assert dimension == module.dimension
    module.check_relations()


def test_module_factory_errors():
    factory = ModuleFactory()
    with pytest.raises(ArgumentError):
        factory.create_module('adjoint', {'rank': 2})
    with pytest.raises(ArgumentError):
        factory.create_module('sl2', {'rank': 1})
    with pytest.raises(ArgumentError):
        factory.create_module('explicit', {'type': 'A', 'rank': 1, 'weights': [[1], [-1]]})


def test_from_config_fractions():
    module = ExplicitModule.from_config({
        'type': 'A',
        'rank': 1,
        'weights': [[1], [-1]],
        'raising': [[[1, 0, '1/2']]],
        'lowering': [[[0, 1, 2]]],
        'name': 'rescaled V(1)',
    })
    assert 'rescaled V(1)' == str(module)
    module.check_relations()


@pytest.mark.parametrize('spec, dimension', EXPLICIT_SPECS)
def test_explicit_module_for(spec, dimension):
    module = explicit_module_for(spec)
    assert dimension == module.dimension
    assert spec.character() == module.character()
    module.check_relations()


def test_explicit_module_for_unsupported():
    with pytest.raises(ArgumentError):
        explicit_module_for(ModuleSpec.from_weights(RootSystem.from_label('A', 2), [(1, 1)]))
    with pytest.raises(ArgumentError):
        explicit_module_for(ModuleSpec.from_weights(RootSystem.from_label('B', 2), [(1, 0)]))
