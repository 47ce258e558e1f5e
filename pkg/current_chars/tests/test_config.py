""" Unit tests for config.py module """
import json

import pytest

import current_chars.config as config
from current_chars.config import Limits, configure, current_limits, load_limits
from current_chars.exceptions import ArgumentError


def test_defaults():
    limits = Limits()
    assert 12 == limits.max_table_m
    assert 5 == limits.oracle_max_m
    assert 20000 == limits.oracle_max_dimension


def test_from_config():
    limits = Limits.from_config({'oracle_max_m': 4})
    assert Limits(oracle_max_m=4) == limits

    base = Limits(max_table_m=8)
    assert Limits(max_table_m=8, oracle_max_dimension=100) == Limits.from_config(
        {'oracle_max_dimension': 100}, base
    )


@pytest.mark.parametrize('document', [
    {'oracle_max_size': 4},
    {'oracle_max_m': 0},
    {'max_table_m': '12'},
    {'oracle_max_dimension': True},
])
def test_invalid_config(document):
    with pytest.raises(ArgumentError):
        Limits.from_config(document)


def test_from_env():
    environ = {
        'CURRENT_CHARS_ORACLE_MAX_M': '4',
        'CURRENT_CHARS_UNRELATED': 'x',
        'PATH': '/usr/bin',
    }
    assert Limits(oracle_max_m=4) == Limits.from_env(environ=environ)
    with pytest.raises(ArgumentError):
        Limits.from_env(environ={'CURRENT_CHARS_MAX_TABLE_M': 'many'})
    with pytest.raises(ArgumentError):
        Limits.from_env(environ={'CURRENT_CHARS_MAX_TABLE_M': '-3'})


def test_load_limits(tmp_path):
    path = tmp_path / 'limits.json'
    path.write_text(json.dumps({'max_table_m': 9, 'oracle_max_m': 3}))

    assert Limits(max_table_m=9, oracle_max_m=3) == load_limits(path, environ={})
    # the environment wins over the file
    environ = {'CURRENT_CHARS_ORACLE_MAX_M': '2'}
    assert Limits(max_table_m=9, oracle_max_m=2) == load_limits(path, environ=environ)
    assert Limits() == load_limits(environ={})


def test_load_limits_errors(tmp_path):
    with pytest.raises(ArgumentError):
        load_limits(tmp_path / 'missing.json', environ={})

    path = tmp_path / 'broken.json'
    path.write_text('{"max_table_m": ')
    with pytest.raises(ArgumentError):
        load_limits(path, environ={})


def test_configure():
    configure(Limits(max_table_m=3))
    assert Limits(max_table_m=3) == current_limits()


def test_current_limits_reads_environment(monkeypatch):
    monkeypatch.setattr(config, '_active_limits', None)
    monkeypatch.setenv('CURRENT_CHARS_MAX_TABLE_M', '7')
    assert 7 == current_limits().max_table_m
