""" Size limits and oracle budgets. """
import json
import logging
import os
import pathlib
import typing

import attr

from current_chars.exceptions import ArgumentError


logger = logging.getLogger(__name__)


ENV_PREFIX = 'CURRENT_CHARS_'


def _positive_int(instance, attribute, value):
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ArgumentError(
            f'Limit {attribute.name} must be a positive integer, got: {value!r}'
        )


@attr.s(frozen=True, slots=True)
class Limits:
    """
    Size limits shared by the character-table builder and the oracle.

    Attributes:
        max_table_m:
            Largest m for which a character table of S_m is built.
        oracle_max_m:
            Largest m for which the coinvariant ring is constructed.
        oracle_max_dimension:
            Largest total dimension dim(V)^m * m! of an explicit M_loc.
    """
    max_table_m = attr.ib(default=12, validator=_positive_int)
    oracle_max_m = attr.ib(default=5, validator=_positive_int)
    oracle_max_dimension = attr.ib(default=20000, validator=_positive_int)

    @classmethod
    def from_config(cls, config: dict, base: typing.Optional['Limits']=None):
        """
        Create `Limits` from config; missing keys keep the values of `base`.

        Config Example:
            config = {
                "max_table_m": 12,              # S_m character tables, optional
                "oracle_max_m": 5,              # coinvariant ring size, optional
                "oracle_max_dimension": 20000   # dim(V)^m * m!, optional
            }

        Raises:
            ArgumentError
        """
        base = base if base is not None else cls()
        known = {field.name for field in attr.fields(cls)}
        unknown = sorted(set(config) - known)
        if unknown:
            raise ArgumentError(
                f'Unknown limits in config: {unknown}. Known limits: {sorted(known)}'
            )
        return attr.evolve(base, **config)

    @classmethod
    def from_env(cls, base: typing.Optional['Limits']=None, environ=None):
        """
        Override limits from `CURRENT_CHARS_<LIMIT NAME>` environment
        variables, e.g. `CURRENT_CHARS_ORACLE_MAX_DIMENSION=50000`.

        Raises:
            ArgumentError
        """
        base = base if base is not None else cls()
        environ = os.environ if environ is None else environ
        overrides = {}

        for field in attr.fields(cls):
            key = ENV_PREFIX + field.name.upper()
            if key not in environ:
                continue
            try:
                overrides[field.name] = int(environ[key])
            except ValueError:
                raise ArgumentError(
                    f'Environment variable {key} must be an integer, '
                    f'got: {environ[key]!r}'
                )
            logger.debug(f'Limit {field.name} overridden from environment: {overrides[field.name]}')

        return attr.evolve(base, **overrides)


def load_limits(config_path: typing.Optional[pathlib.Path]=None, environ=None) -> Limits:
    """
    Load limits: defaults, then the JSON config file if given, then the
    environment.

    Raises:
        ArgumentError
    """
    limits = Limits()

    if config_path is not None:
        logger.info(f'Loading limits config: {config_path}')
        try:
            with open(config_path, 'r') as read_file:
                config = json.load(read_file)
        except (OSError, ValueError) as error:
            raise ArgumentError(
                f'Limits config was not loaded: {config_path}. Exception '
                f'occurred ({error.__class__.__name__}): {error}'
            )
        limits = Limits.from_config(config, limits)

    return Limits.from_env(limits, environ)


_active_limits: typing.Optional[Limits] = None


def configure(limits: Limits):
    """ Set the process-wide limits used when no explicit limits are passed. """
    global _active_limits
    _active_limits = limits


def current_limits() -> Limits:
    global _active_limits
    if _active_limits is None:
        _active_limits = load_limits()
    return _active_limits
