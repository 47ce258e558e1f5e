import os

import pytest

import current_chars.config as config
from current_chars.config import ENV_PREFIX, Limits


@pytest.fixture(autouse=True)
def default_limits(monkeypatch):
    """ Every test starts from the default limits, whatever the environment says. """
    for key in list(os.environ):
        if key.startswith(ENV_PREFIX):
            monkeypatch.delenv(key)
    monkeypatch.setattr(config, '_active_limits', Limits())
