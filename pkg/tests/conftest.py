import os
import tempfile

# Keep test runs away from the repository's log and cache directories
os.environ.setdefault('TORICSHIFT_LOG_DIR', tempfile.mkdtemp(prefix='toricshift-logs-'))
os.environ.setdefault('TORICSHIFT_CACHE', 'false')

from functools import lru_cache
from pathlib import Path

import pytest

from toric import Fan
from toric.model import ToricModel
from utils.file import load_fan_file

FIXTURES = Path(__file__).resolve().parent.parent / 'fixtures'

ALL_FANS = ['p1', 'p2', 'p3', 'p1xp1', 'f1', 'f2', 'f3', 'local_p2']
SMALL_FANS = ['p1', 'p2', 'p1xp1', 'f1']


def fixture_path(name: str) -> Path:
    return FIXTURES / f'{name}.json'


def load_fan(name: str) -> Fan:
    return Fan.from_dict(load_fan_file(fixture_path(name)).fan_data())


@lru_cache(maxsize=None)
def load_model(name: str) -> ToricModel:
    return ToricModel(load_fan(name))


@pytest.fixture
def p1():
    return load_model('p1')


@pytest.fixture
def p2():
    return load_model('p2')


@pytest.fixture
def f1():
    return load_model('f1')
