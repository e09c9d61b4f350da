"""
Ortak test fixture'ları

İsimli gruplar ve otomorfizma grupları oturum boyunca bir kez kurulur.
"""

import sys
from pathlib import Path

import pytest

PROJECT_ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

from src.automorphisms import automorphism_group
from src.named_groups import make_named, parse_group_spec


@pytest.fixture(scope="session")
def c3():
    return make_named('C3')


@pytest.fixture(scope="session")
def c4():
    return make_named('C4')


@pytest.fixture(scope="session")
def c5():
    return make_named('C5')


@pytest.fixture(scope="session")
def d4():
    return make_named('D4')


@pytest.fixture(scope="session")
def q8():
    return make_named('Q8')


@pytest.fixture(scope="session")
def s3():
    return make_named('S3')


@pytest.fixture(scope="session")
def s4():
    return make_named('S4')


@pytest.fixture(scope="session")
def klein():
    return parse_group_spec('C2xC2')


@pytest.fixture(scope="session")
def aut_c3(c3):
    return automorphism_group(c3)


@pytest.fixture(scope="session")
def aut_d4(d4):
    return automorphism_group(d4)
