import os

import pytest

from coxeter import group_from_name, symmetric_group
from renner import load_system, rook_system

SYSTEMS_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'systems')


@pytest.fixture(scope='session')
def s3():
    return symmetric_group(3)


@pytest.fixture(scope='session')
def s4():
    return symmetric_group(4)


@pytest.fixture(scope='session')
def b2():
    return group_from_name('B2')


@pytest.fixture(scope='session')
def rook2():
    return rook_system(2)


@pytest.fixture(scope='session')
def rook3():
    return rook_system(3)


@pytest.fixture(scope='session')
def rook3_trailing():
    return rook_system(3, orientation='trailing')


@pytest.fixture(scope='session')
def rook4():
    return rook_system(4)


@pytest.fixture(scope='session')
def a1xa1_system():
    return load_system(os.path.join(SYSTEMS_DIR, 'a1xa1.txt'))


@pytest.fixture(scope='session')
def rook3_table():
    return load_system(os.path.join(SYSTEMS_DIR, 'rook3.txt'))
