import pytest

from schmidtcheck.catalog import build_named
from schmidtcheck.lattice import enumerate_subgroups

_CACHE = {}


def load(spec):
    """``(G, L)`` for a spec string, shared across the session."""
    if spec not in _CACHE:
        G = build_named(spec)
        _CACHE[spec] = (G, enumerate_subgroups(G))
    return _CACHE[spec]


def pick(L, pred):
    """First subgroup position (lattice order) satisfying ``pred(i)``."""
    return next(i for i in range(len(L)) if pred(i))


def subs_of_order(L, n):
    return [i for i in range(len(L)) if L.order(i) == n]


@pytest.fixture
def s3():
    return load("symmetric:3")


@pytest.fixture
def s4():
    return load("symmetric:4")


@pytest.fixture
def a4():
    return load("alternating:4")


@pytest.fixture
def d30():
    return load("dihedral:30")


@pytest.fixture
def c6():
    return load("cyclic:6")
