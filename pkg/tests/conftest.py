import pytest

from orbitclosure.degen import build_poset, enumerate_boundary
from orbitclosure.orbit import orbit_descriptor
from orbitclosure.problem import bundled_problem

FIXTURES = ["p1xp1", "p2", "hirzebruch2", "singular_blowup", "blowup_p1xp1"]


@pytest.fixture(scope="session")
def problems():
    return {name: bundled_problem(name) for name in FIXTURES}


@pytest.fixture(scope="session")
def hirzebruch2(problems):
    return problems["hirzebruch2"]


@pytest.fixture(scope="session")
def posets(problems):
    """Degeneration posets of the bundled problems, computed once."""
    cache = {}

    def get(name):
        if name not in cache:
            spec = problems[name]
            descriptor = orbit_descriptor(spec.point)
            strata = enumerate_boundary(
                descriptor, max_exponent=spec.option("max_exponent", 2)
            )
            cache[name] = build_poset(descriptor, strata)
        return cache[name]

    return get


def jp_vector(module, *terms):
    """A JP coordinate vector from ``(coefficient, label)`` pairs."""
    labels = module.labels(radical=True)
    vector = [0] * len(labels)
    for coeff, label in terms:
        vector[labels.index(label)] = coeff
    return vector


def p_vector(module, *terms):
    labels = module.labels()
    vector = [0] * len(labels)
    for coeff, label in terms:
        vector[labels.index(label)] = coeff
    return vector
