import random
from itertools import combinations

import pytest
from conftest import p_vector

from orbitclosure.errors import DimensionMismatch
from orbitclosure.exactfield import ScalarTower
from orbitclosure.modrep import point_from_rows, submodule_point
from orbitclosure.orbit import (
    orbit_descriptor,
    orbit_dimension,
    point_signature,
    psi,
    same_orbit,
    unit_element,
)


@pytest.mark.parametrize(
    "name, m, omega",
    [
        ("p1xp1", 2, ["w1", "w2"]),
        ("p2", 2, ["w1", "w2"]),
        ("hirzebruch2", 2, ["w", "w^2"]),
        ("singular_blowup", 2, ["w", "w^2"]),
        ("blowup_p1xp1", 2, ["w1", "w2"]),
    ],
)
def test_descriptors_of_bundled_points(problems, name, m, omega):
    descriptor = orbit_descriptor(problems[name].point)
    assert descriptor.m == m
    assert descriptor.omega_labels() == omega
    assert descriptor.stab_basis.dim == descriptor.mu - m


def test_psi_moves_within_the_orbit(hirzebruch2):
    descriptor = orbit_descriptor(hirzebruch2.point)
    moved = psi(descriptor, [2, -1])
    assert moved.dim == hirzebruch2.point.dim
    assert same_orbit(hirzebruch2.point, moved)
    assert point_signature(moved) == point_signature(hirzebruch2.point)


def test_psi_with_symbolic_parameters(hirzebruch2):
    descriptor = orbit_descriptor(hirzebruch2.point)
    tower = ScalarTower(["x", "y"])
    moved = psi(descriptor, [tower.gen("x"), tower.gen("y")])
    assert moved.tower == tower
    assert orbit_dimension(moved) == 2


def test_unit_element_has_identity_component(hirzebruch2):
    descriptor = orbit_descriptor(hirzebruch2.point)
    tower = ScalarTower()
    unit = unit_element(descriptor, [3, 5], tower)
    labels = {
        descriptor.module.algebra.basis[i].label(): c
        for i, c in enumerate(unit.coefficients)
        if c
    }
    assert labels == {"e1": 1, "w": 3, "w^2": 5}
    with pytest.raises(ValueError):
        unit_element(descriptor, [1], tower)


def test_points_in_different_orbits(hirzebruch2):
    module = hirzebruch2.module
    maximal = point_from_rows(
        module,
        [
            p_vector(module, (1, "a*w")),
            p_vector(module, (1, "a*w^2")),
            p_vector(module, (1, "g*w^2")),
        ],
    )
    other = point_from_rows(
        module,
        [
            p_vector(module, (1, "b*w")),
            p_vector(module, (1, "a*w^2")),
            p_vector(module, (1, "g*w^2")),
        ],
    )
    assert not same_orbit(maximal, other)
    assert not same_orbit(hirzebruch2.point, maximal)
    assert same_orbit(maximal, maximal)


def test_same_orbit_needs_equal_dimensions(hirzebruch2):
    module = hirzebruch2.module
    small = submodule_point(module, [p_vector(module, (1, "a*w^2"))])
    with pytest.raises(DimensionMismatch):
        same_orbit(hirzebruch2.point, small)


def test_signature_separates_orbits(hirzebruch2):
    module = hirzebruch2.module
    line = point_from_rows(
        module,
        [
            p_vector(module, (1, "a*w"), (1, "b*w")),
            p_vector(module, (1, "a*w^2")),
            p_vector(module, (1, "g*w^2")),
        ],
    )
    maximal = point_from_rows(
        module,
        [
            p_vector(module, (1, "a*w")),
            p_vector(module, (1, "a*w^2")),
            p_vector(module, (1, "g*w^2")),
        ],
    )
    assert point_signature(line) != point_signature(maximal)


@pytest.mark.parametrize("name", ["p1xp1", "hirzebruch2", "singular_blowup"])
def test_same_orbit_is_symmetric(problems, name):
    spec = problems[name]
    module = spec.module
    descriptor = orbit_descriptor(spec.point)
    rng = random.Random(f"symmetry-{name}")
    points = [spec.point]
    points += [
        psi(descriptor, [rng.randint(-3, 3) for _ in range(descriptor.m)])
        for _ in range(3)
    ]
    for _ in range(12):
        vector = [0] + [rng.choice([-1, 0, 0, 1]) for _ in range(module.dim - 1)]
        candidate = submodule_point(module, [vector])
        if candidate.dim == spec.point.dim:
            points.append(candidate)
    for first, second in combinations(points, 2):
        assert same_orbit(first, second) == same_orbit(second, first)
    for moved in points[1:4]:
        assert same_orbit(spec.point, moved) and same_orbit(moved, spec.point)


RATIOS = [(1, 0), (0, 1), (1, 1), (1, 2), (2, 1), (-1, 1), (2, 4)]


def test_line_of_points_has_one_orbit_per_ratio(problems):
    module = problems["p2"].module
    points = {
        ratio: submodule_point(
            module, [p_vector(module, (ratio[0], "a*w1"), (ratio[1], "a*w2"))]
        )
        for ratio in RATIOS
    }
    for (a, b), (c, d) in combinations(RATIOS, 2):
        assert same_orbit(points[(a, b)], points[(c, d)]) == (a * d == b * c)
    for point in points.values():
        assert orbit_dimension(point) == 0
