import json
from itertools import combinations

import pytest
from conftest import jp_vector, p_vector

from orbitclosure.degen import (
    COMPLETE,
    FAMILY,
    OPEN,
    ORBIT,
    POINT,
    BoundaryEnumerator,
    build_poset,
    check_chi_bounds,
    curve_limit,
    curve_specs,
    enumerate_boundary,
    euler_characteristic,
    poset_from_json,
    poset_to_dot,
    poset_to_json,
)
from orbitclosure.errors import (
    InconclusiveClassification,
    NotOverBaseField,
    ParseError,
)
from orbitclosure.exactfield import ScalarTower, as_rational
from orbitclosure.grasslimit import ValuedMatrix, limit_point
from orbitclosure.modrep import GrassPoint, Subspace, point_from_rows
from orbitclosure.orbit import orbit_descriptor, orbit_dimension, same_orbit

EXPECTED = {
    "p1xp1": (4, 4, 2),
    "p2": (3, 2, 1),
    "hirzebruch2": (4, 5, 2),
    "singular_blowup": (4, 6, 2),
    "blowup_p1xp1": (5, 6, 3),
}


def kinds(poset):
    return [node.kind for node in poset.nodes]


def maximal_point(module):
    return point_from_rows(
        module,
        [
            p_vector(module, (1, "a*w")),
            p_vector(module, (1, "a*w^2")),
            p_vector(module, (1, "g*w^2")),
        ],
    )


def test_curve_specs_are_primitive_and_ordered():
    specs = curve_specs(2, 2)
    assert [spec.exponents for spec in specs] == [
        (0, 1),
        (1, 0),
        (1, 1),
        (1, 2),
        (2, 1),
    ]
    assert specs[0].coefficients == ("c1", "1")
    assert specs[3].coefficients == ("1", "c2")
    assert specs[0].label() == "(c1, s^-1)"
    assert specs[3].label() == "(s^-1, c2*s^-2)"
    assert specs[0].parameters == ("c1",)
    with pytest.raises(ValueError):
        curve_specs(2, 0)


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_euler_characteristic_and_bounds(posets, name):
    chi, strata, t = EXPECTED[name]
    poset = posets(name)
    report = check_chi_bounds(poset)
    assert euler_characteristic(poset) == chi
    assert report.strata == strata
    assert report.t == t
    assert report.within_t_plus_one
    assert report.within_two_t
    assert report.status == COMPLETE


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_strata_are_distinct_orbits(posets, name):
    poset = posets(name)
    points = [node for node in poset.nodes[1:] if node.kind != FAMILY]
    for first, second in combinations(points, 2):
        if first.representative.dim != second.representative.dim:
            continue
        assert not same_orbit(first.representative, second.representative)


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_open_orbit_lies_above_everything(posets, name):
    poset = posets(name)
    assert poset.nodes[0].kind == OPEN
    assert poset.nodes[0].orbit_dim == 2
    assert all(poset.below(0, j) for j in range(len(poset.nodes)))
    assert [node.label for node in poset.nodes] == [
        f"S{i}" for i in range(len(poset.nodes))
    ]


def test_p1xp1_boundary(posets):
    poset = posets("p1xp1")
    assert kinds(poset) == [OPEN, ORBIT, ORBIT, POINT]
    assert [node.orbit_dim for node in poset.nodes[1:3]] == [1, 1]
    assert poset.below(1, 3) and poset.below(2, 3)
    assert check_chi_bounds(poset).line() == (
        "chi = 4, strata = 4, bounds: chi(boundary)=3 <= t+1=3 OK"
    )


def test_p2_boundary_is_one_line(posets):
    poset = posets("p2")
    assert kinds(poset) == [OPEN, FAMILY]
    family = poset.nodes[1]
    assert family.base == "projective-line"
    assert family.chi == 2
    assert family.special_values == ()


def test_hirzebruch_boundary(posets, hirzebruch2):
    poset = posets("hirzebruch2")
    assert kinds(poset) == [OPEN, ORBIT, FAMILY, POINT, POINT]
    orbit, family = poset.nodes[1], poset.nodes[2]
    assert orbit.orbit_dim == 1
    assert family.base == "affine-line-minus-points"
    assert family.punctures == 1
    assert family.chi == 0
    assert family.special_values == ("1", "oo")

    maximal = [
        j
        for j, node in enumerate(poset.nodes)
        if node.kind == POINT
        and node.representative.space == maximal_point(hirzebruch2.module).space
    ]
    assert len(maximal) == 1
    top = maximal[0]
    other = 7 - top
    assert poset.below(1, top) and poset.below(2, top)
    assert poset.below(2, other)
    assert not poset.below(1, other)
    assert (1, top) in poset.edges and (2, top) in poset.edges


def test_singular_blowup_boundary(posets, problems):
    poset = posets("singular_blowup")
    assert kinds(poset) == [OPEN, ORBIT, FAMILY, POINT, POINT, POINT]
    family = poset.nodes[2]
    assert family.chi == -1
    assert family.punctures == 2
    maximal = maximal_point(problems["singular_blowup"].module).space
    assert any(node.representative.space == maximal for node in poset.nodes[3:])


def test_blowup_of_p1xp1_boundary(posets):
    poset = posets("blowup_p1xp1")
    assert kinds(poset) == [OPEN, ORBIT, ORBIT, FAMILY, POINT, POINT]
    assert poset.nodes[3].chi == 0


def test_fixed_point_has_no_boundary(hirzebruch2):
    descriptor = orbit_descriptor(maximal_point(hirzebruch2.module))
    assert descriptor.m == 0
    assert enumerate_boundary(descriptor) == []
    poset = build_poset(descriptor, [])
    assert euler_characteristic(poset) == 1
    assert check_chi_bounds(poset).status != COMPLETE


def test_enumeration_is_deterministic(problems, posets):
    spec = problems["p1xp1"]
    descriptor = orbit_descriptor(spec.point)
    again = build_poset(descriptor, enumerate_boundary(descriptor, 2, jobs=2))
    assert poset_to_json(again) == poset_to_json(posets("p1xp1"))


@pytest.mark.parametrize("name", ["p1xp1", "hirzebruch2"])
def test_json_round_trip(problems, posets, name):
    poset = posets(name)
    document = json.loads(json.dumps(poset_to_json(poset)))
    assert poset_from_json(document, problems[name].module) == poset


def test_json_errors(problems, posets):
    module = problems["p1xp1"].module
    document = poset_to_json(posets("p1xp1"))
    with pytest.raises(ParseError):
        poset_from_json({"edges": []}, module)

    broken = json.loads(json.dumps(document))
    broken["edges"] = [[0, 3]]
    with pytest.raises(ParseError):
        poset_from_json(broken, module)

    cyclic = json.loads(json.dumps(document))
    cyclic["nodes"][1]["reached_from"] = ["S3"]
    with pytest.raises(InconclusiveClassification):
        poset_from_json(cyclic, module)


def test_dot_output(posets):
    poset = posets("hirzebruch2")
    dot = poset_to_dot(poset)
    assert dot.startswith("digraph degenerations {")
    assert dot.rstrip().endswith("}")
    for i, j in poset.edges:
        assert f"S{i} -> S{j};" in dot


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_curve_limits_leave_the_orbit(problems, name):
    descriptor = orbit_descriptor(problems[name].point)
    tower = ScalarTower(["c1", "c2"])
    for curve in curve_specs(descriptor.m, 2):
        point = curve_limit(descriptor, curve, tower)
        assert orbit_dimension(point) < descriptor.m


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_limit_of_a_constant_family_is_the_point(problems, posets, name):
    module = problems[name].module
    for node in posets(name).nodes:
        point = node.representative
        family = ValuedMatrix(point.rows(), point.tower, ncols=module.dim)
        assert limit_point(family, module) == point


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_degenerations_lower_the_orbit_dimension(posets, name):
    poset = posets(name)
    for i, j in poset.edges:
        source, target = poset.nodes[i], poset.nodes[j]
        if source.kind in (OPEN, ORBIT):
            assert target.orbit_dim < source.orbit_dim


def test_family_critical_values(hirzebruch2):
    module = hirzebruch2.module
    enumerator = BoundaryEnumerator(orbit_descriptor(hirzebruch2.point), 2)
    c = enumerator.tower.gen("c1")

    def point(coeff):
        row = jp_vector(module, (1, "a*w"), (coeff, "b*w"))
        return GrassPoint(module, Subspace.span([row], 10, enumerator.tower))

    assert enumerator._critical(point((c - 1) / (c + 2)), "c1") == [
        as_rational(-2),
        as_rational(0),
        as_rational(1),
    ]
    with pytest.raises(NotOverBaseField):
        enumerator._critical(point(c**2 - 2), "c1")
