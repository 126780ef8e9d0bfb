from itertools import product

import pytest

from orbitclosure.errors import NotAdmissible, ParseError
from orbitclosure.pathalg import Arrow, Quiver, Relation, build_algebra, cycle_basis_at


def loop_quiver():
    return Quiver(
        ["1", "2", "3"],
        [
            Arrow("w", "1", "1"),
            Arrow("a", "1", "2"),
            Arrow("b", "1", "2"),
            Arrow("g", "1", "3"),
        ],
    )


def hirzebruch_algebra():
    quiver = loop_quiver()
    relations = [
        Relation(((1, quiver.path(["w", "w", "w"])),)),
        Relation(((1, quiver.path(["b", "w", "w"])),)),
    ]
    return build_algebra(quiver, relations)


def test_path_basis_and_labels():
    algebra = hirzebruch_algebra()
    labels = [path.label() for path in algebra.basis]
    assert labels == [
        "e1",
        "e2",
        "e3",
        "w",
        "a",
        "b",
        "g",
        "w^2",
        "a*w",
        "b*w",
        "g*w",
        "a*w^2",
        "g*w^2",
    ]
    assert algebra.dim == 13
    assert algebra.nilpotency == 4


def test_zero_paths_reduce_to_nothing():
    algebra = hirzebruch_algebra()
    quiver = algebra.quiver
    assert algebra.normal_form(quiver.path(["w", "w", "w"])) == {}
    assert algebra.normal_form(quiver.path(["b", "w", "w"])) == {}
    assert algebra.normal_form(quiver.path(["a", "w", "w", "w"])) == {}


def test_product_follows_right_to_left_composition():
    algebra = hirzebruch_algebra()
    quiver = algebra.quiver
    a = algebra.element([(1, quiver.path(["a"]))])
    w = algebra.element([(1, quiver.path(["w"]))])
    aw = algebra.element([(1, quiver.path(["a", "w"]))])
    assert a * w == aw
    assert not any((w * a).coefficients)


def test_commutativity_relation_identifies_paths():
    quiver = Quiver(
        ["1", "2"],
        [Arrow("u", "1", "1"), Arrow("v", "1", "1"), Arrow("x", "1", "2")],
    )
    relations = [
        Relation(((1, quiver.path(["u", "v"])), (-1, quiver.path(["v", "u"])))),
        Relation(((1, quiver.path(["u", "u"])),)),
        Relation(((1, quiver.path(["v", "v"])),)),
        Relation(((1, quiver.path(["x", "u", "v"])),)),
    ]
    algebra = build_algebra(quiver, relations)
    uv = algebra.element([(1, quiver.path(["u", "v"]))])
    vu = algebra.element([(1, quiver.path(["v", "u"]))])
    assert uv == vu
    assert len(cycle_basis_at(algebra, "1")) == 3


def test_short_or_mixed_relations_are_rejected():
    quiver = loop_quiver()
    with pytest.raises(NotAdmissible):
        Relation(((1, quiver.path(["w"])),))
    with pytest.raises(NotAdmissible):
        Relation(((1, quiver.path(["w", "w"])), (1, quiver.path(["w", "w", "w"]))))
    with pytest.raises(NotAdmissible):
        Relation(((1, quiver.path(["a", "w"])), (1, quiver.path(["g", "w"]))))


def test_loop_without_relations_exceeds_cap():
    quiver = Quiver(["1"], [Arrow("w", "1", "1")])
    with pytest.raises(NotAdmissible):
        build_algebra(quiver, [], length_cap=6)


def test_bad_paths_are_parse_errors():
    quiver = loop_quiver()
    with pytest.raises(ParseError):
        quiver.path(["w", "a"])
    with pytest.raises(ParseError):
        quiver.path(["z"])
    with pytest.raises(ParseError):
        Quiver(["1"], [Arrow("w", "1", "9")])


def commutative_algebra():
    quiver = Quiver(
        ["1", "2"],
        [Arrow("u", "1", "1"), Arrow("v", "1", "1"), Arrow("x", "1", "2")],
    )
    relations = [
        Relation(((1, quiver.path(["u", "v"])), (-1, quiver.path(["v", "u"])))),
        Relation(((1, quiver.path(["u", "u"])),)),
        Relation(((1, quiver.path(["v", "v"])),)),
        Relation(((1, quiver.path(["x", "u", "v"])),)),
    ]
    return build_algebra(quiver, relations)


ALGEBRAS = [hirzebruch_algebra, commutative_algebra]


@pytest.mark.parametrize("make", ALGEBRAS)
def test_multiplication_is_associative(make):
    algebra = make()
    basis = [algebra.basis_element(i) for i in range(algebra.dim)]
    for x, y, z in product(basis, repeat=3):
        assert (x * y) * z == x * (y * z)


@pytest.mark.parametrize("make", ALGEBRAS)
def test_sum_of_idempotents_is_the_identity(make):
    algebra = make()
    one = algebra.idempotent(algebra.quiver.vertices[0])
    for vertex in algebra.quiver.vertices[1:]:
        one = one + algebra.idempotent(vertex)
    for i in range(algebra.dim):
        x = algebra.basis_element(i)
        assert one * x == x
        assert x * one == x


@pytest.mark.parametrize("make", ALGEBRAS)
def test_products_respect_path_length(make):
    algebra = make()
    for i, j in product(range(algebra.dim), repeat=2):
        length = algebra.basis[i].length + algebra.basis[j].length
        for k in algebra.product(i, j):
            assert algebra.basis[k].length == length


@pytest.mark.parametrize("make", ALGEBRAS)
def test_relations_and_their_translates_vanish(make):
    algebra = make()
    for relation in algebra.relations:
        assert not algebra.element(relation.terms).support()
        compose = algebra.quiver.compose
        for q in algebra.basis:
            for terms in (
                [(coeff, compose(path, q)) for coeff, path in relation.terms],
                [(coeff, compose(q, path)) for coeff, path in relation.terms],
            ):
                if terms[0][1] is not None:
                    assert not algebra.element(terms).support()
