import copy
import json

import pytest
from sympy.polys.domains import QQ

from orbitclosure.errors import GeneratorNotInRadical, NotAdmissible, ParseError
from orbitclosure.problem import (
    FIXTURE_DIR,
    bundled_names,
    bundled_problem,
    load_problem,
    parse_problem,
    resolve_problem,
)


@pytest.fixture
def document():
    with open(FIXTURE_DIR / "ex_5_2.json", "r", encoding="utf-8") as f:
        return json.load(f)


def test_bundled_names():
    assert bundled_names() == ["ex_5_1a", "ex_5_1b", "ex_5_2", "ex_5_3", "ex_5_4"]


def test_parse_hirzebruch(document):
    spec = parse_problem(document)
    assert spec.name == "ex_5_2"
    assert spec.module.dim == 11
    assert spec.point.dim == 3
    assert spec.algebra.dim == 13
    assert spec.option("max_exponent") == 2
    assert spec.option("jobs", 1) == 1


def test_arrows_as_lists(document):
    document["quiver"]["arrows"] = [
        ["w", "1", "1"],
        ["a", "1", "2"],
        ["b", "1", "2"],
        ["g", "1", "3"],
    ]
    assert parse_problem(document).module.dim == 11


def test_top_vertex_generator_is_rejected(document):
    document["C"].append([["1", []]])
    with pytest.raises(GeneratorNotInRadical):
        parse_problem(document)


@pytest.mark.parametrize(
    "change",
    [
        lambda d: d["quiver"]["arrows"].append({"name": "z", "source": "1"}),
        lambda d: d["quiver"]["arrows"].append(["z", "1"]),
        lambda d: d.pop("C"),
        lambda d: d["options"].update(colour="red"),
        lambda d: d["C"].append([["1", ["w", "a"]]]),
        lambda d: d["C"].append([["x+", ["w"]]]),
        lambda d: d.update(top_vertex="7"),
    ],
)
def test_malformed_documents(document, change):
    broken = copy.deepcopy(document)
    change(broken)
    with pytest.raises(ParseError):
        parse_problem(broken)


def test_unbounded_loop_is_not_admissible(document):
    document["relations"] = [[["1", ["b", "w", "w"]]]]
    with pytest.raises(NotAdmissible):
        parse_problem(document, length_cap=8)


def test_load_problem_from_file(tmp_path, document):
    document.pop("name")
    path = tmp_path / "mine.json"
    path.write_text(json.dumps(document))
    assert load_problem(path).name == "mine"
    assert resolve_problem(str(path)).module.dim == 11


def test_load_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ParseError):
        load_problem(bad)
    with pytest.raises(ParseError):
        load_problem(tmp_path / "missing.json")
    with pytest.raises(ParseError):
        bundled_problem("no_such_problem")
    with pytest.raises(ParseError):
        resolve_problem("no_such_problem")


def test_descriptive_aliases_and_file_names():
    for name in ("ex_5_2", "ex_5_2.json", "hirzebruch2"):
        spec = bundled_problem(name)
        assert spec.name == "ex_5_2"
        assert spec.module.dim == 11


QUANTUM_PLANE = {
    "quiver": {"vertices": ["1"], "arrows": [["x", "1", "1"], ["y", "1", "1"]]},
    "relations": [
        [["1", ["x", "x"]]],
        [["1", ["y", "y"]]],
        [["1", ["x", "y"]], ["-1/2", ["y", "x"]]],
    ],
    "top_vertex": "1",
    "C": [[["2", ["x"]]]],
}


def test_fractional_relation_coefficients():
    spec = parse_problem(copy.deepcopy(QUANTUM_PLANE))
    algebra = spec.algebra
    quiver = spec.quiver
    assert [path.label() for path in algebra.basis] == ["e1", "x", "y", "y*x"]
    x = algebra.element([(1, quiver.path(["x"]))])
    y = algebra.element([(1, quiver.path(["y"]))])
    product = x * y
    assert product.support() == [algebra.index(quiver.path(["y", "x"]))]
    assert product.coefficients[3] == QQ(1, 2)
    assert spec.point.dim == 2


def test_malformed_coefficient_is_a_parse_error():
    document = copy.deepcopy(QUANTUM_PLANE)
    document["relations"][2][1][0] = "half"
    with pytest.raises(ParseError):
        parse_problem(document)
