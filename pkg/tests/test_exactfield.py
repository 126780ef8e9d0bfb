import math
import operator
import random
from fractions import Fraction

import pytest

from orbitclosure.errors import DenominatorVanishes, NotOverBaseField
from orbitclosure.exactfield import (
    BASE_TOWER,
    ScalarTower,
    as_rational,
    common_tower,
    free_symbols,
    is_zero,
    ord_s,
    rational_roots,
    scalar_to_string,
    specialize,
    split_roots,
    substitute,
    to_rational,
    tower_of,
)


def test_ord_s_counts_powers_of_s():
    tower = ScalarTower(["c"])
    s, c = tower.s, tower.gen("c")
    assert ord_s(s**3 * (1 + s)) == 3
    assert ord_s((c + s) / s**2) == -2
    assert ord_s(c * s / (c + s**2)) == 1
    assert ord_s(tower.zero) == math.inf


def test_ord_s_in_other_symbol():
    tower = ScalarTower(["t"])
    t, s = tower.gen("t"), tower.s
    assert ord_s(t**2 / s, "t") == 2
    assert ord_s(t**2 / s) == -1


def test_specialize_substitutes_value():
    tower = ScalarTower(["c"])
    c, s = tower.gen("c"), tower.s
    value = specialize((c + s) / (1 - c), "c", 3)
    assert value == (3 + s) / tower(-2)
    assert free_symbols(value) == ("s",)


def test_specialize_at_pole_raises():
    tower = ScalarTower(["c"])
    c = tower.gen("c")
    with pytest.raises(DenominatorVanishes):
        specialize(1 / (c - 1), "c", 1)


def test_substitute_into_other_scalar():
    tower = ScalarTower(["c", "u"])
    c, u = tower.gen("c"), tower.gen("u")
    assert substitute(c**2 + c, "c", 1 / u) == (1 + u) / u**2


def test_parse_and_string_form():
    tower = ScalarTower(["z1"])
    x = tower.parse("(z1^2 - 1)/(z1 + 1)")
    assert x == tower.gen("z1") - 1
    assert "**" not in scalar_to_string(x * x)
    assert tower.parse(scalar_to_string(x / (x + 2))) == x / (x + 2)


def test_rational_inputs():
    assert as_rational("3/4") == as_rational(Fraction(3, 4))
    assert to_rational(BASE_TOWER("-5/2")) == as_rational("-5/2")
    with pytest.raises(ValueError):
        to_rational(BASE_TOWER.s)


def test_towers_with_same_parameters_compare_equal():
    assert ScalarTower(["a", "b"]) == ScalarTower(["a", "b"])
    assert ScalarTower(["a", "b"]) != ScalarTower(["b", "a"])
    assert common_tower(ScalarTower(["a"]), ScalarTower(["b"])).parameters == (
        "a",
        "b",
    )


def test_tower_of_values():
    tower = ScalarTower(["y3"])
    assert tower_of([1, tower.gen("y3")]) == tower
    assert tower_of([1, 2]) == BASE_TOWER


def test_reserved_and_invalid_names():
    with pytest.raises(ValueError):
        ScalarTower(["s"])
    with pytest.raises(ValueError):
        ScalarTower(["1x"])
    with pytest.raises(ValueError):
        ScalarTower(["c", "c"])


def test_split_roots_sorted_and_distinct():
    tower = ScalarTower(["c"])
    c = tower.gen("c")
    roots, splits = split_roots((c - 1) ** 2 * (2 * c + 1) / (c + 5), "c")
    assert roots == [as_rational("-1/2"), as_rational(1)]
    assert splits


def test_split_roots_reports_irreducible_factor():
    tower = ScalarTower(["c"])
    c = tower.gen("c")
    roots, splits = split_roots(c * (c**2 - 2), "c")
    assert roots == [as_rational(0)]
    assert not splits
    with pytest.raises(NotOverBaseField):
        rational_roots(c**2 + 1, "c")


def test_constant_has_no_roots():
    tower = ScalarTower(["c"])
    assert rational_roots(tower(7), "c") == []


def _unit(rng, tower):
    """A random scalar with valuation 0 that never vanishes at a rational c."""
    c, s = tower.gen("c"), tower.s
    numer = c + rng.randint(1, 5) * s + rng.randint(1, 3)
    return numer / (c**2 + 1 + rng.randint(0, 4) * s)


@pytest.mark.parametrize("seed", range(20))
def test_valuation_is_additive(seed):
    rng = random.Random(seed)
    tower = ScalarTower(["c"])
    x = _unit(rng, tower) * tower.s ** rng.randint(-3, 3)
    y = _unit(rng, tower) * tower.s ** rng.randint(-3, 3)
    assert ord_s(x * y) == ord_s(x) + ord_s(y)
    assert ord_s(x / y) == ord_s(x) - ord_s(y)
    if not is_zero(x + y):
        assert ord_s(x + y) >= min(ord_s(x), ord_s(y))


@pytest.mark.parametrize("seed", range(20))
def test_specialize_commutes_with_arithmetic(seed):
    rng = random.Random(seed)
    tower = ScalarTower(["c"])
    x = _unit(rng, tower) * tower.s ** rng.randint(0, 2)
    y = _unit(rng, tower) + rng.randint(-3, 3) * tower.gen("c")
    value = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    for combine in (operator.add, operator.sub, operator.mul):
        assert specialize(combine(x, y), "c", value) == combine(
            specialize(x, "c", value), specialize(y, "c", value)
        )


@pytest.mark.parametrize("seed", range(20))
def test_exact_arithmetic_agrees_with_floats(seed):
    rng = random.Random(seed)
    tower = ScalarTower(["c"])
    c, s = tower.gen("c"), tower.s
    at = {"c": Fraction(1, 3), "s": Fraction(2, 7)}
    exact, approx = tower.one, 1.0
    for _ in range(6):
        q, r = rng.randint(-4, 4), rng.randint(-4, 4)
        operand = c + q * s + r
        value = float(at["c"]) + q * float(at["s"]) + r
        op = rng.choice("+*/")
        if op == "+":
            exact, approx = exact + operand, approx + value
        elif op == "*":
            exact, approx = exact * operand, approx * value
        else:
            exact, approx = exact / operand, approx / value
    for name, point in at.items():
        exact = specialize(exact, name, point)
    result = to_rational(exact)
    assert float(Fraction(int(result.numerator), int(result.denominator))) == (
        pytest.approx(approx)
    )
