"""
Exact scalars in the tower Q(c1, ..., cr)(s).

Scalars are sympy ``FracElement`` values of a ``FracField`` whose last
generator is the curve parameter ``s``. This module owns the s-adic
valuation, specialization, substitution, root finding over the rationals
and the canonical string form of a scalar.
"""
import math
import re
from fractions import Fraction
from tokenize import TokenError
from typing import Any, Dict, Iterable, List, Sequence, Tuple, Union

from sympy import Poly, Symbol, factor_list
from sympy.core.sympify import SympifyError
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)
from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, FracField, field
from sympy.polys.rings import PolyElement

from .errors import DenominatorVanishes, NotOverBaseField, ParseError

CURVE_SYMBOL = "s"
SYMBOL_PATTERN = re.compile(r"^[a-zA-Z][a-zA-Z0-9_]*$")
SCALAR_PATTERN = re.compile(r"^[0-9a-zA-Z_+\-*/^() ]+$")

ExactScalar = FracElement
MultiPoly = PolyElement
Rational = QQ.dtype
Order = Union[int, float]

_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def as_rational(value: Any) -> Any:
    """Convert an int, Fraction, rational string or QQ element to QQ."""
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        try:
            frac = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"not a rational number: {value!r}") from e
        return QQ(frac.numerator, frac.denominator)
    return QQ.convert(value)


class ScalarTower:
    """
    The field Q(parameters)(s) with a fixed variable order.

    The variable order is the parameter order followed by ``s``. Towers
    with equal parameter lists share one sympy field, so their scalars
    compare and combine directly.
    """

    def __init__(self, parameters: Sequence[str] = ()):
        names = list(parameters)
        for name in names:
            if not SYMBOL_PATTERN.match(name):
                raise ValueError(f"invalid parameter name: {name!r}")
        if CURVE_SYMBOL in names:
            raise ValueError(f"'{CURVE_SYMBOL}' is reserved for the curve parameter")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate parameter names in {names}")

        self.parameters: Tuple[str, ...] = tuple(names)
        generated = field(names + [CURVE_SYMBOL], QQ)
        self.field: FracField = generated[0]
        self._gens: Dict[str, FracElement] = dict(zip(self.names, generated[1:]))
        self.domain = self.field.to_domain()
        self._locals = {name: Symbol(name) for name in self.names}

    @property
    def names(self) -> Tuple[str, ...]:
        return self.parameters + (CURVE_SYMBOL,)

    @property
    def zero(self) -> ExactScalar:
        return self.field.zero

    @property
    def one(self) -> ExactScalar:
        return self.field.one

    @property
    def s(self) -> ExactScalar:
        return self._gens[CURVE_SYMBOL]

    def gen(self, name: str) -> ExactScalar:
        """The generator called ``name``."""
        try:
            return self._gens[name]
        except KeyError:
            raise ValueError(f"{name!r} is not a symbol of {self!r}") from None

    def __call__(self, value: Any) -> ExactScalar:
        """Bring ``value`` into this tower."""
        if isinstance(value, FracElement):
            if value.field is self.field:
                return value
            return self.coerce(value)
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            value = as_rational(value)
        return self.field(value)

    def coerce(self, x: ExactScalar) -> ExactScalar:
        """Move a scalar of another tower into this one."""
        if x.field is self.field:
            return x
        try:
            return self.field.from_expr(x.as_expr())
        except ValueError as e:
            raise ValueError(
                f"{scalar_to_string(x)} uses symbols outside {self!r}"
            ) from e

    def parse(self, text: str) -> ExactScalar:
        """Parse the canonical scalar grammar into this tower."""
        text = str(text).strip()
        if not text or not SCALAR_PATTERN.match(text):
            raise ParseError(f"invalid scalar: {text!r}")
        try:
            expr = parse_expr(
                text, local_dict=dict(self._locals), transformations=_TRANSFORMATIONS
            )
        except (SyntaxError, TokenError, TypeError, ValueError, SympifyError) as e:
            raise ParseError(f"cannot parse scalar {text!r}: {e}") from e

        unknown = sorted(
            str(sym)
            for sym in getattr(expr, "free_symbols", ())
            if str(sym) not in self._locals
        )
        if unknown:
            raise ParseError(f"unknown symbols {unknown} in scalar {text!r}")
        try:
            return self.field.from_expr(expr)
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"scalar {text!r} is not a rational function") from e

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ScalarTower) and other.parameters == self.parameters

    def __hash__(self) -> int:
        return hash(self.parameters)

    def __repr__(self) -> str:
        params = ",".join(self.parameters)
        if not params:
            return f"ScalarTower(Q({CURVE_SYMBOL}))"
        return f"ScalarTower(Q({params})({CURVE_SYMBOL}))"


BASE_TOWER = ScalarTower()


def common_tower(*towers: ScalarTower) -> ScalarTower:
    """Smallest tower containing all parameters, in first-seen order."""
    names: List[str] = []
    for tower in towers:
        names.extend(name for name in tower.parameters if name not in names)
    return ScalarTower(names)


def tower_of(values: Iterable[Any]) -> ScalarTower:
    """The smallest tower holding every ``FracElement`` among ``values``."""
    towers = []
    seen = set()
    for value in values:
        if isinstance(value, FracElement) and id(value.field) not in seen:
            seen.add(id(value.field))
            names = [str(sym) for sym in value.field.symbols][:-1]
            towers.append(ScalarTower(names))
    return common_tower(*towers) if towers else BASE_TOWER


def _symbol_index(x: ExactScalar, name: str) -> int:
    names = [str(sym) for sym in x.field.symbols]
    try:
        return names.index(name)
    except ValueError:
        raise ValueError(f"{name!r} is not a variable of this scalar") from None


def _multiplicity(poly: MultiPoly, index: int) -> int:
    return min(monom[index] for monom in poly.itermonoms())


def ord_s(x: ExactScalar, symbol: str = CURVE_SYMBOL) -> Order:
    """The valuation of ``x`` at ``symbol = 0``; infinite for zero."""
    if not x.numer:
        return math.inf
    index = _symbol_index(x, symbol)
    return _multiplicity(x.numer, index) - _multiplicity(x.denom, index)


def is_zero(x: ExactScalar) -> bool:
    return not x.numer


def specialize(x: ExactScalar, symbol: str, value: Any) -> ExactScalar:
    """
    Substitute a rational value for one symbol.

    The result stays in the tower of ``x``; the symbol no longer occurs in it.

    Raises:
        DenominatorVanishes: If ``value`` is a pole of ``x``.
    """
    ring = x.field.ring
    gen = ring.gens[_symbol_index(x, symbol)]
    point = ring.domain.convert(as_rational(value))
    numer = x.numer.subs(gen, point)
    denom = x.denom.subs(gen, point)
    if not denom:
        raise DenominatorVanishes(
            f"{symbol} = {value} is a pole of {scalar_to_string(x)}"
        )
    return x.field.new(numer, denom)


def substitute(x: ExactScalar, name: str, replacement: ExactScalar) -> ExactScalar:
    """Replace the symbol ``name`` by another scalar of the same tower."""
    expr = x.as_expr().subs(Symbol(name), replacement.as_expr())
    try:
        return x.field.from_expr(expr)
    except (ValueError, ZeroDivisionError) as e:
        raise DenominatorVanishes(
            f"substituting {name} -> {scalar_to_string(replacement)} "
            f"makes {scalar_to_string(x)} undefined"
        ) from e


def free_symbols(x: ExactScalar) -> Tuple[str, ...]:
    """Names of the variables that actually occur in ``x``."""
    names = [str(sym) for sym in x.field.symbols]
    used = set()
    for poly in (x.numer, x.denom):
        for monom in poly.itermonoms():
            used.update(i for i, exponent in enumerate(monom) if exponent)
    return tuple(names[i] for i in sorted(used))


def to_rational(x: ExactScalar) -> Any:
    """The rational value of a constant scalar."""
    if free_symbols(x):
        raise ValueError(f"{scalar_to_string(x)} is not constant")
    return QQ.convert(x.numer.LC) / QQ.convert(x.denom.LC)


def split_roots(x: ExactScalar, name: str) -> Tuple[List[Any], bool]:
    """
    Rational roots of the numerator of ``x`` as a polynomial in ``name``.

    Returns the sorted distinct roots and a flag that is False when some
    irreducible factor has degree above one, i.e. the numerator does not
    split over the rationals.
    """
    others = [sym for sym in free_symbols(x.field.new(x.numer)) if sym != name]
    if others:
        raise ValueError(f"numerator depends on {others} besides {name}")
    if not x.numer or x.numer.is_ground:
        return [], True

    symbol = Symbol(name)
    _, factors = factor_list(x.numer.as_expr(), symbol)
    roots = set()
    splits = True
    for factor, _ in factors:
        poly = Poly(factor, symbol)
        degree = poly.degree()
        if degree == 1:
            a, b = poly.all_coeffs()
            roots.add(QQ.from_sympy(-b / a))
        elif degree > 1:
            splits = False
    return sorted(roots), splits


def rational_roots(x: ExactScalar, name: str) -> List[Any]:
    """
    Rational roots of the numerator of ``x``.

    Raises:
        NotOverBaseField: If the numerator has an irreducible factor of
            degree above one.
    """
    roots, splits = split_roots(x, name)
    if not splits:
        raise NotOverBaseField(
            f"{scalar_to_string(x)} has roots in {name} outside the rationals"
        )
    return roots


def scalar_to_string(x: ExactScalar) -> str:
    """Canonical text form: integers, /, +, -, *, ^ and parentheses."""
    return str(x).replace("**", "^")
