"""
Limits of one-parameter families of subspaces.

A family is a matrix over the tower whose rows span the subspace for generic
values of a distinguished symbol. Its limit at ``symbol = 0`` is computed by
saturating the rows over the valuation ring and reducing, and independently
through normalised Plücker coordinates.
"""
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Any, List, Optional, Sequence, Tuple

from .errors import LimitNotStable, RankDeficient
from .exactfield import (
    CURVE_SYMBOL,
    ScalarTower,
    is_zero,
    ord_s,
    specialize,
    tower_of,
)
from .linalg import det, rank
from .modrep import (
    GrassPoint,
    ProjectiveModule,
    Subspace,
    is_stable,
    radical_point,
)

Matrix = List[List[Any]]


class ValuedMatrix:
    """Rows over the tower together with the symbol whose valuation is used."""

    def __init__(
        self,
        rows: Sequence[Sequence[Any]],
        tower: Optional[ScalarTower] = None,
        symbol: str = CURVE_SYMBOL,
        ncols: Optional[int] = None,
    ):
        rows = [list(row) for row in rows]
        if tower is None:
            tower = tower_of(x for row in rows for x in row)
        if symbol not in tower.names:
            raise ValueError(f"{symbol!r} is not a symbol of {tower!r}")
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for an empty family")
            ncols = len(rows[0])
        for row in rows:
            if len(row) != ncols:
                raise ValueError(f"expected rows of length {ncols}, got {len(row)}")

        self.tower = tower
        self.symbol = symbol
        self.ncols = ncols
        self.rows: Matrix = [[tower(x) for x in row] for row in rows]

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def order(self, x: Any) -> float:
        return ord_s(x, self.symbol)

    def rank(self) -> int:
        return rank(self.rows, self.ncols, self.tower.domain)

    def __repr__(self) -> str:
        return (
            f"ValuedMatrix({self.nrows}x{self.ncols}, symbol={self.symbol!r}, "
            f"{self.tower!r})"
        )


@dataclass(frozen=True)
class PluckerVector:
    """All maximal minors in lexicographic column order, first nonzero = 1."""

    coordinates: Tuple[Any, ...]
    ncols: int
    dim: int

    def index_sets(self) -> List[Tuple[int, ...]]:
        return list(combinations(range(self.ncols), self.dim))


def dvr_saturate(family: ValuedMatrix) -> Tuple[Matrix, Matrix]:
    """
    Saturate the rows of ``family`` over the valuation ring.

    Repeatedly pick, among the rows not yet handled, the nonzero entry of
    least order (ties: smallest row, then smallest column), scale its row so
    that the entry becomes a unit and clear that column from the other
    unhandled rows. Handled rows keep nonnegative order, and their reduction
    at ``symbol = 0`` is of full rank.

    Returns:
        ``(Y, B)`` with ``B = Y * V``.

    Raises:
        RankDeficient: If the rows are linearly dependent.
    """
    tower = family.tower
    gen = tower.gen(family.symbol)
    size = family.nrows
    saturated = [list(row) for row in family.rows]
    transform = [
        [tower.one if i == j else tower.zero for j in range(size)] for i in range(size)
    ]

    remaining = list(range(size))
    while remaining:
        best: Optional[Tuple[Any, int, int]] = None
        for i in remaining:
            for j, entry in enumerate(saturated[i]):
                if is_zero(entry):
                    continue
                key = (family.order(entry), i, j)
                if best is None or key < best:
                    best = key
        if best is None:
            raise RankDeficient(
                f"family of {size} rows has rank {family.rank()} "
                "over the fraction field"
            )

        order, row, col = best
        scale = gen ** (-int(order))
        saturated[row] = [x * scale for x in saturated[row]]
        transform[row] = [x * scale for x in transform[row]]
        pivot = saturated[row][col]
        remaining.remove(row)

        for other in remaining:
            entry = saturated[other][col]
            if is_zero(entry):
                continue
            factor = entry / pivot
            saturated[other] = [
                x - factor * y for x, y in zip(saturated[other], saturated[row])
            ]
            transform[other] = [
                x - factor * y for x, y in zip(transform[other], transform[row])
            ]
            if not any(saturated[other]):
                raise RankDeficient(
                    f"row {other} of the family is dependent on the others"
                )

    return transform, saturated


def limit_space(family: ValuedMatrix) -> Subspace:
    """The limit of the row space at ``symbol = 0``, in the family's coordinates."""
    _, saturated = dvr_saturate(family)
    special = [[specialize(x, family.symbol, 0) for x in row] for row in saturated]
    space = Subspace.span(special, family.ncols, family.tower)
    if space.dim != family.nrows:
        raise RankDeficient(
            f"special fibre has rank {space.dim}, expected {family.nrows}"
        )
    return space


def _as_point(space: Subspace, module: ProjectiveModule) -> GrassPoint:
    if space.ncols == module.dim:
        if not is_stable(module, space):
            raise LimitNotStable("limit is not a submodule of P")
        return radical_point(module, space)
    if space.ncols == module.radical_dim:
        lifted = Subspace.span(
            [module.lift(row) for row in space.rows], module.dim, space.tower
        )
        if not is_stable(module, lifted):
            raise LimitNotStable("limit is not a submodule of JP")
        return GrassPoint(module, space)
    raise ValueError(
        f"family has {space.ncols} columns; P has dimension {module.dim}"
    )


def limit_point(family: ValuedMatrix, module: ProjectiveModule) -> GrassPoint:
    """
    Limit of a family of submodules, as a point of the Grassmannian.

    The family may be given in P coordinates or in JP coordinates.

    Raises:
        RankDeficient: If the family rows are dependent.
        LimitNotStable: If the limit is not Λ-stable.
    """
    return _as_point(limit_space(family), module)


def _minors(rows: Sequence[Sequence[Any]], ncols: int, tower: ScalarTower) -> List[Any]:
    size = len(rows)
    return [
        det([[row[j] for j in cols] for row in rows], tower.domain)
        for cols in combinations(range(ncols), size)
    ]


def plucker(space: Subspace) -> PluckerVector:
    """Normalised Plücker coordinates of a subspace."""
    if space.dim == 0:
        return PluckerVector((space.tower.one,), space.ncols, 0)
    minors = _minors(space.rows, space.ncols, space.tower)
    lead = next(x for x in minors if not is_zero(x))
    return PluckerVector(tuple(x / lead for x in minors), space.ncols, space.dim)


def _permutation_sign(values: List[int]) -> int:
    sign = 1
    values = list(values)
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            if values[i] > values[j]:
                sign = -sign
    return sign


def plucker_to_space(vector: PluckerVector, tower: ScalarTower) -> Subspace:
    """Rebuild a subspace from Plücker coordinates via its first nonzero minor."""
    index_sets = vector.index_sets()
    lookup = dict(zip(index_sets, vector.coordinates))
    first = next(
        (cols for cols, x in zip(index_sets, vector.coordinates) if not is_zero(x)),
        None,
    )
    if first is None:
        raise RankDeficient("all Plücker coordinates vanish")

    pivot_minor = lookup[first]
    rows = []
    for i in range(vector.dim):
        row = []
        for j in range(vector.ncols):
            cols = list(first)
            cols[i] = j
            if len(set(cols)) < vector.dim:
                row.append(tower.zero)
                continue
            sign = _permutation_sign(cols)
            row.append(sign * lookup[tuple(sorted(cols))] / pivot_minor)
        rows.append(row)
    return Subspace.span(rows, vector.ncols, tower)


def plucker_limit_space(family: ValuedMatrix) -> Subspace:
    """The limit computed on the Plücker vector of the family."""
    tower = family.tower
    minors = _minors(family.rows, family.ncols, tower)
    least = min(family.order(x) for x in minors)
    if least == math.inf:
        raise RankDeficient("family rows are dependent")

    scale = tower.gen(family.symbol) ** (-int(least))
    special = tuple(specialize(x * scale, family.symbol, 0) for x in minors)
    vector = PluckerVector(special, family.ncols, family.nrows)
    return plucker_to_space(vector, tower)


def plucker_limit(family: ValuedMatrix, module: ProjectiveModule) -> GrassPoint:
    return _as_point(plucker_limit_space(family), module)


def nested_limit(
    rows: Sequence[Sequence[Any]],
    symbols: Sequence[str],
    module: ProjectiveModule,
    tower: Optional[ScalarTower] = None,
) -> GrassPoint:
    """Iterated limits, taking ``symbols[0]`` to 0 first."""
    current = [list(row) for row in rows]
    ncols = len(current[0]) if current else module.dim
    space: Optional[Subspace] = None
    for symbol in symbols:
        family = ValuedMatrix(current, tower, symbol, ncols)
        space = limit_space(family)
        tower = space.tower
        current = space.vectors()
    if space is None:
        space = Subspace.span(current, ncols, tower)
    return _as_point(space, module)
