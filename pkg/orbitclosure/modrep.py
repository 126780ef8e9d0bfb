"""
The projective cover P = Λe and its submodules.

Vectors of P are lists of scalars over the basis classes of Λ that start at
the top vertex; the trivial path e is always coordinate 0. Points of the
Grassmannian live in JP, i.e. the same coordinates with e dropped.
"""
from dataclasses import dataclass, field
from typing import Any, Iterable, List, Optional, Sequence, Tuple

from .errors import GeneratorNotInRadical
from .exactfield import (
    BASE_TOWER,
    ScalarTower,
    common_tower,
    scalar_to_string,
    tower_of,
)
from .linalg import nullspace, rank, reduce_vector, rref
from .pathalg import Algebra, AlgebraElement, Path

Vector = List[Any]


@dataclass(frozen=True)
class Subspace:
    """A subspace stored as its reduced row echelon basis."""

    rows: Tuple[Tuple[Any, ...], ...]
    pivots: Tuple[int, ...]
    ncols: int
    tower: ScalarTower = BASE_TOWER

    @classmethod
    def span(
        cls,
        vectors: Iterable[Sequence[Any]],
        ncols: int,
        tower: Optional[ScalarTower] = None,
    ) -> "Subspace":
        vectors = [list(v) for v in vectors]
        for vector in vectors:
            if len(vector) != ncols:
                raise ValueError(
                    f"expected vectors of length {ncols}, got {len(vector)}"
                )
        if tower is None:
            tower = tower_of(x for v in vectors for x in v)
        converted = [[tower(x) for x in v] for v in vectors]
        reduced, pivots = rref(converted, ncols, tower.domain)
        return cls(tuple(tuple(row) for row in reduced), pivots, ncols, tower)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def vectors(self) -> List[Vector]:
        return [list(row) for row in self.rows]

    def reduce(self, vector: Sequence[Any]) -> Vector:
        """Remainder of ``vector`` against the echelon basis."""
        if len(vector) != self.ncols:
            raise ValueError(f"expected a vector of length {self.ncols}")
        return reduce_vector([self.tower(x) for x in vector], self.rows, self.pivots)

    def contains(self, vector: Sequence[Any]) -> bool:
        return not any(self.reduce(vector))

    def coerce(self, tower: ScalarTower) -> "Subspace":
        """The same subspace with scalars moved into ``tower``."""
        if tower == self.tower:
            return self
        return Subspace.span(self.rows, self.ncols, tower)

    def __eq__(self, other: object) -> bool:
        # Echelon forms are unique, so rows agree once both share one tower.
        if not isinstance(other, Subspace):
            return NotImplemented
        if (self.ncols, self.pivots) != (other.ncols, other.pivots):
            return False
        if self.tower == other.tower:
            return self.rows == other.rows
        tower = common_tower(self.tower, other.tower)
        return all(
            tower(x) == tower(y)
            for mine, theirs in zip(self.rows, other.rows)
            for x, y in zip(mine, theirs)
        )

    def __hash__(self) -> int:
        entries = tuple(x.as_expr() for row in self.rows for x in row)
        return hash((self.ncols, self.pivots, entries))


class ProjectiveModule:
    """P = Λe for the top vertex e."""

    def __init__(self, algebra: Algebra, vertex: str):
        algebra.quiver.trivial(vertex)
        self.algebra = algebra
        self.vertex = vertex
        self.paths: Tuple[int, ...] = tuple(
            i for i, path in enumerate(algebra.basis) if path.source == vertex
        )
        self._position = {index: pos for pos, index in enumerate(self.paths)}
        # Arrows generate J, and the idempotents split off vertex components.
        self.actions: Tuple[int, ...] = tuple(
            i for i, path in enumerate(algebra.basis) if path.length <= 1
        )
        self.cycles: Tuple[int, ...] = tuple(
            i
            for i in self.paths
            if algebra.basis[i].length >= 1 and algebra.basis[i].target == vertex
        )

    @property
    def dim(self) -> int:
        return len(self.paths)

    @property
    def radical_dim(self) -> int:
        return self.dim - 1

    @property
    def mu(self) -> int:
        return len(self.cycles)

    def path(self, position: int) -> Path:
        return self.algebra.basis[self.paths[position]]

    def labels(self, radical: bool = False) -> List[str]:
        start = 1 if radical else 0
        return [self.path(i).label() for i in range(start, self.dim)]

    def position(self, algebra_index: int) -> int:
        return self._position[algebra_index]

    def zero_vector(self, tower: ScalarTower = BASE_TOWER) -> Vector:
        return [tower.zero] * self.dim

    def vector(
        self, combination: Iterable[Tuple[Any, Path]], tower: ScalarTower = BASE_TOWER
    ) -> Vector:
        """P coordinates of ``sum coeff * path``."""
        result = self.zero_vector(tower)
        for coeff, path in combination:
            if path.source != self.vertex:
                raise ValueError(f"{path.label()} does not start at {self.vertex}")
            for index, value in self.algebra.normal_form(path).items():
                pos = self._position[index]
                result[pos] = result[pos] + tower(coeff) * value
        return result

    def cycle_vector(self, k: int, tower: ScalarTower = BASE_TOWER) -> Vector:
        """P coordinates of the k-th cycle at the top vertex."""
        vector = self.zero_vector(tower)
        vector[self._position[self.cycles[k]]] = tower.one
        return vector

    def left_multiply(self, path_index: int, vector: Sequence[Any]) -> Vector:
        """The left action of the basis class ``path_index`` on a vector of P."""
        zero = vector[0] - vector[0]
        result = [zero] * self.dim
        for j, coeff in enumerate(vector):
            if not coeff:
                continue
            for k, value in self.algebra.product(path_index, self.paths[j]).items():
                pos = self._position[k]
                result[pos] = result[pos] + coeff * value
        return result

    def act(self, element: Sequence[Any], vector: Sequence[Any]) -> Vector:
        """Left action of a vector of P read as an element of Λ."""
        zero = vector[0] - vector[0]
        result = [zero] * self.dim
        for i, coeff in enumerate(element):
            if not coeff:
                continue
            image = self.left_multiply(self.paths[i], vector)
            result = [r + coeff * x for r, x in zip(result, image)]
        return result

    def right_multiply(self, vector: Sequence[Any], unit: AlgebraElement) -> Vector:
        """``vector * unit`` for ``unit`` in eΛe."""
        check_corner(self, unit)
        zero = vector[0] - vector[0]
        result = [zero] * self.dim
        for j, coeff in enumerate(vector):
            if not coeff:
                continue
            for k, u in enumerate(unit.coefficients):
                if not u:
                    continue
                for target, value in self.algebra.product(self.paths[j], k).items():
                    pos = self._position[target]
                    result[pos] = result[pos] + coeff * u * value
        return result

    def lift(self, radical_vector: Sequence[Any]) -> Vector:
        """JP coordinates to P coordinates."""
        if len(radical_vector) != self.radical_dim:
            raise ValueError(f"expected a vector of length {self.radical_dim}")
        zero = radical_vector[0] - radical_vector[0] if radical_vector else 0
        return [zero] + list(radical_vector)

    def drop(self, vector: Sequence[Any]) -> Vector:
        """P coordinates of an element of JP to JP coordinates."""
        if vector[0]:
            raise GeneratorNotInRadical(
                f"{format_vector(self, vector)} has a component on e{self.vertex}"
            )
        return list(vector[1:])

    def __repr__(self) -> str:
        return f"ProjectiveModule(vertex={self.vertex!r}, dim={self.dim})"


@dataclass(frozen=True)
class GrassPoint:
    """A Λ-submodule C of JP, stored in JP coordinates."""

    module: ProjectiveModule = field(compare=False, repr=False)
    space: Subspace

    @property
    def tower(self) -> ScalarTower:
        return self.space.tower

    @property
    def dim(self) -> int:
        return self.space.dim

    def rows(self) -> List[Vector]:
        """Echelon rows lifted to P coordinates."""
        return [self.module.lift(row) for row in self.space.rows]

    def coerce(self, tower: ScalarTower) -> "GrassPoint":
        return GrassPoint(self.module, self.space.coerce(tower))

    def __str__(self) -> str:
        return format_point(self)


def projective_cover(algebra: Algebra, vertex: str) -> ProjectiveModule:
    return ProjectiveModule(algebra, vertex)


def check_corner(module: ProjectiveModule, element: AlgebraElement) -> None:
    """
    Raise ValueError unless ``element`` lies in eΛe.

    Raises:
        ValueError: If some basis class in the support does not start and
            end at the top vertex.
    """
    for index in element.support():
        path = module.algebra.basis[index]
        if path.source != module.vertex or path.target != module.vertex:
            raise ValueError(
                f"{path.label()} is not in e{module.vertex}Λe{module.vertex}"
            )


def lambda_closure(
    module: ProjectiveModule,
    generators: Iterable[Sequence[Any]],
    tower: Optional[ScalarTower] = None,
) -> Subspace:
    """
    Smallest Λ-stable subspace of P containing ``generators``.

    Saturates under left multiplication by arrows and vertex idempotents
    until the dimension stops growing.
    """
    generators = [list(g) for g in generators]
    space = Subspace.span(generators, module.dim, tower)
    while True:
        images = [
            module.left_multiply(index, row)
            for row in space.vectors()
            for index in module.actions
        ]
        grown = Subspace.span(space.vectors() + images, module.dim, space.tower)
        if grown.dim == space.dim:
            return grown
        space = grown


def is_stable(module: ProjectiveModule, space: Subspace) -> bool:
    """Whether a subspace of P is closed under every arrow."""
    return all(
        space.contains(module.left_multiply(index, row))
        for row in space.vectors()
        for index in module.actions
    )


def radical_point(module: ProjectiveModule, space: Subspace) -> GrassPoint:
    """
    View a Λ-stable subspace of P as a point of the Grassmannian of JP.

    Raises:
        GeneratorNotInRadical: If the subspace has a component on e.
    """
    if space.ncols != module.dim:
        raise ValueError(f"expected a subspace of P (dimension {module.dim})")
    if space.pivots and space.pivots[0] == 0:
        raise GeneratorNotInRadical(
            f"{format_vector(module, space.rows[0])} is not in the radical JP"
        )
    rows = tuple(tuple(row[1:]) for row in space.rows)
    pivots = tuple(p - 1 for p in space.pivots)
    return GrassPoint(module, Subspace(rows, pivots, module.radical_dim, space.tower))


def submodule_point(
    module: ProjectiveModule,
    generators: Iterable[Sequence[Any]],
    tower: Optional[ScalarTower] = None,
) -> GrassPoint:
    """The point ΛX for generators X given in P coordinates."""
    return radical_point(module, lambda_closure(module, generators, tower))


def point_from_rows(
    module: ProjectiveModule,
    rows: Iterable[Sequence[Any]],
    tower: Optional[ScalarTower] = None,
) -> GrassPoint:
    """The span of P vectors that already form a submodule of JP."""
    space = Subspace.span(rows, module.dim, tower)
    return radical_point(module, space)


def right_multiply_rows(
    point: GrassPoint, unit: AlgebraElement
) -> Tuple[List[Vector], ScalarTower]:
    """
    The unreduced images ``c * unit`` of the echelon rows of ``point``.

    Returns the images together with the tower they live in, which holds
    the scalars of both ``point`` and ``unit``.
    """
    tower = common_tower(point.tower, tower_of(unit.coefficients))
    moved = point.coerce(tower)
    unit = AlgebraElement(unit.algebra, tuple(tower(x) for x in unit.coefficients))
    return [moved.module.right_multiply(row, unit) for row in moved.rows()], tower


def right_multiply(point: GrassPoint, unit: AlgebraElement) -> GrassPoint:
    """
    The translate ``C * u`` for u in eΛe.

    Raises:
        ValueError: If ``unit`` is not in eΛe.
    """
    check_corner(point.module, unit)
    images, tower = right_multiply_rows(point, unit)
    return point_from_rows(point.module, images, tower)


def _cycle_images(point: GrassPoint) -> List[List[Vector]]:
    """For every cycle ω_k, the remainders of ``c * ω_k`` modulo C in JP."""
    module = point.module
    tower = point.tower
    images = []
    for k in range(module.mu):
        cycle = module.algebra.basis_element(module.cycles[k], tower.one)
        remainders = [
            point.space.reduce(module.drop(module.right_multiply(row, cycle)))
            for row in point.rows()
        ]
        images.append(remainders)
    return images


def stab(point: GrassPoint) -> Subspace:
    """
    Stab_{eJe}(C) in the coordinates of the cycles at the top vertex.

    Solves ``sum_k y_k (c * ω_k) ∈ C`` for every echelon row c of C.
    """
    module = point.module
    tower = point.tower
    images = _cycle_images(point)
    equations = []
    for r in range(point.dim):
        for j in range(module.radical_dim):
            equations.append([images[k][r][j] for k in range(module.mu)])
    equations = [eq for eq in equations if any(eq)]
    kernel = nullspace(equations, module.mu, tower.domain)
    return Subspace.span(kernel, module.mu, tower)


def _quotient_cycles(point: GrassPoint) -> List[Vector]:
    module = point.module
    return [
        point.space.reduce(module.drop(module.cycle_vector(k, point.tower)))
        for k in range(module.mu)
    ]


def hom_dim_from_P(point: GrassPoint) -> int:
    """dim Hom(P, JP/C) = dim e(JP/C)."""
    images = _quotient_cycles(point)
    return rank(images, point.module.radical_dim, point.tower.domain)


def hom_dim_from_PmodC(point: GrassPoint) -> int:
    """dim Hom(P/C, JP/C): classes x in e(JP/C) with C * x = 0."""
    module = point.module
    tower = point.tower
    cycles = [module.cycle_vector(k, tower) for k in range(module.mu)]
    equations = []
    for row in point.rows():
        products = [
            point.space.reduce(module.drop(module.act(row, cycle))) for cycle in cycles
        ]
        for j in range(module.radical_dim):
            equations.append([products[k][j] for k in range(module.mu)])
    equations = [eq for eq in equations if any(eq)]
    solutions = nullspace(equations, module.mu, tower.domain)

    quotient = _quotient_cycles(point)
    classes = []
    for y in solutions:
        combined = [tower.zero] * module.radical_dim
        for coeff, image in zip(y, quotient):
            if coeff:
                combined = [a + coeff * b for a, b in zip(combined, image)]
        classes.append(combined)
    return rank(classes, module.radical_dim, tower.domain)


def minimal_generators(point: GrassPoint) -> List[Vector]:
    """Echelon rows of C that survive in C/JC, in P coordinates."""
    module = point.module
    rows = point.rows()
    radical_images = [
        module.left_multiply(index, row)
        for row in rows
        for index in module.actions
        if module.algebra.basis[index].length == 1
    ]
    chosen: List[Vector] = []
    span = Subspace.span(radical_images, module.dim, point.tower)
    for row in rows:
        if not span.contains(row):
            chosen.append(row)
            span = Subspace.span(span.vectors() + [row], module.dim, point.tower)
    return chosen


def _coefficient_text(coeff: Any) -> str:
    text = scalar_to_string(coeff)
    if any(op in text.lstrip("-") for op in "+-/ "):
        return f"({text})"
    return text


def format_vector(module: ProjectiveModule, vector: Sequence[Any]) -> str:
    """Readable form such as ``a*w + b*w``."""
    terms = []
    for position, coeff in enumerate(vector):
        if not coeff:
            continue
        label = module.path(position).label()
        if coeff == 1:
            terms.append(label)
        elif coeff == -1:
            terms.append(f"-{label}")
        else:
            terms.append(f"{_coefficient_text(coeff)}*{label}")
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")


def format_point(point: GrassPoint) -> str:
    """The point as a sum of cyclic submodules ``L(x)``."""
    generators = minimal_generators(point)
    if not generators:
        return "0"
    return " + ".join(
        f"L({format_vector(point.module, row)})" for row in generators
    )
