"""
Orbits of Aut(P) on submodules of JP.

Automorphisms of P = Λe are right multiplications by units of eΛe, so the
orbit of C is parametrised by ``C * (e + t_1 ω_1 + ... + t_m ω_m)`` where the
ω_i span eJe modulo the stabiliser of C.
"""
from dataclasses import dataclass
from typing import Any, List, Sequence, Tuple

from .errors import DimensionMismatch, FormulaMismatch
from .exactfield import ScalarTower, common_tower, tower_of
from .linalg import nullspace, rank
from .modrep import (
    GrassPoint,
    ProjectiveModule,
    Subspace,
    Vector,
    hom_dim_from_P,
    hom_dim_from_PmodC,
    right_multiply,
    right_multiply_rows,
    stab,
)
from .pathalg import AlgebraElement

Signature = Tuple[int, Tuple[int, ...]]


@dataclass(frozen=True)
class OrbitDescriptor:
    representative: GrassPoint
    stab_basis: Subspace
    omega: Tuple[AlgebraElement, ...]
    omega_indices: Tuple[int, ...]
    m: int
    mu: int

    @property
    def module(self) -> ProjectiveModule:
        return self.representative.module

    def omega_labels(self) -> List[str]:
        algebra = self.module.algebra
        cycles = self.module.cycles
        return [algebra.basis[cycles[k]].label() for k in self.omega_indices]


def orbit_descriptor(point: GrassPoint) -> OrbitDescriptor:
    """
    Stabiliser, complement cycles and orbit dimension of ``point``.

    The complement is chosen greedily among the cycles at the top vertex in
    basis order.

    Raises:
        FormulaMismatch: If μ - dim Stab differs from the Hom-space formula.
    """
    module = point.module
    tower = point.tower
    stabiliser = stab(point)

    chosen: List[int] = []
    span = stabiliser
    for k in range(module.mu):
        unit = [tower.one if i == k else tower.zero for i in range(module.mu)]
        if not span.contains(unit):
            chosen.append(k)
            span = Subspace.span(span.vectors() + [unit], module.mu, tower)

    m = len(chosen)
    by_homs = hom_dim_from_P(point) - hom_dim_from_PmodC(point)
    if m != module.mu - stabiliser.dim or m != by_homs:
        raise FormulaMismatch(
            f"orbit dimension {m} from the stabiliser disagrees with "
            f"{by_homs} from Hom spaces"
        )

    omega = tuple(
        module.algebra.basis_element(module.cycles[k], tower.one) for k in chosen
    )
    return OrbitDescriptor(point, stabiliser, omega, tuple(chosen), m, module.mu)


def orbit_dimension(point: GrassPoint) -> int:
    return point.module.mu - stab(point).dim


def unit_element(
    descriptor: OrbitDescriptor, t: Sequence[Any], tower: ScalarTower
) -> AlgebraElement:
    """``e + sum t_i ω_i`` with coefficients in ``tower``."""
    if len(t) != descriptor.m:
        raise ValueError(f"expected {descriptor.m} parameters, got {len(t)}")
    module = descriptor.module
    algebra = module.algebra
    coefficients = [tower.zero] * algebra.dim
    coefficients[algebra.index(algebra.quiver.trivial(module.vertex))] = tower.one
    for value, k in zip(t, descriptor.omega_indices):
        coefficients[module.cycles[k]] = tower(value)
    return AlgebraElement(algebra, tuple(coefficients))


def _parameter_tower(descriptor: OrbitDescriptor, t: Sequence[Any]) -> ScalarTower:
    return common_tower(descriptor.representative.tower, tower_of(t))


def psi(descriptor: OrbitDescriptor, t: Sequence[Any]) -> GrassPoint:
    """The orbit point ``C * (e + sum t_i ω_i)``."""
    tower = _parameter_tower(descriptor, t)
    return right_multiply(descriptor.representative, unit_element(descriptor, t, tower))


def psi_rows(
    descriptor: OrbitDescriptor, t: Sequence[Any]
) -> Tuple[List[Vector], ScalarTower]:
    """Unreduced P rows of ``psi(descriptor, t)``, as fed to a limit."""
    tower = _parameter_tower(descriptor, t)
    unit = unit_element(descriptor, t, tower)
    return right_multiply_rows(descriptor.representative, unit)


def same_orbit(first: GrassPoint, second: GrassPoint) -> bool:
    """
    Whether ``second = first * u`` for some unit u of eΛe.

    Solves the linear system ``first * (x_0 e + sum x_k ω_k) ⊆ second`` over
    all cycles at the top vertex; a unit exists iff some solution has
    ``x_0 != 0``.

    Raises:
        DimensionMismatch: If the two points have different dimensions.
    """
    if first.dim != second.dim:
        raise DimensionMismatch(
            f"cannot compare submodules of dimensions {first.dim} and {second.dim}"
        )
    tower = common_tower(first.tower, second.tower)
    first = first.coerce(tower)
    second = second.coerce(tower)
    module = first.module

    cycles = [
        module.algebra.basis_element(index, tower.one) for index in module.cycles
    ]
    columns: List[List[Vector]] = []
    for row in first.rows():
        images = [module.drop(row)]
        images += [module.drop(module.right_multiply(row, cycle)) for cycle in cycles]
        columns.append([second.space.reduce(image) for image in images])

    unknowns = module.mu + 1
    equations = []
    for images in columns:
        for j in range(module.radical_dim):
            equation = [images[k][j] for k in range(unknowns)]
            if any(equation):
                equations.append(equation)
    kernel = nullspace(equations, unknowns, tower.domain)
    return any(vector[0] for vector in kernel)


def point_signature(point: GrassPoint) -> Signature:
    """
    An isomorphism invariant of P/C.

    The orbit dimension together with the rank of left multiplication by
    every basis class of positive length on P/C.
    """
    module = point.module
    tower = point.tower
    basis = [
        [tower.one if i == j else tower.zero for j in range(module.dim)]
        for i in range(module.dim)
    ]
    ranks = []
    for index, path in enumerate(module.algebra.basis):
        if path.length == 0:
            continue
        images = [
            point.space.reduce(module.drop(module.left_multiply(index, vector)))
            for vector in basis
        ]
        ranks.append(rank(images, module.radical_dim, tower.domain))
    return orbit_dimension(point), tuple(ranks)
