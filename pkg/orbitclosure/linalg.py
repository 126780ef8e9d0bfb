"""
Exact linear algebra over a sympy domain.

Matrices are lists of rows; each helper wraps ``DomainMatrix`` so that the
rest of the package only deals with plain lists of field elements.
"""
from typing import Any, List, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

Row = List[Any]


def _matrix(rows: Sequence[Sequence[Any]], ncols: int, domain: Any) -> DomainMatrix:
    data = [[domain.convert(entry) for entry in row] for row in rows]
    return DomainMatrix(data, (len(data), ncols), domain)


def rref(
    rows: Sequence[Sequence[Any]], ncols: int, domain: Any
) -> Tuple[List[Row], Tuple[int, ...]]:
    """
    Reduced row echelon form without zero rows.

    Pivot entries are 1 and pivot columns strictly increase, so two spans
    are equal exactly when their reduced forms are equal.
    """
    if not rows or ncols == 0:
        return [], ()
    reduced, pivots = _matrix(rows, ncols, domain).rref()
    kept = reduced.to_list()[: len(pivots)]
    return [list(row) for row in kept], tuple(pivots)


def rank(rows: Sequence[Sequence[Any]], ncols: int, domain: Any) -> int:
    if not rows or ncols == 0:
        return 0
    return _matrix(rows, ncols, domain).rank()


def nullspace(rows: Sequence[Sequence[Any]], ncols: int, domain: Any) -> List[Row]:
    """RREF basis of ``{x : M x = 0}`` for the matrix with the given rows."""
    if not rows:
        identity = [
            [domain.one if i == j else domain.zero for j in range(ncols)]
            for i in range(ncols)
        ]
        return identity
    kernel = _matrix(rows, ncols, domain).nullspace()
    basis = [list(row) for row in kernel.to_list() if any(row)]
    reduced, _ = rref(basis, ncols, domain)
    return reduced


def det(rows: Sequence[Sequence[Any]], domain: Any) -> Any:
    size = len(rows)
    if size == 0:
        return domain.one
    return _matrix(rows, size, domain).det()


def reduce_vector(
    vector: Sequence[Any], basis: Sequence[Sequence[Any]], pivots: Sequence[int]
) -> Row:
    """Remainder of ``vector`` modulo the span of an RREF basis."""
    remainder = list(vector)
    for row, pivot in zip(basis, pivots):
        factor = remainder[pivot]
        if factor:
            remainder = [r - factor * b for r, b in zip(remainder, row)]
    return remainder
