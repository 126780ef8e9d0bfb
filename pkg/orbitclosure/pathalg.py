"""
Quivers, paths and finite-dimensional quotients Λ = kQ/I.

Paths are written left to right and composed right to left: in ``a*w``
the arrow ``w`` acts first. Relations must be length-homogeneous, which lets
the quotient be computed one path length at a time.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ

from .config import DEFAULT_LENGTH_CAP
from .errors import NotAdmissible, ParseError
from .linalg import rref

Coefficients = Dict[int, Any]


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Path:
    """A path ``arrows[0] * ... * arrows[-1]``; trivial paths carry their vertex."""

    arrows: Tuple[str, ...]
    source: str
    target: str

    @property
    def length(self) -> int:
        return len(self.arrows)

    def label(self) -> str:
        """Arrow names joined by ``*`` with repeated runs written as ``^k``."""
        if not self.arrows:
            return f"e{self.source}"
        parts = []
        index = 0
        while index < len(self.arrows):
            run = 1
            while (
                index + run < len(self.arrows)
                and self.arrows[index + run] == self.arrows[index]
            ):
                run += 1
            name = self.arrows[index]
            parts.append(name if run == 1 else f"{name}^{run}")
            index += run
        return "*".join(parts)

    def __str__(self) -> str:
        return self.label()


class Quiver:
    """A finite quiver with declared vertex and arrow order."""

    def __init__(self, vertices: Sequence[str], arrows: Sequence[Arrow]):
        self.vertices: Tuple[str, ...] = tuple(str(v) for v in vertices)
        self.arrows: Tuple[Arrow, ...] = tuple(arrows)

        if len(set(self.vertices)) != len(self.vertices):
            raise ParseError(f"duplicate vertex names in {list(self.vertices)}")
        names = [arrow.name for arrow in self.arrows]
        if len(set(names)) != len(names):
            raise ParseError(f"duplicate arrow names in {names}")
        for arrow in self.arrows:
            for end in (arrow.source, arrow.target):
                if end not in self.vertices:
                    raise ParseError(
                        f"arrow {arrow.name!r} uses undeclared vertex {end!r}"
                    )

        self._arrow_index = {arrow.name: i for i, arrow in enumerate(self.arrows)}
        self._vertex_index = {v: i for i, v in enumerate(self.vertices)}

    def arrow(self, name: str) -> Arrow:
        try:
            return self.arrows[self._arrow_index[name]]
        except KeyError:
            raise ParseError(f"unknown arrow {name!r}") from None

    def trivial(self, vertex: str) -> Path:
        if vertex not in self._vertex_index:
            raise ParseError(f"unknown vertex {vertex!r}")
        return Path((), vertex, vertex)

    def path(self, names: Sequence[str]) -> Path:
        """Build a path from arrow names in written order."""
        if not names:
            raise ParseError("an empty arrow list needs a vertex; use trivial()")
        arrows = [self.arrow(name) for name in names]
        for left, right in zip(arrows, arrows[1:]):
            if left.source != right.target:
                raise ParseError(
                    f"{left.name}*{right.name} is not composable: "
                    f"{right.name} ends at {right.target}, {left.name} starts at "
                    f"{left.source}"
                )
        return Path(tuple(names), arrows[-1].source, arrows[0].target)

    def compose(self, left: Path, right: Path) -> Optional[Path]:
        """``left * right`` (right acts first), or None when not composable."""
        if left.source != right.target:
            return None
        if not left.arrows:
            return right
        if not right.arrows:
            return left
        return Path(left.arrows + right.arrows, right.source, left.target)

    def path_key(self, path: Path) -> Tuple[int, Tuple[int, ...]]:
        """Length first, then arrow declaration order over the written word."""
        if not path.arrows:
            return (0, (self._vertex_index[path.source],))
        return (path.length, tuple(self._arrow_index[name] for name in path.arrows))


@dataclass(frozen=True)
class Relation:
    """A length-homogeneous combination of parallel paths."""

    terms: Tuple[Tuple[Any, Path], ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise NotAdmissible("empty relation")
        lengths = {path.length for _, path in self.terms}
        ends = {(path.source, path.target) for _, path in self.terms}
        if min(lengths) < 2:
            raise NotAdmissible(
                f"relation {self} has a term of length < 2; relations must lie in J^2"
            )
        if len(lengths) > 1:
            raise NotAdmissible(f"relation {self} is not length-homogeneous")
        if len(ends) > 1:
            raise NotAdmissible(f"relation {self} mixes paths with different ends")

    @property
    def length(self) -> int:
        return self.terms[0][1].length

    def __str__(self) -> str:
        return " + ".join(f"{coeff}*{path.label()}" for coeff, path in self.terms)


@dataclass(eq=False)
class AlgebraElement:
    """A coefficient vector over the basis of an Algebra."""

    algebra: "Algebra"
    coefficients: Tuple[Any, ...]

    def __post_init__(self) -> None:
        if len(self.coefficients) != self.algebra.dim:
            raise ValueError(
                f"expected {self.algebra.dim} coefficients, "
                f"got {len(self.coefficients)}"
            )

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(
            self.algebra,
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients)),
        )

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(
            self.algebra,
            tuple(a - b for a, b in zip(self.coefficients, other.coefficients)),
        )

    def __mul__(self, other: Any) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return AlgebraElement(self.algebra, tuple(a * other for a in self.coefficients))

    def __rmul__(self, other: Any) -> "AlgebraElement":
        return AlgebraElement(self.algebra, tuple(other * a for a in self.coefficients))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement) or other.algebra is not self.algebra:
            return NotImplemented
        return all(a - b == 0 for a, b in zip(self.coefficients, other.coefficients))

    def support(self) -> List[int]:
        return [i for i, c in enumerate(self.coefficients) if c]

    def __str__(self) -> str:
        terms = []
        for i in self.support():
            label = self.algebra.basis[i].label()
            coeff = self.coefficients[i]
            if coeff == 1:
                terms.append(label)
            elif coeff == -1:
                terms.append(f"-{label}")
            else:
                terms.append(f"({coeff})*{label}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


@dataclass
class Algebra:
    """Λ = kQ/I with a path basis graded by length."""

    quiver: Quiver
    relations: Tuple[Relation, ...]
    basis: Tuple[Path, ...]
    nilpotency: int
    _index: Dict[Path, int] = field(repr=False)
    _reductions: Dict[int, Dict[Path, Coefficients]] = field(repr=False)
    _table: Dict[Tuple[int, int], Coefficients] = field(
        default_factory=dict, repr=False
    )

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, path: Path) -> int:
        return self._index[path]

    def normal_form(self, path: Path) -> Coefficients:
        """Coordinates of the class of ``path`` in the basis."""
        if path in self._index:
            return {self._index[path]: QQ.one}
        if path.length >= self.nilpotency:
            return {}
        level = self._reductions[path.length]
        if path in level:
            return dict(level[path])
        # Not a candidate at this length: reduce the tail first.
        head, tail = path.arrows[0], path.arrows[1:]
        arrow = self.quiver.arrow(head)
        tail_path = Path(tail, path.source, arrow.source)
        step = Path((head,), arrow.source, arrow.target)
        result: Coefficients = {}
        for index, coeff in self.normal_form(tail_path).items():
            extended = self.quiver.compose(step, self.basis[index])
            if extended is None:
                continue
            for target, value in self.normal_form(extended).items():
                result[target] = result.get(target, QQ.zero) + coeff * value
        return {k: v for k, v in result.items() if v}

    def product(self, i: int, j: int) -> Coefficients:
        """Structure constants of ``basis[i] * basis[j]``."""
        key = (i, j)
        if key not in self._table:
            composed = self.quiver.compose(self.basis[i], self.basis[j])
            self._table[key] = {} if composed is None else self.normal_form(composed)
        return self._table[key]

    def element(self, combination: Iterable[Tuple[Any, Path]]) -> AlgebraElement:
        """The class of ``sum coeff * path``."""
        coefficients = [QQ.zero] * self.dim
        for coeff, path in combination:
            for index, value in self.normal_form(path).items():
                coefficients[index] = coefficients[index] + coeff * value
        return AlgebraElement(self, tuple(coefficients))

    def basis_element(self, index: int, one: Any = None) -> AlgebraElement:
        unit = QQ.one if one is None else one
        zero = unit - unit
        return AlgebraElement(
            self, tuple(unit if i == index else zero for i in range(self.dim))
        )

    def idempotent(self, vertex: str) -> AlgebraElement:
        return self.basis_element(self.index(self.quiver.trivial(vertex)))


def _candidates(quiver: Quiver, previous: Sequence[Path]) -> List[Path]:
    """All ``arrow * p`` for p a basis path one step shorter."""
    found = set()
    for path in previous:
        for arrow in quiver.arrows:
            if arrow.source == path.target:
                found.add(Path((arrow.name,) + path.arrows, path.source, arrow.target))
    return sorted(found, key=quiver.path_key)


def build_algebra(
    quiver: Quiver,
    relations: Sequence[Relation],
    length_cap: int = DEFAULT_LENGTH_CAP,
) -> Algebra:
    """
    Compute a path basis of kQ/I degree by degree.

    At each length the translates ``g * q`` of every relation ``g`` by
    basis paths ``q`` are row reduced against the candidate paths; pivots
    are the lexicographically earliest paths and the remaining paths become
    basis classes. The construction stops at the first empty length.

    Raises:
        NotAdmissible: If a relation is shorter than 2 or classes survive at
            ``length_cap``.
    """
    relations = tuple(relations)
    for relation in relations:
        if relation.length < 2:
            raise NotAdmissible(f"relation {relation} has length < 2")

    basis: List[Path] = [quiver.trivial(v) for v in quiver.vertices]
    levels: Dict[int, List[Path]] = {0: list(basis)}
    levels[1] = sorted(
        (quiver.path([arrow.name]) for arrow in quiver.arrows), key=quiver.path_key
    )
    basis.extend(levels[1])
    index = {path: i for i, path in enumerate(basis)}
    reductions: Dict[int, Dict[Path, Coefficients]] = {}
    algebra = Algebra(quiver, relations, (), length_cap, index, reductions)

    length = 2
    nilpotency = 2 if levels[1] else 1
    while levels[length - 1]:
        if length > length_cap:
            raise NotAdmissible(
                f"nonzero paths persist at length {length_cap}; J is not nilpotent "
                "within the length cap"
            )
        candidates = _candidates(quiver, levels[length - 1])
        position = {path: i for i, path in enumerate(candidates)}
        algebra.basis = tuple(basis)
        algebra.nilpotency = length + 1

        rows = []
        for relation in relations:
            if relation.length > length:
                continue
            tails = levels[length - relation.length]
            for tail in tails:
                row = [QQ.zero] * len(candidates)
                touched = False
                for coeff, path in relation.terms:
                    composed = quiver.compose(path, tail)
                    if composed is None:
                        continue
                    reduced_path = _reduce_into(algebra, composed, position)
                    for target, value in reduced_path.items():
                        row[target] += QQ.convert(coeff) * value
                        touched = True
                if touched and any(row):
                    rows.append(row)

        reduced, pivots = rref(rows, len(candidates), QQ)
        survivors = [p for i, p in enumerate(candidates) if i not in pivots]
        level_reduction: Dict[Path, Coefficients] = {}
        for row, pivot in zip(reduced, pivots):
            level_reduction[candidates[pivot]] = {
                len(basis) + survivors.index(candidates[j]): -row[j]
                for j in range(len(candidates))
                if j not in pivots and row[j]
            }
        for path in survivors:
            index[path] = len(basis)
            basis.append(path)
        reductions[length] = level_reduction
        levels[length] = survivors
        if survivors:
            nilpotency = length + 1
        length += 1

    algebra.basis = tuple(basis)
    algebra.nilpotency = nilpotency
    return algebra


def _reduce_into(
    algebra: Algebra, path: Path, position: Dict[Path, int]
) -> Coefficients:
    """Coordinates of a length-ℓ path over the length-ℓ candidates."""
    if path in position:
        return {position[path]: QQ.one}
    head = path.arrows[0]
    arrow = algebra.quiver.arrow(head)
    tail = Path(path.arrows[1:], path.source, arrow.source)
    result: Coefficients = {}
    for index, coeff in algebra.normal_form(tail).items():
        extended = algebra.quiver.compose(
            Path((head,), arrow.source, arrow.target), algebra.basis[index]
        )
        if extended is None or extended not in position:
            continue
        slot = position[extended]
        result[slot] = result.get(slot, QQ.zero) + coeff
    return result


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Bilinear product ``x * y``; ``y`` acts first."""
    algebra = x.algebra
    zero = _zero_like(x.coefficients + y.coefficients)
    result = [zero] * algebra.dim
    for i, a in enumerate(x.coefficients):
        if not a:
            continue
        for j, b in enumerate(y.coefficients):
            if not b:
                continue
            for k, value in algebra.product(i, j).items():
                result[k] = result[k] + a * b * value
    return AlgebraElement(algebra, tuple(result))


def _zero_like(values: Sequence[Any]) -> Any:
    for value in values:
        if value:
            return value - value
    return values[0] - values[0] if values else QQ.zero


def cycle_basis_at(algebra: Algebra, vertex: str) -> List[AlgebraElement]:
    """Basis classes of length ≥ 1 starting and ending at ``vertex``."""
    algebra.quiver.trivial(vertex)
    return [
        algebra.basis_element(i)
        for i, path in enumerate(algebra.basis)
        if path.length >= 1 and path.source == vertex and path.target == vertex
    ]
