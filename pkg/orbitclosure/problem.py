"""
Problem documents: a quiver with relations, a top vertex and generators of C.

A document is a JSON object::

    {
      "name": "ex_5_2",
      "quiver": {"vertices": ["1", "2", "3"],
                 "arrows": [{"name": "w", "source": "1", "target": "1"}, ...]},
      "relations": [[["1", ["w", "w", "w"]]], ...],
      "top_vertex": "1",
      "C": [[["1", ["a"]], ["1", ["b"]]], ...],
      "options": {"max_exponent": 2}
    }

Paths are arrays of arrow names in written order; the last arrow acts first.
"""
import json
from dataclasses import dataclass, field
from pathlib import Path as FilePath
from typing import Any, Dict, List, Optional, Tuple, Union

from .config import DEFAULT_LENGTH_CAP
from .errors import ParseError
from .exactfield import as_rational
from .modrep import GrassPoint, ProjectiveModule, projective_cover, submodule_point
from .pathalg import Algebra, Arrow, Path, Quiver, Relation, build_algebra

FIXTURE_DIR = FilePath(__file__).parent / "fixtures"
OPTION_KEYS = ("max_exponent", "samples", "length_cap", "jobs")
ALIASES = {
    "p1xp1": "ex_5_1a",
    "p2": "ex_5_1b",
    "hirzebruch2": "ex_5_2",
    "singular_blowup": "ex_5_3",
    "blowup_p1xp1": "ex_5_4",
}

Term = Tuple[Any, Path]


@dataclass
class ProblemSpec:
    name: str
    quiver: Quiver
    relations: Tuple[Relation, ...]
    top_vertex: str
    generators: Tuple[Tuple[Term, ...], ...]
    algebra: Algebra
    module: ProjectiveModule
    point: GrassPoint
    options: Dict[str, Any] = field(default_factory=dict)

    def option(self, key: str, default: Any = None) -> Any:
        return self.options.get(key, default)


def _require(document: Dict[str, Any], key: str) -> Any:
    if key not in document:
        raise ParseError(f"problem document is missing {key!r}")
    return document[key]


def _parse_quiver(data: Any) -> Quiver:
    if not isinstance(data, dict):
        raise ParseError("'quiver' must be an object with vertices and arrows")
    vertices = [str(v) for v in _require(data, "vertices")]
    arrows = []
    for item in _require(data, "arrows"):
        if isinstance(item, dict):
            try:
                arrows.append(
                    Arrow(str(item["name"]), str(item["source"]), str(item["target"]))
                )
            except KeyError as e:
                raise ParseError(f"arrow {item} is missing {e}") from None
        elif isinstance(item, (list, tuple)) and len(item) == 3:
            arrows.append(Arrow(str(item[0]), str(item[1]), str(item[2])))
        else:
            raise ParseError(f"cannot read arrow {item!r}")
    return Quiver(vertices, arrows)


def _parse_path(quiver: Quiver, names: Any, vertex: str) -> Path:
    if not isinstance(names, (list, tuple)):
        raise ParseError(f"a path must be an array of arrow names, got {names!r}")
    if not names:
        return quiver.trivial(vertex)
    return quiver.path([str(name) for name in names])


def _parse_terms(quiver: Quiver, data: Any, vertex: str) -> Tuple[Term, ...]:
    if not isinstance(data, (list, tuple)) or not data:
        raise ParseError(
            f"expected a non-empty list of [coefficient, path] terms, got {data!r}"
        )
    terms = []
    for term in data:
        if not isinstance(term, (list, tuple)) or len(term) != 2:
            raise ParseError(f"a term must be [coefficient, path], got {term!r}")
        coeff = as_rational(str(term[0]))
        terms.append((coeff, _parse_path(quiver, term[1], vertex)))
    return tuple(terms)


def parse_problem(
    document: Dict[str, Any], length_cap: Optional[int] = None
) -> ProblemSpec:
    """
    Validate a problem document and build Λ, P and the point C.

    Args:
        document: The decoded JSON object.
        length_cap: Overrides ``options.length_cap`` when given.

    Returns:
        The parsed problem, with C closed under Λ.

    Raises:
        ParseError: If the document is malformed.
        NotAdmissible: If the relations do not give a finite-dimensional
            length-graded quotient.
        GeneratorNotInRadical: If a generator of C has a component on e.
    """
    if not isinstance(document, dict):
        raise ParseError("a problem document must be a JSON object")

    options = dict(document.get("options") or {})
    unknown = sorted(set(options) - set(OPTION_KEYS))
    if unknown:
        raise ParseError(f"unknown options {unknown}")

    quiver = _parse_quiver(_require(document, "quiver"))
    top = str(_require(document, "top_vertex"))
    quiver.trivial(top)

    relations = []
    for item in _require(document, "relations"):
        terms = _parse_terms(quiver, item, top)
        relations.append(Relation(terms))

    cap = length_cap if length_cap is not None else options.get("length_cap")
    try:
        cap = int(cap) if cap is not None else DEFAULT_LENGTH_CAP
    except (TypeError, ValueError):
        raise ParseError(f"length_cap must be an integer, got {cap!r}") from None
    algebra = build_algebra(quiver, relations, cap)
    module = projective_cover(algebra, top)

    generators = tuple(
        _parse_terms(quiver, item, top) for item in _require(document, "C")
    )
    try:
        vectors = [module.vector(terms) for terms in generators]
    except ValueError as e:
        raise ParseError(f"invalid generator of C: {e}") from e
    point = submodule_point(module, vectors)

    return ProblemSpec(
        name=str(document.get("name", "problem")),
        quiver=quiver,
        relations=tuple(relations),
        top_vertex=top,
        generators=generators,
        algebra=algebra,
        module=module,
        point=point,
        options=options,
    )


def load_problem(
    path: Union[str, FilePath], length_cap: Optional[int] = None
) -> ProblemSpec:
    """Read and parse a problem file."""
    path = FilePath(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            document = json.load(f)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path} is not valid JSON: {e}") from e
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    if isinstance(document, dict):
        document.setdefault("name", path.stem)
    return parse_problem(document, length_cap)


def bundled_names() -> List[str]:
    return sorted(p.stem for p in FIXTURE_DIR.glob("*.json"))


def bundled_problem(name: str, length_cap: Optional[int] = None) -> ProblemSpec:
    """
    One of the problems shipped in ``orbitclosure/fixtures``.

    ``name`` is a file name such as ``ex_5_2.json``, its stem, or one of
    the descriptive aliases in ``ALIASES``.
    """
    stem = name[: -len(".json")] if name.endswith(".json") else name
    stem = ALIASES.get(stem, stem)
    path = FIXTURE_DIR / f"{stem}.json"
    if not path.exists():
        raise ParseError(
            f"no bundled problem {name!r}; available: {', '.join(bundled_names())}"
        )
    return load_problem(path, length_cap)


def resolve_problem(source: str, length_cap: Optional[int] = None) -> ProblemSpec:
    """A problem from a file path, or else from a bundled fixture name."""
    if FilePath(source).is_file():
        return load_problem(source, length_cap)
    return bundled_problem(source, length_cap)

