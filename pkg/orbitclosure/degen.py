"""
Boundary enumeration, the degeneration poset and Euler characteristics.

The boundary of an orbit closure is explored with monomial curves
``t_i = c_i * s^(-a_i)`` through the orbit parametrisation. Limits are
sorted into orbit classes and one-parameter families of point orbits; every
positive-dimensional class found is explored in turn.
"""
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations, product
from typing import Any, Dict, Iterable, List, Optional, Sequence, Set, Tuple

import click
import networkx as nx
from sympy.polys.domains import QQ

from .config import DEFAULT_MAX_EXPONENT, DEFAULT_SAMPLES, split_samples
from .errors import InconclusiveClassification, NotOverBaseField, ParseError
from .exactfield import (
    CURVE_SYMBOL,
    ScalarTower,
    as_rational,
    free_symbols,
    is_zero,
    rational_roots,
    scalar_to_string,
    split_roots,
    substitute,
    to_rational,
)
from .grasslimit import ValuedMatrix, limit_point
from .modrep import GrassPoint, ProjectiveModule, Subspace, format_point
from .orbit import (
    OrbitDescriptor,
    Signature,
    orbit_descriptor,
    point_signature,
    psi_rows,
    same_orbit,
)

LOCAL_SYMBOL = "u"
INFINITY_TEXT = "oo"

OPEN = "open"
ORBIT = "orbit"
FAMILY = "family"
POINT = "point"

COMPLETE = "verified-complete"
LOWER_BOUND = "lower bound on degenerations"

# A rational parameter value, or None for the point at infinity.
Value = Optional[Any]
Node = Tuple[str, int]
TOP: Node = (OPEN, 0)


@dataclass(frozen=True)
class CurveSpec:
    """The curve ``t_i = coefficients[i] * s^(-exponents[i])``."""

    exponents: Tuple[int, ...]
    coefficients: Tuple[str, ...]

    @property
    def parameters(self) -> Tuple[str, ...]:
        return tuple(c for c in self.coefficients if c[0].isalpha())

    def values(self, tower: ScalarTower) -> List[Any]:
        return [
            tower(coeff) * tower.s ** (-exponent)
            for coeff, exponent in zip(self.coefficients, self.exponents)
        ]

    def label(self) -> str:
        terms = []
        for coeff, exponent in zip(self.coefficients, self.exponents):
            if exponent == 0:
                terms.append(coeff)
            elif coeff == "1":
                terms.append(f"s^-{exponent}")
            else:
                terms.append(f"{coeff}*s^-{exponent}")
        return "(" + ", ".join(terms) + ")"


@dataclass(frozen=True)
class Stratum:
    label: str
    kind: str
    representative: GrassPoint
    orbit_dim: int
    base: str
    chi: int
    punctures: int = 0
    parameter: Optional[str] = None
    special_values: Tuple[str, ...] = ()
    reached_from: Tuple[str, ...] = ()

    def describe(self) -> str:
        if self.kind == OPEN:
            return f"open orbit, dim {self.orbit_dim}"
        if self.kind == ORBIT:
            return f"orbit, dim {self.orbit_dim}"
        if self.kind == FAMILY:
            base = self.base
            if self.punctures:
                base = f"{base} ({self.punctures})"
            return f"family over {base}, chi {self.chi}"
        return "point"


@dataclass(frozen=True)
class DegenPoset:
    """Strata (node 0 is the open orbit) with covering edges ``i -> j``."""

    nodes: Tuple[Stratum, ...]
    edges: Tuple[Tuple[int, int], ...]
    closure: Tuple[Tuple[bool, ...], ...]

    def below(self, i: int, j: int) -> bool:
        """Whether node j lies in the closure of node i."""
        return self.closure[i][j]


@dataclass(frozen=True)
class ChiReport:
    chi: int
    boundary_chi: int
    strata: int
    t: int
    within_t_plus_one: bool
    within_two_t: bool
    connected: bool

    @property
    def ok(self) -> bool:
        return self.within_t_plus_one and self.within_two_t

    @property
    def status(self) -> str:
        return COMPLETE if self.ok and self.chi >= 3 and self.connected else LOWER_BOUND

    def line(self) -> str:
        verdict = "OK" if self.ok else "FAIL"
        return (
            f"chi = {self.chi}, strata = {self.strata}, bounds: "
            f"chi(boundary)={self.boundary_chi} <= t+1={self.t + 1} {verdict}"
        )


def curve_specs(m: int, max_exponent: int = DEFAULT_MAX_EXPONENT) -> List[CurveSpec]:
    """
    Primitive exponent vectors in ``{0..E}^m`` in lexicographic order.

    The first positive coordinate carries the coefficient 1 and every other
    coordinate a symbolic coefficient ``c<i>``.
    """
    if max_exponent < 1:
        raise ValueError("max_exponent must be at least 1")
    specs = []
    for exponents in product(range(max_exponent + 1), repeat=m):
        if not any(exponents) or reduce(math.gcd, exponents) != 1:
            continue
        first = next(i for i, a in enumerate(exponents) if a > 0)
        coefficients = tuple("1" if i == first else f"c{i + 1}" for i in range(m))
        specs.append(CurveSpec(tuple(exponents), coefficients))
    return specs


def curve_limit(
    descriptor: OrbitDescriptor, spec: CurveSpec, tower: ScalarTower
) -> GrassPoint:
    """The limit at ``s = 0`` of the orbit along ``spec``."""
    rows, family_tower = psi_rows(descriptor, spec.values(tower))
    family = ValuedMatrix(rows, family_tower, CURVE_SYMBOL, descriptor.module.dim)
    return limit_point(family, descriptor.module).coerce(tower)


def _scalar_key(x: Any) -> Tuple[Any, ...]:
    if is_zero(x):
        return (0,)
    try:
        q = to_rational(x)
    except ValueError:
        return (2, scalar_to_string(x))
    return (1, abs(q), 0 if q > 0 else 1)


def point_key(point: GrassPoint) -> Tuple[Any, ...]:
    """Canonical order: pivots, then entries with zeros and small values first."""
    entries = tuple(_scalar_key(x) for row in point.space.rows for x in row)
    return (point.space.pivots, entries)


def value_text(value: Value) -> str:
    return INFINITY_TEXT if value is None else str(value)


def _value_key(value: Value) -> Tuple[bool, Any]:
    return (value is None, QQ.zero if value is None else value)


def _parameters(point: GrassPoint) -> List[str]:
    names: Set[str] = set()
    for row in point.space.rows:
        for x in row:
            names.update(free_symbols(x))
    return sorted(names)


@dataclass
class _PointClass:
    representative: GrassPoint
    signature: Signature
    key: Tuple[Any, ...]
    explored: bool = False

    @property
    def orbit_dim(self) -> int:
        return self.signature[0]


@dataclass
class _Family:
    generic: GrassPoint
    parameter: str
    signature: Signature
    critical: List[Any]
    closure: Dict[Value, int] = field(default_factory=dict)
    closed: bool = False

    @property
    def candidates(self) -> List[Value]:
        return list(self.critical) + [None]


class BoundaryEnumerator:
    """Registry of the classes found while exploring one orbit closure."""

    def __init__(
        self,
        descriptor: OrbitDescriptor,
        max_exponent: int = DEFAULT_MAX_EXPONENT,
        samples: Optional[Iterable[Any]] = None,
        jobs: int = 1,
        verbose: bool = False,
    ):
        self.descriptor = descriptor
        self.module: ProjectiveModule = descriptor.module
        self.max_exponent = max_exponent
        if samples is None:
            samples = split_samples(DEFAULT_SAMPLES)
        self.samples = sorted({as_rational(v) for v in samples})
        self.jobs = max(1, jobs)
        self.verbose = verbose
        names = [f"c{i + 1}" for i in range(max(descriptor.m, 1))]
        self.tower = ScalarTower(names + [LOCAL_SYMBOL])

        self.classes: List[_PointClass] = []
        self.families: List[_Family] = []
        self.edges: Set[Tuple[Node, Node]] = set()
        self._family_points: Dict[Tuple[int, Value], GrassPoint] = {}

    def _echo(self, message: str) -> None:
        if self.verbose:
            click.echo(message, err=True)

    def run(self) -> List[Stratum]:
        self._explore(self.descriptor, TOP)
        while True:
            pending = [
                i
                for i, cls in enumerate(self.classes)
                if cls.orbit_dim >= 1 and not cls.explored
            ]
            if pending:
                for i in pending:
                    cls = self.classes[i]
                    cls.explored = True
                    self._echo(f"recursing into orbit class {i} (dim {cls.orbit_dim})")
                    self._explore(orbit_descriptor(cls.representative), ("class", i))
                continue
            unclosed = [i for i, f in enumerate(self.families) if not f.closed]
            if not unclosed:
                break
            for i in unclosed:
                self._close_family(i)

        strata = self._strata()
        self._echo(
            f"found {len(strata)} boundary strata from {len(self.classes)} classes "
            f"and {len(self.families)} families"
        )
        return strata

    # Exploration

    def _explore(self, descriptor: OrbitDescriptor, origin: Node) -> None:
        specs = curve_specs(descriptor.m, self.max_exponent)

        def compute(spec: CurveSpec) -> GrassPoint:
            return curve_limit(descriptor, spec, self.tower)

        if self.jobs > 1 and len(specs) > 1:
            with ThreadPoolExecutor(max_workers=self.jobs) as pool:
                limits = list(pool.map(compute, specs))
        else:
            limits = [compute(spec) for spec in specs]

        for spec, point in zip(specs, limits):
            self._echo(f"curve {spec.label()}: {format_point(point)}")
            self._classify(point, origin)

    def _link(self, source: Node, target: Node) -> None:
        if source != target:
            self.edges.add((source, target))

    def _classify(self, point: GrassPoint, origin: Node) -> None:
        params = _parameters(point)
        if not params:
            self._register(point, origin)
        elif len(params) == 1:
            self._classify_line(point, params[0], origin)
        else:
            self._classify_grid(point, params, origin)

    def _register(self, point: GrassPoint, origin: Node) -> int:
        signature = point_signature(point)
        key = point_key(point)
        for i, cls in enumerate(self.classes):
            if cls.signature == signature and same_orbit(point, cls.representative):
                if key < cls.key:
                    cls.representative, cls.key = point, key
                self._link(origin, ("class", i))
                return i
        self.classes.append(_PointClass(point, signature, key))
        index = len(self.classes) - 1
        self._link(origin, ("class", index))
        return index

    def _closure_point(self, point: GrassPoint, name: str, value: Value) -> GrassPoint:
        """The limit of ``point`` as its parameter ``name`` tends to ``value``."""
        local = self.tower.gen(LOCAL_SYMBOL)
        if value is None:
            replacement = self.tower.one / local
        else:
            replacement = self.tower(value) + local
        rows = [
            [substitute(x, name, replacement) for x in row] for row in point.space.rows
        ]
        family = ValuedMatrix(rows, self.tower, LOCAL_SYMBOL, self.module.radical_dim)
        return limit_point(family, self.module)

    def _critical(self, point: GrassPoint, name: str) -> List[Any]:
        """
        0 and the zeros and poles of the echelon entries.

        Raises:
            NotOverBaseField: If an entry has a zero or pole outside the
                rationals.
        """
        values = {QQ.zero}
        for row in point.space.rows:
            for x in row:
                if name not in free_symbols(x):
                    continue
                for part in (x.numer, x.denom):
                    values.update(rational_roots(x.field.new(part), name))
        return sorted(values)

    def _classify_line(self, point: GrassPoint, name: str, origin: Node) -> None:
        critical = self._critical(point, name)
        regular = [v for v in self.samples if v not in critical]
        if len(regular) < 2:
            raise InconclusiveClassification(
                f"fewer than two regular samples for {format_point(point)}"
            )

        generic = point_signature(point)
        members = []
        for value in regular:
            member = self._closure_point(point, name, value)
            if point_signature(member) != generic:
                raise InconclusiveClassification(
                    f"sample {name} = {value} disagrees with the generic limit "
                    f"{format_point(point)}"
                )
            members.append(member)

        first = members[0]
        together = [same_orbit(first, other) for other in members[1:]]
        if all(together):
            index = -1
            for member in members:
                index = self._register(member, origin)
            for value in critical + [None]:
                closure = self._closure_point(point, name, value)
                self._register(closure, ("class", index))
            return

        rest = combinations(members[1:], 2)
        if any(together) or any(same_orbit(a, b) for a, b in rest):
            raise InconclusiveClassification(
                f"samples of {format_point(point)} split into several orbits"
            )
        if generic[0] > 0:
            raise InconclusiveClassification(
                f"{format_point(point)} is a family of positive-dimensional orbits"
            )

        for fid in range(len(self.families)):
            if all(self._membership(fid, member) for member in members):
                self._link(origin, (FAMILY, fid))
                return
        self.families.append(_Family(point, name, generic, critical))
        self._link(origin, (FAMILY, len(self.families) - 1))

    def _classify_grid(self, point: GrassPoint, names: List[str], origin: Node) -> None:
        members = []
        for values in product(self.samples, repeat=len(names)):
            member = point
            for name, value in zip(names, values):
                member = self._closure_point(member, name, value)
            members.append(member)
        first = members[0]
        if not all(same_orbit(first, other) for other in members[1:]):
            raise InconclusiveClassification(
                f"{format_point(point)} depends on {len(names)} parameters "
                "and is not a single orbit"
            )
        for member in members:
            self._register(member, origin)

    # Families

    def _family_point(self, fid: int, value: Value) -> GrassPoint:
        key = (fid, value)
        if key not in self._family_points:
            family = self.families[fid]
            self._family_points[key] = self._closure_point(
                family.generic, family.parameter, value
            )
        return self._family_points[key]

    def _close_family(self, fid: int) -> None:
        family = self.families[fid]
        family.closed = True
        for value in family.candidates:
            point = self._family_point(fid, value)
            family.closure[value] = self._register(point, (FAMILY, fid))

    def _membership(self, fid: int, point: GrassPoint) -> List[Value]:
        """
        Parameter values at which the family passes through ``point``.

        Raises:
            NotOverBaseField: If the point can only be matched at parameter
                values outside the rationals.
        """
        family = self.families[fid]
        generic = family.generic
        name = family.parameter
        point = point.coerce(self.tower)
        candidates = family.candidates
        decisive = True

        if generic.space.pivots == point.space.pivots:
            decisive = False
            for row_g, row_p in zip(generic.space.rows, point.space.rows):
                for x, y in zip(row_g, row_p):
                    difference = x - y
                    if is_zero(difference):
                        continue
                    if name not in free_symbols(difference):
                        decisive = True
                        continue
                    roots, splits = split_roots(difference, name)
                    decisive = decisive or splits
                    candidates += [r for r in roots if r not in candidates]

        matches = [
            value
            for value in candidates
            if self._family_point(fid, value).space == point.space
        ]
        if not matches and not decisive:
            raise NotOverBaseField(
                f"{format_point(point)} meets the family {format_point(generic)} "
                "only over an extension of the rationals"
            )
        return matches

    # Strata

    def _shared(self) -> Set[Node]:
        graph = nx.DiGraph()
        graph.add_edges_from(self.edges)
        shared: Set[Node] = set()
        for i, cls in enumerate(self.classes):
            node = ("class", i)
            if cls.orbit_dim >= 1 and node in graph:
                shared |= nx.descendants(graph, node)
        return shared

    def _specials(self, fid: int, shared: Set[Node]) -> Dict[Value, int]:
        family = self.families[fid]
        specials: Dict[Value, int] = {}
        for value, cid in family.closure.items():
            cls = self.classes[cid]
            if cls.signature != family.signature or ("class", cid) in shared:
                specials[value] = cid
        for kind, cid in sorted(shared):
            if kind != "class" or cid in specials.values():
                continue
            if self.classes[cid].orbit_dim != 0:
                continue
            matches = self._membership(fid, self.classes[cid].representative)
            if matches:
                specials.setdefault(matches[0], cid)
        return dict(sorted(specials.items(), key=lambda item: _value_key(item[0])))

    def _strata(self) -> List[Stratum]:
        shared = self._shared()
        specials = {
            fid: self._specials(fid, shared) for fid in range(len(self.families))
        }
        promoted = {
            fid: all(
                ("class", cid) not in shared and self.classes[cid].orbit_dim == 0
                for cid in specials[fid].values()
            )
            for fid in specials
        }

        absorbed: Dict[int, int] = {}
        kept_specials: Set[int] = set()
        for fid, family in enumerate(self.families):
            special_ids = set(specials[fid].values())
            if promoted[fid]:
                for cid in special_ids:
                    absorbed.setdefault(cid, fid)
            else:
                kept_specials |= special_ids
            for cid in family.closure.values():
                if cid not in special_ids:
                    absorbed.setdefault(cid, fid)
        for cid, cls in enumerate(self.classes):
            if cls.orbit_dim != 0 or cid in absorbed or cid in kept_specials:
                continue
            for fid in range(len(self.families)):
                if self._membership(fid, cls.representative):
                    absorbed[cid] = fid
                    break

        def resolve(node: Node) -> Node:
            if node[0] == "class" and node[1] in absorbed:
                return (FAMILY, absorbed[node[1]])
            return node

        survivors = [i for i in range(len(self.classes)) if i not in absorbed]
        orbit_nodes = sorted(
            (("class", i) for i in survivors if self.classes[i].orbit_dim >= 1),
            key=lambda n: (-self.classes[n[1]].orbit_dim, self.classes[n[1]].key),
        )
        family_nodes = [(FAMILY, fid) for fid in range(len(self.families))]
        point_nodes = sorted(
            (("class", i) for i in survivors if self.classes[i].orbit_dim == 0),
            key=lambda n: self.classes[n[1]].key,
        )
        order = [TOP] + orbit_nodes + family_nodes + point_nodes
        labels = {node: f"S{i}" for i, node in enumerate(order)}
        position = {node: i for i, node in enumerate(order)}

        incoming: Dict[Node, Set[Node]] = {node: set() for node in order}
        for source, target in self.edges:
            source, target = resolve(source), resolve(target)
            if source != target and source in incoming and target in incoming:
                incoming[target].add(source)

        def reached(node: Node) -> Tuple[str, ...]:
            return tuple(labels[n] for n in sorted(incoming[node], key=position.get))

        strata = []
        for node in order[1:]:
            kind, index = node
            if kind == FAMILY:
                family = self.families[index]
                r = 0 if promoted[index] else len(specials[index])
                base, punctures = _family_base(r)
                strata.append(
                    Stratum(
                        labels[node],
                        FAMILY,
                        family.generic,
                        0,
                        base,
                        2 - r,
                        punctures,
                        family.parameter,
                        ()
                        if promoted[index]
                        else tuple(value_text(v) for v in specials[index]),
                        reached(node),
                    )
                )
                continue
            cls = self.classes[index]
            strata.append(
                Stratum(
                    labels[node],
                    ORBIT if cls.orbit_dim >= 1 else POINT,
                    cls.representative,
                    cls.orbit_dim,
                    "point",
                    1,
                    reached_from=reached(node),
                )
            )
        return strata


def _family_base(specials: int) -> Tuple[str, int]:
    if specials == 0:
        return "projective-line", 0
    if specials == 1:
        return "affine-line", 0
    return "affine-line-minus-points", specials - 1


def enumerate_boundary(
    descriptor: OrbitDescriptor,
    max_exponent: int = DEFAULT_MAX_EXPONENT,
    samples: Optional[Iterable[Any]] = None,
    jobs: int = 1,
    verbose: bool = False,
) -> List[Stratum]:
    """
    Boundary strata of the closure of the orbit described by ``descriptor``.

    Raises:
        InconclusiveClassification: If sampled limits disagree with the
            generic classification.
        NotOverBaseField: If a class meets a family only over an extension.
    """
    if descriptor.m == 0:
        return []
    enumerator = BoundaryEnumerator(descriptor, max_exponent, samples, jobs, verbose)
    return enumerator.run()


def open_stratum(descriptor: OrbitDescriptor) -> Stratum:
    return Stratum(
        "S0", OPEN, descriptor.representative, descriptor.m, "affine-space", 1
    )


def _closure_table(graph: nx.DiGraph, size: int) -> Tuple[Tuple[bool, ...], ...]:
    closure = nx.transitive_closure(graph, reflexive=True)
    return tuple(
        tuple(closure.has_edge(i, j) for j in range(size)) for i in range(size)
    )


def _assemble(nodes: Sequence[Stratum]) -> DegenPoset:
    index = {stratum.label: i for i, stratum in enumerate(nodes)}
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(nodes)))
    for j, stratum in enumerate(nodes):
        if j == 0:
            continue
        graph.add_edge(0, j)
        for source in stratum.reached_from:
            graph.add_edge(index[source], j)
    if not nx.is_directed_acyclic_graph(graph):
        raise InconclusiveClassification("the degeneration relation has a cycle")
    reduced = nx.transitive_reduction(graph)
    edges = tuple(sorted(reduced.edges()))
    return DegenPoset(tuple(nodes), edges, _closure_table(graph, len(nodes)))


def build_poset(descriptor: OrbitDescriptor, strata: Sequence[Stratum]) -> DegenPoset:
    """The open orbit plus ``strata``, ordered by degeneration and reduced."""
    return _assemble([open_stratum(descriptor)] + list(strata))


def euler_characteristic(poset: DegenPoset) -> int:
    return sum(node.chi for node in poset.nodes)


def check_chi_bounds(poset: DegenPoset) -> ChiReport:
    """Compare χ(boundary) with t+1 and 2t, t = number of boundary curves."""
    chi = euler_characteristic(poset)
    boundary = poset.nodes[1:]
    boundary_chi = chi - poset.nodes[0].chi
    t = sum(
        1
        for node in boundary
        if node.kind == FAMILY or (node.kind == ORBIT and node.orbit_dim == 1)
    )
    graph = nx.Graph()
    graph.add_nodes_from(range(1, len(poset.nodes)))
    graph.add_edges_from((i, j) for i, j in poset.edges if i != 0 and j != 0)
    connected = bool(boundary) and nx.is_connected(graph)
    return ChiReport(
        chi=chi,
        boundary_chi=boundary_chi,
        strata=len(poset.nodes),
        t=t,
        within_t_plus_one=boundary_chi <= t + 1,
        within_two_t=boundary_chi <= 2 * t,
        connected=connected,
    )


def _point_to_json(point: GrassPoint) -> Dict[str, Any]:
    return {
        "tower": list(point.tower.parameters),
        "rows": [[scalar_to_string(x) for x in row] for row in point.space.rows],
    }


def _point_from_json(document: Dict[str, Any], module: ProjectiveModule) -> GrassPoint:
    tower = ScalarTower(document.get("tower", []))
    rows = [[tower.parse(x) for x in row] for row in document["rows"]]
    return GrassPoint(module, Subspace.span(rows, module.radical_dim, tower))


def poset_to_json(poset: DegenPoset) -> Dict[str, Any]:
    report = check_chi_bounds(poset)
    return {
        "nodes": [
            {
                "label": node.label,
                "kind": node.kind,
                "orbit_dim": node.orbit_dim,
                "base": node.base,
                "punctures": node.punctures,
                "chi": node.chi,
                "parameter": node.parameter,
                "special_values": list(node.special_values),
                "reached_from": list(node.reached_from),
                "representative": _point_to_json(node.representative),
            }
            for node in poset.nodes
        ],
        "edges": [list(edge) for edge in poset.edges],
        "chi": report.chi,
        "status": report.status,
    }


def poset_from_json(document: Dict[str, Any], module: ProjectiveModule) -> DegenPoset:
    """
    Rebuild a poset written by ``poset_to_json``.

    Raises:
        ParseError: If the document is missing fields or refers to unknown
            strata.
    """
    try:
        nodes = [
            Stratum(
                label=item["label"],
                kind=item["kind"],
                representative=_point_from_json(item["representative"], module),
                orbit_dim=int(item["orbit_dim"]),
                base=item["base"],
                chi=int(item["chi"]),
                punctures=int(item.get("punctures", 0)),
                parameter=item.get("parameter"),
                special_values=tuple(item.get("special_values", ())),
                reached_from=tuple(item.get("reached_from", ())),
            )
            for item in document["nodes"]
        ]
        poset = _assemble(nodes)
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"invalid poset document: {e}") from e
    stored = tuple(tuple(edge) for edge in document.get("edges", poset.edges))
    if stored != poset.edges:
        raise ParseError("poset edges do not match the recorded strata")
    return poset


def dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def poset_to_dot(poset: DegenPoset) -> str:
    lines = ["digraph degenerations {", "  node [shape=box];"]
    for node in poset.nodes:
        label = "\\n".join(
            dot_escape(part)
            for part in (node.label, node.describe(), format_point(node.representative))
        )
        lines.append(f'  {node.label} [label="{label}"];')
    for i, j in poset.edges:
        lines.append(f"  {poset.nodes[i].label} -> {poset.nodes[j].label};")
    lines.append("}")
    return "\n".join(lines) + "\n"
