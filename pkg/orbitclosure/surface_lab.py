"""
Intersection bookkeeping for curves on smooth rational surfaces.

A configuration records curves with their self-intersections, the
transverse crossing points between them and the Picard rank. Blow-ups and
blow-downs update all three.
"""
from collections import Counter
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .degen import dot_escape
from .errors import InvalidPoint, NotMinusOne, ParseError

Crossing = Tuple[str, str]


@dataclass(frozen=True)
class Curve:
    name: str
    self_intersection: int


@dataclass(frozen=True)
class CurveConfig:
    """Curves in insertion order and crossings as a sorted multiset of pairs."""

    curves: Tuple[Curve, ...]
    crossings: Tuple[Crossing, ...]
    picard_rank: int

    def __post_init__(self) -> None:
        if self.picard_rank < 1:
            raise ValueError(f"picard rank must be positive, got {self.picard_rank}")
        names = [curve.name for curve in self.curves]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate curve names in {names}")
        for a, b in self.crossings:
            if a not in names or b not in names:
                raise ValueError(f"crossing {a}/{b} references an undeclared curve")

    @property
    def names(self) -> List[str]:
        return [curve.name for curve in self.curves]

    def curve(self, name: str) -> Curve:
        for curve in self.curves:
            if curve.name == name:
                return curve
        raise InvalidPoint(f"no curve named {name!r}")

    def self_intersection(self, name: str) -> int:
        return self.curve(name).self_intersection

    def meets(self, a: str, b: str) -> int:
        """Number of crossing points between two distinct curves."""
        return self.crossings.count(_pair(a, b))

    def crossings_with(self, name: str) -> Dict[str, int]:
        counts: Dict[str, int] = {}
        for a, b in self.crossings:
            if a == name:
                counts[b] = counts.get(b, 0) + 1
            elif b == name:
                counts[a] = counts.get(a, 0) + 1
        return counts


def _pair(a: str, b: str) -> Crossing:
    return (a, b) if a <= b else (b, a)


def make_config(
    curves: Sequence[Tuple[str, int]],
    crossings: Sequence[Tuple[str, str]] = (),
    picard_rank: int = 1,
) -> CurveConfig:
    return CurveConfig(
        tuple(Curve(name, int(value)) for name, value in curves),
        tuple(sorted(_pair(a, b) for a, b in crossings)),
        picard_rank,
    )


def _fresh_name(config: CurveConfig, stem: str = "E") -> str:
    index = 1
    while f"{stem}{index}" in config.names:
        index += 1
    return f"{stem}{index}"


def blow_up(
    config: CurveConfig, through: Sequence[str] = (), name: Optional[str] = None
) -> CurveConfig:
    """
    Blow up one point lying on at most two of the curves.

    ``through`` is empty for a point on no curve, one name for a general
    point of that curve, or two names for one of their crossing points.

    Raises:
        InvalidPoint: If the curves are unknown, equal, more than two, or do
            not cross.
    """
    through = list(through)
    if len(through) > 2:
        raise InvalidPoint("a blow-up centre lies on at most two curves")
    for curve in through:
        config.curve(curve)
    if len(through) == 2:
        a, b = through
        if a == b:
            raise InvalidPoint(f"{a} cannot cross itself here")
        if not config.meets(a, b):
            raise InvalidPoint(f"{a} and {b} do not cross")

    exceptional = name or _fresh_name(config)
    if exceptional in config.names:
        raise InvalidPoint(f"curve name {exceptional!r} is already used")

    curves = [
        Curve(c.name, c.self_intersection - 1) if c.name in through else c
        for c in config.curves
    ]
    curves.append(Curve(exceptional, -1))

    crossings = list(config.crossings)
    if len(through) == 2:
        crossings.remove(_pair(*through))
    crossings.extend(_pair(c, exceptional) for c in through)

    return CurveConfig(tuple(curves), tuple(sorted(crossings)), config.picard_rank + 1)


def blow_down(config: CurveConfig, name: str) -> CurveConfig:
    """
    Contract a curve of self-intersection -1.

    A curve meeting it k times gains k^2 in self-intersection, and two
    curves meeting it k_A and k_B times gain k_A * k_B crossings.

    Raises:
        InvalidPoint: If the curve is unknown.
        NotMinusOne: If its self-intersection is not -1.
    """
    target = config.curve(name)
    if target.self_intersection != -1:
        raise NotMinusOne(
            f"{name} has self-intersection {target.self_intersection}, expected -1"
        )
    meeting = config.crossings_with(name)

    curves = tuple(
        Curve(c.name, c.self_intersection + meeting.get(c.name, 0) ** 2)
        for c in config.curves
        if c.name != name
    )
    crossings = [pair for pair in config.crossings if name not in pair]
    others = [c.name for c in curves if c.name in meeting]
    for i, a in enumerate(others):
        for b in others[i + 1 :]:
            crossings.extend([_pair(a, b)] * (meeting[a] * meeting[b]))

    return CurveConfig(curves, tuple(sorted(crossings)), config.picard_rank - 1)


def rename(config: CurveConfig, old: str, new: str) -> CurveConfig:
    config.curve(old)
    if new != old and new in config.names:
        raise InvalidPoint(f"curve name {new!r} is already used")

    def swap(n: str) -> str:
        return new if n == old else n

    curves = tuple(Curve(swap(c.name), c.self_intersection) for c in config.curves)
    crossings = tuple(sorted(_pair(swap(a), swap(b)) for a, b in config.crossings))
    return CurveConfig(curves, crossings, config.picard_rank)


def hirzebruch(n: int) -> CurveConfig:
    """
    Run the elementary transformation n times starting from P1 x P1.

    Each round blows up the crossing of D<i> and D'<i>, contracts the proper
    transform of D<i>, and renames the exceptional curve to D<i+1> and the
    transform of D'<i> to D'<i+1>. Under this naming the negative section
    is D'<n> with self-intersection -n and the fibre class D<n> has
    self-intersection 0.
    """
    if n < 0 or n == 1:
        raise ValueError(f"hirzebruch needs n >= 0 and n != 1, got {n}")
    config = make_config([("D0", 0), ("D'0", 0)], [("D0", "D'0")], picard_rank=2)
    for i in range(n):
        config = blow_up(config, [f"D{i}", f"D'{i}"], name=f"F{i}")
        config = blow_down(config, f"D{i}")
        config = rename(config, f"F{i}", f"D{i + 1}")
        config = rename(config, f"D'{i}", f"D'{i + 1}")
    if config.picard_rank != 2 or config.self_intersection(f"D'{n}") != -n:
        raise AssertionError(f"elementary transformations did not reach X_{n}")
    return config


@dataclass(frozen=True)
class SurfaceReport:
    chi: int
    picard_rank: int
    candidates: Tuple[str, ...]
    notes: Tuple[str, ...] = ()

    def lines(self) -> List[str]:
        out = [
            f"chi = {self.chi}, picard rank = {self.picard_rank}",
            "candidates: " + "; ".join(self.candidates),
        ]
        out.extend(f"note: {note}" for note in self.notes)
        return out


def identify_surface(chi: int, config: Optional[CurveConfig] = None) -> SurfaceReport:
    """
    Heuristic list of smooth rational surfaces with Euler characteristic chi.

    The Picard rank of a smooth rational surface is chi - 2. Rank 1 is P2,
    rank 2 a Hirzebruch surface, and higher ranks are blow-ups of those.
    """
    rank = chi - 2
    notes = []
    if rank < 1:
        candidates: Tuple[str, ...] = ("no smooth rational surface",)
    elif rank == 1:
        candidates = ("P2",)
    elif rank == 2:
        candidates = ("X0 = P1 x P1", "X_n for some n >= 2")
    else:
        candidates = (
            f"P2 blown up at {rank - 1} points",
            f"X0 or X_n (n >= 2) blown up at {rank - 2} points",
        )
    if config is not None:
        for curve in config.curves:
            if curve.self_intersection <= -2:
                notes.append(
                    f"{curve.name} has self-intersection {curve.self_intersection}; "
                    "contracting it gives a singular surface"
                )
    return SurfaceReport(chi, rank, candidates, tuple(notes))


def config_to_json(config: CurveConfig) -> Dict[str, Any]:
    return {
        "curves": [[c.name, c.self_intersection] for c in config.curves],
        "crossings": [list(pair) for pair in config.crossings],
        "picard_rank": config.picard_rank,
    }


def config_from_json(document: Dict[str, Any]) -> CurveConfig:
    """
    Raises:
        ParseError: If the document does not describe a configuration.
    """
    try:
        return make_config(
            [(str(name), int(value)) for name, value in document["curves"]],
            [(str(a), str(b)) for a, b in document.get("crossings", [])],
            int(document.get("picard_rank", 1)),
        )
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"invalid curve configuration: {e}") from e


def config_lines(config: CurveConfig) -> List[str]:
    lines = [f"{c.name}^2 = {c.self_intersection}" for c in config.curves]
    for (a, b), count in sorted(Counter(config.crossings).items()):
        lines.append(f"{a} . {b} = {count}")
    lines.append(f"picard rank = {config.picard_rank}")
    return lines


def config_to_dot(config: CurveConfig) -> str:
    """The dual graph: one node per curve, one edge per crossing point."""
    lines = ["graph curves {"]
    for curve in config.curves:
        name = dot_escape(curve.name)
        label = f"{name}\\n{curve.self_intersection}"
        lines.append(f'  "{name}" [label="{label}"];')
    for a, b in config.crossings:
        lines.append(f'  "{dot_escape(a)}" -- "{dot_escape(b)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
