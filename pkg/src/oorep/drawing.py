"""Straight-line drawings with exact rational coordinates."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property
from typing import TYPE_CHECKING, Sequence

from .graph import EmbeddedGraph, Graph, build_graph
from .predicates import angular_sort, to_integer_points

if TYPE_CHECKING:
    from .recognize import InnerChordalGraph

RationalPoint = tuple[Fraction, Fraction]


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise ValueError(f"rational must be a 'p/q' string, got {s!r}")
    return Fraction(s)


@dataclass(frozen=True)
class Drawing:
    points: tuple[RationalPoint, ...]
    graph: Graph
    ic: "InnerChordalGraph | None" = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if len(self.points) != self.graph.n:
            raise ValueError("one point per vertex required")
        pts = tuple((Fraction(x), Fraction(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)

    @cached_property
    def int_points(self) -> list[tuple[int, int]]:
        return to_integer_points(self.points)[0]

    @cached_property
    def rotation(self) -> tuple[tuple[int, ...], ...]:
        """Counterclockwise neighbour order read off the coordinates."""
        P = self.int_points
        return tuple(tuple(angular_sort(P[v], [(w, P[w]) for w in self.graph.adj[v]]))
                     for v in range(self.graph.n))

    @cached_property
    def embedding(self) -> EmbeddedGraph:
        """Rotation system of the drawing; assumes the drawing is plane and connected."""
        P = self.int_points
        low = min(range(self.graph.n), key=lambda v: (P[v][1], P[v][0]))
        rot = self.rotation
        return EmbeddedGraph(self.graph, rot, (rot[low][0], low))

    def max_denominator_bits(self) -> int:
        return max((max(x.denominator.bit_length(), y.denominator.bit_length())
                    for x, y in self.points), default=0)

    def moved(self, v: int, p: Sequence) -> "Drawing":
        pts = list(self.points)
        pts[v] = (Fraction(p[0]), Fraction(p[1]))
        return replace(self, points=tuple(pts))

    def without_structure(self) -> "Drawing":
        return replace(self, ic=None)

    def to_json(self) -> dict:
        return {
            "points": [[format_rational(x), format_rational(y)] for x, y in self.points],
            "edges": [list(e) for e in self.graph.sorted_edges()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Drawing":
        pts = tuple((parse_rational(x), parse_rational(y)) for x, y in data["points"])
        return cls(pts, build_graph(len(pts), data["edges"]))
