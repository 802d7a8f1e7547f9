"""
The Bruhat graph of a Schubert variety X(w) in G/B.

Vertices are the fixed points ``[e, w]``; ``x`` and ``r_g x`` are joined when
both lie in ``[e, w]``. Each edge is a T-stable curve; at ``x`` its tangent
line has the weight ``d`` in ``{g, -g}`` with ``x^-1(d) < 0``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .rootsystem import Root, format_root
from .weyl import (
    WeylElement, _reflection_perm, enumerate_interval, format_word,
)

__all__ = [
    "Direction", "CurveRecord", "BruhatGraph", "build_graph", "curves_at",
    "degree", "export_dot", "export_json", "NotInIntervalError",
]


class NotInIntervalError(ValueError):
    """A fixed point outside ``[e, w]`` was passed where ``x <= w`` is required."""


class Direction(str, Enum):
    UP = "UP"
    DOWN = "DOWN"


@dataclass(frozen=True)
class CurveRecord:
    base: WeylElement
    other: WeylElement
    gamma_pos: Root
    tangent_weight: Root
    direction: Direction
    length_class: str  # "long" or "short"

    def to_dict(self) -> dict:
        return {
            "base": format_word(self.base),
            "other": format_word(self.other),
            "gamma": format_root(self.gamma_pos),
            "tangent_weight": format_root(self.tangent_weight),
            "direction": self.direction.value,
            "length_class": self.length_class,
        }


def _vertex_key(x: WeylElement):
    return (x.length, x.reduced_word)


class BruhatGraph:
    """Immutable once built; use ``build_graph`` for the memoized instance."""

    def __init__(self, w: WeylElement):
        self.w = w
        self.system = w.system
        self.vertices: frozenset[WeylElement] = enumerate_interval(w)
        self.ordered_vertices: tuple[WeylElement, ...] = tuple(
            sorted(self.vertices, key=_vertex_key))
        rs = self.system
        half = len(rs.all_roots) // 2
        curves: dict[WeylElement, tuple[CurveRecord, ...]] = {}
        for x in self.ordered_vertices:
            inv = x._inv_perm
            recs = []
            for i in range(half):
                y = WeylElement(rs, _reflection_perm(rs, i)) * x
                if y not in self.vertices:
                    continue
                g = rs.all_roots[i]
                up = inv[i] < half  # x^-1(g) > 0 means r_g x > x
                recs.append(CurveRecord(
                    base=x, other=y, gamma_pos=g,
                    tangent_weight=rs.all_roots[i + half] if up else g,
                    direction=Direction.UP if up else Direction.DOWN,
                    length_class="long" if rs.is_long(g) else "short",
                ))
            curves[x] = tuple(recs)
        self._curves = curves

    def __repr__(self):
        return f"BruhatGraph({self.system.name}, w={format_word(self.w)!r})"

    def __contains__(self, x: WeylElement) -> bool:
        return x in self.vertices

    def curves_at(self, x: WeylElement) -> tuple[CurveRecord, ...]:
        try:
            return self._curves[x]
        except KeyError:
            raise NotInIntervalError(
                f"{format_word(x)} is not <= {format_word(self.w)}") from None

    def degree(self, x: WeylElement) -> int:
        return len(self.curves_at(x))

    def up_curves(self, x: WeylElement) -> tuple[CurveRecord, ...]:
        return tuple(c for c in self.curves_at(x) if c.direction is Direction.UP)

    def down_curves(self, x: WeylElement) -> tuple[CurveRecord, ...]:
        return tuple(c for c in self.curves_at(x) if c.direction is Direction.DOWN)

    def edges(self) -> list[tuple[WeylElement, WeylElement, Root]]:
        """``(x, y, g)`` with ``y = r_g x`` and ``l(y) > l(x)``, ordered by vertex then ``g``."""
        return [(c.base, c.other, c.gamma_pos)
                for x in self.ordered_vertices
                for c in sorted(self.up_curves(x), key=lambda c: c.gamma_pos)]

    def upper_set(self, x: WeylElement) -> set[WeylElement]:
        """``{y in [e, w] : y >= x}``, by climbing UP edges."""
        seen = {x}
        frontier = [x]
        while frontier:
            nxt = []
            for z in frontier:
                for c in self.up_curves(z):
                    if c.other not in seen:
                        seen.add(c.other)
                        nxt.append(c.other)
            frontier = nxt
        return seen

    def lower_set(self, x: WeylElement) -> set[WeylElement]:
        seen = {x}
        frontier = [x]
        while frontier:
            nxt = []
            for z in frontier:
                for c in self.down_curves(z):
                    if c.other not in seen:
                        seen.add(c.other)
                        nxt.append(c.other)
            frontier = nxt
        return seen


@lru_cache(maxsize=4096)
def build_graph(w: WeylElement) -> BruhatGraph:
    return BruhatGraph(w)


def curves_at(G: BruhatGraph, x: WeylElement) -> tuple[CurveRecord, ...]:
    return G.curves_at(x)


def degree(G: BruhatGraph, x: WeylElement) -> int:
    return G.degree(x)


def export_dot(G: BruhatGraph) -> str:
    """DOT text; vertices labelled by reduced words, edges by the positive root."""
    index = {x: k for k, x in enumerate(G.ordered_vertices)}
    lines = [f'graph "{G.system.name} {format_word(G.w)}" {{']
    for x in G.ordered_vertices:
        lines.append(f'  v{index[x]} [label="{format_word(x)}"];')
    for x, y, g in G.edges():
        lines.append(f'  v{index[x]} -- v{index[y]} [label="{format_root(g)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_dict(G: BruhatGraph) -> dict:
    index = {x: k for k, x in enumerate(G.ordered_vertices)}
    return {
        "schema": "schubsing/graph/v1",
        "system": G.system.name,
        "w": format_word(G.w),
        "vertices": [{"word": format_word(x), "length": x.length, "degree": G.degree(x)}
                     for x in G.ordered_vertices],
        "edges": [{"source": index[x], "target": index[y], "gamma": list(g)}
                  for x, y, g in G.edges()],
    }


def export_json(G: BruhatGraph) -> str:
    return json.dumps(graph_dict(G), indent=2)
