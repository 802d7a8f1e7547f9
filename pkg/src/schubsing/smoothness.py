"""
Smooth and singular fixed points of a Schubert variety X(w) in G/B.

A fixed point x is smooth exactly when

1. x has ``l(w)`` T-curves and at least one of them is good (meets the
   smooth locus),
2. TE(X, x) is stable under the isotropy group ``B_x``, and
3. for every orthogonal B2-pair ``{mu, phi}`` at x, ``-(mu + phi)/2`` is a
   weight of TE(X, x).

``singular_locus`` walks ``[e, w]`` by decreasing length, so that the points
above x are classified before x and an upward neighbour that is already known
to be smooth serves as the good curve. No recursion is needed.
"""

from __future__ import annotations

import json
import random
from collections.abc import Collection
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Optional

from .bruhatgraph import BruhatGraph, CurveRecord, NotInIntervalError, build_graph
from .rootsystem import format_root
from .tangent import (
    PreconditionError, b2_pairs, isotropy_closure, is_isotropy_stable,
    multiplicity_at, te_module,
)
from .weyl import WeylElement, format_word

__all__ = [
    "Verdict", "PointVerdict", "SmoothnessReport", "is_smooth_at",
    "singular_locus", "smooth_points", "good_curve_exists",
]


class Verdict(str, Enum):
    SMOOTH = "SMOOTH"
    SINGULAR = "SINGULAR"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class PointVerdict:
    x: WeylElement
    verdict: Verdict
    # "degree", "isotropy", "b2pair", or "below-singular" (driver shortcut)
    failed: Optional[str] = None
    witness: Optional[CurveRecord] = None
    detail: dict = field(default_factory=dict, compare=False)

    @property
    def smooth(self) -> bool:
        return self.verdict is Verdict.SMOOTH

    def to_dict(self) -> dict:
        d = {"x": format_word(self.x), "verdict": self.verdict.value}
        if self.witness is not None:
            d["witness"] = self.witness.to_dict()
        if self.failed is not None:
            d["failed"] = self.failed
            d["detail"] = self.detail
        return d


def _refuse_g2(w: WeylElement):
    if w.system.family == "G":
        raise PreconditionError("smoothness tests are not available for G2")


def good_curve_exists(w: WeylElement, x: WeylElement,
                      known_smooth: Collection[WeylElement],
                      rng: Optional[random.Random] = None) -> Optional[CurveRecord]:
    """
    A curve at x through a known smooth point: an upward one if possible
    (least positive root, or a random one when ``rng`` is given), otherwise a
    downward one.
    """
    G = build_graph(w)
    for curves in (G.up_curves(x), G.down_curves(x)):
        good = sorted((c for c in curves if c.other in known_smooth),
                      key=lambda c: c.gamma_pos)
        if good:
            return rng.choice(good) if rng is not None else good[0]
    return None


def is_smooth_at(w: WeylElement, x: WeylElement,
                 known_smooth: Collection[WeylElement],
                 rng: Optional[random.Random] = None) -> PointVerdict:
    """
    Decide smoothness of X(w) at x given some certified smooth points.

    Returns INCONCLUSIVE when the curve count is right but no curve at x is
    known to be good.
    """
    _refuse_g2(w)
    G = build_graph(w)
    if x not in G:
        raise NotInIntervalError(f"{format_word(x)} is not <= {format_word(w)}")
    if x == w:
        return PointVerdict(x, Verdict.SMOOTH)
    deg = G.degree(x)
    if deg != w.length:
        return PointVerdict(x, Verdict.SINGULAR, "degree", None,
                            {"degree": deg, "length": w.length})
    witness = good_curve_exists(w, x, known_smooth, rng)
    if witness is None:
        return PointVerdict(x, Verdict.INCONCLUSIVE)
    te = te_module(w, x)
    if not is_isotropy_stable(x, te.weights):
        extra = isotropy_closure(w, x, te).weights - te.weights
        return PointVerdict(x, Verdict.SINGULAR, "isotropy", witness,
                            {"missing": [format_root(g) for g in sorted(extra)]})
    for pair in b2_pairs(w, x):
        if pair.gamma not in te.weights:
            return PointVerdict(x, Verdict.SINGULAR, "b2pair", witness, pair.to_dict())
    return PointVerdict(x, Verdict.SMOOTH, None, witness)


@dataclass
class SmoothnessReport:
    w: WeylElement
    verdicts: dict[WeylElement, PointVerdict]
    maximal_singularities: frozenset[WeylElement]
    multiplicities: dict[WeylElement, int]

    @property
    def smooth_points(self) -> frozenset[WeylElement]:
        return frozenset(x for x, v in self.verdicts.items() if v.smooth)

    @property
    def singular_points(self) -> frozenset[WeylElement]:
        return frozenset(x for x, v in self.verdicts.items() if not v.smooth)

    @property
    def is_smooth(self) -> bool:
        return not self.singular_points

    def verdict_map(self) -> dict[WeylElement, bool]:
        return {x: v.smooth for x, v in self.verdicts.items()}

    def to_dict(self) -> dict:
        G = build_graph(self.w)
        return {
            "schema": "schubsing/smooth/v1",
            "system": self.w.system.name,
            "w": format_word(self.w),
            "smooth": self.is_smooth,
            "verdicts": [self.verdicts[x].to_dict() for x in G.ordered_vertices],
            "maximal_singularities": [format_word(x) for x in G.ordered_vertices
                                      if x in self.maximal_singularities],
            "multiplicities": {format_word(x): m for x, m in
                               sorted(self.multiplicities.items(),
                                      key=lambda kv: (kv[0].length, kv[0].reduced_word))},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _classify(w: WeylElement, G: BruhatGraph, shortcut: bool,
              rng: Optional[random.Random]) -> dict[WeylElement, PointVerdict]:
    verdicts: dict[WeylElement, PointVerdict] = {}
    known_smooth: set[WeylElement] = set()
    # length levels, top first; within a level verdicts are independent
    for x in reversed(G.ordered_vertices):
        if shortcut and G.degree(x) == w.length:
            bad = next((c for c in sorted(G.up_curves(x), key=lambda c: c.gamma_pos)
                        if not verdicts[c.other].smooth), None)
            if bad is not None:
                verdicts[x] = PointVerdict(x, Verdict.SINGULAR, "below-singular", None,
                                           {"above": format_word(bad.other)})
                continue
        v = is_smooth_at(w, x, known_smooth, rng)
        if v.verdict is Verdict.INCONCLUSIVE:
            # every curve at x leads up to a singular point
            assert all(not verdicts[c.other].smooth for c in G.up_curves(x)), \
                "driver order must classify all upward neighbours first"
            v = PointVerdict(x, Verdict.SINGULAR, "degree", None,
                             {"degree": G.degree(x), "length": w.length,
                              "good_curve": None})
        verdicts[x] = v
        if v.smooth:
            known_smooth.add(x)
    return verdicts


def singular_locus(w: WeylElement, *, shortcut: bool = True,
                   rng: Optional[random.Random] = None) -> SmoothnessReport:
    """
    Classify every fixed point of X(w).

    With ``shortcut`` a point with the right curve count that lies below a
    singular neighbour is marked singular without running the remaining
    conditions. ``rng`` randomizes the choice of good curve.
    """
    if rng is None:
        return _singular_locus_cached(w, shortcut)
    return _singular_locus(w, shortcut, rng)


@lru_cache(maxsize=4096)
def _singular_locus_cached(w: WeylElement, shortcut: bool) -> SmoothnessReport:
    return _singular_locus(w, shortcut, None)


def _singular_locus(w, shortcut, rng) -> SmoothnessReport:
    _refuse_g2(w)
    G = build_graph(w)
    verdicts = _classify(w, G, shortcut, rng)
    maximal = frozenset(
        x for x, v in verdicts.items()
        if not v.smooth and all(verdicts[c.other].smooth for c in G.up_curves(x)))
    smooth = frozenset(x for x, v in verdicts.items() if v.smooth)
    mult = {}
    for x in maximal:
        if G.degree(x) == w.length:
            mu = min(c.gamma_pos for c in G.up_curves(x))
            mult[x] = multiplicity_at(w, x, mu, smooth)
    return SmoothnessReport(w, verdicts, maximal, mult)


def smooth_points(w: WeylElement) -> frozenset[WeylElement]:
    return singular_locus(w).smooth_points
