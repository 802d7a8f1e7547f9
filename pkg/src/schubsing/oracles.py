"""
Independent checks for the smoothness algorithm.

* ``rationally_smooth_at``: the edge-count criterion, every ``y`` in
  ``[x, w]`` has exactly ``l(w)`` T-curves.
* ``pattern_smooth_typeA``: in type A, X(w) is smooth iff the permutation
  ``w`` avoids 3412 and 4231.
* ``bruhat_leq_bruteforce``: reachability in the cover digraph of W.
* ``exhaustive_verify``: run the singular-locus driver on every ``w`` of a
  small Weyl group and compare against the oracles and the structural
  invariants of translates, tangent-cone spans and B2-pairs.

Type A permutations use one-line notation on ``1..n+1``; ``s_i`` is the
adjacent transposition ``(i, i+1)`` and a word is multiplied left to right,
so the permutation of ``s_{i1} ... s_{ik}`` maps ``j`` to
``s_{i1}(... s_{ik}(j))``.
"""

from __future__ import annotations

import json
import os
import random
import time
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Optional

from .bruhatgraph import build_graph
from .convex import in_convex_hull
from .rootsystem import Root, RootSystem, RootSystemError, build_root_system, format_root
from .smoothness import singular_locus
from .tangent import (
    PreconditionError, _in_tangent, _translate_weights, b2_pairs, isotropy_closure,
    isotropy_closure_one_step, multiplicity_at, te_module, theta_span,
)
from .weyl import WeylElement, _reflection_perm, all_elements, bruhat_leq, format_word, parse_word

__all__ = [
    "rationally_smooth_at", "rationally_smooth_points", "to_permutation",
    "from_permutation", "contains_pattern", "pattern_smooth_typeA",
    "bruhat_leq_bruteforce", "ScanBudgetError", "Discrepancy", "ScanResult",
    "exhaustive_verify", "verify_element", "scan_budget_ok", "summary_table",
]


class ScanBudgetError(ValueError):
    """The requested scan exceeds the configured size bound."""


# rational smoothness ------------------------------------------------------

def rationally_smooth_at(w: WeylElement, x: WeylElement) -> bool:
    """Every ``y`` with ``x <= y <= w`` has ``l(w)`` T-curves."""
    G = build_graph(w)
    return all(G.degree(y) == w.length for y in G.upper_set(x))


def rationally_smooth_points(w: WeylElement) -> frozenset[WeylElement]:
    """All rationally smooth points at once, top down through the upward edges."""
    G = build_graph(w)
    good: set[WeylElement] = set()
    for x in reversed(G.ordered_vertices):
        if G.degree(x) == w.length and all(c.other in good for c in G.up_curves(x)):
            good.add(x)
    return frozenset(good)


# type A permutations --------------------------------------------------------

def _require_type_a(rs: RootSystem) -> None:
    if rs.family != "A":
        raise RootSystemError(f"permutations need type A, got {rs.name}")


def to_permutation(x: WeylElement) -> tuple[int, ...]:
    """One-line notation of x in ``S_{n+1}``."""
    _require_type_a(x.system)
    p = list(range(1, x.system.rank + 2))
    for i in x.reduced_word:
        p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def from_permutation(rs: RootSystem, perm: Iterable[int]) -> WeylElement:
    """Inverse of ``to_permutation``, by bubble sort into a reduced word."""
    _require_type_a(rs)
    p = list(perm)
    if sorted(p) != list(range(1, rs.rank + 2)):
        raise RootSystemError(f"{p} is not a permutation of 1..{rs.rank + 1}")
    word = []
    # peel right descents: p = p' s_i with p(i) > p(i+1)
    while True:
        i = next((i for i in range(len(p) - 1) if p[i] > p[i + 1]), None)
        if i is None:
            break
        p[i], p[i + 1] = p[i + 1], p[i]
        word.append(i + 1)
    return parse_word(rs, " ".join(f"s{i}" for i in reversed(word)))


def contains_pattern(perm: tuple[int, ...], pattern: tuple[int, ...]) -> bool:
    k = len(pattern)
    for idx in combinations(range(len(perm)), k):
        vals = [perm[i] for i in idx]
        order = sorted(vals)
        if tuple(order.index(v) + 1 for v in vals) == pattern:
            return True
    return False


def pattern_smooth_typeA(perm: tuple[int, ...]) -> bool:
    """
    >>> pattern_smooth_typeA((3, 4, 1, 2)), pattern_smooth_typeA((2, 1, 4, 3))
    (False, True)
    """
    return not (contains_pattern(perm, (3, 4, 1, 2)) or contains_pattern(perm, (4, 2, 3, 1)))


# brute-force Bruhat order ---------------------------------------------------

def _bruteforce_bound() -> int:
    return int(os.environ.get("SCHUBSING_BRUTEFORCE_BOUND", "1152"))


@lru_cache(maxsize=None)
def _cover_upsets(rs: RootSystem) -> dict[WeylElement, frozenset[WeylElement]]:
    elems = all_elements(rs)
    half = len(rs.all_roots) // 2
    covers: dict[WeylElement, list[WeylElement]] = {}
    for x in elems:
        up = []
        for i in range(half):
            y = WeylElement(rs, _reflection_perm(rs, i)) * x
            if y.length == x.length + 1:
                up.append(y)
        covers[x] = up
    upsets: dict[WeylElement, frozenset[WeylElement]] = {}
    for x in reversed(elems):
        acc = {x}
        for y in covers[x]:
            acc |= upsets[y]
        upsets[x] = frozenset(acc)
    return upsets


def bruhat_leq_bruteforce(x: WeylElement, w: WeylElement, bound: Optional[int] = None) -> bool:
    """``x <= w`` iff w is reachable from x by covers ``z -> r_g z`` raising length by 1."""
    rs = w.system
    bound = _bruteforce_bound() if bound is None else bound
    if len(all_elements(rs)) > bound:
        raise ScanBudgetError(f"|W({rs.name})| = {len(all_elements(rs))} exceeds bound {bound}")
    return w in _cover_upsets(rs)[x]


# exhaustive scans -----------------------------------------------------------

_DEFAULT_BUDGET = {"A": 4, "B": 3, "C": 3, "D": 4}


def scan_budget_ok(family: str, rank: int) -> bool:
    return rank <= _DEFAULT_BUDGET.get(family, 0)


@dataclass(frozen=True)
class Discrepancy:
    w: str
    x: Optional[str]
    check: str
    algorithm: object = None
    oracle: object = None
    context: str = ""


@dataclass
class ScanResult:
    system: str
    n_elements: int
    n_singular: int
    discrepancies: list[Discrepancy] = field(default_factory=list)
    elapsed: float = 0.0
    max_per_w: float = 0.0
    checks: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def to_dict(self) -> dict:
        return {
            "schema": "schubsing/scan/v1",
            "system": self.system,
            "elements": self.n_elements,
            "singular": self.n_singular,
            "discrepancies": [{k: (v if isinstance(v, (str, int, bool, type(None))) else str(v))
                               for k, v in asdict(d).items()} for d in self.discrepancies],
            "checks": dict(sorted(self.checks.items())),
            "elapsed": round(self.elapsed, 3),
            "max_per_w": round(self.max_per_w, 4),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def summary_table(results: Iterable[ScanResult]) -> str:
    rows = [("system", "#w", "#singular w", "discrepancies", "max s/w", "total s")]
    for r in results:
        rows.append((r.system, str(r.n_elements), str(r.n_singular),
                     str(len(r.discrepancies)), f"{r.max_per_w:.3f}", f"{r.elapsed:.2f}"))
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(wd) for c, wd in zip(row, widths)) for row in rows)


class _Checker:
    def __init__(self, w: WeylElement):
        self.w = w
        self.found: list[Discrepancy] = []
        self.counts: dict[str, int] = {}

    def __call__(self, name: str, ok: bool, x=None, algorithm=None, oracle=None, context=""):
        self.counts[name] = self.counts.get(name, 0) + 1
        if not ok:
            self.found.append(Discrepancy(format_word(self.w), None if x is None else format_word(x),
                                          name, algorithm, oracle, context))


def _fmt(weights) -> str:
    return "{" + ", ".join(format_root(g) for g in sorted(weights)) + "}"


def _half(a: Root, b: Root) -> Optional[Root]:
    s = [i + j for i, j in zip(a, b)]
    if any(c % 2 for c in s):
        return None
    return tuple(c // 2 for c in s)


def _check_translates(check: _Checker, w, x, te, smooth, x_smooth):
    rs = w.system
    G = build_graph(w)
    translates = {}
    for c in G.up_curves(x):
        if c.other not in smooth:
            continue
        mu = c.gamma_pos
        tau = _translate_weights(w, x, mu)
        translates[mu] = tau
        check("translate-size", len(tau) == w.length, x, len(tau), w.length, format_root(mu))
        check("translate-in-tangent", all(_in_tangent(x, g) for g in tau), x, context=format_root(mu))
        if x_smooth:
            check("translate-equals-TE-when-smooth", tau == te, x, _fmt(tau), _fmt(te), format_root(mu))
        if rs.is_short(mu):
            check("short-translate-in-TE", tau <= te, x, _fmt(tau - te), "{}", format_root(mu))
        closed = all(h in tau for g in tau for h in [tuple(i + j for i, j in zip(g, mu))]
                     if _in_tangent(x, h))
        check("translate-g_mu-closed", closed, x, context=format_root(mu))
        for g in tau - te:
            ctx = f"mu={format_root(mu)} gamma={format_root(g)}"
            check("extra-weight-short", rs.is_short(g), x, context=ctx)
            check("extra-weight-negative", rs.is_negative(g), x, context=ctx)
            check("extra-weight-obtuse", rs.inner(g, mu) < 0, x, context=ctx)
            phi = tuple(-2 * a - b for a, b in zip(g, mu))
            ok_phi = (rs.is_root(phi) and rs.is_long(phi) and rs.inner(phi, mu) == 0
                      and tuple(-c for c in phi) in te)
            check("extra-weight-phi", ok_phi, x, format_root(phi), context=ctx)
            check("extra-weight-phi-positive", rs.is_root(phi) and rs.is_positive(phi), x, context=ctx)
            delta = tuple(a + b for a, b in zip(g, mu))
            if _in_tangent(x, delta):
                check("extra-weight-delta", delta in tau and delta in te, x, context=ctx)
    return translates


def _check_point_theta(check: _Checker, w, x, te, smooth, translates):
    rs = w.system
    theta = theta_span(w, x, smooth).weights
    iso = isotropy_closure(w, x, te).weights
    pairs = b2_pairs(w, x)
    check("theta-contains-TE", te <= theta, x)
    for g in theta:
        if rs.is_long(g):
            check("theta-long-in-TE", g in te, x, format_root(g))
        else:
            ok = any(_half(a, b) == g for a in te for b in te)
            check("theta-short-is-average", ok, x, format_root(g))
        check("theta-in-hull", in_convex_hull(g, list(te)), x, format_root(g), _fmt(te))
    gammas = {p.gamma for p in pairs}
    for g in theta - iso:
        check("theta-extra-from-b2pair", g in gammas, x, format_root(g), _fmt(gammas))
    for p in pairs:
        for m in (p.mu, p.phi):
            tau = translates.get(m)
            if tau is not None:
                check("b2pair-gamma-in-translate", p.gamma in tau, x, format_root(p.gamma),
                      _fmt(tau), f"curve {format_root(m)}")


def verify_element(w: WeylElement, *, seeds: int = 10, invariants: bool = True) -> _Checker:
    """All per-``w`` checks; the returned checker holds counts and discrepancies."""
    check = _Checker(w)
    rs = w.system
    G = build_graph(w)
    report = singular_locus(w)
    smooth = report.smooth_points
    rsmooth = rationally_smooth_points(w)
    for x in G.ordered_vertices:
        s, r = x in smooth, x in rsmooth
        if rs.simply_laced:
            check("smooth-iff-rationally-smooth", s == r, x, s, r)
        else:
            check("smooth-implies-rationally-smooth", (not s) or r, x, s, r)
        if not s:
            check("singular-downward-closed",
                  all(c.other not in smooth for c in G.down_curves(x)), x)
    maximal = {x for x in G.vertices if x not in smooth
               and all(c.other in smooth for c in G.up_curves(x))}
    check("maximal-singularities", maximal == set(report.maximal_singularities), None,
          sorted(map(format_word, report.maximal_singularities)), sorted(map(format_word, maximal)))
    for seed in range(seeds):
        alt = singular_locus(w, rng=random.Random(seed)).smooth_points
        check("witness-choice-invariant", alt == smooth, None, context=f"seed {seed}")
    if not invariants:
        return check
    for x in G.ordered_vertices:
        te = te_module(w, x).weights
        one = isotropy_closure_one_step(x, te)
        full = isotropy_closure(w, x, te).weights
        check("isotropy-one-step-equals-full", one == full, x, _fmt(one), _fmt(full))
        x_smooth = x in smooth
        translates = _check_translates(check, w, x, te, smooth, x_smooth)
        if x_smooth or x in maximal:
            _check_point_theta(check, w, x, te, smooth, translates)
        if x_smooth:
            check("multiplicity-one-when-smooth", multiplicity_at(w, x, None, smooth) == 1, x)
    return check


def _verify_word(args) -> tuple[str, list[Discrepancy], dict[str, int], bool, float]:
    family, rank, word, seeds, invariants = args
    rs = build_root_system(family, rank)
    w = parse_word(rs, word)
    t0 = time.perf_counter()
    c = verify_element(w, seeds=seeds, invariants=invariants)
    dt = time.perf_counter() - t0
    return word, c.found, c.counts, not singular_locus(w).is_smooth, dt


def exhaustive_verify(family: str, rank: int, *, seeds: int = 10, invariants: bool = True,
                      bruhat: bool = False, jobs: int = 1, allow_large: bool = False) -> ScanResult:
    """
    Check every ``w`` of the Weyl group: smooth against rationally smooth
    (equality in simply-laced type, implication otherwise), closure
    properties, witness independence over ``seeds`` random choices, and with
    ``invariants`` every translate, tangent-cone span and B2-pair identity.
    ``bruhat`` adds the brute-force order comparison on all pairs.
    """
    rs = build_root_system(family, rank)
    if rs.family == "G":
        raise PreconditionError("scans are not available for G2")
    if not allow_large and not scan_budget_ok(rs.family, rs.rank):
        raise ScanBudgetError(
            f"{rs.name} is above the default scan budget (A<=4, B/C<=3, D4); pass allow_large")
    t0 = time.perf_counter()
    elems = all_elements(rs)
    tasks = [(rs.family, rs.rank, format_word(w), seeds, invariants) for w in elems]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outs = list(pool.map(_verify_word, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        outs = [_verify_word(t) for t in tasks]
    result = ScanResult(rs.name, len(elems), 0)
    for word, found, counts, singular, dt in outs:
        result.discrepancies.extend(found)
        for k, v in counts.items():
            result.checks[k] = result.checks.get(k, 0) + v
        result.n_singular += singular
        result.max_per_w = max(result.max_per_w, dt)
    if bruhat:
        n = 0
        for x in elems:
            for w in elems:
                a, b = bruhat_leq(x, w), bruhat_leq_bruteforce(x, w)
                n += 1
                if a != b:
                    result.discrepancies.append(Discrepancy(format_word(w), format_word(x),
                                                            "bruhat-order", a, b))
        result.checks["bruhat-order"] = n
    result.elapsed = time.perf_counter() - t0
    return result
