"""
Weight-set computations in the tangent space ``T_x(G/B)`` of a fixed point.

A T-stable subspace of ``T_x(G/B)`` is a sum of root lines, so it is recorded
as its set of root weights (``WeightModule``). This module computes

* ``TE(X, x)``, the span of the tangent lines of the T-curves at ``x``;
* the isotropy submodule, the smallest ``B_x``-stable space containing TE;
* Peterson translates along good curves, from mu-strings at the far endpoint;
* the tangent-cone span at smooth points and maximal singularities;
* orthogonal B2-pairs and the multiplicity ``2^d`` at maximal singularities.

G2 is refused by everything except the translate and the upper-bound sum of
translates, which need the smooth locus to be supplied by the caller.
"""

from __future__ import annotations

from collections.abc import Collection, Iterable
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .bruhatgraph import NotInIntervalError, build_graph
from .rootsystem import B2Basis, Root, RootSystem, format_root
from .weyl import WeylElement, format_word, reflection

__all__ = [
    "WeightModule", "B2Pair", "PreconditionError",
    "te_module", "full_tangent_weights", "isotropy_closure",
    "isotropy_closure_one_step", "is_isotropy_stable", "peterson_translate",
    "translate_string_conflicts", "READINGS", "theta_span", "b2_pairs", "multiplicity_at",
]


class PreconditionError(ValueError):
    """An operation was called outside the range where its result is defined."""


@dataclass(frozen=True)
class WeightModule:
    """A T-stable subspace of ``T_x(G/B)``, as its set of weights."""
    base_point: WeylElement
    weights: frozenset[Root]
    kind: str = "weights"
    note: str = ""

    def __contains__(self, g) -> bool:
        return tuple(g) in self.weights

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(sorted(self.weights))

    def formatted(self) -> list[str]:
        return [format_root(g) for g in sorted(self.weights)]

    def to_dict(self) -> dict:
        d = {"x": format_word(self.base_point), "kind": self.kind,
             "weights": self.formatted()}
        if self.note:
            d["note"] = self.note
        return d


@dataclass(frozen=True)
class B2Pair:
    mu: Root
    phi: Root
    gamma: Root
    basis: B2Basis

    def to_dict(self) -> dict:
        return {
            "mu": format_root(self.mu), "phi": format_root(self.phi),
            "gamma": format_root(self.gamma),
            "basis": {"short": format_root(self.basis.short_simple),
                      "long": format_root(self.basis.long_simple)},
        }


def _refuse_g2(rs: RootSystem, what: str) -> None:
    if rs.family == "G":
        raise PreconditionError(f"{what} is not available for G2 (the results need no G2 factor)")


def _neg(g: Root) -> Root:
    return tuple(-c for c in g)


def _add(a: Root, b: Root) -> Root:
    return tuple(i + j for i, j in zip(a, b))


def _sub(a: Root, b: Root) -> Root:
    return tuple(i - j for i, j in zip(a, b))


def _in_tangent(x: WeylElement, g: Root) -> bool:
    """``g`` is a root with ``x^-1(g) < 0``."""
    rs = x.system
    i = rs.index.get(g)
    return i is not None and x._inv_perm[i] >= len(rs.all_roots) // 2


def te_module(w: WeylElement, x: WeylElement) -> WeightModule:
    """Weights of the tangent lines of all T-curves of X(w) through x."""
    G = build_graph(w)
    return WeightModule(x, frozenset(c.tangent_weight for c in G.curves_at(x)), "TE")


def full_tangent_weights(x: WeylElement) -> WeightModule:
    rs = x.system
    return WeightModule(x, frozenset(g for g in rs.all_roots if _in_tangent(x, g)), "full")


def _stabilizer_roots(x: WeylElement) -> list[Root]:
    """Positive roots ``a`` with ``x^-1(a) > 0``; their root groups fix x."""
    rs = x.system
    half = len(rs.all_roots) // 2
    return [rs.all_roots[i] for i in range(half) if x._inv_perm[i] < half]


def _check_submodule(x: WeylElement, weights: Iterable[Root]) -> frozenset[Root]:
    weights = frozenset(tuple(g) for g in weights)
    bad = [g for g in weights if not _in_tangent(x, g)]
    if bad:
        raise PreconditionError(
            f"weights {[format_root(g) for g in bad]} are not in T_x(G/B) at {format_word(x)}")
    return weights


def isotropy_closure(w: WeylElement, x: WeylElement,
                     M: WeightModule | Iterable[Root]) -> WeightModule:
    """
    Least ``B_x``-stable weight set containing ``M``: whenever ``g`` is present
    and ``a > 0`` fixes x, add every ``g + k a`` (k >= 1) that is a root of
    ``T_x(G/B)``.
    """
    weights = M.weights if isinstance(M, WeightModule) else M
    current = set(_check_submodule(x, weights))
    stab = _stabilizer_roots(x)
    queue = list(current)
    while queue:
        g = queue.pop()
        for a in stab:
            h = _add(g, a)
            while _in_tangent(x, h):
                if h not in current:
                    current.add(h)
                    queue.append(h)
                h = _add(h, a)
    return WeightModule(x, frozenset(current), "isotropy")


def isotropy_closure_one_step(x: WeylElement, weights: Iterable[Root]) -> frozenset[Root]:
    """Fixpoint of the one-step rule ``g -> g + a`` only."""
    current = set(_check_submodule(x, weights))
    stab = _stabilizer_roots(x)
    changed = True
    while changed:
        new = {h for g in current for a in stab
               for h in [_add(g, a)] if _in_tangent(x, h)} - current
        changed = bool(new)
        current |= new
    return frozenset(current)


def is_isotropy_stable(x: WeylElement, weights: Iterable[Root]) -> bool:
    """
    The literal check: for every weight ``g`` and every ``a > 0`` fixing x with
    ``g + a`` a root of ``T_x(G/B)``, ``g + a`` is again a weight.
    """
    weights = frozenset(tuple(g) for g in weights)
    return all(h in weights for g in weights for a in _stabilizer_roots(x)
               for h in [_add(g, a)] if _in_tangent(x, h))


def _smooth_points(w: WeylElement, smooth: Optional[Collection[WeylElement]]):
    if smooth is not None:
        return smooth
    if w.system.family == "G":
        raise PreconditionError(
            "the smooth locus cannot be computed for G2; pass smooth= explicitly")
    from .smoothness import singular_locus
    return singular_locus(w).smooth_points


def _segment_bottom(y: WeylElement, g: Root, mu: Root) -> Root:
    """Lowest member of the mu-string through ``g`` that stays in ``T_y(G/B)``."""
    while True:
        h = _sub(g, mu)
        if not _in_tangent(y, h):
            return g
        g = h


def _string_groups(y: WeylElement, weights: Iterable[Root], mu: Root) -> dict[Root, list[Root]]:
    groups: dict[Root, list[Root]] = {}
    for g in weights:
        groups.setdefault(_segment_bottom(y, g, mu), []).append(g)
    return groups


READINGS = ("limit", "reflect")


def _translate_weights(w: WeylElement, x: WeylElement, mu: Root,
                       reading: str = "limit") -> frozenset[Root]:
    rs = w.system
    r_mu = reflection(rs, mu)
    y = r_mu * x
    ty = te_module(w, y).weights
    if reading == "reflect":
        return frozenset(rs.reflect(mu, g) for g in ty)
    if reading != "limit":
        raise ValueError(f"unknown translate reading {reading!r}; expected one of {READINGS}")
    out = set()
    for bottom, members in _string_groups(y, ty, mu).items():
        g = bottom
        # the limit keeps as many lines per string as T_y(X) had, pushed to
        # the bottom of the string inside T_y(G/B)
        for _ in members:
            out.add(rs.reflect(mu, g))
            g = _add(g, mu)
    return frozenset(out)


def _check_translate_args(w, x, mu, smooth) -> tuple[Root, WeylElement]:
    rs = w.system
    mu = tuple(mu)
    if mu not in rs.index or not rs.is_positive(mu):
        raise PreconditionError(f"{format_root(mu)} is not a positive root of {rs.name}")
    G = build_graph(w)
    if x not in G:
        raise NotInIntervalError(f"{format_word(x)} is not <= {format_word(w)}")
    y = reflection(rs, mu) * x
    if y not in G:
        raise PreconditionError(f"r_mu x = {format_word(y)} is not <= {format_word(w)}")
    if _in_tangent(x, mu):
        raise PreconditionError(f"r_mu x = {format_word(y)} is not above x = {format_word(x)}")
    if y not in _smooth_points(w, smooth):
        raise PreconditionError(
            f"translate requires smooth far endpoint; {format_word(y)} is singular")
    return mu, y


def peterson_translate(w: WeylElement, x: WeylElement, mu: Root,
                       smooth: Optional[Collection[WeylElement]] = None,
                       reading: str = "limit") -> WeightModule:
    """
    The Peterson translate along the curve joining x to ``y = r_mu x > x``.

    The weights of ``T_y(X)`` (= TE at the smooth point y) are grouped into
    mu-strings. Inside ``T_y(G/B)`` a string is an unbroken run closed under
    adding ``mu``; a group of ``m`` weights is replaced by the lowest ``m``
    members of that run, and the result is reflected back to x by ``r_mu``.

    ``reading="reflect"`` instead reflects the weights of ``T_y(X)`` as they
    are. The two agree whenever every string already sits at the bottom of
    its run (see ``translate_string_conflicts``); where they differ only the
    default gives ``l(w)`` lines equal to TE at smooth points.

    ``smooth`` is the smooth locus of X(w); it is computed when omitted
    (not possible in G2).
    """
    if reading not in READINGS:
        raise ValueError(f"unknown translate reading {reading!r}; expected one of {READINGS}")
    mu, _ = _check_translate_args(w, x, mu, smooth)
    rs = w.system
    note = "short curve" if rs.is_short(mu) else ""
    if reading != "limit":
        note = "; ".join(n for n in (note, f"reading={reading}") if n)
    return WeightModule(x, _translate_weights(w, x, mu, reading), "translate", note)


def translate_string_conflicts(w: WeylElement, x: WeylElement, mu: Root) -> list[list[Root]]:
    """
    mu-strings of ``T_y(X)`` that are not already the bottom of their run in
    ``T_y(G/B)``. On such strings the lowest-members rule and a literal
    reading that reflects ``T_y(X)`` as is would disagree.
    """
    rs = w.system
    mu = tuple(mu)
    y = reflection(rs, mu) * x
    out = []
    for bottom, members in _string_groups(y, te_module(w, y).weights, mu).items():
        expected = set()
        g = bottom
        for _ in members:
            expected.add(g)
            g = _add(g, mu)
        if expected != set(members):
            out.append(sorted(members))
    return out


def _is_smooth_or_maximal(w, x, smooth) -> bool:
    if x in smooth:
        return True
    G = build_graph(w)
    return all(c.other in smooth for c in G.up_curves(x))


def theta_span(w: WeylElement, x: WeylElement,
               smooth: Optional[Collection[WeylElement]] = None, *,
               upper_bound: bool = False) -> WeightModule:
    """
    Sum of the Peterson translates over all curves from x to points above it.

    At a smooth point or a maximal singularity this is the span of the
    tangent cone. Elsewhere an error is raised unless ``upper_bound`` is set,
    in which case the sum over the good upward curves is returned, labelled
    as an upper bound.
    """
    rs = w.system
    G = build_graph(w)
    if x not in G:
        raise NotInIntervalError(f"{format_word(x)} is not <= {format_word(w)}")
    if not upper_bound:
        _refuse_g2(rs, "theta_span")
    smooth = _smooth_points(w, smooth)
    certified = _is_smooth_or_maximal(w, x, smooth)
    if not certified and not upper_bound:
        raise PreconditionError(
            f"{format_word(x)} is neither smooth nor a maximal singularity of X({format_word(w)})")
    weights = set(te_module(w, x).weights)
    for c in G.up_curves(x):
        if c.other in smooth:
            weights |= _translate_weights(w, x, c.gamma_pos)
    if certified and not upper_bound:
        return WeightModule(x, frozenset(weights), "theta")
    return WeightModule(x, frozenset(weights), "tau-sum", "upper bound, not certified")


def b2_pairs(w: WeylElement, x: WeylElement) -> list[B2Pair]:
    """
    Orthogonal B2-pairs at x: long positive orthogonal ``{mu, phi}`` with
    ``-mu, -phi`` in TE, lying in a B2 subsystem whose positive basis
    ``(a short, b long)`` has ``r_a x < x`` and ``r_a r_b x <= w``.
    """
    rs = w.system
    _refuse_g2(rs, "b2_pairs")
    G = build_graph(w)
    ups = sorted(c.gamma_pos for c in G.up_curves(x) if c.length_class == "long")
    out = []
    for mu, phi in combinations(ups, 2):
        if rs.inner(mu, phi) != 0:
            continue
        basis = rs.b2_subsystem(mu, phi)
        if basis is None:
            continue
        a, b = basis.short_simple, basis.long_simple
        if _in_tangent(x, a) and reflection(rs, a) * reflection(rs, b) * x in G:
            assert all((m + p) % 2 == 0 for m, p in zip(mu, phi))
            gamma = tuple(-(m + p) // 2 for m, p in zip(mu, phi))
            out.append(B2Pair(mu, phi, gamma, basis))
    return out


def multiplicity_at(w: WeylElement, x: WeylElement, mu: Optional[Root] = None,
                    smooth: Optional[Collection[WeylElement]] = None) -> int:
    """
    ``2^d`` where d counts the weights ``a`` of the translate along ``mu`` with
    ``r_a x`` not in ``[e, w]``. Defined at smooth points (value 1) and at
    maximal singularities where the number of T-curves equals ``l(w)``.
    ``mu`` defaults to the least root of an upward curve; at ``x = w`` there
    is none and the value is 1.
    """
    rs = w.system
    _refuse_g2(rs, "multiplicity_at")
    G = build_graph(w)
    if x not in G:
        raise NotInIntervalError(f"{format_word(x)} is not <= {format_word(w)}")
    smooth = _smooth_points(w, smooth)
    if not _is_smooth_or_maximal(w, x, smooth):
        raise PreconditionError(f"{format_word(x)} is not a maximal singularity")
    if G.degree(x) != w.length:
        raise PreconditionError(
            f"multiplicity needs |E(X,x)| = l(w) = {w.length}, got {G.degree(x)}")
    if x == w:
        return 1
    if mu is None:
        mu = min(c.gamma_pos for c in G.up_curves(x))
    tau = peterson_translate(w, x, mu, smooth)
    d = sum(1 for a in tau.weights if reflection(rs, a) * x not in G)
    return 2 ** d
