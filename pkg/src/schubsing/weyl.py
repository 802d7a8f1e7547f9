"""
Weyl group elements acting on roots, Bruhat order, and lower intervals.

An element is stored as the integer matrix of its action on simple-root
coordinates (column ``j`` is the image of simple root ``j``); that matrix is
the canonical, hashable identity of the element. For speed every element also
carries the induced permutation of the root list, and all group operations are
done on permutations.

Words are read left to right as a product: ``s1 s2`` acts on a root by first
applying ``s2``, then ``s1``.

>>> from schubsing.rootsystem import build_root_system
>>> rs = build_root_system("B", 2)
>>> w = parse_word(rs, "s1 s2 s1")
>>> w.length, format_word(w)
(3, 's1 s2 s1')
>>> len(enumerate_interval(w))
6
"""

from __future__ import annotations

import re
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .rootsystem import Root, RootSystem, RootSystemError, format_root

__all__ = [
    "WeylElement", "identity", "from_word", "reflection", "parse_word",
    "format_word", "bruhat_leq", "enumerate_interval", "all_elements",
    "longest_element", "seed_interval",
]


@dataclass(frozen=True, eq=False)
class WeylElement:
    """
    An element of the Weyl group of ``system``.

    ``perm[i]`` is the index in ``system.all_roots`` of the image of root
    ``i``. Equality and hashing use the action matrix.
    """
    system: RootSystem = field(repr=False)
    perm: tuple[int, ...] = field(repr=False)

    @cached_property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        rs = self.system
        cols = [rs.all_roots[self.perm[rs.index[s]]] for s in rs.simple_roots]
        return tuple(tuple(col[i] for col in cols) for i in range(rs.rank))

    @cached_property
    def _key(self):
        return (self.system.name, self.matrix)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"WeylElement({self.system.name}, {format_word(self)!r})"

    def __mul__(self, other: WeylElement) -> WeylElement:
        p = self.perm
        return WeylElement(self.system, tuple(p[j] for j in other.perm))

    def compose(self, other: WeylElement) -> WeylElement:
        return self * other

    def apply(self, g: Root) -> Root:
        """The image of the root ``g``."""
        rs = self.system
        try:
            return rs.all_roots[self.perm[rs.index[tuple(g)]]]
        except KeyError:
            raise RootSystemError(f"{format_root(g)} is not a root of {rs.name}") from None

    def apply_inverse(self, g: Root) -> Root:
        rs = self.system
        return rs.all_roots[self._inv_perm[rs.index[tuple(g)]]]

    @cached_property
    def _inv_perm(self) -> tuple[int, ...]:
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return tuple(inv)

    def inverse(self) -> WeylElement:
        return WeylElement(self.system, self._inv_perm)

    def sends_negative(self, i: int) -> bool:
        """Whether the root with index ``i`` is mapped to a negative root."""
        return self.perm[i] >= self.system_half

    @property
    def system_half(self) -> int:
        return len(self.perm) // 2

    @cached_property
    def inversion_set(self) -> frozenset[Root]:
        """Positive roots ``g`` with ``x^-1(g) < 0``; these are the ``g`` with ``r_g x < x``."""
        rs, half, inv = self.system, self.system_half, self._inv_perm
        return frozenset(rs.all_roots[i] for i in range(half) if inv[i] >= half)

    @cached_property
    def length(self) -> int:
        half = self.system_half
        return sum(1 for i in range(half) if self.perm[i] >= half)

    def has_right_descent(self, i: int) -> bool:
        """``x s_i < x``, i.e. ``x(a_i) < 0``."""
        return self.perm[i] >= self.system_half

    def has_left_descent(self, i: int) -> bool:
        """``s_i x < x``, i.e. ``x^-1(a_i) < 0``."""
        return self._inv_perm[i] >= self.system_half

    def is_identity(self) -> bool:
        return self.length == 0

    @cached_property
    def reduced_word(self) -> tuple[int, ...]:
        """Lexicographically first reduced word (1-based indices)."""
        word = []
        x = self
        n = self.system.rank
        while x.length:
            i = next(i for i in range(n) if x.has_left_descent(i))
            word.append(i + 1)
            x = _simple(self.system, i) * x
        return tuple(word)


@lru_cache(maxsize=None)
def _reflection_perm(rs: RootSystem, i: int) -> tuple[int, ...]:
    g = rs.all_roots[i]
    return tuple(rs.index[rs.reflect(g, r)] for r in rs.all_roots)


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, tuple(range(len(rs.all_roots))))


def _simple(rs: RootSystem, i: int) -> WeylElement:
    return WeylElement(rs, _reflection_perm(rs, i))


def reflection(rs: RootSystem, g: Root) -> WeylElement:
    """The reflection ``r_g``; ``reflection(g) == reflection(-g)``."""
    g = tuple(g)
    if g not in rs.index:
        raise RootSystemError(f"{format_root(g)} is not a root of {rs.name}")
    return WeylElement(rs, _reflection_perm(rs, rs.index[g]))


def from_word(rs: RootSystem, indices: Iterable[int]) -> WeylElement:
    """Product of simple reflections ``s_{i1} s_{i2} ...`` (1-based, need not be reduced)."""
    x = identity(rs)
    for i in indices:
        if not 1 <= i <= rs.rank:
            raise RootSystemError(f"simple reflection s{i} out of range 1..{rs.rank}")
        x = x * _simple(rs, i - 1)
    return x


_WORD_TOKEN = re.compile(r"^s(\d+)$")


def parse_word(rs: RootSystem, text: str) -> WeylElement:
    """Parse whitespace-separated tokens ``s<i>``; the empty string or ``e`` is the identity."""
    tokens = text.split()
    if tokens in ([], ["e"]):
        return identity(rs)
    idx = []
    for t in tokens:
        m = _WORD_TOKEN.match(t)
        if not m:
            raise RootSystemError(f"bad Weyl word token {t!r} (expected s<i>)")
        idx.append(int(m.group(1)))
    return from_word(rs, idx)


def format_word(x: WeylElement) -> str:
    """Canonical reduced word, ``e`` for the identity."""
    return " ".join(f"s{i}" for i in x.reduced_word) or "e"


def bruhat_leq(x: WeylElement, w: WeylElement) -> bool:
    """
    Bruhat order via the lifting property: if ``w s < w`` then
    ``x <= w`` iff ``x s <= w s`` (when ``x s < x``) or ``x <= w s`` (otherwise).
    """
    if x.system is not w.system:
        raise RootSystemError("elements of different Weyl groups")
    rs = w.system
    n = rs.rank
    if x.length > w.length:
        return False
    while w.length:
        if x.length > w.length:
            return False
        i = next(i for i in range(n) if w.has_right_descent(i))
        s = _simple(rs, i)
        if x.has_right_descent(i):
            x = x * s
        w = w * s
    return x.length == 0


_INTERVALS: dict[WeylElement, frozenset[WeylElement]] = {}


def seed_interval(w: WeylElement, members: Iterable[WeylElement]) -> None:
    """Prime the interval memo, e.g. from an on-disk cache."""
    _INTERVALS[w] = frozenset(members)


def enumerate_interval(w: WeylElement) -> frozenset[WeylElement]:
    """
    The lower interval ``[e, w]``, by downward closure under ``x -> r_g x``
    with length drop. Memoized per element; the memo is a plain dict, so
    concurrent writers at worst compute the same value twice.
    """
    cached = _INTERVALS.get(w)
    if cached is not None:
        return cached
    rs = w.system
    half = len(rs.all_roots) // 2
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for z in frontier:
            inv = z._inv_perm
            for i in range(half):
                if inv[i] >= half:
                    y = WeylElement(rs, _reflection_perm(rs, i)) * z
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
        frontier = nxt
    result = frozenset(seen)
    _INTERVALS[w] = result
    return result


@lru_cache(maxsize=None)
def all_elements(rs: RootSystem) -> tuple[WeylElement, ...]:
    """Every element of W, sorted by (length, reduced word)."""
    e = identity(rs)
    seen = {e}
    frontier = [e]
    gens = [_simple(rs, i) for i in range(rs.rank)]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = x * s
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen, key=lambda x: (x.length, x.reduced_word)))


def longest_element(rs: RootSystem) -> WeylElement:
    """The unique element sending every positive root negative."""
    x = identity(rs)
    while True:
        for i in range(rs.rank):
            if not x.has_right_descent(i):
                x = x * _simple(rs, i)
                break
        else:
            return x
