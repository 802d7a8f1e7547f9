"""
Finite crystallographic root systems with exact integer/rational arithmetic.

Roots are plain tuples of integers, the coordinates in the basis of simple
roots. The invariant form is the symmetrized Cartan matrix, scaled so that a
short root has squared length 1 (long roots: 2, or 3 in G2). In simply-laced
families every root is classified long, with squared length 2.

Simple roots are numbered in Bourbaki order, with one exception: in B2 the
first simple root is the short one (this is the C2 numbering, and matches the
convention used in G2 where ``a1`` is short as well).

>>> rs = build_root_system("B", 2)
>>> [format_root(r) for r in rs.positive_roots]
['a1', 'a2', 'a1+a2', '2a1+a2']
>>> rs.inner((0, 1), (2, 1))
Fraction(0, 1)
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Optional

__all__ = [
    "Root", "RootSystem", "B2Basis", "RootSystemError",
    "build_root_system", "parse_system", "format_root", "parse_root",
    "FAMILIES", "max_rank",
]

# a root, as integer coordinates over the simple roots
Root = tuple[int, ...]

FAMILIES = ("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2")

_RANK_ENV = "SCHUBSING_MAX_RANK"


class RootSystemError(ValueError):
    """Invalid root system request or invalid root data."""


def max_rank() -> int:
    """Configured upper bound on the rank of classical families."""
    return int(os.environ.get(_RANK_ENV, "8"))


@dataclass(frozen=True)
class B2Basis:
    """The simple roots of a B2 subsystem that are positive in the ambient system."""
    short_simple: Root
    long_simple: Root

    @property
    def positive_roots(self) -> tuple[Root, Root, Root, Root]:
        a, b = self.short_simple, self.long_simple
        return (a, b, _add(a, b), _add(_add(a, a), b))


def _add(a: Root, b: Root) -> Root:
    return tuple(i + j for i, j in zip(a, b))


def _neg(a: Root) -> Root:
    return tuple(-i for i in a)


def _chain(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(n - 1)]


def _gram(family: str, rank: int) -> list[list[Fraction]]:
    """Gram matrix of the simple roots, short squared length 1."""
    n = rank
    sq = [Fraction(2)] * n
    bonds: dict[tuple[int, int], Fraction] = {}
    h = Fraction(-1, 2)
    if family == "A":
        bonds = {e: Fraction(-1) for e in _chain(n)}
    elif family in ("B", "C") and n == 2:
        # a1 short, a2 long
        sq = [Fraction(1), Fraction(2)]
        bonds = {(0, 1): Fraction(-1)}
    elif family == "B":
        sq = [Fraction(2)] * (n - 1) + [Fraction(1)]
        bonds = {e: Fraction(-1) for e in _chain(n)}
    elif family == "C":
        sq = [Fraction(1)] * (n - 1) + [Fraction(2)]
        bonds = {e: h for e in _chain(n - 1)}
        bonds[(n - 2, n - 1)] = Fraction(-1)
    elif family == "D":
        bonds = {e: Fraction(-1) for e in _chain(n - 1)}
        bonds[(n - 3, n - 1)] = Fraction(-1)
    elif family == "E":
        # Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4
        bonds = {(0, 2): Fraction(-1), (1, 3): Fraction(-1)}
        bonds.update({(i, i + 1): Fraction(-1) for i in range(2, n - 1)})
    elif family == "F":
        sq = [Fraction(2), Fraction(2), Fraction(1), Fraction(1)]
        bonds = {(0, 1): Fraction(-1), (1, 2): Fraction(-1), (2, 3): h}
    elif family == "G":
        sq = [Fraction(1), Fraction(3)]
        bonds = {(0, 1): Fraction(-3, 2)}
    gram = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = sq[i]
    for (i, j), v in bonds.items():
        gram[i][j] = gram[j][i] = v
    return gram


def _normalize_family(family: str, rank: Optional[int]) -> tuple[str, int]:
    fam = family.strip().upper()
    if fam in ("E6", "E7", "E8", "F4", "G2"):
        fixed = int(fam[1])
        if rank is not None and rank != fixed:
            raise RootSystemError(f"{fam} has rank {fixed}, not {rank}")
        return fam[0], fixed
    if fam in ("E", "F", "G"):
        allowed = {"E": (6, 7, 8), "F": (4,), "G": (2,)}[fam]
        if rank not in allowed:
            raise RootSystemError(f"type {fam} requires rank in {allowed}, got {rank}")
        return fam, rank
    if fam not in ("A", "B", "C", "D"):
        raise RootSystemError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if rank is None or rank < 1:
        raise RootSystemError(f"type {fam} needs a positive rank, got {rank}")
    least = {"A": 1, "B": 2, "C": 2, "D": 4}[fam]
    if rank < least:
        raise RootSystemError(f"type {fam}{rank} is not a valid finite type (rank >= {least})")
    if rank > max_rank():
        raise RootSystemError(
            f"rank {rank} exceeds the configured bound {max_rank()} (set {_RANK_ENV})")
    return fam, rank


@dataclass(eq=False)
class RootSystem:
    """
    An irreducible finite root system.

    Instances are immutable after construction and compare by identity; use
    ``build_root_system`` to obtain a shared, cached instance per type.
    """
    family: str
    rank: int
    gram: list[list[Fraction]]
    simple_roots: tuple[Root, ...] = field(init=False)
    all_roots: tuple[Root, ...] = field(init=False)

    def __post_init__(self):
        n = self.rank
        self.simple_roots = tuple(
            tuple(int(i == j) for j in range(n)) for i in range(n))
        # twice the Gram matrix is integral in every type
        self._gram2 = [[int(2 * v) for v in row] for row in self.gram]
        self.all_roots = self._close_under_reflections()
        self.index = {r: i for i, r in enumerate(self.all_roots)}

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def __repr__(self):
        return f"RootSystem({self.name})"

    @cached_property
    def cartan(self) -> list[list[int]]:
        """``cartan[i][j] = <a_j, a_i^vee>``, so ``r_i(a_j) = a_j - cartan[i][j] a_i``."""
        n = self.rank
        return [[int(2 * self.gram[i][j] / self.gram[i][i]) for j in range(n)]
                for i in range(n)]

    @property
    def form(self) -> list[list[Fraction]]:
        return self.gram

    def _close_under_reflections(self) -> tuple[Root, ...]:
        seen = set(self.simple_roots)
        frontier = list(self.simple_roots)
        while frontier:
            nxt = []
            for r in frontier:
                for s in self.simple_roots:
                    t = self.reflect(s, r)
                    if t not in seen:
                        seen.add(t)
                        nxt.append(t)
            frontier = nxt
        # by height, then lexicographically decreasing coordinates
        pos = sorted((r for r in seen if self._positive(r)),
                     key=lambda r: (sum(r), [-c for c in r]))
        return tuple(pos) + tuple(_neg(r) for r in pos)

    @staticmethod
    def _positive(r: Root) -> bool:
        return any(c > 0 for c in r)

    # -- form and reflections ------------------------------------------------

    def _inner2(self, a: Root, b: Root) -> int:
        g = self._gram2
        n = self.rank
        return sum(a[i] * g[i][j] * b[j] for i in range(n) if a[i] for j in range(n) if b[j])

    def inner(self, a: Root, b: Root) -> Fraction:
        """The W-invariant form, short roots of squared length 1."""
        return Fraction(self._inner2(a, b), 2)

    def pairing(self, b: Root, a: Root) -> int:
        """``<b, a^vee> = 2(b, a)/(a, a)``."""
        num, den = self._inner2(b, a), self._inner2(a, a)
        q, rem = divmod(2 * num, den)
        if rem:
            raise RootSystemError(f"non-integral pairing <{b}, {a}^vee>")
        return q

    def reflect(self, a: Root, b: Root) -> Root:
        """``r_a(b) = b - <b, a^vee> a``."""
        k = self.pairing(b, a)
        return tuple(bi - k * ai for ai, bi in zip(a, b))

    # -- classification ------------------------------------------------------

    def is_root(self, a: Root) -> bool:
        return tuple(a) in self.index

    def _require(self, a: Root) -> Root:
        a = tuple(a)
        if a not in self.index:
            raise RootSystemError(f"{format_root(a)} is not a root of {self.name}")
        return a

    def is_positive(self, a: Root) -> bool:
        return self._positive(a)

    def is_negative(self, a: Root) -> bool:
        return not self._positive(a)

    @cached_property
    def long_length(self) -> int:
        return max(self._inner2(r, r) for r in self.simple_roots)

    @property
    def simply_laced(self) -> bool:
        return len({self._inner2(r, r) for r in self.simple_roots}) == 1

    def is_long(self, a: Root) -> bool:
        return self._inner2(self._require(a), a) == self.long_length

    def is_short(self, a: Root) -> bool:
        return not self.is_long(a)

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        return self.all_roots[: len(self.all_roots) // 2]

    @cached_property
    def highest_root(self) -> Root:
        return max(self.positive_roots, key=sum)

    # -- rank two subsystems ---------------------------------------------------

    def _in_plane(self, mu: Root, phi: Root, g: Root) -> bool:
        n = self.rank
        rows = (mu, phi, g)
        for i, j, k in combinations(range(n), 3):
            m = [[r[i], r[j], r[k]] for r in rows]
            det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                   - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                   + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
            if det:
                return False
        return True

    def rank2_subsystem(self, mu: Root, phi: Root) -> tuple[Root, ...]:
        """All roots in the rational span of two independent roots."""
        mu, phi = self._require(mu), self._require(phi)
        if not any(mu[i] * phi[j] - mu[j] * phi[i]
                   for i in range(self.rank) for j in range(i + 1, self.rank)):
            raise RootSystemError(
                f"{format_root(mu)} and {format_root(phi)} are proportional")
        return tuple(g for g in self.all_roots if self._in_plane(mu, phi, g))

    def b2_subsystem(self, mu: Root, phi: Root) -> Optional[B2Basis]:
        """
        The basis of the B2 subsystem spanned by ``mu`` and ``phi``, or None.

        The basis returned is the unique one made of roots that are positive in
        the whole system.
        """
        return _b2_subsystem(self, tuple(mu), tuple(phi))

    # -- export --------------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "schema": "schubsing/roots/v1",
            "system": self.name,
            "family": self.family if self.family in "ABCD" else self.name,
            "rank": self.rank,
            "cartan": self.cartan,
            "roots": [list(r) for r in self.all_roots],
            "long": [self.is_long(r) for r in self.all_roots],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


@lru_cache(maxsize=None)
def _b2_subsystem(rs: RootSystem, mu: Root, phi: Root) -> Optional[B2Basis]:
    sub = rs.rank2_subsystem(mu, phi)
    if len(sub) != 8:
        return None
    pos = [r for r in sub if rs.is_positive(r)]
    sums = {_add(a, b) for a, b in combinations(pos, 2)}
    simple = [r for r in pos if r not in sums]
    short = [r for r in simple if rs.is_short(r)]
    long_ = [r for r in simple if rs.is_long(r)]
    if len(short) != 1 or len(long_) != 1:
        return None
    return B2Basis(short[0], long_[0])


@lru_cache(maxsize=None)
def _build(family: str, rank: int) -> RootSystem:
    return RootSystem(family, rank, _gram(family, rank))


def build_root_system(family: str, rank: Optional[int] = None, *,
                      allow_g2: bool = False) -> RootSystem:
    """
    Build (or fetch the cached) root system of the given finite type.

    ``family`` is one of A, B, C, D (rank required) or E6, E7, E8, F4, G2.
    G2 is only built when ``allow_g2`` is set.

    >>> len(build_root_system("A", 2).all_roots)
    6
    >>> build_root_system("G2")
    Traceback (most recent call last):
    ...
    schubsing.rootsystem.RootSystemError: G2 requires allow_g2=True
    """
    fam, n = _normalize_family(family, rank)
    if fam == "G" and not allow_g2:
        raise RootSystemError("G2 requires allow_g2=True")
    return _build(fam, n)


_SYS_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


def parse_system(text: str, *, allow_g2: bool = False) -> RootSystem:
    """Parse a type string such as ``B3`` or ``E6``."""
    m = _SYS_RE.match(text)
    if not m:
        raise RootSystemError(f"cannot parse root system {text!r} (expected e.g. 'B3')")
    return build_root_system(m.group(1), int(m.group(2)), allow_g2=allow_g2)


def format_root(r: Root) -> str:
    """
    Render integer coordinates over simple roots, e.g. ``3a1+2a2``.

    >>> format_root((-1, -1))
    '-a1-a2'
    """
    out = []
    for i, c in enumerate(r, start=1):
        if not c:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else ("+" if out else "")
        out.append(f"{sign}{mag}a{i}")
    return "".join(out) or "0"


_TERM_RE = re.compile(r"([+-]?)(\d*)a(\d+)")


def parse_root(text: str, rank: int) -> Root:
    """
    Inverse of ``format_root``.

    >>> parse_root("3a1+2a2", 2)
    (3, 2)
    """
    s = text.replace(" ", "")
    if s == "0":
        return (0,) * rank
    coords = [0] * rank
    pos = 0
    for m in _TERM_RE.finditer(s):
        if m.start() != pos or (pos > 0 and not m.group(1)):
            break
        i = int(m.group(3))
        if not 1 <= i <= rank:
            raise RootSystemError(f"simple root index a{i} out of range 1..{rank}")
        c = int(m.group(2)) if m.group(2) else 1
        coords[i - 1] += -c if m.group(1) == "-" else c
        pos = m.end()
    if pos != len(s) or not s:
        raise RootSystemError(f"cannot parse root {text!r}")
    return tuple(coords)
