"""
The Coxeter complex Sigma(W, S): chambers are elements of W.

Roots are half-spaces of chambers.  A root is stored as an integer root
vector ``beta``; the chamber ``w`` lies in it exactly when ``w^{-1}(beta)``
is a positive root.  The opposite half-space is ``-beta``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .coxeter import (
    CoxSystem,
    Elem,
    Word,
    _matvec,
    inverse,
    is_left_descent,
    is_right_descent,
    length,
    reduced_word,
    sign_of,
)
from .errors import EmptyInput, NotARootVector, SystemMismatch


@dataclass(frozen=True, eq=False)
class RootVec:
    system: CoxSystem
    vec: tuple[int, ...]

    def __eq__(self, other):
        if not isinstance(other, RootVec):
            return NotImplemented
        return self.vec == other.vec and (
            self.system is other.system or self.system == other.system)

    def __hash__(self):
        return hash(self.vec)

    def __neg__(self) -> "RootVec":
        return RootVec(self.system, tuple(-x for x in self.vec))

    def __repr__(self):
        return f"RootVec{self.vec}"

    @property
    def sign(self) -> int:
        return sign_of(self.vec)

    def contains(self, w: Elem) -> bool:
        return root_contains(self, w)

    def wall(self) -> "RootVec":
        """The positive one of {beta, -beta}; identifies the wall."""
        return self if self.sign > 0 else -self


def sort_key(beta: RootVec):
    return (-beta.sign, sum(abs(x) for x in beta.vec), tuple(-x for x in beta.vec))


def canonical_order(roots: Iterable[RootVec]) -> list[RootVec]:
    return sorted(roots, key=sort_key)


def _descend(system: CoxSystem, vec: Sequence[int]) -> tuple[Word, int, int] | None:
    """Write ``vec = sign * u(alpha_s)``; returns (word of u, s, sign) or None."""
    sgn = sign_of(vec)
    if sgn == 0:
        return None
    v = [sgn * x for x in vec]
    c = system.cartan
    n = system.rank
    word = []
    while True:
        if sum(v) == 1:
            s = v.index(1)
            return tuple(system.generators[i] for i in word), s, sgn
        for i in range(n):
            pairing = sum(c[i][j] * v[j] for j in range(n))
            if pairing > 0:
                v[i] -= pairing
                if v[i] < 0:
                    return None
                word.append(i)
                break
        else:
            return None


def root_vector(system: CoxSystem, vec: Sequence[int]) -> RootVec:
    """Validated constructor: ``vec`` must lie in the W-orbit of a simple root."""
    vec = tuple(int(x) for x in vec)
    if len(vec) != system.rank or _descend(system, vec) is None:
        raise NotARootVector(f"{vec} is not a real root of {system.name}")
    return RootVec(system, vec)


def simple_root(system: CoxSystem, s: str | int) -> RootVec:
    return RootVec(system, system.simple_root(s))


def root_origin(beta: RootVec) -> tuple[Elem, str, int]:
    """``(u, s, sign)`` with ``beta = sign * u(alpha_s)``."""
    found = _descend(beta.system, beta.vec)
    if found is None:
        raise NotARootVector(f"{beta.vec} is not a real root")
    word, s, sgn = found
    return beta.system.element(word), beta.system.generators[s], sgn


def root_type(beta: RootVec) -> str:
    """Type of the panels in the wall of ``beta``."""
    return root_origin(beta)[1]


def reflection(beta: RootVec) -> Elem:
    """The reflection of Sigma swapping ``beta`` and ``-beta``."""
    u, s, _ = root_origin(beta)
    return u * beta.system.gen(s) * inverse(u)


def act(w: Elem, beta: RootVec) -> RootVec:
    return RootVec(beta.system, _matvec(w.mat, beta.vec))


def root_contains(beta: RootVec, w: Elem) -> bool:
    return sign_of(_matvec(w.inv, beta.vec)) > 0


# --------------------------------------------------------------------------
# distance, residues, projections

def _same(x: Elem, y: Elem) -> None:
    if x.system is not y.system and x.system != y.system:
        raise SystemMismatch(f"{x.system.name} vs {y.system.name}")


def weyl_distance(x: Elem, y: Elem) -> Elem:
    _same(x, y)
    return inverse(x) * y


def in_parabolic(w: Elem, subset: Iterable[str]) -> bool:
    return set(reduced_word(w)) <= set(subset)


@dataclass(frozen=True)
class ResidueRef:
    """The J-residue ``base * <J>``."""

    types: frozenset[str]
    base: Elem

    def __post_init__(self):
        object.__setattr__(self, "types", frozenset(self.types))
        bad = self.types - set(self.base.system.generators)
        if bad:
            raise ValueError(f"unknown types {sorted(bad)}")

    def __eq__(self, other):
        if not isinstance(other, ResidueRef):
            return NotImplemented
        return self.types == other.types and self.contains(other.base)

    def __hash__(self):
        return hash(self.types)

    def contains(self, x: Elem) -> bool:
        return in_parabolic(weyl_distance(self.base, x), self.types)

    def chambers(self, limit: int = 1152) -> list[Elem]:
        from .coxeter import parabolic_elements

        order = [s for s in self.base.system.generators if s in self.types]
        return [self.base * u for u in parabolic_elements(self.base.system, order, limit)]

    def translate(self, w: Elem) -> "ResidueRef":
        return ResidueRef(self.types, w * self.base)


def panel(x: Elem, s: str) -> ResidueRef:
    return ResidueRef(frozenset({s}), x)


def min_coset_rep(v: Elem, subset: Iterable[str]) -> Elem:
    """Minimal-length element of the coset ``v <J>``."""
    system = v.system
    idx = [system.index[s] for s in subset]
    while True:
        for i in idx:
            if is_right_descent(v, i):
                v = v.times_gen(i)
                break
        else:
            return v


def proj(residue: ResidueRef, x: Elem) -> Elem:
    """Projection (gate) of chamber ``x`` onto ``residue``."""
    _same(residue.base, x)
    u = min_coset_rep(weyl_distance(x, residue.base), residue.types)
    return x * u


# --------------------------------------------------------------------------
# roots between chambers, galleries

def inversion_roots(w: Elem) -> list[RootVec]:
    """Roots containing 1 but not ``w``, in the order a reduced gallery meets them."""
    system = w.system
    out = []
    prefix = system.identity()
    for s in reduced_word(w):
        out.append(RootVec(system, _matvec(prefix.mat, system.simple_root(s))))
        prefix = prefix.times_gen(system.index[s])
    return out


def separating_roots(x: Elem, y: Elem) -> frozenset[RootVec]:
    """All roots containing ``x`` but not ``y``."""
    _same(x, y)
    return frozenset(act(x, b) for b in inversion_roots(weyl_distance(x, y)))


@dataclass(frozen=True)
class Gallery:
    start: Elem
    word: Word = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "word", self.start.system.parse_word(self.word))

    def chambers(self) -> list[Elem]:
        out = [self.start]
        idx = self.start.system.index
        for s in self.word:
            out.append(out[-1].times_gen(idx[s]))
        return out

    @property
    def end(self) -> Elem:
        return self.chambers()[-1]

    def crossed_roots(self) -> list[RootVec]:
        """Root containing c_{i-1} but not c_i, for each step."""
        system = self.start.system
        out = []
        cur = self.start
        for s in self.word:
            out.append(RootVec(system, _matvec(cur.mat, system.simple_root(s))))
            cur = cur.times_gen(system.index[s])
        return out


class Minimality(NamedTuple):
    minimal: bool
    # the wall (positive root) crossed twice, with the two step indices
    witness: tuple[RootVec, int, int] | None = None


def is_minimal(gallery: Gallery, mode: str = "by-length") -> Minimality:
    if mode == "by-length":
        ok = len(gallery.word) == length(weyl_distance(gallery.start, gallery.end))
        return Minimality(ok)
    if mode == "by-walls":
        first: dict[RootVec, int] = {}
        for i, beta in enumerate(gallery.crossed_roots()):
            w = beta.wall()
            if w in first:
                return Minimality(False, (w, first[w], i))
            first[w] = i
        return Minimality(True)
    raise ValueError(f"unknown mode {mode!r}")


# --------------------------------------------------------------------------
# convexity

def interval(x: Elem, y: Elem) -> set[Elem]:
    """Chambers lying on some minimal gallery from ``x`` to ``y``."""
    _same(x, y)
    system = x.system
    start = (system.identity(), weyl_distance(x, y))
    seen = {start[0]}
    frontier = [start]
    while frontier:
        nxt = []
        for u, rest in frontier:
            for i in range(system.rank):
                if is_left_descent(rest, i):
                    u2 = u.times_gen(i)
                    if u2 not in seen:
                        seen.add(u2)
                        nxt.append((u2, rest.gen_times(i)))
        frontier = nxt
    return {x * u for u in seen}


def hull_contains(points: Sequence[Elem], w: Elem) -> bool:
    """True iff every root containing all of ``points`` contains ``w``."""
    points = list(points)
    if not points:
        raise EmptyInput("convex hull of an empty set")
    for beta in separating_roots(points[0], w):
        if all(root_contains(beta, p) for p in points[1:]):
            return False
    return True


def convex_hull(points: Iterable[Elem], mode: str = "gallery-closure") -> set[Elem]:
    """Convex hull of a finite set of chambers.

    ``gallery-closure`` saturates under minimal galleries; ``root-intersection``
    grows the set of chambers lying in every root that contains the input,
    starting from one input chamber (that set is gallery connected).
    """
    pts = list(dict.fromkeys(points))
    if not pts:
        raise EmptyInput("convex hull of an empty set")
    if mode == "gallery-closure":
        hull = set(pts)
        new = list(pts)
        done: list[Elem] = []
        while new:
            fresh: set[Elem] = set()
            for a in new:
                for b in done + new:
                    for z in interval(a, b):
                        if z not in hull:
                            fresh.add(z)
            done.extend(new)
            hull |= fresh
            new = list(fresh)
        return hull
    if mode == "root-intersection":
        system = pts[0].system
        hull = {pts[0]}
        frontier = [pts[0]]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(system.rank):
                    v = w.times_gen(i)
                    if v not in hull and hull_contains(pts, v):
                        hull.add(v)
                        nxt.append(v)
            frontier = nxt
        return hull
    raise ValueError(f"unknown mode {mode!r}")


# --------------------------------------------------------------------------
# balls and root census

def _canonical_key(w: Elem):
    idx = w.system.index
    word = reduced_word(w)
    return (len(word), tuple(idx[s] for s in word))


def ball(system: CoxSystem, radius: int, center: Elem | None = None) -> list[Elem]:
    """Chambers at gallery distance <= radius from ``center`` (default 1).

    Ordered by distance, then by the lexicographically smallest reduced word
    of ``center^{-1} w``.
    """
    one = system.identity()
    seen = {one}
    frontier = [one]
    for _ in range(radius):
        nxt = []
        for w in frontier:
            for i in range(system.rank):
                v = w.times_gen(i)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    ordered = sorted(seen, key=_canonical_key)
    if center is None:
        return ordered
    return [center * w for w in ordered]


def enumerate_roots_meeting_ball(system: CoxSystem, radius: int) -> frozenset[RootVec]:
    """Roots whose wall contains a panel {u, us} with both chambers in the ball."""
    if radius < 1:
        raise ValueError("radius must be >= 1")
    members = set(ball(system, radius))
    out = set()
    for u in members:
        for i in range(system.rank):
            if u.times_gen(i) in members:
                beta = RootVec(system, _matvec(u.mat, system.simple_root(i)))
                out.add(beta)
                out.add(-beta)
    return frozenset(out)
