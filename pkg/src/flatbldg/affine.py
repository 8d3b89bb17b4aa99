"""
Affine geometry of Sigma(W, S): gems, sectors, parallel roots, translations.

Only untwisted Cartan data are produced by ``build_system``, so the roots
parallel to ``beta`` are exactly ``beta + k * delta`` for integer ``k``
(``delta`` the null vector), and ``beta + delta`` is the next larger
half-space in the parallel class.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product as iproduct
from math import lcm
from typing import Sequence

from .chambers import (
    RootVec,
    ResidueRef,
    act,
    proj,
    reflection,
    root_contains,
    simple_root,
)
from .coxeter import CoxSystem, Elem, _matvec, length, parabolic_elements, solve_exact
from .errors import (
    NotAffine,
    NotParallel,
    NotSpecialVertex,
    SearchBoundExceeded,
)

DEFAULT_GEM_LIMIT = 1152


def _require_affine(system: CoxSystem):
    if system.kind != "affine" or system.affine_data is None:
        raise NotAffine(f"{system.name} is not affine")
    return system.affine_data


def null_vector(system: CoxSystem) -> tuple[int, ...]:
    return _require_affine(system).null_vector


def coxeter_number(system: CoxSystem) -> int:
    return sum(null_vector(system))


# --------------------------------------------------------------------------
# gems and sectors

@dataclass(frozen=True, eq=False)
class Gem:
    """The residue of type S - {vertex} containing ``base``."""

    vertex: str
    base: Elem
    limit: int = DEFAULT_GEM_LIMIT

    def __eq__(self, other):
        if not isinstance(other, Gem):
            return NotImplemented
        return self.vertex == other.vertex and self.contains(other.base)

    def __hash__(self):
        return hash((self.vertex, frozenset(self.chambers)))

    def __repr__(self):
        return f"Gem({self.vertex}, base={' '.join(self.base.word()) or '1'})"

    @property
    def system(self) -> CoxSystem:
        return self.base.system

    @property
    def types(self) -> tuple[str, ...]:
        return tuple(s for s in self.system.generators if s != self.vertex)

    @property
    def residue(self) -> ResidueRef:
        return ResidueRef(frozenset(self.types), self.base)

    @cached_property
    def _parabolic(self) -> list[Elem]:
        return parabolic_elements(self.system, self.types, self.limit)

    @cached_property
    def chambers(self) -> tuple[Elem, ...]:
        return tuple(self.base * u for u in self._parabolic)

    @cached_property
    def _members(self) -> frozenset[Elem]:
        return frozenset(self.chambers)

    @cached_property
    def longest(self) -> Elem:
        return max(self._parabolic, key=length)

    def contains(self, x: Elem) -> bool:
        return x in self._members

    def opposite(self, c: Elem) -> Elem:
        """The chamber of the gem opposite ``c``."""
        if not self.contains(c):
            raise ValueError("chamber is not in the gem")
        return c * self.longest

    def project(self, x: Elem) -> Elem:
        return proj(self.residue, x)


def make_gem(system: CoxSystem, vertex: str, base: Elem | None = None,
             limit: int = DEFAULT_GEM_LIMIT) -> Gem:
    data = _require_affine(system)
    if vertex not in data.special_vertices:
        raise NotSpecialVertex(
            f"{vertex} is not special in {system.name}; special: {data.special_vertices}")
    gem = Gem(vertex, base if base is not None else system.identity(), limit)
    gem.chambers  # enumerate now so the size guard fires early
    return gem


def gems(system: CoxSystem, limit: int = DEFAULT_GEM_LIMIT) -> list[Gem]:
    """The gems containing the identity chamber, one per special vertex."""
    return [make_gem(system, o, limit=limit)
            for o in _require_affine(system).special_vertices]


@dataclass(frozen=True)
class SectorRef:
    gem: Gem
    apex: Elem

    def __post_init__(self):
        if not self.gem.contains(self.apex):
            raise ValueError("sector apex must be a chamber of the gem")

    @property
    def system(self) -> CoxSystem:
        return self.apex.system

    @cached_property
    def roots(self) -> tuple[RootVec, ...]:
        """[R, c]: roots containing the apex but not its gem neighbour of type s."""
        return tuple(act(self.apex, simple_root(self.system, s)) for s in self.gem.types)

    def opposite(self) -> "SectorRef":
        return SectorRef(self.gem, self.gem.opposite(self.apex))


def sector_membership(sector: SectorRef, d: Elem, mode: str = "root-intersection") -> bool:
    if mode == "root-intersection":
        return all(root_contains(beta, d) for beta in sector.roots)
    if mode == "projection":
        return sector.gem.project(d) == sector.apex
    raise ValueError(f"unknown mode {mode!r}")


def roots_cutting_gem(gem: Gem) -> frozenset[RootVec]:
    """Phi_R: roots with chambers of the gem on both sides."""
    system = gem.system
    candidates = set()
    for u in gem.chambers:
        for s in gem.types:
            beta = act(u, simple_root(system, s))
            candidates.add(beta)
            candidates.add(-beta)
    return frozenset(
        beta for beta in candidates
        if any(root_contains(beta, x) for x in gem.chambers)
        and any(not root_contains(beta, x) for x in gem.chambers))


# --------------------------------------------------------------------------
# parallel classes

def shifted(beta: RootVec, k: int) -> RootVec:
    """The root k steps up the parallel class of ``beta`` (larger for k > 0)."""
    delta = null_vector(beta.system)
    return RootVec(beta.system, tuple(b + k * d for b, d in zip(beta.vec, delta)))


def parallel_dist(beta1: RootVec, beta2: RootVec) -> int:
    """Signed number of steps from ``beta1`` to ``beta2`` in their parallel class.

    Positive when ``beta2`` is the strictly larger half-space.
    """
    delta = null_vector(beta1.system)
    diff = [b - a for a, b in zip(beta1.vec, beta2.vec)]
    k = Fraction(diff[0], delta[0])
    if k.denominator != 1 or any(x != k * d for x, d in zip(diff, delta)):
        raise NotParallel(f"{beta1.vec} and {beta2.vec} are not parallel")
    return int(k)


def are_parallel(beta1: RootVec, beta2: RootVec) -> bool:
    try:
        parallel_dist(beta1, beta2)
    except NotParallel:
        return False
    return True


def pushed_root(gamma: RootVec, c: Elem) -> RootVec:
    """conv(gamma + {c}): the smallest root parallel to gamma containing c."""
    delta = null_vector(gamma.system)
    # c lies in gamma + k delta iff c^{-1} gamma + k delta is positive
    v = _matvec(c.inv, gamma.vec)
    k = 0
    while True:
        w = [x + k * d for x, d in zip(v, delta)]
        if all(x >= 0 for x in w) and any(w):
            return shifted(gamma, k)
        k += 1


# --------------------------------------------------------------------------
# translations

@dataclass(frozen=True)
class TranslationElem:
    """A translation of Sigma with its coordinates in the lattice basis."""

    elem: Elem
    lattice: tuple[int, ...]

    def __mul__(self, other: "TranslationElem") -> "TranslationElem":
        return TranslationElem(self.elem * other.elem,
                               tuple(a + b for a, b in zip(self.lattice, other.lattice)))

    def inverse(self) -> "TranslationElem":
        from .coxeter import inverse

        return TranslationElem(inverse(self.elem), tuple(-a for a in self.lattice))

    def __pow__(self, n: int) -> "TranslationElem":
        return TranslationElem(self.elem ** n, tuple(n * a for a in self.lattice))


def translation_offsets(w: Elem) -> tuple[int, ...] | None:
    """``n`` with ``w(alpha_s) = alpha_s + n_s delta`` for all s, else None."""
    delta = null_vector(w.system)
    out = []
    for s in range(w.system.rank):
        col = [row[s] for row in w.mat]
        col[s] -= 1
        k = Fraction(col[0], delta[0])
        if k.denominator != 1 or any(x != k * d for x, d in zip(col, delta)):
            return None
        out.append(int(k))
    return tuple(out)


@lru_cache(maxsize=None)
def _basis(system: CoxSystem) -> tuple[tuple[Elem, ...], tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Lattice basis elements, the index set they are read on, their offsets."""
    data = _require_affine(system)
    o = data.special_vertices[0]
    finite = [i for i, s in enumerate(system.generators) if s != o]
    elems = []
    for i in finite:
        a = simple_root(system, i)
        # r_{delta - a} r_a translates by the coroot of a
        elems.append(reflection(shifted(-a, 1)) * reflection(a))
    offsets = tuple(translation_offsets(t) for t in elems)
    assert all(x is not None for x in offsets)
    return tuple(elems), tuple(finite), offsets


def lattice_basis(system: CoxSystem) -> list[TranslationElem]:
    elems, _, _ = _basis(system)
    n = len(elems)
    return [TranslationElem(t, tuple(int(i == j) for j in range(n)))
            for i, t in enumerate(elems)]


def translation_test(w: Elem) -> TranslationElem | None:
    """Return ``w`` with its lattice coordinates if it is a translation."""
    offs = translation_offsets(w)
    if offs is None:
        return None
    _, finite, basis_offs = _basis(w.system)
    a = [[basis_offs[j][i] for j in range(len(finite))] for i in finite]
    lam = solve_exact(a, [offs[i] for i in finite])
    if any(x.denominator != 1 for x in lam):  # pragma: no cover
        raise ArithmeticError("translation outside the lattice")
    return TranslationElem(w, tuple(int(x) for x in lam))


def translation(system: CoxSystem, lattice: Sequence[int]) -> TranslationElem:
    elems, _, _ = _basis(system)
    if len(lattice) != len(elems):
        raise ValueError(f"lattice vector needs {len(elems)} coordinates")
    w = system.identity()
    for t, k in zip(elems, lattice):
        w = w * t ** k
    return TranslationElem(w, tuple(int(k) for k in lattice))


def enumerate_translations(system: CoxSystem, bound: int) -> list[TranslationElem]:
    """Translations with lattice coordinates in [-bound, bound]."""
    _require_affine(system)
    n = len(_basis(system)[0])
    return [translation(system, lam)
            for lam in iproduct(range(-bound, bound + 1), repeat=n)]


def root_shift(t: TranslationElem | Elem, beta: RootVec) -> int:
    """``k`` with ``t(beta) = beta + k delta``, i.e. parallel_dist(beta, t(beta))."""
    elem = t.elem if isinstance(t, TranslationElem) else t
    return parallel_dist(beta, act(elem, beta))


def _shift_matrix(roots: Sequence[RootVec]) -> list[list[int]]:
    basis = lattice_basis(roots[0].system)
    return [[root_shift(b, beta) for b in basis] for beta in roots]


def fundamental_translation(sector: SectorRef, alpha: RootVec) -> TranslationElem:
    """t_{R,c,alpha}: fixes the other roots of [R,c], shrinks alpha minimally."""
    roots = list(sector.roots)
    if alpha not in roots:
        raise ValueError("alpha must belong to [R, c]")
    # shifts are linear in the lattice vector; solve shift = -k e_alpha exactly
    m = _shift_matrix(roots)
    target = [int(beta == alpha) for beta in roots]
    x = solve_exact(m, target)
    k = lcm(*(v.denominator for v in x))
    lam = tuple(int(-k * v) for v in x)
    return translation(sector.system, lam)


def fundamental_translation_search(sector: SectorRef, alpha: RootVec,
                                   bound: int | None = None) -> TranslationElem:
    """Brute-force version of ``fundamental_translation`` over a lattice box.

    The default box has coordinates in [-2h, 2h], h the Coxeter number.
    """
    system = sector.system
    if bound is None:
        bound = 2 * coxeter_number(system)
    roots = list(sector.roots)
    if alpha not in roots:
        raise ValueError("alpha must belong to [R, c]")
    m = _shift_matrix(roots)
    best = None
    for lam in iproduct(range(-bound, bound + 1), repeat=len(m[0])):
        shifts = [sum(a * b for a, b in zip(row, lam)) for row in m]
        ok = all(sh == 0 for sh, beta in zip(shifts, roots) if beta != alpha)
        k = shifts[roots.index(alpha)]
        if ok and k < 0 and (best is None or k > best[0]):
            best = (k, lam)
    if best is None:
        raise SearchBoundExceeded(f"no candidate within lattice box {bound}")
    return translation(system, best[1])


def sector_translation(sector: SectorRef) -> TranslationElem:
    """t_{R,c}: product of the fundamental translations over [R, c]."""
    out = translation(sector.system, (0,) * len(sector.roots))
    for alpha in sector.roots:
        out = out * fundamental_translation(sector, alpha)
    return out


def sector_chambers(sector: SectorRef, candidates: Sequence[Elem]) -> list[Elem]:
    return [d for d in candidates if sector_membership(sector, d)]

