"""
Index calculus for the flat group of translations of an apartment.

The building itself is never built.  A regular locally finite building is
modelled by its thickness parameters ``q_s`` and every group index is read
off from chambers and roots of the apartment Sigma(W, S):

* the stabilizer index ``[G_c : G_c ∩ G_{g^n c}]`` is the product of ``q_s``
  along a minimal gallery from ``c`` to ``g^n(c)``;
* the root ``rho_gamma`` of the flat group attached to ``gamma`` in Phi_R
  measures how far a translation moves the pushed root ``gamma'``, in units
  of the smallest lattice step ``m_gamma``; it is positive when the image
  ``t(gamma')`` is contained in ``gamma'``;
* the scale base ``s_gamma`` is the product of wall thicknesses over one
  lattice period of the parallel class.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct
from math import gcd, prod
from typing import Callable, Mapping, Sequence

from .affine import (
    Gem,
    SectorRef,
    TranslationElem,
    are_parallel,
    enumerate_translations,
    lattice_basis,
    pushed_root,
    root_shift,
    roots_cutting_gem,
    shifted,
    translation_test,
)
from .chambers import (
    Gallery,
    RootVec,
    canonical_order,
    is_minimal,
    root_contains,
    root_type,
    separating_roots,
    weyl_distance,
)
from .coxeter import CoxSystem, Elem, extend_diagram_automorphism, length, reduced_word
from .errors import (
    FactorizationMismatch,
    GalleryNotMinimal,
    InvalidThickness,
    MalformedSpec,
    NotOpposite,
    ThicknessSigmaMismatch,
)


# --------------------------------------------------------------------------
# thickness

@dataclass(frozen=True)
class Thickness:
    """Panel sizes minus one, one value per generator."""

    system: CoxSystem
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        gens = self.system.generators
        if len(self.values) != len(gens):
            raise InvalidThickness(
                f"need {len(gens)} thickness values, got {len(self.values)}")
        for s, q in zip(gens, self.values):
            if isinstance(q, bool) or not isinstance(q, int) or q < 2:
                raise InvalidThickness(f"q_{s} = {q!r} must be an integer >= 2")
        for i, s in enumerate(gens):
            for j, t in enumerate(gens):
                mst = self.system.coxeter_matrix[i][j]
                if i < j and mst % 2 == 1 and self.values[i] != self.values[j]:
                    raise InvalidThickness(
                        f"q_{s} = {self.values[i]} and q_{t} = {self.values[j]} "
                        f"must agree: m({s},{t}) = {mst} is odd")

    @classmethod
    def uniform(cls, system: CoxSystem, q: int) -> "Thickness":
        return cls(system, (q,) * system.rank)

    @classmethod
    def from_mapping(cls, system: CoxSystem, q: Mapping[str, int]) -> "Thickness":
        missing = set(system.generators) - set(q)
        if missing:
            raise InvalidThickness(f"missing thickness for {sorted(missing)}")
        return cls(system, tuple(q[s] for s in system.generators))

    @classmethod
    def parse(cls, system: CoxSystem, text: str) -> "Thickness":
        """``"2"`` (uniform), ``"2,3"`` (positional) or ``"s0=2,s1=3"``."""
        parts = [p.strip() for p in str(text).split(",") if p.strip()]
        if not parts:
            raise InvalidThickness("empty thickness specification")
        try:
            if all("=" in p for p in parts):
                pairs = [p.split("=", 1) for p in parts]
                return cls.from_mapping(system, {k.strip(): int(v) for k, v in pairs})
            vals = [int(p) for p in parts]
        except ValueError:
            raise InvalidThickness(f"cannot parse thickness {text!r}") from None
        if len(vals) == 1:
            return cls.uniform(system, vals[0])
        return cls(system, tuple(vals))

    def __getitem__(self, s: str) -> int:
        return self.values[self.system.index[s]]

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.system.generators, self.values))

    def check_sigma(self, sigma: Mapping[str, str]) -> None:
        for s, t in sigma.items():
            if self[s] != self[t]:
                raise ThicknessSigmaMismatch(
                    f"q_{s} = {self[s]} but q_{sigma[s]} = {self[t]}")


def q_length(w: Elem, q: Thickness) -> int:
    """Product of q_s over a reduced word of ``w``."""
    return prod(q[s] for s in reduced_word(w))


def wall_thickness(beta: RootVec, q: Thickness) -> int:
    return q[root_type(beta)]


# --------------------------------------------------------------------------
# stabilizer indices and tidiness

def _as_map(g, q: Thickness | None = None) -> tuple[Callable[[Elem], Elem], Elem]:
    if isinstance(g, TranslationElem):
        g = g.elem
    if isinstance(g, Elem):
        return (lambda x: g * x), g
    w, sigma = g
    sigma = dict(sigma)
    if q is not None:
        q.check_sigma(sigma)
    ext = extend_diagram_automorphism(w.system, sigma)
    return (lambda x: w * ext(x)), w


def iterate(g, c: Elem, n: int) -> Elem:
    f, _ = _as_map(g)
    x = c
    for _ in range(n):
        x = f(x)
    return x


def stabilizer_index(c: Elem, g, n: int, q: Thickness) -> int:
    """[G_c : G_c ∩ G_{g^n(c)}] in a Weyl-transitive group, from the thickness.

    ``g`` is an element of W acting by left multiplication, or a pair
    ``(w, sigma)`` acting by ``x -> w * sigma(x)``.
    """
    f, _ = _as_map(g, q)
    x = c
    for _ in range(n):
        x = f(x)
    return q_length(weyl_distance(c, x), q)


@dataclass
class TidinessReport:
    indices: list[int]
    holds: list[bool]
    is_translation: bool
    concatenation_minimal: bool
    verdict: str  # "tidy" | "not tidy" | "no claim"

    def as_dict(self) -> dict:
        return {"indices": self.indices, "holds": self.holds,
                "is_translation": self.is_translation,
                "concatenation_minimal": self.concatenation_minimal,
                "verdict": self.verdict}


def moller_tidiness_check(c: Elem, g, N: int, q: Thickness) -> TidinessReport:
    """Check [U : U ∩ g^n U g^-n] = [U : U ∩ g U g^-1]^n for n = 1..N, U = G_c."""
    f, w = _as_map(g, q)
    indices, holds, lengths = [], [], []
    x = c
    for n in range(1, N + 1):
        x = f(x)
        d = weyl_distance(c, x)
        lengths.append(length(d))
        indices.append(q_length(d, q))
        holds.append(indices[-1] == indices[0] ** n)
    is_translation = (isinstance(g, (Elem, TranslationElem))
                      and translation_test(w) is not None)
    concat = all(lengths[n - 1] == n * lengths[0] for n in range(1, N + 1))
    if is_translation:
        verdict = "tidy" if all(holds) else "not tidy"
    else:
        verdict = "no claim"
    return TidinessReport(indices, holds, is_translation, concat, verdict)


# --------------------------------------------------------------------------
# eigenfactors

@dataclass(frozen=True)
class EigenfactorLabel:
    kind: str  # "FixApartment" | "FixRoot"
    root: RootVec | None = None

    def __repr__(self):
        return self.kind if self.root is None else f"FixRoot{self.root.vec}"


FIX_APARTMENT = EigenfactorLabel("FixApartment")


def default_gallery(sector: SectorRef) -> Gallery:
    """The lexicographically first minimal gallery from the apex to its opposite."""
    c = sector.apex
    d = sector.gem.opposite(c)
    return Gallery(c, reduced_word(weyl_distance(c, d)))


def _check_gallery(sector: SectorRef, gallery: Gallery) -> list[Elem]:
    chambers = gallery.chambers()
    if chambers[0] != sector.apex:
        raise ValueError("gallery must start at the sector apex")
    if chambers[-1] != sector.gem.opposite(sector.apex):
        raise NotOpposite("gallery must end at the chamber opposite the apex")
    if not is_minimal(gallery).minimal:
        raise GalleryNotMinimal(f"gallery {' '.join(gallery.word)} is not minimal")
    return chambers


def eigenfactor_label(sector: SectorRef, gallery: Gallery | None,
                      eps: Sequence[int]) -> EigenfactorLabel:
    """Label of the eigenfactor cut out by the sign vector ``eps``."""
    gallery = gallery or default_gallery(sector)
    chambers = _check_gallery(sector, gallery)
    if len(eps) != len(chambers) - 1 or any(e not in (1, -1) for e in eps):
        raise ValueError(f"eps must be a vector of {len(chambers) - 1} signs")
    gem = sector.gem
    picked = [ci if e == 1 else gem.opposite(ci) for ci, e in zip(chambers[1:], eps)]
    for gamma in canonical_order(roots_cutting_gem(gem)):
        if all(root_contains(gamma, d) for d in picked):
            return EigenfactorLabel("FixRoot", pushed_root(gamma, sector.apex))
    return FIX_APARTMENT


def realizing_signs(sector: SectorRef, gallery: Gallery | None, gamma: RootVec
                    ) -> tuple[int, ...]:
    """Signs with +1 exactly where c_i lies in gamma."""
    gallery = gallery or default_gallery(sector)
    chambers = _check_gallery(sector, gallery)
    return tuple(1 if root_contains(gamma, ci) else -1 for ci in chambers[1:])


@dataclass
class EigenfactorCensus:
    by_signs: dict[tuple[int, ...], EigenfactorLabel]
    labels: set[EigenfactorLabel]
    realized: dict[RootVec, bool]


def eigenfactor_census(sector: SectorRef, gallery: Gallery | None = None
                       ) -> EigenfactorCensus:
    """All labels over the 2^k sign vectors, together with U_{H0}."""
    gallery = gallery or default_gallery(sector)
    k = len(gallery.word)
    by_signs = {eps: eigenfactor_label(sector, gallery, eps)
                for eps in iproduct((1, -1), repeat=k)}
    labels = set(by_signs.values()) | {FIX_APARTMENT}
    realized = {}
    for gamma in roots_cutting_gem(sector.gem):
        eps = realizing_signs(sector, gallery, gamma)
        want = EigenfactorLabel("FixRoot", pushed_root(gamma, sector.apex))
        realized[gamma] = by_signs[eps] == want
    return EigenfactorCensus(by_signs, labels, realized)


# --------------------------------------------------------------------------
# the root system of the flat group

@dataclass(frozen=True)
class FlatRoot:
    gamma: RootVec
    pushed: RootVec
    m: int
    s: int

    def value(self, t: TranslationElem | Elem) -> int:
        """rho_gamma(t); positive iff t(gamma') is contained in gamma'."""
        k = root_shift(t, self.pushed)
        if k % self.m:
            raise ArithmeticError(f"shift {k} not divisible by m = {self.m}")
        return -k // self.m

    def as_dict(self) -> dict:
        return {"gamma": list(self.gamma.vec), "pushed": list(self.pushed.vec),
                "m": self.m, "s": self.s}


def flat_root_system(gem: Gem, c: Elem, q: Thickness) -> list[FlatRoot]:
    """One flat root per gamma in Phi_R, in canonical order."""
    if not gem.contains(c):
        raise ValueError("apex must be a chamber of the gem")
    basis = lattice_basis(gem.system)
    out = []
    for gamma in canonical_order(roots_cutting_gem(gem)):
        pushed = pushed_root(gamma, c)
        m = 0
        for t in basis:
            m = gcd(m, abs(root_shift(t, pushed)))
        s = prod(wall_thickness(shifted(pushed, -j), q) for j in range(m))
        out.append(FlatRoot(gamma, pushed, m, s))
    return out


def _pairs(roots: Sequence[FlatRoot]) -> list[tuple[FlatRoot, FlatRoot]]:
    by_gamma = {fr.gamma: fr for fr in roots}
    seen, out = set(), []
    for fr in roots:
        if fr.gamma in seen:
            continue
        other = by_gamma[-fr.gamma]
        seen.update({fr.gamma, other.gamma})
        out.append((fr, other))
    return out


@dataclass
class ScaleReport:
    scale: int
    factors: list[tuple[FlatRoot, int]] = field(default_factory=list)

    @property
    def product(self) -> int:
        return prod(fr.s ** e for fr, e in self.factors)

    def as_dict(self) -> dict:
        return {"scale": self.scale,
                "factors": [{"gamma": list(fr.gamma.vec), "s": fr.s, "exponent": e}
                            for fr, e in self.factors],
                "product": self.product}


def scale_with_factorization(t: TranslationElem | Elem, gem: Gem, c: Elem,
                             q: Thickness) -> ScaleReport:
    """Scale q_length(delta(c, t c)) and its factorization over flat-root pairs."""
    elem = t.elem if isinstance(t, TranslationElem) else t
    if translation_test(elem) is None:
        raise MalformedSpec(f"{' '.join(elem.word())} is not a translation")
    roots = flat_root_system(gem, c, q)
    scale = q_length(weyl_distance(c, elem * c), q)
    report = ScaleReport(scale, [(a, abs(a.value(elem))) for a, _ in _pairs(roots)])
    if report.product != scale:
        raise FactorizationMismatch(
            f"scale {scale} != product {report.product}",
            witness={"translation": list(elem.word()),
                     "apex": list(c.word()),
                     "factors": report.as_dict()["factors"]})
    return report


def wall_crossing_census(c: Elem, t: TranslationElem | Elem,
                         roots: Sequence[FlatRoot]) -> dict[RootVec, int]:
    """Walls between c and t(c), counted per pair {gamma, -gamma}."""
    elem = t.elem if isinstance(t, TranslationElem) else t
    counts = {a.gamma: 0 for a, _ in _pairs(roots)}
    for beta in separating_roots(c, elem * c):
        for gamma in counts:
            if are_parallel(gamma, beta) or are_parallel(-gamma, beta):
                counts[gamma] += 1
                break
    return counts


def separating_translation(a: FlatRoot, b: FlatRoot, bound: int = 3
                           ) -> TranslationElem | None:
    """A lattice translation with rho_a(t) < 0 < rho_b(t), if one lies in the box."""
    for t in enumerate_translations(a.gamma.system, bound):
        if a.value(t) < 0 < b.value(t):
            return t
    return None


def value_on_basis(fr: FlatRoot) -> tuple[int, ...]:
    return tuple(fr.value(t) for t in lattice_basis(fr.gamma.system))
