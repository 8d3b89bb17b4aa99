"""
Crystallographic Coxeter systems in the reflection representation.

Elements of W are stored as exact integer matrices acting on the root
lattice, written in the basis of simple roots.  A simple reflection acts by

    s(alpha_t) = alpha_t - cartan[s][t] * alpha_s,

so column ``t`` of an element's matrix is the image of ``alpha_t``.  Python
integers are used throughout, so entries never overflow.

>>> W = build_system("A~2")
>>> W.generators
('s0', 's1', 's2')
>>> w = W.element("s0 s1 s0")
>>> length(w), reduced_word(w)
(3, ('s0', 's1', 's0'))
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product as iproduct
from math import gcd
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    AsymmetricMatrix,
    MalformedSpec,
    NonCrystallographic,
    NotARootVector,
    NotDiagramCompatible,
    SystemMismatch,
)

INF = 0  # m_st = infinity is encoded as 0 in coxeter matrices

Matrix = tuple[tuple[int, ...], ...]
Word = tuple[str, ...]

# (c_st, c_ts) -> m_st
_PAIR_TO_M = {(0, 0): 2, (-1, -1): 3, (-1, -2): 4, (-2, -1): 4,
              (-1, -3): 6, (-3, -1): 6, (-2, -2): INF}
_ALLOWED_M = {2, 3, 4, 6, INF}

_TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*(~?)\s*(\d+)\s*(~?)\s*$")


# --------------------------------------------------------------------------
# integer matrix helpers

def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols)
                 for row in a)


def _row_reflect(a: Matrix, c_row: Sequence[int], i: int) -> tuple[int, ...]:
    # row i of s_i * a, where s_i = I - e_i c_row
    return tuple(a[i][j] - sum(c * a[t][j] for t, c in enumerate(c_row) if c)
                 for j in range(len(a[0])))


def _matvec(a: Matrix, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def sign_of(v: Sequence[int]) -> int:
    """+1 if ``v`` is nonzero with all entries >= 0, -1 if all <= 0, else 0."""
    pos = neg = False
    for x in v:
        if x > 0:
            pos = True
        elif x < 0:
            neg = True
    if pos and not neg:
        return 1
    if neg and not pos:
        return -1
    return 0


def solve_exact(a: Sequence[Sequence[int]], b: Sequence[int]) -> list[Fraction]:
    """Solve the square system ``a x = b`` over the rationals."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def _integer_kernel_vector(c: Matrix) -> tuple[int, ...] | None:
    """Primitive integer vector spanning the kernel of ``c`` (corank 1 only)."""
    n = len(c)
    m = [[Fraction(x) for x in row] for row in c]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, n) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        m[r] = [x / p for x in m[r]]
        for i in range(n):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    free = [j for j in range(n) if j not in pivots]
    if len(free) != 1:
        return None
    f = free[0]
    v = [Fraction(0)] * n
    v[f] = Fraction(1)
    for i, col in enumerate(pivots):
        v[col] = -m[i][f]
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    if sign_of(ints) < 0:
        ints = [-x for x in ints]
    return tuple(ints)


# --------------------------------------------------------------------------
# root data for finite-type Cartan matrices

def finite_positive_roots(cartan: Matrix, support: Sequence[int] | None = None
                          ) -> list[tuple[int, ...]]:
    """Positive roots of the parabolic root system on ``support``.

    Roots are vectors of length ``len(cartan)`` in the simple-root basis.
    Only meaningful when the parabolic subsystem is of finite type.
    """
    n = len(cartan)
    idx = list(range(n)) if support is None else list(support)
    simple = [tuple(int(i == j) for j in range(n)) for i in idx]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for i in idx:
                pairing = sum(cartan[i][j] * v[j] for j in range(n))
                if pairing == 0:
                    continue
                w = list(v)
                w[i] -= pairing
                w = tuple(w)
                if sign_of(w) > 0 and w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return sorted(seen, key=lambda v: (sum(v), tuple(-x for x in v)))


def _cartan_from_gram(gram: Sequence[Sequence[int]]) -> Matrix:
    n = len(gram)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            val = Fraction(2 * gram[i][j], gram[i][i])
            if val.denominator != 1:
                raise NonCrystallographic(f"non-integral Cartan entry at {i},{j}")
            row.append(int(val))
        out.append(tuple(row))
    return tuple(out)


def _finite_gram(letter: str, n: int) -> list[list[int]]:
    g = [[0] * n for _ in range(n)]

    def link(i, j, val):
        g[i - 1][j - 1] = g[j - 1][i - 1] = val

    if letter == "A":
        for i in range(1, n + 1):
            g[i - 1][i - 1] = 2
        for i in range(1, n):
            link(i, i + 1, -1)
    elif letter == "B":
        if n < 2:
            raise MalformedSpec("B_n needs n >= 2")
        for i in range(1, n):
            g[i - 1][i - 1] = 4
        g[n - 1][n - 1] = 2
        for i in range(1, n):
            link(i, i + 1, -2)
    elif letter == "C":
        if n < 2:
            raise MalformedSpec("C_n needs n >= 2")
        for i in range(1, n):
            g[i - 1][i - 1] = 2
        g[n - 1][n - 1] = 4
        for i in range(1, n - 1):
            link(i, i + 1, -1)
        link(n - 1, n, -2)
    elif letter == "D":
        if n < 4:
            raise MalformedSpec("D_n needs n >= 4")
        for i in range(1, n + 1):
            g[i - 1][i - 1] = 2
        for i in range(1, n - 1):
            link(i, i + 1, -1)
        link(n - 2, n, -1)
    elif letter == "E":
        if n not in (6, 7, 8):
            raise MalformedSpec("E_n needs n in {6, 7, 8}")
        for i in range(1, n + 1):
            g[i - 1][i - 1] = 2
        link(1, 3, -1)
        link(2, 4, -1)
        for i in range(3, n):
            link(i, i + 1, -1)
    elif letter == "F":
        if n != 4:
            raise MalformedSpec("F_n needs n = 4")
        g[0][0] = g[1][1] = 4
        g[2][2] = g[3][3] = 2
        link(1, 2, -2)
        link(2, 3, -2)
        link(3, 4, -1)
    elif letter == "G":
        if n != 2:
            raise MalformedSpec("G_n needs n = 2")
        g[0][0], g[1][1] = 2, 6
        link(1, 2, -3)
    else:  # pragma: no cover - guarded by the regex
        raise MalformedSpec(letter)
    return g


def _affine_gram(letter: str, n: int) -> list[list[int]]:
    """Gram matrix of the untwisted affine extension, node 0 first."""
    fin = _finite_gram(letter, n)
    cartan = _cartan_from_gram(fin)
    theta = finite_positive_roots(cartan)[-1]
    theta_norm = sum(theta[i] * fin[i][j] * theta[j]
                     for i in range(n) for j in range(n))
    pair = [sum(theta[i] * fin[i][j] for i in range(n)) for j in range(n)]
    g = [[theta_norm] + [-p for p in pair]]
    for j in range(n):
        g.append([-pair[j]] + fin[j])
    return g


# --------------------------------------------------------------------------
# the system itself

@dataclass(frozen=True)
class AffineData:
    null_vector: tuple[int, ...]
    special_vertices: tuple[str, ...]


@dataclass(frozen=True, eq=False)
class CoxSystem:
    """A crystallographic Coxeter system with its Cartan matrix."""

    name: str
    generators: tuple[str, ...]
    coxeter_matrix: Matrix
    cartan: Matrix
    kind: str  # "spherical" | "affine" | "other"
    affine_data: AffineData | None = None

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, CoxSystem):
            return NotImplemented
        return (self.generators == other.generators
                and self.cartan == other.cartan)

    def __hash__(self):
        return hash((self.generators, self.cartan))

    def __repr__(self):
        return f"CoxSystem({self.name!r})"

    @property
    def rank(self) -> int:
        return len(self.generators)

    @cached_property
    def index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.generators)}

    @cached_property
    def _reflections(self) -> tuple[Matrix, ...]:
        n = self.rank
        mats = []
        for s in range(n):
            rows = [list(r) for r in _identity(n)]
            for j in range(n):
                rows[s][j] -= self.cartan[s][j]
            mats.append(tuple(tuple(r) for r in rows))
        return tuple(mats)

    @cached_property
    def _gens(self) -> tuple["Elem", ...]:
        return tuple(Elem(self, m, m) for m in self._reflections)

    def gen(self, s: str | int) -> "Elem":
        if isinstance(s, str):
            try:
                s = self.index[s]
            except KeyError:
                raise MalformedSpec(
                    f"unknown generator {s!r}; expected one of {self.generators}"
                ) from None
        return self._gens[s]

    def identity(self) -> "Elem":
        m = _identity(self.rank)
        return Elem(self, m, m)

    def parse_word(self, word: str | Iterable[str]) -> Word:
        if isinstance(word, str):
            word = word.replace(",", " ").split()
        word = tuple(word)
        for s in word:
            if s not in self.index:
                raise MalformedSpec(
                    f"unknown generator {s!r}; expected one of {self.generators}")
        return word

    def element(self, word: str | Iterable[str] = ()) -> "Elem":
        """The product of the generators in ``word`` (string or sequence)."""
        w = self.identity()
        for s in self.parse_word(word):
            w = w.times_gen(self.index[s])
        return w

    def simple_root(self, s: str | int) -> tuple[int, ...]:
        i = self.index[s] if isinstance(s, str) else s
        return tuple(int(i == j) for j in range(self.rank))

    def m(self, s: str | int, t: str | int) -> int:
        i = self.index[s] if isinstance(s, str) else s
        j = self.index[t] if isinstance(t, str) else t
        return self.coxeter_matrix[i][j]


class Elem:
    """An element of W, i.e. a chamber of the Coxeter complex.

    Equality and hashing use the matrix; the inverse matrix is carried along
    so that left descents cost a single column lookup.
    """

    __slots__ = ("system", "mat", "inv", "_hash")

    def __init__(self, system: CoxSystem, mat: Matrix, inv: Matrix):
        self.system = system
        self.mat = mat
        self.inv = inv
        self._hash = hash(mat)

    def __eq__(self, other):
        if not isinstance(other, Elem):
            return NotImplemented
        return self.mat == other.mat and (
            self.system is other.system or self.system == other.system)

    def __hash__(self):
        return self._hash

    def __mul__(self, other: "Elem") -> "Elem":
        return multiply(self, other)

    def __pow__(self, n: int) -> "Elem":
        base = self if n >= 0 else inverse(self)
        out = self.system.identity()
        for _ in range(abs(n)):
            out = out * base
        return out

    def __call__(self, v: Sequence[int]) -> tuple[int, ...]:
        return _matvec(self.mat, v)

    def times_gen(self, i: int) -> "Elem":
        """``self * s_i``; only column i of the matrix and row i of the inverse move."""
        c = self.system.cartan[i]
        mat = tuple(tuple(x - c[t] * row[i] for t, x in enumerate(row)) for row in self.mat)
        inv = list(self.inv)
        inv[i] = _row_reflect(self.inv, c, i)
        return Elem(self.system, mat, tuple(inv))

    def gen_times(self, i: int) -> "Elem":
        """``s_i * self``."""
        c = self.system.cartan[i]
        mat = list(self.mat)
        mat[i] = _row_reflect(self.mat, c, i)
        inv = tuple(tuple(x - c[t] * row[i] for t, x in enumerate(row)) for row in self.inv)
        return Elem(self.system, tuple(mat), inv)

    def __repr__(self):
        word = " ".join(reduced_word(self)) or "1"
        return f"Elem({self.system.name}: {word})"

    def word(self) -> Word:
        return reduced_word(self)

    def __len__(self):
        return length(self)


# --------------------------------------------------------------------------
# construction and validation

def _coxeter_from_cartan(c: Matrix) -> Matrix:
    n = len(c)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(1)
                continue
            pair = (c[i][j], c[j][i])
            if pair not in _PAIR_TO_M:
                raise NonCrystallographic(f"Cartan pair {pair} at ({i}, {j})")
            row.append(_PAIR_TO_M[pair])
        rows.append(tuple(row))
    return tuple(rows)


def _components(m: Matrix) -> list[list[int]]:
    n = len(m)
    seen, comps = set(), []
    for start in range(n):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j != i and m[i][j] != 2 and j not in seen:
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _bilinear_form(m: Matrix, comp: Sequence[int]) -> np.ndarray:
    b = np.empty((len(comp), len(comp)))
    for a, i in enumerate(comp):
        for b_, j in enumerate(comp):
            mij = m[i][j]
            b[a, b_] = -1.0 if mij == INF else -np.cos(np.pi / mij)
    return b


def _classify_component(m: Matrix, comp: Sequence[int]) -> str:
    eig = np.linalg.eigvalsh(_bilinear_form(m, comp))
    tol = 1e-9
    if eig.min() > tol:
        return "spherical"
    if eig.min() > -tol and int((np.abs(eig) <= tol).sum()) == 1:
        return "affine"
    return "other"


def classify(coxeter_matrix: Matrix) -> str:
    """Classify a Coxeter matrix as spherical, (connected) affine or other."""
    comps = _components(coxeter_matrix)
    kinds = [_classify_component(coxeter_matrix, c) for c in comps]
    if all(k == "spherical" for k in kinds):
        return "spherical"
    if len(comps) == 1 and kinds[0] == "affine":
        return "affine"
    return "other"


def _is_real_root(cartan: Matrix, v: Sequence[int]) -> bool:
    sgn = sign_of(v)
    if sgn == 0:
        return False
    v = [sgn * x for x in v]
    n = len(cartan)
    while True:
        if sum(v) == 1:
            return True
        for i in range(n):
            pairing = sum(cartan[i][j] * v[j] for j in range(n))
            if pairing > 0:
                v[i] -= pairing
                if v[i] < 0:
                    return False
                break
        else:
            return False


def _affine_data(gens: Sequence[str], cartan: Matrix) -> AffineData:
    delta = _integer_kernel_vector(cartan)
    if delta is None or any(x <= 0 for x in delta):
        raise MalformedSpec("affine diagram without a positive null vector")
    special = tuple(g for g, d in zip(gens, delta) if d == 1)
    return AffineData(delta, special)


def _is_untwisted(cartan: Matrix, delta: Sequence[int]) -> bool:
    n = len(cartan)
    return all(_is_real_root(cartan, [int(i == j) + delta[j] for j in range(n)])
               for i in range(n))


def _cartan_candidates(m: Matrix) -> Iterable[Matrix]:
    """Every Cartan matrix realizing ``m`` (one per root-length assignment)."""
    n = len(m)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if m[i][j] in (4, 6)]
    for orient in iproduct((0, 1), repeat=len(edges)):
        c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                if i != j and m[i][j] == 3:
                    c[i][j] = -1
                elif i != j and m[i][j] == INF:
                    c[i][j] = -2
        for (i, j), o in zip(edges, orient):
            big = 2 if m[i][j] == 4 else 3
            if o:
                i, j = j, i
            c[i][j], c[j][i] = -1, -big
        yield tuple(tuple(r) for r in c)


def _is_symmetrizable(c: Matrix) -> bool:
    n = len(c)
    d: list[Fraction | None] = [None] * n
    for comp in _components(_coxeter_from_cartan(c)):
        d[comp[0]] = Fraction(1)
        stack = [comp[0]]
        while stack:
            i = stack.pop()
            for j in comp:
                if j == i or c[i][j] == 0:
                    continue
                # d_i c_ij = d_j c_ji
                want = d[i] * c[i][j] / c[j][i]
                if d[j] is None:
                    d[j] = want
                    stack.append(j)
                elif d[j] != want:
                    return False
    return True


def _cartan_for(m: Matrix, kind: str) -> Matrix:
    fallback = None
    for c in _cartan_candidates(m):
        if not _is_symmetrizable(c):
            continue
        if kind != "affine":
            return c
        delta = _integer_kernel_vector(c)
        if delta is None or any(x <= 0 for x in delta):
            continue
        if _is_untwisted(c, delta):
            return c
        fallback = fallback or c
    if fallback is None:
        raise NonCrystallographic("no crystallographic Cartan matrix for diagram")
    return fallback


def _parse_m_entry(x) -> int:
    if isinstance(x, str):
        x = x.strip().lower()
        if x in ("inf", "infinity", "oo", "\u221e"):
            return INF
    if x is None or x == float("inf"):
        return INF
    if isinstance(x, bool):
        raise MalformedSpec(f"bad Coxeter matrix entry {x!r}")
    try:
        v = int(x)
    except (TypeError, ValueError):
        raise MalformedSpec(f"bad Coxeter matrix entry {x!r}") from None
    if not isinstance(x, str) and v != x:
        raise MalformedSpec(f"bad Coxeter matrix entry {x!r}")
    return INF if v in (0, -1) else v


def _validate_coxeter_matrix(m: Matrix) -> None:
    n = len(m)
    for i in range(n):
        if len(m[i]) != n:
            raise MalformedSpec("Coxeter matrix must be square")
    for i in range(n):
        if m[i][i] != 1:
            raise MalformedSpec(f"diagonal entry m[{i}][{i}] must be 1")
        for j in range(n):
            if m[i][j] != m[j][i]:
                raise AsymmetricMatrix(f"m[{i}][{j}] != m[{j}][{i}]")
            if i != j and m[i][j] not in _ALLOWED_M:
                if m[i][j] == 1:
                    raise MalformedSpec(f"off-diagonal entry m[{i}][{j}] = 1")
                raise NonCrystallographic(
                    f"m[{i}][{j}] = {m[i][j]} is not in {{2, 3, 4, 6, inf}}")


def _from_letter(letter: str, rank: int, affine: bool, name: str) -> CoxSystem:
    letter = letter.upper()
    if rank < 1:
        raise MalformedSpec("rank must be positive")
    if affine:
        if letter == "B" and rank == 2:
            letter = "C"  # same Coxeter group
        if letter == "A" and rank == 1:
            gram = [[2, -2], [-2, 2]]
        else:
            gram = _affine_gram(letter, rank)
        gens = tuple(f"s{i}" for i in range(rank + 1))
    else:
        gram = _finite_gram(letter, rank)
        gens = tuple(f"s{i}" for i in range(1, rank + 1))
    cartan = _cartan_from_gram(gram)
    cox = _coxeter_from_cartan(cartan)
    kind = classify(cox)
    expected = "affine" if affine else "spherical"
    if kind != expected:  # pragma: no cover - would be a table bug
        raise MalformedSpec(f"{name} classified as {kind}, expected {expected}")
    data = _affine_data(gens, cartan) if affine else None
    return CoxSystem(name, gens, cox, cartan, kind, data)


def _from_matrix(gens: Sequence[str], m: Matrix, name: str) -> CoxSystem:
    _validate_coxeter_matrix(m)
    if len(gens) != len(m) or len(set(gens)) != len(gens):
        raise MalformedSpec("generator labels must be distinct, one per row")
    kind = classify(m)
    cartan = _cartan_for(m, kind)
    data = _affine_data(gens, cartan) if kind == "affine" else None
    return CoxSystem(name, tuple(gens), m, cartan, kind, data)


def build_system(spec: str | Mapping) -> CoxSystem:
    """Build a Coxeter system from a type string or an explicit matrix.

    Accepted forms are ``"A~2"``, ``"C~2"``, ``"G~2"``, ``"A3"`` and friends,
    or a JSON object (string or mapping) ``{"generators": [...], "m": [[...]]}``
    where infinite entries are written ``"inf"``, ``0`` or ``null``.
    """
    if isinstance(spec, str):
        text = spec.strip()
        if text.startswith("{"):
            try:
                spec = json.loads(text)
            except json.JSONDecodeError as exc:
                raise MalformedSpec(f"invalid JSON system spec: {exc}") from None
        else:
            match = _TYPE_RE.match(text)
            if not match or (match.group(2) and match.group(4)):
                raise MalformedSpec(
                    f"cannot parse type {spec!r}; grammar: LETTER RANK ['~'] "
                    "with LETTER in A-G (e.g. 'A~2', 'C~2', 'A3')")
            letter, t1, rank, t2 = match.groups()
            affine = bool(t1 or t2)
            label = f"{letter.upper()}{'~' if affine else ''}{rank}"
            return _from_letter(letter, int(rank), affine, label)
    if not isinstance(spec, Mapping) or "m" not in spec:
        raise MalformedSpec('expected {"generators": [...], "m": [[...]]}')
    rows = spec["m"]
    if not isinstance(rows, Sequence) or not rows:
        raise MalformedSpec("m must be a non-empty list of rows")
    m = tuple(tuple(_parse_m_entry(x) for x in row) for row in rows)
    gens = spec.get("generators") or [f"s{i}" for i in range(len(m))]
    return _from_matrix([str(g) for g in gens], m, spec.get("name", "custom"))


# --------------------------------------------------------------------------
# group operations

def _same(x: Elem, y: Elem) -> None:
    if x.system is not y.system and x.system != y.system:
        raise SystemMismatch(f"{x.system.name} vs {y.system.name}")


def identity(system: CoxSystem) -> Elem:
    return system.identity()


def multiply(x: Elem, y: Elem) -> Elem:
    _same(x, y)
    return Elem(x.system, _matmul(x.mat, y.mat), _matmul(y.inv, x.inv))


def inverse(x: Elem) -> Elem:
    return Elem(x.system, x.inv, x.mat)


def act_on_root(w: Elem, beta: Sequence[int]) -> tuple[int, ...]:
    """Image of a root vector under ``w``; raises NotARootVector if impure."""
    if sign_of(beta) == 0:
        raise NotARootVector(f"{tuple(beta)} is not sign-pure")
    out = _matvec(w.mat, beta)
    if sign_of(out) == 0:  # pragma: no cover - impossible for real roots
        raise NotARootVector(f"image {out} is not sign-pure")
    return out


def is_left_descent(w: Elem, i: int) -> bool:
    # w^{-1}(alpha_i) is column i of the inverse matrix
    return any(row[i] < 0 for row in w.inv)


def is_right_descent(w: Elem, i: int) -> bool:
    return any(row[i] < 0 for row in w.mat)


def descents(w: Elem) -> frozenset[str]:
    """Left descent set {s : l(sw) < l(w)}."""
    return frozenset(s for i, s in enumerate(w.system.generators)
                     if is_left_descent(w, i))


def reduced_word(w: Elem) -> Word:
    """Lexicographically smallest reduced word (greedy on left descents)."""
    gens = w.system.generators
    out = []
    cur = w
    while True:
        for i in range(len(gens)):
            if is_left_descent(cur, i):
                out.append(gens[i])
                cur = cur.gen_times(i)
                break
        else:
            return tuple(out)


def length(w: Elem) -> int:
    n = 0
    cur = w
    rank = w.system.rank
    while True:
        for i in range(rank):
            if is_right_descent(cur, i):
                cur = cur.times_gen(i)
                n += 1
                break
        else:
            return n


def extend_diagram_automorphism(system: CoxSystem, sigma: Mapping[str, str]
                                ) -> Callable[[Elem], Elem]:
    """Extend a label permutation preserving m_st to an automorphism of W."""
    if set(sigma) != set(system.generators) or set(sigma.values()) != set(system.generators):
        raise NotDiagramCompatible("sigma must be a bijection on the generators")
    for s in system.generators:
        for t in system.generators:
            if system.m(sigma[s], sigma[t]) != system.m(s, t):
                raise NotDiagramCompatible(
                    f"m({s},{t}) = {system.m(s, t)} but "
                    f"m({sigma[s]},{sigma[t]}) = {system.m(sigma[s], sigma[t])}")
    sigma = dict(sigma)

    def apply(w: Elem) -> Elem:
        return system.element(sigma[s] for s in reduced_word(w))

    return apply


def parabolic_elements(system: CoxSystem, subset: Iterable[str], limit: int = 1152
                       ) -> list[Elem]:
    """All elements of the standard parabolic subgroup on ``subset``.

    Raises GemTooLarge once more than ``limit`` elements have been found.
    """
    from .errors import GemTooLarge

    gens = [system.index[s] for s in system.parse_word(subset)]
    one = system.identity()
    seen = {one}
    order = [one]
    frontier = [one]
    while frontier:
        nxt = []
        for w in frontier:
            for i in gens:
                v = w.times_gen(i)
                if v not in seen:
                    seen.add(v)
                    order.append(v)
                    nxt.append(v)
                    if len(seen) > limit:
                        raise GemTooLarge(
                            f"parabolic subgroup exceeds {limit} elements; "
                            "pass a larger limit to override")
        frontier = nxt
    return order
