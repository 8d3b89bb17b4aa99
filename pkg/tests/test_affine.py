import random

import pytest

from flatbldg import (
    SectorRef,
    ball,
    convex_hull,
    enumerate_roots_meeting_ball,
    gems,
    is_minimal,
    lattice_basis,
    make_gem,
    parallel_dist,
    pushed_root,
    reduced_word,
    root_contains,
    roots_cutting_gem,
    sector_membership,
    sector_translation,
    translation,
    translation_test,
    weyl_distance,
    Gallery,
)
from flatbldg.affine import (
    are_parallel,
    coxeter_number,
    enumerate_translations,
    fundamental_translation,
    fundamental_translation_search,
    root_shift,
    shifted,
)
from flatbldg.chambers import RootVec, act, canonical_order, hull_contains, simple_root
from flatbldg.errors import GemTooLarge, NotAffine, NotParallel, NotSpecialVertex

from oracles import Alcoves, bfs_distances, line_chamber, system

AFFINE = ["A~1", "A~2", "C~2", "A~3", "G~2"]


def half_line(k: int):
    """Root vector of {chambers >= k} in the A~1 apartment."""
    return RootVec(system("A~1"), (-k, 1 - k))


def all_sectors(name, vertex=None):
    sys_ = system(name)
    gem = make_gem(sys_, vertex or sys_.affine_data.special_vertices[0])
    return [SectorRef(gem, c) for c in gem.chambers]


# -- gems ------------------------------------------------------------------------------

def test_gem_examples(At2, At1, Ct2):
    assert len(make_gem(At2, "s0").chambers) == 6
    assert set(make_gem(At1, "s0").chambers) == {At1.identity(), At1.gen("s1")}
    for g in gems(Ct2):
        assert len(g.chambers) == 8
    assert [g.vertex for g in gems(Ct2)] == ["s0", "s2"]


def test_gem_errors(A2, Ct2, At2):
    with pytest.raises(NotAffine):
        make_gem(A2, "s1")
    with pytest.raises(NotSpecialVertex):
        make_gem(Ct2, "s1")
    with pytest.raises(GemTooLarge):
        make_gem(At2, "s0", limit=4)


def test_gem_opposite(Ct2):
    gem = make_gem(Ct2, "s0", Ct2.element("s0 s1"))
    for c in gem.chambers:
        d = gem.opposite(c)
        assert gem.contains(d)
        assert len(reduced_word(weyl_distance(c, d))) == 4
        assert gem.opposite(d) == c


def test_line_model_sanity(At1):
    for w in bfs_distances(At1, 6):
        for k in range(-4, 5):
            assert root_contains(half_line(k), w) == (line_chamber(w.word()) >= k)


# -- sectors --------------------------------------------------------------------------------

def test_sector_membership_examples(At2):
    for sec in all_sectors("A~2"):
        assert sector_membership(sec, sec.apex)
        assert sector_membership(sec, sec.apex, "projection")
        for d in sec.gem.chambers:
            if d != sec.apex:
                assert not sector_membership(sec, d)
                assert not sector_membership(sec, d, "projection")


@pytest.mark.parametrize("name", ["A~1", "C~2", "G~2"])
def test_sector_modes_agree(name):
    sys_ = system(name)
    chambers = ball(sys_, 4)
    for sec in all_sectors(name):
        for d in chambers:
            assert (sector_membership(sec, d)
                    == sector_membership(sec, d, "projection"))


def test_sector_roots_shape():
    for name in AFFINE:
        for sec in all_sectors(name):
            assert len(sec.roots) == sec.system.rank - 1
            for beta in sec.roots:
                assert root_contains(beta, sec.apex)
                assert any(not root_contains(beta, sec.apex * sec.system.gen(s))
                           for s in sec.gem.types)


@pytest.mark.parametrize("name", ["A~2", "C~2"])
def test_opposite_sector_roots_are_negated(name):
    for sec in all_sectors(name):
        assert set(sec.opposite().roots) == {-b for b in sec.roots}


def test_root_is_union_of_sectors(At2):
    gem = make_gem(At2, "s1", At2.element("s0"))
    chambers = ball(At2, 5)
    for gamma in roots_cutting_gem(gem):
        inside = [c for c in gem.chambers if root_contains(gamma, c)]
        union = {d for d in chambers
                 if any(sector_membership(SectorRef(gem, c), d) for c in inside)}
        assert union == {d for d in chambers if root_contains(gamma, d)}


# -- parallel classes ----------------------------------------------------------------------

def test_parallel_dist_line_examples():
    for k in range(-3, 3):
        assert parallel_dist(half_line(k), half_line(k)) == 0
        # R_{k+2} is the smaller half-line
        assert parallel_dist(half_line(k), half_line(k + 2)) == -2
        assert parallel_dist(half_line(k + 2), half_line(k)) == 2


@pytest.mark.parametrize("name", ["A~2", "C~2", "G~2"])
def test_parallel_dist_orientation_by_containment(name):
    """Positive distance means the second root is the larger half-space."""
    sys_ = system(name)
    chambers = ball(sys_, 4)
    rng = random.Random(0)
    roots = list(enumerate_roots_meeting_ball(sys_, 2))
    for _ in range(30):
        beta = rng.choice(roots)
        k = rng.choice([-2, -1, 1, 2])
        other = shifted(beta, k)
        assert parallel_dist(beta, other) == k == -parallel_dist(other, beta)
        small, big = (beta, other) if k > 0 else (other, beta)
        assert all(root_contains(big, d) for d in chambers if root_contains(small, d))
        assert any(root_contains(big, d) and not root_contains(small, d)
                   for d in chambers)


def test_not_parallel(At2):
    a, b = simple_root(At2, "s1"), simple_root(At2, "s2")
    assert not are_parallel(a, b)
    with pytest.raises(NotParallel):
        parallel_dist(a, b)
    with pytest.raises(NotParallel):
        parallel_dist(a, -a)


def test_pushed_root_examples(At2):
    assert pushed_root(half_line(2), system("A~1").identity()) == half_line(0)
    assert pushed_root(half_line(-1), system("A~1").identity()) == half_line(-1)
    roots = list(enumerate_roots_meeting_ball(At2, 3))
    for c in ball(At2, 2):
        for gamma in roots:
            gp = pushed_root(gamma, c)
            k = parallel_dist(gamma, gp)
            assert k >= 0 and root_contains(gp, c)
            if root_contains(gamma, c):
                assert gp == gamma
            else:
                assert not root_contains(shifted(gp, -1), c)


# -- translations ------------------------------------------------------------------------------

def test_translation_test_examples(At1, At2):
    t = translation_test(At1.identity())
    assert t is not None and t.lattice == (0,)
    t = translation_test(At1.element("s0 s1"))
    assert t is not None and any(t.lattice)
    assert translation_test(At2.gen("s0")) is None


@pytest.mark.parametrize("name", AFFINE)
def test_translation_test_matches_geometry(name):
    sys_ = system(name)
    geo = Alcoves(sys_)
    radius = 6 if sys_.rank <= 3 else 4
    for w in bfs_distances(sys_, radius):
        assert (translation_test(w) is not None) == geo.is_translation(w.word())


@pytest.mark.parametrize("name", ["A~1", "A~2", "C~2", "G~2"])
def test_lattice_coordinates_are_additive(name):
    sys_ = system(name)
    ts = enumerate_translations(sys_, 1)
    assert len(ts) == 3 ** (sys_.rank - 1)
    for a in ts:
        assert translation_test(a.elem).lattice == a.lattice
        for b in ts:
            assert a.elem * b.elem == b.elem * a.elem
            assert (a * b).elem == translation(sys_, (a * b).lattice).elem
    for t in lattice_basis(sys_):
        assert translation_test(t.elem) == t


def test_coxeter_numbers():
    assert [coxeter_number(system(n)) for n in AFFINE] == [2, 3, 4, 4, 6]


def test_fundamental_translation_line(At1):
    sec = all_sectors("A~1")[0]
    (alpha,) = sec.roots
    t = fundamental_translation(sec, alpha)
    assert parallel_dist(alpha, act(t.elem, alpha)) == -2
    assert sector_translation(sec) == t
    assert t.elem in (At1.element("s0 s1"), At1.element("s1 s0"))


@pytest.mark.parametrize("name", AFFINE)
def test_fundamental_translation_matches_search(name):
    bound = None if name != "A~3" else 3
    for sec in all_sectors(name)[:4]:
        for alpha in sec.roots:
            t = fundamental_translation(sec, alpha)
            assert t == fundamental_translation_search(sec, alpha, bound)
            for beta in sec.roots:
                image = act(t.elem, beta)
                if beta == alpha:
                    assert parallel_dist(beta, image) < 0
                else:
                    assert image == beta


@pytest.mark.parametrize("name", ["A~1", "A~2", "C~2", "G~2"])
def test_opposite_translations(name):
    for sec in all_sectors(name):
        opp = sec.opposite()
        assert sector_translation(opp).elem == sector_translation(sec).inverse().elem
        for alpha in sec.roots:
            assert (fundamental_translation(sec, alpha).inverse().elem
                    == fundamental_translation(opp, -alpha).elem)


@pytest.mark.parametrize("name", ["A~2", "C~2", "G~2"])
def test_sector_translation_shrinks_sector(name):
    for sec in all_sectors(name):
        t = sector_translation(sec)
        for beta in sec.roots:
            assert root_shift(t, beta) < 0
        for c in sec.gem.chambers:
            assert sector_membership(sec, t.elem * c)


# -- roots cutting a gem -----------------------------------------------------------------------

@pytest.mark.parametrize("name, count", [
    ("A~1", 2), ("A~2", 6), ("C~2", 8), ("A~3", 12), ("G~2", 12),
])
def test_roots_cutting_gem_counts(name, count):
    sys_ = system(name)
    for gem in gems(sys_):
        phi = roots_cutting_gem(gem)
        assert len(phi) == count
        # by definition: both sides meet the gem
        for gamma in phi:
            side = [root_contains(gamma, c) for c in gem.chambers]
            assert any(side) and not all(side)


def test_roots_cutting_gem_definition(Ct2):
    gem = make_gem(Ct2, "s2", Ct2.element("s1 s0"))
    r = max(len(reduced_word(c)) for c in gem.chambers) + 1
    expect = {b for b in enumerate_roots_meeting_ball(Ct2, r)
              if any(root_contains(b, c) for c in gem.chambers)
              and not all(root_contains(b, c) for c in gem.chambers)}
    assert roots_cutting_gem(gem) == expect


# -- convexity statements ---------------------------------------------------------------------

def test_sector_as_hull_of_translates(Ct2):
    chambers = ball(Ct2, 4)
    for sec in all_sectors("C~2", "s2"):
        t = sector_translation(sec).elem
        pts = [t ** n * sec.apex for n in range(5)]
        hull = {d for d in chambers if hull_contains(pts, d)}
        assert hull == {d for d in chambers if sector_membership(sec, d)}


def test_hull_of_sectors(At2):
    gem = make_gem(At2, "s0")
    inner = ball(At2, 3)
    outer = ball(At2, 6)
    rng = random.Random(12)
    for _ in range(6):
        C = rng.sample(list(gem.chambers), 2)
        union_pts = [d for d in outer
                     if any(sector_membership(SectorRef(gem, c), d) for c in C)]
        lhs = {d for d in inner if hull_contains(union_pts, d)}
        hullC = convex_hull(C)
        rhs = {d for d in inner
               if any(sector_membership(SectorRef(gem, c), d) for c in hullC)}
        assert lhs == rhs


def _translate_hull(gem, c, C, inner, n_max=6):
    pts = [sector_translation(SectorRef(gem, e)).elem ** n * c
           for e in C for n in range(n_max + 1)]
    return {d for d in inner if hull_contains(pts, d)}


def test_hull_trichotomy(At2):
    gem = make_gem(At2, "s0")
    inner = ball(At2, 3)
    c = gem.chambers[1]
    phi = roots_cutting_gem(gem)
    # C = R cap gamma gives the pushed root
    for gamma in phi:
        C = [e for e in gem.chambers if root_contains(gamma, e)]
        gp = pushed_root(gamma, c)
        assert _translate_hull(gem, c, C, inner) == {d for d in inner if root_contains(gp, d)}
    # C in no root of Phi_R gives everything
    C = [gem.chambers[0], gem.opposite(gem.chambers[0])]
    assert not any(all(root_contains(g, e) for e in C) for g in phi)
    assert _translate_hull(gem, c, C, inner) == set(inner)
    # sector containment for any C
    for e in gem.chambers[:3]:
        X = _translate_hull(gem, c, [e, gem.chambers[4]], inner)
        assert {d for d in inner if sector_membership(SectorRef(gem, e), d)} <= X


@pytest.mark.parametrize("name", ["A~2", "C~2", "G~2"])
def test_translation_powers_give_minimal_galleries(name):
    sys_ = system(name)
    rng = random.Random(4)
    ts = enumerate_translations(sys_, 2)
    starts = ball(sys_, 2)
    for _ in range(10):
        t, c0 = rng.choice(ts), rng.choice(starts)
        word = reduced_word(weyl_distance(c0, t.elem * c0))
        for n in range(5):
            g = Gallery(c0, word * (n + 1))
            assert g.end == t.elem ** (n + 1) * c0
            assert is_minimal(g).minimal and is_minimal(g, "by-walls").minimal


def test_canonical_roots_sorted(At2):
    gem = make_gem(At2, "s0")
    roots = canonical_order(roots_cutting_gem(gem))
    assert roots == canonical_order(reversed(roots))
