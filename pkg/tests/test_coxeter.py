import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flatbldg import (
    act_on_root,
    build_system,
    descents,
    extend_diagram_automorphism,
    identity,
    inverse,
    length,
    multiply,
    reduced_word,
)
from flatbldg.coxeter import INF, classify, parabolic_elements
from flatbldg.errors import (
    AsymmetricMatrix,
    GemTooLarge,
    MalformedSpec,
    NonCrystallographic,
    NotARootVector,
    NotDiagramCompatible,
    SystemMismatch,
)

from oracles import all_words, bfs_distances, perm_of_word, system


# -- building systems ---------------------------------------------------------

def test_affine_a2_spec():
    s = build_system("A~2")
    assert s.rank == 3 and s.kind == "affine"
    assert all(s.m(a, b) == 3 for a in s.generators for b in s.generators if a != b)
    assert set(s.affine_data.special_vertices) == set(s.generators)


def test_a1_spherical():
    s = build_system("A1")
    assert s.rank == 1 and s.kind == "spherical"


def test_affine_a1_null_vector_and_cartan():
    s = build_system("A~1")
    assert s.kind == "affine"
    assert s.affine_data.null_vector == (1, 1)
    assert s.cartan[0][1] == s.cartan[1][0] == -2
    assert s.m("s0", "s1") == INF


@pytest.mark.parametrize("name, delta, special", [
    ("C~2", (1, 2, 1), ("s0", "s2")),
    ("G~2", (1, 3, 2), ("s0",)),
    ("A~3", (1, 1, 1, 1), ("s0", "s1", "s2", "s3")),
])
def test_null_vector_kills_cartan(name, delta, special):
    s = system(name)
    assert s.affine_data.null_vector == delta
    assert s.affine_data.special_vertices == special
    for row in s.cartan:
        assert sum(a * d for a, d in zip(row, delta)) == 0


def test_b2_affine_alias():
    assert build_system("B~2").cartan == build_system("C~2").cartan


def test_json_spec_matches_letter():
    spec = json.dumps({"generators": ["s0", "s1", "s2"],
                       "m": [[1, 3, 3], [3, 1, 3], [3, 3, 1]]})
    s = build_system(spec)
    assert s.kind == "affine"
    assert s.cartan == system("A~2").cartan


def test_json_infinite_entry():
    s = build_system({"generators": ["a", "b"], "m": [[1, "inf"], [None, 1]]})
    assert s.kind == "affine" and s.affine_data.null_vector == (1, 1)


def test_json_c2_affine_is_untwisted():
    s = build_system({"generators": ["s0", "s1", "s2"],
                      "m": [[1, 4, 2], [4, 1, 4], [2, 4, 1]]})
    assert s.kind == "affine"
    delta = s.affine_data.null_vector
    assert sorted(delta) == [1, 1, 2]


def test_classify_types():
    assert classify(system("A3").coxeter_matrix) == "spherical"
    assert classify(system("G~2").coxeter_matrix) == "affine"
    hyper = [[1, 3, 3], [3, 1, 6], [3, 6, 1]]
    assert classify(hyper) == "other"


@pytest.mark.parametrize("bad, exc", [
    ("Q3", MalformedSpec),
    ("A~0", MalformedSpec),
    ("", MalformedSpec),
    ('{"generators": ["a"]}', MalformedSpec),
    ({"generators": ["a", "b"], "m": [[1, 5], [5, 1]]}, NonCrystallographic),
    ({"generators": ["a", "b"], "m": [[1, 3], [4, 1]]}, AsymmetricMatrix),
    ({"generators": ["a", "b"], "m": [[2, 3], [3, 1]]}, MalformedSpec),
])
def test_bad_specs(bad, exc):
    with pytest.raises(exc):
        build_system(bad)


# -- group operations ---------------------------------------------------------

def test_multiply_inverse(A2):
    s, t = A2.gen("s1"), A2.gen("s2")
    assert multiply(s, s) == identity(A2)
    assert (s * t) ** 3 == identity(A2)
    assert (s * t) ** 2 != identity(A2)
    assert inverse(s * t) == t * s


def test_system_mismatch(A2, At2):
    with pytest.raises(SystemMismatch):
        multiply(A2.gen("s1"), At2.gen("s1"))


def test_act_on_root_examples(At1):
    s, t = At1.gen("s0"), At1.gen("s1")
    assert act_on_root(s, (1, 0)) == (-1, 0)
    assert act_on_root(s, (0, 1)) == (2, 1)
    assert act_on_root(identity(At1), (3, 2)) == (3, 2)
    assert act_on_root(t, (0, 1)) == (0, -1)


def test_act_on_root_rejects_mixed_signs(At2):
    with pytest.raises(NotARootVector):
        act_on_root(At2.gen("s0"), (1, -1, 0))


def test_length_examples(A2, At1):
    assert length(identity(A2)) == 0 and reduced_word(identity(A2)) == ()
    sts = At1.element("s0 s1 s0")
    assert length(sts) == 3
    # nothing shorter reaches sts
    shorter = {At1.element(w) for w in all_words(At1, 2)}
    assert sts not in shorter
    w0 = A2.element("s1 s2 s1")
    assert descents(w0) == {"s1", "s2"}


@pytest.mark.parametrize("name", ["A2", "A3", "A~1", "A~2", "C~2", "G~2"])
def test_length_equals_cayley_distance(name):
    sys_ = system(name)
    dist = bfs_distances(sys_, 5)
    for w, (d, _) in dist.items():
        assert length(w) == d


@pytest.mark.parametrize("name, n", [("A2", 2), ("A3", 3)])
def test_permutation_model_is_isomorphism(name, n):
    """s_i -> (i i+1) is injective and multiplicative on words of length <= 6."""
    sys_ = system(name)
    perm_to_elem = {}
    for word in all_words(sys_, 6):
        w = sys_.element(word)
        p = perm_of_word(word, n)
        if p in perm_to_elem:
            assert perm_to_elem[p] == w
        else:
            perm_to_elem[p] = w
    # injective as well: distinct matrices give distinct permutations
    assert len(set(perm_to_elem.values())) == len(perm_to_elem)


@pytest.mark.parametrize("name", ["A2", "A3", "A~2", "C~2", "G~2"])
def test_braid_orders(name):
    sys_ = system(name)
    one = sys_.identity()
    for a in sys_.generators:
        for b in sys_.generators:
            m = sys_.m(a, b)
            if m:
                assert (sys_.gen(a) * sys_.gen(b)) ** m == one
                for k in range(1, m):
                    assert (sys_.gen(a) * sys_.gen(b)) ** k != one


@pytest.mark.parametrize("name", ["A~2", "C~2", "G~2"])
def test_length_parity_and_reduced_words(name):
    sys_ = system(name)
    for w in bfs_distances(sys_, 5):
        word = reduced_word(w)
        assert sys_.element(word) == w
        for k in range(len(word) + 1):
            assert length(sys_.element(word[:k])) == k
        for s in sys_.generators:
            assert length(w * sys_.gen(s)) in (length(w) - 1, length(w) + 1)
        assert descents(w) == {s for s in sys_.generators
                               if length(sys_.gen(s) * w) < length(w)}


def test_reduced_word_is_lex_smallest(At2):
    dist = bfs_distances(At2, 4)
    for w in dist:
        words = [x for x in all_words(At2, length(w))
                 if len(x) == length(w) and At2.element(x) == w]
        assert reduced_word(w) == min(words, key=lambda x: [At2.index[s] for s in x])


words_c2 = st.lists(st.sampled_from(["s0", "s1", "s2"]), max_size=12)


@settings(max_examples=60, deadline=None)
@given(words_c2, st.sampled_from(["s0", "s1", "s2"]), st.integers(-3, 3))
def test_act_on_root_sign_purity(word, s, k):
    sys_ = system("C~2")
    w = sys_.element(word)
    beta = act_on_root(sys_.element([s]) * sys_.element(["s1"]), sys_.simple_root(s))
    beta = tuple(b + k * d for b, d in zip(beta, sys_.affine_data.null_vector))
    if all(x == 0 for x in beta):
        return
    image = act_on_root(w, beta)
    assert all(x >= 0 for x in image) or all(x <= 0 for x in image)
    assert act_on_root(w, tuple(-x for x in beta)) == tuple(-x for x in image)


# -- diagram automorphisms ------------------------------------------------------

def test_diagram_automorphism_examples(At2, A2):
    ident = extend_diagram_automorphism(At2, {s: s for s in At2.generators})
    w = At2.element("s0 s1 s2 s0")
    assert ident(w) == w
    rot = extend_diagram_automorphism(At2, {"s0": "s1", "s1": "s2", "s2": "s0"})
    assert rot(At2.element("s0 s1")) == At2.element("s1 s2")
    swap = extend_diagram_automorphism(A2, {"s1": "s2", "s2": "s1"})
    assert swap(A2.element("s1 s2 s1")) == A2.element("s2 s1 s2")
    assert A2.element("s1 s2 s1") == A2.element("s2 s1 s2")


def test_diagram_automorphism_rejects_bad_sigma(Ct2):
    with pytest.raises(NotDiagramCompatible):
        extend_diagram_automorphism(Ct2, {"s0": "s1", "s1": "s0", "s2": "s2"})
    with pytest.raises(NotDiagramCompatible):
        extend_diagram_automorphism(Ct2, {"s0": "s0", "s1": "s1", "s2": "s1"})


@pytest.mark.parametrize("name, sigma", [
    ("A~2", {"s0": "s1", "s1": "s2", "s2": "s0"}),
    ("A~2", {"s0": "s0", "s1": "s2", "s2": "s1"}),
    ("C~2", {"s0": "s2", "s1": "s1", "s2": "s0"}),
])
def test_diagram_automorphism_is_homomorphism(name, sigma):
    sys_ = system(name)
    f = extend_diagram_automorphism(sys_, sigma)
    elems = list(bfs_distances(sys_, 6))
    for w in elems:
        assert length(f(w)) == length(w)
    rng = random.Random(3)
    for _ in range(100):
        x, y = rng.choice(elems), rng.choice(elems)
        assert f(x * y) == f(x) * f(y)


def test_parabolic_guard(At2):
    assert len(parabolic_elements(At2, ["s1", "s2"])) == 6
    with pytest.raises(GemTooLarge):
        parabolic_elements(At2, ["s1", "s2"], limit=5)


@pytest.mark.parametrize("name", ["A~2", "C~2", "G~2"])
def test_generator_fast_path_matches_matrix_product(name):
    sys_ = system(name)
    for w in bfs_distances(sys_, 4):
        for i, g in enumerate(sys_._gens):
            assert w.times_gen(i) == multiply(w, g)
            assert w.times_gen(i).inv == multiply(w, g).inv
            assert w.gen_times(i) == multiply(g, w)
            assert w.gen_times(i).inv == multiply(g, w).inv
