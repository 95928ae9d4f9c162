import json

import pytest
from hypothesis import given, strategies as st

from chernlab.simpset import (
    SimplicialError,
    SimplicialMap,
    SimplicialSet,
    Word,
    apply_map,
    circle,
    compose,
    constant_map,
    disjoint_basepoint,
    identity_map,
    map_from_json,
    map_to_json,
    product,
    simplex,
    simplex_map,
    smash,
    space_from_json,
    space_to_json,
    sphere,
    surj_from_degeneracies,
    torus,
)

from oracles import product_count

BUILTINS = [sphere(0), sphere(1), sphere(2), sphere(3), simplex(2), simplex(3, plus=True), torus(),
            disjoint_basepoint(torus())]


def _dims(K):
    return {g: d for g, d in K.dim_of.items()}


@pytest.mark.parametrize("K", BUILTINS, ids=lambda K: K.name)
def test_builtin_face_identities(K):
    assert K.check() == []


@pytest.mark.parametrize("a,b", [(circle(), circle()), (circle(), sphere(2)), (sphere(2), sphere(2)),
                                 (simplex(1), simplex(2)), (torus(), circle())])
def test_product_counts_match_shuffle_formula(a, b):
    P = product(a, b)
    assert P.check() == []
    for m in range(a.dim + b.dim + 1):
        assert len(P.gens(m)) == product_count(_dims(a), _dims(b), m)


@pytest.mark.parametrize("a,b", [(circle(), circle()), (circle(), sphere(2)), (sphere(2), sphere(2)),
                                 (torus(), circle()), (sphere(0), circle())])
def test_smash_counts(a, b):
    P = smash(a, b)
    assert P.check() == []
    for m in range(a.dim + b.dim + 1):
        assert len(P.gens(m)) == product_count(_dims(a), _dims(b), m, smash=True,
                                               base_k=a.basepoint, base_l=b.basepoint)


def test_smash_of_circles_has_two_top_cells():
    P = smash(circle(), circle())
    assert P.cells(1) == ("(sig,sig)",)
    assert len(P.cells(2)) == 2


def test_simplex_counts():
    D = simplex(3)
    assert [len(D.gens(k)) for k in range(4)] == [4, 6, 4, 1]


def test_bad_face_table_is_named():
    with pytest.raises(SimplicialError, match="simplicial identity"):
        SimplicialSet("bad", {0: ["a", "b"], 1: ["e", "f"], 2: ["t"]},
                      {"e": (Word("a", (0,)), Word("b", (0,))), "f": (Word("a", (0,)), Word("a", (0,))),
                       "t": (Word("e", (0, 1)), Word("e", (0, 1)), Word("f", (0, 1)))}, "a")


def test_cap_truncates_to_skeleton_and_is_bounded():
    P = product(sphere(4), sphere(4), cap=6)
    assert P.dim == 6 and P.check() == []
    with pytest.raises(SimplicialError):
        product(circle(), circle(), cap=9)


def _words(K, m):
    return K.words(m, include_base=True)


@st.composite
def word_in(draw, K, max_dim=4):
    m = draw(st.integers(min_value=1, max_value=max_dim))
    return draw(st.sampled_from(_words(K, m)))


SPACES = [torus(), product(circle(), sphere(2)), smash(circle(), sphere(2)), simplex(3)]


@pytest.mark.parametrize("K", SPACES, ids=lambda K: K.name)
@given(data=st.data())
def test_simplicial_identities_on_words(K, data):
    w = data.draw(word_in(K))
    m = w.dim
    i = data.draw(st.integers(0, m))
    j = data.draw(st.integers(0, m))
    d, s = K.face, K.degeneracy
    if m >= 2 and i < j:
        assert d(d(w, j), i) == d(d(w, i), j - 1)
    if i <= j:
        assert s(s(w, j), i) == s(s(w, i), j + 1)
    # d_i s_j
    sj = s(w, j)
    if i < j:
        assert d(sj, i) == s(d(w, i), j - 1)
    elif i in (j, j + 1):
        assert d(sj, i) == w
    elif i > j + 1 and m >= 1:
        assert d(sj, i) == s(d(w, i - 1), j)


@given(st.lists(st.integers(0, 4), max_size=3))
def test_degeneracy_words_are_normal(degs):
    try:
        surj = surj_from_degeneracies(2, degs)
    except SimplicialError:
        return
    assert surj[0] == 0 and surj[-1] == 2
    assert all(0 <= surj[t + 1] - surj[t] <= 1 for t in range(len(surj) - 1))


@pytest.mark.parametrize("K", BUILTINS + SPACES, ids=lambda K: K.name)
def test_json_round_trip(K):
    L = space_from_json(json.loads(json.dumps(space_to_json(K))))
    assert L.generators == K.generators and L.faces == K.faces and L.basepoint == K.basepoint


def test_maps_and_composition():
    D2, D1 = simplex(2, plus=True), simplex(1, plus=True)
    f = simplex_map(1, 2, [0, 2], source=D1, target=D2)
    assert f.check() == []
    g = simplex_map(2, 1, [0, 0, 1], source=D2, target=D1)
    assert g.check() == []
    gf = compose(g, f)
    assert gf.check() == []
    assert apply_map(gf, D1.gen_word("v01")) == D1.gen_word("v01")
    assert identity_map(D2).check() == []
    assert constant_map(D2, D1).check() == []
    back = map_from_json(json.loads(json.dumps(map_to_json(f))), D1, D2)
    assert back.assign == f.assign


def test_map_check_names_failure():
    S1 = circle()
    D1 = simplex(1, plus=True)
    bad = SimplicialMap(D1, S1, {"pt": S1.base_word(0), "v0": S1.base_word(0), "v1": S1.base_word(0),
                                 "v01": S1.base_word(1)})
    assert bad.check() == []
    wrong = SimplicialMap(S1, D1, {"pt": D1.gen_word("pt"), "sig": D1.gen_word("v01")})
    assert any("d0" in p or "d1" in p for p in wrong.check())
