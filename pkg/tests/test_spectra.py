import json
import random

import pytest
from hypothesis import given, strategies as st

from chernlab.chains import coboundary
from chernlab.simpset import SimplicialError, circle, sphere, torus
from chernlab.spectra import (
    MapIntoFreeAbelian,
    Poly,
    SpectrumPackage,
    circle_power,
    combine,
    constant_into,
    coordinate,
    em_package,
    em_skew_package,
    free_abelian_level,
    fundamental_word,
    hom_into_level,
    poly_coboundary,
    pullback_poly,
    skew_package,
    square,
    validate_package,
)


def tautological(level):
    B = level.base
    return MapIntoFreeAbelian(B, level, {g: {B.gen_word(g): 1} for g in B.dim_of
                                         if g != B.basepoint})


@st.composite
def poly_on(draw, n, dim, quadratic=True):
    L = free_abelian_level(n)
    coords = L.coords(dim)
    if not coords:
        return Poly(L, 1, dim)
    lin = draw(st.lists(st.tuples(st.sampled_from(coords), st.integers(-3, 3)), max_size=4))
    terms = {}
    for w, c in lin:
        terms[((0, w),)] = terms.get(((0, w),), 0) + c
    if quadratic:
        quad = draw(st.lists(st.tuples(st.sampled_from(coords), st.sampled_from(coords),
                                       st.integers(-3, 3)), max_size=3))
        for w1, w2, c in quad:
            m = tuple(sorted(((0, w1), (0, w2))))
            terms[m] = terms.get(m, 0) + c
    return Poly(L, 1, dim, terms)


@given(st.data())
def test_poly_coboundary_squares_to_zero(data):
    n = data.draw(st.integers(1, 3))
    dim = data.draw(st.integers(1, 2))
    p = data.draw(poly_on(n, dim))
    assert poly_coboundary(poly_coboundary(p)).is_zero()


@given(st.data())
def test_poly_coboundary_matches_cochain_coboundary_on_tautological_map(data):
    n = data.draw(st.integers(1, 3))
    dim = data.draw(st.integers(1, n))
    p = data.draw(poly_on(n, dim))
    t = tautological(free_abelian_level(n))
    assert t.check() == []
    assert pullback_poly([t], poly_coboundary(p)) == coboundary(pullback_poly([t], p))


@pytest.mark.parametrize("X,n", [(sphere(2), 2), (torus(), 1), (torus(), 2), (circle(), 1)],
                         ids=["S2-2", "T2-1", "T2-2", "S1-1"])
def test_hom_into_level_gives_valid_maps_natural_for_coboundary(X, n):
    L = free_abelian_level(n)
    maps = hom_into_level(X, L)
    assert maps
    rng = random.Random(n)
    for c in maps:
        assert c.check() == []
    c = combine(maps, [rng.randint(-2, 2) for _ in maps])
    assert c.check() == []
    if n > 1:
        p = square(coordinate(L, L.coords(n - 1, nondegenerate=True)[0]))
    else:
        p = coordinate(L, L.coords(1)[0])
    assert pullback_poly([c], poly_coboundary(p)) == coboundary(pullback_poly([c], p))


def test_sphere_maps_reach_the_top_cell():
    maps = hom_into_level(sphere(2), free_abelian_level(2))
    top_values = [c.assign.get("sig", {}) for c in maps]
    assert any(top_values)


def test_map_arithmetic():
    L = free_abelian_level(2)
    T = torus()
    c = hom_into_level(T, L)[0]
    assert c + (-c) == constant_into(T, L)
    assert combine([c, c], [2, -1]) == c


def test_bad_map_is_named():
    L = free_abelian_level(1)
    S1 = circle()
    bad = MapIntoFreeAbelian(S1, L, {"pt": {L.base.gen_word("sig"): 1}})
    assert bad.check()


def test_map_json_round_trip():
    L = free_abelian_level(2)
    T = torus()
    c = combine(hom_into_level(T, L), [1, -2, 3][: len(hom_into_level(T, L))])
    back = MapIntoFreeAbelian.from_json(json.loads(json.dumps(c.to_json())), T, L)
    assert back == c


def test_poly_json_round_trip():
    L = free_abelian_level(3)
    p = em_skew_package().perturbation[3]
    assert Poly.from_json(json.loads(json.dumps(p.to_json())), L) == p


def test_fundamental_word_is_a_top_cell():
    for n in range(1, 4):
        w = fundamental_word(n)
        assert w.dim == n and not w.is_degenerate
        assert w.gen in circle_power(n).cells(n)


def test_em_package_validates():
    rep = validate_package(em_package(1, 3, 5))
    assert rep["passed"], rep


def test_tampered_homotopy_fails_at_named_entry():
    P = em_package(1, 3, 5)
    P.homotopies["s"] = ((1, 0),)
    rep = validate_package(P)
    assert not rep["passed"]
    assert any(e["status"] == "fail" and "homotopy s" in e["name"] for e in rep["entries"])


def test_package_json_round_trip():
    P = em_skew_package()
    doc = json.loads(json.dumps(P.to_json()))
    Q = SpectrumPackage.from_json(doc)
    assert Q.to_json() == P.to_json()
    assert validate_package(Q)["passed"]


def test_window_must_fit_under_cap():
    with pytest.raises(SimplicialError):
        em_package(1, 5, 5)
    with pytest.raises(SimplicialError):
        em_package(0, 2, 5)


def test_skew_perturbation_shape():
    P = em_skew_package()
    b = P.perturbation
    assert set(b) == {2, 3}
    for n, p in b.items():
        assert p.dim == n - 1 and p.degree == 2 and p.uses_only_nondegenerate()


def test_degenerate_perturbation_is_rejected():
    base = em_package(1, 3, 5)
    L = base.level(3)
    degenerate = next(w for w in L.coords(2) if w.is_degenerate)
    with pytest.raises(SimplicialError, match="degenerate"):
        skew_package(base, {3: square(coordinate(L, degenerate))})


def test_wrong_dimension_perturbation_is_rejected():
    base = em_package(1, 3, 5)
    L = base.level(3)
    with pytest.raises(SimplicialError):
        skew_package(base, {3: coordinate(L, L.coords(3, nondegenerate=True)[0])})


def test_cubic_monomial_is_rejected():
    L = free_abelian_level(2)
    w = L.coords(1)[0]
    with pytest.raises(SimplicialError):
        Poly(L, 1, 1, {((0, w), (0, w), (0, w)): 1})
