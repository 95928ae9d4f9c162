import random

import pytest
from hypothesis import given, strategies as st

from chernlab.chains import Cochain, coboundary
from chernlab.cospec import (
    LoopTuple,
    SpectrumSpaceSimplex,
    constant_simplex,
    costructure,
    degeneracy,
    face,
    filler_certifies,
    homotopy_invariant,
    invariant_rank_audit,
    loop_iso,
    loop_iso_audit,
    loop_iso_inverse,
    random_cocycle,
    realized_invariant_rank,
    suspension_audit,
    with_circle,
    with_simplex,
    zero_simplex,
)
from chernlab.simpset import SimplicialError, circle, disjoint_basepoint, sphere, torus

from oracles import betti_from_boundaries

S0, S1, S2, T2 = sphere(0), circle(), sphere(2), torus()


@st.composite
def spectrum_simplex(draw, K, max_k=2, max_n=3):
    k = draw(st.integers(0, max_k))
    n = draw(st.integers(1, max_n))
    rng = random.Random(draw(st.integers(0, 10_000)))
    return SpectrumSpaceSimplex(K, n, k, random_cocycle(with_simplex(K, k), n, rng))


@given(spectrum_simplex(S1))
def test_simplicial_identities_on_spectrum_simplices(s):
    k = s.k
    for j in range(k + 1):
        sj = degeneracy(s, j)
        assert face(sj, j) == s and face(sj, j + 1) == s
        for i in range(k + 2):
            if i < j:
                assert face(sj, i) == degeneracy(face(s, i), j - 1)
            elif i > j + 1:
                assert face(sj, i) == degeneracy(face(s, i - 1), j)
    for i in range(k + 1 if k >= 2 else 0):
        for j in range(i + 1, k + 1):
            assert face(face(s, j), i) == face(face(s, i), j - 1)


def test_faces_out_of_range():
    s = zero_simplex(S1, 1, 1)
    with pytest.raises(SimplicialError):
        face(s, 2)
    with pytest.raises(SimplicialError):
        face(zero_simplex(S1, 1, 0), 0)


def test_simplices_must_be_cocycles():
    P = with_simplex(T2, 1)
    u = next(v for v in (Cochain(P, 1, {(g, 0): 1}) for g in P.cells(1)) if not coboundary(v).is_zero())
    with pytest.raises(SimplicialError, match="cocycle"):
        SpectrumSpaceSimplex(T2, 1, 1, u)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 4) for k in range(0, 3)])
def test_loop_iso_round_trips(n, k):
    rep = loop_iso_audit(S1, n, k, samples=3, seed=n * 10 + k)
    assert rep["passed"], rep


def test_mismatched_tuple_is_rejected():
    rng = random.Random(5)
    T = with_circle(with_simplex(S1, 1))
    f = random_cocycle(T, 2, rng)
    while f.is_zero():
        f = random_cocycle(T, 2, rng)
    t = loop_iso(f, S1, 1)
    broken = LoopTuple([t.components[0], zero_simplex(S1, 2, 2)])
    assert broken.check()
    with pytest.raises(SimplicialError, match="matching"):
        loop_iso_inverse(broken)


@pytest.mark.parametrize("K", [S1, S2, T2, disjoint_basepoint(S1)], ids=lambda K: K.name)
def test_sphere_invariants_realize_all_of_cohomology(K):
    betti = betti_from_boundaries(K, K.dim)
    for n in range(1, 4):
        for i in range(0, min(2, n) + 1):
            realized, expected = realized_invariant_rank(K, n, i)
            oracle = betti[n - i] if n - i < len(betti) else 0
            assert expected == oracle
            assert realized == oracle


def test_invariant_audit_report_shape():
    rep = invariant_rank_audit(S2, 2, 1)
    assert rep["passed"] and {r["status"] for r in rep["rows"]} == {"pass"}


@pytest.mark.parametrize("K", [S0, S1], ids=lambda K: K.name)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_suspension_square_is_exact(K, n):
    for k in range(0, 2):
        rep = suspension_audit(K, n, k, samples=3, seed=n + k)
        assert rep["passed"]
        assert all(r["exact"] for r in rep["results"])


def test_costructure_lowers_level():
    T = with_circle(S2)
    f = random_cocycle(T, 3, random.Random(0))
    g = costructure(f)
    assert g.degree == 2 and g.space is S2 and coboundary(g).is_zero()


def test_costructure_requires_circle_factor():
    with pytest.raises(SimplicialError):
        costructure(Cochain(with_simplex(S1, 1), 1, {}))


def test_constant_simplex_is_degenerate_in_simplex_direction():
    z = random_cocycle(T2, 1, random.Random(3))
    c1 = constant_simplex(z, 1)
    assert face(c1, 0) == face(c1, 1) == constant_simplex(z, 0)


def test_zero_filler_certifies_reflexivity():
    z = constant_simplex(random_cocycle(S2, 2, random.Random(1)), 0)
    assert filler_certifies(z, z, zero_simplex(S2, 2, 1))
    assert not z.value.is_zero()
    assert not filler_certifies(z, zero_simplex(S2, 2, 0), zero_simplex(S2, 2, 1))


def test_homotopy_invariant_of_zero_sphere_is_zero():
    assert homotopy_invariant(zero_simplex(S2, 3, 1)).is_zero()
    s = constant_simplex(random_cocycle(S2, 2, random.Random(1)), 1)
    assert not s.value.is_zero()
    with pytest.raises(SimplicialError, match="face"):
        homotopy_invariant(s)
