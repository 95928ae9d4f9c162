import random

import pytest
from hypothesis import given, settings, strategies as st

from chernlab.chains import coboundary
from chernlab.chern import (
    ch_morphism,
    ch_object,
    check_fundamental,
    coherence_audit,
    coherence_differences,
    coherence_solutions,
    constant_cylinder,
    costructure_compat_audit,
    fundamental_cycle,
    fundamental_family,
    gamma_audit,
    gamma_identity_defect,
    gamma_morphism,
    monoidal_cochain,
    mutations,
    negation_cochain,
    random_map,
    run_audits,
    solve_transition,
    transition_relation,
)
from chernlab.ezaw import fundamental_simplex, slant
from chernlab.cospec import SpectrumSpaceSimplex, random_cocycle, with_simplex
from chernlab.simpset import circle, disjoint_basepoint, sphere, torus
from chernlab.spectra import em_package, em_skew_package, poly_coboundary

from oracles import transition_oracle_terms

EM = em_package(1, 3, 5)
SKEW = em_skew_package(1, 3, 5)


def _setup(P):
    F = fundamental_family(P)
    return F, solve_transition(P, F)


def _as_xy(poly):
    return {tuple(sorted(("x" if f == 0 else "y", repr(w)) for f, w in m)): c
            for m, c in poly.terms.items()}


@pytest.mark.parametrize("P", [EM, SKEW], ids=["em", "skew"])
def test_fundamental_family_checks(P):
    F = fundamental_family(P)
    rep = check_fundamental(P, F)
    assert rep["passed"], rep
    for n in P.levels:
        assert F[n].evaluate([fundamental_cycle(n)]) == 1


def test_strict_model_has_zero_transition():
    F, T = _setup(EM)
    assert all(T[n].is_zero() for n in EM.levels)
    assert transition_relation(EM, F, T)["passed"]


def test_skew_transition_matches_symbolic_expansion():
    F, T = _setup(SKEW)
    assert transition_relation(SKEW, F, T)["passed"]
    for n in SKEW.levels:
        b = SKEW.perturbation.get(n)
        if b is None:
            assert T[n].is_zero()
            continue
        expected = transition_oracle_terms({tuple(repr(w) for _, w in m): c for m, c in b.terms.items()})
        assert _as_xy(T[n]) == expected
        assert expected  # the quadratic part survives: -2 m(x) m(y)
        assert set(expected.values()) == {-2}


@pytest.mark.parametrize("P", [EM, SKEW], ids=["em", "skew"])
def test_coherence_audit_passes_and_witnesses_verify(P):
    F, T = _setup(P)
    rep = coherence_audit(P, F, T)
    assert rep["passed"]
    sols = coherence_solutions(rep, P)
    for n in P.levels:
        diffs = coherence_differences(P, F, T, n)
        for name, G in sols[n].items():
            assert poly_coboundary(G) == diffs[name]


@pytest.mark.parametrize("P", [EM, SKEW], ids=["em", "skew"])
def test_negation_cochain(P):
    F, T = _setup(P)
    N = negation_cochain(P, F, T)
    assert set(N) == set(P.levels)


@pytest.mark.parametrize("P", [EM, SKEW], ids=["em", "skew"])
def test_every_mutation_is_caught(P):
    F, T = _setup(P)
    assert all(run_audits(P, F, T).values())
    muts = mutations(P, F, T, count=30, seed=7)
    assert len(muts) == 30
    for m in muts:
        res = run_audits(m.package, m.family, m.transition)
        assert not all(res.values()), m.description


@pytest.mark.parametrize("P", [EM, SKEW], ids=["em", "skew"])
def test_costructure_compatibility(P):
    F = fundamental_family(P)
    assert costructure_compat_audit(P, F, samples=2, seed=1)["passed"]


@settings(max_examples=15)
@given(st.integers(0, 10_000), st.sampled_from([1, 2]), st.sampled_from(["S1", "T2", "S2"]))
def test_character_of_maps_is_cocycle_and_transition_measures_additivity(seed, n, name):
    X = {"S1": circle(), "T2": torus(), "S2": sphere(2)}[name]
    F, T = _setup(SKEW)
    L = SKEW.level(n)
    rng = random.Random(seed)
    c, d = random_map(X, L, rng), random_map(X, L, rng)
    for m in (c, d, c + d):
        assert coboundary(ch_object(m, F)).is_zero()
    lhs = coboundary(monoidal_cochain(c, d, T))
    assert lhs == ch_object(c, F) + ch_object(d, F) - ch_object(c + d, F)


@settings(max_examples=10)
@given(st.integers(0, 10_000), st.sampled_from([1, 2]))
def test_character_of_homotopy_bounds_its_ends(seed, n):
    X = disjoint_basepoint(circle())
    F = fundamental_family(SKEW)
    H = random_map(with_simplex(X, 1), SKEW.level(n), random.Random(seed))
    m = ch_morphism(H, X, F)
    assert m.check()
    assert m.as_coset().check()


def test_constant_homotopy_has_zero_character():
    X = torus()
    F = fundamental_family(SKEW)
    c = random_map(X, SKEW.level(2), random.Random(3))
    m = ch_morphism(constant_cylinder(c, X), X, F)
    assert m.start == m.end == ch_object(c, F)
    assert m.representative.is_zero()


@pytest.mark.parametrize("K", [circle(), sphere(2), torus()], ids=lambda K: K.name)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_gamma_respects_two_simplices(K, n):
    rep = gamma_audit(K, n, samples=5, seed=n)
    assert rep["passed"]


def test_gamma_morphism_orientation():
    K = torus()
    f = random_cocycle(with_simplex(K, 1), 2, random.Random(4))
    g = gamma_morphism(f)
    assert g.check()


def test_gamma_defect_detects_a_sign_error():
    # the opposite orientation on the 2-simplex term is rejected
    K = torus()
    rng = random.Random(11)
    P = with_simplex(K, 2)
    caught = 0
    for _ in range(5):
        sigma = SpectrumSpaceSimplex(K, 3, 2, random_cocycle(P, 3, rng))
        good = gamma_identity_defect(sigma)
        assert good.is_zero()
        doubled = coboundary(slant(sigma.value, fundamental_simplex(P.factors[1], 2).value))
        caught += not (good - 2 * doubled).is_zero()
    assert caught == 5
