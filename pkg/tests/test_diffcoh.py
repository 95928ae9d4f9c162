import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from chernlab.chains import Cochain, basis, coboundary
from chernlab.chern import (
    ch_morphism,
    ch_object,
    coherence_audit,
    fundamental_family,
    negation_cochain,
    random_map,
    solve_transition,
    vertex_restriction,
)
from chernlab.cospec import with_simplex
from chernlab.diffcoh import (
    CoboundaryMove,
    DifferentialCocycle,
    EquivalenceCertificate,
    HomotopyMove,
    add,
    apply_move,
    group_law_certificates,
    neg,
    random_cocycle,
    validate_cocycle,
    verify_certificate,
    zero_cocycle,
)
from chernlab.simpset import SimplicialError, circle, disjoint_basepoint, simplex, sphere
from chernlab.spectra import em_package, em_skew_package

S1P, S2P = disjoint_basepoint(circle()), disjoint_basepoint(sphere(2))
D2P = simplex(2, plus=True)


def _context(P):
    F = fundamental_family(P)
    T = solve_transition(P, F)
    return F, T, negation_cochain(P, F, T), coherence_audit(P, F, T)


EM, SKEW = em_package(1, 3, 5), em_skew_package(1, 3, 5)
EM_CTX, SKEW_CTX = _context(EM), _context(SKEW)


def _triples(X, P, F, n, seed, count=3):
    rng = random.Random(seed)
    return [random_cocycle(X, P, F, n, rng) for _ in range(count)]


@pytest.mark.parametrize("X", [S1P, S2P], ids=lambda X: X.name)
@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("seed", range(3))
def test_strict_model_group_law_holds_on_the_nose(X, n, seed):
    F, T, N, _ = EM_CTX
    x, y, z = _triples(X, EM, F, n, seed)
    zero = zero_cocycle(X, EM, n)
    for v in (x, y, z):
        assert validate_cocycle(v, F)["passed"]
    assert add(add(x, y, T), z, T) == add(x, add(y, z, T), T)
    assert add(x, y, T) == add(y, x, T)
    assert add(x, zero, T) == x
    assert add(x, neg(x, N), T) == zero


@settings(max_examples=15)
@given(st.integers(0, 10_000), st.sampled_from([1, 2, 3]), st.booleans())
def test_sum_and_negative_stay_cocycles(seed, n, skew):
    P, (F, T, N, _) = (SKEW, SKEW_CTX) if skew else (EM, EM_CTX)
    x, y = _triples(S2P, P, F, n, seed, count=2)
    assert validate_cocycle(add(x, y, T), F)["passed"]
    assert validate_cocycle(neg(x, N), F)["passed"]


@pytest.mark.parametrize("X", [S1P, S2P], ids=lambda X: X.name)
@pytest.mark.parametrize("n", [2, 3])
def test_skew_group_law_certificates_verify(X, n):
    F, T, N, coh = SKEW_CTX
    x, y, z = _triples(X, SKEW, F, n, seed=n)
    certs = group_law_certificates(x, y, z, SKEW, F, T, N, coh)
    assert [c.law for c in certs] == ["associative", "commutative", "unit", "inverse"]
    for c in certs:
        rep = verify_certificate(c.lhs, c.rhs, c.certificate, F)
        assert rep["passed"], (c.law, rep)


def test_skew_sum_is_strict_because_transition_is_symmetric_bilinear():
    F, T, _, _ = SKEW_CTX
    for seed in range(5):
        x, y, z = _triples(S2P, SKEW, F, 3, seed)
        assert add(x, y, T) == add(y, x, T)
        assert add(add(x, y, T), z, T) == add(x, add(y, z, T), T)


def _moved(P, F, n, seed):
    """x, a certificate with a non-constant homotopy and a nonzero coboundary, and its end."""
    rng = random.Random(seed)
    X = D2P
    C = random_map(with_simplex(X, 1), P.level(n), rng)
    c0 = vertex_restriction(C, X, 0)
    h = Cochain(X, n - 1, {k: rng.randint(-2, 2) for k in basis(X, n - 1)})
    x = DifferentialCocycle(n, c0, ch_object(c0, F) + coboundary(h), h)
    g = Cochain(X, n - 2, {k: rng.choice([-1, 1]) for k in basis(X, n - 2)})
    cert = EquivalenceCertificate([HomotopyMove(C), CoboundaryMove(g)])
    y = x
    for mv in cert.moves:
        y = apply_move(y, mv, F)
    return x, cert, y


@pytest.mark.parametrize("seed", range(4))
def test_nontrivial_certificate_replays(seed):
    F = SKEW_CTX[0]
    x, cert, y = _moved(SKEW, F, 2, seed)
    assert coboundary(cert.moves[1].g)
    assert not ch_morphism(cert.moves[0].C, D2P, F).representative.is_zero()
    assert x.c != y.c and x.h != y.h
    assert verify_certificate(x, y, cert, F)["passed"]


def test_extra_coboundary_move_fails_at_the_end():
    F = SKEW_CTX[0]
    x, cert, y = _moved(SKEW, F, 2, 0)
    bad = EquivalenceCertificate(cert.moves + [cert.moves[1]])
    rep = verify_certificate(x, y, bad, F)
    assert not rep["passed"]
    assert rep["failed_at"] == 3 and "final triple" in rep["reason"]


def test_homotopy_from_wrong_start_fails_at_step_one():
    F, T, N, coh = SKEW_CTX
    x, y, z = _triples(S1P, SKEW, F, 2, seed=2)
    cert = group_law_certificates(x, y, z, SKEW, F, T, N, coh)[1]
    rep = verify_certificate(x, cert.rhs, cert.certificate, F)
    assert not rep["passed"]
    assert rep["failed_at"] == 1 and "start" in rep["reason"]


def test_wrong_degree_coboundary_move_is_named():
    F, *_ = SKEW_CTX
    x = _triples(S2P, SKEW, F, 2, seed=0, count=1)[0]
    bad = EquivalenceCertificate([CoboundaryMove(Cochain(S2P, 1))])
    rep = verify_certificate(x, x, bad, F)
    assert rep["failed_at"] == 1 and "degree" in rep["reason"]


def test_invalid_start_is_rejected():
    F, *_ = SKEW_CTX
    x = _triples(S2P, SKEW, F, 2, seed=0, count=1)[0]
    broken = DifferentialCocycle(x.level, x.c, x.omega + x.omega + Cochain(S2P, 2, {("sig", 0): 1}), x.h)
    rep = verify_certificate(broken, broken, EquivalenceCertificate([]), F)
    assert not rep["passed"] and rep["failed_at"] == 0


def test_shape_errors():
    F, *_ = SKEW_CTX
    x = _triples(S2P, SKEW, F, 2, seed=0, count=1)[0]
    with pytest.raises(SimplicialError):
        DifferentialCocycle(2, x.c, x.omega, x.omega)
    y = _triples(S1P, SKEW, F, 2, seed=0, count=1)[0]
    with pytest.raises(SimplicialError):
        add(x, y, SKEW_CTX[1])


def test_json_round_trips():
    F, T, N, coh = SKEW_CTX
    x, y, z = _triples(S2P, SKEW, F, 2, seed=4)
    assert DifferentialCocycle.from_json(json.loads(json.dumps(x.to_json())), S2P, SKEW) == x
    cert = group_law_certificates(x, y, z, SKEW, F, T, N, coh)[0]
    doc = json.loads(json.dumps(cert.certificate.to_json()))
    back = EquivalenceCertificate.from_json(doc, S2P, SKEW)
    assert isinstance(back.moves[0], HomotopyMove) and isinstance(back.moves[1], CoboundaryMove)
    assert verify_certificate(cert.lhs, cert.rhs, back, F)["passed"]
