"""End-to-end acceptance criteria, each under its wall-clock limit.

Every test records one PASS/FAIL line, printed in the terminal summary.
"""

import itertools
import random
import time
from contextlib import contextmanager

import sympy

from conftest import ACCEPTANCE_LINES
from oracles import betti_from_boundaries, transition_oracle_terms

from chernlab import chern, cospec, diffcoh, ezaw
from chernlab.simpset import (
    circle,
    disjoint_basepoint,
    product,
    simplex,
    smash,
    sphere,
    torus,
)
from chernlab.spectra import (
    circle_power,
    em_package,
    em_skew_package,
    poly_coboundary,
    Poly,
)
from chernlab import twomon as tm
from chernlab.twomon import fixtures as tmfx
from chernlab.twomon.io import two_monoidal_to_json


@contextmanager
def criterion(num, title, limit):
    start = time.perf_counter()
    status = {"ok": False, "note": ""}
    try:
        yield status
    finally:
        elapsed = time.perf_counter() - start
        ok = status["ok"] and elapsed < limit
        line = f"criterion {num:02d} {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f}s, limit {limit}s)"
        if status["note"]:
            line += f"  [{status['note']}]"
        ACCEPTANCE_LINES.append(line)
        print(line)
    assert elapsed < limit, f"criterion {num} took {elapsed:.2f}s (limit {limit}s)"


def test_01_simplicial_identities():
    with criterion(1, "simplicial identities on built-in constructions", 5) as st:
        spaces = [sphere(n) for n in range(7)] + [simplex(n) for n in range(7)]
        spaces += [simplex(n, plus=True) for n in range(5)] + [torus(), disjoint_basepoint(torus())]
        spheres = [sphere(n) for n in range(4)]
        spaces += [product(a, b, cap=6) for a in spheres for b in spheres]
        spaces += [smash(a, b, cap=6) for a in spheres for b in spheres]
        spaces += [product(torus(), torus(), cap=6), smash(torus(), sphere(2), cap=6), circle_power(5)]
        bad = {K.name: K.check()[:1] for K in spaces if K.check()}
        assert not bad, bad
        st["ok"] = True
        st["note"] = f"{len(spaces)} constructions"


def test_02_ez_aw_stokes():
    with criterion(2, "EZ chain map, AW o EZ = id, Stokes exact", 30) as st:
        base = [circle(), sphere(2), torus()]
        prods = [product(a, b) for a in base for b in base]
        pairs = 0
        for P in prods:
            ez_rep = ezaw.ez_audit(P, samples=20, seed=1)
            assert ez_rep["passed"], P.name
            s_rep = ezaw.stokes_audit(P, samples=60, seed=2)
            assert s_rep["passed"], P.name
            pairs += len(s_rep["results"])
        assert pairs >= 500
        st["ok"] = True
        st["note"] = f"{pairs} Stokes pairs"


def test_03_loop_iso():
    with criterion(3, "loop-space isomorphism round trip on S1", 30) as st:
        K = circle()
        for n in range(1, 4):
            for k in range(0, 3):
                rep = cospec.loop_iso_audit(K, n, k, samples=4, seed=10 * n + k)
                assert rep["passed"], (n, k)
        st["ok"] = True


def test_04_slant_invariants():
    with criterion(4, "realized slant invariants match cohomology ranks", 60) as st:
        for K in (circle(), sphere(2), torus()):
            rep = cospec.invariant_rank_audit(K, 4, 2)
            assert rep["passed"], K.name
            # the ranks themselves against an independent boundary-matrix computation
            betti = betti_from_boundaries(K, K.dim)
            for row in rep["rows"]:
                d = row["level"] - row["sphere_dim"]
                assert row["cohomology_rank"] == (betti[d] if d < len(betti) else 0)
        st["ok"] = True


def test_05_suspension():
    with criterion(5, "suspension differences are coboundaries", 60) as st:
        count = 0
        for K in (sphere(0), circle()):
            for n in range(1, 4):
                for k in range(0, 3):
                    rep = cospec.suspension_audit(K, n, k, samples=3, seed=n + 7 * k)
                    assert rep["passed"], (K.name, n, k)
                    count += rep["samples"]
        st["ok"] = True
        st["note"] = f"{count} instances"


def test_06_fundamental_and_costructure():
    with criterion(6, "fundamental and costructure compatibility on em", 60) as st:
        P = em_package(1, 3, 5)
        F = chern.fundamental_family(P)
        assert chern.check_fundamental(P, F)["passed"]
        rep = chern.costructure_compat_audit(P, F, samples=3, seed=0, ks=(0, 1, 2))
        assert rep["passed"]
        st["ok"] = True
        st["note"] = f"{len(rep['entries'])} sampled squares"


def test_07_transition_solve():
    with criterion(7, "transition cochains: zero on em, symbolic oracle on skew", 30) as st:
        # the symbolic oracle runs first, before anything is solved
        P = em_skew_package(1, 3, 5)
        oracles = {}
        for n, b in P.perturbation.items():
            terms = {tuple(repr(w) for _, w in m): c for m, c in b.terms.items()}
            literal = {k: -v for k, v in transition_oracle_terms(terms).items()}  # b(x+y) - b(x) - b(y)
            oracles[n] = literal
        x, y = sympy.symbols("x y")
        assert sympy.expand((x + y) ** 2 - x ** 2 - y ** 2) == 2 * x * y

        E = em_package(1, 3, 5)
        FE = chern.fundamental_family(E)
        TE = chern.solve_transition(E, FE)
        assert all(TE[n].is_zero() for n in E.levels)

        F = chern.fundamental_family(P)
        T = chern.solve_transition(P, F)
        assert chern.transition_relation(P, F, T)["passed"]
        for n in P.levels:
            if n not in oracles:
                assert T[n].is_zero()
                continue
            got = {tuple(sorted(("x" if f == 0 else "y", repr(w)) for f, w in m)): c
                   for m, c in T[n].terms.items()}
            # the defining relation delta A = pr1* iota + pr2* iota - alpha* iota fixes the sign:
            # A_n = pr1* b + pr2* b - alpha* b, the negative of the literal expansion
            assert got == {k: -v for k, v in oracles[n].items()}
            flipped = Poly(T[n].level, 2, T[n].dim, {m: -c for m, c in T[n].terms.items()})
            rhs = chern.transition_rhs(P, F[n])
            assert poly_coboundary(T[n]) == rhs
            assert poly_coboundary(flipped) != rhs
        st["ok"] = True
        st["note"] = "A_n = -(b(x+y) - b(x) - b(y)), sign forced by the defining relation"


def test_08_coherence_and_mutations():
    with criterion(8, "coherence relations solvable; 30 mutations caught per package", 120) as st:
        caught = 0
        for P in (em_package(1, 3, 5), em_skew_package(1, 3, 5)):
            F = chern.fundamental_family(P)
            T = chern.solve_transition(P, F)
            assert chern.coherence_audit(P, F, T)["passed"]
            assert all(chern.run_audits(P, F, T).values())
            for m in chern.mutations(P, F, T, count=30, seed=3):
                res = chern.run_audits(m.package, m.family, m.transition)
                assert not all(res.values()), m.description
                caught += 1
        st["ok"] = True
        st["note"] = f"{caught}/60 mutations caught"


def test_09_group_law():
    with criterion(9, "exact group law on em; skew certificates verify", 60) as st:
        E = em_package(1, 3, 5)
        F = chern.fundamental_family(E)
        T = chern.solve_transition(E, F)
        N = chern.negation_cochain(E, F, T)
        total = 0
        for X in (disjoint_basepoint(circle()), disjoint_basepoint(sphere(2))):
            for n in (1, 2):
                rng = random.Random(n)
                xs = [diffcoh.random_cocycle(X, E, F, n, rng) for _ in range(6)]
                total += len(xs)
                zero = diffcoh.zero_cocycle(X, E, n)
                for a in xs:
                    assert diffcoh.validate_cocycle(a, F)["passed"]
                    assert diffcoh.add(a, zero, T) == a
                    assert diffcoh.add(a, diffcoh.neg(a, N), T) == zero
                for a, b in itertools.product(xs, repeat=2):
                    assert diffcoh.add(a, b, T) == diffcoh.add(b, a, T)
                for a, b, c in itertools.product(xs, repeat=3):
                    assert diffcoh.add(diffcoh.add(a, b, T), c, T) == diffcoh.add(a, diffcoh.add(b, c, T), T)
        assert total >= 10

        P = em_skew_package(1, 3, 5)
        F = chern.fundamental_family(P)
        T = chern.solve_transition(P, F)
        N = chern.negation_cochain(P, F, T)
        coh = chern.coherence_audit(P, F, T)
        certs = 0
        for X in (disjoint_basepoint(circle()), disjoint_basepoint(sphere(2))):
            rng = random.Random(5)
            xs = [diffcoh.random_cocycle(X, P, F, 2, rng) for _ in range(3)]
            for g in diffcoh.group_law_certificates(*xs, P, F, T, N, coh):
                assert diffcoh.verify_certificate(g.lhs, g.rhs, g.certificate, F)["passed"], g.law
                certs += 1
        st["ok"] = True
        st["note"] = f"{total} strict cocycles, {certs} skew certificates"


def test_10_twomon():
    with criterion(10, "2-monoidal fixtures, braiding hexagons, transport, uniqueness", 30) as st:
        expected = {"discrete-z4": True, "terminal": True, "two-group-z4": True, "super": True,
                    "super-bad-interchange": False, "fat-super": True}
        passing = []
        for name, mk in tmfx.BUILTINS.items():
            T = mk()
            assert tm.check_two_monoidal(T)["passed"] == expected[name], name
            if expected[name]:
                passing.append(T)
        assert not tm.check_monoidal(tmfx.pentagon_failure())["passed"]
        for T in passing:
            assert tm.braiding(T)["report"]["passed"]

        S = tmfx.super_two_group()
        C = S.cat
        R = tmfx.relabeling(S, {o: f"o{o}" for o in C.objects},
                            {m: f"m{m[0]}{m[1]}" for m in C.morphisms})
        T = tm.transport_iso(R, S)
        Rinv = tm.Functor(C, R.source, {v: k for k, v in R.obj.items()}, {v: k for k, v in R.mor.items()})
        back = tm.transport_iso(Rinv, T)
        assert two_monoidal_to_json(back) == two_monoidal_to_json(S)

        S, A, T, P = tmfx.fat_super()
        J1 = tm.doctrinal_two(A, P)
        J2 = tm.doctrinal_two(A, P)
        assert tm.check_two_monoidal_functor(J1)["passed"]
        assert tm.same_cells(J1, J2)
        assert tm.same_cells(tm.doctrinal_two(A.reversed(), J1), P)
        st["ok"] = True
        st["note"] = f"{len(passing)} passing fixtures"


def test_11_gamma():
    with criterion(11, "gamma identity on random 2-simplices", 30) as st:
        total = 0
        for K in (circle(), sphere(2), torus()):
            for n in (1, 2, 3):
                rep = chern.gamma_audit(K, n, samples=23, seed=n)
                assert rep["passed"], (K.name, n)
                total += rep["samples"]
        assert total >= 200
        st["ok"] = True
        st["note"] = f"{total} simplices"
