"""Fundamental cocycles, the cochain-level character, and transition cochains.

Sign conventions (all fixed once, checked by the test-suite):

* ``ch(c) = c^* iota_n`` for a map c: X -> E_n.
* ``ch(H) = (-1)^(n+1) (H^* iota_n) / [Delta^1]`` for a homotopy H on
  X ^ Delta^1_+, so that ``delta ch(H) = ch(H at 1) - ch(H at 0)``.
* A cocycle f on X ^ Delta^1_+ is a morphism from its t=0 end (the face d_1)
  to its t=1 end (d_0) with representative ``(-1)^n f / [Delta^1]``; then
  ``delta rep = source - target``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .chains import Chain, Cochain, HomCoset, coboundary, pullback
from .cospec import (
    SpectrumSpaceSimplex,
    costructure,
    face as spectrum_face,
    split,
    with_circle,
    with_simplex,
)
from .ezaw import ez, fundamental_simplex, slant
from .simpset import SimplicialError, SimplicialMap, SimplicialSet, Word, cached_sphere
from .spectra import (
    FLIP,
    ID_CONST,
    PR1,
    PR2,
    PR12,
    PR23,
    Level,
    MapIntoFreeAbelian,
    Matrix,
    Poly,
    SpectrumPackage,
    _id_nu,
    block_diag,
    circle_power,
    coordinate,
    epsilon_slant,
    fundamental_word,
    hom_into_level,
    homotopy_slant,
    ident,
    poly_coboundary,
    pullback_linear,
    pullback_poly,
    validate_package,
)

FundamentalFamily = Dict[int, Poly]
TransitionFamily = Dict[int, Poly]


def fundamental_family(P: SpectrumPackage) -> FundamentalFamily:
    """iota_n = m_{tau_n} + delta b_n for each level of the window."""
    out = {}
    for n, L in sorted(P.levels.items()):
        iota = coordinate(L, fundamental_word(n))
        b = P.perturbation.get(n)
        if b is not None:
            iota = iota + poly_coboundary(b)
        out[n] = iota
    return out


def fundamental_cycle(n: int) -> Dict[Word, int]:
    """The n-cycle of B_n obtained by iterated shuffles with [S^1], as a point of E_n."""
    S1 = cached_sphere(1)
    z = Chain(S1, 1, {"sig": 1})
    for m in range(2, n + 1):
        z = ez(circle_power(m), z, Chain(S1, 1, {"sig": 1}))
    B = circle_power(n)
    return {B.gen_word(g): int(c) for g, c in z.coeffs.items()}


def _entry(name: str, passed: bool, **witness) -> dict:
    e = {"name": name, "status": "pass" if passed else "fail"}
    e.update(witness)
    return e


def check_fundamental(P: SpectrumPackage, F: FundamentalFamily) -> dict:
    entries = []
    lo, hi = P.window
    for n in range(lo, hi + 1):
        if n not in F:
            entries.append(_entry(f"iota_{n} present", False))
            continue
        iota = F[n]
        d = poly_coboundary(iota)
        entries.append(_entry(f"delta iota_{n} = 0", d.is_zero(),
                              **({} if d.is_zero() else {"residual": d.pretty()})))
        val = iota.evaluate([fundamental_cycle(n)])
        entries.append(_entry(f"iota_{n} on the fundamental cycle = 1", val == 1, value=str(val)))
    for n in range(lo, hi):
        if n in F and n + 1 in F:
            lhs = epsilon_slant(F[n + 1], P.level(n))
            diff = lhs - F[n]
            w = {} if diff.is_zero() else {"residual": diff.pretty()}
            entries.append(_entry(f"eps_{n}^* iota_{n + 1} / [S1] = iota_{n}", diff.is_zero(), **w))
    ok = all(e["status"] == "pass" for e in entries)
    return {"check": "fundamental", "package": P.name, "entries": entries, "passed": ok}


# -- the character on objects and homotopies --------------------------------------------


def ch_object(c, F, n: int = None) -> Cochain:
    """c^* iota_n for c: X -> E_n (symbolic level) or a simplicial map into a finite level."""
    if isinstance(c, MapIntoFreeAbelian):
        return pullback_poly([c], F[c.level.n])
    if isinstance(c, SimplicialMap):
        return pullback(c, F[n])
    raise SimplicialError("unsupported map type")


def vertex_restriction(H: MapIntoFreeAbelian, X: SimplicialSet, j: int) -> MapIntoFreeAbelian:
    """H restricted along X -> X ^ Delta^k_+, x |-> (x, v_j)."""
    P = H.source
    assign = {}
    for g in X.dim_of:
        if g == X.basepoint:
            continue
        d = X.dim_of[g]
        w = P.pair(X.gen_word(g), Word(f"v{j}", (0,) * (d + 1)))
        if P.is_base(w):
            continue
        img = H.image(w)
        if img:
            assign[g] = img
    return MapIntoFreeAbelian(X, H.level, assign)


@dataclass
class MorphismCharacter:
    """ch(H) with its endpoints; delta(representative) = ch(end1) - ch(end0)."""

    representative: Cochain
    start: Cochain
    end: Cochain

    def as_coset(self) -> HomCoset:
        # delta rep = end - start, so rep is a morphism end -> start
        return HomCoset(self.representative, self.end, self.start)

    def check(self) -> bool:
        return coboundary(self.representative) == self.end - self.start


def ch_morphism(H: MapIntoFreeAbelian, X: SimplicialSet, F: FundamentalFamily) -> MorphismCharacter:
    P = with_simplex(X, 1)
    if H.source is not P:
        raise SimplicialError("homotopy must live on X ^ Delta^1_+")
    n = H.level.n
    u = pullback_poly([H], F[n])
    rep = ((-1) ** (n + 1)) * slant(u, fundamental_simplex(P.factors[1], 1).value)
    start = ch_object(vertex_restriction(H, X, 0), F)
    end = ch_object(vertex_restriction(H, X, 1), F)
    return MorphismCharacter(rep, start, end)


def a_n_of_simplex(f: MapIntoFreeAbelian, X: SimplicialSet, k: int, F: FundamentalFamily) -> SpectrumSpaceSimplex:
    if f.source is not with_simplex(X, k):
        raise SimplicialError("map must live on X ^ Delta^k_+")
    n = f.level.n
    return SpectrumSpaceSimplex(X, n, k, pullback_poly([f], F[n]))


def constant_cylinder(c: MapIntoFreeAbelian, X: SimplicialSet, k: int = 1) -> MapIntoFreeAbelian:
    """c o pr : X ^ Delta^k_+ -> E_n."""
    P = with_simplex(X, k)
    assign = {}
    for z in P.dim_of:
        if z == P.basepoint:
            continue
        a, _ = split(P, P.gen_word(z))
        img = c.image(a)
        if img:
            assign[z] = img
    return MapIntoFreeAbelian(P, c.level, assign)


def suspend_through_epsilon(g: MapIntoFreeAbelian, target: Level) -> MapIntoFreeAbelian:
    """eps_n o (g ^ 1_{S^1}) : Y ^ S^1 -> E_{n+1}."""
    Y = g.source
    T = with_circle(Y)
    B1 = target.base
    assign = {}
    for z in T.dim_of:
        if z == T.basepoint:
            continue
        a, t = split(T, T.gen_word(z))
        out: Dict[Word, int] = {}
        for w, c in g.image(a).items():
            u = B1.pair(w, t)
            if not B1.is_base(u):
                out[u] = out.get(u, 0) + c
        out = {u: c for u, c in out.items() if c}
        if out:
            assign[z] = out
    return MapIntoFreeAbelian(T, target, assign)


def random_map(X: SimplicialSet, L: Level, rng: random.Random, spread: int = 3) -> MapIntoFreeAbelian:
    basis = hom_into_level(X, L)
    out = MapIntoFreeAbelian(X, L, {})
    for m in basis:
        c = rng.randint(-spread, spread)
        if c:
            out = out + MapIntoFreeAbelian(X, L, {g: {w: c * v for w, v in cb.items()}
                                                  for g, cb in m.assign.items()})
    return out


def costructure_compat_audit(P: SpectrumPackage, F: FundamentalFamily, *, samples: int = 3,
                             seed: int = 0, spaces: Sequence[SimplicialSet] = None,
                             ks: Sequence[int] = (0, 1)) -> dict:
    """psi(A_{n+1}(eps o (g ^ 1))) = A_n(g) on sampled g: X ^ Delta^k_+ -> E_n."""
    from .simpset import circle, sphere

    rng = random.Random(seed)
    spaces = list(spaces) if spaces is not None else [sphere(0), circle()]
    entries = []
    lo, hi = P.window
    for n in range(lo, hi):
        for X in spaces:
            for k in ks:
                Y = with_simplex(X, k)
                for s in range(samples):
                    g = random_map(Y, P.level(n), rng)
                    f = suspend_through_epsilon(g, P.level(n + 1))
                    lhs = costructure(pullback_poly([f], F[n + 1]))
                    rhs = pullback_poly([g], F[n])
                    ok = lhs == rhs
                    e = _entry(f"level {n}, X={X.name}, k={k}, sample {s}", ok)
                    if not ok:
                        e["map"] = g.to_json()
                    entries.append(e)
    return {"check": "costructure", "package": P.name, "entries": entries,
            "passed": all(e["status"] == "pass" for e in entries)}


# -- polynomial coboundary solving --------------------------------------------------------


def candidate_monomials(L: Level, nfac: int, dim: int):
    """Monomials of degree 1 and 2 in nondegenerate coordinates, in a fixed order."""
    vars_ = [(f, w) for f in range(nfac) for w in L.coords(dim, nondegenerate=True)]
    monos = [(v,) for v in vars_]
    monos += [tuple(sorted(p)) for p in combinations_with_replacement(vars_, 2)]
    return monos


def solve_poly_coboundary(target: Poly, dim: int) -> Optional[Poly]:
    """Deterministic G (free variables zero) with delta G = target, or None."""
    L, nfac = target.level, target.nfac
    if dim < 0:
        return Poly(L, nfac, dim) if target.is_zero() else None
    monos = candidate_monomials(L, nfac, dim)
    index: Dict[Tuple, int] = {}

    def vec(p: Poly) -> Dict[int, Fraction]:
        out = {}
        for m, c in p.terms.items():
            t = index.setdefault(m, len(index))
            out[t] = c
        return out

    cols = [vec(poly_coboundary(Poly(L, nfac, dim, {m: 1}))) for m in monos]
    tv = vec(target)
    sol = linalg.solve(cols, tv)
    if sol is None:
        return None
    G = Poly(L, nfac, dim, {monos[j]: c for j, c in sol.items()})
    if poly_coboundary(G) != target:
        raise AssertionError("solver returned a non-solution")
    return G


def transition_rhs(P: SpectrumPackage, iota: Poly) -> Poly:
    return pullback_linear(PR1, iota) + pullback_linear(PR2, iota) - pullback_linear(P.alpha, iota)


def solve_transition(P: SpectrumPackage, F: FundamentalFamily) -> TransitionFamily:
    out = {}
    for n in sorted(P.levels):
        rhs = transition_rhs(P, F[n])
        A = solve_poly_coboundary(rhs, n - 1)
        if A is None:
            raise SimplicialError(f"level {n}: transition right-hand side is not a polynomial coboundary")
        out[n] = A
    return out


def transition_relation(P: SpectrumPackage, F: FundamentalFamily, T: TransitionFamily) -> dict:
    entries = []
    for n in sorted(P.levels):
        if n not in T:
            entries.append(_entry(f"A_{n} present", False))
            continue
        diff = poly_coboundary(T[n]) - transition_rhs(P, F[n])
        w = {} if diff.is_zero() else {"residual": diff.pretty()}
        entries.append(_entry(f"delta A_{n} = pr1* iota + pr2* iota - alpha* iota", diff.is_zero(), **w))
    return {"check": "transition", "package": P.name, "entries": entries,
            "passed": all(e["status"] == "pass" for e in entries)}


def monoidal_cochain(c: MapIntoFreeAbelian, d: MapIntoFreeAbelian, T: TransitionFamily) -> Cochain:
    """(c, d)^* A_n; delta of it is ch(c) + ch(d) - ch(c + d)."""
    return pullback_poly([c, d], T[c.level.n])


def ch_homotopy_symbolic(H: Matrix, iota: Poly, n: int) -> Poly:
    return ((-1) ** (n + 1)) * homotopy_slant(H, iota)


def coherence_differences(P: SpectrumPackage, F: FundamentalFamily, T: TransitionFamily, n: int
                          ) -> Dict[str, Poly]:
    A, iota = T[n], F[n]
    al = P.alpha
    h = P.homotopies
    assoc = (pullback_linear(PR12, A) + pullback_linear(block_diag(al, ident(1)), A)
             - pullback_linear(PR23, A) - pullback_linear(block_diag(ident(1), al), A)
             - ch_homotopy_symbolic(h["a"], iota, n))
    comm = pullback_linear(FLIP, A) - A - ch_homotopy_symbolic(h["s"], iota, n)
    unit = pullback_linear(ID_CONST, A) - ch_homotopy_symbolic(h["r"], iota, n)
    return {"associative": assoc, "commutative": comm, "unit": unit}


def coherence_audit(P: SpectrumPackage, F: FundamentalFamily, T: TransitionFamily) -> dict:
    """Solve delta G = difference for each of the three coherence relations."""
    rel = transition_relation(P, F, T)
    levels = []
    ok = rel["passed"]
    for n in sorted(P.levels):
        rows = []
        for name, diff in coherence_differences(P, F, T, n).items():
            G = solve_poly_coboundary(diff, n - 2)
            row = {
                "relation": name,
                "difference": diff.to_json(),
                "status": "pass" if G is not None else "fail",
            }
            if G is not None:
                row["g"] = G.to_json()
            else:
                ok = False
            rows.append(row)
        levels.append({"level": n, "relations": rows})
    return {"check": "coherence", "package": P.name, "cap": P.cap,
            "transition_relation": rel["entries"], "levels": levels, "passed": ok}


def coherence_solutions(report: dict, P: SpectrumPackage) -> Dict[int, Dict[str, Poly]]:
    """The G polynomials of a passing coherence report, keyed by level and relation."""
    if not report["passed"]:
        raise SimplicialError("coherence audit failed; see the coherence report")
    out = {}
    for lv in report["levels"]:
        n = lv["level"]
        out[n] = {r["relation"]: Poly.from_json(r["g"], P.level(n)) for r in lv["relations"]}
    return out


def negation_cochain(P: SpectrumPackage, F: FundamentalFamily, T: TransitionFamily) -> Dict[int, Poly]:
    """N_n = ch(hinv) - (id, nu)^* A_n, checked against delta N = -iota - nu^* iota."""
    out = {}
    for n in sorted(P.levels):
        iota = F[n]
        N = ch_homotopy_symbolic(P.homotopies["hinv"], iota, n) - pullback_linear(_id_nu(P.nu), T[n])
        want = -iota - pullback_linear(P.nu, iota)
        if poly_coboundary(N) != want:
            raise SimplicialError(f"level {n}: delta N_n != -iota_n - nu^* iota_n")
        out[n] = N
    return out


# -- the gamma functor -----------------------------------------------------------------


def gamma_morphism(f: Cochain) -> HomCoset:
    """f on X ^ Delta^1_+ as a morphism from d_1 f (t=0) to d_0 f (t=1)."""
    P = f.space
    D = P.factors[1]
    if not coboundary(f).is_zero():
        raise SimplicialError("gamma needs a cocycle")
    n = f.degree
    rep = ((-1) ** n) * slant(f, fundamental_simplex(D, 1).value)
    src = slant(f, Chain(D, 0, {"v0": 1}))
    tgt = slant(f, Chain(D, 0, {"v1": 1}))
    return HomCoset(rep, src, tgt)


def gamma_identity_defect(sigma: SpectrumSpaceSimplex) -> Cochain:
    """(-1)^n delta(sigma/[Delta^2]) - sum_i (-1)^i (d_i sigma)/[Delta^1]; zero when it holds."""
    if sigma.k != 2:
        raise SimplicialError("need a 2-simplex")
    n = sigma.level
    P = sigma.value.space
    lhs = ((-1) ** n) * coboundary(slant(sigma.value, fundamental_simplex(P.factors[1], 2).value))
    for i in range(3):
        fi = spectrum_face(sigma, i).value
        t = slant(fi, fundamental_simplex(fi.space.factors[1], 1).value)
        lhs = lhs - t if i % 2 == 0 else lhs + t
    return lhs


# -- mutation testing ---------------------------------------------------------------------


def run_audits(P: SpectrumPackage, F: FundamentalFamily, T: TransitionFamily) -> Dict[str, bool]:
    out = {
        "package": validate_package(P)["passed"],
        "fundamental": check_fundamental(P, F)["passed"],
        "transition": transition_relation(P, F, T)["passed"],
    }
    out["coherence"] = coherence_audit(P, F, T)["passed"] if out["transition"] else False
    try:
        negation_cochain(P, F, T)
        out["negation"] = True
    except SimplicialError:
        out["negation"] = False
    return out


@dataclass
class Mutation:
    kind: str  # "iota", "transition" or "homotopy"
    description: str
    package: SpectrumPackage
    family: FundamentalFamily
    transition: TransitionFamily


def _bump_poly(p: Poly, mono, delta) -> Poly:
    terms = dict(p.terms)
    terms[mono] = terms.get(mono, 0) + delta
    return Poly(p.level, p.nfac, p.dim, terms)


def mutations(P: SpectrumPackage, F: FundamentalFamily, T: TransitionFamily, count: int = 30,
              seed: int = 0) -> List[Mutation]:
    """Single-datum corruptions, cycling through iota, A_n and homotopy endpoints."""
    rng = random.Random(seed)
    out: List[Mutation] = []
    levels = sorted(P.levels)
    kinds = ["iota", "transition", "homotopy"]
    for t in range(count):
        kind = kinds[t % 3]
        delta = rng.choice([-2, -1, 1, 2])
        if kind == "iota":
            n = rng.choice(levels)
            mono = rng.choice(sorted(F[n].terms))
            F2 = dict(F)
            F2[n] = _bump_poly(F[n], mono, delta)
            out.append(Mutation(kind, f"iota_{n} coefficient {mono} += {delta}", P, F2, T))
        elif kind == "transition":
            n = rng.choice([m for m in levels if m >= 2] or levels)
            cands = sorted(T[n].terms) or candidate_monomials(P.level(n), 2, n - 1)
            mono = rng.choice(cands)
            T2 = dict(T)
            T2[n] = _bump_poly(T[n], mono, delta)
            out.append(Mutation(kind, f"A_{n} coefficient += {delta}", P, F, T2))
        else:
            name = rng.choice(sorted(P.homotopies))
            M = [list(r) for r in P.homotopies[name]]
            i = rng.randrange(len(M))
            j = rng.randrange(len(M[0]))
            M[i][j] += delta
            homs = dict(P.homotopies)
            homs[name] = tuple(tuple(r) for r in M)
            P2 = SpectrumPackage(P.name, P.window, P.cap, P.levels, P.alpha, P.nu, homs, P.perturbation)
            out.append(Mutation(kind, f"homotopy {name} entry ({i},{j}) += {delta}", P2, F, T))
    return out


def gamma_audit(K: SimplicialSet, n: int, *, samples: int = 20, seed: int = 0) -> dict:
    """(-1)^n delta(sigma/[Delta^2]) = sum_i (-1)^i (d_i sigma)/[Delta^1] on random 2-simplices."""
    from .cospec import random_cocycle as random_spectrum_cocycle

    rng = random.Random(seed)
    P = with_simplex(K, 2)
    entries = []
    for s in range(samples):
        sigma = SpectrumSpaceSimplex(K, n, 2, random_spectrum_cocycle(P, n, rng))
        defect = gamma_identity_defect(sigma)
        row = {"sample": s, "exact": defect.is_zero()}
        if not row["exact"]:
            row["witness"] = sigma.value.to_json()
        entries.append(row)
    return {"check": "gamma", "space": K.name, "level": n, "samples": samples, "seed": seed,
            "results": entries, "passed": all(r["exact"] for r in entries)}
