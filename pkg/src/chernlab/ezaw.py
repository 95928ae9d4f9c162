"""Shuffle (Eilenberg-Zilber) and Alexander-Whitney maps, slant products.

Chains on a product or smash ``P`` are built from chains on its two factors
``P.factors == (K, L)``.  Shuffle signs are the parity of the shuffle
permutation; with that choice and the coboundary of :mod:`chernlab.chains`
the Stokes identity

    (delta u) / e = delta (u / e) - (-1)^(|u| + |e|) u / (boundary e)

holds on the nose.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, Tuple

from .chains import Chain, Cochain, boundary, coboundary
from .simpset import SimplicialError, SimplicialSet, Word


@lru_cache(maxsize=None)
def shuffles(p: int, q: int) -> Tuple[Tuple[Tuple[int, ...], Tuple[int, ...], int], ...]:
    """(p,q)-shuffles as (surjection onto [p], surjection onto [q], sign)."""
    out = []
    n = p + q
    for S in combinations(range(n), p):
        Sset = set(S)
        a = tuple(sum(1 for s in S if s < t) for t in range(n + 1))
        b = tuple(t - a[t] for t in range(n + 1))
        inv = sum(sum(1 for u in range(s) if u not in Sset) for s in S)
        out.append((a, b, -1 if inv % 2 else 1))
    return tuple(out)


def _factors(P: SimplicialSet) -> Tuple[SimplicialSet, SimplicialSet]:
    if P.factors is None:
        raise SimplicialError(f"{P.name} is not a product or smash")
    return P.factors


def ez_cells(P: SimplicialSet, x: str, y: str) -> Dict[str, int]:
    """EZ(x (x) y) for generators x of K and y of L, as {generator of P: sign}."""
    cache = P.__dict__.setdefault("_ez_cache", {})
    hit = cache.get((x, y))
    if hit is not None:
        return hit
    K, L = _factors(P)
    p, q = K.dim_of[x], L.dim_of[y]
    out: Dict[str, int] = {}
    for a, b, sgn in shuffles(p, q):
        w = P.pair(Word(x, a), Word(y, b))
        if w.is_degenerate or P.is_base(w):
            continue
        out[w.gen] = out.get(w.gen, 0) + sgn
    out = {g: c for g, c in out.items() if c}
    cache[(x, y)] = out
    return out


def ez(P: SimplicialSet, c: Chain, e: Chain) -> Chain:
    """Shuffle map C(K) (x) C(L) -> C(P), wedge-collapsed when P is a smash."""
    K, L = _factors(P)
    if c.space is not K or e.space is not L:
        raise SimplicialError(f"chains do not live on the factors of {P.name}")
    out: Dict[str, Fraction] = {}
    for x, a in c.coeffs.items():
        for y, b in e.coeffs.items():
            for g, s in ez_cells(P, x, y).items():
                out[g] = out.get(g, 0) + s * a * b
    return Chain(P, c.degree + e.degree, out)


# Elements of C(K) (x) C(L) are dicts {(x, y): coefficient}.
Tensor = Dict[Tuple[str, str], Fraction]


def aw_cell(P: SimplicialSet, g: str) -> Dict[Tuple[str, str], int]:
    """Alexander-Whitney image of a single generator of P."""
    K, L = _factors(P)
    if g == P.basepoint:
        return {}
    a, b = P.components[g]
    m = a.dim
    out: Dict[Tuple[str, str], int] = {}
    for i in range(m + 1):
        front = K.apply(a, tuple(range(i + 1)))
        back = L.apply(b, tuple(range(i, m + 1)))
        if front.is_degenerate or back.is_degenerate or K.is_base(front) or L.is_base(back):
            continue
        key = (front.gen, back.gen)
        out[key] = out.get(key, 0) + 1
    return out


def aw(P: SimplicialSet, c: Chain) -> Tensor:
    if c.space is not P:
        raise SimplicialError(f"chain does not live on {P.name}")
    out: Tensor = {}
    for g, a in c.coeffs.items():
        for key, s in aw_cell(P, g).items():
            out[key] = out.get(key, 0) + s * a
    return {k: v for k, v in out.items() if v}


def tensor(c: Chain, e: Chain) -> Tensor:
    return {(x, y): a * b for x, a in c.coeffs.items() for y, b in e.coeffs.items()}


def tensor_boundary(P: SimplicialSet, t: Tensor) -> Tensor:
    """d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy."""
    K, L = _factors(P)
    out: Tensor = {}
    for (x, y), a in t.items():
        p = K.dim_of[x]
        for x2, s in boundary(Chain(K, p, {x: 1})).coeffs.items():
            out[(x2, y)] = out.get((x2, y), 0) + s * a
        sgn = -1 if p % 2 else 1
        for y2, s in boundary(Chain(L, L.dim_of[y], {y: 1})).coeffs.items():
            out[(x, y2)] = out.get((x, y2), 0) + sgn * s * a
    return {k: v for k, v in out.items() if v}


def ez_tensor(P: SimplicialSet, t: Tensor) -> Dict[str, Fraction]:
    out: Dict[str, Fraction] = {}
    for (x, y), a in t.items():
        for g, s in ez_cells(P, x, y).items():
            out[g] = out.get(g, 0) + s * a
    return {g: v for g, v in out.items() if v}


def slant(u: Cochain, e: Chain) -> Cochain:
    """(u / e)(d) = u(EZ(d (x) e)), a cochain on the first factor."""
    P = u.space
    K, L = _factors(P)
    if e.space is not L:
        raise SimplicialError(f"chain does not live on the second factor of {P.name}")
    q, n, V = e.degree, u.degree, u.V
    out: Dict[Tuple[str, int], Fraction] = {}
    for j, dj in V.dims:
        i = n - q - j
        if i < 0 or i + q > P.dim:
            continue
        for x in K.cells(i):
            img: Dict[str, Fraction] = {}
            for y, b in e.coeffs.items():
                for g, s in ez_cells(P, x, y).items():
                    img[g] = img.get(g, 0) + s * b
            if not img:
                continue
            for k in range(dj):
                val = sum((c * u.entries.get((g, k), 0) for g, c in img.items()), Fraction(0))
                if val:
                    out[(x, k)] = val
    return Cochain(K, n - q, out, V)


def stokes_defect(u: Cochain, e: Chain) -> Cochain:
    """(delta u)/e - delta(u/e) + (-1)^(|u|+|e|) u/(boundary e); zero when Stokes holds."""
    lhs = slant(coboundary(u), e)
    rhs = coboundary(slant(u, e))
    if e.degree > 0:
        sgn = -1 if (u.degree + e.degree) % 2 else 1
        rhs = rhs - sgn * slant(u, boundary(e))
    return lhs - rhs


# -- canonical chains -----------------------------------------------------------


@dataclass(frozen=True)
class CanonicalChain:
    kind: str  # "fundamental_simplex" or "fundamental_circle"
    value: Chain


def top_simplex_name(i: int) -> str:
    return "v" + "".join(str(v) for v in range(i + 1))


def fundamental_simplex(D: SimplicialSet, i: int) -> CanonicalChain:
    """[Delta^i_+]: the identity i-simplex of D = Delta^i_+."""
    g = top_simplex_name(i)
    if D.dim_of.get(g) != i:
        raise SimplicialError(f"{D.name} has no top simplex {g}")
    return CanonicalChain("fundamental_simplex", Chain(D, i, {g: 1}))


def fundamental_circle(S1: SimplicialSet) -> CanonicalChain:
    """[S^1]: the single 1-generator of the circle."""
    if S1.cells(1) != ("sig",):
        raise SimplicialError(f"{S1.name} is not the one-cell circle")
    return CanonicalChain("fundamental_circle", Chain(S1, 1, {"sig": 1}))



# -- sampled audits -------------------------------------------------------------


def random_chain(K: SimplicialSet, p: int, rng, spread: int = 3) -> Chain:
    return Chain(K, p, {g: rng.randint(-spread, spread) for g in K.cells(p)})


def random_cochain(K: SimplicialSet, n: int, rng, spread: int = 3) -> Cochain:
    return Cochain(K, n, {(g, 0): rng.randint(-spread, spread) for g in K.cells(n)})


def _degrees(K: SimplicialSet):
    return [d for d in range(K.dim + 1) if K.cells(d)]


def ez_audit(P: SimplicialSet, *, samples: int = 20, seed: int = 0) -> dict:
    """Chain-map identity d EZ = EZ d and AW o EZ = id on random tensors.

    On a smash both sides are read modulo tensors touching a basepoint, which
    the reduced chains discard anyway.
    """
    import random

    rng = random.Random(seed)
    K, L = _factors(P)
    entries = []
    for s in range(samples):
        p, q = rng.choice(_degrees(K)), rng.choice(_degrees(L))
        c, e = random_chain(K, p, rng), random_chain(L, q, rng)
        t = tensor(c, e)
        lhs = boundary(ez(P, c, e)).coeffs
        rhs = ez_tensor(P, tensor_boundary(P, t))
        chain_map = {g: v for g, v in lhs.items() if v} == rhs
        back = aw(P, ez(P, c, e))
        t = {k: v for k, v in t.items() if v}
        retract = back == t
        e_ = {"sample": s, "degrees": [p, q], "chain_map": chain_map, "aw_ez_identity": retract}
        if not (chain_map and retract):
            e_["witness"] = {"c": {g: str(v) for g, v in sorted(c.coeffs.items())},
                             "e": {g: str(v) for g, v in sorted(e.coeffs.items())}}
        entries.append(e_)
    return {"check": "ez", "space": P.name, "samples": samples, "seed": seed, "results": entries,
            "passed": all(x["chain_map"] and x["aw_ez_identity"] for x in entries)}


def stokes_audit(P: SimplicialSet, *, samples: int = 20, seed: int = 0) -> dict:
    """(delta u)/e = delta(u/e) - (-1)^(|u|+|e|) u/(boundary e) on random (u, e)."""
    import random

    rng = random.Random(seed)
    K, L = _factors(P)
    degs = [d for d in range(P.dim + 1)]
    entries = []
    for s in range(samples):
        q = rng.choice(_degrees(L))
        n = rng.choice([d for d in degs if d >= q])
        u = random_cochain(P, n, rng)
        e = random_chain(L, q, rng)
        defect = stokes_defect(u, e)
        x = {"sample": s, "degrees": [n, q], "exact": defect.is_zero()}
        if not x["exact"]:
            x["witness"] = {"u": u.to_json(), "e": {g: str(v) for g, v in sorted(e.coeffs.items())},
                            "defect": defect.to_json()}
        entries.append(x)
    return {"check": "stokes", "space": P.name, "samples": samples, "seed": seed, "results": entries,
            "passed": all(x["exact"] for x in entries)}
