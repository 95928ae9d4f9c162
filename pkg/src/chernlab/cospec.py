"""The cocycle spectrum: simplices Z^n(K ^ Delta^k_+), loops and costructure maps.

A k-simplex of the level-n space is a total-degree-n cocycle on
``K ^ Delta^k_+``.  Faces and degeneracies are pullbacks along the coface and
codegeneracy maps of the simplex factor.  Loops are cocycles on
``(K ^ Delta^k_+) ^ S^1``; cutting the prism ``Delta^k x Delta^1`` into its
k+1 top simplices turns such a cocycle into a matching tuple of (k+1)-simplices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .chains import (
    Cochain,
    GradedSpace,
    Q,
    basis,
    class_rank,
    coboundary,
    cocycle_basis,
    cohomology,
    cohomology_class,
    CohomologyClass,
    pullback,
    solve_coboundary,
)
from .ezaw import fundamental_circle, fundamental_simplex, slant
from .simpset import (
    MAX_CAP,
    SimplicialError,
    SimplicialMap,
    SimplicialSet,
    Word,
    cached_simplex,
    cached_sphere,
    prism_maps,
    simplex_word,
    smash,
)


def full_smash(K: SimplicialSet, L: SimplicialSet) -> SimplicialSet:
    """K ^ L with every nondegenerate simplex, cached on K."""
    cache = K.__dict__.setdefault("_smash_cache", {})
    key = id(L)
    hit = cache.get(key)
    if hit is not None and hit[0] is L:
        return hit[1]
    top = K.dim + L.dim
    if top > MAX_CAP:
        raise SimplicialError(f"{K.name} ^ {L.name} has dimension {top} above the cap {MAX_CAP}")
    P = smash(K, L, cap=top)
    cache[key] = (L, P)
    return P


def with_simplex(K: SimplicialSet, k: int) -> SimplicialSet:
    return full_smash(K, cached_simplex(k, True))


def with_circle(P: SimplicialSet) -> SimplicialSet:
    return full_smash(P, cached_sphere(1))


def split(P: SimplicialSet, w: Word) -> Tuple[Word, Word]:
    """Components (a, b) of a simplex of a pair presentation."""
    K, L = P.factors
    if P.is_base(w):
        return K.base_word(w.dim), L.base_word(w.dim)
    a, b = P.components[w.gen]
    return K.apply(a, w.surj), L.apply(b, w.surj)


def map_by(source: SimplicialSet, target: SimplicialSet, fn: Callable[[Word], Word]) -> SimplicialMap:
    """Simplicial map determined by its values on generators."""
    return SimplicialMap(source, target, {g: fn(source.gen_word(g)) for g in source.dim_of})


def vertices(w: Word) -> List[int]:
    """Vertex sequence of a simplex of Delta^n_+ (not the basepoint)."""
    vs = [int(c) for c in w.gen[1:]]
    return [vs[s] for s in w.surj]


def simplex_factor_map(K: SimplicialSet, k_src: int, k_tgt: int, vmap: Sequence[int]) -> SimplicialMap:
    """id ^ phi_+ : K ^ Delta^{k_src}_+ -> K ^ Delta^{k_tgt}_+ for a monotone vertex map."""
    S, T = with_simplex(K, k_src), with_simplex(K, k_tgt)

    def fn(w: Word) -> Word:
        if S.is_base(w):
            return T.base_word(w.dim)
        a, b = split(S, w)
        return T.pair(a, simplex_word(k_tgt, [vmap[v] for v in vertices(b)]))

    return map_by(S, T, fn)


# -- spectrum simplices -------------------------------------------------------------


@dataclass
class SpectrumSpaceSimplex:
    base: SimplicialSet
    level: int
    k: int
    value: Cochain

    def __post_init__(self):
        if self.value.space is not with_simplex(self.base, self.k):
            raise SimplicialError("value does not live on K ^ Delta^k_+")
        if self.value.degree != self.level:
            raise SimplicialError("value degree differs from the level")
        if not coboundary(self.value).is_zero():
            raise SimplicialError("spectrum simplices must be cocycles")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SpectrumSpaceSimplex)
            and self.base is other.base
            and self.level == other.level
            and self.k == other.k
            and self.value == other.value
        )


def face(s: SpectrumSpaceSimplex, i: int) -> SpectrumSpaceSimplex:
    k = s.k
    if k == 0 or not 0 <= i <= k:
        raise SimplicialError(f"face d{i} out of range for a {k}-simplex")
    vmap = [v if v < i else v + 1 for v in range(k)]
    f = simplex_factor_map(s.base, k - 1, k, vmap)
    return SpectrumSpaceSimplex(s.base, s.level, k - 1, pullback(f, s.value))


def degeneracy(s: SpectrumSpaceSimplex, j: int) -> SpectrumSpaceSimplex:
    k = s.k
    if not 0 <= j <= k:
        raise SimplicialError(f"degeneracy s{j} out of range for a {k}-simplex")
    vmap = [v if v <= j else v - 1 for v in range(k + 2)]
    f = simplex_factor_map(s.base, k + 1, k, vmap)
    return SpectrumSpaceSimplex(s.base, s.level, k + 1, pullback(f, s.value))


def constant_simplex(u: Cochain, k: int) -> SpectrumSpaceSimplex:
    """The cocycle u on K pulled back along the projection K ^ Delta^k_+ -> K."""
    K = u.space
    P = with_simplex(K, k)

    def fn(w: Word) -> Word:
        a, _ = split(P, w)
        return a

    return SpectrumSpaceSimplex(K, u.degree, k, pullback(map_by(P, K, fn), u))


def zero_simplex(K: SimplicialSet, n: int, k: int, V: GradedSpace = Q) -> SpectrumSpaceSimplex:
    return SpectrumSpaceSimplex(K, n, k, Cochain(with_simplex(K, k), n, {}, V))


def random_cocycle(P: SimplicialSet, n: int, rng: random.Random, V: GradedSpace = Q,
                   spread: int = 3) -> Cochain:
    """Random integer combination of a cocycle basis."""
    out = Cochain(P, n, {}, V)
    for z in cocycle_basis(P, n, V):
        c = rng.randint(-spread, spread)
        if c:
            out = out + c * z
    return out


# -- loops ----------------------------------------------------------------------


def prism_map(K: SimplicialSet, k: int, i: int) -> SimplicialMap:
    """id ^ h_i : K ^ Delta^{k+1}_+ -> (K ^ Delta^k_+) ^ S^1 for the i-th prism simplex."""
    S = with_simplex(K, k + 1)
    P = with_simplex(K, k)
    T = with_circle(P)
    path = prism_maps(k)[i]

    def fn(w: Word) -> Word:
        if S.is_base(w):
            return T.base_word(w.dim)
        a, b = split(S, w)
        vs = vertices(b)
        xs = [path[v][0] for v in vs]
        ts = tuple(path[v][1] for v in vs)
        if len(set(ts)) == 1:
            return T.base_word(w.dim)
        return T.pair(P.pair(a, simplex_word(k, xs)), Word("sig", ts))

    return map_by(S, T, fn)


@dataclass
class LoopTuple:
    components: List[SpectrumSpaceSimplex]

    def check(self) -> List[str]:
        """Matching equations d_i f_i = d_i f_{i-1}, d_0 f_0 = 0, d_{k+1} f_k = 0."""
        fs = self.components
        k = len(fs) - 1
        problems = []
        if k < 0:
            return ["empty tuple"]
        if not face(fs[0], 0).value.is_zero():
            problems.append("d0 f0 != 0")
        if not face(fs[k], k + 1).value.is_zero():
            problems.append(f"d{k + 1} f{k} != 0")
        for i in range(1, k + 1):
            if face(fs[i], i) != face(fs[i - 1], i):
                problems.append(f"d{i} f{i} != d{i} f{i - 1}")
        return problems


def loop_iso(f: Cochain, K: SimplicialSet, k: int) -> LoopTuple:
    """Cut a cocycle on (K ^ Delta^k_+) ^ S^1 into its prism tuple."""
    T = with_circle(with_simplex(K, k))
    if f.space is not T:
        raise SimplicialError("cochain does not live on (K ^ Delta^k_+) ^ S^1")
    if not coboundary(f).is_zero():
        raise SimplicialError("loop_iso needs a cocycle")
    comps = [
        SpectrumSpaceSimplex(K, f.degree, k + 1, pullback(prism_map(K, k, i), f))
        for i in range(k + 1)
    ]
    return LoopTuple(comps)


def loop_iso_inverse(t: LoopTuple) -> Cochain:
    """Glue a matching tuple back into a cocycle on (K ^ Delta^k_+) ^ S^1."""
    problems = t.check()
    if problems:
        raise SimplicialError("tuple violates the matching equations: " + "; ".join(problems))
    f0 = t.components[0]
    K, n, V = f0.base, f0.level, f0.value.V
    k = len(t.components) - 1
    S = with_simplex(K, k + 1)
    T = with_circle(with_simplex(K, k))
    out: Dict[Tuple[str, int], Fraction] = {}
    for i, fi in enumerate(t.components):
        h = prism_map(K, k, i)
        for (z, idx), c in fi.value.entries.items():
            w = h.assign[z]
            if w.is_degenerate or T.is_base(w):
                raise SimplicialError(f"f{i} is nonzero on {z}, which the prism collapses")
        for z, d in S.dim_of.items():
            if z == S.basepoint:
                continue
            w = h.assign[z]
            if w.is_degenerate or T.is_base(w):
                continue
            for idx in range(V.dim(n - d)):
                c = fi.value.value(z, idx)
                key = (w.gen, idx)
                if key in out and out[key] != c:
                    raise SimplicialError(f"components disagree on {w.gen}")
                out[key] = c
    for key in basis(T, n, V):
        if key not in out:
            raise SimplicialError(f"cell {key[0]} not covered by the prism")
    return Cochain(T, n, out, V)


# -- costructure and the slant invariant ---------------------------------------------


def costructure(f: Cochain) -> Cochain:
    """psi(f) = f / [S^1], from level n on P ^ S^1 to level n-1 on P."""
    T = f.space
    if T.factors is None or T.factors[1].name != "S1":
        raise SimplicialError("costructure needs a cochain on X ^ S^1")
    if not coboundary(f).is_zero():
        raise SimplicialError("costructure needs a cocycle")
    return slant(f, fundamental_circle(T.factors[1]).value)


def costructure_simplex(f: Cochain, K: SimplicialSet, k: int) -> SpectrumSpaceSimplex:
    return SpectrumSpaceSimplex(K, f.degree - 1, k, costructure(f))


def homotopy_invariant(s: SpectrumSpaceSimplex) -> CohomologyClass:
    """Class of f / [Delta^i_+] in H^{n-i}(K; V) for a sphere f (all faces zero)."""
    if s.k:
        for j in range(s.k + 1):
            if not face(s, j).value.is_zero():
                raise SimplicialError(f"face d{j} of the sphere is not zero")
    P = s.value.space
    e = fundamental_simplex(P.factors[1], s.k).value
    return cohomology_class(slant(s.value, e))


def filler_certifies(f: SpectrumSpaceSimplex, g: SpectrumSpaceSimplex,
                     filler: SpectrumSpaceSimplex) -> bool:
    """True if d_0 F = f - g and d_j F = 0 for j >= 1, i.e. F is a homotopy f ~ g."""
    if filler.k != f.k + 1:
        return False
    if face(filler, 0).value != f.value - g.value:
        return False
    return all(face(filler, j).value.is_zero() for j in range(1, filler.k + 1))


def sphere_space(K: SimplicialSet, n: int, i: int, V: GradedSpace = Q) -> List[Cochain]:
    """Basis of the i-spheres {f : delta f = 0, every face zero} of level n."""
    from . import linalg

    P = with_simplex(K, i)
    keys = basis(P, n, V)
    pos = {k: t for t, k in enumerate(keys)}
    eqs = []
    # delta f = 0
    tkeys = basis(P, n + 1, V)
    tpos = {k: t for t, k in enumerate(tkeys)}
    rows: Dict[int, Dict[int, Fraction]] = {}
    for t, key in enumerate(keys):
        d = coboundary(Cochain(P, n, {key: 1}, V))
        for k2, c in d.entries.items():
            rows.setdefault(tpos[k2], {})[t] = c
    eqs.extend(rows.values())
    if i:
        for j in range(i + 1):
            vmap = [v if v < j else v + 1 for v in range(i)]
            fm = simplex_factor_map(K, i - 1, i, vmap)
            fkeys = basis(fm.source, n, V)
            fpos = {k: t for t, k in enumerate(fkeys)}
            rows = {}
            for t, key in enumerate(keys):
                d = pullback(fm, Cochain(P, n, {key: 1}, V))
                for k2, c in d.entries.items():
                    rows.setdefault(fpos[k2], {})[t] = c
            eqs.extend(rows.values())
    return [Cochain(P, n, {keys[t]: c for t, c in v.items()}, V)
            for v in linalg.kernel_of_rows(eqs, len(keys))]


def realized_invariant_rank(K: SimplicialSet, n: int, i: int, V: GradedSpace = Q) -> Tuple[int, int]:
    """(rank of classes realized by i-spheres of level n, rank of H^{n-i}(K; V))."""
    P = with_simplex(K, i)
    e = fundamental_simplex(P.factors[1], i).value
    images = [slant(f, e) for f in sphere_space(K, n, i, V)]
    return class_rank(K, n - i, images, V), cohomology(K, n - i, V).rank


# -- suspension audit -------------------------------------------------------------


def swap_map(K: SimplicialSet, k: int) -> SimplicialMap:
    """(K ^ S^1) ^ Delta^k_+ -> (K ^ Delta^k_+) ^ S^1."""
    KS = with_circle(K)
    R = with_simplex(KS, k)
    P = with_simplex(K, k)
    T = with_circle(P)

    def fn(w: Word) -> Word:
        if R.is_base(w):
            return T.base_word(w.dim)
        x, c = split(R, w)
        a, s = split(KS, x)
        return T.pair(P.pair(a, c), s)

    return map_by(R, T, fn)


def suspension_audit(K: SimplicialSet, n: int, k: int, *, samples: int = 5, seed: int = 0,
                     V: GradedSpace = Q, cocycles: Optional[Sequence[Cochain]] = None) -> dict:
    """Compare psi-then-slant with slant-then-suspension on sampled cocycles.

    For f on (K ^ Delta^k_+) ^ S^1 the two sides are
    ``(psi f) / [Delta^k]`` and ``(-1)^k ((tau^* f) / [Delta^k]) / [S^1]``.
    """
    rng = random.Random(seed)
    T = with_circle(with_simplex(K, k))
    tau = swap_map(K, k)
    R = tau.source
    ek = fundamental_simplex(cached_simplex(k, True), k).value
    es = fundamental_circle(cached_sphere(1)).value
    if cocycles is None:
        cocycles = [random_cocycle(T, n, rng, V) for _ in range(samples)]
    entries = []
    ok = True
    for idx, f in enumerate(cocycles):
        a = slant(costructure(f), ek)
        b = ((-1) ** k) * slant(slant(pullback(tau, f), fundamental_simplex(R.factors[1], k).value), es)
        diff = a - b
        g = solve_coboundary(diff)
        exact = diff.is_zero()
        passed = g is not None
        ok = ok and passed
        entries.append({"sample": idx, "exact": exact, "cohomologous": passed})
    return {
        "check": "suspension",
        "space": K.name,
        "level": n,
        "simplex_dim": k,
        "samples": len(entries),
        "results": entries,
        "passed": ok,
    }


# -- sampled audits ---------------------------------------------------------------


def loop_iso_audit(K: SimplicialSet, n: int, k: int, *, samples: int = 5, seed: int = 0,
                   V: GradedSpace = Q) -> dict:
    """Cut random cocycles into prism tuples and glue them back, both ways round."""
    rng = random.Random(seed)
    T = with_circle(with_simplex(K, k))
    entries = []
    for s in range(samples):
        f = random_cocycle(T, n, rng, V)
        row = {"sample": s}
        try:
            t = loop_iso(f, K, k)
            row["matching"] = not t.check()
            g = loop_iso_inverse(t)
            row["round_trip"] = g == f
            row["tuple_round_trip"] = all(a == b for a, b in zip(loop_iso(g, K, k).components, t.components))
        except SimplicialError as exc:
            row.update(matching=False, round_trip=False, tuple_round_trip=False, error=str(exc))
        if not (row["matching"] and row["round_trip"] and row["tuple_round_trip"]):
            row["witness"] = f.to_json()
        entries.append(row)
    return {"check": "loopiso", "space": K.name, "level": n, "simplex_dim": k, "samples": samples,
            "seed": seed, "results": entries,
            "passed": all(r["matching"] and r["round_trip"] and r["tuple_round_trip"] for r in entries)}


def invariant_rank_audit(K: SimplicialSet, n_max: int, i_max: int, V: GradedSpace = Q) -> dict:
    """Realized slant invariants of i-spheres versus ranks of H^{n-i}(K; V)."""
    rows = []
    for n in range(1, n_max + 1):
        for i in range(0, min(i_max, n) + 1):
            realized, expected = realized_invariant_rank(K, n, i, V)
            rows.append({"level": n, "sphere_dim": i, "realized": realized, "cohomology_rank": expected,
                         "status": "pass" if realized == expected else "fail"})
    return {"check": "invariants", "space": K.name, "rows": rows,
            "passed": all(r["status"] == "pass" for r in rows)}
