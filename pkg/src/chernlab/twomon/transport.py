"""Moving monoidal and 2-monoidal structure along isomorphisms and equivalences.

Equivalence witnesses are always supplied by the caller and verified, never
searched for.  All structure cells use the oplax direction F(A x B) -> FA x FB.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from .core import (
    CategoryError,
    FiniteCategory,
    Functor,
    MonoidalData,
    MonoidalFunctor,
    Mor,
    Obj,
    TwoMonoidalData,
    TwoMonoidalFunctor,
    _report,
)


@dataclass
class AdjointEquivalence:
    """F: C -> D, G: D -> C, eta_X: X -> GFX, eps_Y: FGY -> Y, all isomorphisms."""
    F: Functor
    G: Functor
    eta: Dict[Obj, Mor]
    eps: Dict[Obj, Mor]

    @property
    def C(self) -> FiniteCategory:
        return self.F.source

    @property
    def D(self) -> FiniteCategory:
        return self.F.target

    def check(self) -> dict:
        F, G, C, D = self.F, self.G, self.C, self.D
        fails = []
        for label, fn in (("F", F), ("G", G)):
            r = fn.check()
            fails += [dict(x, functor=label) for x in r["failures"]]
        if G.source is not D or G.target is not C:
            fails.append({"diagram": "G has the wrong endpoints"})
        if fails:
            return _report("adjoint equivalence", fails)
        for X in C.objects:
            m = self.eta.get(X)
            if m is None or C.morphisms.get(m) != (X, G.obj[F.obj[X]]) or not C.is_iso(m):
                fails.append({"diagram": "unit component", "objects": [X], "value": m})
        for Y in D.objects:
            m = self.eps.get(Y)
            if m is None or D.morphisms.get(m) != (F.obj[G.obj[Y]], Y) or not D.is_iso(m):
                fails.append({"diagram": "counit component", "objects": [Y], "value": m})
        if fails:
            return _report("adjoint equivalence", fails)
        for f, (s, t) in C.morphisms.items():
            if C.comp(self.eta[t], f) != C.comp(G.mor[F.mor[f]], self.eta[s]):
                fails.append({"diagram": "unit naturality", "morphisms": [f]})
        for g, (s, t) in D.morphisms.items():
            if D.comp(self.eps[t], F.mor[G.mor[g]]) != D.comp(g, self.eps[s]):
                fails.append({"diagram": "counit naturality", "morphisms": [g]})
        for X in C.objects:
            if D.comp(self.eps[F.obj[X]], F.mor[self.eta[X]]) != D.id(F.obj[X]):
                fails.append({"diagram": "zig-zag at F", "objects": [X]})
        for Y in D.objects:
            if C.comp(G.mor[self.eps[Y]], self.eta[G.obj[Y]]) != C.id(G.obj[Y]):
                fails.append({"diagram": "zig-zag at G", "objects": [Y]})
        return _report("adjoint equivalence", fails)

    def reversed(self) -> "AdjointEquivalence":
        """(G, F, eps^-1, eta^-1)."""
        return AdjointEquivalence(self.G, self.F, {Y: self.D.inv(m) for Y, m in self.eps.items()},
                                  {X: self.C.inv(m) for X, m in self.eta.items()})


def _require(report: dict, what: str) -> None:
    if not report["passed"]:
        first = report["failures"][0]
        raise CategoryError(f"{what}: {first.get('diagram')} fails at "
                            f"{first.get('objects', first.get('morphisms'))}")


def _invert_functor(F: Functor) -> Functor:
    _require(F.check(), "not a functor")
    C, D = F.source, F.target
    if len(set(F.obj.values())) != len(C.objects) or set(F.obj.values()) != set(D.objects):
        raise CategoryError("functor is not bijective on objects")
    if len(set(F.mor.values())) != len(C.morphisms) or set(F.mor.values()) != set(D.morphisms):
        raise CategoryError("functor is not bijective on morphisms")
    return Functor(D, C, {v: k for k, v in F.obj.items()}, {v: k for k, v in F.mor.items()})


def _transport_monoidal_iso(F: Functor, Fi: Functor, M: MonoidalData) -> MonoidalData:
    C = F.source
    o, m = F.obj, F.mor
    io, im = Fi.obj, Fi.mor
    objs = C.objects
    return MonoidalData(
        C,
        {(X, Y): io[M.t(o[X], o[Y])] for X in objs for Y in objs},
        {(f, g): im[M.tm(m[f], m[g])] for f in C.morphisms for g in C.morphisms},
        io[M.unit],
        {(X, Y, Z): im[M.a(o[X], o[Y], o[Z])] for X, Y, Z in itertools.product(objs, repeat=3)},
        {X: im[M.lam[o[X]]] for X in objs},
        {X: im[M.rho[o[X]]] for X in objs},
    )


def transport_iso(F: Functor, T: TwoMonoidalData) -> TwoMonoidalData:
    """Pull T on the target back along an isomorphism F, so that F is strict."""
    if F.target is not T.cat:
        raise CategoryError("functor does not land in the structured category")
    Fi = _invert_functor(F)
    o, im = F.obj, Fi.mor
    return TwoMonoidalData(
        _transport_monoidal_iso(F, Fi, T.box),
        _transport_monoidal_iso(F, Fi, T.minus),
        {q: im[T.zeta[tuple(o[x] for x in q)]] for q in itertools.product(F.source.objects, repeat=4)},
    )


def strict_structure(F: Functor, S: TwoMonoidalData, T: TwoMonoidalData) -> TwoMonoidalFunctor:
    """F with identity cells; valid exactly when F preserves both products on the nose."""
    D = T.cat
    objs = S.cat.objects
    box = {(A, B): D.id(F.obj[S.box.t(A, B)]) for A in objs for B in objs}
    minus = {(A, B): D.id(F.obj[S.minus.t(A, B)]) for A in objs for B in objs}
    return TwoMonoidalFunctor(F, S, T, box, minus)


def preimage(F: Functor, X: Obj, Y: Obj, target: Mor) -> Mor:
    """The unique f: X -> Y with F(f) = target (F fully faithful on this hom)."""
    hits = [f for f in F.source.hom(X, Y) if F.mor[f] == target]
    if len(hits) != 1:
        raise CategoryError(f"{len(hits)} preimages of {target!r} in hom({X!r}, {Y!r}); "
                            "functor is not fully faithful")
    return hits[0]


def _transport_monoidal_eq(A: AdjointEquivalence, M: MonoidalData) -> Tuple[MonoidalData, Dict]:
    F, G, C, D = A.F, A.G, A.C, A.D
    o, g = F.obj, G.mor
    eps, eta = A.eps, A.eta
    objs = C.objects
    t = lambda X, Y: G.obj[M.t(o[X], o[Y])]
    tensor_obj = {(X, Y): t(X, Y) for X in objs for Y in objs}
    tensor_mor = {(f, h): g[M.tm(F.mor[f], F.mor[h])] for f in C.morphisms for h in C.morphisms}
    unit = G.obj[M.unit]
    assoc = {}
    for X, Y, Z in itertools.product(objs, repeat=3):
        inner = D.comp(M.tm(D.id(o[X]), D.inv(eps[M.t(o[Y], o[Z])])),
                       M.a(o[X], o[Y], o[Z]),
                       M.tm(eps[M.t(o[X], o[Y])], D.id(o[Z])))
        assoc[(X, Y, Z)] = g[inner]
    lam = {X: C.comp(C.inv(eta[X]), g[D.comp(M.lam[o[X]], M.tm(eps[M.unit], D.id(o[X])))])
           for X in objs}
    rho = {X: C.comp(C.inv(eta[X]), g[D.comp(M.rho[o[X]], M.tm(D.id(o[X]), eps[M.unit]))])
           for X in objs}
    cells = {(X, Y): eps[M.t(o[X], o[Y])] for X in objs for Y in objs}
    return MonoidalData(C, tensor_obj, tensor_mor, unit, assoc, lam, rho), cells


def transport_equivalence(A: AdjointEquivalence, T: TwoMonoidalData) -> Tuple[TwoMonoidalData, TwoMonoidalFunctor]:
    """Set X x Y = G(FX x FY) for both products and solve for the interchange.

    F becomes 2-monoidal with cells eps_{FX x FY}.  The interchange on the
    source is the unique morphism whose image under F makes the interchange
    hexagon commute; uniqueness is F's hom-bijectivity.
    """
    _require(A.check(), "invalid adjoint equivalence")
    if A.D is not T.cat:
        raise CategoryError("equivalence does not land in the structured category")
    box, box_cells = _transport_monoidal_eq(A, T.box)
    minus, minus_cells = _transport_monoidal_eq(A, T.minus)
    F, D = A.F, A.D
    o = F.obj
    zeta = {}
    for q in itertools.product(A.C.objects, repeat=4):
        a, b, c, d = q
        want = D.comp(D.inv(minus_cells[(box.t(a, c), box.t(b, d))]),
                      D.inv(T.minus.tm(box_cells[(a, c)], box_cells[(b, d)])),
                      T.zeta[(o[a], o[b], o[c], o[d])],
                      T.box.tm(minus_cells[(a, b)], minus_cells[(c, d)]),
                      box_cells[(minus.t(a, b), minus.t(c, d))])
        zeta[q] = preimage(F, box.t(minus.t(a, b), minus.t(c, d)),
                           minus.t(box.t(a, c), box.t(b, d)), want)
    S = TwoMonoidalData(box, minus, zeta)
    return S, TwoMonoidalFunctor(F, S, T, box_cells, minus_cells)


def doctrinal(A: AdjointEquivalence, Fm: MonoidalFunctor) -> MonoidalFunctor:
    """The monoidal structure on G making (F, G, eta, eps) a monoidal adjoint
    equivalence:  G_{X,Y} = eta^-1_{GX x GY} o G(F_{GX,GY}^-1) o G(eps_X^-1 x eps_Y^-1)."""
    _require(A.check(), "invalid adjoint equivalence")
    if Fm.functor.obj != A.F.obj or Fm.functor.mor != A.F.mor:
        raise CategoryError("monoidal structure is for a different functor")
    S, T = Fm.source, Fm.target
    C, D, G = A.C, A.D, A.G
    cells = {}
    for X, Y in itertools.product(D.objects, repeat=2):
        gx, gy = G.obj[X], G.obj[Y]
        cells[(X, Y)] = C.comp(C.inv(A.eta[S.t(gx, gy)]),
                               G.mor[D.inv(Fm.cells[(gx, gy)])],
                               G.mor[T.tm(D.inv(A.eps[X]), D.inv(A.eps[Y]))])
    return MonoidalFunctor(G, T, S, cells)


def doctrinal_two(A: AdjointEquivalence, F: TwoMonoidalFunctor) -> TwoMonoidalFunctor:
    box = doctrinal(A, F.box())
    minus = doctrinal(A, F.minus())
    return TwoMonoidalFunctor(A.G, F.target, F.source, box.cells, minus.cells)


Witness = Dict[Obj, Tuple[Obj, Mor]]  # E -> (C, phi: E -> FC)


def default_witness(F: Functor) -> Witness:
    """phi = id wherever E = FC for some C (first C in object order)."""
    out: Witness = {}
    for C_obj in F.source.objects:
        E = F.obj[C_obj]
        out.setdefault(E, (C_obj, F.target.id(E)))
    return out


def lift_through_equivalence(F: TwoMonoidalFunctor, H: TwoMonoidalFunctor, G: Functor,
                             witness: Optional[Witness] = None) -> TwoMonoidalFunctor:
    """F: C -> D an equivalence, H = G o F both 2-monoidal: the unique
    2-monoidal structure on G: D -> E with G o F = H.

    On the image, G_{FC1,FC2} = H_{C1,C2} o G(F_{C1,C2})^-1; elsewhere it is
    conjugated through the chosen isomorphisms phi_i: E_i -> FC_i.
    """
    D, E = F.target.cat, H.target.cat
    if G.source is not D or G.target is not E:
        raise CategoryError("G has the wrong endpoints")
    _require(G.check(), "G is not a functor")
    for X in F.source.cat.objects:
        if G.obj[F.functor.obj[X]] != H.functor.obj[X]:
            raise CategoryError("G o F and H differ on objects")
    for f in F.source.cat.morphisms:
        if G.mor[F.functor.mor[f]] != H.functor.mor[f]:
            raise CategoryError("G o F and H differ on morphisms")
    witness = witness if witness is not None else default_witness(F.functor)
    for X in D.objects:
        if X not in witness:
            raise CategoryError(f"no equivalence witness for object {X!r}")
        c, phi = witness[X]
        if D.morphisms.get(phi) != (X, F.functor.obj[c]) or not D.is_iso(phi):
            raise CategoryError(f"witness for {X!r} is not an isomorphism onto the image")

    def lift(Ms, Mt, fcells, hcells):
        out = {}
        for X1, X2 in itertools.product(D.objects, repeat=2):
            c1, p1 = witness[X1]
            c2, p2 = witness[X2]
            on_image = E.comp(hcells[(c1, c2)], E.inv(G.mor[fcells[(c1, c2)]]))
            out[(X1, X2)] = E.comp(E.inv(Mt.tm(G.mor[p1], G.mor[p2])), on_image, G.mor[Ms.tm(p1, p2)])
        return out

    return TwoMonoidalFunctor(
        G, F.target, H.target,
        lift(F.target.box, H.target.box, F.box_cells, H.box_cells),
        lift(F.target.minus, H.target.minus, F.minus_cells, H.minus_cells),
    )


def lift_dual(G: TwoMonoidalFunctor, H: TwoMonoidalFunctor, F: Functor) -> TwoMonoidalFunctor:
    """G: D -> E an equivalence, H = G o F both 2-monoidal: the unique
    2-monoidal structure on F: C -> D, via G(F_{C1,C2}) = G_{FC1,FC2}^-1 o H_{C1,C2}."""
    C, D, E = H.source.cat, G.source.cat, G.target.cat
    if F.source is not C or F.target is not D:
        raise CategoryError("F has the wrong endpoints")
    _require(F.check(), "F is not a functor")
    for X in C.objects:
        if G.functor.obj[F.obj[X]] != H.functor.obj[X]:
            raise CategoryError("G o F and H differ on objects")
    for f in C.morphisms:
        if G.functor.mor[F.mor[f]] != H.functor.mor[f]:
            raise CategoryError("G o F and H differ on morphisms")

    def lift(Ms, Md, gcells, hcells):
        out = {}
        for c1, c2 in itertools.product(C.objects, repeat=2):
            f1, f2 = F.obj[c1], F.obj[c2]
            want = E.comp(E.inv(gcells[(f1, f2)]), hcells[(c1, c2)])
            out[(c1, c2)] = preimage(G.functor, F.obj[Ms.t(c1, c2)], Md.t(f1, f2), want)
        return out

    return TwoMonoidalFunctor(
        F, H.source, G.source,
        lift(H.source.box, G.source.box, G.box_cells, H.box_cells),
        lift(H.source.minus, G.source.minus, G.minus_cells, H.minus_cells),
    )


def same_cells(A: TwoMonoidalFunctor, B: TwoMonoidalFunctor) -> bool:
    return A.box_cells == B.box_cells and A.minus_cells == B.minus_cells
