"""Finite categories with monoidal and 2-monoidal structure, and their checkers.

Everything is a lookup table.  Objects and morphism ids are arbitrary hashable
values (tuples are common).  Composition is written right to left:
``cat.comp(g, f)`` is g after f.

Conventions
-----------
* associator  a_{A,B,C}: (A x B) x C -> A x (B x C)
* unitors     lam_A: I x A -> A,  rho_A: A x I -> A
* interchange zeta_{A,B,C,D}: (A [-] B) [+] (C [-] D) -> (A [+] C) [-] (B [+] D)
  where [+] is the "box" product and [-] the "minus" product
* monoidal functor cells run the oplax way, F(A x B) -> FA x FB; since they
  are required to be isomorphisms this is only a choice of direction.

Reports are dicts ``{"check", "failures": [...], "passed"}``.  Each failure
names the diagram, the object (or morphism) tuple and both composites.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Dict, Hashable, Iterable, List, Optional, Tuple


class CategoryError(ValueError):
    """Malformed presentation or invalid input to a construction."""


Obj = Hashable
Mor = Hashable


def _report(check: str, failures: List[dict], **extra) -> dict:
    return {"check": check, "failures": failures, "passed": not failures, **extra}


class FiniteCategory:
    def __init__(self, objects: Iterable[Obj], morphisms: Dict[Mor, Tuple[Obj, Obj]],
                 compose: Dict[Tuple[Mor, Mor], Mor], identities: Dict[Obj, Mor],
                 name: str = "C"):
        self.objects = list(objects)
        self.morphisms = dict(morphisms)
        self.compose = dict(compose)
        self.identities = dict(identities)
        self.name = name
        self._hom: Dict[Tuple[Obj, Obj], List[Mor]] = {}
        for m, (s, t) in self.morphisms.items():
            self._hom.setdefault((s, t), []).append(m)
        self._inv: Dict[Mor, Optional[Mor]] = {}

    def src(self, m: Mor) -> Obj:
        return self.morphisms[m][0]

    def tgt(self, m: Mor) -> Obj:
        return self.morphisms[m][1]

    def id(self, A: Obj) -> Mor:
        return self.identities[A]

    def hom(self, A: Obj, B: Obj) -> List[Mor]:
        return self._hom.get((A, B), [])

    def comp(self, *ms: Mor) -> Mor:
        """comp(h, g, f) = h o g o f."""
        if not ms:
            raise CategoryError("empty composite")
        out = ms[-1]
        for g in reversed(ms[:-1]):
            key = (g, out)
            if key not in self.compose:
                raise CategoryError(f"cannot compose {g!r} after {out!r}")
            out = self.compose[key]
        return out

    def inverse(self, f: Mor) -> Optional[Mor]:
        if f not in self._inv:
            s, t = self.morphisms[f]
            found = None
            for g in self.hom(t, s):
                if self.compose.get((g, f)) == self.id(s) and self.compose.get((f, g)) == self.id(t):
                    found = g
                    break
            self._inv[f] = found
        return self._inv[f]

    def inv(self, f: Mor) -> Mor:
        g = self.inverse(f)
        if g is None:
            raise CategoryError(f"{f!r} is not invertible")
        return g

    def is_iso(self, f: Mor) -> bool:
        return self.inverse(f) is not None

    def check(self) -> dict:
        fails: List[dict] = []
        objs = set(self.objects)
        for m, (s, t) in self.morphisms.items():
            if s not in objs or t not in objs:
                fails.append({"diagram": "endpoints", "morphism": m})
        for A in self.objects:
            i = self.identities.get(A)
            if i is None or self.morphisms.get(i) != (A, A):
                fails.append({"diagram": "identity", "objects": [A]})
        if fails:
            return _report("category", fails)
        for f, (s, t) in self.morphisms.items():
            for g in self.hom(t, t) + [x for B in self.objects if B != t for x in self.hom(t, B)]:
                h = self.compose.get((g, f))
                if h is None or self.morphisms.get(h) != (s, self.tgt(g)):
                    fails.append({"diagram": "composition", "morphisms": [g, f], "value": h})
            if self.compose.get((self.id(t), f)) != f or self.compose.get((f, self.id(s))) != f:
                fails.append({"diagram": "identity law", "morphisms": [f]})
        if fails:
            return _report("category", fails)
        for f, (s, t) in self.morphisms.items():
            for g in self._out(t):
                for h in self._out(self.tgt(g)):
                    lhs = self.compose[(h, self.compose[(g, f)])]
                    rhs = self.compose[(self.compose[(h, g)], f)]
                    if lhs != rhs:
                        fails.append({"diagram": "associativity", "morphisms": [h, g, f],
                                      "lhs": lhs, "rhs": rhs})
        return _report("category", fails)

    def _out(self, A: Obj) -> List[Mor]:
        return [m for B in self.objects for m in self.hom(A, B)]

    def composable_pairs(self):
        for f in self.morphisms:
            for g in self._out(self.tgt(f)):
                yield g, f


@dataclass
class MonoidalData:
    cat: FiniteCategory
    tensor_obj: Dict[Tuple[Obj, Obj], Obj]
    tensor_mor: Dict[Tuple[Mor, Mor], Mor]
    unit: Obj
    assoc: Dict[Tuple[Obj, Obj, Obj], Mor]
    lam: Dict[Obj, Mor]
    rho: Dict[Obj, Mor]

    def t(self, A: Obj, B: Obj) -> Obj:
        return self.tensor_obj[(A, B)]

    def tm(self, f: Mor, g: Mor) -> Mor:
        return self.tensor_mor[(f, g)]

    def a(self, A: Obj, B: Obj, C: Obj) -> Mor:
        return self.assoc[(A, B, C)]


@dataclass
class TwoMonoidalData:
    box: MonoidalData
    minus: MonoidalData
    zeta: Dict[Tuple[Obj, Obj, Obj, Obj], Mor]

    @property
    def cat(self) -> FiniteCategory:
        return self.box.cat


@dataclass
class Functor:
    source: FiniteCategory
    target: FiniteCategory
    obj: Dict[Obj, Obj]
    mor: Dict[Mor, Mor]

    def __call__(self, m: Mor) -> Mor:
        return self.mor[m]

    def check(self) -> dict:
        C, D = self.source, self.target
        fails = []
        for A in C.objects:
            if A not in self.obj or self.mor.get(C.id(A)) != D.id(self.obj.get(A)):
                fails.append({"diagram": "preserves identity", "objects": [A]})
        for f, (s, t) in C.morphisms.items():
            if f not in self.mor or D.morphisms.get(self.mor[f]) != (self.obj.get(s), self.obj.get(t)):
                fails.append({"diagram": "endpoints", "morphism": f})
        if fails:
            return _report("functor", fails)
        for g, f in C.composable_pairs():
            lhs = self.mor[C.comp(g, f)]
            rhs = D.comp(self.mor[g], self.mor[f])
            if lhs != rhs:
                fails.append({"diagram": "preserves composition", "morphisms": [g, f],
                              "lhs": lhs, "rhs": rhs})
        return _report("functor", fails)


def identity_functor(C: FiniteCategory) -> Functor:
    return Functor(C, C, {A: A for A in C.objects}, {m: m for m in C.morphisms})


def compose_functors(G: Functor, F: Functor) -> Functor:
    """G o F."""
    return Functor(F.source, G.target, {A: G.obj[F.obj[A]] for A in F.source.objects},
                   {m: G.mor[F.mor[m]] for m in F.source.morphisms})


@dataclass
class MonoidalFunctor:
    """A functor with oplax cells phi_{A,B}: F(A x B) -> FA x FB (isomorphisms)."""
    functor: Functor
    source: MonoidalData
    target: MonoidalData
    cells: Dict[Tuple[Obj, Obj], Mor]


@dataclass
class TwoMonoidalFunctor:
    functor: Functor
    source: TwoMonoidalData
    target: TwoMonoidalData
    box_cells: Dict[Tuple[Obj, Obj], Mor]
    minus_cells: Dict[Tuple[Obj, Obj], Mor]

    def box(self) -> MonoidalFunctor:
        return MonoidalFunctor(self.functor, self.source.box, self.target.box, self.box_cells)

    def minus(self) -> MonoidalFunctor:
        return MonoidalFunctor(self.functor, self.source.minus, self.target.minus, self.minus_cells)


def identity_two_monoidal_functor(T: TwoMonoidalData) -> TwoMonoidalFunctor:
    C = T.cat
    F = identity_functor(C)
    box = {(A, B): C.id(T.box.t(A, B)) for A in C.objects for B in C.objects}
    minus = {(A, B): C.id(T.minus.t(A, B)) for A in C.objects for B in C.objects}
    return TwoMonoidalFunctor(F, T, T, box, minus)


def compose_two_monoidal(G: TwoMonoidalFunctor, F: TwoMonoidalFunctor) -> TwoMonoidalFunctor:
    """(G o F) with cells G_{FA,FB} o G(F_{A,B})."""
    GF = compose_functors(G.functor, F.functor)
    E = G.target.cat
    C = F.source.cat

    def cells(gc, fc):
        return {(A, B): E.comp(gc[(F.functor.obj[A], F.functor.obj[B])], G.functor.mor[fc[(A, B)]])
                for A in C.objects for B in C.objects}

    return TwoMonoidalFunctor(GF, F.source, G.target, cells(G.box_cells, F.box_cells),
                              cells(G.minus_cells, F.minus_cells))


# -- checkers --------------------------------------------------------------------------------


def _tensor_functoriality(M: MonoidalData, label: str) -> List[dict]:
    C = M.cat
    fails = []
    for A in C.objects:
        for B in C.objects:
            if (A, B) not in M.tensor_obj or M.t(A, B) not in C.identities:
                fails.append({"diagram": f"{label} on objects", "objects": [A, B]})
    if fails:
        return fails
    for f, (s, t) in C.morphisms.items():
        for g, (s2, t2) in C.morphisms.items():
            fg = M.tensor_mor.get((f, g))
            if fg is None or C.morphisms.get(fg) != (M.t(s, s2), M.t(t, t2)):
                fails.append({"diagram": f"{label} on morphisms", "morphisms": [f, g], "value": fg})
    if fails:
        return fails
    for A in C.objects:
        for B in C.objects:
            if M.tm(C.id(A), C.id(B)) != C.id(M.t(A, B)):
                fails.append({"diagram": f"{label} preserves identities", "objects": [A, B]})
    pairs = list(C.composable_pairs())
    for g, f in pairs:
        for g2, f2 in pairs:
            lhs = M.tm(C.comp(g, f), C.comp(g2, f2))
            rhs = C.comp(M.tm(g, g2), M.tm(f, f2))
            if lhs != rhs:
                fails.append({"diagram": f"{label} interchange law", "morphisms": [g, f, g2, f2],
                              "lhs": lhs, "rhs": rhs})
                return fails
    return fails


def _component_shapes(M: MonoidalData) -> List[dict]:
    C = M.cat
    I = M.unit
    fails = []
    for A, B, D in itertools.product(C.objects, repeat=3):
        m = M.assoc.get((A, B, D))
        want = (M.t(M.t(A, B), D), M.t(A, M.t(B, D)))
        if m is None or C.morphisms.get(m) != want or not C.is_iso(m):
            fails.append({"diagram": "associator component", "objects": [A, B, D], "value": m})
    for A in C.objects:
        for tag, table, want in (("left unitor", M.lam, (M.t(I, A), A)),
                                 ("right unitor", M.rho, (M.t(A, I), A))):
            m = table.get(A)
            if m is None or C.morphisms.get(m) != want or not C.is_iso(m):
                fails.append({"diagram": f"{tag} component", "objects": [A], "value": m})
    return fails


def check_monoidal(M: MonoidalData, label: str = "tensor") -> dict:
    """Pentagon, triangle, naturality of a, lam, rho, and functoriality of the tensor."""
    C = M.cat
    base = C.check()
    if not base["passed"]:
        return _report("monoidal", base["failures"])
    if M.unit not in C.identities:
        return _report("monoidal", [{"diagram": "unit object", "objects": [M.unit]}])
    fails = _tensor_functoriality(M, label)
    if fails:
        return _report("monoidal", fails)
    fails = _component_shapes(M)
    if fails:
        return _report("monoidal", fails)
    t, tm, a, comp, idm = M.t, M.tm, M.a, C.comp, C.id
    I = M.unit
    for A, B, D, E in itertools.product(C.objects, repeat=4):
        lhs = comp(a(A, B, t(D, E)), a(t(A, B), D, E))
        rhs = comp(tm(idm(A), a(B, D, E)), a(A, t(B, D), E), tm(a(A, B, D), idm(E)))
        if lhs != rhs:
            fails.append({"diagram": "pentagon", "objects": [A, B, D, E], "lhs": lhs, "rhs": rhs})
    for A, B in itertools.product(C.objects, repeat=2):
        lhs = comp(tm(idm(A), M.lam[B]), a(A, I, B))
        rhs = tm(M.rho[A], idm(B))
        if lhs != rhs:
            fails.append({"diagram": "triangle", "objects": [A, B], "lhs": lhs, "rhs": rhs})
    mors = list(C.morphisms)
    for f, g, h in itertools.product(mors, repeat=3):
        lhs = comp(a(C.tgt(f), C.tgt(g), C.tgt(h)), tm(tm(f, g), h))
        rhs = comp(tm(f, tm(g, h)), a(C.src(f), C.src(g), C.src(h)))
        if lhs != rhs:
            fails.append({"diagram": "associator naturality", "morphisms": [f, g, h],
                          "lhs": lhs, "rhs": rhs})
    for f in mors:
        s, e = C.src(f), C.tgt(f)
        if comp(M.lam[e], tm(idm(I), f)) != comp(f, M.lam[s]):
            fails.append({"diagram": "left unitor naturality", "morphisms": [f]})
        if comp(M.rho[e], tm(f, idm(I))) != comp(f, M.rho[s]):
            fails.append({"diagram": "right unitor naturality", "morphisms": [f]})
    return _report("monoidal", fails)


def _lax_axioms(C: FiniteCategory, tgt: MonoidalData, pairs: List[Tuple[Any, Any]],
                F_obj: Callable, F_mor_assoc: Callable, F_mor_lam: Callable, F_mor_rho: Callable,
                src_t: Callable, src_unit, psi: Callable, label: str) -> List[dict]:
    """Oplax monoidal functor axioms for psi_{X,Y}: F(X x Y) -> FX x' FY.

    associativity:  a' o (psi_{X,Y} x' 1) o psi_{X x Y, Z} = (1 x' psi_{Y,Z}) o psi_{X, Y x Z} o F(a)
    units:          lam'_{FX} o psi_{I,X} = F(lam_X),  rho'_{FX} o psi_{X,I} = F(rho_X)
    """
    fails = []
    comp, idm = C.comp, C.id
    for X, Y, Z in itertools.product(pairs, repeat=3):
        try:
            lhs = comp(tgt.a(F_obj(X), F_obj(Y), F_obj(Z)),
                       tgt.tm(psi(X, Y), idm(F_obj(Z))),
                       psi(src_t(X, Y), Z))
            rhs = comp(tgt.tm(idm(F_obj(X)), psi(Y, Z)),
                       psi(X, src_t(Y, Z)),
                       F_mor_assoc(X, Y, Z))
        except (CategoryError, KeyError) as exc:
            fails.append({"diagram": f"{label} associativity", "objects": [X, Y, Z], "error": str(exc)})
            continue
        if lhs != rhs:
            fails.append({"diagram": f"{label} associativity", "objects": [X, Y, Z],
                          "lhs": lhs, "rhs": rhs})
    for X in pairs:
        try:
            lhs = comp(tgt.lam[F_obj(X)], psi(src_unit, X))
            rhs = F_mor_lam(X)
            ok = lhs == rhs
        except (CategoryError, KeyError) as exc:
            ok, lhs, rhs = False, str(exc), None
        if not ok:
            fails.append({"diagram": f"{label} left unit", "objects": [X], "lhs": lhs, "rhs": rhs})
        try:
            lhs = comp(tgt.rho[F_obj(X)], psi(X, src_unit))
            rhs = F_mor_rho(X)
            ok = lhs == rhs
        except (CategoryError, KeyError) as exc:
            ok, lhs, rhs = False, str(exc), None
        if not ok:
            fails.append({"diagram": f"{label} right unit", "objects": [X], "lhs": lhs, "rhs": rhs})
    return fails


def check_monoidal_functor(F: MonoidalFunctor, label: str = "functor") -> dict:
    """Oplax axioms, naturality of the cells, strict unit F(I) = I."""
    S, T, Fn = F.source, F.target, F.functor
    D = T.cat
    base = Fn.check()
    if not base["passed"]:
        return _report("monoidal functor", base["failures"])
    fails = []
    if Fn.obj[S.unit] != T.unit:
        fails.append({"diagram": f"{label} strict unit", "objects": [S.unit], "value": Fn.obj[S.unit]})
        return _report("monoidal functor", fails)
    objs = S.cat.objects
    for A, B in itertools.product(objs, repeat=2):
        m = F.cells.get((A, B))
        want = (Fn.obj[S.t(A, B)], T.t(Fn.obj[A], Fn.obj[B]))
        if m is None or D.morphisms.get(m) != want or not D.is_iso(m):
            fails.append({"diagram": f"{label} cell shape", "objects": [A, B], "value": m})
    if fails:
        return _report("monoidal functor", fails)
    fails += _lax_axioms(
        D, T, objs, lambda X: Fn.obj[X],
        lambda X, Y, Z: Fn.mor[S.a(X, Y, Z)],
        lambda X: Fn.mor[S.lam[X]], lambda X: Fn.mor[S.rho[X]],
        S.t, S.unit, lambda X, Y: F.cells[(X, Y)], label)
    for f, g in itertools.product(S.cat.morphisms, repeat=2):
        A, B = S.cat.src(f), S.cat.src(g)
        A2, B2 = S.cat.tgt(f), S.cat.tgt(g)
        lhs = D.comp(F.cells[(A2, B2)], Fn.mor[S.tm(f, g)])
        rhs = D.comp(T.tm(Fn.mor[f], Fn.mor[g]), F.cells[(A, B)])
        if lhs != rhs:
            fails.append({"diagram": f"{label} cell naturality", "morphisms": [f, g],
                          "lhs": lhs, "rhs": rhs})
    return _report("monoidal functor", fails)


def check_two_monoidal(T: TwoMonoidalData) -> dict:
    """Both products, the shared strict unit, zeta naturality, and the two
    monoidal-functor structures on the products carried by zeta."""
    box, minus = T.box, T.minus
    C = T.cat
    for label, M in (("box", box), ("minus", minus)):
        r = check_monoidal(M, label)
        if not r["passed"]:
            for f in r["failures"]:
                f["structure"] = label
            return _report("two-monoidal", r["failures"])
    fails = []
    I = box.unit
    if minus.unit != I or box.t(I, I) != I or minus.t(I, I) != I:
        fails.append({"diagram": "shared strict unit", "objects": [box.unit, minus.unit]})
        return _report("two-monoidal", fails)
    objs = C.objects
    for q in itertools.product(objs, repeat=4):
        A, B, Cc, D = q
        z = T.zeta.get(q)
        want = (box.t(minus.t(A, B), minus.t(Cc, D)), minus.t(box.t(A, Cc), box.t(B, D)))
        if z is None or C.morphisms.get(z) != want or not C.is_iso(z):
            fails.append({"diagram": "interchange component", "objects": list(q), "value": z})
    if fails:
        return _report("two-monoidal", fails)
    z = lambda A, B, Cc, D: T.zeta[(A, B, Cc, D)]
    for f, g, h, k in itertools.product(C.morphisms, repeat=4):
        src = [C.src(m) for m in (f, g, h, k)]
        tgt = [C.tgt(m) for m in (f, g, h, k)]
        lhs = C.comp(z(*tgt), box.tm(minus.tm(f, g), minus.tm(h, k)))
        rhs = C.comp(minus.tm(box.tm(f, h), box.tm(g, k)), z(*src))
        if lhs != rhs:
            fails.append({"diagram": "interchange naturality", "morphisms": [f, g, h, k],
                          "lhs": lhs, "rhs": rhs})
            break
    pairs = list(itertools.product(objs, repeat=2))
    # minus: (C x C, box x box) -> (C, box), structure zeta read as a lax cell;
    # box:   (C x C, minus x minus) -> (C, minus), structure zeta read as an oplax cell.
    fails += _minus_lax(T, pairs)
    fails += _lax_axioms(
        C, minus, pairs, lambda X: box.t(*X),
        lambda X, Y, Z: box.tm(minus.a(X[0], Y[0], Z[0]), minus.a(X[1], Y[1], Z[1])),
        lambda X: box.tm(minus.lam[X[0]], minus.lam[X[1]]),
        lambda X: box.tm(minus.rho[X[0]], minus.rho[X[1]]),
        lambda X, Y: (minus.t(X[0], Y[0]), minus.t(X[1], Y[1])), (I, I),
        lambda X, Y: z(X[0], Y[0], X[1], Y[1]), "box as monoidal functor")
    return _report("two-monoidal", fails)


def _minus_lax(T: TwoMonoidalData, pairs) -> List[dict]:
    """Lax axioms for minus with mu_{(A,B),(C,D)} = zeta_{A,B,C,D}.

    associativity: F(a) o mu_{XY,Z} o (mu_{X,Y} [+] 1) = mu_{X,YZ} o (1 [+] mu_{Y,Z}) o a
    units:         F(lam) o mu_{I,X} = lam_{FX},   F(rho) o mu_{X,I} = rho_{FX}
    """
    box, minus, C = T.box, T.minus, T.cat
    I = box.unit
    z = lambda A, B, Cc, D: T.zeta[(A, B, Cc, D)]
    comp, idm = C.comp, C.id
    fails = []
    label = "minus as monoidal functor"
    for (A, B), (Cc, D), (E, G) in itertools.product(pairs, repeat=3):
        lhs = comp(minus.tm(box.a(A, Cc, E), box.a(B, D, G)),
                   z(box.t(A, Cc), box.t(B, D), E, G),
                   box.tm(z(A, B, Cc, D), idm(minus.t(E, G))))
        rhs = comp(z(A, B, box.t(Cc, E), box.t(D, G)),
                   box.tm(idm(minus.t(A, B)), z(Cc, D, E, G)),
                   box.a(minus.t(A, B), minus.t(Cc, D), minus.t(E, G)))
        if lhs != rhs:
            fails.append({"diagram": f"{label} associativity", "objects": [[A, B], [Cc, D], [E, G]],
                          "lhs": lhs, "rhs": rhs})
    for A, B in pairs:
        lhs = comp(minus.tm(box.lam[A], box.lam[B]), z(I, I, A, B))
        if lhs != box.lam[minus.t(A, B)]:
            fails.append({"diagram": f"{label} left unit", "objects": [[A, B]],
                          "lhs": lhs, "rhs": box.lam[minus.t(A, B)]})
        lhs = comp(minus.tm(box.rho[A], box.rho[B]), z(A, B, I, I))
        if lhs != box.rho[minus.t(A, B)]:
            fails.append({"diagram": f"{label} right unit", "objects": [[A, B]],
                          "lhs": lhs, "rhs": box.rho[minus.t(A, B)]})
    return fails


def check_two_monoidal_functor(F: TwoMonoidalFunctor) -> dict:
    """Both monoidal functor structures, strict units and the interchange hexagon:

    (F^box_{A,C} [-] F^box_{B,D}) o F^minus_{A[+]C, B[+]D} o F(zeta)
        = zeta' o (F^minus_{A,B} [+] F^minus_{C,D}) o F^box_{A[-]B, C[-]D}
    """
    fails = []
    for label, part in (("box", F.box()), ("minus", F.minus())):
        r = check_monoidal_functor(part, label)
        fails += r["failures"]
    if fails:
        return _report("two-monoidal functor", fails)
    S, T, Fn = F.source, F.target, F.functor
    D = T.cat
    o = Fn.obj
    for q in itertools.product(S.cat.objects, repeat=4):
        A, B, Cc, Dd = q
        lhs = D.comp(T.minus.tm(F.box_cells[(A, Cc)], F.box_cells[(B, Dd)]),
                     F.minus_cells[(S.box.t(A, Cc), S.box.t(B, Dd))],
                     Fn.mor[S.zeta[q]])
        rhs = D.comp(T.zeta[(o[A], o[B], o[Cc], o[Dd])],
                     T.box.tm(F.minus_cells[(A, B)], F.minus_cells[(Cc, Dd)]),
                     F.box_cells[(S.minus.t(A, B), S.minus.t(Cc, Dd))])
        if lhs != rhs:
            fails.append({"diagram": "interchange hexagon", "objects": list(q), "lhs": lhs, "rhs": rhs})
    return _report("two-monoidal functor", fails)


# -- braiding ----------------------------------------------------------------------------------


def braiding(T: TwoMonoidalData) -> dict:
    """Extract the braid on (C, box) from the interchange.

    e_{A,B}  = (rho^box_A [-] lam^box_B) o zeta_{A,I,I,B} o (rho^minus_A [+] lam^minus_B)^-1
               : A [+] B -> A [-] B
    e'_{A,B} = (lam^box_B [-] rho^box_A) o zeta_{I,A,B,I} o (lam^minus_A [+] rho^minus_B)^-1
               : A [+] B -> B [-] A
    c_{A,B}  = e_{B,A}^-1 o e'_{A,B} : A [+] B -> B [+] A

    Returns the tables plus a report covering naturality of c, both hexagons,
    and the oplax monoidal functor axioms for e: (C, box) -> (C, minus).
    """
    box, minus, C = T.box, T.minus, T.cat
    I = box.unit
    comp, inv = C.comp, C.inv
    objs = C.objects
    e, e2, c = {}, {}, {}
    for A, B in itertools.product(objs, repeat=2):
        e[(A, B)] = comp(minus.tm(box.rho[A], box.lam[B]), T.zeta[(A, I, I, B)],
                         inv(box.tm(minus.rho[A], minus.lam[B])))
        e2[(A, B)] = comp(minus.tm(box.lam[B], box.rho[A]), T.zeta[(I, A, B, I)],
                          inv(box.tm(minus.lam[A], minus.rho[B])))
    for A, B in itertools.product(objs, repeat=2):
        c[(A, B)] = comp(inv(e[(B, A)]), e2[(A, B)])
    fails = []
    for f, g in itertools.product(C.morphisms, repeat=2):
        lhs = comp(c[(C.tgt(f), C.tgt(g))], box.tm(f, g))
        rhs = comp(box.tm(g, f), c[(C.src(f), C.src(g))])
        if lhs != rhs:
            fails.append({"diagram": "braid naturality", "morphisms": [f, g], "lhs": lhs, "rhs": rhs})
    t, tm, a, idm = box.t, box.tm, box.a, C.id
    for A, B, D in itertools.product(objs, repeat=3):
        lhs = comp(a(B, D, A), c[(A, t(B, D))], a(A, B, D))
        rhs = comp(tm(idm(B), c[(A, D)]), a(B, A, D), tm(c[(A, B)], idm(D)))
        if lhs != rhs:
            fails.append({"diagram": "hexagon", "objects": [A, B, D], "lhs": lhs, "rhs": rhs})
        lhs = comp(inv(a(D, A, B)), c[(t(A, B), D)], inv(a(A, B, D)))
        rhs = comp(tm(c[(A, D)], idm(B)), inv(a(A, D, B)), tm(idm(A), c[(B, D)]))
        if lhs != rhs:
            fails.append({"diagram": "inverse hexagon", "objects": [A, B, D], "lhs": lhs, "rhs": rhs})
    fails += _lax_axioms(
        C, minus, objs, lambda X: X, lambda X, Y, Z: box.a(X, Y, Z),
        lambda X: box.lam[X], lambda X: box.rho[X], box.t, I,
        lambda X, Y: e[(X, Y)], "e as monoidal functor")
    identity = all(c[k] == idm(t(*k)) for k in c)
    symmetric = all(comp(c[(B, A)], c[(A, B)]) == idm(t(A, B)) for A, B in c)
    return {"e": e, "e_prime": e2, "braid": c,
            "report": _report("braiding", fails, identity=identity, symmetric=symmetric)}
