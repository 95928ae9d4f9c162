"""Small categories used as test fixtures and CLI builtins.

``abelian_two_group(n, k)`` has objects Z/n and, on every object, the
automorphism group Z/k; morphisms are pairs (x, e).  Both products add
objects and labels.  Associators and interchange components are given by
label-valued functions, so a 3-cochain or a 4-ary function on Z/n sets them.
"""

from __future__ import annotations

import itertools
from typing import Callable, Dict, Optional

from .core import (
    CategoryError,
    FiniteCategory,
    Functor,
    MonoidalData,
    TwoMonoidalData,
    TwoMonoidalFunctor,
    identity_functor,
)
from .transport import AdjointEquivalence, transport_equivalence


def group_category(n: int, k: int, name: str = "G") -> FiniteCategory:
    objs = list(range(n))
    mors = {(x, e): (x, x) for x in objs for e in range(k)}
    comp = {((x, e2), (x, e1)): (x, (e1 + e2) % k) for x in objs for e1 in range(k) for e2 in range(k)}
    return FiniteCategory(objs, mors, comp, {x: (x, 0) for x in objs}, name)


def additive_monoidal(C: FiniteCategory, n: int, k: int,
                      assoc: Optional[Callable[[int, int, int], int]] = None) -> MonoidalData:
    assoc = assoc or (lambda a, b, c: 0)
    objs = C.objects
    return MonoidalData(
        C,
        {(a, b): (a + b) % n for a in objs for b in objs},
        {(f, g): ((f[0] + g[0]) % n, (f[1] + g[1]) % k) for f in C.morphisms for g in C.morphisms},
        0,
        {(a, b, c): ((a + b + c) % n, assoc(a, b, c) % k) for a, b, c in itertools.product(objs, repeat=3)},
        {a: (a, 0) for a in objs},
        {a: (a, 0) for a in objs},
    )


def abelian_two_group(n: int, k: int, zeta: Optional[Callable[[int, int, int, int], int]] = None,
                      box_assoc=None, minus_assoc=None, name: str = "G") -> TwoMonoidalData:
    C = group_category(n, k, name)
    zeta = zeta or (lambda a, b, c, d: 0)
    z = {q: (sum(q) % n, zeta(*q) % k) for q in itertools.product(C.objects, repeat=4)}
    return TwoMonoidalData(additive_monoidal(C, n, k, box_assoc), additive_monoidal(C, n, k, minus_assoc), z)


def doubled(M: MonoidalData) -> TwoMonoidalData:
    """A monoidal category viewed as 2-monoidal with both products equal and
    identity interchange; only defined when (A x B) x (C x D) and
    (A x C) x (B x D) coincide as objects."""
    C = M.cat
    z = {}
    for q in itertools.product(C.objects, repeat=4):
        a, b, c, d = q
        s, t = M.t(M.t(a, b), M.t(c, d)), M.t(M.t(a, c), M.t(b, d))
        if s != t:
            raise CategoryError(f"identity interchange does not typecheck at {q!r}")
        z[q] = C.id(s)
    return TwoMonoidalData(M, M, z)


def discrete_group(n: int = 4) -> TwoMonoidalData:
    """Z/n as a discrete category, both products +, identity constraints."""
    return abelian_two_group(n, 1, name=f"Z/{n}")


def terminal() -> TwoMonoidalData:
    return abelian_two_group(1, 1, name="pt")


def two_group(n: int = 4, k: int = 2) -> TwoMonoidalData:
    """Objects Z/n with automorphisms Z/k, doubled via the identity interchange."""
    C = group_category(n, k, f"Z/{n}[Z/{k}]")
    return doubled(additive_monoidal(C, n, k))


def pentagon_failure() -> MonoidalData:
    """The Z/4 two-group with the single associator component a_{1,1,1} flipped."""
    C = group_category(4, 2, "Z/4[Z/2] bad associator")
    return additive_monoidal(C, 4, 2, lambda a, b, c: 1 if (a, b, c) == (1, 1, 1) else 0)


def super_two_group() -> TwoMonoidalData:
    """Objects Z/2, automorphisms Z/2, interchange tau^(B C).  The two products
    agree on objects but the interchange is not the identity; the extracted
    braid is the sign symmetry c_{A,B} = tau^(A B)."""
    return abelian_two_group(2, 2, lambda a, b, c, d: b * c, name="super")


def perturbed_super() -> TwoMonoidalData:
    """super_two_group with the interchange at (1, 1, 1, 1) flipped."""
    return abelian_two_group(2, 2, lambda a, b, c, d: b * c + (1 if (a, b, c, d) == (1, 1, 1, 1) else 0),
                             name="super, bad interchange")


def correction_functor(T: TwoMonoidalData, cochain: Callable[[int, int], int]) -> TwoMonoidalFunctor:
    """Identity on an abelian two-group, with both structure cells tau^cochain(A, B)."""
    C = T.cat
    k = len(C.hom(0, 0))
    cells = {(a, b): (T.box.t(a, b), cochain(a, b) % k) for a in C.objects for b in C.objects}
    return TwoMonoidalFunctor(identity_functor(C), T, T, cells, dict(cells))


def parity_cocycle(a: int, b: int) -> int:
    """(a mod 2)(b mod 2): a bilinear, hence normalized, 2-cocycle Z/4 x Z/4 -> Z/2."""
    return (a % 2) * (b % 2)


def spike_cochain(a: int, b: int) -> int:
    """Nonzero only at (1, 1); not a cocycle."""
    return 1 if (a, b) == (1, 1) else 0


def fat_groupoid(copies: int = 2, n: int = 2, k: int = 2) -> FiniteCategory:
    """Objects (x, i); a morphism (x, e, i, j): (x, i) -> (x, j) for each label e in Z/k."""
    objs = [(x, i) for x in range(n) for i in range(copies)]
    mors = {(x, e, i, j): ((x, i), (x, j)) for x in range(n) for e in range(k)
            for i in range(copies) for j in range(copies)}
    comp = {}
    for (x, e1, i, j) in mors:
        for e2 in range(k):
            for l in range(copies):
                comp[((x, e2, j, l), (x, e1, i, j))] = (x, (e1 + e2) % k, i, l)
    return FiniteCategory(objs, mors, comp, {(x, i): (x, 0, i, i) for (x, i) in objs}, "fat")


def skeleton_equivalence(S: TwoMonoidalData, copies: int = 2) -> AdjointEquivalence:
    """P: fat -> S forgetting the copy index, J: S -> fat landing in copy 0,
    eta_(x,i) = (x, 0, i, 0), eps = id."""
    C = S.cat
    n = len(C.objects)
    k = len(C.hom(0, 0))
    fat = fat_groupoid(copies, n, k)
    P = Functor(fat, C, {o: o[0] for o in fat.objects}, {m: (m[0], m[1]) for m in fat.morphisms})
    J = Functor(C, fat, {x: (x, 0) for x in C.objects}, {m: (m[0], m[1], 0, 0) for m in C.morphisms})
    eta = {(x, i): (x, 0, i, 0) for (x, i) in fat.objects}
    eps = {x: C.id(x) for x in C.objects}
    return AdjointEquivalence(P, J, eta, eps)


def fat_super():
    """The fat groupoid over the super two-group with transported structure,
    plus the equivalence data and the 2-monoidal projection."""
    S = super_two_group()
    A = skeleton_equivalence(S)
    T, P = transport_equivalence(A, S)
    return S, A, T, P


def relabeling(T: TwoMonoidalData, obj_names: Dict, mor_names: Dict) -> Functor:
    """An isomorphism from a renamed copy of T's category onto it."""
    C = T.cat
    inv_o = {v: k for k, v in obj_names.items()}
    inv_m = {v: k for k, v in mor_names.items()}
    R = FiniteCategory(
        [obj_names[o] for o in C.objects],
        {mor_names[m]: (obj_names[s], obj_names[t]) for m, (s, t) in C.morphisms.items()},
        {(mor_names[g], mor_names[f]): mor_names[h] for (g, f), h in C.compose.items()},
        {obj_names[o]: mor_names[i] for o, i in C.identities.items()},
        C.name + " relabeled",
    )
    return Functor(R, C, inv_o, inv_m)


BUILTINS = {
    "discrete-z4": discrete_group,
    "terminal": terminal,
    "two-group-z4": two_group,
    "super": super_two_group,
    "super-bad-interchange": perturbed_super,
    "fat-super": lambda: fat_super()[2],
}
