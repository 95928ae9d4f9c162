"""Normalized reduced chains and V-valued cochains on finite simplicial sets.

The coboundary on the ``V^j`` component of a cochain is
``(delta u)(x) = (-1)^j u(dx)`` with ``dx = sum_l (-1)^l d_l x``.  With that
choice the slant product satisfies the Stokes identity with sign
``(-1)^{|u|+|e|}`` in total degree (see :mod:`chernlab.ezaw`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from . import linalg
from .simpset import SimplicialMap, SimplicialSet, Word, apply_map


@dataclass(frozen=True)
class GradedSpace:
    """Finite-dimensional graded vector space; ``dims`` maps degree j to dim V^j."""

    dims: Tuple[Tuple[int, int], ...] = ((0, 1),)

    @classmethod
    def of(cls, dims: Dict[int, int] = None) -> "GradedSpace":
        dims = {0: 1} if dims is None else dims
        if any(d < 0 for d in dims.values()):
            raise ValueError("negative dimension in graded space")
        return cls(tuple(sorted((int(j), int(d)) for j, d in dims.items() if d)))

    def dim(self, j: int) -> int:
        return dict(self.dims).get(j, 0)

    def degrees(self) -> List[int]:
        return [j for j, _ in self.dims]


Q = GradedSpace.of({0: 1})


def F(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# -- chains --------------------------------------------------------------------


@dataclass
class Chain:
    space: SimplicialSet
    degree: int
    coeffs: Dict[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        K = self.space
        clean = {}
        for g, c in self.coeffs.items():
            if K.dim_of.get(g) != self.degree:
                raise ValueError(f"{g!r} is not a {self.degree}-cell of {K.name}")
            if g == K.basepoint or not c:
                continue
            clean[g] = F(c)
        self.coeffs = clean

    def __add__(self, other: "Chain") -> "Chain":
        out = dict(self.coeffs)
        for g, c in other.coeffs.items():
            out[g] = out.get(g, 0) + c
        return Chain(self.space, self.degree, out)

    def __rmul__(self, a) -> "Chain":
        return Chain(self.space, self.degree, {g: a * c for g, c in self.coeffs.items()})

    def __neg__(self) -> "Chain":
        return (-1) * self

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Chain)
            and self.space is other.space
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def is_zero(self) -> bool:
        return not self.coeffs


def cell_chain(K: SimplicialSet, g: str, c=1) -> Chain:
    return Chain(K, K.dim_of[g], {g: F(c)})


def word_chain(K: SimplicialSet, w: Word, c=1) -> Chain:
    """Chain of a single simplex; zero if degenerate or the basepoint."""
    if w.is_degenerate or K.is_base(w):
        return Chain(K, w.dim, {})
    return Chain(K, w.dim, {w.gen: F(c)})


def _boundary_table(K: SimplicialSet) -> Dict[str, Dict[str, int]]:
    tab = getattr(K, "_bdry", None)
    if tab is None:
        tab = {}
        for g, d in K.dim_of.items():
            if d == 0 or g == K.basepoint:
                continue
            row: Dict[str, int] = {}
            for i, f in enumerate(K.faces[g]):
                if f.is_degenerate or K.is_base(f):
                    continue
                row[f.gen] = row.get(f.gen, 0) + (-1) ** i
            tab[g] = {h: c for h, c in row.items() if c}
        K._bdry = tab
    return tab


def _coface_table(K: SimplicialSet) -> Dict[str, List[Tuple[str, int]]]:
    tab = getattr(K, "_cobdry", None)
    if tab is None:
        tab = {}
        for g, row in _boundary_table(K).items():
            for h, c in row.items():
                tab.setdefault(h, []).append((g, c))
        K._cobdry = tab
    return tab


def boundary(c: Chain) -> Chain:
    K = c.space
    if c.degree == 0:
        return Chain(K, -1, {})
    tab = _boundary_table(K)
    out: Dict[str, Fraction] = {}
    for g, a in c.coeffs.items():
        for h, s in tab[g].items():
            out[h] = out.get(h, 0) + s * a
    return Chain(K, c.degree - 1, out)


def boundary_matrix(K: SimplicialSet, m: int) -> Tuple[List[str], List[str], List[Dict[int, int]]]:
    """Matrix of the normalized boundary C_m -> C_{m-1}.

    Returns (row labels, column labels, columns) with columns as sparse dicts.
    """
    cols = list(K.cells(m))
    rows = list(K.cells(m - 1))
    pos = {g: i for i, g in enumerate(rows)}
    tab = _boundary_table(K)
    mat = [{pos[h]: c for h, c in tab[g].items()} for g in cols] if m >= 1 else []
    return rows, cols, mat


# -- cochains ------------------------------------------------------------------


class Cochain:
    """Reduced V-valued cochain of total degree n.

    ``entries`` maps ``(generator, basis index of V^{n - dim generator})`` to a
    rational.  Entries on the basepoint and zero entries are dropped.
    """

    __slots__ = ("space", "degree", "V", "entries")

    def __init__(self, space: SimplicialSet, degree: int, entries=None, V: GradedSpace = Q):
        self.space = space
        self.degree = degree
        self.V = V
        clean = {}
        for (g, k), c in (entries or {}).items():
            if not c:
                continue
            d = space.dim_of.get(g)
            if d is None:
                raise ValueError(f"unknown generator {g!r}")
            if not 0 <= k < V.dim(degree - d):
                raise ValueError(f"V^{degree - d} has no basis index {k} (at {g!r})")
            if g == space.basepoint:
                continue
            clean[(g, k)] = F(c)
        self.entries: Dict[Tuple[str, int], Fraction] = clean

    def __repr__(self):
        return f"Cochain({self.space.name}, n={self.degree}, {len(self.entries)} entries)"

    def _like(self, entries) -> "Cochain":
        return Cochain(self.space, self.degree, entries, self.V)

    def __add__(self, other: "Cochain") -> "Cochain":
        _compat(self, other)
        out = dict(self.entries)
        for k, c in other.entries.items():
            out[k] = out.get(k, 0) + c
        return self._like(out)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def __neg__(self) -> "Cochain":
        return self._like({k: -c for k, c in self.entries.items()})

    def __rmul__(self, a) -> "Cochain":
        return self._like({k: a * c for k, c in self.entries.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Cochain)
            and self.space is other.space
            and self.degree == other.degree
            and self.V == other.V
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.space.name, self.degree, frozenset(self.entries.items())))

    def is_zero(self) -> bool:
        return not self.entries

    def value(self, g: str, k: int = 0) -> Fraction:
        return self.entries.get((g, k), Fraction(0))

    def evaluate(self, c: Chain, k: int = 0) -> Fraction:
        """<u, c> on the V-basis vector k (chain dimension must match)."""
        return sum((a * self.entries.get((g, k), 0) for g, a in c.coeffs.items()), Fraction(0))

    def to_json(self) -> dict:
        return {
            "space": self.space.name,
            "degree": self.degree,
            "entries": [[g, k, str(c)] for (g, k), c in sorted(self.entries.items())],
        }

    @classmethod
    def from_json(cls, doc: dict, space: SimplicialSet, V: GradedSpace = Q) -> "Cochain":
        if doc.get("space") not in (None, space.name):
            raise ValueError(f"cochain lives on {doc['space']!r}, not {space.name!r}")
        return cls(space, int(doc["degree"]), {(g, int(k)): Fraction(c) for g, k, c in doc["entries"]}, V)


def _compat(u: Cochain, v: Cochain):
    if u.space is not v.space or u.degree != v.degree or u.V != v.V:
        raise ValueError("cochains live in different groups")


def zero(K: SimplicialSet, n: int, V: GradedSpace = Q) -> Cochain:
    return Cochain(K, n, {}, V)


def basis(K: SimplicialSet, n: int, V: GradedSpace = Q) -> List[Tuple[str, int]]:
    """Ordered basis keys of C^n(K; V)."""
    out = []
    for j, dj in V.dims:
        i = n - j
        if i < 0:
            continue
        for g in K.cells(i):
            for k in range(dj):
                out.append((g, k))
    out.sort(key=lambda key: (K.dim_of[key[0]], key[0], key[1]))
    return out


def coboundary(u: Cochain) -> Cochain:
    K, n = u.space, u.degree
    cof = _coface_table(K)
    out: Dict[Tuple[str, int], Fraction] = {}
    for (g, k), c in u.entries.items():
        j = n - K.dim_of[g]
        sgn = -1 if j % 2 else 1
        for x, s in cof.get(g, ()):
            key = (x, k)
            out[key] = out.get(key, 0) + sgn * s * c
    return Cochain(K, n + 1, out, u.V)


def to_vector(u: Cochain, index: Dict[Tuple[str, int], int]) -> Dict[int, Fraction]:
    return {index[k]: c for k, c in u.entries.items()}


def from_vector(K, n, V, keys, vec) -> Cochain:
    return Cochain(K, n, {keys[i]: c for i, c in vec.items()}, V)


def coboundary_columns(K: SimplicialSet, n: int, V: GradedSpace = Q):
    """Columns of delta: C^{n-1} -> C^n, with both bases."""
    src = basis(K, n - 1, V)
    tgt = basis(K, n, V)
    tpos = {k: i for i, k in enumerate(tgt)}
    cols = []
    for key in src:
        du = coboundary(Cochain(K, n - 1, {key: 1}, V))
        cols.append(to_vector(du, tpos))
    return src, tgt, cols


def solve_coboundary(x: Cochain) -> Optional[Cochain]:
    """Some g with delta g == x exactly, or None if x is not a coboundary."""
    K, n, V = x.space, x.degree, x.V
    if x.is_zero():
        return zero(K, n - 1, V)
    src, tgt, cols = coboundary_columns(K, n, V)
    tpos = {k: i for i, k in enumerate(tgt)}
    sol = linalg.solve(cols, to_vector(x, tpos))
    if sol is None:
        return None
    g = from_vector(K, n - 1, V, src, sol)
    assert coboundary(g) == x
    return g


def is_coboundary(x: Cochain) -> bool:
    return solve_coboundary(x) is not None


@dataclass
class CohomologyResult:
    degree: int
    rank: int
    representatives: List[Cochain]
    cocycle_dim: int
    coboundary_rank: int


def cocycle_basis(K: SimplicialSet, n: int, V: GradedSpace = Q) -> List[Cochain]:
    src, tgt, cols = coboundary_columns(K, n + 1, V)
    return [from_vector(K, n, V, src, v) for v in linalg.nullspace(cols)]


def coboundary_space(K: SimplicialSet, n: int, V: GradedSpace = Q) -> Tuple[List, "linalg.Echelon"]:
    """Echelon basis of B^n inside C^n, with the C^n basis keys."""
    src, tgt, cols = coboundary_columns(K, n, V)
    e = linalg.Echelon()
    for c in cols:
        e.add(c)
    return tgt, e


def cohomology(K: SimplicialSet, n: int, V: GradedSpace = Q) -> CohomologyResult:
    """Rank of reduced H^n(K; V) over Q with representative cocycles."""
    keys, e = coboundary_space(K, n, V)
    pos = {k: i for i, k in enumerate(keys)}
    zs = cocycle_basis(K, n, V)
    reps = []
    for z in zs:
        if e.add(to_vector(z, pos)) is not None:
            reps.append(z)
    b = len(e) - len(reps)
    return CohomologyResult(n, len(reps), reps, len(zs), b)


def class_rank(K: SimplicialSet, n: int, cochains: Iterable[Cochain], V: GradedSpace = Q) -> int:
    """Dimension of the span of the given cocycles modulo B^n."""
    keys, e = coboundary_space(K, n, V)
    pos = {k: i for i, k in enumerate(keys)}
    base = len(e)
    for u in cochains:
        e.add(to_vector(u, pos))
    return len(e) - base


def pullback(f: SimplicialMap, u: Cochain) -> Cochain:
    """(f^* u)(x) = u(f(x)); degenerate or basepoint images contribute zero."""
    if u.space is not f.target and u.space.name != f.target.name:
        raise ValueError("cochain does not live on the target of the map")
    S = f.source
    out = {}
    by_gen: Dict[str, List[Tuple[int, Fraction]]] = {}
    for (g, k), c in u.entries.items():
        by_gen.setdefault(g, []).append((k, c))
    for x, d in S.dim_of.items():
        if x == S.basepoint:
            continue
        w = apply_map(f, S.gen_word(x))
        if w.is_degenerate or f.target.is_base(w):
            continue
        for k, c in by_gen.get(w.gen, ()):
            out[(x, k)] = c
    return Cochain(S, u.degree, out, u.V)


@dataclass
class HomCoset:
    """A morphism x -> y of the cocycle category: the coset rep + im(delta)."""

    representative: Cochain
    source: Cochain
    target: Cochain
    ambient_rank: int = 0

    def check(self) -> bool:
        return coboundary(self.representative) == self.source - self.target

    def compose(self, after: "HomCoset") -> "HomCoset":
        """after o self, for self: x -> y and after: y -> z."""
        if after.source != self.target:
            raise ValueError("cosets are not composable")
        return HomCoset(self.representative + after.representative, self.source, after.target,
                        self.ambient_rank)

    def inverse(self) -> "HomCoset":
        return HomCoset(-self.representative, self.target, self.source, self.ambient_rank)

    def same_coset(self, other: "HomCoset") -> bool:
        return is_coboundary(self.representative - other.representative)


def hom_coset(x: Cochain, y: Cochain) -> Optional[HomCoset]:
    """A morphism x -> y (delta u = x - y), or None if the classes differ."""
    for z in (x, y):
        if not coboundary(z).is_zero():
            raise ValueError("hom_coset needs cocycles")
    u = solve_coboundary(x - y)
    if u is None:
        return None
    r = cohomology(x.space, x.degree - 1, x.V).rank
    return HomCoset(u, x, y, r)


def coset_normal_form(u: Cochain) -> Cochain:
    """Canonical representative of u + im(delta); equal iff the cosets agree."""
    keys, e = coboundary_space(u.space, u.degree, u.V)
    pos = {k: i for i, k in enumerate(keys)}
    return from_vector(u.space, u.degree, u.V, keys, e.reduce(to_vector(u, pos)))


@dataclass
class CohomologyClass:
    representative: Cochain
    normal_form: Cochain

    def __eq__(self, other) -> bool:
        return isinstance(other, CohomologyClass) and self.normal_form == other.normal_form

    def is_zero(self) -> bool:
        return self.normal_form.is_zero()


def cohomology_class(z: Cochain) -> CohomologyClass:
    if not coboundary(z).is_zero():
        raise ValueError("not a cocycle")
    return CohomologyClass(z, coset_normal_form(z))
