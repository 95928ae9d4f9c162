"""Spectrum packages on symbolic free-abelian levels.

Level n of the built-in packages is the reduced free simplicial abelian group
on ``B_n = S^1 ^ ... ^ S^1`` (n factors, associated to the left).  A k-simplex
is an integer combination of non-base k-words of ``B_n``; the coordinate
functional ``m_w`` reads off the coefficient of the word ``w``.

Cochains on a product ``E_n^r`` are polynomials of degree <= 2 in the
coordinates ``(factor, w)``, scalar valued (coefficients in degree 0).  Faces
act linearly on coordinates, so the coboundary and every structural pullback
is a substitution.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

from . import linalg
from .chains import Cochain
from .ezaw import shuffles
from .simpset import MAX_CAP, SimplicialError, SimplicialSet, Word, cached_sphere, smash

Var = Tuple[int, Word]
Mono = Tuple[Var, ...]
Combination = Dict[Word, int]


# -- levels --------------------------------------------------------------------------


@lru_cache(maxsize=None)
def circle_power(n: int) -> SimplicialSet:
    """(S^1)^{^n} with every nondegenerate simplex."""
    if n < 1:
        raise SimplicialError("circle powers start at 1")
    if n > MAX_CAP:
        raise SimplicialError(f"circle power {n} above the cap {MAX_CAP}")
    if n == 1:
        return cached_sphere(1)
    return smash(circle_power(n - 1), cached_sphere(1), cap=n, name=f"S1^{n}")


@dataclass(frozen=True)
class Level:
    """A spectrum level: a finite pointed simplicial set or Z~[base]."""

    kind: str  # "free_abelian" or "finite"
    base: SimplicialSet
    n: int

    def coords(self, k: int, *, nondegenerate: bool = False) -> Tuple[Word, ...]:
        """Coordinate words of dimension k (non-base; optionally nondegenerate only)."""
        return _coords(self.base, k, nondegenerate)

    def face_preimages(self, k: int) -> Dict[Tuple[int, Word], Tuple[Word, ...]]:
        """(i, w) -> the (k+1)-words w' with d_i w' = w."""
        return _face_preimages(self.base, k)


@lru_cache(maxsize=None)
def _coords(B: SimplicialSet, k: int, nondeg: bool) -> Tuple[Word, ...]:
    if k < 0:
        return ()
    ws = B.words(k)
    if nondeg:
        ws = [w for w in ws if not w.is_degenerate]
    return tuple(ws)


@lru_cache(maxsize=None)
def _face_preimages(B: SimplicialSet, k: int) -> Dict[Tuple[int, Word], Tuple[Word, ...]]:
    pre: Dict[Tuple[int, Word], List[Word]] = {}
    for w2 in B.words(k + 1):
        for i in range(k + 2):
            w = B.face(w2, i)
            if not B.is_base(w):
                pre.setdefault((i, w), []).append(w2)
    return {key: tuple(v) for key, v in pre.items()}


def free_abelian_level(n: int) -> Level:
    return Level("free_abelian", circle_power(n), n)


def fundamental_word(n: int) -> Word:
    """tau_n: the top cell of B_n picked out by the all-first shuffle term."""
    if n == 1:
        return Word("sig", (0, 1))
    prev = fundamental_word(n - 1)
    Bp = circle_power(n - 1)
    a = Bp.apply(prev, tuple(range(n)) + (n - 1,))
    b = Word("sig", (0,) * n + (1,))
    return circle_power(n).pair(a, b)


# -- polynomial cochains -------------------------------------------------------------


def _mono(vars_: Iterable[Var]) -> Mono:
    return tuple(sorted(vars_))


class Poly:
    """Reduced polynomial cochain of dimension ``dim`` on ``level^nfac``."""

    __slots__ = ("level", "nfac", "dim", "terms")

    def __init__(self, level: Level, nfac: int, dim: int, terms: Dict[Mono, Fraction] = None):
        self.level, self.nfac, self.dim = level, nfac, dim
        clean = {}
        for m, c in (terms or {}).items():
            if not c:
                continue
            if not 1 <= len(m) <= 2:
                raise SimplicialError(f"monomial degree {len(m)} outside 1..2")
            for f, w in m:
                if not 0 <= f < nfac or w.dim != dim:
                    raise SimplicialError(f"bad coordinate ({f}, {w}) for dimension {dim}")
            clean[_mono(m)] = Fraction(c)
        self.terms: Dict[Mono, Fraction] = clean

    def _like(self, terms) -> "Poly":
        return Poly(self.level, self.nfac, self.dim, terms)

    def _compat(self, other: "Poly"):
        if (self.level, self.nfac, self.dim) != (other.level, other.nfac, other.dim):
            raise SimplicialError("polynomials live on different products")

    def __add__(self, other: "Poly") -> "Poly":
        self._compat(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return self._like(out)

    def __neg__(self) -> "Poly":
        return self._like({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __rmul__(self, a) -> "Poly":
        return self._like({m: a * c for m, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and (self.level, self.nfac, self.dim) == (other.level, other.nfac, other.dim)
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        return f"Poly(level {self.level.n}, {self.nfac} factors, dim {self.dim}, {self.pretty()})"

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=0)

    def part(self, deg: int) -> "Poly":
        return self._like({m: c for m, c in self.terms.items() if len(m) == deg})

    def uses_only_nondegenerate(self) -> bool:
        return all(not w.is_degenerate for m in self.terms for _, w in m)

    def evaluate(self, point: Sequence[Combination]) -> Fraction:
        tot = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for f, w in m:
                v *= point[f].get(w, 0)
                if not v:
                    break
            tot += v
        return tot

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            parts.append(f"{c}*" + "*".join(f"m[{w}]({'xyzuv'[f]})" for f, w in m))
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "level": self.level.n,
            "factors": self.nfac,
            "dim": self.dim,
            "terms": [
                [[[f, w.gen, list(w.surj)] for f, w in m], str(c)]
                for m, c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json(cls, doc: dict, level: Level) -> "Poly":
        if int(doc["level"]) != level.n:
            raise SimplicialError("polynomial level mismatch")
        terms = {}
        for mono, c in doc["terms"]:
            m = _mono((int(f), Word(g, tuple(s))) for f, g, s in mono)
            terms[m] = terms.get(m, 0) + Fraction(c)
        return cls(level, int(doc["factors"]), int(doc["dim"]), terms)


def coordinate(level: Level, w: Word, factor: int = 0, nfac: int = 1) -> Poly:
    return Poly(level, nfac, w.dim, {((factor, w),): 1})


def square(p: Poly) -> Poly:
    if p.degree > 1:
        raise SimplicialError("square of a non-linear polynomial exceeds degree 2")
    out: Dict[Mono, Fraction] = {}
    items = list(p.terms.items())
    for (m1, c1) in items:
        for (m2, c2) in items:
            m = _mono(m1 + m2)
            out[m] = out.get(m, 0) + c1 * c2
    return p._like(out)


def substitute(p: Poly, rule: Callable[[Var], Dict[Var, Fraction]], nfac: int, dim: int,
               level: Level = None) -> Poly:
    """Replace each coordinate by a linear form and expand."""
    cache: Dict[Var, Dict[Var, Fraction]] = {}

    def lin(v: Var) -> Dict[Var, Fraction]:
        r = cache.get(v)
        if r is None:
            r = cache[v] = rule(v)
        return r

    out: Dict[Mono, Fraction] = {}
    for m, c in p.terms.items():
        if len(m) == 1:
            for v, a in lin(m[0]).items():
                key = (v,)
                out[key] = out.get(key, 0) + c * a
        else:
            l1, l2 = lin(m[0]), lin(m[1])
            for v1, a1 in l1.items():
                for v2, a2 in l2.items():
                    key = _mono((v1, v2))
                    out[key] = out.get(key, 0) + c * a1 * a2
    return Poly(level or p.level, nfac, dim, out)


def face_substitution(p: Poly, i: int) -> Poly:
    """p o d_i, a polynomial of dimension dim + 1."""
    pre = p.level.face_preimages(p.dim)

    def rule(v: Var) -> Dict[Var, Fraction]:
        f, w = v
        return {(f, w2): Fraction(1) for w2 in pre.get((i, w), ())}

    return substitute(p, rule, p.nfac, p.dim + 1)


def poly_coboundary(p: Poly) -> Poly:
    """(delta p)(x) = sum_i (-1)^i p(d_i x)."""
    out = Poly(p.level, p.nfac, p.dim + 1)
    for i in range(p.dim + 2):
        t = face_substitution(p, i)
        out = out + t if i % 2 == 0 else out - t
    return out


# -- structural maps ------------------------------------------------------------------

Matrix = Tuple[Tuple[int, ...], ...]


def matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in r) for r in rows)


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    """A o B for linear maps (rows index outputs)."""
    inner = len(B)
    if any(len(r) != inner for r in A):
        raise SimplicialError("matrix shapes do not compose")
    return tuple(
        tuple(sum(A[i][t] * B[t][j] for t in range(inner)) for j in range(len(B[0]))) for i in range(len(A))
    )


def block_diag(A: Matrix, B: Matrix) -> Matrix:
    ca, cb = len(A[0]), len(B[0])
    return tuple(r + (0,) * cb for r in A) + tuple((0,) * ca + r for r in B)


def ident(m: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(m)) for i in range(m))


def pullback_linear(M: Matrix, p: Poly) -> Poly:
    """Pullback along the linear map E^m -> E^r given by M (r rows)."""
    if len(M) != p.nfac:
        raise SimplicialError(f"map has {len(M)} outputs but the polynomial has {p.nfac} factors")
    m = len(M[0]) if M else 0

    def rule(v: Var) -> Dict[Var, Fraction]:
        j, w = v
        return {(i, w): Fraction(M[j][i]) for i in range(m) if M[j][i]}

    return substitute(p, rule, m, p.dim)


# Named structural maps (rows are outputs, columns inputs).
ALPHA = matrix([[1, 1]])
NU = matrix([[-1]])
PR1 = matrix([[1, 0]])
PR2 = matrix([[0, 1]])
FLIP = matrix([[0, 1], [1, 0]])
PR12 = matrix([[1, 0, 0], [0, 1, 0]])
PR23 = matrix([[0, 1, 0], [0, 0, 1]])
ID_CONST = matrix([[1], [0]])
CONST = matrix([[0]])
DIAG = matrix([[1], [1]])


@lru_cache(maxsize=None)
def _epsilon_tables(n: int, k: int):
    """Per (k,1)-shuffle: tau (a (k+1)-word of B_{n+1}) -> k-words w of B_n with
    (s_nu w, s_mu sigma) = tau."""
    B, B1 = circle_power(n), circle_power(n + 1)
    out = []
    for a, b, sgn in shuffles(k, 1):
        table: Dict[Word, List[Word]] = {}
        t = Word("sig", b)
        for w in B.words(k):
            tau = B1.pair(B.apply(w, a), t)
            if not B1.is_base(tau):
                table.setdefault(tau, []).append(w)
        out.append((sgn, table))
    return out


def epsilon_slant(p: Poly, target: Level) -> Poly:
    """(eps_n^* p) / [S^1]: from dimension k+1 on E_{n+1} to dimension k on E_n.

    The slant evaluates p on each shuffle term eps(s_nu x, s_mu sigma) and
    sums with the shuffle signs.
    """
    if p.nfac != 1 or p.level.n != target.n + 1:
        raise SimplicialError("epsilon pullback goes from level n+1 to level n")
    k = p.dim - 1
    out = Poly(target, 1, k)
    if k < 0:
        return out
    for sgn, table in _epsilon_tables(target.n, k):
        def rule(v: Var, table=table) -> Dict[Var, Fraction]:
            return {(0, w): Fraction(1) for w in table.get(v[1], ())}

        term = substitute(p, rule, 1, k, level=target)
        out = out + term if sgn > 0 else out - term
    return out


def homotopy_slant(H: Matrix, p: Poly) -> Poly:
    """(H^* p) / [Delta^1] for a homotopy E^m x Delta^1 -> E constant in t.

    Each shuffle term (s_nu x, s_mu e) maps to M s_nu x, so p is evaluated on
    degenerate simplices; the result is computed honestly rather than assumed.
    """
    k = p.dim - 1
    m = len(H[0])
    out = Poly(p.level, m, max(k, 0))
    if k < 0:
        return out
    B = p.level.base
    for a, b, sgn in shuffles(k, 1):
        table: Dict[Word, List[Word]] = {}
        for w in B.words(k):
            table.setdefault(B.apply(w, a), []).append(w)

        def rule(v: Var, table=table) -> Dict[Var, Fraction]:
            j, tau = v
            res: Dict[Var, Fraction] = {}
            for w in table.get(tau, ()):
                for i in range(m):
                    if H[j][i]:
                        res[(i, w)] = res.get((i, w), 0) + H[j][i]
            return res

        term = substitute(p, rule, m, k)
        out = out + term if sgn > 0 else out - term
    return out


# -- maps from finite sources -----------------------------------------------------------


@dataclass
class MapIntoFreeAbelian:
    """A simplicial map X -> Z~[B]: each generator goes to an integer combination."""

    source: SimplicialSet
    level: Level
    assign: Dict[str, Combination] = field(default_factory=dict)

    def image(self, w: Word) -> Combination:
        """Image of an arbitrary simplex (degenerate words welcome)."""
        if w.gen == self.source.basepoint:
            return {}
        B = self.level.base
        out: Dict[Word, int] = {}
        for v, c in self.assign.get(w.gen, {}).items():
            u = B.apply(v, w.surj)
            if B.is_base(u):
                continue
            out[u] = out.get(u, 0) + c
        return {u: c for u, c in out.items() if c}

    def face_of_image(self, g: str, i: int) -> Combination:
        B = self.level.base
        out: Dict[Word, int] = {}
        for v, c in self.assign.get(g, {}).items():
            u = B.face(v, i)
            if B.is_base(u):
                continue
            out[u] = out.get(u, 0) + c
        return {u: c for u, c in out.items() if c}

    def check(self) -> List[str]:
        X, B = self.source, self.level.base
        problems = []
        if self.assign.get(X.basepoint):
            problems.append("basepoint not sent to 0")
        for g, combo in self.assign.items():
            if g not in X.dim_of:
                problems.append(f"unknown generator {g!r}")
                continue
            for w in combo:
                if w.dim != X.dim_of[g] or B.is_base(w) or w.gen not in B.dim_of:
                    problems.append(f"{g!r} assigned an invalid word {w}")
        if problems:
            return problems
        for g, d in X.dim_of.items():
            if d == 0 or g == X.basepoint:
                continue
            for i in range(d + 1):
                lhs = self.image(X.faces[g][i])
                rhs = self.face_of_image(g, i)
                if lhs != rhs:
                    problems.append(f"c(d{i} {g}) != d{i} c({g})")
        return problems

    def __add__(self, other: "MapIntoFreeAbelian") -> "MapIntoFreeAbelian":
        return combine([self, other], ALPHA[0])

    def __neg__(self) -> "MapIntoFreeAbelian":
        return combine([self], NU[0])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MapIntoFreeAbelian)
            and self.source is other.source
            and self.level == other.level
            and _clean(self.assign) == _clean(other.assign)
        )

    def to_json(self) -> dict:
        return {
            "source": self.source.name,
            "level": self.level.n,
            "assign": {
                g: [[w.gen, list(w.surj), c] for w, c in sorted(combo.items())]
                for g, combo in sorted(_clean(self.assign).items())
            },
        }

    @classmethod
    def from_json(cls, doc: dict, source: SimplicialSet, level: Level) -> "MapIntoFreeAbelian":
        assign = {}
        for g, items in doc["assign"].items():
            combo: Dict[Word, int] = {}
            for gen, surj, c in items:
                w = Word(gen, tuple(surj))
                combo[w] = combo.get(w, 0) + int(c)
            assign[g] = combo
        return cls(source, level, assign)


def _clean(assign: Dict[str, Combination]) -> Dict[str, Combination]:
    out = {}
    for g, combo in assign.items():
        c = {w: v for w, v in combo.items() if v}
        if c:
            out[g] = c
    return out


def combine(maps: Sequence[MapIntoFreeAbelian], row: Sequence[int]) -> MapIntoFreeAbelian:
    """sum_i row[i] * maps[i] (a linear structural map applied to a tuple)."""
    if not maps:
        raise SimplicialError("need at least one map")
    X, L = maps[0].source, maps[0].level
    out: Dict[str, Dict[Word, int]] = {}
    for coef, m in zip(row, maps):
        if m.source is not X or m.level != L:
            raise SimplicialError("maps have different sources or levels")
        if not coef:
            continue
        for g, combo in m.assign.items():
            tgt = out.setdefault(g, {})
            for w, c in combo.items():
                tgt[w] = tgt.get(w, 0) + coef * c
    return MapIntoFreeAbelian(X, L, _clean(out))


def constant_into(X: SimplicialSet, level: Level) -> MapIntoFreeAbelian:
    return MapIntoFreeAbelian(X, level, {})


def pullback_poly(maps: Sequence[MapIntoFreeAbelian], p: Poly) -> Cochain:
    """(c_1, ..., c_r)^* p as an ordinary cochain on the common source."""
    if len(maps) != p.nfac:
        raise SimplicialError(f"need {p.nfac} maps, got {len(maps)}")
    X = maps[0].source
    for m in maps:
        if m.source is not X or m.level != p.level:
            raise SimplicialError("maps do not share source and level")
    out = {}
    for g in X.cells(p.dim):
        val = p.evaluate([m.assign.get(g, {}) for m in maps])
        if val:
            out[(g, 0)] = val
    return Cochain(X, p.dim, out)


def hom_into_level(X: SimplicialSet, level: Level) -> List[MapIntoFreeAbelian]:
    """Integer basis of the solution space of the compatibility equations."""
    B = level.base
    unknowns: List[Tuple[str, Word]] = []
    for d in sorted(X.generators):
        for g in X.cells(d):
            for w in level.coords(d):
                unknowns.append((g, w))
    pos = {u: t for t, u in enumerate(unknowns)}
    eqs: List[Dict[int, Fraction]] = []
    for g, d in X.dim_of.items():
        if d == 0 or g == X.basepoint:
            continue
        for i in range(d + 1):
            rows: Dict[Word, Dict[int, Fraction]] = {}
            fw = X.faces[g][i]
            if fw.gen != X.basepoint:
                for w in level.coords(X.dim_of[fw.gen]):
                    u = B.apply(w, fw.surj)
                    if not B.is_base(u):
                        r = rows.setdefault(u, {})
                        t = pos[(fw.gen, w)]
                        r[t] = r.get(t, 0) + 1
            for w in level.coords(d):
                u = B.face(w, i)
                if not B.is_base(u):
                    r = rows.setdefault(u, {})
                    t = pos[(g, w)]
                    r[t] = r.get(t, 0) - 1
            eqs.extend({k: v for k, v in r.items() if v} for r in rows.values())
    eqs = [e for e in eqs if e]
    out = []
    for vec in linalg.kernel_of_rows(eqs, len(unknowns)):
        den = 1
        for v in vec.values():
            den = den * v.denominator // _gcd(den, v.denominator)
        assign: Dict[str, Dict[Word, int]] = {}
        for t, v in vec.items():
            g, w = unknowns[t]
            assign.setdefault(g, {})[w] = int(v * den)
        out.append(MapIntoFreeAbelian(X, level, assign))
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


# -- packages ---------------------------------------------------------------------------

# Declared endpoints of the standard homotopies, as composites of alpha and nu.
HOMOTOPY_SIDES = {
    "a": ("alpha o (alpha x id)", "alpha o (id x alpha)"),
    "s": ("alpha o flip", "alpha"),
    "r": ("alpha o (id, const)", "id"),
    "hinv": ("alpha o (id, nu)", "const"),
}


def declared_sides(alpha: Matrix, nu: Matrix) -> Dict[str, Tuple[Matrix, Matrix]]:
    a_x_1 = block_diag(alpha, ident(1))
    one_x_a = block_diag(ident(1), alpha)
    return {
        "a": (mat_mul(alpha, a_x_1), mat_mul(alpha, one_x_a)),
        "s": (mat_mul(alpha, FLIP), alpha),
        "r": (mat_mul(alpha, ID_CONST), ident(1)),
        "hinv": (mat_mul(alpha, _id_nu(nu)), CONST),
    }


def _id_nu(nu: Matrix) -> Matrix:
    return (ident(1)[0],) + tuple(nu)


@dataclass
class SpectrumPackage:
    """Window of symbolic levels with structure maps and standard homotopies.

    The homotopies are linear maps constant in the Delta^1 direction; each is
    checked against both of its declared endpoint composites.
    """

    name: str
    window: Tuple[int, int]
    cap: int
    levels: Dict[int, Level]
    alpha: Matrix = ALPHA
    nu: Matrix = NU
    homotopies: Dict[str, Matrix] = field(default_factory=dict)
    perturbation: Dict[int, Poly] = field(default_factory=dict)

    def level(self, n: int) -> Level:
        if n not in self.levels:
            raise SimplicialError(f"level {n} outside the window {self.window}")
        return self.levels[n]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "window": list(self.window),
            "cap": self.cap,
            "levels": [{"n": n, "kind": L.kind, "base": f"circle_power:{n}"}
                       for n, L in sorted(self.levels.items())],
            "alpha": [list(r) for r in self.alpha],
            "nu": [list(r) for r in self.nu],
            "homotopies": {k: {"map": [list(r) for r in M]} for k, M in sorted(self.homotopies.items())},
            "perturbation": {str(n): p.to_json() for n, p in sorted(self.perturbation.items())},
        }

    @classmethod
    def from_json(cls, doc: dict) -> "SpectrumPackage":
        lo, hi = (int(x) for x in doc["window"])
        cap = int(doc.get("cap", hi + 2))
        base = em_package(lo, hi, cap)
        for entry in doc.get("levels", []):
            if entry.get("kind", "free_abelian") != "free_abelian":
                raise SimplicialError("only free_abelian levels are supported in manifests")
            if entry.get("base", f"circle_power:{entry['n']}") != f"circle_power:{entry['n']}":
                raise SimplicialError(f"unsupported level base {entry['base']!r}")
        pkg = SpectrumPackage(
            doc.get("name", "package"),
            (lo, hi),
            cap,
            base.levels,
            matrix(doc.get("alpha", ALPHA)),
            matrix(doc.get("nu", NU)),
            {k: matrix(v["map"]) for k, v in doc.get("homotopies", {}).items()},
            {},
        )
        for n, pd in doc.get("perturbation", {}).items():
            pkg.perturbation[int(n)] = Poly.from_json(pd, pkg.level(int(n)))
        return pkg


def em_package(n_min: int, n_max: int, cap: int) -> SpectrumPackage:
    """Strict abelian model: alpha = +, nu = -1, constant homotopies."""
    if not 1 <= n_min <= n_max <= cap - 1:
        raise SimplicialError(f"window [{n_min}, {n_max}] does not fit under cap {cap}")
    if cap > MAX_CAP:
        raise SimplicialError(f"cap {cap} above {MAX_CAP}")
    levels = {n: free_abelian_level(n) for n in range(n_min, n_max + 1)}
    sides = declared_sides(ALPHA, NU)
    homs = {k: v[0] for k, v in sides.items()}
    return SpectrumPackage("em", (n_min, n_max), cap, levels, ALPHA, NU, homs, {})


def skew_package(base: SpectrumPackage, b: Dict[int, Poly]) -> SpectrumPackage:
    """Same maps; the fundamental cocycles become iota_n + delta b_n."""
    for n, p in b.items():
        L = base.level(n)
        if p.level != L or p.nfac != 1 or p.dim != n - 1:
            raise SimplicialError(f"perturbation at level {n} must be an (n-1)-cochain on E_n")
        if p.degree > 2:
            raise SimplicialError("perturbation degree above 2")
        if not p.uses_only_nondegenerate():
            raise SimplicialError(f"perturbation at level {n} uses degenerate coordinates")
    return SpectrumPackage(
        base.name + "+skew", base.window, base.cap, dict(base.levels), base.alpha, base.nu,
        dict(base.homotopies), {n: p for n, p in b.items() if not p.is_zero()},
    )


def standard_skew_perturbation(levels: Dict[int, Level]) -> Dict[int, Poly]:
    """A compatible family of one-monomial quadratic perturbations.

    The top level (3 or 2) uses the square of one nondegenerate coordinate:
    w = (s_1 (sig,sig), s_0 sig) on B_3, or (sig,sig) on B_2.  Lower levels get
    the image under the epsilon slant, so compatibility with the structure
    maps survives the perturbation.
    """
    hi, lo = max(levels), min(levels)
    if hi > 3:
        raise SimplicialError("the standard perturbation is defined up to level 3")
    B2 = circle_power(2)
    ss = B2.gen_word("(sig,sig)")
    if hi == 3:
        w = circle_power(3).pair(B2.apply(ss, (0, 1, 1)), Word("sig", (0, 0, 1)))
    elif hi == 2:
        w = ss
    else:
        return {}
    out = {hi: square(coordinate(levels[hi], w))}
    for n in range(hi - 1, lo - 1, -1):
        out[n] = epsilon_slant(out[n + 1], levels[n])
    return {n: p for n, p in out.items() if not p.is_zero()}


def em_skew_package(n_min: int = 1, n_max: int = 3, cap: int = 5) -> SpectrumPackage:
    base = em_package(n_min, n_max, cap)
    return skew_package(base, standard_skew_perturbation(base.levels))


def validate_package(P: SpectrumPackage) -> dict:
    entries = []
    sides = declared_sides(P.alpha, P.nu)
    ok = True

    def add(name, passed, detail=""):
        nonlocal ok
        ok = ok and passed
        e = {"name": name, "status": "pass" if passed else "fail"}
        if detail:
            e["detail"] = detail
        entries.append(e)

    add("alpha shape", len(P.alpha) == 1 and len(P.alpha[0]) == 2)
    add("nu shape", len(P.nu) == 1 and len(P.nu[0]) == 1)
    # Linear maps between free abelian groups are simplicial; integrality is the check.
    add("maps integral", all(isinstance(x, int) for r in P.alpha + P.nu for x in r))
    for k, (src, tgt) in sides.items():
        H = P.homotopies.get(k)
        if H is None:
            add(f"homotopy {k} present", False, "missing")
            continue
        lab0, lab1 = HOMOTOPY_SIDES[k]
        add(f"homotopy {k} at t=0 equals {lab0}", H == src, f"{_mat_str(H)} vs {_mat_str(src)}")
        add(f"homotopy {k} at t=1 equals {lab1}", H == tgt, f"{_mat_str(H)} vs {_mat_str(tgt)}")
    for n in sorted(P.levels):
        if n + 1 > MAX_CAP:
            continue
        B, B1, S1 = circle_power(n), circle_power(n + 1), cached_sphere(1)
        wedge_ok = all(
            B1.is_base(B1.pair(w, S1.base_word(k))) and B1.is_base(B1.pair(B.base_word(k), t))
            for k in range(0, 3)
            for w in B.words(k)
            for t in S1.words(k)
        )
        add(f"epsilon_{n} sends the wedge to 0", wedge_ok)
    for n, p in sorted(P.perturbation.items()):
        add(f"perturbation {n} reduced, degree <= 2, nondegenerate",
            p.degree <= 2 and p.uses_only_nondegenerate())
    return {"check": "package", "package": P.name, "entries": entries, "passed": ok}


def _mat_str(M: Matrix) -> str:
    return "[" + ";".join(",".join(str(x) for x in r) for r in M) + "]"
