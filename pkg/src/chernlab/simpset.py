"""Finite pointed simplicial sets in generator / face-table form.

A simplex is stored as a :class:`Word`: a nondegenerate generator ``x`` of
dimension ``p`` together with a monotone surjection ``theta: [m] -> [p]``;
the word denotes ``theta^* x``.  The Eilenberg-Zilber normal form
``s_{j_k} ... s_{j_1} x`` (``j_k > ... > j_1``) is read off ``theta`` as the
set of positions ``t`` with ``theta(t) == theta(t + 1)``.

Every simplicial operator is applied as a monotone map ``phi: [a] -> [m]``;
``theta o phi`` is factored into a surjection followed by an injection and the
injection is resolved against the face table.  Degenerate simplices are never
materialized.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

DEFAULT_CAP = 6
MAX_CAP = 8


class SimplicialError(ValueError):
    """Invalid input to a simplicial construction."""


@dataclass(frozen=True, order=True)
class Word:
    gen: str
    surj: Tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.surj) - 1

    @property
    def gen_dim(self) -> int:
        return self.surj[-1]

    @property
    def degeneracies(self) -> Tuple[int, ...]:
        """Degeneracy indices in normal form, strictly decreasing."""
        s = self.surj
        return tuple(t for t in range(len(s) - 2, -1, -1) if s[t] == s[t + 1])

    @property
    def is_degenerate(self) -> bool:
        return self.surj[-1] != len(self.surj) - 1

    def __str__(self) -> str:
        degs = self.degeneracies
        if not degs:
            return self.gen
        return "".join(f"s{j}" for j in degs) + f"[{self.gen}]"


def identity(p: int) -> Tuple[int, ...]:
    return tuple(range(p + 1))


def surj_from_degeneracies(gen_dim: int, degs: Sequence[int]) -> Tuple[int, ...]:
    """Surjection of ``s_{degs[0]} ... s_{degs[-1]} x`` for ``x`` of dimension ``gen_dim``.

    ``degs`` is applied innermost-last (``degs[-1]`` acts first) and need not be
    in normal form.
    """
    surj = identity(gen_dim)
    for j in reversed(list(degs)):
        m = len(surj) - 1
        if not 0 <= j <= m:
            raise SimplicialError(f"degeneracy s{j} out of range in dimension {m}")
        # s_j y = y o sigma^j, sigma^j: [m+1] -> [m] hits j twice
        sigma = tuple(t if t <= j else t - 1 for t in range(m + 2))
        surj = tuple(surj[sigma[t]] for t in range(m + 2))
    return surj


def word_from_degeneracies(gen: str, gen_dim: int, degs: Sequence[int] = ()) -> Word:
    return Word(gen, surj_from_degeneracies(gen_dim, degs))


def coface(m: int, i: int) -> Tuple[int, ...]:
    """delta^i: [m-1] -> [m], skipping i."""
    return tuple(t if t < i else t + 1 for t in range(m))


def codegeneracy(m: int, j: int) -> Tuple[int, ...]:
    """sigma^j: [m+1] -> [m], hitting j twice."""
    return tuple(t if t <= j else t - 1 for t in range(m + 2))


def surjections(m: int, p: int) -> Iterable[Tuple[int, ...]]:
    """All monotone surjections [m] -> [p], in a fixed order."""
    for repeats in combinations(range(m), m - p):
        rs = set(repeats)
        out, v = [0], 0
        for t in range(m):
            if t not in rs:
                v += 1
            out.append(v)
        yield tuple(out)


def _epi_mono(comp: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    image = sorted(set(comp))
    pos = {v: k for k, v in enumerate(image)}
    return tuple(pos[v] for v in comp), tuple(image)


class SimplicialSet:
    """A finite pointed simplicial set presented by nondegenerate generators.

    ``faces[g][i]`` is the word ``d_i g``.  Instances are treated as immutable
    once constructed; ``components`` and ``factors`` are filled in by
    :func:`product` and :func:`smash` so that pairs of simplices can be looked
    up again.
    """

    def __init__(
        self,
        name: str,
        generators: Dict[int, Sequence[str]],
        faces: Dict[str, Sequence[Word]],
        basepoint: str,
        *,
        validate: bool = True,
    ):
        self.name = name
        self.generators: Dict[int, Tuple[str, ...]] = {
            int(d): tuple(sorted(gs)) for d, gs in generators.items() if gs
        }
        self.dim_of: Dict[str, int] = {}
        for d, gs in self.generators.items():
            for g in gs:
                if g in self.dim_of:
                    raise SimplicialError(f"duplicate generator {g!r}")
                self.dim_of[g] = d
        self.faces: Dict[str, Tuple[Word, ...]] = {g: tuple(fs) for g, fs in faces.items()}
        self.basepoint = basepoint
        # filled by product / smash
        self.factors: Optional[Tuple["SimplicialSet", "SimplicialSet"]] = None
        self.components: Dict[str, Tuple[Word, Word]] = {}
        self._pair_index: Dict[Tuple[Word, Word], str] = {}
        self.is_smash = False
        self._face_cache: Dict[Tuple[str, Tuple[int, ...]], Word] = {}
        if validate:
            problems = self.check()
            if problems:
                raise SimplicialError(f"{name}: " + "; ".join(problems[:5]))

    def __repr__(self) -> str:
        counts = {d: len(g) for d, g in sorted(self.generators.items())}
        return f"SimplicialSet({self.name!r}, {counts})"

    @property
    def dim(self) -> int:
        return max(self.generators) if self.generators else 0

    def gens(self, d: int) -> Tuple[str, ...]:
        return self.generators.get(d, ())

    def cells(self, d: int) -> Tuple[str, ...]:
        """Nondegenerate generators of dimension d other than the basepoint."""
        return tuple(g for g in self.gens(d) if g != self.basepoint)

    def gen_word(self, g: str) -> Word:
        return Word(g, identity(self.dim_of[g]))

    def base_word(self, m: int) -> Word:
        return Word(self.basepoint, (0,) * (m + 1))

    def is_base(self, w: Word) -> bool:
        return w.gen == self.basepoint

    # -- simplicial operators ------------------------------------------------

    def _iterated_face(self, g: str, mono: Tuple[int, ...]) -> Word:
        key = (g, mono)
        hit = self._face_cache.get(key)
        if hit is not None:
            return hit
        p = self.dim_of[g]
        missing = [v for v in range(p + 1) if v not in set(mono)]
        if not missing:
            res = self.gen_word(g)
        else:
            q = missing[-1]
            first = self.faces[g][q]
            rest = tuple(v if v < q else v - 1 for v in mono)
            res = self.apply(first, rest)
        self._face_cache[key] = res
        return res

    def apply(self, w: Word, phi: Sequence[int]) -> Word:
        """The word ``phi^* w`` for a monotone ``phi: [a] -> [dim w]``."""
        m = w.dim
        phi = tuple(phi)
        if any(not 0 <= v <= m for v in phi) or any(
            phi[t] > phi[t + 1] for t in range(len(phi) - 1)
        ):
            raise SimplicialError(f"operator {phi} is not monotone into [{m}]")
        comp = tuple(w.surj[v] for v in phi)
        epi, mono = _epi_mono(comp)
        if mono == identity(w.gen_dim):
            return Word(w.gen, epi)
        low = self._iterated_face(w.gen, mono)
        return Word(low.gen, tuple(low.surj[v] for v in epi))

    def face(self, w: Word, i: int) -> Word:
        if not 0 <= i <= w.dim or w.dim == 0:
            raise SimplicialError(f"face d{i} out of range for dimension {w.dim}")
        return self.apply(w, coface(w.dim, i))

    def degeneracy(self, w: Word, j: int) -> Word:
        if not 0 <= j <= w.dim:
            raise SimplicialError(f"degeneracy s{j} out of range for dimension {w.dim}")
        return self.apply(w, codegeneracy(w.dim, j))

    def normalize(self, gen: str, ops: Sequence[Tuple[str, int]]) -> Word:
        """Normal form of a raw operator string applied to ``gen``.

        ``ops`` lists operators outermost first, e.g. ``[("d", 0), ("s", 1)]``
        for ``d_0 s_1 gen``.
        """
        if gen not in self.dim_of:
            raise SimplicialError(f"unknown generator {gen!r}")
        w = self.gen_word(gen)
        for kind, idx in reversed(list(ops)):
            if kind == "d":
                w = self.face(w, idx)
            elif kind == "s":
                w = self.degeneracy(w, idx)
            else:
                raise SimplicialError(f"unknown operator {kind!r}")
        return w

    def words(self, m: int, *, include_base: bool = False) -> List[Word]:
        """All m-simplices (degenerate ones included) as normal-form words."""
        out = []
        for p in range(0, m + 1):
            for g in self.gens(p):
                if g == self.basepoint and not include_base:
                    continue
                for s in surjections(m, p):
                    out.append(Word(g, s))
        out.sort()
        return out

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(gs) for d, gs in self.generators.items())

    # -- validation ----------------------------------------------------------

    def check(self) -> List[str]:
        problems = []
        bp = self.basepoint
        if self.dim_of.get(bp) != 0:
            problems.append(f"basepoint {bp!r} is not a 0-dimensional generator")
        for g, d in self.dim_of.items():
            fs = self.faces.get(g, ())
            if d == 0:
                if fs:
                    problems.append(f"vertex {g!r} has faces")
                continue
            if len(fs) != d + 1:
                problems.append(f"{g!r}: expected {d + 1} faces, got {len(fs)}")
                continue
            for i, f in enumerate(fs):
                if f.gen not in self.dim_of:
                    problems.append(f"d{i}({g}) names unknown generator {f.gen!r}")
                elif f.dim != d - 1 or self.dim_of[f.gen] != f.gen_dim:
                    problems.append(f"d{i}({g}) = {f} has the wrong dimension")
                elif sorted(set(f.surj)) != list(range(f.gen_dim + 1)) or any(
                    f.surj[t] > f.surj[t + 1] for t in range(len(f.surj) - 1)
                ):
                    problems.append(f"d{i}({g}) = {f} is not in normal form")
        if problems:
            return problems
        for g, d in sorted(self.dim_of.items()):
            if d < 2:
                continue
            w = self.gen_word(g)
            for j in range(d + 1):
                for i in range(j):
                    lhs = self.face(self.face(w, j), i)
                    rhs = self.face(self.face(w, i), j - 1)
                    if lhs != rhs:
                        problems.append(
                            f"simplicial identity d{i}d{j} = d{j - 1}d{i} fails on {g!r}: "
                            f"{lhs} != {rhs}"
                        )
        return problems

    # -- pairs (products / smashes) -------------------------------------------

    def pair(self, a: Word, b: Word) -> Word:
        """The simplex (a, b) of a product or smash built by this module."""
        if self.factors is None:
            raise SimplicialError(f"{self.name} is not a product")
        if a.dim != b.dim:
            raise SimplicialError("pair components have different dimensions")
        K, L = self.factors
        m = a.dim
        if self.is_smash and (K.is_base(a) or L.is_base(b)):
            return self.base_word(m)
        common = set(a.degeneracies) & set(b.degeneracies)
        rho = tuple(t - sum(1 for r in common if r < t) for t in range(m + 1))
        k = rho[-1]
        ra = [0] * (k + 1)
        rb = [0] * (k + 1)
        for t in range(m + 1):
            ra[rho[t]] = a.surj[t]
            rb[rho[t]] = b.surj[t]
        key = (Word(a.gen, tuple(ra)), Word(b.gen, tuple(rb)))
        g = self._pair_index.get(key)
        if g is None:
            raise SimplicialError(f"pair {key[0]}, {key[1]} not in {self.name}")
        return Word(g, rho)


def word_str(w: Word) -> str:
    return str(w)


def _pair_name(a: Word, b: Word) -> str:
    return f"({a},{b})"


def _build_pairs(K: SimplicialSet, L: SimplicialSet, name: str, smash_: bool, cap: int):
    # above the cap only the skeleton is built
    if not 0 <= cap <= MAX_CAP:
        raise SimplicialError(f"cap {cap} outside [0, {MAX_CAP}]")
    top = min(K.dim + L.dim, cap)
    gens: Dict[int, List[str]] = {}
    comps: Dict[str, Tuple[Word, Word]] = {}
    index: Dict[Tuple[Word, Word], str] = {}
    for m in range(top + 1):
        wk = K.words(m, include_base=True)
        wl = L.words(m, include_base=True)
        for a in wk:
            da = set(a.degeneracies)
            for b in wl:
                if da & set(b.degeneracies):
                    continue
                if smash_ and (K.is_base(a) or L.is_base(b)):
                    continue
                g = _pair_name(a, b)
                gens.setdefault(m, []).append(g)
                comps[g] = (a, b)
                index[(a, b)] = g
    if smash_:
        base = "pt"
        gens.setdefault(0, []).append(base)
    else:
        base = _pair_name(K.base_word(0), L.base_word(0))
    S = SimplicialSet(name, gens, {}, base, validate=False)
    S.factors = (K, L)
    S.components = comps
    S._pair_index = index
    S.is_smash = smash_
    faces = {}
    for g, (a, b) in comps.items():
        m = a.dim
        if m == 0:
            continue
        faces[g] = tuple(S.pair(K.face(a, i), L.face(b, i)) for i in range(m + 1))
    S.faces = faces
    return S


def product(K: SimplicialSet, L: SimplicialSet, *, cap: int = DEFAULT_CAP, name: str = None) -> SimplicialSet:
    """Categorical product, presented by its nondegenerate pairs."""
    return _build_pairs(K, L, name or f"{K.name}x{L.name}", False, cap)


def smash(K: SimplicialSet, L: SimplicialSet, *, cap: int = DEFAULT_CAP, name: str = None) -> SimplicialSet:
    """Smash product: the product with the wedge collapsed onto ``pt``."""
    return _build_pairs(K, L, name or f"({K.name}^{L.name})", True, cap)


# -- standard constructions -----------------------------------------------------


def _vname(vs: Sequence[int]) -> str:
    return "v" + "".join(str(v) for v in vs)


def simplex_word(n: int, seq: Sequence[int]) -> Word:
    """Word of the standard n-simplex for a monotone vertex sequence."""
    image = sorted(set(seq))
    if any(not 0 <= v <= n for v in image):
        raise SimplicialError(f"vertex sequence {seq} not in Delta^{n}")
    pos = {v: k for k, v in enumerate(image)}
    return Word(_vname(image), tuple(pos[v] for v in seq))


def simplex(n: int, *, plus: bool = False) -> SimplicialSet:
    """Standard n-simplex; with ``plus`` a disjoint basepoint ``pt`` is added."""
    if n < 0:
        raise SimplicialError("negative dimension")
    if n > 9:
        raise SimplicialError("simplex dimension above 9 not supported")
    gens: Dict[int, List[str]] = {}
    faces = {}
    for k in range(n + 1):
        for vs in combinations(range(n + 1), k + 1):
            g = _vname(vs)
            gens.setdefault(k, []).append(g)
            if k:
                faces[g] = tuple(
                    simplex_word(n, vs[:i] + vs[i + 1:]) for i in range(k + 1)
                )
    if plus:
        gens[0].append("pt")
        return SimplicialSet(f"Delta{n}+", gens, faces, "pt")
    return SimplicialSet(f"Delta{n}", gens, faces, "v0")


def sphere(n: int) -> SimplicialSet:
    """Delta^n / boundary: one basepoint and one n-cell ``sig``."""
    if n < 0:
        raise SimplicialError("negative dimension")
    if n == 0:
        return SimplicialSet("S0", {0: ["pt", "sig"]}, {}, "pt")
    faces = {"sig": tuple(Word("pt", (0,) * n) for _ in range(n + 1))}
    return SimplicialSet(f"S{n}", {0: ["pt"], n: ["sig"]}, faces, "pt")


def circle() -> SimplicialSet:
    return sphere(1)


def disjoint_basepoint(K: SimplicialSet, *, base: str = "+") -> SimplicialSet:
    """K_+ : K with a new disjoint basepoint; the old basepoint becomes an ordinary vertex."""
    if base in K.dim_of:
        raise SimplicialError(f"generator {base!r} already used")
    gens = {d: list(g) for d, g in K.generators.items()}
    gens.setdefault(0, []).append(base)
    return SimplicialSet(f"{K.name}+", gens, dict(K.faces), base)


def torus() -> SimplicialSet:
    return product(circle(), circle(), name="T2")


def build_standard(kind: str, n: int = 0) -> SimplicialSet:
    if kind == "simplex":
        return simplex(n)
    if kind == "simplex_plus":
        return simplex(n, plus=True)
    if kind == "sphere":
        return sphere(n)
    if kind == "circle":
        return circle()
    if kind == "torus":
        return torus()
    raise SimplicialError(f"unknown standard kind {kind!r}")


# -- maps ----------------------------------------------------------------------


@dataclass
class SimplicialMap:
    source: SimplicialSet
    target: SimplicialSet
    assign: Dict[str, Word] = field(default_factory=dict)

    def __call__(self, w: Word) -> Word:
        return apply_map(self, w)

    def check(self) -> List[str]:
        problems = []
        S, T = self.source, self.target
        for g, d in S.dim_of.items():
            img = self.assign.get(g)
            if img is None:
                problems.append(f"no image for {g!r}")
                continue
            if img.dim != d:
                problems.append(f"image of {g!r} has dimension {img.dim}, expected {d}")
                continue
            if d:
                for i in range(d + 1):
                    lhs = apply_map(self, S.faces[g][i])
                    rhs = T.face(img, i)
                    if lhs != rhs:
                        problems.append(f"f(d{i} {g}) = {lhs} but d{i} f({g}) = {rhs}")
        bp = self.assign.get(S.basepoint)
        if bp is not None and not T.is_base(bp):
            problems.append("basepoint not preserved")
        return problems


def apply_map(f: SimplicialMap, w: Word) -> Word:
    if w.gen not in f.source.dim_of:
        raise SimplicialError(f"{w} is not a simplex of {f.source.name}")
    img = f.assign[w.gen]
    return f.target.apply(img, w.surj)


def compose(f: SimplicialMap, g: SimplicialMap) -> SimplicialMap:
    """f o g (apply g first)."""
    if g.target is not f.source and g.target.name != f.source.name:
        raise SimplicialError("maps are not composable")
    return SimplicialMap(g.source, f.target, {x: apply_map(f, w) for x, w in g.assign.items()})


def identity_map(K: SimplicialSet) -> SimplicialMap:
    return SimplicialMap(K, K, {g: K.gen_word(g) for g in K.dim_of})


def constant_map(K: SimplicialSet, L: SimplicialSet) -> SimplicialMap:
    return SimplicialMap(K, L, {g: L.base_word(d) for g, d in K.dim_of.items()})


def pair_map(
    f: SimplicialMap, g: SimplicialMap, source: SimplicialSet, target: SimplicialSet
) -> SimplicialMap:
    """f x g (or f ^ g) between pair presentations built by this module."""
    assign = {}
    for x in source.dim_of:
        if x in source.components:
            a, b = source.components[x]
            assign[x] = target.pair(apply_map(f, a), apply_map(g, b))
        else:
            assign[x] = target.base_word(source.dim_of[x])
    return SimplicialMap(source, target, assign)


def simplex_map(n_src: int, n_tgt: int, vertices: Sequence[int], *, plus: bool = True,
                source: SimplicialSet = None, target: SimplicialSet = None) -> SimplicialMap:
    """Map Delta^{n_src}(+) -> Delta^{n_tgt}(+) given on vertices (monotone)."""
    S = source or simplex(n_src, plus=plus)
    T = target or simplex(n_tgt, plus=plus)
    assign = {}
    for g, d in S.dim_of.items():
        if g == "pt":
            assign[g] = T.base_word(0)
            continue
        vs = [int(c) for c in g[1:]]
        assign[g] = simplex_word(n_tgt, [vertices[v] for v in vs])
    return SimplicialMap(S, T, assign)


def prism_maps(k: int) -> List[Tuple[Tuple[int, int], ...]]:
    """Vertex sequences of the k+1 nondegenerate (k+1)-simplices of Delta^k x Delta^1."""
    if k < 0:
        raise SimplicialError("negative dimension")
    return [
        tuple((v, 0) for v in range(i + 1)) + tuple((v, 1) for v in range(i, k + 1))
        for i in range(k + 1)
    ]


@lru_cache(maxsize=None)
def cached_simplex(n: int, plus: bool = True) -> SimplicialSet:
    return simplex(n, plus=plus)


@lru_cache(maxsize=None)
def cached_sphere(n: int) -> SimplicialSet:
    return sphere(n)


# -- JSON ----------------------------------------------------------------------


def _word_json(w: Word) -> list:
    return [w.gen, list(w.degeneracies)]


def _word_from_json(K_dims: Dict[str, int], doc) -> Word:
    try:
        gen, degs = doc
        return word_from_degeneracies(gen, K_dims[gen], [int(j) for j in degs])
    except (KeyError, TypeError, ValueError) as exc:
        raise SimplicialError(f"malformed simplex {doc!r}") from exc


def space_to_json(K: SimplicialSet) -> dict:
    """{"name", "generators": {"d": [...]}, "faces": {"g": [[gen, [j_k, ..., j_1]], ...]}, "basepoint"}."""
    return {
        "name": K.name,
        "generators": {str(d): list(gs) for d, gs in sorted(K.generators.items())},
        "faces": {g: [_word_json(f) for f in K.faces[g]] for g in sorted(K.faces) if K.faces[g]},
        "basepoint": K.basepoint,
    }


def space_from_json(doc: dict) -> SimplicialSet:
    try:
        gens = {int(d): list(gs) for d, gs in doc["generators"].items()}
        dims = {g: d for d, gs in gens.items() for g in gs}
        faces = {g: [_word_from_json(dims, f) for f in fs] for g, fs in doc.get("faces", {}).items()}
        return SimplicialSet(doc["name"], gens, faces, doc.get("basepoint", "pt"))
    except (KeyError, TypeError, AttributeError) as exc:
        raise SimplicialError(f"malformed simplicial set document: {exc}") from exc


def map_to_json(f: SimplicialMap) -> dict:
    return {"source": f.source.name, "target": f.target.name,
            "assign": {g: _word_json(w) for g, w in sorted(f.assign.items())}}


def map_from_json(doc: dict, source: SimplicialSet, target: SimplicialSet) -> SimplicialMap:
    if doc.get("source", source.name) != source.name or doc.get("target", target.name) != target.name:
        raise SimplicialError("map document names different spaces")
    return SimplicialMap(source, target,
                         {g: _word_from_json(target.dim_of, w) for g, w in doc["assign"].items()})
