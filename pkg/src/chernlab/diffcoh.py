"""Differential cocycles (c, omega, h) with delta h = omega - c^* iota_n.

The base is M_+ (a finite simplicial set with a disjoint basepoint), c is a
map into the level-n space of a spectrum package, omega is a closed cochain
flagged as the curvature and h a cochain of degree n - 1.  Equivalences are
never searched for; they are certified by replaying a list of moves:

* a homotopy move replaces (c0, omega, h) by (c1, omega, h - ch(C)) for a
  homotopy C from c0 (t=0) to c1 (t=1);
* a coboundary move replaces h by h + delta g.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Union

from .chains import Cochain, basis, coboundary
from .chern import (
    FundamentalFamily,
    TransitionFamily,
    ch_morphism,
    ch_object,
    coherence_solutions,
    constant_cylinder,
    random_map,
    vertex_restriction,
)
from .cospec import with_simplex
from .simpset import SimplicialError, SimplicialSet
from .spectra import (
    MapIntoFreeAbelian,
    SpectrumPackage,
    combine,
    constant_into,
    pullback_poly,
)


@dataclass
class DifferentialCocycle:
    level: int
    c: MapIntoFreeAbelian
    omega: Cochain
    h: Cochain

    @property
    def space(self) -> SimplicialSet:
        return self.c.source

    def __post_init__(self):
        X = self.c.source
        if self.omega.space is not X or self.h.space is not X:
            raise SimplicialError("c, omega and h must live on the same space")
        if self.omega.degree != self.level or self.h.degree != self.level - 1:
            raise SimplicialError("omega must have degree n and h degree n - 1")
        if self.c.level.n != self.level:
            raise SimplicialError("map lands in the wrong level")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DifferentialCocycle)
            and self.level == other.level
            and self.c == other.c
            and self.omega == other.omega
            and self.h == other.h
        )

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "space": self.space.name,
            "c": self.c.to_json(),
            "omega": self.omega.to_json(),
            "h": self.h.to_json(),
        }

    @classmethod
    def from_json(cls, doc: dict, X: SimplicialSet, P: SpectrumPackage) -> "DifferentialCocycle":
        n = int(doc["level"])
        c = MapIntoFreeAbelian.from_json(doc["c"], X, P.level(n))
        return cls(n, c, Cochain.from_json(doc["omega"], X), Cochain.from_json(doc["h"], X))


def residual(x: DifferentialCocycle, F: FundamentalFamily) -> Cochain:
    """delta h - omega + c^* iota_n (zero exactly when x is a cocycle)."""
    return coboundary(x.h) - x.omega + ch_object(x.c, F)


def validate_cocycle(x: DifferentialCocycle, F: FundamentalFamily) -> dict:
    entries = []
    problems = x.c.check()
    entries.append({"name": "c is simplicial", "status": "fail" if problems else "pass",
                    **({"problems": problems} if problems else {})})
    dw = coboundary(x.omega)
    entries.append({"name": "delta omega = 0", "status": "pass" if dw.is_zero() else "fail"})
    r = residual(x, F)
    e = {"name": "delta h = omega - c^* iota", "status": "pass" if r.is_zero() else "fail"}
    if not r.is_zero():
        e["residual"] = r.to_json()
    entries.append(e)
    return {"check": "cocycle", "entries": entries,
            "passed": all(e["status"] == "pass" for e in entries)}


def zero_cocycle(X: SimplicialSet, P: SpectrumPackage, n: int) -> DifferentialCocycle:
    return DifferentialCocycle(n, constant_into(X, P.level(n)), Cochain(X, n), Cochain(X, n - 1))


def add(x: DifferentialCocycle, y: DifferentialCocycle, T: TransitionFamily) -> DifferentialCocycle:
    """(alpha(c1, c2), omega1 + omega2, h1 + h2 + (c1, c2)^* A_n)."""
    if x.level != y.level or x.space is not y.space:
        raise SimplicialError("cocycles live over different spaces or levels")
    n = x.level
    cross = pullback_poly([x.c, y.c], T[n])
    return DifferentialCocycle(n, x.c + y.c, x.omega + y.omega, x.h + y.h + cross)


def neg(x: DifferentialCocycle, N: Dict[int, "object"]) -> DifferentialCocycle:
    """(nu o c, -omega, -h + c^* N_n)."""
    n = x.level
    return DifferentialCocycle(n, -x.c, -x.omega, -x.h + pullback_poly([x.c], N[n]))


# -- certificates ----------------------------------------------------------------------


@dataclass
class HomotopyMove:
    C: MapIntoFreeAbelian  # on X ^ Delta^1_+


@dataclass
class CoboundaryMove:
    g: Cochain  # degree n - 2 on X


Move = Union[HomotopyMove, CoboundaryMove]


@dataclass
class EquivalenceCertificate:
    moves: List[Move] = field(default_factory=list)

    def to_json(self) -> dict:
        out = []
        for m in self.moves:
            if isinstance(m, HomotopyMove):
                out.append({"kind": "homotopy", "map": m.C.to_json()})
            else:
                out.append({"kind": "coboundary", "g": m.g.to_json()})
        return {"moves": out}

    @classmethod
    def from_json(cls, doc: dict, X: SimplicialSet, P: SpectrumPackage) -> "EquivalenceCertificate":
        moves: List[Move] = []
        for m in doc.get("moves", []):
            if m["kind"] == "homotopy":
                lvl = P.level(int(m["map"]["level"]))
                moves.append(HomotopyMove(MapIntoFreeAbelian.from_json(m["map"], with_simplex(X, 1), lvl)))
            elif m["kind"] == "coboundary":
                moves.append(CoboundaryMove(Cochain.from_json(m["g"], X)))
            else:
                raise SimplicialError(f"unknown move kind {m['kind']!r}")
        return cls(moves)


def apply_move(x: DifferentialCocycle, mv: Move, F: FundamentalFamily) -> DifferentialCocycle:
    X = x.space
    if isinstance(mv, HomotopyMove):
        C = mv.C
        if C.source is not with_simplex(X, 1) or C.level != x.c.level:
            raise SimplicialError("homotopy lives on the wrong cylinder or level")
        problems = C.check()
        if problems:
            raise SimplicialError("homotopy is not simplicial: " + problems[0])
        if vertex_restriction(C, X, 0) != x.c:
            raise SimplicialError("homotopy does not start at the current map")
        chC = ch_morphism(C, X, F).representative
        return DifferentialCocycle(x.level, vertex_restriction(C, X, 1), x.omega, x.h - chC)
    if isinstance(mv, CoboundaryMove):
        if mv.g.space is not X or mv.g.degree != x.level - 2:
            raise SimplicialError("coboundary move needs a cochain of degree n - 2 on the base")
        return DifferentialCocycle(x.level, x.c, x.omega, x.h + coboundary(mv.g))
    raise SimplicialError("unknown move")


def verify_certificate(x: DifferentialCocycle, y: DifferentialCocycle, cert: EquivalenceCertificate,
                       F: FundamentalFamily) -> dict:
    """Replay the moves from x; pass iff every step validates and the end is y."""
    cur = x
    report = {"check": "certificate", "moves": len(cert.moves), "passed": False}
    if not validate_cocycle(x, F)["passed"]:
        report["failed_at"] = 0
        report["reason"] = "start is not a differential cocycle"
        return report
    for idx, mv in enumerate(cert.moves, start=1):
        try:
            cur = apply_move(cur, mv, F)
        except SimplicialError as exc:
            report["failed_at"] = idx
            report["reason"] = str(exc)
            return report
        r = residual(cur, F)
        if not r.is_zero():
            report["failed_at"] = idx
            report["reason"] = "intermediate triple is not a cocycle"
            report["residual"] = r.to_json()
            return report
    if cur != y:
        report["failed_at"] = len(cert.moves)
        report["reason"] = "final triple differs from the target"
        report["residual_h"] = (cur.h - y.h).to_json() if cur.c == y.c and cur.omega == y.omega else None
        return report
    report["passed"] = True
    return report


def structural_cylinder(H, maps: Sequence[MapIntoFreeAbelian]) -> MapIntoFreeAbelian:
    """H o ((c_1, ..., c_m) x 1) for a homotopy H constant in t."""
    c = combine(list(maps), H[0])
    return constant_cylinder(c, c.source, 1)


@dataclass
class GroupLawCertificate:
    law: str
    lhs: DifferentialCocycle
    rhs: DifferentialCocycle
    certificate: EquivalenceCertificate


def group_law_certificates(x: DifferentialCocycle, y: DifferentialCocycle, z: DifferentialCocycle,
                           P: SpectrumPackage, F: FundamentalFamily, T: TransitionFamily,
                           N, coherence: dict) -> List[GroupLawCertificate]:
    """Certificates for associativity, commutativity, unit and inverses."""
    G = coherence_solutions(coherence, P)
    n = x.level
    X = x.space
    h = P.homotopies
    Gn = G[n]
    out = []

    lhs, rhs = add(add(x, y, T), z, T), add(x, add(y, z, T), T)
    g = -pullback_poly([x.c, y.c, z.c], Gn["associative"])
    out.append(GroupLawCertificate("associative", lhs, rhs, EquivalenceCertificate([
        HomotopyMove(structural_cylinder(h["a"], [x.c, y.c, z.c])), CoboundaryMove(g)])))

    lhs, rhs = add(x, y, T), add(y, x, T)
    g = -pullback_poly([y.c, x.c], Gn["commutative"])
    out.append(GroupLawCertificate("commutative", lhs, rhs, EquivalenceCertificate([
        HomotopyMove(structural_cylinder(h["s"], [y.c, x.c])), CoboundaryMove(g)])))

    zero = zero_cocycle(X, P, n)
    lhs, rhs = add(x, zero, T), x
    g = -pullback_poly([x.c], Gn["unit"])
    out.append(GroupLawCertificate("unit", lhs, rhs, EquivalenceCertificate([
        HomotopyMove(structural_cylinder(h["r"], [x.c])), CoboundaryMove(g)])))

    lhs, rhs = add(x, neg(x, N), T), zero
    out.append(GroupLawCertificate("inverse", lhs, rhs, EquivalenceCertificate([
        HomotopyMove(structural_cylinder(h["hinv"], [x.c])), CoboundaryMove(Cochain(X, n - 2))])))
    return out


# -- fixtures ------------------------------------------------------------------------------


def random_cocycle(X: SimplicialSet, P: SpectrumPackage, F: FundamentalFamily, n: int,
                   rng: random.Random, spread: int = 3) -> DifferentialCocycle:
    """(c, c^* iota + delta h, h) with c and h random."""
    c = random_map(X, P.level(n), rng, spread)
    h = Cochain(X, n - 1, {k: rng.randint(-spread, spread) for k in basis(X, n - 1)})
    omega = ch_object(c, F) + coboundary(h)
    return DifferentialCocycle(n, c, omega, h)
