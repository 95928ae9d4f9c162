"""Exact sparse Gaussian elimination over the rationals.

Vectors are ``dict[int, Fraction]`` with zero entries omitted.  Pivoting is
deterministic: the pivot of a row is its smallest column index.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

Vec = Dict[int, Fraction]


def _axpy(y: Vec, a: Fraction, x: Vec) -> None:
    """y += a * x, in place."""
    for k, v in x.items():
        nv = y.get(k, 0) + a * v
        if nv:
            y[k] = nv
        else:
            y.pop(k, None)


class Echelon:
    """Incrementally maintained reduced row echelon basis.

    Each stored row has a pivot (its minimal column) normalized to 1, and no
    other stored row has a nonzero entry in that column.
    """

    def __init__(self):
        self.rows: Dict[int, Vec] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: Vec) -> Vec:
        v = {k: x for k, x in v.items() if x}
        for p in sorted(k for k in v if k in self.rows):
            c = v.get(p)
            if c:
                _axpy(v, -c, self.rows[p])
        return v

    def add(self, v: Vec) -> Optional[int]:
        """Insert v; return its new pivot column, or None if dependent."""
        r = self.reduce(v)
        if not r:
            return None
        p = min(r)
        inv = 1 / Fraction(r[p])
        r = {k: x * inv for k, x in r.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                _axpy(row, -c, r)
        self.rows[p] = r
        return p

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)


def rank(vectors: Sequence[Vec]) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return len(e)


def solve(columns: Sequence[Vec], target: Vec) -> Optional[Dict[int, Fraction]]:
    """Find x with sum_j x_j * columns[j] == target, or None.

    Free variables are set to zero, so the answer is the canonical particular
    solution for the fixed column order.
    """
    # Echelonize the columns while tracking combinations of the originals.
    rows: Dict[int, Tuple[Vec, Vec]] = {}  # pivot -> (vector, combination)
    for j, col in enumerate(columns):
        v = dict(col)
        comb: Vec = {j: Fraction(1)}
        for p in sorted(k for k in v if k in rows):
            c = v.get(p)
            if c:
                pv, pc = rows[p]
                _axpy(v, -c, pv)
                _axpy(comb, -c, pc)
        if not v:
            continue
        p = min(v)
        inv = 1 / Fraction(v[p])
        v = {k: x * inv for k, x in v.items()}
        comb = {k: x * inv for k, x in comb.items()}
        for q, (qv, qc) in rows.items():
            c = qv.get(p)
            if c:
                _axpy(qv, -c, v)
                _axpy(qc, -c, comb)
        rows[p] = (v, comb)
    t = dict(target)
    x: Vec = {}
    for p in sorted(rows):
        c = t.get(p)
        if c:
            pv, pc = rows[p]
            _axpy(t, -c, pv)
            _axpy(x, c, pc)
    if t:
        return None
    return x


def nullspace(columns: Sequence[Vec], ncols: int = None) -> List[Vec]:
    """Basis of {x : sum_j x_j columns[j] = 0}, one vector per dependent column."""
    rows: Dict[int, Tuple[Vec, Vec]] = {}
    basis: List[Vec] = []
    for j, col in enumerate(columns):
        v = dict(col)
        comb: Vec = {j: Fraction(1)}
        for p in sorted(k for k in v if k in rows):
            c = v.get(p)
            if c:
                pv, pc = rows[p]
                _axpy(v, -c, pv)
                _axpy(comb, -c, pc)
        if not v:
            basis.append(comb)
            continue
        p = min(v)
        inv = 1 / Fraction(v[p])
        v = {k: x * inv for k, x in v.items()}
        comb = {k: x * inv for k, x in comb.items()}
        for q, (qv, qc) in rows.items():
            c = qv.get(p)
            if c:
                _axpy(qv, -c, v)
                _axpy(qc, -c, comb)
        rows[p] = (v, comb)
    return basis


def kernel_of_rows(equations: Sequence[Vec], ncols: int) -> List[Vec]:
    """Basis of {x in Q^ncols : e . x = 0 for every equation e}."""
    e = Echelon()
    for eq in equations:
        e.add(eq)
    pivots = set(e.rows)
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        v: Vec = {f: Fraction(1)}
        for p, row in e.rows.items():
            c = row.get(f)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


def transpose(columns: Sequence[Vec]) -> Dict[int, Vec]:
    rows: Dict[int, Vec] = {}
    for j, col in enumerate(columns):
        for i, v in col.items():
            rows.setdefault(i, {})[j] = v
    return rows
