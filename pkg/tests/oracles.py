"""Independent reference computations used by the tests.

Nothing here imports the code under test beyond plain data access, so a bug in
the library cannot leak into the expected values.
"""

from fractions import Fraction
from itertools import combinations
from math import factorial

import sympy


def product_count(gens_k, gens_l, m, smash=False, base_k=None, base_l=None):
    """Nondegenerate m-simplices of K x L (or K ^ L) from generator dimensions.

    A pair (s_I x, s_J y) is nondegenerate iff I and J are disjoint; with
    |I| = m - p and |J| = m - q there are m! / ((m-p)! (m-q)! (p+q-m)!) such.
    """
    total = 0
    for x, p in gens_k.items():
        for y, q in gens_l.items():
            if smash and (x == base_k or y == base_l):
                continue
            if p > m or q > m or p + q < m:
                continue
            total += factorial(m) // (factorial(m - p) * factorial(m - q) * factorial(p + q - m))
    if smash and m == 0:
        total += 1
    return total


def permutation_sign(perm):
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


def shuffle_oracle(p, q):
    """(p,q)-shuffles as {(a, b): sign} via the explicit permutation.

    The shuffle sends the first p letters to positions S and the last q to the
    complement; its sign is that of the permutation listing S then the rest.
    """
    out = {}
    n = p + q
    for S in combinations(range(n), p):
        rest = [t for t in range(n) if t not in S]
        perm = list(S) + rest
        a = tuple(sum(1 for s in S if s < t) for t in range(n + 1))
        b = tuple(sum(1 for s in rest if s < t) for t in range(n + 1))
        out[(a, b)] = permutation_sign(perm)
    return out


def rational_rank(rows, ncols):
    if not rows or ncols == 0:
        return 0
    M = sympy.Matrix([[sympy.Rational(str(r.get(c, 0))) for c in range(ncols)] for r in rows])
    return M.rank()


def betti_from_boundaries(K, top):
    """Reduced rational Betti numbers of a pointed simplicial set by the rank formula
    b_n = dim C_n - rank d_n - rank d_{n+1}, boundary matrices built from face tables."""
    def cells(n):
        return [g for g in K.generators.get(n, ()) if g != K.basepoint]

    def dmat(n):
        src, tgt = cells(n), cells(n - 1)
        idx = {g: i for i, g in enumerate(tgt)}
        cols = []
        for g in src:
            col = {}
            for i, w in enumerate(K.faces[g]):
                if w.gen == K.basepoint or w.surj[-1] != len(w.surj) - 1:
                    continue
                col[idx[w.gen]] = col.get(idx[w.gen], 0) + (-1) ** i
            cols.append(col)
        if not src or not tgt:
            return 0
        M = sympy.Matrix(len(tgt), len(src), lambda r, c: cols[c].get(r, 0))
        return M.rank()

    return [len(cells(n)) - (dmat(n) if n > 0 else 0) - dmat(n + 1) for n in range(top + 1)]


def expand_transition_oracle(b_expr, x, y):
    """pr1*b + pr2*b - alpha*b for b a polynomial in one variable (sympy)."""
    v = list(b_expr.free_symbols)[0]
    return sympy.expand(b_expr.subs(v, x) + b_expr.subs(v, y) - b_expr.subs(v, x + y))


def transition_oracle_terms(terms):
    """b(x) + b(y) - b(x + y) for b given as {monomial: coefficient}, each monomial a
    tuple of coordinate names.  Returns {(names on x, names on y): coefficient}."""
    names = sorted({v for m in terms for v in m})
    xs = {v: sympy.Symbol(f"x_{i}") for i, v in enumerate(names)}
    ys = {v: sympy.Symbol(f"y_{i}") for i, v in enumerate(names)}

    def b(sub):
        return sum(sympy.Rational(str(c)) * sympy.prod([sub[v] for v in m]) for m, c in terms.items())

    expr = sympy.expand(b(xs) + b(ys) - b({v: xs[v] + ys[v] for v in names}))
    back = {s: ("x", v) for v, s in xs.items()}
    back.update({s: ("y", v) for v, s in ys.items()})
    out = {}
    for mono, c in sympy.Poly(expr, *xs.values(), *ys.values()).terms() if expr != 0 else []:
        gens = list(xs.values()) + list(ys.values())
        key = tuple(sorted(back[g] for g, e in zip(gens, mono) for _ in range(e)))
        out[key] = Fraction(int(c.p), int(c.q))
    return out


def three_cocycle_defects(n, k, a):
    """(w, x, y, z) in (Z/n)^4 where the group coboundary of a: (Z/n)^3 -> Z/k is nonzero."""
    out = set()
    for w in range(n):
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    d = (a(x, y, z) - a((w + x) % n, y, z) + a(w, (x + y) % n, z)
                         - a(w, x, (y + z) % n) + a(w, x, y)) % k
                    if d:
                        out.add((w, x, y, z))
    return out


def abelian_braid_labels(n, k, zeta):
    """Braid of an additive two-group with trivial unitors, read off the interchange:
    c_{A,B} = zeta(0, A, B, 0) - zeta(B, 0, 0, A) in Z/k."""
    return {(A, B): (zeta(0, A, B, 0) - zeta(B, 0, 0, A)) % k for A in range(n) for B in range(n)}


def two_cocycle_defects(n, k, f):
    """(a, b, c) where the group coboundary of f: (Z/n)^2 -> Z/k is nonzero."""
    return {(a, b, c) for a in range(n) for b in range(n) for c in range(n)
            if (f(b, c) - f((a + b) % n, c) + f(a, (b + c) % n) - f(a, b)) % k}
