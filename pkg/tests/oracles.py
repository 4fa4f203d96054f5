"""Independent reference computations used to freeze expected values.

Nothing here imports the package's series or recurrence code.
"""

from __future__ import annotations

import math

import sympy


def t_symbols(max_gon):
    return {k: sympy.Symbol(f"t{k}") for k in range(2, max_gon + 1)}


def truncate_by_faces(expr, ts, max_faces):
    """Drop monomials of total degree > max_faces in the t's."""
    poly = sympy.Poly(sympy.expand(expr), *ts.values())
    keep = [(mon, c) for mon, c in poly.terms() if sum(mon) <= max_faces]
    return {tuple(mon): int(c) for mon, c in keep if c}


def catalan_float_partial(x, levels):
    """sum_{n<=levels} Catalan(n) x^n using math.comb."""
    return sum(math.comb(2 * n, n) // (n + 1) * x**n for n in range(levels + 1))


def bisect_root(f, lo, hi, iters=200):
    flo = f(lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def dense_poly_mul(a, b, max_faces):
    """Multiply dicts keyed by dense exponent tuples (equal length), dropping degree > max_faces."""
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            if sum(e) <= max_faces:
                out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}
