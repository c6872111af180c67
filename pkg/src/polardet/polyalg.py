"""Dense exact polynomial arithmetic over Q(i).

Polynomials are coefficient lists, lowest degree first.  Used for Laurent
products (constant-coefficient integrals) and for exact gcd / squarefree
splitting when isolating zeros on the unit circle.
"""

from __future__ import annotations

from typing import Sequence

from .gaussian import Number, _canon, conj, field_div
from .poly import SparsePoly

Poly = list


def trim(a: Sequence[Number]) -> Poly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a: Sequence[Number]) -> int:
    return len(trim(a)) - 1


def mul(a: Sequence[Number], b: Sequence[Number]) -> Poly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return trim(out)


def sub(a: Sequence[Number], b: Sequence[Number]) -> Poly:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return trim(x - y for x, y in zip(a, b))


def divmod_poly(a: Sequence[Number], b: Sequence[Number]) -> tuple[Poly, Poly]:
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    lead = b[-1]
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = field_div(r[-1], lead)
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] = _canon(r[shift + i] - c * y)
        r = trim(r)
    return trim(q), r


def monic(a: Sequence[Number]) -> Poly:
    a = trim(a)
    if not a:
        return a
    lead = a[-1]
    return [field_div(x, lead) for x in a]


def gcd(a: Sequence[Number], b: Sequence[Number]) -> Poly:
    """Monic gcd (Euclid over Q(i))."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    return monic(a)


def derivative(a: Sequence[Number]) -> Poly:
    return trim(k * c for k, c in enumerate(a) if k > 0)


def reciprocal_conj(a: Sequence[Number]) -> Poly:
    """``z^deg * conj(a(1/conj z))``; shares every unit-circle zero of ``a``."""
    return [conj(c) for c in reversed(trim(a))]


def squarefree(a: Sequence[Number]) -> list[tuple[Poly, int]]:
    """Yun's algorithm: ``a = lead * prod p_i^i`` with squarefree, coprime ``p_i``."""
    a = monic(a)
    if len(a) <= 1:
        return []
    out = []
    da = derivative(a)
    b = gcd(a, da)
    c = divmod_poly(a, b)[0]
    d = sub(divmod_poly(da, b)[0], derivative(c))
    i = 1
    while len(c) > 1:
        p = gcd(c, d)
        c = divmod_poly(c, p)[0]
        d = sub(divmod_poly(d, p)[0], derivative(c))
        if len(p) > 1:
            out.append((p, i))
        i += 1
    return out


def from_sparse(f: SparsePoly) -> Poly:
    return f.dense()


def conj_reflect(f: SparsePoly) -> dict[int, Number]:
    """Laurent coefficients of ``conj(f)(1/z)`` (exponents <= 0)."""
    return {-m: conj(c) for m, c in zip(f.support, f.coeffs)}


def laurent_mul(a: dict[int, Number], b: dict[int, Number]) -> dict[int, Number]:
    out: dict[int, Number] = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v != 0}
