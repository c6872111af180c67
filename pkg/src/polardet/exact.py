"""Exact linear algebra over the Gaussian integers.

Determinants use fraction-free (Bareiss) elimination, so every intermediate
value is itself a minor of the input and all divisions are exact.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Sequence

from .errors import InvalidArgument, InvalidPairing, KernelError
from .gaussian import Gaussian, Number, _canon, _lcm, denominator, exact_div, field_div, imag
from .matrix import ExactMat, as_exact


def _rows(A) -> list[list[Number]]:
    if isinstance(A, ExactMat):
        return [list(r) for r in A.rows]
    return [list(r) for r in A]


def _bareiss(a: list[list[Number]], pivoting: bool = True) -> tuple[Number, list[Number]]:
    """Eliminate ``a`` in place.

    Returns ``(det, pivots)`` where, without row swaps, ``pivots[k]`` is the
    leading principal minor of order ``k + 1``.
    """
    n = len(a)
    if n == 0:
        return 1, []
    integer = all(type(x) is int for r in a for x in r)
    sign = 1
    prev = 1
    pivots = []
    for k in range(n - 1):
        if a[k][k] == 0:
            if not pivoting:
                raise ZeroDivisionError(f"leading minor of order {k + 1} vanishes")
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0, pivots
        piv = a[k][k]
        pivots.append(piv)
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            if integer:
                # Sylvester's identity guarantees exact quotients
                if prev == 1:
                    ri[k + 1:] = [piv * x - aik * y for x, y in zip(ri[k + 1:], rk[k + 1:])]
                else:
                    ri[k + 1:] = [(piv * x - aik * y) // prev for x, y in zip(ri[k + 1:], rk[k + 1:])]
            else:
                ri[k + 1:] = [exact_div(piv * x - aik * y, prev) for x, y in zip(ri[k + 1:], rk[k + 1:])]
            ri[k] = 0
        prev = piv
    pivots.append(a[n - 1][n - 1])
    return _canon(sign * a[n - 1][n - 1]), pivots


def _scaled_integral(a: list[list[Number]]) -> tuple[list[list[Number]], int]:
    """Clear denominators: returns ``(L*a, L)``."""
    L = 1
    for r in a:
        for x in r:
            d = denominator(x)
            if d != 1:
                L = _lcm(L, d)
    if L == 1:
        return a, 1
    return [[_canon(x * L) for x in r] for r in a], L


def det_exact(A) -> Number:
    """Exact determinant of a square matrix of Gaussian rationals.

    Hermitian input must give a real result; anything else raises
    :class:`KernelError`.
    """
    a = _rows(A)
    n = len(a)
    if any(len(r) != n for r in a):
        raise InvalidArgument(f"det_exact needs a square matrix, got {n}x{len(a[0]) if a else 0}")
    a, L = _scaled_integral(a)
    d, _ = _bareiss(a)
    if L != 1:
        d = field_div(d, L**n)
    hermitian = isinstance(A, ExactMat) and (A.is_hermitian_tagged or A.is_hermitian())
    if hermitian and imag(d) != 0:
        raise KernelError(f"Hermitian determinant has imaginary part {imag(d)}")
    return d


def leading_principal_minors(A) -> list[Number]:
    """``[det A[:1,:1], det A[:2,:2], ...]`` from a single elimination.

    Requires every leading minor to be nonzero (e.g. positive definite input).
    """
    a = _rows(A)
    n = len(a)
    if any(len(r) != n for r in a):
        raise InvalidArgument("leading_principal_minors needs a square matrix")
    a, L = _scaled_integral(a)
    try:
        _, piv = _bareiss(a, pivoting=False)
    except ZeroDivisionError as exc:
        raise InvalidArgument(str(exc)) from None
    if L == 1:
        return [_canon(p) for p in piv]
    return [field_div(p, L ** (k + 1)) for k, p in enumerate(piv)]


def det_cofactor(a: Sequence[Sequence[Number]]) -> Number:
    """Laplace expansion along the first row.  Slow; used as a cross-check."""
    a = [list(r) for r in a]
    n = len(a)
    if n == 0:
        return 1
    if n == 1:
        return a[0][0]
    total = 0
    for j in range(n):
        if a[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in a[1:]]
        term = a[0][j] * det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return _canon(total)


# Maximal minors -----------------------------------------------------------

def minor_count(n_cols: int, n: int) -> int:
    return comb(n_cols, n)


def maximal_minors(M, start: int = 0, stop: int | None = None) -> Iterator[tuple[tuple[int, ...], Number]]:
    """Yield ``(columns, det)`` for every ``n x n`` column submatrix.

    Column subsets come in lexicographic order; ``start``/``stop`` are ranks
    in that order, so disjoint rank intervals can be processed independently.
    """
    M = as_exact(M)
    n, cols = M.shape
    for sel in itertools.islice(itertools.combinations(range(cols), n), start, stop):
        yield sel, det_exact(M.select_columns(sel))


# Interval matrices --------------------------------------------------------

def is_interval_col(M) -> bool:
    """True iff ``M`` is a (0,1) matrix whose 1s form a contiguous run in every column."""
    rows = M.rows if isinstance(M, ExactMat) else [list(r) for r in M]
    if not rows:
        return True
    for j in range(len(rows[0])):
        col = [r[j] for r in rows]
        if any(x != 0 and x != 1 for x in col):
            return False
        ones = [i for i, x in enumerate(col) if x == 1]
        if ones and ones[-1] - ones[0] + 1 != len(ones):
            return False
    return True


@dataclass
class TUReport:
    n: int
    n_cols: int
    counts: dict[int, int] = field(default_factory=dict)
    out_of_range: list[tuple[tuple[int, ...], Number]] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def ok(self) -> bool:
        return not self.out_of_range


def check_tu_minors(M, n: int | None = None, start: int = 0, stop: int | None = None) -> TUReport:
    """Enumerate all maximal minors of an interval matrix and tally their values.

    Every value should be -1, 0 or 1; anything else is collected in
    ``out_of_range``.
    """
    M = as_exact(M)
    if n is not None and n != M.n_rows:
        raise InvalidArgument(f"row count {M.n_rows} does not match n={n}")
    if not is_interval_col(M):
        raise InvalidArgument("check_tu_minors requires an interval (0,1) matrix")
    counts: Counter = Counter()
    bad = []
    for sel, d in maximal_minors(M, start, stop):
        counts[d] += 1
        if d not in (-1, 0, 1):
            bad.append((sel, d))
    return TUReport(M.n_rows, M.n_cols, dict(sorted(counts.items())), bad)


@dataclass(frozen=True)
class Dominance:
    det_s: Number
    det_sp: Number

    @property
    def holds(self) -> bool:
        return abs(self.det_sp) >= abs(self.det_s)

    def __bool__(self):
        return self.holds


def mod2_dominance(S, Sp) -> Dominance:
    """Compare ``|det Sp|`` with ``|det S|`` for ``Sp = S (mod 2)``, S an interval matrix."""
    S, Sp = as_exact(S), as_exact(Sp)
    if not S.is_square or S.shape != Sp.shape:
        raise InvalidPairing(f"need equal square shapes, got {S.shape} and {Sp.shape}")
    if not is_interval_col(S):
        raise InvalidPairing("S must be an interval (0,1) matrix")
    for r, rp in zip(S.rows, Sp.rows):
        for x, y in zip(r, rp):
            if isinstance(y, Gaussian) or not isinstance(y, int) or (x - y) % 2:
                raise InvalidPairing("Sp must be an integer matrix congruent to S mod 2")
    return Dominance(det_exact(S), det_exact(Sp))
