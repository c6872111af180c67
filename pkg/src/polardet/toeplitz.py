"""Rectangular Toeplitz factors, their Gram matrices and square symbol matrices.

For a polynomial ``f`` the ``n x (n + deg f)`` matrix ``M`` has entries
``M[i, j] = coeff of z^(j-i)``.  Its Gram matrix ``M M*`` coincides with the
Toeplitz matrix of the symbol ``|f|^2``, which is what
:func:`assert_decomposition` checks for weighted sums.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import InvalidArgument
from .gaussian import Number, _canon, format_number, parse_real
from .matrix import GRAM, HERMITIAN, ExactMat, weighted_sum
from .poly import SparsePoly, autocorrelation


class RectToeplitz(ExactMat):
    """``n x (n + deg f)`` banded Toeplitz factor of ``f``."""

    __slots__ = ("n",)

    def __init__(self, f: SparsePoly, n: int):
        if n < 1:
            raise InvalidArgument(f"n must be >= 1, got {n}")
        cols = n + f.degree
        coeffs = f.as_dict()
        super().__init__(
            ([coeffs.get(j - i, 0) for j in range(cols)] for i in range(n)),
            source=f,
        )
        self.n = n

    def entry(self, i: int, j: int) -> Number:
        return self.rows[i][j]

    def __repr__(self):
        return f"RectToeplitz({self.source}, n={self.n})"


def toeplitz_rect(f: SparsePoly, n: int) -> RectToeplitz:
    return RectToeplitz(f, n)


def gram(M: ExactMat) -> ExactMat:
    """Exact ``M M*``; the result carries the factor's provenance."""
    G = M @ M.H()
    src = getattr(M, "source", None)
    prov = (src, M.n_rows) if isinstance(M, RectToeplitz) else src
    return ExactMat(G.rows, tag=GRAM, source=prov)


def _as_weights(ts: Sequence) -> list[Number]:
    out = []
    for t in ts:
        if isinstance(t, str):
            t = parse_real(t)
        elif isinstance(t, float):
            raise InvalidArgument("weights must be exact rationals, not floats")
        t = _canon(Fraction(t))
        if t < 0:
            raise InvalidArgument(f"weight {t} is negative")
        out.append(t)
    return out


def toeplitz_symbol(fs: Sequence[SparsePoly], ts: Sequence, n: int) -> ExactMat:
    """``T(n, psi)`` with ``psi = sum_k t_k |f_k|^2``, built from autocorrelations."""
    if not fs:
        raise InvalidArgument("empty family list")
    if len(fs) != len(ts):
        raise InvalidArgument("fs and ts differ in length")
    if n < 1:
        raise InvalidArgument(f"n must be >= 1, got {n}")
    ws = _as_weights(ts)
    psi: dict[int, Number] = {}
    for f, t in zip(fs, ws):
        for m, v in autocorrelation(f).items():
            psi[m] = psi.get(m, 0) + t * v
    return ExactMat(
        ([psi.get(j - i, 0) for j in range(n)] for i in range(n)), tag=HERMITIAN
    )


@dataclass(frozen=True)
class Discrepancy:
    """First entry where two exact matrices disagree.  Falsy."""

    i: int
    j: int
    lhs: Number
    rhs: Number

    def __bool__(self):
        return False

    def __str__(self):
        return f"({self.i},{self.j}): {format_number(self.lhs)} != {format_number(self.rhs)}"


def assert_decomposition(fs: Sequence[SparsePoly], ts: Sequence, n: int):
    """Check ``T(n, psi) == sum_k t_k gram(toeplitz_rect(f_k, n))`` exactly.

    Returns ``True`` or the first :class:`Discrepancy` (which is falsy).
    """
    T = toeplitz_symbol(fs, ts, n)
    S = weighted_sum(_as_weights(ts), [gram(toeplitz_rect(f, n)) for f in fs])
    for i in range(n):
        for j in range(n):
            if T[i, j] != S[i, j]:
                return Discrepancy(i, j, T[i, j], S[i, j])
    return True


@dataclass
class GramTerm:
    weight: Number
    matrix: ExactMat
    poly: SparsePoly
    n: int


@dataclass
class GramSystem:
    """Ordered weighted Gram matrices ``(t_k, A_k)`` sharing a dimension."""

    terms: list[GramTerm] = field(default_factory=list)

    @classmethod
    def from_polys(cls, fs: Sequence[SparsePoly], ts: Sequence, n: int) -> "GramSystem":
        if len(fs) != len(ts):
            raise InvalidArgument("fs and ts differ in length")
        ws = _as_weights(ts)
        return cls([GramTerm(t, gram(toeplitz_rect(f, n)), f, n) for f, t in zip(fs, ws)])

    @property
    def dimension(self) -> int:
        dims = {t.n for t in self.terms}
        if len(dims) != 1:
            raise InvalidArgument(f"Gram matrices have mixed dimensions {sorted(dims)}")
        return dims.pop()

    @property
    def weights(self) -> list[Number]:
        return [t.weight for t in self.terms]

    @property
    def matrices(self) -> list[ExactMat]:
        return [t.matrix for t in self.terms]

    def total(self) -> ExactMat:
        self.dimension
        S = weighted_sum(self.weights, self.matrices)
        return ExactMat(S.rows, tag=HERMITIAN)

    def require_positive_weight(self):
        if not any(t.weight > 0 for t in self.terms):
            raise InvalidArgument("at least one weight must be positive")
