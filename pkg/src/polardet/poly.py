"""Littlewood-type polynomial families, Dirichlet kernels and autocorrelations.

A polynomial is stored sparsely as ``c_0 + c_1 z^{m_1} + ... + c_{N-1} z^{m_{N-1}}``
with ``0 = m_0 < m_1 < ...`` and exact Gaussian-integer coefficients.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import BudgetExceeded, InvalidArgument, InvalidFamily
from .gaussian import (
    Gaussian,
    Number,
    abs2,
    conj,
    format_number,
    gauss,
    is_integral,
    parse_number,
)

LITTLEWOOD = "littlewood"
DIRICHLET = "dirichlet"
GAPPED = "gapped"
FAMILIES = (LITTLEWOOD, DIRICHLET, GAPPED)

#: Default cap on the number of polynomials a single enumeration may yield.
DEFAULT_MAX_INSTANCES = 1 << 24

#: Bumped whenever an enumerator's ordering changes; embedded in reports.
ENUMERATION_ORDER_VERSION = 1


@dataclass(frozen=True)
class SparsePoly:
    support: tuple[int, ...]
    coeffs: tuple[Number, ...]
    family_tag: str = field(default=GAPPED, compare=False)

    def __post_init__(self):
        support = tuple(int(m) for m in self.support)
        coeffs = tuple(self.coeffs)
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "coeffs", coeffs)
        if not support:
            raise InvalidArgument("a polynomial needs at least one term")
        if len(support) != len(coeffs):
            raise InvalidArgument("support and coeffs differ in length")
        if support[0] != 0:
            raise InvalidArgument("constant term must be present (support[0] == 0)")
        if any(b <= a for a, b in zip(support, support[1:])):
            raise InvalidArgument("support must be strictly increasing")
        for c in coeffs:
            if not is_integral(c) or c == 0:
                raise InvalidArgument(f"coefficient {c!r} is not a nonzero Gaussian integer")
        tag = self.family_tag
        if tag not in FAMILIES:
            raise InvalidArgument(f"unknown family tag {tag!r}")
        contiguous = support[-1] == len(support) - 1
        if tag == LITTLEWOOD and not (contiguous and all(c in (1, -1) for c in coeffs)):
            raise InvalidFamily("Littlewood polynomials have contiguous support and +-1 coefficients")
        if tag == DIRICHLET and not (contiguous and all(c == 1 for c in coeffs)):
            raise InvalidFamily("Dirichlet kernels are 1 + z + ... + z^(N-1)")
        # gapped: |c|^2 >= 1 holds automatically for nonzero Gaussian integers

    @property
    def N(self) -> int:
        """Number of terms."""
        return len(self.support)

    @property
    def degree(self) -> int:
        return self.support[-1]

    @property
    def is_contiguous(self) -> bool:
        return self.degree == self.N - 1

    def coeff(self, m: int) -> Number:
        """Coefficient of ``z**m`` (zero off the support)."""
        return self.as_dict().get(m, 0)

    def as_dict(self) -> dict[int, Number]:
        return dict(zip(self.support, self.coeffs))

    def dense(self) -> list[Number]:
        out = [0] * (self.degree + 1)
        for m, c in zip(self.support, self.coeffs):
            out[m] = c
        return out

    def __neg__(self) -> "SparsePoly":
        return SparsePoly(self.support, tuple(-c for c in self.coeffs), GAPPED)

    def __str__(self) -> str:
        return format_poly(self)


def classify(support: Sequence[int], coeffs: Sequence[Number]) -> str:
    """Most specific family tag the data satisfies."""
    contiguous = support[-1] == len(support) - 1
    if contiguous and all(c == 1 for c in coeffs):
        return DIRICHLET
    if contiguous and all(c in (1, -1) for c in coeffs):
        return LITTLEWOOD
    return GAPPED


def dirichlet(N: int) -> SparsePoly:
    """The Dirichlet kernel ``1 + z + ... + z^(N-1)``."""
    if N < 1:
        raise InvalidArgument(f"N must be >= 1, got {N}")
    return SparsePoly(tuple(range(N)), (1,) * N, DIRICHLET)


def littlewood(signs: Sequence[int]) -> SparsePoly:
    """Littlewood polynomial with coefficients ``signs`` (constant term first)."""
    return SparsePoly(tuple(range(len(signs))), tuple(signs), LITTLEWOOD)


def littlewood_count(N: int) -> int:
    if N < 1:
        raise InvalidArgument(f"N must be >= 1, got {N}")
    return 1 << (N - 1)


def littlewood_at(N: int, rank: int) -> SparsePoly:
    """The ``rank``-th polynomial of :func:`enumerate_littlewood`.

    The signs of ``c_1..c_{N-1}`` read as a binary counter with ``c_1`` the
    most significant digit and bit 0 meaning ``+1``.
    """
    if not 0 <= rank < littlewood_count(N):
        raise InvalidArgument(f"rank {rank} out of range for N={N}")
    signs = [1]
    for j in range(1, N):
        bit = (rank >> (N - 1 - j)) & 1
        signs.append(-1 if bit else 1)
    return littlewood(signs)


def _check_budget(count: int, max_instances: int | None):
    cap = DEFAULT_MAX_INSTANCES if max_instances is None else max_instances
    if count > cap:
        raise BudgetExceeded(f"enumeration of {count} instances exceeds budget {cap}")


def enumerate_littlewood(
    N: int,
    start: int = 0,
    stop: int | None = None,
    max_instances: int | None = None,
) -> Iterator[SparsePoly]:
    """All ``2^(N-1)`` Littlewood polynomials with ``c_0 = +1``.

    ``start``/``stop`` select a contiguous rank range so that shards can
    recreate their slice without sharing iterator state.
    """
    total = littlewood_count(N)
    _check_budget(total, max_instances)
    stop = total if stop is None else min(stop, total)
    for signs in itertools.islice(
        itertools.product((1, -1), repeat=N - 1), start, stop
    ):
        yield littlewood((1, *signs))


def _dedupe(coeff_set: Iterable[Number]) -> tuple[Number, ...]:
    out = []
    for c in coeff_set:
        if c not in out:
            out.append(c)
    return tuple(out)


def validate_coeff_set(coeff_set: Iterable[Number]) -> tuple[Number, ...]:
    cs = _dedupe(coeff_set)
    if not cs:
        raise InvalidFamily("empty coefficient set")
    for c in cs:
        if not is_integral(c):
            raise InvalidFamily(f"coefficient {c!r} is not a Gaussian integer")
        if abs2(c) < 1:
            raise InvalidFamily(f"coefficient {c!r} has modulus < 1")
    return cs


def gapped_count(N: int, max_degree: int, coeff_set: Sequence[Number]) -> int:
    if N < 1:
        raise InvalidArgument(f"N must be >= 1, got {N}")
    return comb(max_degree, N - 1) * len(_dedupe(coeff_set)) ** (N - 1)


def enumerate_gapped(
    N: int,
    max_degree: int,
    coeff_set: Iterable[Number],
    start: int = 0,
    stop: int | None = None,
    max_instances: int | None = None,
) -> Iterator[SparsePoly]:
    """Polynomials ``1 + c_1 z^{m_1} + ...`` with ``0 < m_1 < ... <= max_degree``.

    Supports run in lexicographic order; within a support the coefficient
    tuples follow ``itertools.product`` over ``coeff_set`` in the given order.
    """
    cs = validate_coeff_set(coeff_set)
    if N < 1:
        raise InvalidArgument(f"N must be >= 1, got {N}")
    if N - 1 > max_degree:
        raise InvalidArgument(f"cannot place {N} terms below degree {max_degree}")
    total = gapped_count(N, max_degree, cs)
    _check_budget(total, max_instances)
    stop = total if stop is None else min(stop, total)

    def gen():
        for exps in itertools.combinations(range(1, max_degree + 1), N - 1):
            for cc in itertools.product(cs, repeat=N - 1):
                yield SparsePoly((0, *exps), (1, *cc), GAPPED)

    yield from itertools.islice(gen(), start, stop)


def lag_map(support: Sequence[int], coeffs: Sequence[Number]) -> dict[int, Number]:
    """Autocorrelation ``sum_{a-b=m} c_a conj(c_b)`` of arbitrary sparse data."""
    out: dict[int, Number] = {}
    for a, ca in zip(support, coeffs):
        for b, cb in zip(support, coeffs):
            m = a - b
            out[m] = out.get(m, 0) + ca * conj(cb)
    return {m: v for m, v in sorted(out.items()) if v != 0}


def autocorrelation(f: SparsePoly) -> dict[int, Number]:
    """Fourier coefficients of ``|f(e^{i theta})|^2``, keyed by lag.

    Only nonzero lags are returned; ``out[-m] == conj(out[m])`` exactly.
    """
    return lag_map(f.support, f.coeffs)


# Text format ------------------------------------------------------------

def format_poly(f: SparsePoly) -> str:
    """Render as ``1+z-z^3`` or ``1+(2-1i)z^4``; inverse of :func:`parse_poly`."""
    parts = []
    for m, c in zip(f.support, f.coeffs):
        mono = "" if m == 0 else ("z" if m == 1 else f"z^{m}")
        if isinstance(c, Gaussian):
            body = format_number(c) + mono
            sign = "+"
        else:
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = str(mag) if (mag != 1 or not mono) else ""
            body += mono
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += sign + body
    return out


_TERM = re.compile(
    r"""\s*([+-]?)\s*
        (\(\s*-?\d+\s*[+-]\s*\d+\s*i\s*\)|\d+)?\s*
        \*?\s*(z(?:\s*\^\s*(\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_poly(text: str, family_tag: str | None = None) -> SparsePoly:
    """Parse the ``1+z-z^3`` text format.

    Gaussian coefficients are written ``(a+bi)``.  The family tag is inferred
    with :func:`classify` unless given.
    """
    s = text.strip()
    if not s:
        raise InvalidArgument("empty polynomial text")
    terms: dict[int, Number] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or not (m.group(2) or m.group(3)):
            raise InvalidArgument(f"cannot parse polynomial near {s[pos:]!r}")
        if pos > 0 and not m.group(1):
            raise InvalidArgument(f"missing sign before {s[pos:]!r}")
        coeff = parse_number(m.group(2)) if m.group(2) else 1
        if m.group(1) == "-":
            coeff = -coeff
        exp = 0
        if m.group(3):
            exp = int(m.group(4)) if m.group(4) else 1
        terms[exp] = terms.get(exp, 0) + coeff
        pos = m.end()
    items = sorted((e, c) for e, c in terms.items() if c != 0)
    if not items:
        raise InvalidArgument("polynomial is identically zero")
    support = tuple(e for e, _ in items)
    coeffs = tuple(gauss(c) if not isinstance(c, Gaussian) else c for _, c in items)
    tag = family_tag or classify(support, coeffs)
    return SparsePoly(support, coeffs, tag)
