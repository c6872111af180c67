"""Exact Gaussian numbers.

Real values are kept as plain ``int`` or ``Fraction``; a :class:`Gaussian`
instance only appears when the imaginary part is nonzero.  All helpers in
this module accept any of the three so that integer-only matrices (the
Littlewood case) stay on Python's fast ``int`` path.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Union

Real = Union[int, Fraction]
Number = Union[int, Fraction, "Gaussian"]


def _canon(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    if isinstance(x, bool):
        return int(x)
    return x


def gauss(re: Real, im: Real = 0) -> Number:
    """Build a canonical exact number; returns a real when ``im == 0``."""
    re, im = _canon(re), _canon(im)
    if im == 0:
        return re
    return Gaussian(re, im)


def _parts(other):
    if isinstance(other, Gaussian):
        return other.re, other.im
    if isinstance(other, (int, Rational)):
        return other, 0
    return None


class Gaussian:
    """Gaussian rational ``re + im*i`` with nonzero imaginary part.

    Construct through :func:`gauss` to get canonical values.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Real, im: Real):
        self.re = re
        self.im = im

    def __add__(self, other):
        p = _parts(other)
        if p is None:
            return NotImplemented
        return gauss(self.re + p[0], self.im + p[1])

    __radd__ = __add__

    def __sub__(self, other):
        p = _parts(other)
        if p is None:
            return NotImplemented
        return gauss(self.re - p[0], self.im - p[1])

    def __rsub__(self, other):
        p = _parts(other)
        if p is None:
            return NotImplemented
        return gauss(p[0] - self.re, p[1] - self.im)

    def __mul__(self, other):
        if isinstance(other, Gaussian):
            a, b, c, d = self.re, self.im, other.re, other.im
            return gauss(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Rational)):
            return gauss(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        return exact_div(self, other)

    def __rtruediv__(self, other):
        return exact_div(other, self)

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __pos__(self):
        return self

    def __eq__(self, other):
        if isinstance(other, Gaussian):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return False  # canonical Gaussians are never real
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"gauss({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_number(self)

    def conjugate(self):
        return Gaussian(self.re, -self.im)


def real(x: Number) -> Real:
    return x.re if isinstance(x, Gaussian) else x


def imag(x: Number) -> Real:
    return x.im if isinstance(x, Gaussian) else 0


def conj(x: Number) -> Number:
    return Gaussian(x.re, -x.im) if isinstance(x, Gaussian) else x


def abs2(x: Number) -> Real:
    """Exact squared modulus."""
    if isinstance(x, Gaussian):
        return _canon(x.re * x.re + x.im * x.im)
    return x * x


def is_integral(x: Number) -> bool:
    if isinstance(x, Gaussian):
        return isinstance(x.re, int) and isinstance(x.im, int)
    return isinstance(x, int)


def denominator(x: Number) -> int:
    if isinstance(x, Gaussian):
        return _lcm(_den(x.re), _den(x.im))
    return _den(x)


def _den(r: Real) -> int:
    return 1 if isinstance(r, int) else r.denominator


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a // gcd(a, b) * b


def exact_div(a: Number, b: Number) -> Number:
    """Divide exactly; integer operands must divide evenly.

    Raises ``ArithmeticError`` when two Gaussian integers do not divide,
    since callers rely on the quotient staying integral.
    """
    if b == 0:
        raise ZeroDivisionError("exact division by zero")
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"{a} is not divisible by {b}")
        return q
    if not isinstance(a, Gaussian) and not isinstance(b, Gaussian):
        return _canon(Fraction(a) / b)
    # a * conj(b) / |b|^2
    num = a * conj(b)
    d = abs2(b)
    nre, nim = real(num), imag(num)
    if is_integral(a) and is_integral(b):
        if nre % d or nim % d:
            raise ArithmeticError(f"{a} is not divisible by {b}")
        return gauss(nre // d, nim // d)
    return gauss(Fraction(nre) / d, Fraction(nim) / d)


def field_div(a: Number, b: Number) -> Number:
    """``a / b`` in Q(i), no divisibility requirement."""
    if not isinstance(a, Gaussian) and not isinstance(b, Gaussian):
        return _canon(Fraction(a) / b)
    num = a * conj(b)
    d = abs2(b)
    return gauss(Fraction(real(num)) / d, Fraction(imag(num)) / d)


def to_complex(x: Number) -> complex:
    if isinstance(x, Gaussian):
        return complex(x)
    return complex(float(x))


# Text forms -------------------------------------------------------------

def format_real(r: Real) -> str:
    return str(_canon(r))


def format_number(x: Number) -> str:
    """Decimal string: ``5``, ``-3/4`` or ``(a+bi)`` / ``(a-bi)``."""
    if isinstance(x, Gaussian):
        im = x.im
        sign = "-" if im < 0 else "+"
        return f"({format_real(x.re)}{sign}{format_real(abs(im))}i)"
    return format_real(x)


_REAL = r"-?\d+(?:/\d+)?"
_GAUSS_RE = re.compile(rf"^\(\s*({_REAL})\s*([+-])\s*(\d+(?:/\d+)?)\s*i\s*\)$")


def parse_real(s: str) -> Real:
    s = s.strip()
    if not re.fullmatch(_REAL, s):
        raise ValueError(f"not an exact rational: {s!r}")
    return _canon(Fraction(s))


def parse_number(s: str) -> Number:
    """Inverse of :func:`format_number`."""
    s = s.strip()
    m = _GAUSS_RE.match(s)
    if m:
        im = parse_real(m.group(3))
        return gauss(parse_real(m.group(1)), -im if m.group(2) == "-" else im)
    return parse_real(s)


def to_pair(x: Number) -> list[str]:
    """JSON encoding ``["re", "im"]`` with string components."""
    return [format_real(real(x)), format_real(imag(x))]


def from_pair(pair) -> Number:
    if not (isinstance(pair, (list, tuple)) and len(pair) == 2):
        raise ValueError(f"expected a [re, im] pair, got {pair!r}")
    return gauss(parse_real(str(pair[0])), parse_real(str(pair[1])))
