"""Exact complex-rational scalars for the exact matrix backend.

A :class:`GaussianRational` is a complex number whose real and imaginary
parts are arbitrary-precision rationals.  The class is closed under the
field operations, so every inverse computed on the exact backend is exact.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction
from numbers import Rational


class GaussianRational:
    """Complex number with Fraction real/imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    # -- construction -----------------------------------------------------

    @staticmethod
    def coerce(value) -> "GaussianRational":
        """Convert ints, rationals, floats, complex or strings like '1/2-3i'."""
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, Rational):
            return GaussianRational(Fraction(value))
        if isinstance(value, float):
            return GaussianRational(Fraction(value))
        if isinstance(value, complex):
            return GaussianRational(Fraction(value.real), Fraction(value.imag))
        if isinstance(value, str):
            return parse_gaussian(value)
        if isinstance(value, (tuple, list)) and len(value) == 2:
            return GaussianRational(Fraction(value[0]), Fraction(value[1]))
        raise TypeError(f"cannot coerce {value!r} to GaussianRational")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = GaussianRational.coerce(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        den = c * c + d * d
        if den == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational((a * c + b * d) / den, (b * c - a * d) / den)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus, exact."""
        return self.re * self.re + self.im * self.im

    # -- predicates / conversions -------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return _imag_str(self.im)
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{_imag_str(abs(self.im)).lstrip('+')}"


def _imag_str(q: Fraction) -> str:
    if q == 1:
        return "i"
    if q == -1:
        return "-i"
    return f"{q}i"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


_TERM = _re.compile(
    r"""(?P<sign>[+-]?)\s*
        (?:
           (?P<coef>\d+(?:/\d+)?|\d*\.\d+)?\s*(?P<imag>[ij])
          |(?P<real>\d+(?:/\d+)?|\d*\.\d+)
        )\s*""",
    _re.VERBOSE,
)


def parse_gaussian(text: str) -> GaussianRational:
    """Parse 'a+bi' style complex literals with rational or decimal parts.

    Accepts forms like '3', '-1/2', 'i', '-i', '2i', '1/2-3/4i', '0.25+1.5i'.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty complex literal")
    pos = 0
    re_part = Fraction(0)
    im_part = Fraction(0)
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad complex literal {text!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("imag"):
            coef = m.group("coef")
            im_part += sign * (Fraction(coef) if coef else Fraction(1))
        else:
            re_part += sign * Fraction(m.group("real"))
        pos = m.end()
    return GaussianRational(re_part, im_part)
