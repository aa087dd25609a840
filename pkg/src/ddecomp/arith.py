"""Exact rational and Gaussian-rational arithmetic.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator).  Gaussian rationals ``a + b*i`` live in :class:`GaussianRational`.

Polynomial code stores every coefficient in its *canonical* form, see
:func:`canon`: a plain ``int`` when the value is an integer, a ``Fraction``
when it is a non-integral rational, and a ``GaussianRational`` only when the
imaginary part is nonzero.  Keeping integers as ``int`` keeps the hot loops
in native big-integer arithmetic.
"""

import re
from fractions import Fraction
from math import lcm
from numbers import Rational as _RationalABC

from .errors import ParseError

Rational = Fraction

_DECIMAL = re.compile(r"[+-]?(\d+(\.\d*)?|\.\d+)\Z")


def rat_from_decimal(text):
    """Exact value of a decimal literal such as ``"-0.4753"``."""
    s = text.strip()
    if not _DECIMAL.match(s):
        raise ParseError(f"malformed decimal literal {text!r}")
    return Fraction(s)


class GaussianRational:
    """Immutable complex number with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self):
        return GaussianRational(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "-" if self.im < 0 else "+"
        return f"({self.re} {sign} {abs(self.im)}*i)"


I = GaussianRational(0, 1)


def canon(c):
    """Canonical representative of an exact scalar (see module docstring)."""
    if type(c) is int:
        return c
    if isinstance(c, GaussianRational):
        if c.im == 0:
            c = c.re
        else:
            return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, (int, _RationalABC)):
        return canon(Fraction(c))
    raise TypeError(f"not an exact scalar: {c!r}")


def is_real(c):
    return not isinstance(c, GaussianRational)


def real_part(c):
    return canon(c.re) if isinstance(c, GaussianRational) else c


def imag_part(c):
    return canon(c.im) if isinstance(c, GaussianRational) else 0


def conj(c):
    return c.conj() if isinstance(c, GaussianRational) else c


def div(a, b):
    """Exact quotient of two canonical scalars, returned canonical."""
    if isinstance(a, GaussianRational) or isinstance(b, GaussianRational):
        return canon(GaussianRational._coerce(a) / b)
    if b == 0:
        raise ZeroDivisionError("division by zero")
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    return canon(Fraction(a) / b)


def denominator(c):
    """Least positive integer ``m`` with ``m*c`` a (Gaussian) integer."""
    if type(c) is int:
        return 1
    if isinstance(c, Fraction):
        return c.denominator
    return lcm(c.re.denominator, c.im.denominator)


def gauss(re, im=0):
    return canon(GaussianRational(re, im))


def rat_to_str(x):
    """``"num/den"`` rendering used in reports (``"3/1"`` for integers)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"
