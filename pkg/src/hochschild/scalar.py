"""Exact arithmetic over the Gaussian rationals Q(i).

A :class:`Scalar` is ``re + im*i`` with ``re`` and ``im`` arbitrary
precision rationals (backed by ``gmpy2.mpq``).  Values are immutable and
always normalized, so ``==`` and ``hash`` are structural.

Text grammar (used by algebra files and the CLI)::

    scalar   := term | term sign term
    term     := rational | rational? 'i'
    rational := '-'? digits ('/' digits)?

Whitespace is ignored.  Only ``i`` is accepted as the imaginary unit.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq

__all__ = [
    "Scalar",
    "ScalarParseError",
    "parse_scalar",
    "format_scalar",
    "ZERO",
    "ONE",
    "I",
    "as_scalar",
]


class ScalarParseError(ValueError):
    """Raised on malformed scalar text; ``pos`` is the offending offset."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


def _to_mpq(x) -> mpq:
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, (int, Rational)) or type(x).__name__ == "mpq":
        return mpq(x)
    if isinstance(x, str):
        return mpq(Fraction(x))
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


class Scalar:
    """Gaussian rational ``re + im*i``."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if type(re) is type(_MPQ0) else _to_mpq(re))
        object.__setattr__(self, "im", im if type(im) is type(_MPQ0) else _to_mpq(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def _make(cls, re, im) -> "Scalar":
        s = object.__new__(cls)
        object.__setattr__(s, "re", re)
        object.__setattr__(s, "im", im)
        return s

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # -- field operations -------------------------------------------------
    def __add__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return Scalar._make(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return Scalar._make(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return Scalar._make(a * c, _MPQ0)
        return Scalar._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __neg__(self) -> "Scalar":
        return Scalar._make(-self.re, -self.im)

    def __pos__(self) -> "Scalar":
        return self

    def inv(self) -> "Scalar":
        a, b = self.re, self.im
        if not b:
            if not a:
                raise ZeroDivisionError("inverse of zero scalar")
            return Scalar._make(1 / a, _MPQ0)
        norm = a * a + b * b
        return Scalar._make(a / norm, -b / norm)

    def __truediv__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        if other.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        if not other.im:
            return Scalar._make(self.re / other.re, self.im / other.re)
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k: int) -> "Scalar":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "Scalar":
        return Scalar._make(self.re, -self.im)

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other) -> bool:
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"Scalar({format_scalar(self)!r})"

    def __str__(self) -> str:
        return format_scalar(self)

    def __reduce__(self):
        return (parse_scalar, (format_scalar(self),))


_MPQ0 = mpq(0)
ZERO = Scalar._make(_MPQ0, _MPQ0)
ONE = Scalar._make(mpq(1), _MPQ0)
I = Scalar._make(_MPQ0, mpq(1))


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, bool):
        return NotImplemented
    if isinstance(x, (int, Fraction)) or type(x) is type(_MPQ0):
        return Scalar._make(_to_mpq(x), _MPQ0)
    if isinstance(x, complex):
        return NotImplemented
    return NotImplemented


def as_scalar(x) -> Scalar:
    """Coerce ints, fractions, strings (scalar grammar) and Scalars."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    s = _coerce(x)
    if s is NotImplemented:
        raise TypeError(f"cannot convert {x!r} to Scalar")
    return s


# -- text format ----------------------------------------------------------

_TERM = re.compile(r"([+-]?)(\d+(?:/\d+)?)?(i?)")


def _parse_rational(body: str, text: str, pos: int) -> mpq:
    if "/" in body:
        num, den = body.split("/")
        if int(den) == 0:
            raise ScalarParseError("zero denominator", text, pos)
        return mpq(int(num), int(den))
    return mpq(int(body))


def parse_scalar(text: str) -> Scalar:
    """Parse ``text`` under the scalar grammar, e.g. ``"1/2-2/3i"``."""
    if not isinstance(text, str):
        raise TypeError("parse_scalar expects a string")
    # map stripped offsets back to the original text for error positions
    offsets = [k for k, ch in enumerate(text) if not ch.isspace()]
    s = "".join(text[k] for k in offsets)

    def where(k: int) -> int:
        return offsets[k] if k < len(offsets) else len(text)

    if not s:
        raise ScalarParseError("empty scalar", text, 0)
    re_part = _MPQ0
    im_part = _MPQ0
    seen_re = seen_im = False
    pos = 0
    nterms = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, body, unit = m.group(1), m.group(2), m.group(3)
        if not body and not unit:
            raise ScalarParseError(f"unexpected character {s[pos]!r}", text, where(pos + len(sign)))
        if nterms == 1 and not sign:
            raise ScalarParseError("expected '+' or '-' between terms", text, where(pos))
        if nterms >= 2:
            raise ScalarParseError("too many terms", text, where(pos))
        value = _parse_rational(body, text, where(pos + len(sign))) if body else mpq(1)
        if sign == "-":
            value = -value
        if unit:
            if seen_im:
                raise ScalarParseError("duplicate imaginary term", text, where(pos))
            im_part, seen_im = value, True
        else:
            if seen_re:
                raise ScalarParseError("duplicate real term", text, where(pos))
            re_part, seen_re = value, True
        pos = m.end()
        nterms += 1
    return Scalar._make(re_part, im_part)


def _fmt_q(q: mpq) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(s: Scalar) -> str:
    """Canonical text: ``"0"``, ``"3/2"``, ``"-1+2i"``, ``"i"``, ``"-1/3i"``."""
    re_, im = s.re, s.im
    if not im:
        return _fmt_q(re_)
    if im == 1:
        im_txt = "i"
    elif im == -1:
        im_txt = "-i"
    else:
        im_txt = _fmt_q(im) + "i"
    if not re_:
        return im_txt
    if im_txt.startswith("-"):
        return _fmt_q(re_) + im_txt
    return _fmt_q(re_) + "+" + im_txt
