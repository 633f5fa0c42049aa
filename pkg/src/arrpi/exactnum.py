"""Exact arithmetic in an imaginary quadratic field Q(sqrt(-d)).

Every number appearing in the geometry pipeline is an element
``re + im*sqrt(-d)`` with rational ``re``, ``im`` and a fixed square-free
``d >= 1``.  Since ``sqrt(-d)`` is purely imaginary, the real part of such a
number is ``re`` and the sign of its imaginary part is the sign of ``im``;
both are therefore decided exactly, with no floating point anywhere.

``d = 1`` gives Q(i); ``d = 3`` contains the primitive cube root of unity
``omega = (-1 + sqrt(-3))/2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DomainError, FieldMismatchError, InputError

Rat = Union[int, Fraction, str]


def _rat(x: Rat) -> Fraction:
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(f"not a rational literal: {x!r}") from exc


def is_square_free(d: int) -> bool:
    if d < 1:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class QuadElem:
    """An element re + im*sqrt(-d), exact."""

    re: Fraction
    im: Fraction
    d: int

    def __post_init__(self):
        if not is_square_free(self.d):
            raise DomainError(f"d = {self.d} must be a square-free positive integer")

    # -- constructors ----------------------------------------------------

    @staticmethod
    def of(re: Rat, im: Rat, d: int) -> "QuadElem":
        return QuadElem(_rat(re), _rat(im), d)

    @staticmethod
    def from_literal(lit, d: int) -> "QuadElem":
        """Parse the file syntax ``[p, q]`` meaning p + q*sqrt(-d).

        p, q are rational strings such as "3/2"; a bare ``p`` abbreviates
        ``[p, 0]``.
        """
        if isinstance(lit, (str, int)):
            return QuadElem.of(lit, 0, d)
        if isinstance(lit, (list, tuple)) and len(lit) == 2:
            return QuadElem.of(lit[0], lit[1], d)
        raise InputError(f"bad number literal {lit!r}; expected [p, q] or p")

    def to_literal(self):
        return [str(self.re), str(self.im)]

    # -- ring operations --------------------------------------------------

    def _check(self, other: "QuadElem") -> None:
        if self.d != other.d:
            raise FieldMismatchError(
                f"cannot combine Q(sqrt(-{self.d})) with Q(sqrt(-{other.d}))"
            )

    def __add__(self, other: "QuadElem") -> "QuadElem":
        self._check(other)
        return QuadElem(self.re + other.re, self.im + other.im, self.d)

    def __sub__(self, other: "QuadElem") -> "QuadElem":
        self._check(other)
        return QuadElem(self.re - other.re, self.im - other.im, self.d)

    def __neg__(self) -> "QuadElem":
        return QuadElem(-self.re, -self.im, self.d)

    def __mul__(self, other: "QuadElem") -> "QuadElem":
        self._check(other)
        # (a + b s)(c + e s) with s^2 = -d
        a, b, c, e = self.re, self.im, other.re, other.im
        return QuadElem(a * c - self.d * b * e, a * e + b * c, self.d)

    def conjugate(self) -> "QuadElem":
        return QuadElem(self.re, -self.im, self.d)

    def norm(self) -> Fraction:
        """|z|^2 = re^2 + d*im^2, a non-negative rational."""
        return self.re * self.re + self.d * self.im * self.im

    def inverse(self) -> "QuadElem":
        n = self.norm()
        if n == 0:
            raise DomainError("division by zero")
        return QuadElem(self.re / n, -self.im / n, self.d)

    def __truediv__(self, other: "QuadElem") -> "QuadElem":
        self._check(other)
        return self * other.inverse()

    def scale(self, r: Rat) -> "QuadElem":
        r = _rat(r)
        return QuadElem(self.re * r, self.im * r, self.d)

    # -- exact sign data ---------------------------------------------------

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    @property
    def re_part(self) -> Fraction:
        """Real part of the complex value (sqrt(-d) is purely imaginary)."""
        return self.re

    def im_sign(self) -> int:
        """Sign of the imaginary part; equals sign(im) because sqrt(d) > 0."""
        if self.im > 0:
            return 1
        if self.im < 0:
            return -1
        return 0

    def is_rational(self) -> bool:
        return self.im == 0

    # -- misc ---------------------------------------------------------------

    def __complex__(self) -> complex:
        import math

        return complex(float(self.re), float(self.im) * math.sqrt(self.d))

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*s{self.d}"
        return f"{self.re}{'+' if self.im > 0 else ''}{self.im}*s{self.d}"


class QuadField:
    """A fixed field Q(sqrt(-d)), acting as an element factory.

    One arrangement file fixes one field; mixing fields is rejected by the
    element operations, keeping every sign comparison decidable.
    """

    def __init__(self, d: int):
        if not is_square_free(d):
            raise DomainError(f"d = {d} must be a square-free positive integer")
        self.d = d

    def __call__(self, re: Rat, im: Rat = 0) -> QuadElem:
        return QuadElem.of(re, im, self.d)

    def zero(self) -> QuadElem:
        return self(0)

    def one(self) -> QuadElem:
        return self(1)

    def root(self) -> QuadElem:
        """sqrt(-d) itself."""
        return self(0, 1)

    def from_literal(self, lit) -> QuadElem:
        return QuadElem.from_literal(lit, self.d)

    def __eq__(self, other) -> bool:
        return isinstance(other, QuadField) and other.d == self.d

    def __repr__(self) -> str:
        return f"QuadField(d={self.d})"


def field_arith(a: QuadElem, b: QuadElem, op: str) -> QuadElem:
    """Named-operation entry point: op in {add, sub, mul, div}."""
    try:
        f = {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}[op]
    except KeyError:
        raise DomainError(f"unknown operation {op!r}") from None
    return f(b)


def re_part(a: QuadElem) -> Fraction:
    return a.re_part


def im_sign(a: QuadElem) -> int:
    return a.im_sign()
