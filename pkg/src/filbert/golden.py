"""Exact arithmetic in Q(sqrt 5)."""
from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering
from numbers import Rational
from typing import Union

Scalar = Union[int, Fraction]

SQRT5 = math.sqrt(5.0)


@total_ordering
class GoldenNumber:
    """The number ``a + b*sqrt(5)`` with rational ``a`` and ``b``."""

    __slots__ = ("a", "b")

    def __init__(self, a: Scalar = 0, b: Scalar = 0) -> None:
        self.a = Fraction(a)
        self.b = Fraction(b)

    @classmethod
    def _coerce(cls, x) -> GoldenNumber:
        if isinstance(x, GoldenNumber):
            return x
        if isinstance(x, Rational):
            return cls(x)
        return NotImplemented

    def __repr__(self) -> str:
        return f"GoldenNumber({self.a!s}, {self.b!s})"

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt5" if self.b > 0 else f"{self.a} - {-self.b}*sqrt5"

    def __hash__(self) -> int:
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b))

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __lt__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() < 0

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def sign(self) -> int:
        """Exact sign of a + b*sqrt5."""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: the larger of a^2 and 5b^2 wins
        diff = self.a * self.a - 5 * self.b * self.b
        return sa if diff > 0 else sb

    def __neg__(self) -> GoldenNumber:
        return GoldenNumber(-self.a, -self.b)

    def __pos__(self) -> GoldenNumber:
        return self

    def __add__(self, other) -> GoldenNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GoldenNumber(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other) -> GoldenNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GoldenNumber(self.a - other.a, self.b - other.b)

    def __rsub__(self, other) -> GoldenNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> GoldenNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        return GoldenNumber(a * c + 5 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def conjugate(self) -> GoldenNumber:
        return GoldenNumber(self.a, -self.b)

    def norm(self) -> Fraction:
        """Field norm a^2 - 5 b^2."""
        return self.a * self.a - 5 * self.b * self.b

    def inverse(self) -> GoldenNumber:
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(sqrt5)")
        n = self.norm()
        return GoldenNumber(self.a / n, -self.b / n)

    def __truediv__(self, other) -> GoldenNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> GoldenNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int) -> GoldenNumber:
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = GoldenNumber(1)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def is_rational(self) -> bool:
        return not self.b

    def is_integer(self) -> bool:
        return not self.b and self.a.denominator == 1

    def __float__(self) -> float:
        return gf_to_float(self)


def gf_add(x: GoldenNumber, y: GoldenNumber) -> GoldenNumber:
    return x + y


def gf_sub(x: GoldenNumber, y: GoldenNumber) -> GoldenNumber:
    return x - y


def gf_mul(x: GoldenNumber, y: GoldenNumber) -> GoldenNumber:
    return x * y


def gf_inv(x: GoldenNumber) -> GoldenNumber:
    return GoldenNumber._coerce(x).inverse()


def gf_to_float(x: GoldenNumber) -> float:
    """Double-precision value of ``a + b*sqrt5``.

    When the two parts have opposite signs the sum is rewritten as
    ``norm / (a - b*sqrt5)`` so that the cancellation happens in exact
    arithmetic. Raises OverflowError if the value is out of float range.
    """
    a, b = x.a, x.b
    if not b:
        return float(a)
    if not a:
        return float(b) * SQRT5
    if (a > 0) == (b > 0):
        return float(a) + float(b) * SQRT5
    # a - b*sqrt5 = a * (1 - (b/a)*sqrt5), both terms of the bracket positive
    ratio = float(b / a)
    return float(x.norm() / a) / (1.0 - ratio * SQRT5)


_ONE = GoldenNumber(1)
_PHI = GoldenNumber(Fraction(1, 2), Fraction(1, 2))
_PHI_HAT = GoldenNumber(Fraction(1, 2), Fraction(-1, 2))
_Q = _PHI_HAT / _PHI
_SQRT5 = GoldenNumber(0, 1)


def phi() -> GoldenNumber:
    """The golden ratio (1 + sqrt5)/2."""
    return _PHI


def phi_hat() -> GoldenNumber:
    """The conjugate (1 - sqrt5)/2."""
    return _PHI_HAT


def q_value() -> GoldenNumber:
    """phi_hat / phi = (sqrt5 - 3)/2, the base of the q-series."""
    return _Q


def sqrt5() -> GoldenNumber:
    return _SQRT5


def binet_fibonacci(n: int) -> int:
    """F_n from (phi^n - phi_hat^n)/sqrt5, evaluated in Q(sqrt5)."""
    if n < 0:
        raise ValueError(f"binet_fibonacci index must be nonnegative, got {n}")
    value = (_PHI**n - _PHI_HAT**n) / _SQRT5
    if not value.is_integer():
        raise ArithmeticError(f"Binet evaluation for n={n} is not an integer: {value!r}")
    return int(value.a)
