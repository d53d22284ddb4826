"""Dense univariate polynomials with exact coefficients.

Coefficients are stored in ascending powers and may be ``int``,
``Fraction`` or :class:`~filbert.golden.GoldenNumber`; all that is needed
is ring arithmetic and truthiness.
"""
from __future__ import annotations

from typing import Any, Iterable, Sequence


def _trim(coeffs: Iterable[Any]) -> tuple:
    c = list(coeffs)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Any] = ()) -> None:
        self.coeffs = _trim(coeffs)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == _trim(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: Poly) -> Poly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + b[i] if i < len(b) else x for i, x in enumerate(a)])

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            return Poly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out: list[Any] = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Poly(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: Poly) -> Poly:
        """``self(inner(x))`` by Horner's scheme."""
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly([c])
        return acc

    def map(self, fn) -> Poly:
        return Poly([fn(c) for c in self.coeffs])


def substitute_scaled(p: Poly, scale) -> Poly:
    """Return ``p(scale * x)``: coefficient k is multiplied by scale**k."""
    out = []
    power = 1
    for c in p.coeffs:
        out.append(c * power)
        power = power * scale
    return Poly(out)


def bivariate_outer(p: Sequence[Any], q: Sequence[Any], weight=1) -> list[list[Any]]:
    """Coefficient matrix of ``weight * p(x) * q(y)``: entry [i][j] multiplies x^i y^j."""
    return [[weight * a * b for b in q] for a in p]
