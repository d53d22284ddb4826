"""The Fibonacci family: moments F_a/F_(a+n), the integer orthogonal
polynomials, and closed-form inverses and determinants of the
generalized Filbert matrices ``(1/F_(a+i+j))``.

Everything here stays over Q. The orthonormal polynomials carry a square
root (imaginary for odd ``a*n``) and are never formed; the kernel and
inverse formulas already absorb the squared normalizers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .fib import fibonacci, fibonomial
from .golden import GoldenNumber, gf_to_float, phi, q_value
from .poly import Poly
from .qseries import q_orthogonality_rhs, truncated_q_sum


def _c2(k: int) -> int:
    return k * (k - 1) // 2


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _check_alpha(alpha: int) -> None:
    if not isinstance(alpha, int) or alpha < 1:
        raise ValueError(f"alpha must be a positive integer, got {alpha!r}")


@dataclass
class MomentFunctional:
    """Linear functional on polynomials fixed by its moment sequence.

    ``moment_fn(n)`` supplies the n-th moment; values are cached as they
    are requested.
    """

    moment_fn: Callable[[int], Fraction]
    label: str = ""
    _moments: list = field(default_factory=list, repr=False)

    def moment(self, n: int) -> Fraction:
        while len(self._moments) <= n:
            self._moments.append(self.moment_fn(len(self._moments)))
        return self._moments[n]

    def __call__(self, p: Poly, *more: Poly) -> Fraction:
        for other in more:
            p = p * other
        return apply_functional(self, p)


def apply_functional(L: MomentFunctional, p: Poly) -> Fraction:
    """sum_k c_k * s_k for the coefficients c_k of ``p``."""
    total = Fraction(0)
    for k, c in enumerate(p):
        if c:
            total += c * L.moment(k)
    return total


def moment(alpha: int, n: int) -> Fraction:
    """F_alpha / F_(alpha+n)."""
    _check_alpha(alpha)
    if n < 0:
        raise ValueError(f"moment index must be nonnegative, got {n}")
    return Fraction(fibonacci(alpha), fibonacci(alpha + n))


def fib_functional(alpha: int) -> MomentFunctional:
    _check_alpha(alpha)
    return MomentFunctional(lambda n: moment(alpha, n), label=f"fib alpha={alpha}")


def measure_partial_moment(alpha: int, n: int, K: int) -> GoldenNumber:
    """(1 - q^a) sum_{k<=K} q^(a k) (q^k/phi)^n, exactly.

    Partial sum of the n-th moment of the discrete measure with masses
    proportional to q^(a k) at the points q^k/phi.
    """
    _check_alpha(alpha)
    q = q_value()
    qa = q**alpha
    step = q ** (alpha + n)
    first = phi() ** (-n)
    total = GoldenNumber(0)
    term = first
    for _ in range(K + 1):
        total = total + term
        term = term * step
    return (1 - qa) * total


def fib_poly(alpha: int, n: int) -> Poly:
    """Integer polynomial sum_k (-1)^(kn - C(k,2)) <n,k>_F <a+n+k-1, n>_F x^k."""
    _check_alpha(alpha)
    return Poly(
        _sign(k * n - _c2(k)) * fibonomial(n, k) * fibonomial(alpha + n + k - 1, n)
        for k in range(n + 1)
    )


def orthogonality_norm(alpha: int, n: int) -> Fraction:
    """Predicted L_alpha(p_n^2) = (-1)^(a n) F_a / F_(a+2n)."""
    _check_alpha(alpha)
    return _sign(alpha * n) * Fraction(fibonacci(alpha), fibonacci(alpha + 2 * n))


def kernel_term(alpha: int, k: int, i: int, j: int) -> int:
    """Contribution of degree k to F_alpha times the kernel coefficient of x^i y^j."""
    if k < i or k < j or i < 0 or j < 0:
        raise ValueError(f"kernel_term needs k >= i, j >= 0, got k={k}, i={i}, j={j}")
    F, B = fibonacci, fibonomial
    s = _sign(k * (alpha + i + j) - _c2(i) - _c2(j))
    return (
        s
        * F(alpha + 2 * k)
        * B(k, i)
        * B(k, j)
        * B(alpha + k + i - 1, k)
        * B(alpha + k + j - 1, k)
    )


def inverse_entry(alpha: int, n: int, i: int, j: int) -> int:
    """Entry (i, j) of the inverse of ``(1/F_(alpha+i+j))_{0..n}``."""
    _check_alpha(alpha)
    if not (0 <= i <= n and 0 <= j <= n):
        raise ValueError(f"index ({i}, {j}) out of range for order {n + 1}")
    F, B = fibonacci, fibonomial
    s = _sign(n * (alpha + i + j) - _c2(i) - _c2(j))
    return (
        s
        * F(alpha + i + j)
        * B(alpha + n + i, n - j)
        * B(alpha + n + j, n - i)
        * B(alpha + i + j - 1, i)
        * B(alpha + i + j - 1, j)
    )


def kernel_sum_entry(alpha: int, n: int, i: int, j: int) -> int:
    """sum_{k=max(i,j)..n} kernel_term(alpha, k, i, j); equals inverse_entry."""
    return sum(kernel_term(alpha, k, i, j) for k in range(max(i, j), n + 1))


def inverse_matrix(alpha: int, n: int) -> list[list[int]]:
    return [[inverse_entry(alpha, n, i, j) for j in range(n + 1)] for i in range(n + 1)]


def filbert_matrix(alpha: int, n: int) -> list[list[Fraction]]:
    """``(1/F_(alpha+i+j))`` for 0 <= i, j <= n."""
    _check_alpha(alpha)
    return [[Fraction(1, fibonacci(alpha + i + j)) for j in range(n + 1)] for i in range(n + 1)]


def filbert_det_closed(alpha: int, n: int) -> Fraction:
    _check_alpha(alpha)
    acc = _sign(alpha * (n * (n + 1) // 2)) * fibonacci(alpha)
    for k in range(1, n + 1):
        acc *= fibonacci(alpha + 2 * k) * fibonomial(alpha + 2 * k - 1, k) ** 2
    return Fraction(1, acc)


def truncated_q_orthogonality(alpha: int, n: int, m: int, K: int) -> float:
    """Float value of the exact truncated sum sum_{k<=K} p_n(q^k) p_m(q^k) q^(a k)."""
    _check_alpha(alpha)
    return gf_to_float(truncated_q_sum(alpha, n, m, K))


def truncated_q_orthogonality_expected(alpha: int, n: int, m: int) -> float:
    """Limit of :func:`truncated_q_orthogonality` as K grows."""
    if n != m:
        return 0.0
    return gf_to_float(q_orthogonality_rhs(alpha, n))
