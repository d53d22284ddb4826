"""Generalized Hilbert matrices ``(1/(a+i+j))``, the Jacobi polynomials on
]0,1[ that are orthogonal for the moments ``a/(a+n)``, and the binomial
Hankel matrices ``(1/(a*C(a+i+j, a)))``.

``alpha`` may be any positive rational for the Hilbert family; results
are exact ``Fraction`` values and become integers when ``alpha`` is.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .fib_hankel import MomentFunctional
from .poly import Poly


def _as_alpha(alpha):
    """Validate alpha; integral values come back as ``int`` so that the
    integer-alpha paths never leave machine-free integer arithmetic."""
    a = Fraction(alpha)
    if a <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    return a.numerator if a.denominator == 1 else a


def gbinom(r, k: int):
    """Binomial coefficient with rational upper argument: r(r-1)...(r-k+1)/k!.

    Returns an ``int`` when ``r`` is a nonnegative integer.
    """
    if k < 0:
        return 0
    r = Fraction(r)
    if r.denominator == 1 and r >= 0:
        return comb(r.numerator, k)
    num = Fraction(1)
    for i in range(k):
        num *= r - i
    return num / factorial(k)


def hilbert_moment(alpha, n: int) -> Fraction:
    """alpha / (alpha + n)."""
    a = _as_alpha(alpha)
    return Fraction(a) / (a + n)


def hilbert_functional(alpha) -> MomentFunctional:
    a = _as_alpha(alpha)
    return MomentFunctional(lambda n: Fraction(a) / (a + n), label=f"hilbert alpha={a}")


def jacobi01_poly(alpha, n: int) -> Poly:
    """r_n(x) = sum_j (-1)^j C(n, j) C(alpha+n+j-1, n) x^j."""
    a = _as_alpha(alpha)
    return Poly((-1) ** j * comb(n, j) * gbinom(a + n + j - 1, n) for j in range(n + 1))


def jacobi01_shifted_poly(alpha, n: int) -> Poly:
    """r_n(1-x) = sum_k (-1)^(n-k) C(n, k) C(alpha+n+k-1, k) x^k."""
    a = _as_alpha(alpha)
    return Poly((-1) ** (n - k) * comb(n, k) * gbinom(a + n + k - 1, k) for k in range(n + 1))


def hilbert_matrix(alpha, n: int) -> list[list[Fraction]]:
    a = _as_alpha(alpha)
    return [[Fraction(1) / (a + i + j) for j in range(n + 1)] for i in range(n + 1)]


def _check_index(n: int, i: int, j: int) -> None:
    if not (0 <= i <= n and 0 <= j <= n):
        raise ValueError(f"index ({i}, {j}) out of range for order {n + 1}")


def hilbert_inverse_entry(alpha, n: int, i: int, j: int) -> Fraction:
    """Entry (i, j) of the inverse of ``(1/(alpha+i+j))_{0..n}``."""
    a = _as_alpha(alpha)
    _check_index(n, i, j)
    return Fraction(
        (-1) ** (i + j)
        * (a + i + j)
        * gbinom(a + n + i, n - j)
        * gbinom(a + n + j, n - i)
        * gbinom(a + i + j - 1, i)
        * gbinom(a + i + j - 1, j)
    )


def hilbert_kernel_sum_entry(alpha, n: int, i: int, j: int) -> Fraction:
    """Same entry as :func:`hilbert_inverse_entry`, summed degree by degree
    from the kernel polynomial of the Jacobi family."""
    a = _as_alpha(alpha)
    _check_index(n, i, j)
    total = 0
    for k in range(max(i, j), n + 1):
        total += (
            (a + 2 * k)
            * comb(k, i)
            * comb(k, j)
            * gbinom(a + k + i - 1, k)
            * gbinom(a + k + j - 1, k)
        )
    return Fraction((-1) ** (i + j) * total)


def hilbert_inverse_matrix(alpha, n: int) -> list[list[Fraction]]:
    return [[hilbert_inverse_entry(alpha, n, i, j) for j in range(n + 1)] for i in range(n + 1)]


def hilbert_det_closed(alpha, n: int) -> Fraction:
    a = _as_alpha(alpha)
    acc = a
    for k in range(1, n + 1):
        acc *= (a + 2 * k) * gbinom(a + 2 * k - 1, k) ** 2
    return Fraction(1) / acc


def _check_int_alpha(alpha) -> int:
    if not isinstance(alpha, int) or alpha < 1:
        raise ValueError(f"alpha must be a positive integer, got {alpha!r}")
    return alpha


def binom_hankel_matrix(alpha: int, n: int) -> list[list[Fraction]]:
    """``(1/(alpha*C(alpha+i+j, alpha)))``; alpha = 1 is the Hilbert matrix."""
    a = _check_int_alpha(alpha)
    return [[Fraction(1, a * comb(a + i + j, a)) for j in range(n + 1)] for i in range(n + 1)]


def binom_hankel_inverse_entry(alpha: int, n: int, i: int, j: int) -> int:
    a = _check_int_alpha(alpha)
    _check_index(n, i, j)
    total = 0
    for k in range(max(i, j), n + 1):
        total += (
            (a + 2 * k)
            * comb(k, i)
            * comb(k, j)
            * comb(a + k + i - 1, i)
            * comb(a + k + j - 1, j)
        )
    return (-1) ** (i + j) * total


def binom_hankel_inverse_matrix(alpha: int, n: int) -> list[list[int]]:
    return [[binom_hankel_inverse_entry(alpha, n, i, j) for j in range(n + 1)] for i in range(n + 1)]


def shifted_kernel_matrix(alpha, n: int, scaled: bool = True) -> list[list[Fraction]]:
    """Coefficient matrix of K_n(x, y) = sum_k (alpha+2k)/alpha r_k(1-x) r_k(1-y).

    With ``scaled`` the matrix of ``alpha * K_n`` is returned instead.
    """
    a = _as_alpha(alpha)
    out = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    a = Fraction(a)
    for k in range(n + 1):
        r = jacobi01_shifted_poly(a, k)
        w = (a + 2 * k) if scaled else (a + 2 * k) / a
        for i, ci in enumerate(r):
            for j, cj in enumerate(r):
                out[i][j] += w * ci * cj
    return out


def shifted_kernel_integrality_check(alpha: int, n: int) -> bool:
    """True iff alpha*K_n has integer coefficients, and, for alpha = 2,
    K_n itself does too."""
    a = _check_int_alpha(alpha)

    def integral(m):
        return all(Fraction(v).denominator == 1 for row in m for v in row)

    if not integral(shifted_kernel_matrix(a, n, scaled=True)):
        return False
    if a == 2:
        return integral(shifted_kernel_matrix(a, n, scaled=False))
    return True
