"""q-Pochhammer symbols, q-binomials and little q-Jacobi polynomials over Q(sqrt5)."""
from __future__ import annotations

from .golden import GoldenNumber, phi, q_value
from .poly import Poly, substitute_scaled


def q_pochhammer(a: GoldenNumber, q: GoldenNumber, k: int) -> GoldenNumber:
    """(a; q)_k = prod_{j<k} (1 - a q^j)."""
    if k < 0:
        raise ValueError(f"q_pochhammer needs k >= 0, got {k}")
    result = GoldenNumber(1)
    term = GoldenNumber._coerce(a)
    for _ in range(k):
        result = result * (1 - term)
        term = term * q
    return result


def q_binomial(n: int, k: int, q: GoldenNumber) -> GoldenNumber:
    if not 0 <= k <= n:
        raise ValueError(f"q_binomial needs 0 <= k <= n, got ({n}, {k})")
    return q_pochhammer(q, q, n) / (q_pochhammer(q, q, k) * q_pochhammer(q, q, n - k))


def little_q_jacobi_poly(n: int, a: GoldenNumber, b: GoldenNumber, q: GoldenNumber) -> Poly:
    """p_n(x; a, b; q) as the terminating 2phi1(q^-n, ab q^(n+1); aq; q, xq).

    Coefficients are accumulated with a running ratio, one Pochhammer
    factor per step.
    """
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    top1 = q ** (-n)
    top2 = a * b * q ** (n + 1)
    bottom = a * q
    coeffs = [GoldenNumber(1)]
    term = GoldenNumber(1)
    for j in range(n):
        den = (1 - q ** (j + 1)) * (1 - bottom * q**j)
        if not den:
            raise ValueError(f"vanishing Pochhammer denominator at k={j + 1}")
        term = term * (1 - top1 * q**j) * (1 - top2 * q**j) * q / den
        coeffs.append(term)
    return Poly(coeffs)


def fib_poly_q_path(alpha: int, n: int) -> Poly:
    """<alpha+n-1, n>_F * p_n(x*phi; q^(alpha-1), 1; q), built in Q(sqrt5)."""
    from .fib import fibonomial

    q = q_value()
    p = little_q_jacobi_poly(n, q ** (alpha - 1), GoldenNumber(1), q)
    return substitute_scaled(p, phi()) * fibonomial(alpha + n - 1, n)


def q_orthogonality_rhs(alpha: int, n: int) -> GoldenNumber:
    """q^(alpha n) (q;q)_n^2 / ((q^alpha;q)_n^2 (1 - q^(alpha+2n)))."""
    q = q_value()
    num = q ** (alpha * n) * q_pochhammer(q, q, n) ** 2
    den = q_pochhammer(q**alpha, q, n) ** 2 * (1 - q ** (alpha + 2 * n))
    return num / den


def truncated_q_sum(alpha: int, n: int, m: int, K: int) -> GoldenNumber:
    """sum_{k=0..K} p_n(q^k) p_m(q^k) q^(alpha k) for p = p(.; q^(alpha-1), 1; q)."""
    q = q_value()
    a = q ** (alpha - 1)
    pn = little_q_jacobi_poly(n, a, GoldenNumber(1), q)
    pm = pn if m == n else little_q_jacobi_poly(m, a, GoldenNumber(1), q)
    qa = q**alpha
    total = GoldenNumber(0)
    x = GoldenNumber(1)
    w = GoldenNumber(1)
    for _ in range(K + 1):
        total = total + pn(x) * pm(x) * w
        x = x * q
        w = w * qa
    return total
