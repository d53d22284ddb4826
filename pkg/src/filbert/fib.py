"""Fibonacci numbers and Fibonomial coefficients over Python integers."""
from __future__ import annotations

import threading
from functools import lru_cache


class FibCache:
    """Growable table with ``values[n] == F_n``.

    Appends happen under a lock; readers only ever see a fully extended
    prefix because the list is swapped in atomically.
    """

    def __init__(self) -> None:
        self._values: list[int] = [0, 1]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    def get(self, n: int) -> int:
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            values = list(self._values)
            while len(values) <= n:
                values.append(values[-1] + values[-2])
            self._values = values
        return values[n]


_CACHE = FibCache()


def fibonacci(n: int) -> int:
    """Return F_n with F_0 = 0, F_1 = 1."""
    if n < 0:
        raise ValueError(f"fibonacci index must be nonnegative, got {n}")
    return _CACHE.get(n)


@lru_cache(maxsize=None)
def fibonomial(n: int, k: int) -> int:
    """Fibonomial coefficient: prod_{i=1..k} F_{n-i+1} / F_i.

    Zero outside ``0 <= k <= n``, like the ordinary binomial.
    """
    if n < 0:
        raise ValueError(f"fibonomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    num = 1
    den = 1
    for i in range(1, k + 1):
        num *= fibonacci(n - i + 1)
        den *= fibonacci(i)
    quot, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"fibonomial({n}, {k}) product is not integral")
    return quot


def fibonomial_by_recursion(n: int, k: int) -> int:
    """Same value as :func:`fibonomial`, built row by row from the
    recursion ``<n,k> = F_{k-1} <n-1,k> + F_{n-k+1} <n-1,k-1>``.

    Uses only additions and multiplications, so it doubles as an
    integrality witness for the product formula.
    """
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"fibonomial_by_recursion needs 0 <= k <= n, got ({n}, {k})")
    row = [1] * (min(n, 2) + 1)
    for m in range(3, n + 1):
        new = [1] * (m + 1)
        for j in range(1, m):
            new[j] = fibonacci(j - 1) * row[j] + fibonacci(m - j + 1) * row[j - 1]
        row = new
    return row[k]


def fib_product_identity(alpha: int, n: int, i: int, j: int) -> bool:
    """Check F_{a+2n} F_{a+i+j} == F_{a+n+i} F_{a+n+j} - (-1)^{a+i+j} F_{n-i} F_{n-j}."""
    if alpha < 0 or i < 0 or j < 0 or n < i or n < j:
        raise ValueError(f"need alpha >= 0 and n >= i, j >= 0, got {(alpha, n, i, j)}")
    F = fibonacci
    sign = -1 if (alpha + i + j) % 2 else 1
    lhs = F(alpha + 2 * n) * F(alpha + i + j)
    rhs = F(alpha + n + i) * F(alpha + n + j) - sign * F(n - i) * F(n - j)
    return lhs == rhs
