from fractions import Fraction

import pytest

from filbert import linalg
from filbert.fib import fibonacci
from filbert.fib_hankel import (
    MomentFunctional,
    apply_functional,
    fib_functional,
    fib_poly,
    filbert_det_closed,
    filbert_matrix,
    inverse_entry,
    inverse_matrix,
    kernel_sum_entry,
    kernel_term,
    measure_partial_moment,
    moment,
    orthogonality_norm,
    truncated_q_orthogonality,
    truncated_q_orthogonality_expected,
)
from filbert.fib import fibonomial
from filbert.golden import gf_to_float, q_value
from filbert.poly import Poly

q = q_value()


def inverse_2x2(m):
    (a, b), (c, d) = m
    det = a * d - b * c
    return [[d / det, -b / det], [-c / det, a / det]]


@pytest.mark.parametrize("alpha, n, expected", [(2, 0, 1), (2, 2, Fraction(1, 3)), (1, 1, 1), (3, 2, Fraction(2, 5))])
def test_moment(alpha, n, expected):
    assert moment(alpha, n) == expected


def test_moment_domain():
    with pytest.raises(ValueError):
        moment(0, 1)


def test_partial_moment_examples():
    for alpha in (1, 2, 3):
        for K in (0, 3, 10):
            assert measure_partial_moment(alpha, 0, K) == 1 - q ** (alpha * (K + 1))
    assert measure_partial_moment(1, 0, 0) == 1 - q
    assert abs(gf_to_float(measure_partial_moment(2, 1, 50)) - 0.5) < 1e-12


def test_partial_moment_error_bound():
    for alpha in range(1, 5):
        for n in range(9):
            err = abs(gf_to_float(measure_partial_moment(alpha, n, 50)) - float(moment(alpha, n)))
            assert err <= 1e-12


@pytest.mark.parametrize(
    "alpha, n, coeffs",
    [(2, 1, [1, -2]), (2, 0, [1]), (5, 0, [1]), (1, 1, [1, -1]), (2, 2, [2, 6, -15])],
)
def test_fib_poly(alpha, n, coeffs):
    assert fib_poly(alpha, n) == Poly(coeffs)


def test_fib_poly_degree_two_is_orthogonal_by_hand():
    # moments 1, 1/2, 1/3, 1/5 for alpha = 2
    p2 = [2, 6, -15]
    assert 2 + Fraction(6, 2) - Fraction(15, 3) == 0
    prod = [2, 6 - 4, -15 - 12, 30]  # p2 * (1 - 2x)
    assert prod[0] + Fraction(prod[1], 2) + Fraction(prod[2], 3) + Fraction(prod[3], 5) == 0
    assert fib_poly(2, 2) == Poly(p2)


def test_fib_poly_alpha_one_matches_signed_measure_form():
    for n in range(8):
        expected = [
            (-1) ** (k * n - k * (k - 1) // 2) * fibonomial(n, k) * fibonomial(n + k, n)
            for k in range(n + 1)
        ]
        assert fib_poly(1, n) == Poly(expected)


def test_functional_examples():
    L = fib_functional(2)
    assert L(Poly([1])) == 1
    assert L(fib_poly(2, 1), fib_poly(2, 0)) == 0
    assert L(fib_poly(2, 1), fib_poly(2, 1)) == Fraction(1, 3)
    assert apply_functional(L, Poly([0, 0, 3])) == 1


def test_functional_caches_moments():
    calls = []

    def s(n):
        calls.append(n)
        return Fraction(1, n + 1)

    L = MomentFunctional(s)
    L(Poly([1, 1, 1]))
    L(Poly([1, 1, 1]))
    assert calls == [0, 1, 2]


@pytest.mark.parametrize("alpha, n, expected", [(2, 1, Fraction(1, 3)), (4, 0, 1), (1, 1, Fraction(-1, 2))])
def test_orthogonality_norm(alpha, n, expected):
    assert orthogonality_norm(alpha, n) == expected


def test_orthogonality_grid():
    for alpha in range(1, 7):
        L = fib_functional(alpha)
        polys = [fib_poly(alpha, n) for n in range(13)]
        for n, pn in enumerate(polys):
            for m, pm in enumerate(polys):
                want = orthogonality_norm(alpha, n) if n == m else 0
                assert L(pn, pm) == want


@pytest.mark.parametrize("args, expected", [((2, 0, 0, 0), 1), ((2, 1, 1, 1), 12), ((1, 1, 0, 0), -2)])
def test_kernel_term(args, expected):
    assert kernel_term(*args) == expected


def test_kernel_term_domain():
    with pytest.raises(ValueError):
        kernel_term(2, 1, 2, 0)


def test_inverse_small_cases_by_hand():
    assert inverse_matrix(2, 1) == [[4, -6], [-6, 12]]
    assert inverse_2x2(filbert_matrix(2, 1)) == [[4, -6], [-6, 12]]
    assert inverse_matrix(1, 1) == [[-1, 2], [2, -2]]
    assert inverse_2x2(filbert_matrix(1, 1)) == [[-1, 2], [2, -2]]
    for alpha in range(1, 8):
        assert inverse_entry(alpha, 0, 0, 0) == fibonacci(alpha)


def test_inverse_entry_domain():
    with pytest.raises(ValueError):
        inverse_entry(2, 1, 2, 0)
    with pytest.raises(ValueError):
        inverse_entry(0, 1, 0, 0)


def test_filbert_matrix():
    assert filbert_matrix(1, 1) == [[1, 1], [1, Fraction(1, 2)]]
    assert filbert_matrix(2, 0) == [[1]]
    assert filbert_matrix(2, 1) == [[1, Fraction(1, 2)], [Fraction(1, 2), Fraction(1, 3)]]
    m = filbert_matrix(3, 5)
    assert all(m[i][j] == m[i - 1][j + 1] for i in range(1, 6) for j in range(5))


def test_inverse_against_oracle():
    for alpha in range(1, 7):
        for n in range(13):
            closed = inverse_matrix(alpha, n)
            H = filbert_matrix(alpha, n)
            assert linalg.is_identity(linalg.mat_mul(closed, H))
            assert linalg.is_identity(linalg.mat_mul(H, closed))
            assert linalg.invert(H) == closed


def test_telescoping_identity():
    for alpha in range(1, 7):
        for n in range(13):
            for i in range(n + 1):
                for j in range(n + 1):
                    assert inverse_entry(alpha, n, i, j) == kernel_sum_entry(alpha, n, i, j)
                    if n >= 1 and i <= n - 1 and j <= n - 1:
                        step = inverse_entry(alpha, n, i, j) - inverse_entry(alpha, n - 1, i, j)
                        assert step == kernel_term(alpha, n, i, j)


@pytest.mark.parametrize("alpha, n, expected", [(2, 1, Fraction(1, 12)), (1, 1, Fraction(-1, 2)), (3, 0, Fraction(1, 2))])
def test_det_examples(alpha, n, expected):
    assert filbert_det_closed(alpha, n) == expected


def test_det_against_oracle_and_signs():
    for alpha in range(1, 7):
        for n in range(13):
            d = filbert_det_closed(alpha, n)
            assert d == linalg.det(filbert_matrix(alpha, n))
            assert (1 / d).denominator == 1
            if alpha % 2 == 0:
                assert d > 0
            else:
                assert (d > 0) == ((n * (n + 1) // 2) % 2 == 0)


def test_truncated_q_orthogonality_examples():
    assert abs(truncated_q_orthogonality(2, 0, 1, 60)) < 1e-10
    assert abs(truncated_q_orthogonality(2, 0, 0, 60) - 1 / (1 - gf_to_float(q) ** 2)) < 1e-10
    assert abs(truncated_q_orthogonality(1, 1, 1, 60) - truncated_q_orthogonality_expected(1, 1, 1)) < 1e-10


def test_truncated_q_orthogonality_is_not_trivially_small():
    # K = 0 keeps only the point x = 1, far from the limit
    assert abs(truncated_q_orthogonality(1, 1, 1, 0) - truncated_q_orthogonality_expected(1, 1, 1)) > 1e-3
