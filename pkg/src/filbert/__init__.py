"""Exact inverses and determinants of Filbert, Hilbert and binomial Hankel
matrices, together with the orthogonal polynomials behind them."""
from .fib import fibonacci, fibonomial, fibonomial_by_recursion, fib_product_identity
from .golden import GoldenNumber, binet_fibonacci, phi, phi_hat, q_value
from .poly import Poly
from .fib_hankel import (
    MomentFunctional,
    filbert_det_closed,
    filbert_matrix,
    fib_poly,
    inverse_entry,
    kernel_term,
    moment,
)
from .hilbert import (
    binom_hankel_inverse_entry,
    binom_hankel_matrix,
    hilbert_det_closed,
    hilbert_inverse_entry,
    hilbert_matrix,
    jacobi01_poly,
    jacobi01_shifted_poly,
)
from .linalg import BACKEND, det, invert

__version__ = "0.1.0"
