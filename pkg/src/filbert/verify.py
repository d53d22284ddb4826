"""Grid verification of every closed form against exact oracles.

A suite is a list of cells; each cell checks one ``(alpha, n)`` point and
reports pass/fail with a counterexample. Cells are independent and can be
fanned out over worker processes (``FILBERT_THREADS``); results are
sorted before assembly so the report does not depend on scheduling.

``corrupt`` names a closed form to sabotage (off by one). It exists so
tests can confirm that the suites actually detect a wrong formula.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from types import SimpleNamespace

from . import fib, fib_hankel, hilbert, linalg, qseries
from .golden import binet_fibonacci, gf_to_float, phi, q_value
from .poly import Poly

SUITES = ("fib", "hilbert", "qseries", "lemma")
MEASURE_K = 50
QSUM_K = 60
EXTRA_HILBERT_ALPHAS = (Fraction(1, 2), Fraction(5, 3))

CLOSED_FORMS = {
    "inverse_entry": fib_hankel.inverse_entry,
    "kernel_term": fib_hankel.kernel_term,
    "filbert_det_closed": fib_hankel.filbert_det_closed,
    "fib_poly": fib_hankel.fib_poly,
    "orthogonality_norm": fib_hankel.orthogonality_norm,
    "moment": fib_hankel.moment,
    "fibonomial": fib.fibonomial,
    "fib_product_identity": fib.fib_product_identity,
    "fib_poly_q_path": qseries.fib_poly_q_path,
    "q_binomial": qseries.q_binomial,
    "hilbert_inverse_entry": hilbert.hilbert_inverse_entry,
    "hilbert_kernel_sum_entry": hilbert.hilbert_kernel_sum_entry,
    "hilbert_det_closed": hilbert.hilbert_det_closed,
    "jacobi01_poly": hilbert.jacobi01_poly,
    "jacobi01_shifted_poly": hilbert.jacobi01_shifted_poly,
    "binom_hankel_inverse_entry": hilbert.binom_hankel_inverse_entry,
    "shifted_kernel_integrality_check": hilbert.shifted_kernel_integrality_check,
}


def _off_by_one(fn):
    def wrapped(*args):
        value = fn(*args)
        if isinstance(value, bool):
            return not value
        if isinstance(value, Poly):
            return value + Poly([1])
        return value + 1

    return wrapped


def closed_forms(corrupt: str | None = None) -> SimpleNamespace:
    if corrupt is not None and corrupt not in CLOSED_FORMS:
        raise ValueError(f"unknown closed form {corrupt!r}")
    return SimpleNamespace(
        **{name: (_off_by_one(fn) if name == corrupt else fn) for name, fn in CLOSED_FORMS.items()}
    )


@dataclass(order=True)
class CellResult:
    suite: str
    check: str
    key: tuple
    ok: bool = field(compare=False)
    detail: str = field(default="", compare=False)


def _fmt(x) -> str:
    return str(x)


def _mat_str(m) -> list[list[str]]:
    return [[_fmt(v) for v in row] for row in m]


# --- Fibonacci family --------------------------------------------------------


def cell_fib_inverse(alpha, n, f, tol):
    size = n + 1
    closed = [[f.inverse_entry(alpha, n, i, j) for j in range(size)] for i in range(size)]
    H = fib_hankel.filbert_matrix(alpha, n)
    if not linalg.is_identity(linalg.mat_mul(closed, H)):
        return False, "closed-form inverse times matrix is not the identity"
    oracle = linalg.invert(H)
    if oracle != closed:
        return False, f"closed {closed} != oracle {_mat_str(oracle)}"
    return True, ""


def cell_fib_det(alpha, n, f, tol):
    closed = f.filbert_det_closed(alpha, n)
    oracle = linalg.det(fib_hankel.filbert_matrix(alpha, n))
    if closed != oracle:
        return False, f"closed {closed} != oracle {oracle}"
    if (1 / closed).denominator != 1:
        return False, f"1/det = {1 / closed} is not an integer"
    expected_sign = -1 if (alpha * (n * (n + 1) // 2)) % 2 else 1
    if (closed > 0) != (expected_sign > 0):
        return False, f"determinant sign {closed} disagrees with parity rule"
    return True, ""


def cell_fib_telescoping(alpha, n, f, tol):
    for i in range(n + 1):
        for j in range(n + 1):
            lhs = f.inverse_entry(alpha, n, i, j)
            rhs = sum(f.kernel_term(alpha, k, i, j) for k in range(max(i, j), n + 1))
            if lhs != rhs:
                return False, f"(i, j) = ({i}, {j}): closed {lhs} != kernel sum {rhs}"
    return True, ""


def cell_fib_orthogonality(alpha, n, f, tol):
    L = fib_hankel.MomentFunctional(lambda k: f.moment(alpha, k))
    pn = f.fib_poly(alpha, n)
    if pn.degree != n:
        return False, f"p_{n} has degree {pn.degree}"
    for m in range(n + 1):
        got = L(pn, f.fib_poly(alpha, m))
        want = f.orthogonality_norm(alpha, n) if m == n else 0
        if got != want:
            return False, f"L(p_{n} p_{m}) = {got}, expected {want}"
    return True, ""


def cell_fib_measure(alpha, n, f, tol):
    partial = gf_to_float(fib_hankel.measure_partial_moment(alpha, n, MEASURE_K))
    exact = float(f.moment(alpha, n))
    err = abs(partial - exact)
    if not err <= tol:
        return False, f"|partial - moment| = {err!r} > {tol!r}"
    return True, ""


def cell_fibonomial(alpha, n, f, tol):
    for k in range(n + 1):
        a = f.fibonomial(n, k)
        b = fib.fibonomial_by_recursion(n, k)
        if a != b:
            return False, f"<{n},{k}>: product {a} != recursion {b}"
        if a != f.fibonomial(n, n - k):
            return False, f"<{n},{k}> is not symmetric"
    return True, ""


# --- Lemma ---------------------------------------------------------------------


def cell_lemma(alpha, n, f, tol):
    for i in range(n + 1):
        for j in range(n + 1):
            if not f.fib_product_identity(alpha, n, i, j):
                return False, f"identity fails at (i, j) = ({i}, {j})"
    return True, ""


# --- q-series ----------------------------------------------------------------


def cell_q_field(alpha, n, f, tol):
    q, p = q_value(), phi()
    if q * p * p != -1:
        return False, "q * phi^2 != -1"
    if not (-1 < q < 0):
        return False, "q is not in (-1, 0)"
    for k in range(n + 1):
        if binet_fibonacci(k) != fib.fibonacci(k):
            return False, f"Binet value differs at n = {k}"
    return True, ""


def cell_q_bridge(alpha, n, f, tol):
    via_q = f.fib_poly_q_path(alpha, n)
    if not all(c.is_integer() for c in via_q):
        return False, f"q-path polynomial has non-integer coefficients: {via_q}"
    direct = f.fib_poly(alpha, n)
    if via_q != direct:
        return False, f"q-path {[str(c) for c in via_q]} != closed form {list(direct)}"
    return True, ""


def cell_q_binomial(alpha, n, f, tol):
    q, p = q_value(), phi()
    for k in range(n + 1):
        lhs = f.q_binomial(n, k, q)
        rhs = f.fibonomial(n, k) * p ** (k * (k - n))
        if lhs != rhs:
            return False, f"[{n},{k}]_q = {lhs} != {rhs}"
    return True, ""


def cell_q_truncated(alpha, n, f, tol):
    for m in range(n + 1):
        got = fib_hankel.truncated_q_orthogonality(alpha, n, m, QSUM_K)
        want = fib_hankel.truncated_q_orthogonality_expected(alpha, n, m)
        if not abs(got - want) <= tol:
            return False, f"truncated sum for (n, m) = ({n}, {m}) is {got!r}, expected {want!r}"
    return True, ""


# --- Hilbert family ----------------------------------------------------------


def _integral(m) -> bool:
    return all(Fraction(v).denominator == 1 for row in m for v in row)


def cell_hilbert_inverse(alpha, n, f, tol):
    size = n + 1
    closed = [[f.hilbert_inverse_entry(alpha, n, i, j) for j in range(size)] for i in range(size)]
    H = hilbert.hilbert_matrix(alpha, n)
    if not linalg.is_identity(linalg.mat_mul(closed, H)):
        return False, "closed-form inverse times matrix is not the identity"
    if linalg.invert(H) != closed:
        return False, "closed form differs from oracle inverse"
    if Fraction(alpha).denominator == 1 and not _integral(closed):
        return False, "inverse has non-integer entries for integer alpha"
    return True, ""


def cell_hilbert_kernel_sum(alpha, n, f, tol):
    for i in range(n + 1):
        for j in range(n + 1):
            a = f.hilbert_kernel_sum_entry(alpha, n, i, j)
            b = f.hilbert_inverse_entry(alpha, n, i, j)
            if a != b:
                return False, f"(i, j) = ({i}, {j}): kernel sum {a} != closed {b}"
    return True, ""


def cell_hilbert_det(alpha, n, f, tol):
    closed = f.hilbert_det_closed(alpha, n)
    oracle = linalg.det(hilbert.hilbert_matrix(alpha, n))
    if closed != oracle:
        return False, f"closed {closed} != oracle {oracle}"
    return True, ""


def cell_hilbert_orthogonality(alpha, n, f, tol):
    L = hilbert.hilbert_functional(alpha)
    rn = f.jacobi01_poly(alpha, n)
    for m in range(n):
        got = L(rn, f.jacobi01_poly(alpha, m))
        if got != 0:
            return False, f"L(r_{n} r_{m}) = {got}"
    return True, ""


def cell_hilbert_shift(alpha, n, f, tol):
    composed = f.jacobi01_poly(alpha, n).compose(Poly([1, -1]))
    shifted = f.jacobi01_shifted_poly(alpha, n)
    if composed != shifted:
        return False, f"r_n(1-x) = {list(composed)} but shifted formula gives {list(shifted)}"
    return True, ""


def cell_binom_inverse(alpha, n, f, tol):
    size = n + 1
    closed = [
        [f.binom_hankel_inverse_entry(alpha, n, i, j) for j in range(size)] for i in range(size)
    ]
    if not _integral(closed):
        return False, "inverse entries are not integers"
    M = hilbert.binom_hankel_matrix(alpha, n)
    if not linalg.is_identity(linalg.mat_mul(closed, M)):
        return False, "closed-form inverse times matrix is not the identity"
    return True, ""


def cell_binom_kernel(alpha, n, f, tol):
    if not f.shifted_kernel_integrality_check(alpha, n):
        return False, "kernel coefficients are not integers"
    scaled = hilbert.shifted_kernel_matrix(alpha, n, scaled=True)
    closed = [
        [f.binom_hankel_inverse_entry(alpha, n, i, j) for j in range(n + 1)] for i in range(n + 1)
    ]
    if scaled != closed:
        return False, "alpha*K_n coefficients differ from the inverse entries"
    return True, ""


CELLS = {
    "fib.inverse": cell_fib_inverse,
    "fib.determinant": cell_fib_det,
    "fib.telescoping": cell_fib_telescoping,
    "fib.orthogonality": cell_fib_orthogonality,
    "fib.measure_truncation": cell_fib_measure,
    "fib.fibonomial": cell_fibonomial,
    "lemma.identity": cell_lemma,
    "qseries.field": cell_q_field,
    "qseries.polynomial_bridge": cell_q_bridge,
    "qseries.q_binomial": cell_q_binomial,
    "qseries.truncated_orthogonality": cell_q_truncated,
    "hilbert.inverse": cell_hilbert_inverse,
    "hilbert.kernel_sum": cell_hilbert_kernel_sum,
    "hilbert.determinant": cell_hilbert_det,
    "hilbert.orthogonality": cell_hilbert_orthogonality,
    "hilbert.shift": cell_hilbert_shift,
    "binom.inverse": cell_binom_inverse,
    "binom.kernel_integrality": cell_binom_kernel,
}


def plan(suite: str, alpha_max: int, n_max: int) -> list[tuple[str, object, int]]:
    """Cells ``(check, alpha, n)`` making up a suite on the given grid."""
    if alpha_max < 0 or n_max < 0:
        raise ValueError("grid bounds must be nonnegative")
    if suite == "all":
        return [t for s in SUITES for t in plan(s, alpha_max, n_max)]
    alphas = range(1, alpha_max + 1)
    ns = range(n_max + 1)
    out: list[tuple[str, object, int]] = []
    if suite == "fib":
        for check in ("fib.inverse", "fib.determinant", "fib.telescoping",
                      "fib.orthogonality", "fib.measure_truncation"):
            out += [(check, a, n) for a in alphas for n in ns]
        if alpha_max:
            out += [("fib.fibonomial", 0, n) for n in range(alpha_max + 2 * n_max + 1)]
    elif suite == "lemma":
        out += [("lemma.identity", a, n) for a in range(alpha_max + 1) for n in ns]
    elif suite == "qseries":
        if alpha_max:
            out.append(("qseries.field", 0, alpha_max + 2 * n_max))
        out += [("qseries.polynomial_bridge", a, n) for a in alphas for n in ns]
        out += [("qseries.q_binomial", 0, n) for n in (ns if alpha_max else ())]
        out += [("qseries.truncated_orthogonality", a, n) for a in alphas for n in ns]
    elif suite == "hilbert":
        h_alphas = list(alphas) + (list(EXTRA_HILBERT_ALPHAS) if alpha_max else [])
        for check in ("hilbert.inverse", "hilbert.kernel_sum", "hilbert.determinant",
                      "hilbert.orthogonality", "hilbert.shift"):
            out += [(check, a, n) for a in h_alphas for n in ns]
        for check in ("binom.inverse", "binom.kernel_integrality"):
            out += [(check, a, n) for a in alphas for n in ns]
    else:
        raise ValueError(f"unknown suite {suite!r}")
    return out


def _run_cell(args) -> CellResult:
    check, alpha, n, corrupt, tol = args
    f = closed_forms(corrupt)
    try:
        ok, detail = CELLS[check](alpha, n, f, tol)
    except Exception as exc:  # a crash in a closed form is a failed check
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    suite = check.split(".")[0]
    return CellResult(suite, check, (Fraction(alpha), n), ok, detail)


def worker_count() -> int:
    raw = os.environ.get("FILBERT_THREADS", "")
    try:
        return max(1, int(raw)) if raw else 1
    except ValueError:
        return 1


def run(
    suite: str = "all",
    alpha_max: int = 4,
    n_max: int = 8,
    tolerance: float = 1e-10,
    corrupt: str | None = None,
    workers: int | None = None,
) -> dict:
    """Run ``suite`` over the grid and return the report payload."""
    closed_forms(corrupt)  # validate the name up front
    tasks = [(c, a, n, corrupt, tolerance) for c, a, n in plan(suite, alpha_max, n_max)]
    workers = worker_count() if workers is None else workers
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_cell, tasks, chunksize=4))
    else:
        results = [_run_cell(t) for t in tasks]
    results.sort()

    checks: dict[str, dict] = {}
    for r in results:
        entry = checks.setdefault(
            r.check,
            {"name": r.check, "cells": 0, "failed": 0, "first_counterexample": None},
        )
        entry["cells"] += 1
        if not r.ok:
            entry["failed"] += 1
            if entry["first_counterexample"] is None:
                entry["first_counterexample"] = {
                    "alpha": _fmt(r.key[0]),
                    "n": r.key[1],
                    "detail": r.detail,
                }
    for entry in checks.values():
        entry["status"] = "ok" if entry["failed"] == 0 else "mismatch"
    ordered = [checks[k] for k in sorted(checks)]
    passed = all(e["failed"] == 0 for e in ordered)
    return {
        "suite": suite,
        "alpha_max": alpha_max,
        "n_max": n_max,
        "tolerance": repr(tolerance),
        "checks": ordered,
        "total_cells": len(results),
        "failed_cells": sum(e["failed"] for e in ordered),
        "passed": passed,
    }
