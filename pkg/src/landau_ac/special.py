"""Terminating special functions used by the eigenfunctions.

All three polynomials are evaluated directly (finite sum or three-term
recurrence) and accept either scalars or numpy arrays for the argument.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

MAX_DEGREE = 170
_EPS = np.finfo(float).eps
# per-element error budget of the float Kummer sum before the exact path is taken
_KUMMER_RTOL = 1e-12


@dataclass(frozen=True)
class PolynomialEval:
    degree: int
    value: float
    terms_summed: int


def _check_degree(n) -> int:
    if isinstance(n, bool) or int(n) != n:
        raise ValueError(f"degree must be an integer, got {n!r}")
    n = int(n)
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    if n > MAX_DEGREE:
        raise ValueError(f"degree {n} exceeds the supported maximum {MAX_DEGREE}")
    return n


def _scalar_or_array(x, like):
    return float(x) if np.ndim(like) == 0 else x


def kummer_terms(n: int, b: float, tau):
    """Terms ``(-n)_j / (b)_j * tau**j / j!`` for ``j = 0..n`` stacked on axis 0."""
    tau = np.asarray(tau, dtype=float)
    terms = np.empty((n + 1,) + tau.shape)
    term = np.ones_like(tau)
    terms[0] = term
    for j in range(n):
        term = term * ((j - n) / ((b + j) * (j + 1))) * tau
        terms[j + 1] = term
    return terms


def _kummer_exact(n: int, b: float, tau: float) -> float:
    b_q = Fraction(b)
    t_q = Fraction(tau)
    term = Fraction(1)
    total = Fraction(1)
    for j in range(n):
        term = term * (j - n) * t_q / ((b_q + j) * (j + 1))
        total += term
    return float(total)


def kummer_terminating(n: int, b: float, tau):
    """Confluent hypergeometric ``1F1(-n; b; tau)`` for integer ``n >= 0``.

    The series stops after ``n + 1`` terms.  Each term is obtained from the
    previous one by the Pochhammer ratio, so no factorial is ever formed.
    Where the alternating sum cancels badly (large ``tau``) the element is
    recomputed in exact rational arithmetic from the same recurrence.
    """
    n = _check_degree(n)
    if not b > 0:
        raise ValueError(f"b must be positive, got {b!r}")
    tau_arr = np.asarray(tau, dtype=float)
    if np.any(tau_arr < 0):
        raise ValueError("tau must be non-negative")

    terms = kummer_terms(n, b, tau_arr)
    value = terms.sum(axis=0)
    # term j carries at most 5j roundings; summation adds up to n more
    weights = (5 * np.arange(n + 1) + n + 1).reshape((-1,) + (1,) * tau_arr.ndim)
    err = _EPS * (weights * np.abs(terms)).sum(axis=0)
    bad = err > _KUMMER_RTOL * np.maximum(1.0, np.abs(value))
    if np.any(bad):
        value = np.array(value, dtype=float, copy=True)
        flat_val = value.reshape(-1)
        flat_tau = tau_arr.reshape(-1)
        for i in np.flatnonzero(bad.reshape(-1)):
            flat_val[i] = _kummer_exact(n, b, float(flat_tau[i]))
    return _scalar_or_array(value, tau)


def kummer_eval(n: int, b: float, tau: float) -> PolynomialEval:
    return PolynomialEval(degree=n, value=kummer_terminating(n, b, tau), terms_summed=n + 1)


def kummer_coefficients(n: int, b: float) -> np.ndarray:
    """Power-series coefficients of ``1F1(-n; b; tau)`` in ascending order."""
    n = _check_degree(n)
    coeffs = np.empty(n + 1)
    c = 1.0
    coeffs[0] = c
    for j in range(n):
        c *= (j - n) / ((b + j) * (j + 1))
        coeffs[j + 1] = c
    return coeffs


def hermite(n: int, x):
    """Physicists' Hermite polynomial ``H_n(x)`` by upward recurrence."""
    n = _check_degree(n)
    x_arr = np.asarray(x, dtype=float)
    h_prev = np.ones_like(x_arr)
    if n == 0:
        return _scalar_or_array(h_prev, x)
    h = 2.0 * x_arr
    for m in range(1, n):
        h_prev, h = h, 2.0 * x_arr * h - 2.0 * m * h_prev
    return _scalar_or_array(h, x)


def hermite_coefficients(n: int) -> list[int]:
    """Integer coefficients of ``H_n`` in ascending powers."""
    n = _check_degree(n)
    prev, cur = [1], [0, 2]
    if n == 0:
        return prev
    for m in range(1, n):
        nxt = [0] * (m + 2)
        for i, c in enumerate(cur):
            nxt[i + 1] += 2 * c
        for i, c in enumerate(prev):
            nxt[i] -= 2 * m * c
        prev, cur = cur, nxt
    return cur


def laguerre_general(n: int, alpha: float, x):
    """Generalized Laguerre polynomial ``L_n^alpha(x)`` by upward recurrence."""
    n = _check_degree(n)
    if not alpha > -1:
        raise ValueError(f"alpha must exceed -1, got {alpha!r}")
    x_arr = np.asarray(x, dtype=float)
    l_prev = np.ones_like(x_arr)
    if n == 0:
        return _scalar_or_array(l_prev, x)
    l_cur = 1.0 + alpha - x_arr
    for m in range(1, n):
        l_prev, l_cur = l_cur, ((2 * m + 1 + alpha - x_arr) * l_cur - (m + alpha) * l_prev) / (m + 1)
    return _scalar_or_array(l_cur, x)


def binomial(top: float, k: int) -> float:
    """Generalized binomial coefficient ``C(top, k)`` for real ``top``."""
    if float(top).is_integer() and top >= 0:
        return float(math.comb(int(top), k))
    out = 1.0
    for i in range(k):
        out *= (top - i) / (i + 1)
    return out
