"""Exact combinatorial scalars.

Everything downstream (sine power sums, mean-square closed forms) is a huge
nested sum of products of factorials, binomials, Bernoulli numbers and the
coefficients that express derivatives of 1/(e^w - 1) as powers of
1/(e^w - 1).  All of it is computed in exact rational arithmetic: the scalar
type is ``fractions.Fraction`` throughout, which already guarantees lowest
terms and a positive denominator.

The tables built here (factorials, Bernoulli numbers, derivative
coefficients) are memoized and never mutated after an entry is published, so
they can be shared freely between concurrent evaluations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "binomial",
    "factorial",
    "bernoulli",
    "deriv_coeff",
    "ChebyshevCoeffs",
    "chebyshev_coeffs",
]


def binomial(n: int, k: int) -> Fraction:
    """C(n, k) as a Fraction; 0 when k < 0 or k > n.

    The out-of-range convention keeps guards out of deeply nested sums.
    """
    if n < 0:
        raise ValueError(f"binomial: n must be >= 0, got {n}")
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(math.comb(n, k))


def factorial(n: int) -> Fraction:
    """n! as a Fraction."""
    if n < 0:
        raise ValueError(f"factorial: n must be >= 0, got {n}")
    return Fraction(math.factorial(n))


_BERNOULLI: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """n-th Bernoulli number, B_1 = -1/2 convention.

    Computed from the recurrence sum_{q=0}^{m} C(m+1, q) B_q = 0 (m >= 1),
    solved upward from B_0 = 1.  Odd indices above 1 are zero.  The sign of
    B_1 matters: the mean-square sums pair B_{q} against alternating binomial
    sums that cancel exactly only in this convention.
    """
    if n < 0:
        raise ValueError(f"bernoulli: n must be >= 0, got {n}")
    while len(_BERNOULLI) <= n:
        m = len(_BERNOULLI)
        # sum_{q=0}^{m} C(m+1, q) B_q = 0  =>  B_m = -sum_{q<m}/C(m+1, m)
        s = sum(
            (binomial(m + 1, q) * _BERNOULLI[q] for q in range(m)),
            Fraction(0),
        )
        _BERNOULLI.append(-s / binomial(m + 1, m))
    return _BERNOULLI[n]


_DERIV_COEFF: dict[tuple[int, int], Fraction] = {}


def deriv_coeff(q: int, j: int) -> Fraction:
    """Coefficient of (e^w - 1)^(-j) in the q-th derivative of 1/(e^w - 1).

    Defined for 1 <= j <= q + 1 as

        sum_{r=0}^{j-1} (-1)^(r+q) C(j-1, r) (j-r)^q,

    which is always an integer.  These coefficients turn power-weighted
    exponential sums over a full period into finite combinations of powers
    of 1/(e^(2*pi*i*m/k) - 1).
    """
    if q < 0:
        raise ValueError(f"deriv_coeff: q must be >= 0, got {q}")
    if j < 1 or j > q + 1:
        raise ValueError(f"deriv_coeff: j must be in [1, {q + 1}], got {j}")
    key = (q, j)
    val = _DERIV_COEFF.get(key)
    if val is None:
        val = sum(
            ((-1) ** (r + q) * binomial(j - 1, r) * Fraction((j - r) ** q) for r in range(j)),
            Fraction(0),
        )
        _DERIV_COEFF[key] = val
    return val


@dataclass(frozen=True)
class ChebyshevCoeffs:
    """Coefficient list of a Chebyshev polynomial, low degree first."""

    kind: str  # "first" | "second"
    degree: int
    coeffs: tuple[Fraction, ...]

    def __call__(self, x):
        """Evaluate at x by Horner's rule (works for float or Fraction)."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def chebyshev_coeffs(kind: str, n: int) -> ChebyshevCoeffs:
    """Coefficients of T_n (kind="first") or U_n (kind="second").

    Built from the explicit factorial representations

        T_n(x) = (n/2) sum_c (-1)^c (n-c-1)!/(c! (n-2c)!) (2x)^(n-2c)
        U_n(x) =       sum_c (-1)^c (n-c)!  /(c! (n-2c)!) (2x)^(n-2c)

    with c up to floor(n/2).  The T formula degenerates at n = 0 (its n/2
    prefactor vanishes), so T_0 = 1 is special-cased.
    """
    if n < 0:
        raise ValueError(f"chebyshev_coeffs: n must be >= 0, got {n}")
    if kind not in ("first", "second"):
        raise ValueError(f"chebyshev_coeffs: kind must be 'first' or 'second', got {kind!r}")
    coeffs = [Fraction(0)] * (n + 1)
    if kind == "first" and n == 0:
        coeffs[0] = Fraction(1)
    else:
        for c in range(n // 2 + 1):
            deg = n - 2 * c
            if kind == "first":
                term = Fraction(n, 2) * (-1) ** c * factorial(n - c - 1) / (factorial(c) * factorial(deg))
            else:
                term = (-1) ** c * factorial(n - c) / (factorial(c) * factorial(deg))
            coeffs[deg] = term * Fraction(2) ** deg
    return ChebyshevCoeffs(kind=kind, degree=n, coeffs=tuple(coeffs))
