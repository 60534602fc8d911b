"""Reciprocal sine power sums over coprime residues.

``sin_sum_exact(n)`` produces the exact Jordan-totient combination equal to

    sum_{1 <= m <= k, gcd(m,k)=1} sin(pi*m/k)^(-n)        (n even)

for every k >= 3 at once.  The engine behind it is an inductive identity:
expanding the principal-character L-value at an even integer two ways and
isolating the top sine power expresses the sum of order n through the sums
of smaller even order, Bernoulli numbers and binomial coefficients.

The induction step is assembled as a Laurent polynomial in k whose
coefficients are Jordan combinations.  The final answer is k-free, so after
collecting terms every nonzero k-power must have an identically zero
coefficient.  That cancellation is *checked*, not assumed: if any nonzero
power survives, ``UncancelledPowerError`` is raised (it would signal an
implementation error, since the published expansions carry no k).

``recip_power_real_sum(n)`` is the shared building block: the coprime-sum of
the real part of (e^(2*pi*i*m/k) - 1)^(-n), reduced to sine power sums via
the explicit Chebyshev representations of cos/sin of multiple angles.
"""

from __future__ import annotations

from fractions import Fraction

from mpmath import mp

from .exact import bernoulli, binomial, deriv_coeff, factorial
from .multiplicative import coprime_residues
from .symbolic import JordanCombo, KLaurent, jc_add, jc_scale

__all__ = [
    "UncancelledPowerError",
    "sin_sum_exact",
    "sin_sum_numeric",
    "recip_power_real_sum",
]


class UncancelledPowerError(RuntimeError):
    """A k-power survived a collection that must be k-free."""


_SIN_MEMO: dict[int, JordanCombo] = {0: {1: Fraction(1)}}
_RECIP_MEMO: dict[tuple[int, int | None], JordanCombo] = {}


def _recip_power_real(n: int, exclude: int | None) -> JordanCombo:
    """Coprime-sum of Re (e^(2*pi*i*m/k) - 1)^(-n) as a Jordan combination.

    Single merged formula for both parities of n: with half = floor(n/2) and
    E = n for even n, 1 for odd n,

        E * sum_c (-1)^(c + ceil(n/2)) (n-c-1)! / (2^(2c+1) c! (2*half-2c)!)
          * sum_d (-1)^d C(half-c, d) * SIN(2*half - 2d)

    Terms whose literal exponent n - 2d equals ``exclude`` are skipped; this
    is how the induction in sin_sum_exact removes the top-order sum it is
    solving for.  (For odd n the literal n - 2d is odd and never matches an
    even ``exclude``, so the skip is vacuous there.)
    """
    if exclude is not None and (exclude > n or (n - exclude) % 2):
        exclude = None
    key = (n, exclude)
    cached = _RECIP_MEMO.get(key)
    if cached is not None:
        return cached
    half = n // 2
    scale = Fraction(n if n % 2 == 0 else 1) * (-1) ** ((n + 1) // 2)
    total: JordanCombo = {}
    for c in range(half + 1):
        coeff_c = (
            scale
            * (-1) ** c
            * factorial(n - c - 1)
            / (Fraction(2) ** (2 * c + 1) * factorial(c) * factorial(2 * half - 2 * c))
        )
        for d in range(half - c + 1):
            if exclude is not None and n - 2 * d == exclude:
                continue
            coeff = coeff_c * (-1) ** d * binomial(half - c, d)
            total = jc_add(total, jc_scale(sin_sum_exact(2 * half - 2 * d), coeff))
    _RECIP_MEMO[key] = total
    return total


def recip_power_real_sum(n: int) -> JordanCombo:
    """Public copy-returning wrapper around the memoized expansion."""
    if n < 1:
        raise ValueError(f"recip_power_real_sum: n must be >= 1, got {n}")
    return dict(_recip_power_real(n, None))


def _recursion_laurent(n: int) -> KLaurent:
    """The induction step for order n, before collecting k-powers.

    Exposed (privately) so tests can check that every nonzero k-exponent
    carries an identically zero coefficient.
    """
    lead = (-1) ** (n // 2 + 1) * Fraction(2) ** n * bernoulli(n) / factorial(n)
    laurent: KLaurent = {0: {n: lead}}
    pref = (-1) ** (n // 2) * Fraction(2) ** n / factorial(n)
    brackets: dict[int, JordanCombo] = {}
    for q in range(n + 1):
        bq = bernoulli(q)
        if not bq:
            continue
        for j in range(1, n - q + 1):
            p = n - q - j
            bracket = brackets.get(p)
            if bracket is None:
                bracket = {}
                for alpha in range(1, p + 2):
                    bracket = jc_add(
                        bracket,
                        jc_scale(_recip_power_real(alpha, exclude=n), deriv_coeff(p, alpha)),
                    )
                brackets[p] = bracket
            coeff = pref * binomial(n, q) * bq * binomial(n - q, j)
            e = q + j - 1
            merged = jc_add(laurent.get(e, {}), jc_scale(bracket, coeff))
            if merged:
                laurent[e] = merged
            else:
                laurent.pop(e, None)
    return laurent


def _compute_sin_sum(n: int) -> JordanCombo:
    laurent = _recursion_laurent(n)
    stray = sorted(e for e in laurent if e != 0)
    if stray:
        raise UncancelledPowerError(
            f"sine power sum of order {n}: k-exponents {stray} survived collection"
        )
    return laurent.get(0, {})


def sin_sum_exact(n: int) -> JordanCombo:
    """Jordan combination of the order-n reciprocal sine sum (n even >= 0).

    The order-0 sum counts coprime residues, i.e. phi(k) = J_1(k).  Higher
    even orders are built bottom-up; the whole table up to n is memoized.
    Odd n is rejected: every consumer here needs even orders only.
    """
    if n < 0:
        raise ValueError(f"sin_sum_exact: n must be >= 0, got {n}")
    if n % 2:
        raise ValueError(f"sin_sum_exact: n must be even, got {n}")
    for m in range(2, n + 1, 2):
        if m not in _SIN_MEMO:
            _SIN_MEMO[m] = _compute_sin_sum(m)
    return dict(_SIN_MEMO[n])


def sin_sum_numeric(n: int, k: int, precision_bits: int = 128):
    """Direct evaluation of sum over coprime m of sin(pi*m/k)^(-n).

    Computed with extended working precision: the summands grow like
    (k/pi)^n, so plain double precision would lose most digits already at
    moderate n.
    """
    if n < 0 or n % 2:
        raise ValueError(f"sin_sum_numeric: n must be even and >= 0, got {n}")
    if k < 3:
        raise ValueError(f"sin_sum_numeric: k must be >= 3, got {k}")
    with mp.workprec(precision_bits + 32):
        total = mp.fsum(mp.sinpi(mp.mpf(m) / k) ** (-n) for m in coprime_residues(k))
    with mp.workprec(precision_bits):
        total = +total
    return total
