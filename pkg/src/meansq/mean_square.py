"""Builders for the parity-restricted mean-square closed forms.

The mean square of L(r, chi) over characters of matching parity reduces to
nested Bernoulli/binomial sums whose innermost objects are coprime-residue
sums of real parts of powers of 1/(e^(2*pi*i*m/k) - 1); those are Jordan
combinations (module ``sine_sums``), and the k-powers produced along the way
are tracked exactly in ``KLaurent`` values.

Three blocks appear per parity:

* ``sigma0`` / ``sigma0_prime`` -- the single-exponential block.  It
  collapses to phi(k)/2 for r = 1 and vanishes identically for larger r;
  the vanishing falls out of the exact Bernoulli cancellation, the builders
  just do the arithmetic.
* ``sigma1`` / ``sigma1_prime`` -- the block produced by reflecting the
  conjugate exponential sum, with its extra alternating binomial layer.
* ``sigma2`` / ``sigma2_prime`` -- the direct product block.

``sigma1(h) = -sigma2(h)`` and ``sigma1_prime(h) = sigma2_prime(h)`` hold
exactly; the test suite checks both since the final formulas rely on them.

All builders are memoized per h and pure; every returned value is a fresh
copy, so published table entries are never exposed to mutation.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import bernoulli, binomial, deriv_coeff, factorial
from .sine_sums import _recip_power_real
from .symbolic import ClosedForm, JordanCombo, KLaurent, evaluate_laurent, kl_shift

__all__ = [
    "exp_product_real",
    "power_sum_real",
    "sigma0",
    "sigma1",
    "sigma2",
    "sigma0_prime",
    "sigma1_prime",
    "sigma2_prime",
    "mean_square_odd",
    "mean_square_even",
    "l_principal_closed_form",
    "realjs_rhs_exact",
]


# ---------------------------------------------------------------------------
# In-place accumulation helpers (results are handed out as copies only)
# ---------------------------------------------------------------------------

def _jc_iadd(dst: dict, combo: JordanCombo, coeff: Fraction) -> None:
    if not coeff:
        return
    for s, c in combo.items():
        v = dst.get(s, 0) + c * coeff
        if v:
            dst[s] = v
        else:
            dst.pop(s, None)


def _kl_iadd(dst: dict, e: int, combo: JordanCombo, coeff: Fraction) -> None:
    cell = dst.setdefault(e, {})
    _jc_iadd(cell, combo, coeff)
    if not cell:
        del dst[e]


def _kl_copy(laurent: KLaurent) -> KLaurent:
    return {e: dict(combo) for e, combo in laurent.items()}


# ---------------------------------------------------------------------------
# Exponential-sum primitives (exact, as KLaurent)
# ---------------------------------------------------------------------------

_PRODUCT_MEMO: dict[tuple[int, int], KLaurent] = {}
_POWER_SUM_MEMO: dict[int, KLaurent] = {}


def _exp_product(p: int, q: int) -> KLaurent:
    """Coprime-sum of Re[(sum_j j^p e^(2*pi*i*m*j/k)) (sum_s s^q e^(2*pi*i*m*s/k))].

    Expanding each inner sum through the derivative coefficients of
    1/(e^w - 1) and taking real parts gives

        sum_{j=1}^{p} sum_{s=1}^{q} C(p,j) C(q,s) k^(j+s)
          sum_{alpha=1}^{p-j+1} sum_{beta=1}^{q-s+1}
            A(p-j, alpha) A(q-s, beta) * R(alpha+beta)

    with R(n) the Jordan combination from ``sine_sums``.  Symmetric in
    (p, q); memoized under the sorted key.
    """
    key = (p, q) if p <= q else (q, p)
    cached = _PRODUCT_MEMO.get(key)
    if cached is not None:
        return cached
    p, q = key
    out: KLaurent = {}
    for j in range(1, p + 1):
        cpj = binomial(p, j)
        for alpha in range(1, p - j + 2):
            wa = cpj * deriv_coeff(p - j, alpha)
            for s in range(1, q + 1):
                cqs = binomial(q, s)
                e = j + s
                for beta in range(1, q - s + 2):
                    coeff = wa * cqs * deriv_coeff(q - s, beta)
                    _kl_iadd(out, e, _recip_power_real(alpha + beta, None), coeff)
    _PRODUCT_MEMO[key] = out
    return out


def exp_product_real(p: int, q: int) -> KLaurent:
    """Public copy-returning wrapper around the memoized product sum."""
    if p < 1 or q < 1:
        raise ValueError(f"exp_product_real: p, q must be >= 1, got ({p}, {q})")
    return _kl_copy(_exp_product(p, q))


def _power_sum_real(p: int) -> KLaurent:
    """Coprime-sum of sum_{j=1}^{k-1} j^p e^(2*pi*i*m*j/k) (real by pairing)."""
    cached = _POWER_SUM_MEMO.get(p)
    if cached is not None:
        return cached
    out: KLaurent = {}
    for j in range(1, p + 1):
        cpj = binomial(p, j)
        for alpha in range(1, p - j + 2):
            _kl_iadd(out, j, _recip_power_real(alpha, None), cpj * deriv_coeff(p - j, alpha))
    _POWER_SUM_MEMO[p] = out
    return out


def power_sum_real(p: int) -> KLaurent:
    if p < 1:
        raise ValueError(f"power_sum_real: p must be >= 1, got {p}")
    return _kl_copy(_power_sum_real(p))


def realjs_rhs_exact(p: int, q: int, k: int) -> Fraction:
    """Exact value at k of the closed form of the paired double sum."""
    if p < 1 or q < 1:
        raise ValueError(f"realjs_rhs_exact: p, q must be >= 1, got ({p}, {q})")
    if k < 3:
        raise ValueError(f"realjs_rhs_exact: k must be >= 3, got {k}")
    return evaluate_laurent(_exp_product(p, q), k)


# ---------------------------------------------------------------------------
# Odd case (r = 2h + 1): sigma blocks
# ---------------------------------------------------------------------------

_SIGMA_MEMO: dict[tuple[str, int], KLaurent] = {}


def _memo_sigma(name: str, h: int, build) -> KLaurent:
    key = (name, h)
    cached = _SIGMA_MEMO.get(key)
    if cached is None:
        cached = _SIGMA_MEMO[key] = build()
    return _kl_copy(cached)


def sigma2(h: int) -> KLaurent:
    """Direct product block of the odd case, exact in k.

    sum over q1, q2 in [0, 2h] of B_{q1} B_{q2} C(2h+1, q1) C(2h+1, q2)
    k^(q1+q2-4h-2) times the (2h+1-q1, 2h+1-q2) product sum.
    """
    if h < 1:
        raise ValueError(f"sigma2: h must be >= 1, got {h}")

    def build() -> KLaurent:
        r = 2 * h + 1
        out: KLaurent = {}
        for q1 in range(2 * h + 1):
            b1 = bernoulli(q1)
            if not b1:
                continue
            w1 = b1 * binomial(r, q1)
            for q2 in range(2 * h + 1):
                b2 = bernoulli(q2)
                if not b2:
                    continue
                coeff = w1 * b2 * binomial(r, q2)
                shift = q1 + q2 - 4 * h - 2
                for e, combo in _exp_product(r - q1, r - q2).items():
                    _kl_iadd(out, e + shift, combo, coeff)
        return out

    return _memo_sigma("sigma2", h, build)


def sigma1(h: int) -> KLaurent:
    """Reflected block of the odd case, with its alternating a-layer."""
    if h < 1:
        raise ValueError(f"sigma1: h must be >= 1, got {h}")

    def build() -> KLaurent:
        r = 2 * h + 1
        out: KLaurent = {}
        for q1 in range(2 * h + 1):
            b1 = bernoulli(q1)
            if not b1:
                continue
            w1 = b1 * binomial(r, q1)
            for q2 in range(2 * h + 1):
                b2 = bernoulli(q2)
                if not b2:
                    continue
                w2 = w1 * b2 * binomial(r, q2)
                for a in range(2 * h - q2 + 1):
                    coeff = w2 * (-1) ** (r - q2 - a) * binomial(r - q2, a)
                    shift = a + q1 + q2 - 4 * h - 2
                    for e, combo in _exp_product(r - q1, r - q2 - a).items():
                        _kl_iadd(out, e + shift, combo, coeff)
        return out

    return _memo_sigma("sigma1", h, build)


def sigma0(h: int) -> KLaurent:
    """Single-exponential block of the odd case.

    Equals {1: 1/2} (i.e. phi(k)/2) for h = 0 and the empty Laurent for
    h >= 1: the inner Bernoulli-binomial sum over q2 is exactly zero then.
    """
    if h < 0:
        raise ValueError(f"sigma0: h must be >= 0, got {h}")
    def build() -> KLaurent:
        r = 2 * h + 1
        out: KLaurent = {}
        for q1 in range(2 * h + 1):
            b1 = bernoulli(q1)
            if not b1:
                continue
            w1 = b1 * binomial(r, q1)
            for q2 in range(2 * h + 1):
                b2 = bernoulli(q2)
                if not b2:
                    continue
                coeff = -w1 * b2 * binomial(r, q2)
                shift = q1 - 2 * h - 1
                for e, combo in _power_sum_real(r - q1).items():
                    _kl_iadd(out, e + shift, combo, coeff)
        return out

    return _memo_sigma("sigma0", h, build)


# ---------------------------------------------------------------------------
# Even case (r = 2h, h >= 2): primed sigma blocks
# ---------------------------------------------------------------------------

def sigma2_prime(h: int) -> KLaurent:
    """Direct product block of the even case (q1, q2 stop at 2h - 2)."""
    if h < 2:
        raise ValueError(f"sigma2_prime: h must be >= 2, got {h}")

    def build() -> KLaurent:
        r = 2 * h
        out: KLaurent = {}
        for q1 in range(2 * h - 1):
            b1 = bernoulli(q1)
            if not b1:
                continue
            w1 = b1 * binomial(r, q1)
            for q2 in range(2 * h - 1):
                b2 = bernoulli(q2)
                if not b2:
                    continue
                coeff = w1 * b2 * binomial(r, q2)
                shift = q1 + q2 - 4 * h
                for e, combo in _exp_product(r - q1, r - q2).items():
                    _kl_iadd(out, e + shift, combo, coeff)
        return out

    return _memo_sigma("sigma2p", h, build)


def sigma1_prime(h: int) -> KLaurent:
    """Reflected block of the even case."""
    if h < 2:
        raise ValueError(f"sigma1_prime: h must be >= 2, got {h}")

    def build() -> KLaurent:
        r = 2 * h
        out: KLaurent = {}
        for q1 in range(2 * h - 1):
            b1 = bernoulli(q1)
            if not b1:
                continue
            w1 = b1 * binomial(r, q1)
            for q2 in range(2 * h - 1):
                b2 = bernoulli(q2)
                if not b2:
                    continue
                w2 = w1 * b2 * binomial(r, q2)
                for a in range(2 * h - q2):
                    coeff = w2 * (-1) ** (r - q2 - a) * binomial(r - q2, a)
                    shift = a + q1 + q2 - 4 * h
                    for e, combo in _exp_product(r - q1, r - q2 - a).items():
                        _kl_iadd(out, e + shift, combo, coeff)
        return out

    return _memo_sigma("sigma1p", h, build)


def sigma0_prime(h: int) -> KLaurent:
    """Single-exponential block of the even case; empty for every h >= 2."""
    if h < 2:
        raise ValueError(f"sigma0_prime: h must be >= 2, got {h}")

    def build() -> KLaurent:
        r = 2 * h
        out: KLaurent = {}
        for q1 in range(2 * h - 1):
            b1 = bernoulli(q1)
            if not b1:
                continue
            w1 = b1 * binomial(r, q1)
            for q2 in range(2 * h - 1):
                b2 = bernoulli(q2)
                if not b2:
                    continue
                coeff = -w1 * b2 * binomial(r, q2)
                shift = q1 - 2 * h
                for e, combo in _power_sum_real(r - q1).items():
                    _kl_iadd(out, e + shift, combo, coeff)
        return out

    return _memo_sigma("sigma0p", h, build)


# ---------------------------------------------------------------------------
# Final closed forms
# ---------------------------------------------------------------------------

def mean_square_odd(r: int) -> ClosedForm | tuple[ClosedForm, ClosedForm]:
    """Closed form of the odd-parity mean square of L(r, chi), r odd >= 1.

    For r >= 3 the result is a single form

        -4^(r-1) / (r!)^2 * pi^(2r) * phi(k) * k^(-2) * sigma2((r-1)/2).

    For r = 1 the single-exponential block no longer vanishes and the value
    picks up pi^2 phi(k)^2 / (4 k^2); a pair of forms is returned (main
    form, correction), to be summed.  The correction's phi^2 is carried as
    phi_exp = 1 times an explicit J_1 so that ClosedForm needs no phi^2
    field.
    """
    if r < 1 or r % 2 == 0:
        raise ValueError(f"mean_square_odd: r must be odd and >= 1, got {r}")
    h = (r - 1) // 2
    scalar = -Fraction(2) ** (2 * r - 2) / (factorial(r) ** 2)
    main_form = ClosedForm(
        scalar=scalar,
        pi_exp=2 * r,
        phi_exp=1,
        body=kl_shift(sigma2(h) if h >= 1 else _sigma2_h0(), -2),
    )
    if r > 1:
        return main_form
    # At r = 1 the single-exponential block contributes |C|^2 * phi(k)/2 *
    # sigma0(0) = pi^2 phi(k)^2 / (4 k^2); the squared normalizing constant
    # is pi^2/k^2 here, leaving a bare 1/2 for the phi(k)/2 factor.
    correction = ClosedForm(
        scalar=Fraction(1, 2),
        pi_exp=2,
        phi_exp=1,
        body=kl_shift(sigma0(0), -2),
    )
    return main_form, correction


def _sigma2_h0() -> KLaurent:
    """The direct product block at h = 0 (only the r = 1 extension needs it)."""
    out: KLaurent = {}
    for e, combo in _exp_product(1, 1).items():
        _kl_iadd(out, e - 2, combo, Fraction(1))
    return out


def mean_square_even(r: int) -> ClosedForm:
    """Closed form of the even-parity mean square of L(r, chi), r even >= 4.

    2^(2r-2) / (r!)^2 * pi^(2r) * phi(k) * k^(-2) times the direct product
    block.  r = 2 is rejected: the construction needs r = 2h with h >= 2.
    """
    if r % 2 or r < 4:
        raise ValueError(
            f"mean_square_even: r must be even and >= 4 (r = 2h with h >= 2), got {r}"
        )
    scalar = Fraction(2) ** (2 * r - 2) / (factorial(r) ** 2)
    return ClosedForm(
        scalar=scalar,
        pi_exp=2 * r,
        phi_exp=1,
        body=kl_shift(sigma2_prime(r // 2), -2),
    )


def l_principal_closed_form(r: int) -> ClosedForm:
    """L(r, chi_0) = zeta(r) J_r(k) / k^r for even r, in Bernoulli form.

    zeta(r) = (-1)^(r/2+1) (2*pi)^r B_r / (2 r!), so the form is
    scalar = (-1)^(r/2+1) 2^r B_r / (2 r!), pi_exp = r, body = k^(-r) J_r.
    """
    if r < 2 or r % 2:
        raise ValueError(f"l_principal_closed_form: r must be even and >= 2, got {r}")
    scalar = (-1) ** (r // 2 + 1) * Fraction(2) ** r * bernoulli(r) / (2 * factorial(r))
    return ClosedForm(scalar=scalar, pi_exp=r, phi_exp=0, body={-r: {r: Fraction(1)}})
