"""Closed-form algebra over Jordan totient symbols.

Three layers, all exact and all with value semantics:

* ``JordanCombo``  -- sparse map ``{s: coeff}`` for sum_s coeff * J_s(k),
  stored with no zero coefficients so dict equality is canonical equality.
* ``KLaurent``     -- sparse map ``{e: JordanCombo}`` for
  sum_e k^e * combo_e(k), stored with no empty combos.
* ``ClosedForm``   -- scalar * pi^pi_exp * phi(k)^phi_exp * body(k), the
  shape every final closed form takes.

``ClosedForm`` is canonicalized on construction: the rational content of the
body is folded into the scalar so that body coefficients are coprime
integers and the leading one (highest k-exponent, then highest Jordan index)
is positive.  That makes structural equality agree with mathematical
equality for the forms produced here, and makes renders reproduce the
familiar presentation (e.g. a single 1/187110 prefactor).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from mpmath import mp

from .multiplicative import euler_phi, jordan_totient

__all__ = [
    "JordanCombo",
    "KLaurent",
    "ClosedForm",
    "jc_add",
    "jc_scale",
    "kl_add",
    "kl_scale",
    "kl_shift",
    "evaluate_jordan",
    "evaluate_laurent",
    "evaluate_closed_form",
    "render",
    "parse_jordan_combo",
    "parse_closed_form",
]

JordanCombo = dict[int, Fraction]
KLaurent = dict[int, JordanCombo]


# ---------------------------------------------------------------------------
# Exact algebra (all functions return fresh canonical values)
# ---------------------------------------------------------------------------

def jc_add(a: JordanCombo, b: JordanCombo) -> JordanCombo:
    out = dict(a)
    for s, c in b.items():
        v = out.get(s, Fraction(0)) + c
        if v:
            out[s] = v
        else:
            out.pop(s, None)
    return out


def jc_scale(a: JordanCombo, c: Fraction | int) -> JordanCombo:
    if not c:
        return {}
    return {s: v * c for s, v in a.items()}


def kl_add(a: KLaurent, b: KLaurent) -> KLaurent:
    out = {e: dict(combo) for e, combo in a.items()}
    for e, combo in b.items():
        merged = jc_add(out.get(e, {}), combo)
        if merged:
            out[e] = merged
        else:
            out.pop(e, None)
    return out


def kl_scale(a: KLaurent, c: Fraction | int) -> KLaurent:
    if not c:
        return {}
    return {e: jc_scale(combo, c) for e, combo in a.items()}


def kl_shift(a: KLaurent, t: int) -> KLaurent:
    """Multiply by k^t (shift every exponent by t)."""
    return {e + t: dict(combo) for e, combo in a.items()}


def evaluate_jordan(combo: JordanCombo, k: int) -> Fraction:
    """sum_s coeff * J_s(k), exact."""
    if k < 1:
        raise ValueError(f"evaluate_jordan: k must be >= 1, got {k}")
    return sum((c * jordan_totient(s, k) for s, c in combo.items()), Fraction(0))


def evaluate_laurent(laurent: KLaurent, k: int) -> Fraction:
    """sum_e k^e * combo_e(k), exact."""
    return sum(
        (Fraction(k) ** e * evaluate_jordan(combo, k) for e, combo in laurent.items()),
        Fraction(0),
    )


# ---------------------------------------------------------------------------
# ClosedForm
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClosedForm:
    """scalar * pi^pi_exp * phi(k)^phi_exp * body(k), canonicalized."""

    scalar: Fraction
    pi_exp: int
    phi_exp: int
    body: KLaurent = field(default_factory=dict)

    def __post_init__(self):
        if self.pi_exp < 0 or self.phi_exp < 0:
            raise ValueError("ClosedForm: pi_exp and phi_exp must be >= 0")
        body = {e: {s: Fraction(c) for s, c in combo.items() if c} for e, combo in self.body.items()}
        body = {e: combo for e, combo in body.items() if combo}
        if not body:
            object.__setattr__(self, "scalar", Fraction(0))
            object.__setattr__(self, "body", {})
            return
        content = _content(body)
        object.__setattr__(self, "scalar", Fraction(self.scalar) * content)
        object.__setattr__(self, "body", {e: jc_scale(combo, 1 / content) for e, combo in body.items()})


def _content(body: KLaurent) -> Fraction:
    """gcd of numerators / lcm of denominators, signed by the leading coeff.

    Leading coefficient: highest k-exponent, then highest Jordan index.
    """
    num_gcd = 0
    den_lcm = 1
    for combo in body.values():
        for c in combo.values():
            num_gcd = math.gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    lead_e = max(body)
    lead_s = max(body[lead_e])
    sign = 1 if body[lead_e][lead_s] > 0 else -1
    return Fraction(sign * num_gcd, den_lcm)


def evaluate_closed_form(form: ClosedForm, k: int, precision_bits: int = 128):
    """Numeric value at k: exact rational part first, pi power last.

    Returns an mpmath float computed at ``precision_bits`` working precision
    (plus guard bits for the final multiplications).
    """
    if k < 3:
        raise ValueError(f"evaluate_closed_form: k must be >= 3, got {k}")
    if precision_bits < 53:
        raise ValueError(f"evaluate_closed_form: precision_bits must be >= 53, got {precision_bits}")
    exact = form.scalar * euler_phi(k) ** form.phi_exp * evaluate_laurent(form.body, k)
    with mp.workprec(precision_bits + 16):
        value = mp.mpf(exact.numerator) / exact.denominator * mp.pi ** form.pi_exp
    with mp.workprec(precision_bits):
        value = +value
    return value


# ---------------------------------------------------------------------------
# Rendering (deterministic; terms ordered by descending index)
# ---------------------------------------------------------------------------

def _frac_slash(c: Fraction) -> str:
    """Always-slashed 'p/q' string used in JSON payloads."""
    return f"{c.numerator}/{c.denominator}"


def _coeff_text(c: Fraction) -> str:
    return str(c)


def _coeff_latex(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    sign = "-" if c < 0 else ""
    return sign + r"\frac{%d}{%d}" % (abs(c.numerator), c.denominator)


def _combo_terms(combo: JordanCombo, latex: bool) -> str:
    if not combo:
        return "0"
    parts: list[str] = []
    for i, s in enumerate(sorted(combo, reverse=True)):
        c = combo[s]
        mag = abs(c)
        sym = r"J_{%d}(k)" % s if latex else f"J_{s}"
        if mag == 1:
            term = sym
        elif latex:
            term = _coeff_latex(mag) + " " + sym
        else:
            term = _coeff_text(mag) + " " + sym
        if i == 0:
            parts.append(("-" if c < 0 else "") + term)
        else:
            parts.append(("- " if c < 0 else "+ ") + term)
    return " ".join(parts)


def _combo_json(combo: JordanCombo) -> dict[str, str]:
    return {str(s): _frac_slash(combo[s]) for s in sorted(combo, reverse=True)}


def _closed_form_json(form: ClosedForm) -> dict:
    return {
        "scalar": _frac_slash(form.scalar),
        "pi_exp": form.pi_exp,
        "phi_exp": form.phi_exp,
        "body": {str(e): _combo_json(form.body[e]) for e in sorted(form.body, reverse=True)},
    }


def _closed_form_latex(form: ClosedForm) -> str:
    if not form.body:
        return "0"
    num_parts: list[str] = []
    den_parts: list[str] = []
    if abs(form.scalar.numerator) != 1:
        num_parts.append(str(abs(form.scalar.numerator)))
    if form.pi_exp:
        num_parts.append(r"\pi^{%d}" % form.pi_exp if form.pi_exp > 1 else r"\pi")
    if form.phi_exp:
        num_parts.append(r"\phi(k)" if form.phi_exp == 1 else r"\phi(k)^{%d}" % form.phi_exp)
    if form.scalar.denominator != 1:
        den_parts.append(str(form.scalar.denominator))

    exponents = sorted(form.body, reverse=True)
    single = len(exponents) == 1
    if single:
        e = exponents[0]
        if e < 0:
            den_parts.append(r"k^{%d}" % -e if e < -1 else "k")
        elif e > 0:
            num_parts.append(r"k^{%d}" % e if e > 1 else "k")
        body_tex = r"\left( %s \right)" % _combo_terms(form.body[e], latex=True)
    else:
        pieces = []
        for e in exponents:
            inner = r"\left( %s \right)" % _combo_terms(form.body[e], latex=True)
            if e:
                inner = r"k^{%d} " % e + inner
            pieces.append(inner)
        body_tex = r"\left[ %s \right]" % " + ".join(pieces)

    sign = "-" if form.scalar < 0 else ""
    num = " ".join(num_parts) if num_parts else "1"
    if den_parts:
        prefix = r"\frac{%s}{%s}" % (num, " ".join(den_parts))
    elif num_parts:
        prefix = num
    else:
        prefix = ""
    return (sign + prefix + " " + body_tex).strip()


def _closed_form_text(form: ClosedForm) -> str:
    if not form.body:
        return "0"
    parts = [str(form.scalar)]
    if form.pi_exp:
        parts.append(f"pi^{form.pi_exp}" if form.pi_exp > 1 else "pi")
    if form.phi_exp:
        parts.append(f"phi(k)^{form.phi_exp}" if form.phi_exp > 1 else "phi(k)")
    pieces = []
    for e in sorted(form.body, reverse=True):
        combo = "(" + _combo_terms(form.body[e], latex=False) + ")"
        pieces.append(f"k^{e} * {combo}" if e else combo)
    parts.append(pieces[0] if len(pieces) == 1 else "[" + " + ".join(pieces) + "]")
    return " * ".join(parts)


def render(obj: ClosedForm | JordanCombo, format: str = "text") -> str:
    """Deterministic rendering of a ClosedForm or JordanCombo.

    Formats: ``latex``, ``json``, ``text``.  Terms are ordered by descending
    Jordan index (and descending k-exponent); identical inputs produce
    byte-identical output.
    """
    if format not in ("latex", "json", "text"):
        raise ValueError(f"render: unknown format {format!r}")
    if isinstance(obj, ClosedForm):
        if format == "json":
            return json.dumps(_closed_form_json(obj))
        if format == "latex":
            return _closed_form_latex(obj)
        return _closed_form_text(obj)
    if format == "json":
        return json.dumps(_combo_json(obj))
    return _combo_terms(obj, latex=(format == "latex"))


# ---------------------------------------------------------------------------
# Parsing (inverse of the JSON rendering)
# ---------------------------------------------------------------------------

def parse_jordan_combo(data: str | dict) -> JordanCombo:
    if isinstance(data, str):
        data = json.loads(data)
    combo = {int(s): Fraction(c) for s, c in data.items()}
    return {s: c for s, c in combo.items() if c}


def parse_closed_form(data: str | dict) -> ClosedForm:
    if isinstance(data, str):
        data = json.loads(data)
    return ClosedForm(
        scalar=Fraction(data["scalar"]),
        pi_exp=int(data["pi_exp"]),
        phi_exp=int(data["phi_exp"]),
        body={int(e): parse_jordan_combo(combo) for e, combo in data["body"].items()},
    )
