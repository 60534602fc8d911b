"""Tests for the Jordan-combination algebra and closed-form rendering."""

import json
import random
from fractions import Fraction

import pytest
from mpmath import mp

from meansq.symbolic import (
    ClosedForm,
    evaluate_closed_form,
    evaluate_jordan,
    evaluate_laurent,
    jc_add,
    jc_scale,
    kl_add,
    kl_scale,
    kl_shift,
    parse_closed_form,
    parse_jordan_combo,
    render,
)

F = Fraction


class TestAlgebra:
    def test_cancellation_drops_entries(self):
        assert jc_add({2: F(1, 3)}, {2: F(-1, 3)}) == {}

    def test_scale(self):
        assert jc_scale({2: F(1, 3)}, 3) == {2: F(1)}
        assert jc_scale({2: F(1, 3)}, 0) == {}

    def test_shift(self):
        assert kl_shift({-8: {10: F(1)}}, 3) == {-5: {10: F(1)}}

    def test_kl_add_cancels_empty_cells(self):
        a = {-2: {2: F(1, 4)}}
        b = {-2: {2: F(-1, 4)}, 0: {1: F(1)}}
        assert kl_add(a, b) == {0: {1: F(1)}}

    def test_kl_scale_zero(self):
        assert kl_scale({-2: {2: F(1)}}, 0) == {}

    def test_inputs_not_mutated(self):
        a = {2: F(1, 3)}
        b = {2: F(1, 6), 4: F(1)}
        jc_add(a, b)
        assert a == {2: F(1, 3)} and b == {2: F(1, 6), 4: F(1)}


class TestEvaluation:
    def test_examples(self):
        assert evaluate_jordan({2: F(1, 3)}, 3) == F(8, 3)
        assert evaluate_jordan({}, 5) == 0
        assert evaluate_jordan({1: F(1)}, 12) == 4

    def test_laurent(self):
        assert evaluate_laurent({-2: {2: F(1)}}, 3) == F(8, 9)

    def test_ring_homomorphism(self):
        rng = random.Random(7001)
        for _ in range(50):
            a = {rng.randrange(1, 9): F(rng.randrange(-9, 10) or 1, rng.randrange(1, 12)) for _ in range(3)}
            b = {rng.randrange(1, 9): F(rng.randrange(-9, 10) or 1, rng.randrange(1, 12)) for _ in range(3)}
            k = rng.randrange(1, 101)
            assert evaluate_jordan(jc_add(a, b), k) == evaluate_jordan(a, k) + evaluate_jordan(b, k)


class TestClosedForm:
    def test_canonicalization_extracts_content(self):
        raw = ClosedForm(
            scalar=F(-4, 225),
            pi_exp=10,
            phi_exp=1,
            body={-10: {10: F(-5, 16632), 4: F(5, 756), 2: F(5, 72)}},
        )
        assert raw.scalar == F(1, 187110)
        assert raw.body == {-10: {10: F(1), 4: F(-22), 2: F(-231)}}

    def test_zero_form(self):
        z = ClosedForm(scalar=F(3), pi_exp=2, phi_exp=0, body={})
        assert z.scalar == 0 and z.body == {}
        # dropping zero coefficients may empty the body entirely
        z2 = ClosedForm(scalar=F(1), pi_exp=0, phi_exp=0, body={0: {2: F(0)}})
        assert z2.scalar == 0 and z2.body == {}

    def test_negative_exponents_rejected(self):
        with pytest.raises(ValueError):
            ClosedForm(scalar=F(1), pi_exp=-1, phi_exp=0, body={0: {1: F(1)}})

    def test_evaluate_euler_value(self):
        # pi^2/6 * J_2(k)/k^2 at k = 4 is zeta(2) (1 - 1/4) = pi^2/8
        form = ClosedForm(scalar=F(1, 6), pi_exp=2, phi_exp=0, body={-2: {2: F(1)}})
        value = evaluate_closed_form(form, 4, 128)
        with mp.workprec(128):
            assert abs(value - mp.pi**2 / 8) < mp.mpf(2) ** -120

    def test_evaluate_zero_form(self):
        z = ClosedForm(scalar=F(0), pi_exp=0, phi_exp=0, body={})
        assert evaluate_closed_form(z, 5, 64) == 0

    def test_two_precision_agreement(self):
        form = ClosedForm(scalar=F(1, 187110), pi_exp=10, phi_exp=1, body={-10: {10: F(1), 4: F(-22), 2: F(-231)}})
        lo = evaluate_closed_form(form, 7, 128)
        hi = evaluate_closed_form(form, 7, 256)
        with mp.workprec(256):
            assert abs(lo - hi) / abs(hi) < mp.mpf(2) ** -120

    def test_guards(self):
        form = ClosedForm(scalar=F(1), pi_exp=0, phi_exp=0, body={0: {1: F(1)}})
        with pytest.raises(ValueError):
            evaluate_closed_form(form, 2, 128)
        with pytest.raises(ValueError):
            evaluate_closed_form(form, 5, 32)


class TestRendering:
    def test_latex_single_term(self):
        assert render({2: F(1, 3)}, "latex") == r"\frac{1}{3} J_{2}(k)"

    def test_latex_two_terms(self):
        assert render({4: F(1, 45), 2: F(2, 9)}, "latex") == r"\frac{1}{45} J_{4}(k) + \frac{2}{9} J_{2}(k)"

    def test_empty_renders_zero(self):
        assert render({}, "text") == "0"
        assert render({}, "latex") == "0"

    def test_text_combo(self):
        assert render({6: F(2, 945), 4: F(1, 45), 2: F(8, 45)}, "text") == "2/945 J_6 + 1/45 J_4 + 8/45 J_2"

    def test_negative_coefficients(self):
        assert render({10: F(1), 4: F(-22), 2: F(-231)}, "text") == "J_10 - 22 J_4 - 231 J_2"

    def test_deterministic(self):
        combo = {2: F(5, 72), 10: F(-5, 16632), 4: F(5, 756)}
        assert render(combo, "json") == render(dict(sorted(combo.items())), "json")

    def test_unknown_format_rejected(self):
        with pytest.raises(ValueError):
            render({}, "html")


class TestJsonRoundTrip:
    def test_combo_round_trip(self):
        combo = {12: F(1382, 638512875), 2: F(256, 2079)}
        assert parse_jordan_combo(render(combo, "json")) == combo

    def test_closed_form_round_trip(self):
        form = ClosedForm(
            scalar=F(1, 1277025750),
            pi_exp=12,
            phi_exp=1,
            body={-12: {12: F(691), 6: F(2860), 4: F(63063), 2: F(573300)}},
        )
        again = parse_closed_form(render(form, "json"))
        assert again == form

    def test_round_trip_random_forms(self):
        rng = random.Random(5150)
        for _ in range(25):
            body = {
                rng.randrange(-12, 3): {
                    rng.randrange(1, 13): F(rng.randrange(-50, 50) or 1, rng.randrange(1, 99))
                    for _ in range(rng.randrange(1, 4))
                }
                for _ in range(rng.randrange(1, 3))
            }
            form = ClosedForm(scalar=F(rng.randrange(1, 9)), pi_exp=rng.randrange(0, 13), phi_exp=rng.randrange(0, 3), body=body)
            assert parse_closed_form(render(form, "json")) == form

    def test_schema_fields(self):
        form = ClosedForm(scalar=F(1, 6), pi_exp=2, phi_exp=0, body={-2: {2: F(1)}})
        data = json.loads(render(form, "json"))
        assert data == {"scalar": "1/6", "pi_exp": 2, "phi_exp": 0, "body": {"-2": {"2": "1/1"}}}
