from fractions import Fraction
from random import Random

import pytest

from qhankel.errors import NotPolynomialError
from qhankel.hankel import SequenceSpec, hankel_det
from qhankel.polyring import lift, var
from qhankel.qtransforms import (
    alpha_from_values,
    alpha_poly,
    alpha_tilde_poly,
    check_q1_degeneration,
    check_reflection_dets,
    check_row_reduction,
    check_theorem_qalpha,
    check_theorem_qalpha_tilde,
    check_umbral_products,
    delta_chain_check,
    generic_alpha_seq,
    plain_transform_seq,
    reflect,
    tilde_transform_seq,
    vandermonde_q_check,
)

from reference_values import h2_plain_coefficients, h2_tilde_coefficients

Q, X = var("q"), var("x")
A0, A1, A2 = var("alpha_0"), var("alpha_1"), var("alpha_2")


def test_plain_transform_small_expansions():
    seq = generic_alpha_seq()
    assert alpha_poly(0, seq) == A0
    assert alpha_poly(1, seq) == A1 + X * A0
    # k = 2 puts the q-weight on the top x power
    expected = A2 + (1 + Q) * A1 * X + Q * A0 * X ** 2
    assert alpha_poly(2, seq) == expected


def test_tilde_transform_small_expansions():
    seq = generic_alpha_seq()
    assert alpha_tilde_poly(0, seq) == A0
    assert alpha_tilde_poly(1, seq) == A0 * X + A1
    expected = A0 * X ** 2 + (1 + Q) * A1 * X + Q * A2
    assert alpha_tilde_poly(2, seq) == expected


def test_umbral_product_forms():
    for k in range(7):
        for report in check_umbral_products(k):
            assert report.ok, report.line()


def test_h2_plain_reference_coefficients():
    det = hankel_det(plain_transform_seq(generic_alpha_seq()), 2)
    coeffs = h2_plain_coefficients()
    assert det.degree("x") == 6
    for j in range(7):
        assert det.coeff("x", j) == coeffs[j], f"x^{j} row differs"


def test_h2_tilde_reference_coefficients():
    det = hankel_det(tilde_transform_seq(generic_alpha_seq()), 2)
    coeffs = h2_tilde_coefficients()
    assert det.degree("x") == 3
    for j in range(4):
        assert det.coeff("x", j) == coeffs[j], f"x^{j} row differs"


def test_delta_chain_closed_form():
    for k in range(7):
        for m in range(k + 1):
            assert delta_chain_check(k, m).ok


def test_vandermonde_product():
    for n in range(7):
        assert vandermonde_q_check(n).ok


def test_reflection_determinants():
    for n in range(3):
        assert check_reflection_dets("plain", n).ok
        assert check_reflection_dets("tilde", n).ok


def test_reflection_rejects_nonpolynomial():
    # values already carrying x powers outflank the x^k clearing factor
    seq = SequenceSpec("xheavy", lambda k: X ** 2 if k == 0 else lift(1))
    with pytest.raises(NotPolynomialError):
        reflect("plain", 1, seq)


def test_theorems_symbolic():
    for n in range(4):
        assert check_theorem_qalpha(n).ok
        assert check_theorem_qalpha_tilde(n).ok


def test_theorems_random_rational_alphas():
    rng = Random("alphas")
    for n in (4, 5):
        values = [Fraction(rng.randint(1, 9), rng.randint(1, 9))
                  for _ in range(2 * n + 1)]
        seq = alpha_from_values(values)
        assert check_theorem_qalpha(n, seq).ok
        assert check_theorem_qalpha_tilde(n, seq).ok


def test_q1_degeneration():
    for n in range(4):
        assert check_q1_degeneration(n).ok


def test_row_reduction_replay():
    for n in range(3):
        for report in check_row_reduction(n):
            assert report.ok, report.line()
