"""Bernoulli numbers, Bernoulli polynomials and their Hankel determinants.

Covers the classical Al-Salam--Carlitz product formula for H_n(B_k), the
invariance of Hankel determinants under the binomial transform, the
even-indexed family B_{2k}((1+x)/2) with its degree and leading-coefficient
characterization, the Dilcher--Jiu odd-indexed product formula, and the
median Bernoulli numbers together with their two-parameter polynomial
generalization.
"""

from __future__ import annotations

from fractions import Fraction

from .hankel import SequenceSpec, hankel_det
from .polyring import MultiPoly, PolyLike, lift, var
from .rationals import binomial, factorial
from .report import VerifyReport, compare

_B_CACHE: dict[int, Fraction] = {0: Fraction(1)}


def bernoulli_number(k: int) -> Fraction:
    """B_k with the convention B_1 = -1/2."""
    if k < 0:
        raise ValueError(f"bernoulli_number needs k >= 0, got {k}")
    if k not in _B_CACHE:
        for m in range(max(_B_CACHE) + 1, k + 1):
            acc = Fraction(0)
            for j in range(m):
                acc += binomial(m + 1, j) * _B_CACHE[j]
            _B_CACHE[m] = -acc / (m + 1)
    return _B_CACHE[k]


def bernoulli_poly(k: int, arg: PolyLike | None = None) -> MultiPoly:
    """B_k evaluated at `arg` (default: the symbol x)."""
    if arg is None:
        arg = var("x")
    arg = lift(arg)
    power = lift(1)
    total = lift(0)
    for m in range(k + 1):
        total = total + binomial(k, m) * bernoulli_number(k - m) * power
        if m < k:
            power = power * arg
    return total


def binomial_transform(seq: SequenceSpec, value: PolyLike,
                       name: str | None = None) -> SequenceSpec:
    """The sequence b_k = sum_l C(k,l) a_l value^(k-l)."""
    value = lift(value)

    def term(k: int):
        total = lift(0)
        power = lift(1)
        for l in range(k, -1, -1):
            total = total + binomial(k, l) * lift(seq(l)) * power
            if l > 0:
                power = power * value
        return total

    return SequenceSpec(name or f"binomial-transform({seq.name})", term)


# ----------------------------------------------------------------------
# sequence families

def bernoulli_numbers_seq() -> SequenceSpec:
    return SequenceSpec("bernoulli-numbers", lambda k: lift(bernoulli_number(k)))


def bernoulli_poly_seq(arg: PolyLike | None = None) -> SequenceSpec:
    if arg is None:
        arg = var("x")
    return SequenceSpec("bernoulli-polys", lambda k: bernoulli_poly(k, arg))


def even_center_seq() -> SequenceSpec:
    """a_k = B_2k((1+x)/2)."""
    arg = (1 + var("x")) * Fraction(1, 2)
    return SequenceSpec("bernoulli-even-center", lambda k: bernoulli_poly(2 * k, arg))


def even_half_seq() -> SequenceSpec:
    """a_k = B_2k(1/2)."""
    return SequenceSpec(
        "bernoulli-even-half", lambda k: lift(bernoulli_poly(2 * k, Fraction(1, 2)))
    )


def odd_center_seq() -> SequenceSpec:
    """a_k = B_(2k+1)((1+x)/2)."""
    arg = (1 + var("x")) * Fraction(1, 2)
    return SequenceSpec(
        "bernoulli-odd-center", lambda k: bernoulli_poly(2 * k + 1, arg)
    )


def median_seq() -> SequenceSpec:
    """Median Bernoulli numbers K_k = -(1/2) sum_l C(k,l) B_(k+l)."""

    def term(k: int):
        acc = Fraction(0)
        for l in range(k + 1):
            acc += binomial(k, l) * bernoulli_number(k + l)
        return lift(-acc / 2)

    return SequenceSpec("median-bernoulli", term)


def median_ab_seq() -> SequenceSpec:
    """K_k^(a,b)(x) = sum_l C(k,l) B_(k+l)(a x) (2b)^(k-l)."""
    ax = var("a") * var("x")
    two_b = 2 * var("b")

    def term(k: int):
        total = lift(0)
        power = lift(1)
        for l in range(k, -1, -1):
            total = total + binomial(k, l) * bernoulli_poly(k + l, ax) * power
            if l > 0:
                power = power * two_b
        return total

    return SequenceSpec("median-bernoulli-ab", term)


def reflected_even_seq() -> SequenceSpec:
    """a_k = sum_l C(k,l) B_(k+l)(1/2) x^l."""
    x = var("x")

    def term(k: int):
        total = lift(0)
        power = lift(1)
        for l in range(k + 1):
            total = total + binomial(k, l) * bernoulli_poly(k + l, Fraction(1, 2)) * power
            if l < k:
                power = power * x
        return total

    return SequenceSpec("bernoulli-even-reflected", term)


# ----------------------------------------------------------------------
# closed forms

def closed_hankel_bernoulli(n: int) -> Fraction:
    """H_n(B_k) = (-1)^C(n+1,2) prod_j (j!)^6 / ((2j)!(2j+1)!)."""
    out = Fraction(-1 if binomial(n + 1, 2) % 2 else 1)
    for j in range(1, n + 1):
        out *= Fraction(factorial(j) ** 6, factorial(2 * j) * factorial(2 * j + 1))
    return out


def closed_hankel_even_half(n: int) -> Fraction:
    """H_n(B_2k(1/2)) = prod_j ((2j)!)^6 / ((4j)!(4j+1)!)."""
    out = Fraction(1)
    for j in range(1, n + 1):
        out *= Fraction(
            factorial(2 * j) ** 6, factorial(4 * j) * factorial(4 * j + 1)
        )
    return out


def closed_hankel_odd_center(n: int) -> MultiPoly:
    """H_n(B_(2k+1)((1+x)/2)) as a polynomial in x.

    (-1)^C(n+1,2) (x/2)^(n+1) prod_j (j^4 (x^2-j^2) / (4(2j+1)(2j-1)))^(n+1-j).
    """
    x = var("x")
    sign = -1 if binomial(n + 1, 2) % 2 else 1
    out = lift(sign) * (x * Fraction(1, 2)) ** (n + 1)
    for j in range(1, n + 1):
        factor = (x * x - j * j) * Fraction(j ** 4, 4 * (2 * j + 1) * (2 * j - 1))
        out = out * factor ** (n + 1 - j)
    return out


# ----------------------------------------------------------------------
# identity checks

def check_bernoulli_closed(n: int) -> VerifyReport:
    det = hankel_det(bernoulli_numbers_seq(), n)
    return compare("bernoulli-hankel-closed", n, det, lift(closed_hankel_bernoulli(n)))


def check_poly_invariance(n: int, arg: PolyLike | None = None) -> VerifyReport:
    """H_n(B_k(arg)) = H_n(B_k) for any argument."""
    det = hankel_det(bernoulli_poly_seq(arg), n)
    detail = "arg=x" if arg is None else f"arg={lift(arg)}"
    return compare(
        "bernoulli-poly-invariance", n, det, lift(closed_hankel_bernoulli(n)),
        detail=detail,
    )


def check_binomial_invariance(seq: SequenceSpec, n: int,
                              value: PolyLike) -> VerifyReport:
    """H_n of the binomial transform equals H_n of the original sequence."""
    lhs = hankel_det(binomial_transform(seq, value), n)
    rhs = hankel_det(seq, n)
    return compare(
        "binomial-transform-invariance", n, lhs, rhs,
        detail=f"seq={seq.name}, value={lift(value)}",
    )


def check_even_half_closed(n: int) -> VerifyReport:
    det = hankel_det(even_half_seq(), n)
    return compare(
        "bernoulli-even-half-closed", n, det, lift(closed_hankel_even_half(n))
    )


def check_odd_center_closed(n: int) -> VerifyReport:
    det = hankel_det(odd_center_seq(), n)
    return compare("bernoulli-odd-center-closed", n, det, closed_hankel_odd_center(n))


def check_umbral_transform(n: int) -> VerifyReport:
    """sum_k C(n,k) B_2k(ax+b) (-b^2)^(n-k) = sum_k C(n,k) B_(n+k)(ax) (2b)^(n-k).

    Checked fully symbolically in a, b, x.
    """
    a, b, x = var("a"), var("b"), var("x")
    axb = a * x + b
    ax = a * x
    neg_b2 = -(b * b)
    two_b = 2 * b
    lhs = lift(0)
    rhs = lift(0)
    for k in range(n + 1):
        lhs = lhs + binomial(n, k) * bernoulli_poly(2 * k, axb) * neg_b2 ** (n - k)
        rhs = rhs + binomial(n, k) * bernoulli_poly(n + k, ax) * two_b ** (n - k)
    return compare("bernoulli-umbral-transform", n, lhs, rhs)


def check_median_relation(n: int) -> VerifyReport:
    """H_n(K_k) = (-1/2)^(n+1) H_n(B_2k(1/2))."""
    lhs = hankel_det(median_seq(), n)
    rhs = Fraction(-1, 2) ** (n + 1) * hankel_det(even_half_seq(), n)
    return compare("median-bernoulli-relation", n, lhs, rhs)


def check_median_ab(n: int) -> VerifyReport:
    """H_n(K_k^(a,b)(x)) = H_n(B_2k(ax+b)), symbolically in a, b, x."""
    lhs = hankel_det(median_ab_seq(), n)
    arg = var("a") * var("x") + var("b")
    rhs = hankel_det(
        SequenceSpec("bernoulli-even-shifted", lambda k: bernoulli_poly(2 * k, arg)), n
    )
    return compare("median-bernoulli-ab", n, lhs, rhs)


def check_even_center_structure(n: int) -> list[VerifyReport]:
    """Degree, parity and leading coefficient of H_n(B_2k((1+x)/2)).

    The determinant is a polynomial in x of degree n(n+1) whose odd
    coefficients vanish, with leading coefficient H_n(B_k).
    """
    det = hankel_det(even_center_seq(), n)
    degree = det.degree("x")
    leading = det.coeff("x", degree)
    odd_part = lift(0)
    for (mono, coeff) in det.terms():
        e = mono[1] if len(mono) > 1 else 0
        if e % 2:
            odd_part = odd_part + MultiPoly({mono: coeff})
    return [
        compare("bernoulli-even-degree", n, degree, n * (n + 1)),
        compare(
            "bernoulli-even-leading", n, leading, lift(closed_hankel_bernoulli(n))
        ),
        compare("bernoulli-even-parity", n, odd_part, lift(0)),
    ]


def check_even_reflection(n: int) -> VerifyReport:
    """H_n(sum_l C(k,l) B_(k+l)(1/2) x^l) = x^(n(n+1)) H_n(B_2k((1+1/x)/2))."""
    lhs = hankel_det(reflected_even_seq(), n)
    x = var("x")
    arg = (1 + x ** -1) * Fraction(1, 2)
    inverted = SequenceSpec(
        "bernoulli-even-center-inverted", lambda k: bernoulli_poly(2 * k, arg)
    )
    rhs = x ** (n * (n + 1)) * hankel_det(inverted, n)
    return compare("bernoulli-even-reflection", n, lhs, rhs)
