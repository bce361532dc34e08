"""Hand-typed reference expressions used by several test modules.

Everything here was transcribed independently of the code under test, in
factored form where the source presents it factored, so an agreement is
a genuine cross-check of the expansion machinery rather than a replay.
"""

from fractions import Fraction

from qhankel.polyring import MultiPoly, lift, var

Q = var("q")
X = var("x")


def _a(i: int) -> MultiPoly:
    return var(f"alpha_{i}")


def frac(num: int, den: int) -> Fraction:
    return Fraction(num, den)


# H_n(B_2k((1+x)/2)) for n = 1, 2, 3
EVEN_CENTER_DETS = {
    1: -frac(1, 12) * X ** 2 + lift(frac(1, 45)),
    2: (
        -frac(1, 540) * X ** 6
        + frac(97, 18900) * X ** 4
        - frac(11, 4725) * X ** 2
        + lift(frac(16, 55125))
    ),
    3: (
        frac(1, 42000) * X ** 12
        - frac(121, 441000) * X ** 10
        + frac(153, 154000) * X ** 8
        - frac(17441, 12262250) * X ** 6
        + frac(8369, 11036025) * X ** 4
        - frac(1632, 9634625) * X ** 2
        + lift(frac(256, 18883865))
    ),
}


def h2_plain_coefficients() -> dict[int, MultiPoly]:
    """Coefficients of x^j in H_2 of the generic q-binomial transform."""
    q = Q
    a0, a1, a2, a3, a4 = (_a(i) for i in range(5))
    one = lift(1)
    return {
        6: -q ** 3 * (1 - q) ** 3 * (1 + q) * a0 ** 3,
        5: -q ** 2 * (1 - q) ** 3 * (1 + q) * (1 + 2 * q) * a0 ** 2 * a1,
        4: -q * (1 - q) ** 2 * (1 + q) * (
            (one + 2 * q + q ** 2 - q ** 3) * a0 * a1 ** 2
            - (one + 2 * q ** 2) * a0 ** 2 * a2
        ),
        3: (1 - q) ** 2 * (1 + q) * (
            (2 * one + q + q ** 2 + 2 * q ** 3) * a0 * a1 * a2
            - (1 - q) * a0 ** 2 * a3
            - (one + 2 * q + 2 * q ** 2 + q ** 3) * a1 ** 3
        ),
        2: (1 - q) * (
            (one + 3 * q + q ** 2 - q ** 3) * a0 * a1 * a3
            + (one - q - q ** 2 - q ** 3 - q ** 4) * a0 * a2 ** 2
            - a0 ** 2 * a4
            - (one + 2 * q - 2 * q ** 3 - q ** 4) * a1 ** 2 * a2
        ),
        1: -(1 - q) * (
            a0 * a1 * a4
            - (1 - q ** 2) * a0 * a2 * a3
            + (one + 2 * q) * a1 * a2 ** 2
            - (one + 2 * q + q ** 2) * a1 ** 2 * a3
        ),
        0: (
            a0 * a2 * a4 - a0 * a3 ** 2 + 2 * a1 * a2 * a3
            - a1 ** 2 * a4 - a2 ** 3
        ),
    }


def h2_tilde_coefficients() -> dict[int, MultiPoly]:
    """Coefficients of x^j in H_2 of the mirrored q-binomial transform."""
    q = Q
    a0, a1, a2, a3, a4 = (_a(i) for i in range(5))
    one = lift(1)
    return {
        3: -q ** 2 * (1 - q) ** 3 * (1 + q) * a0 * a1 * a2,
        2: q ** 2 * (1 - q) ** 2 * (1 + q) * (
            (q + q ** 2) * a0 * a1 * a3 - a0 * a2 ** 2 - a1 ** 2 * a2
        ),
        1: -q ** 2 * (1 - q) * (
            q ** 4 * a0 * a1 * a4
            - (q ** 2 - q ** 4) * a0 * a2 * a3
            + (one + 2 * q) * a1 * a2 ** 2
            - (q + 2 * q ** 2 + q ** 3) * a1 ** 2 * a3
        ),
        0: q ** 3 * (
            q ** 4 * a0 * a2 * a4
            - q ** 3 * a0 * a3 ** 2
            + 2 * q * a1 * a2 * a3
            - q ** 3 * a1 ** 2 * a4
            - a2 ** 3
        ),
    }
