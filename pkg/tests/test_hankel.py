from fractions import Fraction
from random import Random

import pytest

from qhankel.errors import CostGuardExceededError, DomainError, IndexBeyondBoundError
from qhankel.hankel import (
    SequenceSpec,
    bareiss_det,
    check_scaling_lemmas,
    cofactor_det,
    det_ratfunc_cleared,
    gauss_det,
    hankel_det,
    hankel_matrix,
    heilermann_det,
    lcm_q,
)
from qhankel.polyring import lift, ratfunc, var

Q, X = var("q"), var("x")


def catalan(k: int) -> int:
    num = 1
    for i in range(k):
        num = num * (2 * k - i)
    den = 1
    for i in range(1, k + 1):
        den *= i
    return num // (den * (k + 1))


def random_poly(rng: Random, max_terms=3, max_exp=3):
    total = lift(0)
    for _ in range(rng.randint(1, max_terms)):
        term = lift(rng.randint(-9, 9))
        for s in ("q", "x"):
            term = term * var(s) ** rng.randint(0, max_exp)
        total = total + term
    return total


def test_catalan_hankel_is_one():
    seq = SequenceSpec("catalan", lambda k: lift(catalan(k)))
    for n in range(6):
        assert hankel_det(seq, n) == lift(1)


def test_bareiss_matches_cofactor_seeded():
    rng = Random("bareiss-vs-cofactor")
    for _ in range(50):
        n = rng.randint(0, 4)
        values = [random_poly(rng) for _ in range(2 * n + 1)]
        fn = lambda k, v=values: v[k]
        assert bareiss_det(hankel_matrix(fn, n)) == cofactor_det(hankel_matrix(fn, n))


def test_bareiss_handles_fractions():
    m = [[lift(Fraction(1, 2)), lift(Fraction(1, 3))],
         [lift(Fraction(1, 3)), lift(Fraction(1, 4))]]
    assert bareiss_det(m) == lift(Fraction(1, 8) - Fraction(1, 9))


def test_zero_pivot_swap():
    # first pivot zero forces one row swap, flipping the sign once
    m = [[lift(0), lift(1)], [lift(1), lift(0)]]
    assert bareiss_det(m) == lift(-1)


def test_singular_matrix():
    m = [[lift(1), lift(2)], [lift(2), lift(4)]]
    assert bareiss_det(m) == lift(0)
    m3 = hankel_matrix(lambda k: lift(1), 2)
    assert bareiss_det(m3) == lift(0)


def test_empty_and_single():
    assert bareiss_det([[lift(7)]]) == lift(7)
    seq = SequenceSpec("c", lambda k: lift(5))
    assert hankel_det(seq, 0) == lift(5)


def test_cofactor_guard():
    big = [[lift(1)] * 8 for _ in range(8)]
    with pytest.raises(CostGuardExceededError):
        cofactor_det(big)


def test_non_square_rejected():
    with pytest.raises(DomainError):
        bareiss_det([[lift(1), lift(2)]])


def test_unknown_method_rejected():
    seq = SequenceSpec("c", lambda k: lift(1))
    with pytest.raises(DomainError):
        hankel_det(seq, 1, method="newton")


def test_sequence_bound():
    seq = SequenceSpec("short", lambda k: lift(k), bound=3)
    assert seq(3) == lift(3)
    with pytest.raises(IndexBeyondBoundError):
        seq(4)


def test_sequence_memoizes():
    calls = []

    def fn(k):
        calls.append(k)
        return lift(k)

    seq = SequenceSpec("memo", fn)
    seq(2), seq(2), seq(2)
    assert calls == [2]


def test_gauss_matches_cleared_route():
    seq = SequenceSpec(
        "ratfunc", lambda k: ratfunc(Q ** k + 1, Q + lift(k + 1))
    )
    for n in range(3):
        m1 = hankel_matrix(seq, n)
        m2 = hankel_matrix(seq, n)
        assert gauss_det(m1) == det_ratfunc_cleared(m2)


def test_hankel_det_auto_dispatch():
    rseq = SequenceSpec("r", lambda k: ratfunc(lift(1), Q + lift(k + 1)))
    value = hankel_det(rseq, 1)
    direct = rseq(0) * rseq(2) - rseq(1) * rseq(1)
    assert value == direct


def test_lcm_q():
    a = (Q - 1) * (Q + 1)
    b = (Q - 1) * (Q + 2)
    m = lcm_q(a, b)
    m.divexact(a), m.divexact(b)
    assert m.degree("q") == 3


def test_heilermann_product():
    v = [var("u"), var("v"), 2 * Q]
    out = heilermann_det(lift(3), v, 3)
    assert out == lift(27) * var("u") ** 3 * var("v") ** 2 * (2 * Q) * lift(3)


def test_scaling_lemmas():
    seq = SequenceSpec("vals", lambda k: lift(k + 1))
    for n in range(3):
        for report in check_scaling_lemmas(seq, n, Fraction(3, 2), X):
            assert report.ok, report.line()
