"""q-integers, q-binomials, Pochhammer products and Carlitz q-Bernoulli numbers.

Everything is exact: q-integers and q-binomial coefficients are polynomials
in q, the Carlitz numbers are reduced rational functions in q.  The
q-binomial theorem here carries the product on the x side,

    prod_{j=0}^{n-1} (alpha + q^j x)
        = sum_k q^C(k,2) qbinom(n,k) alpha^(n-k) x^k,

which is the orientation that actually expands correctly (swap alpha and x
in the product and the two sides disagree already at n = 2).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError
from .hankel import SequenceSpec, hankel_det
from .polyring import MultiPoly, PolyLike, RatFuncQ, lift, ratfunc, var
from .rationals import binomial
from .report import VerifyReport, compare


def q_int(m: int) -> MultiPoly:
    """[m]_q = 1 + q + ... + q^(m-1) for m >= 1."""
    if m <= 0:
        raise DomainError(f"q_int needs m >= 1, got {m}")
    return MultiPoly({(e,) if e else (): 1 for e in range(m)})


def q_factorial(m: int) -> MultiPoly:
    """[m]_q! = prod_{j=1}^{m} [j]_q, with [0]_q! = 1."""
    if m < 0:
        raise DomainError(f"q_factorial needs m >= 0, got {m}")
    out = lift(1)
    for j in range(2, m + 1):
        out = out * q_int(j)
    return out


_QBINOM_CACHE: dict[tuple[int, int], MultiPoly] = {}


def qbinom(n: int, k: int) -> MultiPoly:
    """Gaussian binomial coefficient, 0 outside 0 <= k <= n.

    Built by the Pascal-type recursion
    qbinom(n,k) = qbinom(n-1,k) + q^(n-k) qbinom(n-1,k-1).
    """
    if k < 0 or k > n or n < 0:
        return lift(0)
    if k == 0 or k == n:
        return lift(1)
    key = (n, min(k, n - k))
    k = key[1]
    if key not in _QBINOM_CACHE:
        q_pow = MultiPoly({(n - k,): 1})
        _QBINOM_CACHE[key] = qbinom(n - 1, k) + q_pow * qbinom(n - 1, k - 1)
    return _QBINOM_CACHE[key]


def qbinom_by_factorials(n: int, k: int) -> MultiPoly:
    """Independent route: [n]_q! / ([k]_q! [n-k]_q!) by exact division."""
    if k < 0 or k > n or n < 0:
        return lift(0)
    return q_factorial(n).divexact(q_factorial(k) * q_factorial(n - k))


def pochhammer(a: PolyLike, n: int) -> MultiPoly:
    """(a;q)_n = prod_{j=0}^{n-1} (1 - a q^j)."""
    if n < 0:
        raise DomainError(f"pochhammer needs n >= 0, got {n}")
    a = lift(a)
    q = var("q")
    out = lift(1)
    power = lift(1)
    for _ in range(n):
        out = out * (1 - a * power)
        power = power * q
    return out


def pochhammer_multi(args: list[PolyLike], n: int) -> MultiPoly:
    """(a_1, ..., a_r; q)_n."""
    out = lift(1)
    for a in args:
        out = out * pochhammer(a, n)
    return out


def q_power_binom(k: int) -> MultiPoly:
    """q^C(k,2)."""
    e = binomial(k, 2)
    return MultiPoly({(e,): 1}) if e else lift(1)


# ----------------------------------------------------------------------
# Carlitz q-Bernoulli numbers

_QBERN_CACHE: dict[int, RatFuncQ] = {}


def q_bernoulli(k: int) -> RatFuncQ:
    """beta_k = (1-q)^(-k) sum_j (-1)^j C(k,j) (j+1)/[j+1]_q.

    Assembled over the common denominator (1-q)^k [k+1]_q! so only one
    normalization happens per value.
    """
    if k < 0:
        raise DomainError(f"q_bernoulli needs k >= 0, got {k}")
    if k not in _QBERN_CACHE:
        full = q_factorial(k + 1)
        num = lift(0)
        for j in range(k + 1):
            part = full.divexact(q_int(j + 1))
            term = binomial(k, j) * (j + 1) * part
            num = num + (-term if j % 2 else term)
        den = (1 - var("q")) ** k * full
        _QBERN_CACHE[k] = ratfunc(num, den)
    return _QBERN_CACHE[k]


def q_bernoulli_seq() -> SequenceSpec:
    return SequenceSpec("q-bernoulli", q_bernoulli)


def q_binom_k2_seq(scale: PolyLike = 1) -> SequenceSpec:
    """a_k = scale * q^C(k,2)."""
    scale = lift(scale)
    return SequenceSpec("q-binom-k2", lambda k: scale * q_power_binom(k))


# ----------------------------------------------------------------------
# closed forms

def closed_hankel_q_bernoulli(n: int) -> RatFuncQ:
    """H_n(beta_k) = (-1)^C(n+1,2) q^C(n+1,3) prod ([j]_q!)^6/([2j]_q![2j+1]_q!)."""
    sign = -1 if binomial(n + 1, 2) % 2 else 1
    e = binomial(n + 1, 3)
    num = MultiPoly({(e,) if e else (): sign})
    den = lift(1)
    for j in range(1, n + 1):
        num = num * q_factorial(j) ** 6
        den = den * (q_factorial(2 * j) * q_factorial(2 * j + 1))
    return ratfunc(num, den)


def closed_hankel_q_power_binom(n: int) -> MultiPoly:
    """H_n(q^C(k,2)) = (-1)^C(n+1,2) q^(3C(n+1,3)) prod (1-q^j)^(n+1-j)."""
    q = var("q")
    sign = -1 if binomial(n + 1, 2) % 2 else 1
    out = lift(sign) * q ** (3 * binomial(n + 1, 3))
    for j in range(1, n + 1):
        out = out * (1 - q ** j) ** (n + 1 - j)
    return out


# ----------------------------------------------------------------------
# identity checks

def check_q_binomial_theorem(n: int) -> VerifyReport:
    """prod_{j<n} (a + q^j x) = sum_k q^C(k,2) qbinom(n,k) a^(n-k) x^k."""
    a, x, q = var("a"), var("x"), var("q")
    lhs = lift(1)
    power = lift(1)
    for _ in range(n):
        lhs = lhs * (a + power * x)
        power = power * q
    rhs = lift(0)
    for k in range(n + 1):
        rhs = rhs + q_power_binom(k) * qbinom(n, k) * a ** (n - k) * x ** k
    return compare("q-binomial-theorem", n, lhs, rhs)


def check_qbinom_routes(n: int) -> VerifyReport:
    """Pascal recursion agrees with the factorial quotient for all k <= n."""
    bad = [
        k for k in range(n + 1)
        if qbinom(n, k) != qbinom_by_factorials(n, k)
    ]
    return VerifyReport(
        identity="qbinom-two-routes", n=n, ok=not bad,
        lhs="pascal", rhs="factorial-quotient",
        detail=f"mismatch at k={bad}" if bad else f"k=0..{n}",
    )


def check_q_pascal(n: int) -> VerifyReport:
    """qbinom(N,M) - qbinom(N-1,M) = q^(N-M) qbinom(N-1,M-1) for all M <= N = n."""
    if n < 1:
        raise DomainError("the Pascal-type relation needs N >= 1")
    bad = []
    for m in range(n + 1):
        lhs = qbinom(n, m) - qbinom(n - 1, m)
        rhs = MultiPoly({(n - m,) if n > m else (): 1}) * qbinom(n - 1, m - 1)
        if lhs != rhs:
            bad.append(m)
    return VerifyReport(
        identity="q-pascal", n=n, ok=not bad,
        lhs="difference", rhs="shifted",
        detail=f"mismatch at m={bad}" if bad else f"m=0..{n}",
    )


def check_q_bernoulli_at_q1(k: int) -> VerifyReport:
    """beta_k at q=1 equals the Bernoulli number B_k."""
    from .bernoulli import bernoulli_number

    return compare(
        "q-bernoulli-classical-limit", k, q_bernoulli(k).at_q1(), bernoulli_number(k)
    )


def check_chapoton_zeng(n: int) -> VerifyReport:
    """H_n(beta_k) equals the Chapoton-Zeng product formula."""
    det = hankel_det(q_bernoulli_seq(), n)
    return compare("q-bernoulli-hankel-closed", n, det, closed_hankel_q_bernoulli(n))
