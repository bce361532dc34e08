"""Basic-hypergeometric orthogonal polynomials and moment-route determinants.

Covers the big q-Jacobi family through terminating 3phi2 sums, its
three-term recurrences (raw and monic-normalized), the Al-Salam--Carlitz V
polynomials, the moment sequence of the (uv/(xq), 0, u/q) specialization,
and the product evaluation of H_n for the Pochhammer-weighted sequence
alpha_k = q^(-C(k,2)) (u;q)_k v^k under the mirrored q-binomial transform.

Division discipline: there is no multivariate fraction field here.  The
terminating series are cleared denominator-by-denominator, producing a
`ClearedRatio` (an exact numerator polynomial plus an explicit list of
denominator factors); identities on ratios are decided by cross
multiplication, and the (q^-n;q)_l prefactors are rewritten through

    (q^-n;q)_l / (q;q)_l = (-1)^l q^(C(l,2) - n l) qbinom(n, l)

so no Pochhammer quotient is ever divided out.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .hankel import SequenceSpec, hankel_det, heilermann_det
from .polyring import MultiPoly, PolyLike, lift, var
from .qtools import pochhammer, q_power_binom, qbinom
from .rationals import binomial
from .report import VerifyReport, compare


@dataclass(frozen=True)
class ClearedRatio:
    """num / prod(dens) without any reduction; equality by cross products."""

    num: MultiPoly
    dens: tuple[MultiPoly, ...] = ()

    @staticmethod
    def of(value: PolyLike, dens: tuple[MultiPoly, ...] = ()) -> "ClearedRatio":
        kept = tuple(d for d in dens if d != 1)
        for d in kept:
            if not d:
                raise DomainError("zero denominator factor in ClearedRatio")
        return ClearedRatio(lift(value), kept)

    def den(self) -> MultiPoly:
        out = lift(1)
        for d in self.dens:
            out = out * d
        return out

    def __add__(self, other) -> "ClearedRatio":
        other = _as_ratio(other)
        common, mine, theirs = _split_common(self.dens, other.dens)
        num = self.num * _product(theirs) + other.num * _product(mine)
        return ClearedRatio.of(num, common + mine + theirs)

    def __sub__(self, other) -> "ClearedRatio":
        return self + (-_as_ratio(other))

    def __neg__(self) -> "ClearedRatio":
        return ClearedRatio(-self.num, self.dens)

    def __mul__(self, other) -> "ClearedRatio":
        other = _as_ratio(other)
        return ClearedRatio.of(self.num * other.num, self.dens + other.dens)

    __rmul__ = __mul__
    __radd__ = __add__

    def same_value(self, other) -> bool:
        other = _as_ratio(other)
        _, mine, theirs = _split_common(self.dens, other.dens)
        return self.num * _product(theirs) == other.num * _product(mine)


def _as_ratio(value) -> ClearedRatio:
    if isinstance(value, ClearedRatio):
        return value
    return ClearedRatio.of(lift(value))


def _product(factors: tuple[MultiPoly, ...]) -> MultiPoly:
    out = lift(1)
    for f in factors:
        out = out * f
    return out


def _split_common(left: tuple[MultiPoly, ...], right: tuple[MultiPoly, ...]):
    """Split into (shared multiset, left-only, right-only) by equality.

    Cancelling shared denominator factors before a cross product keeps the
    polynomial sizes down; it never changes the represented value.
    """
    rest_right = list(right)
    common: list[MultiPoly] = []
    rest_left: list[MultiPoly] = []
    for d in left:
        if d in rest_right:
            rest_right.remove(d)
            common.append(d)
        else:
            rest_left.append(d)
    return tuple(common), tuple(rest_left), tuple(rest_right)


# ----------------------------------------------------------------------
# terminating series

def phi32_terminating(n: int, a2: PolyLike, a3: PolyLike, b1: PolyLike,
                      b2: PolyLike, t: PolyLike) -> ClearedRatio:
    """3phi2(q^-n, a2, a3; b1, b2; q, t) summed to its natural cutoff.

    The first numerator parameter is q^-n, so the series stops at l = n.
    Result is the exact ratio with denominator factors (b1;q)_n (b2;q)_n.
    """
    if n < 0:
        raise DomainError(f"phi32_terminating needs n >= 0, got {n}")
    a2, a3, b1, b2, t = (lift(p) for p in (a2, a3, b1, b2, t))
    q = var("q")
    total = lift(0)
    for l in range(n + 1):
        e = binomial(l, 2) - n * l
        prefactor = q ** e * qbinom(n, l)
        if l % 2:
            prefactor = -prefactor
        term = (
            prefactor
            * pochhammer(a2, l)
            * pochhammer(a3, l)
            * t ** l
            * pochhammer(b1 * q ** l, n - l)
            * pochhammer(b2 * q ** l, n - l)
        )
        total = total + term
    return ClearedRatio.of(total, _poch_factors(b1, n) + _poch_factors(b2, n))


def _poch_factors(base: MultiPoly, n: int) -> tuple[MultiPoly, ...]:
    """(base;q)_n split into its linear factors 1 - base q^j."""
    q = var("q")
    return tuple(1 - base * q ** j for j in range(n))


def big_q_jacobi(n: int, z: PolyLike, a: PolyLike, b: PolyLike,
                 c: PolyLike) -> ClearedRatio:
    """P_n(z; a, b, c; q) = 3phi2(q^-n, abq^(n+1), z; aq, cq; q, q)."""
    q = var("q")
    a, b, c = lift(a), lift(b), lift(c)
    return phi32_terminating(n, a * b * q ** (n + 1), z, a * q, c * q, q)


def jacobi_A(n: int) -> ClearedRatio:
    """A_n of the big q-Jacobi recurrence, in symbols a, b, c, q."""
    q, a, b, c = var("q"), var("a"), var("b"), var("c")
    num = (1 - a * q ** (n + 1)) * (1 - c * q ** (n + 1)) * (1 - a * b * q ** (n + 1))
    return ClearedRatio.of(
        num, (1 - a * b * q ** (2 * n + 1), 1 - a * b * q ** (2 * n + 2))
    )


def jacobi_C(n: int) -> ClearedRatio:
    """C_n of the big q-Jacobi recurrence; the c^-1 factor is pre-cleared."""
    q, a, b, c = var("q"), var("a"), var("b"), var("c")
    num = -a * q ** (n + 1) * (c - a * b * q ** n) * (1 - q ** n) * (1 - b * q ** n)
    return ClearedRatio.of(
        num, (1 - a * b * q ** (2 * n), 1 - a * b * q ** (2 * n + 1))
    )


def jacobi_recurrence_check(n: int) -> VerifyReport:
    """(z-1) P_n = A_n P_(n+1) - (A_n + C_n) P_n + C_n P_(n-1), symbolic."""
    z, a, b, c = var("z"), var("a"), var("b"), var("c")
    p_prev = big_q_jacobi(n - 1, z, a, b, c)
    p_cur = big_q_jacobi(n, z, a, b, c)
    p_next = big_q_jacobi(n + 1, z, a, b, c)
    an, cn = jacobi_A(n), jacobi_C(n)
    lhs = _as_ratio(z - 1) * p_cur
    rhs = an * p_next - (an + cn) * p_cur + cn * p_prev
    return VerifyReport(
        identity="big-q-jacobi-recurrence", n=n, ok=lhs.same_value(rhs),
        lhs="(z-1) P_n", rhs="A_n P_(n+1) - (A_n+C_n) P_n + C_n P_(n-1)",
    )


def normalized_q_poly(n: int) -> ClearedRatio:
    """Q_n = (aq, cq; q)_n / (abq^(n+1); q)_n * P_n, already cleared.

    The (aq,cq;q)_n prefactor is exactly the denominator that
    phi32_terminating cleared, so the numerator is reused as-is.
    """
    z, a, b, c, q = var("z"), var("a"), var("b"), var("c"), var("q")
    p = big_q_jacobi(n, z, a, b, c)
    return ClearedRatio.of(p.num, _poch_factors(a * b * q ** (n + 1), n))


def normalized_q_check(n: int) -> list[VerifyReport]:
    """Monic three-term recurrence and monicity of the normalized family."""
    z = var("z")
    q_prev = normalized_q_poly(n - 1)
    q_cur = normalized_q_poly(n)
    q_next = normalized_q_poly(n + 1)
    an, cn = jacobi_A(n), jacobi_C(n)
    rhs = (_as_ratio(z - 1) + an + cn) * q_cur - (jacobi_A(n - 1) * cn) * q_prev
    rec = VerifyReport(
        identity="big-q-jacobi-normalized-recurrence", n=n,
        ok=q_next.same_value(rhs),
        lhs="Q_(n+1)", rhs="(z + A_n + C_n - 1) Q_n - A_(n-1) C_n Q_(n-1)",
    )
    monic = compare(
        "big-q-jacobi-normalized-monic", n,
        q_cur.num.coeff("z", n), q_cur.den(),
        detail="[z^n] of the cleared numerator equals the cleared denominator",
    )
    degree = compare("big-q-jacobi-normalized-degree", n, q_cur.num.degree("z"), n)
    return [rec, monic, degree]


def check_jacobi_degenerate(n: int) -> VerifyReport:
    """At a = b = c = 0 the big q-Jacobi polynomial collapses to z^n."""
    z = var("z")
    p = big_q_jacobi(n, z, 0, 0, 0)
    return compare(
        "big-q-jacobi-degenerate", n, p.num, z ** n, detail="a=b=c=0"
    )


def check_phi32_linear(_n: int = 1) -> VerifyReport:
    """Degree-one terminating series with both b-parameters zero.

    3phi2(q^-1, s, 0; 0, 0; q, q) = 1 - (1 - s) = s, the hand expansion.
    """
    s = var("s")
    value = phi32_terminating(1, s, 0, 0, 0, var("q"))
    ok = value.same_value(_as_ratio(s))
    return VerifyReport(
        identity="phi32-degree-one", n=1, ok=ok, lhs="3phi2 sum", rhs="s",
    )


# ----------------------------------------------------------------------
# the (uv/(xq), 0, u/q) specialization and its moments

def moments_mu(k: int) -> MultiPoly:
    """k-th moment of the specialized big q-Jacobi family, Laurent in x.

    mu_k = sum_l (q^-k;q)_l (uv/x;q)_l (u;q)_l q^l / (q;q)_l, written
    division-free via the qbinom rewriting.  x-exponents lie in [-k, 0].
    """
    if k < 0:
        raise DomainError(f"moments_mu needs k >= 0, got {k}")
    q, u, v, x = var("q"), var("u"), var("v"), var("x")
    uv_over_x = u * v * x ** -1
    total = lift(0)
    for l in range(k + 1):
        e = binomial(l, 2) - k * l + l
        prefactor = q ** e * qbinom(k, l)
        if l % 2:
            prefactor = -prefactor
        total = total + prefactor * pochhammer(uv_over_x, l) * pochhammer(u, l)
    return total


def moments_mu_seq() -> SequenceSpec:
    return SequenceSpec("alpha-uv-moments", moments_mu)


def al_salam_carlitz_v(k: int, a: PolyLike, x: PolyLike) -> MultiPoly:
    """V_k^(a)(x;q) = (-1)^k q^(-C(k,2)) sum_l qbinom(k,l) a^l (x;q)_(k-l)."""
    a, x = lift(a), lift(x)
    q = var("q")
    total = lift(0)
    for l in range(k + 1):
        total = total + qbinom(k, l) * a ** l * pochhammer(x, k - l)
    total = total * q ** (-binomial(k, 2))
    return -total if k % 2 else total


def alpha_uv_tilde(k: int) -> MultiPoly:
    """The mirrored transform of alpha_k = q^(-C(k,2)) (u;q)_k v^k.

    alpha~_k(x) = sum_l qbinom(k,l) (u;q)_l v^l x^(k-l).
    """
    u, v, x = var("u"), var("v"), var("x")
    total = lift(0)
    for l in range(k + 1):
        total = total + qbinom(k, l) * pochhammer(u, l) * v ** l * x ** (k - l)
    return total


def alpha_uv_raw(k: int) -> MultiPoly:
    """alpha_k = q^(-C(k,2)) (u;q)_k v^k, Laurent in q."""
    q, u, v = var("q"), var("u"), var("v")
    return q ** (-binomial(k, 2)) * pochhammer(u, k) * var("v") ** k


def alpha_uv_tilde_seq(u_val: Fraction | None = None,
                       v_val: Fraction | None = None) -> SequenceSpec:
    """The sequence alpha~_k(x), optionally with rational u and v."""

    def term(k: int) -> MultiPoly:
        p = alpha_uv_tilde(k)
        if u_val is not None:
            p = p.subs("u", u_val)
        if v_val is not None:
            p = p.subs("v", v_val)
        return p

    return SequenceSpec("alpha-uv", term)


def alpha_uv_symmetry_check(k: int) -> VerifyReport:
    """The two displayed summation forms of alpha~_k(x) agree."""
    u, v, x = var("u"), var("v"), var("x")
    mirrored = lift(0)
    for l in range(k + 1):
        mirrored = (
            mirrored
            + qbinom(k, l) * pochhammer(u, k - l) * v ** (k - l) * x ** l
        )
    return compare("alpha-uv-symmetry", k, alpha_uv_tilde(k), mirrored)


def check_asc_bridge(k: int) -> VerifyReport:
    """V_k^((x/v))(u;q) q^C(k,2) (-v)^k = alpha~_k(x)."""
    u, v, x = var("u"), var("v"), var("x")
    vk = al_salam_carlitz_v(k, x * v ** -1, u)
    lhs = vk * q_power_binom(k) * (-v) ** k
    return compare("al-salam-carlitz-bridge", k, lhs, alpha_uv_tilde(k))


def check_moment_bridge(k: int) -> VerifyReport:
    """(x/u)^k mu_k = alpha~_k(x)."""
    u, x = var("u"), var("x")
    lhs = (x * u ** -1) ** k * moments_mu(k)
    return compare("moment-bridge", k, lhs, alpha_uv_tilde(k))


def specialized_a(j: int) -> MultiPoly:
    """A_j at (a,b,c) = (uv/(xq), 0, u/q): (1 - uvq^j/x)(1 - uq^j)."""
    q, u, v, x = var("q"), var("u"), var("v"), var("x")
    return (1 - u * v * q ** j * x ** -1) * (1 - u * q ** j)


def specialized_c(j: int) -> MultiPoly:
    """C_j at (a,b,c) = (uv/(xq), 0, u/q): -u^2 v q^(j-1) (1-q^j)/x."""
    q, u, v, x = var("q"), var("u"), var("v"), var("x")
    return -(u ** 2) * v * q ** (j - 1) * (1 - q ** j) * x ** -1


def check_specialized_coeffs(j: int) -> VerifyReport:
    """The displayed specialized A_j, C_j really are the generic ones at
    (a,b,c) = (uv/(xq), 0, u/q)."""
    q, u, v, x = var("q"), var("u"), var("v"), var("x")
    assignment = {"a": u * v * x ** -1 * q ** -1, "b": lift(0), "c": u * q ** -1}
    ga, gc = jacobi_A(j), jacobi_C(j)
    a_ok = ga.num.subs_many(assignment) == specialized_a(j) * ga.den().subs_many(assignment)
    c_ok = gc.num.subs_many(assignment) == specialized_c(j) * gc.den().subs_many(assignment)
    return VerifyReport(
        identity="specialized-recurrence-coeffs", n=j, ok=a_ok and c_ok,
        lhs="generic A_j, C_j at (uv/(xq), 0, u/q)", rhs="displayed forms",
    )


def closed_final_example(n: int) -> MultiPoly:
    """v^C(n+1,2) q^C(n+1,3) prod_j (uvq^(j-1) - x)^(n+1-j) (u,q;q)_(n+1-j)."""
    q, u, v, x = var("q"), var("u"), var("v"), var("x")
    out = v ** binomial(n + 1, 2) * q ** binomial(n + 1, 3)
    for j in range(1, n + 1):
        factor = (
            (u * v * q ** (j - 1) - x) ** (n + 1 - j)
            * pochhammer(u, n + 1 - j)
            * pochhammer(q, n + 1 - j)
        )
        out = out * factor
    return out


def final_example_route_direct(n: int, u_val: Fraction | None = None,
                               v_val: Fraction | None = None) -> MultiPoly:
    return hankel_det(alpha_uv_tilde_seq(u_val, v_val), n)


def final_example_route_moments(n: int) -> MultiPoly:
    """(x/u)^(n(n+1)) * Heilermann product of the specialized recurrence."""
    u, x = var("u"), var("x")
    v_coeffs = [specialized_a(j - 1) * specialized_c(j) for j in range(1, n + 1)]
    het = heilermann_det(lift(1), v_coeffs, n)
    return (x * u ** -1) ** (n * (n + 1)) * het


def check_final_example(n: int, u_val: Fraction | None = None,
                        v_val: Fraction | None = None) -> list[VerifyReport]:
    """Both routes to H_n(alpha~_k(x)) against the closed product."""
    closed = closed_final_example(n)
    route2 = final_example_route_moments(n)
    detail = ""
    if u_val is not None:
        closed = closed.subs("u", u_val)
        route2 = route2.subs("u", u_val)
        detail = f"u={u_val}"
    if v_val is not None:
        closed = closed.subs("v", v_val)
        route2 = route2.subs("v", v_val)
        detail += f", v={v_val}" if detail else f"v={v_val}"
    route1 = final_example_route_direct(n, u_val, v_val)
    return [
        compare("final-example-direct", n, route1, closed, detail=detail),
        compare("final-example-heilermann", n, route2, closed, detail=detail),
        compare("final-example-routes-agree", n, route1, route2, detail=detail),
    ]


# ----------------------------------------------------------------------
# closing-remark specializations

def pochhammer_u_seq() -> SequenceSpec:
    return SequenceSpec("pochhammer-u", lambda k: pochhammer(var("u"), k))


def closed_pochhammer_u_hankel(n: int) -> MultiPoly:
    """H_n((u;q)_k) = u^C(n+1,2) q^(2C(n+1,3)) prod_j (q,u;q)_(n+1-j)."""
    q, u = var("q"), var("u")
    out = u ** binomial(n + 1, 2) * q ** (2 * binomial(n + 1, 3))
    for j in range(1, n + 2):
        out = out * pochhammer(q, n + 1 - j) * pochhammer(u, n + 1 - j)
    return out


def check_remark_specialization(n: int) -> list[VerifyReport]:
    """The closing product formulas and the cross-multiplied ratio identity."""
    q, u, v, x = var("q"), var("u"), var("v"), var("x")
    poch_det = hankel_det(pochhammer_u_seq(), n)
    r1 = compare(
        "pochhammer-u-hankel-closed", n, poch_det, closed_pochhammer_u_hankel(n)
    )

    scaled = SequenceSpec(
        "alpha-uv-plain-scaled", lambda k: q_power_binom(k) * alpha_uv_raw(k)
    )
    scaled_det = hankel_det(scaled, n)
    scaled_closed = (
        u ** binomial(n + 1, 2)
        * v ** (n * (n + 1))
        * q ** (2 * binomial(n + 1, 3))
    )
    for l in range(1, n + 2):
        scaled_closed = scaled_closed * pochhammer(u, n + 1 - l) * pochhammer(q, n + 1 - l)
    r2 = compare("alpha-uv-plain-scaled-hankel", n, scaled_det, scaled_closed)

    tilde_det = hankel_det(alpha_uv_tilde_seq(), n)
    ratio_num = lift(1)
    for j in range(n + 1):
        ratio_num = ratio_num * (u * v * q ** j - x) ** (n - j)
    ratio_den = (u * v) ** binomial(n + 1, 2) * q ** binomial(n + 1, 3)
    r3 = compare(
        "remark-ratio-identity", n,
        tilde_det * ratio_den, scaled_det * ratio_num,
        detail="cross-multiplied",
    )
    return [r1, r2, r3]


# ----------------------------------------------------------------------
# independent moment oracle

def moments_from_recurrence(a0, us: list, vs: list, count: int) -> list:
    """First `count` moments of the functional with L(p_0)=a0, L(p_j)=0.

    Expands z^k in the monic basis driven by p_(j+1) = (u_j + z) p_j
    - v_j p_(j-1), equivalently z p_j = p_(j+1) - u_j p_j + v_j p_(j-1);
    the k-th moment is then the p_0 coordinate of z^k times a0.
    """
    if len(us) < count - 1 or len(vs) < max(count - 2, 0):
        raise DomainError("not enough recurrence coefficients for the span")
    coords: dict[int, MultiPoly] = {0: lift(1)}
    out = [lift(a0)]
    for _ in range(count - 1):
        nxt: dict[int, MultiPoly] = {}
        for j, cf in coords.items():
            for target, mult in ((j + 1, lift(1)), (j, -lift(us[j])),
                                 (j - 1, lift(vs[j - 1]) if j >= 1 else None)):
                if mult is None:
                    continue
                add = cf * mult
                nxt[target] = nxt.get(target, lift(0)) + add
        coords = {j: cf for j, cf in nxt.items() if cf}
        out.append(coords.get(0, lift(0)) * a0)
    return out


def check_moments_vs_recurrence(count: int) -> VerifyReport:
    """Corrected closed moments equal the recurrence-generated ones."""
    us = [specialized_a(j) + specialized_c(j) - 1 for j in range(count)]
    vs = [specialized_a(j - 1) * specialized_c(j) for j in range(1, count + 1)]
    generated = moments_from_recurrence(lift(1), us, vs, count + 1)
    bad = [k for k in range(count + 1) if generated[k] != moments_mu(k)]
    return VerifyReport(
        identity="moments-recurrence-agreement", n=count, ok=not bad,
        lhs="recurrence moments", rhs="closed moments",
        detail=f"mismatch at k={bad}" if bad else f"k=0..{count}",
    )


def check_heilermann_synthetic(us: list, vs: list, n: int) -> VerifyReport:
    """Heilermann product vs direct determinant on synthetic recurrence data."""
    moments = moments_from_recurrence(lift(1), us, vs, 2 * n + 1)
    seq = SequenceSpec("synthetic-moments", lambda k: moments[k], bound=2 * n)
    direct = hankel_det(seq, n)
    product = heilermann_det(lift(1), [lift(v) for v in vs], n)
    return compare(
        "heilermann-synthetic", n, direct, product,
        detail=f"u={[str(u) for u in us[:n]]}, v={[str(v) for v in vs[:n]]}",
    )
