"""The two q-binomial transforms of a generic sequence and their Hankel theory.

A generic sequence is realized as the registry symbols alpha_0, alpha_1, ...
so determinants come out as literal multivariate polynomials; rational
specializations are supported through `alpha_from_values` for the sizes
where full symbolic expansion is too large.

The transforms of (alpha_k):

    plain:  alpha_k(x) = sum_l q^C(l,2) qbinom(k,l) alpha_(k-l) x^l
    tilde:  ~alpha_k(x) = sum_l q^C(l,2) qbinom(k,l) alpha_l x^(k-l)

and their reflections x^k f(1/x).  Both transforms have umbral product
forms, with the product attached to the x side:

    alpha_k(x)  = prod_{j<k} (A + q^j x)   |  A^m -> alpha_m
    ~alpha_k(x) = prod_{j<k} (q^j A + x)   |  A^m -> alpha_m

(the frequently printed variant with the q-powers on the A side in the
first product does not expand to the defining sum).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import IndexBeyondBoundError, NotPolynomialError
from .hankel import SequenceSpec, hankel_det, bareiss_det
from .polyring import MultiPoly, PolyLike, lift, var
from .qtools import closed_hankel_q_power_binom, q_power_binom, qbinom
from .rationals import binomial
from .report import VerifyReport, compare

GENERIC_BOUND = 12


def generic_alpha_seq() -> SequenceSpec:
    """alpha_k as ring symbols; supports k up to 12 (so n up to 6)."""
    return SequenceSpec(
        "alpha-generic", lambda k: var(f"alpha_{k}"), bound=GENERIC_BOUND
    )


def alpha_from_values(values: list) -> SequenceSpec:
    """Rational specialization of the generic sequence."""
    lifted = [lift(Fraction(v)) for v in values]
    return SequenceSpec(
        "alpha-values", lambda k: lifted[k], bound=len(lifted) - 1
    )


def alpha_poly(k: int, seq: SequenceSpec) -> MultiPoly:
    """The plain transform alpha_k(x)."""
    x = var("x")
    total = lift(0)
    power = lift(1)
    for l in range(k + 1):
        total = total + q_power_binom(l) * qbinom(k, l) * lift(seq(k - l)) * power
        if l < k:
            power = power * x
    return total


def alpha_tilde_poly(k: int, seq: SequenceSpec) -> MultiPoly:
    """The mirrored transform ~alpha_k(x)."""
    x = var("x")
    total = lift(0)
    power = lift(1)
    for l in range(k, -1, -1):
        total = total + q_power_binom(l) * qbinom(k, l) * lift(seq(l)) * power
        if l > 0:
            power = power * x
    return total


def reflect(kind: str, k: int, seq: SequenceSpec) -> MultiPoly:
    """x^k * transform(1/x), coming out as a genuine polynomial."""
    base = transform_poly(kind, k, seq)
    x = var("x")
    out = x ** k * base.subs("x", x ** -1)
    if out and out.valuation("x") < 0:
        raise NotPolynomialError(
            f"reflection of {kind} transform at k={k} kept a negative power"
        )
    return out


def transform_poly(kind: str, k: int, seq: SequenceSpec) -> MultiPoly:
    if kind == "plain":
        return alpha_poly(k, seq)
    if kind == "tilde":
        return alpha_tilde_poly(k, seq)
    raise IndexBeyondBoundError(f"unknown transform kind {kind!r}")


def plain_transform_seq(seq: SequenceSpec) -> SequenceSpec:
    return SequenceSpec(f"plain({seq.name})", lambda k: alpha_poly(k, seq))


def tilde_transform_seq(seq: SequenceSpec) -> SequenceSpec:
    return SequenceSpec(f"tilde({seq.name})", lambda k: alpha_tilde_poly(k, seq))


def reflected_seq(kind: str, seq: SequenceSpec) -> SequenceSpec:
    return SequenceSpec(f"{kind}-reflected({seq.name})", lambda k: reflect(kind, k, seq))


# ----------------------------------------------------------------------
# umbral product forms

def umbral_eval(p: MultiPoly, sym: str, seq: SequenceSpec) -> MultiPoly:
    """Linear evaluation sym^m -> seq(m) on every term of p."""
    if not p:
        return p
    top = p.degree(sym)
    total = lift(0)
    for m in range(top + 1):
        total = total + p.coeff(sym, m) * lift(seq(m))
    return total


def umbral_product(kind: str, k: int, seq: SequenceSpec) -> MultiPoly:
    """Expand the product form of a transform and evaluate the umbra."""
    s, x, q = var("s"), var("x"), var("q")
    prod = lift(1)
    power = lift(1)
    for _ in range(k):
        factor = (s + power * x) if kind == "plain" else (power * s + x)
        prod = prod * factor
        power = power * q
    return umbral_eval(prod, "s", seq)


def check_umbral_products(k: int, seq: SequenceSpec | None = None) -> list[VerifyReport]:
    seq = seq or generic_alpha_seq()
    return [
        compare(
            "umbral-product-plain", k,
            umbral_product("plain", k, seq), alpha_poly(k, seq),
            detail=f"seq={seq.name}",
        ),
        compare(
            "umbral-product-tilde", k,
            umbral_product("tilde", k, seq), alpha_tilde_poly(k, seq),
            detail=f"seq={seq.name}",
        ),
    ]


# ----------------------------------------------------------------------
# difference operators

def delta_apply(i: int, seqfun):
    """The operator Delta_i on sequence functions; Delta_0 is the identity."""
    if i == 0:
        return seqfun
    shift = MultiPoly({(i - 1,) if i > 1 else (): 1})

    def out(k: int):
        prev = lift(0) if k == 0 else lift(seqfun(k - 1))
        return lift(seqfun(k)) - shift * prev

    return out


def delta_chain(m: int, seqfun):
    """Delta_m Delta_(m-1) ... Delta_0."""
    fn = seqfun
    for i in range(1, m + 1):
        fn = delta_apply(i, fn)
    return fn


def delta_chain_closed(k: int, m: int, seq: SequenceSpec) -> MultiPoly:
    """sum_{l=m}^{k} q^((k-l)m + C(l,2)) qbinom(k-m, l-m) alpha_l x^l."""
    x, q = var("x"), var("q")
    total = lift(0)
    for l in range(m, k + 1):
        e = (k - l) * m + binomial(l, 2)
        q_pow = MultiPoly({(e,): 1}) if e else lift(1)
        total = total + q_pow * qbinom(k - m, l - m) * lift(seq(l)) * x ** l
    return total


def delta_chain_check(k: int, m: int, seq: SequenceSpec | None = None) -> VerifyReport:
    """The chain of Delta operators on the reflected tilde transform."""
    seq = seq or generic_alpha_seq()
    fn = delta_chain(m, lambda j: reflect("tilde", j, seq))
    return compare(
        "delta-chain-closed-form", k, fn(k), delta_chain_closed(k, m, seq),
        detail=f"m={m}",
    )


# ----------------------------------------------------------------------
# Hankel determinant checks

def vandermonde_q_check(n: int) -> VerifyReport:
    """H_n(q^C(k,2)) against its Vandermonde-style product formula."""
    det = hankel_det(SequenceSpec("q-binom-k2", q_power_binom), n)
    return compare("q-binom-k2-hankel-closed", n, det, closed_hankel_q_power_binom(n))


def check_reflection_dets(kind: str, n: int,
                          seq: SequenceSpec | None = None) -> VerifyReport:
    """H_n(reflected) = x^(n(n+1)) H_n(transform at 1/x)."""
    seq = seq or generic_alpha_seq()
    lhs = hankel_det(reflected_seq(kind, seq), n)
    x = var("x")
    inverted = SequenceSpec(
        f"{kind}-inverted({seq.name})",
        lambda k: transform_poly(kind, k, seq).subs("x", x ** -1),
    )
    rhs = x ** (n * (n + 1)) * hankel_det(inverted, n)
    return compare(
        "reflection-determinant", n, lhs, rhs, detail=f"kind={kind}, seq={seq.name}"
    )


def plain_leading_closed(n: int, seq: SequenceSpec) -> MultiPoly:
    """alpha_0^(n+1) (-1)^C(n+1,2) q^(3C(n+1,3)) prod (1-q^j)^(n+1-j)."""
    return lift(seq(0)) ** (n + 1) * closed_hankel_q_power_binom(n)


def tilde_leading_closed(n: int, seq: SequenceSpec) -> MultiPoly:
    """alpha_0...alpha_n (-1)^C(n+1,2) q^(2C(n+1,3)) prod (1-q^j)^(n+1-j)."""
    q = var("q")
    sign = -1 if binomial(n + 1, 2) % 2 else 1
    out = lift(sign) * q ** (2 * binomial(n + 1, 3))
    for j in range(n + 1):
        out = out * lift(seq(j))
    for j in range(1, n + 1):
        out = out * (1 - q ** j) ** (n + 1 - j)
    return out


def check_theorem_qalpha(n: int, seq: SequenceSpec | None = None) -> VerifyReport:
    """Degree and leading coefficient of H_n(alpha_k(x)).

    The determinant is a polynomial in x of degree exactly n(n+1) and its
    top coefficient is alpha_0^(n+1) (-1)^C(n+1,2) q^(3C(n+1,3))
    prod_j (1-q^j)^(n+1-j).
    """
    seq = seq or generic_alpha_seq()
    det = hankel_det(plain_transform_seq(seq), n)
    degree = det.degree("x") if det else -1
    leading = det.coeff("x", degree)
    expected = plain_leading_closed(n, seq)
    ok = degree == n * (n + 1) and leading == expected
    return VerifyReport(
        identity="plain-transform-leading", n=n, ok=ok,
        lhs=f"deg={degree}, lead={leading}",
        rhs=f"deg={n * (n + 1)}, lead={expected}",
        detail=f"seq={seq.name}",
    )


def check_theorem_qalpha_tilde(n: int, seq: SequenceSpec | None = None) -> VerifyReport:
    """Degree and leading coefficient of H_n(~alpha_k(x)).

    Degree is n(n+1)/2, half of every term in the determinant expansion,
    with top coefficient alpha_0...alpha_n (-1)^C(n+1,2) q^(2C(n+1,3))
    prod_j (1-q^j)^(n+1-j).
    """
    seq = seq or generic_alpha_seq()
    det = hankel_det(tilde_transform_seq(seq), n)
    degree = det.degree("x") if det else -1
    leading = det.coeff("x", degree)
    expected = tilde_leading_closed(n, seq)
    ok = degree == n * (n + 1) // 2 and leading == expected
    return VerifyReport(
        identity="tilde-transform-leading", n=n, ok=ok,
        lhs=f"deg={degree}, lead={leading}",
        rhs=f"deg={n * (n + 1) // 2}, lead={expected}",
        detail=f"seq={seq.name}",
    )


def check_q1_degeneration(n: int, seq: SequenceSpec | None = None) -> VerifyReport:
    """At q=1 the plain transform is the binomial transform: H_n is invariant."""
    seq = seq or generic_alpha_seq()
    at_q1 = SequenceSpec(
        f"plain-q1({seq.name})", lambda k: alpha_poly(k, seq).subs("q", 1)
    )
    lhs = hankel_det(at_q1, n)
    rhs = hankel_det(seq, n)
    return compare(
        "plain-transform-q1-invariance", n, lhs, rhs, detail=f"seq={seq.name}"
    )


def check_row_reduction(n: int, seq: SequenceSpec | None = None) -> list[VerifyReport]:
    """The staged row operations behind the tilde-transform theorem.

    Build the matrix with (i,j) entry Delta_i...Delta_0(~alpha'_(i+j));
    its determinant equals H_n(~alpha'_k), each row i is divisible by x^i,
    and dividing row i by x^i then setting x=0 leaves the rank-one-like
    matrix q^(ij + C(i,2)) alpha_i whose determinant carries the leading
    coefficient.
    """
    seq = seq or generic_alpha_seq()
    chain_rows = [delta_chain(i, lambda j: reflect("tilde", j, seq)) for i in range(n + 1)]
    transformed = [[chain_rows[i](i + j) for j in range(n + 1)] for i in range(n + 1)]
    det_plain = hankel_det(reflected_seq("tilde", seq), n)
    det_transformed = bareiss_det(transformed)

    vals_ok = True
    const_ok = True
    x, q = var("x"), var("q")
    for i, row in enumerate(transformed):
        for j, entry in enumerate(row):
            if entry and entry.valuation("x") < i:
                vals_ok = False
                continue
            shifted = entry.divexact(x ** i) if entry else entry
            const = shifted.subs("x", 0) if shifted else lift(0)
            if const != q ** (i * j + binomial(i, 2)) * lift(seq(i)):
                const_ok = False
    return [
        compare("row-reduction-determinant", n, det_transformed, det_plain),
        VerifyReport(
            identity="row-reduction-valuation", n=n, ok=vals_ok,
            lhs="val_x(entry of row i)", rhs=">= i",
        ),
        VerifyReport(
            identity="row-reduction-constant-matrix", n=n, ok=const_ok,
            lhs="x^(-i) entries at x=0", rhs="q^(ij+C(i,2)) alpha_i",
        ),
    ]
