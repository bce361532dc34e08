"""Sparse multivariate Laurent polynomials over exact rationals.

Representation
--------------
A polynomial is a mapping {monomial: coefficient}.  A monomial is a tuple of
signed integer exponents indexed by the fixed symbol registry, with trailing
zeros trimmed, so `q*x` is `(1, 1)` and the constant monomial is `()`.
Coefficients are `int` when integral and `fractions.Fraction` otherwise,
never zero.  With those conventions two equal values always have equal
dictionaries, so value equality is representation equality.

The registry order fixes the graded-lex term order used for display and for
leading-term logic: compare total degree first, then the exponent vector in
registry order.  The registry is fixed at import time; everything in this
package draws its symbols from it.

Negative exponents are first class (Laurent polynomials).  There is exact
division (`divexact`), substitution, coefficient extraction and degree /
valuation queries, but deliberately no multivariate gcd and no general
fraction field: the only quotient type is RatFuncQ, rational functions in
the single symbol q.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Mapping, Union

from .errors import (
    DomainError,
    NegativeExponentSubstitutionError,
    NotDivisibleError,
    ZeroDenominatorError,
    ZeroPolynomialError,
)

SYMBOLS: tuple[str, ...] = (
    "q", "x", "u", "v", "a", "b", "c", "z", "w", "s",
) + tuple(f"alpha_{i}" for i in range(13))

_SYM_INDEX: dict[str, int] = {name: i for i, name in enumerate(SYMBOLS)}
_NSYMS = len(SYMBOLS)

Coeff = Union[int, Fraction]
Monomial = tuple[int, ...]
Scalar = Union[int, Fraction]
PolyLike = Union["MultiPoly", int, Fraction]


def symbol_index(name: str) -> int:
    try:
        return _SYM_INDEX[name]
    except KeyError:
        raise DomainError(f"unknown symbol {name!r}; registry is {SYMBOLS}") from None


def _as_coeff(value: Coeff) -> Coeff:
    """Normalize a scalar: integral Fractions collapse to int."""
    if type(value) is int:
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, int):
        return int(value)
    raise TypeError(f"not an exact scalar: {value!r}")


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    if len(m1) < len(m2):
        m1, m2 = m2, m1
    out = list(m1)
    for i, e in enumerate(m2):
        out[i] += e
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _order_key(mono: Monomial) -> tuple:
    return (sum(mono), mono + (0,) * (_NSYMS - len(mono)))


class MultiPoly:
    """Immutable sparse Laurent polynomial over the registry symbols."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Monomial, Coeff] | None = None):
        # `terms` must already be canonical; build values with var()/const()
        # or arithmetic instead of calling this directly.
        self._terms: dict[Monomial, Coeff] = {} if terms is None else terms

    @classmethod
    def _make(cls, raw: dict[Monomial, Coeff]) -> "MultiPoly":
        terms = {}
        for mono, coeff in raw.items():
            coeff = _as_coeff(coeff)
            if coeff:
                terms[mono] = coeff
        return cls(terms)

    # ------------------------------------------------------------------
    # inspection

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def terms(self) -> list[tuple[Monomial, Coeff]]:
        """Term list sorted descending in graded-lex order."""
        return sorted(self._terms.items(), key=lambda kv: _order_key(kv[0]), reverse=True)

    def symbols(self) -> list[str]:
        """Registry names of the symbols that actually occur."""
        seen: set[int] = set()
        for mono in self._terms:
            for i, e in enumerate(mono):
                if e:
                    seen.add(i)
        return [SYMBOLS[i] for i in sorted(seen)]

    def is_constant(self) -> bool:
        return all(not mono for mono in self._terms)

    def as_rational(self) -> Fraction:
        """The value of a constant polynomial; DomainError otherwise."""
        if not self._terms:
            return Fraction(0)
        if not self.is_constant():
            raise DomainError(f"not a constant polynomial: {self}")
        return Fraction(self._terms[()])

    def degree(self, sym: str) -> int:
        """Largest exponent of sym (0 when absent); zero poly is an error."""
        if not self._terms:
            raise ZeroPolynomialError("degree of the zero polynomial")
        i = symbol_index(sym)
        return max((m[i] if i < len(m) else 0) for m in self._terms)

    def valuation(self, sym: str) -> int:
        """Smallest exponent of sym (0 when absent); zero poly is an error."""
        if not self._terms:
            raise ZeroPolynomialError("valuation of the zero polynomial")
        i = symbol_index(sym)
        return min((m[i] if i < len(m) else 0) for m in self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("total degree of the zero polynomial")
        return max(sum(m) for m in self._terms)

    # ------------------------------------------------------------------
    # ring operations

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({m: -c for m, c in self._terms.items()})

    def __add__(self, other: PolyLike) -> "MultiPoly":
        other = lift(other)
        if not self._terms:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _as_coeff(s)
            else:
                out.pop(m, None)
        return MultiPoly(out)

    __radd__ = __add__

    def __sub__(self, other: PolyLike) -> "MultiPoly":
        return self + (-lift(other))

    def __rsub__(self, other: PolyLike) -> "MultiPoly":
        return lift(other) + (-self)

    def __mul__(self, other: PolyLike) -> "MultiPoly":
        other = lift(other)
        ta, tb = self._terms, other._terms
        if not ta or not tb:
            return _ZERO
        if len(ta) > len(tb):
            ta, tb = tb, ta
        if len(ta) == 1:
            (ma, ca), = ta.items()
            if not ma:
                if ca == 1:
                    return MultiPoly(tb)
                return MultiPoly._make({m: ca * c for m, c in tb.items()})
            return MultiPoly._make({_mono_mul(ma, m): ca * c for m, c in tb.items()})
        return MultiPoly._make(_mul_sparse(ta, tb))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            if len(self._terms) != 1:
                raise DomainError("negative powers exist only for single-term values")
            (mono, coeff), = self._terms.items()
            inv_mono = tuple(-e for e in mono)
            while inv_mono and inv_mono[-1] == 0:
                inv_mono = inv_mono[:-1]
            base = MultiPoly._make({inv_mono: Fraction(1, 1) / coeff})
            return base ** (-exponent)
        result = _ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def divexact(self, divisor: PolyLike) -> "MultiPoly":
        """Exact quotient self/divisor; NotDivisibleError if remainder != 0."""
        divisor = lift(divisor)
        td = divisor._terms
        if not td:
            raise ZeroDenominatorError("exact division by zero")
        if not self._terms:
            return _ZERO
        if len(td) == 1:
            (md, cd), = td.items()
            inv = Fraction(1, 1) / cd
            if not md:
                return MultiPoly._make({m: c * inv for m, c in self._terms.items()})
            neg = tuple(-e for e in md)
            return MultiPoly._make(
                {_mono_mul(m, neg): c * inv for m, c in self._terms.items()}
            )
        return MultiPoly._make(_div_sparse(self._terms, td))

    # ------------------------------------------------------------------
    # structural operations

    def coeff(self, sym: str, power: int) -> "MultiPoly":
        """The coefficient of sym**power, a polynomial without sym."""
        i = symbol_index(sym)
        out: dict[Monomial, Coeff] = {}
        for m, c in self._terms.items():
            e = m[i] if i < len(m) else 0
            if e != power:
                continue
            if i < len(m):
                rest = list(m)
                rest[i] = 0
                while rest and rest[-1] == 0:
                    rest.pop()
                out[tuple(rest)] = c
            else:
                out[m] = c
        return MultiPoly(out)

    def subs(self, sym: str, value: PolyLike) -> "MultiPoly":
        """Substitute value for sym.

        Negative powers of sym require value to be a single nonzero term
        (so its inverse exists in the Laurent ring).
        """
        i = symbol_index(sym)
        value = lift(value)
        groups: dict[int, dict[Monomial, Coeff]] = {}
        for m, c in self._terms.items():
            e = m[i] if i < len(m) else 0
            if i < len(m):
                rest = list(m)
                rest[i] = 0
                while rest and rest[-1] == 0:
                    rest.pop()
                key = tuple(rest)
            else:
                key = m
            groups.setdefault(e, {})[key] = c
        if not groups:
            return self
        if min(groups) < 0 and len(value._terms) != 1:
            raise NegativeExponentSubstitutionError(
                f"substituting into {sym}**{min(groups)} needs a single nonzero term"
            )
        result = _ZERO
        nonneg = sorted((e for e in groups if e >= 0), reverse=True)
        if nonneg:
            acc = MultiPoly(groups[nonneg[0]])
            for prev, e in zip(nonneg, nonneg[1:]):
                acc = acc * value ** (prev - e) + MultiPoly(groups[e])
            result = acc * value ** nonneg[-1]
        for e in groups:
            if e < 0:
                result = result + MultiPoly(groups[e]) * value ** e
        return result

    def subs_many(self, assignments: Mapping[str, PolyLike]) -> "MultiPoly":
        out = self
        for sym, value in assignments.items():
            out = out.subs(sym, value)
        return out

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        """Evaluate at an all-rational point covering every present symbol."""
        total = Fraction(0)
        for m, c in self._terms.items():
            term = Fraction(c)
            for i, e in enumerate(m):
                if not e:
                    continue
                name = SYMBOLS[i]
                if name not in point:
                    raise DomainError(f"no value given for {name}")
                val = Fraction(point[name])
                if val == 0 and e < 0:
                    raise ZeroDenominatorError(f"{name}**{e} at {name}=0")
                term *= val ** e
            total += term
        return total

    # ------------------------------------------------------------------
    # comparison / hashing / text

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == lift(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, coeff in self.terms():
            factors = [
                f"{SYMBOLS[i]}^{e}" if e != 1 else SYMBOLS[i]
                for i, e in enumerate(mono)
                if e
            ]
            if not factors:
                body = str(coeff)
            elif coeff == 1:
                body = "*".join(factors)
            elif coeff == -1:
                body = "-" + "*".join(factors)
            else:
                body = str(coeff) + "*" + "*".join(factors)
            parts.append(body)
        text = parts[0]
        for body in parts[1:]:
            if body.startswith("-"):
                text += " - " + body[1:]
            else:
                text += " + " + body
        return text

    def __repr__(self) -> str:
        return f"MultiPoly({str(self)!r})"


_ZERO = MultiPoly({})
_ONE = MultiPoly({(): 1})


def lift(value: PolyLike) -> MultiPoly:
    """Coerce an int or Fraction into the ring (identity on MultiPoly)."""
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, (int, Fraction)):
        coeff = _as_coeff(value)
        return MultiPoly({(): coeff}) if coeff else _ZERO
    raise TypeError(f"cannot lift {value!r} into the polynomial ring")


def zero() -> MultiPoly:
    return _ZERO


def one() -> MultiPoly:
    return _ONE


def const(value: Scalar) -> MultiPoly:
    return lift(Fraction(value))


def var(name: str) -> MultiPoly:
    i = symbol_index(name)
    return MultiPoly({(0,) * i + (1,): 1})


def monomial(exponents: Mapping[str, int], coeff: Scalar = 1) -> MultiPoly:
    coeff = _as_coeff(Fraction(coeff))
    if not coeff:
        return _ZERO
    width = 0
    pairs = []
    for name, e in exponents.items():
        if e:
            i = symbol_index(name)
            pairs.append((i, e))
            width = max(width, i + 1)
    mono = [0] * width
    for i, e in pairs:
        mono[i] = e
    return MultiPoly({tuple(mono): coeff})


# ----------------------------------------------------------------------
# packed-exponent kernels for multiplication and exact division
#
# Exponent tuples are encoded as single integers k = sum_p e_p * stride_p,
# a linear injective map on the bounding box of the operands, so monomial
# products become integer additions and the hot loops run on int-keyed
# dictionaries.

def _box(terms: dict[Monomial, Coeff], width: int) -> tuple[list[int], list[int]]:
    lo = [0] * width
    hi = [0] * width
    first = True
    for m in terms:
        for p in range(width):
            e = m[p] if p < len(m) else 0
            if first:
                lo[p] = hi[p] = e
            else:
                if e < lo[p]:
                    lo[p] = e
                elif e > hi[p]:
                    hi[p] = e
        first = False
    return lo, hi


def _strides(lo: list[int], hi: list[int]) -> list[int]:
    strides = [1] * len(lo)
    for p in range(1, len(lo)):
        strides[p] = strides[p - 1] * (hi[p - 1] - lo[p - 1] + 1)
    return strides


def _pack(terms: dict[Monomial, Coeff], strides: list[int]) -> list[tuple[int, Coeff]]:
    packed = []
    for m, c in terms.items():
        key = 0
        for p, e in enumerate(m):
            if e:
                key += e * strides[p]
        packed.append((key, c))
    return packed


def _unpack(packed: dict[int, Coeff], lo: list[int], strides: list[int],
            ranges: list[int]) -> dict[Monomial, Coeff]:
    # `ranges` is the radix of the box that defined `strides`; `lo` is the
    # lower corner of the (sub)box the keys are known to live in
    base = sum(l * s for l, s in zip(lo, strides))
    out: dict[Monomial, Coeff] = {}
    for key, coeff in packed.items():
        if not coeff:
            continue
        d = key - base
        mono = []
        for p in range(len(lo)):
            mono.append(lo[p] + (d // strides[p]) % ranges[p])
        while mono and mono[-1] == 0:
            mono.pop()
        out[tuple(mono)] = coeff
    return out


def _mul_sparse(ta: dict[Monomial, Coeff], tb: dict[Monomial, Coeff]) -> dict[Monomial, Coeff]:
    width = max(max(len(m) for m in ta), max(len(m) for m in tb))
    lo_a, hi_a = _box(ta, width)
    lo_b, hi_b = _box(tb, width)
    lo = [la + lb for la, lb in zip(lo_a, lo_b)]
    hi = [ha + hb for ha, hb in zip(hi_a, hi_b)]
    strides = _strides(lo, hi)
    ranges = [h - l + 1 for l, h in zip(lo, hi)]
    pa = _pack(ta, strides)
    pb = _pack(tb, strides)
    if len(pa) > len(pb):
        pa, pb = pb, pa
    out: dict[int, Coeff] = {}
    get = out.get
    for ka, ca in pa:
        for kb, cb in pb:
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    return _unpack(out, lo, strides, ranges)


def _div_sparse(tp: dict[Monomial, Coeff], td: dict[Monomial, Coeff]) -> dict[Monomial, Coeff]:
    width = max(max(len(m) for m in tp), max(len(m) for m in td))
    lo_p, hi_p = _box(tp, width)
    lo_d, hi_d = _box(td, width)
    lo_t = [lp - ld for lp, ld in zip(lo_p, lo_d)]
    hi_t = [hp - hd for hp, hd in zip(hi_p, hi_d)]
    # over an integral domain deg/val are additive, so an exact quotient
    # lives in [lo_t, hi_t]; intermediate remainders stay inside p's box
    if any(l > h for l, h in zip(lo_t, hi_t)):
        raise NotDivisibleError("quotient support box is empty")
    lo = [min(lp, ld, lt) for lp, ld, lt in zip(lo_p, lo_d, lo_t)]
    hi = [max(hp, hd, ht) for hp, hd, ht in zip(hi_p, hi_d, hi_t)]
    strides = _strides(lo, hi)
    ranges = [h - l + 1 for l, h in zip(lo, hi)]

    rem = dict(_pack(tp, strides))
    pd = _pack(td, strides)
    kd_lead = max(k for k, _ in pd)
    cd_lead = next(c for k, c in pd if k == kd_lead)
    pd_rest = [(k, c) for k, c in pd if k != kd_lead]
    base_t = sum(l * s for l, s in zip(lo_t, strides))

    heap = [-k for k in rem]
    heapq.heapify(heap)
    quot: dict[int, Coeff] = {}
    while rem:
        kr = -heapq.heappop(heap)
        cr = rem.get(kr)
        if not cr:
            continue
        kq = kr - kd_lead
        # a genuine quotient key decodes into [lo_t, hi_t] and re-encodes
        # to itself; anything else means the division cannot be exact
        d = kq - base_t
        if d < 0:
            raise NotDivisibleError("remainder term below the quotient box")
        recoded = base_t
        for p in range(width):
            e = lo_t[p] + (d // strides[p]) % ranges[p]
            if e > hi_t[p]:
                raise NotDivisibleError("remainder term outside the quotient box")
            recoded += (e - lo_t[p]) * strides[p]
        if recoded != kq:
            raise NotDivisibleError("remainder term not reachable by the divisor")
        if type(cr) is int and type(cd_lead) is int:
            cq = cr // cd_lead if cr % cd_lead == 0 else Fraction(cr, cd_lead)
        else:
            cq = _as_coeff(Fraction(cr) / Fraction(cd_lead))
        quot[kq] = cq
        del rem[kr]
        for kd, cd in pd_rest:
            k = kq + kd
            prev = rem.get(k)
            if prev is None:
                rem[k] = -cq * cd
                heapq.heappush(heap, -k)
            else:
                diff = prev - cq * cd
                if diff:
                    rem[k] = diff
                else:
                    del rem[k]
    return _unpack(quot, lo_t, strides, ranges)


# ----------------------------------------------------------------------
# parser for the canonical textual form

def parse_poly(text: str) -> MultiPoly:
    """Parse the canonical textual form (the inverse of str())."""
    s = text.strip()
    if not s:
        raise DomainError("empty polynomial text")
    chunks: list[str] = []
    signs: list[int] = []
    current = []
    sign = 1
    i = 0
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        i = 1
    prev_nonspace = ""
    while i < len(s):
        ch = s[i]
        if ch in "+-" and prev_nonspace not in ("^", "*", ""):
            chunks.append("".join(current).strip())
            signs.append(sign)
            current = []
            sign = -1 if ch == "-" else 1
        else:
            current.append(ch)
            if not ch.isspace():
                prev_nonspace = ch
        i += 1
    chunks.append("".join(current).strip())
    signs.append(sign)

    total = _ZERO
    for chunk, sgn in zip(chunks, signs):
        if not chunk:
            raise DomainError(f"malformed polynomial text: {text!r}")
        coeff = Fraction(sgn)
        expo: dict[str, int] = {}
        for factor in chunk.split("*"):
            factor = factor.strip()
            if not factor:
                raise DomainError(f"malformed term {chunk!r}")
            if factor[0].isdigit() or factor[0] in "+-":
                coeff *= Fraction(factor)
                continue
            if "^" in factor:
                name, _, epart = factor.partition("^")
                e = int(epart)
            else:
                name, e = factor, 1
            name = name.strip()
            if name not in _SYM_INDEX:
                raise DomainError(f"unknown symbol {name!r} in {text!r}")
            expo[name] = expo.get(name, 0) + e
        total = total + monomial(expo, coeff)
    return total


# ----------------------------------------------------------------------
# univariate rational functions in q

def _is_univariate_q(p: MultiPoly) -> bool:
    return all(len(m) <= 1 for m in p._terms)


def _q_dense(p: MultiPoly) -> list[Fraction]:
    """Dense coefficient list (low to high) of a univariate-in-q polynomial."""
    if not _is_univariate_q(p):
        raise DomainError(f"not univariate in q: {p}")
    if not p:
        return []
    deg = p.degree("q")
    low = p.valuation("q")
    if low < 0:
        raise DomainError(f"negative q-powers are not a rational function part: {p}")
    out = [Fraction(0)] * (deg + 1)
    for m, c in p._terms.items():
        e = m[0] if m else 0
        out[e] = Fraction(c)
    return out


def _q_from_dense(coeffs: list) -> MultiPoly:
    terms: dict[Monomial, Coeff] = {}
    for e, c in enumerate(coeffs):
        c = _as_coeff(Fraction(c))
        if c:
            terms[(e,) if e else ()] = c
    return MultiPoly(terms)


def _dense_trim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer coefficient lists (low to high)."""
    r = a[:]
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for i, bc in enumerate(b):
            r[shift + i] -= lr * bc
        _dense_trim(r)
        if not r:
            break
    return r


def _int_primitive(coeffs: list[Fraction]) -> list[int]:
    from math import gcd, lcm

    den = 1
    for c in coeffs:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if g > 1:
        ints = [c // g for c in ints]
    return ints


def gcd_q(p1: MultiPoly, p2: MultiPoly) -> MultiPoly:
    """Monic gcd of two univariate-in-q polynomials (primitive PRS)."""
    a = _int_primitive(_q_dense(p1)) if p1 else []
    b = _int_primitive(_q_dense(p2)) if p2 else []
    if not a:
        a, b = b, []
    if not b and not a:
        return _ZERO
    while b:
        r = _prem(a, b)
        a, b = b, (_int_primitive([Fraction(c) for c in r]) if r else [])
    lead = Fraction(a[-1])
    return _q_from_dense([Fraction(c) / lead for c in a])


class RatFuncQ:
    """Rational function in q: reduced quotient with a monic denominator."""

    __slots__ = ("_num", "_den")

    def __init__(self, num: MultiPoly, den: MultiPoly):
        # assumed canonical; use RatFuncQ.normalize or ratfunc()
        self._num = num
        self._den = den

    @classmethod
    def normalize(cls, num: PolyLike, den: PolyLike) -> "RatFuncQ":
        num = lift(num)
        den = lift(den)
        if not den:
            raise ZeroDenominatorError("rational function with zero denominator")
        if not _is_univariate_q(num) or not _is_univariate_q(den):
            raise DomainError("RatFuncQ parts must be univariate in q")
        if not num:
            return cls(_ZERO, _ONE)
        g = gcd_q(num, den)
        if g and g.degree("q") > 0:
            num = num.divexact(g)
            den = den.divexact(g)
        lead = den.coeff("q", den.degree("q")).as_rational()
        if lead != 1:
            inv = Fraction(1) / lead
            num = num * inv
            den = den * inv
        return cls(num, den)

    @property
    def num(self) -> MultiPoly:
        return self._num

    @property
    def den(self) -> MultiPoly:
        return self._den

    def __bool__(self) -> bool:
        return bool(self._num)

    def __neg__(self) -> "RatFuncQ":
        return RatFuncQ(-self._num, self._den)

    def __add__(self, other) -> "RatFuncQ":
        other = ratfunc_lift(other)
        return RatFuncQ.normalize(
            self._num * other._den + other._num * self._den,
            self._den * other._den,
        )

    __radd__ = __add__

    def __sub__(self, other) -> "RatFuncQ":
        return self + (-ratfunc_lift(other))

    def __rsub__(self, other) -> "RatFuncQ":
        return ratfunc_lift(other) + (-self)

    def __mul__(self, other) -> "RatFuncQ":
        other = ratfunc_lift(other)
        return RatFuncQ.normalize(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFuncQ":
        other = ratfunc_lift(other)
        if not other._num:
            raise ZeroDenominatorError("division by the zero rational function")
        return RatFuncQ.normalize(self._num * other._den, self._den * other._num)

    def __rtruediv__(self, other) -> "RatFuncQ":
        return ratfunc_lift(other) / self

    def __pow__(self, exponent: int) -> "RatFuncQ":
        if exponent < 0:
            return (_RF_ONE / self) ** (-exponent)
        out = _RF_ONE
        for _ in range(exponent):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (RatFuncQ, MultiPoly, int, Fraction)):
            other = ratfunc_lift(other)
            return self._num == other._num and self._den == other._den
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    def at_q(self, value: Scalar) -> Fraction:
        point = {"q": Fraction(value)}
        den = self._den.evaluate(point)
        if den == 0:
            raise ZeroDenominatorError(f"denominator vanishes at q={value}")
        return self._num.evaluate(point) / den

    def at_q1(self) -> Fraction:
        return self.at_q(1)

    def __str__(self) -> str:
        if self._den == _ONE:
            return str(self._num)
        return f"({self._num}) / ({self._den})"

    def __repr__(self) -> str:
        return f"RatFuncQ({str(self)!r})"


_RF_ONE = RatFuncQ(_ONE, _ONE)


def ratfunc(num: PolyLike, den: PolyLike = 1) -> RatFuncQ:
    return RatFuncQ.normalize(num, den)


def ratfunc_lift(value) -> RatFuncQ:
    if isinstance(value, RatFuncQ):
        return value
    if isinstance(value, (MultiPoly, int, Fraction)):
        return RatFuncQ.normalize(lift(value), _ONE)
    raise TypeError(f"cannot lift {value!r} into RatFuncQ")
