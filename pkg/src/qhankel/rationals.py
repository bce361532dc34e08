"""Exact rational scalars and the basic combinatorial helpers.

The coefficient field everywhere in this package is the stdlib
`fractions.Fraction`: arbitrary-precision, always reduced, positive
denominator, so value equality is representation equality.  The helpers here
pin down the conventions the rest of the kernel relies on (binomial
coefficients vanish outside 0 <= k <= n, textual form is "num/den" with the
denominator omitted when it is 1).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial as _factorial

from .errors import DomainError

Rational = Fraction


def binomial(n: int, k: int) -> int:
    """C(n, k) with the convention that it is 0 for k < 0 or k > n."""
    if n < 0:
        raise DomainError(f"binomial needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def factorial(n: int) -> int:
    if n < 0:
        raise DomainError(f"factorial needs n >= 0, got n={n}")
    return _factorial(n)


def format_rational(value: Fraction | int) -> str:
    """Canonical text: "num/den", the "/den" omitted when den == 1."""
    return str(Fraction(value))


def parse_rational(text: str) -> Fraction:
    """Inverse of format_rational (also accepts surrounding whitespace)."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational: {text!r}") from exc
