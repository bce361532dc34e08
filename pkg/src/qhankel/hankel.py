"""Hankel matrices and exact determinants.

The determinant engines, in order of generality:

* `bareiss_det`: fraction-free elimination over the polynomial ring.  The
  update M[i][j] <- (M[k][k]*M[i][j] - M[i][k]*M[k][j]) / prev_pivot has an
  exact polynomial quotient at every step (the entries are minors of the
  input matrix), so no fraction field is needed.  Rational coefficients are
  cleared to integers up front through det(L*M) = L^size * det(M).
* `gauss_det`: ordinary elimination over the rational-function field in q,
  for matrices of RatFuncQ entries.
* `det_ratfunc_cleared`: independent route for RatFuncQ matrices; clears
  every entry by the lcm of the denominators and runs bareiss_det.
* `cofactor_det`: Laplace expansion, the small-size oracle.  Guarded to
  size <= 7 because the term count is factorial.

Row swaps happen only on an identically-zero pivot; if the whole remaining
column is zero the determinant is zero.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Callable, Sequence, Union

from .errors import CostGuardExceededError, DomainError, IndexBeyondBoundError
from .polyring import MultiPoly, RatFuncQ, gcd_q, lift, one, ratfunc, ratfunc_lift, zero
from .report import VerifyReport, compare

Entry = Union[MultiPoly, RatFuncQ, int, Fraction]
Matrix = list[list]

COFACTOR_MAX_SIZE = 7


class SequenceSpec:
    """A memoized sequence k -> ring element, the input to Hankel builders."""

    def __init__(self, name: str, fn: Callable[[int], Entry], bound: int | None = None):
        self.name = name
        self._fn = fn
        self._bound = bound
        self._memo: dict[int, Entry] = {}

    def __call__(self, k: int) -> Entry:
        if k < 0:
            raise IndexBeyondBoundError(f"{self.name}: index {k} < 0")
        if self._bound is not None and k > self._bound:
            raise IndexBeyondBoundError(
                f"{self.name}: index {k} exceeds bound {self._bound}"
            )
        if k not in self._memo:
            self._memo[k] = self._fn(k)
        return self._memo[k]

    def scaled(self, factor: Entry, name: str | None = None) -> "SequenceSpec":
        """The sequence factor * a_k."""
        return SequenceSpec(name or f"{self.name}*const", lambda k: factor * self(k))

    def geometric(self, ratio: Entry, name: str | None = None) -> "SequenceSpec":
        """The sequence ratio**k * a_k."""
        return SequenceSpec(name or f"{self.name}*geo", lambda k: ratio ** k * self(k))


def hankel_matrix(seq: Callable[[int], Entry], n: int) -> Matrix:
    """(n+1) x (n+1) matrix with entry a_{i+j}."""
    if n < 0:
        raise IndexBeyondBoundError(f"hankel_matrix needs n >= 0, got {n}")
    vals = [seq(k) for k in range(2 * n + 1)]
    return [[vals[i + j] for j in range(n + 1)] for i in range(n + 1)]


def _swap_for_pivot(m: Matrix, k: int) -> int | None:
    """Swap a row with nonzero column-k entry up to row k; return sign or None."""
    if m[k][k]:
        return 1
    for i in range(k + 1, len(m)):
        if m[i][k]:
            m[k], m[i] = m[i], m[k]
            return -1
    return None


def bareiss_det(matrix: Matrix) -> MultiPoly:
    """Exact determinant of a polynomial (or scalar) matrix."""
    size = len(matrix)
    m = [[lift(e) for e in row] for row in matrix]
    if any(len(row) != size for row in m):
        raise DomainError("bareiss_det needs a square matrix")
    if size == 0:
        return one()

    denoms = 1
    for row in m:
        for entry in row:
            for coeff in entry._terms.values():
                if isinstance(coeff, Fraction):
                    denoms = lcm(denoms, coeff.denominator)
    if denoms > 1:
        m = [[entry * denoms for entry in row] for row in m]

    sign = 1
    prev = one()
    for k in range(size - 1):
        s = _swap_for_pivot(m, k)
        if s is None:
            return zero()
        sign *= s
        pivot = m[k][k]
        for i in range(k + 1, size):
            row_i = m[i]
            row_k = m[k]
            head = row_i[k]
            for j in range(k + 1, size):
                row_i[j] = (pivot * row_i[j] - head * row_k[j]).divexact(prev)
            row_i[k] = zero()
        prev = pivot
    det = m[size - 1][size - 1]
    if sign < 0:
        det = -det
    if denoms > 1:
        det = det * Fraction(1, denoms ** size)
    return det


def cofactor_det(matrix: Matrix):
    """Laplace-expansion determinant, usable as an independent oracle."""
    size = len(matrix)
    if size > COFACTOR_MAX_SIZE:
        raise CostGuardExceededError(
            f"cofactor_det is limited to size {COFACTOR_MAX_SIZE}, got {size}"
        )
    if size == 0:
        return 1

    def minor_det(rows: Sequence[int], cols: Sequence[int]):
        if len(rows) == 1:
            return matrix[rows[0]][cols[0]]
        total = None
        r = rows[0]
        rest = rows[1:]
        for idx, c in enumerate(cols):
            entry = matrix[r][c]
            if not entry:
                continue
            sub = minor_det(rest, cols[:idx] + cols[idx + 1:])
            term = entry * sub
            if idx % 2:
                term = -term
            total = term if total is None else total + term
        if total is None:
            return matrix[rows[0]][cols[0]] * 0
        return total

    idx = tuple(range(size))
    return minor_det(idx, idx)


def gauss_det(matrix: Matrix) -> RatFuncQ:
    """Determinant over the rational-function field in q."""
    size = len(matrix)
    m = [[ratfunc_lift(e) for e in row] for row in matrix]
    if size == 0:
        return ratfunc(1)
    det = ratfunc(1)
    sign = 1
    for k in range(size - 1):
        s = _swap_for_pivot(m, k)
        if s is None:
            return ratfunc(0)
        sign *= s
        pivot = m[k][k]
        for i in range(k + 1, size):
            factor = m[i][k] / pivot
            if not factor:
                continue
            for j in range(k + 1, size):
                m[i][j] = m[i][j] - factor * m[k][j]
            m[i][k] = ratfunc(0)
        det = det * pivot
    det = det * m[size - 1][size - 1]
    if sign < 0:
        det = -det
    return det


def lcm_q(p1: MultiPoly, p2: MultiPoly) -> MultiPoly:
    g = gcd_q(p1, p2)
    return p1.divexact(g) * p2


def det_ratfunc_cleared(matrix: Matrix) -> RatFuncQ:
    """RatFuncQ determinant via denominator clearing and bareiss_det."""
    size = len(matrix)
    m = [[ratfunc_lift(e) for e in row] for row in matrix]
    big = one()
    for row in m:
        for entry in row:
            big = lcm_q(big, entry.den)
    cleared = [
        [entry.num * big.divexact(entry.den) for entry in row] for row in m
    ]
    det_poly = bareiss_det(cleared)
    return ratfunc(det_poly, big ** size)


def hankel_det(seq: Callable[[int], Entry], n: int, method: str = "auto"):
    """Hankel determinant H_n = det(a_{i+j}), 0 <= i,j <= n.

    method: "auto" picks gauss for RatFuncQ entries and bareiss otherwise;
    "bareiss", "gauss", "cleared" and "cofactor" force an engine.
    """
    matrix = hankel_matrix(seq, n)
    if method == "auto":
        method = "gauss" if isinstance(matrix[0][0], RatFuncQ) else "bareiss"
    if method == "bareiss":
        return bareiss_det(matrix)
    if method == "gauss":
        return gauss_det(matrix)
    if method == "cleared":
        return det_ratfunc_cleared(matrix)
    if method == "cofactor":
        return cofactor_det(matrix)
    raise DomainError(f"unknown determinant method {method!r}")


def heilermann_det(a0: Entry, v: Sequence[Entry], n: int):
    """H_n from a three-term-recurrence product: a0^(n+1) * prod v_j^(n+1-j).

    `v[j-1]` is the j-th recurrence product coefficient, needed for
    j = 1..n; the Hankel determinant of the moment sequence of a monic
    orthogonal family p_{j+1} = (z - u_j) p_j - v_j p_{j-1} with moment
    a0 has exactly this form.
    """
    if len(v) < n:
        raise IndexBeyondBoundError(
            f"heilermann_det needs {n} recurrence coefficients, got {len(v)}"
        )
    det = a0 ** (n + 1)
    for j in range(1, n + 1):
        det = det * v[j - 1] ** (n + 1 - j)
    return det


def check_scaling_lemmas(seq: SequenceSpec, n: int, factor: Entry,
                         ratio: Entry) -> list[VerifyReport]:
    """The two Hankel scaling facts.

    H_n(c a_k) = c^(n+1) H_n(a_k) and H_n(r^k a_k) = r^(n(n+1)) H_n(a_k).
    """
    base = hankel_det(seq, n)
    scaled = hankel_det(seq.scaled(factor), n)
    geo = hankel_det(seq.geometric(ratio), n)
    return [
        compare(
            "hankel-scale-const", n,
            scaled, factor ** (n + 1) * base,
            detail=f"seq={seq.name}",
        ),
        compare(
            "hankel-scale-geometric", n,
            geo, ratio ** (n * (n + 1)) * base,
            detail=f"seq={seq.name}",
        ),
    ]
