"""Command line front end.

Subcommands: `verify` runs the identity registry and exits nonzero on any
failure; `hankel` prints one Hankel determinant; `table` prints a stored
reference table recomputed live; `closed-form` prints the product formula
attached to a family (for the generic transform families this is the
leading coefficient in x rather than the full determinant).

Exit codes: 0 success, 1 at least one identity failed, 2 internal error.
Output for a fixed invocation and seed is byte-stable; timings are only
emitted under --timings.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .bernoulli import (
    bernoulli_numbers_seq,
    closed_hankel_bernoulli,
    closed_hankel_even_half,
    closed_hankel_odd_center,
    even_center_seq,
    even_half_seq,
    odd_center_seq,
)
from .errors import UnknownFamilyError
from .hankel import hankel_det
from .orthopoly import (
    alpha_uv_tilde_seq,
    closed_final_example,
    closed_pochhammer_u_hankel,
    pochhammer_u_seq,
)
from .polyring import SYMBOLS, MultiPoly, RatFuncQ, parse_poly
from .qtools import (
    closed_hankel_q_bernoulli,
    closed_hankel_q_power_binom,
    q_bernoulli_seq,
    q_binom_k2_seq,
)
from .qtransforms import (
    generic_alpha_seq,
    plain_leading_closed,
    plain_transform_seq,
    tilde_leading_closed,
    tilde_transform_seq,
)
from .suite import run_suite, table1_lines, table2_lines, table3_lines

FAMILIES = {
    "bernoulli": (
        bernoulli_numbers_seq,
        lambda n: closed_hankel_bernoulli(n),
    ),
    "bernoulli-even-half": (
        even_half_seq,
        lambda n: closed_hankel_even_half(n),
    ),
    "bernoulli-odd-half": (
        odd_center_seq,
        lambda n: closed_hankel_odd_center(n),
    ),
    "bernoulli-even-center": (even_center_seq, None),
    "q-binom-k2": (
        q_binom_k2_seq,
        lambda n: closed_hankel_q_power_binom(n),
    ),
    "q-bernoulli": (
        q_bernoulli_seq,
        lambda n: closed_hankel_q_bernoulli(n),
    ),
    "alpha-generic": (
        lambda: plain_transform_seq(generic_alpha_seq()),
        lambda n: plain_leading_closed(n, generic_alpha_seq()),
    ),
    "alpha-tilde-generic": (
        lambda: tilde_transform_seq(generic_alpha_seq()),
        lambda n: tilde_leading_closed(n, generic_alpha_seq()),
    ),
    "alpha-uv": (
        alpha_uv_tilde_seq,
        lambda n: closed_final_example(n),
    ),
    "pochhammer-u": (
        pochhammer_u_seq,
        lambda n: closed_pochhammer_u_hankel(n),
    ),
}

TABLES = {1: table1_lines, 2: table2_lines, 3: table3_lines}


# ----------------------------------------------------------------------
# latex rendering; display-oriented, not meant to be parsed back

def _latex_symbol(name: str) -> str:
    if name.startswith("alpha_"):
        return r"\alpha_{" + name.split("_")[1] + "}"
    return name


def _latex_coeff(c, lead: bool, has_mono: bool) -> str:
    sign = "-" if c < 0 else ("" if lead else "+")
    c = abs(c)
    if isinstance(c, Fraction) and c.denominator != 1:
        body = r"\frac{%d}{%d}" % (c.numerator, c.denominator)
    else:
        body = str(int(c))
    if has_mono and body == "1":
        body = ""
    return sign + body


def latex_poly(value) -> str:
    """LaTeX form of a polynomial, rational function or plain rational."""
    if isinstance(value, RatFuncQ):
        num, den = value.num, value.den
        if den == 1:
            return latex_poly(num)
        return r"\frac{%s}{%s}" % (latex_poly(num), latex_poly(den))
    if isinstance(value, (int, Fraction)):
        return _latex_coeff(value, lead=True, has_mono=False)
    if not isinstance(value, MultiPoly):
        return str(value)
    if not value:
        return "0"
    parts = []
    for i, (mono, coeff) in enumerate(value.terms()):
        factors = []
        for pos, e in enumerate(mono):
            if e == 0:
                continue
            sym = _latex_symbol(SYMBOLS[pos])
            factors.append(sym if e == 1 else f"{sym}^{{{e}}}")
        body = " ".join(factors)
        head = _latex_coeff(coeff, lead=(i == 0), has_mono=bool(body))
        spacer = " " if (head and head not in "+-") and body else ""
        parts.append(head + spacer + body)
    out = parts[0]
    for p in parts[1:]:
        if p.startswith("-"):
            out += " - " + p[1:]
        elif p.startswith("+"):
            out += " + " + p[1:]
        else:
            out += " + " + p
    return out


def _render_value(value, fmt: str) -> str:
    if fmt == "latex":
        return latex_poly(value)
    return str(value)


# ----------------------------------------------------------------------
# subcommand bodies

def run_verify(seed: int, max_n: int | None, fmt: str, timings: bool) -> int:
    reports = run_suite(seed=seed, max_n=max_n, timings=timings)
    failed = [r for r in reports if not r.ok]
    if fmt == "json":
        payload = {
            "command": "verify",
            "seed": seed,
            "max_n": max_n,
            "passed": len(reports) - len(failed),
            "failed": len(failed),
            "reports": [r.to_dict() for r in reports],
        }
        print(json.dumps(payload, indent=2))
    elif fmt == "latex":
        print(r"\begin{tabular}{llr}")
        for r in reports:
            status = "ok" if r.ok else "FAIL"
            print(f"{r.identity} & {r.n} & {status} \\\\")
        print(r"\end{tabular}")
    else:
        for r in reports:
            print(r.line())
        print(f"passed {len(reports) - len(failed)}/{len(reports)}")
    return 1 if failed else 0


def run_hankel(family: str, n: int, fmt: str) -> int:
    seq_factory, _ = _family(family)
    value = hankel_det(seq_factory(), n)
    _emit(fmt, {"command": "hankel", "family": family, "n": n}, value)
    return 0


def run_closed_form(family: str, n: int, fmt: str) -> int:
    _, closed = _family(family)
    if closed is None:
        raise UnknownFamilyError(f"family {family!r} has no closed form")
    value = closed(n)
    _emit(fmt, {"command": "closed-form", "family": family, "n": n}, value)
    return 0


def run_table(which: int, fmt: str) -> int:
    lines = TABLES[which]()
    if fmt == "json":
        print(json.dumps({"command": "table", "which": which, "rows": lines},
                         indent=2))
    elif fmt == "latex":
        print(r"\begin{tabular}{ll}")
        for line in lines:
            label, _, rest = line.partition(": ")
            print(f"${label}$ & ${latex_poly(parse_poly(rest))}$ \\\\")
        print(r"\end{tabular}")
    else:
        for line in lines:
            print(line)
    return 0


def _family(name: str):
    try:
        return FAMILIES[name]
    except KeyError:
        raise UnknownFamilyError(f"unknown family {name!r}") from None


def _emit(fmt: str, meta: dict, value) -> None:
    if fmt == "json":
        meta["value"] = str(value)
        print(json.dumps(meta, indent=2))
    else:
        print(_render_value(value, fmt))


# ----------------------------------------------------------------------
# argument wiring

def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qhankel",
        description="Exact Hankel determinants of q-analogue and Bernoulli "
                    "sequences, with a machine-checked identity registry.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json", "latex"),
                       default="text")

    p = sub.add_parser("verify", help="run every registered identity check")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the randomized checks")
    p.add_argument("--max-n", type=_nonneg, default=None,
                   help="cap the matrix orders; 0 keeps only trivial cases")
    p.add_argument("--timings", action="store_true",
                   help="attach per-group wall times to the reports")
    add_format(p)

    p = sub.add_parser("hankel", help="print one Hankel determinant")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--n", required=True, type=_nonneg,
                   help="order; the matrix is (n+1) x (n+1)")
    add_format(p)

    p = sub.add_parser("table", help="recompute a stored reference table")
    p.add_argument("--which", required=True, type=int, choices=sorted(TABLES))
    add_format(p)

    p = sub.add_parser("closed-form",
                       help="print the closed product formula for a family")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--n", required=True, type=_nonneg)
    add_format(p)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return run_verify(args.seed, args.max_n, args.format, args.timings)
        if args.command == "hankel":
            return run_hankel(args.family, args.n, args.format)
        if args.command == "table":
            return run_table(args.which, args.format)
        return run_closed_form(args.family, args.n, args.format)
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
