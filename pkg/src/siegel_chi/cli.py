"""Command-line interface: ``siegel-chi`` (or ``python -m siegel_chi``).

Exit codes: 0 success, 1 usage or validation error, 2 a mathematical
consistency check failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .eulerhodge import chi_gaussbonnet, chi_product, chi_recursive, integrate_abar, proportionality_K, tau
from .exactnum import render_rational
from .hodgering import top_degree
from .lagrangian import lg_euler_char, lg_integrate, lg_normalize, max_ring_genus
from .level import PolarizationError, chi_level, degree_ratio, validate_type
from .suites import DEFAULT_GMAX, RING_SUITES, SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_INCONSISTENT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class OutputRecord:
    quantity: str
    params: dict = field(default_factory=dict)
    value: Fraction | None = None
    route: str = ""
    note: str = ""

    def text(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        route = f" [{self.route}]" if self.route else ""
        note = f"  ({self.note})" if self.note else ""
        return f"{self.quantity} {params}{route}: {render_rational(self.value)}{note}"

    def as_dict(self) -> dict:
        out = {"quantity": self.quantity, **self.params, "value": _json_rational(self.value)}
        if self.route:
            out["route"] = self.route
        if self.note:
            out["note"] = self.note
        return out


def _json_rational(x: Fraction | None):
    if x is None:
        return None
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _emit(records: list[OutputRecord], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps([r.as_dict() for r in records], indent=2))
    else:
        for r in records:
            print(r.text())


# -- commands -----------------------------------------------------------------

def cmd_chi(args) -> int:
    g = args.g
    if g < 1:
        raise UsageError("--g must be >= 1")
    routes = ["product", "recursive", "gaussbonnet"] if args.route == "all" else [args.route]
    if "gaussbonnet" in routes and g > max_ring_genus():
        raise UsageError(f"gaussbonnet route needs g <= {max_ring_genus()} (SIEGEL_CHI_MAX_G)")
    compute = {"product": chi_product, "recursive": chi_recursive, "gaussbonnet": chi_gaussbonnet}
    records = []
    for route in routes:
        note = "consistency route, reuses K(g)" if route == "gaussbonnet" else ""
        records.append(OutputRecord("chi(A_g)", {"g": g}, compute[route](g), route, note))
    _emit(records, args.format)
    if len({r.value for r in records}) > 1:
        print("routes disagree", file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_chi_level(args) -> int:
    degrees = _int_list(args.delta)
    try:
        delta = validate_type(degrees)
    except PolarizationError as exc:
        raise UsageError(str(exc)) from None
    params = {"delta": ",".join(map(str, delta.degrees))}
    records = [
        OutputRecord("degree_ratio", params, degree_ratio(delta)),
        OutputRecord("chi(A_g,delta)", params, chi_level(delta)),
    ]
    _emit(records, args.format)
    return EXIT_OK


def cmd_integrate(args) -> int:
    g = args.g
    if g < 1:
        raise UsageError("--g must be >= 1")
    a = tuple(_int_list(args.exp))
    if len(a) != g or any(x < 0 for x in a):
        raise UsageError(f"--exp needs {g} non-negative integers")
    if g > max_ring_genus():
        raise UsageError(f"integration needs g <= {max_ring_genus()} (SIEGEL_CHI_MAX_G)")
    params = {"g": g, "exp": ",".join(map(str, a))}
    deg = sum((i + 1) * x for i, x in enumerate(a))
    note = "" if deg == top_degree(g) else f"degree {deg} is not the top degree {top_degree(g)}"
    records = [
        OutputRecord("int_Abar lambda^a", params, integrate_abar(g, a), note=note),
        OutputRecord("int_LG x^a", params, lg_integrate(lg_normalize(g), a), note=note),
    ]
    _emit(records, args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        gmax = DEFAULT_GMAX[name] if args.gmax is None else args.gmax
        if gmax < 1:
            raise UsageError("--gmax must be >= 1")
        if name in RING_SUITES and gmax > max_ring_genus():
            raise UsageError(f"suite {name} builds rings; --gmax must be <= {max_ring_genus()}")
    failed = 0
    for name in names:
        checks = run_suite(name, args.gmax)
        bad = sum(not c.passed for c in checks)
        failed += bad
        print(f"== suite {name}: {len(checks) - bad}/{len(checks)} passed")
        for c in checks:
            print("  " + c.line().replace("\n", "\n    "))
    print("OVERALL " + ("PASS" if not failed else f"FAIL ({failed} checks)"))
    return EXIT_INCONSISTENT if failed else EXIT_OK


TABLE_COLUMNS = ["g", "chi", "tau", "K", "chi_LG"]


def table_rows(gmax: int) -> list[dict]:
    rows = []
    for g in range(1, gmax + 1):
        rows.append({
            "g": g,
            "chi": chi_product(g),
            "tau": tau(g) if g >= 2 else None,
            "K": proportionality_K(g),
            "chi_LG": lg_euler_char(g),
        })
    return rows


def render_table(rows: list[dict], fmt: str) -> str:
    def cell(v) -> str:
        if v is None:
            return ""
        return render_rational(v) if isinstance(v, Fraction) else str(v)

    if fmt == "json":
        out = []
        for row in rows:
            out.append({k: _json_rational(v) if isinstance(v, Fraction) else v for k, v in row.items()})
        return json.dumps(out, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(TABLE_COLUMNS)
        for row in rows:
            writer.writerow([cell(row[k]) for k in TABLE_COLUMNS])
        return buf.getvalue().rstrip("\n")
    lines = ["| " + " | ".join(TABLE_COLUMNS) + " |", "|" + "---|" * len(TABLE_COLUMNS)]
    for row in rows:
        lines.append("| " + " | ".join(cell(row[k]) or "-" for k in TABLE_COLUMNS) + " |")
    return "\n".join(lines)


def cmd_table(args) -> int:
    if args.gmax < 1:
        raise UsageError("--gmax must be >= 1")
    print(render_table(table_rows(args.gmax), args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="siegel-chi", description="Exact Euler characteristics of moduli of abelian varieties.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("chi", help="chi(A_g) by one or all routes")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--route", choices=["product", "recursive", "gaussbonnet", "all"], default="product")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("chi-level", help="chi(A_{g,delta}) for a polarization type")
    p.add_argument("--delta", required=True, help="comma-separated d_1,...,d_g with d_i | d_(i+1)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_chi_level)

    p = sub.add_parser("integrate", help="lambda-monomial integral on A_g-bar and LG_g")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--exp", required=True, help="comma-separated exponents a_1,...,a_g")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    p.add_argument("--gmax", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="tabulate chi, tau, K and chi(LG)")
    p.add_argument("--gmax", type=int, required=True)
    p.add_argument("--format", choices=["md", "csv", "json"], default="md")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"siegel-chi: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
