"""Command-line interface: ``riesz-circle {energy,coeffs,verify,table}``.

Exit codes: 0 success, 1 a verification case failed, 2 unparsable
arguments, 3 domain or configuration error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence

import mpmath

from . import coeffs, energy, specfun, verify
from .errors import ConfigurationError, DomainError, ExceptionalIndexError, RieszError

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2, 3
DOUBLE_DIGITS = 15
TABLE_MIN_DPS = 40
SUITES = ("identity", "order", "signs", "divergence", "optimality", "all")

COMPLEX_HELP = ("real or complex number written a, a+bi or a-bi with no spaces "
                "(e.g. 0.5, 2, 1+0i, 0.5-1.3i)")


@dataclass
class CliConfig:
    precision_digits: int = DOUBLE_DIGITS
    p: int = 3
    n_max: int = energy.SERIES_NMAX
    format: str = "json"
    seed: int = verify.DEFAULT_SEED
    output_path: str | None = None

    def __post_init__(self):
        if self.precision_digits < DOUBLE_DIGITS:
            raise ConfigurationError(f"precision must be at least {DOUBLE_DIGITS} digits")
        if self.p < 0:
            raise ConfigurationError("p must be non-negative")

    @property
    def dps(self) -> int | None:
        """mpmath digits, or None for the double-precision path."""
        return None if self.precision_digits <= DOUBLE_DIGITS else self.precision_digits


# --------------------------------------------------------------------------
# argument types


def _complex_arg(text: str):
    try:
        return specfun.parse_complex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _list_arg(conv):
    def parse(text: str):
        items = [t for t in text.split(",") if t != ""]
        if not items:
            raise argparse.ArgumentTypeError("empty list")
        return [conv(t) for t in items]
    return parse


def _int_arg(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _seed_arg(text: str) -> int:
    v = _int_arg(text)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return v


def _default_precision() -> int | str:
    return os.environ.get("RIESZ_PRECISION", str(DOUBLE_DIGITS))


def _format_s(s) -> str:
    s = complex(s)
    if s.imag == 0:
        return repr(s.real)
    return f"{s.real!r}{'+' if s.imag >= 0 else '-'}{abs(s.imag)!r}i"


def _pair(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=_int_arg, default=None,
                        help="working digits; 15 selects double precision, more uses mpmath "
                             "(default: $RIESZ_PRECISION or 15)")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--seed", type=_seed_arg, default=verify.DEFAULT_SEED,
                        help="64-bit RNG seed recorded in reports (default 42)")
    common.add_argument("--out", default=None, help="write the payload to this file")

    parser = argparse.ArgumentParser(
        prog="riesz-circle",
        description="Riesz s-energy of N equally spaced points on the unit circle. "
                    f"Values of s are {COMPLEX_HELP}.")
    sub = parser.add_subparsers(dest="command", required=True)

    e = sub.add_parser("energy", parents=[common], help="evaluate L_s(N)")
    e.add_argument("--s", type=_complex_arg, required=True, help=COMPLEX_HELP)
    e.add_argument("--N", type=_int_arg, required=True)
    e.add_argument("--method", choices=energy.METHODS, default="auto",
                   help="auto picks log at s=0 and direct otherwise")
    e.add_argument("--p", type=_int_arg, default=3, help="expansion order")
    e.add_argument("--n-max", type=_int_arg, default=energy.SERIES_NMAX,
                   help="series truncation index")

    c = sub.add_parser("coeffs", parents=[common], help="alpha_n tables or c_n(s) values")
    c.add_argument("--n-max", type=_int_arg, required=True)
    c.add_argument("--s", type=_complex_arg, default=None, help=COMPLEX_HELP)
    c.add_argument("--exceptional", action="store_true",
                   help="allow s = 2n+1 and report the log-term constants at that index")

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", choices=SUITES, default="all")
    v.add_argument("--s", type=_complex_arg, default=None, help=COMPLEX_HELP)
    v.add_argument("--p", type=_int_arg, default=None)
    v.add_argument("--N", type=_int_arg, default=None)
    v.add_argument("--n-max", type=_int_arg, default=10)
    v.add_argument("--trials", type=_int_arg, default=1000)
    v.add_argument("--scale", type=float, default=1e-3)

    t = sub.add_parser("table", parents=[common], help="direct vs asymptotic error table (CSV)")
    t.add_argument("--s", type=_list_arg(_complex_arg), required=True,
                   help="comma-separated values of s")
    t.add_argument("--N", type=_list_arg(_int_arg), required=True,
                   help="comma-separated values of N")
    t.add_argument("--p", type=_int_arg, default=3)
    return parser


# --------------------------------------------------------------------------
# commands


def cmd_energy(args, cfg: CliConfig) -> tuple[int, dict]:
    s = args.s
    method = args.method
    if method == "auto":
        method = "log" if s == 0 else "direct"
    payload = {"s": _pair(s), "N": args.N, "method": method, "p": cfg.p,
               "terms": [], "remainder_order": None}
    if method == "asymptotic":
        value, exp = energy.energy_asymptotic(s, args.N, cfg.p, cfg.dps)
        payload["terms"] = exp.contributions(args.N)
        payload["remainder_order"] = exp.remainder_order
        payload["exact"] = exp.terminating
    elif method == "series":
        value = energy.energy_series(s, args.N, cfg.p, cfg.n_max)
    else:
        value = energy.riesz_energy(s, args.N, method, cfg.p, cfg.n_max, cfg.dps)
    payload["value"] = _pair(value)
    if cfg.dps:
        payload["precision"] = cfg.precision_digits
    return EXIT_OK, payload


def cmd_coeffs(args, cfg: CliConfig) -> tuple[int, dict]:
    if args.n_max < 0:
        raise DomainError("--n-max must be non-negative")
    if args.s is None:
        table = coeffs.alpha_table(args.n_max)
        return EXIT_OK, {"n_max": args.n_max, "alphas": [a.to_dict() for a in table]}
    s = args.s
    M = specfun.odd_positive_index(s)
    if M is not None and M <= args.n_max and not args.exceptional:
        raise ExceptionalIndexError(
            f"s = {_format_s(s)} makes n = {M} exceptional (s - 2n = 1); pass --exceptional")
    k = specfun.real_integer(s)
    rows = []
    for n in range(args.n_max + 1):
        if n == M:
            rows.append({"n": n, "exceptional": True,
                         "log_coefficient": float(energy.log_coefficient(M)),
                         "g_constant": float(energy.g_constant(M))})
            continue
        c = coeffs.c_coefficient(n, s, cfg.dps)
        row = {"n": n, "exceptional": False, "value": _pair(c.value), "sign_hint": c.sign_hint}
        if k is not None and k > 0 and k % 2 == 0:
            q = coeffs.even_coefficient_rational(n, k // 2)
            row["exact"] = f"{q.numerator}/{q.denominator}"
        rows.append(row)
    return EXIT_OK, {"s": _pair(s), "n_max": args.n_max, "coefficients": rows}


def _single_real(s, what: str) -> float:
    if s is not None and not isinstance(s, float):
        raise DomainError(f"{what} needs real s")
    return s


def cmd_verify(args, cfg: CliConfig):
    suite = args.suite
    reports: list[verify.VerificationReport] = []
    fits: list[verify.SlopeFitReport] = []
    if suite == "all":
        reports = verify.run_all(cfg.seed, cfg.dps)
    elif suite == "identity":
        reports = [verify.run_identity_suite(seed=cfg.seed)]
    elif suite == "order":
        if args.s is not None:
            p = 3 if args.p is None else args.p
            fits = [verify.fit_error_order(args.s, p, verify.ORDER_GRID,
                                           max(verify.ORDER_DPS, cfg.dps or 0))]
        else:
            cases = [(0.5, 0), (0.5, 1), (0.5, 2), (0.5, 3), (0.5 + 1.3j, 2), (1.0, 2)]
            fits = [verify.fit_error_order(s, p) for s, p in cases]
        rep = verify.VerificationReport("order")
        rep.cases = [f.as_case() for f in fits]
        reports = [rep]
    elif suite == "signs":
        svals = [_single_real(args.s, "signs")] if args.s is not None else [0.5, 3.0, 5.5]
        rep = verify.VerificationReport("signs")
        for s in svals:
            r = verify.audit_signs(s, args.n_max)
            rep.cases += r.cases
            rep.notes += [f"s={s}: {n}" for n in r.notes]
        reports = [rep]
    elif suite == "divergence":
        if not cfg.dps or cfg.dps < coeffs.EXTENDED_MIN_DPS:
            raise ConfigurationError(
                f"divergence suite needs --precision >= {coeffs.EXTENDED_MIN_DPS} "
                "(or RIESZ_PRECISION)")
        svals = [_single_real(args.s, "divergence")] if args.s is not None else [0.5, 1.5, 2.0]
        Ns = [args.N] if args.N is not None else [2, 3]
        rep = verify.VerificationReport("divergence")
        for s in svals:
            for N in Ns:
                r = verify.audit_divergence(s, N, cfg.dps)
                rep.cases += r.cases
                rep.notes += r.notes
        reports = [rep]
    elif suite == "optimality":
        svals = [_single_real(args.s, "optimality")] if args.s is not None else [0.5, 1.0, 3.0, -1.0]
        N = args.N if args.N is not None else 20
        rep = verify.VerificationReport("optimality", seed=cfg.seed)
        for s in svals:
            r = verify.audit_optimality(s, N, args.trials, args.scale, cfg.seed)
            rep.cases += r.cases
            rep.notes += [f"s={s}: {n}" for n in r.notes]
        reports = [rep]
    passed = all(r.passed for r in reports)
    payload = {"seed": cfg.seed, "reports": [r.to_dict() for r in reports], "passed": passed}
    if fits:
        payload["slope_fits"] = [f.to_dict() for f in fits]
    if cfg.dps:
        payload["precision"] = cfg.precision_digits
    return (EXIT_OK if passed else EXIT_FAIL), payload, fits


def table_rows(s_list, N_list, p: int, dps: int) -> list[dict]:
    """Direct and truncated-expansion values with their difference.

    Differences below the working resolution (``10^(2-dps)`` relative) are
    reported as exactly 0, which is what terminating expansions produce.
    """
    rows = []
    for s in s_list:
        exp = energy.asymptotic_expansion(s, p, dps)
        for N in N_list:
            with mpmath.workdps(dps):
                d = energy.energy_direct(s, N, dps)
                a = exp.evaluate(N)
                diff = abs(d - a)
                if diff <= abs(d) * mpmath.mpf(10) ** (2 - dps):
                    diff = mpmath.mpf(0)
                rows.append({"s": _format_s(s), "N": N, "p": p,
                             "direct": _pair(d), "asymptotic": _pair(a),
                             "err": float(diff), "predicted_order": exp.remainder_order})
    return rows


def cmd_table(args, cfg: CliConfig) -> tuple[int, list[dict]]:
    if any(N < 2 for N in args.N):
        raise DomainError("every N must be at least 2")
    dps = max(cfg.precision_digits, TABLE_MIN_DPS)
    return EXIT_OK, table_rows(args.s, args.N, cfg.p, dps)


# --------------------------------------------------------------------------
# output


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _value_str(pair) -> str:
    return repr(pair[0]) if pair[1] == 0 else _format_s(complex(*pair))


def render(command: str, payload, fmt: str, fits=()) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True, allow_nan=False) + "\n"
    if command == "table":
        header = ["s", "N", "p", "direct", "asymptotic", "err", "predicted_order"]
        rows = [[r["s"], r["N"], r["p"], _value_str(r["direct"]), _value_str(r["asymptotic"]),
                 repr(r["err"]), repr(r["predicted_order"])] for r in payload]
        if fmt == "csv":
            return _csv(header, rows)
        return "\n".join("  ".join(str(x) for x in row) for row in [header] + rows) + "\n"
    if command == "energy":
        if fmt == "csv":
            return _csv(["s", "N", "method", "p", "value", "remainder_order"],
                        [[_value_str(payload["s"]), payload["N"], payload["method"], payload["p"],
                          _value_str(payload["value"]), payload["remainder_order"]]])
        lines = [f"L_s(N) at s={_value_str(payload['s'])}, N={payload['N']} "
                 f"[{payload['method']}]: {_value_str(payload['value'])}"]
        for t in payload["terms"]:
            lines.append(f"  {t['term']:<20} {_value_str(t['value'])}")
        if payload["remainder_order"] is not None:
            lines.append(f"  remainder O(N^{payload['remainder_order']})")
        return "\n".join(lines) + "\n"
    if command == "coeffs":
        if "alphas" in payload:
            rows = [[a["n"], a["pi_power"], j, q] for a in payload["alphas"]
                    for j, q in enumerate(a["rationals"])]
            header = ["n", "pi_power", "s_power", "rational"]
        else:
            rows = [[c["n"], "" if c["exceptional"] else _value_str(c["value"]),
                     c.get("exact", ""), int(c["exceptional"])] for c in payload["coefficients"]]
            header = ["n", "value", "exact", "exceptional"]
        if fmt == "csv":
            return _csv(header, rows)
        return "\n".join("  ".join(str(x) for x in row) for row in [header] + rows) + "\n"
    # verify
    if fmt == "csv":
        if len(fits) == 1:
            return fits[0].to_csv()
        if fits:
            rows = [[_format_s(f.s), f.p, N, repr(e), repr(f.expected_slope)]
                    for f in fits for N, e in zip(f.N_grid, f.errors)]
            return _csv(["s", "p", "N", "err", "predicted_order"], rows)
        rows = [[r["suite"], c["name"], json.dumps(c["inputs"], sort_keys=True), c["passed"]]
                for r in payload["reports"] for c in r["cases"]]
        return _csv(["suite", "case", "inputs", "passed"], rows)
    lines = []
    for r in payload["reports"]:
        s = r["summary"]
        lines.append(f"{r['suite']}: {s['passed']}/{s['total']} passed")
        lines += [f"  FAIL {c['name']} {json.dumps(c['inputs'], sort_keys=True)}"
                  for c in r["cases"] if not c["passed"]]
        lines += [f"  note: {n}" for n in r["notes"]]
    lines.append("PASS" if payload["passed"] else "FAIL")
    return "\n".join(lines) + "\n"


def _attach_values(argv: Sequence[str]) -> list[str]:
    """Join ``--s -1.2+0.7i`` into ``--s=-1.2+0.7i``.

    argparse only recognises plain negative numbers as values, so complex
    values and lists with a leading minus would otherwise look like flags.
    """
    out, argv = [], list(argv)
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--s", "--N") and i + 1 < len(argv) and argv[i + 1].startswith("-") \
                and not argv[i + 1].startswith("--"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    args = parser.parse_args(_attach_values(argv))  # exits with status 2 on bad arguments
    precision = args.precision
    if precision is None:
        try:
            precision = int(_default_precision())
        except ValueError:
            parser.error("RIESZ_PRECISION must be an integer")
    try:
        p = getattr(args, "p", None)
        cfg = CliConfig(precision_digits=precision, p=3 if p is None else p,
                        n_max=getattr(args, "n_max", energy.SERIES_NMAX),
                        format=args.format, seed=args.seed, output_path=args.out)
        fits = ()
        if args.command == "energy":
            code, payload = cmd_energy(args, cfg)
        elif args.command == "coeffs":
            code, payload = cmd_coeffs(args, cfg)
        elif args.command == "verify":
            code, payload, fits = cmd_verify(args, cfg)
        else:
            code, payload = cmd_table(args, cfg)
    except (RieszError, ValueError) as exc:
        print(f"riesz-circle: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    text = render(args.command, payload, cfg.format, fits)
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
