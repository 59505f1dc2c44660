"""Command-line interface: one subcommand per verification primitive.

Two output styles carry the same values: a human-oriented text layout and a
line-delimited report (command / param / row / summary / violation lines)
with stable key ordering, so repeated runs are byte-identical.

Exit codes: 0 verified, 1 property violation or counterexample, 2 usage
error, 3 resource budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

from . import cf_dynamics, dedekind, euclid, propositions, sequences
from .errors import (
    CertificateMismatchError,
    DomainError,
    HypothesisFailedError,
    ResourceLimitError,
)
from .integers import rational_str


@dataclass
class Report:
    """Everything a subcommand produced, ready for either renderer."""

    command: str
    parameters: dict[str, str] = field(default_factory=dict)
    rows: list[dict[str, str]] = field(default_factory=list)
    summary: dict[str, str] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _real(value: float) -> str:
    return format(value, ".15g")


def render_report(report: Report) -> str:
    lines = [f"command: {report.command}"]
    for key in sorted(report.parameters):
        lines.append(f"param {key}: {report.parameters[key]}")
    for row in report.rows:
        lines.append("row " + " ".join(f"{k}={v}" for k, v in row.items()))
    for key, value in report.summary.items():
        lines.append(f"summary {key}: {value}")
    for message in report.violations:
        lines.append(f"violation: {message}")
    return "\n".join(lines) + "\n"


def render_text(report: Report) -> str:
    headline = report.command
    params = " ".join(f"{k}={report.parameters[k]}" for k in sorted(report.parameters))
    if params:
        headline += "  " + params
    lines = [headline]
    for row in report.rows:
        lines.append("  " + " ".join(f"{k}={v}" for k, v in row.items()))
    for key, value in report.summary.items():
        lines.append(f"{key} = {value}")
    for message in report.violations:
        lines.append(f"VIOLATION: {message}")
    return "\n".join(lines) + "\n"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # raise instead of killing the process
        raise UsageError(message)


def _common_params(args, names) -> dict[str, str]:
    params = {"format": args.format}
    if getattr(args, "out", None):
        params["out"] = args.out
    for name in names:
        value = getattr(args, name)
        if value is None:
            continue
        if isinstance(value, bool):
            params[name] = _bool(value)
        elif isinstance(value, (list, tuple)):
            params[name] = ",".join(str(v) for v in value)
        else:
            params[name] = str(value)
    return params


def _trace_rows(trace: euclid.EuclidTrace) -> list[dict[str, str]]:
    rows = []
    for index, step in enumerate(trace.steps, start=1):
        row = {"step": str(index), "larger": str(step.larger), "smaller": str(step.smaller)}
        if step.quotient is not None:
            row["quotient"] = str(step.quotient)
        row["remainder"] = str(step.remainder)
        rows.append(row)
    return rows


def _cmd_gcd(args) -> Report:
    report = Report("gcd", _common_params(args, ["a", "b", "method", "trace", "budget"]))
    if args.method == "subtractive":
        g, trace = euclid.gcd_subtractive(args.a, args.b, step_budget=args.budget)
    else:
        g, trace = euclid.gcd_remainder(args.a, args.b)
    if args.trace:
        report.rows = _trace_rows(trace)
    report.summary["gcd"] = str(g)
    report.summary["step_count"] = str(trace.step_count)
    return report


def _cmd_xgcd(args) -> Report:
    report = Report("xgcd", _common_params(args, ["a", "b"]))
    cert = euclid.xgcd(args.a, args.b)
    report.summary["g"] = str(cert.g)
    report.summary["x"] = str(cert.x)
    report.summary["y"] = str(cert.y)
    return report


def _cmd_div_from_bezout(args) -> Report:
    given = [args.x, args.y, args.g]
    if any(v is not None for v in given) and any(v is None for v in given):
        raise UsageError("div-from-bezout needs all of --x, --y, --g or none")
    report = Report(
        "div-from-bezout", _common_params(args, ["a", "b", "x", "y", "g", "budget"])
    )
    if args.x is None:
        cert = euclid.xgcd(args.a, args.b)
    else:
        cert = euclid.BezoutCertificate(args.a, args.b, args.g, args.x, args.y)
    quotient, remainder = euclid.division_from_bezout(
        args.a, args.b, cert, step_budget=args.budget
    )
    report.summary["g"] = str(cert.g)
    report.summary["cert_x"] = str(cert.x)
    report.summary["cert_y"] = str(cert.y)
    report.summary["quotient"] = str(quotient)
    report.summary["remainder"] = str(remainder)
    return report


def _cmd_lowest_terms(args) -> Report:
    report = Report("lowest-terms", _common_params(args, ["a", "b"]))
    num, den = euclid.lowest_terms(args.a, args.b)
    report.summary["reduced_a"] = str(num)
    report.summary["reduced_b"] = str(den)
    return report


def _cmd_cf(args) -> Report:
    report = Report("cf", _common_params(args, ["a", "b"]))
    cf = cf_dynamics.cf_expand(args.a, args.b)
    num, den = cf_dynamics.cf_value(cf)
    report.summary["quotients"] = ",".join(str(q) for q in cf.quotients)
    report.summary["length"] = str(len(cf.quotients))
    report.summary["value"] = f"{num}/{den}"
    return report


def _cmd_yao_knuth(args) -> Report:
    report = Report("stats yao-knuth", _common_params(args, ["a", "budget"]))
    stat = cf_dynamics.yao_knuth_stat(args.a, scan_budget=args.budget)
    mean_len = cf_dynamics.average_cf_length(args.a, scan_budget=args.budget)
    report.summary["total"] = str(stat.total)
    report.summary["predicted"] = _real(stat.predicted)
    report.summary["ratio"] = _real(stat.ratio)
    report.summary["mean_cf_length"] = _real(mean_len)
    return report


def _cmd_dynamics(args) -> Report:
    report = Report("dynamics", _common_params(args, ["x", "y", "trace", "budget"]))
    run = cf_dynamics.dynamical_run(args.x, args.y, step_budget=args.budget)
    report.summary["step_count"] = str(run.step_count)
    report.summary["terminal_x"] = str(run.terminal[0])
    report.summary["terminal_y"] = str(run.terminal[1])
    report.summary["gcd"] = str(max(run.terminal))
    product = run.product
    report.summary["product"] = ",".join(
        str(v) for v in (product.m11, product.m12, product.m21, product.m22)
    )
    report.summary["determinant"] = str(product.determinant)
    return report


def _cmd_dedekind(args) -> Report:
    report = Report("dedekind", _common_params(args, ["h", "k"]))
    report.summary["value"] = rational_str(dedekind.dedekind_sum(args.h, args.k))
    return report


def _cmd_reciprocity_scan(args) -> Report:
    if args.limit is None:
        raise UsageError("reciprocity-scan needs --limit")
    report = Report("reciprocity-scan", _common_params(args, ["limit"]))
    pairs = 0
    from math import gcd as _g

    for k in range(1, args.limit + 1):
        for h in range(1, k):
            if _g(h, k) != 1:
                continue
            pairs += 1
            residual = dedekind.reciprocity_residual(h, k)
            if residual != 0:
                report.violations.append(
                    f"nonzero residual at h={h} k={k}: {rational_str(residual)}"
                )
    report.summary["pairs_checked"] = str(pairs)
    report.summary["nonzero_residuals"] = str(len(report.violations))
    return report


def _cmd_perfect(args) -> Report:
    if (args.p is None) == (args.scan is None):
        raise UsageError("perfect needs an exponent or --scan, not both")
    report = Report("perfect", _common_params(args, ["p", "scan", "budget"]))
    if args.scan is not None:
        for n, p in propositions.perfect_scan(args.scan):
            report.rows.append({"n": str(n), "p": str(p)})
        report.summary["count"] = str(len(report.rows))
        return report
    try:
        cert = propositions.perfect_from_mersenne(args.p, step_budget=args.budget)
    except HypothesisFailedError as exc:
        report.violations.append(str(exc))
        return report
    report.summary["mersenne"] = str(cert.mersenne)
    report.summary["value"] = str(cert.value)
    report.summary["sigma"] = str(cert.sigma_value)
    return report


def _cmd_euclid_extend(args) -> Report:
    report = Report("euclid-extend", _common_params(args, ["primes", "budget"]))
    extension = propositions.euclid_prime_extension(args.primes, step_budget=args.budget)
    report.summary["e"] = str(extension.e_value)
    report.summary["new_prime"] = str(extension.new_prime)
    return report


def _cmd_wseq(args) -> Report:
    report = Report("wseq", _common_params(args, ["values"]))
    result = sequences.w_witness(args.values)
    is_w = result.witness_index is not None
    report.summary["is_w"] = _bool(is_w)
    report.summary["witness_index"] = str(result.witness_index) if is_w else "none"
    report.summary["witness_value"] = str(result.witness_value) if is_w else "none"
    return report


def _cmd_interval_equiv(args) -> Report:
    if (args.m is None) == (args.scan is None):
        raise UsageError("interval-equiv needs m or --scan, not both")
    report = Report("interval-equiv", _common_params(args, ["m", "scan"]))
    if args.scan is not None:
        mismatches = 0
        for m in range(1, args.scan + 1):
            prime_exists, is_w = sequences.prime_interval_equivalence(m)
            if prime_exists != is_w:
                mismatches += 1
                report.violations.append(
                    f"m={m}: prime_exists={_bool(prime_exists)} is_w={_bool(is_w)}"
                )
        report.summary["checked"] = str(args.scan)
        report.summary["mismatches"] = str(mismatches)
        return report
    prime_exists, is_w = sequences.prime_interval_equivalence(args.m)
    report.summary["prime_exists"] = _bool(prime_exists)
    report.summary["is_w"] = _bool(is_w)
    report.summary["equal"] = _bool(prime_exists == is_w)
    if prime_exists != is_w:
        report.violations.append(
            f"m={args.m}: prime_exists={_bool(prime_exists)} is_w={_bool(is_w)}"
        )
    return report


def _cmd_grimm(args) -> Report:
    single = args.m is not None or args.n is not None
    if single and (args.m is None or args.n is None):
        raise UsageError("grimm needs both m and n for a single window")
    if single == (args.scan is not None):
        raise UsageError("grimm needs either m n or --scan")
    report = Report("grimm", _common_params(args, ["m", "n", "scan"]))
    if args.scan is not None:
        matched_runs = 0
        for m, n, matched, assignment, validated in sequences.grimm_scan(args.scan):
            row = {
                "m": str(m),
                "n": str(n),
                "matched": _bool(matched),
                "assignment": ",".join(str(p) for p in assignment),
            }
            report.rows.append(row)
            if matched and validated:
                matched_runs += 1
            else:
                report.violations.append(
                    f"run {m}+1..{m}+{n} admits no distinct prime assignment"
                )
        report.summary["runs"] = str(len(report.rows))
        report.summary["matched_runs"] = str(matched_runs)
        return report
    result = sequences.grimm_assign(args.m, args.n)
    if result is None:
        report.summary["matched"] = "false"
        report.violations.append(
            f"run {args.m}+1..{args.m}+{args.n} admits no distinct prime assignment"
        )
        return report
    validated = sequences.verify_assignment(result)
    report.summary["matched"] = "true"
    report.summary["assignment"] = ",".join(str(p) for p in result.assignment)
    report.summary["validated"] = _bool(validated)
    if not validated:
        report.violations.append("assignment failed independent re-validation")
    return report


def _cmd_nonw(args) -> Report:
    bound = args.max if args.max is not None else sequences.default_window_bound(args.m)
    report = Report("nonw", _common_params(args, ["m", "max"]))
    result = sequences.non_w_max_run(args.m, bound)
    report.summary["bound"] = str(bound)
    report.summary["longest_run"] = str(result)
    return report


def _add_output_flags(parser) -> None:
    parser.add_argument("--format", choices=["text", "report"], default="text")
    parser.add_argument("--out", default=None, help="write the output to this path")


def _build_parser() -> _Parser:
    parser = _Parser(prog="euclidkit", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("gcd", help="gcd with a replayable trace")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--method", choices=["subtractive", "remainder"], default="remainder")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--budget", type=int, default=None)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_gcd)

    p = subs.add_parser("xgcd", help="Bezout certificate by back-substitution")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_xgcd)

    p = subs.add_parser(
        "div-from-bezout", help="quotient and remainder rebuilt from a certificate"
    )
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--x", type=int, default=None)
    p.add_argument("--y", type=int, default=None)
    p.add_argument("--g", type=int, default=None)
    p.add_argument("--budget", type=int, default=None)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_div_from_bezout)

    p = subs.add_parser("lowest-terms", help="reduce a pair by its gcd")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_lowest_terms)

    p = subs.add_parser("cf", help="continued fraction of a/b and its round trip")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_cf)

    p = subs.add_parser("stats", help="corpus statistics")
    stats_subs = p.add_subparsers(dest="stat", required=True)
    q = stats_subs.add_parser("yao-knuth", help="sum of all partial quotients up to a")
    q.add_argument("a", type=int)
    q.add_argument("--budget", type=int, default=None)
    _add_output_flags(q)
    q.set_defaults(handler=_cmd_yao_knuth)

    p = subs.add_parser("dynamics", help="subtractive map orbit and step matrices")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--budget", type=int, default=None)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_dynamics)

    p = subs.add_parser("dedekind", help="exact Dedekind sum s(h, k)")
    p.add_argument("h", type=int)
    p.add_argument("k", type=int)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_dedekind)

    p = subs.add_parser(
        "reciprocity-scan", help="verify reciprocity on all coprime pairs up to --limit"
    )
    p.add_argument("--limit", type=int, default=None)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_reciprocity_scan)

    p = subs.add_parser("perfect", help="perfect-number certificate or scan")
    p.add_argument("p", type=int, nargs="?", default=None)
    p.add_argument("--scan", type=int, default=None)
    p.add_argument("--budget", type=int, default=None)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_perfect)

    p = subs.add_parser("euclid-extend", help="a prime outside any finite list")
    p.add_argument("primes", type=int, nargs="*")
    p.add_argument("--budget", type=int, default=None)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_euclid_extend)

    p = subs.add_parser("wseq", help="least coprime witness of a sequence")
    p.add_argument("values", type=int, nargs="+")
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_wseq)

    p = subs.add_parser(
        "interval-equiv", help="prime between squares vs coprime witness window"
    )
    p.add_argument("m", type=int, nargs="?", default=None)
    p.add_argument("--scan", type=int, default=None)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_interval_equiv)

    p = subs.add_parser("grimm", help="distinct prime divisors for composite runs")
    p.add_argument("m", type=int, nargs="?", default=None)
    p.add_argument("n", type=int, nargs="?", default=None)
    p.add_argument("--scan", type=int, default=None)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_grimm)

    p = subs.add_parser("nonw", help="longest witness-free run from m+1")
    p.add_argument("m", type=int)
    p.add_argument("--max", type=int, default=None)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_nonw)

    return parser


def execute(argv) -> tuple[int, Report | None]:
    """Run one invocation; returns (exit_code, report)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except UsageError as exc:
        return 2, Report("usage", violations=[str(exc)])
    except SystemExit as exc:  # --help already printed its text
        code = exc.code if isinstance(exc.code, int) else 0
        return code, None
    command = getattr(args, "command", "usage")
    try:
        report = args.handler(args)
    except UsageError as exc:
        return 2, Report(command, violations=[str(exc)])
    except (DomainError, CertificateMismatchError) as exc:
        return 2, Report(command, violations=[str(exc)])
    except HypothesisFailedError as exc:
        return 1, Report(command, violations=[str(exc)])
    except ResourceLimitError as exc:
        return 3, Report(command, violations=[str(exc)])
    except ZeroDivisionError as exc:
        return 2, Report(command, violations=[str(exc)])
    return (1 if report.violations else 0), report


def main(argv=None) -> int:
    code, report = execute(sys.argv[1:] if argv is None else argv)
    if report is not None:
        if report.parameters.get("format") == "report":
            text = render_report(report)
        else:
            text = render_text(report)
        out_path = report.parameters.get("out")
        if out_path:
            with open(out_path, "w", encoding="utf-8") as fh:
                fh.write(text)
        elif code in (2, 3):
            sys.stderr.write(text)
        else:
            sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
