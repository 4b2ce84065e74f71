"""Command-line interface.

Subcommands: expand, recurrence, verify, and family {list,expand,audit}.
Exit codes: 0 success / all checks pass, 1 verification or audit mismatch,
2 invalid input.  Output is deterministic: identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import families as families_mod
from .errors import MissingVariable, RatGenError
from .parser import format_poly, parse_poly, split_in_t
from .poly import Polynomial
from .recurrence import (
    RationalGF,
    convolve_numerator,
    derive_recurrence,
    expand_family,
    expand_inverse,
    identity_residual,
    render_recurrence,
)
from .series import SeriesPrefix, cauchy_mul, geometric_inverse, multinomial_inverse

MULTINOMIAL_ORDER_CAP = 12


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ratgen",
        description=(
            "Expand rational generating functions A(x,..,t)/B(x,..,t)^h "
            "into their polynomial families, derive the recurrence they "
            "satisfy, and cross-verify against independent series oracles."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_gf_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--num", required=True, help="numerator expression in t")
        p.add_argument("--den", required=True, help="denominator expression in t")
        p.add_argument(
            "--pow", type=int, default=1, metavar="H",
            help="denominator power h >= 1 (default 1)",
        )

    def add_output_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format", choices=("text", "json", "csv"), default="text",
            help="output format (default text)",
        )
        p.add_argument(
            "--at", metavar="VAR=INT,...", default=None,
            help="also evaluate each coefficient at an integer point",
        )

    p_expand = sub.add_parser("expand", help="expand a generating function")
    add_gf_flags(p_expand)
    p_expand.add_argument("-N", type=int, required=True, help="truncation order")
    add_output_flags(p_expand)

    p_rec = sub.add_parser("recurrence", help="derive the recurrence")
    add_gf_flags(p_rec)

    p_verify = sub.add_parser("verify", help="cross-check against oracles")
    add_gf_flags(p_verify)
    p_verify.add_argument("-N", type=int, required=True, help="truncation order")
    p_verify.add_argument(
        "--oracle", required=True,
        choices=("geometric", "multinomial", "convolution", "residual", "all"),
        help="which identity to check",
    )
    p_verify.add_argument(
        "--force", action="store_true",
        help="allow the multinomial oracle beyond N=12",
    )
    p_verify.add_argument(
        "--corrupt", type=int, default=None, help=argparse.SUPPRESS
    )  # test harness hook: perturb the engine expansion at one index

    p_family = sub.add_parser("family", help="work with the named catalog")
    fam_sub = p_family.add_subparsers(dest="family_command", required=True)

    fam_sub.add_parser("list", help="list the catalog")

    def add_family_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("name", help="family name (see `family list`)")
        p.add_argument(
            "--param", action="append", default=[], metavar="KEY=VALUE",
            help="family parameter (repeatable); value is an integer or expression",
        )
        p.add_argument(
            "--mode", choices=families_mod.MODES, default="canonical",
            help="numerator reading (default canonical)",
        )

    p_fexpand = fam_sub.add_parser("expand", help="expand a named family")
    add_family_flags(p_fexpand)
    p_fexpand.add_argument("-N", type=int, required=True, help="truncation order")
    add_output_flags(p_fexpand)

    p_faudit = fam_sub.add_parser(
        "audit", help="compare the expansion against the table's stated values"
    )
    add_family_flags(p_faudit)
    p_faudit.add_argument(
        "-N", type=int, default=4, help="orders to audit (default 4)"
    )

    return parser


def _coefficients(expr: str, what: str) -> tuple[Polynomial, ...]:
    try:
        return split_in_t(parse_poly(expr))
    except RatGenError as exc:
        raise RatGenError(f"in --{what} expression: {exc}") from exc


def _gf_from_args(args: argparse.Namespace) -> RationalGF:
    if args.pow < 1:
        raise RatGenError(f"--pow must be >= 1, got {args.pow}")
    num = _coefficients(args.num, "num")
    den = _coefficients(args.den, "den")
    return RationalGF(num, den, args.pow)


def _parse_at(text: str | None) -> dict[str, int] | None:
    if text is None:
        return None
    assignment: dict[str, int] = {}
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        var, sep, value = piece.partition("=")
        var = var.strip()
        if not sep or not var:
            raise RatGenError(f"bad --at entry {piece!r}; expected VAR=INT")
        try:
            assignment[var] = int(value.strip())
        except ValueError:
            raise RatGenError(
                f"bad --at value for {var!r}: {value.strip()!r} is not an integer"
            ) from None
    if not assignment:
        raise RatGenError("--at given but no assignments parsed")
    return assignment


def _parse_family_params(pairs: Sequence[str]) -> dict[str, object]:
    params: dict[str, object] = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        key = key.strip()
        if not sep or not key:
            raise RatGenError(f"bad --param entry {pair!r}; expected KEY=VALUE")
        value = value.strip()
        try:
            params[key] = int(value)
        except ValueError:
            params[key] = parse_poly(value)
    return params


def _records(
    expansion: SeriesPrefix, at: dict[str, int] | None
) -> list[dict[str, object]]:
    rows: list[dict[str, object]] = []
    for k, p in enumerate(expansion):
        row: dict[str, object] = {"k": k, "poly": format_poly(p)}
        if at is not None:
            try:
                row["value"] = str(p.evaluate(at))
            except MissingVariable as exc:
                raise RatGenError(f"--at is incomplete at k={k}: {exc}") from exc
        rows.append(row)
    return rows


def _emit(rows: list[dict[str, object]], fmt: str, query: dict[str, object]) -> None:
    if fmt == "json":
        print(json.dumps({"query": query, "results": rows},
                         indent=2, sort_keys=True))
    elif fmt == "csv":
        with_value = rows and "value" in rows[0]
        print("k,poly,value" if with_value else "k,poly")
        for row in rows:
            line = f"{row['k']},\"{row['poly']}\""
            if with_value:
                line += f",{row['value']}"
            print(line)
    else:
        for row in rows:
            line = f"P_{row['k']} = {row['poly']}"
            if "value" in row:
                line += f" = {row['value']}"
            print(line)


def _at_echo(at: dict[str, int] | None) -> dict[str, str] | None:
    if at is None:
        return None
    return {var: str(value) for var, value in sorted(at.items())}


def _cmd_expand(args: argparse.Namespace) -> int:
    gf = _gf_from_args(args)
    at = _parse_at(args.at)
    expansion = expand_family(gf, args.N)
    query = {
        "command": "expand",
        "num": args.num,
        "den": args.den,
        "pow": args.pow,
        "N": args.N,
        "at": _at_echo(at),
    }
    _emit(_records(expansion, at), args.format, query)
    return 0


def _cmd_recurrence(args: argparse.Namespace) -> int:
    gf = _gf_from_args(args)
    rec = derive_recurrence(gf)
    print(render_recurrence(rec))
    print(f"order: {rec.order}")
    print(f"forcing cutoff: {rec.forcing_cutoff}")
    return 0


def _first_difference(a: SeriesPrefix, b: SeriesPrefix) -> int | None:
    for k in range(a.order + 1):
        if a[k] != b[k]:
            return k
    return None


def _report(name: str, engine: SeriesPrefix, oracle: SeriesPrefix, note: str = "") -> bool:
    k = _first_difference(engine, oracle)
    if k is None:
        suffix = f" ({note})" if note else ""
        print(f"PASS {name}{suffix}")
        return True
    print(f"FAIL {name}: first difference at k={k}: "
          f"engine {format_poly(engine[k])} vs oracle {format_poly(oracle[k])}")
    return False


def _cmd_verify(args: argparse.Namespace) -> int:
    gf = _gf_from_args(args)
    N = args.N
    if N < 0:
        raise RatGenError(f"order must be nonnegative, got {N}")
    selected = args.oracle
    D = gf.reduced_denominator()
    engine = expand_family(gf, N)
    if args.corrupt is not None and 0 <= args.corrupt <= N:
        bumped = list(engine.coeffs)
        bumped[args.corrupt] = bumped[args.corrupt] + Polynomial.one()
        engine = SeriesPrefix(bumped)

    ok = True
    if selected in ("geometric", "all"):
        num_series = SeriesPrefix.from_polynomials(gf.numerator, N)
        oracle = cauchy_mul(num_series, geometric_inverse(D, N))
        ok &= _report("geometric", engine, oracle, f"N={N}")
    if selected in ("multinomial", "all"):
        n_m = N
        note = f"N={N}"
        if N > MULTINOMIAL_ORDER_CAP and not args.force:
            if selected == "multinomial":
                raise RatGenError(
                    f"multinomial oracle is exponential; refusing N={N} > "
                    f"{MULTINOMIAL_ORDER_CAP} (pass --force to override)"
                )
            n_m = MULTINOMIAL_ORDER_CAP
            note = f"capped at N={n_m}"
        lhs = multinomial_inverse(D, n_m)
        rhs = geometric_inverse(D, n_m)
        ok &= _report("multinomial", lhs, rhs, note)
    if selected in ("convolution", "all"):
        oracle = convolve_numerator(gf.numerator, expand_inverse(D, N))
        ok &= _report("convolution", engine, oracle, f"N={N}")
    if selected in ("residual", "all"):
        residual = identity_residual(gf.reduced(), N)
        zero = SeriesPrefix.from_polynomials((), N)
        ok &= _report("residual", residual, zero, f"N={N}")
    return 0 if ok else 1


def _cmd_family_list(args: argparse.Namespace) -> int:
    for spec in families_mod.list_families():
        print(f"{spec.name}: {spec.summary}")
    return 0


def _family_query_params(params: dict[str, object]) -> dict[str, str]:
    return {
        key: format_poly(value) if isinstance(value, Polynomial) else str(value)
        for key, value in params.items()
    }


def _cmd_family_expand(args: argparse.Namespace) -> int:
    params = _parse_family_params(args.param)
    gf = families_mod.instantiate(args.name, params, args.mode)
    _, resolved = families_mod.build_parts(args.name, params)
    at = _parse_at(args.at)
    expansion = expand_family(gf, args.N)
    query = {
        "command": "family expand",
        "family": args.name,
        "mode": args.mode,
        "params": _family_query_params(resolved),
        "N": args.N,
        "at": _at_echo(at),
    }
    _emit(_records(expansion, at), args.format, query)
    return 0


def _cmd_family_audit(args: argparse.Namespace) -> int:
    params = _parse_family_params(args.param)
    report = families_mod.audit(args.name, params, args.N)
    print(f"family: {report.family}")
    if report.parameters:
        rendered = ", ".join(
            f"{k}={v}" for k, v in _family_query_params(report.parameters).items()
        )
        print(f"parameters: {rendered}")
    for mode in families_mod.MODES:
        mode_audit = report.mode(mode)
        print(f"mode: {mode}")
        print(
            "  expansion: "
            + ", ".join(format_poly(p) for p in mode_audit.expansion)
        )
        if not mode_audit.checks:
            print("  no stated initial values to compare")
        for check in mode_audit.checks:
            verdict = "match" if check.match else "MISMATCH"
            print(
                f"  k={check.k}: computed {format_poly(check.computed)}, "
                f"stated {format_poly(check.stated)} -> {verdict}"
            )
    feedback = "match" if report.feedback_match else "MISMATCH"
    print(f"recurrence feedback vs table: {feedback}")
    for note in report.notes:
        print(f"note: {note}")

    requested = report.mode(args.mode)
    problems: list[str] = []
    if not requested.all_match:
        ks = ", ".join(str(k) for k in requested.mismatches)
        problems.append(f"{args.mode}-mode values disagree at k={ks}")
    if not report.feedback_match:
        problems.append("derived recurrence disagrees with the table")
    if problems:
        label = "MISMATCH" if args.mode == "printed" else "WARN"
        for problem in problems:
            print(f"{label}: {problem}")
        return 1 if args.mode == "printed" else 0
    other = report.mode("printed" if args.mode == "canonical" else "canonical")
    if not other.all_match:
        ks = ", ".join(str(k) for k in other.mismatches)
        print(f"WARN: {other.mode}-mode values disagree at k={ks}")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "expand":
            return _cmd_expand(args)
        if args.command == "recurrence":
            return _cmd_recurrence(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "family":
            if args.family_command == "list":
                return _cmd_family_list(args)
            if args.family_command == "expand":
                return _cmd_family_expand(args)
            return _cmd_family_audit(args)
        raise AssertionError(f"unhandled command {args.command!r}")
    except RatGenError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
