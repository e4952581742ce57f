"""Command-line surface: check matrices from files, reproduce the published
counterexample numbers, and run seeded violation/sharpness fuzzing.

Exit codes
----------
check:      0 the inequality holds (strictly or with equality)
            1 violated
            2 precondition failed (including input matrices of the wrong shape)
            3 parse or usage error
reproduce:  0 every computed value matches its recorded value, 1 otherwise,
            3 unknown example id
fuzz:       0 expected outcome (control predicate with zero violations, or a
              refutable predicate with at least one), 1 unexpected outcome,
            3 usage error

Structured output is newline-delimited JSON, one object per line, and is
byte-identical across reruns with the same inputs and seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .checks import CheckReport, Verdict
from .linalg import DEFAULT_TOL, LinalgError, Tolerances, matrix_from_json_dict
from .search import (
    FAMILIES,
    PAPER_EXAMPLE_IDS,
    PREDICATE_IDS,
    GeneratorSpec,
    SearchReport,
    Witness,
    compare_paper_example,
    search_violations,
    sharpness_probe,
    _CATALOG,
)

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_UNEXPECTED = 1
EXIT_PRECONDITION = 2
EXIT_USAGE = 3

_FILE_ARITY = {
    # (min files, max files or None for unbounded)
    "fischer": (1, 1),
    "thm1": (1, None),
    "cor_c0": (1, 1),
    "cor_c1": (1, None),
    "lemma1": (1, 1),
    "djokovic": (1, 1),
    "thm2": (1, 1),
    "drury": (1, 1),
    "thm3": (1, 1),
    "weyl": (1, 1),
    "log_major": (1, 1),
    "schur_identity": (1, 1),
    "e21": (2, 2),
}
_NEEDS_R = frozenset({"fischer", "thm1", "cor_c0", "cor_c1", "thm2", "thm3",
                      "schur_identity", "e21"})
_NEEDS_P = frozenset({"thm3", "log_major"})


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on errors; the contract here is 3."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


@dataclass
class SuiteConfig:
    """Validated knobs shared by the commands."""

    tol: Tolerances = DEFAULT_TOL
    out: Path | None = None
    output_format: str = "human"
    lines: list[str] = field(default_factory=list)

    def emit(self, text: str) -> None:
        self.lines.append(text)

    def flush(self) -> None:
        payload = "\n".join(self.lines) + ("\n" if self.lines else "")
        if self.out is not None:
            self.out.write_text(payload)
        else:
            sys.stdout.write(payload)


def _build_config(args) -> SuiteConfig:
    tol = DEFAULT_TOL
    if getattr(args, "tol_eq", None) is not None:
        if args.tol_eq <= 0.0:
            raise _usage("--tol-eq must be positive")
        tol = tol.with_eq_rel(args.tol_eq)
    out = Path(args.out) if getattr(args, "out", None) else None
    return SuiteConfig(tol=tol, out=out, output_format=args.format)


class _UsageError(Exception):
    pass


def _usage(message: str) -> _UsageError:
    return _UsageError(message)


def _parse_entry_bound(text: str | None):
    if text is None:
        return None
    if ":" in text:
        lo, hi = text.split(":", 1)
        try:
            return (int(lo), int(hi))
        except ValueError:
            raise _usage(f"bad --entry-bound {text!r}: expected LO:HI integers")
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        raise _usage(f"bad --entry-bound {text!r}")


def _load_matrix_file(path: str):
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as err:
        raise _usage(f"cannot read {path}: {err}")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise _usage(f"{path}: invalid JSON at line {err.lineno}, column {err.colno}: {err.msg}")
    try:
        return matrix_from_json_dict(doc)
    except LinalgError as err:
        raise _usage(f"{path}: {err}")


def _json_line(doc: dict) -> str:
    return json.dumps(doc, separators=(", ", ": "))


def _format_sld(s) -> str:
    if s.is_zero:
        return "0 (flagged zero)"
    value = s.value
    mag = f"exp({s.log_magnitude:.6f})"
    if abs(value) < 1e16:
        return f"{value.real:.6g}{value.imag:+.3g}i ({mag})" if abs(value.imag) > 1e-9 * abs(
            value) else f"{value.real:.6g} ({mag})"
    return f"phase ({s.phase.real:.6f}{s.phase.imag:+.6f}i) * {mag}"


def _emit_check_report(config: SuiteConfig, report: CheckReport) -> None:
    if config.output_format == "structured":
        config.emit(_json_line(report.to_json_dict()))
        return
    config.emit(f"inequality: {report.inequality_id}")
    config.emit(f"verdict:    {report.verdict.value}")
    config.emit(f"margin:     {report.margin:.6e}")
    config.emit(f"lhs:        {_format_sld(report.lhs)}")
    config.emit(f"rhs:        {_format_sld(report.rhs)}")
    for finding in report.diagnostics:
        config.emit(f"  {finding.name}: {finding.value}")


_CHECK_EXIT = {
    Verdict.HOLDS_STRICT: EXIT_OK,
    Verdict.EQUALITY: EXIT_OK,
    Verdict.VIOLATED: EXIT_VIOLATED,
    Verdict.PRECONDITION_FAILED: EXIT_PRECONDITION,
}


def cmd_check(args) -> int:
    config = _build_config(args)
    ineq = args.ineq
    if ineq not in _FILE_ARITY:
        raise _usage(f"unknown inequality {ineq!r}, expected one of {', '.join(_FILE_ARITY)}")
    lo, hi = _FILE_ARITY[ineq]
    if len(args.files) < lo or (hi is not None and len(args.files) > hi):
        expected = f"exactly {lo}" if lo == hi else (f"at least {lo}" if hi is None
                                                     else f"between {lo} and {hi}")
        raise _usage(f"{ineq} needs {expected} matrix file(s), got {len(args.files)}")
    matrices = tuple(_load_matrix_file(f) for f in args.files)
    params: dict = {}
    if ineq in _NEEDS_R:
        if args.r is None:
            raise _usage(f"{ineq} needs --r (top-left block dimension)")
        params["r"] = args.r
    if ineq in _NEEDS_P:
        params["p"] = args.p if args.p is not None else 2.0
        if params["p"] < 1.0:
            raise _usage(f"--p must be >= 1, got {params['p']}")
    if ineq == "cor_c1":
        params["allow_hypothesis_violation"] = bool(args.allow_hypothesis_violation)
    witness = Witness(ineq, 0, 0, params, matrices)
    try:
        report = _CATALOG[ineq].run(witness, config.tol)
    except LinalgError as err:
        print(f"precondition failed: {err}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as err:
        raise _usage(str(err))
    _emit_check_report(config, report)
    config.flush()
    return _CHECK_EXIT[report.verdict]


def cmd_reproduce(args) -> int:
    config = _build_config(args)
    ids = PAPER_EXAMPLE_IDS if args.example == "all" else (args.example,)
    for example_id in ids:
        if example_id not in PAPER_EXAMPLE_IDS:
            raise _usage(f"unknown example {example_id!r}, "
                         f"expected one of {', '.join(PAPER_EXAMPLE_IDS)} or all")
    all_pass = True
    rows = []
    for example_id in ids:
        rows.extend(compare_paper_example(example_id, config.tol))
    for row in rows:
        all_pass = all_pass and row["pass"]
        if config.output_format == "structured":
            config.emit(_json_line(row))
        else:
            computed = row["computed"]
            shown = computed if isinstance(computed, str) else f"{computed:.6g}"
            config.emit(
                f"{row['example']:>15}  {row['quantity']:<12} computed {shown:>12}  "
                f"recorded {row['recorded']!s:>8}  ({row['tolerance']})  "
                f"{'pass' if row['pass'] else 'FAIL'}"
            )
    if config.output_format != "structured":
        config.emit(f"overall: {'pass' if all_pass else 'FAIL'}")
    config.flush()
    return EXIT_OK if all_pass else EXIT_UNEXPECTED


def _emit_search_report(config: SuiteConfig, report: SearchReport) -> None:
    if config.output_format == "structured":
        config.emit(_json_line(report.to_json_dict()))
        return
    config.emit(f"predicate:  {report.predicate_id}")
    config.emit(f"spec:       {report.spec.to_json_dict()}")
    config.emit(f"trials:     {report.trials}")
    config.emit(f"violations: {report.violation_count}")
    if report.min_margin is not None:
        config.emit(f"min margin: {report.min_margin:.6e} (trial {report.min_margin_trial})")
    if report.min_positive_margin is not None:
        config.emit(
            f"min positive margin: {report.min_positive_margin:.6e} "
            f"(trial {report.min_positive_margin_trial})"
        )
    for v in report.violations[:10]:
        config.emit(f"  violated at trial {v.trial_index}: margin {v.report.margin:.6e}")
    if report.violation_count > 10:
        config.emit(f"  ... and {report.violation_count - 10} more")


def cmd_fuzz(args) -> int:
    config = _build_config(args)
    predicate = args.predicate
    if predicate not in PREDICATE_IDS:
        raise _usage(f"unknown predicate {predicate!r}, "
                     f"expected one of {', '.join(PREDICATE_IDS)}")
    if args.trials < 1:
        raise _usage(f"--trials must be >= 1, got {args.trials}")
    if args.family not in FAMILIES:
        raise _usage(f"unknown family {args.family!r}, expected one of {', '.join(FAMILIES)}")
    try:
        spec = GeneratorSpec(
            family=args.family,
            n=args.n,
            r=args.r if args.r is not None else max(1, args.n // 2),
            m=args.m,
            entry_bound=_parse_entry_bound(args.entry_bound),
            seed=args.seed,
        )
    except ValueError as err:
        raise _usage(str(err))
    params: dict = {}
    if args.p is not None:
        if args.p < 1.0:
            raise _usage(f"--p must be >= 1, got {args.p}")
        params["p"] = args.p
    if args.allow_hypothesis_violation:
        params["allow_hypothesis_violation"] = True
    runner = sharpness_probe if args.sharpness else search_violations
    kwargs = {} if args.sharpness else {"stop_on_first": args.stop_on_first}
    try:
        report = runner(spec, predicate, args.trials, config.tol, params=params, **kwargs)
    except (LinalgError, ValueError) as err:
        raise _usage(str(err))
    _emit_search_report(config, report)
    config.flush()
    if args.sharpness:
        return EXIT_OK
    refutable = _CATALOG[predicate].refutable and (
        predicate != "cor_c1" or params.get("allow_hypothesis_violation", False)
    )
    expected = report.violation_count >= 1 if refutable else report.violation_count == 0
    return EXIT_OK if expected else EXIT_UNEXPECTED


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--tol-eq", type=float, default=None,
                        help="override the relative log-domain equality window (default 1e-8)")
    parser.add_argument("--out", default=None, help="write output to this path instead of stdout")
    parser.add_argument("--format", choices=("human", "structured"), default="human",
                        help="human-readable text or newline-delimited JSON")


def build_parser() -> _Parser:
    parser = _Parser(prog="blockdet",
                     description="determinantal inequality checks for block triangular matrices")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_check = sub.add_parser("check",
                             help="evaluate one inequality on matrices from JSON files")
    p_check.add_argument("files", nargs="+", metavar="FILE",
                         help="matrix documents: {rows, cols, entries: [[re, im], ...]}")
    p_check.add_argument("--ineq", required=True, help="inequality id")
    p_check.add_argument("--r", type=int, default=None, help="top-left block dimension")
    p_check.add_argument("--p", type=float, default=None,
                         help="exponent for thm3/log_major (default 2)")
    p_check.add_argument("--allow-hypothesis-violation", action="store_true",
                         help="let cor_c1 report a margin verdict even without normal blocks")
    _add_common(p_check)
    p_check.set_defaults(func=cmd_check)

    p_rep = sub.add_parser("reproduce",
                           help="recompute the published counterexample values")
    p_rep.add_argument("example", help="example1 | remark_minus12 | example3 | all")
    _add_common(p_rep)
    p_rep.set_defaults(func=cmd_reproduce)

    p_fuzz = sub.add_parser("fuzz",
                            help="seeded random search against one predicate")
    p_fuzz.add_argument("--predicate", required=True, help="predicate id")
    p_fuzz.add_argument("--trials", type=int, default=1000)
    p_fuzz.add_argument("--seed", type=int, default=0)
    p_fuzz.add_argument("--n", type=int, default=4, help="matrix dimension")
    p_fuzz.add_argument("--r", type=int, default=None,
                        help="top-left block dimension (default n // 2)")
    p_fuzz.add_argument("--m", type=int, default=2, help="family size")
    p_fuzz.add_argument("--family", default="integer_uniform",
                        help="generator family (" + ", ".join(FAMILIES) + ")")
    p_fuzz.add_argument("--entry-bound", default=None,
                        help="integer bound B, range LO:HI, or scale for continuous families")
    p_fuzz.add_argument("--p", type=float, default=None, help="exponent for thm3/log_major")
    p_fuzz.add_argument("--allow-hypothesis-violation", action="store_true")
    p_fuzz.add_argument("--sharpness", action="store_true",
                        help="probe minimum positive margins instead of hunting violations")
    p_fuzz.add_argument("--stop-on-first", action="store_true",
                        help="stop at the first violation")
    _add_common(p_fuzz)
    p_fuzz.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as err:
        print(f"blockdet: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
