"""Command-line front end.

Commands: validate, matrix, solve, check, rank, export, gen.  Results go to
standard output; findings and error messages go to the error stream.  Exit
codes:

    0  success
    1  validation found errors (warnings alone still exit 0)
    2  the information system is not well defined (det(Id - A) = 0)
    3  unreadable input, DSL parse error, or JSON schema error
    4  usage error (bad flags, non-positive parameters, infeasible gen spec)

Input files may be in the DSL or the JSON schema; a document whose first
non-blank character is ``{`` is treated as JSON.  ``-`` reads standard input.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction
from typing import Sequence, TextIO

from . import model, solver, testkit, textio
from .rationals import parse_rational, render_decimal

OK = 0
VALIDATION_FAILED = 1
NOT_WELL_DEFINED = 2
INPUT_ERROR = 3
USAGE_ERROR = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _rational_arg(text: str) -> Fraction:
    try:
        value = parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text!r}")
    return value


def _precision_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if not 0 <= value <= 50:
        raise argparse.ArgumentTypeError("precision must be between 0 and 50")
    return value


def _build_parser() -> _Parser:
    parser = _Parser(prog="ihg", description="Implication hypergraph toolkit.")
    sub = parser.add_subparsers(dest="command", metavar="command", required=True)

    def add_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", help="path to a .ihg or .json file, or - for standard input")

    def add_params(p: argparse.ArgumentParser) -> None:
        p.add_argument("--nu", type=_rational_arg, default=None, metavar="Q",
                       help="leaf information value (decimal or fraction, e.g. 0.5 or 1/2)")
        p.add_argument("--eps", type=_rational_arg, default=None, metavar="Q",
                       help="per-implication increment (decimal or fraction)")

    def add_render(p: argparse.ArgumentParser) -> None:
        p.add_argument("--exact", action="store_true",
                       help="print values as exact fractions instead of decimals")
        p.add_argument("--precision", type=_precision_arg, default=2, metavar="N",
                       help="decimal places for rendered values (default 2, max 50)")

    p = sub.add_parser("validate", help="report strictness/minimality findings")
    add_input(p)

    p = sub.add_parser("matrix", help="print the adjacency matrix as exact fractions")
    add_input(p)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")

    p = sub.add_parser("solve", help="print information forms a*nu + b*eps per proposition")
    add_input(p)
    add_params(p)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    add_render(p)

    p = sub.add_parser("check", help="print solvability diagnostics")
    add_input(p)
    p.add_argument("--format", choices=("table", "json"), default="table")

    p = sub.add_parser("rank", help="sort propositions by information value")
    add_input(p)
    add_params(p)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    add_render(p)

    p = sub.add_parser("export", help="convert to DOT or JSON")
    add_input(p)
    p.add_argument("--format", choices=("dot", "json"), default="dot")

    p = sub.add_parser("gen", help="generate a pseudo-random instance in DSL form")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--max-edges", type=int, required=True, dest="max_edges")
    p.add_argument("--acyclic", action="store_true")
    p.add_argument("--seed", type=int, default=0)

    return parser


def _load_document(path: str, stdin: TextIO) -> textio.HypergraphDocument:
    if path == "-":
        text = stdin.read()
        source = "<stdin>"
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
        source = path
    if text.lstrip()[:1] == "{":
        return textio.parse_json(text)
    return textio.parse_dsl(text, source=source)


def _params_of(args: argparse.Namespace, *, default_to_one: bool) -> solver.Params | None:
    nu, eps = args.nu, args.eps
    if default_to_one:
        return solver.Params(nu if nu is not None else Fraction(1),
                             eps if eps is not None else Fraction(1))
    if (nu is None) != (eps is None):
        raise _UsageError("--nu and --eps must be given together")
    if nu is None:
        return None
    return solver.Params(nu, eps)


def _render(value: Fraction, args: argparse.Namespace) -> str:
    return str(value) if args.exact else render_decimal(value, args.precision)


def _print_json(data: object, out: TextIO) -> None:
    print(json.dumps(data, indent=2), file=out)


def _plural(count: int, word: str) -> str:
    return f"{count} {word}" + ("" if count == 1 else "s")


def _cmd_validate(args: argparse.Namespace, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    h = textio.to_hypergraph(_load_document(args.input, stdin))
    report = model.validate(h)
    for finding in report.findings:
        print(f"{finding.severity} {finding.rule}: {finding.message}", file=err)
    verdict = "ok" if report.ok else "invalid"
    print(f"{verdict}: {_plural(len(report.errors), 'error')}, "
          f"{_plural(len(report.warnings), 'warning')}", file=out)
    return OK if report.ok else VALIDATION_FAILED


def _cmd_matrix(args: argparse.Namespace, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    h = textio.to_hypergraph(_load_document(args.input, stdin))
    a = solver.adjacency_matrix(h)
    if args.format == "json":
        _print_json({"ids": list(a.ids), "rows": [[str(x) for x in row] for row in a.rows]}, out)
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["id", *a.ids])
        for pid, row in zip(a.ids, a.rows):
            writer.writerow([pid, *[str(x) for x in row]])
    else:
        for pid, row in zip(a.ids, a.rows):
            print(f"{pid}: {' '.join(str(x) for x in row)}", file=out)
    return OK


def _solution_rows(
    h: model.ImplicationHypergraph,
    forms: tuple[solver.InfoForm, ...],
    params: solver.Params | None,
    args: argparse.Namespace,
) -> list[dict[str, str | None]]:
    rows: list[dict[str, str | None]] = []
    for p, form in zip(h.propositions, forms):
        value = _render(form.evaluate(params), args) if params is not None else None
        rows.append({
            "id": p.id,
            "label": p.label,
            "nu_coeff": str(form.nu_coeff),
            "eps_coeff": str(form.eps_coeff),
            "value": value,
        })
    return rows


def _write_rows(rows: list[dict[str, str | None]], fmt: str, out: TextIO) -> None:
    if fmt == "json":
        _print_json(rows, out)
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["id", "label", "nu_coeff", "eps_coeff", "value"])
    for row in rows:
        writer.writerow([row["id"], row["label"] or "", row["nu_coeff"],
                         row["eps_coeff"], row["value"] or ""])


def _cmd_solve(args: argparse.Namespace, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    h = textio.to_hypergraph(_load_document(args.input, stdin))
    params = _params_of(args, default_to_one=False)
    forms = solver.solve_symbolic(h)
    if args.format == "table":
        for p, form in zip(h.propositions, forms):
            suffix = f" = {_render(form.evaluate(params), args)}" if params is not None else ""
            print(f"{p.id}: {form}{suffix}", file=out)
    else:
        _write_rows(_solution_rows(h, forms, params, args), args.format, out)
    return OK


def _cmd_check(args: argparse.Namespace, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    h = textio.to_hypergraph(_load_document(args.input, stdin))
    diag = solver.diagnostics(h)
    necessary = "pass" if diag.necessary_passes else "fail"
    sufficient = "pass" if diag.sufficient_condition else "fail"
    if args.format == "json":
        _print_json({
            "wellDefined": diag.well_defined,
            "detIminusA": str(diag.det_i_minus_a),
            "necessaryCondition": necessary,
            "necessaryValues": {pid: str(v) for pid, v in zip(h.ids, diag.necessary_values)},
            "sufficientCondition": sufficient,
            "configuredUniversally": diag.configured_universally,
        }, out)
    else:
        print(f"wellDefined: {str(diag.well_defined).lower()}", file=out)
        print(f"detIminusA: {diag.det_i_minus_a}", file=out)
        print(f"necessaryCondition: {necessary}", file=out)
        for pid, value in zip(h.ids, diag.necessary_values):
            print(f"  {pid}: {value}", file=out)
        print(f"sufficientCondition: {sufficient}", file=out)
        configured = diag.configured_universally
        print(f"configuredUniversally: {'unknown' if configured is None else str(configured).lower()}",
              file=out)
    return OK if diag.well_defined else NOT_WELL_DEFINED


def _cmd_rank(args: argparse.Namespace, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    h = textio.to_hypergraph(_load_document(args.input, stdin))
    params = _params_of(args, default_to_one=True)
    forms = solver.solve_symbolic(h)
    values = [form.evaluate(params) for form in forms]
    order = sorted(range(h.order), key=lambda i: (-values[i], i))
    if args.format == "table":
        for i in order:
            p = h.propositions[i]
            suffix = f"  {p.label}" if p.label is not None else ""
            print(f"{_render(values[i], args)}  {p.id}{suffix}", file=out)
    else:
        rows = _solution_rows(h, forms, params, args)
        _write_rows([rows[i] for i in order], args.format, out)
    return OK


def _cmd_export(args: argparse.Namespace, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    doc = _load_document(args.input, stdin)
    textio.to_hypergraph(doc)  # reject structurally broken documents before writing
    text = textio.emit_json(doc) if args.format == "json" else textio.emit_dot(doc)
    out.write(text)
    return OK


def _cmd_gen(args: argparse.Namespace, out: TextIO, err: TextIO, stdin: TextIO) -> int:
    spec = testkit.GenSpec(nodes=args.nodes, max_edges=args.max_edges,
                           acyclic=args.acyclic, seed=args.seed)
    h = testkit.generate(spec)
    out.write(textio.emit_dsl(textio.document_of(h)))
    return OK


_COMMANDS = {
    "validate": _cmd_validate,
    "matrix": _cmd_matrix,
    "solve": _cmd_solve,
    "check": _cmd_check,
    "rank": _cmd_rank,
    "export": _cmd_export,
    "gen": _cmd_gen,
}


def run(
    argv: Sequence[str] | None = None,
    *,
    stdin: TextIO | None = None,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    """Execute one command; returns the exit code instead of raising."""
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        with redirect_stdout(stdout), redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return USAGE_ERROR
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    try:
        return _COMMANDS[args.command](args, stdout, stderr, stdin)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return USAGE_ERROR
    except testkit.InfeasibleSpec as exc:
        print(f"usage error: {exc}", file=stderr)
        return USAGE_ERROR
    except solver.NotWellDefined as exc:
        print(f"error: {exc}", file=stderr)
        return NOT_WELL_DEFINED
    except (textio.DslError, textio.SchemaError, model.HypergraphError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=stderr)
        return INPUT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=stderr)
        return INPUT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
