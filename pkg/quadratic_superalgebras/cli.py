# Command-line interface for the quadratic Lie superalgebra engine

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional, Union

from . import catalog, io
from .cohomology import CohomologyReport, betti_table, cohomology
from .config import EngineConfig, load_config
from .core.algebra import LieSuperalgebra, validate_algebra
from .core.errors import EngineError, InputError, ResourceLimitError
from .core.reports import ValidationReport
from .core.scalars import format_rational, parse_rational
from .exterior import (
    Cochain,
    associated_three_form,
    differential_direct,
    differential_via_poisson,
    poisson_bracket,
)
from .extensions import (
    as_superderivation,
    double_extension,
    one_dim_datum,
    one_dim_double_extension,
)
from .quadratic import QuadraticLieSuperalgebra, validate_quadratic

log = logging.getLogger(__name__)

Target = Union[QuadraticLieSuperalgebra, LieSuperalgebra]


def parse_params(bindings: Optional[List[str]]) -> Dict[str, str]:
    # --param lambda=1/2 --param mu=-3
    params = {}
    for binding in bindings or []:
        name, sep, value = binding.partition("=")
        if not sep or not name.strip():
            raise InputError(f"parameter binding {binding!r} is not of the form name=p/q")
        params[name.strip()] = format_rational(parse_rational(value))
    return params


def load_target(target: str, params: Dict[str, str]) -> Target:
    # A path to a JSON algebra document or a catalog key
    if target.endswith(".json") or Path(target).exists():
        if params:
            raise InputError("--param only applies to catalog keys")
        return io.load(target)
    return catalog.build(target, params)


def emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text + "\n")
        log.info("wrote %s", output)
    else:
        print(text)


def cmd_list(args, config: EngineConfig) -> int:
    entries = catalog.list_entries()
    if args.format == "json":
        listing = [
            {
                "key": e.key,
                "description": e.description,
                "source": e.source,
                "params": {k: format_rational(v) for k, v in e.defaults.items()},
                "constraints": [c.description for c in e.constraints],
                "quadratic": e.quadratic,
            }
            for e in entries
        ]
        emit(json.dumps({"schema": 1, "entries": listing}, indent=2), args.output)
    else:
        emit("\n".join(e.describe() for e in entries), args.output)
    return 0


def cmd_validate(args, config: EngineConfig) -> int:
    target = load_target(args.target, parse_params(args.param))
    if isinstance(target, QuadraticLieSuperalgebra):
        report = validate_quadratic(target, with_algebra=True)
        kind = "quadratic Lie superalgebra"
    else:
        report = validate_algebra(target)
        kind = "Lie superalgebra"
    emit(_render_validation(report, kind, args.format), args.output)
    return 0 if report.ok else 1


def _render_validation(report: ValidationReport, kind: str, fmt: str) -> str:
    if fmt == "json":
        violations = [
            {"axiom": v.axiom, "witness": list(v.witness), "detail": v.detail}
            for v in report.violations
        ]
        document = {"schema": 1, "subject": report.subject, "ok": report.ok}
        document["violations"] = violations
        return json.dumps(document, indent=2)
    if report.ok:
        return f"{kind}: OK"
    lines = [f"{kind}: {len(report)} violation(s) of {', '.join(report.axioms())}"]
    lines.extend(f"  {line}" for line in report.lines())
    return "\n".join(lines)


def _cross_check(target: Target, config: EngineConfig) -> bool:
    return config.cross_check_poisson and isinstance(target, QuadraticLieSuperalgebra)


def _report(args, target: Target, results) -> int:
    name = target.name or args.target
    report = CohomologyReport.build(
        name, results, parse_params(args.param), with_representatives=args.representatives
    )
    emit(report.to_json() if args.format == "json" else report.render_text(), args.output)
    return 0


def cmd_cohomology(args, config: EngineConfig) -> int:
    target = load_target(args.target, parse_params(args.param))
    result = cohomology(target, args.degree, config.max_cochain_dim, _cross_check(target, config))
    return _report(args, target, [result])


def cmd_betti(args, config: EngineConfig) -> int:
    target = load_target(args.target, parse_params(args.param))
    max_degree = config.default_max_degree if args.max_degree is None else args.max_degree
    results = betti_table(target, max_degree, config.max_cochain_dim, _cross_check(target, config))
    return _report(args, target, results)


def cmd_poisson(args, config: EngineConfig) -> int:
    # The three-form I, {I, I} and -{I, X*} against the direct differential of each X*
    target = load_target(args.target, parse_params(args.param))
    if not isinstance(target, QuadraticLieSuperalgebra):
        raise InputError(f"{args.target} has no invariant form")
    three_form = associated_three_form(target)
    square = poisson_bracket(target, None, three_form, three_form)
    rows = []
    consistent = square.is_zero()
    for label in target.basis.labels:
        generator = Cochain.generator(target.basis, label)
        via_poisson = differential_via_poisson(target, generator, three_form=three_form)
        direct = differential_direct(target.algebra, generator)
        consistent = consistent and via_poisson == direct
        rows.append((label, via_poisson, via_poisson == direct))
    if args.format == "json":
        document = {
            "schema": 1,
            "algebra": target.name,
            "three_form": three_form.format(),
            "I_I": square.format(),
            "differentials": [
                {"generator": f"{label}*", "value": value.format(), "matches_direct": same}
                for label, value, same in rows
            ],
        }
        text = json.dumps(document, indent=2)
    else:
        lines = [f"I = {three_form.format()}", f"{{I, I}} = {square.format()}"]
        for label, value, same in rows:
            mark = "" if same else "   MISMATCH with direct differential"
            lines.append(f"d {label}* = -{{I, {label}*}} = {value.format()}{mark}")
        text = "\n".join(lines)
    emit(text, args.output)
    return 0 if consistent else 1


def _read_matrix(source: str) -> List[List[str]]:
    # A JSON array of rows, or an inline literal "1,0;0,-1"
    path = Path(source)
    if path.exists():
        try:
            rows = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise InputError(f"malformed JSON in {source}: {exc.msg}") from None
    else:
        rows = [row.split(",") for row in source.split(";")]
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise InputError("a derivation matrix must be a list of rows")
    return [[str(x).strip() for x in row] for row in rows]


def cmd_double_extend(args, config: EngineConfig) -> int:
    base = load_target(args.target, parse_params(args.param))
    if not isinstance(base, QuadraticLieSuperalgebra):
        raise InputError(f"{args.target} has no invariant form to extend")
    rows = _read_matrix(args.derivation)
    if len(rows) != base.dim:
        raise InputError(f"derivation matrix has {len(rows)} rows, expected {base.dim}")
    matrix = [[parse_rational(x) for x in row] for row in rows]
    derivation = as_superderivation(matrix, args.parity)
    if args.parity == 0:
        extended = one_dim_double_extension(
            base, derivation, args.e_label, args.f_label, args.name or ""
        )
    else:
        datum = one_dim_datum(base, derivation, args.e_label, args.f_label)
        extended = double_extension(datum, args.name or f"{base.name}_ext")
    emit(io.dumps(extended), args.output)
    return 0


def cmd_export(args, config: EngineConfig) -> int:
    emit(io.dumps(load_target(args.target, parse_params(args.param))), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadratic-superalgebras",
        description="Exact computations on quadratic Lie superalgebras",
    )
    parser.add_argument("--config", help="Path to an engine YAML config")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    def verb(name, func, help_text, target=True):
        sub = subparsers.add_parser(name, help=help_text)
        if target:
            sub.add_argument("target", help="Catalog key or path to a JSON algebra document")
            sub.add_argument(
                "--param", action="append", metavar="NAME=P/Q", help="Catalog parameter binding"
            )
        sub.add_argument("--format", choices=["text", "json"], default=None, help="Output format")
        sub.add_argument("--output", help="Write the result to this file instead of stdout")
        sub.set_defaults(func=func)
        return sub

    verb("list", cmd_list, "List catalog entries", target=False)
    verb("validate", cmd_validate, "Check the superalgebra and form axioms")

    cohomology_parser = verb("cohomology", cmd_cohomology, "Cohomology in one degree")
    cohomology_parser.add_argument("--degree", type=int, required=True, help="Degree k")
    cohomology_parser.add_argument(
        "--representatives", action="store_true", help="List class representatives"
    )

    betti_parser = verb("betti", cmd_betti, "Betti table up to a degree")
    betti_parser.add_argument("--max-degree", type=int, default=None, help="Highest degree")
    betti_parser.add_argument(
        "--representatives", action="store_true", help="List class representatives"
    )

    verb("poisson", cmd_poisson, "Three-form, {I, I} and the differential as -{I, .}")

    extend_parser = verb("double-extend", cmd_double_extend, "One-dimensional double extension")
    extend_parser.add_argument(
        "--derivation", required=True, help="JSON matrix file or inline rows '1,0;0,-1'"
    )
    extend_parser.add_argument(
        "--parity",
        type=int,
        choices=[0, 1],
        default=0,
        help="Degree of the derivation; 1 extends by an odd line and needs D^2 = 0",
    )
    extend_parser.add_argument("--e-label", default="e", help="Label of the new basis vector")
    extend_parser.add_argument("--f-label", default="f", help="Label of its dual vector")
    extend_parser.add_argument("--name", help="Name of the extended algebra")

    verb("export", cmd_export, "Write the JSON algebra document")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    # Main entry point - parse commands and dispatch to handlers
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    if not args.command:
        parser.print_help()
        return 2

    try:
        config = load_config(args.config)
        if args.format is None:
            args.format = config.default_format
        return args.func(args, config)
    except (InputError, ResourceLimitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EngineError as exc:
        log.error("internal inconsistency: %s", exc)
        return 3


if __name__ == "__main__":
    sys.exit(main())
