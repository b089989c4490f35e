"""Command-line interface.

Every analysis subcommand reads a scenario file, runs entirely locally, and
prints a human-readable report (or the JSON report schema with ``--json``).

Exit codes: 0 when the analysis ran and the checked property holds, 1 when
the analysis ran and found a violation (a query feasible only in the limit,
no uniform depth, an unsound certificate, infeasibility at the requested
depth), 2 on input or usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .analysis import (
    AnalysisReport,
    has_violation,
    render_text,
    report_analyze,
    report_certify,
    report_diagnose,
    report_feas,
    report_min_depth,
    report_nr,
    report_uniform,
    report_validate,
)
from .certificates import InfeasibleInLimit
from .fixtures import ParamsOutOfRange, fixture_prop1, fixture_prop2, fixture_prop3
from .model import Query, ScenarioValidationError, ValidatedScenario
from .scenario_io import (
    ScenarioParseError,
    ScenarioSchemaError,
    read_scenario,
    serialize_scenario,
    write_scenario,
)
from .schedule import monotone_closure


class UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError("value must be >= 1")
    return value


def _emit(report: AnalysisReport, as_json: bool) -> None:
    if as_json:
        print(report.model_dump_json(indent=2))
    else:
        print(render_text(report), end="")


def _load(path: str) -> ValidatedScenario:
    return read_scenario(Path(path))


def _find_query(scenario: ValidatedScenario, query_id: str) -> Query:
    query = scenario.query_class.get(query_id)
    if query is None:
        raise UsageError(f"unknown query id {query_id!r}")
    return query


def _cmd_validate(args: argparse.Namespace) -> int:
    scenario = _load(args.file)
    _emit(report_validate(scenario), args.json)
    return 0


def _cmd_feas(args: argparse.Namespace) -> int:
    scenario = _load(args.file)
    query = _find_query(scenario, args.query)
    report = report_feas(scenario, query, args.depth)
    _emit(report, args.json)
    assert report.queries[0].feasibility is not None
    return 0 if report.queries[0].feasibility.feasible else 1


def _cmd_min_depth(args: argparse.Namespace) -> int:
    scenario = _load(args.file)
    query = _find_query(scenario, args.query)
    report = report_min_depth(scenario, query)
    _emit(report, args.json)
    return 0 if report.queries[0].min_feasible_depth is not None else 1


def _cmd_nr(args: argparse.Namespace) -> int:
    scenario = _load(args.file)
    query = _find_query(scenario, args.query) if args.query else None
    report = report_nr(scenario, query)
    _emit(report, args.json)
    return 0 if all(entry.nr_holds for entry in report.queries) else 1


def _cmd_uniform(args: argparse.Namespace) -> int:
    scenario = _load(args.file)
    report = report_uniform(scenario)
    _emit(report, args.json)
    assert report.query_class is not None
    return 0 if report.query_class.uniform_depth is not None else 1


def _cmd_certify(args: argparse.Namespace) -> int:
    scenario = _load(args.file)
    try:
        report = report_certify(scenario)
    except InfeasibleInLimit as exc:
        print(
            f"cannot certify: query {exc.query_id!r} is infeasible in the limit",
            file=sys.stderr,
        )
        return 1
    _emit(report, args.json)
    assert report.certificates is not None
    ok = report.certificates.sound and report.certificates.limit_complete
    return 0 if ok else 1


def _cmd_diagnose(args: argparse.Namespace) -> int:
    scenario = _load(args.file)
    query = _find_query(scenario, args.query)
    report = report_diagnose(scenario, query, args.depth)
    _emit(report, args.json)
    assert report.queries[0].diagnosis is not None
    return 0 if report.queries[0].diagnosis.feasible else 1


def _cmd_closure(args: argparse.Namespace) -> int:
    scenario = _load(args.file)
    closed = ValidatedScenario(
        universe=scenario.universe,
        schedule=monotone_closure(scenario.schedule),
        query_class=scenario.query_class,
        certificates=scenario.certificates,
    )
    if args.emit:
        write_scenario(closed, Path(args.emit))
        print(f"wrote {args.emit}")
    else:
        print(serialize_scenario(closed), end="")
    return 0


def _parse_demo_token(token: str) -> tuple[str, int | None]:
    name, _, suffix = token.partition(":")
    size = None
    if suffix:
        try:
            size = int(suffix)
        except ValueError:
            raise UsageError(f"bad demo size {suffix!r}") from None
    if name not in ("prop1", "prop2", "prop3"):
        raise UsageError(f"unknown demo {name!r} (expected prop1, prop2:N, or prop3)")
    if size is not None and name != "prop2":
        raise UsageError(f"demo {name!r} takes no size parameter")
    return name, size


def _cmd_demo(args: argparse.Namespace) -> int:
    name, size = _parse_demo_token(args.name)
    parameters: dict = {"fixture": name}
    if name == "prop1":
        scenario = fixture_prop1()
    elif name == "prop2":
        size = size if size is not None else 10
        parameters["n"] = size
        scenario = fixture_prop2(size)
    else:
        scenario = fixture_prop3()
    if args.emit:
        write_scenario(scenario, Path(args.emit))
        print(f"wrote {args.emit}", file=sys.stderr)
    report = report_analyze(scenario, command="demo", parameters=parameters)
    _emit(report, args.json)
    return 1 if has_violation(report) else 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def _add_scenario_command(subparsers, name: str, help_text: str, handler) -> argparse.ArgumentParser:
    command = subparsers.add_parser(name, help=help_text)
    command.add_argument("file", help="scenario JSON file")
    command.add_argument("--json", action="store_true", help="emit the JSON report schema")
    command.set_defaults(handler=handler)
    return command


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="truncheck",
        description="Analyze whether truncated retrieval schedules preserve query feasibility.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    _add_scenario_command(subparsers, "validate", "check a scenario file", _cmd_validate)

    feas = _add_scenario_command(
        subparsers, "feas", "decide feasibility of one query at one depth", _cmd_feas
    )
    feas.add_argument("--query", required=True, help="query id")
    feas.add_argument("--depth", required=True, type=_positive_int, help="retrieval depth")

    min_depth = _add_scenario_command(
        subparsers, "min-depth", "smallest feasible depth of one query", _cmd_min_depth
    )
    min_depth.add_argument("--query", required=True, help="query id")

    nr = _add_scenario_command(
        subparsers, "nr", "check finite witnessability (all queries or one)", _cmd_nr
    )
    nr.add_argument("--query", help="restrict to one query id")

    _add_scenario_command(
        subparsers, "uniform", "find a uniform depth validating the whole class", _cmd_uniform
    )

    _add_scenario_command(
        subparsers, "certify", "extract or validate witness certificates", _cmd_certify
    )

    diagnose = _add_scenario_command(
        subparsers, "diagnose", "slot coverage versus joint feasibility at a depth", _cmd_diagnose
    )
    diagnose.add_argument("--query", required=True, help="query id")
    diagnose.add_argument("--depth", required=True, type=_positive_int, help="retrieval depth")

    closure = _add_scenario_command(
        subparsers, "closure", "emit the monotone closure of the schedule", _cmd_closure
    )
    closure.add_argument("--emit", help="write the closed scenario to this file")

    demo = subparsers.add_parser(
        "demo", help="run a built-in counterexample scenario (prop1, prop2:N, prop3)"
    )
    demo.add_argument("name", help="prop1, prop2:N, or prop3")
    demo.add_argument("--emit", help="write the demo scenario to this file")
    demo.add_argument("--json", action="store_true", help="emit the JSON report schema")
    demo.set_defaults(handler=_cmd_demo)

    serve = subparsers.add_parser("serve", help="run the HTTP analysis service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(handler=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (
        ScenarioParseError,
        ScenarioSchemaError,
        ScenarioValidationError,
        ParamsOutOfRange,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
