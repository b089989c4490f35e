"""Report assembly: one versioned, machine-readable result schema.

Every command (CLI subcommand or service endpoint) produces an
``AnalysisReport``: schedule facts, per-query results, and optional class
and certificate sections. Reports are deterministic for a fixed input, with
set-like collections sorted and queries in class order, so equal inputs
yield byte-identical JSON.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from . import certificates as certs
from . import feasibility as feas
from .model import Query, ValidatedScenario
from .schedule import Schedule, effective_horizon, is_monotone, limit_domain

SCHEMA_VERSION = 1

ParamValue = int | float | str | bool | None


class _ReportModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class MonotonicityViolation(_ReportModel):
    depth: int
    item: str


class ScheduleFacts(_ReportModel):
    monotone: bool
    violation: MonotonicityViolation | None
    horizon: int
    limit_domain: list[str]


class DepthFeasibility(_ReportModel):
    depth: int
    feasible: bool
    witness: list[str] | None


class BlockedTupleReport(_ReportModel):
    assignment: list[str]
    missing: list[str]


class DiagnosisReport(_ReportModel):
    depth: int
    slot_coverage: list[int]
    all_slots_covered: bool
    feasible: bool
    coverage_gap: bool
    blocking: list[BlockedTupleReport]


class QueryReport(_ReportModel):
    query_id: str
    limit_feasible: bool
    limit_witness: list[str] | None
    min_feasible_depth: int | None
    nr_holds: bool
    violation_note: str | None
    feasibility: DepthFeasibility | None = None
    diagnosis: DiagnosisReport | None = None


class SoundnessEntry(_ReportModel):
    query_id: str
    sound: bool
    counterexample_depth: int | None


class CompletenessEntry(_ReportModel):
    query_id: str
    complete: bool
    missing: list[str]


class CertificateSection(_ReportModel):
    source: Literal["provided", "extracted"]
    extraction: str | None
    assignment: dict[str, list[str]]
    sound: bool
    limit_complete: bool
    soundness: list[SoundnessEntry]
    completeness: list[CompletenessEntry]


class ClassSection(_ReportModel):
    method: Literal["certificate", "scan"]
    uniform_depth: int | None
    certificate_depth: int | None
    basis: list[str]
    basis_size: int
    finitely_generated_within: list[str] | None
    violating_query: str | None
    limit_infeasible_query: str | None


class AnalysisReport(_ReportModel):
    schema_version: int = SCHEMA_VERSION
    command: str
    parameters: dict[str, ParamValue] = Field(default_factory=dict)
    schedule: ScheduleFacts
    queries: list[QueryReport]
    query_class: ClassSection | None = None
    certificates: CertificateSection | None = None


def schedule_facts(schedule: Schedule) -> ScheduleFacts:
    report = is_monotone(schedule)
    violation = None
    if report.violation is not None:
        depth, item = report.violation
        violation = MonotonicityViolation(depth=depth, item=item)
    return ScheduleFacts(
        monotone=report.monotone,
        violation=violation,
        horizon=effective_horizon(schedule),
        limit_domain=sorted(limit_domain(schedule)),
    )


def _diagnosis_report(diagnosis: feas.Diagnosis) -> DiagnosisReport:
    return DiagnosisReport(
        depth=diagnosis.depth,
        slot_coverage=list(diagnosis.slot_coverage),
        all_slots_covered=diagnosis.all_slots_covered,
        feasible=diagnosis.feasible,
        coverage_gap=diagnosis.coverage_gap,
        blocking=[
            BlockedTupleReport(assignment=list(b.assignment), missing=list(b.missing))
            for b in diagnosis.blocking
        ],
    )


def first_coverage_gap(query: Query, schedule: Schedule) -> feas.Diagnosis | None:
    """First depth up to the horizon where every slot is covered but the
    query is infeasible."""
    for depth in range(1, effective_horizon(schedule) + 1):
        diagnosis = feas.diagnose(query, schedule, depth)
        if diagnosis.coverage_gap:
            return diagnosis
    return None


def query_report(
    scenario: ValidatedScenario,
    query: Query,
    at_depth: int | None = None,
    diagnose_depth: int | None = None,
    scan_for_gap: bool = False,
) -> QueryReport:
    schedule = scenario.schedule
    limit = feas.is_feasible_limit(query, schedule)
    nr = feas.check_nr(query, schedule)
    feasibility = None
    if at_depth is not None:
        outcome = feas.is_feasible_at(query, schedule, at_depth)
        feasibility = DepthFeasibility(
            depth=at_depth,
            feasible=outcome.feasible,
            witness=list(outcome.witness.assignment) if outcome.witness else None,
        )
    diagnosis = None
    if diagnose_depth is not None:
        diagnosis = _diagnosis_report(feas.diagnose(query, schedule, diagnose_depth))
    elif scan_for_gap:
        gap = first_coverage_gap(query, schedule)
        if gap is not None:
            diagnosis = _diagnosis_report(gap)
    return QueryReport(
        query_id=query.id,
        limit_feasible=limit.feasible,
        limit_witness=list(limit.witness.assignment) if limit.witness else None,
        min_feasible_depth=nr.first_feasible_depth,
        nr_holds=nr.nr_holds,
        violation_note=nr.violation_note,
        feasibility=feasibility,
        diagnosis=diagnosis,
    )


def class_section(
    scenario: ValidatedScenario, generators: frozenset[str] | None = None
) -> ClassSection:
    assignment = None
    if scenario.certificates is not None:
        assignment = certs.CertificateAssignment(entries=scenario.certificates)
    try:
        report = certs.uniform_depth(
            scenario.query_class, scenario.schedule, assignment, generators
        )
    except certs.NotAllLimitFeasible as exc:
        return ClassSection(
            method="scan",
            uniform_depth=None,
            certificate_depth=None,
            basis=[],
            basis_size=0,
            finitely_generated_within=None,
            violating_query=None,
            limit_infeasible_query=exc.query_id,
        )
    return ClassSection(
        method=report.method,  # type: ignore[arg-type]
        uniform_depth=report.uniform_depth,
        certificate_depth=report.certificate_depth,
        basis=sorted(report.basis),
        basis_size=len(report.basis),
        finitely_generated_within=(
            sorted(report.finitely_generated_within)
            if report.finitely_generated_within is not None
            else None
        ),
        violating_query=report.violating_query,
        limit_infeasible_query=None,
    )


def certificate_section(scenario: ValidatedScenario) -> CertificateSection:
    """Validate the scenario's certificates, or extract fresh ones when the
    scenario carries none."""
    if scenario.certificates is not None:
        source: Literal["provided", "extracted"] = "provided"
        extraction = None
        assignment = certs.CertificateAssignment(entries=scenario.certificates)
    else:
        source = "extracted"
        extraction = "canonical_limit_witness"
        assignment = certs.extract_assignment(scenario.query_class, scenario.schedule)
    soundness = certs.check_soundness(assignment, scenario.query_class, scenario.schedule)
    completeness = certs.check_limit_completeness(
        assignment, scenario.query_class, scenario.schedule
    )
    return CertificateSection(
        source=source,
        extraction=extraction,
        assignment={
            query.id: sorted(assignment.items_for(query.id))
            for query in scenario.query_class
        },
        sound=all(entry.sound for entry in soundness),
        limit_complete=all(entry.complete for entry in completeness),
        soundness=[
            SoundnessEntry(
                query_id=entry.query_id,
                sound=entry.sound,
                counterexample_depth=entry.counterexample_depth,
            )
            for entry in soundness
        ],
        completeness=[
            CompletenessEntry(
                query_id=entry.query_id,
                complete=entry.complete,
                missing=list(entry.missing),
            )
            for entry in completeness
        ],
    )


def _base_report(
    scenario: ValidatedScenario,
    command: str,
    parameters: dict[str, ParamValue] | None = None,
    only: Query | None = None,
    **query_kwargs,
) -> AnalysisReport:
    targets = [only] if only is not None else list(scenario.query_class)
    return AnalysisReport(
        command=command,
        parameters=parameters or {},
        schedule=schedule_facts(scenario.schedule),
        queries=[query_report(scenario, query, **query_kwargs) for query in targets],
    )


def report_validate(scenario: ValidatedScenario) -> AnalysisReport:
    return _base_report(scenario, "validate")


def report_feas(scenario: ValidatedScenario, query: Query, depth: int) -> AnalysisReport:
    return _base_report(
        scenario, "feas", {"query": query.id, "depth": depth}, only=query, at_depth=depth
    )


def report_min_depth(scenario: ValidatedScenario, query: Query) -> AnalysisReport:
    return _base_report(scenario, "min-depth", {"query": query.id}, only=query)


def report_nr(scenario: ValidatedScenario, query: Query | None = None) -> AnalysisReport:
    parameters: dict[str, ParamValue] = {} if query is None else {"query": query.id}
    return _base_report(scenario, "nr", parameters, only=query, scan_for_gap=True)


def report_uniform(
    scenario: ValidatedScenario, generators: frozenset[str] | None = None
) -> AnalysisReport:
    report = _base_report(scenario, "uniform")
    report.query_class = class_section(scenario, generators)
    return report


def report_certify(scenario: ValidatedScenario) -> AnalysisReport:
    report = _base_report(scenario, "certify")
    report.certificates = certificate_section(scenario)
    return report


def report_diagnose(
    scenario: ValidatedScenario, query: Query, depth: int
) -> AnalysisReport:
    return _base_report(
        scenario,
        "diagnose",
        {"query": query.id, "depth": depth},
        only=query,
        at_depth=depth,
        diagnose_depth=depth,
    )


def report_analyze(
    scenario: ValidatedScenario,
    command: str = "analyze",
    parameters: dict[str, ParamValue] | None = None,
) -> AnalysisReport:
    """Full analysis: schedule facts, every query with gap scan, class
    section, and certificate checks when the scenario carries any."""
    report = _base_report(scenario, command, parameters, scan_for_gap=True)
    report.query_class = class_section(scenario)
    if scenario.certificates is not None:
        report.certificates = certificate_section(scenario)
    return report


def has_violation(report: AnalysisReport) -> bool:
    """Whether the report exhibits a preservation failure: a query feasible
    only in the limit, a missing uniform depth, or a coverage gap."""
    if any(not entry.nr_holds for entry in report.queries):
        return True
    if any(
        entry.diagnosis is not None and entry.diagnosis.coverage_gap
        for entry in report.queries
    ):
        return True
    if report.query_class is not None and report.query_class.uniform_depth is None:
        return True
    return False


def render_text(report: AnalysisReport) -> str:
    """Human-readable rendering; coverage gaps are called out loudly."""
    lines: list[str] = []
    echo = report.command
    if report.parameters:
        echo += " " + " ".join(f"{key}={value}" for key, value in report.parameters.items())
    lines.append(f"command: {echo}")
    facts = report.schedule
    if facts.monotone:
        mono = "monotone"
    else:
        assert facts.violation is not None
        mono = (
            f"not monotone (depth {facts.violation.depth} drops "
            f"{facts.violation.item!r})"
        )
    domain = ", ".join(facts.limit_domain)
    lines.append(f"schedule: {mono}; horizon {facts.horizon}; limit domain {{{domain}}}")
    for entry in report.queries:
        lines.append(f"query {entry.query_id}:")
        if entry.limit_feasible:
            witness = ", ".join(entry.limit_witness or [])
            lines.append(f"  limit feasible: yes (witness: {witness})")
        else:
            lines.append("  limit feasible: no")
        depth = entry.min_feasible_depth
        lines.append(f"  min feasible depth: {depth if depth is not None else 'none'}")
        if entry.nr_holds:
            lines.append("  finite witnessability: holds")
        else:
            lines.append(f"  finite witnessability: VIOLATED ({entry.violation_note})")
        if entry.feasibility is not None:
            verdict = "feasible" if entry.feasibility.feasible else "infeasible"
            extra = ""
            if entry.feasibility.witness:
                extra = f" (witness: {', '.join(entry.feasibility.witness)})"
            lines.append(f"  at depth {entry.feasibility.depth}: {verdict}{extra}")
        if entry.diagnosis is not None:
            diag = entry.diagnosis
            coverage = ", ".join(str(count) for count in diag.slot_coverage)
            lines.append(
                f"  diagnosis at depth {diag.depth}: slot coverage [{coverage}]; "
                f"{'feasible' if diag.feasible else 'infeasible'}"
            )
            if diag.coverage_gap:
                lines.append(
                    "  !! COVERAGE GAP: every slot has admissible evidence "
                    "available, but no jointly compatible tuple is"
                )
            for blocked in diag.blocking:
                lines.append(
                    f"    blocked ({', '.join(blocked.assignment)}): "
                    f"missing {{{', '.join(blocked.missing)}}}"
                )
    if report.query_class is not None:
        section = report.query_class
        lines.append("query class:")
        if section.limit_infeasible_query is not None:
            lines.append(
                "  uniform depth: undefined "
                f"(query {section.limit_infeasible_query} is infeasible in the limit)"
            )
        else:
            depth = section.uniform_depth
            lines.append(
                f"  uniform depth (scan): {depth if depth is not None else 'none'}"
            )
            if section.certificate_depth is not None:
                lines.append(f"  certificate bound: {section.certificate_depth}")
            lines.append(f"  basis: {{{', '.join(section.basis)}}} ({section.basis_size} items)")
            if section.violating_query is not None:
                lines.append(
                    f"  violating query: {section.violating_query} "
                    "(feasible at no depth)"
                )
    if report.certificates is not None:
        section = report.certificates
        lines.append(f"certificates ({section.source}):")
        for query_id, items in section.assignment.items():
            lines.append(f"  {query_id}: {{{', '.join(items)}}}")
        lines.append(f"  sound: {'yes' if section.sound else 'NO'}")
        lines.append(f"  limit complete: {'yes' if section.limit_complete else 'NO'}")
        for entry in section.soundness:
            if not entry.sound:
                lines.append(
                    f"  unsound for {entry.query_id}: available but infeasible "
                    f"at depth {entry.counterexample_depth}"
                )
        for entry in section.completeness:
            if not entry.complete:
                lines.append(
                    f"  incomplete for {entry.query_id}: "
                    f"missing {{{', '.join(entry.missing)}}} from the limit domain"
                )
    return "\n".join(lines) + "\n"
