"""FastAPI application wrapping the analysis core.

The service is stateless: every request carries a full scenario document,
and every analysis endpoint answers with the same versioned report schema
the CLI emits. Scenario documents that fail semantic validation come back
as 422 responses carrying the violated invariant's code.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Query

from .. import __version__
from ..analysis import (
    AnalysisReport,
    report_analyze,
    report_certify,
    report_diagnose,
    report_feas,
    report_min_depth,
    report_nr,
    report_uniform,
    report_validate,
)
from ..certificates import InfeasibleInLimit
from ..documents import ScenarioDocument
from ..fixtures import ParamsOutOfRange, fixture_prop1, fixture_prop2, fixture_prop3
from ..model import ScenarioValidationError, ValidatedScenario, validate_scenario
from ..scenario_io import document_from_scenario
from ..schedule import monotone_closure
from .schemas import (
    ClosureResponse,
    DemoResponse,
    DiagnoseRequest,
    FeasibilityRequest,
    HealthResponse,
    MinDepthRequest,
    NrRequest,
    ScenarioRequest,
    UniformRequest,
)

app = FastAPI(
    title="truncheck",
    description="Feasibility-preservation analysis for truncation-based retrieval schedules.",
    version=__version__,
)


def _scenario(document: ScenarioDocument) -> ValidatedScenario:
    try:
        return validate_scenario(document)
    except ScenarioValidationError as exc:
        raise HTTPException(
            status_code=422, detail={"code": exc.code, "message": str(exc)}
        ) from exc


def _query(scenario: ValidatedScenario, query_id: str):
    query = scenario.query_class.get(query_id)
    if query is None:
        raise HTTPException(
            status_code=422,
            detail={"code": "unknown_query_id", "message": f"unknown query id {query_id!r}"},
        )
    return query


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok")


@app.post("/validate", response_model=AnalysisReport)
def validate(request: ScenarioRequest) -> AnalysisReport:
    return report_validate(_scenario(request.scenario))


@app.post("/feasibility", response_model=AnalysisReport)
def feasibility(request: FeasibilityRequest) -> AnalysisReport:
    scenario = _scenario(request.scenario)
    return report_feas(scenario, _query(scenario, request.query_id), request.depth)


@app.post("/min-depth", response_model=AnalysisReport)
def min_depth(request: MinDepthRequest) -> AnalysisReport:
    scenario = _scenario(request.scenario)
    return report_min_depth(scenario, _query(scenario, request.query_id))


@app.post("/nr", response_model=AnalysisReport)
def nr_check(request: NrRequest) -> AnalysisReport:
    scenario = _scenario(request.scenario)
    query = _query(scenario, request.query_id) if request.query_id else None
    return report_nr(scenario, query)


@app.post("/uniform", response_model=AnalysisReport)
def uniform(request: UniformRequest) -> AnalysisReport:
    scenario = _scenario(request.scenario)
    generators = frozenset(request.generators) if request.generators is not None else None
    return report_uniform(scenario, generators)


@app.post("/certify", response_model=AnalysisReport)
def certify(request: ScenarioRequest) -> AnalysisReport:
    scenario = _scenario(request.scenario)
    try:
        return report_certify(scenario)
    except InfeasibleInLimit as exc:
        raise HTTPException(
            status_code=422,
            detail={"code": "infeasible_in_limit", "message": str(exc)},
        ) from exc


@app.post("/diagnose", response_model=AnalysisReport)
def diagnose(request: DiagnoseRequest) -> AnalysisReport:
    scenario = _scenario(request.scenario)
    return report_diagnose(scenario, _query(scenario, request.query_id), request.depth)


@app.post("/closure", response_model=ClosureResponse)
def closure(request: ScenarioRequest) -> ClosureResponse:
    scenario = _scenario(request.scenario)
    closed = ValidatedScenario(
        universe=scenario.universe,
        schedule=monotone_closure(scenario.schedule),
        query_class=scenario.query_class,
        certificates=scenario.certificates,
    )
    return ClosureResponse(scenario=document_from_scenario(closed))


@app.post("/analyze", response_model=AnalysisReport)
def analyze(request: ScenarioRequest) -> AnalysisReport:
    return report_analyze(_scenario(request.scenario))


@app.get("/demo/{name}", response_model=DemoResponse)
def demo(name: str, n: int = Query(default=10, ge=1, le=1000)) -> DemoResponse:
    if name == "prop1":
        scenario = fixture_prop1()
        parameters: dict = {"fixture": name}
    elif name == "prop2":
        try:
            scenario = fixture_prop2(n)
        except ParamsOutOfRange as exc:
            raise HTTPException(
                status_code=422, detail={"code": "params_out_of_range", "message": str(exc)}
            ) from exc
        parameters = {"fixture": name, "n": n}
    elif name == "prop3":
        scenario = fixture_prop3()
        parameters = {"fixture": name}
    else:
        raise HTTPException(status_code=404, detail={"code": "unknown_demo", "message": name})
    report = report_analyze(scenario, command="demo", parameters=parameters)
    return DemoResponse(scenario=document_from_scenario(scenario), report=report)
