"""Request and response models for the analysis service."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from ..analysis import AnalysisReport
from ..documents import ScenarioDocument


class _Request(BaseModel):
    model_config = ConfigDict(extra="forbid")


class ScenarioRequest(_Request):
    scenario: ScenarioDocument


class FeasibilityRequest(_Request):
    scenario: ScenarioDocument
    query_id: str
    depth: int = Field(ge=1)


class MinDepthRequest(_Request):
    scenario: ScenarioDocument
    query_id: str


class NrRequest(_Request):
    scenario: ScenarioDocument
    query_id: str | None = None


class UniformRequest(_Request):
    scenario: ScenarioDocument
    generators: list[str] | None = None


class DiagnoseRequest(_Request):
    scenario: ScenarioDocument
    query_id: str
    depth: int = Field(ge=1)


class ClosureResponse(BaseModel):
    scenario: ScenarioDocument


class DemoResponse(BaseModel):
    scenario: ScenarioDocument
    report: AnalysisReport


class HealthResponse(BaseModel):
    status: str
