"""Wire-format models for scenario files.

The on-disk format is strict JSON: unknown keys are rejected and field types
are enforced without coercion, so a fixture file and the engine cannot drift
apart silently. These models only pin down the shape of a document; the
semantic invariants (id uniqueness, universe membership, relation arity) are
enforced by :func:`truncheck.model.validate_scenario`.
"""

from __future__ import annotations

from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field


class _StrictDoc(BaseModel):
    model_config = ConfigDict(extra="forbid", strict=True, frozen=True)


class CumulativeScheduleDoc(_StrictDoc):
    kind: Literal["cumulative"]
    order: list[str]


class ExplicitScheduleDoc(_StrictDoc):
    kind: Literal["explicit"]
    steps: list[list[str]]
    tail: Literal["repeat_last", "cycle"]


ScheduleDoc = Annotated[
    Union[CumulativeScheduleDoc, ExplicitScheduleDoc],
    Field(discriminator="kind"),
]


class SlotDoc(_StrictDoc):
    name: str
    admissible: list[str]


class QueryDoc(_StrictDoc):
    id: str
    slots: list[SlotDoc]
    relation: list[list[str]]


class ScenarioDocument(_StrictDoc):
    """Top-level scenario file: a universe, one schedule, the query class,
    and optionally a witness-certificate assignment keyed by query id."""

    universe: list[str]
    schedule: ScheduleDoc
    queries: list[QueryDoc]
    certificates: dict[str, list[str]] | None = None
