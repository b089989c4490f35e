"""Parsing and canonical serialization of scenario files.

Parsing is strict (exact field names and types, unknown keys rejected) and
serialization is canonical: fixed key order, set-like collections in
lexicographic order, two-space indentation, newline-terminated. Serializing,
parsing, and serializing again is byte-identical, so committed scenario
files diff cleanly.

Order-significant collections survive round trips untouched: cumulative
item order, the step list, slot order, and query order all carry meaning.
"""

from __future__ import annotations

import json
from pathlib import Path

from pydantic import ValidationError

from .documents import ScenarioDocument
from .model import ValidatedScenario, validate_scenario
from .schedule import CumulativeSchedule


class ScenarioParseError(ValueError):
    """The input is not valid JSON."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{where}")
        self.line = line
        self.column = column


class ScenarioSchemaError(ValueError):
    """The input is JSON but does not match the scenario schema."""

    def __init__(self, message: str, field: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def parse_scenario(text: str) -> ScenarioDocument:
    """Parse scenario JSON text into a shape-checked document."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc
    try:
        return ScenarioDocument.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        field = ".".join(str(part) for part in first["loc"]) or "<root>"
        raise ScenarioSchemaError(first["msg"], field=field) from exc


def load_scenario(text: str) -> ValidatedScenario:
    """Parse and semantically validate scenario JSON text."""
    return validate_scenario(parse_scenario(text))


def read_scenario(path: Path | str) -> ValidatedScenario:
    return load_scenario(Path(path).read_text(encoding="utf-8"))


def document_from_scenario(scenario: ValidatedScenario) -> ScenarioDocument:
    """Canonical document form of a validated scenario."""
    schedule = scenario.schedule
    if isinstance(schedule, CumulativeSchedule):
        schedule_doc = {"kind": "cumulative", "order": list(schedule.order)}
    else:
        schedule_doc = {
            "kind": "explicit",
            "steps": [sorted(step) for step in schedule.steps],
            "tail": schedule.tail.value,
        }
    queries = [
        {
            "id": query.id,
            "slots": [
                {"name": slot.name, "admissible": sorted(slot.admissible)}
                for slot in query.slots
            ],
            "relation": [list(assignment) for assignment in query.relation],
        }
        for query in scenario.query_class
    ]
    raw: dict = {
        "universe": sorted(scenario.universe),
        "schedule": schedule_doc,
        "queries": queries,
    }
    if scenario.certificates is not None:
        raw["certificates"] = {
            query.id: sorted(scenario.certificates[query.id])
            for query in scenario.query_class
        }
    return ScenarioDocument.model_validate(raw)


def serialize_scenario(scenario: ValidatedScenario) -> str:
    """Canonical text form; stable byte-for-byte for equal scenarios."""
    document = document_from_scenario(scenario)
    data = document.model_dump(exclude_none=True)
    return json.dumps(data, indent=2) + "\n"


def write_scenario(scenario: ValidatedScenario, path: Path | str) -> None:
    Path(path).write_text(serialize_scenario(scenario), encoding="utf-8")
