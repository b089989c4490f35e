"""Core domain types: evidence universes, queries, witnesses, scenarios.

Evidence items are opaque string ids drawn from a finite universe. A query
has an ordered list of slots, each with a set of admissible items, plus an
explicit compatibility relation: the set of slot assignments that jointly
satisfy the query. A witness is one member of that relation. Relations are
stored as materialized tuple sets in canonical (lexicographic) order, which
makes feasibility decidable by scan and keeps every report byte-stable.

:func:`validate_scenario` turns a parsed scenario document into a
``ValidatedScenario`` or raises ``ScenarioValidationError``; it never lets a
malformed document through and never fails with anything else. All types
here are immutable after validation and safe to share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .documents import (
    CumulativeScheduleDoc,
    ExplicitScheduleDoc,
    QueryDoc,
    ScenarioDocument,
)
from .schedule import CumulativeSchedule, ExplicitSchedule, Schedule, Tail

ItemId = str


class ScenarioValidationError(ValueError):
    """A scenario document violates a semantic invariant.

    ``code`` identifies the violated invariant; the message names the
    offending element.
    """

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class Slot:
    """One positional requirement of a query. ``name`` is a cosmetic label;
    slot identity is positional."""

    name: str
    admissible: frozenset[ItemId]


@dataclass(frozen=True)
class Query:
    """A query over the universe: slots plus an explicit compatibility
    relation, sorted lexicographically and duplicate-free."""

    id: str
    slots: tuple[Slot, ...]
    relation: tuple[tuple[ItemId, ...], ...]

    @property
    def arity(self) -> int:
        return len(self.slots)


@dataclass(frozen=True)
class Witness:
    """A relation member: one admissible item per slot, jointly compatible."""

    query_id: str
    assignment: tuple[ItemId, ...]


@dataclass(frozen=True)
class QueryClass:
    """Ordered, non-empty collection of queries with unique ids."""

    queries: tuple[Query, ...]

    def __iter__(self) -> Iterator[Query]:
        return iter(self.queries)

    def __len__(self) -> int:
        return len(self.queries)

    def get(self, query_id: str) -> Query | None:
        for query in self.queries:
            if query.id == query_id:
                return query
        return None


@dataclass(frozen=True)
class ValidatedScenario:
    """A scenario whose universe, schedule, queries, and optional
    certificates all satisfy their invariants. Treat as immutable."""

    universe: frozenset[ItemId]
    schedule: Schedule
    query_class: QueryClass
    certificates: dict[str, frozenset[ItemId]] | None = None


def _fail(code: str, message: str) -> ScenarioValidationError:
    return ScenarioValidationError(code, message)


def _checked_items(
    raw: list[str], universe: frozenset[str] | None, where: str
) -> tuple[str, ...]:
    """Reject empty ids, duplicates, and (when a universe is given) unknown
    items; preserves input order."""
    seen: set[str] = set()
    for item in raw:
        if not item:
            raise _fail("empty_item_id", f"{where} contains an empty item id")
        if item in seen:
            raise _fail("duplicate_item", f"{where} lists item {item!r} more than once")
        if universe is not None and item not in universe:
            raise _fail(
                "unknown_item", f"{where} references {item!r}, which is not in the universe"
            )
        seen.add(item)
    return tuple(raw)


def _validate_schedule(
    doc: CumulativeScheduleDoc | ExplicitScheduleDoc, universe: frozenset[str]
) -> Schedule:
    if isinstance(doc, CumulativeScheduleDoc):
        order = _checked_items(doc.order, universe, "schedule.order")
        return CumulativeSchedule(order=order)
    if not doc.steps:
        raise _fail("empty_steps", "schedule.steps must list at least one step")
    steps = tuple(
        frozenset(_checked_items(step, universe, f"schedule.steps[{index}]"))
        for index, step in enumerate(doc.steps)
    )
    return ExplicitSchedule(steps=steps, tail=Tail(doc.tail))


def _validate_query(doc: QueryDoc, universe: frozenset[str]) -> Query:
    if not doc.id:
        raise _fail("empty_query_id", "query id must be non-empty")
    if not doc.slots:
        raise _fail("empty_slot_list", f"query {doc.id!r} has no slots")
    slots = tuple(
        Slot(
            name=slot.name,
            admissible=frozenset(
                _checked_items(
                    slot.admissible, universe, f"query {doc.id!r} slot {index + 1} admissible set"
                )
            ),
        )
        for index, slot in enumerate(doc.slots)
    )
    arity = len(slots)
    tuples: list[tuple[str, ...]] = []
    seen: set[tuple[str, ...]] = set()
    for position, raw in enumerate(doc.relation):
        where = f"query {doc.id!r} relation tuple {position}"
        if len(raw) != arity:
            raise _fail(
                "arity_mismatch",
                f"{where} has {len(raw)} components but the query has {arity} slots",
            )
        for index, component in enumerate(raw):
            if component not in universe:
                raise _fail(
                    "unknown_item",
                    f"{where} references {component!r}, which is not in the universe",
                )
            if component not in slots[index].admissible:
                raise _fail(
                    "tuple_outside_admissible",
                    f"{where} places {component!r} in slot {index + 1}, "
                    f"but it is not admissible there",
                )
        entry = tuple(raw)
        if entry in seen:
            raise _fail("duplicate_tuple", f"{where} repeats an earlier tuple")
        seen.add(entry)
        tuples.append(entry)
    return Query(id=doc.id, slots=slots, relation=tuple(sorted(tuples)))


def _validate_certificates(
    raw: dict[str, list[str]],
    query_class: QueryClass,
    universe: frozenset[str],
) -> dict[str, frozenset[str]]:
    known = {query.id for query in query_class}
    for query_id in raw:
        if query_id not in known:
            raise _fail(
                "unknown_query_id", f"certificates entry {query_id!r} matches no query"
            )
    entries: dict[str, frozenset[str]] = {}
    for query in query_class:
        if query.id not in raw:
            raise _fail(
                "certificate_missing", f"no certificate entry for query {query.id!r}"
            )
        items = _checked_items(raw[query.id], universe, f"certificate for {query.id!r}")
        entries[query.id] = frozenset(items)
    return entries


def validate_scenario(doc: ScenarioDocument) -> ValidatedScenario:
    """Check every semantic invariant of a parsed scenario document.

    Raises ``ScenarioValidationError`` (with a stable ``code``) on the first
    violation found; the check order is universe, schedule, queries,
    certificates.
    """
    if not doc.universe:
        raise _fail("empty_universe", "universe must contain at least one item")
    universe = frozenset(_checked_items(doc.universe, None, "universe"))

    schedule = _validate_schedule(doc.schedule, universe)

    if not doc.queries:
        raise _fail("empty_query_list", "scenario must define at least one query")
    queries: list[Query] = []
    seen_ids: set[str] = set()
    for query_doc in doc.queries:
        query = _validate_query(query_doc, universe)
        if query.id in seen_ids:
            raise _fail("duplicate_query_id", f"query id {query.id!r} is used twice")
        seen_ids.add(query.id)
        queries.append(query)
    query_class = QueryClass(queries=tuple(queries))

    certificates = None
    if doc.certificates is not None:
        certificates = _validate_certificates(doc.certificates, query_class, universe)

    return ValidatedScenario(
        universe=universe,
        schedule=schedule,
        query_class=query_class,
        certificates=certificates,
    )
