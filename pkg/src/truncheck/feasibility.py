"""Feasibility decisions for queries against truncated evidence domains.

A query is feasible over an evidence set when some tuple of its relation has
every component available. All decisions here are exact scans over the
explicit relation; the independent brute-force oracle re-derives the same
answers from the other direction (enumerating the admissible product and
testing relation membership) so the two can be cross-checked.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod

from .model import ItemId, Query, Witness
from .schedule import (
    Schedule,
    domain_at,
    effective_horizon,
    first_depth,
    limit_domain,
)

DEFAULT_PRODUCT_CAP = 1_000_000


class SlotIndexOutOfRange(IndexError):
    """Slot index outside 1..arity."""


class ProductTooLarge(ValueError):
    """The admissible product is too large for brute-force enumeration."""


@dataclass(frozen=True)
class FeasibilityOutcome:
    """Whether a witness exists in the evaluated domain; when it does, the
    first one in canonical relation order."""

    feasible: bool
    witness: Witness | None = None


@dataclass(frozen=True)
class NrReport:
    """Per-query feasibility preservation: does limit feasibility imply
    feasibility at some finite depth?"""

    query_id: str
    limit_feasible: bool
    first_feasible_depth: int | None
    nr_holds: bool
    violation_note: str | None = None


@dataclass(frozen=True)
class BlockedTuple:
    """A relation tuple not contained in the evaluated domain, with the
    components that are missing (sorted, always non-empty)."""

    assignment: tuple[ItemId, ...]
    missing: tuple[ItemId, ...]


@dataclass(frozen=True)
class Diagnosis:
    """Slot-coverage versus joint-feasibility picture at one depth.

    ``coverage_gap`` is the central failure mode: every slot individually
    has admissible evidence available, yet no relation tuple is jointly
    contained in the domain.
    """

    query_id: str
    depth: int
    slot_coverage: tuple[int, ...]
    all_slots_covered: bool
    feasible: bool
    blocking: tuple[BlockedTuple, ...]
    coverage_gap: bool


def slot_domain(query: Query, schedule: Schedule, depth: int, slot: int) -> frozenset[ItemId]:
    """Induced domain of a slot at a depth: admissible items actually
    available. ``slot`` is 1-based."""
    if not 1 <= slot <= query.arity:
        raise SlotIndexOutOfRange(
            f"slot {slot} out of range 1..{query.arity} for query {query.id!r}"
        )
    return query.slots[slot - 1].admissible & domain_at(schedule, depth)


def is_feasible_in(query: Query, domain: frozenset[ItemId]) -> FeasibilityOutcome:
    """Scan the relation in canonical order; stop at the first tuple whose
    components all lie in ``domain``."""
    for assignment in query.relation:
        if all(component in domain for component in assignment):
            return FeasibilityOutcome(
                feasible=True, witness=Witness(query_id=query.id, assignment=assignment)
            )
    return FeasibilityOutcome(feasible=False)


def is_feasible_at(query: Query, schedule: Schedule, depth: int) -> FeasibilityOutcome:
    """Feasibility against D(depth)."""
    return is_feasible_in(query, domain_at(schedule, depth))


def is_feasible_limit(query: Query, schedule: Schedule) -> FeasibilityOutcome:
    """Feasibility against the limit domain, i.e. with truncation removed."""
    return is_feasible_in(query, limit_domain(schedule))


def enumerate_witnesses(query: Query, domain: frozenset[ItemId]) -> tuple[Witness, ...]:
    """All witnesses contained in ``domain``, in canonical relation order."""
    return tuple(
        Witness(query_id=query.id, assignment=assignment)
        for assignment in query.relation
        if all(component in domain for component in assignment)
    )


def min_feasible_depth(query: Query, schedule: Schedule) -> int | None:
    """Smallest depth at which the query is feasible, or None if there is
    none.

    Scans depths 1..H for the effective horizon H, which is exhaustive:
    every deeper domain repeats one already scanned.
    """
    for depth in range(1, effective_horizon(schedule) + 1):
        if is_feasible_at(query, schedule, depth).feasible:
            return depth
    return None


def witness_based_min_depth(query: Query, schedule: Schedule) -> int | None:
    """Earliest depth at which some single witness is fully available:
    the minimum over witnesses of the latest first appearance among their
    components.

    Agrees with :func:`min_feasible_depth` on monotone schedules, where a
    witness available by depth k stays available; on non-monotone schedules
    its value is not meaningful.
    """
    best: int | None = None
    for assignment in query.relation:
        depths = [first_depth(schedule, component) for component in assignment]
        if any(depth is None for depth in depths):
            continue
        bound = max(depths)  # type: ignore[type-var]
        if best is None or bound < best:
            best = bound
    return best


def check_nr(query: Query, schedule: Schedule) -> NrReport:
    """Check feasibility preservation for one query: if the query is
    feasible in the limit, some finite depth must witness it."""
    limit_feasible = is_feasible_limit(query, schedule).feasible
    depth = min_feasible_depth(query, schedule)
    holds = (not limit_feasible) or depth is not None
    note = None
    if not holds:
        note = (
            "feasible in the limit but infeasible at every depth up to "
            f"the effective horizon ({effective_horizon(schedule)})"
        )
    return NrReport(
        query_id=query.id,
        limit_feasible=limit_feasible,
        first_feasible_depth=depth,
        nr_holds=holds,
        violation_note=note,
    )


def brute_force_feasible(
    query: Query, domain: frozenset[ItemId], cap: int = DEFAULT_PRODUCT_CAP
) -> bool:
    """Independent feasibility oracle: enumerate the full product of the
    restricted admissible sets and test each tuple for relation membership.

    Raises ``ProductTooLarge`` when the product exceeds ``cap``.
    """
    restricted = [sorted(slot.admissible & domain) for slot in query.slots]
    size = prod(len(values) for values in restricted)
    if size > cap:
        raise ProductTooLarge(
            f"product of restricted slot domains is {size}, above the cap of {cap}"
        )
    members = frozenset(query.relation)
    return any(candidate in members for candidate in itertools.product(*restricted))


def diagnose(query: Query, schedule: Schedule, depth: int) -> Diagnosis:
    """Explain the feasibility picture at one depth: per-slot coverage, and
    for an infeasible query, every relation tuple with its missing items."""
    domain = domain_at(schedule, depth)
    coverage = tuple(len(slot.admissible & domain) for slot in query.slots)
    all_covered = all(count >= 1 for count in coverage)
    outcome = is_feasible_in(query, domain)
    blocking: tuple[BlockedTuple, ...] = ()
    if not outcome.feasible:
        blocking = tuple(
            BlockedTuple(
                assignment=assignment,
                missing=tuple(sorted({c for c in assignment if c not in domain})),
            )
            for assignment in query.relation
        )
    return Diagnosis(
        query_id=query.id,
        depth=depth,
        slot_coverage=coverage,
        all_slots_covered=all_covered,
        feasible=outcome.feasible,
        blocking=blocking,
        coverage_gap=all_covered and not outcome.feasible,
    )
