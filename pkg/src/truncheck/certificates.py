"""Witness certificates and uniform retrieval depths over query classes.

A certificate for a query is a finite item set whose joint availability
certifies feasibility. Certificates extracted here are the component set of
one canonical limit witness, so they are sound by construction (if the set
is available, that witness is available) and limit-complete by construction
(the items come from the limit domain). Supplied certificate assignments are
never trusted: soundness and limit completeness are re-checked exhaustively
over the effective horizon.

The union of certificates over a class is its basis. When the schedule is
monotone and the assignment checks out, the latest first appearance among
basis items gives a constructive depth at which every query in the class is
feasible; the scan method finds the minimal such depth independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .feasibility import is_feasible_at, is_feasible_limit, min_feasible_depth
from .model import ItemId, Query, QueryClass
from .schedule import (
    Schedule,
    domain_at,
    effective_horizon,
    first_depth,
    is_monotone,
    limit_domain,
)


class InfeasibleInLimit(ValueError):
    """No certificate exists: the query has no witness in the limit domain."""

    def __init__(self, query_id: str):
        super().__init__(f"query {query_id!r} is infeasible in the limit")
        self.query_id = query_id


class NotAllLimitFeasible(ValueError):
    """Uniform-depth analysis requires every class query limit-feasible."""

    def __init__(self, query_id: str):
        super().__init__(f"query {query_id!r} is not feasible in the limit")
        self.query_id = query_id


@dataclass(frozen=True)
class WitnessCertificate:
    query_id: str
    items: frozenset[ItemId]


@dataclass(frozen=True)
class CertificateAssignment:
    """One certificate per query of a class, keyed by query id."""

    entries: Mapping[str, frozenset[ItemId]]

    def items_for(self, query_id: str) -> frozenset[ItemId]:
        try:
            return self.entries[query_id]
        except KeyError:
            raise ValueError(f"assignment has no certificate for query {query_id!r}") from None


@dataclass(frozen=True)
class SoundnessResult:
    """Per-query soundness: availability of the certificate must imply
    feasibility at every depth. ``counterexample_depth`` is the first depth
    where the certificate is contained in the domain yet the query is
    infeasible."""

    query_id: str
    sound: bool
    counterexample_depth: int | None = None


@dataclass(frozen=True)
class CompletenessResult:
    """Per-query limit completeness: a limit-feasible query's certificate
    must lie inside the limit domain. ``missing`` lists the items outside."""

    query_id: str
    complete: bool
    missing: tuple[ItemId, ...] = ()


@dataclass(frozen=True)
class UniformReport:
    """Uniform-depth analysis over a query class.

    ``uniform_depth`` is the scan value, the minimal depth validating every
    query, when one exists. ``certificate_depth`` is the constructive bound
    from basis first appearances; it is only computed (``method`` is
    ``"certificate"``) when the schedule is monotone and the assignment
    passed both checks. ``violating_query`` names the first query feasible
    at no depth at all, when the scan fails because of one.
    """

    method: str
    uniform_depth: int | None
    certificate_depth: int | None
    basis: frozenset[ItemId]
    finitely_generated_within: frozenset[ItemId] | None
    violating_query: str | None


def extract_certificate(query: Query, schedule: Schedule) -> WitnessCertificate:
    """Certificate of a canonical limit witness.

    Under a monotone schedule the witness chosen is the one fully available
    earliest (ties broken by canonical relation order); otherwise the first
    limit witness in canonical order.
    """
    limit = limit_domain(schedule)
    witnesses = [
        assignment
        for assignment in query.relation
        if all(component in limit for component in assignment)
    ]
    if not witnesses:
        raise InfeasibleInLimit(query.id)
    if is_monotone(schedule).monotone:

        def availability(indexed: tuple[int, tuple[str, ...]]) -> tuple[int, int]:
            index, assignment = indexed
            # components are in the limit domain, so first_depth is defined
            return (max(first_depth(schedule, c) for c in assignment), index)  # type: ignore[type-var]

        _, chosen = min(enumerate(witnesses), key=availability)
    else:
        chosen = witnesses[0]
    return WitnessCertificate(query_id=query.id, items=frozenset(chosen))


def extract_assignment(query_class: QueryClass, schedule: Schedule) -> CertificateAssignment:
    """Extract a certificate for every query of the class."""
    return CertificateAssignment(
        entries={
            query.id: extract_certificate(query, schedule).items for query in query_class
        }
    )


def check_soundness(
    assignment: CertificateAssignment, query_class: QueryClass, schedule: Schedule
) -> tuple[SoundnessResult, ...]:
    """Exhaustively check, for every query and every depth up to the
    effective horizon, that certificate availability implies feasibility.

    Depths beyond the horizon repeat a checked domain, so the check is
    complete for representable schedules.
    """
    horizon = effective_horizon(schedule)
    results = []
    for query in query_class:
        items = assignment.items_for(query.id)
        counterexample = None
        for depth in range(1, horizon + 1):
            if items <= domain_at(schedule, depth) and not is_feasible_at(
                query, schedule, depth
            ).feasible:
                counterexample = depth
                break
        results.append(
            SoundnessResult(
                query_id=query.id,
                sound=counterexample is None,
                counterexample_depth=counterexample,
            )
        )
    return tuple(results)


def check_limit_completeness(
    assignment: CertificateAssignment, query_class: QueryClass, schedule: Schedule
) -> tuple[CompletenessResult, ...]:
    """Check that every limit-feasible query's certificate is contained in
    the limit domain."""
    limit = limit_domain(schedule)
    results = []
    for query in query_class:
        items = assignment.items_for(query.id)
        missing: tuple[str, ...] = ()
        if is_feasible_limit(query, schedule).feasible:
            missing = tuple(sorted(items - limit))
        results.append(
            CompletenessResult(query_id=query.id, complete=not missing, missing=missing)
        )
    return tuple(results)


def basis(assignment: CertificateAssignment) -> frozenset[ItemId]:
    """Union of all certificates in the assignment."""
    return frozenset().union(*assignment.entries.values()) if assignment.entries else frozenset()


def is_finitely_generated(
    assignment: CertificateAssignment, generators: Iterable[ItemId]
) -> bool:
    """Whether every certificate is contained in the given generator set,
    i.e. the basis fits inside it."""
    return basis(assignment) <= frozenset(generators)


def uniform_depth(
    query_class: QueryClass,
    schedule: Schedule,
    assignment: CertificateAssignment | None = None,
    generators: Iterable[ItemId] | None = None,
) -> UniformReport:
    """Find a single depth validating every query of the class.

    Requires every query limit-feasible (raises ``NotAllLimitFeasible``
    naming the first offender otherwise). The scan method always runs and
    yields the minimal uniform depth over 1..horizon, or none. When the
    schedule is monotone and the assignment (extracted if not supplied)
    passes soundness and limit completeness, the certificate method also
    runs: its bound is the latest first appearance among basis items, and
    feasibility of every query at that bound is verified explicitly.
    """
    for query in query_class:
        if not is_feasible_limit(query, schedule).feasible:
            raise NotAllLimitFeasible(query.id)

    horizon = effective_horizon(schedule)
    scan_depth = None
    for depth in range(1, horizon + 1):
        if all(is_feasible_at(query, schedule, depth).feasible for query in query_class):
            scan_depth = depth
            break
    violating = None
    if scan_depth is None:
        for query in query_class:
            if min_feasible_depth(query, schedule) is None:
                violating = query.id
                break

    if assignment is None:
        assignment = extract_assignment(query_class, schedule)
    class_basis = basis(assignment)

    method = "scan"
    certificate_depth = None
    if is_monotone(schedule).monotone:
        sound = all(r.sound for r in check_soundness(assignment, query_class, schedule))
        complete = all(
            r.complete for r in check_limit_completeness(assignment, query_class, schedule)
        )
        if sound and complete:
            method = "certificate"
            certificate_depth = max(
                (first_depth(schedule, item) for item in class_basis),  # type: ignore[type-var]
                default=1,
            )
            for query in query_class:
                if not is_feasible_at(query, schedule, certificate_depth).feasible:
                    raise RuntimeError(
                        f"certificate bound {certificate_depth} failed to validate "
                        f"query {query.id!r}; this contradicts the soundness check"
                    )

    generated_within = None
    if generators is not None:
        generator_set = frozenset(generators)
        if class_basis <= generator_set:
            generated_within = generator_set

    return UniformReport(
        method=method,
        uniform_depth=scan_depth,
        certificate_depth=certificate_depth,
        basis=class_basis,
        finitely_generated_within=generated_within,
        violating_query=violating,
    )
