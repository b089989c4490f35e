"""Retrieval schedules: depth-indexed families of candidate evidence sets.

A schedule assigns to every depth k >= 1 a candidate set D(k) of evidence
item ids. Two finite representations are supported, and every question this
package asks about a schedule (its limit, monotonicity, first appearances,
feasible depths) is decidable exactly from that representation:

* ``CumulativeSchedule``: a duplicate-free item list; D(k) is the first
  min(k, len(order)) entries. Always monotone, stabilizes once the list is
  exhausted.
* ``ExplicitSchedule``: an explicit list of step sets plus a tail rule.
  With ``Tail.REPEAT_LAST`` the final step repeats forever; with
  ``Tail.CYCLE`` the steps repeat periodically.

The *effective horizon* H of a schedule bounds the depths that matter: every
D(k) with k > H equals some D(k') with k' <= H, so any "exists a finite
depth" question is settled by scanning 1..H.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Tail(str, Enum):
    """Behavior of an explicit schedule past its listed steps."""

    REPEAT_LAST = "repeat_last"
    CYCLE = "cycle"


@dataclass(frozen=True)
class CumulativeSchedule:
    """Items revealed one per depth, in order, never removed.

    ``order`` must be duplicate-free; it may be empty (every depth is the
    empty set).
    """

    order: tuple[str, ...]


@dataclass(frozen=True)
class ExplicitSchedule:
    """Explicitly listed candidate sets with a stabilizing or periodic tail.

    ``steps`` must be non-empty; individual steps may be empty sets.
    """

    steps: tuple[frozenset[str], ...]
    tail: Tail


Schedule = CumulativeSchedule | ExplicitSchedule


@dataclass(frozen=True)
class MonotonicityReport:
    """Outcome of the monotonicity decision.

    ``violation`` is the smallest depth k at which something is dropped,
    paired with the lexicographically smallest item in D(k) \\ D(k+1).
    """

    monotone: bool
    violation: tuple[int, str] | None = None


def _require_depth(depth: int) -> None:
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")


def domain_at(schedule: Schedule, depth: int) -> frozenset[str]:
    """Candidate set D(depth) for any depth >= 1."""
    _require_depth(depth)
    if isinstance(schedule, CumulativeSchedule):
        return frozenset(schedule.order[: min(depth, len(schedule.order))])
    size = len(schedule.steps)
    if schedule.tail is Tail.REPEAT_LAST:
        return schedule.steps[min(depth, size) - 1]
    return schedule.steps[(depth - 1) % size]


def limit_domain(schedule: Schedule) -> frozenset[str]:
    """Union of D(k) over all depths: everything the schedule ever exposes."""
    if isinstance(schedule, CumulativeSchedule):
        return frozenset(schedule.order)
    return frozenset().union(*schedule.steps)


def effective_horizon(schedule: Schedule) -> int:
    """Depth bound H after which the schedule only repeats earlier sets.

    For every k > H there is a k' <= H with D(k) = D(k'); cumulative and
    repeat-last schedules additionally satisfy D(k) = D(H) for all k >= H.
    """
    if isinstance(schedule, CumulativeSchedule):
        return max(1, len(schedule.order))
    return len(schedule.steps)


def is_monotone(schedule: Schedule) -> MonotonicityReport:
    """Decide whether D(k) is a subset of D(k+1) at every depth.

    Cumulative schedules are monotone by construction. Explicit repeat-last
    schedules need each listed step contained in the next. Cyclic schedules
    must also satisfy the wrap-around D(H) within D(H+1) = D(1), which
    together with the chain forces all steps equal.
    """
    if isinstance(schedule, CumulativeSchedule):
        return MonotonicityReport(monotone=True)
    size = len(schedule.steps)
    last_checked = size - 1 if schedule.tail is Tail.REPEAT_LAST else size
    for depth in range(1, last_checked + 1):
        dropped = domain_at(schedule, depth) - domain_at(schedule, depth + 1)
        if dropped:
            return MonotonicityReport(monotone=False, violation=(depth, min(dropped)))
    return MonotonicityReport(monotone=True)


def first_depth(schedule: Schedule, item: str) -> int | None:
    """Smallest depth at which ``item`` appears, or None if it never does."""
    if isinstance(schedule, CumulativeSchedule):
        try:
            return schedule.order.index(item) + 1
        except ValueError:
            return None
    for depth, step in enumerate(schedule.steps, start=1):
        if item in step:
            return depth
    return None


def monotone_closure(schedule: Schedule) -> ExplicitSchedule:
    """Smallest monotone schedule dominating ``schedule``.

    Step k of the result is the union of D(1)..D(k), frozen at the effective
    horizon with a repeat-last tail. The closure keeps the limit domain,
    contains the original pointwise up to the horizon, and coincides with it
    at every depth when the original is already monotone.
    """
    horizon = effective_horizon(schedule)
    steps: list[frozenset[str]] = []
    seen: set[str] = set()
    for depth in range(1, horizon + 1):
        seen |= domain_at(schedule, depth)
        steps.append(frozenset(seen))
    return ExplicitSchedule(steps=tuple(steps), tail=Tail.REPEAT_LAST)
