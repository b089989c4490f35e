"""Built-in scenarios and the seeded random generator.

The three named fixtures are the package's reference counterexamples:

* ``fixture_prop1``: an alternating two-step cycle whose only compatible
  pair never co-occurs at any finite depth, although both items appear in
  the limit. Feasibility in the limit without feasibility at any depth.
* ``fixture_prop2``: a growing one-item-per-depth family. Every query is
  feasible at its own depth, but the depth needed to validate the whole
  family equals the family size, so no size-independent budget exists.
* ``fixture_prop3``: both slots individually covered at depth 1, yet no
  relation tuple is jointly available. Note the relation pairs every left
  item with ``b2`` on purpose: the classic presentation of this example
  keeps a matched pair inside the truncated domain, which would make it
  feasible, so this fixture deviates deliberately to exhibit the
  coverage-without-feasibility gap it is named for.

Randomly generated scenarios are deterministic in (seed, params) and always
pass validation; densities control how much of each admissible product is
materialized into the relation.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .documents import ScenarioDocument
from .model import ValidatedScenario, validate_scenario

SCHEDULE_KINDS = ("cumulative", "stepwise_monotone", "stepwise", "cyclic")

MAX_UNIVERSE_SIZE = 16
MAX_SLOTS = 4
MAX_QUERIES = 8
# keeps admissible products far below the brute-force oracle cap
_MAX_ADMISSIBLE = 6
_MAX_STEPS = 8


class ParamsOutOfRange(ValueError):
    """Generator parameters outside their documented ranges."""


@dataclass(frozen=True)
class RandomScenarioParams:
    universe_size: int = 10
    slots: int = 3
    queries: int = 5
    relation_density: float = 0.3
    schedule_kind: str = "cumulative"

    def __post_init__(self) -> None:
        if not 1 <= self.universe_size <= MAX_UNIVERSE_SIZE:
            raise ParamsOutOfRange(f"universe_size must be in 1..{MAX_UNIVERSE_SIZE}")
        if not 1 <= self.slots <= MAX_SLOTS:
            raise ParamsOutOfRange(f"slots must be in 1..{MAX_SLOTS}")
        if not 1 <= self.queries <= MAX_QUERIES:
            raise ParamsOutOfRange(f"queries must be in 1..{MAX_QUERIES}")
        if not 0.0 <= self.relation_density <= 1.0:
            raise ParamsOutOfRange("relation_density must be in 0..1")
        if self.schedule_kind not in SCHEDULE_KINDS:
            raise ParamsOutOfRange(
                f"schedule_kind must be one of {', '.join(SCHEDULE_KINDS)}"
            )


def fixture_prop1() -> ValidatedScenario:
    """Alternating availability: the lone compatible pair exists only in the
    limit."""
    document = ScenarioDocument.model_validate(
        {
            "universe": ["a", "b"],
            "schedule": {"kind": "explicit", "steps": [["a"], ["b"]], "tail": "cycle"},
            "queries": [
                {
                    "id": "q",
                    "slots": [
                        {"name": "slot1", "admissible": ["a"]},
                        {"name": "slot2", "admissible": ["b"]},
                    ],
                    "relation": [["a", "b"]],
                }
            ],
        }
    )
    return validate_scenario(document)


def fixture_prop2(n: int) -> ValidatedScenario:
    """One-item-per-depth family of size ``n``: query i needs exactly the
    item first retrieved at depth i, so the uniform depth grows with n."""
    if n < 1:
        raise ParamsOutOfRange("family size must be >= 1")
    items = [f"e{i}" for i in range(1, n + 1)]
    document = ScenarioDocument.model_validate(
        {
            "universe": items,
            "schedule": {"kind": "cumulative", "order": items},
            "queries": [
                {
                    "id": f"q{i}",
                    "slots": [{"name": "slot1", "admissible": [item]}],
                    "relation": [[item]],
                }
                for i, item in enumerate(items, start=1)
            ],
            "certificates": {f"q{i}": [item] for i, item in enumerate(items, start=1)},
        }
    )
    return validate_scenario(document)


def fixture_prop3() -> ValidatedScenario:
    """Slotwise coverage without joint feasibility at depth 1; the missing
    partner item arrives at depth 2, so the query is feasible in the limit."""
    document = ScenarioDocument.model_validate(
        {
            "universe": ["a1", "a2", "b1", "b2"],
            "schedule": {
                "kind": "explicit",
                "steps": [["a1", "a2", "b1"], ["a1", "a2", "b1", "b2"]],
                "tail": "repeat_last",
            },
            "queries": [
                {
                    "id": "q",
                    "slots": [
                        {"name": "slot1", "admissible": ["a1", "a2"]},
                        {"name": "slot2", "admissible": ["b1", "b2"]},
                    ],
                    "relation": [["a1", "b2"], ["a2", "b2"]],
                }
            ],
        }
    )
    return validate_scenario(document)


def _random_schedule(rng: random.Random, items: list[str], kind: str) -> dict:
    if kind == "cumulative":
        order = items.copy()
        rng.shuffle(order)
        return {"kind": "cumulative", "order": order}
    step_count = rng.randint(1, _MAX_STEPS)
    if kind == "stepwise_monotone":
        steps: list[list[str]] = []
        current: set[str] = set(rng.sample(items, rng.randint(0, len(items))))
        for _ in range(step_count):
            current |= set(rng.sample(items, rng.randint(0, len(items))))
            steps.append(sorted(current))
        return {"kind": "explicit", "steps": steps, "tail": "repeat_last"}
    tail = "repeat_last" if kind == "stepwise" else "cycle"
    steps = [
        sorted(rng.sample(items, rng.randint(0, len(items)))) for _ in range(step_count)
    ]
    return {"kind": "explicit", "steps": steps, "tail": tail}


def random_scenario(
    seed: int, params: RandomScenarioParams | None = None
) -> ValidatedScenario:
    """Deterministic random scenario for the given seed and parameters."""
    if params is None:
        params = RandomScenarioParams()
    rng = random.Random(seed)
    items = [f"u{i:02d}" for i in range(params.universe_size)]
    schedule = _random_schedule(rng, items, params.schedule_kind)
    queries = []
    for index in range(1, params.queries + 1):
        arity = rng.randint(1, params.slots)
        slots = []
        for position in range(1, arity + 1):
            size = rng.randint(1, min(_MAX_ADMISSIBLE, len(items)))
            slots.append(
                {"name": f"s{position}", "admissible": sorted(rng.sample(items, size))}
            )
        relation = [
            list(assignment)
            for assignment in itertools.product(*(slot["admissible"] for slot in slots))
            if rng.random() < params.relation_density
        ]
        queries.append({"id": f"q{index}", "slots": slots, "relation": relation})
    document = ScenarioDocument.model_validate(
        {"universe": items, "schedule": schedule, "queries": queries}
    )
    return validate_scenario(document)
