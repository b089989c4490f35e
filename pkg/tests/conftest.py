import random

import pytest

from truncheck.fixtures import RandomScenarioParams, random_scenario

MONOTONE_KINDS = ("cumulative", "stepwise_monotone")
NONMONOTONE_KINDS = ("stepwise", "cyclic")


def suite_params(seed: int, kind: str) -> RandomScenarioParams:
    rng = random.Random(90_000 + seed)
    return RandomScenarioParams(
        universe_size=rng.randint(4, 16),
        slots=rng.randint(1, 4),
        queries=rng.randint(1, 8),
        relation_density=round(rng.uniform(0.1, 0.7), 3),
        schedule_kind=kind,
    )


def build_suite(kinds, per_kind: int, base_seed: int):
    scenarios = []
    seed = base_seed
    for kind in kinds:
        for _ in range(per_kind):
            scenarios.append(random_scenario(seed, suite_params(seed, kind)))
            seed += 1
    return scenarios


@pytest.fixture(scope="session")
def monotone_suite():
    """At least 200 seeded scenarios whose schedules are monotone by
    construction."""
    return build_suite(MONOTONE_KINDS, per_kind=102, base_seed=1)


@pytest.fixture(scope="session")
def nonmonotone_suite():
    """Seeded scenarios drawn from the step/cycle kinds; most are
    non-monotone."""
    return build_suite(NONMONOTONE_KINDS, per_kind=30, base_seed=5_001)


@pytest.fixture(scope="session")
def full_suite(monotone_suite, nonmonotone_suite):
    return monotone_suite + nonmonotone_suite
