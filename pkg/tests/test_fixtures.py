import pytest

from truncheck.feasibility import is_feasible_at, is_feasible_limit
from truncheck.fixtures import (
    RandomScenarioParams,
    SCHEDULE_KINDS,
    fixture_prop1,
    fixture_prop2,
    fixture_prop3,
    random_scenario,
)
from truncheck.model import validate_scenario
from truncheck.scenario_io import document_from_scenario, serialize_scenario
from truncheck.schedule import (
    CumulativeSchedule,
    ExplicitSchedule,
    Tail,
    effective_horizon,
    is_monotone,
)


def test_prop1_structure():
    scenario = fixture_prop1()
    assert scenario.universe == {"a", "b"}
    schedule = scenario.schedule
    assert isinstance(schedule, ExplicitSchedule)
    assert schedule.tail is Tail.CYCLE
    assert schedule.steps == (frozenset({"a"}), frozenset({"b"}))
    assert scenario.query_class.queries[0].relation == (("a", "b"),)


def test_prop2_structure():
    scenario = fixture_prop2(3)
    assert isinstance(scenario.schedule, CumulativeSchedule)
    assert scenario.schedule.order == ("e1", "e2", "e3")
    assert scenario.certificates == {
        "q1": frozenset({"e1"}),
        "q2": frozenset({"e2"}),
        "q3": frozenset({"e3"}),
    }


def test_prop2_rejects_nonpositive_size():
    from truncheck.fixtures import ParamsOutOfRange

    with pytest.raises(ParamsOutOfRange):
        fixture_prop2(0)


def test_prop3_structure():
    scenario = fixture_prop3()
    assert scenario.universe == {"a1", "a2", "b1", "b2"}
    assert is_monotone(scenario.schedule).monotone
    assert effective_horizon(scenario.schedule) == 2
    query = scenario.query_class.queries[0]
    assert query.relation == (("a1", "b2"), ("a2", "b2"))
    assert is_feasible_limit(query, scenario.schedule).feasible
    assert not is_feasible_at(query, scenario.schedule, 1).feasible


def test_random_scenario_is_deterministic():
    params = RandomScenarioParams(universe_size=9, slots=3, queries=4, relation_density=0.4)
    first = serialize_scenario(random_scenario(123, params))
    second = serialize_scenario(random_scenario(123, params))
    assert first == second
    other = serialize_scenario(random_scenario(124, params))
    assert other != first


@pytest.mark.parametrize("kind", SCHEDULE_KINDS)
def test_random_scenarios_revalidate(kind):
    params = RandomScenarioParams(schedule_kind=kind)
    for seed in range(5):
        scenario = random_scenario(seed, params)
        assert validate_scenario(document_from_scenario(scenario)) == scenario


def test_monotone_kinds_produce_monotone_schedules():
    for seed in range(20):
        for kind in ("cumulative", "stepwise_monotone"):
            scenario = random_scenario(seed, RandomScenarioParams(schedule_kind=kind))
            assert is_monotone(scenario.schedule).monotone


def test_zero_density_means_infeasible_everywhere():
    params = RandomScenarioParams(relation_density=0.0)
    scenario = random_scenario(11, params)
    for query in scenario.query_class:
        assert query.relation == ()
        assert not is_feasible_limit(query, scenario.schedule).feasible
        for depth in range(1, effective_horizon(scenario.schedule) + 1):
            assert not is_feasible_at(query, scenario.schedule, depth).feasible


@pytest.mark.parametrize(
    "params",
    [
        {"universe_size": 0},
        {"universe_size": 17},
        {"slots": 0},
        {"slots": 5},
        {"queries": 0},
        {"queries": 9},
        {"relation_density": -0.1},
        {"relation_density": 1.5},
        {"schedule_kind": "adaptive"},
    ],
)
def test_params_out_of_range(params):
    from truncheck.fixtures import ParamsOutOfRange

    with pytest.raises(ParamsOutOfRange):
        RandomScenarioParams(**params)
