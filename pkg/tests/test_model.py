import pytest

from truncheck.documents import ScenarioDocument
from truncheck.fixtures import fixture_prop1, fixture_prop2, fixture_prop3
from truncheck.model import ScenarioValidationError, validate_scenario
from truncheck.scenario_io import load_scenario, serialize_scenario


def base_doc(**overrides):
    """Minimal valid two-slot scenario; tests mutate one field at a time."""
    raw = {
        "universe": ["a1", "a2", "b1", "b2"],
        "schedule": {"kind": "explicit", "steps": [["a1", "a2", "b1"]], "tail": "repeat_last"},
        "queries": [
            {
                "id": "q",
                "slots": [
                    {"name": "left", "admissible": ["a1", "a2"]},
                    {"name": "right", "admissible": ["b1", "b2"]},
                ],
                "relation": [["a1", "b1"], ["a2", "b2"]],
            }
        ],
    }
    raw.update(overrides)
    return raw


def validate_raw(raw):
    return validate_scenario(ScenarioDocument.model_validate(raw))


def error_code(raw):
    with pytest.raises(ScenarioValidationError) as info:
        validate_raw(raw)
    return info.value.code


def test_matched_pairs_scenario_validates():
    scenario = validate_raw(base_doc())
    assert scenario.universe == {"a1", "a2", "b1", "b2"}
    query = scenario.query_class.queries[0]
    assert query.arity == 2
    assert query.relation == (("a1", "b1"), ("a2", "b2"))


def test_empty_universe():
    assert error_code(base_doc(universe=[], schedule={"kind": "cumulative", "order": []}, queries=[
        {"id": "q", "slots": [{"name": "s", "admissible": []}], "relation": []}
    ])) == "empty_universe"


def test_duplicate_universe_item():
    assert error_code(base_doc(universe=["a1", "a2", "b1", "b2", "a1"])) == "duplicate_item"


def test_duplicate_cumulative_order_item():
    raw = base_doc(schedule={"kind": "cumulative", "order": ["a1", "a1"]})
    assert error_code(raw) == "duplicate_item"


def test_empty_item_id():
    assert error_code(base_doc(universe=["a1", "a2", "b1", "b2", ""])) == "empty_item_id"


def test_unknown_item_in_schedule():
    raw = base_doc(schedule={"kind": "cumulative", "order": ["a1", "zz"]})
    assert error_code(raw) == "unknown_item"


def test_unknown_item_in_admissible():
    raw = base_doc()
    raw["queries"][0]["slots"][0]["admissible"] = ["a1", "zz"]
    assert error_code(raw) == "unknown_item"


def test_unknown_item_in_relation():
    raw = base_doc()
    raw["queries"][0]["relation"] = [["a1", "zz"]]
    assert error_code(raw) == "unknown_item"


def test_arity_mismatch():
    raw = base_doc()
    raw["queries"][0]["relation"] = [["a1", "b2", "b1"]]
    assert error_code(raw) == "arity_mismatch"


def test_tuple_outside_admissible():
    raw = base_doc()
    raw["queries"][0]["slots"][1]["admissible"] = ["b1"]
    raw["queries"][0]["relation"] = [["a1", "b2"]]
    assert error_code(raw) == "tuple_outside_admissible"


def test_duplicate_relation_tuple():
    raw = base_doc()
    raw["queries"][0]["relation"] = [["a1", "b1"], ["a1", "b1"]]
    assert error_code(raw) == "duplicate_tuple"


def test_empty_slot_list():
    raw = base_doc()
    raw["queries"][0]["slots"] = []
    raw["queries"][0]["relation"] = []
    assert error_code(raw) == "empty_slot_list"


def test_empty_query_list():
    assert error_code(base_doc(queries=[])) == "empty_query_list"


def test_empty_query_id():
    raw = base_doc()
    raw["queries"][0]["id"] = ""
    assert error_code(raw) == "empty_query_id"


def test_duplicate_query_id():
    raw = base_doc()
    raw["queries"] = [raw["queries"][0], raw["queries"][0]]
    assert error_code(raw) == "duplicate_query_id"


def test_empty_steps():
    raw = base_doc(schedule={"kind": "explicit", "steps": [], "tail": "repeat_last"})
    assert error_code(raw) == "empty_steps"


def test_empty_step_is_legal():
    raw = base_doc(schedule={"kind": "explicit", "steps": [[], ["a1"]], "tail": "repeat_last"})
    scenario = validate_raw(raw)
    assert scenario.schedule.steps[0] == frozenset()


def test_certificates_unknown_query():
    raw = base_doc(certificates={"q": ["a1"], "ghost": ["a1"]})
    assert error_code(raw) == "unknown_query_id"


def test_certificates_missing_query():
    raw = base_doc(certificates={})
    assert error_code(raw) == "certificate_missing"


def test_certificate_item_outside_universe():
    raw = base_doc(certificates={"q": ["zz"]})
    assert error_code(raw) == "unknown_item"


def test_empty_relation_and_empty_admissible_are_legal():
    raw = base_doc()
    raw["queries"][0]["slots"][0]["admissible"] = []
    raw["queries"][0]["relation"] = []
    scenario = validate_raw(raw)
    assert scenario.query_class.queries[0].relation == ()


def test_relation_is_sorted_canonically():
    raw = base_doc()
    raw["queries"][0]["relation"] = [["a2", "b2"], ["a1", "b1"]]
    scenario = validate_raw(raw)
    assert scenario.query_class.queries[0].relation == (("a1", "b1"), ("a2", "b2"))


def test_relation_tuples_lie_in_admissible_product():
    scenario = validate_raw(base_doc())
    for query in scenario.query_class:
        for assignment in query.relation:
            assert len(assignment) == query.arity
            for slot, component in zip(query.slots, assignment):
                assert component in slot.admissible


@pytest.mark.parametrize(
    "scenario",
    [fixture_prop1(), fixture_prop2(7), fixture_prop3()],
    ids=["prop1", "prop2", "prop3"],
)
def test_validation_is_idempotent(scenario):
    assert load_scenario(serialize_scenario(scenario)) == scenario


def test_validation_idempotent_on_seeded_scenarios(full_suite):
    for scenario in full_suite[::25]:
        assert load_scenario(serialize_scenario(scenario)) == scenario
