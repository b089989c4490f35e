import json

import pytest
from fastapi.testclient import TestClient

from truncheck.fixtures import fixture_prop1, fixture_prop2, fixture_prop3
from truncheck.scenario_io import serialize_scenario
from truncheck.service.app import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def doc(scenario):
    return json.loads(serialize_scenario(scenario))


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_validate_accepts_good_scenario(client):
    response = client.post("/validate", json={"scenario": doc(fixture_prop1())})
    assert response.status_code == 200
    assert response.json()["command"] == "validate"


def test_validate_rejects_semantic_violation(client):
    body = doc(fixture_prop1())
    body["universe"] = ["a", "a", "b"]
    response = client.post("/validate", json={"scenario": body})
    assert response.status_code == 422
    assert response.json()["detail"]["code"] == "duplicate_item"


def test_unknown_key_rejected_by_schema(client):
    body = doc(fixture_prop1())
    body["ranking"] = []
    response = client.post("/validate", json={"scenario": body})
    assert response.status_code == 422


def test_feasibility_endpoint(client):
    response = client.post(
        "/feasibility",
        json={"scenario": doc(fixture_prop1()), "query_id": "q", "depth": 1},
    )
    assert response.status_code == 200
    entry = response.json()["queries"][0]
    assert entry["feasibility"] == {"depth": 1, "feasible": False, "witness": None}


def test_feasibility_rejects_bad_depth(client):
    response = client.post(
        "/feasibility",
        json={"scenario": doc(fixture_prop1()), "query_id": "q", "depth": 0},
    )
    assert response.status_code == 422


def test_unknown_query_id(client):
    response = client.post(
        "/min-depth", json={"scenario": doc(fixture_prop1()), "query_id": "nope"}
    )
    assert response.status_code == 422
    assert response.json()["detail"]["code"] == "unknown_query_id"


def test_nr_endpoint_flags_alternating_scenario(client):
    response = client.post("/nr", json={"scenario": doc(fixture_prop1())})
    assert response.status_code == 200
    body = response.json()
    assert body["schema_version"] == 1
    assert body["queries"][0]["nr_holds"] is False


def test_uniform_endpoint_with_generators(client):
    response = client.post(
        "/uniform",
        json={"scenario": doc(fixture_prop2(4)), "generators": ["e1", "e2", "e3", "e4"]},
    )
    assert response.status_code == 200
    section = response.json()["query_class"]
    assert section["uniform_depth"] == 4
    assert section["certificate_depth"] == 4
    assert section["finitely_generated_within"] == ["e1", "e2", "e3", "e4"]


def test_certify_endpoint(client):
    response = client.post("/certify", json={"scenario": doc(fixture_prop2(3))})
    assert response.status_code == 200
    section = response.json()["certificates"]
    assert section["source"] == "provided"
    assert section["sound"] and section["limit_complete"]


def test_diagnose_endpoint_reports_gap(client):
    response = client.post(
        "/diagnose", json={"scenario": doc(fixture_prop3()), "query_id": "q", "depth": 1}
    )
    assert response.status_code == 200
    diagnosis = response.json()["queries"][0]["diagnosis"]
    assert diagnosis["slot_coverage"] == [2, 1]
    assert diagnosis["coverage_gap"] is True


def test_closure_endpoint(client):
    response = client.post("/closure", json={"scenario": doc(fixture_prop1())})
    assert response.status_code == 200
    schedule = response.json()["scenario"]["schedule"]
    assert schedule == {"kind": "explicit", "steps": [["a"], ["a", "b"]], "tail": "repeat_last"}


def test_analyze_endpoint(client):
    response = client.post("/analyze", json={"scenario": doc(fixture_prop2(3))})
    assert response.status_code == 200
    body = response.json()
    assert body["query_class"]["uniform_depth"] == 3
    assert body["certificates"]["source"] == "provided"


def test_demo_endpoints(client):
    assert client.get("/demo/prop1").json()["report"]["queries"][0]["nr_holds"] is False
    prop2 = client.get("/demo/prop2", params={"n": 3}).json()
    assert len(prop2["scenario"]["queries"]) == 3
    prop3 = client.get("/demo/prop3").json()
    assert prop3["report"]["queries"][0]["diagnosis"]["coverage_gap"] is True


def test_demo_unknown_name(client):
    assert client.get("/demo/prop9").status_code == 404
