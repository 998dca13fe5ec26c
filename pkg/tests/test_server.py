"""The HTTP surface: endpoints, error shape, statelessness, latency."""

import json
import time

import pytest
from fastapi.testclient import TestClient

from mbwm.app.server import create_app

from .conftest import FIXTURES


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def load(name):
    return json.loads((FIXTURES / name).read_text())


def test_health(client):
    response = client.get("/api/health")
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "ok"
    assert body["version"]


def test_evaluate_example1(client):
    response = client.post("/api/evaluate", json=load("example1.json"))
    assert response.status_code == 200
    body = response.json()
    assert body["consistency"]["eps_star"] == pytest.approx(1.2331, abs=1e-4)
    assert body["diagnostics"]["j0"] == "c3"
    assert body["best_weights"]["c2"] == pytest.approx(0.4724, abs=1e-4)
    assert body["interval_weights"]["c1"] == pytest.approx(
        [0.1905, 0.2360], abs=1e-4
    )
    assert body["deviations"]["c4"] == pytest.approx(1.0469, abs=1e-4)
    # the response echoes the canonicalised request
    assert body["request"]["criteria"] == ["c1", "c2", "c3", "c4", "c5"]
    assert body["request"]["options"] == {"normalize_cr": False}


def test_check_has_no_weights(client):
    response = client.post("/api/check", json=load("example1.json"))
    assert response.status_code == 200
    body = response.json()
    assert body["eps_star"] == pytest.approx(1.2331, abs=1e-4)
    assert body["cr"] == pytest.approx(0.4360, abs=1e-4)
    assert "best_weights" not in body
    assert "interval_weights" not in body


def test_check_does_not_compute_weights(client, monkeypatch):
    import mbwm.app.evaluation as evaluation

    def boom(*args, **kwargs):
        raise AssertionError("check must not compute weights")

    monkeypatch.setattr(evaluation.core, "best_modified_pcs", boom)
    monkeypatch.setattr(evaluation.core, "consistent_weights", boom)
    response = client.post("/api/check", json=load("example2.json"))
    assert response.status_code == 200


def test_best_equals_worst_is_400(client):
    doc = load("example1.json")
    doc["worst"] = doc["best"]
    response = client.post("/api/check", json=doc)
    assert response.status_code == 400
    body = response.json()
    assert body["error"] == "BEST_EQUALS_WORST"
    assert "detail" in body


def test_malformed_body_is_400_parse_error(client):
    response = client.post("/api/evaluate", content=b"{nope")
    assert response.status_code == 400
    assert response.json()["error"] == "PARSE_ERROR"


def test_hierarchy_endpoint(client):
    response = client.post("/api/hierarchy", json=load("hierarchy_two_level.json"))
    assert response.status_code == 200
    body = response.json()
    total = sum(leaf["global_weight"] for leaf in body["leaves"])
    assert total == pytest.approx(1.0, abs=1e-9)


def test_hierarchy_depth_violation_is_400(client):
    doc = load("hierarchy_toy.json")
    doc["categories"][0]["categories"] = []
    response = client.post("/api/hierarchy", json=doc)
    assert response.status_code == 400
    assert response.json()["error"] == "UNSUPPORTED_DEPTH"


def test_evaluate_with_normalize_option(client):
    doc = load("consistent.json")
    doc["options"] = {"normalize_cr": True}
    response = client.post("/api/evaluate", json=doc)
    body = response.json()
    assert body["consistency"]["cr"] == 0.0
    assert body["consistency"]["cr_normalized"] is True


def test_ui_key_ignored(client):
    doc = load("example1.json")
    doc["ui"] = {"whatIf": ["branch-a"]}
    response = client.post("/api/evaluate", json=doc)
    assert response.status_code == 200


def test_responses_are_stateless(client):
    first = client.post("/api/evaluate", json=load("example1.json")).json()
    client.post("/api/evaluate", json=load("example3.json"))
    again = client.post("/api/evaluate", json=load("example1.json")).json()
    assert first == again


def test_check_latency_nine_criteria(client):
    labels = [f"k{i}" for i in range(1, 10)]
    doc = {
        "criteria": labels,
        "best": "k1",
        "worst": "k9",
        "best_to_other": {k: v for k, v in zip(labels, (1, 2, 3, 4, 5, 6, 7, 8, 9))},
        "other_to_worst": {k: v for k, v in zip(labels, (9, 8, 7, 6, 5, 4, 3, 2, 1))},
    }
    for _ in range(3):  # warm the route
        assert client.post("/api/check", json=doc).status_code == 200
    timings = []
    for _ in range(20):
        start = time.perf_counter()
        client.post("/api/check", json=doc)
        timings.append(time.perf_counter() - start)
    timings.sort()
    assert timings[len(timings) // 2] < 0.010


def test_static_dir_serving(tmp_path):
    (tmp_path / "index.html").write_text("<html><body>elicitation</body></html>")
    client = TestClient(create_app(static_dir=str(tmp_path)))
    response = client.get("/")
    assert response.status_code == 200
    assert "elicitation" in response.text
    # API still reachable alongside the static mount
    assert client.get("/api/health").status_code == 200
