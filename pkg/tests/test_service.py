import base64
import json

import pytest
from fastapi.testclient import TestClient

from gesturelock import (
    AlignmentParams,
    MatchConfig,
    ProfileStore,
    gesture_to_dict,
    single_stroke,
    translate,
)
from gesturelock.service import (
    CONFIG_ENV_VAR,
    ServiceConfig,
    create_app,
    load_service_config,
    service_config_to_dict,
)

CANVAS = (200, 150)
IMAGE = b"\x89PNG fake image bytes"


def reference_gesture():
    return single_stroke([(10, 10), (60, 90), (150, 40)], *CANVAS)


def enroll_body(username="alice", threshold=0.8, gesture=None):
    return {
        "username": username,
        "threshold": threshold,
        "image_base64": base64.b64encode(IMAGE).decode("ascii"),
        "image_width": CANVAS[0],
        "image_height": CANVAS[1],
        "gesture": gesture_to_dict(gesture or reference_gesture()),
    }


@pytest.fixture
def client(tmp_path):
    store = ProfileStore(tmp_path / "profiles")
    app = create_app(store, MatchConfig())
    with TestClient(app) as c:
        c.profile_store = store
        yield c


def forbidden_keys(doc):
    found = set()

    def walk(node):
        if isinstance(node, dict):
            for k, v in node.items():
                if k in {"gesture", "strokes", "reference_gesture"}:
                    found.add(k)
                walk(v)
        elif isinstance(node, list):
            for v in node:
                walk(v)

    walk(doc)
    return found


def test_enrollment_created_with_summary(client):
    r = client.post("/api/accounts", json=enroll_body())
    assert r.status_code == 201
    doc = r.json()
    assert sorted(doc.keys()) == ["created_at", "image_height", "image_id",
                                  "image_width", "threshold", "username"]
    assert doc["username"] == "alice"
    assert doc["threshold"] == 0.8
    assert forbidden_keys(doc) == set()


def test_enrollment_duplicate_is_409(client):
    assert client.post("/api/accounts", json=enroll_body()).status_code == 201
    r = client.post("/api/accounts", json=enroll_body())
    assert r.status_code == 409
    assert r.json()["error"] == "DuplicateUsername"


@pytest.mark.parametrize("mutate,error", [
    (lambda b: b.pop("username"), "InvalidRequest"),
    (lambda b: b.update(username=42), "InvalidRequest"),
    (lambda b: b.update(threshold=1.5), "InvalidThreshold"),
    (lambda b: b.update(threshold="high"), "InvalidRequest"),
    (lambda b: b.update(image_base64="@@not-base64@@"), "InvalidRequest"),
    (lambda b: b.update(image_width=0), "InvalidRequest"),
    (lambda b: b.update(gesture={"canvas_width": 1}), "InvalidGesture"),
    (lambda b: b.update(gesture=gesture_to_dict(single_stroke([(500, 10)], 200, 150))),
     "InvalidGesture"),
    (lambda b: b.update(gesture=gesture_to_dict(single_stroke([(5, 5)], 50, 50))),
     "InvalidGesture"),  # canvas does not match image dims
])
def test_enrollment_validation_is_400(client, mutate, error):
    body = enroll_body()
    mutate(body)
    r = client.post("/api/accounts", json=body)
    assert r.status_code == 400
    assert r.json()["error"] == error


def test_enrollment_rejects_non_json_body(client):
    r = client.post("/api/accounts", content=b"not json",
                    headers={"content-type": "application/json"})
    assert r.status_code == 400
    assert r.json()["error"] == "InvalidRequest"


def test_challenge_returns_image_without_gesture(client):
    client.post("/api/accounts", json=enroll_body())
    r = client.get("/api/accounts/alice/challenge")
    assert r.status_code == 200
    doc = r.json()
    assert sorted(doc.keys()) == ["image_base64", "image_height", "image_id", "image_width"]
    assert base64.b64decode(doc["image_base64"]) == IMAGE
    assert doc["image_width"] == CANVAS[0]
    assert doc["image_height"] == CANVAS[1]
    assert forbidden_keys(doc) == set()


def test_challenge_unknown_user_is_404(client):
    r = client.get("/api/accounts/ghost/challenge")
    assert r.status_code == 404
    assert r.json()["error"] == "UnknownUser"


def test_login_identical_redraw_accepted(client):
    client.post("/api/accounts", json=enroll_body())
    r = client.post("/api/accounts/alice/login",
                    json={"gesture": gesture_to_dict(reference_gesture())})
    assert r.status_code == 200
    doc = r.json()
    assert sorted(doc.keys()) == ["accepted", "degree", "offset", "per_pixel"]
    assert sorted(doc["offset"].keys()) == ["dx", "dy"]
    assert doc["degree"] == 1.0
    assert doc["accepted"] is True
    assert len(doc["per_pixel"]) == MatchConfig().resample_n
    assert forbidden_keys(doc) == set()


def test_login_degree_below_threshold_rejected(tmp_path):
    # alignment off so a flat translation scores predictably under threshold
    store = ProfileStore(tmp_path / "p")
    app = create_app(store, MatchConfig(alignment=AlignmentParams(max_shift=0.0),
                                        resample_n=2))
    with TestClient(app) as client:
        ref = single_stroke([(0, 0), (100, 0)], *CANVAS)
        client.post("/api/accounts", json=enroll_body(gesture=ref))
        away = translate(ref, 5.2, 0.0)  # both pixels at degree 0.74
        r = client.post("/api/accounts/alice/login",
                        json={"gesture": gesture_to_dict(away)})
        doc = r.json()
        assert doc["degree"] == 0.74
        assert doc["accepted"] is False


def test_login_degree_equal_threshold_accepted(tmp_path):
    store = ProfileStore(tmp_path / "p")
    app = create_app(store, MatchConfig(alignment=AlignmentParams(max_shift=0.0),
                                        resample_n=2))
    with TestClient(app) as client:
        ref = single_stroke([(0, 0), (100, 0)], *CANVAS)
        client.post("/api/accounts", json=enroll_body(gesture=ref))
        edge = translate(ref, 4.0, 0.0)  # both pixels at degree 0.8
        doc = client.post("/api/accounts/alice/login",
                          json={"gesture": gesture_to_dict(edge)}).json()
        assert doc["degree"] == 0.8
        assert doc["accepted"] is True


def test_login_unknown_user_and_bad_gesture(client):
    r = client.post("/api/accounts/ghost/login",
                    json={"gesture": gesture_to_dict(reference_gesture())})
    assert r.status_code == 404
    client.post("/api/accounts", json=enroll_body())
    r2 = client.post("/api/accounts/alice/login", json={"gesture": {"nope": True}})
    assert r2.status_code == 400
    assert r2.json()["error"] == "InvalidGesture"


def test_login_does_not_mutate_profile(client):
    client.post("/api/accounts", json=enroll_body())
    store = client.profile_store
    before = (store.root / "alice" / "profile.json").read_bytes()
    client.post("/api/accounts/alice/login",
                json={"gesture": gesture_to_dict(reference_gesture())})
    assert (store.root / "alice" / "profile.json").read_bytes() == before


def test_login_records_attempt(client):
    client.post("/api/accounts", json=enroll_body())
    client.post("/api/accounts/alice/login",
                json={"gesture": gesture_to_dict(reference_gesture())})
    log = client.profile_store.root / "alice" / "attempts.jsonl"
    assert len(log.read_text().splitlines()) == 1


def test_set_threshold_endpoint(client):
    client.post("/api/accounts", json=enroll_body())
    r = client.put("/api/accounts/alice/threshold", json={"threshold": 0.95})
    assert r.status_code == 200
    assert r.json()["threshold"] == 0.95
    assert forbidden_keys(r.json()) == set()
    assert client.put("/api/accounts/ghost/threshold",
                      json={"threshold": 0.5}).status_code == 404
    bad = client.put("/api/accounts/alice/threshold", json={"threshold": 2})
    assert bad.status_code == 400
    assert bad.json()["error"] == "InvalidThreshold"


def test_new_threshold_applies_to_next_login(client):
    client.post("/api/accounts", json=enroll_body(threshold=0.0))
    # bent redraw: alignment cannot cancel a per-point distortion
    wobbly = single_stroke([(10, 10), (60, 98), (150, 40)], *CANVAS)
    ok = client.post("/api/accounts/alice/login",
                     json={"gesture": gesture_to_dict(wobbly)}).json()
    assert ok["accepted"] is True
    client.put("/api/accounts/alice/threshold", json={"threshold": 1.0})
    strict = client.post("/api/accounts/alice/login",
                         json={"gesture": gesture_to_dict(wobbly)}).json()
    assert strict["accepted"] is False


def test_no_response_ever_contains_reference_gesture(client):
    client.post("/api/accounts", json=enroll_body())
    responses = [
        client.post("/api/accounts", json=enroll_body(username="bob")),
        client.get("/api/accounts/alice/challenge"),
        client.post("/api/accounts/alice/login",
                    json={"gesture": gesture_to_dict(reference_gesture())}),
        client.put("/api/accounts/alice/threshold", json={"threshold": 0.7}),
        client.get("/api/accounts/ghost/challenge"),
    ]
    for r in responses:
        assert forbidden_keys(r.json()) == set()


def test_service_config_file_and_env(tmp_path, monkeypatch):
    cfg = ServiceConfig(store_dir=str(tmp_path / "s"), host="0.0.0.0", port=9001)
    path = tmp_path / "config.json"
    path.write_text(json.dumps(service_config_to_dict(cfg)))
    loaded = load_service_config(path)
    assert loaded == cfg

    monkeypatch.setenv(CONFIG_ENV_VAR, str(path))
    assert load_service_config() == cfg

    monkeypatch.delenv(CONFIG_ENV_VAR)
    assert load_service_config() == ServiceConfig()
