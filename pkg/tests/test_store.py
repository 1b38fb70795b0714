import json
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest

from gesturelock import (
    DuplicateUsernameError,
    InvalidGestureError,
    InvalidThresholdError,
    ProfileStore,
    UnknownUserError,
    single_stroke,
)
from gesturelock.store import LoginAttempt, profile_from_bytes, profile_to_bytes, utc_now_iso
from gesturelock import MatchConfig, match_gestures
from support import random_gesture


@pytest.fixture
def store(tmp_path):
    return ProfileStore(tmp_path / "profiles")


def enroll(store, username="alice", threshold=0.8, canvas=(200, 150)):
    g = single_stroke([(10, 10), (60, 90), (150, 40)], *canvas)
    return store.create_account(username, b"fake-image-bytes", g, threshold,
                                canvas[0], canvas[1])


def test_create_and_reload(store):
    created = enroll(store)
    loaded = store.get_profile("alice")
    assert loaded == created
    assert store.get_image("alice") == b"fake-image-bytes"


def test_profile_file_bytes_round_trip(store, tmp_path):
    enroll(store)
    raw = (store.root / "alice" / "profile.json").read_bytes()
    assert profile_to_bytes(profile_from_bytes(raw)) == raw


def test_many_random_profiles_round_trip_byte_identical(store):
    rng = np.random.default_rng(13)
    for i in range(30):
        name = f"user{i}"
        g = random_gesture(rng, n_points=int(rng.integers(2, 20)))
        store.create_account(name, bytes(rng.integers(0, 256, size=64, dtype=np.uint8)),
                             g, float(rng.uniform(0, 1)), g.canvas_width, g.canvas_height)
        raw = (store.root / name / "profile.json").read_bytes()
        assert profile_to_bytes(profile_from_bytes(raw)) == raw


def test_duplicate_username_rejected(store):
    enroll(store)
    with pytest.raises(DuplicateUsernameError):
        enroll(store)


def test_threshold_range_enforced(store):
    with pytest.raises(InvalidThresholdError):
        enroll(store, username="bob", threshold=1.5)
    with pytest.raises(InvalidThresholdError):
        enroll(store, username="bob", threshold=-0.1)
    enroll(store, username="edge0", threshold=0.0)
    enroll(store, username="edge1", threshold=1.0)


def test_invalid_gesture_rejected(store):
    bad = single_stroke([(-5, 10)], 100, 100)
    with pytest.raises(InvalidGestureError):
        store.create_account("carol", b"img", bad, 0.8, 100, 100)


def test_gesture_canvas_must_match_image_dims(store):
    g = single_stroke([(10, 10)], 100, 100)
    with pytest.raises(InvalidGestureError):
        store.create_account("carol", b"img", g, 0.8, 200, 150)


def test_unsafe_username_rejected(store):
    g = single_stroke([(10, 10)], 100, 100)
    for name in ("", "../evil", "a/b", ".hidden", "x" * 80):
        with pytest.raises(ValueError):
            store.create_account(name, b"img", g, 0.8, 100, 100)


def test_set_threshold_read_your_writes(store):
    enroll(store, threshold=0.8)
    updated = store.set_threshold("alice", 0.9)
    assert updated.threshold == 0.9
    assert store.get_profile("alice").threshold == 0.9


def test_set_threshold_errors(store):
    enroll(store)
    with pytest.raises(UnknownUserError):
        store.set_threshold("nobody", 0.5)
    with pytest.raises(InvalidThresholdError):
        store.set_threshold("alice", -0.1)


def test_unknown_user_lookups(store):
    with pytest.raises(UnknownUserError):
        store.get_profile("ghost")
    with pytest.raises(UnknownUserError):
        store.get_image("ghost")


def test_usernames_listing(store):
    enroll(store, username="alice")
    enroll(store, username="bob")
    assert store.usernames() == ["alice", "bob"]


def test_record_attempt_appends_jsonl(store):
    profile = enroll(store)
    result = match_gestures(profile.reference_gesture, profile.reference_gesture,
                            MatchConfig())
    for _ in range(3):
        store.record_attempt(LoginAttempt("alice", profile.reference_gesture, result,
                                          utc_now_iso()))
    lines = (store.root / "alice" / "attempts.jsonl").read_text().splitlines()
    assert len(lines) == 3
    entry = json.loads(lines[0])
    assert entry["username"] == "alice"
    assert entry["accepted"] is True


def test_concurrent_creates_one_winner(tmp_path):
    store = ProfileStore(tmp_path / "p")
    g = single_stroke([(10, 10), (20, 20)], 100, 100)

    def attempt(_):
        try:
            store.create_account("race", b"img", g, 0.8, 100, 100)
            return 1
        except DuplicateUsernameError:
            return 0

    with ThreadPoolExecutor(max_workers=8) as pool:
        wins = sum(pool.map(attempt, range(16)))
    assert wins == 1
    assert store.get_profile("race").username == "race"
