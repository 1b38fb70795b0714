"""File-backed user-profile store with atomic writes.

Layout: one directory per user under the store root, holding ``profile.json``
(threshold, image metadata, and the reference gesture in cleartext) and
``image.bin`` (the enrollment image, treated as opaque bytes). Writes build a
temp directory or temp file and rename it into place, so readers never see a
half-written profile and concurrent enrollments of one username cannot both
succeed.

Reference gestures are deliberately stored unprotected; this store is a
research artifact, not a hardened credential vault.
"""

from __future__ import annotations

import json
import os
import re
import tempfile
import threading
import uuid
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from .errors import (
    DuplicateUsernameError,
    GestureLockError,
    InvalidGestureError,
    InvalidThresholdError,
    StorageFailureError,
    UnknownUserError,
)
from .gestures import Gesture, gesture_from_dict, gesture_to_dict, validate_gesture
from .matching import MatchResult

PROFILE_FILE = "profile.json"
IMAGE_FILE = "image.bin"
ATTEMPTS_FILE = "attempts.jsonl"

_USERNAME_RE = re.compile(r"^[A-Za-z0-9][A-Za-z0-9._-]{0,63}$")


@dataclass
class UserProfile:
    """Stored enrollment record for one user."""

    username: str
    reference_gesture: Gesture
    threshold: float
    image_id: str
    image_width: int
    image_height: int
    created_at: str  # ISO 8601, UTC

    def summary(self) -> dict:
        """Public projection: everything except the reference gesture."""
        return {
            "username": self.username,
            "threshold": self.threshold,
            "image_id": self.image_id,
            "image_width": self.image_width,
            "image_height": self.image_height,
            "created_at": self.created_at,
        }


@dataclass
class LoginAttempt:
    """One login try: who, with what drawing, and how it scored."""

    username: str
    candidate_gesture: Gesture
    result: MatchResult
    attempted_at: str  # ISO 8601, UTC


def profile_to_bytes(profile: UserProfile) -> bytes:
    """Canonical profile.json serialization (stable key order)."""
    doc = {
        "username": profile.username,
        "threshold": profile.threshold,
        "image_id": profile.image_id,
        "image_width": profile.image_width,
        "image_height": profile.image_height,
        "created_at": profile.created_at,
        "reference_gesture": gesture_to_dict(profile.reference_gesture),
    }
    return (json.dumps(doc, sort_keys=True, indent=2) + "\n").encode("utf-8")


def profile_from_bytes(data: bytes) -> UserProfile:
    doc = json.loads(data.decode("utf-8"))
    return UserProfile(
        username=doc["username"],
        reference_gesture=gesture_from_dict(doc["reference_gesture"]),
        threshold=doc["threshold"],
        image_id=doc["image_id"],
        image_width=doc["image_width"],
        image_height=doc["image_height"],
        created_at=doc["created_at"],
    )


def utc_now_iso() -> str:
    return datetime.now(timezone.utc).isoformat()


class ProfileStore:
    """Directory-per-user profile store. Writes are serialized; reads are lock-free."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._write_lock = threading.Lock()

    # -- paths ---------------------------------------------------------------

    def _user_dir(self, username: str) -> Path:
        return self.root / username

    # -- operations ----------------------------------------------------------

    def create_account(self, username: str, image_bytes: bytes, gesture: Gesture,
                       threshold: float, image_width: int, image_height: int) -> UserProfile:
        """Persist a new enrollment atomically; at most one creation per username wins."""
        if not _USERNAME_RE.match(username or ""):
            raise ValueError(f"username must match {_USERNAME_RE.pattern}, got {username!r}")
        _check_threshold(threshold)
        try:
            validate_gesture(gesture)
        except GestureLockError as exc:
            raise InvalidGestureError(str(exc)) from exc
        if (gesture.canvas_width, gesture.canvas_height) != (image_width, image_height):
            raise InvalidGestureError(
                f"gesture canvas {gesture.canvas_width}x{gesture.canvas_height} does not "
                f"match image dimensions {image_width}x{image_height}")

        target = self._user_dir(username)
        if target.exists():
            raise DuplicateUsernameError(f"account {username!r} already exists")

        profile = UserProfile(
            username=username,
            reference_gesture=gesture,
            threshold=threshold,
            image_id=uuid.uuid4().hex,
            image_width=image_width,
            image_height=image_height,
            created_at=utc_now_iso(),
        )
        with self._write_lock:
            tmp = Path(tempfile.mkdtemp(prefix=".enroll-", dir=self.root))
            try:
                (tmp / IMAGE_FILE).write_bytes(image_bytes)
                (tmp / PROFILE_FILE).write_bytes(profile_to_bytes(profile))
                os.rename(tmp, target)
            except OSError as exc:
                _cleanup_dir(tmp)
                if target.exists():
                    raise DuplicateUsernameError(f"account {username!r} already exists") from exc
                raise StorageFailureError(f"could not persist account {username!r}: {exc}") from exc
        return profile

    def get_profile(self, username: str) -> UserProfile:
        path = self._user_dir(username) / PROFILE_FILE
        try:
            return profile_from_bytes(path.read_bytes())
        except FileNotFoundError:
            raise UnknownUserError(f"no account named {username!r}") from None

    def get_image(self, username: str) -> bytes:
        path = self._user_dir(username) / IMAGE_FILE
        try:
            return path.read_bytes()
        except FileNotFoundError:
            raise UnknownUserError(f"no account named {username!r}") from None

    def set_threshold(self, username: str, threshold: float) -> UserProfile:
        """Replace the acceptance threshold; profile file swap is atomic."""
        _check_threshold(threshold)
        with self._write_lock:
            profile = self.get_profile(username)
            profile.threshold = threshold
            path = self._user_dir(username) / PROFILE_FILE
            _atomic_write(path, profile_to_bytes(profile))
        return profile

    def record_attempt(self, attempt: LoginAttempt) -> None:
        """Append one login attempt to the user's attempt log."""
        line = json.dumps({
            "username": attempt.username,
            "attempted_at": attempt.attempted_at,
            "degree": attempt.result.degree,
            "accepted": attempt.result.accepted,
            "offset": {"dx": attempt.result.offset[0], "dy": attempt.result.offset[1]},
            "candidate_gesture": gesture_to_dict(attempt.candidate_gesture),
        }, sort_keys=True)
        path = self._user_dir(attempt.username) / ATTEMPTS_FILE
        with self._write_lock:
            with open(path, "a", encoding="utf-8") as fh:
                fh.write(line + "\n")

    def usernames(self) -> list[str]:
        return sorted(p.name for p in self.root.iterdir()
                      if p.is_dir() and (p / PROFILE_FILE).exists())


def _check_threshold(threshold: float) -> None:
    if not isinstance(threshold, (int, float)) or isinstance(threshold, bool):
        raise InvalidThresholdError(f"threshold must be a number, got {threshold!r}")
    if not 0.0 <= threshold <= 1.0:
        raise InvalidThresholdError(f"threshold must be in [0, 1], got {threshold}")


def _atomic_write(path: Path, data: bytes) -> None:
    fd, tmp_name = tempfile.mkstemp(prefix=".write-", dir=path.parent)
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp_name, path)
    except OSError as exc:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise StorageFailureError(f"could not write {path}: {exc}") from exc


def _cleanup_dir(path: Path) -> None:
    try:
        for child in path.iterdir():
            child.unlink()
        path.rmdir()
    except OSError:
        pass
