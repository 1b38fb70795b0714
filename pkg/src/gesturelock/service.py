"""HTTP/JSON enrollment and login service.

Endpoints:
  POST /api/accounts                       enroll (username, image, gesture, threshold)
  GET  /api/accounts/{username}/challenge  fetch the enrollment image to draw over
  POST /api/accounts/{username}/login      score a drawn gesture, get the verdict
  PUT  /api/accounts/{username}/threshold  change the acceptance threshold

Request bodies are parsed by hand so malformed input consistently yields 400
with an error code, and so no response can ever echo the stored reference
gesture. The matching degree IS returned on failed logins — deliberate,
user-facing feedback for redrawing, and a documented information leak.
"""

from __future__ import annotations

import base64
import binascii
import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .errors import (
    DuplicateUsernameError,
    GestureLockError,
    InvalidGestureError,
    InvalidThresholdError,
    StorageFailureError,
    UnknownUserError,
)
from .gestures import Gesture, gesture_from_dict, validate_gesture
from .matching import MatchConfig, match_config_from_dict, match_config_to_dict, match_gestures
from .store import LoginAttempt, ProfileStore, utc_now_iso

CONFIG_ENV_VAR = "GESTURELOCK_CONFIG"

DEFAULT_STORE_DIR = "profiles"
DEFAULT_HOST = "127.0.0.1"
DEFAULT_PORT = 8000


@dataclass(frozen=True)
class ServiceConfig:
    """Matching policy plus where profiles live and where to listen."""

    match_config: MatchConfig = field(default_factory=MatchConfig)
    store_dir: str = DEFAULT_STORE_DIR
    host: str = DEFAULT_HOST
    port: int = DEFAULT_PORT


def load_service_config(path: str | Path | None = None) -> ServiceConfig:
    """Read the JSON config file; falls back to $GESTURELOCK_CONFIG, then defaults."""
    if path is None:
        path = os.environ.get(CONFIG_ENV_VAR)
    if path is None:
        return ServiceConfig()
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    return ServiceConfig(
        match_config=match_config_from_dict(doc["match_config"]),
        store_dir=doc.get("store_dir", DEFAULT_STORE_DIR),
        host=doc.get("host", DEFAULT_HOST),
        port=doc.get("port", DEFAULT_PORT),
    )


def service_config_to_dict(config: ServiceConfig) -> dict:
    return {
        "match_config": match_config_to_dict(config.match_config),
        "store_dir": config.store_dir,
        "host": config.host,
        "port": config.port,
    }


class _BadRequest(Exception):
    def __init__(self, error: str, detail: str):
        super().__init__(detail)
        self.error = error
        self.detail = detail


def _error(status: int, error: str, detail: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": error, "detail": detail})


async def _json_body(request: Request) -> dict:
    try:
        body = await request.json()
    except Exception:
        raise _BadRequest("InvalidRequest", "request body is not valid JSON") from None
    if not isinstance(body, dict):
        raise _BadRequest("InvalidRequest", "request body must be a JSON object")
    return body


def _require(body: dict, key: str, kinds: tuple[type, ...], kind_name: str):
    if key not in body:
        raise _BadRequest("InvalidRequest", f"missing field {key!r}")
    value = body[key]
    if isinstance(value, bool) or not isinstance(value, kinds):
        raise _BadRequest("InvalidRequest", f"field {key!r} must be {kind_name}")
    return value


def _parse_gesture(raw) -> Gesture:
    try:
        gesture = gesture_from_dict(raw)
        validate_gesture(gesture)
    except (ValueError, GestureLockError) as exc:
        raise _BadRequest("InvalidGesture", str(exc)) from None
    return gesture


def create_app(store: ProfileStore, match_config: MatchConfig | None = None) -> FastAPI:
    """Wire the four endpoints around a profile store and a matching policy."""
    config = match_config if match_config is not None else MatchConfig()
    app = FastAPI(title="gesturelock", docs_url=None, redoc_url=None)
    # the browser front end is served from its own origin
    app.add_middleware(CORSMiddleware, allow_origins=["*"], allow_methods=["*"],
                       allow_headers=["*"])

    @app.exception_handler(_BadRequest)
    async def _bad_request_handler(_request, exc: _BadRequest):
        return _error(400, exc.error, exc.detail)

    @app.post("/api/accounts")
    async def create_account(request: Request):
        body = await _json_body(request)
        username = _require(body, "username", (str,), "a string")
        threshold = _require(body, "threshold", (int, float), "a number")
        image_b64 = _require(body, "image_base64", (str,), "a string")
        image_width = _require(body, "image_width", (int,), "an integer")
        image_height = _require(body, "image_height", (int,), "an integer")
        if image_width <= 0 or image_height <= 0:
            raise _BadRequest("InvalidRequest", "image dimensions must be positive")
        try:
            image_bytes = base64.b64decode(image_b64, validate=True)
        except (binascii.Error, ValueError):
            raise _BadRequest("InvalidRequest", "image_base64 is not valid base64") from None
        gesture = _parse_gesture(body.get("gesture"))
        try:
            profile = store.create_account(username, image_bytes, gesture, threshold,
                                           image_width, image_height)
        except DuplicateUsernameError as exc:
            return _error(409, "DuplicateUsername", str(exc))
        except InvalidThresholdError as exc:
            return _error(400, "InvalidThreshold", str(exc))
        except InvalidGestureError as exc:
            return _error(400, "InvalidGesture", str(exc))
        except ValueError as exc:
            return _error(400, "InvalidRequest", str(exc))
        except StorageFailureError as exc:
            return _error(500, "StorageFailure", str(exc))
        return JSONResponse(status_code=201, content=profile.summary())

    @app.get("/api/accounts/{username}/challenge")
    async def get_challenge(username: str):
        try:
            profile = store.get_profile(username)
            image_bytes = store.get_image(username)
        except UnknownUserError as exc:
            return _error(404, "UnknownUser", str(exc))
        return JSONResponse(status_code=200, content={
            "image_id": profile.image_id,
            "image_base64": base64.b64encode(image_bytes).decode("ascii"),
            "image_width": profile.image_width,
            "image_height": profile.image_height,
        })

    @app.post("/api/accounts/{username}/login")
    async def login(username: str, request: Request):
        body = await _json_body(request)
        candidate = _parse_gesture(body.get("gesture"))
        try:
            profile = store.get_profile(username)
        except UnknownUserError as exc:
            return _error(404, "UnknownUser", str(exc))
        result = match_gestures(profile.reference_gesture, candidate,
                                config.with_threshold(profile.threshold))
        store.record_attempt(LoginAttempt(username=username, candidate_gesture=candidate,
                                          result=result, attempted_at=utc_now_iso()))
        return JSONResponse(status_code=200, content=result.to_dict())

    @app.put("/api/accounts/{username}/threshold")
    async def set_threshold(username: str, request: Request):
        body = await _json_body(request)
        threshold = _require(body, "threshold", (int, float), "a number")
        try:
            profile = store.set_threshold(username, threshold)
        except UnknownUserError as exc:
            return _error(404, "UnknownUser", str(exc))
        except InvalidThresholdError as exc:
            return _error(400, "InvalidThreshold", str(exc))
        return JSONResponse(status_code=200, content=profile.summary())

    return app


def create_app_from_config(config: ServiceConfig) -> FastAPI:
    return create_app(ProfileStore(config.store_dir), config.match_config)
