"""Full service round trip over HTTP: enroll, fetch challenge, log in.

Starts the service in a background thread on a local port, creates an
account with a threshold of 0.8, then tries three logins: an exact redraw,
a shifted-but-identical redraw (rescued by alignment), and a sloppy one.
"""

import base64
import json
import socket
import tempfile
import threading
import time
import urllib.request

import uvicorn

from gesturelock import MatchConfig, ProfileStore, gesture_to_dict, single_stroke, translate
from gesturelock.service import create_app

# -- start the service -------------------------------------------------------

with socket.socket() as s:
    s.bind(("127.0.0.1", 0))
    port = s.getsockname()[1]

store = ProfileStore(tempfile.mkdtemp(prefix="gesturelock-demo-"))
app = create_app(store, MatchConfig())
server = uvicorn.Server(uvicorn.Config(app, host="127.0.0.1", port=port, log_level="error"))
threading.Thread(target=server.run, daemon=True).start()
base = f"http://127.0.0.1:{port}"
for _ in range(100):
    if server.started:
        break
    time.sleep(0.05)


def call(method, path, payload=None):
    data = json.dumps(payload).encode() if payload is not None else None
    req = urllib.request.Request(base + path, data=data, method=method,
                                 headers={"Content-Type": "application/json"})
    try:
        with urllib.request.urlopen(req) as resp:
            return resp.status, json.loads(resp.read())
    except urllib.error.HTTPError as err:
        return err.code, json.loads(err.read())


# -- enroll -------------------------------------------------------------------

password = single_stroke([(100, 400), (250, 120), (400, 380), (550, 100)], 640, 480)
status, summary = call("POST", "/api/accounts", {
    "username": "dana",
    "threshold": 0.8,
    "image_base64": base64.b64encode(b"demo image bytes").decode(),
    "image_width": 640,
    "image_height": 480,
    "gesture": gesture_to_dict(password),
})
print(f"enroll -> {status}: stored threshold {summary['threshold']}, "
      f"image {summary['image_width']}x{summary['image_height']}")

status, challenge = call("GET", "/api/accounts/dana/challenge")
print(f"challenge -> {status}: image id {challenge['image_id'][:8]}..., "
      f"no gesture data in the response: {'strokes' not in json.dumps(challenge)}")

# -- three login attempts -------------------------------------------------------

attempts = {
    "exact redraw": password,
    "shifted 15px right": translate(password, 15, 0),
    "sloppy redraw": single_stroke([(110, 430), (240, 170), (390, 420), (560, 140)], 640, 480),
}
for label, attempt in attempts.items():
    status, verdict = call("POST", "/api/accounts/dana/login",
                           {"gesture": gesture_to_dict(attempt)})
    print(f"login ({label}) -> degree {verdict['degree']:.3f}, "
          f"offset ({verdict['offset']['dx']:+.0f}, {verdict['offset']['dy']:+.0f}), "
          f"{'ACCEPTED' if verdict['accepted'] else 'REJECTED'}")

# -- tighten the threshold and retry the sloppy one ------------------------------

call("PUT", "/api/accounts/dana/threshold", {"threshold": 0.99})
status, verdict = call("POST", "/api/accounts/dana/login",
                       {"gesture": gesture_to_dict(attempts["sloppy redraw"])})
print(f"after raising threshold to 0.99, sloppy redraw -> "
      f"{'ACCEPTED' if verdict['accepted'] else 'REJECTED'} at degree {verdict['degree']:.3f}")

server.should_exit = True
