"""Command-line front end.

Subcommands:
  match   score a candidate gesture file against a reference gesture file
  space   theoretical password-space count for a click-point scheme
  grid    bounding-box grid encoding of a gesture file
  bench   seeded fuzzy-vs-crisp jitter benchmark
  serve   run the HTTP enrollment/login service

Exit codes: 0 success (for ``match``: accepted), 1 rejected match, 2 error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from .align import AlignmentParams
from .bench import JitterModel, run_benchmark
from .crisp import SHAPES, CrispParams, GridSpec, grid_encode, password_space
from .errors import GestureLockError
from .gestures import Gesture, gesture_from_dict, validate_gesture
from .matching import MatchConfig, match_config_from_dict, match_gestures

EXIT_ACCEPTED = 0
EXIT_REJECTED = 1
EXIT_ERROR = 2

# Click-point scheme defaults: tolerance-square side and clicks per password.
DEFAULT_SPACE_TOLERANCE = 19
DEFAULT_SPACE_CLICKS = 5


def _load_gesture(path: str) -> Gesture:
    gesture = gesture_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
    validate_gesture(gesture)
    return gesture


def _load_match_config(path: str | None, threshold: float | None) -> MatchConfig:
    if path is not None:
        config = match_config_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
    else:
        config = MatchConfig()
    if threshold is not None:
        config = config.with_threshold(threshold)
    return config


def _cmd_match(args: argparse.Namespace) -> int:
    reference = _load_gesture(args.reference)
    candidate = _load_gesture(args.candidate)
    config = _load_match_config(args.config, args.threshold)
    result = match_gestures(reference, candidate, config)
    print(json.dumps(result.to_dict()))
    return EXIT_ACCEPTED if result.accepted else EXIT_REJECTED


def _cmd_space(args: argparse.Namespace) -> int:
    print(password_space(args.width, args.height, args.tolerance, args.clicks))
    return 0


def _cmd_grid(args: argparse.Namespace) -> int:
    gesture = _load_gesture(args.gesture)
    cells = grid_encode(gesture, GridSpec(rows=args.rows, cols=args.cols))
    print(",".join(str(c) for c in cells))
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    reference = _load_gesture(args.reference)
    config = _load_match_config(args.config, args.threshold)
    if args.max_shift is not None:
        config = replace(config, alignment=replace(config.alignment, max_shift=args.max_shift))
    jitter = JitterModel(sigma=args.sigma, shift=(args.shift_x, args.shift_y),
                         trials=args.trials, rng_seed=args.seed)
    crisp = CrispParams(tolerance=args.crisp_tolerance, shape=args.crisp_shape)
    report = run_benchmark(reference, jitter, config, crisp)
    print(json.dumps(report.to_dict()))
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app_from_config, load_service_config

    config = load_service_config(args.config)
    app = create_app_from_config(config)
    uvicorn.run(app, host=args.host or config.host, port=args.port or config.port,
                log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gesturelock",
                                     description="Fuzzy gesture matching toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p_match = sub.add_parser("match", help="score candidate against reference")
    p_match.add_argument("reference", help="reference gesture JSON file")
    p_match.add_argument("candidate", help="candidate gesture JSON file")
    p_match.add_argument("--config", help="match config JSON file")
    p_match.add_argument("--threshold", type=float, help="override acceptance threshold")
    p_match.set_defaults(func=_cmd_match)

    p_space = sub.add_parser("space", help="password-space count (floor(w*h/t^2)^c)")
    p_space.add_argument("width", type=int)
    p_space.add_argument("height", type=int)
    p_space.add_argument("tolerance", type=int, nargs="?", default=DEFAULT_SPACE_TOLERANCE)
    p_space.add_argument("clicks", type=int, nargs="?", default=DEFAULT_SPACE_CLICKS)
    p_space.set_defaults(func=_cmd_space)

    p_grid = sub.add_parser("grid", help="grid-cell encoding of a gesture")
    p_grid.add_argument("gesture", help="gesture JSON file")
    p_grid.add_argument("rows", type=int)
    p_grid.add_argument("cols", type=int)
    p_grid.set_defaults(func=_cmd_grid)

    p_bench = sub.add_parser("bench", help="fuzzy vs crisp acceptance under jitter")
    p_bench.add_argument("reference", help="reference gesture JSON file")
    p_bench.add_argument("--trials", type=int, default=100)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--sigma", type=float, default=2.0)
    p_bench.add_argument("--shift-x", type=float, default=0.0)
    p_bench.add_argument("--shift-y", type=float, default=0.0)
    p_bench.add_argument("--config", help="match config JSON file")
    p_bench.add_argument("--threshold", type=float, help="override acceptance threshold")
    p_bench.add_argument("--max-shift", type=float,
                         help="override alignment clamp (0 disables alignment)")
    p_bench.add_argument("--crisp-tolerance", type=float, default=10.0)
    p_bench.add_argument("--crisp-shape", choices=SHAPES, default="square")
    p_bench.set_defaults(func=_cmd_bench)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--config", help="service config JSON file (or $GESTURELOCK_CONFIG)")
    p_serve.add_argument("--host", help="override listen host")
    p_serve.add_argument("--port", type=int, help="override listen port")
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GestureLockError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
