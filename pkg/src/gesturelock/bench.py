"""Seeded jitter benchmark: fuzzy vs. crisp acceptance under simulated hand noise.

Each trial perturbs every point of a reference gesture with isotropic Gaussian
noise plus a constant offset (tremor and misplacement), then scores the
perturbed copy with both pipelines. Rates are exact count ratios and the whole
run is reproducible from the seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .crisp import CrispParams
from .gestures import Gesture, TimedPoint
from .matching import MatchConfig, match_gestures, match_gestures_crisp


@dataclass(frozen=True)
class JitterModel:
    """Hand-inaccuracy model: per-point noise sigma, global shift, trial count, seed."""

    sigma: float = 2.0
    shift: tuple[float, float] = (0.0, 0.0)
    trials: int = 100
    rng_seed: int = 0

    def __post_init__(self) -> None:
        if self.sigma < 0:
            raise ValueError(f"sigma must be >= 0, got {self.sigma}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")


@dataclass(frozen=True)
class BenchReport:
    """Acceptance tallies for one benchmark run."""

    trials: int
    fuzzy_accepted: int
    crisp_accepted: int
    fuzzy_accept_rate: float
    crisp_accept_rate: float
    mean_degree: float

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "fuzzy_accept_rate": self.fuzzy_accept_rate,
            "crisp_accept_rate": self.crisp_accept_rate,
            "mean_degree": self.mean_degree,
        }


def perturb(reference: Gesture, rng: np.random.Generator, sigma: float,
            shift: tuple[float, float]) -> Gesture:
    """One noisy redraw of the reference; points are clamped to the canvas."""
    dx, dy = shift
    strokes: list[list[TimedPoint]] = []
    for stroke in reference.strokes:
        noise = rng.normal(0.0, sigma, size=(len(stroke), 2)) if sigma > 0 else \
            np.zeros((len(stroke), 2))
        strokes.append([
            TimedPoint(
                min(max(p.x + nx + dx, 0.0), float(reference.canvas_width)),
                min(max(p.y + ny + dy, 0.0), float(reference.canvas_height)),
                p.t,
            )
            for p, (nx, ny) in zip(stroke, noise)
        ])
    return Gesture(strokes=strokes, canvas_width=reference.canvas_width,
                   canvas_height=reference.canvas_height)


def run_benchmark(reference: Gesture, jitter: JitterModel, match_config: MatchConfig,
                  crisp_params: CrispParams) -> BenchReport:
    """Score ``jitter.trials`` perturbed copies with both pipelines and tally."""
    rng = np.random.default_rng(jitter.rng_seed)
    fuzzy_accepted = 0
    crisp_accepted = 0
    degrees: list[float] = []
    for _ in range(jitter.trials):
        candidate = perturb(reference, rng, jitter.sigma, jitter.shift)
        result = match_gestures(reference, candidate, match_config)
        degrees.append(result.degree)
        if result.accepted:
            fuzzy_accepted += 1
        if match_gestures_crisp(reference, candidate, crisp_params, match_config.resample_n):
            crisp_accepted += 1
    return BenchReport(
        trials=jitter.trials,
        fuzzy_accepted=fuzzy_accepted,
        crisp_accepted=crisp_accepted,
        fuzzy_accept_rate=fuzzy_accepted / jitter.trials,
        crisp_accept_rate=crisp_accepted / jitter.trials,
        mean_degree=math.fsum(degrees) / len(degrees),
    )
