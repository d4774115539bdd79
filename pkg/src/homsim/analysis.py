"""Delay scans, dip visibilities, and null-transmissivity search."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from .interferometer import (
    MAX_PHOTONS,
    BeamSplitter,
    InputState,
    PhotonCapError,
    check_cap,
    pattern_curve,
    prob_pattern,
)
from .temporal_modes import Wavepacket

NULL_TOL = 1e-9
GRID_POINTS = 10_000
REFINE_WIDTH = 1e-12


class ZeroBaselineError(ValueError):
    """The monitored pattern has zero probability even without interference."""

    def __init__(self):
        super().__init__("zero baseline: visibility undefined")


@dataclass(frozen=True)
class ScanSpec:
    base_input: InputState
    scanned_port: str
    delays: Tuple[float, ...]
    bs: BeamSplitter
    pattern: Tuple[int, int]

    def __post_init__(self):
        if self.scanned_port not in ("a", "b"):
            raise ValueError(f"scanned_port must be 'a' or 'b', got {self.scanned_port!r}")
        delays = tuple(float(d) for d in self.delays)
        if not delays:
            raise ValueError("delays must be non-empty")
        if any(d2 <= d1 for d1, d2 in zip(delays, delays[1:])):
            raise ValueError("delays must be strictly increasing")
        object.__setattr__(self, "delays", delays)
        object.__setattr__(self, "pattern", tuple(self.pattern))


@dataclass
class DipScan:
    delays: np.ndarray
    probs: np.ndarray
    baseline: float
    visibility: float

    def local_minima(self) -> np.ndarray:
        """Delays of strict interior local minima of the scanned curve."""
        p = self.probs
        idx = [i for i in range(1, len(p) - 1) if p[i] < p[i - 1] and p[i] < p[i + 1]]
        return self.delays[idx]


def _shift_port(state: InputState, port: str, delay: float) -> InputState:
    if port == "a":
        return InputState(tuple(w.shifted(delay) for w in state.port_a), state.port_b)
    return InputState(state.port_a, tuple(w.shifted(delay) for w in state.port_b))


def _retag_port(state: InputState, port: str) -> InputState:
    """Move the scanned photons to a tag nobody else uses: the infinite-delay limit."""
    fresh = max(w.tag for w in state.port_a + state.port_b) + 1

    def retag(ws):
        return tuple(Wavepacket(w.tau, w.sigma, fresh) for w in ws)

    if port == "a":
        return InputState(retag(state.port_a), state.port_b)
    return InputState(state.port_a, retag(state.port_b))


def visibility(scan: DipScan) -> float:
    """Fractional dip depth relative to the distinguishable-limit baseline."""
    if not scan.baseline > 0:
        raise ZeroBaselineError()
    return float((scan.baseline - np.min(scan.probs)) / scan.baseline)


def delay_scan(spec: ScanSpec) -> DipScan:
    state, port = spec.base_input, spec.scanned_port
    check_cap(state)
    p, q = spec.pattern
    baseline = prob_pattern(_retag_port(state, port), spec.bs, p, q)
    probs = np.array(
        [prob_pattern(_shift_port(state, port, d), spec.bs, p, q) for d in spec.delays]
    )
    scan = DipScan(np.array(spec.delays), probs, baseline, float("nan"))
    scan.visibility = visibility(scan)
    return scan


def theoretical_visibility(p: int, N: int) -> float:
    """Dip visibility when ``p`` of ``N`` photons match the lone photon."""
    if N < 1 or p < 0 or p > N:
        raise ValueError(f"need 0 <= p <= N and N >= 1, got p={p}, N={N}")
    return p / N


def _ternary_min(f, lo: float, hi: float, width: float = REFINE_WIDTH) -> float:
    while hi - lo > width:
        a = lo + (hi - lo) / 3.0
        b = hi - (hi - lo) / 3.0
        if f(a) < f(b):
            hi = b
        else:
            lo = a
    return 0.5 * (lo + hi)


def null_transmissivity(m: int, n: int, tol: float = NULL_TOL) -> List[float]:
    """Transmissivities at which identical photons |m, n> never exit as (m, n).

    Dense grid over (0, 1), then ternary refinement of every local minimum.
    """
    if m < 0 or n < 0:
        raise ValueError("photon numbers must be non-negative")
    if m + n > MAX_PHOTONS:
        raise PhotonCapError(f"{m + n} photons exceeds the cap of {MAX_PHOTONS}")
    state = InputState.identical(m, n)
    check_cap(state)

    curve = pattern_curve(state, m)
    grid = np.linspace(0.0, 1.0, GRID_POINTS + 2)[1:-1]
    vals = curve(grid)

    def f(T: float) -> float:
        return float(curve(T))

    roots: List[float] = []
    for i in range(1, len(grid) - 1):
        if vals[i] <= vals[i - 1] and vals[i] <= vals[i + 1]:
            T0 = _ternary_min(f, grid[i - 1], grid[i + 1])
            if f(T0) >= tol:
                continue
            if roots and abs(T0 - roots[-1]) < 1e-9:
                continue
            roots.append(float(T0))
    return sorted(roots)


def dip_profile_hom(delays: Sequence[float], sigma: float = 1.0) -> np.ndarray:
    """Closed-form P(1,1) for |1,1> at T = 1/2 with equal-width Gaussians."""
    d = np.asarray(delays, dtype=float)
    return 0.5 * (1.0 - np.exp(-(d**2) / (4.0 * sigma**2)))
