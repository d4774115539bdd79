"""Multi-photon interference at a two-port beam splitter.

Beam-splitter convention (symmetric, ``i`` on both cross terms)::

    a^dag(phi) -> sqrt(T) c^dag(phi) + i sqrt(R) d^dag(phi)
    b^dag(psi) -> i sqrt(R) c^dag(psi) + sqrt(T) d^dag(psi)

Every photon is routed independently to ``c`` or ``d``. The probability of
finding ``p`` photons in ``c`` is a double sum over pairs of routings with
``p`` photons in ``c``; each pair contributes the product of the two routing
amplitudes and two permanents of cross-Gram matrices (one per output port).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .temporal_modes import Wavepacket, cross_gram, gram, permanent

MAX_PHOTONS = 8
# eigenvalues of the (PSD) pattern weight matrix below this fraction of the largest are rounding noise
EIG_CUTOFF = 1e-13

Pattern = Tuple[int, int]


class PhotonCapError(ValueError):
    """Raised when an input exceeds the supported photon count."""


@dataclass(frozen=True)
class BeamSplitter:
    """Lossless beam splitter with intensity transmissivity ``T``."""

    T: float

    def __post_init__(self):
        if not 0.0 < self.T < 1.0:
            raise ValueError(f"transmissivity must lie in (0, 1), got {self.T!r}")

    @property
    def R(self) -> float:
        return 1.0 - self.T

    def swapped(self) -> "BeamSplitter":
        return BeamSplitter(1.0 - self.T)


def bs_from_t(T: float) -> BeamSplitter:
    return BeamSplitter(float(T))


def bs_from_hwp_angle(theta_deg: float) -> BeamSplitter:
    """Beam splitter built from a half-wave plate at ``theta_deg`` followed by a PBS.

    The plate rotates linear polarization by twice its angle, so the
    transmitted fraction is cos^2(2 theta).
    """
    T = math.cos(2.0 * math.radians(theta_deg)) ** 2
    if not 1e-15 < T < 1.0 - 1e-15:
        raise ValueError(f"HWP angle {theta_deg} deg gives a degenerate splitter (T={T:.3g})")
    return BeamSplitter(T)


@dataclass(frozen=True)
class InputState:
    """Product of single-photon wavepackets at input ports ``a`` and ``b``."""

    port_a: Tuple[Wavepacket, ...] = ()
    port_b: Tuple[Wavepacket, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "port_a", tuple(self.port_a))
        object.__setattr__(self, "port_b", tuple(self.port_b))

    @property
    def m(self) -> int:
        return len(self.port_a)

    @property
    def n(self) -> int:
        return len(self.port_b)

    @property
    def total(self) -> int:
        return self.m + self.n

    def swapped(self) -> "InputState":
        return InputState(self.port_b, self.port_a)

    @classmethod
    def identical(cls, m: int, n: int) -> "InputState":
        w = Wavepacket()
        return cls((w,) * m, (w,) * n)


@dataclass
class OutcomeDistribution:
    """Output photon-number distribution, ``probs[(p, q)]`` with ``p`` photons at port c."""

    total: int
    probs: Dict[Pattern, float]
    raw: Dict[Pattern, float] = field(default_factory=dict, repr=False)

    def __getitem__(self, pattern: Pattern) -> float:
        return self.probs[tuple(pattern)]

    def as_array(self) -> np.ndarray:
        """Probabilities ordered by ``p`` descending, i.e. (total, 0) first."""
        return np.array([self.probs[(p, self.total - p)] for p in range(self.total, -1, -1)])

    def tvd(self, other: "OutcomeDistribution") -> float:
        keys = set(self.probs) | set(other.probs)
        return 0.5 * sum(abs(self.probs.get(k, 0.0) - other.probs.get(k, 0.0)) for k in keys)


def check_cap(state: InputState, cap: int = MAX_PHOTONS) -> None:
    if state.total < 1:
        raise PhotonCapError("input state has no photons")
    if state.total > cap:
        raise PhotonCapError(f"{state.total} photons exceeds the cap of {cap}")


def _routing_amplitude(bs: BeamSplitter, m: int, n: int, s: int, u: int) -> complex:
    """Amplitude of sending ``s`` of the port-a photons and ``u`` of the port-b photons to c."""
    t, r = math.sqrt(bs.T), 1j * math.sqrt(bs.R)
    return t**s * r ** (m - s) * r**u * t ** (n - u)


def _routings(m: int, n: int, p: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...], int]]:
    """All (c-photons, d-photons, |S|) splits with ``p`` photons at port c.

    Photons are indexed 0..m-1 for port a, m..m+n-1 for port b.
    """
    out = []
    everyone = range(m + n)
    for s in range(max(0, p - n), min(m, p) + 1):
        for sa in combinations(range(m), s):
            for sb in combinations(range(m, m + n), p - s):
                to_c = sa + sb
                chosen = set(to_c)
                to_d = tuple(k for k in everyone if k not in chosen)
                out.append((to_c, to_d, s))
    return out


def pattern_weights(state: InputState, p: int) -> np.ndarray:
    """Transmissivity-independent part of P(p, q).

    Returns ``W`` with ``W[s1, s2]`` the sum of c- and d-port permanent
    products over routing pairs that send ``s1`` (``s2``) port-a photons to c.
    The result is not yet divided by the input normalization.
    """
    m, n = state.m, state.n
    photons = state.port_a + state.port_b
    g = cross_gram(photons, photons)
    routes = _routings(m, n, p)
    w = np.zeros((m + 1, m + 1))
    for c1, d1, s1 in routes:
        for c2, d2, s2 in routes:
            pc = permanent(g[np.ix_(c1, c2)]).real
            pd = permanent(g[np.ix_(d1, d2)]).real
            w[s1, s2] += pc * pd
    return w


def input_norm(state: InputState) -> float:
    norm = 1.0
    if state.m:
        norm *= permanent(gram(state.port_a)).real
    if state.n:
        norm *= permanent(gram(state.port_b)).real
    return norm


def _evaluate(weights: np.ndarray, state: InputState, bs: BeamSplitter, p: int) -> float:
    m, n = state.m, state.n
    amps = np.zeros(m + 1, dtype=complex)
    for s in range(max(0, p - n), min(m, p) + 1):
        amps[s] = _routing_amplitude(bs, m, n, s, p - s)
    return float(np.real(amps @ weights @ amps.conj()))


def _clamp(x: float) -> float:
    return min(1.0, max(0.0, x))


def prob_pattern(state: InputState, bs: BeamSplitter, p: int, q: int) -> float:
    """Probability of ``p`` photons at output c and ``q`` at output d."""
    check_cap(state)
    if p < 0 or q < 0 or p + q != state.total:
        raise ValueError(f"pattern ({p}, {q}) does not match {state.total} input photons")
    raw = _evaluate(pattern_weights(state, p), state, bs, p) / input_norm(state)
    return _clamp(raw)


def output_distribution(state: InputState, bs: BeamSplitter) -> OutcomeDistribution:
    """Exact output distribution over all patterns (p, q) with p + q = total."""
    check_cap(state)
    norm = input_norm(state)
    probs, raw = {}, {}
    for p in range(state.total, -1, -1):
        pat = (p, state.total - p)
        raw[pat] = _evaluate(pattern_weights(state, p), state, bs, p) / norm
        probs[pat] = _clamp(raw[pat])
    return OutcomeDistribution(state.total, probs, raw)


def pattern_curve(state: InputState, p: int):
    """Return ``f(T)`` giving P(p, total - p) on arrays of transmissivities.

    The permanents are computed once; only the routing amplitudes depend on T.
    The weight matrix is PSD, so the quadratic form is evaluated as a sum of
    squared projections onto its eigenvectors. Near a zero of P this keeps
    the rounding floor at ~1e-32 instead of ~1e-17, which is what lets a
    minimum search pin the zero down to 1e-12 in T.
    """
    check_cap(state)
    m, n = state.m, state.n
    if p < 0 or p > state.total:
        raise ValueError(f"pattern ({p}, {state.total - p}) is impossible")
    weights = pattern_weights(state, p) / input_norm(state)
    lam, vecs = np.linalg.eigh(weights)
    keep = lam > EIG_CUTOFF * max(lam.max(), 0.0)
    lam, vecs = lam[keep], vecs[:, keep]
    s_range = range(max(0, p - n), min(m, p) + 1)

    def curve(T):
        T = np.asarray(T, dtype=float)
        t, r = np.sqrt(T), 1j * np.sqrt(1.0 - T)
        amps = np.zeros((m + 1,) + T.shape, dtype=complex)
        for s in s_range:
            u = p - s
            amps[s] = t**s * r ** (m - s) * r**u * t ** (n - u)
        proj = np.tensordot(vecs.T, amps, axes=1)
        return np.clip(np.tensordot(lam, np.abs(proj) ** 2, axes=1), 0.0, 1.0)

    return curve


def prob_curve(state: InputState, p: int, T: Sequence[float]) -> np.ndarray:
    """P(p, total - p) evaluated on an array of transmissivities."""
    return pattern_curve(state, p)(T)
