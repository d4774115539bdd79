"""Single-photon temporal wavepackets, their overlaps, and matrix permanents.

A photon's temporal mode is the real Gaussian amplitude

    phi(t) = (2 pi sigma^2)^(-1/4) exp(-(t - tau)^2 / (4 sigma^2))

so that |phi|^2 is a normalized Gaussian of standard deviation ``sigma``.
Carrier phases are dropped, which keeps every overlap real and non-negative.
Photons carrying different ``tag`` values live in orthogonal channels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

MAX_PERMANENT_SIZE = 16
PSD_TOLERANCE = 1e-10


@dataclass(frozen=True)
class Wavepacket:
    """One photon's temporal mode.

    Parameters
    ----------
    tau : float
        Center time.
    sigma : float
        Gaussian temporal width, must be positive.
    tag : int
        Orthogonality channel. Different tags never overlap.
    """

    tau: float = 0.0
    sigma: float = 1.0
    tag: int = 0

    def __post_init__(self):
        if not self.sigma > 0:
            raise ValueError(f"sigma must be positive, got {self.sigma!r}")
        if self.tag < 0:
            raise ValueError(f"tag must be non-negative, got {self.tag!r}")

    def shifted(self, delay: float) -> "Wavepacket":
        return Wavepacket(self.tau + delay, self.sigma, self.tag)

    def amplitude(self, t):
        """Mode function evaluated at time(s) ``t``."""
        t = np.asarray(t, dtype=float)
        norm = (2.0 * math.pi * self.sigma**2) ** -0.25
        return norm * np.exp(-((t - self.tau) ** 2) / (4.0 * self.sigma**2))


def overlap(w1: Wavepacket, w2: Wavepacket) -> float:
    """Inner product of two wavepackets, a real number in [0, 1].

    For widths s1, s2 the Gaussian integral gives

        sqrt(2 s1 s2 / (s1^2 + s2^2)) * exp(-(tau1 - tau2)^2 / (4 (s1^2 + s2^2)))

    which reduces to exp(-(tau1 - tau2)^2 / (8 sigma^2)) for equal widths.
    """
    if not (w1.sigma > 0 and w2.sigma > 0):
        raise ValueError("wavepacket widths must be positive")
    if w1.tag != w2.tag:
        return 0.0
    dt2 = (w1.tau - w2.tau) ** 2
    if w1.sigma == w2.sigma:
        return math.exp(-dt2 / (8.0 * w1.sigma**2))
    ss = w1.sigma**2 + w2.sigma**2
    return math.sqrt(2.0 * w1.sigma * w2.sigma / ss) * math.exp(-dt2 / (4.0 * ss))


def gram(ws: Sequence[Wavepacket]) -> np.ndarray:
    """Matrix of pairwise overlaps, ``G[i, j] = overlap(ws[i], ws[j])``."""
    if len(ws) == 0:
        raise ValueError("gram() needs at least one wavepacket")
    return cross_gram(ws, ws)


def cross_gram(rows: Sequence[Wavepacket], cols: Sequence[Wavepacket]) -> np.ndarray:
    """Rectangular overlap matrix between two wavepacket lists."""
    g = np.empty((len(rows), len(cols)))
    for i, wi in enumerate(rows):
        for j, wj in enumerate(cols):
            g[i, j] = overlap(wi, wj)
    return g


def is_valid_gram(g: np.ndarray, tol: float = PSD_TOLERANCE) -> bool:
    """Check symmetry, unit diagonal, entries in [0, 1] and positive semidefiniteness."""
    g = np.asarray(g, dtype=float)
    if g.ndim != 2 or g.shape[0] != g.shape[1]:
        return False
    if not np.array_equal(g, g.T):
        return False
    if not np.allclose(np.diag(g), 1.0, rtol=0, atol=tol):
        return False
    if g.min() < 0.0 or g.max() > 1.0 + tol:
        return False
    return bool(np.linalg.eigvalsh(g).min() >= -tol)


def permanent(m) -> complex:
    """Permanent of a square matrix via Ryser's formula with Gray-code updates.

    Costs O(2^n n). The empty matrix has permanent 1.
    """
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"permanent needs a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n > MAX_PERMANENT_SIZE:
        raise ValueError(f"matrix too large for permanent: {n} > {MAX_PERMANENT_SIZE}")
    if n == 0:
        return 1.0 + 0.0j
    cols = a.astype(complex).T.tolist()
    row_sums = [0j] * n
    total = 0j
    sign = -1.0  # (-1)^|S| for the current subset, |S| = 1 after the first flip
    in_set = [False] * n
    for k in range(1, 1 << n):
        j = (k & -k).bit_length() - 1
        col = cols[j]
        if in_set[j]:
            in_set[j] = False
            for i in range(n):
                row_sums[i] -= col[i]
        else:
            in_set[j] = True
            for i in range(n):
                row_sums[i] += col[i]
        prod = row_sums[0]
        for i in range(1, n):
            prod *= row_sums[i]
        total += sign * prod
        sign = -sign
    return complex(total * (-1) ** n)
