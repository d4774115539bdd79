"""Generalized Hong-Ou-Mandel interference of partially distinguishable photons."""

from .analysis import (
    DipScan,
    ScanSpec,
    ZeroBaselineError,
    delay_scan,
    null_transmissivity,
    theoretical_visibility,
    visibility,
)
from .interferometer import (
    BeamSplitter,
    InputState,
    OutcomeDistribution,
    PhotonCapError,
    bs_from_hwp_angle,
    bs_from_t,
    output_distribution,
    prob_curve,
    prob_pattern,
)
from .oracle import oracle_distribution, orthonormal_basis
from .temporal_modes import Wavepacket, cross_gram, gram, overlap, permanent

__all__ = [
    "BeamSplitter",
    "DipScan",
    "InputState",
    "OutcomeDistribution",
    "PhotonCapError",
    "ScanSpec",
    "Wavepacket",
    "ZeroBaselineError",
    "bs_from_hwp_angle",
    "bs_from_t",
    "cross_gram",
    "delay_scan",
    "gram",
    "null_transmissivity",
    "oracle_distribution",
    "orthonormal_basis",
    "output_distribution",
    "overlap",
    "permanent",
    "prob_curve",
    "prob_pattern",
    "theoretical_visibility",
    "visibility",
]

__version__ = "0.1.0"
