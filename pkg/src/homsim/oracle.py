"""Brute-force reference engine for the output distribution.

Shares nothing with the permanent-based path except the pairwise overlap.
The wavepackets are orthonormalized into a small internal basis, the input is
expanded as a polynomial in creation operators over (output port, basis
index) modes, and the Fock amplitudes are read off monomial by monomial.
"""

from __future__ import annotations

import math
from collections import defaultdict
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .interferometer import BeamSplitter, InputState, OutcomeDistribution, check_cap
from .temporal_modes import Wavepacket, overlap

ORACLE_MAX_PHOTONS = 6
RESIDUAL_THRESHOLD = 1e-8
CONVENTION_TOL = 1e-12

CONVENTIONS = ("symmetric", "real")


def orthonormal_basis(ws: Sequence[Wavepacket]) -> List[np.ndarray]:
    """Coordinates of each wavepacket in an orthonormal basis they span.

    Modified Gram-Schmidt with ``overlap`` as the inner product. A photon
    whose residual norm is below ``RESIDUAL_THRESHOLD`` adds no new direction.
    All returned vectors have the same length (the basis dimension).
    """
    k = len(ws)
    g = np.array([[overlap(a, b) for b in ws] for a in ws])
    basis: List[np.ndarray] = []  # each basis vector as a combination of the input wavepackets
    coords: List[List[float]] = []
    for i in range(k):
        u = np.zeros(k)
        u[i] = 1.0
        c = []
        for e in basis:
            proj = e @ g @ u
            u = u - proj * e
            c.append(proj)
        resid = math.sqrt(max(u @ g @ u, 0.0))
        if resid > RESIDUAL_THRESHOLD:
            basis.append(u / resid)
            c.append(resid)
        coords.append(c)
    dim = len(basis)
    return [np.pad(np.array(c), (0, dim - len(c))) for c in coords]


def _bs_rows(bs: BeamSplitter, convention: str) -> Tuple[Tuple[complex, complex], Tuple[complex, complex]]:
    """(c, d) coefficients for a-dagger and b-dagger."""
    t, r = math.sqrt(bs.T), math.sqrt(bs.R)
    if convention == "symmetric":
        return (t, 1j * r), (1j * r, t)
    if convention == "real":
        return (t, -r), (r, t)
    raise ValueError(f"unknown beam-splitter convention {convention!r}")


def _expand(linear_forms: Sequence[Dict[int, complex]]) -> Dict[Tuple[int, ...], complex]:
    """Multiply out a product of linear forms in commuting creation operators.

    Keys are sorted tuples of mode indices (a monomial), values coefficients.
    """
    poly: Dict[Tuple[int, ...], complex] = {(): 1.0 + 0j}
    for form in linear_forms:
        nxt: Dict[Tuple[int, ...], complex] = defaultdict(complex)
        for mono, coeff in poly.items():
            for mode, a in form.items():
                if a != 0:
                    nxt[tuple(sorted(mono + (mode,)))] += coeff * a
        poly = dict(nxt)
    return poly


def _distribution(state: InputState, bs: BeamSplitter, convention: str) -> Dict[Tuple[int, int], float]:
    photons = state.port_a + state.port_b
    vecs = orthonormal_basis(photons)
    dim = len(vecs[0])
    row_a, row_b = _bs_rows(bs, convention)
    # output mode index: port c -> 0..dim-1, port d -> dim..2*dim-1
    forms = []
    for idx, v in enumerate(vecs):
        to_c, to_d = row_a if idx < state.m else row_b
        form = {}
        for k in range(dim):
            form[k] = to_c * v[k]
            form[dim + k] = to_d * v[k]
        forms.append(form)

    weights: Dict[Tuple[int, int], float] = defaultdict(float)
    for mono, coeff in _expand(forms).items():
        occupations = np.bincount(mono, minlength=2 * dim)
        fock_norm = math.prod(math.factorial(int(x)) for x in occupations)
        p = int(occupations[:dim].sum())
        weights[(p, state.total - p)] += abs(coeff) ** 2 * fock_norm
    total = sum(weights.values())
    return {(p, state.total - p): weights.get((p, state.total - p), 0.0) / total
            for p in range(state.total, -1, -1)}


def oracle_distribution(state: InputState, bs: BeamSplitter, convention: str = "symmetric") -> OutcomeDistribution:
    """Output distribution by direct expansion.

    Both beam-splitter conventions are evaluated and must agree; the
    requested one is returned.
    """
    check_cap(state, ORACLE_MAX_PHOTONS)
    results = {c: _distribution(state, bs, c) for c in CONVENTIONS}
    first, second = (results[c] for c in CONVENTIONS)
    gap = max(abs(first[k] - second[k]) for k in first)
    if gap > CONVENTION_TOL:
        raise RuntimeError(f"beam-splitter conventions disagree by {gap:.3e}")
    raw = results[convention]
    probs = {k: min(1.0, max(0.0, v)) for k, v in raw.items()}
    return OutcomeDistribution(state.total, probs, raw)
