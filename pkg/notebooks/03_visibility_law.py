"""
Dip visibility counts indistinguishable photons
===============================================

Send N photons into one port and a single photon into the other, with
T = N/(N+1). If p of the N photons match the lone photon and the rest are in
an orthogonal channel, the dip visibility comes out as p/N.
"""

# %%
import numpy as np

from homsim import BeamSplitter, InputState, ScanSpec, Wavepacket, delay_scan, theoretical_visibility

delays = np.linspace(-6, 6, 241)

for N in range(1, 5):
    for p in range(N + 1):
        port_a = [Wavepacket(0.0, tag=0)] * p + [Wavepacket(0.0, tag=1)] * (N - p)
        state = InputState(port_a, [Wavepacket(0.0, tag=0)])
        scan = delay_scan(ScanSpec(state, "b", delays, BeamSplitter(N / (N + 1)), (N, 1)))
        print(f"N={N} p={p}  visibility={scan.visibility:.12f}  p/N={theoretical_visibility(p, N):.12f}")
