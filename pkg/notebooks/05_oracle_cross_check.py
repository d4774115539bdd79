"""
Cross-checking against the brute-force expansion
================================================

The permanent engine and the creation-operator expansion share nothing but
the overlap function. Random partially distinguishable inputs agree to
rounding error.
"""

# %%
import numpy as np

from homsim import BeamSplitter, InputState, Wavepacket, oracle_distribution, output_distribution

rng = np.random.default_rng(0)
worst = 0.0
for _ in range(50):
    k = int(rng.integers(1, 6))
    ws = [Wavepacket(rng.uniform(-2, 2), rng.uniform(0.5, 1.5), int(rng.integers(0, 2))) for _ in range(k)]
    m = int(rng.integers(0, k + 1))
    state = InputState(ws[:m], ws[m:])
    bs = BeamSplitter(rng.uniform(0.05, 0.95))
    worst = max(worst, output_distribution(state, bs).tvd(oracle_distribution(state, bs)))
print("largest total variation distance:", worst)
