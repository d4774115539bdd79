"""
Two-photon Hong-Ou-Mandel dip
=============================

Two identical photons meeting on a 50:50 splitter always leave together.
Delaying one of them restores coincidences; the dip shape is fixed by the
wavepacket overlap.
"""

# %%
import numpy as np

from homsim import BeamSplitter, InputState, ScanSpec, Wavepacket, delay_scan, output_distribution, overlap

pair = InputState([Wavepacket(0.0)], [Wavepacket(0.0)])
print(output_distribution(pair, BeamSplitter(0.5)).probs)

# %%
# Different tags behave like classical particles: P(1,1) = T^2 + R^2.
tagged = InputState([Wavepacket(0.0, tag=0)], [Wavepacket(0.0, tag=1)])
print(output_distribution(tagged, BeamSplitter(0.5)).probs)

# %%
# Delay scan. The coincidence curve is (1 - overlap^2) / 2.
delays = np.linspace(-6, 6, 121)
scan = delay_scan(ScanSpec(pair, "b", delays, BeamSplitter(0.5), (1, 1)))
closed_form = np.array([0.5 * (1 - overlap(Wavepacket(0.0), Wavepacket(d)) ** 2) for d in delays])
print("max deviation from closed form:", np.abs(scan.probs - closed_form).max())
print("visibility:", scan.visibility)

# %%
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    plt.plot(scan.delays, scan.probs)
    plt.xlabel("delay (sigma)")
    plt.ylabel("P(1,1)")
    plt.savefig("hom_dip.png", dpi=120)
except ImportError:
    pass
