"""
Where do multi-photon coincidences vanish?
==========================================

For identical photons |m, n> the probability of the output pattern (m, n)
is a polynomial in T. Its zeros are the splitter settings used to observe
generalized HOM dips.
"""

# %%
import math

import numpy as np

from homsim import InputState, null_transmissivity, prob_curve

for m, n in [(1, 1), (2, 1), (3, 1), (4, 1), (2, 2), (3, 3)]:
    print(f"|{m},{n}>:", [round(T, 12) for T in null_transmissivity(m, n)])

# %%
# |N,1> vanishes at T = N/(N+1); |2,2> at (3 +- sqrt 3)/6.
print([N / (N + 1) for N in range(1, 5)])
print((3 - math.sqrt(3)) / 6, (3 + math.sqrt(3)) / 6)

# %%
# The whole curve for |2,2>
T = np.linspace(0.01, 0.99, 99)
P = prob_curve(InputState.identical(2, 2), 2, T)
print("P(2,2) at T = 0.5:", P[49])
