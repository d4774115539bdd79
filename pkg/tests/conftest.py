import itertools
import math

import numpy as np
import pytest

from homsim import InputState, Wavepacket


def naive_permanent(m):
    """Sum over all permutations, no cleverness."""
    m = np.asarray(m)
    n = m.shape[0]
    total = 0j
    for perm in itertools.permutations(range(n)):
        prod = 1 + 0j
        for i, j in enumerate(perm):
            prod *= m[i, j]
        total += prod
    return total


def bernoulli_distribution(m, n, T):
    """Classical routing: every photon picks an output independently."""
    R = 1.0 - T
    out = {}
    for p in range(m + n + 1):
        acc = 0.0
        for s in range(max(0, p - n), min(m, p) + 1):
            u = p - s
            acc += (math.comb(m, s) * T**s * R ** (m - s)
                    * math.comb(n, u) * R**u * T ** (n - u))
        out[(p, m + n - p)] = acc
    return out


def random_state(rng, max_photons, max_tag=2, vary_sigma=True):
    total = int(rng.integers(1, max_photons + 1))
    m = int(rng.integers(0, total + 1))
    ws = [
        Wavepacket(
            float(rng.uniform(-3, 3)),
            float(rng.uniform(0.5, 2.0)) if vary_sigma else 1.0,
            int(rng.integers(0, max_tag + 1)),
        )
        for _ in range(total)
    ]
    return InputState(ws[:m], ws[m:])


@pytest.fixture
def rng():
    return np.random.default_rng(20240521)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, f"rep_{rep.when}", rep)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        ok, title, elapsed, budget = RESULTS[number]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(
            f"criterion {number}: {status}  {title}  ({elapsed:.2f}s / {budget:.0f}s)")
