"""Reproducible random streams for Monte Carlo trials.

Every stochastic draw in a sweep comes from a per-trial substream keyed by
``(seed, trial)`` on a counter-based Philox generator, so results do not
depend on how trials are scheduled across workers.
"""

import numpy as np

# Philox carries a 128-bit key: seed in the high word, trial in the low word.
_KEY_DTYPE = np.uint64


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Return the generator for one Monte Carlo trial.

    The mapping (seed, trial) -> stream is fixed: two calls with the same
    arguments always produce identical draw sequences, and distinct trials
    get statistically independent streams.
    """
    if seed < 0:
        raise ValueError("seed must be nonnegative")
    if trial < 0:
        raise ValueError("trial index must be nonnegative")
    key = np.array([_KEY_DTYPE(seed), _KEY_DTYPE(trial)], dtype=_KEY_DTYPE)
    return np.random.Generator(np.random.Philox(key=key))
