import numpy as np
import pytest

from mmwrx.channel import ChannelParams, ChannelRealization, ClusterLaw, draw_channel
from mmwrx.rng import trial_rng


def clustered_channel(trial, n_tx=64, n_rx=16, n_c=2, n_p=10, seed=99):
    """Deterministic clustered channel draw for a given trial index."""
    params = ChannelParams(
        n_tx=n_tx, n_rx=n_rx, cluster_law=ClusterLaw.fixed(n_c), paths_per_cluster=n_p, seed=seed
    )
    return draw_channel(params, trial_rng(seed, trial))


def rank1_channel(trial, n_tx=64, n_rx=16, seed=7):
    """Single-cluster single-ray draw: exact rank one."""
    return clustered_channel(trial, n_tx=n_tx, n_rx=n_rx, n_c=1, n_p=1, seed=seed)


def gaussian_channel(trial, n_tx=8, n_rx=8, seed=5):
    """Unstructured i.i.d. CN(0,1) matrix wrapped as a realization."""
    rng = trial_rng(seed, trial)
    h = (rng.standard_normal((n_rx, n_tx)) + 1j * rng.standard_normal((n_rx, n_tx))) / np.sqrt(2)
    return ChannelRealization(h=h, clusters=(), pathloss_linear=1.0)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
