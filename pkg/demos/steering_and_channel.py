"""Clustered mmWave channel basics: array responses and channel spectra.

Plots the beam pattern of a half-wavelength ULA, then draws clustered
channel realizations and shows how the singular-value spectrum concentrates
when rays arrive in few clusters, which is what makes analog beamforming
competitive in sparse channels.

Run:  python3 demos/steering_and_channel.py
"""

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from mmwrx import ChannelParams, ClusterLaw, draw_channel, steering_vector
from mmwrx.rng import trial_rng

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

# --- beam pattern of a 16-element array steered to 20 degrees -------------
n = 16
target = np.deg2rad(20.0)
w = steering_vector(n, target)
angles = np.linspace(-np.pi / 2, np.pi / 2, 721)
gain = [abs(w.conj() @ steering_vector(n, a)) ** 2 for a in angles]

fig, axes = plt.subplots(1, 2, figsize=(11, 4))
axes[0].plot(np.rad2deg(angles), 10 * np.log10(np.maximum(gain, 1e-8)))
axes[0].axvline(20.0, color="k", ls=":", lw=0.8)
axes[0].set(
    xlabel="angle (deg)", ylabel="array gain (dB)",
    title=f"{n}-element ULA response, steered to 20\N{DEGREE SIGN}",
    ylim=(-40, 2),
)

# --- singular-value spectra: sparse vs rich scattering --------------------
cases = {
    "1 cluster, 1 ray": ClusterLaw.fixed(1),
    "2 clusters, 20 rays": ClusterLaw.fixed(2),
    "6 clusters, 20 rays": ClusterLaw.fixed(6),
}
for label, law in cases.items():
    n_p = 1 if "1 ray" in label else 20
    params = ChannelParams(n_tx=64, n_rx=16, cluster_law=law, paths_per_cluster=n_p)
    spectra = []
    for t in range(200):
        s = np.linalg.svd(draw_channel(params, trial_rng(1, t)).h, compute_uv=False)
        spectra.append(s**2)
    mean = np.mean(spectra, axis=0)
    axes[1].semilogy(np.arange(1, 17), mean, marker="o", ms=3, label=label)
axes[1].set(
    xlabel="stream index", ylabel="mean squared singular value",
    title="channel energy concentrates in few directions",
)
axes[1].legend()
fig.tight_layout()
path = os.path.join(OUT, "steering_and_channel.png")
fig.savefig(path, dpi=130)
print(f"saved {path}")

# --- ensemble energy check ------------------------------------------------
params = ChannelParams(n_tx=16, n_rx=16, cluster_law=ClusterLaw.truncated_poisson(1.8))
energy = np.mean(
    [np.linalg.norm(draw_channel(params, trial_rng(2, t)).h) ** 2 for t in range(2000)]
)
print(f"mean ||H||_F^2 over 2000 draws: {energy:.1f}  (ensemble value {16 * 16})")
