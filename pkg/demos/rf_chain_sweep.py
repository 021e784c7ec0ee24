"""How many RF chains should a hybrid receiver carry?

More chains buy spatial multiplexing but each one adds a full RF front end
and an ADC pair, plus a phase shifter per antenna.  The sweet spot follows
the channel's usable rank, which follows SNR: the chain count that is
optimal at cell center is wasteful at cell edge.

Run:  python3 demos/rf_chain_sweep.py   (about a minute)
"""

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from mmwrx import downlink_scenario, run_sweep

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

TRIALS = 250
N_RF = (2, 4, 8, 10)

fig, axes = plt.subplots(1, 2, figsize=(11, 4.2))
for snr_db, ax in ((0.0, axes[0]), (-20.0, axes[1])):
    result = run_sweep(downlink_scenario(snr_db=snr_db, hc_n_rf=N_RF, trials=TRIALS, seed=3))
    for n_rf in N_RF:
        pts = sorted(
            (p for p in result.points if p.scheme == "HC" and p.n_rf == n_rf),
            key=lambda p: p.bits,
        )
        ax.plot([p.ee / 1e9 for p in pts], [p.se for p in pts], marker=".", label=f"{n_rf} chains")
    dc = sorted((p for p in result.points if p.scheme == "DC"), key=lambda p: p.bits)
    ax.plot([p.ee / 1e9 for p in dc], [p.se for p in dc], "k--", marker=".", label="DC")
    ax.set(xlabel="EE (Gbit/J)", ylabel="SE (bits/s/Hz)", title=f"hybrid chain count at {snr_db:g} dB")
    ax.legend(fontsize=8)

fig.tight_layout()
path = os.path.join(OUT, "rf_chain_sweep.png")
fig.savefig(path, dpi=130)
print(f"saved {path}")

result = run_sweep(downlink_scenario(snr_db=0.0, hc_n_rf=N_RF, trials=TRIALS, seed=3))
for n_rf in N_RF:
    best = max((p for p in result.points if p.scheme == "HC" and p.n_rf == n_rf), key=lambda p: p.ee)
    print(f"HC {n_rf:2} chains: best EE {best.ee / 1e9:5.2f} Gbit/J at {best.bits} bits")
