"""Ergodic spectral efficiency and energy efficiency against ADC resolution.

Reproduces the two core curve families on the downlink scenario (64x16,
1 GHz, 30 dBm): SE grows with bit width and saturates once quantization
noise falls below thermal noise, while EE peaks at an interior bit width
because ADC power doubles with every extra bit.  Digital combining keeps a
rate lead at every resolution; where its EE peak lands depends entirely on
the component power model.

Run:  python3 demos/rate_and_ee_vs_bits.py   (about a minute)
"""

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from mmwrx import downlink_scenario, run_sweep
from mmwrx.montecarlo import reprice
from mmwrx.power import lpadc_model

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

TRIALS = 300
STYLE = {"AC": ("tab:green", "^"), "DC": ("tab:blue", "s"), "HC": ("tab:red", "o")}

fig, axes = plt.subplots(1, 3, figsize=(15, 4))

for snr_db, ax in ((0.0, axes[0]), (-20.0, axes[1])):
    result = run_sweep(downlink_scenario(snr_db=snr_db, trials=TRIALS, seed=3))
    for scheme in ("AC", "HC", "DC"):
        pts = sorted((p for p in result.points if p.scheme == scheme), key=lambda p: p.bits)
        color, marker = STYLE[scheme]
        label = scheme if scheme != "HC" else "HC (4 chains)"
        ax.errorbar(
            [p.bits for p in pts], [p.se for p in pts],
            yerr=[2 * p.se_stderr for p in pts], color=color, marker=marker, ms=4, label=label,
        )
    ax.set(xlabel="ADC bits", ylabel="SE (bits/s/Hz)", title=f"ergodic SE, {snr_db:g} dB SNR")
    ax.legend()

result = run_sweep(downlink_scenario(snr_db=0.0, trials=TRIALS, seed=3))
for model, ls in ((None, "-"), (lpadc_model(), "--")):
    res = result if model is None else reprice(result, model)
    name = "HPADC" if model is None else "LPADC"
    for scheme in ("AC", "HC", "DC"):
        pts = sorted((p for p in res.points if p.scheme == scheme), key=lambda p: p.bits)
        color, marker = STYLE[scheme]
        axes[2].plot(
            [p.bits for p in pts], [p.ee / 1e9 for p in pts],
            ls, color=color, marker=marker, ms=4, label=f"{scheme} {name}",
        )
axes[2].set(xlabel="ADC bits", ylabel="EE (Gbit/J)", title="EE at 0 dB: component model decides")
axes[2].legend(fontsize=7, ncol=2)

fig.tight_layout()
path = os.path.join(OUT, "rate_and_ee_vs_bits.png")
fig.savefig(path, dpi=130)
print(f"saved {path}")

best = {}
for p in result.points:
    cur = best.get(p.scheme)
    if cur is None or p.ee > cur.ee:
        best[p.scheme] = p
for scheme, p in best.items():
    print(f"{scheme}: EE peaks at {p.bits} bits with {p.ee / 1e9:.1f} Gbit/J (HPADC)")
