"""The closed-form EE(SE) curve and its three regimes.

Writing receiver power as fixed + per-antenna + ADC parts and eliminating
the bit width through the quantized-SNR relation turns EE into a function
of SE alone.  The curve is linear while component power dominates, peaks in
a transition region, and collapses as SE approaches the unquantized ceiling
log2(1+gamma).  The companion bit count log2(P_a/(2Bc)) locates the
resolution at which ADC power catches up with the rest of the front end.

Run:  python3 demos/closed_form_regimes.py
"""

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from mmwrx import ee_of_se_closed_form, transition_point
from mmwrx.power import hpadc_model, lpadc_model, rf_chain_power

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

GAMMA = 10 ** (1.5 / 10)  # a mildly hot scalar link
BW = 1e9

fig, ax = plt.subplots(figsize=(6.5, 4.2))
for model, name in ((hpadc_model(), "HPADC"), (lpadc_model(), "LPADC")):
    p_a = model.p_lna + rf_chain_power(model)
    c = model.adc.walden_c
    ceiling = np.log2(1 + GAMMA)
    se = np.linspace(ceiling * 1e-3, ceiling * (1 - 1e-6), 400)
    ee = [ee_of_se_closed_form(float(s), GAMMA, 0.0, p_a, 16, BW, c) / 1e9 for s in se]
    ax.plot(se, ee, label=f"{name} (c = {c:g} fJ/step/Hz)")
    se_tilde, b_star = transition_point(GAMMA, p_a, BW, c)
    print(f"{name}: ADC power overtakes the front end at b* = {b_star:.2f} bits"
          + (f", transition SE {se_tilde:.3f}" if se_tilde is not None else " (below 0 SE)"))

ax.axvline(np.log2(1 + GAMMA), color="k", ls=":", lw=0.8)
ax.annotate("unquantized ceiling", (np.log2(1 + GAMMA) * 0.99, ax.get_ylim()[1] * 0.5),
            rotation=90, fontsize=7, ha="right")
ax.set(xlabel="SE (bits/s/Hz)", ylabel="EE (Gbit/J)",
       title="closed-form EE(SE), 16-antenna digital receiver")
ax.legend()
fig.tight_layout()
path = os.path.join(OUT, "closed_form_regimes.png")
fig.savefig(path, dpi=130)
print(f"saved {path}")
