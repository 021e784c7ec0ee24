"""The SE-vs-EE trade-off chart with utility-optimal points.

Each receiver traces a curve as its ADC resolution sweeps 1..8 bits: up and
right first (more rate, nearly free), then the EE folds back once ADC power
dominates.  Circles mark designs that maximize alpha*EE + (1-alpha)*SE for
some preference alpha in [0,1] — every design a rational designer would
pick.  Dotted diagonals are constant-total-power reference lines.

Run:  python3 demos/tradeoff_chart.py   (about a minute)
"""

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from mmwrx import downlink_scenario, run_sweep, uplink_scenario
from mmwrx.chart import build_chart_document

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

TRIALS = 300
STYLE = {("AC", 1): "tab:green", ("DC", 16): "tab:blue", ("DC", 64): "tab:blue",
         ("HC", 4): "tab:red", ("HC", 8): "tab:orange"}

fig, axes = plt.subplots(1, 2, figsize=(12, 4.6))
for scenario, ax in ((downlink_scenario(hc_n_rf=(4, 8), trials=TRIALS, seed=3), axes[0]),
                     (uplink_scenario(hc_n_rf=(4, 8), trials=TRIALS, seed=3), axes[1])):
    result = run_sweep(scenario)
    doc = build_chart_document(result)
    points = doc["points"]

    se_top = max(p["se"] for p in points) * 1.1
    ee_top = max(p["ee"] for p in points) * 1.1 / 1e9
    for level in doc["power_grid"]:
        # constant power P: SE = (P * 1e9 / B) * EE[Gbit/J], a line through the origin
        slope = level * 1e9 / scenario.link.bandwidth_hz
        ax.plot([0, ee_top], [0, slope * ee_top], ls=":", color="gray", lw=0.6)
        if slope * ee_top < se_top * 1.3:
            ax.annotate(f"{level:g} W", (ee_top, slope * ee_top), fontsize=6, color="gray")

    by = {}
    for i, p in enumerate(points):
        by.setdefault((p["scheme"], p["n_rf"]), []).append((i, p))
    for (scheme, n_rf), pts in by.items():
        pts.sort(key=lambda ip: ip[1]["bits"])
        label = scheme if scheme in ("AC", "DC") else f"HC ({n_rf} chains)"
        color = STYLE.get((scheme, n_rf), "tab:purple")
        ax.plot([p["ee"] / 1e9 for _, p in pts], [p["se"] for _, p in pts],
                marker=".", ms=5, color=color, label=label)
        for i, p in pts:
            if p["selected_alphas"]:
                ax.scatter([p["ee"] / 1e9], [p["se"]], s=90, facecolors="none",
                           edgecolors=color, linewidths=1.4)
    ax.set(xlabel="EE (Gbit/J)", ylabel="SE (bits/s/Hz)",
           title=f"{scenario.name}: circles = utility-optimal designs")
    ax.legend(fontsize=8)
    ax.set_xlim(left=0)
    ax.set_ylim(bottom=0)

fig.tight_layout()
path = os.path.join(OUT, "tradeoff_chart.png")
fig.savefig(path, dpi=130)
print(f"saved {path}")
