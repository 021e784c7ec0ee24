"""Chart documents: the serialized form of a sweep.

A chart document carries everything a renderer or downstream tool needs:
the scenario echo, one record per trade-off point, the Pareto-frontier and
utility-selection annotations, and a grid of constant-power reference levels
(straight lines in the SE-vs-EE plane).  Serialization is canonical --
sorted keys, minimal separators, shortest-roundtrip floats -- so identical
inputs produce byte-identical files no matter which interface wrote them.
"""

import csv
import io
import json

import numpy as np

from mmwrx.montecarlo import SweepResult, scenario_to_dict
from mmwrx.tradeoff import UtilityConfig

SCHEMA_VERSION = 1

# Tie-break order used by utility maximization; clients that re-select from a
# cached document must apply the same rule.
TIE_BREAK = ["utility", "se", "ee"]

_GRID_MANTISSAS = (1.0, 2.0, 3.0, 5.0)


def power_grid_levels(p_min: float, p_max: float) -> list:
    """Round power levels (1-2-3-5 per decade) spanning [p_min, p_max]."""
    if not (p_min > 0 and p_max >= p_min):
        return []
    levels = []
    exp = int(np.floor(np.log10(p_min)))
    while 10.0**exp <= p_max * 10:
        for m in _GRID_MANTISSAS:
            level = m * 10.0**exp
            if p_min * 0.5 <= level <= p_max * 2.0:
                levels.append(float(level))
        exp += 1
    return levels


def build_chart_document(result: SweepResult, utility: UtilityConfig | None = None) -> dict:
    """Assemble the chart document for a finished sweep."""
    utility = utility or UtilityConfig()
    points = []
    for p in result.points:
        points.append(
            {
                "scheme": p.scheme,
                "bits": int(p.bits),
                "n_rf": int(p.n_rf),
                "se": float(p.se),
                "se_stderr": float(p.se_stderr),
                "ee": float(p.ee),
                "p_tot": float(p.p_tot),
                "selected_alphas": [float(a) for a in p.selected_alphas],
            }
        )
    p_tots = [p["p_tot"] for p in points]
    return {
        "schema_version": SCHEMA_VERSION,
        "scenario": scenario_to_dict(result.scenario),
        "points": points,
        "pareto_indices": [int(i) for i in result.pareto],
        "utility_selections": {repr(float(a)): int(i) for a, i in result.selections.items()},
        "utility": {
            "alpha_grid": [float(a) for a in utility.alpha_grid],
            "ee_scale": float(utility.ee_scale),
            "se_scale": float(utility.se_scale),
            "tie_break": TIE_BREAK,
        },
        "power_grid": power_grid_levels(min(p_tots), max(p_tots)),
        "metadata": {
            "seed": int(result.seed),
            "trials": int(result.trials),
            "valid_trials": int(result.valid_trials),
            "failed_trials": [int(t) for t in result.failed_trials],
        },
    }


def canonical_json_bytes(doc: dict) -> bytes:
    """Deterministic JSON encoding (sorted keys, repr floats, no NaN)."""
    return (json.dumps(doc, sort_keys=True, separators=(",", ":"), allow_nan=False) + "\n").encode(
        "utf-8"
    )


CSV_COLUMNS = [
    "scheme",
    "n_rf",
    "bits",
    "se",
    "se_stderr",
    "ee",
    "p_tot",
    "is_pareto",
    "selected_alphas",
]


def chart_to_csv(doc: dict) -> str:
    """Flatten a chart document to one CSV row per point."""
    pareto = set(doc["pareto_indices"])
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for i, p in enumerate(doc["points"]):
        writer.writerow(
            [
                p["scheme"],
                p["n_rf"],
                p["bits"],
                repr(p["se"]),
                repr(p["se_stderr"]),
                repr(p["ee"]),
                repr(p["p_tot"]),
                int(i in pareto),
                "|".join(repr(a) for a in p["selected_alphas"]),
            ]
        )
    return buf.getvalue()


def utility_table(doc: dict, alphas: list) -> list:
    """Rows (alpha, point index, scheme, bits, n_rf, se, ee) for given alphas.

    Selection re-runs the document's own utility rule (scales and tie-break),
    so the result matches ``utility_selections`` on grid alphas exactly.
    """
    u = doc["utility"]
    points = doc["points"]
    rows = []
    for alpha in alphas:
        if not 0.0 <= alpha <= 1.0:
            raise ValueError(f"alpha {alpha} outside [0, 1]")
        best = max(
            range(len(points)),
            key=lambda i: (
                alpha * points[i]["ee"] * u["ee_scale"]
                + (1.0 - alpha) * points[i]["se"] * u["se_scale"],
                points[i]["se"],
                points[i]["ee"],
                -i,
            ),
        )
        p = points[best]
        rows.append(
            {
                "alpha": float(alpha),
                "point_index": best,
                "scheme": p["scheme"],
                "bits": p["bits"],
                "n_rf": p["n_rf"],
                "se": p["se"],
                "ee": p["ee"],
            }
        )
    return rows
