"""SE/EE trade-off analytics: closed-form regimes, Pareto sets and utility.

Energy efficiency is rate over receiver power, ``EE = B*SE / P_tot``.  For a
receiver whose power splits into fixed, per-antenna and ADC parts, EE can be
written as a function of SE alone by inverting the quantized-SNR relation
through the asymptotic distortion factor; the resulting curve grows linearly
at small SE, peaks in a transition region, and collapses as SE approaches the
unquantized ceiling ``log2(1+gamma)``.

Designer preference between the two metrics is a weight ``alpha`` in [0,1]:
``U = alpha*EE + (1-alpha)*SE`` (each metric rescaled to comparable units).
Maximizing U over all candidate designs for every alpha traces out exactly
the designs worth building; all of them lie on the Pareto frontier.
"""

from dataclasses import dataclass, field as dataclass_field

import numpy as np

from mmwrx.errors import ValidationError

_K = np.pi * np.sqrt(3.0) / 2.0  # distortion-factor constant


@dataclass
class TradeoffPoint:
    """One candidate receiver design and its measured SE/EE/power."""

    scheme: str          # "AC" | "DC" | "HC"
    bits: int
    n_rf: int            # 1 for AC, n_rx for DC, configured for HC
    se: float            # bits/s/Hz
    ee: float            # bits/Joule
    p_tot: float         # Watts
    se_stderr: float = 0.0
    selected_alphas: list = dataclass_field(default_factory=list)

    def key(self) -> tuple:
        return (self.scheme, self.n_rf, self.bits)


@dataclass(frozen=True)
class UtilityConfig:
    """Preference grid and unit normalization for utility maximization.

    The default scales mix SE in bits/s/Hz with EE in Gbits/J, which puts the
    two metrics on comparable numeric ranges for typical GHz-bandwidth links.
    """

    alpha_grid: tuple = tuple(np.linspace(0.0, 1.0, 101).round(2))
    ee_scale: float = 1e-9
    se_scale: float = 1.0

    def __post_init__(self):
        if len(self.alpha_grid) == 0:
            raise ValidationError("alpha_grid must be nonempty", field="alpha_grid")
        for a in self.alpha_grid:
            if not 0.0 <= a <= 1.0:
                raise ValidationError("alpha values must lie in [0, 1]", field="alpha_grid")


def energy_efficiency(se: float, p_tot: float, bandwidth_hz: float) -> float:
    """Energy efficiency in bits/Joule: ``bandwidth * se / p_tot``."""
    if not p_tot > 0:
        raise ValidationError("p_tot must be positive", field="p_tot")
    return bandwidth_hz * se / p_tot


def ee_of_se_closed_form(
    se: float,
    gamma: float,
    p_o: float,
    p_a: float,
    n_rx: int,
    bandwidth_hz: float,
    c_fj: float,
) -> float:
    """Closed-form EE(SE) for a digital receiver with ``n_rx`` ADC pairs.

    ``c_fj`` is the ADC figure of merit in fJ/step/Hz.  Only defined for
    ``se < log2(1+gamma)``; at the ceiling the required resolution, and with
    it the ADC power, diverges.
    """
    ceiling = np.log2(1.0 + gamma)
    denom_arg = (1.0 + gamma) * 2.0 ** (-se) - 1.0
    if denom_arg <= 0:
        raise ValidationError(
            f"se must be below the unquantized ceiling log2(1+gamma) = {ceiling:.6g}",
            field="se",
        )
    c_j = c_fj * 1e-15
    adc_term = 2.0 * n_rx * c_j * np.sqrt((2.0 / (np.pi * np.sqrt(3.0))) * gamma / denom_arg)
    return se / ((p_o + p_a * n_rx) / bandwidth_hz + adc_term)


def transition_point(
    gamma: float, p_a: float, bandwidth_hz: float, c_fj: float
) -> tuple[float | None, float]:
    """SE and bit width where ADC power overtakes the other per-antenna power.

    Returns ``(se_tilde, b_star)``.  ``b_star = log2(p_a / (2*B*c))`` always;
    ``se_tilde`` is None when the balance point sits below zero spectral
    efficiency (the ADC term dominates from the start).
    """
    if not (gamma > 0 and p_a > 0 and bandwidth_hz > 0 and c_fj > 0):
        raise ValidationError("gamma, p_a, bandwidth_hz and c_fj must be positive")
    c_j = c_fj * 1e-15
    x = p_a / (2.0 * bandwidth_hz * c_j)
    b_star = float(np.log2(x))
    arg = (gamma + 1.0) / (gamma + (2.0 / (np.pi * np.sqrt(3.0))) * x**2)
    se_tilde = float(np.log2(arg)) if arg > 1.0 else None
    return se_tilde, b_star


def delta_gamma_star(
    gamma1: float, p_a1: float, p_a2: float, bandwidth_hz: float, c_fj: float
) -> tuple[float, bool]:
    """SNR increase needed to keep the transition SE when P_a grows.

    Returns ``(delta, denominator_negative)``.  The denominator
    ``p_a1^2 - (pi*sqrt(3)/2)*(B*c)^2`` changes sign when the ADC energy term
    overtakes the per-antenna component power; past that point the required
    SNR difference is negative.
    """
    c_j = c_fj * 1e-15
    bc_sq = (bandwidth_hz * c_j) ** 2
    denom = p_a1**2 - _K * bc_sq
    if abs(denom) <= 1e-12 * (p_a1**2 + _K * bc_sq):
        critical = np.sqrt(_K) * bandwidth_hz * c_j
        raise ValidationError(
            f"singular at p_a1 = {critical:.6g} W; perturb p_a1 or c", field="p_a1"
        )
    delta = (gamma1 + 1.0) * (p_a2**2 - p_a1**2) / denom
    return float(delta), bool(denom < 0)


def pareto_indices(points: list) -> list:
    """Indices of points not dominated in both SE and EE.

    A point is dominated when another point is at least as good in both
    coordinates and strictly better in one.
    """
    idx = []
    for i, p in enumerate(points):
        dominated = any(
            q.se >= p.se and q.ee >= p.ee and (q.se > p.se or q.ee > p.ee)
            for j, q in enumerate(points)
            if j != i
        )
        if not dominated:
            idx.append(i)
    return idx


def utility_frontier(points: list, cfg: UtilityConfig | None = None) -> tuple[dict, list]:
    """Annotate utility-optimal points across the preference grid.

    For each alpha the winning point gets alpha appended to its
    ``selected_alphas``; ties are broken toward higher SE, then higher EE,
    then the lowest index.  Returns ``(selections, pareto)`` where
    ``selections`` maps alpha -> winning point index and ``pareto`` is the
    nondominated index set.
    """
    if not points:
        raise ValidationError("points must be nonempty", field="points")
    cfg = cfg or UtilityConfig()
    for p in points:
        p.selected_alphas = []
    selections = {}
    for alpha in cfg.alpha_grid:
        best = max(
            range(len(points)),
            key=lambda i: (
                alpha * points[i].ee * cfg.ee_scale + (1.0 - alpha) * points[i].se * cfg.se_scale,
                points[i].se,
                points[i].ee,
                -i,
            ),
        )
        points[best].selected_alphas.append(float(alpha))
        selections[float(alpha)] = best
    return selections, pareto_indices(points)
