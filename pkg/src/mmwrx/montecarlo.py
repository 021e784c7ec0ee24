"""Ergodic-rate estimation and full SE-vs-EE sweep orchestration.

A sweep evaluates every (scheme, bits, n_rf) combination of a scenario over a
common set of channel realizations: each trial draws one channel from its own
counter-based substream and prices all candidate designs on it.  Sharing
draws across schemes and bit widths keeps comparisons low-variance and makes
per-realization dominance properties visible in sweep output, and the
per-trial substreams make results independent of execution order.
"""

import time
from dataclasses import dataclass, replace

import numpy as np

from mmwrx.channel import ChannelParams, ClusterLaw, PathlossSpec, draw_channel, pathloss_db
from mmwrx.combining import (
    LinkConfig,
    ac_beamformer,
    ac_rate,
    dc_design,
    dc_design_rate,
    hc_design,
    hc_design_rate,
)
from mmwrx.errors import NumericError, ValidationError
from mmwrx.power import (
    ComponentPowerModel,
    hpadc_model,
    power_model_from_dict,
    power_model_to_dict,
    total_power,
)
from mmwrx.quantization import MAX_BITS, QuantizerModel
from mmwrx.rng import trial_rng
from mmwrx.tradeoff import TradeoffPoint, UtilityConfig, utility_frontier

DEFAULT_TRIALS = 1000


@dataclass(frozen=True)
class Scenario:
    """Everything needed to reproduce one sweep."""

    name: str
    channel: ChannelParams
    link: LinkConfig
    snr_target_db: float | None
    schemes: tuple      # entries "AC", "DC", "HC:<n_rf>"
    bit_range: tuple    # inclusive (lo, hi)
    power_model: ComponentPowerModel
    trials: int = DEFAULT_TRIALS

    def __post_init__(self):
        if self.trials < 1:
            raise ValidationError("trials must be >= 1", field="trials")
        lo, hi = self.bit_range
        if not (1 <= lo <= hi <= MAX_BITS):
            raise ValidationError(f"bit_range must satisfy 1 <= lo <= hi <= {MAX_BITS}", field="bit_range")
        if not self.schemes:
            raise ValidationError("schemes must be nonempty", field="schemes")
        for s in self.schemes:
            parse_scheme(s, self.channel.n_rx)

    @property
    def bits(self) -> list:
        return list(range(self.bit_range[0], self.bit_range[1] + 1))


def parse_scheme(token: str, n_rx: int) -> tuple[str, int]:
    """Parse a scheme token into ``(scheme, n_rf)``.

    AC uses one RF chain, DC one per antenna; HC tokens carry the chain count
    explicitly, e.g. ``"HC:4"``.
    """
    if token == "AC":
        return "AC", 1
    if token == "DC":
        return "DC", n_rx
    if token.startswith("HC:"):
        try:
            n_rf = int(token.split(":", 1)[1])
        except ValueError:
            raise ValidationError(f"bad HC token {token!r}; expected 'HC:<n_rf>'", field="schemes")
        if not 1 <= n_rf <= n_rx:
            raise ValidationError(f"HC n_rf must lie in 1..{n_rx}", field="schemes")
        return "HC", n_rf
    raise ValidationError(f"unknown scheme {token!r}; use 'AC', 'DC' or 'HC:<n_rf>'", field="schemes")


@dataclass(frozen=True)
class SweepResult:
    """Sweep output: one trade-off point per (scheme, bits, n_rf)."""

    scenario: Scenario
    points: list
    selections: dict     # alpha -> point index
    pareto: list
    seed: int
    trials: int
    valid_trials: int
    failed_trials: tuple
    wall_time_s: float


def _expected_pathloss_linear(params: ChannelParams) -> float:
    pl = params.pathloss_db
    db = pathloss_db(pl) if isinstance(pl, PathlossSpec) else float(pl)
    return 10.0 ** (db / 10.0)


def calibrate_noise(params: ChannelParams, link: LinkConfig, snr_target_db: float) -> float:
    """Noise power that puts the average per-element receive SNR on target.

    Uses the ensemble identity ``E[||H||_F^2] = n_tx*n_rx/rho``, so
    ``N_o = P / (rho * gamma_target)``.
    """
    gamma = 10.0 ** (snr_target_db / 10.0)
    rho = _expected_pathloss_linear(params)
    return link.tx_power / (rho * gamma)


def resolve_link(scenario: Scenario) -> LinkConfig:
    """Link config with the noise power implied by the SNR target, if any."""
    if scenario.snr_target_db is None:
        return scenario.link
    noise = calibrate_noise(scenario.channel, scenario.link, scenario.snr_target_db)
    return replace(scenario.link, noise_power=noise)


def _trial_ses(scenario: Scenario, link: LinkConfig, configs, quantizers, trial: int, seed: int):
    """Per-trial spectral efficiencies for every (config, bits) pair."""
    rng = trial_rng(seed, trial)
    ch = draw_channel(scenario.channel, rng)
    out = {}
    for token, (scheme, n_rf) in configs.items():
        if scheme == "AC":
            design = ac_beamformer(ch)
            for b, q in quantizers.items():
                out[(token, b)] = ac_rate(design, link, q) / link.bandwidth_hz
        elif scheme == "DC":
            design = dc_design(ch, link)
            for b, q in quantizers.items():
                out[(token, b)] = dc_design_rate(design, link, q) / link.bandwidth_hz
        else:
            design = hc_design(ch, n_rf, link)
            for b, q in quantizers.items():
                out[(token, b)] = hc_design_rate(design, link, q) / link.bandwidth_hz
    return out


def ergodic_rate(
    scenario: Scenario, scheme: str, bits: int, n_rf: int | None = None, seed: int | None = None
) -> tuple[float, float]:
    """Mean spectral efficiency and its standard error for one design.

    Trial ``t`` always uses substream ``t``, so the estimate matches the
    corresponding entry of :func:`run_sweep` exactly.
    """
    kind, rf = parse_scheme(scheme if scheme != "HC" else f"HC:{n_rf}", scenario.channel.n_rx)
    token = scheme if scheme != "HC" else f"HC:{rf}"
    link = resolve_link(scenario)
    q = QuantizerModel.from_bits(bits)
    seed = scenario.channel.seed if seed is None else seed
    ses = []
    for t in range(scenario.trials):
        try:
            ses.append(
                _trial_ses(scenario, link, {token: (kind, rf)}, {bits: q}, t, seed)[(token, bits)]
            )
        except NumericError as exc:
            raise NumericError(str(exc), context=f"trial {t}") from exc
    arr = np.asarray(ses)
    stderr = float(arr.std(ddof=1) / np.sqrt(arr.size)) if arr.size > 1 else 0.0
    return float(arr.mean()), stderr


def run_sweep(
    scenario: Scenario,
    seed: int | None = None,
    utility: UtilityConfig | None = None,
) -> SweepResult:
    """Evaluate the full (scheme, bits, n_rf) grid of a scenario.

    A numerical failure in one trial invalidates that trial for every
    combination (keeping the common-random-number pairing intact) and is
    reported in ``failed_trials`` rather than aborting the sweep.
    """
    seed = scenario.channel.seed if seed is None else seed
    link = resolve_link(scenario)
    configs = {token: parse_scheme(token, scenario.channel.n_rx) for token in scenario.schemes}
    quantizers = {b: QuantizerModel.from_bits(b) for b in scenario.bits}

    t0 = time.perf_counter()
    samples = {(token, b): [] for token in configs for b in quantizers}
    failed = []
    for t in range(scenario.trials):
        try:
            ses = _trial_ses(scenario, link, configs, quantizers, t, seed)
        except NumericError:
            failed.append(t)
            continue
        for key, se in ses.items():
            samples[key].append(se)
    valid = scenario.trials - len(failed)
    if valid == 0:
        raise NumericError("every trial failed; scenario is numerically degenerate")

    points = []
    for token, (scheme, n_rf) in configs.items():
        for b in scenario.bits:
            arr = np.asarray(samples[(token, b)])
            se = float(arr.mean())
            stderr = float(arr.std(ddof=1) / np.sqrt(arr.size)) if arr.size > 1 else 0.0
            breakdown = total_power(
                scheme, scenario.power_model, scenario.channel.n_rx, link.bandwidth_hz, b,
                n_rf=n_rf if scheme == "HC" else None,
            )
            points.append(
                TradeoffPoint(
                    scheme=scheme,
                    bits=b,
                    n_rf=n_rf,
                    se=se,
                    ee=link.bandwidth_hz * se / breakdown.total,
                    p_tot=breakdown.total,
                    se_stderr=stderr,
                )
            )
    selections, pareto = utility_frontier(points, utility)
    return SweepResult(
        scenario=scenario,
        points=points,
        selections=selections,
        pareto=pareto,
        seed=seed,
        trials=scenario.trials,
        valid_trials=valid,
        failed_trials=tuple(failed),
        wall_time_s=time.perf_counter() - t0,
    )


def reprice(result: SweepResult, power_model: ComponentPowerModel,
            utility: UtilityConfig | None = None) -> SweepResult:
    """Re-evaluate an existing sweep under a different component power model.

    Spectral efficiencies are independent of device power, so only power,
    EE and the utility annotations change.
    """
    scenario = replace(result.scenario, power_model=power_model)
    link = resolve_link(scenario)
    points = []
    for p in result.points:
        breakdown = total_power(
            p.scheme, power_model, scenario.channel.n_rx, link.bandwidth_hz, p.bits,
            n_rf=p.n_rf if p.scheme == "HC" else None,
        )
        points.append(
            TradeoffPoint(
                scheme=p.scheme, bits=p.bits, n_rf=p.n_rf, se=p.se,
                ee=link.bandwidth_hz * p.se / breakdown.total,
                p_tot=breakdown.total, se_stderr=p.se_stderr,
            )
        )
    selections, pareto = utility_frontier(points, utility)
    return SweepResult(
        scenario=scenario, points=points, selections=selections, pareto=pareto,
        seed=result.seed, trials=result.trials, valid_trials=result.valid_trials,
        failed_trials=result.failed_trials, wall_time_s=result.wall_time_s,
    )


# ---------------------------------------------------------------------------
# Presets

def _preset(
    name: str,
    n_tx: int,
    n_rx: int,
    snr_db: float,
    hc_n_rf: tuple,
    power_model: ComponentPowerModel | None,
    trials: int,
    seed: int,
) -> Scenario:
    channel = ChannelParams(
        n_tx=n_tx,
        n_rx=n_rx,
        cluster_law=ClusterLaw.truncated_poisson(1.8),
        paths_per_cluster=20,
        angle_spread_deg=10.0,
        pathloss_db=0.0,
        seed=seed,
    )
    link = LinkConfig(tx_power=1.0, noise_power=1.0, bandwidth_hz=1e9)  # 30 dBm, 1 GHz
    schemes = ("AC", "DC") + tuple(f"HC:{k}" for k in hc_n_rf)
    return Scenario(
        name=name,
        channel=channel,
        link=link,
        snr_target_db=snr_db,
        schemes=schemes,
        bit_range=(1, 8),
        power_model=power_model or hpadc_model(),
        trials=trials,
    )


def downlink_scenario(
    snr_db: float = 0.0,
    hc_n_rf: tuple = (4,),
    power_model: ComponentPowerModel | None = None,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
) -> Scenario:
    """Mobile receiver: 64 transmit antennas, 16 receive antennas."""
    return _preset("downlink", 64, 16, snr_db, hc_n_rf, power_model, trials, seed)


def uplink_scenario(
    snr_db: float = 0.0,
    hc_n_rf: tuple = (4,),
    power_model: ComponentPowerModel | None = None,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
) -> Scenario:
    """Base-station receiver: 16 transmit antennas, 64 receive antennas."""
    return _preset("uplink", 16, 64, snr_db, hc_n_rf, power_model, trials, seed)


SCENARIO_PRESETS = {"downlink": downlink_scenario, "uplink": uplink_scenario}


# ---------------------------------------------------------------------------
# Dict round trip (scenario files, HTTP payloads, chart echo)

def scenario_to_dict(s: Scenario) -> dict:
    pl = s.channel.pathloss_db
    if isinstance(pl, PathlossSpec):
        pl_value = {
            "condition": pl.condition,
            "distance_m": pl.distance_m,
            "shadowing_sigma_db": pl.shadowing_sigma_db,
            "include_shadowing": pl.include_shadowing,
        }
    else:
        pl_value = float(pl)
    return {
        "name": s.name,
        "channel": {
            "n_tx": s.channel.n_tx,
            "n_rx": s.channel.n_rx,
            "cluster_law": {"kind": s.channel.cluster_law.kind, "value": s.channel.cluster_law.value},
            "paths_per_cluster": s.channel.paths_per_cluster,
            "angle_spread_deg": s.channel.angle_spread_deg,
            "pathloss_db": pl_value,
            "seed": s.channel.seed,
        },
        "link": {
            "tx_power": s.link.tx_power,
            "noise_power": s.link.noise_power,
            "bandwidth_hz": s.link.bandwidth_hz,
        },
        "snr_target_db": s.snr_target_db,
        "schemes": list(s.schemes),
        "bit_range": list(s.bit_range),
        "power_model": power_model_to_dict(s.power_model),
        "trials": s.trials,
    }


def _require(d: dict, key: str, where: str):
    if key not in d:
        raise ValidationError(f"missing {where} key {key!r}", field=key)
    return d[key]


def scenario_from_dict(d: dict) -> Scenario:
    if not isinstance(d, dict):
        raise ValidationError("scenario must be an object", field="scenario")
    ch = _require(d, "channel", "scenario")
    law = ch.get("cluster_law", {"kind": "truncated_poisson", "value": 1.8})
    if not isinstance(law, dict) or "kind" not in law or "value" not in law:
        raise ValidationError("cluster_law must be {kind, value}", field="cluster_law")
    pl = ch.get("pathloss_db", 0.0)
    if isinstance(pl, dict):
        pl = PathlossSpec(
            condition=pl.get("condition", "LOS"),
            distance_m=pl.get("distance_m", 100.0),
            shadowing_sigma_db=pl.get("shadowing_sigma_db"),
            include_shadowing=pl.get("include_shadowing", False),
        )
    channel = ChannelParams(
        n_tx=int(_require(ch, "n_tx", "channel")),
        n_rx=int(_require(ch, "n_rx", "channel")),
        cluster_law=ClusterLaw(str(law["kind"]), float(law["value"])),
        paths_per_cluster=int(ch.get("paths_per_cluster", 20)),
        angle_spread_deg=float(ch.get("angle_spread_deg", 10.0)),
        pathloss_db=pl,
        seed=int(ch.get("seed", 0)),
    )
    lk = _require(d, "link", "scenario")
    link = LinkConfig(
        tx_power=float(_require(lk, "tx_power", "link")),
        noise_power=float(lk.get("noise_power", 1.0)),
        bandwidth_hz=float(_require(lk, "bandwidth_hz", "link")),
    )
    bit_range = d.get("bit_range", [1, 8])
    if not (isinstance(bit_range, (list, tuple)) and len(bit_range) == 2):
        raise ValidationError("bit_range must be a [lo, hi] pair", field="bit_range")
    power = d.get("power_model", None)
    model = power_model_from_dict(power) if isinstance(power, dict) else hpadc_model()
    return Scenario(
        name=str(d.get("name", "custom")),
        channel=channel,
        link=link,
        snr_target_db=None if d.get("snr_target_db") is None else float(d["snr_target_db"]),
        schemes=tuple(_require(d, "schemes", "scenario")),
        bit_range=(int(bit_range[0]), int(bit_range[1])),
        power_model=model,
        trials=int(d.get("trials", DEFAULT_TRIALS)),
    )
