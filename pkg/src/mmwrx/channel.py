"""Clustered geometric mmWave MIMO channel with uniform linear arrays.

A realization is a sum of ``N_c`` clusters of ``N_p`` rays each.  Every ray
carries an i.i.d. CN(0,1) small-scale gain and departs/arrives at a Gaussian
offset around its cluster's mean angle.  Antenna arrays on both ends are
half-wavelength ULAs, so each ray contributes a rank-one outer product of
steering vectors.  The overall scaling keeps ``E[||H||_F^2] = N_t*N_r/rho``
with ``rho`` the linear path loss.
"""

from dataclasses import dataclass, field

import numpy as np

from mmwrx.errors import ValidationError

LOS_SHADOWING_SIGMA_DB = 5.8
NLOS_SHADOWING_SIGMA_DB = 8.7


def steering_vector(n: int, angle_rad: float) -> np.ndarray:
    """Unit-norm array response of an ``n``-element half-wavelength ULA.

    Entry ``i`` is ``exp(j*pi*i*sin(angle_rad)) / sqrt(n)``; the squared norm
    is exactly 1.
    """
    if n < 1:
        raise ValidationError("antenna count must be >= 1", field="n")
    phases = np.pi * np.arange(n) * np.sin(angle_rad)
    return np.exp(1j * phases) / np.sqrt(n)


@dataclass(frozen=True)
class PathlossSpec:
    """Distance-dependent path loss for a 28 GHz link.

    ``condition`` selects the LOS or NLOS fit; log-normal shadowing uses the
    standard deviations reported with those fits unless overridden.
    """

    condition: str = "LOS"  # "LOS" | "NLOS"
    distance_m: float = 100.0
    shadowing_sigma_db: float | None = None
    include_shadowing: bool = False

    def __post_init__(self):
        if self.condition not in ("LOS", "NLOS"):
            raise ValidationError("condition must be 'LOS' or 'NLOS'", field="condition")
        if not self.distance_m > 0:
            raise ValidationError("distance_m must be positive", field="distance_m")

    @property
    def sigma_db(self) -> float:
        if self.shadowing_sigma_db is not None:
            return self.shadowing_sigma_db
        return LOS_SHADOWING_SIGMA_DB if self.condition == "LOS" else NLOS_SHADOWING_SIGMA_DB


def pathloss_db(spec: PathlossSpec, shadowing_draw: float | None = None) -> float:
    """Path loss in dB, optionally including a given shadowing draw (dB).

    LOS:  61.5 + 20.0*log10(d) + xi
    NLOS: 72.0 + 29.2*log10(d) + xi
    """
    if not spec.distance_m > 0:
        raise ValidationError("distance_m must be positive", field="distance_m")
    xi = 0.0
    if spec.include_shadowing and shadowing_draw is not None:
        xi = shadowing_draw
    if spec.condition == "LOS":
        return 61.5 + 20.0 * np.log10(spec.distance_m) + xi
    return 72.0 + 29.2 * np.log10(spec.distance_m) + xi


@dataclass(frozen=True)
class ClusterLaw:
    """Distribution of the number of clusters per realization.

    ``fixed`` always yields ``value`` clusters; ``truncated_poisson`` draws
    Poisson(``value``) floored at one so a realization never has zero paths.
    """

    kind: str  # "fixed" | "truncated_poisson"
    value: float

    def __post_init__(self):
        if self.kind not in ("fixed", "truncated_poisson"):
            raise ValidationError(
                "cluster_law kind must be 'fixed' or 'truncated_poisson'", field="cluster_law"
            )
        if self.kind == "fixed" and (self.value < 1 or int(self.value) != self.value):
            raise ValidationError("fixed cluster count must be an integer >= 1", field="cluster_law")
        if self.kind == "truncated_poisson" and not self.value > 0:
            raise ValidationError("poisson mean must be positive", field="cluster_law")

    @staticmethod
    def fixed(count: int) -> "ClusterLaw":
        return ClusterLaw("fixed", count)

    @staticmethod
    def truncated_poisson(mean: float = 1.8) -> "ClusterLaw":
        return ClusterLaw("truncated_poisson", mean)

    def draw(self, rng: np.random.Generator) -> int:
        if self.kind == "fixed":
            return int(self.value)
        return max(int(rng.poisson(self.value)), 1)


@dataclass(frozen=True)
class ChannelParams:
    """Static parameters of the random channel ensemble."""

    n_tx: int
    n_rx: int
    cluster_law: ClusterLaw = field(default_factory=lambda: ClusterLaw.truncated_poisson(1.8))
    paths_per_cluster: int = 20
    angle_spread_deg: float = 10.0
    pathloss_db: float | PathlossSpec = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.n_tx < 1:
            raise ValidationError("n_tx must be >= 1", field="n_tx")
        if self.n_rx < 1:
            raise ValidationError("n_rx must be >= 1", field="n_rx")
        if self.paths_per_cluster < 1:
            raise ValidationError("paths_per_cluster must be >= 1", field="paths_per_cluster")
        if self.angle_spread_deg < 0:
            raise ValidationError("angle_spread_deg must be >= 0", field="angle_spread_deg")


@dataclass(frozen=True)
class ClusterDraw:
    """One cluster of a realization: mean angles plus per-ray parameters."""

    mean_aoa: float
    mean_aod: float
    gains: np.ndarray        # complex, length N_p
    d_aoa: np.ndarray        # radians, length N_p
    d_aod: np.ndarray        # radians, length N_p


@dataclass(frozen=True)
class ChannelRealization:
    """One draw of the channel matrix together with its generating rays."""

    h: np.ndarray            # complex, N_r x N_t
    clusters: tuple
    pathloss_linear: float

    @property
    def n_rx(self) -> int:
        return self.h.shape[0]

    @property
    def n_tx(self) -> int:
        return self.h.shape[1]


def _resolve_pathloss(params: ChannelParams, rng: np.random.Generator) -> float:
    """Linear-scale path loss for one realization (draws shadowing if enabled)."""
    pl = params.pathloss_db
    if isinstance(pl, PathlossSpec):
        xi = rng.normal(0.0, pl.sigma_db) if pl.include_shadowing else None
        db = pathloss_db(pl, xi)
    else:
        db = float(pl)
    return 10.0 ** (db / 10.0)


def draw_channel(params: ChannelParams, rng: np.random.Generator) -> ChannelRealization:
    """Draw one channel realization from the given stream.

    Draw order is fixed (cluster count, shadowing, then per-cluster mean
    angles, gains and offsets) so a given generator state always yields the
    same realization.
    """
    n_c = params.cluster_law.draw(rng)
    rho = _resolve_pathloss(params, rng)
    n_p = params.paths_per_cluster
    spread_rad = np.deg2rad(params.angle_spread_deg)

    clusters = []
    aoa_all = np.empty(n_c * n_p)
    aod_all = np.empty(n_c * n_p)
    gains_all = np.empty(n_c * n_p, dtype=complex)
    for k in range(n_c):
        mean_aoa = rng.uniform(0.0, 2.0 * np.pi)
        mean_aod = rng.uniform(0.0, 2.0 * np.pi)
        gains = (rng.standard_normal(n_p) + 1j * rng.standard_normal(n_p)) / np.sqrt(2.0)
        d_aoa = rng.normal(0.0, spread_rad, n_p)
        d_aod = rng.normal(0.0, spread_rad, n_p)
        clusters.append(ClusterDraw(mean_aoa, mean_aod, gains, d_aoa, d_aod))
        sl = slice(k * n_p, (k + 1) * n_p)
        aoa_all[sl] = mean_aoa + d_aoa
        aod_all[sl] = mean_aod + d_aod
        gains_all[sl] = gains

    # All rays at once: H = scale * A_r diag(g) A_t^H with unit-norm steering columns.
    a_r = np.exp(1j * np.pi * np.outer(np.arange(params.n_rx), np.sin(aoa_all))) / np.sqrt(params.n_rx)
    a_t = np.exp(1j * np.pi * np.outer(np.arange(params.n_tx), np.sin(aod_all))) / np.sqrt(params.n_tx)
    scale = np.sqrt(params.n_tx * params.n_rx / (rho * n_c * n_p))
    h = scale * ((a_r * gains_all) @ a_t.conj().T)
    return ChannelRealization(h=h, clusters=tuple(clusters), pathloss_linear=rho)
