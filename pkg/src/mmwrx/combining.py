"""Combiner design and quantized achievable rates for AC, DC and HC receivers.

Digital combining (DC) diagonalizes the channel with an SVD and water-fills
the transmit power over the singular values; the quantized rate accounts for
per-antenna quantization noise that the digital combiner mixes back in.
Analog combining (AC) steers a single constant-modulus phase-shifter vector,
obtained by projecting the dominant left singular vector onto the
constant-modulus set.  Hybrid combining (HC) reduces the antenna signals to
``n_rf`` chains through a constant-modulus matrix designed by alternating
projections between the constant-modulus and semi-unitary sets, then applies
the DC machinery on the equivalent channel.

The input covariance is always the water-filling solution of the unquantized
channel, which lower-bounds the quantized rates and approaches the optimum as
the bit width grows.
"""

from dataclasses import dataclass

import numpy as np

from mmwrx.channel import ChannelRealization
from mmwrx.errors import NumericError, ValidationError
from mmwrx.quantization import QuantizerModel

ALT_PROJ_TOL = 1e-8
ALT_PROJ_MAX_ITER = 500


@dataclass(frozen=True)
class LinkConfig:
    """Transmit power, per-dimension noise power and bandwidth of the link."""

    tx_power: float
    noise_power: float
    bandwidth_hz: float

    def __post_init__(self):
        if not self.tx_power > 0:
            raise ValidationError("tx_power must be positive", field="tx_power")
        if not self.noise_power > 0:
            raise ValidationError("noise_power must be positive", field="noise_power")
        if not self.bandwidth_hz > 0:
            raise ValidationError("bandwidth_hz must be positive", field="bandwidth_hz")


@dataclass(frozen=True)
class AcDesign:
    """Constant-modulus receive vector plus matched-filter transmit vector."""

    w_r: np.ndarray
    w_t: np.ndarray
    gain: float  # |w_r^H H w_t|^2


@dataclass(frozen=True)
class DcDesign:
    """SVD factors and water-filling power allocation of a channel matrix."""

    u: np.ndarray
    sigma: np.ndarray
    v: np.ndarray
    power_alloc: np.ndarray

    @property
    def n_streams(self) -> int:
        return int(np.count_nonzero(self.power_alloc > 0))


@dataclass(frozen=True)
class HcDesign:
    """RF combining matrix, equivalent channel and its inner digital design."""

    w_rf: np.ndarray
    h_eff: np.ndarray
    inner: DcDesign
    n_rf: int
    iterations: int
    orthonormality_residual: float  # ||W^H W - I||_F of the returned matrix


def waterfill(sing_vals: np.ndarray, total_power: float, noise: float) -> np.ndarray:
    """Water-filling power allocation over parallel channels.

    Returns ``p_i = max(0, mu - noise/sigma_i^2)`` with the water level ``mu``
    chosen so the powers sum to ``total_power`` exactly.
    """
    s = np.asarray(sing_vals, dtype=float)
    if s.size == 0 or not np.any(s > 0):
        raise NumericError("water-filling needs at least one positive singular value")
    if not total_power > 0:
        raise ValidationError("total_power must be positive", field="total_power")
    if not noise > 0:
        raise ValidationError("noise must be positive", field="noise")

    with np.errstate(divide="ignore"):
        inv_gain = np.where(s > 0, noise / np.maximum(s, 1e-300) ** 2, np.inf)
    order = np.argsort(inv_gain)
    sorted_inv = inv_gain[order]

    # Grow the active set until the water level drops below the next floor.
    active = 1
    cumsum = sorted_inv[0]
    while active < s.size and np.isfinite(sorted_inv[active]):
        mu = (total_power + cumsum) / active
        if mu <= sorted_inv[active]:
            break
        cumsum += sorted_inv[active]
        active += 1
    mu = (total_power + cumsum) / active

    alloc = np.zeros_like(s)
    idx = order[:active]
    alloc[idx] = mu - inv_gain[idx]
    return alloc


def _svd(h: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    try:
        u, s, vh = np.linalg.svd(h, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"SVD failed: {exc}") from exc
    return u, s, vh.conj().T


def _phase_project(m: np.ndarray, n_rx: int) -> np.ndarray:
    """Nearest matrix with every entry of modulus 1/sqrt(n_rx)."""
    return np.exp(1j * np.angle(m)) / np.sqrt(n_rx)


def ac_beamformer(ch: ChannelRealization) -> AcDesign:
    """Analog receive beamformer and matched transmit filter.

    The receive vector is the phase-only projection of the dominant left
    singular vector onto the constant-modulus set; the transmitter then
    matched-filters against the combined channel.
    """
    h = ch.h
    if not np.any(h):
        raise NumericError("zero channel matrix")
    u, _, _ = _svd(h)
    w_r = _phase_project(u[:, 0], h.shape[0])
    hw = h.conj().T @ w_r
    norm = np.linalg.norm(hw)
    if norm == 0:
        raise NumericError("combined channel vanished")
    w_t = hw / norm
    gain = float(np.abs(w_r.conj() @ h @ w_t) ** 2)
    return AcDesign(w_r=w_r, w_t=w_t, gain=gain)


def ac_rate(design: AcDesign, link: LinkConfig, q: QuantizerModel) -> float:
    """Quantized achievable rate (bits/s) of an analog combining design."""
    sig = design.gain * link.tx_power
    gamma_q = (1.0 - q.eta) * sig / (link.noise_power + q.eta * sig)
    return link.bandwidth_hz * np.log2(1.0 + gamma_q)


def _quantized_logdet_rate(
    u: np.ndarray, sigma: np.ndarray, power_alloc: np.ndarray, link: LinkConfig, q: QuantizerModel
) -> float:
    """Shared rate evaluation for DC and HC.

    Computes ``B * log2 det(I + (1-eta) S (N_o I + eta U^H diag(U S U^H) U)^-1)``
    with ``S = diag(sigma_i^2 p_i)`` via two Cholesky log-determinants, which
    avoids forming an explicit inverse.
    """
    s_diag = sigma**2 * power_alloc
    r = sigma.size
    if q.eta == 0.0:
        return link.bandwidth_hz * float(np.sum(np.log2(1.0 + s_diag / link.noise_power)))

    # diag(U S U^H) depends only on row powers of U.
    antenna_power = (np.abs(u) ** 2) @ s_diag
    noise = link.noise_power * np.eye(r) + q.eta * (u.conj().T * antenna_power) @ u
    signal = noise + (1.0 - q.eta) * np.diag(s_diag)

    def logdet(m: np.ndarray) -> float:
        try:
            chol = np.linalg.cholesky(m)
        except np.linalg.LinAlgError as exc:
            raise NumericError(f"rate evaluation lost positive definiteness: {exc}") from exc
        return 2.0 * float(np.sum(np.log(np.abs(np.diag(chol)))))

    return link.bandwidth_hz * (logdet(signal) - logdet(noise)) / np.log(2.0)


def dc_design(ch: ChannelRealization, link: LinkConfig) -> DcDesign:
    """SVD plus unquantized water-filling for a digital combining receiver."""
    if not np.any(ch.h):
        raise NumericError("zero channel matrix")
    u, s, v = _svd(ch.h)
    alloc = waterfill(s, link.tx_power, link.noise_power)
    return DcDesign(u=u, sigma=s, v=v, power_alloc=alloc)


def dc_design_rate(design: DcDesign, link: LinkConfig, q: QuantizerModel) -> float:
    """Quantized rate (bits/s) of an existing digital combining design."""
    return _quantized_logdet_rate(design.u, design.sigma, design.power_alloc, link, q)


def dc_rate(ch: ChannelRealization, link: LinkConfig, q: QuantizerModel) -> tuple[DcDesign, float]:
    """Design a digital combiner for the realization and evaluate its rate."""
    design = dc_design(ch, link)
    return design, dc_design_rate(design, link, q)


def hc_rf_combiner(ch: ChannelRealization, n_rf: int) -> tuple[np.ndarray, int, float]:
    """Constant-modulus RF combining matrix via alternating projections.

    Starts from the first ``n_rf`` left singular vectors and alternates
    between the constant-modulus projection and the nearest semi-unitary
    matrix (polar factor) until the constant-modulus iterate changes by less
    than ``ALT_PROJ_TOL`` per entry, ending on the constant-modulus side.
    Returns the matrix, the iteration count, and ``||W^H W - I||_F`` of the
    returned matrix.
    """
    h = ch.h
    n_rx = h.shape[0]
    if not 1 <= n_rf <= n_rx:
        raise ValidationError(f"n_rf must lie in 1..{n_rx}", field="n_rf")
    if not np.any(h):
        raise NumericError("zero channel matrix")

    u, _, _ = _svd(h)
    if n_rf > u.shape[1]:
        # Rank-deficient direction count: pad with the full orthonormal basis.
        u_full, _, _ = np.linalg.svd(h, full_matrices=True)
        w_su = u_full[:, :n_rf]
    else:
        w_su = u[:, :n_rf]

    w_cm = _phase_project(w_su, n_rx)
    iterations = 0
    for iterations in range(1, ALT_PROJ_MAX_ITER + 1):
        a, _, bh = np.linalg.svd(w_cm, full_matrices=False)
        w_su = a @ bh
        w_next = _phase_project(w_su, n_rx)
        delta = np.max(np.abs(w_next - w_cm))
        w_cm = w_next
        if delta < ALT_PROJ_TOL:
            break
    residual = float(np.linalg.norm(w_cm.conj().T @ w_cm - np.eye(n_rf)))
    return w_cm, iterations, residual


def hc_design(ch: ChannelRealization, n_rf: int, link: LinkConfig) -> HcDesign:
    """RF combiner, equivalent channel and inner digital design for HC."""
    w_rf, iterations, residual = hc_rf_combiner(ch, n_rf)
    h_eff = w_rf.conj().T @ ch.h
    u, s, v = _svd(h_eff)
    alloc = waterfill(s, link.tx_power, link.noise_power)
    inner = DcDesign(u=u, sigma=s, v=v, power_alloc=alloc)
    return HcDesign(
        w_rf=w_rf,
        h_eff=h_eff,
        inner=inner,
        n_rf=n_rf,
        iterations=iterations,
        orthonormality_residual=residual,
    )


def hc_design_rate(design: HcDesign, link: LinkConfig, q: QuantizerModel) -> float:
    """Quantized rate (bits/s) of an existing hybrid combining design.

    Noise at the RF-chain outputs is kept white: the combining matrix is
    driven toward semi-unitarity by the alternating projections, and
    ``orthonormality_residual`` records how far it actually is.
    """
    return _quantized_logdet_rate(design.inner.u, design.inner.sigma, design.inner.power_alloc, link, q)


def hc_rate(
    ch: ChannelRealization, n_rf: int, link: LinkConfig, q: QuantizerModel
) -> tuple[HcDesign, float]:
    """Design a hybrid combiner for the realization and evaluate its rate."""
    design = hc_design(ch, n_rf, link)
    return design, hc_design_rate(design, link, q)
