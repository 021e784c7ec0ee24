"""Additive quantization noise model for low-resolution ADCs.

An ADC with ``b`` bits is modeled as a linear gain ``1 - eta`` plus additive
Gaussian noise whose power is ``eta`` times the input power.  ``eta`` is the
inverse signal-to-quantization-noise ratio of the optimal scalar quantizer
for a Gaussian input: measured values for b <= 5, the asymptotic form
``(pi*sqrt(3)/2) * 2^(-2b)`` beyond.
"""

from dataclasses import dataclass

import numpy as np

from mmwrx.errors import ValidationError

# Distortion factors for a Gaussian input at low bit widths (measured values;
# the closed form overestimates these slightly, e.g. 0.010629 vs 0.009497 at b=4).
ETA_TABLE = {
    1: 0.3634,
    2: 0.1175,
    3: 0.03454,
    4: 0.009497,
    5: 0.002499,
}

MAX_BITS = 16  # guards 2^b in the power formulas against runaway configs

# Walden figure of merit presets in fJ/step/Hz.
ADC_PRESETS_FJ = {
    "LPADC": 5.0,    # projected future low-power parts
    "IPADC": 65.0,   # recently demonstrated intermediate parts
    "HPADC": 494.0,  # established state of the art at GS/s rates
}


def eta_closed_form(bits: int) -> float:
    """Asymptotic distortion factor ``(pi*sqrt(3)/2) * 2^(-2b)``."""
    if bits < 1:
        raise ValidationError("bits must be >= 1", field="bits")
    return (np.pi * np.sqrt(3.0) / 2.0) * 2.0 ** (-2 * bits)


def eta_of_bits(bits: int) -> float:
    """Distortion factor: table value for b <= 5, closed form above."""
    if bits < 1:
        raise ValidationError("bits must be >= 1", field="bits")
    if bits in ETA_TABLE:
        return ETA_TABLE[bits]
    return eta_closed_form(bits)


@dataclass(frozen=True)
class QuantizerModel:
    """Bit width paired with its distortion factor.

    Construct through :meth:`from_bits` (or :meth:`unquantized` for the
    ideal-ADC limit) so eta always comes from one place.
    """

    bits: int | None
    eta: float

    def __post_init__(self):
        if not 0.0 <= self.eta < 1.0:
            raise ValidationError("eta must lie in [0, 1)", field="eta")

    @staticmethod
    def from_bits(bits: int) -> "QuantizerModel":
        if not 1 <= bits <= MAX_BITS:
            raise ValidationError(f"bits must lie in 1..{MAX_BITS}", field="bits")
        return QuantizerModel(bits=bits, eta=eta_of_bits(bits))

    @staticmethod
    def unquantized() -> "QuantizerModel":
        """Infinite-resolution limit (eta = 0)."""
        return QuantizerModel(bits=None, eta=0.0)


def quantized_snr_scalar(gamma: float, eta: float) -> float:
    """Post-quantization SNR ``(1-eta)*gamma / (1 + eta*gamma)``.

    Upper bounded by both ``gamma`` and the saturation level ``(1-eta)/eta``.
    """
    if gamma < 0:
        raise ValidationError("gamma must be >= 0", field="gamma")
    if not 0.0 <= eta < 1.0:
        raise ValidationError("eta must lie in [0, 1)", field="eta")
    return (1.0 - eta) * gamma / (1.0 + eta * gamma)


@dataclass(frozen=True)
class AdcModel:
    """ADC energy model: power = walden_c * bandwidth * 2^bits.

    ``walden_c`` is the conversion energy in fJ/step/Hz.
    """

    walden_c: float
    label: str = "custom"

    def __post_init__(self):
        if not self.walden_c > 0:
            raise ValidationError("walden_c must be positive", field="walden_c")

    @staticmethod
    def preset(label: str) -> "AdcModel":
        if label not in ADC_PRESETS_FJ:
            raise ValidationError(
                f"unknown ADC preset {label!r}; choose from {sorted(ADC_PRESETS_FJ)}",
                field="label",
            )
        return AdcModel(walden_c=ADC_PRESETS_FJ[label], label=label)


def adc_power(adc: AdcModel, bandwidth_hz: float, bits: int) -> float:
    """Power draw of a single ADC in Watts."""
    if not bandwidth_hz > 0:
        raise ValidationError("bandwidth_hz must be positive", field="bandwidth_hz")
    if not 1 <= bits <= MAX_BITS:
        raise ValidationError(f"bits must lie in 1..{MAX_BITS}", field="bits")
    return adc.walden_c * 1e-15 * bandwidth_hz * 2.0 ** bits
