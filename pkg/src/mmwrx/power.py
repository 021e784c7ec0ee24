"""Receiver power consumption from per-component device models.

Architecture totals (Watts):

    AC: N_r*(P_LNA + P_PS) + P_RF + P_C + 2*P_ADC
    HC: N_r*(P_LNA + P_SP + N_RF*P_PS) + N_RF*(P_RF + P_C + 2*P_ADC)
    DC: N_r*(P_LNA + P_RF + 2*P_ADC)

where one RF chain is mixer + local oscillator + low-pass filter + baseband
amplifier, and every RF chain feeds an I/Q pair of ADCs (the factor 2 is
fixed by the architecture, not a knob).
"""

import configparser
import io
from dataclasses import dataclass, field

from mmwrx.errors import ValidationError
from mmwrx.quantization import AdcModel, adc_power

ADCS_PER_CHAIN = 2  # one ADC each for the inphase and quadrature rails

ARCHITECTURES = ("AC", "DC", "HC")

_WATT_FIELDS = ("p_lna", "p_splitter", "p_combiner", "p_ps", "p_mixer", "p_lo", "p_lpf", "p_bb_amp")


@dataclass(frozen=True)
class ComponentPowerModel:
    """Power draw of each analog/RF device in Watts, plus the ADC model."""

    p_lna: float = 39e-3
    p_splitter: float = 19.5e-3
    p_combiner: float = 19.5e-3
    p_ps: float = 2e-3
    p_mixer: float = 16.8e-3
    p_lo: float = 5e-3
    p_lpf: float = 14e-3
    p_bb_amp: float = 5e-3
    adc: AdcModel = field(default_factory=lambda: AdcModel.preset("HPADC"))

    def __post_init__(self):
        for name in _WATT_FIELDS:
            if getattr(self, name) < 0:
                raise ValidationError(f"{name} must be >= 0", field=name)


def hpadc_model() -> ComponentPowerModel:
    """State-of-the-art parts: 494 fJ/step/Hz ADCs, 2 mW phase shifters."""
    return ComponentPowerModel(adc=AdcModel.preset("HPADC"))


def lpadc_model() -> ComponentPowerModel:
    """Projected future parts: 5 fJ/step/Hz ADCs, near-zero-power phase shifters."""
    return ComponentPowerModel(p_ps=0.0, adc=AdcModel.preset("LPADC"))


POWER_MODEL_PRESETS = {"HPADC": hpadc_model, "LPADC": lpadc_model}


@dataclass(frozen=True)
class PowerBreakdown:
    """Total receiver power with its per-device composition.

    ``p_fixed`` collects components whose count does not scale with the
    number of antennas and ``p_per_antenna`` those that do (ADCs excluded
    from both; their count and exponential bit scaling are kept separate).
    """

    total: float
    per_device: dict
    p_rf_chain: float
    p_fixed: float
    p_per_antenna: float


def rf_chain_power(m: ComponentPowerModel) -> float:
    """Power of one RF chain: mixer + LO + low-pass filter + baseband amp."""
    return m.p_mixer + m.p_lo + m.p_lpf + m.p_bb_amp


def total_power(
    arch: str,
    m: ComponentPowerModel,
    n_rx: int,
    bandwidth_hz: float,
    bits: int,
    n_rf: int | None = None,
) -> PowerBreakdown:
    """Total receiver power for one architecture at the given ADC bit width."""
    if arch not in ARCHITECTURES:
        raise ValidationError(f"arch must be one of {ARCHITECTURES}", field="arch")
    if n_rx < 1:
        raise ValidationError("n_rx must be >= 1", field="n_rx")
    p_rf = rf_chain_power(m)
    p_adc = adc_power(m.adc, bandwidth_hz, bits)

    if arch == "AC":
        counts = {
            "lna": n_rx,
            "phase_shifter": n_rx,
            "splitter": 0,
            "combiner": 1,
            "mixer": 1,
            "lo": 1,
            "lpf": 1,
            "bb_amp": 1,
            "adc": ADCS_PER_CHAIN,
        }
        p_fixed = p_rf + m.p_combiner
        p_per_antenna = m.p_lna + m.p_ps
    elif arch == "DC":
        counts = {
            "lna": n_rx,
            "phase_shifter": 0,
            "splitter": 0,
            "combiner": 0,
            "mixer": n_rx,
            "lo": n_rx,
            "lpf": n_rx,
            "bb_amp": n_rx,
            "adc": ADCS_PER_CHAIN * n_rx,
        }
        p_fixed = 0.0
        p_per_antenna = m.p_lna + p_rf
    else:  # HC
        if n_rf is None or not 1 <= n_rf <= n_rx:
            raise ValidationError(f"HC needs n_rf in 1..{n_rx}", field="n_rf")
        counts = {
            "lna": n_rx,
            "phase_shifter": n_rx * n_rf,
            "splitter": n_rx,
            "combiner": n_rf,
            "mixer": n_rf,
            "lo": n_rf,
            "lpf": n_rf,
            "bb_amp": n_rf,
            "adc": ADCS_PER_CHAIN * n_rf,
        }
        p_fixed = n_rf * (p_rf + m.p_combiner)
        p_per_antenna = m.p_lna + m.p_splitter + n_rf * m.p_ps

    unit = {
        "lna": m.p_lna,
        "phase_shifter": m.p_ps,
        "splitter": m.p_splitter,
        "combiner": m.p_combiner,
        "mixer": m.p_mixer,
        "lo": m.p_lo,
        "lpf": m.p_lpf,
        "bb_amp": m.p_bb_amp,
        "adc": p_adc,
    }
    per_device = {name: counts[name] * unit[name] for name in counts if counts[name] > 0}
    total = float(sum(per_device.values()))
    return PowerBreakdown(
        total=total,
        per_device=per_device,
        p_rf_chain=p_rf,
        p_fixed=p_fixed,
        p_per_antenna=p_per_antenna,
    )


# ---------------------------------------------------------------------------
# Key-value config round trip

_CONFIG_HEADER = (
    "# Receiver component power model.\n"
    "# Units: p_* values in Watts; walden_c in fJ/step/Hz.\n"
)
_SECTION = "power_model"


def power_model_to_config(m: ComponentPowerModel) -> str:
    """Serialize to an editable key=value file (units stated in the header)."""
    cp = configparser.ConfigParser()
    cp[_SECTION] = {name: repr(getattr(m, name)) for name in _WATT_FIELDS}
    cp[_SECTION]["walden_c"] = repr(m.adc.walden_c)
    cp[_SECTION]["label"] = m.adc.label
    buf = io.StringIO()
    cp.write(buf)
    return _CONFIG_HEADER + buf.getvalue()


def power_model_from_config(text: str) -> ComponentPowerModel:
    """Parse a config produced by :func:`power_model_to_config`."""
    cp = configparser.ConfigParser()
    cp.read_string(text)
    if _SECTION not in cp:
        raise ValidationError(f"missing [{_SECTION}] section", field=_SECTION)
    sec = cp[_SECTION]
    kwargs = {}
    for name in _WATT_FIELDS:
        if name not in sec:
            raise ValidationError(f"missing key {name}", field=name)
        kwargs[name] = float(sec[name])
    if "walden_c" not in sec:
        raise ValidationError("missing key walden_c", field="walden_c")
    adc = AdcModel(walden_c=float(sec["walden_c"]), label=sec.get("label", "custom"))
    return ComponentPowerModel(adc=adc, **kwargs)


def power_model_to_dict(m: ComponentPowerModel) -> dict:
    d = {name: getattr(m, name) for name in _WATT_FIELDS}
    d["walden_c"] = m.adc.walden_c
    d["label"] = m.adc.label
    return d


def power_model_from_dict(d: dict) -> ComponentPowerModel:
    known = set(_WATT_FIELDS) | {"walden_c", "label"}
    for key in d:
        if key not in known:
            raise ValidationError(f"unknown power model key {key!r}", field=key)
    kwargs = {}
    for name in _WATT_FIELDS:
        if name in d:
            value = d[name]
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise ValidationError(f"{name} must be a number", field=name)
            kwargs[name] = float(value)
    walden = d.get("walden_c", AdcModel.preset("HPADC").walden_c)
    if not isinstance(walden, (int, float)) or isinstance(walden, bool):
        raise ValidationError("walden_c must be a number", field="walden_c")
    adc = AdcModel(walden_c=float(walden), label=str(d.get("label", "custom")))
    return ComponentPowerModel(adc=adc, **kwargs)
