"""Link-level simulator and decision toolkit for millimeter-wave MIMO receivers.

The package compares three receiver architectures -- analog combining (AC),
hybrid combining (HC) and fully digital combining (DC) -- in terms of the
spectral efficiency they achieve with low-resolution ADCs and the total power
the receiver hardware consumes.  Quantization is handled with an additive
quantization noise model, and the SE/EE trade-off is summarized through
Pareto/utility analysis on Monte Carlo sweep results.
"""

from mmwrx.channel import (
    ChannelParams,
    ChannelRealization,
    ClusterLaw,
    PathlossSpec,
    draw_channel,
    pathloss_db,
    steering_vector,
)
from mmwrx.combining import (
    AcDesign,
    DcDesign,
    HcDesign,
    LinkConfig,
    ac_beamformer,
    ac_rate,
    dc_design,
    dc_rate,
    hc_design,
    hc_rate,
    hc_rf_combiner,
    waterfill,
)
from mmwrx.errors import LimitError, NumericError, ValidationError
from mmwrx.power import (
    ComponentPowerModel,
    PowerBreakdown,
    hpadc_model,
    lpadc_model,
    rf_chain_power,
    total_power,
)
from mmwrx.quantization import (
    AdcModel,
    QuantizerModel,
    adc_power,
    eta_closed_form,
    eta_of_bits,
    quantized_snr_scalar,
)
from mmwrx.tradeoff import (
    TradeoffPoint,
    UtilityConfig,
    delta_gamma_star,
    ee_of_se_closed_form,
    energy_efficiency,
    pareto_indices,
    transition_point,
    utility_frontier,
)
from mmwrx.montecarlo import (
    Scenario,
    SweepResult,
    calibrate_noise,
    downlink_scenario,
    ergodic_rate,
    run_sweep,
    uplink_scenario,
)

__version__ = "0.1.0"

__all__ = [
    "AcDesign",
    "AdcModel",
    "ChannelParams",
    "ChannelRealization",
    "ClusterLaw",
    "ComponentPowerModel",
    "DcDesign",
    "HcDesign",
    "LimitError",
    "LinkConfig",
    "NumericError",
    "PathlossSpec",
    "PowerBreakdown",
    "QuantizerModel",
    "Scenario",
    "SweepResult",
    "TradeoffPoint",
    "UtilityConfig",
    "ValidationError",
    "ac_beamformer",
    "ac_rate",
    "adc_power",
    "calibrate_noise",
    "dc_design",
    "dc_rate",
    "delta_gamma_star",
    "downlink_scenario",
    "draw_channel",
    "ee_of_se_closed_form",
    "energy_efficiency",
    "ergodic_rate",
    "eta_closed_form",
    "eta_of_bits",
    "hc_design",
    "hc_rate",
    "hc_rf_combiner",
    "hpadc_model",
    "lpadc_model",
    "pareto_indices",
    "pathloss_db",
    "quantized_snr_scalar",
    "rf_chain_power",
    "run_sweep",
    "steering_vector",
    "total_power",
    "tradeoff",
    "transition_point",
    "uplink_scenario",
    "utility_frontier",
    "waterfill",
]
