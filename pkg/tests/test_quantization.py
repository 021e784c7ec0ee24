import numpy as np
import pytest

from mmwrx.errors import ValidationError
from mmwrx.quantization import (
    ETA_TABLE,
    AdcModel,
    QuantizerModel,
    adc_power,
    eta_closed_form,
    eta_of_bits,
    quantized_snr_scalar,
)

ETA_B1 = 0.3634


class TestEta:
    @pytest.mark.parametrize(
        "bits,expected",
        [(1, 0.3634), (2, 0.1175), (3, 0.03454), (4, 0.009497), (5, 0.002499)],
    )
    def test_table_values_exact(self, bits, expected):
        assert eta_of_bits(bits) == expected

    def test_closed_form_definition(self):
        for b in range(1, 17):
            assert eta_closed_form(b) == pytest.approx(
                np.pi * np.sqrt(3.0) / 2.0 * 2.0 ** (-2 * b), rel=1e-15
            )

    def test_switchover_above_table(self):
        for b in range(6, 17):
            assert eta_of_bits(b) == eta_closed_form(b)

    def test_eight_bit_value(self):
        # (pi*sqrt(3)/2) / 2^16
        assert eta_of_bits(8) == pytest.approx(4.151457285e-05, rel=1e-9)

    def test_strictly_decreasing(self):
        etas = [eta_of_bits(b) for b in range(1, 17)]
        assert all(a > b for a, b in zip(etas, etas[1:]))
        assert etas[-1] < 1e-9

    def test_table_vs_closed_form_mismatch_at_4(self):
        # at b=4 the measured table value undercuts the asymptotic form;
        # the table wins for b <= 5
        assert eta_closed_form(4) == pytest.approx(0.010629, rel=1e-3)
        assert eta_of_bits(4) == 0.009497

    def test_invalid_bits_rejected(self):
        with pytest.raises(ValidationError):
            eta_of_bits(0)
        with pytest.raises(ValidationError):
            eta_closed_form(-2)


class TestQuantizerModel:
    def test_from_bits_uses_table(self):
        q = QuantizerModel.from_bits(1)
        assert q.eta == ETA_TABLE[1]

    def test_unquantized(self):
        q = QuantizerModel.unquantized()
        assert q.eta == 0.0 and q.bits is None

    def test_bit_cap(self):
        QuantizerModel.from_bits(16)
        with pytest.raises(ValidationError):
            QuantizerModel.from_bits(17)
        with pytest.raises(ValidationError):
            QuantizerModel.from_bits(0)


class TestQuantizedSnr:
    def test_unit_snr_one_bit(self):
        # (1-eta)/(1+eta) at gamma=1
        expected = (1 - ETA_B1) / (1 + ETA_B1)
        assert quantized_snr_scalar(1.0, ETA_B1) == pytest.approx(expected)
        assert expected == pytest.approx(0.466921, abs=5e-6)

    def test_zero_input(self):
        assert quantized_snr_scalar(0.0, 0.25) == 0.0

    def test_saturation_limit(self):
        # gamma -> inf approaches (1-eta)/eta
        limit = (1 - ETA_B1) / ETA_B1
        assert limit == pytest.approx(1.75179, abs=5e-6)
        assert quantized_snr_scalar(1e9, ETA_B1) == pytest.approx(limit, rel=1e-6)
        assert quantized_snr_scalar(1e9, ETA_B1) < limit

    def test_upper_bounds_on_grid(self):
        gammas = np.logspace(-3, 3, 20)
        for b in range(1, 17):
            eta = eta_of_bits(b)
            for g in gammas:
                gq = quantized_snr_scalar(g, eta)
                assert gq <= min((1 - eta) / eta, g) + 1e-15

    def test_identity_when_eta_zero(self):
        for g in [0.0, 0.3, 7.0]:
            assert quantized_snr_scalar(g, 0.0) == g

    def test_monotone_in_gamma_and_bits(self):
        gammas = np.linspace(0.0, 50.0, 40)
        for b in range(1, 9):
            eta = eta_of_bits(b)
            vals = [quantized_snr_scalar(g, eta) for g in gammas]
            assert all(x <= y + 1e-15 for x, y in zip(vals, vals[1:]))
        for g in [0.1, 1.0, 10.0]:
            vals = [quantized_snr_scalar(g, eta_of_bits(b)) for b in range(1, 9)]
            assert all(x <= y + 1e-15 for x, y in zip(vals, vals[1:]))

    def test_low_snr_linearization(self):
        # (1-eta)*gamma approximates within 1% for gamma <= 0.01
        for b in range(1, 9):
            eta = eta_of_bits(b)
            for g in [1e-4, 1e-3, 0.01]:
                gq = quantized_snr_scalar(g, eta)
                assert abs(gq - (1 - eta) * g) / gq <= 0.01

    def test_invalid_inputs_rejected(self):
        with pytest.raises(ValidationError):
            quantized_snr_scalar(-1.0, 0.1)
        with pytest.raises(ValidationError):
            quantized_snr_scalar(1.0, 1.0)


class TestAdcPower:
    def test_hpadc_4bit_1ghz(self):
        adc = AdcModel.preset("HPADC")
        assert adc_power(adc, 1e9, 4) == pytest.approx(7.904e-3, rel=1e-12)

    def test_lpadc_8bit_1ghz(self):
        adc = AdcModel.preset("LPADC")
        assert adc_power(adc, 1e9, 8) == pytest.approx(1.28e-3, rel=1e-12)

    def test_one_extra_bit_doubles_power(self):
        adc = AdcModel(walden_c=65.0, label="IPADC")
        for b in range(1, 16):
            assert adc_power(adc, 2e9, b + 1) == pytest.approx(2 * adc_power(adc, 2e9, b))

    def test_presets(self):
        assert AdcModel.preset("LPADC").walden_c == 5.0
        assert AdcModel.preset("IPADC").walden_c == 65.0
        assert AdcModel.preset("HPADC").walden_c == 494.0
        with pytest.raises(ValidationError):
            AdcModel.preset("XPADC")

    def test_invalid_inputs_rejected(self):
        adc = AdcModel.preset("LPADC")
        with pytest.raises(ValidationError):
            adc_power(adc, 0.0, 4)
        with pytest.raises(ValidationError):
            adc_power(adc, 1e9, 0)
        with pytest.raises(ValidationError):
            adc_power(adc, 1e9, 17)
        with pytest.raises(ValidationError):
            AdcModel(walden_c=0.0)
