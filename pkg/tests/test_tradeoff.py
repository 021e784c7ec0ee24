import numpy as np
import pytest

from mmwrx.errors import ValidationError
from mmwrx.quantization import eta_of_bits, quantized_snr_scalar
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

K = np.pi * np.sqrt(3.0) / 2.0


def point(scheme, bits, se, ee):
    return TradeoffPoint(scheme=scheme, bits=bits, n_rf=1, se=se, ee=ee, p_tot=1.0)


class TestEnergyEfficiency:
    def test_reference_value(self):
        # 1e9 * 32 / 1.6 = 20 Gbit/J
        assert energy_efficiency(32.0, 1.6, 1e9) == pytest.approx(20e9)

    def test_zero_se(self):
        assert energy_efficiency(0.0, 2.0, 1e9) == 0.0

    def test_reciprocal_in_power(self):
        assert energy_efficiency(10.0, 0.8, 1e9) == pytest.approx(
            2 * energy_efficiency(10.0, 1.6, 1e9)
        )

    def test_nonpositive_power_rejected(self):
        with pytest.raises(ValidationError):
            energy_efficiency(1.0, 0.0, 1e9)


class TestClosedFormEE:
    def test_domain_error_names_bound(self):
        with pytest.raises(ValidationError) as err:
            ee_of_se_closed_form(se=1.1, gamma=1.0, p_o=0.0, p_a=0.08, n_rx=1,
                                 bandwidth_hz=1e9, c_fj=494.0)
        assert "log2(1+gamma)" in str(err.value)

    def test_linear_regime_near_origin(self):
        kwargs = dict(gamma=1.0, p_o=0.0, p_a=0.08, n_rx=16, bandwidth_hz=1e9, c_fj=494.0)
        slope = ee_of_se_closed_form(se=1e-9, **kwargs) / 1e-9
        for se in (1e-6, 1e-4, 1e-3):
            assert ee_of_se_closed_form(se=se, **kwargs) / se == pytest.approx(slope, rel=1e-3)

    def test_collapse_near_ceiling(self):
        # the ADC term diverges like 1/sqrt(distance to the ceiling)
        kwargs = dict(gamma=1.0, p_o=0.0, p_a=0.08, n_rx=16, bandwidth_hz=1e9, c_fj=494.0)
        ceiling = np.log2(2.0)
        ee_mid = ee_of_se_closed_form(se=0.5, **kwargs)
        edges = [ee_of_se_closed_form(se=ceiling - eps, **kwargs) for eps in (1e-3, 1e-6, 1e-9, 1e-12)]
        assert all(a > b for a, b in zip(edges, edges[1:]))
        assert edges[-1] < 1e-3 * ee_mid

    def test_matches_exact_pipeline_scalar_channel(self):
        # scalar channel at gamma=1, low-power ADC parts: the closed form uses
        # the asymptotic eta, the oracle prices each bit width exactly
        gamma, bw, c_fj = 1.0, 1e9, 5.0
        p_a = 39e-3 + 40.8e-3  # LNA + RF chain per antenna
        for b in range(4, 9):
            se_b = np.log2(1.0 + quantized_snr_scalar(gamma, eta_of_bits(b)))
            p_tot = p_a + 2 * c_fj * 1e-15 * bw * 2.0**b
            exact = energy_efficiency(se_b, p_tot, bw)
            closed = ee_of_se_closed_form(se=se_b, gamma=gamma, p_o=0.0, p_a=p_a,
                                          n_rx=1, bandwidth_hz=bw, c_fj=c_fj)
            assert closed == pytest.approx(exact, rel=0.10)

    def test_regime1_within_25pct_of_linear_extrapolation(self):
        # parameters chosen so the transition SE minus one bit stays inside
        # the domain: gamma=0.4, X^2 = 0.2*K
        gamma, bw, c_fj = 0.4, 1e9, 494.0
        x = np.sqrt(0.2 * K)
        p_a = x * 2 * bw * c_fj * 1e-15
        se_tilde, _ = transition_point(gamma, p_a, bw, c_fj)
        assert se_tilde is not None and se_tilde > 1.0
        kwargs = dict(gamma=gamma, p_o=0.0, p_a=p_a, n_rx=1, bandwidth_hz=bw, c_fj=c_fj)
        slope = ee_of_se_closed_form(se=1e-9, **kwargs) / 1e-9
        for se in np.linspace(0.01, se_tilde - 1.0, 25):
            ee = ee_of_se_closed_form(se=float(se), **kwargs)
            assert abs(ee - slope * se) / ee <= 0.25


class TestTransitionPoint:
    def test_bit_count_for_reference_receiver(self):
        # per-antenna power 79.8 mW, 1 GHz, 494 fJ/step/Hz
        _, b_star = transition_point(1.0, 79.8e-3, 1e9, 494.0)
        assert b_star == pytest.approx(6.34, abs=0.01)

    def test_se_none_when_adc_dominates(self):
        # large X^2 pushes the log argument below one
        se_tilde, b_star = transition_point(1.0, 79.8e-3, 1e9, 494.0)
        assert se_tilde is None
        assert np.isfinite(b_star)

    def test_balanced_receiver_value(self):
        # X = 1, gamma = 1: log2(2 / (1 + 2/(pi*sqrt(3))))
        c_fj = 494.0
        p_a = 2 * 1e9 * c_fj * 1e-15  # makes X exactly 1
        se_tilde, b_star = transition_point(1.0, p_a, 1e9, c_fj)
        assert b_star == pytest.approx(0.0, abs=1e-12)
        assert se_tilde == pytest.approx(np.log2(2.0 / (1.0 + 2.0 / (np.pi * np.sqrt(3)))), rel=1e-12)
        assert se_tilde == pytest.approx(0.5485, abs=5e-4)

    def test_invalid_inputs_rejected(self):
        with pytest.raises(ValidationError):
            transition_point(0.0, 1e-3, 1e9, 5.0)
        with pytest.raises(ValidationError):
            transition_point(1.0, 0.0, 1e9, 5.0)


def se_tilde_raw(gamma, p_a, bw, c_fj):
    """Unclamped transition-SE log argument used for equality solving."""
    x = p_a / (2 * bw * c_fj * 1e-15)
    return (gamma + 1.0) / (gamma + (2.0 / (np.pi * np.sqrt(3.0))) * x**2)


class TestDeltaGammaStar:
    def test_zero_for_equal_powers(self):
        delta, flipped = delta_gamma_star(1.0, 10e-3, 10e-3, 1e9, 5.0)
        assert delta == 0.0 and not flipped

    def test_reference_value_and_equality_oracle(self):
        gamma1, p1, p2, bw, c = 1.0, 10e-3, 20e-3, 1e9, 5.0
        delta, flipped = delta_gamma_star(gamma1, p1, p2, bw, c)
        assert not flipped
        # 2*(4e-4 - 1e-4) / (1e-4 - K*(B*c)^2), K*(B*c)^2 = 6.8017e-11
        assert delta == pytest.approx(6.000004081, abs=1e-8)
        # oracle: bisection on gamma2 for equal transition-SE argument
        target = se_tilde_raw(gamma1, p1, bw, c)
        lo, hi = gamma1, gamma1 + 100.0
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if se_tilde_raw(mid, p2, bw, c) < target:
                lo = mid
            else:
                hi = mid
        assert delta == pytest.approx(0.5 * (lo + hi) - gamma1, rel=1e-4)

    def test_negative_when_adc_energy_dominates(self):
        # large c makes the denominator negative
        delta, flipped = delta_gamma_star(1.0, 1e-4, 2e-4, 1e9, 12500.0)
        assert flipped and delta < 0

    def test_sign_flip_located_by_bisection(self):
        bw, c = 1e9, 494.0
        critical = np.sqrt(K) * bw * c * 1e-15
        p2 = 1.0  # keeps the numerator positive throughout

        def sign_at(p1):
            try:
                delta, _ = delta_gamma_star(1.0, p1, p2, bw, c)
            except ValidationError:
                return 0.0  # landed on the singular point itself
            return np.sign(delta)

        lo, hi = critical / 10, critical * 10
        assert sign_at(lo) < 0 < sign_at(hi)
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            s = sign_at(mid)
            if s == 0.0:
                lo = hi = mid
                break
            if s < 0:
                lo = mid
            else:
                hi = mid
        assert 0.5 * (lo + hi) == pytest.approx(critical, rel=1e-9)

    def test_exact_singularity_rejected(self):
        bw, c = 1e9, 494.0
        critical = np.sqrt(K) * bw * c * 1e-15
        with pytest.raises(ValidationError):
            delta_gamma_star(1.0, critical, 1.0, bw, c)


class TestUtilityFrontier:
    def test_alpha_extremes(self):
        pts = [point("AC", 1, 10.0, 5e9), point("DC", 2, 30.0, 2e9), point("HC", 3, 20.0, 8e9)]
        selections, pareto = utility_frontier(pts, UtilityConfig(alpha_grid=(0.0, 1.0)))
        assert selections[0.0] == 1  # max SE
        assert selections[1.0] == 2  # max EE
        assert 0.0 in pts[1].selected_alphas and 1.0 in pts[2].selected_alphas

    def test_dominated_point_never_selected(self):
        pts = [point("AC", 1, 10.0, 5e9), point("DC", 2, 12.0, 6e9), point("HC", 3, 5.0, 1e9)]
        selections, pareto = utility_frontier(pts)
        assert pts[2].selected_alphas == []
        assert 2 not in pareto
        assert set(selections.values()) <= set(pareto)

    def test_selected_subset_of_pareto_random(self, rng):
        pts = [
            point("DC", b, float(rng.uniform(0, 40)), float(rng.uniform(0, 30e9)))
            for b in range(30)
        ]
        selections, pareto = utility_frontier(pts)
        assert set(selections.values()) <= set(pareto)

    def test_tie_breaks_toward_higher_se(self):
        pts = [point("AC", 1, 10.0, 5e9), point("DC", 2, 20.0, 5e9)]
        selections, _ = utility_frontier(pts, UtilityConfig(alpha_grid=(1.0,)))
        # equal EE: the higher-SE point wins alpha=1
        assert selections[1.0] == 1

    def test_empty_points_rejected(self):
        with pytest.raises(ValidationError):
            utility_frontier([])

    def test_invalid_alpha_rejected(self):
        with pytest.raises(ValidationError):
            UtilityConfig(alpha_grid=(0.0, 1.5))
        with pytest.raises(ValidationError):
            UtilityConfig(alpha_grid=())


class TestPareto:
    def test_duplicates_both_kept(self):
        pts = [point("AC", 1, 10.0, 5e9), point("DC", 2, 10.0, 5e9)]
        assert pareto_indices(pts) == [0, 1]

    def test_strict_dominance_removes(self):
        pts = [point("AC", 1, 10.0, 5e9), point("DC", 2, 10.0, 6e9)]
        assert pareto_indices(pts) == [1]
