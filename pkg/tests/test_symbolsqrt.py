"""Square root of a symbol by evaluation/interpolation at roots of unity."""

import logging

import numpy as np
import pytest

from qtsqrt.exceptions import ConvergenceError, HypothesisError
from qtsqrt.models import LaurentSymbol
from qtsqrt.symbol import add, evaluate, mul, scale, wiener_norm
import qtsqrt.symbolsqrt.algorithm as algorithm
from qtsqrt.symbolsqrt import check_interpolation_bound, sqrt_symbol, symbol_residual

ONE = LaurentSymbol.constant(1.0)
B_SMALL = LaurentSymbol(neg=[0.2, 0.1], pos=[0.1, 0.15, 0.0, 0.05])


def _square_of_one_minus(b, gamma=1.0):
    root = add(ONE, scale(b, -1.0))
    return scale(mul(root, root), gamma)


def _distance(a, b):
    return wiener_norm(add(a, scale(b, -1.0)))


class TestSqrtSymbol:
    @pytest.mark.parametrize("gamma", [1.0, 3.0, 0.5])
    def test_constant_symbol(self, gamma):
        result = sqrt_symbol(LaurentSymbol.constant(gamma * 0.25), gamma)
        assert result.n_final == 4
        assert result.doublings == 0
        assert result.b1 == pytest.approx(0.5)
        assert result.bhat.coefficient(0) == pytest.approx(0.5, abs=1e-15)
        assert _distance(result.bhat, LaurentSymbol.constant(0.5)) < 1e-14
        assert abs(result.delta_m) < 1e-13

    def test_unit_symbol_has_zero_root(self):
        result = sqrt_symbol(ONE)
        assert wiener_norm(result.bhat) < 1e-15
        assert result.b1 == 0.0

    @pytest.mark.parametrize("gamma", [1.0, 2.5])
    def test_recovers_banded_root(self, gamma):
        a = _square_of_one_minus(B_SMALL, gamma)
        result = sqrt_symbol(a, gamma, eps=1e-10)
        assert result.n_final == 4
        assert _distance(result.bhat, B_SMALL) < 1e-13
        assert result.b1 == pytest.approx(evaluate(B_SMALL, 1.0).real)
        assert symbol_residual(a, gamma, result.bhat) < 1e-13

    def test_derivatives_of_root(self):
        result = sqrt_symbol(_square_of_one_minus(B_SMALL))
        # b'(1) = sum j b_j, b''(1) = sum j (j - 1) b_j
        assert result.bp1 == pytest.approx(-0.2 - 0.2 + 0.15 + 0.15)
        assert result.bpp1 == pytest.approx(0.6 + 0.4 + 0.3)

    def test_random_generator_symbol(self, small_profile):
        a = small_profile.A.symbol
        result = sqrt_symbol(a, eps=1e-13)
        assert result.imag_residue < 1e-12
        assert symbol_residual(a, 1.0, result.bhat) < 1e-11
        assert result.bhat.coefficient(0) > 0

    def test_infinite_root_doubles(self):
        a = LaurentSymbol(neg=[], pos=[1.0, -0.9])
        result = sqrt_symbol(a, eps=1e-13)
        assert result.n_final > 4
        assert result.doublings > 0
        assert symbol_residual(a, 1.0, result.bhat) < 1e-11

    def test_budget_exhausted(self):
        a = LaurentSymbol(neg=[], pos=[1.0, -0.9])
        with pytest.raises(ConvergenceError) as err:
            sqrt_symbol(a, eps=1e-13, n_max=8)
        assert err.value.iterations == 1

    def test_nonpositive_value_at_one(self):
        with pytest.raises(HypothesisError):
            sqrt_symbol(LaurentSymbol.constant(-1.0))
        with pytest.raises(HypothesisError):
            sqrt_symbol(LaurentSymbol(neg=[], pos=[1.0, -1.0]))

    def test_branch_cut(self):
        with pytest.raises(HypothesisError, match="branch cut"):
            sqrt_symbol(LaurentSymbol.monomial(1))

    @pytest.mark.parametrize("gamma, eps", [(0.0, 1e-13), (-1.0, 1e-13), (1.0, 0.0)])
    def test_bad_parameters(self, gamma, eps):
        with pytest.raises(HypothesisError):
            sqrt_symbol(ONE, gamma, eps)

    def test_converged_run_logs(self, caplog):
        with caplog.at_level(logging.INFO, logger="qtsqrt.symbolsqrt.algorithm"):
            sqrt_symbol(_square_of_one_minus(B_SMALL))
        assert "converged at n=4" in caplog.text

    def test_rounding_floor_stop_warns(self, caplog, monkeypatch):
        monkeypatch.setattr(algorithm, "_noise_floor", lambda *args: 10.0)
        a = LaurentSymbol(neg=[], pos=[1.0, -0.5])
        with caplog.at_level(logging.WARNING, logger="qtsqrt.symbolsqrt.algorithm"):
            result = sqrt_symbol(a, eps=1e-13)
        assert result.n_final == 4
        assert 1e-13 <= result.delta_m < result.noise_floor
        assert "rounding floor" in caplog.text

    def test_eps_stop_does_not_warn(self, caplog):
        with caplog.at_level(logging.WARNING, logger="qtsqrt.symbolsqrt.algorithm"):
            result = sqrt_symbol(_square_of_one_minus(B_SMALL), eps=1e-10)
        assert result.delta_m < 1e-10
        assert "rounding floor" not in caplog.text

    def test_slow_decay_stops_below_floor_or_eps(self):
        a = LaurentSymbol(neg=[], pos=[1.0, -0.99])
        result = sqrt_symbol(a, eps=1e-13)
        assert result.delta_m < max(1e-13, result.noise_floor)
        assert result.n_final >= 1024
        assert symbol_residual(a, 1.0, result.bhat) < 1e-8


class TestInterpolationBound:
    def test_identical_symbols(self):
        assert check_interpolation_bound(B_SMALL, B_SMALL, 1e-16, 4)

    def test_heavy_tail_fails(self):
        eps = 1e-10
        b_ref = add(B_SMALL, LaurentSymbol.monomial(20, 10 * eps))
        assert not check_interpolation_bound(b_ref, B_SMALL, eps, 4)

    def test_against_refined_reference(self):
        a = LaurentSymbol(neg=[], pos=[1.0, -0.5])
        coarse = sqrt_symbol(a, eps=1e-13)
        fine = sqrt_symbol(a, eps=1e-15)
        assert fine.n_final >= coarse.n_final
        assert check_interpolation_bound(fine.bhat, coarse.bhat, 1e-12, coarse.n_final)

    @pytest.mark.parametrize("seed", [0, 1, 2])
    @pytest.mark.parametrize("gamma", [1.0, 4.0])
    def test_band_twelve_root_within_bound(self, seed, gamma):
        rng = np.random.default_rng(seed)
        c = LaurentSymbol(neg=rng.random(6), pos=rng.random(7))
        c = scale(c, 0.9 / wiener_norm(c))
        result = sqrt_symbol(_square_of_one_minus(c, gamma), gamma, eps=1e-13)
        assert check_interpolation_bound(c, result.bhat, 1e-13, result.n_final)
