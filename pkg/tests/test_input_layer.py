"""Benchmark generators, instance profiling and file loaders."""

import io
import json
import logging

import numpy as np
import pytest

from qtsqrt.exceptions import HypothesisError
from qtsqrt.input_layer import (
    create_profile,
    gen_example1,
    gen_example2,
    gen_example3,
    load_dense,
    load_instance,
    load_qt_matrix,
    require_hypotheses,
)
from qtsqrt.models import LaurentSymbol
from qtsqrt.qtcore import qt_dense_window, qt_identity, qt_min_entry, qt_norm_inf, qt_toeplitz
from qtsqrt.report import instance_payload, write_dense
from qtsqrt.symbolsqrt import sqrt_symbol


class TestExampleOne:
    def test_hypotheses_hold(self, small_profile):
        m = small_profile.metadata
        assert small_profile.hypotheses_ok
        assert m.a1_norm_inf < 1
        assert m.a1_min_entry >= 0
        assert (m.correction_rows, m.correction_cols) == (6, 6)

    def test_band(self, small_profile):
        symbol = small_profile.A1.symbol
        assert (symbol.q, symbol.p) == (3, 2)
        assert small_profile.metadata.band == 6

    def test_pure_toeplitz(self, toeplitz_profile):
        assert toeplitz_profile.A.correction.is_empty
        assert toeplitz_profile.hypotheses_ok

    def test_deterministic(self):
        first, second = gen_example1(5, 4, 3, 6), gen_example1(5, 4, 3, 6)
        np.testing.assert_array_equal(first.correction.data, second.correction.data)
        np.testing.assert_array_equal(first.symbol.neg, second.symbol.neg)
        np.testing.assert_array_equal(first.symbol.pos, second.symbol.pos)
        other = gen_example1(6, 4, 3, 6)
        assert not np.array_equal(first.correction.data, other.correction.data)

    def test_scaling(self):
        A1 = qt_identity(1e-15) - gen_example1(2, 5, 5, 4)
        norm = qt_norm_inf(A1)
        # ||S|| = ||S~|| / (||S~|| + 1) and s_0 = 1 / (||S~|| + 1)
        assert A1.symbol.coefficient(0) == pytest.approx(1.0 - norm)

    def test_invalid(self):
        with pytest.raises(HypothesisError):
            gen_example1(0, 0, 3)


class TestExampleTwo:
    def test_structure(self, block_profile):
        A1 = block_profile.A1
        assert block_profile.hypotheses_ok
        assert A1.symbol.band == 1 and A1.symbol.coefficient(0) == pytest.approx(0.5)
        window = qt_dense_window(A1, 40, 40)
        np.testing.assert_allclose(window[:2].sum(axis=1), 0.9)
        np.testing.assert_allclose(np.diag(window)[:2], 0.0, atol=1e-15)
        np.testing.assert_allclose(window[20:, 20:], 0.0, atol=1e-15)
        assert np.all(np.tril(window[:2, :10], -1) == 0)

    def test_norm(self, block_profile):
        assert block_profile.metadata.a1_norm_inf == pytest.approx(0.9)

    def test_symbol_root(self, block_profile):
        result = sqrt_symbol(block_profile.A.symbol)
        assert result.bhat.coefficient(0) == pytest.approx(1 - np.sqrt(0.5), abs=1e-15)
        assert result.n_final == 4

    @pytest.mark.parametrize(
        "args",
        [(0.0, 10, 20, 2, 10), (1.0, 10, 20, 2, 10), (0.5, 10, 20, 0, 10), (0.5, 10, 20, 11, 10)],
    )
    def test_invalid(self, args):
        with pytest.raises(HypothesisError):
            gen_example2(*args)

    def test_row_mass_bound(self):
        with pytest.raises(HypothesisError):
            gen_example2(0.5, 1, 1, 1, 2, row_mass=1.0)


class TestExampleThree:
    def test_scale(self):
        A, c = gen_example3(1, 4, 2)
        assert A.correction.is_empty
        # s_0 = 1 is counted in both halves of c, so a(1) = c - s(1) = 1
        assert A.symbol.coefficient(0) == pytest.approx(c - 1.0)
        profile = create_profile(A, c)
        assert profile.hypotheses_ok
        assert profile.metadata.a1_norm_inf == pytest.approx((c - 1.0) / c)

    def test_band(self):
        A, _ = gen_example3(1, 20, 2)
        assert (A.symbol.q, A.symbol.p) == (1, 19)

    def test_invalid(self):
        with pytest.raises(HypothesisError):
            gen_example3(0, 0, 2)


class TestProfiler:
    def test_norm_violation_is_reported(self, caplog):
        A = qt_identity() - qt_toeplitz(LaurentSymbol(neg=[0.6], pos=[0.6]))
        with caplog.at_level(logging.WARNING, logger="qtsqrt.input_layer.profiler"):
            profile = create_profile(A)
        assert not profile.hypotheses_ok
        assert "hypothesis violated" in caplog.text
        with pytest.raises(HypothesisError, match="not below 1"):
            require_hypotheses(profile)

    def test_negative_entry_is_reported(self):
        A = qt_identity() - qt_toeplitz(LaurentSymbol(neg=[-0.1], pos=[0.5]))
        profile = create_profile(A)
        assert any("negative entry" in v for v in profile.violations)
        assert qt_min_entry(profile.A1) == pytest.approx(-0.1)

    def test_gamma_normalisation(self):
        A = 4.0 * (qt_identity() - qt_toeplitz(LaurentSymbol.constant(0.5)))
        profile = create_profile(A, 4.0)
        assert profile.A1.symbol.coefficient(0) == pytest.approx(0.5)
        assert profile.metadata.a1_symbol_sum == pytest.approx(0.5)
        assert profile.normalized.symbol.coefficient(0) == pytest.approx(0.5)

    def test_gamma_must_be_positive(self):
        with pytest.raises(HypothesisError):
            create_profile(qt_identity(), 0.0)


class TestLoaders:
    def test_instance_file(self, tmp_path, small_profile):
        path = tmp_path / "inst.json"
        path.write_text(json.dumps(instance_payload(small_profile.A, 2.5, seed=7)))
        A, gamma = load_instance(path)
        assert gamma == 2.5
        np.testing.assert_array_equal(A.correction.data, small_profile.A.correction.data)
        np.testing.assert_array_equal(A.symbol.pos, small_profile.A.symbol.pos)
        assert A.threshold == small_profile.A.threshold

    def test_bare_matrix_and_stream(self, small_profile):
        stream = io.StringIO(json.dumps(small_profile.A.to_dict()))
        A, gamma = load_instance(stream)
        assert gamma == 1.0
        assert (A.rows, A.cols) == (6, 6)

    def test_load_qt_matrix(self, tmp_path):
        path = tmp_path / "t.json"
        path.write_text(json.dumps({"symbol": {"neg": [0.5], "pos": [1.0]}}))
        A = load_qt_matrix(path)
        assert A.symbol.coefficient(-1) == 0.5
        assert A.correction.is_empty

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_instance(tmp_path / "nope.json")

    def test_wrong_extension(self, tmp_path):
        path = tmp_path / "inst.yaml"
        path.write_text("{}")
        with pytest.raises(ValueError, match="Unsupported extension"):
            load_instance(path)

    @pytest.mark.parametrize(
        "text",
        [
            "{not json",
            "[1, 2]",
            '{"correction": {}}',
            '{"symbol": {"pos": [1.0]}, "correction": {"rows": 2, "cols": 2, "data": [1.0]}}',
            '{"matrix": {"symbol": {"pos": [1.0]}}, "gamma": -1}',
        ],
    )
    def test_malformed(self, tmp_path, text):
        path = tmp_path / "bad.json"
        path.write_text(text)
        with pytest.raises(ValueError):
            load_instance(path)

    def test_dense(self, tmp_path):
        M = np.array([[1.0, 0.1], [1 / 3, -2.0]])
        np.testing.assert_array_equal(load_dense(write_dense(tmp_path / "m.csv", M)), M)

    def test_dense_non_numeric(self, tmp_path):
        path = tmp_path / "m.csv"
        path.write_text("1,2\n3,x\n")
        with pytest.raises(ValueError, match="non-numeric"):
            load_dense(path)
