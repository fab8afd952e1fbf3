"""Structured QT arithmetic checked against dense truncations."""

import logging

import numpy as np
import pytest

from qtsqrt.exceptions import BreakdownError, HypothesisError
from qtsqrt.models import CorrectionBlock, LaurentSymbol, QtMatrix
from qtsqrt.qtcore import (
    correction_stats,
    dense_norm_inf,
    dense_sqrt_oracle,
    numerical_rank,
    qt_add,
    qt_block_norm_inf,
    qt_compress,
    qt_dense_window,
    qt_from_correction,
    qt_identity,
    qt_min_entry,
    qt_mul,
    qt_neumann_inverse,
    qt_neumann_inverse_shifted,
    qt_norm_inf,
    qt_scale,
    qt_toeplitz,
    qt_truncate_dense,
    qt_zero,
)
from qtsqrt.symbol import add, scale, wiener_norm

TRIDIAG = LaurentSymbol(neg=[1.0], pos=[2.0, 1.0])


def _window(A, n):
    return qt_dense_window(A, n, n)


class TestProduct:
    def test_shift_product_leaves_corner(self):
        prod = qt_mul(qt_toeplitz(LaurentSymbol.monomial(-1)), qt_toeplitz(LaurentSymbol.monomial(1)))
        assert prod.symbol.coefficient(0) == 1.0 and prod.symbol.band == 1
        np.testing.assert_array_equal(prod.correction.data, [[-1.0]])

    def test_matches_dense_product(self, random_qt):
        """Leading window of AB equals that of A_N B_N for N past the band."""
        for _ in range(5):
            A = random_qt(q=3, p=4, rows=5, cols=6)
            B = random_qt(q=2, p=3, rows=4, cols=3)
            n, N = 12, 40
            expected = (qt_truncate_dense(A, N) @ qt_truncate_dense(B, N))[:n, :n]
            np.testing.assert_allclose(_window(qt_mul(A, B), n), expected, atol=1e-12)

    def test_operator_aliases(self, random_qt):
        A, B = random_qt(), random_qt()
        np.testing.assert_allclose(_window(A @ B, 10), _window(qt_mul(A, B), 10))
        np.testing.assert_allclose(_window(A - B, 10), _window(A, 10) - _window(B, 10), atol=1e-14)
        np.testing.assert_allclose(_window(2.0 * A, 10), 2.0 * _window(A, 10))
        np.testing.assert_allclose(_window(-A, 10), -_window(A, 10))

    def test_add_symbols(self):
        s = qt_add(qt_toeplitz(LaurentSymbol.monomial(1)), qt_toeplitz(LaurentSymbol.monomial(-1)))
        assert s.symbol.coefficient(1) == 1.0 and s.symbol.coefficient(-1) == 1.0
        assert s.correction.is_empty

    def test_add_pads_corrections(self):
        A = QtMatrix(LaurentSymbol.zero(), CorrectionBlock(np.ones((2, 3))))
        B = QtMatrix(LaurentSymbol.zero(), CorrectionBlock(np.ones((4, 1))))
        C = qt_add(A, B)
        assert (C.rows, C.cols) == (4, 3)
        assert C.correction.data[0, 0] == 2.0 and C.correction.data[3, 0] == 1.0

    def test_threshold_propagates(self, random_qt):
        A, B = random_qt(threshold=1e-10), random_qt(threshold=1e-6)
        assert qt_mul(A, B).threshold == 1e-6
        assert qt_scale(A, 3.0).threshold == 1e-10

    def test_identity_is_neutral(self, random_qt):
        A = random_qt()
        np.testing.assert_allclose(_window(qt_identity() @ A, 12), _window(A, 12))
        np.testing.assert_allclose(_window(A @ qt_identity(), 12), _window(A, 12))


class TestNorms:
    def test_tridiagonal_norm(self):
        assert qt_norm_inf(qt_toeplitz(TRIDIAG)) == pytest.approx(4.0)
        assert qt_norm_inf(qt_zero()) == 0.0

    def test_corner_row_can_dominate(self):
        A = QtMatrix(TRIDIAG, CorrectionBlock([[5.0]]))
        assert qt_norm_inf(A) == pytest.approx(8.0)

    def test_norm_matches_large_window(self, random_qt):
        A = random_qt(q=4, p=2, rows=6, cols=9)
        dense = dense_norm_inf(qt_truncate_dense(A, 60)[:50])
        assert qt_norm_inf(A) == pytest.approx(dense, rel=1e-13)

    def test_norm_at_least_wiener(self, random_qt):
        A = random_qt()
        assert qt_norm_inf(A) >= wiener_norm(A.symbol) - 1e-15

    def test_block_norms(self):
        A = qt_toeplitz(TRIDIAG)
        assert qt_block_norm_inf(A, 3, "11") == pytest.approx(4.0)
        assert qt_block_norm_inf(A, 3, "12") == pytest.approx(1.0)
        assert qt_block_norm_inf(A, 3, "21") == pytest.approx(1.0)
        assert qt_block_norm_inf(A, 3, "22") == pytest.approx(4.0)

    def test_unknown_block(self):
        with pytest.raises(HypothesisError):
            qt_block_norm_inf(qt_identity(), 2, "13")

    def test_min_entry(self):
        A = QtMatrix(LaurentSymbol(neg=[0.5], pos=[1.0]), CorrectionBlock([[0.0, -0.75]]))
        assert qt_min_entry(A) == -0.75
        assert qt_min_entry(qt_toeplitz(LaurentSymbol.constant(2.0))) == 0.0


class TestCompress:
    def test_zero_threshold_strips_exact_zeros(self):
        E = np.zeros((4, 4))
        E[1, 2] = 1.0
        A = qt_compress(QtMatrix(TRIDIAG, CorrectionBlock(E)), 0.0)
        assert (A.rows, A.cols) == (2, 3)
        assert A.symbol.band == 3

    def test_tiny_far_entry_removed(self):
        E = np.zeros((100, 100))
        E[0, 0] = 1.0
        E[99, 99] = 1e-20
        A = qt_compress(QtMatrix(LaurentSymbol.zero(), CorrectionBlock(E)), 1e-15)
        assert (A.rows, A.cols) == (1, 1)

    def test_from_correction_compresses(self):
        A = qt_from_correction(np.array([[1.0, 0.0], [0.0, 0.0]]))
        assert (A.rows, A.cols) == (1, 1)
        assert A.symbol.is_zero()

    def test_error_bound(self, rng):
        for t in (1e-6, 1e-3, 1e-1):
            mags = 10.0 ** -rng.integers(0, 8, size=(12, 15))
            E = rng.standard_normal((12, 15)) * mags
            symbol = LaurentSymbol(
                neg=rng.standard_normal(6) * 10.0 ** -rng.integers(0, 8, 6),
                pos=rng.standard_normal(7) * 10.0 ** -rng.integers(0, 8, 7),
            )
            A = QtMatrix(symbol, CorrectionBlock(E))
            C = qt_compress(A, t)
            symbol_err = wiener_norm(add(A.symbol, scale(C.symbol, -1.0)))
            assert symbol_err <= t * (1 + 1e-12)
            n = 40
            corner = _window(A, n) - _window(C, n)
            assert max(dense_norm_inf(corner), symbol_err) <= 2 * t * (1 + 1e-12)

    def test_negative_threshold(self):
        with pytest.raises(HypothesisError):
            qt_compress(qt_identity(), -1.0)


class TestNeumann:
    def test_zero_argument(self):
        inv = qt_neumann_inverse_shifted(qt_zero(), 1e-13, 64)
        assert inv.symbol.coefficient(0) == 0.5 and inv.symbol.band == 1
        assert inv.correction.is_empty

    def test_scalar_geometric_series(self):
        c = 1.2
        inv = qt_neumann_inverse_shifted(qt_toeplitz(LaurentSymbol.constant(c)), 1e-13, 4096)
        assert inv.symbol.coefficient(0) == pytest.approx(1 / (2 - c), abs=1e-12)
        assert inv.correction.is_empty

    def test_inverse_residual(self, rng):
        M = QtMatrix(
            LaurentSymbol(neg=0.1 * rng.random(3), pos=0.1 * rng.random(3)),
            CorrectionBlock(0.05 * rng.random((4, 4))),
            threshold=1e-16,
        )
        assert qt_norm_inf(M) < 1
        S = qt_neumann_inverse(M, 1e-13, 4096)
        residual = (qt_identity() - M) @ S - qt_identity()
        assert qt_norm_inf(residual) <= 1e-12

    def test_strict_refuses_large_norm(self):
        with pytest.raises(BreakdownError) as err:
            qt_neumann_inverse(qt_toeplitz(LaurentSymbol.constant(1.2)), 1e-13, 64)
        assert err.value.norm == pytest.approx(1.2)

    def test_shifted_refuses_norm_two(self):
        with pytest.raises(BreakdownError):
            qt_neumann_inverse_shifted(qt_toeplitz(LaurentSymbol.constant(2.0)), 1e-13, 64)

    def test_term_budget(self):
        M = qt_toeplitz(LaurentSymbol.constant(0.999))
        with pytest.raises(BreakdownError):
            qt_neumann_inverse(M, 1e-13, 16)

    def test_a_posteriori_fallback(self, caplog):
        # ||M|| = 1.5 but M^2 = 0
        M = qt_from_correction(np.array([[0.0, 1.5], [0.0, 0.0]]))
        with caplog.at_level(logging.WARNING, logger="qtsqrt.qtcore.neumann"):
            S = qt_neumann_inverse(M, 1e-13, 64, strict=False)
        assert "a posteriori" in caplog.text
        np.testing.assert_allclose(_window(S, 3), [[1.0, 1.5, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])


class TestDense:
    def test_truncations(self):
        np.testing.assert_array_equal(qt_truncate_dense(qt_identity(), 3), np.eye(3))
        shift = qt_toeplitz(LaurentSymbol.monomial(1))
        np.testing.assert_array_equal(qt_truncate_dense(shift, 2), [[0.0, 1.0], [0.0, 0.0]])

    def test_truncation_size(self):
        with pytest.raises(HypothesisError):
            qt_truncate_dense(qt_identity(), 0)

    def test_oracle_identity(self):
        np.testing.assert_allclose(dense_sqrt_oracle(np.eye(4)), np.eye(4), atol=1e-15)

    def test_oracle_nilpotent(self):
        M = np.array([[1.0, -0.25], [0.0, 1.0]])
        np.testing.assert_allclose(dense_sqrt_oracle(M), [[1.0, -0.125], [0.0, 1.0]], atol=1e-14)

    def test_oracle_diagonal(self):
        np.testing.assert_allclose(dense_sqrt_oracle(np.diag([4.0, 9.0])), np.diag([2.0, 3.0]))

    def test_oracle_squares_back(self, rng):
        S = rng.random((20, 20))
        M = np.eye(20) - S / (dense_norm_inf(S) + 1)
        Y = dense_sqrt_oracle(M)
        np.testing.assert_allclose(Y @ Y, M, atol=1e-13)

    def test_oracle_rejects_rectangular(self):
        with pytest.raises(HypothesisError):
            dense_sqrt_oracle(np.ones((2, 3)))


class TestStats:
    def test_empty_correction(self):
        stats = correction_stats(qt_toeplitz(TRIDIAG), 1e-12)
        assert (stats.band, stats.rows, stats.cols, stats.rank) == (3, 0, 0, 0)

    def test_rank_one(self, rng):
        E = np.outer(rng.random(10), rng.random(8))
        assert numerical_rank(E, 1e-12) == 1

    def test_rank_seven(self, rng):
        E = rng.standard_normal((50, 7)) @ rng.standard_normal((7, 50))
        stats = correction_stats(qt_from_correction(E), 1e-12)
        assert (stats.rows, stats.cols, stats.rank) == (50, 50, 7)

    def test_zero_block(self):
        assert numerical_rank(np.zeros((3, 3)), 1e-12) == 0
