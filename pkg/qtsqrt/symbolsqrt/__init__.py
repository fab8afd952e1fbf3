from qtsqrt.symbolsqrt.algorithm import check_interpolation_bound, sqrt_symbol, symbol_residual

__all__ = ["check_interpolation_bound", "sqrt_symbol", "symbol_residual"]
