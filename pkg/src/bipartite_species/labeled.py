"""Labeled counts from exponential generating functions.

These are independent of the cycle-index machinery and serve as
cross-checks of its ``p1``-only part.
"""

from __future__ import annotations

from math import comb, factorial

from gmpy2 import mpq

from .series import EGF, PowerSeries, series_compose, series_log, series_reversion


def labeled_bicolored(n: int) -> int:
    """Labeled bicolored graphs on ``n`` vertices: ``sum_i C(n, i) 2**(i*(n-i))``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(comb(n, i) << (i * (n - i)) for i in range(n + 1))


def labeled_bicolored_egf(n: int) -> PowerSeries:
    return PowerSeries([mpq(labeled_bicolored(k), factorial(k)) for k in range(n + 1)], EGF)


def labeled_blocks_check(n: int) -> PowerSeries:
    """EGF of labeled bipartite blocks from ``log P'(x) = N'(x P'(x))``.

    ``P = log(B)/2`` is the EGF of connected bipartite graphs. The single
    vertex is counted as a block, matching the unlabeled table.
    """
    if n < 1:
        return PowerSeries.zero(n, EGF)
    connected = series_log(labeled_bicolored_egf(n)) * mpq(1, 2)
    dp = connected.derivative()  # truncation n-1
    rooted = PowerSeries([0, *dp.coefficients], EGF)  # x P'(x)
    inverse = series_reversion(rooted).truncate(n - 1)
    block_derivative = series_compose(series_log(dp), inverse)
    blocks = list(block_derivative.integral().coefficients)
    blocks[1] += 1  # K1
    return PowerSeries(blocks, EGF)
