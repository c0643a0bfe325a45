"""Ordinary generating functions for bicolored and bipartite graphs.

This route never builds a full cycle index. It specializes the fixed-point
sums to ``p_i -> x**i`` directly and then undoes the set construction with
Moebius-weighted logarithms of univariate series.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from .partitions import mobius, partition_tuples, z_of
from .series import OGF, PowerSeries, series_exp, series_log
from .species import cross_exponent, reversing_exponent


@dataclass(frozen=True)
class BipartiteOGFs:
    f_e: PowerSeries  # all bicolored graphs, constant term 1
    f_tau: PowerSeries  # bicolored graphs with a color-reversing symmetry
    g_e: PowerSeries  # connected bicolored graphs
    g_tau: PowerSeries  # connected ones with a color-reversing symmetry
    c: PowerSeries  # connected bipartite graphs
    b: PowerSeries  # bipartite graphs


def bicolored_ogf(n: int) -> PowerSeries:
    coeffs = []
    for total in range(n + 1):
        acc = mpq(0)
        for a in range(total + 1):
            for mu in partition_tuples(a):
                z_mu = z_of(mu)
                for nu in partition_tuples(total - a):
                    acc += mpq(1 << cross_exponent(mu, nu), z_mu * z_of(nu))
        coeffs.append(acc)
    return PowerSeries(coeffs, OGF)


def reversible_bicolored_ogf(n: int) -> PowerSeries:
    coeffs = [mpq(1)] + [mpq(0)] * n
    for half in range(1, n // 2 + 1):
        acc = mpq(0)
        for lam in partition_tuples(half):
            acc += mpq(1 << (len(lam) + reversing_exponent(lam)), z_of(tuple(2 * l for l in lam)))
        coeffs[2 * half] = acc
    return PowerSeries(coeffs, OGF)


def fast_bipartite_ogfs(n: int) -> BipartiteOGFs:
    f_e = bicolored_ogf(n)
    f_tau = reversible_bicolored_ogf(n)
    log_e = series_log(f_e)
    log_tau = series_log(f_tau)
    g_e = PowerSeries.zero(n)
    g_tau = PowerSeries.zero(n)
    for k in range(1, n + 1):
        mk = mobius(k)
        if not mk:
            continue
        weight = mpq(mk, k)
        g_e = g_e + log_e.dilate(k) * weight
        # tau**k is tau for odd k and e for even k
        g_tau = g_tau + (log_tau if k % 2 else log_e).dilate(k) * weight
    c = (g_e + g_tau) * mpq(1, 2)
    total = PowerSeries.zero(n)
    for k in range(1, n + 1):
        total = total + c.dilate(k) * mpq(1, k)
    b = series_exp(total)
    return BipartiteOGFs(f_e, f_tau, g_e, g_tau, c, b)
