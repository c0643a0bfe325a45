"""Cycle indices of bicolored and bipartite graph species.

All series omit the empty structure unless stated otherwise: the bicolored
graph species has no empty graph, the bipartite graph species ``BP = E(CBP)``
keeps it (constant term 1).
"""

from __future__ import annotations

import logging
import os
import re
from collections import Counter
from math import gcd
from typing import Callable, Union

from gmpy2 import mpq

from .cycle_index import (
    CycleIndex,
    _empty,
    ci_comp_inverse,
    ci_divide,
    ci_mul,
    ci_plethysm,
    ci_point,
    dumps,
    loads,
    singleton,
)
from .gamma import TwoGroupCycleIndex, dumps_gci, gci_lift_trivial, gci_plethysm, gci_quotient, loads_gci
from .partitions import mobius, partition_tuples, z_of

log = logging.getLogger(__name__)

Series = Union[CycleIndex, TwoGroupCycleIndex]


# -- fixed-point counts ---------------------------------------------------------

def cross_exponent(mu: tuple[int, ...], nu: tuple[int, ...]) -> int:
    """Number of edge orbits between white cycles ``mu`` and black cycles ``nu``."""
    return sum(gcd(i, j) for i in mu for j in nu)


def reversing_exponent(lam: tuple[int, ...]) -> int:
    """Edge orbits of a color-reversing permutation of type ``2*lam``.

    A cycle of semilength ``l`` carries ``ceil(l/2)`` orbits of internal
    edges; two cycles of semilengths ``a, b`` share ``gcd(a, b)`` orbits.
    """
    inner = sum((l + 1) // 2 for l in lam)
    across = sum(gcd(lam[i], lam[j]) for i in range(len(lam)) for j in range(i + 1, len(lam)))
    return inner + across


def _gcd_profiles(n: int) -> dict[tuple[int, ...], list[int]]:
    # profile[nu][i] = sum_j gcd(i, nu_j), so cross_exponent(mu, nu) = sum profile[nu][mu_i]
    profiles = {}
    for b in range(n + 1):
        for nu in partition_tuples(b):
            profiles[nu] = [sum(gcd(i, j) for j in nu) for i in range(n + 1)]
    return profiles


def _build_bc_e(n: int) -> CycleIndex:
    graded = _empty(n)
    profiles = _gcd_profiles(n)
    for total in range(1, n + 1):
        comp = graded[total]
        for a in range(total + 1):
            for mu in partition_tuples(a):
                z_mu = z_of(mu)
                for nu in partition_tuples(total - a):
                    prof = profiles[nu]
                    s = 0
                    for i in mu:
                        s += prof[i]
                    key = tuple(sorted(mu + nu, reverse=True))
                    comp[key] = comp.get(key, 0) + mpq(1 << s, z_mu * z_of(nu))
    return CycleIndex._wrap(graded, n)


def _build_bc_tau(n: int) -> CycleIndex:
    graded = _empty(n)
    for half in range(1, n // 2 + 1):
        comp = graded[2 * half]
        for lam in partition_tuples(half):
            doubled = tuple(2 * l for l in lam)
            comp[doubled] = mpq(1 << (len(lam) + reversing_exponent(lam)), z_of(doubled))
    return CycleIndex._wrap(graded, n)


def _build_omega(n: int) -> CycleIndex:
    # sum_k mu(k)/k * log(1 + p_k), with log(1+t) = sum_m (-1)^(m+1) t^m / m
    graded = _empty(n)
    for k in range(1, n + 1):
        mk = mobius(k)
        if not mk:
            continue
        for m in range(1, n // k + 1):
            sign = 1 if m % 2 else -1
            graded[k * m][(k,) * m] = mpq(sign * mk, k * m)
    return CycleIndex._wrap(graded, n)


def _build_e(n: int) -> CycleIndex:
    graded = _empty(n)
    for d in range(n + 1):
        graded[d] = {lam: mpq(1, z_of(lam)) for lam in partition_tuples(d)}
    return CycleIndex._wrap(graded, n)


# -- catalog ------------------------------------------------------------------

class SpeciesCatalog:
    """Lazily computed, cached series keyed by species name and truncation.

    A cached series of higher truncation answers lower-truncation requests.
    With ``cache_dir`` set, series are also persisted as ``<name>-N<t>.ci``.
    """

    ordinary = ("X", "E", "Eplus", "Omega", "BCe", "BCtau", "CBCe", "CBCtau", "CBP", "BP", "NBP")
    two_group = ("BC", "CBC")

    def __init__(self, cache_dir: str | os.PathLike | None = None):
        self.cache_dir = os.fspath(cache_dir) if cache_dir is not None else None
        self._memory: dict[str, Series] = {}
        self._builders: dict[str, Callable[[int], Series]] = {
            "X": singleton,
            "E": _build_e,
            "Eplus": lambda n: self.get("E", n) - 1,
            "Omega": _build_omega,
            "BCe": _build_bc_e,
            "BCtau": _build_bc_tau,
            "BC": lambda n: TwoGroupCycleIndex(self.get("BCe", n), self.get("BCtau", n)),
            "CBC": lambda n: gci_plethysm(gci_lift_trivial(self.get("Omega", n)), self.get("BC", n), n),
            "CBCe": lambda n: self.get("CBC", n).at_e,
            "CBCtau": lambda n: self.get("CBC", n).at_tau,
            "CBP": lambda n: gci_quotient(self.get("CBC", n)),
            "BP": lambda n: ci_plethysm(self.get("E", n), self.get("CBP", n), n),
            "NBP": self._build_nbp,
        }

    @property
    def names(self) -> tuple[str, ...]:
        return self.ordinary + self.two_group

    def get(self, name: str, n: int) -> Series:
        if name not in self._builders:
            raise KeyError(f"unknown species {name!r}; known: {', '.join(self.names)}")
        if n < 0:
            raise ValueError("truncation must be nonnegative")
        held = self._memory.get(name)
        if held is None or held.truncation < n:
            held = self._load(name, n)
            if held is None:
                log.debug("computing %s to degree %d", name, n)
                held = self._builders[name](n)
                self._store(name, held)
            self._memory[name] = held
        return held if held.truncation == n else held.truncate(n)

    def _path(self, name: str, n: int) -> str:
        return os.path.join(self.cache_dir, f"{name}-N{n}.ci")

    def _load(self, name: str, n: int) -> Series | None:
        if self.cache_dir is None or not os.path.isdir(self.cache_dir):
            return None
        pattern = re.compile(rf"^{re.escape(name)}-N(\d+)\.ci$")
        stored = sorted(
            int(m.group(1)) for m in map(pattern.match, os.listdir(self.cache_dir)) if m
        )
        usable = [t for t in stored if t >= n]
        if not usable:
            return None
        with open(self._path(name, usable[0]), encoding="utf-8") as fh:
            text = fh.read()
        return loads_gci(text) if name in self.two_group else loads(text)

    def _store(self, name: str, series: Series) -> None:
        if self.cache_dir is None:
            return
        os.makedirs(self.cache_dir, exist_ok=True)
        text = dumps_gci(series) if isinstance(series, TwoGroupCycleIndex) else dumps(series)
        with open(self._path(name, series.truncation), "w", encoding="utf-8") as fh:
            fh.write(text)

    def _build_nbp(self, n: int) -> CycleIndex:
        # blocks B from connected graphs C: B = C(W) + X*B' - X with
        # W = (C-pointed)^<-1> and E(B') = X/W; K1 is counted as a block.
        cbp_next = self.get("CBP", n + 1)
        x = singleton(n + 1)
        w = ci_comp_inverse(ci_point(cbp_next), n + 1)
        quotient = ci_divide(x, w, n)
        derivative = ci_plethysm(self.get("Omega", n), quotient - 1, n)
        blocks = ci_plethysm(cbp_next.truncate(n), w.truncate(n), n)
        return blocks + ci_mul(x.truncate(n), derivative, n) - x.truncate(n) + k1_convention(n)


def k1_convention(n: int) -> CycleIndex:
    """The single vertex, counted as a block so that ``[x^1] = 1``."""
    return singleton(n)


DEFAULT_CATALOG = SpeciesCatalog()


def x_species(n: int) -> CycleIndex:
    return DEFAULT_CATALOG.get("X", n)


def e_species(n: int) -> CycleIndex:
    """``Z_E``: one term ``p_lam / z_lam`` for every partition of degree <= n."""
    return DEFAULT_CATALOG.get("E", n)


def e_plus(n: int) -> CycleIndex:
    return DEFAULT_CATALOG.get("Eplus", n)


def omega(n: int) -> CycleIndex:
    """Combinatorial logarithm, the plethystic inverse of ``E+``."""
    return DEFAULT_CATALOG.get("Omega", n)


def bc_e(n: int) -> CycleIndex:
    """Bicolored graphs fixed by color-preserving relabelings."""
    return DEFAULT_CATALOG.get("BCe", n)


def bc_tau(n: int) -> CycleIndex:
    """Bicolored graphs fixed by color-reversing relabelings; even degrees only."""
    return DEFAULT_CATALOG.get("BCtau", n)


def bc(n: int) -> TwoGroupCycleIndex:
    return DEFAULT_CATALOG.get("BC", n)


def cbc(n: int) -> TwoGroupCycleIndex:
    """Connected bicolored graphs, ``Omega o BC`` with the trivial action on ``Omega``."""
    return DEFAULT_CATALOG.get("CBC", n)


def cbp(n: int) -> CycleIndex:
    """Connected bipartite graphs: orbits of connected bicolored graphs."""
    return DEFAULT_CATALOG.get("CBP", n)


def bp(n: int) -> CycleIndex:
    """Bipartite graphs, including the empty graph and isolated vertices."""
    return DEFAULT_CATALOG.get("BP", n)


def nbp(n: int) -> CycleIndex:
    """Bipartite blocks (2-connected bipartite graphs, plus K1 and K2)."""
    return DEFAULT_CATALOG.get("NBP", n)
