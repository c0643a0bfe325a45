"""Cycle indices of species carrying an action of the two-element group.

The group is ``{e, tau}`` with ``tau**2 == e``. A two-group cycle index
records, for each group element, the fixed points of that element combined
with a relabeling.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cycle_index import (
    CycleIndex,
    _ScaledCache,
    _check_no_constant,
    _substitute,
    dumps,
    loads,
)


@dataclass(frozen=True)
class TwoGroupCycleIndex:
    at_e: CycleIndex
    at_tau: CycleIndex

    def __post_init__(self):
        if self.at_e.truncation != self.at_tau.truncation:
            raise ValueError(
                f"slot truncations differ: {self.at_e.truncation} vs {self.at_tau.truncation}"
            )

    @property
    def truncation(self) -> int:
        return self.at_e.truncation

    def slot(self, name: str) -> CycleIndex:
        return {"e": self.at_e, "tau": self.at_tau}[name]

    def truncate(self, n: int) -> "TwoGroupCycleIndex":
        return TwoGroupCycleIndex(self.at_e.truncate(n), self.at_tau.truncate(n))

    def __add__(self, other: "TwoGroupCycleIndex") -> "TwoGroupCycleIndex":
        return TwoGroupCycleIndex(self.at_e + other.at_e, self.at_tau + other.at_tau)

    def __sub__(self, other: "TwoGroupCycleIndex") -> "TwoGroupCycleIndex":
        return TwoGroupCycleIndex(self.at_e - other.at_e, self.at_tau - other.at_tau)


def gci_lift_trivial(f: CycleIndex) -> TwoGroupCycleIndex:
    """View an ordinary species as one on which the group acts trivially."""
    return TwoGroupCycleIndex(f, f)


def gci_plethysm(outer: TwoGroupCycleIndex, inner: TwoGroupCycleIndex, n: int | None = None) -> TwoGroupCycleIndex:
    """Composition of two-group cycle indices.

    In the ``gamma`` slot, ``p_m`` is replaced by the inner ``gamma**m`` slot
    scaled by ``m``: for ``tau`` that is the tau slot at odd ``m`` and the e
    slot at even ``m``.
    """
    if n is None:
        n = min(outer.truncation, inner.truncation)
    if n > min(outer.truncation, inner.truncation):
        raise ValueError(f"degree {n} exceeds input truncation")
    _check_no_constant(inner.at_e, "inner e-slot")
    _check_no_constant(inner.at_tau, "inner tau-slot")
    cache = _ScaledCache(n)
    g_e, g_tau = inner.at_e, inner.at_tau
    at_e = _substitute(outer.at_e._graded, n, lambda m: cache.get(g_e, m))
    at_tau = _substitute(outer.at_tau._graded, n, lambda m: cache.get(g_tau if m % 2 else g_e, m))
    return TwoGroupCycleIndex(CycleIndex._wrap(at_e, n), CycleIndex._wrap(at_tau, n))


def gci_quotient(f: TwoGroupCycleIndex) -> CycleIndex:
    """Cycle index of the species of orbits: the average of the two slots."""
    return (f.at_e + f.at_tau) * "1/2"


def dumps_gci(f: TwoGroupCycleIndex) -> str:
    return f"slot=e\n{dumps(f.at_e)}slot=tau\n{dumps(f.at_tau)}"


def loads_gci(text: str) -> TwoGroupCycleIndex:
    blocks: dict[str, list[str]] = {}
    current = None
    for line in text.splitlines():
        if line.startswith("slot="):
            current = line.split("=", 1)[1].strip()
            blocks[current] = []
        elif current is not None:
            blocks[current].append(line)
        elif line.strip():
            raise ValueError("two-group cycle index text must start with a 'slot=' line")
    if set(blocks) != {"e", "tau"}:
        raise ValueError(f"expected slots e and tau, found {sorted(blocks)}")
    return TwoGroupCycleIndex(loads("\n".join(blocks["e"])), loads("\n".join(blocks["tau"])))
