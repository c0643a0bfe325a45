"""Truncated univariate power series with exact rational coefficients."""

from __future__ import annotations

from math import factorial
from typing import Iterable, Sequence

from gmpy2 import mpq

from .cycle_index import CycleIndex, Rational, as_rational

OGF = "ogf"
EGF = "egf"


class PowerSeries:
    """Coefficients ``a_0 .. a_N`` of a series truncated at ``x**N``.

    ``role`` is ``"ogf"`` for ordinary generating functions or ``"egf"`` for
    exponential ones, where ``a_n`` is the labeled count divided by ``n!``.
    """

    __slots__ = ("coefficients", "role")

    def __init__(self, coefficients: Iterable[Rational], role: str = OGF):
        if role not in (OGF, EGF):
            raise ValueError(f"unknown role {role!r}")
        self.coefficients = tuple(as_rational(c) for c in coefficients)
        if not self.coefficients:
            raise ValueError("a power series needs at least the constant coefficient")
        self.role = role

    @classmethod
    def zero(cls, n: int, role: str = OGF) -> "PowerSeries":
        return cls([0] * (n + 1), role)

    @classmethod
    def x(cls, n: int, role: str = OGF) -> "PowerSeries":
        if n < 1:
            return cls.zero(n, role)
        return cls([0, 1] + [0] * (n - 1), role)

    @property
    def truncation(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> mpq:
        return self.coefficients[n]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.role == other.role and self.coefficients == other.coefficients

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.coefficients)
        return f"PowerSeries([{body}], role={self.role!r})"

    def truncate(self, n: int) -> "PowerSeries":
        if n > self.truncation:
            raise ValueError(f"cannot raise truncation {self.truncation} to {n}")
        return PowerSeries(self.coefficients[: n + 1], self.role)

    def integers(self) -> list[int]:
        """Coefficients as Python ints; raises if any is not integral."""
        out = []
        for n, c in enumerate(self.coefficients):
            if c.denominator != 1:
                raise ValueError(f"coefficient of x^{n} is not an integer: {c}")
            out.append(int(c.numerator))
        return out

    def labeled_counts(self) -> list[int]:
        """``n! * a_n`` for an EGF-normalized series."""
        if self.role != EGF:
            raise ValueError("labeled counts are only defined for EGF series")
        return PowerSeries([c * factorial(n) for n, c in enumerate(self.coefficients)]).integers()

    # -- arithmetic -------------------------------------------------------
    def _like(self, coefficients: Sequence) -> "PowerSeries":
        return PowerSeries(coefficients, self.role)

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            other = self._like([other] + [0] * self.truncation)
        n = min(self.truncation, other.truncation)
        return self._like([a + b for a, b in zip(self.coefficients[: n + 1], other.coefficients)])

    __radd__ = __add__

    def __neg__(self):
        return self._like([-a for a in self.coefficients])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            r = as_rational(other)
            return self._like([a * r for a in self.coefficients])
        n = min(self.truncation, other.truncation)
        a, b = self.coefficients, other.coefficients
        return self._like([sum((a[i] * b[k - i] for i in range(k + 1)), mpq(0)) for k in range(n + 1)])

    __rmul__ = __mul__

    def dilate(self, k: int) -> "PowerSeries":
        """``f(x**k)`` at the same truncation."""
        out = [mpq(0)] * (self.truncation + 1)
        for i, c in enumerate(self.coefficients):
            if i * k > self.truncation:
                break
            out[i * k] = c
        return self._like(out)

    def derivative(self) -> "PowerSeries":
        if self.truncation < 1:
            raise ValueError("derivative needs truncation >= 1")
        return self._like([i * c for i, c in enumerate(self.coefficients) if i])

    def integral(self) -> "PowerSeries":
        """Antiderivative with zero constant term; truncation grows by one."""
        return self._like([mpq(0)] + [c / (i + 1) for i, c in enumerate(self.coefficients)])


def series_log(f: PowerSeries) -> PowerSeries:
    """``log f`` for ``f(0) == 1``, from ``f * (log f)' = f'``."""
    if f[0] != 1:
        raise ValueError(f"log needs constant term 1, got {f[0]}")
    n = f.truncation
    a = f.coefficients
    out = [mpq(0)] * (n + 1)
    # k*L_k = k*a_k - sum_{j<k} j*L_j*a_{k-j}
    for k in range(1, n + 1):
        acc = k * a[k]
        for j in range(1, k):
            acc -= j * out[j] * a[k - j]
        out[k] = acc / k
    return PowerSeries(out, f.role)


def series_exp(f: PowerSeries) -> PowerSeries:
    """``exp f`` for ``f(0) == 0``, from ``E' = f' E``."""
    if f[0] != 0:
        raise ValueError(f"exp needs constant term 0, got {f[0]}")
    n = f.truncation
    a = f.coefficients
    out = [mpq(0)] * (n + 1)
    out[0] = mpq(1)
    for k in range(1, n + 1):
        acc = mpq(0)
        for j in range(1, k + 1):
            acc += j * a[j] * out[k - j]
        out[k] = acc / k
    return PowerSeries(out, f.role)


def series_compose(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """``f(g(x))`` for ``g(0) == 0``, by Horner's rule."""
    if g[0] != 0:
        raise ValueError("inner series must have zero constant term")
    n = min(f.truncation, g.truncation)
    result = PowerSeries([f[n]] + [0] * n, f.role)
    for c in reversed(f.coefficients[:n]):
        result = result * g + c
    return result


def series_reversion(f: PowerSeries) -> PowerSeries:
    """Compositional inverse of ``f = x + ...``, solved degree by degree."""
    if f.truncation < 1 or f[0] != 0 or f[1] != 1:
        raise ValueError("reversion needs f = x + O(x^2)")
    n = f.truncation
    g = PowerSeries.x(n, f.role)
    for d in range(2, n + 1):
        err = series_compose(f, g)[d]
        coeffs = list(g.coefficients)
        coeffs[d] -= err
        g = PowerSeries(coeffs, f.role)
    return g


def ogf_from_ci(f: CycleIndex, n: int | None = None) -> PowerSeries:
    """Unlabeled counts: substitute ``p_i -> x**i``."""
    if n is None:
        n = f.truncation
    if n > f.truncation:
        raise ValueError(f"degree {n} exceeds truncation {f.truncation}")
    out = [mpq(0)] * (n + 1)
    for d in range(n + 1):
        out[d] = sum(f._graded[d].values(), mpq(0))
    return PowerSeries(out, OGF)


def egf_from_ci(f: CycleIndex, n: int | None = None) -> PowerSeries:
    """Labeled counts: ``p1 -> x``, ``p_k -> 0`` for ``k >= 2``."""
    if n is None:
        n = f.truncation
    if n > f.truncation:
        raise ValueError(f"degree {n} exceeds truncation {f.truncation}")
    return PowerSeries([f._graded[d].get((1,) * d, mpq(0)) for d in range(n + 1)], EGF)
