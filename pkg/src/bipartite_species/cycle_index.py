"""Truncated cycle index series in the power-sum indeterminates p1, p2, ...

A series is stored graded by total degree: ``_graded[d]`` maps the
decreasing part tuple of each degree-``d`` monomial to an exact ``mpq``
coefficient. Zero coefficients are never stored.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Union

from gmpy2 import mpq

from .partitions import Partition

Rational = Union[int, Fraction, "mpq", str]
Graded = list  # list[dict[tuple[int, ...], mpq]], index = degree


class AlgebraError(ArithmeticError):
    """An operation on series was applied outside its domain."""


class PlethysmError(AlgebraError):
    pass


class InverseError(AlgebraError):
    pass


class DivisibilityError(AlgebraError):
    pass


def as_rational(value: Rational) -> mpq:
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        return mpq(value.strip())
    return mpq(value)


def _empty(n: int) -> Graded:
    return [{} for _ in range(n + 1)]


class CycleIndex:
    """Immutable truncated cycle index series.

    ``terms`` maps partitions (any iterable of positive integers) to
    rational coefficients. Terms of degree above ``truncation`` are
    dropped, zero coefficients are discarded.
    """

    __slots__ = ("_graded", "_truncation")

    def __init__(self, terms: Mapping[Iterable[int], Rational] | None = None, truncation: int = 0):
        if truncation < 0:
            raise ValueError("truncation must be nonnegative")
        graded = _empty(truncation)
        for parts, coeff in (terms or {}).items():
            key = tuple(Partition(parts))
            d = sum(key)
            if d > truncation:
                continue
            c = graded[d].get(key, 0) + as_rational(coeff)
            if c:
                graded[d][key] = c
            else:
                graded[d].pop(key, None)
        self._graded = graded
        self._truncation = truncation

    @classmethod
    def _wrap(cls, graded: Graded, truncation: int) -> "CycleIndex":
        # trusted constructor: graded must have length truncation+1, no zeros
        obj = cls.__new__(cls)
        obj._graded = graded
        obj._truncation = truncation
        return obj

    # -- inspection -------------------------------------------------------
    @property
    def truncation(self) -> int:
        return self._truncation

    @property
    def terms(self) -> dict[Partition, mpq]:
        return {p: c for p, c in self.items()}

    def items(self) -> Iterator[tuple[Partition, mpq]]:
        """Terms in canonical order: by degree, then lexicographically on parts."""
        for comp in self._graded:
            for key in sorted(comp):
                yield Partition(key), comp[key]

    def coefficient(self, parts: Iterable[int]) -> mpq:
        key = tuple(sorted(parts, reverse=True))
        d = sum(key)
        if d > self._truncation:
            raise ValueError(f"degree {d} exceeds truncation {self._truncation}")
        return self._graded[d].get(key, mpq(0))

    def component(self, degree: int) -> "CycleIndex":
        """Homogeneous degree-``degree`` part, keeping this truncation."""
        graded = _empty(self._truncation)
        if 0 <= degree <= self._truncation:
            graded[degree] = dict(self._graded[degree])
        return CycleIndex._wrap(graded, self._truncation)

    @property
    def constant_term(self) -> mpq:
        return self._graded[0].get((), mpq(0))

    def is_zero(self) -> bool:
        return not any(self._graded)

    def __len__(self) -> int:
        return sum(len(c) for c in self._graded)

    def truncate(self, n: int) -> "CycleIndex":
        if n > self._truncation:
            raise ValueError(f"cannot raise truncation {self._truncation} to {n}")
        return CycleIndex._wrap([dict(c) for c in self._graded[: n + 1]], n)

    # -- comparison -------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycleIndex):
            return NotImplemented
        return self._truncation == other._truncation and self._graded == other._graded

    def __hash__(self) -> int:
        return hash((self._truncation, frozenset(self.items())))

    def __repr__(self) -> str:
        return f"CycleIndex({format_series(self)}, truncation={self._truncation})"

    def __str__(self) -> str:
        return format_series(self)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, CycleIndex):
            return ci_add(self, other)
        return ci_add(self, constant(other, self._truncation))

    __radd__ = __add__

    def __neg__(self):
        return ci_scale(self, -1)

    def __sub__(self, other):
        if isinstance(other, CycleIndex):
            return ci_add(self, ci_scale(other, -1))
        return ci_add(self, constant(-as_rational(other), self._truncation))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, CycleIndex):
            return ci_mul(self, other, min(self._truncation, other._truncation))
        return ci_scale(self, other)

    __rmul__ = __mul__

    def __call__(self, inner: "CycleIndex") -> "CycleIndex":
        return ci_plethysm(self, inner, min(self._truncation, inner._truncation))


# -- constructors -----------------------------------------------------------

def constant(value: Rational, truncation: int) -> CycleIndex:
    return CycleIndex({(): value}, truncation)


def monomial(parts: Iterable[int], coeff: Rational = 1, truncation: int | None = None) -> CycleIndex:
    parts = Partition(parts)
    if truncation is None:
        truncation = parts.degree
    return CycleIndex({parts: coeff}, truncation)


def power_sum(i: int, truncation: int | None = None) -> CycleIndex:
    """The series ``p_i``."""
    return monomial((i,), 1, i if truncation is None else truncation)


def singleton(truncation: int) -> CycleIndex:
    """Cycle index of the singleton species X, namely ``p1``."""
    return CycleIndex({(1,): 1}, truncation)


# -- graded kernels ---------------------------------------------------------

def _merge(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b, reverse=True))


def _mul_homog(a: dict, b: dict, out: dict | None = None, sign: int = 1) -> dict:
    if out is None:
        out = {}
    get = out.get
    for pa, ca in a.items():
        for pb, cb in b.items():
            key = tuple(sorted(pa + pb, reverse=True)) if pa and pb else (pa or pb)
            out[key] = get(key, 0) + sign * ca * cb
    return out


def _prune(comp: dict) -> dict:
    return {k: v for k, v in comp.items() if v}


def _mul(a: Graded, b: Graded, n: int) -> Graded:
    out = _empty(n)
    for da in range(min(len(a) - 1, n) + 1):
        ta = a[da]
        if not ta:
            continue
        for db in range(min(len(b) - 1, n - da) + 1):
            tb = b[db]
            if tb:
                _mul_homog(ta, tb, out[da + db])
    return [_prune(c) for c in out]


def _add_into(acc: Graded, other: Graded) -> None:
    for d in range(min(len(acc), len(other))):
        target = acc[d]
        for k, v in other[d].items():
            s = target.get(k, 0) + v
            if s:
                target[k] = s
            else:
                target.pop(k, None)


def _scale_index(g: Graded, m: int, n: int) -> Graded:
    """Substitute ``p_j -> p_{jm}`` and truncate at ``n``."""
    out = _empty(n)
    for d, comp in enumerate(g):
        if d * m > n:
            break
        out[d * m] = {tuple(p * m for p in k): v for k, v in comp.items()}
    return out


def _substitute(f: Graded, n: int, inner: Callable[[int], Graded]) -> Graded:
    """Evaluate ``f`` with each ``p_i`` replaced by the series ``inner(i)``.

    ``inner(i)`` must have zero constant term, hence minimum degree >= 1;
    callers pass index-scaled series, whose minimum degree is >= i. The
    polynomial is evaluated by nested Horner schemes, one variable at a
    time, and every partial result is truncated to the degree it can still
    contribute to.
    """
    monos = []
    for d in range(min(len(f) - 1, n) + 1):
        for key, c in f[d].items():
            monos.append((Counter(key), key[0] if key else 0, c))

    def evaluate(ms, i: int, budget: int):
        if budget < 0:
            return None
        if all(top < i for _, top, _ in ms):
            total = sum((c for _, _, c in ms), mpq(0))
            out = _empty(budget)
            if total:
                out[0][()] = total
            return out
        groups: dict[int, list] = {}
        for m in ms:
            groups.setdefault(m[0].get(i, 0), []).append(m)
        top = max(groups)
        result = evaluate(groups[top], i + 1, budget - i * top)
        for j in range(top - 1, -1, -1):
            sub_budget = budget - i * j
            if sub_budget < 0:
                continue
            if result is None or not any(result):
                result = _empty(sub_budget)
            else:
                result = _mul(result, inner(i), sub_budget)
            if j in groups:
                part = evaluate(groups[j], i + 1, sub_budget)
                if part is not None:
                    _add_into(result, part)
        return result

    result = evaluate(monos, 1, n) if monos else None
    if result is None:
        return _empty(n)
    return result


# -- ring operations ----------------------------------------------------------

def ci_add(f: CycleIndex, g: CycleIndex) -> CycleIndex:
    n = min(f.truncation, g.truncation)
    graded = [dict(c) for c in f._graded[: n + 1]]
    _add_into(graded, g._graded)
    return CycleIndex._wrap(graded, n)


def ci_scale(f: CycleIndex, r: Rational) -> CycleIndex:
    r = as_rational(r)
    if not r:
        return CycleIndex._wrap(_empty(f.truncation), f.truncation)
    return CycleIndex._wrap([{k: v * r for k, v in c.items()} for c in f._graded], f.truncation)


def ci_mul(f: CycleIndex, g: CycleIndex, n: int | None = None) -> CycleIndex:
    """Product truncated at degree ``n``.

    ``n`` may exceed an input's truncation when the other factor has no
    low-degree terms; the caller is responsible for that precision argument.
    """
    if n is None:
        n = min(f.truncation, g.truncation)
    return CycleIndex._wrap(_mul(f._graded, g._graded, n), n)


class _ScaledCache:
    """Memoized index-scaled copies ``g^(m)`` of one or more series."""

    def __init__(self, n: int):
        self.n = n
        self._cache: dict[tuple[int, int], Graded] = {}

    def get(self, g: CycleIndex, m: int) -> Graded:
        key = (id(g), m)
        if key not in self._cache:
            self._cache[key] = _scale_index(g._graded, m, self.n)
        return self._cache[key]


def _check_no_constant(g: CycleIndex, what: str = "inner series") -> None:
    if g.constant_term:
        raise PlethysmError(f"plethysm needs an {what} with zero constant term, got {g.constant_term}")


def ci_plethysm(f: CycleIndex, g: CycleIndex, n: int | None = None) -> CycleIndex:
    """Plethystic composition ``f o g``: each ``p_m`` in ``f`` becomes ``g(p_m, p_2m, ...)``."""
    if n is None:
        n = min(f.truncation, g.truncation)
    _check_no_constant(g)
    if n > min(f.truncation, g.truncation):
        raise ValueError(f"degree {n} exceeds input truncation")
    cache = _ScaledCache(n)
    return CycleIndex._wrap(_substitute(f._graded, n, lambda m: cache.get(g, m)), n)


def ci_derivative(f: CycleIndex) -> CycleIndex:
    """Partial derivative with respect to ``p1``; truncation drops by one."""
    if f.truncation < 1:
        raise ValueError("derivative needs truncation >= 1")
    n = f.truncation - 1
    graded = _empty(n)
    for d in range(1, f.truncation + 1):
        out = graded[d - 1]
        for key, c in f._graded[d].items():
            ones = key.count(1)
            if ones:
                out[key[:-1]] = c * ones
    return CycleIndex._wrap(graded, n)


def ci_point(f: CycleIndex) -> CycleIndex:
    """Pointing ``p1 * df/dp1``; each monomial is multiplied by its number of 1-parts."""
    graded = [{k: c * k.count(1) for k, c in comp.items() if 1 in k} for comp in f._graded]
    return CycleIndex._wrap(graded, f.truncation)


def _check_unit_linear(f: CycleIndex, what: str, error: type) -> None:
    if f.constant_term:
        raise error(f"{what} must have zero constant term")
    if f.truncation >= 1 and f._graded[1] != {(1,): 1}:
        raise error(f"{what} must have degree-1 component exactly p1, got {format_series(f.component(1))}")


def ci_comp_inverse(f: CycleIndex, n: int | None = None) -> CycleIndex:
    """Plethystic inverse ``g`` with ``f o g = p1`` through degree ``n``.

    Solved one degree at a time: the degree-(d+1) part of ``g`` is minus the
    degree-(d+1) part of ``(f - p1) o g``, which only involves lower parts
    of ``g``.
    """
    if n is None:
        n = f.truncation
    if n > f.truncation:
        raise ValueError(f"degree {n} exceeds truncation {f.truncation}")
    _check_unit_linear(f, "series to invert", InverseError)
    rest = [dict(c) for c in f._graded[: n + 1]]
    if n >= 1:
        rest[1] = {}
    g = _empty(n)
    if n >= 1:
        g[1] = {(1,): mpq(1)}
    for d in range(1, n):
        known = g[: d + 1]
        scaled: dict[int, Graded] = {}

        def inner(m: int) -> Graded:
            if m not in scaled:
                scaled[m] = _scale_index(known, m, d + 1)
            return scaled[m]

        top = _substitute(rest, d + 1, inner)[d + 1]
        g[d + 1] = {k: -v for k, v in top.items() if v}
    return CycleIndex._wrap(g, n)


def _divide_by_p1(comp: dict) -> dict:
    out = {}
    for key, c in comp.items():
        if not key or key[-1] != 1:
            raise DivisibilityError(f"monomial p{list(key)} is not divisible by p1")
        out[key[:-1]] = c
    return out


def ci_divide(target: CycleIndex, w: CycleIndex, n: int | None = None) -> CycleIndex:
    """Return ``s`` (truncation ``n``) with ``s * w == target`` through degree ``n + 1``.

    ``w`` must start with exactly ``p1``. Each homogeneous part of ``s`` is
    obtained by exact division of a residual by ``p1``.
    """
    if n is None:
        n = min(target.truncation, w.truncation) - 1
    if n + 1 > min(target.truncation, w.truncation):
        raise ValueError(f"division to degree {n} needs both inputs truncated at >= {n + 1}")
    _check_unit_linear(w, "divisor", DivisibilityError)
    if target.constant_term:
        raise DivisibilityError("target has a nonzero constant term, no quotient exists")
    tg, wg = target._graded, w._graded
    s = _empty(n)
    for d in range(n + 1):
        residual = dict(tg[d + 1])
        for k in range(d):
            _mul_homog(s[k], wg[d + 1 - k], residual, sign=-1)
        s[d] = _divide_by_p1(_prune(residual))
    return CycleIndex._wrap(s, n)


# -- text formats -------------------------------------------------------------

def _coeff_text(c: mpq) -> str:
    return f"{int(c.numerator)}/{int(c.denominator)}"


def dumps(f: CycleIndex) -> str:
    """Serialize to the line-oriented cache format (round-trips exactly)."""
    lines = [f"truncation={f.truncation}"]
    for parts, c in f.items():
        lines.append(f"deg={parts.degree} parts={','.join(map(str, parts))} coeff={_coeff_text(c)}")
    return "\n".join(lines) + "\n"


def loads(text: str) -> CycleIndex:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("truncation="):
        raise ValueError("cycle index text must start with 'truncation=N'")
    n = int(lines[0].split("=", 1)[1])
    terms = {}
    for ln in lines[1:]:
        fields = dict(item.split("=", 1) for item in ln.split())
        parts = tuple(int(p) for p in fields["parts"].split(",") if p)
        if sum(parts) != int(fields["deg"]):
            raise ValueError(f"degree mismatch in line {ln!r}")
        if sum(parts) > n:
            raise ValueError(f"term above truncation {n} in line {ln!r}")
        terms[parts] = mpq(fields["coeff"])
    return CycleIndex(terms, n)


def _monomial_text(parts: tuple[int, ...]) -> str:
    factors = []
    for i, m in sorted(Counter(parts).items()):
        factors.append(f"p[{i}]" if m == 1 else f"p[{i}]^{m}")
    return "*".join(factors)


def format_series(f: CycleIndex) -> str:
    """Human-readable rendering, e.g. ``1/2*p[1]^2 + 1/2*p[2]``."""
    pieces = []
    for parts, c in f.items():
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        mono = _monomial_text(tuple(parts))
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        pieces.append((sign, body))
    if not pieces:
        return "0"
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def parse_series(text: str, truncation: int) -> CycleIndex:
    """Inverse of :func:`format_series` for a given truncation."""
    text = text.strip()
    if text == "0":
        return CycleIndex({}, truncation)
    normalized = text.replace(" - ", " + -").replace(" + ", "\n")
    terms: dict[tuple[int, ...], mpq] = {}
    for raw in normalized.split("\n"):
        raw = raw.strip()
        sign = -1 if raw.startswith("-") else 1
        raw = raw.lstrip("-")
        coeff = mpq(1)
        parts: list[int] = []
        for factor in raw.split("*"):
            if factor.startswith("p["):
                index, _, power = factor[2:].partition("]")
                parts += [int(index)] * (int(power[1:]) if power else 1)
            else:
                coeff *= mpq(factor)
        key = tuple(sorted(parts, reverse=True))
        terms[key] = terms.get(key, 0) + sign * coeff
    return CycleIndex(terms, truncation)
