from fractions import Fraction

import pytest
import sympy

from bipartite_species import CycleIndex

_ACCEPTANCE: list[tuple[str, bool]] = []


@pytest.fixture
def record_criterion():
    def record(label: str, passed: bool):
        _ACCEPTANCE.append((label, passed))
        print(f"{'PASS' if passed else 'FAIL'}  {label}")
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for label, passed in _ACCEPTANCE:
            terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}")


def as_fraction_terms(f: CycleIndex) -> dict:
    return {tuple(p): Fraction(int(c.numerator), int(c.denominator)) for p, c in f.items()}


def sympy_plethysm(f: CycleIndex, g: CycleIndex, n: int) -> dict:
    """Plethysm by literal symbolic substitution, truncated by weight."""
    p = sympy.symbols(f"p1:{n + 1}")
    t = sympy.Symbol("t")

    def expr(series: CycleIndex, scale: int = 1):
        total = sympy.Integer(0)
        for parts, c in series.items():
            if any(k * scale > n for k in parts):
                continue
            term = sympy.Rational(int(c.numerator), int(c.denominator))
            for k in parts:
                term *= p[k * scale - 1] * t ** (k * scale)
            total += term
        return total

    outer = expr(f)
    subs = {p[m - 1]: expr(g, m) for m in range(1, n + 1)}
    # t tracks degree; substitute simultaneously then drop t^(>n)
    outer = outer.subs({p[m - 1] * t**m: sympy.Symbol(f"q{m}") for m in range(1, n + 1)})
    result = sympy.expand(outer.subs({sympy.Symbol(f"q{m}"): subs[p[m - 1]] for m in range(1, n + 1)}))
    poly = sympy.Poly(result, t, *p)
    terms: dict = {}
    for monom, coeff in poly.terms():
        if monom[0] > n:
            continue
        parts = []
        for k, e in enumerate(monom[1:], start=1):
            parts += [k] * e
        key = tuple(sorted(parts, reverse=True))
        terms[key] = terms.get(key, Fraction(0)) + Fraction(int(coeff.p), int(coeff.q))
    return {k: v for k, v in terms.items() if v}
