"""A small expression language over cycle indices.

Grammar::

    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := atom postfix*
    postfix := "'" | "^point" | "^inv"
    atom    := NAME | NAME '(' expr ')' | '(' expr ')' | RATIONAL

``NAME(expr)`` is plethystic composition, ``'`` the derivative in ``p1``,
``^point`` pointing and ``^inv`` the plethystic inverse. ``Quot(BC)`` and
``Quot(CBC)`` give the quotient by the color swap of a two-group species.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from gmpy2 import mpq

from .cycle_index import (
    CycleIndex,
    ci_comp_inverse,
    ci_derivative,
    ci_plethysm,
    ci_point,
    constant,
    format_series,
)
from .gamma import gci_quotient
from .species import DEFAULT_CATALOG, SpeciesCatalog

format = format_series  # noqa: A001  (public name of the renderer)


class DslError(Exception):
    pass


class DslSyntaxError(DslError):
    def __init__(self, message: str, text: str, position: int):
        self.position = position
        self.line = text.count("\n", 0, position) + 1
        self.column = position - (text.rfind("\n", 0, position) + 1) + 1
        super().__init__(
            f"syntax error at position {position} (line {self.line}, column {self.column}): {message}"
        )


class DslNameError(DslError):
    pass


# -- AST --------------------------------------------------------------------------

@dataclass(frozen=True)
class Name:
    name: str


@dataclass(frozen=True)
class Constant:
    value: mpq


@dataclass(frozen=True)
class Sum:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Difference:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Product:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Compose:
    outer: "Expr"
    inner: "Expr"


@dataclass(frozen=True)
class Derivative:
    operand: "Expr"


@dataclass(frozen=True)
class Point:
    operand: "Expr"


@dataclass(frozen=True)
class Inverse:
    operand: "Expr"


@dataclass(frozen=True)
class QuotientS2:
    operand: Name


Expr = Union[Name, Constant, Sum, Difference, Product, Compose, Derivative, Point, Inverse, QuotientS2]

QUOTIENT_KEYWORD = "Quot"


# -- parsing ----------------------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<rational>\d+(?:\s*/\s*\d+)?)
  | (?P<postfix>\^point\b|\^inv\b|')
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*()])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise DslSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected: str):
        kind, value, pos = self.peek()
        found = "end of input" if kind == "end" else repr(value)
        raise DslSyntaxError(f"expected {expected}, found {found}", self.text, pos)

    def expect(self, value: str):
        if self.peek()[1] != value or self.peek()[0] not in ("op",):
            self.fail(repr(value))
        self.advance()

    def parse(self) -> Expr:
        node = self.expr()
        if self.peek()[0] != "end":
            self.fail("an operator or end of input")
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.advance()[1]
            right = self.term()
            node = Sum(node, right) if op == "+" else Difference(node, right)
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.advance()
            node = Product(node, self.factor())
        return node

    def factor(self) -> Expr:
        node = self.atom()
        while self.peek()[0] == "postfix":
            op = self.advance()[1]
            if op == "'":
                node = Derivative(node)
            elif op == "^point":
                node = Point(node)
            else:
                node = Inverse(node)
        return node

    def atom(self) -> Expr:
        kind, value, _ = self.peek()
        if kind == "rational":
            self.advance()
            return Constant(mpq(re.sub(r"\s+", "", value)))
        if kind == "name":
            self.advance()
            if self.peek()[:2] != ("op", "("):
                return Name(value)
            self.advance()
            if value == QUOTIENT_KEYWORD:
                kind2, inner, _ = self.peek()
                if kind2 != "name":
                    self.fail("a two-group species name")
                self.advance()
                self.expect(")")
                return QuotientS2(Name(inner))
            inner = self.expr()
            self.expect(")")
            return Compose(Name(value), inner)
        if (kind, value) == ("op", "("):
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        self.fail("an expression")


def parse(text: str) -> Expr:
    """Parse an expression string into an AST; raises :class:`DslSyntaxError`."""
    return _Parser(text).parse()


_PRECEDENCE = {Sum: 1, Difference: 1, Product: 2, Derivative: 3, Point: 3, Inverse: 3}


def render(node: Expr) -> str:
    """Pretty-print an AST; ``parse(render(e)) == e`` for parsed trees."""

    def wrap(child: Expr, minimum: int) -> str:
        text = render(child)
        return f"({text})" if _PRECEDENCE.get(type(child), 4) < minimum else text

    if isinstance(node, Name):
        return node.name
    if isinstance(node, Constant):
        v = node.value
        return str(int(v.numerator)) if v.denominator == 1 else f"{int(v.numerator)}/{int(v.denominator)}"
    if isinstance(node, Sum):
        return f"{wrap(node.left, 1)} + {wrap(node.right, 2)}"
    if isinstance(node, Difference):
        return f"{wrap(node.left, 1)} - {wrap(node.right, 2)}"
    if isinstance(node, Product):
        return f"{wrap(node.left, 2)}*{wrap(node.right, 3)}"
    if isinstance(node, Derivative):
        return f"{wrap(node.operand, 3)}'"
    if isinstance(node, Point):
        return f"{wrap(node.operand, 3)}^point"
    if isinstance(node, Inverse):
        return f"{wrap(node.operand, 3)}^inv"
    if isinstance(node, Compose):
        if not isinstance(node.outer, Name):
            raise ValueError("only a species name can be applied to an argument")
        return f"{node.outer.name}({render(node.inner)})"
    if isinstance(node, QuotientS2):
        return f"{QUOTIENT_KEYWORD}({node.operand.name})"
    raise TypeError(f"not an expression node: {node!r}")


# -- evaluation -------------------------------------------------------------------

def evaluate(expr: Expr | str, n: int, catalog: SpeciesCatalog | None = None) -> CycleIndex:
    """Evaluate to a cycle index exact through degree ``n``.

    Derivatives request one extra degree from their operand, so the result
    is exact at the requested truncation.
    """
    if isinstance(expr, str):
        expr = parse(expr)
    if n < 0:
        raise ValueError("n must be nonnegative")
    catalog = catalog or DEFAULT_CATALOG

    def ev(node: Expr, t: int) -> CycleIndex:
        if isinstance(node, Name):
            if node.name in SpeciesCatalog.two_group:
                raise DslNameError(f"{node.name} is a two-group species; use {QUOTIENT_KEYWORD}({node.name}) or its slots")
            if node.name not in SpeciesCatalog.ordinary:
                raise DslNameError(f"unknown species {node.name!r}")
            return catalog.get(node.name, t)
        if isinstance(node, Constant):
            return constant(node.value, t)
        if isinstance(node, Sum):
            return ev(node.left, t) + ev(node.right, t)
        if isinstance(node, Difference):
            return ev(node.left, t) - ev(node.right, t)
        if isinstance(node, Product):
            return ev(node.left, t) * ev(node.right, t)
        if isinstance(node, Compose):
            return ci_plethysm(ev(node.outer, t), ev(node.inner, t), t)
        if isinstance(node, Derivative):
            return ci_derivative(ev(node.operand, t + 1))
        if isinstance(node, Point):
            return ci_point(ev(node.operand, t))
        if isinstance(node, Inverse):
            return ci_comp_inverse(ev(node.operand, t), t)
        if isinstance(node, QuotientS2):
            name = node.operand.name
            if name not in SpeciesCatalog.two_group:
                raise DslNameError(f"{QUOTIENT_KEYWORD}() needs one of {', '.join(SpeciesCatalog.two_group)}, got {name!r}")
            return gci_quotient(catalog.get(name, t))
        raise TypeError(f"not an expression node: {node!r}")

    return ev(expr, n)
