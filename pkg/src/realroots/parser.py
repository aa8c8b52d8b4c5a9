"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace is insignificant)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := unary ('*' unary)*
    unary  := ('+'|'-') unary | factor
    factor := base ('^' uint)?
    base   := number | ident | '(' expr ')'
    number := uint ('/' uint)?

Multiplication must be written with ``*``; ``2x`` and ``x y`` are errors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Set, Tuple, Union

from .errors import PolySyntaxError, UnknownVariable
from .multipoly import MultiPoly
from .unipoly import UniPoly

__all__ = [
    "Const",
    "Var",
    "Add",
    "Sub",
    "Mul",
    "Neg",
    "Pow",
    "PolyExpr",
    "parse_poly",
    "variables_of",
    "to_multipoly",
    "to_unipoly",
    "parse_multipoly",
    "parse_unipoly",
]


@dataclass(frozen=True)
class Const:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Add:
    left: "PolyExpr"
    right: "PolyExpr"


@dataclass(frozen=True)
class Sub:
    left: "PolyExpr"
    right: "PolyExpr"


@dataclass(frozen=True)
class Mul:
    left: "PolyExpr"
    right: "PolyExpr"


@dataclass(frozen=True)
class Neg:
    operand: "PolyExpr"


@dataclass(frozen=True)
class Pow:
    base: "PolyExpr"
    exponent: int


PolyExpr = Union[Const, Var, Add, Sub, Mul, Neg, Pow]

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(src: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(src)
    while pos < n:
        m = _TOKEN_RE.match(src, pos)
        if m is None:  # only trailing whitespace remains
            break
        num, ident, op = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            tokens.append(("num", num, start))
        elif ident is not None:
            tokens.append(("ident", ident, start))
        else:
            if op not in "+-*/^()":
                raise PolySyntaxError(f"unexpected character {op!r}", start, src)
            tokens.append(("op", op, start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, src: str, allowed: Optional[Sequence[str]]):
        self.src = src
        self.tokens = _tokenize(src)
        self.i = 0
        self.allowed = None if allowed is None else tuple(allowed)

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        found = "end of input" if tok[0] == "end" else repr(tok[1])
        raise PolySyntaxError(f"{msg}, found {found}", tok[2], self.src)

    def accept(self, op):
        tok = self.peek()
        if tok[0] == "op" and tok[1] == op:
            self.i += 1
            return True
        return False

    def parse(self) -> PolyExpr:
        if self.peek()[0] == "end":
            self.error("empty expression")
        node = self.expr()
        if self.peek()[0] != "end":
            self.error("expected an operator")
        return node

    def expr(self):
        node = self.term()
        while True:
            if self.accept("+"):
                node = Add(node, self.term())
            elif self.accept("-"):
                node = Sub(node, self.term())
            else:
                return node

    def term(self):
        node = self.unary()
        while self.accept("*"):
            node = Mul(node, self.unary())
        return node

    def unary(self):
        if self.accept("-"):
            return Neg(self.unary())
        if self.accept("+"):
            return self.unary()
        return self.factor()

    def factor(self):
        node = self.base()
        if self.accept("^"):
            tok = self.peek()
            if tok[0] != "num":
                self.error("exponent must be a nonnegative integer literal")
            self.next()
            node = Pow(node, int(tok[1]))
        return node

    def base(self):
        tok = self.next()
        kind, text, pos = tok
        if kind == "num":
            value = Fraction(int(text))
            if self.accept("/"):
                den = self.peek()
                if den[0] != "num":
                    self.error("expected an integer denominator")
                self.next()
                if int(den[1]) == 0:
                    raise PolySyntaxError("zero denominator", den[2], self.src)
                value = Fraction(int(text), int(den[1]))
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.error("only integer fractions p/q are allowed")
            return Const(value)
        if kind == "ident":
            if self.allowed is not None and text not in self.allowed:
                raise UnknownVariable(text, self.allowed)
            return Var(text)
        if kind == "op" and text == "(":
            node = self.expr()
            if not self.accept(")"):
                self.error("expected ')'")
            return node
        self.i -= 1
        self.error("expected a number, variable or '('")


def parse_poly(src: str, vars: Optional[Sequence[str]] = None) -> PolyExpr:
    """Parse ``src`` into an expression tree; ``vars`` restricts the allowed identifiers."""
    return _Parser(src, vars).parse()


def variables_of(node: PolyExpr) -> Set[str]:
    if isinstance(node, Var):
        return {node.name}
    if isinstance(node, Const):
        return set()
    if isinstance(node, (Neg,)):
        return variables_of(node.operand)
    if isinstance(node, Pow):
        return variables_of(node.base)
    return variables_of(node.left) | variables_of(node.right)


def _expand(node: PolyExpr, const, var):
    if isinstance(node, Const):
        return const(node.value)
    if isinstance(node, Var):
        return var(node.name)
    if isinstance(node, Neg):
        return -_expand(node.operand, const, var)
    if isinstance(node, Pow):
        return _expand(node.base, const, var) ** node.exponent
    a = _expand(node.left, const, var)
    b = _expand(node.right, const, var)
    if isinstance(node, Add):
        return a + b
    if isinstance(node, Sub):
        return a - b
    return a * b


def to_multipoly(node: PolyExpr, vars: Sequence[str]) -> MultiPoly:
    vars = tuple(vars)
    missing = variables_of(node) - set(vars)
    if missing:
        raise UnknownVariable(sorted(missing)[0], vars)
    return _expand(node, lambda c: MultiPoly.constant(c, vars), lambda v: MultiPoly.variable(v, vars))


def to_unipoly(node: PolyExpr, var: Optional[str] = None) -> UniPoly:
    names = variables_of(node)
    if var is None:
        if len(names) > 1:
            raise UnknownVariable(sorted(names)[1], sorted(names)[:1])
        var = next(iter(names), "x")
    elif names - {var}:
        raise UnknownVariable(sorted(names - {var})[0], [var])
    return _expand(node, lambda c: UniPoly([c], var), lambda v: UniPoly.gen(var))


def parse_multipoly(src: str, vars: Sequence[str]) -> MultiPoly:
    return to_multipoly(parse_poly(src, vars), vars)


def parse_unipoly(src: str, var: Optional[str] = None) -> UniPoly:
    return to_unipoly(parse_poly(src, None if var is None else [var]), var)
