"""Recursive-descent parser for field elements, polynomials and rational
functions.

Grammar (whitespace is insignificant)::

    expr     := term (('+' | '-') term)*
    term     := unary (('*' | '/') unary)*
    unary    := ('-' | '+') unary | power
    power    := base ('^' uint)?
    base     := rational | 'X' | 'sqrt' '(' int ')' | '(' expr ')'
    rational := uint ('/' uint)?

A literal ``a/b`` binds as one rational, so ``2/3^2`` is ``(2/3)^2``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DemivalError, ParseError
from .formatting import format_rational
from .polynomials import Polynomial, RationalFunction


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Sqrt:
    d: int


@dataclass(frozen=True)
class Neg:
    operand: "Expression"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Pow:
    base: "Expression"
    exponent: int


Expression = Union[Num, Var, Sqrt, Neg, BinOp, Pow]

_TOKEN = re.compile(r"\s*(?:(\d+)|(sqrt)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    line, line_start = 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        skipped = text[pos:m.start(m.lastindex)] if m.lastindex else text[pos:m.end()]
        for i, ch in enumerate(skipped):
            if ch == "\n":
                line, line_start = line + 1, pos + i + 1
        if m.lastindex is None:
            pos = m.end()
            continue
        start = m.start(m.lastindex)
        col = start - line_start + 1
        num, sqrt, ident, sym = m.groups()
        if num is not None:
            toks.append(_Tok("num", num, line, col))
        elif sqrt is not None:
            toks.append(_Tok("sqrt", sqrt, line, col))
        elif ident is not None:
            if ident != "X":
                raise ParseError(f"unknown identifier {ident!r}", line, col)
            toks.append(_Tok("X", ident, line, col))
        else:
            if sym not in "+-*/^(),":
                raise ParseError(f"unexpected character {sym!r}", line, col)
            toks.append(_Tok(sym, sym, line, col))
        pos = m.end()
    toks.append(_Tok("eof", "", line, len(text) - line_start + 1))
    return toks


class _Parser:
    def __init__(self, text: str, ring_d: int | None, allow_sqrt: bool):
        self.toks = _tokenize(text)
        self.i = 0
        self.ring_d = ring_d
        self.allow_sqrt = allow_sqrt

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, message: str, tok: _Tok | None = None):
        tok = tok or self.tok
        return ParseError(message, tok.line, tok.col)

    def take(self, kind: str) -> _Tok:
        if self.tok.kind != kind:
            found = self.tok.text or "end of input"
            raise self.error(f"expected {kind!r}, found {found!r}")
        tok = self.tok
        self.i += 1
        return tok

    def parse(self) -> Expression:
        e = self.expr()
        if self.tok.kind != "eof":
            raise self.error(f"unexpected {self.tok.text!r}")
        return e

    def expr(self) -> Expression:
        e = self.term()
        while self.tok.kind in ("+", "-"):
            op = self.take(self.tok.kind).text
            e = BinOp(op, e, self.term())
        return e

    def term(self) -> Expression:
        e = self.unary()
        while self.tok.kind in ("*", "/"):
            op = self.take(self.tok.kind).text
            e = BinOp(op, e, self.unary())
        return e

    def unary(self) -> Expression:
        if self.tok.kind == "-":
            self.take("-")
            return Neg(self.unary())
        if self.tok.kind == "+":
            self.take("+")
            return self.unary()
        return self.power()

    def power(self) -> Expression:
        b = self.base()
        if self.tok.kind == "^":
            self.take("^")
            if self.tok.kind != "num":
                raise self.error("exponent must be a nonnegative integer")
            b = Pow(b, int(self.take("num").text))
        return b

    def base(self) -> Expression:
        tok = self.tok
        if tok.kind == "num":
            self.take("num")
            value = Fraction(int(tok.text))
            nxt = self.toks[self.i + 1] if self.i + 1 < len(self.toks) else None
            if self.tok.kind == "/" and nxt is not None and nxt.kind == "num":
                self.take("/")
                den = int(self.take("num").text)
                if den == 0:
                    raise self.error("zero denominator in rational literal", nxt)
                value = Fraction(int(tok.text), den)
            return Num(value)
        if tok.kind == "X":
            self.take("X")
            return Var()
        if tok.kind == "sqrt":
            self.take("sqrt")
            self.take("(")
            sign = 1
            if self.tok.kind == "-":
                self.take("-")
                sign = -1
            d = sign * int(self.take("num").text)
            self.take(")")
            if not self.allow_sqrt:
                raise self.error("sqrt is not available for this ring", tok)
            if self.ring_d is not None and d != self.ring_d:
                raise self.error(f"sqrt({d}) does not match the selected ring sqrt({self.ring_d})", tok)
            return Sqrt(d)
        if tok.kind == "(":
            self.take("(")
            e = self.expr()
            self.take(")")
            return e
        found = tok.text or "end of input"
        raise self.error(f"unexpected {found!r}")


def parse_expression(text: str, ring=None) -> Expression:
    """Parse ``text``; ``ring`` (a base field) restricts which ``sqrt`` is legal."""
    if ring is None:
        return _Parser(text, None, True).parse()
    d = getattr(ring, "d", None)
    return _Parser(text, d, d is not None).parse()


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def serialize(e: Expression, prec: int = 0) -> str:
    """Text form that parses back to a structurally equal tree."""
    if isinstance(e, Num):
        text = format_rational(e.value)
        return f"({text})" if prec >= 3 and "/" in text else text
    if isinstance(e, Var):
        return "X"
    if isinstance(e, Sqrt):
        return f"sqrt({e.d})"
    if isinstance(e, Neg):
        inner = format_rational(e.operand.value) if isinstance(e.operand, Num) else serialize(e.operand, 3)
        text = "-" + inner
        return f"({text})" if prec > 3 else text
    if isinstance(e, Pow):
        text = f"{serialize(e.base, 4)}^{e.exponent}"
        return f"({text})" if prec >= 4 else text
    p = _PREC[e.op]
    left = serialize(e.left, p)
    right = serialize(e.right, p + 1)
    if e.op == "/" and left[-1].isdigit() and right[0].isdigit():
        right = f"({right})"  # "a/b" would re-read as one literal
    text = f"{left} {e.op} {right}" if p == 1 else f"{left}{e.op}{right}"
    return f"({text})" if prec > p else text


def evaluate(e: Expression, base) -> RationalFunction:
    """Value of ``e`` in K(X) for the base field ``base``."""
    if isinstance(e, Num):
        return RationalFunction(base.coerce(e.value))
    if isinstance(e, Var):
        return RationalFunction.x()
    if isinstance(e, Sqrt):
        if getattr(base, "d", None) != e.d:
            raise DemivalError(f"sqrt({e.d}) is not in {base}", "ring_mismatch")
        return RationalFunction(base.ctx.sqrt)
    if isinstance(e, Neg):
        return -evaluate(e.operand, base)
    if isinstance(e, Pow):
        return evaluate(e.base, base) ** e.exponent
    left, right = evaluate(e.left, base), evaluate(e.right, base)
    if e.op == "+":
        return left + right
    if e.op == "-":
        return left - right
    if e.op == "*":
        return left * right
    if not right:
        raise DemivalError("division by zero", "division_by_zero")
    return left / right


def _default_base(base):
    if base is None:
        from .fields import RationalField

        return RationalField()
    return base


def parse_rational_function(text: str, base=None) -> RationalFunction:
    base = _default_base(base)
    return evaluate(parse_expression(text, base), base)


def parse_polynomial(text: str, base=None) -> Polynomial:
    f = parse_rational_function(text, base)
    if not f.is_polynomial():
        raise DemivalError(f"{text!r} is not a polynomial", "not_polynomial")
    return f.num


def parse_element(text: str, base=None):
    base = _default_base(base)
    f = parse_rational_function(text, base)
    if not f.is_constant():
        raise DemivalError(f"{text!r} depends on X; a field element is required", "not_constant")
    return base.coerce(f.constant_value())


def split_tuple(text: str) -> list[str]:
    """``"(a, b, c)"`` -> ``["a", "b", "c"]`` splitting at top-level commas."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        depth = 0
        for i, ch in enumerate(body):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0 and i < len(body) - 1:
                break
        else:
            body = body[1:-1]
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(body[start:i])
            start = i + 1
    parts.append(body[start:])
    return [p.strip() for p in parts if p.strip()]


def parse_ideal_generators(text: str, base=None) -> list:
    return [parse_element(part, base) for part in split_tuple(text)]


__all__ = [
    "Num", "Var", "Sqrt", "Neg", "BinOp", "Pow", "Expression", "parse_expression", "serialize",
    "evaluate", "parse_rational_function", "parse_polynomial", "parse_element",
    "split_tuple", "parse_ideal_generators",
]
