"""Text syntax for polynomials.

Grammar: integer/rational literals (``3``, ``3/4``), variables, ``+ - * ^``
and parentheses; ``^`` only with nonnegative integer exponents; implicit
multiplication is not allowed.  The same token stream feeds the problem-file
reader in :mod:`cadprep.problems`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterator, NamedTuple

from .errors import ParseError
from .poly import Polynomial, VariableContext

_TOKEN_RE = re.compile(
    r"(?P<NUMBER>\d+(?:/\d+)?)"
    r"|(?P<NAME>[A-Za-z][A-Za-z0-9_]*)"
    r"|(?P<OP><=|>=|!=|[-+*^()<>=])"
    r"|(?P<WS>[ \t]+)"
    r"|(?P<BAD>.)"
)


class Token(NamedTuple):
    kind: str  # NUMBER | NAME | OP | END
    text: str
    line: int
    column: int


def tokenize(text: str, first_line: int = 1) -> list[Token]:
    tokens: list[Token] = []
    for offset, raw in enumerate(text.split("\n")):
        line = first_line + offset
        body = raw.split("#", 1)[0]
        for m in _TOKEN_RE.finditer(body):
            kind = m.lastgroup
            if kind == "WS":
                continue
            if kind == "BAD":
                raise ParseError(f"unexpected character {m.group()!r}", line, m.start() + 1)
            tokens.append(Token(kind, m.group(), line, m.start() + 1))
    last = tokens[-1] if tokens else Token("END", "", first_line, 1)
    tokens.append(Token("END", "", last.line, last.column + len(last.text)))
    return tokens


class TokenStream:
    """Cursor over a token list with one-token lookahead."""

    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "END":
            self.pos += 1
        return tok

    def accept(self, text: str) -> bool:
        if self.peek().kind == "OP" and self.peek().text == text:
            self.pos += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if tok.kind == "OP" and tok.text == text:
            return self.next()
        raise ParseError(f"expected {text!r}, found {tok.text or 'end of input'!r}",
                         tok.line, tok.column)

    def error(self, message: str) -> ParseError:
        tok = self.peek()
        return ParseError(message, tok.line, tok.column)


def parse_polynomial(text: str, context: VariableContext) -> Polynomial:
    """Parse the shared polynomial grammar into canonical form."""
    stream = TokenStream(tokenize(text))
    poly = parse_poly_expr(stream, context)
    tok = stream.peek()
    if tok.kind != "END":
        raise ParseError(f"unexpected trailing input {tok.text!r}", tok.line, tok.column)
    return poly


def parse_poly_expr(stream: TokenStream, context: VariableContext) -> Polynomial:
    negate = stream.accept("-")
    poly = _parse_term(stream, context)
    if negate:
        poly = -poly
    while True:
        if stream.accept("+"):
            poly = poly + _parse_term(stream, context)
        elif stream.accept("-"):
            poly = poly - _parse_term(stream, context)
        else:
            return poly


def _parse_term(stream: TokenStream, context: VariableContext) -> Polynomial:
    poly = _parse_factor(stream, context)
    while stream.accept("*"):
        poly = poly * _parse_factor(stream, context)
    return poly


def _parse_factor(stream: TokenStream, context: VariableContext) -> Polynomial:
    base = _parse_base(stream, context)
    if stream.accept("^"):
        tok = stream.peek()
        if tok.kind != "NUMBER" or "/" in tok.text:
            raise ParseError("exponent must be a nonnegative integer", tok.line, tok.column)
        stream.next()
        return base ** int(tok.text)
    return base


def _parse_base(stream: TokenStream, context: VariableContext) -> Polynomial:
    tok = stream.peek()
    if tok.kind == "NUMBER":
        stream.next()
        return context.constant(Fraction(tok.text))
    if tok.kind == "NAME":
        stream.next()
        try:
            v = context.variable(tok.text)
        except Exception:
            raise ParseError(f"unknown variable {tok.text!r}", tok.line, tok.column) from None
        return context.poly_for(v)
    if tok.kind == "OP" and tok.text == "(":
        stream.next()
        inner = parse_poly_expr(stream, context)
        stream.expect(")")
        return inner
    raise ParseError(
        f"expected a number, variable or '(', found {tok.text or 'end of input'!r}",
        tok.line, tok.column,
    )
