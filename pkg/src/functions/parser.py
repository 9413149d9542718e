"""
Recursive-descent parser for the expression language.

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := "-" unary | power
    power   := primary ("^" exponent)*
    exponent:= integer | "-" integer | "(" "-"? integer ")"
    primary := number | "pi" | "i" | "t" | name "(" expr ")" | "(" expr ")"

Multiplication must be written explicitly. Syntax errors carry the character
offset of the offending token; errors at end of input point at the last character.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List

from src.exceptions import ExpressionSyntaxError
from src.functions.expr import (
    FUNCTIONS,
    BinOp,
    Call,
    Expr,
    ImagUnit,
    Neg,
    Num,
    PiConst,
    Pow,
    Var,
)

_TOKEN_REGEXP = re.compile(
    r"\s*(?:(?P<number>\d+(?:\.\d+)?|\.\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))"
)
_CONSTANTS = {"pi": PiConst(), "i": ImagUnit(), "t": Var()}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN_REGEXP.match(text, position)
        if not match:
            offset = len(text) - len(text[position:].lstrip())
            raise ExpressionSyntaxError(f"unexpected character {text[offset]!r}", offset)
        kind = match.lastgroup
        tokens.append(Token(kind=kind, text=match.group(kind), offset=match.start(kind)))
        position = match.end()
    tokens.append(Token(kind="end", text="", offset=max(0, len(text.rstrip()) - 1)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def at_op(self, *ops: str) -> bool:
        return self.current.kind == "op" and self.current.text in ops

    def fail(self, expected: str):
        token = self.current
        found = "end of input" if token.kind == "end" else repr(token.text)
        raise ExpressionSyntaxError(f"unexpected {found}", token.offset, expected)

    def expect_op(self, op: str) -> Token:
        if not self.at_op(op):
            self.fail(f"'{op}'")
        return self.advance()

    def parse(self) -> Expr:
        if self.current.kind == "end":
            self.fail("an expression")
        expr = self.expression()
        if self.current.kind != "end":
            self.fail("an operator or end of input")
        return expr

    def expression(self) -> Expr:
        expr = self.term()
        while self.at_op("+", "-"):
            op = self.advance().text
            expr = BinOp(op, expr, self.term())
        return expr

    def term(self) -> Expr:
        expr = self.unary()
        while self.at_op("*", "/"):
            op = self.advance().text
            denominator_token = self.current
            right = self.unary()
            if op == "/" and right == Num(Fraction(0)):
                raise ExpressionSyntaxError("division by the literal 0", denominator_token.offset)
            expr = BinOp(op, expr, right)
        return expr

    def unary(self) -> Expr:
        if self.at_op("-"):
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        expr = self.primary()
        if self.at_op("^"):
            self.advance()
            expr = Pow(expr, self.exponent())
            if self.at_op("^"):
                # t^2^3 is ambiguous; (t^2)^3 has to be written out
                raise ExpressionSyntaxError(
                    "chained '^' needs parentheses", self.current.offset, "an operator or end of input"
                )
        return expr

    def exponent(self) -> int:
        parenthesized = self.at_op("(")
        if parenthesized:
            self.advance()
        sign = 1
        if self.at_op("-"):
            self.advance()
            sign = -1
        token = self.current
        if token.kind != "number" or not token.text.isdigit():
            self.fail("an integer exponent")
        self.advance()
        if parenthesized:
            self.expect_op(")")
        return sign * int(token.text)

    def primary(self) -> Expr:
        token = self.current
        if token.kind == "number":
            self.advance()
            return Num(Fraction(token.text))
        if token.kind == "name":
            self.advance()
            if token.text in _CONSTANTS:
                return _CONSTANTS[token.text]
            if token.text in FUNCTIONS:
                self.expect_op("(")
                argument = self.expression()
                self.expect_op(")")
                return Call(token.text, argument)
            raise ExpressionSyntaxError(
                f"unknown name {token.text!r}",
                token.offset,
                "one of pi, i, t, " + ", ".join(FUNCTIONS),
            )
        if self.at_op("("):
            self.advance()
            expr = self.expression()
            self.expect_op(")")
            return expr
        self.fail("a number, name or '('")


def parse_expr(text: str) -> Expr:
    """Parse an expression such as "sin(2*t)/2" or "2*(sin(t)+cos(t))"."""
    return _Parser(text).parse()
