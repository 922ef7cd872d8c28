"""Arithmetic expressions in one variable x, parsed by recursive descent.

Grammar, loosest binding first:

    expression := term (("+" | "-") term)*
    term       := unary (("*" | "/") unary)*
    unary      := "-" unary | power
    power      := primary ("^" unary)?          right-associative
    primary    := NUMBER | "x" | NAME "(" expression ("," expression)* ")"
                | "(" expression ")"

Functions: sqrt, exp, log, sin, cos, abs (one argument) and pow (two).
"""

from __future__ import annotations

import math
import re
from collections.abc import Callable
from dataclasses import dataclass

from algorithms.grid import SampleError

_TOKEN_PATTERN = re.compile(
    r"""
    (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^(),])
  | (?P<space>\s+)
  """,
    re.VERBOSE,
)


class ExpressionSyntaxError(ValueError):
    """Raised for malformed expression text; offset is a byte offset into the text."""

    def __init__(self, message: str, *, text: str, position: int) -> None:
        self.offset = len(text[:position].encode("utf-8"))
        self.message = message
        super().__init__(f"{message} at offset {self.offset}")


class UnknownIdentifierError(ExpressionSyntaxError):
    """Raised for names that are neither x nor a known function."""


class ExpressionDomainError(SampleError):
    """Raised when evaluation leaves the real domain of an operation."""

    def __init__(self, operation: str, argument: float | tuple[float, ...]) -> None:
        self.operation = operation
        self.argument = argument
        super().__init__(f"{operation} is undefined for argument {argument!r}")


@dataclass(frozen=True)
class Number:
    value: float


@dataclass(frozen=True)
class Variable:
    pass


@dataclass(frozen=True)
class Negate:
    operand: Expression


@dataclass(frozen=True)
class BinaryOp:
    op: str
    left: Expression
    right: Expression


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple[Expression, ...]


Expression = Number | Variable | Negate | BinaryOp | Call


def _checked_sqrt(value: float) -> float:
    if value < 0.0:
        raise ExpressionDomainError("sqrt", value)
    return math.sqrt(value)


def _checked_log(value: float) -> float:
    if value <= 0.0:
        raise ExpressionDomainError("log", value)
    return math.log(value)


def _checked_pow(base: float, exponent: float) -> float:
    if base == 0.0 and exponent < 0.0:
        raise ExpressionDomainError("pow", (base, exponent))
    if base < 0.0 and not float(exponent).is_integer():
        raise ExpressionDomainError("pow", (base, exponent))
    try:
        return math.pow(base, exponent)
    except OverflowError as exc:
        raise ExpressionDomainError("pow", (base, exponent)) from exc


def _checked_exp(value: float) -> float:
    try:
        return math.exp(value)
    except OverflowError as exc:
        raise ExpressionDomainError("exp", value) from exc


FUNCTIONS: dict[str, tuple[int, Callable[..., float]]] = {
    "sqrt": (1, _checked_sqrt),
    "exp": (1, _checked_exp),
    "log": (1, _checked_log),
    "sin": (1, math.sin),
    "cos": (1, math.cos),
    "abs": (1, abs),
    "pow": (2, _checked_pow),
}


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    position: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    position = 0
    while position < len(text):
        match = _TOKEN_PATTERN.match(text, position)
        if match is None:
            raise ExpressionSyntaxError(
                f"unexpected character {text[position]!r}", text=text, position=position
            )
        kind = match.lastgroup or ""
        if kind != "space":
            tokens.append(_Token(kind=kind, text=match.group(), position=position))
        position = match.end()
    tokens.append(_Token(kind="end", text="", position=len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self._text = text
        self._tokens = _tokenize(text)
        self._index = 0

    @property
    def _current(self) -> _Token:
        return self._tokens[self._index]

    def _advance(self) -> _Token:
        token = self._current
        self._index += 1
        return token

    def _error(self, message: str, token: _Token) -> ExpressionSyntaxError:
        return ExpressionSyntaxError(message, text=self._text, position=token.position)

    def _describe(self, token: _Token) -> str:
        return "end of input" if token.kind == "end" else repr(token.text)

    def _expect(self, symbol: str) -> None:
        token = self._current
        if token.kind != "op" or token.text != symbol:
            raise self._error(f"expected {symbol!r} but found {self._describe(token)}", token)
        self._advance()

    def _at(self, *symbols: str) -> bool:
        return self._current.kind == "op" and self._current.text in symbols

    def parse(self) -> Expression:
        expression = self._expression()
        if self._current.kind != "end":
            raise self._error(f"unexpected {self._describe(self._current)}", self._current)
        return expression

    def _expression(self) -> Expression:
        node = self._term()
        while self._at("+", "-"):
            op = self._advance().text
            node = BinaryOp(op, node, self._term())
        return node

    def _term(self) -> Expression:
        node = self._unary()
        while self._at("*", "/"):
            op = self._advance().text
            node = BinaryOp(op, node, self._unary())
        return node

    def _unary(self) -> Expression:
        if self._at("-"):
            self._advance()
            return Negate(self._unary())
        return self._power()

    def _power(self) -> Expression:
        base = self._primary()
        if self._at("^"):
            self._advance()
            return BinaryOp("^", base, self._unary())
        return base

    def _primary(self) -> Expression:
        token = self._current
        if token.kind == "number":
            self._advance()
            return Number(float(token.text))
        if token.kind == "name":
            self._advance()
            if token.text == "x":
                return Variable()
            if token.text not in FUNCTIONS:
                raise UnknownIdentifierError(
                    f"unknown identifier {token.text!r}", text=self._text, position=token.position
                )
            return self._call(token)
        if self._at("("):
            self._advance()
            inner = self._expression()
            self._expect(")")
            return inner
        raise self._error(f"unexpected {self._describe(token)}", token)

    def _call(self, name_token: _Token) -> Expression:
        arity, _ = FUNCTIONS[name_token.text]
        self._expect("(")
        args = [self._expression()]
        while self._at(","):
            self._advance()
            args.append(self._expression())
        self._expect(")")
        if len(args) != arity:
            raise self._error(
                f"{name_token.text} takes {arity} argument(s), got {len(args)}", name_token
            )
        return Call(name_token.text, tuple(args))


def parse(text: str) -> Expression:
    """Parse expression text into an immutable syntax tree."""
    return _Parser(text).parse()


def evaluate(expr: Expression, x: float) -> float:
    """Evaluate expr at x; results outside the reals raise ExpressionDomainError."""
    match expr:
        case Number(value):
            return value
        case Variable():
            return x
        case Negate(operand):
            return -evaluate(operand, x)
        case BinaryOp(op, left, right):
            return _binary(op, evaluate(left, x), evaluate(right, x))
        case Call(name, args):
            _, func = FUNCTIONS[name]
            result = float(func(*(evaluate(arg, x) for arg in args)))
            if not math.isfinite(result):
                raise ExpressionDomainError(name, tuple(evaluate(arg, x) for arg in args))
            return result
    raise TypeError(f"not an expression node: {expr!r}")


def _binary(op: str, left: float, right: float) -> float:
    if op == "+":
        result = left + right
    elif op == "-":
        result = left - right
    elif op == "*":
        result = left * right
    elif op == "/":
        if right == 0.0:
            raise ExpressionDomainError("/", (left, right))
        result = left / right
    else:
        result = _checked_pow(left, right)
    if not math.isfinite(result):
        raise ExpressionDomainError(op, (left, right))
    return result


def to_text(expr: Expression) -> str:
    """Fully parenthesised text that parses back to an equivalent tree."""
    match expr:
        case Number(value):
            literal = repr(float(value))
            return f"({literal})" if value < 0 else literal
        case Variable():
            return "x"
        case Negate(operand):
            return f"(-{to_text(operand)})"
        case BinaryOp(op, left, right):
            return f"({to_text(left)} {op} {to_text(right)})"
        case Call(name, args):
            return f"{name}({', '.join(to_text(arg) for arg in args)})"
    raise TypeError(f"not an expression node: {expr!r}")


def compile_expression(text: str) -> Callable[[float], float]:
    """Parse once and return a callable of x."""
    tree = parse(text)

    def _evaluate(x: float) -> float:
        return evaluate(tree, x)

    return _evaluate
