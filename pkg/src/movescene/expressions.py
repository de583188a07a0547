"""Tokenizer, parser and evaluator for user-typed math expressions.

Standard notation with +, -, *, /, ^ (right-associative, binding tighter
than unary minus), brackets, and the fixed single-argument function set
sin cos tg sh ch th ln lg exp sqrt mod arcsin arccos arctg. `tg` is the
tangent, `sh`/`ch`/`th` the hyperbolics, `ln`/`lg` natural and base-10
logs, `mod` the absolute value, `arctg` the arctangent.

Evaluation never raises: out-of-domain input yields None ("undefined").
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class LexError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class ParseError(ValueError):
    pass


# -- tokens -------------------------------------------------------------------

NUMBER = "number"
IDENT = "identifier"
OP = "op"
LPAREN = "lparen"
RPAREN = "rparen"
COMMA = "comma"

_OPS = "+-*/^"


@dataclass(frozen=True)
class Token:
    kind: str
    lexeme: str
    offset: int


def tokenize(text: str) -> list[Token]:
    """Whitespace-insensitive token stream; illegal characters raise LexError."""
    tokens: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPS:
            tokens.append(Token(OP, ch, i))
            i += 1
        elif ch == "(":
            tokens.append(Token(LPAREN, ch, i))
            i += 1
        elif ch == ")":
            tokens.append(Token(RPAREN, ch, i))
            i += 1
        elif ch == ",":
            tokens.append(Token(COMMA, ch, i))
            i += 1
        elif ch.isdigit() or (ch == "." and i + 1 < n and text[i + 1].isdigit()):
            start = i
            while i < n and text[i].isdigit():
                i += 1
            if i < n and text[i] == ".":
                i += 1
                while i < n and text[i].isdigit():
                    i += 1
            tokens.append(Token(NUMBER, text[start:i], start))
        elif ch.isalpha() or ch == "_":
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(Token(IDENT, text[start:i], start))
        else:
            raise LexError(f"illegal character {ch!r}", i)
    return tokens


# -- AST ----------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class Bin:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    fn: str
    arg: "Expr"


Expr = Num | Var | Neg | Bin | Call

VARIABLES = ("x", "r")


def _f_tg(v: float) -> float:
    return math.tan(v)


def _f_ln(v: float) -> float | None:
    return math.log(v) if v > 0.0 else None


def _f_lg(v: float) -> float | None:
    return math.log10(v) if v > 0.0 else None


def _f_sqrt(v: float) -> float | None:
    return math.sqrt(v) if v >= 0.0 else None


def _f_arcsin(v: float) -> float | None:
    return math.asin(v) if -1.0 <= v <= 1.0 else None


def _f_arccos(v: float) -> float | None:
    return math.acos(v) if -1.0 <= v <= 1.0 else None


FUNCTIONS = {
    "sin": math.sin,
    "cos": math.cos,
    "tg": _f_tg,
    "sh": math.sinh,
    "ch": math.cosh,
    "th": math.tanh,
    "ln": _f_ln,
    "lg": _f_lg,
    "exp": math.exp,
    "sqrt": _f_sqrt,
    "mod": abs,
    "arcsin": _f_arcsin,
    "arccos": _f_arccos,
    "arctg": math.atan,
}


# -- parser ---------------------------------------------------------------------
#
# expr   := term (('+'|'-') term)*
# term   := unary (('*'|'/') unary)*
# unary  := '-' unary | power
# power  := atom ('^' unary)?          right-associative; '-' binds looser
# atom   := number | variable | fn '(' expr ')' | '(' expr ')'


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> Token:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression")
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> Token:
        tok = self.peek()
        if tok is None or tok.kind != kind:
            raise ParseError(f"expected {what}" + (f", got {tok.lexeme!r}" if tok else ""))
        return self.next()

    def parse(self) -> Expr:
        if not self.tokens:
            raise ParseError("empty expression")
        node = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok.lexeme!r} at offset {tok.offset}")
        return node

    def expr(self) -> Expr:
        node = self.term()
        while (tok := self.peek()) is not None and tok.kind == OP and tok.lexeme in "+-":
            self.next()
            node = Bin(tok.lexeme, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.unary()
        while (tok := self.peek()) is not None and tok.kind == OP and tok.lexeme in "*/":
            self.next()
            node = Bin(tok.lexeme, node, self.unary())
        return node

    def unary(self) -> Expr:
        tok = self.peek()
        if tok is not None and tok.kind == OP and tok.lexeme == "-":
            self.next()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        node = self.atom()
        tok = self.peek()
        if tok is not None and tok.kind == OP and tok.lexeme == "^":
            self.next()
            return Bin("^", node, self.unary())
        return node

    def atom(self) -> Expr:
        tok = self.next()
        if tok.kind == NUMBER:
            return Num(float(tok.lexeme))
        if tok.kind == LPAREN:
            node = self.expr()
            self.expect(RPAREN, "')'")
            return node
        if tok.kind == IDENT:
            name = tok.lexeme
            nxt = self.peek()
            if nxt is not None and nxt.kind == LPAREN:
                if name not in FUNCTIONS:
                    raise ParseError(f"unknown function {name!r}")
                self.next()
                arg = self.expr()
                self.expect(RPAREN, "')'")
                return Call(name, arg)
            if name in VARIABLES:
                return Var(name)
            if name in FUNCTIONS:
                raise ParseError(f"function {name!r} needs an argument in brackets")
            raise ParseError(f"unknown identifier {name!r}")
        raise ParseError(f"unexpected {tok.lexeme!r} at offset {tok.offset}")


def parse_tokens(tokens: list[Token]) -> Expr:
    ast = _Parser(tokens).parse()
    names = variables(ast)
    if len(names) > 1:
        raise ParseError(f"expression mixes variables {sorted(names)}; use one of x or r")
    return ast


def parse(text: str) -> Expr:
    return parse_tokens(tokenize(text))


def variables(ast: Expr) -> set[str]:
    if isinstance(ast, Var):
        return {ast.name}
    if isinstance(ast, Neg):
        return variables(ast.arg)
    if isinstance(ast, Bin):
        return variables(ast.left) | variables(ast.right)
    if isinstance(ast, Call):
        return variables(ast.arg)
    return set()


# -- evaluation ---------------------------------------------------------------


def _pow(base: float, exponent: float) -> float | None:
    if base == 0.0 and exponent < 0.0:
        return None
    if base < 0.0 and exponent != math.floor(exponent):
        return None
    try:
        return math.pow(base, exponent)
    except (OverflowError, ValueError):
        return None


def evaluate(ast: Expr, value: float) -> float | None:
    """Real value of the expression at the given variable value, or None
    when any step leaves the real domain."""
    if isinstance(ast, Num):
        return ast.value
    if isinstance(ast, Var):
        return value
    if isinstance(ast, Neg):
        v = evaluate(ast.arg, value)
        return None if v is None else -v
    if isinstance(ast, Bin):
        left = evaluate(ast.left, value)
        if left is None:
            return None
        right = evaluate(ast.right, value)
        if right is None:
            return None
        if ast.op == "+":
            result = left + right
        elif ast.op == "-":
            result = left - right
        elif ast.op == "*":
            result = left * right
        elif ast.op == "/":
            if right == 0.0:
                return None
            result = left / right
        else:
            result = _pow(left, right)
        if result is None or not math.isfinite(result):
            return None
        return result
    arg = evaluate(ast.arg, value)
    if arg is None:
        return None
    try:
        result = FUNCTIONS[ast.fn](arg)
    except (OverflowError, ValueError):
        return None
    if result is None or not math.isfinite(result):
        return None
    return result


def to_source(ast: Expr) -> str:
    """Fully parenthesized source text; reparsing yields an equal tree."""
    if isinstance(ast, Num):
        return repr(ast.value)
    if isinstance(ast, Var):
        return ast.name
    if isinstance(ast, Neg):
        return f"(-{to_source(ast.arg)})"
    if isinstance(ast, Bin):
        return f"({to_source(ast.left)}{ast.op}{to_source(ast.right)})"
    return f"{ast.fn}({to_source(ast.arg)})"
