"""Boolean rule expressions.

Grammar (lowest precedence first, all binary operators left-associative)::

    or   := xor ('|' xor)*
    xor  := and ('^' and)*
    and  := not ('&' not)*
    not  := '!' not | atom
    atom := VAR | '0' | '1' | '(' or ')'
    VAR  := 'x' DIGITS          (x1 .. xn)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from ..core import Network, NetworkError, digit_matrix


class RuleSyntaxError(NetworkError):
    def __init__(self, message: str, offset: int, text: str = ""):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.text = text


@dataclass(frozen=True)
class Var:
    index: int

    def __str__(self):
        return f"x{self.index}"


@dataclass(frozen=True)
class Const:
    value: int

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class Not:
    operand: "Expr"

    def __str__(self):
        return f"!{self.operand}"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"

    def __str__(self):
        return f"({self.left} {self.op} {self.right})"


Expr = Union[Var, Const, Not, BinOp]

_TOKEN = re.compile(r"\s*(?:(x\d+)|([01])|([!&^|()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].isspace():
            break
        m = _TOKEN.match(text, pos)
        if not m:
            off = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise RuleSyntaxError(f"unexpected character {text[off]!r}", off, text)
        kind = "var" if m.group(1) else "const" if m.group(2) else m.group(3)
        out.append((kind, m.group(m.lastindex), m.start(m.lastindex)))
        pos = m.end()
    out.append(("eof", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, what: str):
        kind, val, off = self.peek()
        found = "end of input" if kind == "eof" else repr(val)
        raise RuleSyntaxError(f"expected {what}, found {found}", off, self.text)

    def binary(self, op: str, sub):
        left = sub()
        while self.peek()[0] == op:
            self.take()
            left = BinOp(op, left, sub())
        return left

    def or_(self):
        return self.binary("|", self.xor)

    def xor(self):
        return self.binary("^", self.and_)

    def and_(self):
        return self.binary("&", self.not_)

    def not_(self):
        if self.peek()[0] == "!":
            self.take()
            return Not(self.not_())
        return self.atom()

    def atom(self):
        kind, val, off = self.peek()
        if kind == "var":
            self.take()
            idx = int(val[1:])
            if idx < 1:
                raise RuleSyntaxError(f"variable {val} must be x1 or above", off, self.text)
            return Var(idx)
        if kind == "const":
            self.take()
            return Const(int(val))
        if kind == "(":
            self.take()
            inner = self.or_()
            if self.peek()[0] != ")":
                self.fail("')'")
            self.take()
            return inner
        self.fail("a variable, constant or '('")


def parse_rule(text: str) -> Expr:
    p = _Parser(text)
    expr = p.or_()
    if p.peek()[0] != "eof":
        p.fail("an operator or end of input")
    return expr


def variables(expr: Expr) -> set[int]:
    if isinstance(expr, Var):
        return {expr.index}
    if isinstance(expr, Const):
        return set()
    if isinstance(expr, Not):
        return variables(expr.operand)
    return variables(expr.left) | variables(expr.right)


def evaluate(expr: Expr, x):
    """Evaluate on one configuration, or column-wise on an array of them.

    ``x`` is indexed by ``index - 1``; numpy digit matrices are accepted
    with configurations along axis 0.
    """
    if isinstance(expr, Var):
        return x[..., expr.index - 1] if isinstance(x, np.ndarray) else x[expr.index - 1]
    if isinstance(expr, Const):
        return expr.value
    if isinstance(expr, Not):
        return 1 - evaluate(expr.operand, x)
    a, b = evaluate(expr.left, x), evaluate(expr.right, x)
    if expr.op == "&":
        return a & b
    if expr.op == "^":
        return a ^ b
    return a | b


def network_from_rules(rules: Sequence[str], n: int | None = None) -> Network:
    """Boolean network whose ``i``-th local function is ``rules[i - 1]``."""
    if n is None:
        n = len(rules)
    if len(rules) != n:
        raise NetworkError(f"expected {n} rules, got {len(rules)}")
    exprs = [parse_rule(r) for r in rules]
    for k, e in enumerate(exprs):
        bad = sorted(v for v in variables(e) if v > n)
        if bad:
            raise NetworkError(f"rule {k + 1} references x{bad[0]} but n = {n}")
    d = digit_matrix(2, n)
    cols = [np.broadcast_to(np.asarray(evaluate(e, d)), (1 << n,)) for e in exprs]
    return Network.from_digits(2, n, np.stack(cols, axis=1))
