"""Text expressions over t[i,j], d[i,j], q and rational literals.

Grammar (whitespace ignored)::

    expr     := term {("+" | "-") term}
    term     := factor {("*" | "/") factor}
    factor   := ["-"] atom ["^" ["-"] uint]
    atom     := "t[" uint "," uint "]" | "d[" uint "," uint "]" | "q"
              | rational | "(" expr ")"
    rational := ["-"] uint ["/" uint]

Juxtaposition is not multiplication.  Division, negative exponents and a
leading minus on a non-numeric factor exist so that every printed normal form
parses back; division and negative powers require a nonzero scalar operand,
which is checked when the expression is evaluated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .qfield import ONE, Q, RationalQ
from .weyl import AlgebraSpec, WeylElement


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.message = message
        self.offset = offset


class EvalError(ValueError):
    pass


@dataclass(frozen=True)
class Gen:
    kind: str  # "t" or "d"
    row: int
    col: int


@dataclass(frozen=True)
class QSym:
    pass


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Div:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


class _Parser:
    def __init__(self, src: str):
        self.data = src.encode("utf-8")
        self.pos = 0

    def error(self, msg, at=None):
        raise ParseError(msg, self.pos if at is None else at)

    def skip(self):
        while self.pos < len(self.data) and self.data[self.pos] in b" \t\r\n":
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return chr(self.data[self.pos]) if self.pos < len(self.data) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def uint(self) -> tuple:
        self.skip()
        start = self.pos
        while self.pos < len(self.data) and chr(self.data[self.pos]).isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an unsigned integer")
        return int(self.data[start:self.pos]), start

    def parse(self):
        node = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return node

    def expr(self):
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.pos += 1
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self):
        node = self.factor()
        while self.peek() in ("*", "/"):
            op = self.peek()
            self.pos += 1
            rhs = self.factor()
            node = Mul(node, rhs) if op == "*" else Div(node, rhs)
        return node

    def factor(self):
        if self.peek() == "-":
            save = self.pos
            self.pos += 1
            if not self.peek().isdigit():
                return Neg(self.factor())
            self.pos = save
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            sign = 1
            if self.peek() == "-":
                self.pos += 1
                sign = -1
            value, _ = self.uint()
            return Pow(base, sign * value)
        return base

    def atom(self):
        ch = self.peek()
        if ch in ("t", "d"):
            self.pos += 1
            self.expect("[")
            row, at_row = self.uint()
            self.expect(",")
            col, at_col = self.uint()
            self.expect("]")
            for value, at in ((row, at_row), (col, at_col)):
                if value < 1:
                    self.error("index must be ≥ 1", at)
            return Gen(ch, row, col)
        if ch == "q":
            self.pos += 1
            return QSym()
        if ch == "(":
            self.pos += 1
            node = self.expr()
            self.expect(")")
            return node
        if ch == "-" or ch.isdigit():
            sign = 1
            if ch == "-":
                self.pos += 1
                sign = -1
            num, _ = self.uint()
            den = 1
            # a slash directly after an integer belongs to the literal
            if self.peek() == "/" and self._digit_after_slash():
                self.pos += 1
                den, at = self.uint()
                if den == 0:
                    self.error("zero denominator", at)
            return Num(Fraction(sign * num, den))
        if not ch:
            self.error("unexpected end of input")
        self.error(f"unexpected {ch!r}")

    def _digit_after_slash(self) -> bool:
        p = self.pos + 1
        while p < len(self.data) and self.data[p] in b" \t\r\n":
            p += 1
        return p < len(self.data) and chr(self.data[p]).isdigit()


def parse(src: str):
    """Parse text into an expression tree; raises ParseError with a byte offset."""
    return _Parser(src).parse()


def to_source(node) -> str:
    """Fully parenthesized text that parses back to an equivalent tree."""
    if isinstance(node, Gen):
        return f"{node.kind}[{node.row},{node.col}]"
    if isinstance(node, QSym):
        return "q"
    if isinstance(node, Num):
        v = node.value
        text = str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        return f"({text})" if v < 0 else text
    if isinstance(node, Neg):
        return f"(-{to_source(node.arg)})"
    if isinstance(node, Pow):
        return f"({to_source(node.base)})^{node.exp}"
    ops = {Add: "+", Sub: "-", Mul: "*", Div: "/"}
    return f"({to_source(node.left)}{ops[type(node)]}{to_source(node.right)})"


def index_bounds(node) -> tuple:
    """Largest row and column index appearing in the expression."""
    if isinstance(node, Gen):
        return node.row, node.col
    if isinstance(node, (Neg,)):
        return index_bounds(node.arg)
    if isinstance(node, Pow):
        return index_bounds(node.base)
    if isinstance(node, (Add, Sub, Mul, Div)):
        a, b = index_bounds(node.left), index_bounds(node.right)
        return max(a[0], b[0]), max(a[1], b[1])
    return 0, 0


def _scalar_of(x: WeylElement) -> RationalQ | None:
    zero = (0,) * x.spec.size
    if any(m != (zero, zero) for m in x.terms):
        return None
    return x.terms.get((zero, zero), RationalQ.constant(0))


def evaluate(node, spec: AlgebraSpec) -> WeylElement:
    spec = AlgebraSpec(*spec)
    if isinstance(node, Gen):
        if node.row > spec.m or node.col > spec.n:
            raise EvalError(f"{to_source(node)} is outside the {spec.m}x{spec.n} algebra")
        make = WeylElement.t if node.kind == "t" else WeylElement.d
        return make(node.row, node.col, spec)
    if isinstance(node, QSym):
        return WeylElement.scalar(Q, spec)
    if isinstance(node, Num):
        return WeylElement.scalar(RationalQ.coerce(node.value), spec)
    if isinstance(node, Neg):
        return -evaluate(node.arg, spec)
    if isinstance(node, Pow):
        base = evaluate(node.base, spec)
        if node.exp >= 0:
            return base ** node.exp
        c = _scalar_of(base)
        if c is None or c.is_zero():
            raise EvalError("negative powers need a nonzero scalar base")
        return WeylElement.scalar(c.inverse() ** (-node.exp), spec)
    left = evaluate(node.left, spec)
    right = evaluate(node.right, spec)
    if isinstance(node, Add):
        return left + right
    if isinstance(node, Sub):
        return left - right
    if isinstance(node, Mul):
        return left * right
    c = _scalar_of(right)
    if c is None or c.is_zero():
        raise EvalError("division needs a nonzero scalar divisor")
    return left.scale(ONE / c)
