"""Exact arithmetic in the rational function field Q(q) and dense linear algebra over it.

Polynomials in q are stored as tuples of coefficients in ascending degree with no
trailing zeros; coefficients are ``int`` or ``fractions.Fraction``.  A
:class:`RationalQ` keeps a reduced numerator over a monic denominator, so two
equal field elements always have identical representations.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd
from typing import Iterable, Sequence

Poly = tuple


class ZeroDivision(ArithmeticError):
    """Raised when dividing by the zero element of Q(q)."""


# ---------------------------------------------------------------------------
# polynomial helpers over Q

def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _trim(coeffs) -> Poly:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(_clean(c) for c in coeffs[:end])


def _padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pneg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def _psub(a: Poly, b: Poly) -> Poly:
    return _padd(a, _pneg(b))


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    if len(a) == 1:
        c = a[0]
        return tuple(_clean(c * x) for x in b)
    if len(b) == 1:
        c = b[0]
        return tuple(_clean(c * x) for x in a)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _pscale(a: Poly, c) -> Poly:
    if c == 0:
        return ()
    return tuple(_clean(x * c) for x in a)


def _pshift(a: Poly, k: int) -> Poly:
    if k == 0 or not a:
        return a
    if k > 0:
        return (0,) * k + a
    return a[-k:]


def _low(a: Poly) -> int:
    for i, c in enumerate(a):
        if c:
            return i
    raise ValueError("zero polynomial")


def _is_monomial(a: Poly) -> bool:
    return all(c == 0 for c in a[:-1])


def _pdivmod(a: Poly, b: Poly):
    if not b:
        raise ZeroDivision("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    quot = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1 - db, -1, -1):
        c = rem[k + db]
        if c:
            f = Fraction(c, lead) if isinstance(c, int) and isinstance(lead, int) else c / lead
            f = _clean(f)
            quot[k] = f
            for i, y in enumerate(b):
                rem[k + i] -= f * y
    return _trim(quot), _trim(rem)


def _monic(a: Poly) -> Poly:
    lead = a[-1]
    if lead == 1:
        return a
    return tuple(_clean(Fraction(c) / lead) for c in a)


def _pgcd(a: Poly, b: Poly) -> Poly:
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    return _monic(a) if a else ()


def _pexact_int(a: Poly, b: Poly) -> Poly:
    """Exact division of integer polynomials known to divide evenly."""
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    quot = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = rem[k + db]
        if c:
            f, r = divmod(c, lead)
            if r:
                raise ArithmeticError("inexact polynomial division")
            quot[k] = f
            for i, y in enumerate(b):
                rem[k + i] -= f * y
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return _trim(quot)


def _poly_text(a: Poly, var: str = "q", shift: int = 0) -> str:
    parts = []
    for i, c in enumerate(a):
        if not c:
            continue
        e = i + shift
        if e == 0:
            body = str(abs(c))
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += sign + body
    return out


# ---------------------------------------------------------------------------

class RationalQ:
    """An element of Q(q) in lowest terms with a monic denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly = (), den: Poly = (1,), _normalized: bool = False):
        if _normalized:
            self.num, self.den = num, den
        else:
            self.num, self.den = _normalize(_trim(num), _trim(den))
        self._hash = None

    # construction -----------------------------------------------------
    @classmethod
    def coerce(cls, x) -> "RationalQ":
        if isinstance(x, RationalQ):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.constant(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to RationalQ")

    @classmethod
    def constant(cls, c) -> "RationalQ":
        c = _clean(c)
        if c == 0:
            return ZERO
        return cls((c,), (1,), True)

    # predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def is_laurent(self) -> bool:
        return _is_monomial(self.den)

    def laurent_terms(self) -> dict:
        """Exponent -> coefficient map; only valid when ``is_laurent()``."""
        shift = 1 - len(self.den)
        return {i + shift: c for i, c in enumerate(self.num) if c}

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, RationalQ):
            try:
                other = RationalQ.coerce(other)
            except TypeError:
                return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        a, b = self.den, other.den
        if a == b:
            return RationalQ(_padd(self.num, other.num), a)
        if _is_monomial(a) and _is_monomial(b):
            da, db = len(a) - 1, len(b) - 1
            if da < db:
                return RationalQ(_padd(_pshift(self.num, db - da), other.num), b)
            return RationalQ(_padd(self.num, _pshift(other.num, da - db)), a)
        num = _padd(_pmul(self.num, b), _pmul(other.num, a))
        return RationalQ(num, _pmul(a, b))

    __radd__ = __add__

    def __neg__(self):
        return RationalQ(_pneg(self.num), self.den, True)

    def __sub__(self, other):
        if not isinstance(other, RationalQ):
            try:
                other = RationalQ.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return RationalQ.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, RationalQ):
            try:
                other = RationalQ.coerce(other)
            except TypeError:
                return NotImplemented
        if not self.num or not other.num:
            return ZERO
        a, b = self.den, other.den
        if _is_monomial(a) and _is_monomial(b):
            return RationalQ(_pmul(self.num, other.num), (0,) * (len(a) + len(b) - 2) + (1,))
        return RationalQ(_pmul(self.num, other.num), _pmul(a, b))

    __rmul__ = __mul__

    def inverse(self) -> "RationalQ":
        if not self.num:
            raise ZeroDivision("division by zero in Q(q)")
        lead = self.num[-1]
        return RationalQ(_pscale(self.den, Fraction(1) / lead), _pscale(self.num, Fraction(1) / lead))

    def __truediv__(self, other):
        if not isinstance(other, RationalQ):
            try:
                other = RationalQ.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RationalQ.coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, RationalQ):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == RationalQ.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return bool(self.num)

    # evaluation and text ----------------------------------------------
    def evaluate(self, value) -> Fraction:
        """Exact value at a rational point q = value."""
        def ev(p):
            acc = Fraction(0)
            for c in reversed(p):
                acc = acc * value + c
            return acc
        d = ev(self.den)
        if d == 0:
            raise ZeroDivision("denominator vanishes at the evaluation point")
        return ev(self.num) / d

    def to_text(self) -> str:
        if self.den == (1,):
            return _poly_text(self.num)
        if self.is_laurent():
            return _poly_text(self.num, shift=1 - len(self.den))
        return f"({_poly_text(self.num)})/({_poly_text(self.den)})"

    def is_single_term(self) -> bool:
        return self.is_laurent() and sum(1 for c in self.num if c) == 1

    def __repr__(self):
        return f"RationalQ({self.to_text()})"

    __str__ = to_text


def _normalize(num: Poly, den: Poly):
    if not den:
        raise ZeroDivision("zero denominator")
    if not num:
        return (), (1,)
    v = min(_low(num), _low(den))
    if v:
        num, den = num[v:], den[v:]
    if not _is_monomial(den):
        g = _pgcd(num, den)
        if len(g) > 1:
            num, _ = _pdivmod(num, g)
            den, _ = _pdivmod(den, g)
    lead = den[-1]
    if lead != 1:
        inv = Fraction(1) / lead
        num, den = _pscale(num, inv), _pscale(den, inv)
    return num, den


ZERO = RationalQ((), (1,), True)
ONE = RationalQ((1,), (1,), True)
Q = RationalQ((0, 1), (1,), True)


def laurent_monomial(k: int) -> RationalQ:
    """The element q**k for any integer k."""
    if k >= 0:
        return RationalQ((0,) * k + (1,), (1,), True)
    return RationalQ((1,), (0,) * (-k) + (1,), True)


def from_laurent(terms: dict) -> RationalQ:
    """Build an element from a map exponent -> rational coefficient."""
    terms = {e: c for e, c in terms.items() if c}
    if not terms:
        return ZERO
    low = min(terms)
    shift = min(low, 0)
    num = [0] * (max(terms) - shift + 1)
    for e, c in terms.items():
        num[e - shift] = c
    return RationalQ(tuple(num), (0,) * (-shift) + (1,))


def ratq_arith(a: RationalQ, b: RationalQ, op: str) -> RationalQ:
    """Dispatch one of add, sub, mul, div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# dense matrices

class QMatrix:
    """Row-major dense matrix with entries in Q(q)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[RationalQ] | None = None):
        if entries is None:
            entries = [ZERO] * (rows * cols)
        entries = [RationalQ.coerce(e) for e in entries]
        if len(entries) != rows * cols:
            raise ValueError("entries length must equal rows * cols")
        self.rows, self.cols, self.entries = rows, cols, entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "QMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def identity(cls, size: int, scale=ONE) -> "QMatrix":
        m = cls(size, size)
        for i in range(size):
            m.entries[i * size + i] = RationalQ.coerce(scale)
        return m

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch")
        return QMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                acc = ZERO
                for k, a in enumerate(r):
                    if a:
                        b = other.entries[k * other.cols + j]
                        if b:
                            acc = acc + a * b
                out.append(acc)
        return QMatrix(self.rows, other.cols, out)

    def apply(self, vec: Sequence[RationalQ]) -> list:
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.rows):
            acc = ZERO
            for a, v in zip(self.row(i), vec):
                if a and v:
                    acc = acc + a * v
            out.append(acc)
        return out

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def __eq__(self, other):
        return isinstance(other, QMatrix) and (self.rows, self.cols, self.entries) == (
            other.rows, other.cols, other.entries)

    def __repr__(self):
        return f"QMatrix({self.rows}x{self.cols})"


def _integer_rows(m: QMatrix) -> list:
    """Scale every row to integer polynomials in q (same row space)."""
    out = []
    for i in range(m.rows):
        row = m.row(i)
        den: Poly = (1,)
        for e in row:
            if e.num and e.den != den:
                g = _pgcd(den, e.den)
                den, _ = _pdivmod(_pmul(den, e.den), g)
        polys = []
        for e in row:
            if not e.num:
                polys.append(())
                continue
            cof, _ = _pdivmod(den, e.den)
            polys.append(_pmul(e.num, cof))
        scale = 1
        for p in polys:
            for c in p:
                if isinstance(c, Fraction):
                    scale = scale * c.denominator // _igcd(scale, c.denominator)
        if scale != 1:
            polys = [_pscale(p, scale) for p in polys]
        out.append([tuple(int(c) for c in p) for p in polys])
    return out


def _echelon(m: QMatrix):
    """Fraction-free row echelon form; returns (rows, pivot columns)."""
    a = _integer_rows(m)
    nrows, ncols = m.rows, m.cols
    pivots = []
    prev: Poly = (1,)
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        piv = None
        best = None
        for i in range(r, nrows):
            p = a[i][c]
            if p and (best is None or len(p) < best):
                piv, best = i, len(p)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        pc = pr[c]
        for i in range(r + 1, nrows):
            row = a[i]
            lead = row[c]
            if not lead:
                if prev != (1,):
                    for j in range(c + 1, ncols):
                        if row[j]:
                            row[j] = _pexact_int(_pmul(pc, row[j]), prev)
                else:
                    for j in range(c + 1, ncols):
                        if row[j]:
                            row[j] = _pmul(pc, row[j])
                continue
            for j in range(c + 1, ncols):
                v = _psub(_pmul(pc, row[j]), _pmul(lead, pr[j]))
                if v and prev != (1,):
                    v = _pexact_int(v, prev)
                row[j] = v
            row[c] = ()
        pivots.append(c)
        prev = pc
        r += 1
    return a[:r], pivots


def rank(m: QMatrix) -> int:
    return len(_echelon(m)[1])


def kernel(m: QMatrix) -> list:
    """Basis of the right null space; each vector has a 1 in its free column."""
    rows, pivots = _echelon(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [ZERO] * m.cols
        x[f] = ONE
        for i in range(len(pivots) - 1, -1, -1):
            pc = pivots[i]
            row = rows[i]
            acc = ZERO
            for j in range(pc + 1, m.cols):
                if row[j] and x[j]:
                    acc = acc + RationalQ(row[j]) * x[j]
            if acc:
                x[pc] = -acc / RationalQ(row[pc])
        basis.append(x)
    return basis


def eval_matrix_poly(m: QMatrix, roots: Iterable[RationalQ]) -> QMatrix:
    """The product of (M - root*I) over the roots, multiplied left to right."""
    if m.rows != m.cols:
        raise ValueError("dimension mismatch: matrix must be square")
    out = None
    for root in roots:
        factor = m - QMatrix.identity(m.rows, root)
        out = factor if out is None else out @ factor
    return out if out is not None else QMatrix.identity(m.rows)


def det(m: QMatrix) -> RationalQ:
    """Determinant by Gaussian elimination over Q(q)."""
    if m.rows != m.cols:
        raise ValueError("dimension mismatch: matrix must be square")
    n = m.rows
    a = [m.row(i) for i in range(n)]
    sign = ONE
    result = ONE
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return ZERO
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        pv = a[c][c]
        result = result * pv
        inv = pv.inverse()
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return sign * result
