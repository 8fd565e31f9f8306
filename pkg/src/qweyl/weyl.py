"""Quantized Weyl algebras on m x n matrices of generators t[i,j] and d[i,j].

Elements are expanded in the PBW basis: t-factors in ascending lexicographic
(row, col) order followed by d-factors in descending order.  Two independent
routes compute products:

* :func:`normal_form` rewrites adjacent out-of-order pairs of a word, one pair
  at a time, until no rule applies (the reference route).
* :func:`multiply` uses a memoized structural engine that moves single
  generators through already-normal monomials.

The filtered algebra keeps the constant term of the rule for ``d[c,d]*t[c,d]``;
the graded variant drops it.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import combinations_with_replacement
from typing import Iterable, NamedTuple, Sequence

from .qfield import ONE, ZERO, Q, RationalQ, laurent_monomial

QINV = laurent_monomial(-1)
QDIFF = Q - QINV

FILTERED = "filtered"
GRADED = "graded"


class AlgebraSpec(NamedTuple):
    m: int
    n: int
    variant: str = FILTERED

    @property
    def graded(self) -> bool:
        return self.variant == GRADED

    @property
    def size(self) -> int:
        return self.m * self.n

    def flat(self, i: int, j: int) -> int:
        return (i - 1) * self.n + (j - 1)

    def coords(self, p: int) -> tuple:
        return p // self.n + 1, p % self.n + 1

    def check(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("m and n must be at least 1")
        if self.variant not in (FILTERED, GRADED):
            raise ValueError(f"unknown variant {self.variant!r}")
        return self

    def with_variant(self, variant: str) -> "AlgebraSpec":
        return AlgebraSpec(self.m, self.n, variant)


class GenRef(NamedTuple):
    kind: str  # "T" or "D"
    row: int
    col: int

    def __str__(self):
        return f"{'t' if self.kind == 'T' else 'd'}[{self.row},{self.col}]"


def T(i: int, j: int) -> GenRef:
    return GenRef("T", i, j)


def D(i: int, j: int) -> GenRef:
    return GenRef("D", i, j)


class SpecMismatch(ValueError):
    pass


# ---------------------------------------------------------------------------
# pair rules on (kind, row, col) generators

def _tt_rule(a, b, ascending=True):
    """Rewrite t_a t_b if out of order; return list of (coef, word) or None."""
    if a == b or (ascending and a < b) or (not ascending and a > b):
        return None
    (i1, j1), (i2, j2) = a, b
    if ascending:
        # a > b lexicographically
        if i1 == i2:
            return [(QINV, (b, a))]
        if j1 == j2:
            return [(QINV, (b, a))]
        if j1 < j2:  # a=(k,j), b=(i,l), i<k, j<l
            return [(ONE, (b, a))]
        # a=(k,l), b=(i,j)
        return [(ONE, (b, a)), (-QDIFF, ((i2, j1), (i1, j2)))]
    # descending order wanted, a < b
    if i1 == i2 or j1 == j2:
        return [(Q, (b, a))]
    if j1 > j2:  # a=(i,l), b=(k,j)
        return [(ONE, (b, a))]
    # a=(i,j), b=(k,l)
    return [(ONE, (b, a)), (QDIFF, ((i1, j2), (i2, j1)))]


def _dd_rule(a, b, descending=True):
    """Rewrite d_a d_b if out of order; return list of (coef, word) or None."""
    if a == b or (descending and a > b) or (not descending and a < b):
        return None
    (i1, j1), (i2, j2) = a, b
    if descending:
        # a < b
        if i1 == i2 or j1 == j2:
            return [(QINV, (b, a))]
        if j1 > j2:  # a=(i,l), b=(k,j)
            return [(ONE, (b, a))]
        # a=(i,j), b=(k,l)
        return [(ONE, (b, a)), (-QDIFF, ((i2, j1), (i1, j2)))]
    # ascending order wanted, a > b
    if i1 == i2 or j1 == j2:
        return [(Q, (b, a))]
    if j1 < j2:  # a=(k,j), b=(i,l)
        return [(ONE, (b, a))]
    # a=(k,l), b=(i,j)
    return [(ONE, (b, a)), (QDIFF, ((i1, j2), (i2, j1)))]


def _dt_rule(x, y, m, n, graded):
    """d_x t_y as a list of (coef, t index or None, d index or None)."""
    (c, b), (d, a) = x, y
    if c != d and b != a:
        return [(ONE, y, x)]
    if c == d and b != a:
        out = [(Q, (c, a), (c, b))]
        out += [(QDIFF, (cc, a), (cc, b)) for cc in range(c + 1, m + 1)]
        return out
    if c != d and b == a:
        out = [(Q, (d, a), (c, a))]
        out += [(QDIFF, (d, aa), (c, aa)) for aa in range(a + 1, n + 1)]
        return out
    out = [] if graded else [(ONE, None, None)]
    for cc in range(c, m + 1):
        for aa in range(a, n + 1):
            e = (cc == c) + (aa == a)
            out.append((laurent_monomial(e) * QDIFF ** (2 - e), (cc, aa), (cc, aa)))
    return out


# ---------------------------------------------------------------------------
# reference route: adjacent-pair rewriting of words

def _pair_rewrite(g1, g2, spec, orientation):
    k1, k2 = g1[0], g2[0]
    p1, p2 = (g1[1], g1[2]), (g2[1], g2[2])
    first = orientation == "I"
    if k1 == "T" and k2 == "T":
        res = _tt_rule(p1, p2, ascending=first)
        return None if res is None else [(c, tuple(GenRef("T", *p) for p in w)) for c, w in res]
    if k1 == "D" and k2 == "D":
        res = _dd_rule(p1, p2, descending=first)
        return None if res is None else [(c, tuple(GenRef("D", *p) for p in w)) for c, w in res]
    if k1 == "T":
        return None
    out = []
    for c, tp, dp in _dt_rule(p1, p2, spec.m, spec.n, spec.graded):
        out.append((c, () if tp is None else (GenRef("T", *tp), GenRef("D", *dp))))
    return out


def rewrite_word(word: Sequence[GenRef], spec: AlgebraSpec, strategy: str = "leftmost",
                 orientation: str = "I") -> dict:
    """Rewrite a word to normal words; returns {normal word: coefficient}.

    ``orientation`` "I" targets the ascending-t / descending-d basis, "II" the
    descending-t / ascending-d basis.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    pending = {tuple(GenRef(*g) for g in word): ONE}
    done: dict = defaultdict(lambda: ZERO)
    while pending:
        w, c = pending.popitem()
        if not c:
            continue
        positions = range(len(w) - 1) if strategy == "leftmost" else range(len(w) - 2, -1, -1)
        for pos in positions:
            res = _pair_rewrite(w[pos], w[pos + 1], spec, orientation)
            if res is not None:
                for coef, repl in res:
                    nw = w[:pos] + repl + w[pos + 2:]
                    pending[nw] = pending.get(nw, ZERO) + c * coef
                break
        else:
            done[w] = done[w] + c
    return {w: c for w, c in done.items() if c}


def _word_to_monomial(word, spec):
    te = [0] * spec.size
    de = [0] * spec.size
    for g in word:
        (te if g.kind == "T" else de)[spec.flat(g.row, g.col)] += 1
    return tuple(te), tuple(de)


def _check_word(word, spec):
    for g in word:
        if g.kind not in ("T", "D") or not (1 <= g.row <= spec.m and 1 <= g.col <= spec.n):
            raise ValueError(f"generator {g} out of range for {spec.m}x{spec.n}")


def normal_form(word: Sequence[GenRef], spec: AlgebraSpec, strategy: str = "leftmost") -> "WeylElement":
    """PBW expansion of a word of generators by pairwise rewriting."""
    spec = AlgebraSpec(*spec).check()
    word = [GenRef(*g) for g in word]
    _check_word(word, spec)
    terms: dict = defaultdict(lambda: ZERO)
    for w, c in rewrite_word(word, spec, strategy).items():
        mono = _word_to_monomial(w, spec)
        terms[mono] = terms[mono] + c
    return WeylElement(spec, terms)


# ---------------------------------------------------------------------------
# structural engine

def _acc(target: dict, key, c):
    v = target.get(key)
    target[key] = c if v is None else v + c


class _Engine:
    """Memoized products of PBW monomials for one algebra."""

    def __init__(self, spec: AlgebraSpec):
        self.spec = spec
        self.N = spec.size
        self.zero = (0,) * self.N
        self.unit = [tuple(1 if k == p else 0 for k in range(self.N)) for p in range(self.N)]
        co = spec.coords
        self._tt = {}
        self._dd = {}
        self._dt = {}
        for a in range(self.N):
            for b in range(self.N):
                r = _tt_rule(co(a), co(b))
                if r is not None:
                    self._tt[a, b] = [(c, spec.flat(*w[0]), spec.flat(*w[1])) for c, w in r]
                r = _dd_rule(co(a), co(b))
                if r is not None:
                    self._dd[a, b] = [(c, spec.flat(*w[0]), spec.flat(*w[1])) for c, w in r]
                self._dt[a, b] = [
                    (c, None if tp is None else spec.flat(*tp), None if dp is None else spec.flat(*dp))
                    for c, tp, dp in _dt_rule(co(a), co(b), spec.m, spec.n, spec.graded)
                ]
        self._tmul = {}
        self._dmul = {}
        self._mixed = {}
        self._tprod = {}
        self._dprod = {}
        self._mono = {}
        self._const = {}

    def _bump(self, a, p, k=1):
        lst = list(a)
        lst[p] += k
        return tuple(lst)

    # t-monomial times generator on the right
    def t_mul_gen(self, a, x):
        key = (a, x)
        hit = self._tmul.get(key)
        if hit is not None:
            return hit
        y = max((p for p in range(self.N) if a[p]), default=-1)
        if y <= x:
            res = {self._bump(a, x): ONE}
        else:
            rest = self._bump(a, y, -1)
            res = {}
            for c, u, v in self._tt[y, x]:
                for m1, c1 in self.t_mul_gen(rest, u).items():
                    for m2, c2 in self.t_mul_gen(m1, v).items():
                        _acc(res, m2, c * c1 * c2)
            res = {k: v for k, v in res.items() if v}
        self._tmul[key] = res
        return res

    # generator times d-monomial on the left
    def d_mul_gen(self, x, b):
        key = (x, b)
        hit = self._dmul.get(key)
        if hit is not None:
            return hit
        y = max((p for p in range(self.N) if b[p]), default=-1)
        if x >= y:
            res = {self._bump(b, x): ONE}
        else:
            rest = self._bump(b, y, -1)
            res = {}
            for c, u, v in self._dd[x, y]:
                for m1, c1 in self.d_mul_gen(v, rest).items():
                    for m2, c2 in self.d_mul_gen(u, m1).items():
                        _acc(res, m2, c * c1 * c2)
            res = {k: v for k, v in res.items() if v}
        self._dmul[key] = res
        return res

    def t_prod(self, a, b):
        if not any(b):
            return {a: ONE}
        if not any(a):
            return {b: ONE}
        key = (a, b)
        hit = self._tprod.get(key)
        if hit is not None:
            return hit
        cur = {a: ONE}
        for p in range(self.N):
            for _ in range(b[p]):
                nxt = {}
                for mono, c in cur.items():
                    for m2, c2 in self.t_mul_gen(mono, p).items():
                        _acc(nxt, m2, c * c2)
                cur = {k: v for k, v in nxt.items() if v}
        self._tprod[key] = cur
        return cur

    def d_prod(self, a, b):
        if not any(a):
            return {b: ONE}
        if not any(b):
            return {a: ONE}
        key = (a, b)
        hit = self._dprod.get(key)
        if hit is not None:
            return hit
        cur = {b: ONE}
        for p in range(self.N):  # rightmost factors of a have the smallest index
            for _ in range(a[p]):
                nxt = {}
                for mono, c in cur.items():
                    for m2, c2 in self.d_mul_gen(p, mono).items():
                        _acc(nxt, m2, c * c2)
                cur = {k: v for k, v in nxt.items() if v}
        self._dprod[key] = cur
        return cur

    # d_x times a t-monomial: {(t-monomial, d index or -1): coef}
    def mixed(self, x, a):
        key = (x, a)
        hit = self._mixed.get(key)
        if hit is not None:
            return hit
        y = next((p for p in range(self.N) if a[p]), None)
        if y is None:
            res = {(a, x): ONE}
        else:
            rest = self._bump(a, y, -1)
            res = {}
            for c, z, w in self._dt[x, y]:
                if w is None:
                    _acc(res, (rest, -1), c)
                    continue
                for (tm, w2), c2 in self.mixed(w, rest).items():
                    for tm2, c3 in self.t_prod(self.unit[z], tm).items():
                        _acc(res, (tm2, w2), c * c2 * c3)
            res = {k: v for k, v in res.items() if v}
        self._mixed[key] = res
        return res

    def d_times_t(self, da, tb):
        """d-monomial times t-monomial as {(t, d): coef}."""
        cur = {(tb, self.zero): ONE}
        for p in range(self.N):
            for _ in range(da[p]):
                nxt = {}
                for (tm, dm), c in cur.items():
                    for (tm2, w), c2 in self.mixed(p, tm).items():
                        if w < 0:
                            _acc(nxt, (tm2, dm), c * c2)
                        else:
                            for dm2, c3 in self.d_mul_gen(w, dm).items():
                                _acc(nxt, (tm2, dm2), c * c2 * c3)
                cur = {k: v for k, v in nxt.items() if v}
        return cur

    def mono_mul(self, ma, mb):
        ta, da = ma
        tb, db = mb
        if not any(da):
            return {(t, db): c for t, c in self.t_prod(ta, tb).items()}
        if not any(tb):
            return {(ta, d): c for d, c in self.d_prod(da, db).items()}
        key = (ma, mb)
        hit = self._mono.get(key)
        if hit is not None:
            return hit
        res = {}
        for (tm, dm), c in self.d_times_t(da, tb).items():
            tp = self.t_prod(ta, tm)
            dp = self.d_prod(dm, db)
            for t2, c2 in tp.items():
                for d2, c3 in dp.items():
                    _acc(res, (t2, d2), c * c2 * c3)
        res = {k: v for k, v in res.items() if v}
        self._mono[key] = res
        return res

    # d_x applied to a t-monomial modulo the left ideal of the d's
    def act_gen(self, x, a):
        key = (x, a)
        hit = self._const.get(key)
        if hit is not None:
            return hit
        y = next((p for p in range(self.N) if a[p]), None)
        res = {}
        if y is not None:
            rest = self._bump(a, y, -1)
            for c, z, w in self._dt[x, y]:
                if w is None:
                    _acc(res, rest, c)
                    continue
                for tm, c2 in self.act_gen(w, rest).items():
                    for tm2, c3 in self.t_prod(self.unit[z], tm).items():
                        _acc(res, tm2, c * c2 * c3)
            res = {k: v for k, v in res.items() if v}
        self._const[key] = res
        return res


_ENGINES: dict = {}


def engine(spec: AlgebraSpec) -> _Engine:
    spec = AlgebraSpec(*spec)
    eng = _ENGINES.get(spec)
    if eng is None:
        eng = _ENGINES.setdefault(spec, _Engine(spec.check()))
    return eng


# ---------------------------------------------------------------------------

class WeylElement:
    """A finite linear combination of PBW monomials with Q(q) coefficients."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: AlgebraSpec, terms: dict | None = None):
        self.spec = AlgebraSpec(*spec)
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    # constructors -----------------------------------------------------
    @classmethod
    def scalar(cls, c, spec: AlgebraSpec) -> "WeylElement":
        spec = AlgebraSpec(*spec)
        z = (0,) * spec.size
        return cls(spec, {(z, z): RationalQ.coerce(c)})

    @classmethod
    def one(cls, spec) -> "WeylElement":
        return cls.scalar(ONE, spec)

    @classmethod
    def zero(cls, spec) -> "WeylElement":
        return cls(spec, {})

    @classmethod
    def gen(cls, g: GenRef, spec: AlgebraSpec) -> "WeylElement":
        spec = AlgebraSpec(*spec)
        g = GenRef(*g)
        _check_word([g], spec)
        return cls(spec, {_word_to_monomial([g], spec): ONE})

    @classmethod
    def t(cls, i, j, spec):
        return cls.gen(T(i, j), spec)

    @classmethod
    def d(cls, i, j, spec):
        return cls.gen(D(i, j), spec)

    @classmethod
    def from_word(cls, word: Iterable[GenRef], spec: AlgebraSpec) -> "WeylElement":
        out = cls.one(spec)
        for g in word:
            out = out * cls.gen(g, spec)
        return out

    # arithmetic -------------------------------------------------------
    def _same(self, other):
        if self.spec != other.spec:
            raise SpecMismatch(f"spec mismatch: {self.spec} vs {other.spec}")

    def _lift(self, other):
        if isinstance(other, WeylElement):
            self._same(other)
            return other
        return WeylElement.scalar(RationalQ.coerce(other), self.spec)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            _acc(out, k, v)
        return WeylElement(self.spec, out)

    __radd__ = __add__

    def __neg__(self):
        return WeylElement(self.spec, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c) -> "WeylElement":
        c = RationalQ.coerce(c)
        if not c:
            return WeylElement(self.spec)
        return WeylElement(self.spec, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, WeylElement):
            return self.scale(other)
        return multiply(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        out = WeylElement.one(self.spec)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, WeylElement):
            return self.spec == other.spec and self.terms == other.terms
        if isinstance(other, (int, RationalQ)):
            return self == WeylElement.scalar(other, self.spec)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono) -> RationalQ:
        return self.terms.get(mono, ZERO)

    def is_polynomial(self) -> bool:
        return all(not any(d) for _, d in self.terms)

    def is_differential(self) -> bool:
        return all(not any(t) for t, _ in self.terms)

    def to_text(self) -> str:
        return format_element(self)

    def __repr__(self):
        return f"WeylElement({self.spec.m}x{self.spec.n},{self.spec.variant}: {self.to_text()})"


def multiply(a: WeylElement, b: WeylElement) -> WeylElement:
    """Product in the PBW basis through the structural engine."""
    if a.spec != b.spec:
        raise SpecMismatch(f"spec mismatch: {a.spec} vs {b.spec}")
    eng = engine(a.spec)
    out: dict = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            c = ca * cb
            for m, cm in eng.mono_mul(ma, mb).items():
                _acc(out, m, c * cm)
    return WeylElement(a.spec, out)


# ---------------------------------------------------------------------------
# words, text, monomial enumeration

def monomial_word(mono, spec: AlgebraSpec, orientation: str = "I") -> list:
    """Generator word of a basis monomial in the chosen reading order."""
    te, de = mono
    ts = [p for p in range(spec.size) for _ in range(te[p])]
    ds = [p for p in range(spec.size) for _ in range(de[p])]
    if orientation == "I":
        ds.reverse()
    else:
        ts.reverse()
    return [T(*spec.coords(p)) for p in ts] + [D(*spec.coords(p)) for p in ds]


def _mono_text(mono, spec) -> str:
    te, de = mono
    parts = []
    for p in range(spec.size):
        if te[p]:
            i, j = spec.coords(p)
            parts.append(f"t[{i},{j}]" + (f"^{te[p]}" if te[p] > 1 else ""))
    for p in range(spec.size - 1, -1, -1):
        if de[p]:
            i, j = spec.coords(p)
            parts.append(f"d[{i},{j}]" + (f"^{de[p]}" if de[p] > 1 else ""))
    return "*".join(parts)


def monomial_sort_key(mono):
    te, de = mono
    return (sum(te) + sum(de), tuple(-e for e in te), tuple(-e for e in de))


def format_element(x: WeylElement) -> str:
    """Canonical text: terms sorted by monomial, coefficients reduced in Q(q)."""
    if not x.terms:
        return "0"
    pieces = []
    for mono in sorted(x.terms, key=monomial_sort_key):
        c = x.terms[mono]
        body = _mono_text(mono, x.spec)
        ctext = c.to_text()
        if not body:
            piece = ctext
        elif c == ONE:
            piece = body
        elif c == -ONE:
            piece = "-" + body
        elif c.is_single_term() or (c.den == (1,) and len(c.num) == 1):
            piece = f"{ctext}*{body}"
        else:
            piece = f"({ctext})*{body}"
        pieces.append(piece)
    out = pieces[0]
    for p in pieces[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def t_monomials(spec: AlgebraSpec, degree: int, rows: Iterable[int] | None = None) -> list:
    """t-only monomials of a total degree, sorted lexicographically by exponent table."""
    spec = AlgebraSpec(*spec)
    allowed = [p for p in range(spec.size) if rows is None or spec.coords(p)[0] in set(rows)]
    z = (0,) * spec.size
    out = []
    for combo in combinations_with_replacement(allowed, degree):
        e = [0] * spec.size
        for p in combo:
            e[p] += 1
        out.append((tuple(e), z))
    return sorted(out)


def d_monomials(spec: AlgebraSpec, degree: int, rows: Iterable[int] | None = None) -> list:
    return sorted((d, t) for t, d in t_monomials(spec, degree, rows))


def basis_count(spec: AlgebraSpec, degree: int) -> int:
    return len(t_monomials(spec, degree))


# ---------------------------------------------------------------------------
# structural maps

def embed(x: WeylElement, target: AlgebraSpec) -> WeylElement:
    """Bottom-right corner embedding of an a x b algebra into an m x n one."""
    target = AlgebraSpec(*target)
    src = x.spec
    if src.m > target.m or src.n > target.n:
        raise ValueError(f"cannot embed {src.m}x{src.n} into {target.m}x{target.n}")
    if src.variant != target.variant:
        raise SpecMismatch("embedding requires matching variants")
    dm, dn = target.m - src.m, target.n - src.n
    remap = [target.flat(i + dm, j + dn) for i, j in map(src.coords, range(src.size))]

    def move(e):
        out = [0] * target.size
        for p, k in enumerate(e):
            if k:
                out[remap[p]] = k
        return tuple(out)

    return WeylElement(target, {(move(t), move(d)): c for (t, d), c in x.terms.items()})


def restrict(x: WeylElement, source: AlgebraSpec) -> WeylElement:
    """Inverse of :func:`embed` on its image; raises if x leaves the corner."""
    source = AlgebraSpec(*source)
    amb = x.spec
    dm, dn = amb.m - source.m, amb.n - source.n
    out = {}
    for (t, d), c in x.terms.items():
        nt, nd = [0] * source.size, [0] * source.size
        for e, ne in ((t, nt), (d, nd)):
            for p, k in enumerate(e):
                if k:
                    i, j = amb.coords(p)
                    if i <= dm or j <= dn:
                        raise ValueError("element is not supported in the corner subalgebra")
                    ne[source.flat(i - dm, j - dn)] = k
        out[(tuple(nt), tuple(nd))] = c
    return WeylElement(source, out)


def transpose(x: WeylElement) -> WeylElement:
    """Swap row and column roles: t[i,j] -> t[j,i], d[i,j] -> d[j,i]."""
    src = x.spec
    tgt = AlgebraSpec(src.n, src.m, src.variant)
    eng = engine(tgt)
    out: dict = {}
    for mono, c in x.terms.items():
        word = monomial_word(mono, src)
        tcur = {(0,) * tgt.size: ONE}
        dcur = {(0,) * tgt.size: ONE}
        for g in word:
            p = tgt.flat(g.col, g.row)
            if g.kind == "T":
                nxt = {}
                for mm, cc in tcur.items():
                    for m2, c2 in eng.t_mul_gen(mm, p).items():
                        _acc(nxt, m2, cc * c2)
                tcur = nxt
        for g in reversed(word):
            p = tgt.flat(g.col, g.row)
            if g.kind == "D":
                nxt = {}
                for mm, cc in dcur.items():
                    for m2, c2 in eng.d_mul_gen(p, mm).items():
                        _acc(nxt, m2, cc * c2)
                dcur = nxt
        for tm, c1 in tcur.items():
            for dm, c2 in dcur.items():
                _acc(out, (tm, dm), c * c1 * c2)
    return WeylElement(tgt, out)


def in_subalgebra_A(x: WeylElement, k: int, l: int) -> bool:
    """True iff t-factors sit in the bottom k rows and d-factors in the bottom l rows."""
    spec = x.spec
    for t, d in x.terms:
        for p in range(spec.size):
            row = spec.coords(p)[0]
            if t[p] and row <= spec.m - k:
                return False
            if d[p] and row <= spec.m - l:
                return False
    return True


def graded_component(x: WeylElement, r: int, s: int) -> WeylElement:
    return WeylElement(x.spec, {mono: c for mono, c in x.terms.items()
                                if sum(mono[0]) == r and sum(mono[1]) == s})


def bidegrees(x: WeylElement) -> set:
    return {(sum(t), sum(d)) for t, d in x.terms}


# ---------------------------------------------------------------------------
# second PBW ordering: t descending, d ascending

def to_second_basis(x: WeylElement, strategy: str = "leftmost") -> dict:
    """Coordinates of x in the descending-t / ascending-d basis."""
    out: dict = defaultdict(lambda: ZERO)
    for mono, c in x.terms.items():
        word = monomial_word(mono, x.spec, "I")
        for w, cw in rewrite_word(word, x.spec, strategy, orientation="II").items():
            key = _word_to_monomial(w, x.spec)
            out[key] = out[key] + c * cw
    return {k: v for k, v in out.items() if v}


def from_second_basis(coords: dict, spec: AlgebraSpec, strategy: str = "leftmost") -> WeylElement:
    spec = AlgebraSpec(*spec)
    out: dict = defaultdict(lambda: ZERO)
    for mono, c in coords.items():
        word = monomial_word(mono, spec, "II")
        for w, cw in rewrite_word(word, spec, strategy, orientation="I").items():
            key = _word_to_monomial(w, spec)
            out[key] = out[key] + c * cw
    return WeylElement(spec, out)
