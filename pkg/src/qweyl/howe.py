"""Bialgebra maps on square algebras and the deformed product behind Gamma.

Polynomial (t-only) and differential (d-only) elements of an n x n algebra
form bialgebras with matrix coproducts.  From these we build

* ``gamma_n(u) = sum u1 (x) iota(u2)``, read as an element of the graded
  algebra, and its corner version ``gamma_kln``;
* ``rpair``, the R-matrix pairing on d-words, defined by its values on single
  generators and the quasitriangularity recursion;
* ``star``/``upsilon``, the product on polynomials that Gamma turns into
  operator composition.

Coproducts and pairings are evaluated on generator words, which is legitimate
because all maps involved respect the defining relations; results are
normalized at the end.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import NamedTuple

from .qfield import ONE, ZERO, Q, RationalQ
from .weyl import (FILTERED, GRADED, AlgebraSpec, D, T, WeylElement, _acc, embed,
                   monomial_word, restrict)

QDIFF = Q - Q.inverse()

P_KIND = "P"
D_KIND = "D"


class TensorElement(NamedTuple):
    """Sum of c * (a (x) b) with a, b pure monomials of the given kinds."""
    left_kind: str
    right_kind: str
    terms: dict  # (left exponents, right exponents) -> RationalQ
    n: int

    def __eq__(self, other):
        return (isinstance(other, TensorElement) and self[:2] == other[:2]
                and self.n == other.n and self.terms == other.terms)

    def __hash__(self):
        return hash((self.left_kind, self.right_kind, self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms


def _square(n: int, variant: str = FILTERED) -> AlgebraSpec:
    return AlgebraSpec(n, n, variant)


def _require_square(x: WeylElement) -> int:
    if x.spec.m != x.spec.n:
        raise ValueError(f"square ambient required, got {x.spec.m}x{x.spec.n}")
    return x.spec.n


def _kind_of(x: WeylElement) -> str:
    if x.is_polynomial():
        return P_KIND
    if x.is_differential():
        return D_KIND
    raise ValueError("element must be purely polynomial or purely differential")


def _pure_exps(mono, kind):
    return mono[0] if kind == P_KIND else mono[1]


def _mono(exps, kind, size):
    z = (0,) * size
    return (exps, z) if kind == P_KIND else (z, exps)


def _words(x: WeylElement, kind: str):
    """(word as tuple of (row, col), coefficient) for every term."""
    for mono, c in x.terms.items():
        yield tuple((g.row, g.col) for g in monomial_word(mono, x.spec)), c


def _gen(kind, i, j):
    return T(i, j) if kind == P_KIND else D(i, j)


@lru_cache(maxsize=None)
def _normalize_word(word: tuple, kind: str, n: int) -> tuple:
    """Normal form of a pure word, as a tuple of (exponents, coefficient)."""
    spec = _square(n)
    el = WeylElement.from_word([_gen(kind, i, j) for i, j in word], spec)
    return tuple((_pure_exps(m, kind), c) for m, c in el.terms.items())


def _element(pieces: dict, kind: str, n: int) -> WeylElement:
    spec = _square(n)
    return WeylElement(spec, {_mono(e, kind, spec.size): c for e, c in pieces.items()})


def _accumulate_word(acc: dict, word, kind, n, c):
    for e, c2 in _normalize_word(tuple(word), kind, n):
        _acc(acc, e, c * c2)


def _split_word(word, n):
    """All ways of writing the matrix coproduct of a word: (left word, right word)."""
    for mids in product(range(1, n + 1), repeat=len(word)):
        yield (tuple((i, k) for (i, _), k in zip(word, mids)),
               tuple((k, j) for (_, j), k in zip(word, mids)))


def _split3_word(word, n):
    for left, rest in _split_word(word, n):
        for mid, right in _split_word(rest, n):
            yield left, mid, right


# ---------------------------------------------------------------------------
# bialgebra structure

def coproduct(u: WeylElement, kind: str | None = None) -> TensorElement:
    """Matrix coproduct of a pure element, each leg normalized.

    ``kind`` only matters for scalars, which are both polynomial and differential.
    """
    n = _require_square(u)
    kind = kind or _kind_of(u)
    out: dict = {}
    for word, c in _words(u, kind):
        for left, right in _split_word(word, n):
            for e1, c1 in _normalize_word(left, kind, n):
                for e2, c2 in _normalize_word(right, kind, n):
                    _acc(out, (e1, e2), c * c1 * c2)
    return TensorElement(kind, kind, {k: v for k, v in out.items() if v}, n)


def counit(u: WeylElement) -> RationalQ:
    kind = _kind_of(u)
    total = ZERO
    for word, c in _words(u, kind):
        if all(i == j for i, j in word):
            total = total + c
    return total


def counit_right(x: TensorElement) -> WeylElement:
    """(1 (x) counit) of a tensor, as an element of the left factor."""
    acc: dict = {}
    for (a, b), c in x.terms.items():
        if _diagonal_exps(b, x.n):
            _acc(acc, a, c)
    return _element(acc, x.left_kind, x.n)


def counit_left(x: TensorElement) -> WeylElement:
    acc: dict = {}
    for (a, b), c in x.terms.items():
        if _diagonal_exps(a, x.n):
            _acc(acc, b, c)
    return _element(acc, x.right_kind, x.n)


def _diagonal_exps(e, n) -> bool:
    return all(not k or p // n == p % n for p, k in enumerate(e))


def iota(u: WeylElement) -> WeylElement:
    """Anti-isomorphism from polynomials to differential operators: t[i,j] -> d[j,i]."""
    n = _require_square(u)
    if _kind_of(u) != P_KIND:
        raise ValueError("iota expects a polynomial element")
    acc: dict = {}
    for word, c in _words(u, P_KIND):
        _accumulate_word(acc, [(j, i) for i, j in reversed(word)], D_KIND, n, c)
    return _element(acc, D_KIND, n)


def natural_inv(u: WeylElement) -> WeylElement:
    """Index transpose d[i,j] -> d[j,i], applied letter by letter (no reversal)."""
    n = _require_square(u)
    if not u.is_differential():
        raise ValueError("natural_inv expects a differential element")
    acc: dict = {}
    for word, c in _words(u, D_KIND):
        _accumulate_word(acc, [(j, i) for i, j in word], D_KIND, n, c)
    return _element(acc, D_KIND, n)


# ---------------------------------------------------------------------------
# Gamma

def gamma_n(u: WeylElement) -> TensorElement:
    """sum u1 (x) iota(u2) in P (x) D."""
    n = _require_square(u)
    if _kind_of(u) != P_KIND:
        raise ValueError("gamma expects a polynomial element")
    out: dict = {}
    for word, c in _words(u, P_KIND):
        for left, right in _split_word(word, n):
            image = tuple((j, i) for i, j in reversed(right))
            for e1, c1 in _normalize_word(left, P_KIND, n):
                for e2, c2 in _normalize_word(image, D_KIND, n):
                    _acc(out, (e1, e2), c * c1 * c2)
    return TensorElement(P_KIND, D_KIND, {k: v for k, v in out.items() if v}, n)


def as_graded(x: TensorElement) -> WeylElement:
    """Read a P (x) D tensor as an element of the graded algebra (t's left of d's)."""
    if (x.left_kind, x.right_kind) != (P_KIND, D_KIND):
        raise ValueError("expected a P (x) D tensor")
    return WeylElement(_square(x.n, GRADED), dict(x.terms))


def from_graded(x: WeylElement) -> TensorElement:
    n = _require_square(x)
    return TensorElement(P_KIND, D_KIND, dict(x.terms), n)


def gamma_kln(u: WeylElement, n: int) -> WeylElement:
    """Gamma of the corner embedding of a k x l polynomial, in the graded n x n algebra."""
    k, l = u.spec.m, u.spec.n
    if k > n or l > n:
        raise ValueError(f"corner {k}x{l} does not fit in {n}x{n}")
    if u.spec.graded:
        u = WeylElement(u.spec.with_variant(FILTERED), u.terms)
    return as_graded(gamma_n(embed(u, _square(n))))


# ---------------------------------------------------------------------------
# R-matrix pairing on d-words

def _base_pair(f, g) -> RationalQ:
    (a, b), (c, d) = f, g
    if a == b and c == d:
        return Q if a == c else ONE
    if a == d and b == c and a < b:
        return QDIFF
    return ZERO


def _eps_word(word) -> int:
    return int(all(i == j for i, j in word))


@lru_cache(maxsize=None)
def rpair_words(f: tuple, g: tuple, n: int, order: str = "left") -> RationalQ:
    """Pairing of two d-words; ``order`` picks which product is expanded first."""
    if not f:
        return RationalQ.constant(_eps_word(g))
    if not g:
        return RationalQ.constant(_eps_word(f))
    if len(f) == 1 and len(g) == 1:
        return _base_pair(f[0], g[0])
    split_f = len(f) > 1 and (order == "left" or len(g) == 1)
    total = ZERO
    if split_f:
        head, tail = f[:1], f[1:]
        for g1, g2 in _split_word(g, n):
            a = rpair_words(head, g1, n, order)
            if a:
                total = total + a * rpair_words(tail, g2, n, order)
    else:
        head, tail = g[:-1], g[-1:]
        for f1, f2 in _split_word(f, n):
            a = rpair_words(f1, tail, n, order)
            if a:
                total = total + a * rpair_words(f2, head, n, order)
    return total


def rpair(f: WeylElement, g: WeylElement, order: str = "left") -> RationalQ:
    n = _require_square(f)
    if f.spec != g.spec:
        raise ValueError("pairing arguments live in different algebras")
    total = ZERO
    for wf, cf in _words(f, _kind_of(f)):
        for wg, cg in _words(g, _kind_of(g)):
            total = total + cf * cg * rpair_words(wf, wg, n, order)
    return total


def rtt_sides(a: int, b: int, c: int, d: int, n: int):
    """Both sides of sum g1 f1 <f2 (x) g2> = sum f2 g2 <f1 (x) g1> for f=d[a,b], g=d[c,d]."""
    spec = _square(n)
    lhs = WeylElement.zero(spec)
    rhs = WeylElement.zero(spec)
    for k in range(1, n + 1):
        for kk in range(1, n + 1):
            w = _base_pair((k, b), (kk, d))
            if w:
                lhs = lhs + WeylElement.from_word([D(c, kk), D(a, k)], spec).scale(w)
            w = _base_pair((a, k), (c, kk))
            if w:
                rhs = rhs + WeylElement.from_word([D(k, b), D(kk, d)], spec).scale(w)
    return lhs, rhs


# ---------------------------------------------------------------------------
# the deformed product

def _iota_nat(word):
    """iota followed by the transpose: reverse the word, keep the indices."""
    return tuple(reversed(word))


def _iota_word(word):
    return tuple((j, i) for i, j in reversed(word))


def _upsilon_terms(u: WeylElement, v: WeylElement):
    """Yield (coefficient, u1 word, v2 word) over the double Sweedler sum."""
    n = _require_square(u)
    if _kind_of(u) != P_KIND or _kind_of(v) != P_KIND:
        raise ValueError("star expects polynomial elements")
    vsplits = [(wv, cv, list(_split3_word(wv, n))) for wv, cv in _words(v, P_KIND)]
    for wu, cu in _words(u, P_KIND):
        for u1, u2, u3 in _split3_word(wu, n):
            u3n = _iota_nat(u3)
            u2i = _iota_word(u2)
            for _, cv, splits in vsplits:
                for v1, v2, v3 in splits:
                    a = rpair_words(_iota_nat(v1), u3n, n)
                    if not a:
                        continue
                    b = rpair_words(_iota_word(v3), u2i, n)
                    if b:
                        yield cu * cv * a * b, u1, v2


def upsilon(u: WeylElement, v: WeylElement) -> TensorElement:
    n = _require_square(u)
    out: dict = {}
    for c, u1, v2 in _upsilon_terms(u, v):
        for e1, c1 in _normalize_word(u1, P_KIND, n):
            for e2, c2 in _normalize_word(v2, P_KIND, n):
                _acc(out, (e1, e2), c * c1 * c2)
    return TensorElement(P_KIND, P_KIND, {k: x for k, x in out.items() if x}, n)


def multiply_legs(x: TensorElement, variant: str = FILTERED) -> WeylElement:
    """Product of the two legs inside the n x n algebra."""
    spec = _square(x.n, variant)
    out = WeylElement.zero(spec)
    for (a, b), c in x.terms.items():
        left = WeylElement(spec, {_mono(a, x.left_kind, spec.size): c})
        right = WeylElement(spec, {_mono(b, x.right_kind, spec.size): ONE})
        out = out + left * right
    return out


def star_n(u: WeylElement, v: WeylElement) -> WeylElement:
    n = _require_square(u)
    acc: dict = {}
    for c, u1, v2 in _upsilon_terms(u, v):
        _accumulate_word(acc, u1 + v2, P_KIND, n, c)
    return _element(acc, P_KIND, n)


def star(u: WeylElement, v: WeylElement, n: int) -> WeylElement:
    """Corner product on k x l polynomials through the n x n product."""
    if u.spec != v.spec:
        raise ValueError("star arguments live in different algebras")
    k, l = u.spec.m, u.spec.n
    if k > n or l > n:
        raise ValueError(f"corner {k}x{l} does not fit in {n}x{n}")
    big = _square(n)
    prod = star_n(embed(u, big), embed(v, big))
    try:
        return restrict(prod, u.spec)
    except ValueError as exc:
        raise AssertionError("deformed product left the corner image") from exc


def p_map(x) -> WeylElement:
    """Multiply the P and D legs inside the filtered algebra."""
    if isinstance(x, WeylElement):
        x = from_graded(x)
    return multiply_legs(x, FILTERED)


def filtration_defect(x: WeylElement, y: WeylElement) -> WeylElement:
    """p(x) p(y) - p(x y) for graded x, y."""
    return p_map(x) * p_map(y) - p_map(x * y)


def upsilon_rank(n: int, r: int, s: int) -> tuple:
    """(rank, size) of upsilon on degree (r, s) polynomial pairs."""
    from .qfield import QMatrix, rank
    from .weyl import t_monomials
    spec = _square(n)
    left = t_monomials(spec, r)
    right = t_monomials(spec, s)
    cols = [(a, b) for a in left for b in right]
    index = {(a[0], b[0]): i for i, (a, b) in enumerate(cols)}
    mat = QMatrix(len(cols), len(cols))
    for j, (a, b) in enumerate(cols):
        img = upsilon(WeylElement(spec, {a: ONE}), WeylElement(spec, {b: ONE}))
        for key, c in img.terms.items():
            mat.entries[index[key] * len(cols) + j] = c
    return rank(mat), len(cols)


def polarization_products(k: int, l: int, n: int, r: int) -> list:
    """All ordered degree-r products of the bottom-corner graded polarizations."""
    from .minorops import polarization
    spec = _square(n, GRADED)
    gens = [polarization(i, j, "Left", spec, tilde=True)
            for i in range(1, k + 1) for j in range(1, l + 1)]
    out = [WeylElement.one(spec)]
    for _ in range(r):
        out = [x * g for x in out for g in gens]
    return out


def span_rank(elements: list) -> int:
    """Dimension of the span of a list of elements over Q(q)."""
    from .qfield import QMatrix, rank
    index: dict = {}
    for x in elements:
        for mono in x.terms:
            index.setdefault(mono, len(index))
    if not index:
        return 0
    mat = QMatrix(len(index), len(elements))
    for j, x in enumerate(elements):
        for mono, c in x.terms.items():
            mat.entries[index[mono] * len(elements) + j] = c
    return rank(mat)


def rtt_word_sides(f: tuple, g: tuple, n: int):
    """sum g1 f1 <f2 (x) g2> and sum f2 g2 <f1 (x) g1> for d-words f, g."""
    spec = _square(n)
    lhs: dict = {}
    rhs: dict = {}
    for f1, f2 in _split_word(f, n):
        for g1, g2 in _split_word(g, n):
            w = rpair_words(f2, g2, n)
            if w:
                _accumulate_word(lhs, g1 + f1, D_KIND, n, w)
            w = rpair_words(f1, g1, n)
            if w:
                _accumulate_word(rhs, f2 + g2, D_KIND, n, w)
    return _element(lhs, D_KIND, n), _element(rhs, D_KIND, n)
