"""Quantum group actions on the Weyl algebra.

Two commuting copies of U_q(gl) act: the left copy moves row indices and the
right copy moves column indices.  On generators the action is given by fixed
tables; on monomials it extends through the coproducts

    E -> E (x) K + 1 (x) E,   F -> F (x) 1 + K^-1 (x) F,   K -> K (x) K,

where K_i = K_{eps_i} K_{eps_{i+1}}^{-1}.  Elements of the quantum group are
only ever handled as words of generators acting as operators.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

from .qfield import ONE, ZERO, QMatrix, RationalQ, kernel, laurent_monomial
from .weyl import GRADED, AlgebraSpec, WeylElement, _acc, engine

LEFT = "Left"
RIGHT = "Right"
KINDS = ("E", "F", "Kplus", "Kminus")


class UGen(NamedTuple):
    side: str
    kind: str
    index: int

    def __str__(self):
        name = {"E": "E", "F": "F", "Kplus": "K", "Kminus": "K^-1"}[self.kind]
        return f"{name}_{self.index}({self.side[0]})"


def E(i, side=RIGHT):
    return UGen(side, "E", i)


def F(i, side=RIGHT):
    return UGen(side, "F", i)


def K(i, side=RIGHT, inverse=False):
    return UGen(side, "Kminus" if inverse else "Kplus", i)


def _side_size(spec: AlgebraSpec, side: str) -> int:
    return spec.n if side == RIGHT else spec.m


def check_gen(g: UGen, spec: AlgebraSpec):
    size = _side_size(spec, g.side)
    if g.side not in (LEFT, RIGHT) or g.kind not in KINDS:
        raise ValueError(f"malformed generator {g}")
    hi = size - 1 if g.kind in ("E", "F") else size
    if not 1 <= g.index <= hi:
        raise ValueError(f"generator {g} out of range for size {size}")


# ---------------------------------------------------------------------------
# action on single generators: the acting index is the column (right) or row (left)

def _moving_index(kind_gen: str, row: int, col: int, side: str) -> int:
    return col if side == RIGHT else row


def _relabel(row, col, side, new):
    return (row, new) if side == RIGHT else (new, col)


def _gen_action(g: UGen, gkind: str, row: int, col: int):
    """(coef, (kind, row, col)) for g acting on one generator, or None."""
    j = _moving_index(gkind, row, col, g.side)
    k = g.index
    if g.kind in ("Kplus", "Kminus"):
        e = (1 if gkind == "D" else -1) * (1 if k == j else 0)
        if g.kind == "Kminus":
            e = -e
        return laurent_monomial(e), (gkind, row, col)
    if gkind == "D":
        if g.kind == "E":
            return (ONE, ("D",) + _relabel(row, col, g.side, k)) if j == k + 1 else None
        return (ONE, ("D",) + _relabel(row, col, g.side, k + 1)) if j == k else None
    if g.kind == "E":
        return (-laurent_monomial(-1), ("T",) + _relabel(row, col, g.side, k + 1)) if j == k else None
    return (-laurent_monomial(1), ("T",) + _relabel(row, col, g.side, k)) if j == k + 1 else None


def _k_simple_exponent(side, k, gkind, row, col, inverse=False) -> int:
    """Exponent of q for K_k = K_{eps_k} K_{eps_{k+1}}^-1 on one generator."""
    j = col if side == RIGHT else row
    e = (1 if j == k else 0) - (1 if j == k + 1 else 0)
    if gkind == "T":
        e = -e
    return -e if inverse else e


def _word_of(mono, spec):
    te, de = mono
    word = []
    for p in range(spec.size):
        i, j = spec.coords(p)
        word += [("T", i, j)] * te[p]
    for p in range(spec.size - 1, -1, -1):
        i, j = spec.coords(p)
        word += [("D", i, j)] * de[p]
    return word


def _pure_word_product(spec, word) -> dict:
    """Normal form of a word whose t-letters all precede its d-letters."""
    eng = engine(spec)
    tcur = {eng.zero: ONE}
    dletters = []
    for kind, i, j in word:
        if kind == "T":
            p = spec.flat(i, j)
            nxt = {}
            for mm, c in tcur.items():
                for m2, c2 in eng.t_mul_gen(mm, p).items():
                    _acc(nxt, m2, c * c2)
            tcur = nxt
        else:
            dletters.append(spec.flat(i, j))
    dcur = {eng.zero: ONE}
    for p in reversed(dletters):
        nxt = {}
        for mm, c in dcur.items():
            for m2, c2 in eng.d_mul_gen(p, mm).items():
                _acc(nxt, m2, c * c2)
        dcur = nxt
    out = {}
    for tm, c1 in tcur.items():
        for dm, c2 in dcur.items():
            _acc(out, (tm, dm), c1 * c2)
    return out


_CACHE: dict = {}


def _act_on_word(g: UGen, spec: AlgebraSpec, word) -> dict:
    """g applied to a word of generators (t-letters first) via the coproduct rule."""
    if g.kind in ("Kplus", "Kminus"):
        e = 0
        for gk, i, j in word:
            c, _ = _gen_action(g, gk, i, j)
            e += _exp_of(c)
        return {tuple(word): laurent_monomial(e)}
    out: dict = {}
    r = len(word)
    for s in range(r):
        res = _gen_action(g, *word[s])
        if res is None:
            continue
        coef, newgen = res
        e = 0
        if g.kind == "E":
            for gk, i, j in word[s + 1:]:
                e += _k_simple_exponent(g.side, g.index, gk, i, j)
        else:
            for gk, i, j in word[:s]:
                e += _k_simple_exponent(g.side, g.index, gk, i, j, inverse=True)
        nw = tuple(word[:s]) + (newgen,) + tuple(word[s + 1:])
        _acc(out, nw, coef * laurent_monomial(e))
    return out


def _exp_of(c: RationalQ) -> int:
    terms = c.laurent_terms()
    (e,) = terms
    return e


def act_gen_monomial(g: UGen, spec: AlgebraSpec, mono) -> dict:
    key = (g, spec, mono)
    hit = _CACHE.get(key)
    if hit is not None:
        return hit
    out: dict = {}
    for w, c in _act_on_word(g, spec, _word_of(mono, spec)).items():
        for m2, c2 in _pure_word_product(spec, w).items():
            _acc(out, m2, c * c2)
    out = {k: v for k, v in out.items() if v}
    _CACHE[key] = out
    return out


def act_gen(g: UGen, x: WeylElement) -> WeylElement:
    """Action of one quantum group generator on an element."""
    g = UGen(*g)
    check_gen(g, x.spec)
    out: dict = {}
    for mono, c in x.terms.items():
        for m2, c2 in act_gen_monomial(g, x.spec, mono).items():
            _acc(out, m2, c * c2)
    return WeylElement(x.spec, out)


def act_word(word: Sequence[UGen], x: WeylElement) -> WeylElement:
    """Apply a word of generators; the rightmost factor acts first."""
    for g in reversed(list(word)):
        x = act_gen(g, x)
    return x


def act_gen_on_word(g: UGen, spec: AlgebraSpec, word) -> WeylElement:
    """Action on an arbitrary (not necessarily normal) word, for consistency checks.

    Letters may interleave; each summand of the coproduct expansion is
    multiplied out in the algebra.
    """
    g = UGen(*g)
    check_gen(g, spec)
    word = [tuple(w) for w in word]
    out = WeylElement.zero(spec)
    if g.kind in ("Kplus", "Kminus"):
        e = sum(_exp_of(_gen_action(g, *w)[0]) for w in word)
        return WeylElement.from_word(word, spec).scale(laurent_monomial(e))
    for s in range(len(word)):
        res = _gen_action(g, *word[s])
        if res is None:
            continue
        coef, newgen = res
        if g.kind == "E":
            e = sum(_k_simple_exponent(g.side, g.index, *w) for w in word[s + 1:])
        else:
            e = sum(_k_simple_exponent(g.side, g.index, *w, inverse=True) for w in word[:s])
        nw = word[:s] + [newgen] + word[s + 1:]
        out = out + WeylElement.from_word(nw, spec).scale(coef * laurent_monomial(e))
    return out


def coproduct_terms(g: UGen):
    """Sweedler legs of a generator as a list of (left word, right word)."""
    if g.kind in ("Kplus", "Kminus"):
        return [([g], [g])]
    k = g.index
    kk = [UGen(g.side, "Kplus", k), UGen(g.side, "Kminus", k + 1)]
    kinv = [UGen(g.side, "Kminus", k), UGen(g.side, "Kplus", k + 1)]
    if g.kind == "E":
        return [([g], kk), ([], [g])]
    return [([g], []), (kinv, [g])]


class WeightVector(NamedTuple):
    exponents: tuple


def lambda_left(a: int, m: int) -> WeightVector:
    """-2 (eps_a + ... + eps_m)."""
    return WeightVector(tuple(-2 if i >= a else 0 for i in range(1, m + 1)))


def lambda_right(b: int, n: int) -> WeightVector:
    return WeightVector(tuple(-2 if i >= b else 0 for i in range(1, n + 1)))


def monomial_weight(mono, spec: AlgebraSpec, side: str) -> list:
    """Per-index count of d-factors minus t-factors along the acting side."""
    te, de = mono
    size = _side_size(spec, side)
    w = [0] * size
    for p in range(spec.size):
        i, j = spec.coords(p)
        idx = (j if side == RIGHT else i) - 1
        w[idx] += de[p] - te[p]
    return w


def act_Klambda(lam, side: str, x: WeylElement) -> WeylElement:
    """Diagonal action of K_lambda = prod K_{eps_i}^{lambda_i}."""
    lam = tuple(lam.exponents if isinstance(lam, WeightVector) else lam)
    if len(lam) != _side_size(x.spec, side):
        raise ValueError("weight length does not match the acting side")
    out = {}
    for mono, c in x.terms.items():
        w = monomial_weight(mono, x.spec, side)
        out[mono] = c * laurent_monomial(sum(a * b for a, b in zip(lam, w)))
    return WeylElement(x.spec, out)


def klambda_word(lam, side: str) -> list:
    lam = tuple(lam.exponents if isinstance(lam, WeightVector) else lam)
    word = []
    for i, e in enumerate(lam, start=1):
        word += [UGen(side, "Kplus" if e > 0 else "Kminus", i)] * abs(e)
    return word


# ---------------------------------------------------------------------------
# invariants

def ambient_for(k: int, l: int, n: int) -> AlgebraSpec:
    """Graded ambient used for the (k, l, n) subalgebra."""
    if n >= max(k, l):
        return AlgebraSpec(n, n, GRADED)
    return AlgebraSpec(max(k, l), n, GRADED)


def component_basis(k: int, l: int, n: int, r: int, s: int | None = None) -> list:
    """Monomials of bidegree (r, s) with t-rows among the bottom k and d-rows among the bottom l."""
    from .weyl import t_monomials
    s = r if s is None else s
    spec = ambient_for(k, l, n)
    trows = range(spec.m - k + 1, spec.m + 1)
    drows = range(spec.m - l + 1, spec.m + 1)
    ts = [t for t, _ in t_monomials(spec, r, trows)]
    ds = [t for t, _ in t_monomials(spec, s, drows)]
    return [(t, d) for t in ts for d in ds]


def operator_matrix(op, basis, spec) -> QMatrix:
    """Stack the images of basis monomials under op (a function on elements) as columns."""
    images = [op(WeylElement(spec, {b: ONE})) for b in basis]
    rows_index: dict = {}
    for img in images:
        for mono in img.terms:
            rows_index.setdefault(mono, len(rows_index))
    mat = QMatrix(len(rows_index), len(basis))
    for j, img in enumerate(images):
        for mono, c in img.terms.items():
            mat.entries[rows_index[mono] * len(basis) + j] = c
    return mat


def invariant_basis(k: int, l: int, n: int, r: int) -> list:
    """Basis of right-invariants in the (r, r) component of the (k, l, n) subalgebra."""
    spec = ambient_for(k, l, n)
    basis = [b for b in component_basis(k, l, n, r)
             if not any(monomial_weight(b, spec, RIGHT))]
    if not basis:
        return []
    gens = [E(s) for s in range(1, n)] + [F(s) for s in range(1, n)]
    blocks = [operator_matrix(lambda x, g=g: act_gen(g, x), basis, spec) for g in gens]
    rows = sum(b.rows for b in blocks)
    entries = [e for b in blocks for e in b.entries]
    stacked = QMatrix(rows, len(basis), entries)
    out = []
    for vec in kernel(stacked):
        out.append(WeylElement(spec, {b: c for b, c in zip(basis, vec) if c}))
    return out


def klambda_row_eigenvalues(n: int, rmax: int) -> list:
    """(r, eigenvalue, denominator degree) of K_{eps_1+...+eps_n} (right) on t[1,1]^r.

    The denominator degree grows with r, which is the evidence that this K
    does not act through a fixed element of bounded degree.  It is reported
    for inspection and never used as a proof of non-membership.
    """
    from .weyl import FILTERED
    spec = AlgebraSpec(1, n, FILTERED)
    lam = WeightVector((1,) * n)
    out = []
    for r in range(1, rmax + 1):
        f = WeylElement.t(1, 1, spec) ** r
        (c,) = act_Klambda(lam, RIGHT, f).terms.values()
        out.append((r, c, len(c.den) - 1))
    return out
