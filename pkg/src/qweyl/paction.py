"""The action of the filtered algebra on its polynomial part.

``act(D, f)`` is the class of ``D*f`` modulo the left ideal generated by the
d's, i.e. the normal form of the product with every monomial that still
contains a d dropped.
"""

from __future__ import annotations

from .qfield import ONE, ZERO, QMatrix, RationalQ, laurent_monomial
from .weyl import AlgebraSpec, SpecMismatch, WeylElement, _acc, engine, t_monomials


def _check_poly(f: WeylElement):
    if not f.is_polynomial():
        raise ValueError("second argument must be free of d-generators")


def act_monomial(spec: AlgebraSpec, mono, tmono) -> dict:
    """Action of one PBW monomial on one t-monomial, as {t-monomial: coef}."""
    eng = engine(spec)
    ta, da = mono
    cur = {tmono: ONE}
    for p in range(spec.size):  # rightmost d-factors carry the smallest index
        for _ in range(da[p]):
            nxt = {}
            for tm, c in cur.items():
                for tm2, c2 in eng.act_gen(p, tm).items():
                    _acc(nxt, tm2, c * c2)
            cur = {k: v for k, v in nxt.items() if v}
            if not cur:
                return {}
    if not any(ta):
        return cur
    out = {}
    for tm, c in cur.items():
        for tm2, c2 in eng.t_prod(ta, tm).items():
            _acc(out, tm2, c * c2)
    return {k: v for k, v in out.items() if v}


def act(D: WeylElement, f: WeylElement) -> WeylElement:
    """D acting on the polynomial f."""
    if D.spec != f.spec:
        raise SpecMismatch(f"spec mismatch: {D.spec} vs {f.spec}")
    if D.spec.graded:
        raise SpecMismatch("the polynomial module is defined for the filtered algebra only")
    _check_poly(f)
    spec = D.spec
    zero = (0,) * spec.size
    out: dict = {}
    for mono, c in D.terms.items():
        for (tf, _), cf in f.terms.items():
            for tm, c2 in act_monomial(spec, mono, tf).items():
                _acc(out, (tm, zero), c * cf * c2)
    return WeylElement(spec, out)


def act_by_product(D: WeylElement, f: WeylElement) -> WeylElement:
    """Same action computed as the full product followed by projection."""
    _check_poly(f)
    prod = D * f
    return WeylElement(D.spec, {m: c for m, c in prod.terms.items() if not any(m[1])})


def c_scalar(a: int) -> RationalQ:
    """1 + q^2 + ... + q^(2a), zero for negative a."""
    if a < 0:
        return ZERO
    return RationalQ(tuple(1 if i % 2 == 0 else 0 for i in range(2 * a + 1)))


def c2_scalar(a: int, b: int) -> RationalQ:
    """c(a) c(a-1) ... c(a-b) with the boundary conventions at -1."""
    if a < -1 or b < -1:
        raise ValueError("arguments must be at least -1")
    if b == -1:
        return ONE
    if a < b:
        return ZERO
    out = ONE
    for k in range(a - b, a + 1):
        out = out * c_scalar(k)
    return out


def action_matrix(D: WeylElement, d: int) -> QMatrix:
    """Matrix of act(D, -) on degree-d monomials; basis in lexicographic order."""
    spec = D.spec
    basis = t_monomials(spec, d)
    index = {m[0]: i for i, m in enumerate(basis)}
    size = len(basis)
    mat = QMatrix(size, size)
    for j, (tm, _) in enumerate(basis):
        acc: dict = {}
        for mono, c in D.terms.items():
            for tm2, c2 in act_monomial(spec, mono, tm).items():
                _acc(acc, tm2, c * c2)
        for tm2, v in acc.items():
            if not v:
                continue
            if tm2 not in index:
                raise ValueError("operator does not preserve the degree")
            mat.entries[index[tm2] * size + j] = v
    return mat


# ---------------------------------------------------------------------------
# single-row closed forms

def row_power_t(spec: AlgebraSpec, exps) -> WeylElement:
    """t[1,k]^a_k ... t[1,1]^a_1 (columns in decreasing order)."""
    out = WeylElement.one(spec)
    for col in range(len(exps), 0, -1):
        out = out * WeylElement.t(1, col, spec) ** exps[col - 1]
    return out


def row_power_d(spec: AlgebraSpec, exps) -> WeylElement:
    """d[1,1]^b_1 ... d[1,k]^b_k (columns in increasing order)."""
    out = WeylElement.one(spec)
    for col in range(1, len(exps) + 1):
        out = out * WeylElement.d(1, col, spec) ** exps[col - 1]
    return out


def row_closed_form(a, b) -> RationalQ:
    """Scalar predicted for d^b acting on t^a along the first row."""
    if any(bi > ai for ai, bi in zip(a, b)):
        return ZERO
    e = 0
    for i in range(1, len(a)):
        e += (a[i] - b[i]) * sum(b[:i])
    out = laurent_monomial(e)
    for ai, bi in zip(a, b):
        out = out * c2_scalar(ai - 1, bi - 1)
    return out


# ---------------------------------------------------------------------------
# faithfulness

def _prec_key(spec: AlgebraSpec):
    """Positions sorted by (i+j, i)."""
    return sorted(range(spec.size), key=lambda p: (sum(spec.coords(p)), spec.coords(p)[0]))


def faithfulness_witness(D: WeylElement):
    """A t-monomial f with act(D, f) != 0, plus whether the guided guess worked.

    The guess takes the lowest d-degree part of D and the exponent tuple that
    is minimal in reverse lexicographic order along the (i+j, i) ordering of
    positions; when that product of t's is annihilated the search falls back
    to all monomials of that degree.
    """
    if D.is_zero():
        raise ValueError("zero operator has no witness")
    spec = D.spec
    d0 = min(sum(m[1]) for m in D.terms)
    order = _prec_key(spec)
    tuples = {m[1] for m in D.terms if sum(m[1]) == d0}
    best = min(tuples, key=lambda b: tuple(b[p] for p in reversed(order)))
    zero = (0,) * spec.size
    f = WeylElement(spec, {(best, zero): ONE})
    if not act(D, f).is_zero():
        return f, True
    for deg in range(d0, d0 + 4):
        for mono in t_monomials(spec, deg):
            f = WeylElement(spec, {mono: ONE})
            if not act(D, f).is_zero():
                return f, False
    return None, False
