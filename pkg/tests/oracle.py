"""Brute-force reference computations that share no code with the package.

Words are tuples of ("t"|"d", row, col); coefficients are sympy expressions
in q.  Reduction rewrites the leftmost out-of-order adjacent pair until the
word is sorted (t's ascending, then d's descending).  Everything here is slow
on purpose and only used to produce or re-check frozen values.
"""

from __future__ import annotations

import sympy

q = sympy.Symbol("q")
QD = q - 1 / q


def _pair(a, b, m, n, graded):
    """Replacement for the adjacent pair a b, or None if already in order."""
    ka, i1, j1 = a
    kb, i2, j2 = b
    if ka == "t" and kb == "t":
        if (i1, j1) <= (i2, j2):
            return None
        if i1 == i2 or j1 == j2:
            return [(1 / q, (b, a))]
        # now i1 > i2
        if j1 < j2:
            return [(sympy.Integer(1), (b, a))]
        return [(sympy.Integer(1), (b, a)), (-QD, (("t", i2, j1), ("t", i1, j2)))]
    if ka == "d" and kb == "d":
        if (i1, j1) >= (i2, j2):
            return None
        if i1 == i2 or j1 == j2:
            return [(1 / q, (b, a))]
        # now i1 < i2
        if j1 > j2:
            return [(sympy.Integer(1), (b, a))]
        return [(sympy.Integer(1), (b, a)), (-QD, (("d", i2, j1), ("d", i1, j2)))]
    if ka == "t" and kb == "d":
        return None
    # a = d[c,b'], b = t[dd,aa]
    c, bb = i1, j1
    dd, aa = i2, j2
    t = lambda i, j: ("t", i, j)
    d = lambda i, j: ("d", i, j)
    if c != dd and bb != aa:
        return [(sympy.Integer(1), (t(dd, aa), d(c, bb)))]
    if c == dd and bb != aa:
        out = [(q, (t(c, aa), d(c, bb)))]
        out += [(QD, (t(cc, aa), d(cc, bb))) for cc in range(c + 1, m + 1)]
        return out
    if c != dd and bb == aa:
        out = [(q, (t(dd, aa), d(c, aa)))]
        out += [(QD, (t(dd, a2), d(c, a2))) for a2 in range(aa + 1, n + 1)]
        return out
    out = [] if graded else [(sympy.Integer(1), ())]
    for cc in range(c, m + 1):
        for a2 in range(aa, n + 1):
            e = int(cc == c) + int(a2 == aa)
            out.append((q ** e * QD ** (2 - e), (t(cc, a2), d(cc, a2))))
    return out


def reduce_word(word, m, n, graded=False) -> dict:
    """{sorted word: coefficient} for the product of the word's letters."""
    todo = {tuple(word): sympy.Integer(1)}
    done: dict = {}
    while todo:
        w, c = todo.popitem()
        for pos in range(len(w) - 1):
            rep = _pair(w[pos], w[pos + 1], m, n, graded)
            if rep is not None:
                for coef, mid in rep:
                    nw = w[:pos] + mid + w[pos + 2:]
                    todo[nw] = todo.get(nw, 0) + c * coef
                break
        else:
            done[w] = done.get(w, 0) + c
    return {w: sympy.factor(c) for w, c in done.items() if sympy.simplify(c) != 0}


def act_word(dword, tword, m, n) -> dict:
    """Action of a d-word on a t-word: reduce the product and drop d-terms."""
    full = reduce_word(tuple(dword) + tuple(tword), m, n)
    return {w: c for w, c in full.items() if all(g[0] == "t" for g in w)}


def element_to_oracle(x) -> dict:
    """Package element -> {sorted word: sympy coefficient} for comparison."""
    spec = x.spec
    out = {}
    for (te, de), c in x.terms.items():
        word = []
        for p in range(spec.size):
            i, j = divmod(p, spec.n)
            word += [("t", i + 1, j + 1)] * te[p]
        for p in range(spec.size - 1, -1, -1):
            i, j = divmod(p, spec.n)
            word += [("d", i + 1, j + 1)] * de[p]
        out[tuple(word)] = ratq_to_sympy(c)
    return out


def ratq_to_sympy(c):
    num = sum(sympy.Rational(a) * q ** k for k, a in enumerate(c.num))
    den = sum(sympy.Rational(a) * q ** k for k, a in enumerate(c.den))
    return num / den


def same(a: dict, b: dict) -> bool:
    keys = set(a) | set(b)
    return all(sympy.simplify(a.get(k, 0) - b.get(k, 0)) == 0 for k in keys)


def det(rows):
    return sympy.Matrix(rows).det()


def factorial_schur(nu, xs, base=q):
    """Determinant ratio straight from the definition, in sympy."""
    n = len(xs)
    nu = list(nu) + [0] * (n - len(nu))
    top = sympy.Matrix(n, n, lambda i, j: sympy.prod([xs[i] - base ** k for k in range(nu[j] + n - j - 1)]))
    vander = sympy.prod([xs[i] - xs[j] for i in range(n) for j in range(i + 1, n)])
    return sympy.factor(sympy.cancel(top.det() / vander))


def weyl_dimension_by_counting(lam, k):
    """Number of semistandard tableaux of shape lam with entries 1..k."""
    lam = [p for p in lam if p]
    if len(lam) > k:
        return 0
    cells = [(r, c) for r, row in enumerate(lam) for c in range(row)]

    def fill(idx, tab):
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, tab[(r, c - 1)])
        if r > 0:
            lo = max(lo, tab[(r - 1, c)] + 1)
        total = 0
        for v in range(lo, k + 1):
            tab[(r, c)] = v
            total += fill(idx + 1, tab)
        tab.pop((r, c), None)
        return total

    return fill(0, {})
