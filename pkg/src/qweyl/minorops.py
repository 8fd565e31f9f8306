"""Quantum minors, Capelli-type determinantal operators and polarization operators."""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Sequence

from .qfield import ONE, Q, laurent_monomial
from .weyl import FILTERED, AlgebraSpec, WeylElement, embed

QSQ_MINUS_ONE = Q * Q - ONE


def inversions(perm: Sequence[int]) -> int:
    return sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])


def _check_tuple(idx, bound, what):
    if any(b <= a for a, b in zip(idx, idx[1:])):
        raise ValueError(f"{what} indices must be strictly increasing")
    if idx and (idx[0] < 1 or idx[-1] > bound):
        raise ValueError(f"{what} indices out of range")


def _minor(rows, cols, spec, weight, kind):
    rows, cols = tuple(rows), tuple(cols)
    if len(rows) != len(cols) or not rows:
        raise ValueError("row and column tuples must have the same positive length")
    _check_tuple(rows, spec.m, "row")
    _check_tuple(cols, spec.n, "column")
    make = WeylElement.t if kind == "T" else WeylElement.d
    out = WeylElement.zero(spec)
    for perm in permutations(range(len(rows))):
        term = WeylElement.one(spec)
        for pos, c in enumerate(cols):
            term = term * make(rows[perm[pos]], c, spec)
        out = out + term.scale(weight ** inversions(perm))
    return out


def qminor_t(rows, cols, spec: AlgebraSpec) -> WeylElement:
    """Sum over permutations of (-q)^len * t[rows[s(1)], cols[1]] ... t[rows[s(r)], cols[r]]."""
    return _minor(rows, cols, AlgebraSpec(*spec), -Q, "T")


def qminor_d(rows, cols, spec: AlgebraSpec) -> WeylElement:
    """Same as qminor_t with weight -1/q and d-generators."""
    return _minor(rows, cols, AlgebraSpec(*spec), -laurent_monomial(-1), "D")


def D_opr(r: int, a: int, b: int, variant: str = FILTERED) -> WeylElement:
    """Sum of M(i, j) * Mbar(i, j) over increasing r-tuples in an a x b algebra."""
    spec = AlgebraSpec(a, b, variant)
    if r < 0:
        raise ValueError("r must be non-negative")
    if r == 0:
        return WeylElement.one(spec)
    out = WeylElement.zero(spec)
    for rows in combinations(range(1, a + 1), r):
        for cols in combinations(range(1, b + 1), r):
            out = out + qminor_t(rows, cols, spec) * qminor_d(rows, cols, spec)
    return out


def D_kr(k: int, r: int, m: int, n: int, primed: bool = False, variant: str = FILTERED) -> WeylElement:
    """D(r, m, k) in the last k columns, or D(r, k, n) in the bottom k rows when primed."""
    target = AlgebraSpec(m, n, variant)
    if primed:
        if not 1 <= k <= m:
            raise ValueError("k out of range")
        return embed(D_opr(r, k, n, variant), target)
    if not 1 <= k <= n:
        raise ValueError("k out of range")
    return embed(D_opr(r, m, k, variant), target)


def D_r(r: int, m: int, n: int, variant: str = FILTERED) -> WeylElement:
    """The full-size operator; both constructions must agree."""
    left = D_kr(n, r, m, n, False, variant)
    right = D_kr(m, r, m, n, True, variant)
    if left != right:
        raise AssertionError("column and row constructions of D_r disagree")
    return left


def cartan_image(index: int, side: str, m: int, n: int) -> WeylElement:
    """R_a (side "Right") or L_b (side "Left"): alternating-power sums of D operators."""
    spec = AlgebraSpec(m, n)
    if side == "Right":
        if not 1 <= index <= n:
            raise ValueError("index out of range")
        primed, bound = False, min(index, m, n)
    elif side == "Left":
        if not 1 <= index <= m:
            raise ValueError("index out of range")
        primed, bound = True, min(index, m, n)
    else:
        raise ValueError(f"unknown side {side!r}")
    out = WeylElement.zero(spec)
    for r in range(bound + 1):
        out = out + D_kr(index, r, m, n, primed).scale(QSQ_MINUS_ONE ** r)
    return out


def polarization(i: int, j: int, side: str, spec: AlgebraSpec, tilde: bool = False) -> WeylElement:
    """L[i,j] = sum_r t[i,r] d[j,r]; R[i,j] = sum_r t[r,i] d[r,j].

    With ``tilde`` the row labels of the left operator count from the bottom.
    The product is taken in whichever variant ``spec`` names.
    """
    spec = AlgebraSpec(*spec)
    out = WeylElement.zero(spec)
    if side == "Left":
        if tilde:
            i, j = spec.m - i + 1, spec.m - j + 1
        if not (1 <= i <= spec.m and 1 <= j <= spec.m):
            raise ValueError("indices out of range")
        for r in range(1, spec.n + 1):
            out = out + WeylElement.t(i, r, spec) * WeylElement.d(j, r, spec)
    elif side == "Right":
        if tilde:
            i, j = spec.n - i + 1, spec.n - j + 1
        if not (1 <= i <= spec.n and 1 <= j <= spec.n):
            raise ValueError("indices out of range")
        for r in range(1, spec.m + 1):
            out = out + WeylElement.t(r, i, spec) * WeylElement.d(r, j, spec)
    else:
        raise ValueError(f"unknown side {side!r}")
    return out
