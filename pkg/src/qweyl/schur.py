"""q-factorial Schur polynomials, the Capelli eigenvalue scalar and Weyl dimensions."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .qfield import ONE, ZERO, Q, QMatrix, RationalQ, det, laurent_monomial


class Partition(tuple):
    """Weakly decreasing non-negative parts; trailing zeros are dropped."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = list(parts)
        if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    def padded(self, n: int) -> tuple:
        if len(self) > n:
            raise ValueError("partition has too many parts")
        return tuple(self) + (0,) * (n - len(self))

    @property
    def size(self) -> int:
        return sum(self)


def partitions(total: int, max_parts: int | None = None, max_part: int | None = None):
    """All partitions of total with bounded length, largest parts first."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield Partition()
        return
    if max_parts == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        rest = None if max_parts is None else max_parts - 1
        for tail in partitions(total - first, rest, first):
            yield Partition((first,) + tuple(tail))


def column(r: int) -> Partition:
    return Partition((1,) * r)


def qfact_schur(nu: Sequence[int], args: Sequence[RationalQ], qparam: RationalQ) -> RationalQ:
    """det(prod_{k < nu_j + n - j} (x_i - qparam^k)) / prod_{i<j} (x_i - x_j)."""
    n = len(args)
    nu = Partition(nu).padded(n)
    args = [RationalQ.coerce(a) for a in args]
    qparam = RationalQ.coerce(qparam)
    vander = ONE
    for i in range(n):
        for j in range(i + 1, n):
            diff = args[i] - args[j]
            if diff.is_zero():
                raise ZeroDivisionError("repeated arguments")
            vander = vander * diff
    rows = []
    for x in args:
        row = []
        for j in range(n):
            entry = ONE
            for k in range(nu[j] + n - (j + 1)):
                entry = entry * (x - qparam ** k)
            row.append(entry)
        rows.append(row)
    return det(QMatrix.from_rows(rows)) / vander


def phi_eigen(lam: Sequence[int], r: int, n: int) -> RationalQ:
    """Eigenvalue scalar of the size-r Capelli operator on the lam-isotypic part."""
    lam = Partition(lam).padded(n)
    if not 0 <= r <= n:
        raise ValueError("r out of range")
    if r == 0:
        return ONE
    q2 = Q * Q
    args = [laurent_monomial(2 * (lam[i] + n - 1 - i)) for i in range(n)]
    pre = laurent_monomial(r - r * r - 2 * r * (n - r)) / (ONE - q2) ** r
    if r % 2:
        pre = -pre
    return pre * qfact_schur(column(r), args, q2)


def schur_sum_sides(mu: Sequence[int], n: int):
    """Both sides of the column-sum identity at x_i = q^{mu_i}."""
    mu = Partition(mu).padded(n)
    xs = [laurent_monomial(m) for m in mu]
    shifted = [laurent_monomial(n - 1 - i) * xs[i] for i in range(n)]
    lhs = ZERO
    for r in range(n + 1):
        lhs = lhs + laurent_monomial(-comb(r, 2) - r * (n - r)) * qfact_schur(column(r), shifted, Q)
    rhs = ONE
    for x in xs:
        rhs = rhs * x
    return lhs, rhs


def schur_sum_identity_check(mu: Sequence[int], n: int) -> bool:
    lhs, rhs = schur_sum_sides(mu, n)
    return lhs == rhs


def column_binomial(n: int, r: int) -> RationalQ:
    """Closed form q^{-r(n-r)} prod_{i<r} (q^{n-i} - 1) / (q^{i+1} - 1)."""
    out = laurent_monomial(-r * (n - r))
    for i in range(r):
        out = out * (laurent_monomial(n - i) - ONE) / (laurent_monomial(i + 1) - ONE)
    return out


def column_binomial_from_schur(n: int, r: int) -> RationalQ:
    """The same coefficient as P*(q^(1^n)) / P*(q^(1^r)) for the column of height r.

    P*_nu(x) = q^{(1-n)|nu|} s_nu(q^{n-1} x_1, ..., x_n; q); the common power of
    q cancels in the ratio.
    """
    def at(mu):
        xs = [laurent_monomial(mu[i] + n - 1 - i) for i in range(n)]
        return qfact_schur(column(r), xs, Q)

    return at(column(n).padded(n)) / at(column(r).padded(n))


def recombined_coefficient(n: int, r: int) -> RationalQ:
    """Binomial times q^{-C(r,2)} (q^r-1)...(q-1) / ((q^n-1)...(q^{n-r+1}-1))."""
    out = column_binomial(n, r) * laurent_monomial(-comb(r, 2))
    for i in range(r):
        out = out * (laurent_monomial(i + 1) - ONE) / (laurent_monomial(n - i) - ONE)
    return out


def weyl_dim(lam: Sequence[int], k: int) -> int:
    """Classical dimension of the gl_k module of highest weight lam."""
    lam = Partition(lam).padded(k)
    num = Fraction(1)
    for i in range(k):
        for j in range(i + 1, k):
            num *= Fraction(lam[i] - lam[j] + j - i, j - i)
    return int(num)


def invariant_dimension(k: int, l: int, n: int, r: int) -> int:
    d = min(k, l, n)
    return sum(weyl_dim(lam, k) * weyl_dim(lam, l) for lam in partitions(r, d))
