from math import comb

import pytest
import sympy

from qweyl.qfield import ONE, Q, laurent_monomial
from qweyl.schur import (Partition, column, column_binomial, column_binomial_from_schur,
                         invariant_dimension, partitions, phi_eigen, qfact_schur, recombined_coefficient,
                         schur_sum_identity_check, schur_sum_sides, weyl_dim)

import oracle
from oracle import q as sq, ratq_to_sympy


def test_partitions_and_columns():
    assert [tuple(p) for p in partitions(3)] == [(3,), (2, 1), (1, 1, 1)]
    assert sorted(tuple(p) for p in partitions(4, 2)) == [(2, 2), (3, 1), (4,)]
    assert tuple(column(3)) == (1, 1, 1)
    assert tuple(Partition((2, 1)).padded(4)) == (2, 1, 0, 0)


def test_factorial_schur_examples():
    x1, x2 = laurent_monomial(3), laurent_monomial(5) + ONE
    assert qfact_schur((), [x1, x2], Q) == ONE
    assert qfact_schur((1,), [x1], Q) == x1 - ONE
    assert qfact_schur((1,), [x1, x2], Q) == x1 + x2 - ONE - Q


@pytest.mark.parametrize("nu,n", [((1,), 2), ((2,), 2), ((1, 1), 2), ((2, 1), 3), ((1, 1, 1), 3), ((2,), 3)])
def test_factorial_schur_matches_oracle(nu, n):
    xs = [laurent_monomial(2 * i + 1) for i in range(n)]
    got = ratq_to_sympy(qfact_schur(nu, xs, Q))
    want = oracle.factorial_schur(nu, [sq ** (2 * i + 1) for i in range(n)])
    assert sympy.simplify(got - want) == 0


def test_eigenvalue_examples():
    assert phi_eigen((2, 1), 0, 2) == ONE
    for d in range(1, 5):
        want = (Q ** (2 * d) - ONE) / (Q ** 2 - ONE)
        assert phi_eigen((d,), 1, 1) == want


@pytest.mark.parametrize("n", [1, 2, 3])
def test_eigenvalue_sum(n):
    for s in range(5):
        for lam in partitions(s, n):
            total = sum(((Q * Q - ONE) ** r * phi_eigen(lam, r, n) for r in range(n + 1)), start=0 * ONE)
            assert total == laurent_monomial(2 * s)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_summation_identity(n):
    assert schur_sum_identity_check((), n)
    for s in range(5):
        for mu in partitions(s, n):
            lhs, rhs = schur_sum_sides(mu, n)
            assert lhs == rhs
            assert schur_sum_identity_check(mu, n)


def test_column_binomial():
    for n in range(1, 4):
        for r in range(n + 1):
            assert column_binomial(n, r) == column_binomial_from_schur(n, r)
            assert recombined_coefficient(n, r) == laurent_monomial(-comb(r, 2) - r * (n - r))


def test_weyl_dim_examples():
    assert weyl_dim((1,), 2) == 2
    assert weyl_dim((2,), 2) == 3
    assert weyl_dim((1, 1), 2) == 1


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_weyl_dim_counts_tableaux(k):
    for s in range(5):
        for lam in partitions(s, k):
            assert weyl_dim(lam, k) == oracle.weyl_dimension_by_counting(lam, k)


def test_cauchy_dimensions():
    for m in range(1, 5):
        for n in range(1, 5):
            for r in range(6):
                got = sum(weyl_dim(lam, m) * weyl_dim(lam, n) for lam in partitions(r, min(m, n)))
                assert got == comb(m * n + r - 1, r)


def test_invariant_dimension_values():
    assert [invariant_dimension(1, 1, 2, r) for r in range(3)] == [1, 1, 1]
    assert [invariant_dimension(2, 2, 2, r) for r in range(3)] == [1, 4, 10]
    assert [invariant_dimension(1, 2, 2, r) for r in range(3)] == [1, 2, 3]
    assert [invariant_dimension(2, 2, 3, r) for r in range(3)] == [1, 4, 10]
