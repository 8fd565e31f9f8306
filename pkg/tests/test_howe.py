import random
from itertools import product

import pytest

from qweyl import howe
from qweyl.expr import evaluate, parse
from qweyl.minorops import polarization
from qweyl.qfield import ONE, ZERO, Q
from qweyl.uqact import E, F, K, act_gen
from qweyl.weyl import GRADED, AlgebraSpec, WeylElement, t_monomials

QI = Q.inverse()
S2 = AlgebraSpec(2, 2)
G2 = AlgebraSpec(2, 2, GRADED)


def el(text, m=2, n=2, variant="filtered"):
    return evaluate(parse(text), AlgebraSpec(m, n, variant))


def mono(spec, m):
    return WeylElement(spec, {m: ONE})


def tensor_text(x):
    """{(left text, right text): coefficient} for readable comparisons."""
    out = {}
    for (a, b), c in x.terms.items():
        left = howe._element({a: ONE}, x.left_kind, x.n)
        right = howe._element({b: ONE}, x.right_kind, x.n)
        out[(left.to_text(), right.to_text())] = c
    return out


def test_coproduct_of_a_generator():
    got = tensor_text(howe.coproduct(el("t[1,1]")))
    assert got == {("t[1,1]", "t[1,1]"): ONE, ("t[1,2]", "t[2,1]"): ONE}
    got = tensor_text(howe.coproduct(el("d[2,1]")))
    assert got == {("d[2,1]", "d[1,1]"): ONE, ("d[2,2]", "d[2,1]"): ONE}


def test_counit():
    assert howe.counit(el("t[1,1]*t[2,2]")) == ONE
    assert howe.counit(el("t[1,2]")) == ZERO
    assert howe.counit(el("q*d[2,2]")) == Q


@pytest.mark.parametrize("kind", ["P", "D"])
def test_counit_laws(kind):
    for d in range(3):
        for m in t_monomials(S2, d):
            x = mono(S2, m if kind == "P" else (m[1], m[0]))
            cop = howe.coproduct(x, kind)
            assert howe.counit_right(cop) == x
            assert howe.counit_left(cop) == x


def test_iota_and_natural_inverse():
    assert howe.iota(el("t[1,1]*t[1,2]")) == el("d[2,1]*d[1,1]")
    assert howe.iota(el("t[1,2]")) == el("d[2,1]")
    assert howe.natural_inv(el("d[1,2]")) == el("d[2,1]")
    assert howe.natural_inv(el("d[1,1]*d[1,2]")) == el("d[1,1]*d[2,1]")
    with pytest.raises(ValueError):
        howe.iota(el("d[1,1]"))
    with pytest.raises(ValueError):
        howe.natural_inv(el("t[1,1]"))


def test_iota_is_an_anti_homomorphism():
    rng = random.Random(0)
    monos = [m for d in range(3) for m in t_monomials(S2, d)]
    for _ in range(20):
        a, b = mono(S2, rng.choice(monos)), mono(S2, rng.choice(monos))
        assert howe.iota(a * b) == howe.iota(b) * howe.iota(a)


def test_gamma_left_inverse():
    for d in range(4):
        for m in t_monomials(S2, d):
            x = mono(S2, m)
            assert howe.counit_right(howe.gamma_n(x)) == x


@pytest.mark.parametrize("k,l,n", [(2, 2, 2), (1, 2, 2), (2, 1, 3)])
def test_gamma_sends_generators_to_polarizations(k, l, n):
    small = AlgebraSpec(k, l)
    gspec = AlgebraSpec(n, n, GRADED)
    for i in range(1, k + 1):
        for j in range(1, l + 1):
            want = polarization(k - i + 1, l - j + 1, "Left", gspec, tilde=True)
            assert howe.gamma_kln(WeylElement.t(i, j, small), n) == want


def test_gamma_image_is_right_invariant():
    small = AlgebraSpec(1, 2)
    for d in range(3):
        for m in t_monomials(small, d):
            g = howe.gamma_kln(mono(small, m), 2)
            assert act_gen(E(1), g).is_zero() and act_gen(F(1), g).is_zero()
            assert act_gen(K(1), g) == g and act_gen(K(2, inverse=True), g) == g


def test_rpair_base_values():
    assert howe.rpair(el("d[1,1]"), el("d[1,1]")) == Q
    assert howe.rpair(el("d[1,1]"), el("d[2,2]")) == ONE
    assert howe.rpair(el("d[1,2]"), el("d[2,1]")) == Q - QI
    assert howe.rpair(el("d[2,1]"), el("d[1,2]")) == ZERO
    assert howe.rpair(el("1"), el("d[1,2]")) == ZERO
    assert howe.rpair(el("1"), el("d[2,2]")) == ONE


def test_rpair_recursion_orders_agree():
    rng = random.Random(1)
    for n in (2, 3):
        for _ in range(60):
            f = tuple((rng.randint(1, n), rng.randint(1, n)) for _ in range(rng.randint(0, 3)))
            g = tuple((rng.randint(1, n), rng.randint(1, n)) for _ in range(rng.randint(0, 3)))
            assert howe.rpair_words(f, g, n, "left") == howe.rpair_words(f, g, n, "right")


@pytest.mark.parametrize("n", [2, 3])
def test_rtt_relation_on_generators(n):
    for a, b, c, d in product(range(1, n + 1), repeat=4):
        lhs, rhs = howe.rtt_sides(a, b, c, d, n)
        assert lhs == rhs


def test_star_unit_and_homomorphism():
    small = AlgebraSpec(2, 2)
    one = WeylElement.one(small)
    monos = [m for d in range(2) for m in t_monomials(small, d)]
    for f in monos:
        u = mono(small, f)
        assert howe.star(one, u, 2) == u and howe.star(u, one, 2) == u
        for g in monos:
            v = mono(small, g)
            w = howe.star(u, v, 2)
            assert howe.gamma_kln(w, 2) == howe.gamma_kln(u, 2) * howe.gamma_kln(v, 2)
            assert all(sum(t) == sum(f[0]) + sum(g[0]) for t, _ in w.terms)


def test_star_in_a_one_by_two_corner():
    small = AlgebraSpec(1, 2)
    monos = [m for d in range(3) for m in t_monomials(small, d)]
    rng = random.Random(2)
    for _ in range(10):
        u, v = mono(small, rng.choice(monos)), mono(small, rng.choice(monos))
        w = howe.star(u, v, 2)
        assert howe.gamma_kln(w, 2) == howe.gamma_kln(u, 2) * howe.gamma_kln(v, 2)


def test_star_is_the_multiplied_upsilon():
    monos = [m for d in range(2) for m in t_monomials(S2, d)]
    for f in monos:
        for g in monos:
            u, v = mono(S2, f), mono(S2, g)
            assert howe.multiply_legs(howe.upsilon(u, v)) == howe.star_n(u, v)


@pytest.mark.parametrize("r,s,size", [(0, 1, 4), (1, 1, 16), (1, 2, 40), (2, 1, 40)])
def test_upsilon_rank(r, s, size):
    assert howe.upsilon_rank(2, r, s) == (size, size)


def test_p_map_examples():
    assert howe.p_map(el("t[1,1]*d[1,1]", variant=GRADED)) == el("t[1,1]*d[1,1]")
    assert howe.p_map(WeylElement.one(G2)) == WeylElement.one(S2)
    for d in range(3):
        for tm, _ in t_monomials(G2, d):
            for dm, _ in t_monomials(G2, d):
                assert howe.p_map(mono(G2, (tm, dm))).terms == {(tm, dm): ONE}


def test_filtration_defect_lowers_bidegree():
    x, y = el("d[1,1]", variant=GRADED), el("t[1,1]", variant=GRADED)
    assert howe.filtration_defect(x, y) == WeylElement.one(S2)
    rng = random.Random(3)
    pool = [(tm, dm) for d in range(3) for tm, _ in t_monomials(G2, d) for dm, _ in t_monomials(G2, d)]
    for _ in range(30):
        a, b = rng.choice(pool), rng.choice(pool)
        top_t = sum(a[0]) + sum(b[0])
        top_d = sum(a[1]) + sum(b[1])
        for tm, dm in howe.filtration_defect(mono(G2, a), mono(G2, b)).terms:
            drop = top_t - sum(tm)
            assert drop >= 1 and top_d - sum(dm) == drop


def test_polarization_products_span_invariants():
    from qweyl.schur import invariant_dimension
    from qweyl.uqact import invariant_basis
    for r in range(3):
        prods = howe.polarization_products(1, 2, 2, r)
        want = invariant_dimension(1, 2, 2, r)
        assert howe.span_rank(prods) == want
        assert howe.span_rank(prods + invariant_basis(1, 2, 2, r)) == want


def test_non_square_inputs_are_rejected():
    with pytest.raises(ValueError):
        howe.coproduct(WeylElement.t(1, 1, AlgebraSpec(1, 2)))
    with pytest.raises(ValueError):
        howe.star(WeylElement.t(1, 1, AlgebraSpec(3, 1)), WeylElement.t(1, 1, AlgebraSpec(3, 1)), 2)
