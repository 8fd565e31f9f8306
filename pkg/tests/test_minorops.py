import pytest

from qweyl.expr import evaluate, parse
from qweyl.minorops import (D_kr, D_opr, D_r, cartan_image, inversions, polarization, qminor_d,
                            qminor_t)
from qweyl.paction import act
from qweyl.qfield import ONE, Q
from qweyl.weyl import AlgebraSpec, WeylElement, embed, t_monomials


def el(text, m, n):
    return evaluate(parse(text), AlgebraSpec(m, n))


S2 = AlgebraSpec(2, 2)


def test_inversions():
    assert inversions((1, 2, 3)) == 0
    assert inversions((3, 2, 1)) == 3
    assert inversions((2, 1, 3)) == 1


def test_minor_examples():
    assert qminor_t((1, 2), (1, 2), S2) == el("t[1,1]*t[2,2] - q*t[2,1]*t[1,2]", 2, 2)
    assert qminor_t((2,), (1,), S2) == el("t[2,1]", 2, 2)
    assert qminor_d((1, 2), (1, 2), S2) == el("d[1,1]*d[2,2] - q^-1*d[2,1]*d[1,2]", 2, 2)
    assert qminor_d((1,), (2,), S2) == el("d[1,2]", 2, 2)


def test_three_by_three_minor_has_six_terms():
    spec = AlgebraSpec(3, 3)
    want = ("t[1,1]*t[2,2]*t[3,3] - q*t[2,1]*t[1,2]*t[3,3] - q*t[1,1]*t[3,2]*t[2,3]"
            " + q^2*t[2,1]*t[3,2]*t[1,3] + q^2*t[3,1]*t[1,2]*t[2,3] - q^3*t[3,1]*t[2,2]*t[1,3]")
    assert qminor_t((1, 2, 3), (1, 2, 3), spec) == evaluate(parse(want), spec)


def test_minor_annihilation():
    assert act(qminor_d((1, 2), (1, 2), S2), el("t[2,1]*t[2,2]", 2, 2)).is_zero()


def test_capelli_operator_examples():
    assert D_opr(0, 2, 3) == WeylElement.one(AlgebraSpec(2, 3))
    assert D_opr(1, 1, 1) == el("t[1,1]*d[1,1]", 1, 1)
    assert D_opr(1, 2, 2) == el("t[1,1]*d[1,1] + t[1,2]*d[1,2] + t[2,1]*d[2,1] + t[2,2]*d[2,2]", 2, 2)
    assert D_opr(3, 2, 2).is_zero()


def test_corner_capelli_operators():
    for m, n in ((2, 3), (3, 2)):
        assert D_kr(1, 0, m, n) == WeylElement.one(AlgebraSpec(m, n))
        assert D_kr(1, 0, m, n, primed=True) == WeylElement.one(AlgebraSpec(m, n))
        row = " + ".join(f"t[{m},{j}]*d[{m},{j}]" for j in range(1, n + 1))
        assert D_kr(1, 1, m, n, primed=True) == el(row, m, n)
        assert D_kr(1, 2, m, n).is_zero()
        assert D_kr(n, 1, m, n) == embed(D_opr(1, m, n), AlgebraSpec(m, n))
    with pytest.raises(ValueError):
        D_kr(4, 1, 2, 3)


def test_capelli_r_is_both_constructions():
    for m in (1, 2, 3):
        for n in (1, 2, 3):
            for r in range(4):
                assert D_r(r, m, n) == D_kr(n, r, m, n) == D_kr(m, r, m, n, primed=True)


def test_left_cartan_image():
    L1 = cartan_image(1, "Left", 2, 2)
    assert L1 == el("1 + (q^2-1)*(t[2,1]*d[2,1] + t[2,2]*d[2,2])", 2, 2)
    assert act(L1, el("t[2,1]", 2, 2)) == el("q^2*t[2,1]", 2, 2)
    assert act(L1, el("t[1,1]", 2, 2)) == el("t[1,1]", 2, 2)


def test_full_cartan_sum_scales_by_degree():
    Rn = cartan_image(2, "Right", 2, 2)
    for d in range(3):
        for mono in t_monomials(S2, d):
            f = WeylElement(S2, {mono: ONE})
            assert act(Rn, f) == f.scale(Q ** (2 * d))


def test_polarization_examples():
    assert polarization(1, 1, "Left", AlgebraSpec(1, 2)) == el("t[1,1]*d[1,1] + t[1,2]*d[1,2]", 1, 2)
    assert polarization(1, 2, "Right", S2) == el("t[1,1]*d[1,2] + t[2,1]*d[2,2]", 2, 2)
    for m, n in ((2, 2), (3, 2)):
        row = " + ".join(f"t[{m},{r}]*d[{m},{r}]" for r in range(1, n + 1))
        assert polarization(1, 1, "Left", AlgebraSpec(m, n), tilde=True) == el(row, m, n)
    with pytest.raises(ValueError):
        polarization(3, 1, "Left", S2)


@pytest.mark.parametrize("m,n", [(1, 2), (2, 2), (2, 3), (3, 3)])
def test_left_and_right_polarizations_commute(m, n):
    spec = AlgebraSpec(m, n)
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            L = polarization(i, j, "Left", spec)
            for k in range(1, n + 1):
                for l in range(1, n + 1):
                    R = polarization(k, l, "Right", spec)
                    assert (L * R - R * L).is_zero()
