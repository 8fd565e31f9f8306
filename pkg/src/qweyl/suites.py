"""Verification suites: named batches of exact checks with a report format.

Each suite takes the sizes (m, n, k, l), a degree bound and a seed, and
returns a list of checks.  Sampled checks draw from ``random.Random(seed)``,
so a report depends only on its parameters.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import product
from math import comb
from typing import Callable

from . import howe
from .minorops import D_kr, D_opr, cartan_image, polarization, qminor_d
from .paction import (act, act_by_product, action_matrix, faithfulness_witness, row_closed_form,
                      row_power_d, row_power_t)
from .qfield import ONE, ZERO, Q, eval_matrix_poly, laurent_monomial
from .schur import (column_binomial, column_binomial_from_schur, invariant_dimension, partitions,
                    phi_eigen, qfact_schur, recombined_coefficient, schur_sum_identity_check,
                    weyl_dim)
from .uqact import (LEFT, RIGHT, UGen, act_gen, act_Klambda, act_word, coproduct_terms,
                    invariant_basis, klambda_word, lambda_left, lambda_right)
from .weyl import (FILTERED, GRADED, AlgebraSpec, D, T, WeylElement, format_element,
                   from_second_basis, normal_form, t_monomials, to_second_basis, transpose)


class SuiteError(ValueError):
    """Unknown suite or parameters outside the supported range."""


@dataclass
class Params:
    m: int
    n: int
    k: int | None = None
    l: int | None = None
    max_deg: int | None = None
    seed: int = 0


@dataclass
class Check:
    id: str
    status: str
    witness: str | None = None


@dataclass
class SuiteReport:
    suite: str
    params: Params
    checks: list = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def to_json_dict(self) -> dict:
        p = self.params
        return {
            "suite": self.suite,
            "params": {"m": p.m, "n": p.n, "k": p.k, "l": p.l, "max_deg": p.max_deg, "seed": p.seed},
            "checks": [{"id": c.id, "status": c.status, "witness": c.witness} for c in self.checks],
            "elapsed_ms": self.elapsed_ms,
        }

    def to_text(self) -> str:
        p = self.params
        head = (f"suite {self.suite} (m={p.m} n={p.n} k={_dash(p.k)} l={_dash(p.l)} "
                f"max_deg={p.max_deg} seed={p.seed})")
        lines = [head]
        for c in self.checks:
            if c.status == "pass":
                lines.append(f"PASS {c.id}")
            else:
                lines.append(f"FAIL {c.id}: {c.witness}")
        good = sum(c.status == "pass" for c in self.checks)
        lines.append(f"{good}/{len(self.checks)} checks passed")
        return "\n".join(lines) + "\n"


def _dash(x):
    return "-" if x is None else x


class _Collector:
    def __init__(self):
        self.checks = []

    def add(self, cid: str, failures: list):
        """Record a check; ``failures`` holds witness strings, empty on success."""
        if failures:
            extra = f" (+{len(failures) - 1} more)" if len(failures) > 1 else ""
            self.checks.append(Check(cid, "fail", failures[0] + extra))
        else:
            self.checks.append(Check(cid, "pass", None))

    def expect(self, cid: str, ok: bool, witness: str):
        self.add(cid, [] if ok else [witness])


def _bound(cond: bool, msg: str):
    if not cond:
        raise SuiteError(msg)


def _word_text(word) -> str:
    return "*".join(str(g) for g in word) or "1"


def _mono_el(spec, mono):
    return WeylElement(spec, {mono: ONE})


def _all_monomials(spec, max_deg):
    return [m for d in range(max_deg + 1) for m in t_monomials(spec, d)]


def _random_word(rng, spec, length):
    gens = _generators(spec)
    return [rng.choice(gens) for _ in range(length)]


def _generators(spec):
    return ([T(i, j) for i in range(1, spec.m + 1) for j in range(1, spec.n + 1)]
            + [D(i, j) for i in range(1, spec.m + 1) for j in range(1, spec.n + 1)])


def _random_element(rng, spec, tdeg, ddeg, terms=3):
    out = WeylElement.zero(spec)
    for _ in range(terms):
        word = ([rng.choice(_generators(spec)[:spec.size]) for _ in range(rng.randint(0, tdeg))]
                + [rng.choice(_generators(spec)[spec.size:]) for _ in range(rng.randint(0, ddeg))])
        coef = laurent_monomial(rng.randint(-2, 2)) * rng.randint(1, 3)
        out = out + WeylElement.from_word(word, spec).scale(coef)
    return out


def _ugens(spec, side):
    size = spec.n if side == RIGHT else spec.m
    out = [UGen(side, "E", i) for i in range(1, size)] + [UGen(side, "F", i) for i in range(1, size)]
    out += [UGen(side, kind, i) for i in range(1, size + 1) for kind in ("Kplus", "Kminus")]
    return out


# ---------------------------------------------------------------------------
# suites

def _pbw_confluence(p: Params, rng, out: _Collector):
    spec = AlgebraSpec(p.m, p.n)
    gens = _generators(spec)
    _bound(len(gens) ** p.max_deg <= 20000, "too many words for an exhaustive pass; lower max_deg")
    for length in range(p.max_deg + 1):
        bad = []
        for word in product(gens, repeat=length):
            a = normal_form(word, spec, "leftmost")
            if a != normal_form(word, spec, "rightmost") or a != WeylElement.from_word(word, spec):
                bad.append(_word_text(word))
        out.add(f"exhaustive-length-{length}", bad)
    for variant, count in ((FILTERED, 500), (GRADED, 100)):
        vspec = spec.with_variant(variant)
        bad = []
        for _ in range(count):
            word = _random_word(rng, vspec, rng.randint(0, 5))
            a = normal_form(word, vspec, "leftmost")
            if a != normal_form(word, vspec, "rightmost") or a != WeylElement.from_word(word, vspec):
                bad.append(_word_text(word))
        out.add(f"random-words-{variant}", bad)
    bad = []
    for _ in range(50):
        word = _random_word(rng, spec, rng.randint(0, 4))
        x = WeylElement.from_word(word, spec)
        if from_second_basis(to_second_basis(x), spec) != x:
            bad.append(_word_text(word))
    out.add("second-basis-roundtrip", bad)


def _pbw_dimension(p: Params, rng, out: _Collector):
    spec = AlgebraSpec(p.m, p.n)
    _bound(p.max_deg <= 8, "max_deg must be at most 8")
    size = spec.size
    for d in range(p.max_deg + 1):
        got = len(t_monomials(spec, d))
        want = comb(size + d - 1, d)
        out.expect(f"t-count-degree-{d}", got == want, f"{got} monomials, expected {want}")
    tgens = _generators(spec)[:size]
    for d in range(min(p.max_deg, 3) + 1):
        basis = {m for m in t_monomials(spec, d)}
        seen = set()
        for word in product(tgens, repeat=d):
            seen |= set(WeylElement.from_word(word, spec).terms)
        out.expect(f"t-closure-degree-{d}", seen == basis,
                   f"{len(seen)} monomials reached, basis has {len(basis)}")


def _action_laws(p: Params, rng, out: _Collector):
    spec = AlgebraSpec(p.m, p.n)
    _bound(spec.size <= 6 and p.max_deg <= 3, "action-laws supports m*n <= 6 and max_deg <= 3")
    bad = []
    for _ in range(30):
        Dop = _random_element(rng, spec, 2, 2)
        f = _random_element(rng, spec, p.max_deg, 0)
        if act(Dop, f) != act_by_product(Dop, f):
            bad.append(f"D={format_element(Dop)}; f={format_element(f)}")
    out.add("act-equals-product-projection", bad)

    for side in (LEFT, RIGHT):
        for g in _ugens(spec, side):
            bad = []
            for _ in range(8):
                a = _random_element(rng, spec, 1, 1, 2)
                b = _random_element(rng, spec, 1, 1, 2)
                lhs = act_gen(g, a * b)
                rhs = WeylElement.zero(spec)
                for lw, rw in coproduct_terms(g):
                    rhs = rhs + act_word(lw, a) * act_word(rw, b)
                if lhs != rhs:
                    bad.append(f"a={format_element(a)}; b={format_element(b)}")
            out.add(f"module-algebra[{g}]", bad)

    for side in (LEFT, RIGHT):
        size = spec.n if side == RIGHT else spec.m
        bad = []
        for f in (m for d in range(1, p.max_deg + 1) for m in t_monomials(spec, d)):
            x = _mono_el(spec, f)
            for i in range(1, size):
                for j in range(1, size):
                    ef = act_word([UGen(side, "E", i), UGen(side, "F", j)], x)
                    fe = act_word([UGen(side, "F", j), UGen(side, "E", i)], x)
                    want = WeylElement.zero(spec)
                    if i == j:
                        kk = act_word([UGen(side, "Kplus", i), UGen(side, "Kminus", i + 1)], x)
                        ki = act_word([UGen(side, "Kminus", i), UGen(side, "Kplus", i + 1)], x)
                        want = (kk - ki).scale(ONE / (Q - Q.inverse()))
                    if ef - fe != want:
                        bad.append(f"[E{i},F{j}] on {format_element(x)}")
                for j in range(1, size + 1):
                    e = laurent_monomial(int(j == i) - int(j == i + 1))
                    lhs = act_word([UGen(side, "Kplus", j), UGen(side, "E", i), UGen(side, "Kminus", j)], x)
                    if lhs != act_gen(UGen(side, "E", i), x).scale(e):
                        bad.append(f"K{j} E{i} K{j}^-1 on {format_element(x)}")
        out.add(f"quantum-group-relations-{side.lower()}", bad)

    for side in (LEFT, RIGHT):
        bad = []
        for g in _ugens(spec, side):
            for _ in range(3):
                Dop = _random_element(rng, spec, 1, 1, 2)
                f = _random_element(rng, spec, 2, 0, 2)
                lhs = act_gen(g, act(Dop, f))
                rhs = WeylElement.zero(spec)
                for lw, rw in coproduct_terms(g):
                    rhs = rhs + act(act_word(lw, Dop), act_word(rw, f))
                if lhs != rhs:
                    bad.append(f"{g}; D={format_element(Dop)}; f={format_element(f)}")
        out.add(f"action-equivariance-{side.lower()}", bad)

    bad = []
    for a in product(range(3), repeat=spec.n):
        for b in product(range(3), repeat=spec.n):
            lhs = act(row_power_d(spec, b), row_power_t(spec, a))
            if any(bi > ai for ai, bi in zip(a, b)):
                ok = lhs.is_zero()
            else:
                rest = row_power_t(spec, [x - y for x, y in zip(a, b)])
                ok = lhs == rest.scale(row_closed_form(a, b))
            if not ok:
                bad.append(f"a={a}; b={b}")
    out.add("single-row-closed-form", bad)

    bad = []
    for _ in range(20):
        Dop = _random_element(rng, spec, 2, 2)
        if Dop.is_zero():
            continue
        f, _guided = faithfulness_witness(Dop)
        if f is None or act(Dop, f).is_zero():
            bad.append(f"D={format_element(Dop)}")
    out.add("faithfulness-witness", bad)


def _thmA(p: Params, rng, out: _Collector):
    _bound(p.m <= 4 and p.n <= 4, "thmA-commutation supports m, n <= 4")
    spec = AlgebraSpec(p.m, p.n)
    Ls = {(i, j): polarization(i, j, LEFT, spec) for i in range(1, p.m + 1) for j in range(1, p.m + 1)}
    Rs = {(k, l): polarization(k, l, RIGHT, spec) for k in range(1, p.n + 1) for l in range(1, p.n + 1)}
    for (i, j), L in Ls.items():
        for (k, l), R in Rs.items():
            diff = L * R - R * L
            out.expect(f"commute[L{i},{j};R{k},{l}]", diff.is_zero(), format_element(diff))


def _polarization_invariance(p: Params, rng, out: _Collector):
    _bound(p.n <= 3 and p.m <= 3, "polarization-invariance supports m, n <= 3")
    k, l = p.k, p.l
    _bound(1 <= k <= p.n and 1 <= l <= p.n, "k and l must lie in 1..n")
    gspec = AlgebraSpec(p.n, p.n, GRADED)
    for i in range(1, k + 1):
        for j in range(1, l + 1):
            x = polarization(i, j, LEFT, gspec, tilde=True)
            bad = []
            for g in _ugens(gspec, RIGHT):
                y = act_gen(g, x)
                want = x if g.kind in ("Kplus", "Kminus") else WeylElement.zero(gspec)
                if y != want:
                    bad.append(f"{g} gives {format_element(y)}")
            out.add(f"right-invariant[Lgr{i},{j}]", bad)
    spec = AlgebraSpec(p.m, p.n)
    R = {(i, j): polarization(i, j, RIGHT, spec) for i in range(1, p.n + 1) for j in range(1, p.n + 1)}
    for i in range(1, p.n + 1):
        for j in range(1, p.n):
            if i != j:
                y = act_gen(UGen(RIGHT, "E", j), R[i, j + 1])
                out.expect(f"orbit-E{j}[R{i},{j + 1}]", y == R[i, j], format_element(y))
    for i in range(1, p.n):
        for j in range(1, p.n + 1):
            if i != j:
                y = act_gen(UGen(RIGHT, "F", i), R[i + 1, j])
                out.expect(f"orbit-F{i}[R{i + 1},{j}]", y == R[i, j].scale(-Q), format_element(y))
        y = act_gen(UGen(RIGHT, "F", i), R[i + 1, i])
        want = R[i, i].scale(-Q) + R[i + 1, i + 1].scale(Q.inverse())
        out.expect(f"orbit-F{i}[R{i + 1},{i}]", y == want, format_element(y))


def _cartan(p: Params, rng, out: _Collector):
    _bound(p.m <= 3 and p.n <= 3 and p.max_deg <= 4, "cartan-formulas supports m, n <= 3, max_deg <= 4")
    spec = AlgebraSpec(p.m, p.n)
    monos = _all_monomials(spec, p.max_deg)
    for a in range(1, p.m + 1):
        op = cartan_image(p.m - a + 1, LEFT, p.m, p.n)
        lam = lambda_left(a, p.m)
        bad = [format_element(_mono_el(spec, f)) for f in monos
               if act(op, _mono_el(spec, f)) != act_Klambda(lam, LEFT, _mono_el(spec, f))]
        out.add(f"left-cartan[a={a}]", bad)
    for b in range(1, p.n + 1):
        op = cartan_image(p.n - b + 1, RIGHT, p.m, p.n)
        lam = lambda_right(b, p.n)
        bad = [format_element(_mono_el(spec, f)) for f in monos
               if act(op, _mono_el(spec, f)) != act_Klambda(lam, RIGHT, _mono_el(spec, f))]
        out.add(f"right-cartan[b={b}]", bad)
    bad = []
    for f in monos[:30]:
        x = _mono_el(spec, f)
        for side, lam in ((LEFT, lambda_left(1, p.m)), (RIGHT, lambda_right(1, p.n))):
            if act_Klambda(lam, side, x) != act_word(klambda_word(lam, side), x):
                bad.append(f"{side}: {format_element(x)}")
    out.add("klambda-diagonal-vs-word", bad)
    out.add("scalar-sum", scalar_sum_failures(p.m, p.n, p.max_deg))
    one = AlgebraSpec(1, 1)
    op = WeylElement.one(one) + (WeylElement.t(1, 1, one) * WeylElement.d(1, 1, one)).scale(Q * Q - ONE)
    bad = []
    for d in range(7):
        f = WeylElement.t(1, 1, one) ** d
        if act(op, f) != f.scale(laurent_monomial(2 * d)):
            bad.append(f"d={d}")
    out.add("one-by-one-identity", bad)


def scalar_sum_failures(m: int, n: int, max_deg: int) -> list:
    """Monomials f where sum_r (q^2-1)^r act(D_r, f) differs from q^(2 deg f) f."""
    spec = AlgebraSpec(m, n)
    total = WeylElement.zero(spec)
    for r in range(min(m, n) + 1):
        total = total + D_kr(n, r, m, n).scale((Q * Q - ONE) ** r)
    bad = []
    for f in _all_monomials(spec, max_deg):
        x = _mono_el(spec, f)
        if act(total, x) != x.scale(laurent_monomial(2 * sum(f[0]))):
            bad.append(format_element(x))
    return bad


def _capelli(p: Params, rng, out: _Collector):
    _bound(p.m <= 3 and p.n <= 3, "capelli-annihilator supports m, n <= 3")
    spec = AlgebraSpec(p.m, p.n)
    _bound(len(t_monomials(spec, p.max_deg)) <= 100, "degree space too large; lower max_deg")
    low = min(p.m, p.n)
    for r in range(1, low + 1):
        op = D_opr(r, p.m, p.n)
        for d in range(p.max_deg + 1):
            roots = [phi_eigen(lam, r, low) for lam in partitions(d, low)]
            ok = eval_matrix_poly(action_matrix(op, d), roots).is_zero()
            out.expect(f"annihilator[r={r},d={d}]", ok, "product of shifted matrices is nonzero")
    if p.m == 2 and p.n == 2:
        x = WeylElement.t(2, 1, spec) * WeylElement.t(2, 2, spec)
        y = act(qminor_d((1, 2), (1, 2), spec), x)
        out.expect("minor-annihilation", y.is_zero(), format_element(y))


def _schur(p: Params, rng, out: _Collector):
    _bound(p.n <= 4 and p.max_deg <= 6, "schur-identity supports n <= 4, max_deg <= 6")
    x1, x2 = laurent_monomial(3), laurent_monomial(5) + ONE
    ok = (qfact_schur((1,), [x1, x2], Q) == x1 + x2 - ONE - Q
          and qfact_schur((1,), [x1], Q) == x1 - ONE
          and qfact_schur((), [x1, x2], Q) == ONE)
    out.expect("factorial-schur-examples", ok, "small determinant ratios differ")
    for n in range(1, p.n + 1):
        mus = [mu for s in range(p.max_deg + 1) for mu in partitions(s, n)]
        out.add(f"summation-identity[n={n}]",
                [str(tuple(mu)) for mu in mus if not schur_sum_identity_check(mu, n)])
        bad = []
        for lam in mus:
            total = sum(((Q * Q - ONE) ** r * phi_eigen(lam, r, n) for r in range(n + 1)),
                        start=ZERO)
            if total != laurent_monomial(2 * sum(lam)):
                bad.append(str(tuple(lam)))
        out.add(f"eigenvalue-sum[n={n}]", bad)
        bad = []
        for r in range(n + 1):
            if column_binomial(n, r) != column_binomial_from_schur(n, r):
                bad.append(f"closed form r={r}")
            if recombined_coefficient(n, r) != laurent_monomial(-comb(r, 2) - r * (n - r)):
                bad.append(f"recombination r={r}")
        out.add(f"column-binomial[n={n}]", bad)
    bad = []
    for a in range(1, max(p.m, 1) + 1):
        for b in range(1, p.n + 1):
            for r in range(6):
                low = min(a, b)
                got = sum(weyl_dim(lam, a) * weyl_dim(lam, b) for lam in partitions(r, low))
                if got != comb(a * b + r - 1, r):
                    bad.append(f"m={a} n={b} r={r}")
    out.add("cauchy-dimensions", bad)
    bad = []
    for d in range(1, p.max_deg + 1):
        want = sum((laurent_monomial(2 * i) for i in range(d)), start=ZERO)
        if phi_eigen((d,), 1, 1) != want:
            bad.append(f"d={d}")
    out.add("single-variable-eigenvalue", bad)


def _gamma(p: Params, rng, out: _Collector):
    n = p.n
    _bound(n <= 3, "gamma-homomorphism supports n <= 3")
    _bound(1 <= p.k <= n and 1 <= p.l <= n, "k and l must lie in 1..n")
    _bound(n <= 2 or p.max_deg <= 1, "n = 3 supports max_deg <= 1")
    big = AlgebraSpec(n, n)
    small = AlgebraSpec(p.k, p.l)
    monos = _all_monomials(big, p.max_deg + 1)
    out.add("left-inverse", [format_element(_mono_el(big, f)) for f in monos
                             if howe.counit_right(howe.gamma_n(_mono_el(big, f))) != _mono_el(big, f)])
    gspec = AlgebraSpec(n, n, GRADED)
    bad = []
    for i in range(1, p.k + 1):
        for j in range(1, p.l + 1):
            got = howe.gamma_kln(WeylElement.t(i, j, small), n)
            if got != polarization(p.k - i + 1, p.l - j + 1, LEFT, gspec, tilde=True):
                bad.append(f"t[{i},{j}]")
    out.add("generators-to-polarizations", bad)
    smonos = _all_monomials(small, p.max_deg)
    images = {f: howe.gamma_kln(_mono_el(small, f), n) for f in smonos}
    bad = []
    for f, g in images.items():
        for u in _ugens(gspec, RIGHT):
            want = g if u.kind in ("Kplus", "Kminus") else WeylElement.zero(gspec)
            if act_gen(u, g) != want:
                bad.append(f"{u} on image of {format_element(_mono_el(small, f))}")
    out.add("image-right-invariant", bad)
    hom, deg, unit = [], [], []
    one = WeylElement.one(small)
    for f in smonos:
        u = _mono_el(small, f)
        if howe.star(one, u, n) != u or howe.star(u, one, n) != u:
            unit.append(format_element(u))
        for g in smonos:
            v = _mono_el(small, g)
            w = howe.star(u, v, n)
            if howe.gamma_kln(w, n) != images[f] * images[g]:
                hom.append(f"u={format_element(u)}; v={format_element(v)}")
            total = sum(f[0]) + sum(g[0])
            if any(sum(mono[0]) != total for mono in w.terms):
                deg.append(f"u={format_element(u)}; v={format_element(v)}")
    out.add("star-unit", unit)
    out.add("gamma-homomorphism", hom)
    out.add("degree-additivity", deg)
    bad = []
    bmonos = _all_monomials(big, 1)
    for f in bmonos:
        for g in bmonos:
            u, v = _mono_el(big, f), _mono_el(big, g)
            if howe.multiply_legs(howe.upsilon(u, v)) != howe.star_n(u, v):
                bad.append(f"u={format_element(u)}; v={format_element(v)}")
    out.add("star-is-multiplied-upsilon", bad)
    for r, s in ((0, 1), (1, 0), (1, 1)):
        rk, size = howe.upsilon_rank(n, r, s)
        out.expect(f"upsilon-bijective[{r},{s}]", rk == size, f"rank {rk} of {size}")
    bad = []
    pool = [(tm, dm[0]) for d in range(3) for tm, _ in t_monomials(gspec, d)
            for dm in t_monomials(gspec, d)]
    for _ in range(40):
        a, b = rng.choice(pool), rng.choice(pool)
        x, y = WeylElement(gspec, {a: ONE}), WeylElement(gspec, {b: ONE})
        top = (sum(a[0]) + sum(b[0]), sum(a[1]) + sum(b[1]))
        for tm, dm in howe.filtration_defect(x, y).terms:
            drop = top[0] - sum(tm)
            if drop < 1 or top[1] - sum(dm) != drop:
                bad.append(f"x={format_element(x)}; y={format_element(y)}")
                break
    out.add("filtration-defect", bad)
    bad = [str(m) for d in range(3) for m in
           ((tm, dm[0]) for tm, _ in t_monomials(gspec, d) for dm in t_monomials(gspec, d))
           if howe.p_map(WeylElement(gspec, {m: ONE})).terms != {m: ONE}]
    out.add("p-map-basis", bad)


def _thmC(p: Params, rng, out: _Collector):
    n = p.n
    _bound(n <= 3 and p.max_deg <= 2, "thmC-generation supports n <= 3 and max_deg <= 2")
    _bound(1 <= p.k <= n and 1 <= p.l <= n, "k and l must lie in 1..n")
    for r in range(p.max_deg + 1):
        inv = invariant_basis(p.k, p.l, n, r)
        want = invariant_dimension(p.k, p.l, n, r)
        out.expect(f"invariant-dimension[r={r}]", len(inv) == want, f"{len(inv)} vs {want}")
        prods = howe.polarization_products(p.k, p.l, n, r)
        span = howe.span_rank(prods)
        out.expect(f"polarization-span[r={r}]", span == want, f"{span} vs {want}")
        joint = howe.span_rank(prods + inv)
        out.expect(f"span-inside-invariants[r={r}]", joint == want, f"joint rank {joint}")


def _eta(p: Params, rng, out: _Collector):
    _bound(p.m <= 3 and p.n <= 3 and p.max_deg <= 3, "eta-symmetry supports m, n, max_deg <= 3")
    spec = AlgebraSpec(p.m, p.n)
    gens = [WeylElement.gen(g, spec) for g in _generators(spec)]
    pairs = [a * b for a in gens for b in gens]
    out.add("involution", [format_element(x) for x in gens + pairs if transpose(transpose(x)) != x])
    bad = []
    for a in gens:
        for b in gens:
            if transpose(a * b) != transpose(a) * transpose(b):
                bad.append(f"{format_element(a)} * {format_element(b)}")
    for _ in range(20):
        a = _random_element(rng, spec, 2, 1, 2)
        b = _random_element(rng, spec, 1, 2, 2)
        if transpose(a * b) != transpose(a) * transpose(b):
            bad.append(f"{format_element(a)} * {format_element(b)}")
    out.add("multiplicative", bad)
    for side, other in ((LEFT, RIGHT), (RIGHT, LEFT)):
        bad = []
        for g in _ugens(spec, side):
            g2 = UGen(other, g.kind, g.index)
            for x in gens + pairs:
                if transpose(act_gen(g, x)) != act_gen(g2, transpose(x)):
                    bad.append(f"{g} on {format_element(x)}")
        out.add(f"intertwines-{side.lower()}-to-{other.lower()}", bad)
    for r in range(p.max_deg + 1):
        a = D_kr(p.n, r, p.m, p.n)
        b = D_kr(p.m, r, p.m, p.n, primed=True)
        out.expect(f"capelli-two-constructions[r={r}]", a == b, "column and row versions differ")


def _rtt(p: Params, rng, out: _Collector):
    n = p.n
    _bound(n <= 3 and p.max_deg <= 3, "rtt-pairing supports n <= 3 and max_deg <= 3")
    spec = AlgebraSpec(n, n)
    dd = lambda i, j: WeylElement.d(i, j, spec)
    bad = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            want = Q if i == j else ONE
            if howe.rpair(dd(i, i), dd(j, j)) != want:
                bad.append(f"<d[{i},{i}],d[{j},{j}]>")
            if i < j and howe.rpair(dd(i, j), dd(j, i)) != Q - Q.inverse():
                bad.append(f"<d[{i},{j}],d[{j},{i}]>")
    out.add("base-values", bad)
    bad = []
    for a, b, c, d in product(range(1, n + 1), repeat=4):
        lhs, rhs = howe.rtt_sides(a, b, c, d, n)
        if lhs != rhs:
            bad.append(f"f=d[{a},{b}] g=d[{c},{d}]")
    out.add("rtt-generators", bad)

    def rand_word(top):
        return tuple((rng.randint(1, n), rng.randint(1, n)) for _ in range(rng.randint(0, top)))

    bad = []
    for _ in range(30):
        f, g = rand_word(2), rand_word(2)
        lhs, rhs = howe.rtt_word_sides(f, g, n)
        if lhs != rhs:
            bad.append(f"f={f} g={g}")
    out.add("rtt-words", bad)
    bad = []
    for _ in range(200):
        f, g = rand_word(p.max_deg), rand_word(p.max_deg)
        if howe.rpair_words(f, g, n, "left") != howe.rpair_words(f, g, n, "right"):
            bad.append(f"f={f} g={g}")
    out.add("recursion-order-independence", bad)
    bad = []
    for _ in range(50):
        f, g = rand_word(p.max_deg), rand_word(p.max_deg)
        fe = WeylElement.from_word([D(i, j) for i, j in f], spec)
        ge = WeylElement.from_word([D(i, j) for i, j in g], spec)
        if howe.rpair(fe, ge) != howe.rpair_words(f, g, n):
            bad.append(f"f={f} g={g}")
    out.add("respects-relations", bad)
    bad = []
    for kind in ("P", "D"):
        for d in range(p.max_deg + 1):
            for mono in t_monomials(spec, d)[:12]:
                x = _mono_el(spec, mono if kind == "P" else (mono[1], mono[0]))
                cop = howe.coproduct(x, kind)
                if howe.counit_right(cop) != x or howe.counit_left(cop) != x:
                    bad.append(f"counit on {format_element(x)}")
                if not _coassociative(x, kind):
                    bad.append(f"coassociativity on {format_element(x)}")
    out.add("bialgebra-laws", bad)
    if n >= 2:
        y = howe.iota(WeylElement.t(1, 1, spec) * WeylElement.t(1, 2, spec))
        out.expect("iota-anti-homomorphism", y == dd(2, 1) * dd(1, 1), format_element(y))


def _coassociative(x, kind) -> bool:
    spec = x.spec
    first = howe.coproduct(x, kind)
    left, right = {}, {}
    for (a, b), c in first.terms.items():
        for (a1, a2), c1 in howe.coproduct(_mono_el(spec, howe._mono(a, kind, spec.size)), kind).terms.items():
            key = (a1, a2, b)
            left[key] = left.get(key, ZERO) + c * c1
        for (b1, b2), c1 in howe.coproduct(_mono_el(spec, howe._mono(b, kind, spec.size)), kind).terms.items():
            key = (a, b1, b2)
            right[key] = right.get(key, ZERO) + c * c1
    clean = lambda d: {k: v for k, v in d.items() if v}
    return clean(left) == clean(right)


@dataclass(frozen=True)
class Suite:
    run: Callable
    default_max_deg: int
    uses_kl: bool
    summary: str


SUITES = {
    "pbw-confluence": Suite(_pbw_confluence, 3, False,
                            "two rewriting strategies and the product engine agree on words"),
    "pbw-dimension": Suite(_pbw_dimension, 6, False, "monomial counts match binomial coefficients"),
    "action-laws": Suite(_action_laws, 2, False,
                         "module action, module-algebra law and quantum group relations"),
    "thmA-commutation": Suite(_thmA, 2, False, "left and right polarizations commute"),
    "polarization-invariance": Suite(_polarization_invariance, 1, True,
                                     "graded corner polarizations are right-invariant; orbit relations"),
    "cartan-formulas": Suite(_cartan, 3, False,
                             "alternating Capelli sums act as diagonal K-weights"),
    "capelli-annihilator": Suite(_capelli, 3, False,
                                 "eigenvalue scalars annihilate the Capelli operators"),
    "schur-identity": Suite(_schur, 4, False, "factorial Schur summation and eigenvalue identities"),
    "gamma-homomorphism": Suite(_gamma, 2, True, "Gamma turns the deformed product into composition"),
    "thmC-generation": Suite(_thmC, 2, True, "invariants are spanned by polarization products"),
    "eta-symmetry": Suite(_eta, 3, False, "the transpose map swaps the two quantum group sides"),
    "rtt-pairing": Suite(_rtt, 3, False, "R-matrix pairing recursion and RTT relations"),
}


def resolve_params(name: str, params: Params) -> Params:
    if name not in SUITES:
        raise SuiteError(f"unknown suite {name!r}")
    suite = SUITES[name]
    if params.m < 1 or params.n < 1:
        raise SuiteError("m and n must be at least 1")
    max_deg = suite.default_max_deg if params.max_deg is None else params.max_deg
    if max_deg < 0:
        raise SuiteError("max_deg must be non-negative")
    k = l = None
    if suite.uses_kl:
        k = params.n if params.k is None else params.k
        l = params.n if params.l is None else params.l
    return Params(params.m, params.n, k, l, max_deg, params.seed)


def run_suite(name: str, params: Params) -> SuiteReport:
    """Run a named suite; raises SuiteError for unknown names or unsupported sizes."""
    params = resolve_params(name, params)
    start = time.perf_counter()
    out = _Collector()
    SUITES[name].run(params, random.Random(params.seed), out)
    elapsed = round((time.perf_counter() - start) * 1000.0, 3)
    return SuiteReport(name, params, out.checks, elapsed)
