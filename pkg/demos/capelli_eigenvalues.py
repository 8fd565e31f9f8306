"""Capelli operators acting on polynomials.

Run with ``python demos/capelli_eigenvalues.py``.  The operator D(r, 2, 2)
built from quantum minors preserves each degree; on degree d its matrix is
annihilated by the product of (M - phi) over the eigenvalue scalars phi
attached to partitions of d.
"""

from qweyl.minorops import D_opr, cartan_image
from qweyl.paction import act, action_matrix
from qweyl.qfield import eval_matrix_poly
from qweyl.schur import partitions, phi_eigen
from qweyl.uqact import klambda_row_eigenvalues
from qweyl.weyl import AlgebraSpec, WeylElement, format_element

spec = AlgebraSpec(2, 2)
f = WeylElement.t(1, 1, spec) * WeylElement.t(2, 2, spec)
print("f =", format_element(f))
for r in (1, 2):
    print(f"  D({r},2,2) . f = {format_element(act(D_opr(r, 2, 2), f))}")

print("\nEigenvalue scalars and the annihilator check:")
for r in (1, 2):
    for d in range(4):
        lams = list(partitions(d, 2))
        roots = [phi_eigen(lam, r, 2) for lam in lams]
        ok = eval_matrix_poly(action_matrix(D_opr(r, 2, 2), d), roots).is_zero()
        shown = ", ".join(f"{tuple(lam)}: {phi.to_text()}" for lam, phi in zip(lams, roots))
        print(f"  r={r} d={d} annihilated={ok}  [{shown}]")

print("\nThe full alternating sum scales a degree-d polynomial by q^(2d):")
R = cartan_image(2, "Right", 2, 2)
print(f"  R . f = {format_element(act(R, f))}")

print("\nK for the weight (1,...,1) on t[1,1]^r: the denominator degree keeps growing,")
print("so no operator of bounded degree reproduces it (reported, not proved):")
for r, c, deg in klambda_row_eigenvalues(2, 5):
    print(f"  r={r}: eigenvalue {c.to_text()}, denominator degree {deg}")
