"""Right-invariants, polarizations and the Gamma map.

Run with ``python demos/howe_duality.py``.  Inside the graded 2x2 algebra the
right quantum group fixes a subspace of each (r, r) component.  Its dimension
is predicted by a sum over partitions, it is spanned by products of corner
polarizations, and Gamma carries the deformed product on polynomials to
composition of these invariant operators.
"""

from qweyl import howe
from qweyl.schur import invariant_dimension
from qweyl.uqact import invariant_basis
from qweyl.weyl import AlgebraSpec, WeylElement, format_element

for k, l, n in ((1, 1, 2), (1, 2, 2), (2, 2, 2)):
    for r in range(3):
        found = len(invariant_basis(k, l, n, r))
        span = howe.span_rank(howe.polarization_products(k, l, n, r))
        print(f"(k,l,n)=({k},{l},{n}) r={r}: invariants {found}, "
              f"predicted {invariant_dimension(k, l, n, r)}, polarization span {span}")

print("\nGamma turns the deformed product into composition:")
small = AlgebraSpec(2, 2)
u, v = WeylElement.t(1, 1, small), WeylElement.t(2, 2, small)
w = howe.star(u, v, 2)
print("  u * v (deformed) =", format_element(w))
print("  Gamma(u * v) == Gamma(u) Gamma(v):",
      howe.gamma_kln(w, 2) == howe.gamma_kln(u, 2) * howe.gamma_kln(v, 2))
print("  Gamma(t[1,1]) =", format_element(howe.gamma_kln(u, 2)))
