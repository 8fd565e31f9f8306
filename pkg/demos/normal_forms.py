"""Normal forms in the quantized Weyl algebra.

Run with ``python demos/normal_forms.py``.  Every product of generators is
rewritten into the sorted basis: t's ascending, then d's descending.
"""

from qweyl.expr import evaluate, parse
from qweyl.weyl import FILTERED, GRADED, AlgebraSpec, D, T, format_element, normal_form


def show(src, m, n, variant=FILTERED):
    value = evaluate(parse(src), AlgebraSpec(m, n, variant))
    print(f"  {src:<24} [{m}x{n} {variant}]  =  {format_element(value)}")


print("A derivative passing a coordinate leaves a constant behind:")
show("d[1,1]*t[1,1]", 1, 1)
show("d[1,1]*t[1,1]^2", 1, 1)

print("\nThe graded variant drops the constant term:")
show("d[1,1]*t[1,1]", 1, 1, GRADED)

print("\nOff-diagonal generators pick up correction terms further down the matrix:")
show("d[1,2]*t[1,1]", 2, 2)
show("t[2,2]*t[1,1]*t[1,2]", 2, 2)

print("\nTwo rewriting orders agree on the same word:")
word = [D(1, 1), D(2, 2), T(1, 1)]
spec = AlgebraSpec(2, 2)
left = normal_form(word, spec, "leftmost")
right = normal_form(word, spec, "rightmost")
print(f"  d[1,1]*d[2,2]*t[1,1] -> {format_element(left)}")
print(f"  same under both strategies: {left == right}")
