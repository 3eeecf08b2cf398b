"""
Lie algebras built from associative algebras
============================================

``aff(A)`` turns a commutative associative algebra into a Lie algebra with
an abelian complex structure.  A complex algebra adds a second structure.
"""

from abelcx import affine
from abelcx.lie import nilpotency_class, series
from abelcx.structures import is_abelian, is_abelian_hypercomplex, is_integrable

# upper triangular Toeplitz algebras give nilpotent aff(A) of every class
for k in range(1, 6):
    C = affine.toeplitz_algebra(k)
    g = affine.aff(C.base)
    J, K = affine.standard_J(C.base), affine.standard_K(C)
    print(f"k={k}: dim {g.dim}, class {nilpotency_class(g)}, "
          f"lower central dims {series(g, 'lower-central').dims}, hypercomplex {is_abelian_hypercomplex(g, J, K)}")

# a noncommutative A still gives an integrable J, but not an abelian one
A = affine.small_algebra("upper2")
g, J = affine.aff(A), affine.standard_J(A)
print("upper2: integrable", is_integrable(g, J), "abelian", is_abelian(g, J))

# the flat torsion-free connection and its compatibility with J
print("connection checks:", affine.connection_checks(A))
