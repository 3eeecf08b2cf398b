"""
The four-dimensional catalog
============================

Load the seven four-dimensional algebras with abelian complex structures,
check each structure and print the basic invariants.
"""

from abelcx import catalog
from abelcx.lie import center, commutator_subalgebra, nilpotency_class
from abelcx.structures import is_abelian

# each entry carries its algebra, one or more structures and the invariants
# it was built to have; construction already re-checks those invariants
for cid in ("S0", "S1", "S2", "S8", "S9", "S10", "S11"):
    e = catalog.entry(cid)
    g = e.algebra
    verdicts = {name: is_abelian(g, J) for name, J in e.structures.items()}
    print(f"{cid:4s} center {center(g).dim}  commutator {commutator_subalgebra(g).dim}  "
          f"class {nilpotency_class(g)}  abelian {verdicts}  ({e.notes})")

# brackets are exact rationals; here is aff(C) written out
g = catalog.entry("S11").algebra
for i, j, v in g.nonzero_brackets():
    print(f"[{g.basis_names[i]}, {g.basis_names[j]}] =", dict(zip(g.basis_names, map(str, v))))
