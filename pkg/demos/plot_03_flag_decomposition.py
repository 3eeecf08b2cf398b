"""
Decomposing an algebra with an abelian structure
================================================

Peel off J-stable ideals one at a time.  Each block comes with an
associative algebra A and a verified map onto aff(A).
"""

from abelcx import catalog
from abelcx.decomposition import flag_decomposition

for cid in ("S10", "RxH2", "family-1-1", "family-2-1"):
    e = catalog.entry(cid)
    flag = flag_decomposition(e.algebra, e.structures["J"])
    print(f"{cid}: {flag.length} step(s), derived length {flag.derived_length}")
    for k, st in enumerate(flag.steps, 1):
        c = st.certificate
        failed = [name for name, ok in c.checks.items() if not ok]
        print(f"  step {k}: ideal dim {st.ideal.dim}, dim A {c.A.dim}, "
              f"dim kernel {c.kernel.dim}, failed checks {failed or 'none'}")
