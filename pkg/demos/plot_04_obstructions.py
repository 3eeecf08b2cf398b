"""
Ruling algebras out
===================

Three tests: a codimension-one commutator, the commutant of the j_z maps on
a two-step nilpotent algebra, and a bounded search for a witness.
"""

from abelcx import catalog
from abelcx.obstructions import codim1_obstruction, free_two_step_obstruction, search_abelian_J

for cid in ("dext-R2", "dext-h1", "dext-h2"):
    rep = codim1_obstruction(catalog.entry(cid).algebra, cid)
    print(cid, rep.verdict, rep.evidence)

for n in (3, 4):
    rep = free_two_step_obstruction(n)
    print(f"free two-step rank {n}:", rep.verdict, rep.evidence)

# the search only ever reports a verified witness
for cid in ("S8", "RxH1"):
    g = catalog.entry(cid).algebra
    rep = search_abelian_J(g, 10_000, cid)
    print(cid, rep.verdict, rep.evidence)
    print(rep.witness)
