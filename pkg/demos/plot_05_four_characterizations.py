"""
Four ways to say abelian
========================

Abelian-ness of J can be read off the bracket, the eigenspaces of J in the
complexification, the adjoint map or the coadjoint map.  They always agree,
including after a random change of basis.
"""

import random

from abelcx import catalog
from abelcx.lie import change_basis
from abelcx.linalg import Matrix
from abelcx.structures import key_characterizations

rng = random.Random(0)


def random_invertible(n):
    while True:
        P = Matrix([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])
        if P.det() != 0:
            return P


for cid in ("S9", "RxH1", "aff-upper2"):
    e = catalog.entry(cid)
    g, J = e.algebra, e.structures["J"]
    print(cid, key_characterizations(g, J))
    P = random_invertible(g.dim)
    print("  after conjugation", key_characterizations(change_basis(g, P), P @ J @ P.inverse()))
