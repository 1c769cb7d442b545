"""k-fermions as k x k matrices.

At k = 2 the ladder operators are the ordinary fermion pair; as k grows the
occupation range widens and the algebra moves toward a boson.
"""
import numpy as np

from kfsusy import build_fk, verify_fk_relations

np.set_printoptions(precision=3, suppress=True)

for k in (2, 3, 4):
    fk = build_fk(k)
    print(f"k={k}: q = {fk.deformation.q:.4f}")
    print("f_- =\n", fk.f_minus.matrix)
    # the Klein operator is diagonal with the k-th roots of unity
    print("K eigenvalues:", np.diag(fk.klein().matrix))
    print(verify_fk_relations(k).format_table())
    print()
