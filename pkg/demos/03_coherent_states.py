"""k-fermionic coherent states, their overlaps and the generalized Pauli principle.

|g^(m)| is 1 while m < k and vanishes once m reaches k: at most k - 1 quanta
can be stacked in one k-fermionic mode.
"""
import numpy as np

from kfsusy.coherent import (coherence_factor, fractional_supercoherent, resolution_matrix,
                             overlap_check, vourdas_decomposition_check)

for k in (2, 3, 4):
    print(overlap_check(k).format_table())
    print("resolution of identity:\n", np.round(resolution_matrix(k), 12).real)
    print("|g^(m)| for m = 1..k+1:", [round(coherence_factor(k, m), 12) for m in range(1, k + 2)])
    print()

state = fractional_supercoherent(0.5 + 0.2j, 3, 16)
print("|z, theta) components at r = 1:", [str(state[(1, s)]) for s in range(3)])
print(vourdas_decomposition_check(0.5 + 0.2j, 3, 16).format_table())
