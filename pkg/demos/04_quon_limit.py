"""Approaching the root of unity from a generic Q.

b_+- = (a_+-)^k / ([k]_Q!)^(1/2) becomes a boson and decouples from the
k-fermion as Q -> q. The residual boson commutator error grows with the
boson cutoff, so the table is shown for two cutoffs.
"""
from kfsusy.quon import limit_study

for R in (6, 24):
    for k in (2, 3, 4):
        study = limit_study(k, (1e-2, 1e-3, 1e-4, 1e-5), cutoff=R)
        print(study.format_table())
        print()
