"""The Z_k-graded supersymmetric oscillator.

Ground state nondegenerate, then degeneracies 1, 2, ..., k, after which every
level is k-fold with spacing k - 1.
"""
from kfsusy import build_all, spectrum
from kfsusy.fracsusy import verify_susy, verify_weyl_heisenberg

for k in (2, 3, 4, 5):
    ops = build_all(k, 24)
    ok = verify_weyl_heisenberg(k, ops=ops).passed and verify_susy(k, ops=ops).passed
    print(f"identities hold: {ok}")
    print(spectrum(k, ops=ops).head(k + 2).format_table())
    print()
