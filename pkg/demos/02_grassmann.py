"""Braided Grassmann variables and where they stop realizing the k-fermion algebra.

theta and thetabar commute up to q^(1/2); each is nilpotent of order k. Acting
by left multiplication and left q-derivatives on the k^2-dimensional algebra,
they reproduce every k-fermion relation except the mixed derivative one,
which comes out with the phase q^(+1/2).
"""
import cmath

from kfsusy.grassmann import (GrassmannAlgebra, integrate, mixed_derivative_phase, qderiv,
                              verify_realization)

k = 3
alg = GrassmannAlgebra.two_variable(k)
th, thb = alg.gens()
print("theta thetabar          =", th * thb)
print("thetabar theta          =", thb * th)
print("theta^3                 =", th**3)
print("d_theta theta^2         =", qderiv(th**2, "theta"))
print("int dtheta theta^2      =", integrate(th**2, "theta"))

print()
print(verify_realization(k).format_table())
print()
for k in range(2, 7):
    c = mixed_derivative_phase(k)
    print(f"k={k}: d_th d_thb = c d_thb d_th with arg(c) = pi/{cmath.pi / cmath.phase(c):.0f}")
