"""
Lost detector events and witness thresholds
===========================================

With detection efficiency eta the measured witness value must fall below
C0 (1 - 1/eta) rather than below zero. Nonlinear corrections raise that
bound, so lower efficiencies still certify detection.
"""

import numpy as np

from nonabsep import critical_eta_linear, critical_eta_nonlinear, identity_coeff, linear_witness, wup
from nonabsep.presets import werner_specs

w = linear_witness(werner_specs(0.352)[0])
print(f"C0 = {identity_coeff(w):.4f}, lowest eigenvalue {np.linalg.eigvalsh(w)[0]:.5f}")
print(f"linear witness needs eta >= {critical_eta_linear(w):.5f}")

# 2x4 witness with the effective Schmidt weight 1/2
c0, s_eff = 1 / 8, 1 / 2
for x in (0.2, 0.4, 0.6):
    print(f"x_nl = {x}: eta >= {critical_eta_nonlinear(c0, s_eff, x):.4f}")

print("\n x_nl  " + "  ".join(f"{'eta=' + str(e):>9s}" for e in (0.275, 0.424, 0.7, 1.0)))
for x in np.linspace(0, 0.8, 5):
    print(f"{x:5.2f}  " + "  ".join(f"{wup(c0, e, s_eff, x):+9.4f}" for e in (0.275, 0.424, 0.7, 1.0)))
