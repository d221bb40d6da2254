"""
Noisy 2x4 bound entangled states made NPPT by a global unitary
==============================================================

Mixing Horodecki's 2x4 PPT entangled family with white noise keeps it PPT for
every (b, p). A combination of anticommuting Pauli strings takes part of the
family outside the PPT set, and the eigenvector of the negative eigenvalue of
the rotated partial transpose gives the witness.
"""

import numpy as np

from nonabsep import optimal_phi, rho2, u_pauli_2x4
from nonabsep.presets import RHO2_PHI, rho2_specs
from nonabsep.scan import scan_boundary
from nonabsep.states import u_appendix
from nonabsep.witness import detection_threshold, make_functional

u = u_pauli_2x4(np.pi / 3, np.pi)

phi = optimal_phi(rho2(0.7, 0.9), u).amplitudes.real
print("optimal phi at b=0.7, p=0.9:")
print(np.round(phi, 5))
stored = RHO2_PHI / np.linalg.norm(RHO2_PHI)
print(f"max deviation from the stored vector: {min(abs(phi - stored).max(), abs(phi + stored).max()):.1e}")

# thresholds at b = 0.7
family = lambda p: rho2(0.7, p)  # noqa: E731
stored_spec, base, f1, f2 = rho2_specs()
print(f"\nlinear (stored phi)     p* = {detection_threshold(family, make_functional('linear', stored_spec)):.5f}")
for kind, spec in [("linear", base), ("F1", f1), ("F2", f2)]:
    print(f"{kind:6s} (angle phi)      p* = {detection_threshold(family, make_functional(kind, spec)):.5f}")

# a coarse version of the boundary diagram
print("\n   b     p_abs   p_nppt(U) p_nppt(U1)")
for row in scan_boundary("rho2", np.linspace(0, 1, 6), u, u_appendix(8)):
    cells = [f"{x:.4f}" if x is not None else "  -   " for x in (row.p_abs, row.p_nppt_u, row.p_nppt_u1)]
    print(f"{row.b:5.2f}  " + "   ".join(cells))
