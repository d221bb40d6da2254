"""
Two-qutrit PPT entangled family
===============================

For 3x3 states the absolute-PPT test reduces to two 3x3 determinants built
from the spectrum. The Pauli-string unitary padded with the identity on |22>
makes the noisy family NPPT above a b-dependent mixing threshold.
"""

import numpy as np

from nonabsep import classify, rho3
from nonabsep.presets import rho3_specs
from nonabsep.scan import scan_boundary
from nonabsep.states import u_appendix, u_pauli_3x3
from nonabsep.witness import detection_threshold, make_functional

for p in (0.3, 0.6, 0.9):
    cls, report = classify(rho3(1.5, p))
    print(f"p = {p}: {cls.value:12s} det1 {report.det1_3xn:+.3e}  det2 {report.det2_3xn:+.3e}")

family = lambda p: rho3(1.5, p)  # noqa: E731
stored, base, f1, f2 = rho3_specs()
print(f"\nlinear (stored phi)  p* = {detection_threshold(family, make_functional('linear', stored)):.5f}")
for kind, spec in [("linear", base), ("F1", f1), ("F2", f2)]:
    print(f"{kind:6s} (phi')      p* = {detection_threshold(family, make_functional(kind, spec)):.5f}")

u = u_pauli_3x3(np.pi / 18, 5 * np.pi / 6)
print("\n   b     p_abs   p_nppt(U) p_nppt(U1)")
for row in scan_boundary("rho3", np.linspace(1, 4, 7), u, u_appendix(9)):
    cells = [f"{x:.4f}" if x is not None else "  -   " for x in (row.p_abs, row.p_nppt_u, row.p_nppt_u1)]
    print(f"{row.b:5.2f}  " + "   ".join(cells))
