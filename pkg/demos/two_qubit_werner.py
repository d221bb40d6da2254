"""
Two-qubit Werner states outside the absolutely separable set
============================================================

A generalized Werner state stays separable under every global unitary up to
p = 1/3, but is only entangled above p = 1/2. A fixed entangling unitary
followed by a linear or nonlinear witness certifies the window in between.
"""

import numpy as np

from nonabsep import classify, gen_werner, u_2q
from nonabsep.presets import WERNER_ALPHA, werner_specs
from nonabsep.witness import detection_threshold, make_functional

# the three regions along the mixing parameter
for p in (0.2, 0.4, 0.7):
    cls, report = classify(gen_werner(p, WERNER_ALPHA))
    print(f"p = {p:.2f}: {cls.value:12s} margin {report.margin_2xn:+.4f}  min PT eigenvalue {report.min_pt_eig:+.4f}")

# witness built from cos(theta)|01> + sin(theta)|10> after conjugation by u_2q
family = lambda p: gen_werner(p, WERNER_ALPHA)  # noqa: E731
base, f1_01, f1_10, f2 = werner_specs()
print("\nzero crossings for theta = 0.352:")
for name, kind, spec in [("linear", "linear", base), ("F1 |01>", "F1", f1_01), ("F1 |10>", "F1", f1_10), ("F2", "F2", f2)]:
    print(f"  {name:8s} p* = {detection_threshold(family, make_functional(kind, spec)):.5f}")

# with theta = pi/4 the witness is the best one for this unitary
print(f"\nbest reachable threshold 1/(1+sqrt3) = {1 / (1 + np.sqrt(3)):.5f}")
print(f"u_2q is unitary: {np.allclose(u_2q().matrix @ u_2q().adjoint, np.eye(4))}")
