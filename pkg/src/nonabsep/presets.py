"""Witness vectors and parameter choices for the worked examples.

The 3x3 vectors are stored in the ``SIGMA_Y = [[0, -i], [i, 0]]`` convention used
by :mod:`nonabsep.states`; in the opposite sign convention every amplitude is
complex conjugated.
"""

from __future__ import annotations

import numpy as np

from .core import Ket
from .linalg import hyperspherical_ket
from .states import DIMS_2X2, DIMS_2X4, DIMS_3X3, u_2q, u_pauli_2x4, u_pauli_3x3
from .witness import NonlinearSpec, WitnessSpec, computational_basis

WERNER_ALPHA = np.pi / 12
WERNER_THETA = 0.352

RHO2_B = 0.7
RHO2_PAULI_ANGLES = (np.pi / 3, np.pi)
# best linear witness vector for rho2 at b = 0.7 (5 digits)
RHO2_PHI = np.array([-0.13348, 0.67743, -0.09738, 0.02271, 0.00333, 0.04054, -0.71427, 0.03788])
RHO2_PHI_ANGLES = (2.07345, 2.36710, 1.5128, 1.508, 1.5382, 1.7109, 0.19455)

RHO3_B = 1.5
RHO3_PAULI_ANGLES = (np.pi / 18, 5 * np.pi / 6)
RHO3_PHI = np.conj(
    np.array(
        [
            -0.4476 - 0.004054j,
            -0.0103 - 0.009966j,
            -0.001158 + 0.3953j,
            0.02944 - 0.04832j,
            0.0003527 - 0.001285j,
            -0.05052 + 0.01027j,
            0.000449 - 0.3918j,
            -0.0478 - 0.03061j,
            0.6933,
        ]
    )
)
RHO3_P_COEFFS = (-0.564882, 0.471498, 0.373546, 0.0)


def rho3_phi_prime(p1: float, p2: float, p3: float, p4: float) -> np.ndarray:
    """:data:`RHO3_PHI` with the first and last amplitudes replaced by ``p1 + i p2`` and ``p3 + i p4``."""
    v = RHO3_PHI.copy()
    v[0] = np.conj(p1 + 1j * p2)
    v[-1] = np.conj(p3 + 1j * p4)
    return v


def werner_phi(theta: float) -> Ket:
    """``cos(theta)|01> + sin(theta)|10>``."""
    return Ket(np.array([0.0, np.cos(theta), np.sin(theta), 0.0], dtype=complex), DIMS_2X2)


def werner_specs(theta: float = WERNER_THETA):
    """(linear, F1 with psi=|01>, F1 with psi=|10>, F2 computational) specs for the two-qubit example."""
    base = WitnessSpec(u_2q(), werner_phi(theta))
    return (
        base,
        NonlinearSpec(base, psi=Ket.basis(1, DIMS_2X2)),
        NonlinearSpec(base, psi=Ket.basis(2, DIMS_2X2)),
        NonlinearSpec(base, basis=computational_basis(DIMS_2X2)),
    )


def rho2_specs():
    """(linear with the stored phi, linear/F1/F2 with the angle-parametrized phi) for rho2."""
    u = u_pauli_2x4(*RHO2_PAULI_ANGLES)
    stored = WitnessSpec(u, Ket.normalized(RHO2_PHI, DIMS_2X4))
    base = WitnessSpec(u, hyperspherical_ket(RHO2_PHI_ANGLES, DIMS_2X4))
    psi = Ket.normalized([1, 0, 0, 0, 1, 0, 0, 0], DIMS_2X4)  # (|00> + |10>)/sqrt2
    return (
        stored,
        base,
        NonlinearSpec(base, psi=psi),
        NonlinearSpec(base, basis=computational_basis(DIMS_2X4)),
    )


def rho3_specs():
    """(linear with the stored phi, linear/F1/F2 with phi') for rho3."""
    u = u_pauli_3x3(*RHO3_PAULI_ANGLES)
    stored = WitnessSpec(u, Ket.normalized(RHO3_PHI, DIMS_3X3))
    base = WitnessSpec(u, Ket.normalized(rho3_phi_prime(*RHO3_P_COEFFS), DIMS_3X3))
    phase = (1 + 1j) / np.sqrt(2)
    psi = Ket.basis(8, DIMS_3X3)
    psi = Ket(psi.amplitudes * phase, DIMS_3X3)
    return (
        stored,
        base,
        NonlinearSpec(base, psi=psi),
        NonlinearSpec(base, basis=computational_basis(DIMS_3X3, phase=phase)),
    )
