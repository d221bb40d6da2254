"""State and unitary families.

Basis ordering is the computational product basis ``|i>_A (x) |j>_B`` with
flat index ``i * dB + j``; every explicit matrix below is written in it.
"""

from __future__ import annotations

import numpy as np

from .core import DensityOperator, DimensionError, Dims, UnitaryOperator

SIGMA_I = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

DIMS_2X2 = Dims(2, 2)
DIMS_2X4 = Dims(2, 4)
DIMS_3X3 = Dims(3, 3)


def _check_range(name: str, value: float, lo: float, hi: float) -> None:
    if not lo <= value <= hi:
        raise ValueError(f"{name}={value!r} outside [{lo}, {hi}]")


def maximally_mixed(dims) -> DensityOperator:
    d = Dims(*dims) if not isinstance(dims, Dims) else dims
    return DensityOperator(np.eye(d.total, dtype=complex) / d.total, d)


def white_noise_mix(rho: DensityOperator, p: float) -> DensityOperator:
    """``p * rho + (1 - p) * I / d``."""
    _check_range("p", p, 0.0, 1.0)
    d = rho.dims.total
    return DensityOperator(p * rho.matrix + (1.0 - p) / d * np.eye(d), rho.dims)


def gen_werner(p: float, alpha: float, phase: float = 0.0) -> DensityOperator:
    """Two-qubit generalized Werner state ``p|xi><xi| + (1-p) I/4``.

    ``|xi> = cos(alpha)|00> + exp(i phase) sin(alpha)|11>``.
    """
    _check_range("p", p, 0.0, 1.0)
    xi = np.zeros(4, dtype=complex)
    xi[0] = np.cos(alpha)
    xi[3] = np.exp(1j * phase) * np.sin(alpha)
    m = p * np.outer(xi, xi.conj()) + (1.0 - p) / 4.0 * np.eye(4)
    return DensityOperator(m, DIMS_2X2)


def horodecki_2x4(b: float) -> DensityOperator:
    """Horodecki's 2x4 PPT entangled family, ``b`` in [0, 1] (separable at 0 and 1)."""
    _check_range("b", b, 0.0, 1.0)
    m = np.zeros((8, 8))
    for i in range(3):
        m[i, i] = m[i + 5, i + 5] = b
        m[i, i + 5] = m[i + 5, i] = b
    m[3, 3] = b
    m[4, 4] = m[7, 7] = (1.0 + b) / 2.0
    m[4, 7] = m[7, 4] = np.sqrt(1.0 - b * b) / 2.0
    return DensityOperator(m / (7.0 * b + 1.0), DIMS_2X4)


def rho2(b: float, p: float) -> DensityOperator:
    """:func:`horodecki_2x4` mixed with white noise."""
    return white_noise_mix(horodecki_2x4(b), p)


def _basis9(i: int, j: int) -> np.ndarray:
    v = np.zeros(9, dtype=complex)
    v[3 * i + j] = 1.0
    return v


def horodecki_3x3(b: float) -> DensityOperator:
    """Two-qutrit family ``2/7 |psi><psi| + b/7 sigma_+ + (5-b)/7 sigma_-``, PPT for 1 <= b <= 4."""
    _check_range("b", b, 1.0, 4.0)
    psi = (_basis9(0, 0) + _basis9(1, 1) + _basis9(2, 2)) / np.sqrt(3.0)
    sigma_plus = np.diag([0, 1, 0, 0, 0, 1, 1, 0, 0]).astype(complex) / 3.0  # |01>,|12>,|20>
    sigma_minus = np.diag([0, 0, 1, 1, 0, 0, 0, 1, 0]).astype(complex) / 3.0  # |02>,|10>,|21>
    m = 2.0 / 7.0 * np.outer(psi, psi.conj()) + b / 7.0 * sigma_plus + (5.0 - b) / 7.0 * sigma_minus
    return DensityOperator(m, DIMS_3X3)


def rho3(b: float, p: float) -> DensityOperator:
    return white_noise_mix(horodecki_3x3(b), p)


def u_2q() -> UnitaryOperator:
    """Two-qubit unitary mixing ``|00>`` and ``|11>``."""
    r = np.sqrt(2.0)
    m = np.array(
        [
            [1, 0, 0, 1],
            [0, r, 0, 0],
            [0, 0, r, 0],
            [-1, 0, 0, 1],
        ],
        dtype=complex,
    )
    return UnitaryOperator(m / r)


def pauli_coefficients(phi1: float, phi2: float) -> tuple[float, float, float]:
    return (np.cos(phi1), np.sin(phi1) * np.sin(phi2), np.sin(phi1) * np.cos(phi2))


def _pauli_sum(phi1: float, phi2: float) -> np.ndarray:
    a1, a2, a3 = pauli_coefficients(phi1, phi2)

    def k3(x, y, z):
        return np.kron(np.kron(x, y), z)

    return (
        a1 * k3(SIGMA_X, SIGMA_Y, SIGMA_Z)
        + a2 * k3(SIGMA_Y, SIGMA_Z, SIGMA_X)
        + a3 * k3(SIGMA_Z, SIGMA_X, SIGMA_Y)
    )


def u_pauli_2x4(phi1: float, phi2: float) -> UnitaryOperator:
    """Unit-vector combination of three mutually anticommuting Pauli strings.

    The strings each square to the identity and pairwise anticommute, so any
    real unit-norm combination is unitary.
    """
    return UnitaryOperator(_pauli_sum(phi1, phi2))


def u_pauli_3x3(phi1: float, phi2: float) -> UnitaryOperator:
    """:func:`u_pauli_2x4` acting on the first eight basis states, identity on ``|22>``."""
    m = np.zeros((9, 9), dtype=complex)
    m[:8, :8] = _pauli_sum(phi1, phi2)
    m[8, 8] = 1.0
    return UnitaryOperator(m)


def u_appendix(dim: int) -> UnitaryOperator:
    """Rotation in the plane of the first and last basis vectors, identity elsewhere."""
    if dim not in (8, 9):
        raise DimensionError(f"u_appendix is defined for dim 8 or 9, got {dim}")
    s = 1.0 / np.sqrt(2.0)
    m = np.eye(dim, dtype=complex)
    m[0, 0] = m[0, -1] = m[-1, -1] = s
    m[-1, 0] = -s
    return UnitaryOperator(m)


def identity_unitary(dim: int) -> UnitaryOperator:
    return UnitaryOperator(np.eye(dim, dtype=complex))


def conjugate_state(rho: DensityOperator, u: UnitaryOperator) -> DensityOperator:
    """``U rho U^dagger`` with the same bipartite split."""
    if u.dim != rho.dims.total:
        raise DimensionError(f"unitary of dim {u.dim} cannot act on a {rho.dims.total}-dim state")
    return DensityOperator(u.conjugate(rho.matrix), rho.dims)
