"""Shared value types, tolerances and exceptions."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

# Numerical tolerances used across the package.
TOL_EIG = 1e-10
TOL_HERM = 1e-10
TOL_PSD = 1e-10
TOL_TRACE = 1e-10
TOL_NORM = 1e-12
TOL_SIGN = 1e-10

SUPPORTED_DIMS = frozenset({(2, 2), (2, 4), (3, 3)})


class DimensionError(ValueError):
    """Operands have incompatible or unsupported dimensions."""


class InvariantError(ValueError):
    """A value violates a structural invariant (Hermiticity, trace, positivity...).

    ``quantity`` names the violated quantity and ``value`` holds its offending size.
    """

    def __init__(self, message: str, quantity: str = "", value: float = float("nan")):
        super().__init__(message)
        self.quantity = quantity
        self.value = value


class NotHermitianError(InvariantError):
    pass


class NoNegativeEigenvalue(ValueError):
    """The conjugated, partially transposed state is PSD: nothing to witness."""


class NoSignChange(ValueError):
    pass


class NoRoot(ValueError):
    pass


class PSDWitnessError(ValueError):
    """A witness without negative eigenvalues cannot detect anything."""


@dataclass(frozen=True)
class Dims:
    """Bipartite split ``dA x dB`` of a Hilbert space of dimension ``dA * dB``."""

    dA: int
    dB: int

    def __post_init__(self):
        if int(self.dA) != self.dA or int(self.dB) != self.dB or self.dA < 1 or self.dB < 1:
            raise DimensionError(f"invalid bipartite dims ({self.dA}, {self.dB})")

    @property
    def total(self) -> int:
        return self.dA * self.dB

    @property
    def supported(self) -> bool:
        return (self.dA, self.dB) in SUPPORTED_DIMS

    def check(self, n: int) -> None:
        if n != self.total:
            raise DimensionError(f"object of dimension {n} does not match dims {self.dA}x{self.dB}")


def as_dims(dims) -> Dims:
    if isinstance(dims, Dims):
        return dims
    dA, dB = dims
    return Dims(int(dA), int(dB))


def hermiticity_error(m: np.ndarray) -> float:
    return float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0


@dataclass(frozen=True, eq=False)
class Ket:
    """Unit-norm pure state on a bipartite space."""

    amplitudes: np.ndarray
    dims: Dims

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        object.__setattr__(self, "amplitudes", amp)
        object.__setattr__(self, "dims", as_dims(self.dims))
        self.dims.check(amp.size)
        norm = np.linalg.norm(amp)
        if abs(norm - 1.0) > TOL_NORM:
            raise InvariantError(f"ket norm is {norm!r}, expected 1", "norm", float(norm))

    @classmethod
    def normalized(cls, amplitudes, dims) -> "Ket":
        amp = np.asarray(amplitudes, dtype=complex).reshape(-1)
        return cls(amp / np.linalg.norm(amp), dims)

    @classmethod
    def basis(cls, index: int, dims) -> "Ket":
        dims = as_dims(dims)
        amp = np.zeros(dims.total, dtype=complex)
        amp[index] = 1.0
        return cls(amp, dims)

    def projector(self) -> np.ndarray:
        return np.outer(self.amplitudes, self.amplitudes.conj())


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """Dense density matrix tagged with its bipartite split.

    The constructor only checks shapes; call :meth:`validate` (or build with
    :meth:`from_matrix`) to enforce Hermiticity, unit trace and positivity.
    """

    matrix: np.ndarray
    dims: Dims

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dims", as_dims(self.dims))
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionError(f"density matrix must be square, got shape {m.shape}")
        self.dims.check(m.shape[0])

    @classmethod
    def from_matrix(cls, matrix, dims) -> "DensityOperator":
        rho = cls(matrix, dims)
        rho.validate()
        return rho

    def validate(self) -> "DensityOperator":
        from .linalg import eigvals_descending

        m = self.matrix
        herm = hermiticity_error(m)
        if herm > TOL_HERM:
            i, j = np.unravel_index(np.argmax(np.abs(m - m.conj().T)), m.shape)
            raise NotHermitianError(
                f"matrix is not Hermitian: max |m - m^dagger| = {herm:.3e} at entry ({i}, {j})",
                "hermiticity",
                herm,
            )
        tr = np.trace(m).real
        if abs(tr - 1.0) > TOL_TRACE:
            raise InvariantError(f"trace is {tr!r}, expected 1", "trace", float(tr))
        lmin = eigvals_descending(m)[-1]
        if lmin < -TOL_PSD:
            raise InvariantError(
                f"matrix is not positive semidefinite: min eigenvalue {lmin:.3e}", "min_eigenvalue", float(lmin)
            )
        return self


@dataclass(frozen=True, eq=False)
class UnitaryOperator:
    matrix: np.ndarray = field()

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        object.__setattr__(self, "matrix", m)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionError(f"unitary must be square, got shape {m.shape}")
        err = float(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))))
        if err > TOL_HERM:
            raise InvariantError(f"operator is not unitary: max |U^dagger U - I| = {err:.3e}", "unitarity", err)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def adjoint(self) -> np.ndarray:
        return self.matrix.conj().T

    def conjugate(self, m: np.ndarray) -> np.ndarray:
        """Return ``U m U^dagger``."""
        return self.matrix @ m @ self.matrix.conj().T
