"""Linear and nonlinear witnesses for states that are not absolutely PPT.

A linear witness is ``W = U^dagger (|phi><phi|)^{T_B} U``. The nonlinear
functionals subtract quadratic terms built from the operators
``M = U^dagger (|phi><psi|)^{T_B} U``:

* F1 subtracts ``<M><M^dagger> / S(psi)`` for a single ``psi``;
* F2 subtracts the sum of ``<M_i><M_i^dagger>`` over an orthonormal basis ``psi_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .core import (
    TOL_SIGN,
    DensityOperator,
    DimensionError,
    InvariantError,
    Ket,
    NoNegativeEigenvalue,
    UnitaryOperator,
)
from .linalg import expectation, min_eigpair, partial_transpose, schmidt_values
from .roots import bisect


@dataclass(frozen=True, eq=False)
class WitnessSpec:
    unitary: UnitaryOperator
    phi: Ket

    def __post_init__(self):
        if self.unitary.dim != self.phi.dims.total:
            raise DimensionError(f"unitary dim {self.unitary.dim} does not match phi dim {self.phi.dims.total}")

    @property
    def dims(self):
        return self.phi.dims


@dataclass(frozen=True, eq=False)
class NonlinearSpec:
    """A :class:`WitnessSpec` plus either ``psi`` (F1) or a complete orthonormal ``basis`` (F2)."""

    base: WitnessSpec
    psi: Optional[Ket] = None
    basis: Optional[tuple] = None

    def __post_init__(self):
        if (self.psi is None) == (self.basis is None):
            raise ValueError("give exactly one of psi (F1) or basis (F2)")
        d = self.base.dims.total
        if self.psi is not None and self.psi.dims.total != d:
            raise DimensionError("psi dimension does not match the witness")
        if self.basis is not None:
            basis = tuple(self.basis)
            object.__setattr__(self, "basis", basis)
            check_orthonormal_basis(basis, d)

    @property
    def mode(self) -> str:
        return "F1" if self.psi is not None else "F2"


def check_orthonormal_basis(basis: Sequence[Ket], d: int, tol: float = 1e-10) -> None:
    if len(basis) != d:
        raise InvariantError(f"basis has {len(basis)} vectors, a complete basis needs {d}", "basis_size", len(basis))
    vecs = np.column_stack([k.amplitudes for k in basis])
    if vecs.shape[0] != d:
        raise DimensionError("basis vectors have the wrong dimension")
    err = float(np.max(np.abs(vecs.conj().T @ vecs - np.eye(d))))
    if err > tol:
        raise InvariantError(f"basis is not orthonormal: max |G - I| = {err:.3e}", "gram", err)


def computational_basis(dims, phase: complex = 1.0) -> tuple[Ket, ...]:
    """``phase * |k>`` for every product basis state; ``|phase|`` must be 1."""
    from .core import as_dims

    dims = as_dims(dims)
    out = []
    for k in range(dims.total):
        amp = np.zeros(dims.total, dtype=complex)
        amp[k] = phase
        out.append(Ket(amp, dims))
    return tuple(out)


def bell_basis() -> tuple[Ket, ...]:
    r = 1.0 / np.sqrt(2.0)
    vecs = [[r, 0, 0, r], [r, 0, 0, -r], [0, r, r, 0], [0, r, -r, 0]]
    return tuple(Ket(np.array(v, dtype=complex), (2, 2)) for v in vecs)


def optimal_phi(rho: DensityOperator, u: UnitaryOperator) -> Ket:
    """Eigenvector of the most negative eigenvalue of ``(U rho U^dagger)^{T_B}``.

    Raises :class:`NoNegativeEigenvalue` when that operator is PSD, i.e. the
    unitary does not take ``rho`` outside the PPT set.
    """
    if u.dim != rho.dims.total:
        raise DimensionError(f"unitary of dim {u.dim} cannot act on a {rho.dims.total}-dim state")
    lmin, vec = min_eigpair(partial_transpose(u.conjugate(rho.matrix), rho.dims))
    if lmin >= -TOL_SIGN:
        raise NoNegativeEigenvalue(f"(U rho U^dagger)^T_B is PSD (min eigenvalue {lmin:.3e})")
    return Ket(vec / np.linalg.norm(vec), rho.dims)


def linear_witness(spec: WitnessSpec) -> np.ndarray:
    u = spec.unitary.matrix
    return u.conj().T @ partial_transpose(spec.phi.projector(), spec.dims) @ u


def x_operator(spec: WitnessSpec, psi: Ket) -> np.ndarray:
    """``U^dagger (|phi><psi|)^{T_B} U``; not Hermitian in general."""
    u = spec.unitary.matrix
    x = np.outer(spec.phi.amplitudes, psi.amplitudes.conj())
    return u.conj().T @ partial_transpose(x, spec.dims) @ u


def schmidt_weight(psi: Ket) -> float:
    """Square of the largest Schmidt coefficient of ``psi``."""
    return float(schmidt_values(psi)[0] ** 2)


def _quadratic_term(m: np.ndarray, rho: DensityOperator) -> float:
    e = expectation(m, rho)
    e_dag = expectation(m.conj().T, rho)
    prod = e * e_dag
    if abs(prod.imag) > 1e-12 or prod.real < -1e-12:
        raise InvariantError(f"<M><M^dagger> = {prod} is not real nonnegative", "quadratic_term", abs(prod.imag))
    return float(prod.real)


def eval_linear(spec: WitnessSpec, rho: DensityOperator) -> float:
    return expectation(linear_witness(spec), rho).real


def eval_F1(spec: NonlinearSpec, rho: DensityOperator) -> float:
    if spec.psi is None:
        raise ValueError("eval_F1 needs an F1 spec (single psi)")
    lin = eval_linear(spec.base, rho)
    return lin - _quadratic_term(x_operator(spec.base, spec.psi), rho) / schmidt_weight(spec.psi)


def eval_F2(spec: NonlinearSpec, rho: DensityOperator) -> float:
    if spec.basis is None:
        raise ValueError("eval_F2 needs an F2 spec (orthonormal basis)")
    lin = eval_linear(spec.base, rho)
    return lin - sum(_quadratic_term(x_operator(spec.base, k), rho) for k in spec.basis)


def f2_via_identity(spec: WitnessSpec, rho: DensityOperator) -> float:
    """Basis-free form of F2: ``<phi|tau|phi> - ||tau phi||^2`` with ``tau = (U rho U^dagger)^{T_B}``."""
    tau = partial_transpose(spec.unitary.conjugate(rho.matrix), spec.dims)
    phi = spec.phi.amplitudes
    t_phi = tau @ phi
    return float((phi.conj() @ t_phi).real - np.vdot(t_phi, t_phi).real)


def make_functional(kind: str, spec) -> Callable[[DensityOperator], float]:
    """Callable ``rho -> value`` with the witness matrices computed once.

    ``kind`` is ``"linear"``, ``"F1"`` or ``"F2"``; ``spec`` is a
    :class:`WitnessSpec` for the linear case and a :class:`NonlinearSpec` otherwise.
    """
    if kind == "linear":
        base = spec.base if isinstance(spec, NonlinearSpec) else spec
        w = linear_witness(base)
        return lambda rho: expectation(w, rho).real
    if not isinstance(spec, NonlinearSpec):
        raise TypeError(f"{kind} needs a NonlinearSpec")
    w = linear_witness(spec.base)
    if kind == "F1":
        if spec.psi is None:
            raise ValueError("F1 needs psi")
        ms = [x_operator(spec.base, spec.psi)]
        weight = 1.0 / schmidt_weight(spec.psi)
    elif kind == "F2":
        if spec.basis is None:
            raise ValueError("F2 needs a basis")
        ms = [x_operator(spec.base, k) for k in spec.basis]
        weight = 1.0
    else:
        raise ValueError(f"unknown functional {kind!r}")

    def value(rho: DensityOperator) -> float:
        return expectation(w, rho).real - weight * sum(_quadratic_term(m, rho) for m in ms)

    return value


def detection_threshold(
    family: Callable[[float], DensityOperator],
    functional: Callable[[DensityOperator], float],
    bracket: tuple[float, float] = (0.0, 1.0),
    ftol: float = 1e-9,
) -> float:
    """Parameter value where ``functional(family(p))`` changes sign inside ``bracket``.

    Raises :class:`~nonabsep.core.NoSignChange` when the bracket ends share a sign.
    """
    lo, hi = bracket
    return bisect(lambda p: functional(family(p)), lo, hi, ftol=ftol)
