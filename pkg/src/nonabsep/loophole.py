"""Witness thresholds under lossy detectors.

Only lost events are modelled: ``eta`` is the probability that a detector
registers an event. Writing a witness as ``W = C0 * I + sum_a C_a S_a`` with
traceless local terms gives ``C0 = Tr(W) / d``; a measured value below
``C0 (1 - 1/eta)`` then certifies detection despite the losses.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import NoRoot, NoSignChange, PSDWitnessError
from .linalg import eigvals_descending
from .roots import smallest_root

ETA_MIN = 1e-6


@dataclass(frozen=True)
class LoopholeParams:
    """Inputs of the nonlinear detection condition.

    ``s_eff`` is the Schmidt weight dividing the nonlinear term; ``x_nl`` is the
    squared magnitude ``<H>_m^2 + <A>_m^2`` of the measured nonlinear parts.
    """

    eta_minus: float
    c0: float
    c0h: float = 0.0
    c0a: float = 0.0
    s_eff: float = 1.0
    x_nl: float = 0.0

    def __post_init__(self):
        _check_eta(self.eta_minus)
        if self.s_eff <= 0:
            raise ValueError(f"s_eff must be positive, got {self.s_eff}")
        if self.x_nl < 0:
            raise ValueError(f"x_nl must be nonnegative, got {self.x_nl}")


@dataclass(frozen=True, eq=False)
class HermAntihermSplit:
    """``M = h + i a`` with ``h`` and ``a`` both Hermitian."""

    h: np.ndarray
    a: np.ndarray


def _check_eta(eta: float) -> None:
    if not 0.0 < eta <= 1.0:
        raise ValueError(f"efficiency must lie in (0, 1], got {eta}")


def identity_coeff(w) -> float:
    """Coefficient of the identity in a local-operator expansion: ``Tr(W) / d``."""
    w = np.asarray(w)
    return float(np.trace(w).real / w.shape[0])


def herm_antiherm(m) -> HermAntihermSplit:
    m = np.asarray(m, dtype=complex)
    return HermAntihermSplit(h=(m + m.conj().T) / 2.0, a=(m - m.conj().T) / 2.0j)


def kh_ka(split: HermAntihermSplit, d: int, eta: float) -> tuple[float, float]:
    """Loss offsets ``(K_H, K_A) = (Tr(h)/d, Tr(a)/d) * (1 - 1/eta)``."""
    _check_eta(eta)
    factor = 1.0 - 1.0 / eta
    c0h = float(np.trace(split.h).real) / d
    c0a = float(np.trace(split.a).real) / d
    return c0h * factor, c0a * factor


def linear_threshold(c0: float, eta: float) -> float:
    _check_eta(eta)
    return c0 * (1.0 - 1.0 / eta)


def nonlinear_threshold(params: LoopholeParams, h_m: float, a_m: float, kh: float, ka: float) -> float:
    """Upper bound on the measured linear part for an F1-type witness with losses."""
    eta, s = params.eta_minus, params.s_eff
    return (
        linear_threshold(params.c0, eta)
        + eta / s * (h_m**2 + kh**2 - 2.0 * h_m * kh)
        + eta / s * (a_m**2 + ka**2 - 2.0 * a_m * ka)
    )


def wup(c0: float, eta: float, s_eff: float, x_nl: float) -> float:
    """Bound ``C0 (1 - 1/eta) + (eta / s_eff) x_nl`` when ``psi`` is orthogonal to ``phi``.

    Affine in ``x_nl`` with slope ``eta / s_eff``.
    """
    if s_eff <= 0:
        raise ValueError(f"s_eff must be positive, got {s_eff}")
    return linear_threshold(c0, eta) + eta / s_eff * x_nl


def critical_eta_linear(w) -> float:
    """Efficiency at which the lowest reachable ``<W>`` meets the loss threshold.

    Solves ``C0 (1 - 1/eta) = lambda_min(W)``, i.e. ``eta = C0 / (C0 - lambda_min)``.
    """
    w = np.asarray(w)
    c0 = identity_coeff(w)
    lmin = float(eigvals_descending(w)[-1])
    if lmin >= 0.0:
        raise PSDWitnessError(f"witness has no negative eigenvalue (min {lmin:.3e})")
    return c0 / (c0 - lmin)


def critical_eta_nonlinear(c0: float, s_eff: float, x_nl: float, assumed_measured: float = 0.0) -> float:
    """Smallest ``eta`` in ``(0, 1]`` with ``wup(c0, eta, s_eff, x_nl) = assumed_measured``."""

    def f(eta):
        return wup(c0, eta, s_eff, x_nl) - assumed_measured

    try:
        return smallest_root(f, ETA_MIN, 1.0, num=4001)
    except NoSignChange as exc:
        raise NoRoot(
            f"no efficiency in ({ETA_MIN}, 1] reaches measured value {assumed_measured} "
            f"(c0={c0}, s_eff={s_eff}, x_nl={x_nl})"
        ) from exc
