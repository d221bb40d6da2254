"""Spectral tests for absolute separability and absolute PPT."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import TOL_SIGN, DensityOperator, DimensionError
from .linalg import eigvals_descending, min_eigval, partial_transpose


class StateClass(enum.Enum):
    NPPT = "NPPT"
    PPT_NOT_ABS = "PPT_NOT_ABS"
    ABS_PPT = "ABS_PPT"


@dataclass(frozen=True)
class CriterionReport:
    """Left-hand sides of the criteria that apply to a state's dimensions.

    ``margin_2xn`` is set for ``dA = 2`` only, the two determinants for ``dA = 3`` only.
    """

    min_pt_eig: float
    margin_2xn: Optional[float] = None
    det1_3xn: Optional[float] = None
    det2_3xn: Optional[float] = None

    @property
    def absolutely_separable(self) -> Optional[bool]:
        """For 2 x n absolute PPT and absolute separability coincide; unknown otherwise."""
        if self.margin_2xn is None:
            return None
        return self.margin_2xn <= TOL_SIGN

    def as_dict(self) -> dict:
        return {
            "min_pt_eig": self.min_pt_eig,
            "margin_2xn": self.margin_2xn,
            "det1_3xn": self.det1_3xn,
            "det2_3xn": self.det2_3xn,
        }


def is_ppt(rho: DensityOperator) -> tuple[bool, float]:
    """PPT test; returns the verdict and the smallest eigenvalue of the partial transpose."""
    lmin = min_eigval(partial_transpose(rho.matrix, rho.dims))
    return lmin >= -TOL_SIGN, lmin


def spectrum(rho: DensityOperator) -> np.ndarray:
    return eigvals_descending(rho.matrix)


def margin_2xn_from_spectrum(lam) -> float:
    """``l_1 - l_{2n-1} - 2 sqrt(l_{2n-2} l_{2n})`` for a descending spectrum of length 2n."""
    lam = np.asarray(lam, dtype=float)
    m = lam.size
    prod = max(lam[m - 3] * lam[m - 1], 0.0)
    return float(lam[0] - lam[m - 2] - 2.0 * np.sqrt(prod))


def as_margin_2xn(rho: DensityOperator) -> float:
    """Absolute-separability margin for ``2 x n``: the state is AS iff the result is <= 0."""
    if rho.dims.dA != 2:
        raise DimensionError(f"as_margin_2xn needs dA = 2, got dims {rho.dims.dA}x{rho.dims.dB}")
    return margin_2xn_from_spectrum(spectrum(rho))


def _det3(m) -> float:
    return float(
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def absppt_dets_from_spectrum(lam) -> tuple[float, float]:
    """The two 3x3 determinants of the absolute-PPT test in ``3 x n``.

    ``lam`` is the descending spectrum of length ``3n``; the state is
    absolutely PPT iff both determinants are nonnegative.
    """
    lam = np.asarray(lam, dtype=float)
    N = lam.size

    def L(k):  # 1-based, counted from the top
        return lam[k - 1]

    m1 = [
        [2 * L(N), L(N - 1) - L(1), L(N - 3) - L(2)],
        [L(N - 1) - L(1), 2 * L(N - 2), L(N - 4) - L(3)],
        [L(N - 3) - L(2), L(N - 4) - L(3), 2 * L(N - 5)],
    ]
    m2 = [
        [2 * L(N), L(N - 1) - L(1), L(N - 2) - L(2)],
        [L(N - 1) - L(1), 2 * L(N - 3), L(N - 4) - L(3)],
        [L(N - 2) - L(2), L(N - 4) - L(3), 2 * L(N - 5)],
    ]
    return _det3(m1), _det3(m2)


def absppt_margins_3xn(rho: DensityOperator) -> tuple[float, float]:
    if rho.dims.dA != 3:
        raise DimensionError(f"absppt_margins_3xn needs dA = 3, got dims {rho.dims.dA}x{rho.dims.dB}")
    return absppt_dets_from_spectrum(spectrum(rho))


def non_abs_margin(rho: DensityOperator) -> float:
    """Signed distance-like quantity: positive iff the state is not absolutely PPT.

    ``2 x n`` uses the AS margin directly; ``3 x n`` uses ``-min(det1, det2)``.
    """
    if rho.dims.dA == 2:
        return as_margin_2xn(rho)
    if rho.dims.dA == 3:
        return -min(absppt_margins_3xn(rho))
    raise DimensionError(f"no spectral criterion for dA = {rho.dims.dA}")


def classify(rho: DensityOperator) -> tuple[StateClass, CriterionReport]:
    if not rho.dims.supported:
        raise DimensionError(f"unsupported dims {rho.dims.dA}x{rho.dims.dB}")
    ppt, lmin = is_ppt(rho)
    lam = spectrum(rho)
    if rho.dims.dA == 2:
        margin = margin_2xn_from_spectrum(lam)
        report = CriterionReport(min_pt_eig=lmin, margin_2xn=margin)
        absolute = margin <= TOL_SIGN
    else:
        d1, d2 = absppt_dets_from_spectrum(lam)
        report = CriterionReport(min_pt_eig=lmin, det1_3xn=d1, det2_3xn=d2)
        absolute = min(d1, d2) >= -TOL_SIGN
    if not ppt:
        return StateClass.NPPT, report
    return (StateClass.ABS_PPT if absolute else StateClass.PPT_NOT_ABS), report
