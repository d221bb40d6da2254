"""Parameter sweeps behind the figure data: (b, p) boundaries, witness curves, loss curves.

Boundary scans only handle white-noise families ``rho(b, p) = p rho_b + (1-p) I/d``.
For those the spectrum of ``rho(b, p)`` and of ``(U rho(b, p) U^dagger)^{T_B}``
is ``p * mu + (1-p)/d`` with ``mu`` the corresponding spectrum at ``p = 1``, so
each ``b`` costs one eigen-decomposition per quantity and the bisection in
``p`` runs on exact, cheap evaluations.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .core import TOL_SIGN, DensityOperator, InvariantError, NoRoot, NoSignChange, UnitaryOperator
from .criteria import absppt_dets_from_spectrum, margin_2xn_from_spectrum
from .linalg import eigvals_descending, partial_transpose
from .loophole import critical_eta_nonlinear, wup
from .roots import bisect
from .states import horodecki_2x4, horodecki_3x3
from .witness import detection_threshold

FAMILY_BASES: dict[str, Callable[[float], DensityOperator]] = {
    "rho2": horodecki_2x4,
    "rho3": horodecki_3x3,
}

CONTAINMENT_SLACK = 1e-6


@dataclass(frozen=True)
class BoundaryRow:
    """Boundaries in ``p`` at fixed ``b``; ``None`` means no crossing in (0, 1]."""

    b: float
    p_abs: Optional[float]
    p_nppt_u: Optional[float]
    p_nppt_u1: Optional[float]

    def containment_ok(self, slack: float = CONTAINMENT_SLACK) -> bool:
        """``p_abs <= p_nppt_u <= p_nppt_u1`` over whichever values are present.

        A state made NPPT by some unitary cannot be absolutely PPT, so each
        NPPT boundary must lie above the absolute-PPT boundary.
        """
        chain = [x for x in (self.p_abs, self.p_nppt_u, self.p_nppt_u1) if x is not None]
        if self.p_abs is None and (self.p_nppt_u is not None or self.p_nppt_u1 is not None):
            return False
        return all(lo <= hi + slack for lo, hi in zip(chain, chain[1:]))


def _noise_line(mu: np.ndarray, d: int) -> Callable[[float], np.ndarray]:
    return lambda p: p * mu + (1.0 - p) / d


def _crossing(f: Callable[[float], float], p_tol: float) -> Optional[float]:
    """First crossing of ``f`` from ``<= 0`` to ``> 0`` on (0, 1], or ``None``."""
    if f(1.0) <= TOL_SIGN:
        return None
    try:
        return bisect(f, 0.0, 1.0, ftol=1e-10, xtol=min(p_tol, 1e-9))
    except NoSignChange:
        return None


def boundary_row(
    family: str,
    b: float,
    u: UnitaryOperator,
    u1: Optional[UnitaryOperator] = None,
    p_tol: float = 1e-6,
) -> BoundaryRow:
    base = FAMILY_BASES[family](b)
    dims = base.dims
    d = dims.total
    line = _noise_line(eigvals_descending(base.matrix), d)
    if dims.dA == 2:

        def non_abs(p):
            return margin_2xn_from_spectrum(line(p))

    else:

        def non_abs(p):
            return -min(absppt_dets_from_spectrum(line(p)))

    def nppt_after(unitary):
        if unitary is None:
            return None
        mu = eigvals_descending(partial_transpose(unitary.conjugate(base.matrix), dims))[-1]
        return _crossing(lambda p: -(p * mu + (1.0 - p) / d), p_tol)

    return BoundaryRow(
        b=float(b),
        p_abs=_crossing(non_abs, p_tol),
        p_nppt_u=nppt_after(u),
        p_nppt_u1=nppt_after(u1),
    )


def scan_boundary(
    family: str,
    b_values: Sequence[float],
    u: UnitaryOperator,
    u1: Optional[UnitaryOperator] = None,
    p_tol: float = 1e-6,
    threads: int = 1,
    check: bool = True,
) -> list[BoundaryRow]:
    """One :class:`BoundaryRow` per ``b``, in grid order.

    With ``check`` the containment ordering is verified on every row and an
    :class:`~nonabsep.core.InvariantError` is raised on the first violation.
    """
    if family not in FAMILY_BASES:
        raise ValueError(f"boundary scans support {sorted(FAMILY_BASES)}, got {family!r}")

    def work(b):
        return boundary_row(family, b, u, u1, p_tol)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(work, b_values))
    else:
        rows = [work(b) for b in b_values]
    if check:
        for row in rows:
            if not row.containment_ok():
                raise InvariantError(f"boundary ordering violated at b={row.b}: {row}", "containment", row.b)
    return rows


def witness_curves(
    family: Callable[[float], DensityOperator],
    functionals: dict[str, Callable[[DensityOperator], float]],
    p_values: Sequence[float],
    bracket: tuple[float, float] = (0.0, 1.0),
    threads: int = 1,
):
    """Values of each functional on the ``p`` grid plus its zero crossing (``None`` if absent)."""
    names = list(functionals)

    def work(p):
        rho = family(p)
        return [functionals[name](rho) for name in names]

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(work, p_values))
    else:
        values = [work(p) for p in p_values]
    rows = [(float(p), *vals) for p, vals in zip(p_values, values)]
    thresholds = {}
    for name in names:
        try:
            thresholds[name] = detection_threshold(family, functionals[name], bracket)
        except NoSignChange:
            thresholds[name] = None
    return names, rows, thresholds


def loophole_table(etas: Sequence[float], x_values: Sequence[float], c0: float, s_eff: float):
    """Rows ``(x_nl, wup(eta_1), wup(eta_2), ...)``."""
    return [(float(x), *(wup(c0, eta, s_eff, x) for eta in etas)) for x in x_values]


def critical_etas(x_values: Sequence[float], c0: float, s_eff: float, assumed_measured: float = 0.0):
    out = {}
    for x in x_values:
        try:
            out[float(x)] = critical_eta_nonlinear(c0, s_eff, x, assumed_measured)
        except NoRoot:
            out[float(x)] = None
    return out


def fmt(x: Optional[float], digits: int = 12) -> str:
    if x is None or (isinstance(x, float) and math.isnan(x)):
        return ""
    return f"{x:.{digits}g}"
