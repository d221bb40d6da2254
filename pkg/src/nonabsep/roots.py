"""Bracketing root finders used by the threshold and scan routines."""

from __future__ import annotations

from typing import Callable, Optional

import numpy as np

from .core import NoSignChange


def bisect(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    ftol: float = 1e-9,
    xtol: float = 1e-13,
    maxiter: int = 200,
) -> float:
    """Bisection for a sign change of ``f`` on ``[lo, hi]``.

    Stops once ``|f(x)| <= ftol`` or the bracket is narrower than ``xtol``.
    Raises :class:`NoSignChange` if the endpoints do not bracket a root.
    """
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if np.sign(flo) == np.sign(fhi):
        raise NoSignChange(f"no sign change on [{lo}, {hi}]: f = {flo:.3e}, {fhi:.3e}")
    for _ in range(maxiter):
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        if abs(fmid) <= ftol or hi - lo <= xtol:
            return mid
        if np.sign(fmid) == np.sign(flo):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def first_bracket(f: Callable[[float], float], grid) -> Optional[tuple[float, float]]:
    """First adjacent pair of grid points where ``f`` changes sign (or hits zero)."""
    grid = list(grid)
    prev_x, prev_f = grid[0], f(grid[0])
    if prev_f == 0.0:
        return prev_x, prev_x
    for x in grid[1:]:
        fx = f(x)
        if fx == 0.0 or np.sign(fx) != np.sign(prev_f):
            return prev_x, x
        prev_x, prev_f = x, fx
    return None


def smallest_root(f: Callable[[float], float], lo: float, hi: float, num: int = 2001, ftol: float = 1e-9) -> float:
    """Smallest root of ``f`` on ``[lo, hi]``, located on a grid and refined by bisection."""
    bracket = first_bracket(f, np.linspace(lo, hi, num))
    if bracket is None:
        raise NoSignChange(f"no sign change of f on [{lo}, {hi}]")
    a, b = bracket
    if a == b:
        return a
    return bisect(f, a, b, ftol=ftol)
