import numpy as np
import pytest
from scipy.optimize import brentq

from nonabsep.core import InvariantError, UnitaryOperator
from nonabsep.criteria import non_abs_margin
from nonabsep.linalg import partial_transpose
from nonabsep.scan import BoundaryRow, critical_etas, fmt, loophole_table, scan_boundary
from nonabsep.states import rho2, rho3, u_appendix, u_pauli_2x4, u_pauli_3x3

U2 = u_pauli_2x4(np.pi / 3, np.pi)
U3 = u_pauli_3x3(np.pi / 18, 5 * np.pi / 6)


def direct_nppt(family, b, u):
    """Full-matrix route: rebuild the state at every p."""

    def f(p):
        rho = family(b, p)
        return np.linalg.eigvalsh(partial_transpose(u.matrix @ rho.matrix @ u.matrix.conj().T, rho.dims))[0]

    return brentq(f, 0.0, 1.0, xtol=1e-14) if f(1.0) < 0 else None


def direct_abs(family, b):
    f = lambda p: non_abs_margin(family(b, p))  # noqa: E731
    return brentq(f, 0.0, 1.0, xtol=1e-14) if f(1.0) > 0 else None


@pytest.mark.parametrize(
    "family,name,bs,u,u1",
    [
        (rho2, "rho2", [0.1, 0.5, 0.7, 0.95], U2, u_appendix(8)),
        (rho3, "rho3", [1.0, 1.5, 2.7, 3.9], U3, u_appendix(9)),
    ],
)
def test_rows_match_direct_bisection(family, name, bs, u, u1):
    rows = scan_boundary(name, bs, u, u1)
    for row in rows:
        for got, want in [
            (row.p_abs, direct_abs(family, row.b)),
            (row.p_nppt_u, direct_nppt(family, row.b, u)),
            (row.p_nppt_u1, direct_nppt(family, row.b, u1)),
        ]:
            if want is None:
                assert got is None
            else:
                assert got == pytest.approx(want, abs=1e-6)


def test_boundaries_are_roots_on_re_evaluation():
    for row in scan_boundary("rho3", np.linspace(1, 4, 7), U3):
        assert abs(non_abs_margin(rho3(row.b, row.p_abs))) <= 1e-8
        rho = rho3(row.b, row.p_nppt_u)
        lmin = np.linalg.eigvalsh(partial_transpose(U3.conjugate(rho.matrix), rho.dims))[0]
        assert abs(lmin) <= 1e-8


def test_threads_do_not_change_rows():
    bs = np.linspace(0, 1, 12)
    assert scan_boundary("rho2", bs, U2, threads=1) == scan_boundary("rho2", bs, U2, threads=4)


def test_containment_check():
    assert BoundaryRow(0.5, 0.3, 0.6, 0.8).containment_ok()
    assert BoundaryRow(0.5, 0.3, None, 0.8).containment_ok()
    assert not BoundaryRow(0.5, 0.7, 0.6, None).containment_ok()
    assert not BoundaryRow(0.5, None, 0.6, None).containment_ok()


def test_violation_raises(monkeypatch):
    import nonabsep.scan as scan

    monkeypatch.setattr(scan, "boundary_row", lambda *a, **k: BoundaryRow(0.5, 0.9, 0.2, None))
    with pytest.raises(InvariantError):
        scan.scan_boundary("rho2", [0.5], U2)


def test_unknown_family():
    with pytest.raises(ValueError):
        scan_boundary("werner", [0.5], UnitaryOperator(np.eye(4)))


def test_loophole_table_and_critical():
    rows = loophole_table([0.5, 1.0], [0.0, 0.4], 0.125, 0.5)
    assert rows[0] == pytest.approx((0.0, -0.125, 0.0))
    assert rows[1] == pytest.approx((0.4, 0.275, 0.8))
    crit = critical_etas([0.2, 0.6], 0.125, 0.5)
    assert crit[0.2] == pytest.approx(0.424, abs=2e-3)
    assert critical_etas([0.0], 0.125, 0.5, assumed_measured=1.0) == {0.0: None}


def test_fmt():
    assert fmt(None) == ""
    assert fmt(float("nan")) == ""
    assert fmt(1 / 3) == "0.333333333333"
