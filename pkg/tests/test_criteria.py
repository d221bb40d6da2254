import numpy as np
import pytest

from conftest import random_density, random_unitary
from nonabsep.core import DensityOperator, DimensionError
from nonabsep.criteria import (
    StateClass,
    absppt_dets_from_spectrum,
    absppt_margins_3xn,
    as_margin_2xn,
    classify,
    is_ppt,
    margin_2xn_from_spectrum,
    non_abs_margin,
)
from nonabsep.linalg import partial_transpose
from nonabsep.roots import bisect
from nonabsep.states import gen_werner, maximally_mixed, rho2, rho3


def test_margin_of_maximally_mixed_2x2():
    # 1/4 - 1/4 - 2 * 1/4
    assert as_margin_2xn(maximally_mixed((2, 2))) == pytest.approx(-0.5, abs=1e-15)


def test_margin_of_pure_state():
    assert margin_2xn_from_spectrum([1, 0, 0, 0]) == pytest.approx(1.0)


def test_dets_of_maximally_mixed_3x3():
    d1, d2 = absppt_margins_3xn(maximally_mixed((3, 3)))
    assert d1 == pytest.approx(8 / 729, abs=1e-15)
    assert d2 == pytest.approx(8 / 729, abs=1e-15)


def test_dets_against_numpy_det():
    lam = np.sort(np.random.default_rng(5).dirichlet(np.ones(9)))[::-1]
    L = lambda k: lam[k - 1]  # noqa: E731
    m1 = np.array(
        [
            [2 * L(9), L(8) - L(1), L(6) - L(2)],
            [L(8) - L(1), 2 * L(7), L(5) - L(3)],
            [L(6) - L(2), L(5) - L(3), 2 * L(4)],
        ]
    )
    m2 = np.array(
        [
            [2 * L(9), L(8) - L(1), L(7) - L(2)],
            [L(8) - L(1), 2 * L(6), L(5) - L(3)],
            [L(7) - L(2), L(5) - L(3), 2 * L(4)],
        ]
    )
    d1, d2 = absppt_dets_from_spectrum(lam)
    assert d1 == pytest.approx(np.linalg.det(m1), abs=1e-15)
    assert d2 == pytest.approx(np.linalg.det(m2), abs=1e-15)


def test_dimension_guards():
    with pytest.raises(DimensionError):
        as_margin_2xn(maximally_mixed((3, 3)))
    with pytest.raises(DimensionError):
        absppt_margins_3xn(maximally_mixed((2, 4)))


@pytest.mark.parametrize("b", np.linspace(0, 1, 6))
@pytest.mark.parametrize("p", np.linspace(0, 1, 6))
def test_rho2_ppt_everywhere(b, p):
    ok, lmin = is_ppt(rho2(b, p))
    assert ok and lmin >= -1e-10


def test_classify_examples():
    assert classify(maximally_mixed((3, 3)))[0] is StateClass.ABS_PPT
    assert classify(gen_werner(0.2, np.pi / 12))[0] is StateClass.ABS_PPT
    assert classify(gen_werner(0.45, np.pi / 12))[0] is StateClass.PPT_NOT_ABS
    cls, report = classify(gen_werner(0.9, np.pi / 12))
    assert cls is StateClass.NPPT and report.min_pt_eig < 0
    assert classify(rho2(0.7, 0.9))[0] is StateClass.PPT_NOT_ABS
    cls, report = classify(rho3(1.5, 0.9))
    assert cls is StateClass.PPT_NOT_ABS and report.margin_2xn is None and report.absolutely_separable is None


def test_classify_unsupported_dims():
    with pytest.raises(DimensionError):
        classify(DensityOperator(np.eye(6) / 6, (2, 3)))


@pytest.mark.parametrize("alpha", [np.pi / 12, np.pi / 8, np.pi / 4])
def test_werner_absolute_boundary_is_one_third(alpha):
    p = bisect(lambda p: as_margin_2xn(gen_werner(p, alpha)), 0.0, 1.0, ftol=0, xtol=1e-12)
    assert p == pytest.approx(1 / 3, abs=1e-8)


def test_werner_ppt_boundary_closed_form():
    # min PT eigenvalue is (1-p)/4 - p sin(a) cos(a)
    alpha = np.pi / 12
    p = bisect(lambda p: is_ppt(gen_werner(p, alpha))[1], 0.0, 1.0, ftol=0, xtol=1e-12)
    assert p == pytest.approx(1 / (1 + 2 * np.sin(2 * alpha)), abs=1e-8)


@pytest.mark.parametrize("dims", [(2, 2), (2, 4), (3, 3)])
def test_criteria_unitarily_invariant(dims, rng):
    for _ in range(5):
        rho = random_density(dims, rng)
        u = random_unitary(dims[0] * dims[1], rng)
        moved = DensityOperator(u @ rho.matrix @ u.conj().T, dims)
        assert non_abs_margin(moved) == pytest.approx(non_abs_margin(rho), abs=1e-9)


@pytest.mark.parametrize("family,b", [(rho2, 0.3), (rho2, 0.9), (rho3, 1.5), (rho3, 3.2)])
def test_non_abs_margin_monotone_in_p(family, b):
    values = [non_abs_margin(family(b, p)) for p in np.linspace(0, 1, 41)]
    assert np.all(np.diff(values) >= -1e-12)


def test_absppt_implies_ppt_after_random_unitaries(rng):
    # spectra that pass the test stay PPT under any conjugation
    for _ in range(20):
        rho = rho3(2.0, 0.3)
        assert classify(rho)[0] is StateClass.ABS_PPT
        u = random_unitary(9, rng)
        pt = partial_transpose(u @ rho.matrix @ u.conj().T, (3, 3))
        assert np.linalg.eigvalsh(pt)[0] >= -1e-10
