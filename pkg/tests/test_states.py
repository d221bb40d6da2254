import numpy as np
import pytest

from conftest import random_density
from nonabsep.core import DimensionError
from nonabsep.criteria import is_ppt
from nonabsep.linalg import eigvals_descending
from nonabsep.states import (
    conjugate_state,
    gen_werner,
    horodecki_2x4,
    horodecki_3x3,
    maximally_mixed,
    pauli_coefficients,
    rho2,
    rho3,
    u_2q,
    u_appendix,
    u_pauli_2x4,
    u_pauli_3x3,
)


@pytest.mark.parametrize("p", np.linspace(0, 1, 6))
@pytest.mark.parametrize("alpha", [0.0, np.pi / 12, np.pi / 4, 1.3])
@pytest.mark.parametrize("phase", [0.0, np.pi / 3])
def test_gen_werner_valid_with_expected_spectrum(p, alpha, phase):
    rho = gen_werner(p, alpha, phase).validate()
    expected = [p + (1 - p) / 4] + [(1 - p) / 4] * 3
    np.testing.assert_allclose(eigvals_descending(rho.matrix), expected, atol=1e-12)


def test_gen_werner_pure_endpoint():
    rho = gen_werner(1.0, np.pi / 4).matrix
    np.testing.assert_allclose(rho[[0, 0, 3, 3], [0, 3, 0, 3]], [0.5] * 4, atol=1e-15)


@pytest.mark.parametrize("b", np.linspace(0, 1, 11))
def test_horodecki_2x4_is_ppt_state(b):
    rho = horodecki_2x4(b).validate()
    assert is_ppt(rho)[0]


@pytest.mark.parametrize("b", np.linspace(1, 4, 13))
def test_horodecki_3x3_is_ppt_state(b):
    rho = horodecki_3x3(b).validate()
    assert is_ppt(rho)[0]


def test_mixtures_at_zero_are_maximally_mixed():
    np.testing.assert_allclose(rho2(0.4, 0.0).matrix, maximally_mixed((2, 4)).matrix, atol=1e-15)
    np.testing.assert_allclose(rho3(2.0, 0.0).matrix, np.eye(9) / 9, atol=1e-15)


@pytest.mark.parametrize(
    "call",
    [
        lambda: gen_werner(1.2, 0.1),
        lambda: gen_werner(-0.1, 0.1),
        lambda: horodecki_2x4(1.2),
        lambda: horodecki_3x3(0.9),
        lambda: horodecki_3x3(4.1),
        lambda: rho2(0.5, 1.5),
        lambda: rho3(2.0, -0.2),
    ],
)
def test_out_of_range_parameters(call):
    with pytest.raises(ValueError):
        call()


def test_pauli_coefficients_unit_norm_and_example():
    np.testing.assert_allclose(pauli_coefficients(np.pi / 3, np.pi), [0.5, 0.0, -np.sqrt(3) / 2], atol=1e-15)
    for a, b in np.random.default_rng(3).uniform(0, 2 * np.pi, size=(20, 2)):
        assert np.linalg.norm(pauli_coefficients(a, b)) == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize(
    "u",
    [
        u_2q(),
        u_pauli_2x4(np.pi / 3, np.pi),
        u_pauli_2x4(0.3, 2.1),
        u_pauli_3x3(np.pi / 18, 5 * np.pi / 6),
        u_appendix(8),
        u_appendix(9),
    ],
    ids=["u_2q", "pauli8", "pauli8_random", "pauli9", "appendix8", "appendix9"],
)
def test_unitaries(u):
    np.testing.assert_allclose(u.matrix.conj().T @ u.matrix, np.eye(u.dim), atol=1e-12)


def test_u_pauli_3x3_block_structure():
    u = u_pauli_3x3(0.4, 1.1).matrix
    np.testing.assert_array_equal(u[:8, :8], u_pauli_2x4(0.4, 1.1).matrix)
    assert u[8, 8] == 1 and not np.any(u[8, :8]) and not np.any(u[:8, 8])


def test_u_appendix_entries():
    u = u_appendix(9).matrix
    s = 1 / np.sqrt(2)
    assert u[0, 0] == pytest.approx(s) and u[0, 8] == pytest.approx(s)
    assert u[8, 0] == pytest.approx(-s) and u[8, 8] == pytest.approx(s)
    np.testing.assert_array_equal(u[1:8, 1:8], np.eye(7))
    with pytest.raises(DimensionError):
        u_appendix(4)


def test_u_2q_moves_bell_state():
    phi_plus = np.array([1, 0, 0, 1]) / np.sqrt(2)
    np.testing.assert_allclose(u_2q().matrix @ phi_plus, [1, 0, 0, 0], atol=1e-15)


@pytest.mark.parametrize(
    "rho,u",
    [
        (gen_werner(0.6, np.pi / 12), u_2q()),
        (rho2(0.7, 0.9), u_pauli_2x4(np.pi / 3, np.pi)),
        (rho3(1.5, 0.8), u_pauli_3x3(np.pi / 18, 5 * np.pi / 6)),
        (rho3(2.5, 0.5), u_appendix(9)),
    ],
)
def test_conjugation_preserves_spectrum(rho, u):
    moved = conjugate_state(rho, u).validate()
    np.testing.assert_allclose(eigvals_descending(moved.matrix), eigvals_descending(rho.matrix), atol=1e-9)


def test_conjugate_state_dimension_check(rng):
    with pytest.raises(DimensionError):
        conjugate_state(random_density((2, 2), rng), u_appendix(8))
