"""Matrix layer: norms, adjoints, absolute values, JSON round trips."""

import numpy as np
import pytest

from bohrlab.opmat import (
    abs_op,
    adjoint,
    as_matrix,
    identity,
    matrix_from_json,
    matrix_to_json,
    op_norm,
    op_norms,
)


def random_matrix(rng, d):
    return rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))


def test_identity_norm_is_one():
    for d in range(1, 6):
        assert op_norm(identity(d)) == 1.0


def test_norm_known_values():
    # largest singular value of [[0,2],[0,0]] is 2
    assert op_norm([[0, 2], [0, 0]]) == pytest.approx(2.0, abs=1e-14)
    assert op_norm(np.diag([1.0, 3.0j])) == pytest.approx(3.0, abs=1e-14)
    assert op_norm([[2.5j]]) == pytest.approx(2.5, abs=0)


def test_norm_rejects_bad_input():
    with pytest.raises(ValueError):
        op_norm(np.ones((2, 3)))
    with pytest.raises(ValueError):
        op_norm([[np.nan, 0], [0, 1]])
    with pytest.raises(ValueError):
        op_norm([[np.inf]])


def test_adjoint_examples():
    assert np.array_equal(adjoint([[1j]]), [[-1j]])
    a = np.array([[1, 2j], [3, 4]], dtype=complex)
    assert np.array_equal(adjoint(a), a.conj().T)


def test_abs_op_known_values():
    # |A| for A = [[0,2],[0,0]] is diag(0, 2)
    assert np.allclose(abs_op([[0, 2], [0, 0]]), np.diag([0.0, 2.0]), atol=1e-13)
    # |alpha I| = |alpha| I
    assert np.allclose(abs_op(-0.5j * np.eye(3)), 0.5 * np.eye(3), atol=1e-14)
    # unitaries have |U| = I
    c, s = np.cos(0.7), np.sin(0.7)
    u = np.array([[c, -s], [s, c]])
    assert np.allclose(abs_op(u), np.eye(2), atol=1e-13)


def test_norm_invariants_random():
    rng = np.random.default_rng(101)
    for _ in range(200):
        d = int(rng.integers(1, 6))
        a, b = random_matrix(rng, d), random_matrix(rng, d)
        na, nb = op_norm(a), op_norm(b)
        assert op_norm(a + b) <= na + nb + 1e-10
        assert op_norm(a @ b) <= na * nb + 1e-10
        assert op_norm(adjoint(a)) == pytest.approx(na, abs=1e-10)
        assert op_norm(abs_op(a)) == pytest.approx(na, abs=1e-10)


def test_abs_op_is_psd_square_root_of_gram():
    rng = np.random.default_rng(102)
    for _ in range(100):
        d = int(rng.integers(1, 6))
        a = random_matrix(rng, d)
        m = abs_op(a)
        assert np.allclose(m, m.conj().T, atol=1e-12)
        assert np.linalg.eigvalsh(m).min() >= -1e-10
        assert np.allclose(m @ m, a.conj().T @ a, atol=1e-9)


def test_op_norms_matches_scalar_path():
    rng = np.random.default_rng(103)
    stack = rng.normal(size=(20, 4, 4)) + 1j * rng.normal(size=(20, 4, 4))
    batched = op_norms(stack)
    for i in range(20):
        assert batched[i] == pytest.approx(op_norm(stack[i]), abs=1e-12)


def test_json_round_trip_is_exact():
    rng = np.random.default_rng(104)
    for d in (1, 2, 5):
        a = as_matrix(random_matrix(rng, d))
        back = matrix_from_json(matrix_to_json(a))
        assert np.array_equal(a, back)


def test_json_rejects_mismatched_dim():
    payload = matrix_to_json(np.eye(2))
    payload["dim"] = 3
    with pytest.raises(ValueError):
        matrix_from_json(payload)
