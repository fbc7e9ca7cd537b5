"""Dense complex matrices used as finite-dimensional operators.

Matrices are plain numpy arrays of shape (d, d) and dtype complex128.
Everything here is pure: arguments are never mutated, so the functions
are safe to call from worker threads.

Spectral quantities go through the Hermitian eigensolver on the Gram
matrix a*a rather than an SVD.  eigvalsh is deterministic for identical
input, which keeps campaign reports reproducible bit for bit.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "NumericalError",
    "as_matrix",
    "identity",
    "op_norm",
    "op_norms",
    "adjoint",
    "abs_op",
    "matrix_to_json",
    "matrix_from_json",
]


class NumericalError(RuntimeError):
    """A dense eigensolver failed to converge."""


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a square complex matrix, validating as we go.

    Rejects non-square shapes and non-finite entries (NaN or infinity
    in either the real or imaginary part).
    """
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def identity(dim: int) -> np.ndarray:
    """The dim x dim identity matrix."""
    if dim < 1:
        raise ValueError("dim must be a positive integer")
    return np.eye(dim, dtype=np.complex128)


def op_norms(stack: np.ndarray) -> np.ndarray:
    """Largest singular value of every matrix in a (..., d, d) stack.

    The 1x1 case short-circuits to plain absolute value.  Otherwise the
    top eigenvalue of the Gram matrix is clamped at zero before the
    square root so eigenvalue noise of order -1e-16 cannot produce NaN.
    """
    stack = np.asarray(stack, dtype=np.complex128)
    if stack.ndim < 2 or stack.shape[-1] != stack.shape[-2]:
        raise ValueError(f"expected a stack of square matrices, got shape {stack.shape}")
    if stack.shape[-1] == 1:
        return np.abs(stack[..., 0, 0])
    gram = np.conj(np.swapaxes(stack, -1, -2)) @ stack
    try:
        eigs = np.linalg.eigvalsh(gram)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigensolver failed on Gram matrices: {exc}") from exc
    return np.sqrt(np.maximum(eigs[..., -1], 0.0))


def op_norm(a) -> float:
    """Operator (spectral) norm of a single matrix."""
    return float(op_norms(as_matrix(a)[np.newaxis])[0])


def adjoint(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(a).conj().T.copy()


def abs_op(a) -> np.ndarray:
    """Operator absolute value (a*a)^(1/2).

    Diagonalizes the Hermitized Gram matrix, clamps small negative
    eigenvalues at zero, and rebuilds.  The result is re-Hermitized so
    it can be fed straight back into eigh-based code.
    """
    m = as_matrix(a)
    gram = m.conj().T @ m
    gram = 0.5 * (gram + gram.conj().T)
    try:
        w, v = np.linalg.eigh(gram)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(
            f"eigensolver failed computing |A| for a {m.shape[0]}x{m.shape[0]} matrix: {exc}"
        ) from exc
    root = (v * np.sqrt(np.maximum(w, 0.0))) @ v.conj().T
    return 0.5 * (root + root.conj().T)


def matrix_to_json(a) -> dict:
    """Encode a matrix as {"dim": d, "entries": [[[re, im], ...], ...]}.

    Entries are row-major; each entry is a [real, imag] pair of floats,
    so a round trip through the json module is bit-exact.
    """
    m = as_matrix(a)
    d = m.shape[0]
    entries = [[[float(m[i, j].real), float(m[i, j].imag)] for j in range(d)] for i in range(d)]
    return {"dim": d, "entries": entries}


def matrix_from_json(payload: dict) -> np.ndarray:
    """Inverse of matrix_to_json."""
    d = int(payload["dim"])
    rows = payload["entries"]
    if len(rows) != d or any(len(row) != d for row in rows):
        raise ValueError("entries do not match the declared dim")
    m = np.empty((d, d), dtype=np.complex128)
    for i, row in enumerate(rows):
        for j, pair in enumerate(row):
            re, im = pair
            m[i, j] = complex(re, im)
    return as_matrix(m)
