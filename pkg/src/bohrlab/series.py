"""Truncated power series with matrix coefficients and certified Bohr sums.

A series stores coefficients A_0..A_N exactly and, optionally, a tail
certificate: a constant C with ||A_n|| <= C for every n > N.  The
certificate is what turns a truncated Bohr sum into a genuine two-sided
enclosure of sum_n ||A_n|| r^n:

    lo = sum_{n<=N} ||A_n|| r^n,   hi = lo + C r^(N+1) / (1 - r).

Operations that cannot propagate a sound certificate drop it; an
interval built without one has hi == lo and is flagged uncertified
(except at r = 0, where the truncation is exact).
"""

from __future__ import annotations

import dataclasses
import math

import numpy as np

from .opmat import as_matrix, op_norms

__all__ = [
    "DEFAULT_DEGREE",
    "MatrixSeries",
    "Majorant",
    "RInterval",
    "scalar_series",
    "constant_series",
    "zero_series",
    "identity_series",
    "add",
    "mul",
    "compose",
    "derivative",
    "integrate0",
    "scale",
    "truncate",
    "pad_to",
    "with_coeff_bound",
    "majorant",
    "bohr_sum",
    "series_to_json",
    "series_from_json",
]

DEFAULT_DEGREE = 64


@dataclasses.dataclass(frozen=True)
class RInterval:
    """A closed interval [lo, hi] enclosing a Bohr sum at one radius.

    certified is True when hi is a proven upper bound for the full
    (untruncated) sum; otherwise hi == lo is only the truncated value.
    """

    lo: float
    hi: float
    certified: bool = True

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValueError("interval endpoints must be finite")
        if self.lo > self.hi:
            raise ValueError(f"interval needs lo <= hi, got [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def __contains__(self, x: float) -> bool:
        return self.lo <= float(x) <= self.hi


@dataclasses.dataclass(frozen=True, eq=False)
class MatrixSeries:
    """Coefficients A_0..A_N of sum_n A_n z^n, plus an optional tail bound.

    coeffs has shape (N+1, d, d); the array is copied on construction
    and frozen, so instances can be shared across threads.  coeff_bound,
    when present, asserts ||A_n|| <= coeff_bound for all n > N (the
    stored coefficients are exact and need no bound).
    """

    coeffs: np.ndarray
    coeff_bound: float | None = None

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=np.complex128)
        if c.ndim != 3 or c.shape[1] != c.shape[2] or c.shape[0] < 1 or c.shape[1] < 1:
            raise ValueError(f"coeffs must have shape (N+1, d, d), got {c.shape}")
        if not np.all(np.isfinite(c)):
            raise ValueError("series coefficients must be finite")
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)
        if self.coeff_bound is not None:
            b = float(self.coeff_bound)
            if not math.isfinite(b) or b < 0.0:
                raise ValueError("coeff_bound must be finite and nonnegative")
            object.__setattr__(self, "coeff_bound", b)

    @property
    def dim(self) -> int:
        return self.coeffs.shape[1]

    @property
    def degree(self) -> int:
        return self.coeffs.shape[0] - 1

    def coeff(self, n: int) -> np.ndarray:
        """Coefficient A_n (read-only view)."""
        if not 0 <= n <= self.degree:
            raise IndexError(f"coefficient index {n} outside 0..{self.degree}")
        return self.coeffs[n]

    def eval(self, z: complex) -> np.ndarray:
        """Evaluate the stored polynomial part at z."""
        powers = np.asarray(z, dtype=np.complex128) ** np.arange(self.degree + 1)
        return np.tensordot(powers, self.coeffs, axes=(0, 0))

    def __call__(self, z: complex) -> np.ndarray:
        return self.eval(z)

    def __add__(self, other: "MatrixSeries") -> "MatrixSeries":
        return add(self, other)

    def __mul__(self, other: "MatrixSeries") -> "MatrixSeries":
        return mul(self, other)

    def __neg__(self) -> "MatrixSeries":
        return scale(self, -1.0)


def scalar_series(values, coeff_bound: float | None = None) -> MatrixSeries:
    """Series with 1x1 coefficients taken from a sequence of scalars."""
    v = np.asarray(values, dtype=np.complex128)
    if v.ndim != 1 or v.size < 1:
        raise ValueError("scalar series needs a one-dimensional coefficient list")
    return MatrixSeries(v.reshape(-1, 1, 1), coeff_bound)


def constant_series(a, degree: int = 0, coeff_bound: float | None = 0.0) -> MatrixSeries:
    """The constant function z -> a, stored to the requested degree.

    All non-constant coefficients are exactly zero, so the default tail
    certificate is 0.
    """
    m = as_matrix(a)
    if degree < 0:
        raise ValueError("degree must be >= 0")
    coeffs = np.zeros((degree + 1,) + m.shape, dtype=np.complex128)
    coeffs[0] = m
    return MatrixSeries(coeffs, coeff_bound)


def zero_series(dim: int, degree: int = 0) -> MatrixSeries:
    """The zero function with the given dimension and degree."""
    if dim < 1 or degree < 0:
        raise ValueError("zero_series needs dim >= 1 and degree >= 0")
    return MatrixSeries(np.zeros((degree + 1, dim, dim), dtype=np.complex128), 0.0)


def identity_series(dim: int, degree: int = 0) -> MatrixSeries:
    """The constant function z -> I."""
    return constant_series(np.eye(dim, dtype=np.complex128), degree)


def truncate(f: MatrixSeries, degree: int) -> MatrixSeries:
    """Drop coefficients above ``degree``, keeping the certificate sound.

    Dropped stored coefficients may exceed the old tail bound, so the
    new bound is max(old bound, norms of the dropped coefficients).
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    if degree >= f.degree:
        return f
    bound = f.coeff_bound
    if bound is not None:
        dropped = op_norms(f.coeffs[degree + 1 :])
        bound = max(bound, float(dropped.max()))
    return MatrixSeries(f.coeffs[: degree + 1], bound)


def pad_to(f: MatrixSeries, degree: int) -> MatrixSeries:
    """Extend with explicit zero coefficients up to ``degree``.

    Only sound when the caller knows those coefficients really vanish
    (e.g. for polynomials); the tail certificate is kept as is.
    """
    if degree <= f.degree:
        return f
    coeffs = np.zeros((degree + 1, f.dim, f.dim), dtype=np.complex128)
    coeffs[: f.degree + 1] = f.coeffs
    return MatrixSeries(coeffs, f.coeff_bound)


def with_coeff_bound(f: MatrixSeries, bound: float | None) -> MatrixSeries:
    """Replace the tail certificate.

    This is an assertion by the caller, typically from structural
    knowledge of how f was produced (composition with a bounded target,
    say), not something the arithmetic can check.
    """
    return MatrixSeries(f.coeffs, bound)


def scale(f: MatrixSeries, alpha: complex) -> MatrixSeries:
    """The series alpha * f; the tail bound scales by |alpha|."""
    alpha = complex(alpha)
    bound = None if f.coeff_bound is None else abs(alpha) * f.coeff_bound
    return MatrixSeries(f.coeffs * alpha, bound)


def add(f: MatrixSeries, g: MatrixSeries) -> MatrixSeries:
    """Coefficientwise sum, truncated to min(deg f, deg g).

    Tail bounds add (triangle inequality) when both operands carry one;
    otherwise the result carries none.
    """
    if f.dim != g.dim:
        raise ValueError(f"dimension mismatch: {f.dim} vs {g.dim}")
    n = min(f.degree, g.degree)
    ft, gt = truncate(f, n), truncate(g, n)
    if ft.coeff_bound is None or gt.coeff_bound is None:
        bound = None
    else:
        bound = ft.coeff_bound + gt.coeff_bound
    return MatrixSeries(ft.coeffs + gt.coeffs, bound)


def mul(f: MatrixSeries, g: MatrixSeries) -> MatrixSeries:
    """Cauchy product, truncated to min(deg f, deg g).

    The product's tail mixes truncated and certified parts, so no sound
    constant bound survives; the result carries none.
    """
    if f.dim != g.dim:
        raise ValueError(f"dimension mismatch: {f.dim} vs {g.dim}")
    n = min(f.degree, g.degree)
    fa, ga = f.coeffs[: n + 1], g.coeffs[: n + 1]
    if f.dim == 1:
        out = np.convolve(fa[:, 0, 0], ga[:, 0, 0])[: n + 1].reshape(-1, 1, 1)
    else:
        out = np.zeros((n + 1, f.dim, f.dim), dtype=np.complex128)
        for i in range(n + 1):
            # products f_i g_j land at index i + j
            block = np.einsum("ab,jbc->jac", fa[i], ga[: n + 1 - i])
            out[i:] += block
    return MatrixSeries(out, None)


def compose(g: MatrixSeries, phi: MatrixSeries) -> MatrixSeries:
    """Coefficients of g(phi(z)) through degree min(deg g, deg phi).

    phi must be scalar (dim 1) with constant term exactly zero, so that
    phi^n contributes nothing below degree n and the truncated powers
    determine the output coefficients exactly.  No tail certificate
    survives in general; reattach one with with_coeff_bound when the
    structure of g and phi justifies it.
    """
    if phi.dim != 1:
        raise ValueError("inner function must be scalar (dim 1)")
    if phi.coeffs[0, 0, 0] != 0:
        raise ValueError("inner function must have constant term exactly zero")
    n = min(g.degree, phi.degree)
    p = phi.coeffs[: n + 1, 0, 0]
    # powers[k] = coefficients of phi(z)^k through degree n
    powers = np.zeros((g.degree + 1, n + 1), dtype=np.complex128)
    powers[0, 0] = 1.0
    limit = min(g.degree, n)
    for k in range(1, limit + 1):
        powers[k] = np.convolve(powers[k - 1], p)[: n + 1]
    out = np.einsum("km,kab->mab", powers, g.coeffs)
    return MatrixSeries(out, None)


def derivative(f: MatrixSeries) -> MatrixSeries:
    """Termwise derivative; degree drops by one (constants map to 0).

    The derivative of a bounded tail is not bounded by a constant, so
    the certificate is dropped.
    """
    if f.degree == 0:
        return MatrixSeries(np.zeros((1, f.dim, f.dim), dtype=np.complex128), None)
    n = np.arange(1, f.degree + 1, dtype=np.float64)
    return MatrixSeries(f.coeffs[1:] * n[:, None, None], None)


def integrate0(f: MatrixSeries, a0) -> MatrixSeries:
    """Termwise antiderivative with prescribed constant term a0."""
    m = as_matrix(a0)
    if m.shape[0] != f.dim:
        raise ValueError("constant term dimension does not match the series")
    out = np.empty((f.degree + 2, f.dim, f.dim), dtype=np.complex128)
    out[0] = m
    n = np.arange(1, f.degree + 2, dtype=np.float64)
    out[1:] = f.coeffs / n[:, None, None]
    return MatrixSeries(out, None)


@dataclasses.dataclass(frozen=True, eq=False)
class Majorant:
    """Coefficient norms ||A_0||..||A_N|| plus the optional tail bound."""

    values: np.ndarray
    tail_bound: float | None = None

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.float64)
        if v.ndim != 1 or v.size < 1 or not np.all(np.isfinite(v)) or np.any(v < 0):
            raise ValueError("majorant values must be a nonnegative float vector")
        v = v.copy()
        v.setflags(write=False)
        object.__setattr__(self, "values", v)
        if self.tail_bound is not None:
            b = float(self.tail_bound)
            if not math.isfinite(b) or b < 0.0:
                raise ValueError("tail_bound must be finite and nonnegative")
            object.__setattr__(self, "tail_bound", b)

    @property
    def degree(self) -> int:
        return self.values.size - 1

    def bohr(self, r: float) -> RInterval:
        """Enclosure of sum_n ||A_n|| r^n at radius r in [0, 1).

        The geometric tail C r^(N+1) / (1 - r) certifies hi whenever a
        tail bound is present; at r = 0 the truncated value is exact
        regardless.
        """
        r = float(r)
        if not 0.0 <= r < 1.0:
            raise ValueError(f"radius must lie in [0, 1), got {r}")
        lo = float(self.values @ r ** np.arange(self.values.size))
        if r == 0.0:
            return RInterval(lo, lo, True)
        if self.tail_bound is None:
            return RInterval(lo, lo, False)
        tail = self.tail_bound * r ** self.values.size / (1.0 - r)
        return RInterval(lo, lo + tail, True)


def majorant(f: MatrixSeries) -> Majorant:
    """Coefficient-norm profile of f (one batched eigensolve)."""
    return Majorant(op_norms(f.coeffs), f.coeff_bound)


def bohr_sum(f: MatrixSeries, r: float) -> RInterval:
    """Enclosure of the Bohr sum sum_n ||A_n|| r^n."""
    return majorant(f).bohr(r)


def series_to_json(f: MatrixSeries) -> dict:
    """Encode as {"dim", "degree", "coeff_bound", "coeffs": [matrix payloads]}.

    Matrix entries are [re, im] float pairs, so round trips through the
    json module reproduce every coefficient bit for bit.
    """
    from .opmat import matrix_to_json

    return {
        "dim": f.dim,
        "degree": f.degree,
        "coeff_bound": f.coeff_bound,
        "coeffs": [matrix_to_json(f.coeffs[n]) for n in range(f.degree + 1)],
    }


def series_from_json(payload: dict) -> MatrixSeries:
    """Inverse of series_to_json."""
    from .opmat import matrix_from_json

    dim = int(payload["dim"])
    degree = int(payload["degree"])
    mats = [matrix_from_json(p) for p in payload["coeffs"]]
    if len(mats) != degree + 1 or any(m.shape[0] != dim for m in mats):
        raise ValueError("coefficient list does not match declared dim/degree")
    bound = payload.get("coeff_bound")
    return MatrixSeries(np.stack(mats), None if bound is None else float(bound))
