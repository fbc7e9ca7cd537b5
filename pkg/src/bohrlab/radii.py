"""Radius equations for polyanalytic Bohr inequalities, solved with a
certified bracket.

Every family's equation has the shape

    w (1 - r)^m - c r + c r^(p+1) = 0,

where w is a domain weight, m the power of (1 - r), and c collects the
derivative-ratio bound k and the family's coefficient-growth constant:

    family       w        m   c           cap
    general      1        2   k*lambda    1/(1 + 2 lambda)
    omega-gamma  1+gamma  2   k           (1+gamma)/(3+gamma)
    half-plane   2        2   k           1/2
    convex       1        2   k*beta      1/3
    starlike     1        3   k           1/3

p is an integer >= 2, or math.inf for the limiting equation with the
r^(p+1) term absent (r^inf evaluates to exactly 0.0 on (0, 1), so no
special casing is needed).  The usable radius is min(root, cap): the
cap encodes where the underlying single-layer inequality is available,
and binds whenever the polynomial root lands beyond it.
"""

from __future__ import annotations

import dataclasses
import math

import numpy as np

from .series import RInterval

__all__ = [
    "FAMILY_TAGS",
    "RadiusFamily",
    "RootResult",
    "general_sc",
    "omega_gamma",
    "half_plane",
    "convex_sub",
    "starlike_sub",
    "radius_poly_eval",
    "solve_radius",
    "bohr_radius_cap",
    "lambda_bound",
    "root_result_to_json",
]

FAMILY_TAGS = ("general", "omega-gamma", "half-plane", "convex", "starlike")

GRID_POINTS = 2048


def _check_p(p) -> float:
    p = float(p)
    if p == math.inf:
        return p
    if p != int(p) or p < 2:
        raise ValueError("order p must be an integer >= 2 or math.inf")
    return p


@dataclasses.dataclass(frozen=True)
class RadiusFamily:
    """One instance of a radius equation; build via the constructors
    general_sc, omega_gamma, half_plane, convex_sub, starlike_sub."""

    tag: str
    k: float = 1.0
    p: float = 2.0
    lam: float | None = None
    gamma: float | None = None
    beta: float | None = None

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise ValueError(f"unknown family tag {self.tag!r}")
        k = float(self.k)
        if not 0.0 <= k <= 1.0:
            raise ValueError("ratio bound k must lie in [0, 1]")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "p", _check_p(self.p))
        if self.tag == "general":
            if self.lam is None or self.lam < 0.0:
                raise ValueError("general family needs lambda >= 0")
            object.__setattr__(self, "lam", float(self.lam))
        elif self.lam is not None:
            raise ValueError("lambda only applies to the general family")
        if self.tag == "omega-gamma":
            if self.gamma is None or not 0.0 <= self.gamma < 1.0:
                raise ValueError("omega-gamma family needs gamma in [0, 1)")
            object.__setattr__(self, "gamma", float(self.gamma))
        elif self.gamma is not None:
            raise ValueError("gamma only applies to the omega-gamma family")
        if self.tag == "convex":
            if self.beta is None or self.beta <= 0.0:
                raise ValueError("convex family needs beta > 0")
            object.__setattr__(self, "beta", float(self.beta))
        elif self.beta is not None:
            raise ValueError("beta only applies to the convex family")

    @property
    def weight(self) -> float:
        if self.tag == "omega-gamma":
            return 1.0 + self.gamma
        if self.tag == "half-plane":
            return 2.0
        return 1.0

    @property
    def exponent(self) -> int:
        return 3 if self.tag == "starlike" else 2

    @property
    def product(self) -> float:
        """The coefficient c multiplying r and r^(p+1)."""
        if self.tag == "general":
            return self.k * self.lam
        if self.tag == "convex":
            return self.k * self.beta
        return self.k

    @property
    def cap(self) -> float:
        """Largest radius the family's single-layer inequality covers."""
        if self.tag == "general":
            return 1.0 / (1.0 + 2.0 * self.lam)
        if self.tag == "omega-gamma":
            return (1.0 + self.gamma) / (3.0 + self.gamma)
        if self.tag == "half-plane":
            return 0.5
        return 1.0 / 3.0

    def describe(self) -> dict:
        """Tag plus the parameters that apply, for reports."""
        out = {"tag": self.tag, "k": self.k, "p": "inf" if self.p == math.inf else int(self.p)}
        if self.lam is not None:
            out["lambda"] = self.lam
        if self.gamma is not None:
            out["gamma"] = self.gamma
        if self.beta is not None:
            out["beta"] = self.beta
        return out


def general_sc(lam: float, k: float = 1.0, p=2) -> RadiusFamily:
    """Simply connected domain with coefficient-growth constant lambda."""
    return RadiusFamily("general", k=k, p=p, lam=lam)


def omega_gamma(gamma: float, k: float = 1.0, p=2) -> RadiusFamily:
    """The slit-widened disk scale Omega_gamma, gamma in [0, 1)."""
    return RadiusFamily("omega-gamma", k=k, p=p, gamma=gamma)


def half_plane(k: float = 1.0, p=2) -> RadiusFamily:
    """Shifted half-plane variant (weight 2)."""
    return RadiusFamily("half-plane", k=k, p=p)


def convex_sub(beta: float, k: float = 1.0, p=2) -> RadiusFamily:
    """Base layer subordinate to a convex map with derivative norm beta."""
    return RadiusFamily("convex", k=k, p=p, beta=beta)


def starlike_sub(k: float = 1.0, p=2) -> RadiusFamily:
    """Base layer subordinate to a normalized starlike map."""
    return RadiusFamily("starlike", k=k, p=p)


def radius_poly_eval(fam: RadiusFamily, r, *, statement_form: bool = False):
    """Left-hand side of the family's radius equation at r (scalar or array).

    statement_form selects the historically displayed variant of the
    general equation, (1-r)^2 - lambda r - lambda r^(p+1); it omits k
    and flips the sign of the tail term.  The default form is the one
    the underlying layer-by-layer estimate actually produces; the
    variant is kept only for comparison and refuses other families.
    """
    r = np.asarray(r, dtype=np.float64)
    if np.any(r < 0.0) or np.any(r > 1.0):
        raise ValueError("radius equation is evaluated on [0, 1]")
    if statement_form:
        if fam.tag != "general":
            raise ValueError("statement_form only applies to the general family")
        out = (1.0 - r) ** 2 - fam.lam * r - fam.lam * r ** (fam.p + 1.0)
    else:
        c = fam.product
        out = fam.weight * (1.0 - r) ** fam.exponent - c * r + c * r ** (fam.p + 1.0)
    return out if out.ndim else float(out)


@dataclasses.dataclass(frozen=True)
class RootResult:
    """Outcome of solve_radius: the certified bracket (or None when the
    equation has no root to find), the midpoint root, the family cap,
    and the usable radius min(root, cap)."""

    family: RadiusFamily
    bracket: RInterval | None
    root: float | None
    cap: float
    radius: float

    @property
    def binding(self) -> str:
        """Which constraint determines the radius: 'root' or 'cap'."""
        return "root" if self.root is not None and self.root < self.cap else "cap"


def solve_radius(fam: RadiusFamily, tol: float = 1e-12, *,
                 statement_form: bool = False) -> RootResult:
    """Locate the smallest root of the radius equation in (0, 1).

    Scans a 2048-point grid on [tol, 1 - tol] for the first sign change,
    then bisects to a bracket of width <= tol whose endpoints certify
    the sign change; the reported root is the midpoint.  When the
    coefficient c vanishes the equation has no root in (0, 1) (the left
    side stays positive), and the radius is the cap alone.
    """
    if not 0.0 < tol < 0.5:
        raise ValueError("tol must lie in (0, 0.5)")
    c = fam.lam if statement_form else fam.product
    if statement_form and fam.tag != "general":
        raise ValueError("statement_form only applies to the general family")
    if c == 0.0:
        return RootResult(fam, None, None, fam.cap, fam.cap)

    def lhs(r):
        return radius_poly_eval(fam, r, statement_form=statement_form)

    grid = np.linspace(tol, 1.0 - tol, GRID_POINTS)
    vals = lhs(grid)
    sign = np.sign(vals)
    hits = np.nonzero(sign == 0.0)[0]
    if hits.size:
        r0 = float(grid[hits[0]])
        bracket = RInterval(r0, r0)
        return RootResult(fam, bracket, r0, fam.cap, min(r0, fam.cap))
    flips = np.nonzero(sign[:-1] * sign[1:] < 0.0)[0]
    if not flips.size:
        return RootResult(fam, None, None, fam.cap, fam.cap)
    a, b = float(grid[flips[0]]), float(grid[flips[0] + 1])
    fa = float(vals[flips[0]])
    while b - a > tol:
        m = 0.5 * (a + b)
        fm = float(lhs(m))
        if fm == 0.0:
            a = b = m
            break
        if (fa > 0.0) != (fm > 0.0):
            b = m
        else:
            a, fa = m, fm
    bracket = RInterval(a, b)
    root = 0.5 * (a + b)
    return RootResult(fam, bracket, root, fam.cap, min(root, fam.cap))


def bohr_radius_cap(fam: RadiusFamily) -> float:
    """The family's cap radius (where the single-layer inequality stops)."""
    return fam.cap


def lambda_bound(domain: str, gamma: float | None = None) -> float:
    """Documented bound for the coefficient-growth constant lambda:
    1 on the disk, 1/(1 + gamma) on the Omega_gamma scale."""
    if domain == "disk":
        if gamma is not None:
            raise ValueError("the disk bound takes no gamma")
        return 1.0
    if domain == "omega-gamma":
        if gamma is None or not 0.0 <= gamma < 1.0:
            raise ValueError("omega-gamma bound needs gamma in [0, 1)")
        return 1.0 / (1.0 + float(gamma))
    raise ValueError(f"unknown domain {domain!r}")


def root_result_to_json(res: RootResult) -> dict:
    """Encode as {"family", "root", "bracket", "cap", "radius"} with the
    bracket as a [lo, hi] pair (null when no root was bracketed)."""
    return {
        "family": res.family.describe(),
        "root": res.root,
        "bracket": None if res.bracket is None else [res.bracket.lo, res.bracket.hi],
        "cap": res.cap,
        "radius": res.radius,
        "binding": res.binding,
    }
