"""Randomized verification campaigns over the function families.

A campaign draws seeded random instances of an inequality's hypothesis,
computes both sides with certified Bohr enclosures, and records the
worst margin (bound minus value) over a radius grid.  A trial passes
when its margin is >= -tolerance; the certified endpoints face the
"wrong" way (upper for the quantity being bounded, lower for the
bound), so a pass is evidence the inequality truly holds for that
instance rather than an artifact of truncation.

Determinism: trial i of a campaign with seed s uses the generator
default_rng([s, i]), so reports are reproducible regardless of how
many worker threads ran the trials (BOHRLAB_THREADS, default 1).
Failed trials serialize their instance to a replay file and the
campaign keeps going.
"""

from __future__ import annotations

import csv
import dataclasses
import json
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .radii import RadiusFamily, solve_radius
from .series import (
    MatrixSeries,
    compose,
    majorant,
    mul,
    scalar_series,
    scale,
    series_to_json,
    with_coeff_bound,
)
from .zoo import (
    CaratheodoryScalar,
    blaschke_series,
    build_polyanalytic,
    convex_model,
    gen_schur_matrix,
    mobius_extremal,
    polyanalytic_to_json,
    random_blaschke_spec,
    starlike_from_q,
)

__all__ = [
    "CampaignConfig",
    "TrialRecord",
    "Report",
    "SharpnessScan",
    "default_grid",
    "run_subordination",
    "run_quasi_subordination",
    "run_von_neumann",
    "run_polyanalytic",
    "run_sharpness_scan",
    "emit_radius_table",
]

_SEED_MASK = (1 << 64) - 1


@dataclasses.dataclass(frozen=True)
class CampaignConfig:
    """Shared knobs for every verification campaign."""

    suite: str
    trials: int = 200
    seed: int = 0
    dim: int = 3
    degree: int = 64
    r_grid: tuple | None = None
    tolerance: float = 1e-8
    out: str | None = None
    fmt: str = "json"

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not 1 <= self.dim <= 16:
            raise ValueError("dim must lie in 1..16")
        if not 1 <= self.degree <= 256:
            raise ValueError("degree must lie in 1..256")
        if self.r_grid is not None:
            grid = tuple(float(r) for r in self.r_grid)
            if not grid or any(not 0.0 < r < 1.0 for r in grid):
                raise ValueError("r_grid points must lie in (0, 1)")
            object.__setattr__(self, "r_grid", grid)
        if not math.isfinite(self.tolerance):
            raise ValueError("tolerance must be finite")
        if self.fmt not in ("json", "csv"):
            raise ValueError("format must be 'json' or 'csv'")

    def describe(self) -> dict:
        out = dataclasses.asdict(self)
        out["r_grid"] = None if self.r_grid is None else list(self.r_grid)
        return out


@dataclasses.dataclass(frozen=True)
class TrialRecord:
    """One trial: the stream index, drawn parameters, and worst margin."""

    index: int
    seed: int
    params: dict
    worst_margin: float
    passed: bool

    def describe(self) -> dict:
        return dataclasses.asdict(self)


@dataclasses.dataclass
class Report:
    """Campaign outcome: config echo, per-trial records, summary stats."""

    suite: str
    config: dict
    records: list
    pass_count: int
    min_margin: float
    wall_time_s: float

    @property
    def trials(self) -> int:
        return len(self.records)

    @property
    def passed(self) -> bool:
        return self.pass_count == self.trials

    def describe(self) -> dict:
        return {
            "suite": self.suite,
            "config": self.config,
            "trials": self.trials,
            "pass_count": self.pass_count,
            "min_margin": self.min_margin,
            "wall_time_s": self.wall_time_s,
            "records": [r.describe() for r in self.records],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.describe(), indent=indent, sort_keys=True)

    def write(self, path: str, fmt: str | None = None) -> None:
        """Write JSON (full report) or CSV (one row per trial)."""
        fmt = fmt or ("csv" if path.endswith(".csv") else "json")
        if fmt == "json":
            with open(path, "w") as fh:
                fh.write(self.to_json())
                fh.write("\n")
            return
        if fmt != "csv":
            raise ValueError("format must be 'json' or 'csv'")
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["index", "seed", "params", "worst_margin", "passed"])
            for r in self.records:
                writer.writerow([
                    r.index,
                    r.seed,
                    json.dumps(r.params, sort_keys=True),
                    repr(r.worst_margin),
                    r.passed,
                ])


def default_grid(r_max: float, points: int = 20) -> tuple:
    """points equispaced radii in (0, r_max]."""
    if not 0.0 < r_max < 1.0:
        raise ValueError("r_max must lie in (0, 1)")
    return tuple(r_max * i / points for i in range(1, points + 1))


def _grid_for(config: CampaignConfig, r_max: float) -> tuple:
    """The configured grid clipped to the regime of validity, or the
    default 20-point grid on (0, r_max]."""
    if config.r_grid is None:
        return default_grid(r_max)
    grid = tuple(r for r in config.r_grid if r <= r_max + 1e-15)
    if not grid:
        raise ValueError(f"no configured grid point lies in (0, {r_max}]")
    return grid


def _trial_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng([seed & _SEED_MASK, index])


def _thread_budget() -> int:
    raw = os.environ.get("BOHRLAB_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        n = 1
    return max(1, n)


def _failure_path(config: CampaignConfig, index: int) -> str:
    base = os.path.dirname(config.out) if config.out else "."
    return os.path.join(base or ".", f"{config.suite}-failure-{index:05d}.json")


def _run_campaign(config: CampaignConfig, trial_fn, extra_config: dict | None = None) -> Report:
    """Shared driver: map trials over an optional thread pool, collect
    records in index order, dump failed instances, assemble the report.

    trial_fn(rng) returns (worst_margin, params, instance_payload_fn);
    the payload function is only called if the trial failed.
    """
    start = time.perf_counter()

    def one(index: int):
        rng = _trial_rng(config.seed, index)
        margin, params, payload_fn = trial_fn(rng)
        margin = float(margin)
        record = TrialRecord(index, config.seed, params, margin, margin >= -config.tolerance)
        return record, payload_fn

    threads = _thread_budget()
    indices = range(config.trials)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(one, indices))
    else:
        outcomes = [one(i) for i in indices]

    records = []
    for record, payload_fn in outcomes:
        records.append(record)
        if not record.passed:
            dump = {
                "suite": config.suite,
                "config": config.describe(),
                "record": record.describe(),
                "instance": payload_fn(),
            }
            with open(_failure_path(config, record.index), "w") as fh:
                json.dump(dump, fh, indent=2, sort_keys=True)

    config_echo = config.describe()
    if extra_config:
        config_echo.update(extra_config)
    report = Report(
        suite=config.suite,
        config=config_echo,
        records=records,
        pass_count=sum(r.passed for r in records),
        min_margin=min(r.worst_margin for r in records),
        wall_time_s=time.perf_counter() - start,
    )
    if config.out:
        report.write(config.out, config.fmt)
    return report


def _draw_target(rng: np.random.Generator, config: CampaignConfig):
    """A random subordination target g and the tail bound its
    subordinates inherit: Schur targets give 1, convex targets give
    their beta, starlike targets give none."""
    kind = ("schur", "convex", "starlike")[int(rng.integers(3))]
    if kind == "schur":
        g = gen_schur_matrix(rng, config.dim, config.degree)
        return g, 1.0, {"target": "schur"}
    if kind == "convex":
        beta = float(rng.uniform(0.25, 2.0))
        g = convex_model(beta, config.dim, config.degree)
        return g, beta, {"target": "convex", "beta": beta}
    u = float(rng.uniform()) * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
    g = starlike_from_q(CaratheodoryScalar(u), config.dim, config.degree)
    return g, None, {"target": "starlike", "u": [u.real, u.imag]}


def _inner(rng: np.random.Generator, degree: int) -> MatrixSeries:
    """Random origin-fixed Blaschke product (an admissible inner map)."""
    return blaschke_series(random_blaschke_spec(rng, fix_origin=True), degree)


def _margin(lhs_major, rhs_fn, grid) -> float:
    """min over the grid of rhs(r) - certified upper Bohr value of lhs."""
    worst = math.inf
    for r in grid:
        worst = min(worst, rhs_fn(r) - lhs_major.bohr(r).hi)
    return worst


def run_subordination(config: CampaignConfig) -> Report:
    """f subordinate to g implies Bohr(f, r) <= Bohr(g, r) for r <= 1/3.

    Each trial draws a target g and an origin-fixed inner map phi, forms
    f = g(phi) (which is subordinate by construction), reattaches the
    structurally justified tail bound, and compares certified endpoints
    over the grid.
    """
    grid = _grid_for(config, 1.0 / 3.0)

    def trial(rng):
        g, f_bound, params = _draw_target(rng, config)
        phi = _inner(rng, config.degree)
        f = with_coeff_bound(compose(g, phi), f_bound)
        mg, mf = majorant(g), majorant(f)
        margin = _margin(mf, lambda r: mg.bohr(r).lo, grid)

        def payload():
            return {"g": series_to_json(g), "phi": series_to_json(phi), "f": series_to_json(f)}

        return margin, params, payload

    return _run_campaign(config, trial, {"r_max": 1.0 / 3.0})


def run_quasi_subordination(config: CampaignConfig, m_bound: float = 1.5,
                            beta: float = 0.9) -> Report:
    """Quasi-subordination: f = h * (g o phi) with ||h|| <= m_bound on
    |z| < beta implies Bohr(f, r) <= m_bound * Bohr(g, r) for r <= beta/3.

    h is built as m_bound * s(z / beta) from a random Schur function s,
    so the sup bound on the beta-disk holds structurally.
    """
    if m_bound <= 0.0 or not 0.0 < beta <= 1.0:
        raise ValueError("need m_bound > 0 and beta in (0, 1]")
    grid = _grid_for(config, beta / 3.0)

    def trial(rng):
        g, _, params = _draw_target(rng, config)
        phi = _inner(rng, config.degree)
        s = gen_schur_matrix(rng, config.dim, config.degree, scalar_head=True)
        dilation = np.zeros(config.degree + 1, dtype=np.complex128)
        dilation[1] = 1.0 / beta
        h = scale(compose(s, scalar_series(dilation)), m_bound)
        f = mul(h, compose(g, phi))
        mg, mf = majorant(g), majorant(f)
        margin = _margin(mf, lambda r: m_bound * mg.bohr(r).lo, grid)

        def payload():
            return {
                "g": series_to_json(g),
                "phi": series_to_json(phi),
                "h": series_to_json(h),
                "f": series_to_json(f),
            }

        return margin, params, payload

    return _run_campaign(config, trial, {"m_bound": m_bound, "beta": beta, "r_max": beta / 3.0})


def run_von_neumann(config: CampaignConfig) -> Report:
    """Composition with an inner map keeps the Bohr sum of a contraction
    below 1 for r <= 1/3: Bohr(f o phi, r) <= sup ||f|| = 1."""
    grid = _grid_for(config, 1.0 / 3.0)

    def trial(rng):
        f = gen_schur_matrix(rng, config.dim, config.degree, scalar_head=True)
        phi = _inner(rng, config.degree)
        comp = with_coeff_bound(compose(f, phi), 1.0)
        margin = _margin(majorant(comp), lambda r: 1.0, grid)

        def payload():
            return {"f": series_to_json(f), "phi": series_to_json(phi),
                    "composition": series_to_json(comp)}

        return margin, {}, payload

    return _run_campaign(config, trial, {"r_max": 1.0 / 3.0})


def _poly_base_layer(rng: np.random.Generator, fam: RadiusFamily,
                     config: CampaignConfig) -> MatrixSeries:
    """Base layer matching the family's hypothesis.  Disk evidence:
    the general family is exercised at lambda = 1 with an origin-fixed
    contraction; convex/starlike use subordination to their models."""
    if fam.tag == "general":
        return gen_schur_matrix(rng, config.dim, config.degree, fix_origin=True)
    phi = _inner(rng, config.degree)
    if fam.tag == "convex":
        g = convex_model(fam.beta, config.dim, config.degree)
        return with_coeff_bound(compose(g, phi), fam.beta)
    if fam.tag == "starlike":
        u = float(rng.uniform()) * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
        g = starlike_from_q(CaratheodoryScalar(u), config.dim, config.degree)
        return compose(g, phi)
    raise ValueError(f"no instance generator for family {fam.tag!r}")


def run_polyanalytic(config: CampaignConfig, fam: RadiusFamily) -> Report:
    """Layered Bohr sum stays <= 1 up to the family's computed radius.

    Each trial draws a base layer matching the family hypothesis and
    p - 1 ratio functions of norm <= k (scaled Schur functions), builds
    F, and checks the certified layered sum on a grid that stops just
    short of the solved radius.
    """
    if fam.p == math.inf:
        raise ValueError("campaigns need a finite order p")
    p = int(fam.p)
    radius = solve_radius(fam).radius
    grid = _grid_for(config, radius - config.tolerance)

    def trial(rng):
        f0 = _poly_base_layer(rng, fam, config)
        omegas = [
            with_coeff_bound(
                scale(gen_schur_matrix(rng, config.dim, config.degree, scalar_head=True), fam.k),
                fam.k,
            )
            for _ in range(p - 1)
        ]
        fn = build_polyanalytic(f0, omegas, fam.k)
        majors = [majorant(f) for f in fn.components]
        worst = math.inf
        for r in grid:
            total = sum(r**l * m.bohr(r).hi for l, m in enumerate(majors))
            worst = min(worst, 1.0 - total)

        def payload():
            return {"fn": polyanalytic_to_json(fn)}

        return worst, {}, payload

    return _run_campaign(config, trial, {"family": fam.describe(), "radius": radius})


@dataclasses.dataclass(frozen=True)
class SharpnessScan:
    """Scan of the extremal witness's Bohr sum against 1."""

    a: float
    r_values: tuple
    bohr_values: tuple
    first_exceed: float | None
    threshold: float | None
    predicted_threshold: float

    def describe(self) -> dict:
        return {
            "a": self.a,
            "r_values": list(self.r_values),
            "bohr_values": list(self.bohr_values),
            "first_exceed": self.first_exceed,
            "threshold": self.threshold,
            "predicted_threshold": self.predicted_threshold,
        }


def run_sharpness_scan(a: float, r_min: float = 0.0, r_max: float = 0.5,
                       steps: int = 200, degree: int = 64) -> SharpnessScan:
    """Tabulate the Bohr sum of the disk automorphism witness on a grid
    and locate where it first exceeds 1.

    The crossing, refined by bisection on the truncated sum, sits at
    1/(1 + 2a); as a -> 1 it approaches 1/3 from above, which is what
    makes the constant 1/3 sharp.  Lower endpoints are used throughout
    so an excess over 1 is genuine rather than a tail allowance.
    """
    if not 0.0 <= r_min < r_max < 1.0:
        raise ValueError("need 0 <= r_min < r_max < 1")
    if steps < 2:
        raise ValueError("steps must be >= 2")
    f = mobius_extremal(a, degree)
    m = majorant(f)
    rs = np.linspace(r_min, r_max, steps)
    vals = np.array([m.bohr(float(r)).lo for r in rs])
    exceed = np.nonzero(vals > 1.0)[0]
    first_exceed = float(rs[exceed[0]]) if exceed.size else None
    threshold = None
    if exceed.size and exceed[0] > 0:
        lo, hi = float(rs[exceed[0] - 1]), float(rs[exceed[0]])
        while hi - lo > 1e-12:
            mid = 0.5 * (lo + hi)
            if m.bohr(mid).lo > 1.0:
                hi = mid
            else:
                lo = mid
        threshold = 0.5 * (lo + hi)
    elif exceed.size:
        threshold = float(rs[0])
    return SharpnessScan(
        a=float(a),
        r_values=tuple(float(r) for r in rs),
        bohr_values=tuple(float(v) for v in vals),
        first_exceed=first_exceed,
        threshold=threshold,
        predicted_threshold=1.0 / (1.0 + 2.0 * float(a)),
    )


def emit_radius_table(families=None, out: str | None = None,
                      fmt: str | None = None, tol: float = 1e-12) -> list:
    """Solve the radius equation over a standard parameter sweep.

    One row per (family, parameters) combination: root, certified
    bracket, cap, usable radius, and which of root/cap binds.  Written
    as CSV or JSON when out is given (format inferred from the
    extension unless fmt is passed).
    """
    from .radii import FAMILY_TAGS, convex_sub, general_sc, half_plane, omega_gamma, starlike_sub

    families = tuple(families) if families else FAMILY_TAGS
    unknown = [f for f in families if f not in FAMILY_TAGS]
    if unknown:
        raise ValueError(f"unknown families: {unknown}")
    k_grid = (0.0, 0.25, 0.5, 1.0)
    p_grid = (2, 3, 5, 8)
    rows = []

    def emit(fam):
        res = solve_radius(fam, tol)
        row = {
            "family": fam.tag,
            "k": fam.k,
            "p": "inf" if fam.p == math.inf else int(fam.p),
            "lambda": fam.lam,
            "gamma": fam.gamma,
            "beta": fam.beta,
            "root": res.root,
            "bracket_lo": None if res.bracket is None else res.bracket.lo,
            "bracket_hi": None if res.bracket is None else res.bracket.hi,
            "cap": res.cap,
            "radius": res.radius,
            "binding": res.binding,
        }
        rows.append(row)

    for k in k_grid:
        for p in p_grid:
            for tag in families:
                if tag == "general":
                    for lam in (0.5, 1.0):
                        emit(general_sc(lam, k, p))
                elif tag == "omega-gamma":
                    for gamma in (0.0, 0.25, 0.5):
                        emit(omega_gamma(gamma, k, p))
                elif tag == "half-plane":
                    emit(half_plane(k, p))
                elif tag == "convex":
                    for beta in (0.5, 1.0):
                        emit(convex_sub(beta, k, p))
                else:
                    emit(starlike_sub(k, p))

    if out:
        use = fmt or ("csv" if out.endswith(".csv") else "json")
        if use == "json":
            with open(out, "w") as fh:
                json.dump(rows, fh, indent=2, sort_keys=True)
                fh.write("\n")
        elif use == "csv":
            with open(out, "w", newline="") as fh:
                writer = csv.DictWriter(fh, fieldnames=list(rows[0].keys()))
                writer.writeheader()
                writer.writerows(rows)
        else:
            raise ValueError("format must be 'json' or 'csv'")
    return rows
