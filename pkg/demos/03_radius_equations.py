"""Radius equations: certified roots, caps, and the limiting order.

Each family of layered Bohr inequalities comes with a polynomial
equation whose smallest root in (0, 1) is the working radius, clipped
by a cap that marks where the single-layer theory stops.  solve_radius
brackets the root with bisection, so the result is an interval you can
trust rather than a bare float from a generic root finder.

Run:  python3 demos/03_radius_equations.py
"""

import math

from bohrlab import (
    emit_radius_table,
    general_sc,
    half_plane,
    lambda_bound,
    omega_gamma,
    radius_poly_eval,
    solve_radius,
    starlike_sub,
)

# --- one family in detail ------------------------------------------------------

fam = omega_gamma(gamma=0.0, k=1.0, p=2)
res = solve_radius(fam)
print("omega-gamma(0), k=1, p=2:")
print(f"  bracket  [{res.bracket.lo:.15f}, {res.bracket.hi:.15f}]")
print(f"  root     {res.root:.12f}  (sqrt(2)-1 = {math.sqrt(2) - 1:.12f})")
print(f"  cap      {res.cap:.12f}")
print(f"  radius   {res.radius:.12f}  ({res.binding} binds)")

# the bracket really straddles the root
lo, hi = res.bracket.lo, res.bracket.hi
print("  sign change:", radius_poly_eval(fam, lo) > 0 > radius_poly_eval(fam, hi))

# --- caps vs roots ----------------------------------------------------------------

print("\nwhen the polynomial root lands beyond the cap, the cap wins:")
res = solve_radius(half_plane(1.0, 2))
print(f"  half-plane p=2: root {res.root:.6f} > cap {res.cap}; radius {res.radius}")

# growth constants the caps come from
print("lambda bound on the disk:", lambda_bound("disk"),
      "; on omega-gamma(0.25):", lambda_bound("omega-gamma", 0.25))

# --- order dependence ----------------------------------------------------------------

print("\nroots shrink as the layer count p grows, toward the limiting equation:")
for p in (2, 3, 5, 8, 20, math.inf):
    res = solve_radius(starlike_sub(1.0, p))
    tag = "inf" if p == math.inf else p
    print(f"  p={tag:>3}: root {res.root:.12f}")

# and shrink as the growth constant does
print("\ngeneral family, p=3, root as a function of lambda:")
for lam in (0.25, 0.5, 1.0):
    print(f"  lambda={lam}: root {solve_radius(general_sc(lam, 1.0, 3)).root:.10f}")

# --- everything at once -----------------------------------------------------------------

rows = emit_radius_table()
print(f"\nfull sweep: {len(rows)} rows; a few of them:")
for row in rows[:3]:
    print(" ", {k: row[k] for k in ("family", "k", "p", "root", "radius", "binding")})
print("write the whole table with emit_radius_table(out='radii.csv')")
