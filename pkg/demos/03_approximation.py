"""
A Fresnel approximation for any even dispersion relation
========================================================

Expanding omega(k) to second order about the source wavenumber gives an
approximate field controlled by v_g and the curvature gamma.  For D k^2
it differs from the exact field by exactly A[C(z) - S(z)], which matters
only near the source.  For Klein-Gordon it tracks a finite-difference
solution up to the front but leaves a slowly decaying wave ahead of it.
"""

import math

import numpy as np

from _common import plt, save
from dispersia import (
    KleinGordon,
    OracleConfig,
    Quadratic,
    SourceSignal,
    fresnel,
    front_parameters,
    solve,
    u_approx,
    u_quadratic,
)

# %% D k^2: exact minus approximate
src = SourceSignal()
x = np.linspace(0.0, 40.0, 801)
exact = u_quadratic(src, 1.0, x, 15.0)
approx = u_approx(src, Quadratic(1.0), x, 15.0)
c, s = fresnel(x / math.sqrt(2 * math.pi * 15.0))
print("max |exact - approx - A[C - S]| =", np.abs(exact - approx - (c - s)).max())

fig, ax = plt.subplots(figsize=(8, 3.5))
ax.plot(x, exact, label="exact")
ax.plot(x, approx, "--", label="approximate")
ax.set_xlabel("x*")
ax.set_title("omega = D k^2, t* = 15")
ax.legend()
save(fig, "approx_quadratic.png")

# %% Klein-Gordon, Omega* = 5 (above the cutoff omega0 = 1)
kg_src = SourceSignal(1.0, 5.0)
rel = KleinGordon(1.0, 1.0)
K, v_g, gamma = front_parameters(kg_src, rel)
print(f"K = {K:.4f}, v_g = {v_g:.4f}, gamma = {gamma:.5f}")

cfg = OracleConfig.for_relation(rel, dx=0.01, dt=0.005, domain_length=12.0,
                                duration=5.0, far_boundary="absorbing-pad")
grid = solve(cfg, kg_src, x_max=10.0)
xg = grid.x_values
num = grid.u_values[-1]
app = u_approx(kg_src, rel, xg, 5.0)
near, far = xg <= 4, xg >= 6
print(f"x* <= 4: sup |approx - oracle| = {np.abs(app - num)[near].max():.3f}")
print(f"x* >= 6: sup |oracle| = {np.abs(num[far]).max():.2e}, sup |approx| = {np.abs(app[far]).max():.3f}")

fig, ax = plt.subplots(figsize=(8, 3.5))
ax.plot(xg[::10], num[::10], "o", ms=3, label="finite differences")
ax.plot(xg, app, label="approximate")
ax.axvline(v_g * 5.0, ls="--", c="k", lw=0.8)
ax.set_xlabel("x*")
ax.set_title("Klein-Gordon, t* = 5")
ax.legend()
save(fig, "approx_klein_gordon.png")
