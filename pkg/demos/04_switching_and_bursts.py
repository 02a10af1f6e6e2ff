"""
Switching off, and finite bursts
================================

Switching a steady wave off is the complement of switching it on: the two
fields add up to A sin(t - K x).  A burst of n cycles is an ON field minus
the same field delayed by nT, so it carries two fronts, one at v_g t and
one at v_g (t - nT).
"""

import math

import numpy as np

from _common import plt, save
from dispersia import Pattern, Quadratic, SourceSignal, u_burst, u_quadratic, u_quadratic_off

D = 1.0
on = SourceSignal()
off = SourceSignal(pattern=Pattern.ON_TO_OFF)

# %% Complement identity
rng = np.random.default_rng(0)
x = rng.uniform(0, 50, 1000)
t = rng.uniform(0.01, 50, 1000)
resid = u_quadratic(on, D, x, t) + u_quadratic_off(off, D, x, t) - np.sin(t - x)
print("max |u_on + u_off - sin(t - x)| =", np.abs(resid).max())

# %% The OFF field near the source dies out like x / sqrt(t)
for xs in (1.0, 5.0, 10.0):
    tt = 1e4 + np.linspace(0, 2 * math.pi, 400)
    print(f"x*={xs:4g}: max |u_off| over one period at t*=1e4 = "
          f"{np.abs(u_quadratic_off(off, D, xs, tt)).max():.4f}")

# %% Two-cycle burst
burst = SourceSignal(pattern=Pattern.BURST, n=2)
xg = np.linspace(0, 120, 601)
tg = np.linspace(0, 50, 401)
xx, tt = np.meshgrid(xg, tg)
field = u_burst(burst, Quadratic(D), xx, tt)
nT = 2 * burst.period

fig, ax = plt.subplots(figsize=(7, 5))
ax.pcolormesh(xg, tg, field, cmap="RdBu_r", vmin=-1, vmax=1, shading="auto")
ax.plot(2 * tg, tg, "k--", lw=0.8)
ax.plot(2 * (tg - nT), tg, "k--", lw=0.8)
ax.set_xlim(0, 120)
ax.set_xlabel("x*")
ax.set_ylabel("t*")
ax.set_title("n = 2 burst, omega = D k^2")
save(fig, "burst.png")
