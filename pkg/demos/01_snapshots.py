"""
Switching on a source in two media
==================================

A harmonic source A sin(t) is switched on at x = 0 at t = 0.  In a
nondispersive string (omega = c k) the wave arrives as a sharp front
travelling at c.  In a beam-like medium (omega = D k^2) the front moves
at the group velocity 2 D K, twice the phase velocity, and is smeared.

Units: x* = x / length unit, t* = Omega t.  With Omega = c = D = 1 both
units are 1, so x and t below are already dimensionless.
"""

import numpy as np

from _common import plt, save
from dispersia import (
    Nondispersive,
    Quadratic,
    SourceSignal,
    u_integral,
    u_nondispersive,
    u_quadratic,
)

src = SourceSignal()  # A = 1, Omega = 1, OFF -> ON
x = np.linspace(0.0, 40.0, 801)

# %% Snapshots
u_c = u_nondispersive(src, 1.0, x, 25.0)
u_d = u_quadratic(src, 1.0, x, 15.0)

print("nondispersive, t*=25: max |u| beyond x*=25 =", np.abs(u_c[x > 25]).max())
print("quadratic, t*=15: |u| at x*=30 (front, v_g t) =", abs(u_quadratic(src, 1.0, 30.0, 15.0)))

fig, axes = plt.subplots(2, 1, figsize=(8, 5), sharex=True)
axes[0].plot(x, u_c)
axes[0].axvline(25.0, ls="--", c="k", lw=0.8)
axes[0].set_title("omega = c k, t* = 25")
axes[1].plot(x, u_d)
axes[1].axvline(30.0, ls="--", c="k", lw=0.8, label="x = v_g t")
axes[1].axvline(15.0, ls=":", c="k", lw=0.8, label="x = v_p t")
axes[1].set_title("omega = D k^2, t* = 15")
axes[1].set_xlabel("x*")
axes[1].legend()
save(fig, "snapshots.png")

# %% The closed forms agree with direct quadrature of the integral solution
xs = np.linspace(0.0, 40.0, 41)
d1 = np.abs(u_integral(src, Nondispersive(1.0), xs, 25.0) - u_nondispersive(src, 1.0, xs, 25.0)).max()
d2 = np.abs(u_integral(src, Quadratic(1.0), xs, 15.0) - u_quadratic(src, 1.0, xs, 15.0)).max()
print(f"closed form vs PV quadrature: {d1:.2e} (c k), {d2:.2e} (D k^2)")

# %% Space-time diagrams
t = np.linspace(0.0, 40.0, 321)
xx, tt = np.meshgrid(x, t)
fig, axes = plt.subplots(1, 2, figsize=(10, 4), sharey=True)
for ax, field, title in [
    (axes[0], u_nondispersive(src, 1.0, xx, tt), "omega = c k"),
    (axes[1], u_quadratic(src, 1.0, xx, tt), "omega = D k^2"),
]:
    ax.pcolormesh(x, t, field, cmap="RdBu_r", vmin=-1.5, vmax=1.5, shading="auto")
    ax.set_title(title)
    ax.set_xlabel("x*")
axes[1].plot(2.0 * t, t, "k--", lw=0.8)
axes[1].set_xlim(0, 40)
axes[0].set_ylabel("t*")
save(fig, "spacetime.png")
