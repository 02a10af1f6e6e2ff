"""
Checking the closed form against a beam simulation
==================================================

u_tt = -D^2 u_xxxx has dispersion omega = D k^2.  An explicit
finite-difference solve, driven with u(0, t) = sin t, should land on the
closed-form snapshot, and the error should fall by about 4 when the mesh
is halved (second-order stencil).
"""

import numpy as np

from _common import plt, save
from dispersia import OracleConfig, SourceSignal, solve, u_quadratic
from dispersia.verification import beam_oracle_error

src = SourceSignal()
cfg = OracleConfig("beam", dx=0.05, dt=0.4 * 0.05**2, domain_length=90.0,
                   duration=15.0, far_boundary="absorbing-pad")
grid = solve(cfg, src, x_max=40.0)
x = grid.x_values
num = grid.u_values[-1]
exact = u_quadratic(src, 1.0, x, 15.0)
print(f"sup |oracle - exact| on x* in [2 dx, 40] = {np.abs(num - exact)[x >= 0.1].max():.2e}")

for dx in (0.2, 0.1, 0.05):
    print(f"dx = {dx:5.3f}: error {beam_oracle_error(dx, 10.0, 30.0):.3e}")

fig, ax = plt.subplots(figsize=(8, 3.5))
ax.plot(x, exact, label="closed form")
ax.plot(x[::16], num[::16], "o", ms=3, label="finite differences")
ax.set_xlabel("x*")
ax.set_title("omega = D k^2, t* = 15")
ax.legend()
save(fig, "beam_oracle.png")
