"""
Where is the front?
===================

For omega = D k^2 the ON/OFF boundary is a Fresnel-shaped envelope.  Its
value at x = v_g t is exactly A/2 at all times, it widens like sqrt(t),
and an observer riding the front sees an oscillation whose amplitude
approaches A/2 from below.
"""

import math

import numpy as np

from _common import plt, save
from dispersia import (
    SourceSignal,
    envelope_front_slope,
    envelope_on,
    front_amplitude_asymptotic,
    front_oscillation,
    u_quadratic,
)
from dispersia.verification import front_peaks

src = SourceSignal()
D = 1.0

# %% Envelope against the field
x = np.linspace(0.0, 140.0, 2801)
fig, axes = plt.subplots(2, 1, figsize=(8, 5))
for ax, t in zip(axes, (20.0, 50.0)):
    ax.plot(x, u_quadratic(src, D, x, t), lw=0.6)
    ax.plot(x, envelope_on(src, D, x, t), "k")
    ax.axvline(2 * t, ls="--", c="k", lw=0.8)
    ax.set_title(f"t* = {t:g}")
axes[1].set_xlabel("x*")
save(fig, "envelope.png")

for t in (10.0, 100.0, 1000.0):
    print(f"t*={t:6g}: envelope at v_g t = {envelope_on(src, D, 2 * t, t):.15f}")

# %% Thickness of the boundary
# The envelope depends on x and t only through (x - v_g t)/sqrt(t).
xi = np.linspace(-6, 6, 241)
fig, ax = plt.subplots(figsize=(6, 3.5))
for t in (25.0, 100.0, 400.0):
    ax.plot(xi, envelope_on(src, D, 2 * t + xi * math.sqrt(t), t), label=f"t* = {t:g}")
ax.set_xlabel("(x* - v_g t*) / sqrt(t*)")
ax.legend()
save(fig, "collapse.png")

for t in (10.0, 50.0, 200.0):
    h = 1e-5 * math.sqrt(t)
    fd = (envelope_on(src, D, 2 * t + h, t) - envelope_on(src, D, 2 * t - h, t)) / (2 * h)
    print(f"t*={t:g}: slope {fd:.6e}, closed form {envelope_front_slope(src, D, t):.6e}")

# %% Oscillation seen at x = v_g t
t = np.linspace(0.5, 100.0, 4000)
times, peaks = front_peaks(src, D, 10.0, 100.0)
fig, ax = plt.subplots(figsize=(8, 3.5))
ax.plot(t, front_oscillation(src, D, t), lw=0.7)
ax.plot(t, front_amplitude_asymptotic(src, t), "k--")
ax.plot(times, peaks, "r.", ms=3)
ax.set_xlabel("t*")
save(fig, "front_oscillation.png")
rel = np.abs(peaks / front_amplitude_asymptotic(src, times) - 1)
print(f"peaks vs large-t amplitude on t* in [10, 100]: worst {rel.max():.2%} at t*={times[rel.argmax()]:.2f}")
