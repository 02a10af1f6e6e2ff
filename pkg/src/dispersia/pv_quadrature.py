r"""Principal-value quadrature for the integral-form solution.

The OFF->ON field for any dispersion relation is

.. math::

    u = \tfrac{A}{2}[\sin(\Omega t - Kx) + \sin(\Omega t + Kx)]
        - \frac{A\Omega}{\pi}\,\mathrm{PV}\!\int_0^\infty
          \frac{k}{k^2-K^2}\frac{1}{\omega(k)}
          [\cos(\omega t - kx) - \cos(\omega t + kx)]\,dk .

:func:`pv_integrate` evaluates such integrals in three parts:

* smooth stretches on adaptive Gauss-Legendre panels (10 vs 20 nodes);
* the window ``[K - eps, K + eps]`` folded onto ``f(K+s) + f(K-s)``, which
  equals the pole-subtracted integrand ``(g(k) - g(K))/(k - K)`` and is
  bounded at ``s = 0``;
* the oscillatory tail from ``k_max/2`` onward, cut into half-period cells
  whose partial sums are repeatedly averaged (Euler transformation).
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.optimize import brentq

from .dispersion import DispersionRelation, SourceSignal, wavenumber_for
from .errors import ConfigurationError, ConvergenceError, SingularMediumError
from .special_functions import fresnel

__all__ = [
    "PVQuadratureConfig",
    "adaptive_quad",
    "pv_integrate",
    "fourier_sine_refs",
    "u_integral",
    "TAIL_MODES",
]

TAIL_MODES = ("truncate", "average-extrapolate")

MIN_TAIL_CELLS = 16
MAX_EULER_DEPTH = 12
MAX_PANELS = 2_000_000
MAX_TAIL_EXTENSION = 1e3

_X10, _W10 = leggauss(10)
_X20, _W20 = leggauss(20)
_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class PVQuadratureConfig:
    """Parameters of :func:`pv_integrate`.

    ``epsilon`` and ``k_max`` default to ``K/100`` and ``max(8K, 40/rate)``
    respectively, resolved per call.
    """

    epsilon: float | None = None
    k_max: float | None = None
    panel_tol: float = 1e-8
    tail_mode: str = "average-extrapolate"

    def __post_init__(self):
        mode = {"average": "average-extrapolate"}.get(self.tail_mode, self.tail_mode)
        if mode not in TAIL_MODES:
            raise ConfigurationError(f"tail_mode must be one of {TAIL_MODES}")
        object.__setattr__(self, "tail_mode", mode)
        if not 0.0 < self.panel_tol <= 1e-3:
            raise ConfigurationError("panel_tol must lie in (0, 1e-3]")
        if self.epsilon is not None and not self.epsilon > 0:
            raise ConfigurationError("epsilon must be positive")
        if self.k_max is not None and not self.k_max > 0:
            raise ConfigurationError("k_max must be positive")

    def with_k_max(self, k_max):
        return PVQuadratureConfig(self.epsilon, k_max, self.panel_tol, self.tail_mode)


# --------------------------------------------------------------------------
# panels


def _gauss_panels(f, lo, hi):
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    f20 = np.asarray(f(mid[:, None] + half[:, None] * _X20), dtype=float)
    f10 = np.asarray(f(mid[:, None] + half[:, None] * _X10), dtype=float)
    q20 = half * (f20 @ _W20)
    q10 = half * (f10 @ _W10)
    mag = half * (np.abs(f20) @ _W20)
    return q20, np.abs(q20 - q10), mag


def _panel_sums(f, lo, hi, tol, span, max_panels=MAX_PANELS):
    """Integrals over each [lo_i, hi_i], refined adaptively where needed."""
    lo = np.asarray(lo, dtype=float)
    hi = np.asarray(hi, dtype=float)
    owner = np.arange(lo.size)
    out = np.zeros(lo.size)
    used = 0
    while lo.size:
        q, err, mag = _gauss_panels(f, lo, hi)
        if not np.all(np.isfinite(q)):
            raise ConvergenceError("non-finite integrand on a quadrature panel",
                                   {"lo": float(lo[0]), "hi": float(hi[-1])})
        used += lo.size
        width = hi - lo
        ok = (
            (err <= tol * width / span)
            | (err <= 64 * _EPS * mag)
            | (width <= 1e-12 * np.maximum(np.abs(hi), 1.0))
        )
        np.add.at(out, owner[ok], q[ok])
        if used > max_panels:
            raise ConvergenceError(
                "panel budget exhausted", {"panels": used, "unresolved": int((~ok).sum())}
            )
        bad = ~ok
        mid = 0.5 * (lo[bad] + hi[bad])
        lo = np.concatenate([lo[bad], mid])
        hi = np.concatenate([mid, hi[bad]])
        owner = np.concatenate([owner[bad], owner[bad]])
    return out


def _rate_callable(phase_rate):
    if phase_rate is None:
        return None
    if callable(phase_rate):
        return lambda k: np.abs(np.asarray(phase_rate(k), dtype=float))
    value = abs(float(phase_rate))
    return lambda k: np.full_like(np.asarray(k, dtype=float), value)


def adaptive_quad(f, a, b, tol=1e-10, phase_rate=None):
    """Adaptive Gauss-Legendre integral of a vectorised `f` over [a, b].

    `phase_rate` (a number or a function of k) sizes the initial panels at
    about half an oscillation each.
    """
    if not b > a:
        return 0.0
    n_init = 16
    rate = _rate_callable(phase_rate)
    if rate is not None:
        probe = np.linspace(a, b, 65)
        span_phase = float(np.max(rate(probe))) * (b - a)
        n_init = max(n_init, int(math.ceil(span_phase / math.pi)))
    if n_init > MAX_PANELS:
        raise ConvergenceError("interval too oscillatory for the panel budget",
                               {"a": a, "b": b, "panels": n_init})
    edges = np.linspace(a, b, n_init + 1)
    sums = _panel_sums(f, edges[:-1], edges[1:], tol, b - a)
    return math.fsum(sums)


# --------------------------------------------------------------------------
# tail


def _estimate_rate(f, a, b, n=8193):
    k = np.linspace(a, b, n)
    v = np.asarray(f(k), dtype=float)
    changes = int(np.count_nonzero(np.signbit(v[1:]) != np.signbit(v[:-1])))
    if changes < 4:
        return None
    return _rate_callable(math.pi * changes / (b - a))


def _cell_edges(rate, b0, k_end):
    """Approximate half-period cell edges on [b0, >= k_end]."""
    span = k_end - b0
    while True:
        m = 2049
        ks = np.linspace(b0, b0 + span, m)
        r = rate(ks)
        phase = np.concatenate([[0.0], np.cumsum(0.5 * (r[1:] + r[:-1]) * np.diff(ks))])
        n_cells = int(phase[-1] // math.pi)
        if n_cells > m // 8:
            m = 8 * n_cells + 1
            ks = np.linspace(b0, b0 + span, m)
            r = rate(ks)
            phase = np.concatenate(
                [[0.0], np.cumsum(0.5 * (r[1:] + r[:-1]) * np.diff(ks))]
            )
            n_cells = int(phase[-1] // math.pi)
        if n_cells >= MIN_TAIL_CELLS:
            targets = math.pi * np.arange(n_cells + 1)
            return np.interp(targets, phase, ks)
        span *= 2.0
        if b0 + span > MAX_TAIL_EXTENSION * k_end:
            return None


def _euler_limit(partial):
    seq = np.asarray(partial, dtype=float)
    for _ in range(seq.size - 1):
        seq = 0.5 * (seq[1:] + seq[:-1])
    return float(seq[0])


def _power_law_tail(f, b0, k_max, head, tol, max_doublings=20):
    # Fit f ~ k^-p at the cut and add the analytic remainder; the fit is only
    # asymptotic, so push the cut out until successive estimates agree.
    total = head + adaptive_quad(f, b0, k_max, tol)
    previous = None
    for _ in range(max_doublings):
        f1 = float(f(np.array([k_max]))[0])
        f2 = float(f(np.array([2.0 * k_max]))[0])
        if f1 == 0.0 and f2 == 0.0:
            return total
        if f1 * f2 <= 0:
            raise ConvergenceError(
                "tail neither oscillates nor decays monotonically",
                {"k_max": k_max, "f(k_max)": f1, "f(2 k_max)": f2},
            )
        p = math.log2(f1 / f2)
        if p <= 1.05:
            raise ConvergenceError(
                "non-oscillatory tail decays too slowly to converge",
                {"k_max": k_max, "decay_exponent": p},
            )
        estimate = total + f1 * k_max / (p - 1.0)
        if previous is not None and abs(estimate - previous) <= tol * max(1.0, abs(estimate)):
            return estimate
        previous = estimate
        total += adaptive_quad(f, k_max, 2.0 * k_max, tol)
        k_max *= 2.0
    raise ConvergenceError("power-law tail did not settle",
                           {"k_max": k_max, "estimate": previous})


def _peak_magnitude(f, a, b, n=257):
    return float(np.max(np.abs(np.asarray(f(np.linspace(a, b, n)), dtype=float))))


def _averaged_tail(f, b0, k_max, rate, head, tol):
    if rate is None:
        rate = _estimate_rate(f, b0, k_max)
    if rate is None or not float(rate(np.array([b0]))[0]) > 0:
        return _power_law_tail(f, b0, k_max, head, tol)
    edges = _cell_edges(rate, b0, k_max)
    if edges is None:
        return _power_law_tail(f, b0, k_max, head, tol)
    if edges.size - 1 > MAX_PANELS:
        raise ConvergenceError("too many tail cells", {"cells": edges.size - 1})
    cells = _panel_sums(f, edges[:-1], edges[1:], tol, edges[-1] - edges[0])
    partial = head + np.cumsum(cells)
    depth = min(MAX_EULER_DEPTH, partial.size - 2)
    estimate = _euler_limit(partial[-(depth + 1):])
    previous = _euler_limit(partial[-(depth + 2):-1])
    quarter = max(cells.size // 4, 1)
    first = _peak_magnitude(f, edges[0], edges[quarter])
    last = _peak_magnitude(f, edges[-1 - quarter], edges[-1])
    settle = abs(estimate - previous)
    diagnostics = {
        "cells": int(cells.size),
        "k_end": float(edges[-1]),
        "estimate": estimate,
        "previous_estimate": previous,
        "first_quarter_peak": first,
        "last_quarter_peak": last,
    }
    if first > 0 and last >= 0.99 * first:
        raise ConvergenceError("tail amplitude does not decay", diagnostics)
    if settle > math.sqrt(tol) * max(1.0, abs(estimate)):
        raise ConvergenceError("Euler-averaged tail did not settle", diagnostics)
    return estimate


# --------------------------------------------------------------------------
# principal value


def _default_k_max(K, rate):
    base = 8.0 * K if K is not None else 0.0
    if rate is None:
        if K is None:
            raise ConfigurationError("k_max must be given when there is no pole and no phase rate")
        return base

    def excess(k):
        return k * float(rate(np.array([k]))[0]) - 40.0

    hi = max(base, 1.0)
    while excess(hi) < 0:
        hi *= 2.0
        if hi > 1e12:
            raise ConfigurationError("phase rate too small to choose k_max")
    lo = hi / 2.0
    while lo > 1e-12 and excess(lo) > 0:
        lo /= 2.0
    k40 = brentq(excess, lo, hi, rtol=1e-12) if excess(lo) < 0 else lo
    return max(base, k40)


def pv_integrate(integrand, K, cfg: PVQuadratureConfig | None = None, *,
                 lower: float = 0.0, phase_rate=None) -> float:
    """Principal value of ``integral_lower^inf integrand(k) dk``.

    Parameters
    ----------
    integrand : callable
        Vectorised function of k (called with 1-D and 2-D arrays) with at
        most a simple pole at `K`.
    K : float or None
        Pole location; ``None`` for pole-free integrands.
    cfg : PVQuadratureConfig, optional
    lower : float
        Lower limit; must not fall inside the excised window.
    phase_rate : float or callable, optional
        Local angular frequency of the oscillation in k, used to size
        panels and tail cells.  Estimated from sign changes when omitted.

    Raises
    ------
    ConvergenceError
        If the tail does not settle; ``exc.diagnostics`` has the details.
    """
    cfg = cfg or PVQuadratureConfig()
    tol = cfg.panel_tol
    rate = _rate_callable(phase_rate)

    eps = None
    if K is not None:
        eps = cfg.epsilon if cfg.epsilon is not None else K / 100.0
        if not 0.0 < eps < K / 2.0:
            raise ConfigurationError(f"epsilon={eps} must lie in (0, K/2) for K={K}")
        if K - eps < lower < K + eps:
            raise ConfigurationError("lower limit falls inside the excised pole window")
    k_max = cfg.k_max if cfg.k_max is not None else _default_k_max(K, rate)
    if K is not None and not k_max > 4.0 * K:
        raise ConfigurationError(f"k_max={k_max} must exceed 4K={4.0 * K}")
    b0 = 0.5 * k_max
    if not b0 > lower:
        raise ConfigurationError("k_max/2 must exceed the lower limit")

    if K is not None and lower < K:
        def folded(s):
            return np.asarray(integrand(K + s), dtype=float) + np.asarray(integrand(K - s), dtype=float)

        head = (
            adaptive_quad(integrand, lower, K - eps, tol, rate)
            + adaptive_quad(folded, 0.0, eps, tol, rate)
            + adaptive_quad(integrand, K + eps, b0, tol, rate)
        )
    else:
        head = adaptive_quad(integrand, lower, b0, tol, rate)

    if cfg.tail_mode == "truncate":
        return head + adaptive_quad(integrand, b0, k_max, tol, rate)
    return _averaged_tail(integrand, b0, k_max, rate, head, tol)


def fourier_sine_refs(alpha: float, beta: float, which: str = "sin-kernel") -> float:
    """Closed-form sine transforms of sin(alpha k^2)/k and cos(alpha k^2)/k.

    ``which="sin-kernel"`` gives ``integral_0^inf sin(alpha k^2) sin(beta k)/k dk``,
    ``which="cos-kernel"`` the same with cos(alpha k^2).
    """
    if alpha == 0:
        raise ConfigurationError("alpha must be non-zero")
    c, s = fresnel(beta / math.sqrt(2.0 * math.pi * abs(alpha)))
    if which == "sin-kernel":
        return 0.5 * math.pi * math.copysign(1.0, alpha) * (c - s)
    if which == "cos-kernel":
        return 0.5 * math.pi * (c + s)
    raise ConfigurationError("which must be 'sin-kernel' or 'cos-kernel'")


# --------------------------------------------------------------------------
# integral-form field


def _guarded_omega(rel, k):
    w = np.asarray(rel.omega(k), dtype=float)
    if np.any(w == 0.0):
        raise SingularMediumError(f"omega(k) vanishes inside the integration range ({rel.name})")
    return w


def _stationary_safe_k_max(rel, t, x, k_max):
    # keep the phase rate omega'(k) t - x of one sign over the tail window
    for _ in range(40):
        probe = np.linspace(0.5 * k_max, k_max, 33)
        r = np.asarray(rel.d_omega(probe), dtype=float) * t - x
        if np.ptp(np.sign(r)) == 0:
            return k_max
        k_max *= 2.0
    return k_max


def _u_integral_point(src, rel, K, x, t, cfg):
    A, W = src.amplitude, src.omega
    if t < 0:
        return 0.0
    if x == 0.0 or t == 0.0:
        return A * math.sin(W * t) * math.cos(K * x)
    k_max = cfg.k_max
    if k_max is None:
        k_max = max(8.0 * K, 40.0 / x)
    k_max = _stationary_safe_k_max(rel, t, x, k_max)
    local = cfg.with_k_max(k_max)
    K2 = K * K

    def product(k):
        w = _guarded_omega(rel, k)
        return k / ((k * k - K2) * w) * 2.0 * np.sin(w * t) * np.sin(k * x)

    def minus(k):
        w = _guarded_omega(rel, k)
        return k / ((k * k - K2) * w) * np.cos(w * t - k * x)

    def plus(k):
        w = _guarded_omega(rel, k)
        return -k / ((k * k - K2) * w) * np.cos(w * t + k * x)

    def rate_minus(k):
        return np.asarray(rel.d_omega(k), dtype=float) * t - x

    def rate_plus(k):
        return np.asarray(rel.d_omega(k), dtype=float) * t + x

    split = 0.5 * K
    near_zero = adaptive_quad(product, 0.0, split, cfg.panel_tol,
                              lambda k: rate_plus(k))
    pv = (
        near_zero
        + pv_integrate(minus, K, local, lower=split, phase_rate=rate_minus)
        + pv_integrate(plus, K, local, lower=split, phase_rate=rate_plus)
    )
    return (
        0.5 * A * (math.sin(W * t - K * x) + math.sin(W * t + K * x))
        - A * W / math.pi * pv
    )


def _workers(requested):
    if requested is not None:
        return max(1, int(requested))
    env = os.environ.get("DISPERSIA_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def u_integral(src: SourceSignal, rel: DispersionRelation, x, t,
               cfg: PVQuadratureConfig | None = None, workers: int | None = None):
    """OFF->ON field from direct quadrature of the integral-form solution.

    Works for any dispersion relation positive on k > 0.  Points are
    independent and may be evaluated on a thread pool (``workers`` or the
    ``DISPERSIA_THREADS`` environment variable); results do not depend on
    the number of threads.
    """
    cfg = cfg or PVQuadratureConfig()
    K = wavenumber_for(rel, src.omega)
    xb, tb = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(t, dtype=float))
    if np.any(xb < 0):
        raise ConfigurationError("u_integral needs x >= 0")
    pts = list(zip(xb.ravel().tolist(), tb.ravel().tolist()))

    def one(p):
        return _u_integral_point(src, rel, K, p[0], p[1], cfg)

    n = _workers(workers)
    if n == 1 or len(pts) == 1:
        vals = [one(p) for p in pts]
    else:
        with ThreadPoolExecutor(max_workers=n) as pool:
            vals = list(pool.map(one, pts))
    out = np.array(vals, dtype=float).reshape(xb.shape)
    if out.ndim == 0:
        return float(out)
    return out
