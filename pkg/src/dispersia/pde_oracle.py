"""Explicit finite-difference solvers used as independent checks.

Three model equations on the half line x >= 0, driven at x = 0:

* wave          u_tt = c^2 u_xx                    (omega = c k)
* beam          u_tt = -D^2 u_xxxx                 (omega = D k^2)
* klein-gordon  u_tt = c^2 u_xx - omega0^2 u       (omega = sqrt(c^2 k^2 + omega0^2))

All use second-order central differences in space and leapfrog in time,
with a Taylor-consistent first step.  The beam's 4th-derivative stencil
needs one ghost node left of the source; see :func:`_beam_left_ghost`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dispersion import (
    DispersionRelation,
    KleinGordon,
    Nondispersive,
    Pattern,
    Quadratic,
    SourceSignal,
)
from .errors import ConfigurationError, DivergenceError
from .grid import FieldGrid

__all__ = ["OracleConfig", "solve", "PDES", "FAR_BOUNDARIES", "pde_for"]

PDES = ("wave", "beam", "klein-gordon")
FAR_BOUNDARIES = ("clamped-zero", "absorbing-pad")
BEAM_LEFT = ("source-even", "pinned")

WAVE_COURANT_MAX = 0.9
BEAM_NUMBER_MAX = 0.4
TAPER_FRACTION = 0.05
PAD_FRACTION = 0.25


@dataclass(frozen=True)
class OracleConfig:
    """Discretisation and model parameters for :func:`solve`.

    ``beam_left`` selects the ghost-node rule at the driven end of the
    beam: ``"source-even"`` makes u - A sin(Omega t) cos(K x) odd about
    x = 0 (the structure of the integral-form solution), ``"pinned"``
    imposes u_xx(0, t) = 0.
    """

    pde: str
    dx: float
    dt: float
    domain_length: float
    duration: float
    c: float = 1.0
    D: float = 1.0
    omega0: float = 1.0
    far_boundary: str = "clamped-zero"
    beam_left: str = "source-even"

    def __post_init__(self):
        if self.pde not in PDES:
            raise ConfigurationError(f"pde must be one of {PDES}")
        if self.far_boundary not in FAR_BOUNDARIES:
            raise ConfigurationError(f"far_boundary must be one of {FAR_BOUNDARIES}")
        if self.beam_left not in BEAM_LEFT:
            raise ConfigurationError(f"beam_left must be one of {BEAM_LEFT}")
        for name in ("dx", "dt", "domain_length", "duration", "c", "D", "omega0"):
            if not getattr(self, name) > 0:
                raise ConfigurationError(f"{name} must be positive")
        if self.pde == "beam":
            number = self.D * self.dt / self.dx**2
            if number > BEAM_NUMBER_MAX:
                raise ConfigurationError(
                    f"beam stability: D dt/dx^2 = {number:.4g} > {BEAM_NUMBER_MAX}"
                )
        else:
            courant = self.c * self.dt / self.dx
            if courant > WAVE_COURANT_MAX:
                raise ConfigurationError(
                    f"stability: c dt/dx = {courant:.4g} > {WAVE_COURANT_MAX}"
                )

    @property
    def relation(self) -> DispersionRelation:
        if self.pde == "wave":
            return Nondispersive(self.c)
        if self.pde == "beam":
            return Quadratic(self.D)
        return KleinGordon(self.c, self.omega0)

    def front_speed(self, src: SourceSignal) -> float:
        if self.pde == "beam":
            return 2.0 * self.D * self.relation.wavenumber(src.omega)
        return self.c

    def check_domain(self, src: SourceSignal):
        """Raise unless the far boundary stays causally out of reach."""
        v = self.front_speed(src)
        if self.pde == "beam":
            need = 3.0 * v * self.duration
            if self.domain_length < need:
                raise ConfigurationError(
                    f"beam domain_length {self.domain_length} < 3 v_g T = {need:.4g}"
                )
        else:
            need = v * self.duration + 10.0 * self.dx
            if self.domain_length <= need:
                raise ConfigurationError(
                    f"domain_length {self.domain_length} <= c T + margin = {need:.4g}"
                )

    @classmethod
    def for_relation(cls, rel: DispersionRelation, **kwargs) -> "OracleConfig":
        return cls(pde=pde_for(rel), **{**_relation_params(rel), **kwargs})


def pde_for(rel: DispersionRelation) -> str:
    if isinstance(rel, Nondispersive):
        return "wave"
    if isinstance(rel, Quadratic):
        return "beam"
    if isinstance(rel, KleinGordon):
        return "klein-gordon"
    raise ConfigurationError(f"no PDE oracle for {rel.name} dispersion")


def _relation_params(rel):
    if isinstance(rel, Nondispersive):
        return {"c": rel.c}
    if isinstance(rel, Quadratic):
        return {"D": rel.D}
    if isinstance(rel, KleinGordon):
        return {"c": rel.c, "omega0": rel.omega0}
    return {}


def _taper(x, length):
    """1 on [0, 0.95 L], smooth cosine roll-off to 0 at L."""
    start = (1.0 - TAPER_FRACTION) * length
    s = np.clip((x - start) / (length - start), 0.0, 1.0)
    return 0.5 * (1.0 + np.cos(np.pi * s))


def _beam_left_ghost(cfg, src, K, u1, t, on):
    # Ghost value u(-dx) for the 5-point stencil at node 1.
    if cfg.beam_left == "pinned":
        return 2.0 * u1[0] - u1[1]
    even = src.amplitude * math.sin(src.omega * t) * math.cos(K * cfg.dx) if on else 0.0
    return 2.0 * even - u1[1]


def solve(cfg: OracleConfig, src: SourceSignal, sample_times=None,
          x_max: float | None = None) -> FieldGrid:
    """Time-step the model PDE and sample u on the lattice.

    Parameters
    ----------
    cfg : OracleConfig
    src : SourceSignal
        ``OFF_TO_ON`` starts from rest with u(0, t) = A sin(Omega t);
        ``ON_TO_OFF`` starts from the steady wave (tapered near the far
        end) with u(0, t) = 0; ``BURST`` drives for n periods then holds 0.
    sample_times : sequence of float, optional
        Times to record, snapped to the nearest step.  Defaults to the
        final time only.
    x_max : float, optional
        Crop the returned lattice to x <= x_max.  For ``ON_TO_OFF`` the
        tapered end of the initial wave launches disturbances back towards
        the source, so x_max defaults to (and may not exceed) the largest x
        they cannot reach by the final time.

    Raises
    ------
    ConfigurationError
        Stability or domain-size violations.
    DivergenceError
        If the solution becomes non-finite.
    """
    cfg.check_domain(src)
    K = cfg.relation.wavenumber(src.omega)
    if src.pattern is Pattern.ON_TO_OFF:
        # beam disturbances have no sharp front; 3 v_g bounds their visible reach
        speed = cfg.front_speed(src) * (3.0 if cfg.pde == "beam" else 1.0)
        clean = (1.0 - TAPER_FRACTION) * cfg.domain_length - speed * cfg.duration
        if clean <= 0:
            raise ConfigurationError("domain too short: taper disturbances reach the source")
        if x_max is None:
            x_max = clean
        elif x_max > clean:
            raise ConfigurationError(
                f"x_max={x_max} lies inside the taper-disturbed region (x > {clean:.4g})"
            )
    A, W = src.amplitude, src.omega
    n_steps = max(1, int(math.ceil(cfg.duration / cfg.dt - 1e-9)))
    dt = cfg.duration / n_steps
    nx = int(round(cfg.domain_length / cfg.dx))
    dx = cfg.domain_length / nx
    pad = int(round(PAD_FRACTION * nx)) if cfg.far_boundary == "absorbing-pad" else 0
    n_total = nx + pad
    x = dx * np.arange(n_total + 1)

    if cfg.far_boundary == "absorbing-pad":
        depth = np.clip((x - cfg.domain_length) / (pad * dx), 0.0, 1.0)
        sigma_max = 3.0 * (cfg.c if cfg.pde != "beam" else 2.0 * cfg.D * K) / (pad * dx) * 10.0
        sigma = sigma_max * depth**3
    else:
        sigma = np.zeros_like(x)

    pattern = src.pattern
    on = pattern is not Pattern.ON_TO_OFF
    burst_end = src.n * src.period if pattern is Pattern.BURST else math.inf

    def boundary(t):
        if pattern is Pattern.ON_TO_OFF or t < 0 or t > burst_end:
            return 0.0
        return A * math.sin(W * t)

    def source_even(t):
        return on and 0.0 <= t <= burst_end

    c2 = cfg.c**2
    D2 = cfg.D**2
    w02 = cfg.omega0**2

    def rhs(u, t):
        r = np.zeros_like(u)
        if cfg.pde == "beam":
            ghost_l = _beam_left_ghost(cfg, src, K, u, t, source_even(t))
            ghost_r = u[-2]  # clamped: u_x = 0 at the far end
            ext = np.concatenate([[ghost_l], u, [ghost_r]])
            d4 = ext[4:] - 4.0 * ext[3:-1] + 6.0 * ext[2:-2] - 4.0 * ext[1:-3] + ext[:-4]
            r[1:-1] = -D2 * d4 / dx**4
        else:
            r[1:-1] = c2 * (u[2:] - 2.0 * u[1:-1] + u[:-2]) / dx**2
            if cfg.pde == "klein-gordon":
                r[1:-1] -= w02 * u[1:-1]
        return r

    if pattern is Pattern.ON_TO_OFF:
        taper = _taper(x, cfg.domain_length)
        u_prev = -A * np.sin(K * x) * taper
        v0 = A * W * np.cos(K * x) * taper
    else:
        u_prev = np.zeros_like(x)
        v0 = np.zeros_like(x)
    u_prev[0] = boundary(0.0)
    u_prev[-1] = 0.0

    u_cur = u_prev + dt * v0 + 0.5 * dt**2 * rhs(u_prev, 0.0)
    u_cur[0] = boundary(dt)
    u_cur[-1] = 0.0

    if sample_times is None:
        sample_steps = [n_steps]
    else:
        sample_steps = sorted({int(round(float(s) / dt)) for s in sample_times})
        if sample_steps[0] < 0 or sample_steps[-1] > n_steps:
            raise ConfigurationError("sample_times must lie within [0, duration]")
    keep = x <= (x_max if x_max is not None else cfg.domain_length) + 1e-12 * dx
    records = {}
    if 0 in sample_steps:
        records[0] = u_prev[keep].copy()
    if 1 in sample_steps:
        records[1] = u_cur[keep].copy()

    wanted = set(sample_steps)
    damp_lo = 1.0 - 0.5 * sigma * dt
    damp_hi = 1.0 + 0.5 * sigma * dt
    # overflow is reported as DivergenceError below, not as numpy warnings
    with np.errstate(over="ignore", invalid="ignore"):
        for n in range(1, n_steps):
            t = n * dt
            u_next = (2.0 * u_cur - damp_lo * u_prev + dt**2 * rhs(u_cur, t)) / damp_hi
            u_next[0] = boundary(t + dt)
            u_next[-1] = 0.0
            u_prev, u_cur = u_cur, u_next
            if n + 1 in wanted:
                if not np.all(np.isfinite(u_cur)):
                    raise DivergenceError(f"non-finite field at t = {t + dt}")
                records[n + 1] = u_cur[keep].copy()
            elif n % 64 == 0 and not np.isfinite(u_cur).all():
                raise DivergenceError(f"non-finite field at t = {t + dt}")
    if not np.all(np.isfinite(u_cur)):
        raise DivergenceError("non-finite field at the final time")

    meta = {
        "method": "oracle",
        "pde": cfg.pde,
        "dx": dx,
        "dt": dt,
        "domain_length": cfg.domain_length,
        "duration": cfg.duration,
        "far_boundary": cfg.far_boundary,
        "amplitude": A,
        "omega": W,
        "pattern": pattern.value,
        **_relation_params(cfg.relation),
    }
    return FieldGrid(
        x[keep],
        np.array(sample_steps, dtype=float) * dt,
        np.array([records[s] for s in sample_steps]),
        meta,
    )
