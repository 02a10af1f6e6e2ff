"""Dispersion relations omega(k) and the harmonic source signal."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.optimize import brentq

from .errors import (
    AmbiguousWavenumberError,
    ConfigurationError,
    DomainError,
    NoRealWavenumberError,
    ParityViolationError,
)

__all__ = [
    "DispersionRelation",
    "Nondispersive",
    "Quadratic",
    "KleinGordon",
    "Custom",
    "Pattern",
    "SourceSignal",
    "omega",
    "group_velocity",
    "phase_velocity",
    "curvature",
    "wavenumber_for",
    "check_even",
    "make_relation",
    "characteristic_scales",
]

_PARITY_RTOL = 1e-12


class DispersionRelation:
    """Base class: subclasses provide omega and its first two derivatives."""

    name = "abstract"

    def omega(self, k):
        raise NotImplementedError

    def d_omega(self, k):
        raise NotImplementedError

    def d2_omega(self, k):
        raise NotImplementedError

    def wavenumber(self, Omega: float) -> float:
        return _bracketed_wavenumber(self, Omega)

    def params(self) -> dict:
        return {}


@dataclass(frozen=True)
class Nondispersive(DispersionRelation):
    """omega = c k (ordinary wave equation)."""

    c: float = 1.0
    name = "nondispersive"

    def __post_init__(self):
        if not self.c > 0:
            raise ConfigurationError("Nondispersive needs c > 0")

    def omega(self, k):
        return self.c * np.abs(k)

    def d_omega(self, k):
        return self.c * np.sign(k)

    def d2_omega(self, k):
        return np.zeros_like(np.asarray(k, dtype=float))

    def wavenumber(self, Omega):
        if not Omega > 0:
            raise NoRealWavenumberError(f"no K > 0 with c K = {Omega}")
        return Omega / self.c

    def params(self):
        return {"c": self.c}


@dataclass(frozen=True)
class Quadratic(DispersionRelation):
    """omega = D k^2 (Euler-Bernoulli beam, D^2 = EI/mu)."""

    D: float = 1.0
    name = "quadratic"

    def __post_init__(self):
        if not self.D > 0:
            raise ConfigurationError("Quadratic needs D > 0")

    def omega(self, k):
        k = np.asarray(k, dtype=float)
        return self.D * k * k

    def d_omega(self, k):
        return 2.0 * self.D * np.asarray(k, dtype=float)

    def d2_omega(self, k):
        return np.full_like(np.asarray(k, dtype=float), 2.0 * self.D)

    def wavenumber(self, Omega):
        if not Omega > 0:
            raise NoRealWavenumberError(f"no K > 0 with D K^2 = {Omega}")
        return math.sqrt(Omega / self.D)

    def params(self):
        return {"D": self.D}


@dataclass(frozen=True)
class KleinGordon(DispersionRelation):
    """omega = sqrt(c^2 k^2 + omega0^2)."""

    c: float = 1.0
    omega0: float = 1.0
    name = "klein-gordon"

    def __post_init__(self):
        if not (self.c > 0 and self.omega0 > 0):
            raise ConfigurationError("KleinGordon needs c > 0 and omega0 > 0")

    def omega(self, k):
        k = np.asarray(k, dtype=float)
        return np.hypot(self.c * k, self.omega0)

    def d_omega(self, k):
        k = np.asarray(k, dtype=float)
        return self.c**2 * k / self.omega(k)

    def d2_omega(self, k):
        w = self.omega(k)
        return self.c**2 * self.omega0**2 / w**3

    def wavenumber(self, Omega):
        if not Omega > self.omega0:
            raise NoRealWavenumberError(
                f"Omega={Omega} is at or below the cutoff omega0={self.omega0}"
            )
        return math.sqrt(Omega**2 - self.omega0**2) / self.c

    def params(self):
        return {"c": self.c, "omega0": self.omega0}


@dataclass(frozen=True)
class Custom(DispersionRelation):
    """User-supplied omega(k) with explicit first and second derivatives.

    Parity is sampled at construction on ``parity_range``; pass
    ``check_parity=False`` for relations that are intentionally odd
    (they still work with the integral-form evaluator).
    """

    omega_fn: Callable
    d_omega_fn: Callable
    d2_omega_fn: Callable
    label: str = "custom"
    parity_range: tuple = (1e-3, 10.0)
    check_parity: bool = True
    name = "custom"

    def __post_init__(self):
        if self.check_parity:
            check_even(self, self.parity_range)

    def omega(self, k):
        return np.asarray(self.omega_fn(np.asarray(k, dtype=float)), dtype=float)

    def d_omega(self, k):
        return np.asarray(self.d_omega_fn(np.asarray(k, dtype=float)), dtype=float)

    def d2_omega(self, k):
        return np.asarray(self.d2_omega_fn(np.asarray(k, dtype=float)), dtype=float)

    def params(self):
        return {"label": self.label}


def check_even(rel: DispersionRelation, k_range=(1e-3, 10.0), n=100, seed=0):
    """Raise ParityViolationError unless omega(k) == omega(-k) on samples."""
    rng = np.random.default_rng(seed)
    k = rng.uniform(k_range[0], k_range[1], n)
    w_pos = np.asarray(rel.omega(k), dtype=float)
    w_neg = np.asarray(rel.omega(-k), dtype=float)
    bad = np.abs(w_pos - w_neg) > _PARITY_RTOL * np.maximum(np.abs(w_pos), 1e-300)
    if np.any(bad):
        k_bad = float(k[np.argmax(bad)])
        raise ParityViolationError(
            f"{rel.name} dispersion is not even: omega({k_bad}) != omega({-k_bad})"
        )


def _bracketed_wavenumber(rel, Omega, n_check=513):
    w0 = float(rel.omega(1e-12))
    if not Omega > w0:
        raise NoRealWavenumberError(
            f"Omega={Omega} does not exceed omega(0+)={w0}"
        )
    hi = 1.0
    while float(rel.omega(hi)) < Omega:
        hi *= 2.0
        if hi > 1e15:
            raise NoRealWavenumberError(f"omega(k) never reaches {Omega}")
    grid = np.linspace(0.0, hi, n_check)[1:]
    w = np.asarray(rel.omega(grid), dtype=float)
    if np.any(np.diff(w) <= 0):
        raise AmbiguousWavenumberError(
            f"{rel.name} dispersion is not strictly increasing on (0, {hi}]"
        )
    return brentq(lambda k: float(rel.omega(k)) - Omega, 0.0, hi,
                  xtol=1e-300, rtol=1e-14, maxiter=500)


def _as_output(k, value):
    value = np.asarray(value, dtype=float)
    if np.ndim(k) == 0:
        return float(value)
    return value


def omega(rel: DispersionRelation, k):
    """Angular frequency omega(k)."""
    return _as_output(k, rel.omega(k))


def group_velocity(rel: DispersionRelation, k):
    """d omega / dk."""
    return _as_output(k, rel.d_omega(k))


def phase_velocity(rel: DispersionRelation, k):
    """omega(k) / k; undefined at k = 0."""
    ka = np.asarray(k, dtype=float)
    if np.any(ka == 0):
        raise DomainError("phase velocity is undefined at k = 0")
    return _as_output(k, rel.omega(ka) / ka)


def curvature(rel: DispersionRelation, k):
    """gamma = (1/2) d^2 omega / dk^2."""
    return _as_output(k, 0.5 * np.asarray(rel.d2_omega(k), dtype=float))


def wavenumber_for(rel: DispersionRelation, Omega: float) -> float:
    """The unique K > 0 with omega(K) = Omega."""
    return float(rel.wavenumber(float(Omega)))


def make_relation(name: str, c: float = 1.0, D: float = 1.0,
                  omega0: float = 1.0) -> DispersionRelation:
    """Build a built-in relation from its command-line name."""
    if name == "nondispersive":
        return Nondispersive(c)
    if name == "quadratic":
        return Quadratic(D)
    if name == "klein-gordon":
        return KleinGordon(c, omega0)
    raise ConfigurationError(f"unknown dispersion relation {name!r}")


def characteristic_scales(rel: DispersionRelation, Omega: float):
    """Length and time units of the dimensionless x*, t* axes.

    ``x* = x / length`` and ``t* = t / time`` with: Omega t and Omega x / c
    for omega = c k; Omega t and x sqrt(Omega / D) for omega = D k^2;
    omega0 t and omega0 x / c for Klein-Gordon; Omega t and K x otherwise.
    """
    if isinstance(rel, Nondispersive):
        return rel.c / Omega, 1.0 / Omega
    if isinstance(rel, Quadratic):
        return math.sqrt(rel.D / Omega), 1.0 / Omega
    if isinstance(rel, KleinGordon):
        return rel.c / rel.omega0, 1.0 / rel.omega0
    return 1.0 / wavenumber_for(rel, Omega), 1.0 / Omega


class Pattern(enum.Enum):
    """How the source at x = 0 switches."""

    OFF_TO_ON = "on"
    ON_TO_OFF = "off"
    BURST = "burst"


@dataclass(frozen=True)
class SourceSignal:
    """Harmonic source A sin(Omega t) at x = 0 with a switching pattern.

    For ``Pattern.BURST`` the source runs for ``n`` full periods starting
    at t = 0.
    """

    amplitude: float = 1.0
    omega: float = 1.0
    pattern: Pattern = Pattern.OFF_TO_ON
    n: int | None = field(default=None)

    def __post_init__(self):
        if not self.amplitude > 0:
            raise ConfigurationError("source amplitude must be positive")
        if not self.omega > 0:
            raise ConfigurationError("source angular frequency must be positive")
        if self.pattern is Pattern.BURST:
            if not isinstance(self.n, (int, np.integer)) or self.n < 1:
                raise ConfigurationError("a burst needs an integer n >= 1")

    @property
    def period(self) -> float:
        return 2.0 * math.pi / self.omega

    def wavenumber(self, rel: DispersionRelation) -> float:
        return wavenumber_for(rel, self.omega)
