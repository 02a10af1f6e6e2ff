r"""Fresnel integrals and the signum convention.

The Fresnel functions are

.. math::

    C(x) = \int_0^x \cos(\pi s^2/2)\,ds, \qquad
    S(x) = \int_0^x \sin(\pi s^2/2)\,ds .

Evaluation uses the Maclaurin series for :math:`|x| \le 1.5` and a
continued fraction for the complementary error function of complex
argument beyond that.  Both branches are evaluated on :math:`|x|` and the
sign is restored afterwards, so odd symmetry holds bit for bit.
"""

from typing import NamedTuple

import numpy as np

from .errors import DomainError

__all__ = [
    "FresnelPair",
    "fresnel",
    "fresnel_asymptotic",
    "signum",
    "SERIES_SWITCH",
    "ASYMPTOTIC_ZMIN",
]

#: |x| at which evaluation switches from power series to continued fraction.
SERIES_SWITCH = 1.5

#: smallest argument accepted by :func:`fresnel_asymptotic`.
ASYMPTOTIC_ZMIN = 1.0

_EPS = 1e-16
_TINY = 1e-300
_MAX_CF_ITER = 500
_N_SERIES = 40


class FresnelPair(NamedTuple):
    """Values of (C, S) at a common argument (scalars or arrays)."""

    c_value: "float | np.ndarray"
    s_value: "float | np.ndarray"


def _reduced_phase(ax):
    """pi*x^2/2 reduced modulo 2*pi, with x^2 formed exactly (Dekker split)."""
    split = 134217729.0 * ax  # 2**27 + 1
    hi = split - (split - ax)
    lo = ax - hi
    sq = ax * ax
    sq_err = ((hi * hi - sq) + 2.0 * hi * lo) + lo * lo
    return 0.5 * np.pi * (np.fmod(sq, 4.0) + sq_err)


def _series(ax):
    # C = sum (-1)^n (pi/2)^(2n) x^(4n+1) / ((2n)! (4n+1))
    # S = sum (-1)^n (pi/2)^(2n+1) x^(4n+3) / ((2n+1)! (4n+3))
    fact = 0.5 * np.pi * ax * ax
    term = ax.copy()  # (pi/2 x^2)^m x / m!
    c_sum = ax.copy()
    s_sum = np.zeros_like(ax)
    for m in range(1, _N_SERIES):
        term = term * fact / m
        contrib = term / (2 * m + 1)
        sign = 1.0 if (m // 2) % 2 == 0 else -1.0
        if m % 2 == 1:
            s_sum += sign * contrib
        else:
            c_sum += sign * contrib
    return c_sum, s_sum


def _continued_fraction(ax):
    # Modified Lentz evaluation of the erfc continued fraction,
    # then (C + iS) = (1+i)/2 * [1 - exp(i pi x^2/2) (1-i) x h].
    pix2 = np.pi * ax * ax
    b = 1.0 - 1j * pix2
    cc = np.full_like(b, 1.0 / _TINY)
    d = 1.0 / b
    h = d.copy()
    # each element stops at its own convergence, so results do not depend
    # on which other arguments share the call
    live = np.ones(ax.shape, dtype=bool)
    n = -1
    for _ in range(_MAX_CF_ITER):
        n += 2
        a = -n * (n + 1.0)
        b = b + 4.0
        d = np.where(live, 1.0 / (a * d + b), d)
        cc = np.where(live, b + a / cc, cc)
        delta = np.where(live, cc * d, 1.0)
        h = h * delta
        live &= np.abs(delta.real - 1.0) + np.abs(delta.imag) >= _EPS
        if not live.any():
            break
    h = (ax - 1j * ax) * h
    arg = _reduced_phase(ax)
    phase = np.cos(arg) + 1j * np.sin(arg)
    cs = (0.5 + 0.5j) * (1.0 - phase * h)
    return cs.real, cs.imag


def _unwrap(x, values):
    if np.ndim(x) == 0:
        return float(values)
    return values


def fresnel(x):
    """Fresnel integrals C(x) and S(x).

    Parameters
    ----------
    x : float or array_like
        Finite real argument(s).

    Returns
    -------
    FresnelPair
        ``(c_value, s_value)``, each with the shape of `x`.

    Raises
    ------
    DomainError
        If any argument is NaN or infinite.
    """
    xa = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(xa)):
        raise DomainError("fresnel() requires finite arguments")
    ax = np.abs(xa)
    c = np.empty_like(ax)
    s = np.empty_like(ax)
    small = ax <= SERIES_SWITCH
    if np.any(small):
        c[small], s[small] = _series(ax[small])
    if np.any(~small):
        c[~small], s[~small] = _continued_fraction(ax[~small])
    neg = xa < 0
    c = np.where(neg, -c, c)
    s = np.where(neg, -s, s)
    return FresnelPair(_unwrap(x, c), _unwrap(x, s))


def fresnel_asymptotic(z):
    """Two-term large-argument form of the Fresnel integrals.

    ``C ~ 1/2 + sin(pi z^2/2)/(pi z)`` and ``S ~ 1/2 - cos(pi z^2/2)/(pi z)``.
    The neglected terms are of order ``1/(pi^2 z^3)``.

    Raises
    ------
    DomainError
        If any ``z < ASYMPTOTIC_ZMIN`` or is not finite.
    """
    za = np.asarray(z, dtype=float)
    if not np.all(np.isfinite(za)) or np.any(za < ASYMPTOTIC_ZMIN):
        raise DomainError(
            f"fresnel_asymptotic() needs finite z >= {ASYMPTOTIC_ZMIN}"
        )
    arg = _reduced_phase(za)
    c = 0.5 + np.sin(arg) / (np.pi * za)
    s = 0.5 - np.cos(arg) / (np.pi * za)
    return FresnelPair(_unwrap(z, c), _unwrap(z, s))


def signum(x):
    """Sign of `x` as -1, 0 or +1 (integer, or integer array)."""
    out = np.sign(np.asarray(x, dtype=float)).astype(int)
    if np.ndim(x) == 0:
        return int(out)
    return out
