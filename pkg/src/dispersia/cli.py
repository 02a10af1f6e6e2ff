"""Command-line front end: ``dispersia {snapshot,spacetime,envelope,oracle,verify}``.

Every data command writes CSV with a ``#`` metadata header and values
printed to 17 significant digits, so identical flags give byte-identical
output.  Positions and times may be given dimensionally (``--t``,
``--x-min``) or in the dimensionless units of the figures (``--t-star``,
``--x-star-min``); see :func:`dispersia.dispersion.characteristic_scales`.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import closed_form as cf
from .approx_general import approx_envelope, u_approx, u_approx_off
from .dispersion import (
    Nondispersive,
    Pattern,
    Quadratic,
    SourceSignal,
    characteristic_scales,
    group_velocity,
    make_relation,
    wavenumber_for,
)
from .errors import DispersiaError
from .grid import FieldGrid, format_value, write_header
from .pde_oracle import FAR_BOUNDARIES, PDES, OracleConfig, pde_for, solve
from .pv_quadrature import PVQuadratureConfig, u_integral
from .verification import SUITES, format_check, run_suite

__all__ = ["main", "build_parser", "field_values"]

DISPERSIONS = ("nondispersive", "quadratic", "klein-gordon")
METHODS = ("exact", "approx", "pv", "oracle")


class UsageError(Exception):
    pass


# --------------------------------------------------------------------------
# evaluation


def field_values(src: SourceSignal, rel, x, t, method: str = "exact", pv_cfg=None):
    """u(x, t) for any source pattern using an analytic or quadrature method."""
    if method == "exact":
        if isinstance(rel, Nondispersive):
            on, off, name = cf.u_nondispersive, cf.u_nondispersive_off, "exact-ck"
            param = rel.c
        elif isinstance(rel, Quadratic):
            on, off, name = cf.u_quadratic, cf.u_quadratic_off, "exact-Dk2"
            param = rel.D
        else:
            raise UsageError(f"no exact solution for {rel.name}; use --method approx, pv or oracle")
        if src.pattern is Pattern.OFF_TO_ON:
            return on(src, param, x, t)
        if src.pattern is Pattern.ON_TO_OFF:
            return off(src, param, x, t)
        return cf.u_burst(src, rel, x, t, evaluator=name)
    if method == "approx":
        if src.pattern is Pattern.OFF_TO_ON:
            return u_approx(src, rel, x, t)
        if src.pattern is Pattern.ON_TO_OFF:
            return u_approx_off(src, rel, x, t)
        return cf.u_burst(src, rel, x, t, evaluator="approx")
    if method == "pv":
        if src.pattern is Pattern.OFF_TO_ON:
            return u_integral(src, rel, x, t, pv_cfg)
        if src.pattern is Pattern.ON_TO_OFF:
            on = SourceSignal(src.amplitude, src.omega)
            K = wavenumber_for(rel, src.omega)
            xb, tb = np.broadcast_arrays(np.asarray(x, float), np.asarray(t, float))
            steady = src.amplitude * np.sin(src.omega * tb - K * xb)
            return steady - u_integral(on, rel, xb, tb, pv_cfg)
        return cf.u_burst(src, rel, x, t, evaluator="pv", cfg=pv_cfg)
    raise UsageError(f"unknown method {method!r}")


# --------------------------------------------------------------------------
# argument handling


def _add_physics(p):
    g = p.add_argument_group("medium and source")
    g.add_argument("--dispersion", choices=DISPERSIONS, default="quadratic")
    g.add_argument("--c", type=float, default=1.0, help="wave speed")
    g.add_argument("--D", type=float, default=1.0, help="quadratic dispersion coefficient")
    g.add_argument("--omega0", type=float, default=1.0, help="Klein-Gordon cutoff frequency")
    g.add_argument("--A", type=float, default=1.0, help="source amplitude")
    g.add_argument("--omega", type=float, default=1.0, help="source angular frequency")
    g.add_argument("--mode", choices=("on", "off", "burst"), default="on")
    g.add_argument("--n", type=int, help="number of cycles for --mode burst")
    g.add_argument("--burst", type=int, metavar="N", help="shorthand for --mode burst --n N")


def _add_method(p, default="exact"):
    p.add_argument("--method", choices=METHODS, default=default)
    g = p.add_argument_group("principal-value quadrature (--method pv)")
    g.add_argument("--pv-epsilon", type=float)
    g.add_argument("--pv-kmax", type=float)
    g.add_argument("--pv-tol", type=float)
    g.add_argument("--pv-tail", choices=("truncate", "average"))


def _add_oracle(p):
    g = p.add_argument_group("finite-difference oracle")
    g.add_argument("--pde", choices=PDES)
    g.add_argument("--dx", type=float)
    g.add_argument("--dt", type=float)
    g.add_argument("--length", type=float, help="domain length")
    g.add_argument("--duration", type=float)
    g.add_argument("--far-boundary", choices=FAR_BOUNDARIES)


def _add_x_range(p):
    g = p.add_argument_group("positions")
    g.add_argument("--x-min", type=float)
    g.add_argument("--x-max", type=float)
    g.add_argument("--x-star-min", type=float)
    g.add_argument("--x-star-max", type=float)
    g.add_argument("--nx", type=int, default=401)


def _add_time(p):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--t", type=float, help="time")
    g.add_argument("--t-star", type=float, help="dimensionless time")


def _add_out(p):
    p.add_argument("--out", default="-", help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dispersia",
        description="ON-OFF signal propagation in dispersive media.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("snapshot", help="u(x) at a fixed time")
    _add_physics(p)
    _add_method(p)
    _add_oracle(p)
    _add_x_range(p)
    _add_time(p)
    p.add_argument("--envelope", action="store_true", help="append the approximate envelope")
    _add_out(p)

    p = sub.add_parser("spacetime", help="u(x, t) on a lattice")
    _add_physics(p)
    _add_method(p)
    _add_oracle(p)
    _add_x_range(p)
    g = p.add_argument_group("times")
    g.add_argument("--t-min", type=float)
    g.add_argument("--t-max", type=float)
    g.add_argument("--t-star-min", type=float)
    g.add_argument("--t-star-max", type=float)
    g.add_argument("--nt", type=int, default=101)
    _add_out(p)

    p = sub.add_parser("envelope", help="approximate envelope and phase at a fixed time")
    _add_physics(p)
    p.add_argument("--method", choices=("exact", "approx"), default="exact")
    _add_x_range(p)
    _add_time(p)
    _add_out(p)

    p = sub.add_parser("oracle", help="finite-difference solution of the model PDE")
    _add_physics(p)
    _add_oracle(p)
    p.add_argument("--nt", type=int, default=1, help="number of evenly spaced output times")
    p.add_argument("--x-max", type=float)
    _add_out(p)

    p = sub.add_parser("verify", help="run the self-check suites")
    p.add_argument("--suite", choices=tuple(SUITES) + ("all",), default="all")
    _add_out(p)
    return parser


def _relation(args):
    if args.dispersion == "klein-gordon" and args.omega <= args.omega0:
        raise UsageError("klein-gordon needs --omega above --omega0")
    return make_relation(args.dispersion, c=args.c, D=args.D, omega0=args.omega0)


def _source(args):
    mode, n = args.mode, args.n
    if args.burst is not None:
        if mode not in ("on", "burst") or (n is not None and n != args.burst):
            raise UsageError("--burst conflicts with --mode/--n")
        mode, n = "burst", args.burst
    if mode == "burst":
        if n is None or n < 1:
            raise UsageError("--mode burst needs --n >= 1")
    elif n is not None:
        raise UsageError("--n is only meaningful with --mode burst")
    return SourceSignal(args.A, args.omega, Pattern(mode), n)


def _pv_config(args):
    given = [args.pv_epsilon, args.pv_kmax, args.pv_tol, args.pv_tail]
    if args.method != "pv":
        if any(v is not None for v in given):
            raise UsageError("--pv-* flags need --method pv")
        return None
    return PVQuadratureConfig(
        epsilon=args.pv_epsilon,
        k_max=args.pv_kmax,
        panel_tol=args.pv_tol if args.pv_tol is not None else 1e-8,
        tail_mode=args.pv_tail or "average-extrapolate",
    )


def _oracle_flags_used(args):
    return any(getattr(args, k, None) is not None
               for k in ("pde", "dx", "dt", "length", "duration", "far_boundary"))


def _scaled_pair(args, lo, hi, lo_star, hi_star, unit, what, defaults):
    dim = (getattr(args, lo), getattr(args, hi))
    star = (getattr(args, lo_star), getattr(args, hi_star))
    if any(v is not None for v in dim) and any(v is not None for v in star):
        raise UsageError(f"give the {what} range dimensionally or in star units, not both")
    if any(v is not None for v in star):
        a = star[0] if star[0] is not None else defaults[0]
        b = star[1] if star[1] is not None else defaults[1]
        return a * unit, b * unit
    a = dim[0] if dim[0] is not None else defaults[0] * unit
    b = dim[1] if dim[1] is not None else defaults[1] * unit
    return a, b


def _x_axis(args, length_unit):
    if args.nx < 2:
        raise UsageError("--nx must be at least 2")
    lo, hi = _scaled_pair(args, "x_min", "x_max", "x_star_min", "x_star_max",
                          length_unit, "x", (0.0, 40.0))
    if lo < 0 or not hi > lo:
        raise UsageError("need 0 <= x-min < x-max")
    return np.linspace(lo, hi, args.nx)


def _time(args, time_unit):
    return args.t if args.t is not None else args.t_star * time_unit


def _base_meta(args, rel, src, length_unit, time_unit):
    meta = {
        "command": args.command,
        "dispersion": args.dispersion,
        "A": format_value(src.amplitude),
        "omega": format_value(src.omega),
        "mode": src.pattern.value,
        "length_unit": format_value(length_unit),
        "time_unit": format_value(time_unit),
    }
    meta.update({k: format_value(v) for k, v in rel.params().items()})
    if src.n is not None:
        meta["n"] = src.n
    return meta


# --------------------------------------------------------------------------
# oracle plumbing


def _oracle_config(args, rel, src, t_end, x_max):
    pde = args.pde or pde_for(rel)
    if pde != pde_for(rel):
        raise UsageError(f"--pde {pde} does not match --dispersion {args.dispersion}")
    length_unit, _ = characteristic_scales(rel, src.omega)
    dx = args.dx if args.dx is not None else 0.05 * length_unit
    if args.dt is not None:
        dt = args.dt
    elif pde == "beam":
        dt = 0.4 * dx * dx / rel.D
    else:
        dt = 0.8 * dx / rel.c
    duration = args.duration if args.duration is not None else t_end
    if args.length is not None:
        length = args.length
    else:
        speed = float(group_velocity(rel, wavenumber_for(rel, src.omega)))
        if pde == "beam":
            length = max(3.0 * speed * duration, x_max)
        else:
            length = rel.c * duration + 20.0 * dx
        if src.pattern is Pattern.ON_TO_OFF:
            reach = (3.0 * speed if pde == "beam" else rel.c) * duration
            length = (x_max + reach) / 0.95 + 20.0 * dx
        length = max(length, 1.05 * x_max + 20.0 * dx)
    return OracleConfig(
        pde=pde, dx=dx, dt=dt, domain_length=length, duration=duration,
        far_boundary=args.far_boundary or "absorbing-pad",
        **{k: v for k, v in rel.params().items() if k in ("c", "D", "omega0")},
    )


def _oracle_meta(cfg):
    return {
        "pde": cfg.pde,
        "dx": format_value(cfg.dx),
        "dt": format_value(cfg.dt),
        "domain_length": format_value(cfg.domain_length),
        "duration": format_value(cfg.duration),
        "far_boundary": cfg.far_boundary,
    }


# --------------------------------------------------------------------------
# commands


def _write_rows(out, meta, columns, rows):
    write_header(out, meta)
    out.write(",".join(columns) + "\n")
    for row in rows:
        out.write(",".join(format_value(v) for v in row) + "\n")


def _envelope_column(args, rel, src, x, t):
    if src.pattern is Pattern.BURST:
        raise UsageError("envelopes are defined for --mode on or off only")
    if args.method == "exact":
        if not isinstance(rel, Quadratic):
            raise UsageError("the exact envelope needs --dispersion quadratic")
        fn = cf.envelope_on if src.pattern is Pattern.OFF_TO_ON else cf.envelope_off
        return fn(src, rel.D, x, t)
    if args.method == "approx":
        if src.pattern is not Pattern.OFF_TO_ON:
            raise UsageError("the approximate envelope is available for --mode on only")
        return approx_envelope(src, rel, x, t)
    raise UsageError("--envelope needs --method exact or approx")


def cmd_snapshot(args, out):
    rel = _relation(args)
    src = _source(args)
    pv_cfg = _pv_config(args)
    length_unit, time_unit = characteristic_scales(rel, src.omega)
    t = _time(args, time_unit)
    meta = _base_meta(args, rel, src, length_unit, time_unit)
    meta.update({"method": args.method, "t": format_value(t)})
    if args.method == "oracle":
        if args.envelope:
            raise UsageError("--envelope is not available with --method oracle")
        if t <= 0:
            raise UsageError("--method oracle needs t > 0")
        x_req = _x_axis(args, length_unit)
        cfg = _oracle_config(args, rel, src, t, x_req[-1])
        grid = solve(cfg, src, sample_times=[t], x_max=x_req[-1])
        sel = grid.x_values >= x_req[0] - 1e-12 * cfg.dx
        meta.update(_oracle_meta(cfg))
        meta["t"] = format_value(grid.t_values[0])
        _write_rows(out, meta, ("x", "u"), zip(grid.x_values[sel], grid.u_values[0][sel]))
        return 0
    if _oracle_flags_used(args):
        raise UsageError("oracle flags need --method oracle")
    x = _x_axis(args, length_unit)
    u = np.asarray(field_values(src, rel, x, t, args.method, pv_cfg))
    if args.envelope:
        env = np.asarray(_envelope_column(args, rel, src, x, t))
        _write_rows(out, meta, ("x", "u", "envelope"), zip(x, u, env))
    else:
        _write_rows(out, meta, ("x", "u"), zip(x, u))
    return 0


def _t_axis(args, time_unit):
    if args.nt < 1:
        raise UsageError("--nt must be at least 1")
    lo, hi = _scaled_pair(args, "t_min", "t_max", "t_star_min", "t_star_max",
                          time_unit, "t", (0.0, 40.0))
    if args.nt == 1:
        return np.array([hi])
    if not hi > lo:
        raise UsageError("need t-min < t-max")
    return np.linspace(lo, hi, args.nt)


def cmd_spacetime(args, out):
    rel = _relation(args)
    src = _source(args)
    pv_cfg = _pv_config(args)
    length_unit, time_unit = characteristic_scales(rel, src.omega)
    ts = _t_axis(args, time_unit)
    meta = _base_meta(args, rel, src, length_unit, time_unit)
    meta["method"] = args.method
    if args.method == "oracle":
        if ts[0] < 0:
            raise UsageError("--method oracle needs t >= 0")
        x_req = _x_axis(args, length_unit)
        cfg = _oracle_config(args, rel, src, ts[-1], x_req[-1])
        grid = solve(cfg, src, sample_times=ts, x_max=x_req[-1])
        sel = grid.x_values >= x_req[0] - 1e-12 * cfg.dx
        meta.update(_oracle_meta(cfg))
        grid = FieldGrid(grid.x_values[sel], grid.t_values, grid.u_values[:, sel], meta)
    else:
        if _oracle_flags_used(args):
            raise UsageError("oracle flags need --method oracle")
        x = _x_axis(args, length_unit)
        xx, tt = np.meshgrid(x, ts)
        u = np.asarray(field_values(src, rel, xx, tt, args.method, pv_cfg))
        grid = FieldGrid(x, ts, u, meta)
    grid.to_csv(out)
    return 0


def cmd_envelope(args, out):
    rel = _relation(args)
    src = _source(args)
    length_unit, time_unit = characteristic_scales(rel, src.omega)
    t = _time(args, time_unit)
    if not t > 0:
        raise UsageError("envelopes need t > 0")
    x = _x_axis(args, length_unit)
    env = np.asarray(_envelope_column(args, rel, src, x, t))
    meta = _base_meta(args, rel, src, length_unit, time_unit)
    meta.update({"method": args.method, "t": format_value(t)})
    if args.method == "exact" and src.pattern is Pattern.OFF_TO_ON:
        phase = np.asarray(cf.phase_shift(src, rel.D, x, t))
        _write_rows(out, meta, ("x", "envelope", "phase"), zip(x, env, phase))
    else:
        _write_rows(out, meta, ("x", "envelope"), zip(x, env))
    return 0


def cmd_oracle(args, out):
    rel = _relation(args)
    src = _source(args)
    if args.duration is None:
        raise UsageError("oracle needs --duration")
    length_unit, time_unit = characteristic_scales(rel, src.omega)
    x_max = args.x_max
    cfg = _oracle_config(args, rel, src, args.duration, x_max if x_max is not None else 0.0)
    if args.nt < 1:
        raise UsageError("--nt must be at least 1")
    times = np.linspace(0.0, cfg.duration, args.nt + 1)[1:] if args.nt > 1 else None
    grid = solve(cfg, src, sample_times=times, x_max=x_max)
    meta = _base_meta(args, rel, src, length_unit, time_unit)
    meta["method"] = "oracle"
    meta.update(_oracle_meta(cfg))
    grid.meta = meta
    grid.to_csv(out)
    return 0


def cmd_verify(args, out):
    checks = run_suite(args.suite)
    for chk in checks:
        out.write(format_check(chk) + "\n")
    failed = sum(not c.passed for c in checks)
    out.write(f"{len(checks) - failed}/{len(checks)} checks passed\n")
    return 0 if failed == 0 else 1


COMMANDS = {
    "snapshot": cmd_snapshot,
    "spacetime": cmd_spacetime,
    "envelope": cmd_envelope,
    "oracle": cmd_oracle,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        parser.error(str(exc))
    except DispersiaError as exc:
        sys.stderr.write(f"dispersia: error: {exc}\n")
        return 1
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
