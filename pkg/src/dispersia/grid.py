"""Sampled fields on a rectangular (x, t) lattice and their CSV form."""

from __future__ import annotations

import io
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigurationError

__all__ = ["FieldGrid", "format_value", "write_header", "read_csv_grid"]


def format_value(v: float) -> str:
    """Round-trippable decimal text (17 significant digits)."""
    return format(float(v) + 0.0, ".17g")  # folds -0.0 into 0


def write_header(stream, meta: dict):
    for key in sorted(meta):
        stream.write(f"# {key}={meta[key]}\n")


@dataclass
class FieldGrid:
    """u(x, t) on a lattice; ``u_values[i, j]`` is u(x_j, t_i) (t-major)."""

    x_values: np.ndarray
    t_values: np.ndarray
    u_values: np.ndarray
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.x_values = np.asarray(self.x_values, dtype=float)
        self.t_values = np.asarray(self.t_values, dtype=float)
        self.u_values = np.asarray(self.u_values, dtype=float)
        if self.x_values.ndim != 1 or self.t_values.ndim != 1:
            raise ConfigurationError("grid axes must be one-dimensional")
        if np.any(np.diff(self.x_values) <= 0) or np.any(np.diff(self.t_values) <= 0):
            raise ConfigurationError("grid axes must be strictly increasing")
        if self.u_values.shape != (self.t_values.size, self.x_values.size):
            raise ConfigurationError(
                f"u_values has shape {self.u_values.shape}, expected "
                f"{(self.t_values.size, self.x_values.size)}"
            )

    def at_time(self, index: int) -> np.ndarray:
        return self.u_values[index]

    def to_csv(self, stream=None) -> str | None:
        """Write ``x,t,u`` rows (t-major) after a ``#`` metadata block."""
        own = stream is None
        out = io.StringIO() if own else stream
        write_header(out, self.meta)
        out.write("x,t,u\n")
        for i, t in enumerate(self.t_values):
            ts = format_value(t)
            for x, u in zip(self.x_values, self.u_values[i]):
                out.write(f"{format_value(x)},{ts},{format_value(u)}\n")
        if own:
            return out.getvalue()
        return None


def read_csv_grid(text: str) -> FieldGrid:
    """Parse the output of :meth:`FieldGrid.to_csv` back into a grid."""
    meta = {}
    rows = []
    for line in text.splitlines():
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            meta[key] = value
        elif line and not line.startswith("x,"):
            rows.append([float(v) for v in line.split(",")[:3]])
    data = np.array(rows)
    xs = np.unique(data[:, 0])
    ts = np.unique(data[:, 1])
    return FieldGrid(xs, ts, data[:, 2].reshape(ts.size, xs.size), meta)
