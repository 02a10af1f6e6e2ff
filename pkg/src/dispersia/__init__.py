"""ON-OFF signal propagation in dispersive media.

Exact, approximate and quadrature solutions of a half-line medium driven
at x = 0 by a harmonic source that is switched on, off, or for a finite
number of cycles, plus finite-difference oracles to check them against.
"""

from .approx_general import approx_envelope, front_parameters, u_approx, u_approx_off
from .closed_form import (
    EVALUATORS,
    default_evaluator,
    envelope_front_slope,
    envelope_off,
    envelope_on,
    front_amplitude_asymptotic,
    front_oscillation,
    phase_shift,
    u_burst,
    u_nondispersive,
    u_nondispersive_off,
    u_quadratic,
    u_quadratic_off,
)
from .dispersion import (
    Custom,
    DispersionRelation,
    KleinGordon,
    Nondispersive,
    Pattern,
    Quadratic,
    SourceSignal,
    characteristic_scales,
    check_even,
    curvature,
    group_velocity,
    make_relation,
    omega,
    phase_velocity,
    wavenumber_for,
)
from .errors import (
    AmbiguousWavenumberError,
    ConfigurationError,
    ConvergenceError,
    DispersiaError,
    DivergenceError,
    DomainError,
    NoRealWavenumberError,
    ParityViolationError,
    SingularMediumError,
)
from .grid import FieldGrid, read_csv_grid
from .pde_oracle import OracleConfig, solve
from .pv_quadrature import PVQuadratureConfig, fourier_sine_refs, pv_integrate, u_integral
from .special_functions import FresnelPair, fresnel, fresnel_asymptotic, signum

__version__ = "0.1.0"
