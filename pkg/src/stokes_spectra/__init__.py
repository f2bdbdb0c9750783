"""Spectral theory of the linearized BGK equation for an oscillating wall.

Dispersion function, Sokhotski boundary values, index of the problem
coefficient, discrete zeros and eigenmode expansions.
"""

from .dispersion import (
    BoundaryPair,
    Omega1,
    boundary_values,
    dlambda0,
    lambda0,
    lambda0_real,
    lambda_,
    laurent_coefficients,
    laurent_tail,
    s,
)
from .errors import (
    BoundaryIndeterminate,
    ConvergenceError,
    DomainError,
    GridError,
    NoDiscreteSpectrum,
    SingularCoefficientError,
    StokesSpectraError,
    UnwrapError,
)
from .kernel import BACKEND
from .modes import (
    ContinuousMode,
    DiscreteMode,
    ModeExpansion,
    assemble_solution,
    continuous_mode,
    degenerate_modes,
    discrete_mode,
    kinetic_residual,
    velocity_moment,
)
from .numerics import Grid, integrate_gauss_halfline, pv_integral
from .spectra import (
    GammaCurve,
    RootPair,
    critical_frequency,
    g_of_mu,
    index_kappa,
    mu0,
    through_origin_frequency,
    trace_gamma,
    y1_roots,
)
from .zeros import SpectrumReport, classify_regime, count_zeros, find_eta0, spectrum_report

__version__ = "0.1.0"
