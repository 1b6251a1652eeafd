"""Exact symbolic checks for the noncommutative 4-sphere and its spectral geometry."""

from .algebra import GaussianRational, NCPoly, PhaseScalar, Presentation, TrigCoeff, grass, sphere_comm, sphere_theta, torus_theta
from .chains import TensorChain, boundary_b, ch_even, ch_odd, operator_B, transgression_ratio
from .errors import NCSphereError

__version__ = "0.1.0"

__all__ = [
    "GaussianRational",
    "NCPoly",
    "NCSphereError",
    "PhaseScalar",
    "Presentation",
    "TensorChain",
    "TrigCoeff",
    "boundary_b",
    "ch_even",
    "ch_odd",
    "grass",
    "operator_B",
    "sphere_comm",
    "sphere_theta",
    "torus_theta",
    "transgression_ratio",
]
