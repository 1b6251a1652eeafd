"""Exact coefficients, presentations and noncommutative polynomials."""

from .dump import dump_chain, dump_poly, dump_word, parse_chain, parse_poly, parse_word
from .hom import AlgebraHom, apply_hom, lambda_specialize, torus_embed
from .ncpoly import NCPoly, nc_adjoint, nc_mul, normal_form, scalar_part
from .presentation import (
    Presentation,
    grass,
    sphere_comm,
    sphere_theta,
    torus_theta,
    word,
)
from .scalars import GaussianRational, PhaseScalar, QI, as_qi
from .trig import TrigCoeff, trig_reduce

__all__ = [
    "AlgebraHom",
    "GaussianRational",
    "NCPoly",
    "PhaseScalar",
    "Presentation",
    "QI",
    "TrigCoeff",
    "apply_hom",
    "as_qi",
    "dump_chain",
    "dump_poly",
    "dump_word",
    "grass",
    "lambda_specialize",
    "nc_adjoint",
    "nc_mul",
    "normal_form",
    "parse_chain",
    "parse_poly",
    "parse_word",
    "scalar_part",
    "sphere_comm",
    "sphere_theta",
    "torus_embed",
    "torus_theta",
    "trig_reduce",
    "word",
]
