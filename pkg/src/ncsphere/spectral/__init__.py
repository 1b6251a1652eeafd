"""Projection, Dirac commutators and the quartic over the deformed 4-sphere."""

from .dirac import DiracContext, commutator_table_check, dirac_commutator, listed_commutator
from .oracle import ClockShiftOracle, clock_shift_oracle
from .quartic import QuarticResult, cond_expect, pi_map, quartic_invariant, quartic_operator
from .reference import chern2_explicit_check, five_component_chain
from .sphere import build_e_theta, idempotent_suite, partial_trace

__all__ = [
    "ClockShiftOracle",
    "DiracContext",
    "QuarticResult",
    "build_e_theta",
    "chern2_explicit_check",
    "clock_shift_oracle",
    "commutator_table_check",
    "cond_expect",
    "dirac_commutator",
    "five_component_chain",
    "idempotent_suite",
    "listed_commutator",
    "partial_trace",
    "pi_map",
    "quartic_invariant",
    "quartic_operator",
]
