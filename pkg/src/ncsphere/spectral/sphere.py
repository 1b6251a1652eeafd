"""The canonical projection over the deformed 4-sphere and its checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..algebra.ncpoly import NCPoly
from ..algebra.presentation import Presentation, sphere_theta
from ..algebra.scalars import PhaseScalar
from ..chains import identity_matrix, matmul

__all__ = [
    "build_e_theta",
    "mat_adjoint",
    "mat_sub",
    "mat_map",
    "partial_trace",
    "idempotent_suite",
    "IdempotentReport",
    "constant_projector",
]


def build_e_theta(pres: Presentation | None = None, *, drop_phase: bool = False) -> list:
    """4×4 projection ``[[t, q], [q*, 1 - t]]`` with ``q = [[α, β], [-λβ*, α*]]``.

    ``drop_phase`` removes the λ from the lower-left block of ``q`` (a
    deliberately broken matrix used as a negative control).
    """
    S = pres or sphere_theta()
    g = {x: NCPoly.gen(S, x) for x in S.order}
    a, ad, b, bd, t = g["α"], g["α*"], g["β"], g["β*"], g["t"]
    one, zero = NCPoly.one(S), NCPoly.zero(S)
    lam = PhaseScalar.lam(1)
    lam_bar = PhaseScalar.lam(-1)
    q21 = -bd if drop_phase else -(bd.scale(lam))
    q21_adj = -b if drop_phase else -(b.scale(lam_bar))
    return [
        [t, zero, a, b],
        [zero, t, q21, ad],
        [ad, q21_adj, one - t, zero],
        [bd, a, zero, one - t],
    ]


def constant_projector(pres: Presentation, diag: tuple) -> list:
    one, zero = NCPoly.one(pres), NCPoly.zero(pres)
    r = len(diag)
    return [[(one if diag[i] else zero) if i == j else zero for j in range(r)] for i in range(r)]


def mat_adjoint(m: list) -> list:
    r, c = len(m), len(m[0])
    return [[m[j][i].adjoint() for j in range(r)] for i in range(c)]


def mat_sub(a: list, b: list) -> list:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_map(fn, m: list) -> list:
    return [[fn(x) for x in row] for row in m]


def partial_trace(m: list):
    """Normalized trace ``(1/r) Σ m_ii`` over the matrix factor."""
    r = len(m)
    s = m[0][0]
    for i in range(1, r):
        s = s + m[i][i]
    return s.scale(PhaseScalar.const(Fraction(1, r)))


@dataclass
class IdempotentReport:
    ok: bool
    failures: list = field(default_factory=list)


def idempotent_suite(e: list) -> IdempotentReport:
    """Check ``e² = e``, ``e = e*`` and ``⟨e - 1/2⟩ = 0`` entrywise."""
    r = len(e)
    pres = e[0][0].pres
    fails = []
    sq = matmul(e, e)
    for i in range(r):
        for j in range(r):
            d = sq[i][j] - e[i][j]
            if d:
                fails.append(f"e² - e at ({i + 1},{j + 1}): {d}")
    adj = mat_adjoint(e)
    for i in range(r):
        for j in range(r):
            d = adj[i][j] - e[i][j]
            if d:
                fails.append(f"e* - e at ({i + 1},{j + 1}): {d}")
    half = identity_matrix(pres, r)
    tr = partial_trace(mat_sub(e, mat_map(lambda x: x.scale(PhaseScalar.const(Fraction(1, 2))), half)))
    if tr:
        fails.append(f"<e - 1/2> = {tr}")
    return IdempotentReport(not fails, fails)
