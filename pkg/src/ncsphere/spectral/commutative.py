"""Classical (λ = 1) quartic computed with ordinary functions and vector fields.

This path shares no code with the noncommutative engine beyond the spin
matrices.  Functions on the round 4-sphere are polynomials in the cosines and
sines of four angles ``θ₁, θ₂, φ, ψ`` (sympy ring over Q(i)), the projection
is the Clifford idempotent ``E = 1/2 + 1/2(Σ ξ_μ γ_μ + t' γ₅)`` pulled back
along the angle parametrization, and the Dirac operator acts through the
orthonormal frame

    X₁ = (cφ cψ)⁻¹ (-i ∂θ₁),  X₂ = (sφ cψ)⁻¹ (-i ∂θ₂),  X₃ = (i/cψ) ∂φ,  X₄ = i ∂ψ.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import QQ_I, I as SYM_I, Rational
from sympy.polys.rings import ring

from ..clifford import spin_rep_m2

__all__ = [
    "classical_quartic",
    "ClassicalQuartic",
    "angle_ring",
    "sphere_coordinates",
    "clifford_projection",
    "torus_to_angles",
    "projection_matches_clifford",
]


@lru_cache(maxsize=None)
def angle_ring():
    R, C1, S1, C2, S2, Cf, Sf, Cp, Sp = ring("C1 S1 C2 S2 Cf Sf Cp Sp", QQ_I, order="grevlex")
    rels = [C1**2 + S1**2 - 1, C2**2 + S2**2 - 1, Cf**2 + Sf**2 - 1, Cp**2 + Sp**2 - 1]
    return R, (C1, S1, C2, S2, Cf, Sf, Cp, Sp), rels


def _reduce(p):
    R, gens, rels = angle_ring()
    return p.rem(rels)


def sphere_coordinates():
    """``(ξ₁, ξ₂, ξ₃, ξ₄, t')`` of the round sphere in the angle ring.

    With ``α = e^{iθ₁} cφ cψ / 2`` and ``β = e^{iθ₂} sφ cψ / 2`` these are
    ``ξ₄ = 2 Re α``, ``ξ₃ = -2 Im α``, ``ξ₂ = -2 Re β``, ``ξ₁ = -2 Im β``
    and ``t' = 2t - 1 = sψ``.
    """
    R, (C1, S1, C2, S2, Cf, Sf, Cp, Sp), _ = angle_ring()
    return (-S2 * Sf * Cp, -C2 * Sf * Cp, -S1 * Cf * Cp, C1 * Cf * Cp, Sp)


def _gamma_entries():
    R, _, _ = angle_ring()
    rep = spin_rep_m2()
    conv = lambda q: R(QQ_I.from_sympy(Rational(q.real) + SYM_I * Rational(q.imag)))
    gam = [[[conv(x) for x in row] for row in g] for g in rep.gammas]
    g5 = [[conv(x) for x in row] for row in rep.grading]
    return gam, g5


def clifford_projection() -> list:
    """4×4 matrix ``E`` over the angle ring."""
    R, _, _ = angle_ring()
    gam, g5 = _gamma_entries()
    xi = sphere_coordinates()
    half = R(QQ_I.from_sympy(Rational(1, 2)))
    out = []
    for i in range(4):
        row = []
        for j in range(4):
            v = half if i == j else R(0)
            for k in range(4):
                v += half * xi[k] * gam[k][i][j]
            v += half * xi[4] * g5[i][j]
            row.append(_reduce(v))
        out.append(row)
    return out


def _d(p, c, s):
    """Derivative along the angle whose cosine/sine generators are ``c, s``."""
    return _reduce(p.diff(c) * (-s) + p.diff(s) * c)


def _frame(p):
    R, (C1, S1, C2, S2, Cf, Sf, Cp, Sp), _ = angle_ring()
    i = R(QQ_I.from_sympy(SYM_I))
    x1 = _reduce(-i * _d(p, C1, S1))
    x2 = _reduce(-i * _d(p, C2, S2))
    x3 = _reduce(i * _d(p, Cf, Sf))
    x4 = _reduce(i * _d(p, Cp, Sp))
    return (_exquo(x1, Cf * Cp), _exquo(x2, Sf * Cp), _exquo(x3, Cp), x4)


def _exquo(p, m):
    if not p:
        return p
    q, r = p.div(m)
    if r:
        raise ArithmeticError("vector field coefficient is not polynomial")
    return q


def _matmul(a, b):
    R, _, _ = angle_ring()
    n = len(a)
    return [[_reduce(sum((a[i][k] * b[k][j] for k in range(n)), R(0))) for j in range(n)] for i in range(n)]


def _spin_mul(a, b):
    R, _, _ = angle_ring()
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), R(0)) for j in range(n)] for i in range(n)]


@dataclass
class ClassicalQuartic:
    spin_matrix: list
    c: Fraction | complex | None
    residual_zero: bool


def classical_quartic() -> ClassicalQuartic:
    """``(1/4) Tr_E ((E - 1/2)[D, E]⁴)`` as a 4×4 spin matrix over the angle ring."""
    R, _, _ = angle_ring()
    E = clifford_projection()
    P = [[E[i][j] - (R(QQ_I.from_sympy(Rational(1, 2))) if i == j else R(0)) for j in range(4)] for i in range(4)]
    # A[k] = X_k(E), so that [D, E] = Σ_k A[k] ⊗ γ_k
    A = [[[None] * 4 for _ in range(4)] for _ in range(4)]
    for i in range(4):
        for j in range(4):
            for k, v in enumerate(_frame(E[i][j])):
                A[k][i][j] = v
    gam, g5 = _gamma_entries()
    level = {(): P}
    for _ in range(3):
        nxt = {}
        for key, m in level.items():
            for k in range(4):
                nxt[key + (k,)] = _matmul(m, A[k])
        level = nxt
    quarter = R(QQ_I.from_sympy(Rational(1, 4)))
    spin = [[R(0)] * 4 for _ in range(4)]
    for key, m in level.items():
        for k4 in range(4):
            tr = _reduce(sum((m[i][l] * A[k4][l][i] for i in range(4) for l in range(4)), R(0)))
            if not tr:
                continue
            word = gam[key[0]]
            for k in key[1:] + (k4,):
                word = _spin_mul(word, gam[k])
            for i in range(4):
                for j in range(4):
                    if word[i][j]:
                        spin[i][j] += quarter * tr * word[i][j]
    spin = [[_reduce(x) for x in row] for row in spin]
    # compare with c γ₅
    c0 = spin[0][0]
    c = None
    ok = False
    if c0.is_ground:
        cval = c0.LC if c0 else QQ_I.zero
        ok = all(
            spin[i][j] == R(cval) * g5[i][j] for i in range(4) for j in range(4)
        )
        val = QQ_I.to_sympy(cval)
        re, im = val.as_real_imag()
        c = Fraction(int(re.p), int(re.q)) if im == 0 else complex(val)
    return ClassicalQuartic(spin, c, ok)


def torus_to_angles(f) -> object:
    """Image at ``λ = 1`` of a torus polynomial with angle coefficients.

    ``u -> e^{iθ₁}``, ``v -> e^{iθ₂}`` and the angle symbols map to the ring
    generators.
    """
    R, (C1, S1, C2, S2, Cf, Sf, Cp, Sp), _ = angle_ring()
    i = R(QQ_I.from_sympy(SYM_I))
    gens = {"u": C1 + i * S1, "u*": C1 - i * S1, "v": C2 + i * S2, "v*": C2 - i * S2}
    syms = (Sf, Cf, Sp, Cp)
    total = R(0)
    for w, c in f.terms.items():
        num = getattr(c, "num", None)
        if num is None:
            num = {(0, 0, 0, 0): c}
        elif c.den != (0, 0, 0):
            raise ArithmeticError("angle denominators cannot be mapped to the ring")
        coeff = R(0)
        for mono, ps in num.items():
            q = ps.at_one()
            term = R(QQ_I.from_sympy(Rational(q.real) + SYM_I * Rational(q.imag)))
            for s, e in zip(syms, mono):
                term *= s**e
            coeff += term
        for g, p in w:
            coeff *= gens[g] ** p
        total += coeff
    return _reduce(total)


def projection_matches_clifford(e_torus: list) -> bool:
    """True when the λ = 1 image of ``e_torus`` equals :func:`clifford_projection`."""
    E = clifford_projection()
    return all(torus_to_angles(e_torus[i][j]) == E[i][j] for i in range(4) for j in range(4))
