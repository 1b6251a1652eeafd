"""Commutators with the Dirac operator of the deformed 4-sphere.

The sphere algebra is realised inside the torus algebra with angle
coefficients (``torus_embed``).  For ``f`` in that image

    [D, f] = (cφ cψ)⁻¹ δ₁f γ₁ + (sφ cψ)⁻¹ δ₂f γ₂ + (i/cψ) ∂_φ f γ₃ + i ∂_ψ f γ₄

where ``δ₁, δ₂`` count the ``u`` and ``v`` degrees.  A commutator is a
:class:`~ncsphere.clifford.CliffordElement` with ``m = 2`` whose
coefficients are torus polynomials; ``e_S`` stands for the ordered product
of the ``γ_i`` with ``i ∈ S``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..algebra.hom import torus_embed
from ..algebra.ncpoly import NCPoly
from ..algebra.presentation import sphere_theta, torus_theta
from ..algebra.scalars import GaussianRational, PhaseScalar
from ..algebra.trig import TrigCoeff
from ..clifford import CliffordElement, SpinRep, spin_rep_m2
from ..errors import PolynomialityError, PreconditionError

__all__ = [
    "DiracContext",
    "dirac_commutator",
    "derivations",
    "to_torus",
    "spinor_is_polynomial",
    "spinor_scale",
    "spinor_matmul",
    "commutator_matrix",
    "listed_commutator",
    "commutator_table_check",
    "TableReport",
    "GAMMA5",
]

GAMMA5 = (1, 2, 3, 4)
_I = GaussianRational(0, 1)


def _tc(**kw) -> TrigCoeff:
    return TrigCoeff.monomial(**kw)


@dataclass(frozen=True)
class DiracContext:
    """First-order coefficients of ``D`` and the spin matrices."""

    coefficients: tuple = field(
        default_factory=lambda: (
            TrigCoeff.one().divide_monomial(cphi=1, cpsi=1),
            TrigCoeff.one().divide_monomial(sphi=1, cpsi=1),
            TrigCoeff.const(PhaseScalar.const(_I)).divide_monomial(cpsi=1),
            TrigCoeff.const(PhaseScalar.const(_I)),
        )
    )
    spin: SpinRep = field(default_factory=spin_rep_m2)


_DEFAULT = None


def default_context() -> DiracContext:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = DiracContext()
    return _DEFAULT


_DEG = {"u": (1, 0), "u*": (-1, 0), "v": (0, 1), "v*": (0, -1)}


def to_torus(f: NCPoly) -> NCPoly:
    if f.pres == torus_theta():
        return f
    if f.pres == sphere_theta():
        return torus_embed()(f)
    raise PreconditionError(f"expected a sphere or torus element, got {f.pres.name}")


def derivations(f: NCPoly) -> tuple:
    """``(δ₁f, δ₂f, ∂_φ f, ∂_ψ f)`` of a torus element with angle coefficients."""
    T = f.pres
    d1, d2, dp, ds = {}, {}, {}, {}
    for w, c in f.terms.items():
        c = TrigCoeff.coerce(c)
        n1 = sum(_DEG[g][0] * p for g, p in w)
        n2 = sum(_DEG[g][1] * p for g, p in w)
        if n1:
            d1[w] = c.scale(n1)
        if n2:
            d2[w] = c.scale(n2)
        x = c.d_phi()
        if x:
            dp[w] = x
        x = c.d_psi()
        if x:
            ds[w] = x
    return tuple(NCPoly(T, d, normalized=True) for d in (d1, d2, dp, ds))


def dirac_commutator(f: NCPoly, ctx: DiracContext | None = None, *, check: bool = True) -> CliffordElement:
    """``[D, f]`` as a Clifford element over the torus algebra.

    Raises :class:`PolynomialityError` if an angle denominator survives.
    """
    ctx = ctx or default_context()
    f = to_torus(f)
    parts = derivations(f)
    terms = {}
    for k, (coef, part) in enumerate(zip(ctx.coefficients, parts)):
        if part:
            x = part.scale(coef)
            if x:
                terms[(k + 1,)] = x
    out = CliffordElement(2, terms)
    if check and not spinor_is_polynomial(out):
        raise PolynomialityError(f"[D, f] keeps an angle denominator for f = {f}")
    return out


def spinor_is_polynomial(x: CliffordElement) -> bool:
    return all(
        TrigCoeff.coerce(c).is_polynomial() for v in x.terms.values() for c in v.terms.values()
    )


def spinor_scale(x: CliffordElement, c) -> CliffordElement:
    return CliffordElement(x.m, {k: v.scale(c) for k, v in x.terms.items()})


def commutator_matrix(e: list, ctx: DiracContext | None = None) -> list:
    """Entrywise ``[D, e_ij]``."""
    return [[dirac_commutator(x, ctx) for x in row] for row in e]


def spinor_matmul(a: list, b: list) -> list:
    """Product of matrices whose entries are Clifford elements (or torus polynomials)."""
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = None
            for l in range(k):
                x, y = a[i][l], b[l][j]
                if _is_zero(x) or _is_zero(y):
                    continue
                p = _mul(x, y)
                acc = p if acc is None else acc + p
            row.append(acc if acc is not None else CliffordElement(2, {}))
        out.append(row)
    return out


def _is_zero(x) -> bool:
    return x.is_zero()


def _mul(x, y):
    if isinstance(x, NCPoly) and isinstance(y, CliffordElement):
        return CliffordElement(2, {s: x * v for s, v in y.terms.items()})
    if isinstance(x, CliffordElement) and isinstance(y, NCPoly):
        return CliffordElement(2, {s: v * y for s, v in x.terms.items()})
    return x * y


# -- listed commutators ---------------------------------------------------

def listed_commutator(name: str) -> CliffordElement:
    """Closed-form ``[D, g]`` for a sphere generator ``g``.

    ``α: (u/2){γ₁ - i sφ γ₃ - i cφ sψ γ₄}``,
    ``α*: -(u*/2){γ₁ + i sφ γ₃ + i cφ sψ γ₄}``,
    ``β: (v/2){γ₂ + i cφ γ₃ - i sφ sψ γ₄}``,
    ``β*: -(v*/2){γ₂ - i cφ γ₃ + i sφ sψ γ₄}``,
    ``t: (i/2) cψ γ₄``.
    """
    T = torus_theta()
    i = PhaseScalar.const(_I)
    rows = {
        "α": ("u", 1, {1: TrigCoeff.one(), 3: _tc(sphi=1, coeff=-_I), 4: _tc(cphi=1, spsi=1, coeff=-_I)}),
        "α*": ("u*", -1, {1: TrigCoeff.one(), 3: _tc(sphi=1, coeff=_I), 4: _tc(cphi=1, spsi=1, coeff=_I)}),
        "β": ("v", 1, {2: TrigCoeff.one(), 3: _tc(cphi=1, coeff=_I), 4: _tc(sphi=1, spsi=1, coeff=-_I)}),
        "β*": ("v*", -1, {2: TrigCoeff.one(), 3: _tc(cphi=1, coeff=-_I), 4: _tc(sphi=1, spsi=1, coeff=_I)}),
    }
    half = PhaseScalar.const(Fraction(1, 2))
    if name == "t":
        return CliffordElement(2, {(4,): NCPoly(T, {(): _tc(cpsi=1) * (i * half)})})
    gen, sign, comps = rows[name]
    return CliffordElement(
        2,
        {(k,): NCPoly(T, {((gen, 1),): c.scale(sign) * half}) for k, c in comps.items()},
    )


@dataclass
class TableReport:
    ok: bool
    mismatches: dict = field(default_factory=dict)


def commutator_table_check(ctx: DiracContext | None = None) -> TableReport:
    """Compare the derivation formula with the listed commutator of each generator."""
    S = sphere_theta()
    bad = {}
    for g in ("α", "α*", "β", "β*", "t"):
        got = dirac_commutator(NCPoly.gen(S, g), ctx)
        want = listed_commutator(g)
        if got != want:
            bad[g] = (got, want)
    return TableReport(not bad, bad)
