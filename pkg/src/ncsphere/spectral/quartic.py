"""The quartic ``⟨(e - 1/2)[D, e]⁴⟩`` and the operator image of Hochschild chains."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..algebra.hom import torus_embed
from ..algebra.ncpoly import NCPoly
from ..algebra.scalars import PhaseScalar
from ..algebra.trig import TrigCoeff
from ..chains import TensorChain
from ..clifford import CliffordElement
from .dirac import GAMMA5, DiracContext, commutator_matrix, dirac_commutator, spinor_matmul
from .sphere import build_e_theta

__all__ = [
    "cond_expect",
    "quartic_operator",
    "quartic_invariant",
    "QuarticResult",
    "pi_map",
    "split_gamma5",
]


def cond_expect(x: list) -> CliffordElement:
    """Normalized partial trace ``(1/r) Σ x_ii`` over the matrix factor."""
    r = len(x)
    acc = None
    for i in range(r):
        v = x[i][i]
        if isinstance(v, NCPoly):
            v = CliffordElement(2, {(): v})
        acc = v if acc is None else acc + v
    quarter = PhaseScalar.const(Fraction(1, r))
    return CliffordElement(2, {k: v.scale(quarter) for k, v in acc.terms.items()})


def _embed_matrix(e: list) -> list:
    h = torus_embed()
    return [[h(x) for x in row] for row in e]


def quartic_operator(e: list | None = None, ctx: DiracContext | None = None) -> CliffordElement:
    """``⟨(e - 1/2)[D, e]⁴⟩`` as a Clifford element over the torus algebra."""
    e = e if e is not None else build_e_theta()
    et = _embed_matrix(e)
    r = len(et)
    de = commutator_matrix(et, ctx)
    m2 = spinor_matmul(de, de)
    half = PhaseScalar.const(Fraction(1, 2))
    shifted = [[et[i][j] - half if i == j else et[i][j] for j in range(r)] for i in range(r)]
    n = spinor_matmul(shifted, m2)
    # only the diagonal of n·m2 is needed
    diag = []
    for i in range(r):
        acc = CliffordElement(2, {})
        for l in range(r):
            if n[i][l].is_zero() or m2[l][i].is_zero():
                continue
            acc = acc + n[i][l] * m2[l][i]
        diag.append(acc)
    return cond_expect([[diag[i] if i == j else None for j in range(r)] for i in range(r)])


def split_gamma5(x: CliffordElement):
    """``(c, residual)`` with ``x = c γ₅ + residual`` and ``c`` a constant if possible.

    ``c`` is ``None`` when the ``γ₅`` coefficient is not a constant; the
    residual collects every other spin component and any non-constant part.
    """
    residual = {k: v for k, v in x.terms.items() if k != GAMMA5}
    coef = x.terms.get(GAMMA5)
    if coef is None:
        return PhaseScalar.zero(), residual
    if set(coef.terms) == {()}:
        v = TrigCoeff.coerce(coef.terms[()])
        if v.is_constant():
            return v.constant_value(), residual
    residual[GAMMA5] = coef
    return None, residual


@dataclass
class QuarticResult:
    c: PhaseScalar | None
    residual: dict
    operator: CliffordElement = field(repr=False, default=None)

    @property
    def ok(self) -> bool:
        return self.c is not None and not self.residual and bool(self.c)


def quartic_invariant(e: list | None = None, ctx: DiracContext | None = None) -> QuarticResult:
    op = quartic_operator(e, ctx)
    c, residual = split_gamma5(op)
    return QuarticResult(c, residual, op)


def pi_map(chain: TensorChain, ctx: DiracContext | None = None) -> CliffordElement:
    """``π(a0 ⊗ ... ⊗ an) = a0 [D, a1] ... [D, an]`` summed over the chain."""
    h = torus_embed()
    cache: dict = {}

    def comm(w):
        if w not in cache:
            cache[w] = dirac_commutator(NCPoly.from_word(chain.pres, w), ctx)
        return cache[w]

    acc = CliffordElement(2, {})
    for tensor, coeff in chain.terms.items():
        a0 = h(NCPoly.from_word(chain.pres, tensor[0], coeff))
        x = CliffordElement(2, {(): a0})
        for w in tensor[1:]:
            x = x * comm(w)
            if x.is_zero():
                break
        acc = acc + x
    return acc
