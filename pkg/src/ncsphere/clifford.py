"""Clifford algebra of R^{2m}, the sphere idempotent E(ξ, t) and spin matrices.

Basis elements are indexed by sorted tuples of indices ``1..2m`` with
``e_i² = 1``.  Coefficients may be any exact ring elements supporting ``+``
and ``*`` (Fractions, Gaussian rationals or polynomials over the commutative
sphere).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra.ncpoly import NCPoly
from .algebra.presentation import sphere_comm
from .algebra.scalars import GaussianRational, PhaseScalar, as_qi
from .errors import PreconditionError, ShapeError, UnsupportedKindError

__all__ = [
    "CliffordElement",
    "cl_mul",
    "cl_trace",
    "gamma_vector",
    "chirality",
    "SpinRep",
    "spin_rep_m2",
    "spin_rep_m1",
    "spin_rep",
    "idempotent_E",
    "idempotent_E_abstract",
    "odd_trace_scan",
    "rational_sphere_point",
    "OddTraceReport",
    "qi_matrix_mul",
]

I = GaussianRational(0, 1)


def _reorder_sign(s: tuple, t: tuple) -> int:
    """Sign of sorting the concatenation ``s + t`` (both already sorted)."""
    inv = 0
    for a in s:
        for b in t:
            if b < a:
                inv += 1
    return -1 if inv % 2 else 1


def _sym_diff(s: tuple, t: tuple) -> tuple:
    return tuple(sorted(set(s) ^ set(t)))


class CliffordElement:
    """``Σ c_S e_S`` over subsets ``S`` of ``{1..2m}``."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: dict | None = None):
        self.m = m
        self.terms = {tuple(k): v for k, v in (terms or {}).items() if _nonzero(v)}

    @classmethod
    def scalar(cls, m: int, c) -> "CliffordElement":
        return cls(m, {(): c})

    @classmethod
    def basis(cls, m: int, *idx: int, coeff=1) -> "CliffordElement":
        """Product ``e_{i1} e_{i2} ...`` in the given order."""
        out = cls(m, {(): coeff})
        for i in idx:
            if not 1 <= i <= 2 * m:
                raise ValueError(f"index {i} outside 1..{2 * m}")
            out = out * cls(m, {(i,): 1})
        return out

    def _check(self, other: "CliffordElement") -> None:
        if other.m != self.m:
            raise ShapeError(f"Clifford dimensions differ: {2 * self.m} vs {2 * other.m}")

    def __add__(self, other):
        if not isinstance(other, CliffordElement):
            other = CliffordElement.scalar(self.m, other)
        self._check(other)
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc[k] + v if k in acc else v
        return CliffordElement(self.m, acc)

    __radd__ = __add__

    def __neg__(self):
        return CliffordElement(self.m, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, CliffordElement):
            return CliffordElement(self.m, {k: v * other for k, v in self.terms.items()})
        return cl_mul(self, other)

    def __rmul__(self, other):
        return CliffordElement(self.m, {k: other * v for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, CliffordElement):
            other = CliffordElement.scalar(self.m, other)
        return self.m == other.m and not (self - other).terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def map(self, fn) -> "CliffordElement":
        return CliffordElement(self.m, {k: fn(v) for k, v in self.terms.items()})

    def __repr__(self):
        body = " + ".join(f"({v})e{''.join(map(str, k)) or '∅'}" for k, v in sorted(self.terms.items()))
        return f"Cl{2 * self.m}[{body or '0'}]"


def _nonzero(v) -> bool:
    if isinstance(v, NCPoly):
        return not v.is_zero()
    return bool(v)


def cl_mul(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    x._check(y)
    acc: dict = {}
    for s, a in x.terms.items():
        for t, b in y.terms.items():
            k = _sym_diff(s, t)
            v = a * b
            if _reorder_sign(s, t) < 0:
                v = -v
            acc[k] = acc[k] + v if k in acc else v
    return CliffordElement(x.m, acc)


def cl_trace(x: CliffordElement):
    """Trace in the irreducible module: ``2^m`` times the scalar coefficient."""
    c = x.terms.get(())
    if c is None:
        return 0
    return c * (2**x.m)


def gamma_vector(m: int, xi) -> CliffordElement:
    """``γ(ξ) = Σ ξ_i e_i``."""
    if len(xi) != 2 * m:
        raise ShapeError(f"need {2 * m} coordinates")
    return CliffordElement(m, {(i + 1,): c for i, c in enumerate(xi)})


def chirality(m: int) -> CliffordElement:
    """Grading element ``γ = c_m e_1 ... e_2m`` with ``γ² = 1``.

    ``c_m = 1`` for even ``m`` and ``i`` for odd ``m`` (the bare product
    squares to ``(-1)^m``).
    """
    c = 1 if m % 2 == 0 else I
    return CliffordElement(m, {tuple(range(1, 2 * m + 1)): c})


# -- concrete spin matrices ---------------------------------------------

_SIGMA = (
    ((0, 1), (1, 0)),
    ((0, -1j), (1j, 0)),
    ((1, 0), (0, -1)),
)


def _qi_matrix(rows) -> tuple:
    return tuple(tuple(as_qi(complex(x)) for x in row) for row in rows)


def qi_matrix_mul(a: tuple, b: tuple) -> tuple:
    n, k, m = len(a), len(b), len(b[0])
    zero = GaussianRational(0)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            s = zero
            for l in range(k):
                if a[i][l] and b[l][j]:
                    s = s + a[i][l] * b[l][j]
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def _block(a, b, c, d) -> tuple:
    return tuple(tuple(ra) + tuple(rb) for ra, rb in zip(a, b)) + tuple(
        tuple(rc) + tuple(rd) for rc, rd in zip(c, d)
    )


@dataclass(frozen=True)
class SpinRep:
    """Self-adjoint matrices ``γ_1..γ_2m`` with ``{γ_μ, γ_ν} = 2δ`` and the grading."""

    m: int
    gammas: tuple
    grading: tuple

    @property
    def dim(self) -> int:
        return 2**self.m

    def identity(self) -> tuple:
        n = self.dim
        return tuple(tuple(as_qi(1 if i == j else 0) for j in range(n)) for i in range(n))

    def image(self, x: CliffordElement) -> tuple:
        """Matrix of a Clifford element with scalar coefficients."""
        n = self.dim
        acc = [[GaussianRational(0)] * n for _ in range(n)]
        for s, c in x.terms.items():
            mat = self.identity()
            for i in s:
                mat = qi_matrix_mul(mat, self.gammas[i - 1])
            c = as_qi(c)
            for i in range(n):
                for j in range(n):
                    if mat[i][j]:
                        acc[i][j] = acc[i][j] + c * mat[i][j]
        return tuple(tuple(r) for r in acc)

    def numeric(self) -> tuple:
        """Complex numpy arrays ``(γ_1, ..., γ_2m, grading)``."""
        conv = lambda mat: np.array([[complex(x) for x in row] for row in mat])
        return tuple(conv(g) for g in self.gammas) + (conv(self.grading),)


# chiral basis: γ_k = [[0, -iσ_k], [iσ_k, 0]] (k = 1, 2, 3), γ_4 = [[0, 1], [1, 0]]
# so that γ_5 = γ_1 γ_2 γ_3 γ_4 = diag(1, 1, -1, -1)
_Z2 = ((0, 0), (0, 0))
_I2 = ((1, 0), (0, 1))


def _gamma_k(k: int) -> tuple:
    s = _SIGMA[k]
    minus_i_s = tuple(tuple(-1j * x for x in row) for row in s)
    i_s = tuple(tuple(1j * x for x in row) for row in s)
    return _qi_matrix(_block(_Z2, minus_i_s, i_s, _Z2))


_SPIN_M2 = None


def spin_rep_m2() -> SpinRep:
    global _SPIN_M2
    if _SPIN_M2 is None:
        gam = (_gamma_k(0), _gamma_k(1), _gamma_k(2), _qi_matrix(_block(_Z2, _I2, _I2, _Z2)))
        g5 = gam[0]
        for g in gam[1:]:
            g5 = qi_matrix_mul(g5, g)
        _SPIN_M2 = SpinRep(2, gam, g5)
    return _SPIN_M2


def spin_rep_m1() -> SpinRep:
    """Pauli matrices ``σ_1, σ_2`` with grading ``i σ_1 σ_2 = -σ_3``."""
    gam = (_qi_matrix(_SIGMA[0]), _qi_matrix(_SIGMA[1]))
    grad = tuple(tuple(I * x for x in row) for row in qi_matrix_mul(gam[0], gam[1]))
    return SpinRep(1, gam, grad)


def spin_rep(m: int) -> SpinRep:
    if m == 1:
        return spin_rep_m1()
    if m == 2:
        return spin_rep_m2()
    raise UnsupportedKindError("concrete spin matrices exist here only for m = 1, 2")


# -- the sphere idempotent ----------------------------------------------

def _sphere_gens(m: int):
    pres = sphere_comm(2 * m)
    xi = [NCPoly.gen(pres, f"ξ{i}") for i in range(1, 2 * m + 1)]
    return pres, xi, NCPoly.gen(pres, "t")


def idempotent_E_abstract(m: int) -> CliffordElement:
    """``E = 1/2 + 1/2 (γ(ξ) + t γ)`` with polynomial coefficients over the round sphere."""
    if m not in (1, 2):
        raise UnsupportedKindError("idempotent_E supports m = 1, 2")
    pres, xi, t = _sphere_gens(m)
    half = PhaseScalar.const(Fraction(1, 2))
    gam = chirality(m).map(lambda c: NCPoly.const(pres, PhaseScalar.const(c)))
    core = gamma_vector(m, xi) + gam * t
    return CliffordElement.scalar(m, NCPoly.const(pres, half)) + core * NCPoly.const(pres, half)


def idempotent_E(m: int) -> list:
    """``E`` as a ``2^m × 2^m`` matrix over ``sphere_comm(2m)`` via the spin matrices."""
    if m not in (1, 2):
        raise UnsupportedKindError("idempotent_E supports m = 1, 2")
    pres, xi, t = _sphere_gens(m)
    rep = spin_rep(m)
    n = rep.dim
    half = PhaseScalar.const(Fraction(1, 2))
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            x = NCPoly.const(pres, half) if i == j else NCPoly.zero(pres)
            for k in range(2 * m):
                c = rep.gammas[k][i][j]
                if c:
                    x = x + xi[k].scale(PhaseScalar.const(c * half.constant_value()))
            c = rep.grading[i][j]
            if c:
                x = x + t.scale(PhaseScalar.const(c * half.constant_value()))
            row.append(x)
        out.append(row)
    return out


def rational_sphere_point(rng: random.Random, m: int, bound: int = 9) -> tuple:
    """Exact point ``(ξ_1..ξ_2m, t)`` on the unit sphere by inverse stereographic projection."""
    y = [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(2 * m)]
    r2 = sum(v * v for v in y)
    xi = tuple(2 * v / (r2 + 1) for v in y)
    return xi, (r2 - 1) / (r2 + 1)


@dataclass
class OddTraceReport:
    ok: bool
    points: int
    nonzero: list = field(default_factory=list)


def odd_trace_scan(m: int, ell: int, points: list) -> OddTraceReport:
    """``Trace((E(x_1) - 1/2) ... (E(x_ℓ) - 1/2)) = 0`` for odd ``ℓ < 2m``.

    ``points`` holds tuples of ``ℓ`` sphere points ``(ξ, t)``.
    """
    if ell % 2 == 0 or ell >= 2 * m:
        raise PreconditionError("ℓ must be odd and smaller than 2m")
    gam = chirality(m)
    bad = []
    for tup in points:
        prod = CliffordElement.scalar(m, Fraction(1))
        for xi, t in tup:
            if sum(Fraction(v) ** 2 for v in xi) + Fraction(t) ** 2 != 1:
                raise PreconditionError(f"point {(xi, t)} is not on the unit sphere")
            f = (gamma_vector(m, [Fraction(v) for v in xi]) + gam * Fraction(t)) * Fraction(1, 2)
            prod = prod * f
        tr = cl_trace(prod)
        if tr:
            bad.append((tup, tr))
    return OddTraceReport(not bad, len(points), bad)
