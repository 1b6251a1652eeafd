"""Formal calculus of twisted operators for isospectral deformations.

An operator expression is a sum of canonical terms

    coeff · A₁ A₂ ... A_k · λ^{a p₁ + b p₂ + c p₁ p₂} · J^j

where the ``A_i`` are homogeneous atoms (base monomials, their ``J``
conjugates ``J[x]`` and Dirac commutator symbols ``[D, x]``), the weight is
written ``Λ^(a,b)`` (with ``c`` appended when nonzero) and ``j ∈ {0, 1}``.

Rewriting rules, for an atom ``T`` of bidegree ``(m, n)``:

* ``Λ^(a,b,c) T = λ^{am + bn + cmn} T Λ^(a + cn, b + cm, c)``
  (since ``f(p) T = T f(p + (m, n))``);
* ``J z = z̄ J`` on scalars, ``J T = J[T] J`` with ``J[T]`` of bidegree
  ``(-m, -n)`` and ``J[J[T]] = T``;
* ``J Λ^(a,b,c) = Λ^(a,b,-c) J``: the ``p_j`` anticommute with the antilinear
  ``J``, so linear weights commute with ``J`` and the quadratic one flips;
* ``J² = J_SQUARED`` (a real sign).

Atom words are reduced to the lexicographic normal form of a trace monoid
whose commutation graph is fixed by a :class:`BaseModel`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .algebra.scalars import PhaseScalar
from .errors import PreconditionError

__all__ = [
    "Atom",
    "monomial",
    "dirac_atom",
    "j_conj",
    "atom_adjoint",
    "bidegree",
    "BaseModel",
    "FREE",
    "CLASSICAL",
    "OperatorExpr",
    "weight",
    "J",
    "J_inv",
    "J_tilde",
    "J_tilde_inv",
    "left_twist",
    "right_twist",
    "push_weight",
    "canonicalize_random",
    "star_left",
    "star_right",
    "lemma1_check",
    "lemma1b_check",
    "twist_J_check",
    "order_one_check",
    "commut_check",
    "star_associativity_check",
    "lex_normal_form",
    "monomials_in_box",
    "DeformNumericModel",
    "numeric_confirmation",
    "opposite",
    "dump_expr",
    "J_SQUARED",
]

J_SQUARED = 1


# -- atoms ---------------------------------------------------------------

@dataclass(frozen=True)
class Atom:
    """Homogeneous operator symbol.

    ``kind`` is ``"f"`` (base monomial ``u^n1 v^n2``), ``"J"`` (``J x J⁻¹``)
    or ``"D"`` (``[D, x]``).
    """

    kind: str
    name: str
    bideg: tuple
    inner: "Atom | None" = None

    def sort_key(self):
        return (_KIND_ORDER[self.kind], self.name, self.bideg)

    def __str__(self):
        return self.name


_KIND_ORDER = {"f": 0, "J": 1, "D": 2}


def _mono_name(n1: int, n2: int) -> str:
    parts = []
    for g, n in (("u", n1), ("v", n2)):
        if n:
            base = g if n > 0 else g + "*"
            parts.append(base if abs(n) == 1 else f"{base}^{abs(n)}")
    return "·".join(parts) or "1"


def monomial(n1: int, n2: int) -> Atom:
    """Base monomial ``u^n1 v^n2`` (negative powers use the adjoints)."""
    return Atom("f", _mono_name(n1, n2), (n1, n2))


def dirac_atom(a: Atom) -> Atom:
    """``[D, a]``; ``D`` has bidegree ``(0, 0)`` so the bidegree is kept."""
    return Atom("D", f"[D,{a.name}]", a.bideg, a)


def j_conj(a: Atom) -> Atom:
    """``J a J⁻¹``."""
    if a.kind == "J":
        return a.inner
    return Atom("J", f"J[{a.name}]", (-a.bideg[0], -a.bideg[1]), a)


def atom_adjoint(a: Atom) -> tuple:
    """``(sign, atom)`` with ``a* = sign · atom``."""
    if a.kind == "f":
        return 1, monomial(-a.bideg[0], -a.bideg[1])
    if a.kind == "J":
        s, inner = atom_adjoint(a.inner)
        return s, j_conj(inner)
    # [D, x]* = -[D, x*] for self-adjoint D
    s, inner = atom_adjoint(a.inner)
    return -s, dirac_atom(inner)


_DEG = {"u": (1, 0), "u*": (-1, 0), "v": (0, 1), "v*": (0, -1)}


def bidegree(x) -> tuple:
    """Bidegree of an atom, a torus word, or a homogeneous torus polynomial."""
    from .algebra.ncpoly import NCPoly

    if isinstance(x, Atom):
        return x.bideg
    if isinstance(x, NCPoly):
        degs = {bidegree(w) for w in x.terms}
        if len(degs) != 1:
            raise PreconditionError("element is not homogeneous")
        return degs.pop()
    if isinstance(x, tuple) and all(isinstance(a, Atom) for a in x):
        return (sum(a.bideg[0] for a in x), sum(a.bideg[1] for a in x))
    n1 = sum(_DEG[g][0] * p for g, p in x)
    n2 = sum(_DEG[g][1] * p for g, p in x)
    return (n1, n2)


# -- base models -----------------------------------------------------------

@dataclass(frozen=True)
class BaseModel:
    """Which pairs of atoms commute in the undeformed operator algebra."""

    name: str
    commutes: Callable = field(compare=False)


def _free(x: Atom, y: Atom) -> bool:
    return x == y


def _classical(x: Atom, y: Atom) -> bool:
    # functions commute with everything; D-atoms commute with functions and
    # with J-conjugated functions (the classical order-one condition)
    if x == y:
        return True
    kinds = {x.kind, y.kind}
    if "f" in kinds:
        return True
    if kinds == {"J"}:
        return x.inner.kind == "f" and y.inner.kind == "f"
    if kinds == {"J", "D"}:
        j = x if x.kind == "J" else y
        return j.inner.kind == "f"
    return False


FREE = BaseModel("free", _free)
CLASSICAL = BaseModel("classical", _classical)


def lex_normal_form(word: Sequence[Atom], model: BaseModel) -> tuple:
    """Lexicographically least word in the trace-monoid class of ``word``."""
    if model is FREE or len(word) < 2:
        return tuple(word)
    rest = list(word)
    out = []
    comm = model.commutes
    while rest:
        best = None
        for i, x in enumerate(rest):
            if all(comm(x, y) for y in rest[:i]):
                if best is None or x.sort_key() < rest[best].sort_key():
                    best = i
        out.append(rest.pop(best))
    return tuple(out)


# -- expressions -------------------------------------------------------------

Weight = tuple  # (a, b, c)
_W0 = (0, 0, 0)


def _push(w: Weight, a: Atom) -> tuple:
    """``Λ^w a = λ^k a Λ^w'``; returns ``(k, w')``."""
    x, y, c = w
    m, n = a.bideg
    return x * m + y * n + c * m * n, (x + c * n, y + c * m, c)


class OperatorExpr:
    """Sum of canonical terms keyed by ``(atoms, weight, j)``."""

    __slots__ = ("terms", "model")

    def __init__(self, terms: dict | None = None, model: BaseModel = FREE):
        self.terms = {k: v for k, v in (terms or {}).items() if v.terms}
        self.model = model

    @classmethod
    def scalar(cls, c=1, model: BaseModel = FREE) -> "OperatorExpr":
        return cls({((), _W0, 0): PhaseScalar.coerce(c)}, model)

    @classmethod
    def atom(cls, a: Atom, model: BaseModel = FREE, coeff=1) -> "OperatorExpr":
        return cls({((a,), _W0, 0): PhaseScalar.coerce(coeff)}, model)

    @classmethod
    def word(cls, atoms: Sequence[Atom], model: BaseModel = FREE, coeff=1) -> "OperatorExpr":
        return cls({(lex_normal_form(atoms, model), _W0, 0): PhaseScalar.coerce(coeff)}, model)

    @classmethod
    def from_factors(cls, factors: Sequence, model: BaseModel = FREE, coeff=1) -> "OperatorExpr":
        """Canonical form of a product of atoms, weights ``("W", a, b, c)``, ``"J"``, ``"Jinv"``."""
        out = cls.scalar(coeff, model)
        for f in factors:
            out = out * _factor_expr(f, model)
        return out

    # -- arithmetic ------------------------------------------------------
    def _with(self, terms) -> "OperatorExpr":
        return OperatorExpr(terms, self.model)

    def __add__(self, other: "OperatorExpr") -> "OperatorExpr":
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc[k] + v if k in acc else v
        return self._with(acc)

    def __neg__(self):
        return self._with({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "OperatorExpr":
        c = PhaseScalar.coerce(c)
        return self._with({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, OperatorExpr):
            return self.scale(other)
        acc: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k, c = _mul_terms(k1, c1, k2, c2, self.model)
                acc[k] = acc[k] + c if k in acc else c
        return self._with(acc)

    def __eq__(self, other):
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        return not (self - other).terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def adjoint(self) -> "OperatorExpr":
        """``(z A Λ^w J^j)* = J^{-j} Λ^{-w} A* z̄``."""
        out = OperatorExpr({}, self.model)
        for (atoms, w, j), c in self.terms.items():
            factors: list = ["Jinv"] if j else []
            factors.append(("W", -w[0], -w[1], -w[2]))
            sign = 1
            for a in reversed(atoms):
                s, b = atom_adjoint(a)
                sign *= s
                factors.append(b)
            out = out + OperatorExpr.from_factors(factors, self.model, c.conjugate().scale(sign))
        return out

    def __repr__(self):
        return f"OperatorExpr({dump_expr(self)})"


def _factor_expr(f, model: BaseModel) -> OperatorExpr:
    if isinstance(f, Atom):
        return OperatorExpr.atom(f, model)
    if f == "J":
        return OperatorExpr({((), _W0, 1): PhaseScalar.one()}, model)
    if f == "Jinv":
        return OperatorExpr({((), _W0, 1): PhaseScalar.const(J_SQUARED)}, model)
    if isinstance(f, tuple) and f and f[0] == "W":
        w = tuple(f[1:]) + (0,) * (4 - len(f))
        return OperatorExpr({((), w, 0): PhaseScalar.one()}, model)
    if isinstance(f, PhaseScalar):
        return OperatorExpr.scalar(f, model)
    raise TypeError(f"unknown factor {f!r}")


def _mul_terms(k1, c1: PhaseScalar, k2, c2: PhaseScalar, model: BaseModel):
    atoms1, w1, j1 = k1
    atoms2, w2, j2 = k2
    # move J^{j1} to the right through c2 · atoms2 · Λ^{w2}
    if j1:
        c2 = c2.conjugate()
        atoms2 = tuple(j_conj(a) for a in atoms2)
        w2 = (w2[0], w2[1], -w2[2])
    # move Λ^{w1} through atoms2
    phase = 0
    w = w1
    for a in atoms2:
        k, w = _push(w, a)
        phase += k
    w = (w[0] + w2[0], w[1] + w2[1], w[2] + w2[2])
    j = j1 + j2
    c = c1 * c2.mul_phase(phase)
    if j == 2:
        j = 0
        c = c.scale(J_SQUARED)
    return (lex_normal_form(atoms1 + atoms2, model), w, j), c


def weight(a: int = 0, b: int = 0, c: int = 0, model: BaseModel = FREE) -> OperatorExpr:
    return OperatorExpr({((), (a, b, c), 0): PhaseScalar.one()}, model)


def J(model: BaseModel = FREE) -> OperatorExpr:
    return _factor_expr("J", model)


def J_inv(model: BaseModel = FREE) -> OperatorExpr:
    return _factor_expr("Jinv", model)


def J_tilde(model: BaseModel = FREE) -> OperatorExpr:
    """``J̃ = J λ^{-p₁p₂}``."""
    return J(model) * weight(0, 0, -1, model)


def J_tilde_inv(model: BaseModel = FREE) -> OperatorExpr:
    return weight(0, 0, 1, model) * J_inv(model)


def _as_terms(x) -> list:
    """Normalise a homogeneous input to ``[(coeff, atoms)]``."""
    if isinstance(x, Atom):
        return [(PhaseScalar.one(), (x,))]
    if isinstance(x, tuple) and all(isinstance(a, Atom) for a in x):
        return [(PhaseScalar.one(), x)]
    return [(PhaseScalar.coerce(c), (a,) if isinstance(a, Atom) else tuple(a)) for c, a in x]


def left_twist(x, model: BaseModel = FREE) -> OperatorExpr:
    """``l(T) = Σ T̂_{n} λ^{n₂ p₁}``."""
    out = OperatorExpr({}, model)
    for c, atoms in _as_terms(x):
        n1, n2 = bidegree(atoms)
        out = out + OperatorExpr.word(atoms, model, c) * weight(n2, 0, 0, model)
    return out


def right_twist(x, model: BaseModel = FREE) -> OperatorExpr:
    """``r(T) = Σ T̂_{n} λ^{n₁ p₂}``."""
    out = OperatorExpr({}, model)
    for c, atoms in _as_terms(x):
        n1, n2 = bidegree(atoms)
        out = out + OperatorExpr.word(atoms, model, c) * weight(0, n1, 0, model)
    return out


def push_weight(factors: Sequence, model: BaseModel = FREE) -> OperatorExpr:
    """Canonical form of a factor sequence (weights pushed to the right)."""
    return OperatorExpr.from_factors(factors, model)


def canonicalize_random(factors: Sequence, rng: random.Random, model: BaseModel = FREE) -> OperatorExpr:
    """Canonical form obtained by applying local rules at random positions.

    Factors are atoms, ``("W", a, b, c)``, ``"J"`` and ``"Jinv"``.  Scalars
    produced in the middle of the word are carried to the front through the
    ``J`` factors on their left (each one conjugates them).
    """
    seq: list = []
    coeff = PhaseScalar.one()
    for f in factors:
        if f == "Jinv":
            coeff = coeff.scale(J_SQUARED)
            seq.append("J")
        elif isinstance(f, tuple) and f and f[0] == "W":
            seq.append(("W",) + tuple(f[1:]) + (0,) * (4 - len(f)))
        else:
            seq.append(f)

    def is_w(x):
        return isinstance(x, tuple) and x and x[0] == "W"

    def redexes():
        out = []
        for i in range(len(seq) - 1):
            x, y = seq[i], seq[i + 1]
            if (is_w(x) and (isinstance(y, Atom) or is_w(y))) or (x == "J" and (isinstance(y, Atom) or is_w(y) or y == "J")):
                out.append(i)
        return out

    while True:
        pos = redexes()
        if not pos:
            break
        i = rng.choice(pos)
        x, y = seq[i], seq[i + 1]
        n_j_left = sum(1 for z in seq[:i] if z == "J")
        if is_w(x) and isinstance(y, Atom):
            k, w = _push(tuple(x[1:]), y)
            ph = PhaseScalar.lam(k)
            coeff = coeff * (ph.conjugate() if n_j_left % 2 else ph)
            seq[i : i + 2] = [y, ("W",) + w]
        elif is_w(x) and is_w(y):
            seq[i : i + 2] = [("W",) + tuple(p + q for p, q in zip(x[1:], y[1:]))]
        elif x == "J" and isinstance(y, Atom):
            seq[i : i + 2] = [j_conj(y), "J"]
        elif x == "J" and is_w(y):
            seq[i : i + 2] = [("W", y[1], y[2], -y[3]), "J"]
        elif x == "J" and y == "J":
            coeff = coeff.scale(J_SQUARED)
            del seq[i : i + 2]
    atoms = tuple(z for z in seq if isinstance(z, Atom))
    ws = [z for z in seq if is_w(z)]
    js = sum(1 for z in seq if z == "J")
    w = tuple(ws[0][1:]) if ws else _W0
    return OperatorExpr({(lex_normal_form(atoms, model), w, js): coeff}, model)


# -- star products -------------------------------------------------------------

def star_left(x, y) -> list:
    """``x ∗ y = λ^{n'₁ n₂} x y`` extended bilinearly; returns ``[(coeff, atoms)]``."""
    out = []
    for c1, a1 in _as_terms(x):
        n2 = bidegree(a1)[1]
        for c2, a2 in _as_terms(y):
            m1 = bidegree(a2)[0]
            out.append(((c1 * c2).mul_phase(m1 * n2), a1 + a2))
    return out


def star_right(x, y) -> list:
    """``x ∗_r y = λ^{n₁ n'₂} x y``."""
    out = []
    for c1, a1 in _as_terms(x):
        n1 = bidegree(a1)[0]
        for c2, a2 in _as_terms(y):
            m2 = bidegree(a2)[1]
            out.append(((c1 * c2).mul_phase(n1 * m2), a1 + a2))
    return out


# -- lemma checks ----------------------------------------------------------------

def lemma1_check(x: Atom, y: Atom, model: BaseModel = FREE) -> bool:
    """``l(x) r(y) - r(y) l(x) = (xy - yx) λ^{n'₁ n₂} Λ^(n₂, n'₁)``."""
    n2 = x.bideg[1]
    m1 = y.bideg[0]
    lhs = left_twist(x, model) * right_twist(y, model) - right_twist(y, model) * left_twist(x, model)
    comm = OperatorExpr.word((x, y), model) - OperatorExpr.word((y, x), model)
    rhs = comm.scale(PhaseScalar.lam(m1 * n2)) * weight(n2, m1, 0, model)
    return lhs == rhs


def lemma1b_check(x: Atom, y: Atom, model: BaseModel = FREE) -> bool:
    """``l(x) l(y) = l(x ∗ y)`` and ``r(x) r(y) = r(x ∗_r y)``."""
    left = left_twist(x, model) * left_twist(y, model) == left_twist(star_left(x, y), model)
    right = right_twist(x, model) * right_twist(y, model) == right_twist(star_right(x, y), model)
    return left and right


def twist_J_check(x: Atom, model: BaseModel = FREE) -> dict:
    """Compare ``J̃ l(x) J̃⁻¹`` with ``r(J x J⁻¹) λ^{±n₁n₂}``.

    Returns the canonical left side together with flags ``minus`` (phase
    ``λ^{-n₁n₂}``) and ``plus`` (phase ``λ^{+n₁n₂}``).  With ``J``
    antilinear the identity holds with ``λ^{+n₁n₂}``; the two agree exactly
    when ``n₁ n₂ = 0``.
    """
    n1, n2 = x.bideg
    lhs = J_tilde(model) * left_twist(x, model) * J_tilde_inv(model)
    base = right_twist(j_conj(x), model)
    return {
        "lhs": lhs,
        "minus": lhs == base.scale(PhaseScalar.lam(-n1 * n2)),
        "plus": lhs == base.scale(PhaseScalar.lam(n1 * n2)),
    }


def opposite(b: Atom, model: BaseModel = CLASSICAL) -> OperatorExpr:
    """``b° = J̃ l(b)* J̃⁻¹``."""
    return J_tilde(model) * left_twist(b, model).adjoint() * J_tilde_inv(model)


def commut_check(a: Atom, b: Atom, model: BaseModel = CLASSICAL) -> bool:
    """``[l(a), b°] = 0``."""
    x = left_twist(a, model)
    y = opposite(b, model)
    return (x * y - y * x).is_zero()


def order_one_check(a: Atom, b: Atom, model: BaseModel = CLASSICAL) -> bool:
    """``[[D, l(a)], b°] = 0`` using ``[D, l(a)] = l([D, a])``."""
    x = left_twist(dirac_atom(a), model)
    y = opposite(b, model)
    return (x * y - y * x).is_zero()


def star_associativity_check(x: Atom, y: Atom, z: Atom) -> bool:
    return _collect(star_left(star_left(x, y), z)) == _collect(star_left(x, star_left(y, z)))


def _collect(terms: list) -> dict:
    acc: dict = {}
    for c, atoms in terms:
        acc[atoms] = acc[atoms] + c if atoms in acc else c
    return {k: v for k, v in acc.items() if v}


def monomials_in_box(bound: int = 3) -> list:
    r = range(-bound, bound + 1)
    return [monomial(n1, n2) for n1 in r for n2 in r]


# -- text form ---------------------------------------------------------------------

def dump_expr(e: OperatorExpr) -> str:
    """Shared grammar with ``Λ^(a,b)`` (or ``Λ^(a,b,c)``) weights and ``J`` markers."""
    from .algebra.dump import dump_coeff_terms

    if not e.terms:
        return "0"
    parts = []
    for (atoms, w, j), c in sorted(e.terms.items(), key=lambda kv: (tuple(a.sort_key() for a in kv[0][0]), kv[0][1], kv[0][2])):
        body = [a.name for a in atoms]
        if w != _W0:
            body.append(f"Λ^({w[0]},{w[1]})" if w[2] == 0 else f"Λ^({w[0]},{w[1]},{w[2]})")
        if j:
            body.append("J")
        word = "·".join(body) or "1"
        parts.extend(f"{cs} · {word}" for cs in dump_coeff_terms(c))
    return " + ".join(parts)


# -- numeric model ---------------------------------------------------------------------

class DeformNumericModel:
    """``ℓ²(Z_N²)`` with commuting shifts, diagonal ``p₁, p₂`` and ``J = K ∘ conj``.

    ``K e_{j,k} = e_{-j,-k}``.  Antilinear operators are stored as ``(M, True)``
    meaning ``v ↦ M conj(v)``.
    """

    def __init__(self, N: int = 5, theta=None):
        from fractions import Fraction

        theta = Fraction(1, N) if theta is None else Fraction(theta)
        if N % theta.denominator:
            raise PreconditionError("N must be a multiple of the denominator of θ")
        self.N = N
        self.lam = np.exp(2j * np.pi * float(theta))
        shift = np.roll(np.eye(N), 1, axis=0)
        eye = np.eye(N)
        self.U = np.kron(shift, eye)
        self.V = np.kron(eye, shift)
        j, k = np.meshgrid(np.arange(N), np.arange(N), indexing="ij")
        self.p1 = j.ravel()
        self.p2 = k.ravel()
        perm = np.zeros((N * N, N * N))
        for a in range(N):
            for b in range(N):
                perm[((-a) % N) * N + (-b) % N, a * N + b] = 1
        self.K = perm

    def weight(self, a: int, b: int, c: int = 0) -> np.ndarray:
        return np.diag(self.lam ** ((a * self.p1 + b * self.p2 + c * self.p1 * self.p2) % self.N))

    def atom(self, a: Atom) -> np.ndarray:
        if a.kind == "f":
            n1, n2 = a.bideg
            return np.linalg.matrix_power(self.U, n1 % self.N) @ np.linalg.matrix_power(self.V, n2 % self.N)
        if a.kind == "J":
            return self.K @ np.conj(self.atom(a.inner)) @ self.K
        raise PreconditionError("Dirac symbols have no matrix in this model")

    @staticmethod
    def compose(x: tuple, y: tuple) -> tuple:
        mx, ax = x
        my, ay = y
        return (mx @ (np.conj(my) if ax else my), ax != ay)

    def factor(self, f) -> tuple:
        if isinstance(f, Atom):
            return (self.atom(f), False)
        if f == "J":
            return (self.K.astype(complex), True)
        if f == "Jinv":
            return (J_SQUARED * self.K.astype(complex), True)
        if isinstance(f, tuple) and f[0] == "W":
            w = tuple(f[1:]) + (0,) * (4 - len(f))
            return (self.weight(*w), False)
        raise TypeError(f"unknown factor {f!r}")

    def product(self, factors: Sequence, coeff: complex = 1.0) -> tuple:
        n = self.N * self.N
        out = (coeff * np.eye(n, dtype=complex), False)
        for f in factors:
            out = self.compose(out, self.factor(f))
        return out

    def evaluate(self, e: OperatorExpr) -> dict:
        """``{False: linear part, True: antilinear part}``."""
        n = self.N * self.N
        out = {False: np.zeros((n, n), dtype=complex), True: np.zeros((n, n), dtype=complex)}
        for (atoms, w, j), c in e.terms.items():
            factors = list(atoms) + [("W",) + tuple(w)] + (["J"] if j else [])
            m, anti = self.product(factors, c.evaluate(self.lam))
            out[anti] += m
        return out

    def twisted_J_conjugate(self, x: Atom) -> np.ndarray:
        """``J̃ l(x) J̃⁻¹`` from matrices, never using the rewrite rules."""
        n1, n2 = x.bideg
        m, anti = self.product(["J", ("W", 0, 0, -1), x, ("W", n2, 0, 0), ("W", 0, 0, 1), "Jinv"])
        assert not anti
        return m

    def right_twist_J(self, x: Atom) -> np.ndarray:
        """``r(J x J⁻¹)`` from matrices."""
        n1, _ = x.bideg
        jx = self.product(["J", x, "Jinv"])[0]
        return jx @ self.weight(0, -n1, 0)


def numeric_confirmation(model: DeformNumericModel | None = None, bound: int = 3) -> dict:
    """Largest deviations between matrix products and canonical forms.

    Keys: ``lemma1a``, ``lemma1b``, ``twist_J_plus``, ``twist_J_minus`` (the
    deviation from ``λ^{∓...}`` forms of the twisted ``J`` identity) and
    ``canonical`` (raw factor products against their canonical forms).
    """
    nm = model or DeformNumericModel()
    mons = monomials_in_box(bound)
    dev = {"lemma1a": 0.0, "lemma1b": 0.0, "twist_J_plus": 0.0, "twist_J_minus": 0.0, "canonical": 0.0}

    def lin(e: OperatorExpr) -> np.ndarray:
        parts = nm.evaluate(e)
        return parts[False] + parts[True]

    for x in mons:
        n1, n2 = x.bideg
        for y in mons:
            m1, m2 = y.bideg
            lr = nm.product([x, ("W", n2, 0, 0), y, ("W", 0, m1, 0)])[0]
            rl = nm.product([y, ("W", 0, m1, 0), x, ("W", n2, 0, 0)])[0]
            comm = OperatorExpr.word((x, y)) - OperatorExpr.word((y, x))
            rhs = comm.scale(PhaseScalar.lam(m1 * n2)) * weight(n2, m1)
            dev["lemma1a"] = max(dev["lemma1a"], float(np.abs(lr - rl - lin(rhs)).max()))
            ll = nm.product([x, ("W", n2, 0, 0), y, ("W", m2, 0, 0)])[0]
            dev["lemma1b"] = max(dev["lemma1b"], float(np.abs(ll - lin(left_twist(star_left(x, y)))).max()))
        lhs = nm.twisted_J_conjugate(x)
        base = nm.right_twist_J(x)
        dev["twist_J_plus"] = max(dev["twist_J_plus"], float(np.abs(lhs - nm.lam ** (n1 * n2) * base).max()))
        dev["twist_J_minus"] = max(dev["twist_J_minus"], float(np.abs(lhs - nm.lam ** (-n1 * n2) * base).max()))
        factors = ["J", ("W", 0, 0, -1), x, ("W", n2, 1, 1), "Jinv", x]
        raw = nm.product(factors)
        can = nm.evaluate(push_weight(factors))
        dev["canonical"] = max(dev["canonical"], float(np.abs(raw[0] - can[raw[1]]).max()))
    return dev
