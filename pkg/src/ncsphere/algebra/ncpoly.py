"""Noncommutative polynomials kept in normal form under a presentation."""

from __future__ import annotations

import random
from typing import Iterable, Mapping

from ..errors import PresentationMismatchError, UnsupportedKindError
from .presentation import Presentation, Word, flatten, unflatten, word_degree
from .scalars import PhaseScalar, as_qi
from .trig import TrigCoeff

__all__ = [
    "NCPoly",
    "normal_form",
    "nc_mul",
    "nc_adjoint",
    "scalar_part",
    "random_ncpoly",
    "random_word",
]


def _coerce_coeff(c):
    if isinstance(c, (PhaseScalar, TrigCoeff)):
        return c
    return PhaseScalar.coerce(c)


def _times_phase(c, ps: PhaseScalar):
    """``c * ps`` with a shortcut for unit monomials ``λ^k``."""
    t = ps.terms
    if len(t) == 1:
        (k, v), = t.items()
        if v.re == v.den and v.im == 0:
            return c.mul_phase(k)
    return c * ps


def _reduce(c, q: int):
    if isinstance(c, TrigCoeff):
        return c.specialize_phase(lambda ps: ps.reduce_cyclotomic(q))
    return c.reduce_cyclotomic(q)


class NCPoly:
    """Finite sum ``Σ c_w w`` of normal words with nonzero coefficients.

    Coefficients are :class:`PhaseScalar` or, over torus images, :class:`TrigCoeff`.
    Instances are immutable; arithmetic returns new normalised polynomials.
    """

    __slots__ = ("pres", "terms", "_hash")

    def __init__(self, pres: Presentation, terms: Mapping | Iterable | None = None, *, normalized: bool = False):
        self.pres = pres
        self._hash = None
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        if normalized:
            self.terms = dict(items)
            return
        acc: dict = {}
        trig = False
        for w, c in items:
            c = _coerce_coeff(c)
            trig = trig or isinstance(c, TrigCoeff)
            if not c:
                continue
            w = unflatten(flatten(w))
            pres.check_word(w)
            if pres.is_normal(w):
                _acc(acc, w, c)
            else:
                for ps, nw in pres.normal_terms(w):
                    _acc(acc, nw, _times_phase(c, ps))
        if trig:
            acc = {w: TrigCoeff.coerce(c) for w, c in acc.items()}
        if pres.cyclotomic:
            acc = {w: _reduce(c, pres.cyclotomic) for w, c in acc.items()}
            acc = {w: c for w, c in acc.items() if c}
        self.terms = acc

    # -- constructors ---------------------------------------------------
    @classmethod
    def gen(cls, pres: Presentation, name: str, power: int = 1, coeff=1) -> "NCPoly":
        return cls(pres, {((name, power),): coeff})

    @classmethod
    def const(cls, pres: Presentation, c) -> "NCPoly":
        return cls(pres, {(): c})

    @classmethod
    def one(cls, pres: Presentation) -> "NCPoly":
        return cls.const(pres, 1)

    @classmethod
    def zero(cls, pres: Presentation) -> "NCPoly":
        return cls(pres, {}, normalized=True)

    @classmethod
    def from_word(cls, pres: Presentation, w: Word, coeff=1) -> "NCPoly":
        return cls(pres, {w: coeff})

    def gens(self) -> dict:
        return {g: NCPoly.gen(self.pres, g) for g in self.pres.order}

    # -- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_trig(self) -> bool:
        return any(isinstance(c, TrigCoeff) for c in self.terms.values())

    def degree(self) -> int:
        return max((word_degree(w) for w in self.terms), default=-1)

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self.pres == other.pres and _coeff_map_eq(self.terms, other.terms)
        try:
            return self == NCPoly.const(self.pres, other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.pres, frozenset(self.terms.items())))
        return self._hash

    # -- arithmetic -----------------------------------------------------
    def _lift(self, other) -> "NCPoly":
        if isinstance(other, NCPoly):
            if other.pres != self.pres:
                raise PresentationMismatchError(
                    f"operands live over {self.pres.name} and {other.pres.name}"
                )
            return other
        return NCPoly.const(self.pres, other)

    def __neg__(self):
        return NCPoly(self.pres, {w: -c for w, c in self.terms.items()}, normalized=True)

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        acc = dict(self.terms)
        for w, c in other.terms.items():
            _acc(acc, w, c)
        return NCPoly(self.pres, _harmonize(acc), normalized=True)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            return nc_mul(self, other)
        try:
            other = _coerce_coeff(other)
        except TypeError:
            return NotImplemented
        return self.scale(other)

    def __rmul__(self, other):
        try:
            other = _coerce_coeff(other)
        except TypeError:
            return NotImplemented
        return self.scale(other)

    def __pow__(self, n: int):
        out = NCPoly.one(self.pres)
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c) -> "NCPoly":
        c = _coerce_coeff(c)
        acc = {}
        for w, v in self.terms.items():
            x = v * c
            if x:
                acc[w] = x
        if self.pres.cyclotomic:
            acc = {w: _reduce(x, self.pres.cyclotomic) for w, x in acc.items()}
        return NCPoly(self.pres, _harmonize({w: x for w, x in acc.items() if x}), normalized=True)

    def adjoint(self) -> "NCPoly":
        return nc_adjoint(self)

    def map_coeffs(self, fn) -> "NCPoly":
        return NCPoly(self.pres, {w: fn(c) for w, c in self.terms.items()})

    def scalar_part(self):
        return scalar_part(self)

    def without_scalar(self) -> "NCPoly":
        return NCPoly(self.pres, {w: c for w, c in self.terms.items() if w}, normalized=True)

    def sorted_terms(self) -> list:
        key = self.pres.word_sort_key
        return sorted(self.terms.items(), key=lambda wc: key(wc[0]))

    def __repr__(self):
        from .dump import dump_poly

        return f"NCPoly[{self.pres.name}]({dump_poly(self)})"

    def __str__(self):
        from .dump import dump_poly

        return dump_poly(self)


def _acc(acc: dict, w, c) -> None:
    prev = acc.get(w)
    if prev is None:
        acc[w] = c
    else:
        s = prev + c
        if s:
            acc[w] = s
        else:
            del acc[w]


def _harmonize(acc: dict) -> dict:
    if any(isinstance(c, TrigCoeff) for c in acc.values()):
        return {w: TrigCoeff.coerce(c) for w, c in acc.items()}
    return acc


def _coeff_map_eq(a: dict, b: dict) -> bool:
    if a.keys() != b.keys():
        return False
    return all(a[w] == b[w] or TrigCoeff.coerce(a[w]) == TrigCoeff.coerce(b[w]) for w in a)


def normal_form(w: Word, pres: Presentation) -> NCPoly:
    """Unique normal form of the word ``w``."""
    if not pres.is_confluent:
        raise UnsupportedKindError(f"{pres.name} is relational; no rewrite normal form")
    return NCPoly(pres, {w: PhaseScalar.one()})


def nc_mul(p: NCPoly, q: NCPoly, pres: Presentation | None = None) -> NCPoly:
    """Product of normalised polynomials."""
    pres = pres or p.pres
    if p.pres != pres or q.pres != pres:
        raise PresentationMismatchError("nc_mul operands must share the presentation")
    acc: dict = {}
    mono = pres.mono_mul
    for w1, c1 in p.terms.items():
        for w2, c2 in q.terms.items():
            c = c1 * c2
            for ps, w in mono(w1, w2):
                _acc(acc, w, _times_phase(c, ps))
    if pres.cyclotomic:
        acc = {w: _reduce(c, pres.cyclotomic) for w, c in acc.items()}
        acc = {w: c for w, c in acc.items() if c}
    return NCPoly(pres, _harmonize(acc), normalized=True)


def nc_adjoint(p: NCPoly, pres: Presentation | None = None) -> NCPoly:
    """Antilinear anti-automorphism: reverse words, star generators, conjugate coefficients."""
    pres = pres or p.pres
    adj = pres.adjoint
    terms = {}
    for w, c in p.terms.items():
        rev = tuple((adj[g], k) for g, k in reversed(w))
        terms[rev] = c.conjugate()
    if not pres.is_confluent:
        acc: dict = {}
        for w, c in terms.items():
            _acc(acc, w, c)
        return NCPoly(pres, acc, normalized=True)
    return NCPoly(pres, list(terms.items()))


def scalar_part(p: NCPoly) -> PhaseScalar:
    """Coefficient of the unit word."""
    c = p.terms.get((), PhaseScalar.zero())
    if isinstance(c, TrigCoeff):
        if p.is_trig and any(not v.is_constant() for v in p.terms.values()):
            raise UnsupportedKindError("scalar part is undefined for angle-dependent coefficients")
        return c.constant_value()
    if p.is_trig:
        raise UnsupportedKindError("scalar part is undefined for angle-dependent coefficients")
    return c


def random_word(pres: Presentation, rng: random.Random, max_len: int = 5, min_len: int = 0) -> Word:
    n = rng.randint(min_len, max_len)
    return unflatten(rng.choice(pres.order) for _ in range(n))


def random_phase(rng: random.Random, max_exp: int = 2, max_num: int = 3) -> PhaseScalar:
    terms = {}
    for _ in range(rng.randint(1, 2)):
        k = rng.randint(-max_exp, max_exp)
        terms[k] = as_qi(complex(rng.randint(-max_num, max_num), rng.randint(-max_num, max_num)))
    ps = PhaseScalar(terms)
    return ps if ps else PhaseScalar.one()


def random_ncpoly(pres: Presentation, rng: random.Random, n_terms: int = 3, max_len: int = 4) -> NCPoly:
    items = [(random_word(pres, rng, max_len), random_phase(rng)) for _ in range(n_terms)]
    return NCPoly(pres, items)
