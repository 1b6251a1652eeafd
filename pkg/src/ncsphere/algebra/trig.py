"""Trigonometric coefficients in the two sphere angles.

A ``TrigCoeff`` is ``N / (sφ^p cφ^q cψ^r)`` where the numerator ``N`` is a
polynomial in ``sφ, cφ, sψ, cψ`` over :class:`PhaseScalar`.  The numerator is
kept in Pythagorean normal form (degree at most one in each cosine, using
``c² -> 1 - s²``) and monomial denominators are cancelled whenever the
numerator allows it, so equal values have equal representations.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .scalars import PhaseScalar, as_qi

__all__ = ["TrigCoeff", "trig_reduce", "SYMBOLS"]

# exponent slots: (sφ, cφ, sψ, cψ)
SYMBOLS = ("sφ", "cφ", "sψ", "cψ")
_ONE_MONO = (0, 0, 0, 0)


@lru_cache(maxsize=None)
def _pythagoras(mono: tuple) -> tuple:
    """Expand a monomial into (sign, monomial) pairs with cosine degrees <= 1."""
    a, b, c, d = mono
    if b < 2 and d < 2:
        return ((1, mono),)
    out: dict = {}
    if b >= 2:
        pieces = ((1, (a, b - 2, c, d)), (-1, (a + 2, b - 2, c, d)))
    else:
        pieces = ((1, (a, b, c, d - 2)), (-1, (a, b, c + 2, d - 2)))
    for sgn, m in pieces:
        for s2, m2 in _pythagoras(m):
            out[m2] = out.get(m2, 0) + sgn * s2
    return tuple((s, m) for m, s in out.items() if s)


def _add_into(acc: dict, mono: tuple, coeff: PhaseScalar) -> None:
    for sgn, m in _pythagoras(mono):
        c = coeff if sgn == 1 else (-coeff if sgn == -1 else coeff.scale(sgn))
        prev = acc.get(m)
        if prev is None:
            acc[m] = c
        else:
            s = prev + c
            if s.terms:
                acc[m] = s
            else:
                del acc[m]


class TrigCoeff:
    """Element of ``PhaseScalar[sφ, cφ, sψ, cψ] / (Pythagoras)`` localised at ``sφ, cφ, cψ``."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: dict | None = None, den: tuple = (0, 0, 0), *, reduce: bool = True):
        if reduce:
            acc: dict = {}
            for mono, c in (num or {}).items():
                c = PhaseScalar.coerce(c)
                if c.terms:
                    _add_into(acc, tuple(mono), c)
            num, den = _cancel(acc, tuple(den))
        self.num = num or {}
        self.den = den if self.num else (0, 0, 0)
        self._hash = None

    @classmethod
    def _raw(cls, num: dict, den: tuple = (0, 0, 0)):
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den if num else (0, 0, 0)
        obj._hash = None
        return obj

    # -- constructors ---------------------------------------------------
    @classmethod
    def const(cls, c) -> "TrigCoeff":
        c = PhaseScalar.coerce(c)
        return cls._raw({_ONE_MONO: c} if c.terms else {})

    @classmethod
    def one(cls) -> "TrigCoeff":
        return cls.const(1)

    @classmethod
    def zero(cls) -> "TrigCoeff":
        return cls._raw({})

    @classmethod
    def symbol(cls, name: str) -> "TrigCoeff":
        mono = [0, 0, 0, 0]
        mono[SYMBOLS.index(name)] = 1
        return cls._raw({tuple(mono): PhaseScalar.one()})

    @classmethod
    def monomial(cls, sphi=0, cphi=0, spsi=0, cpsi=0, coeff=1) -> "TrigCoeff":
        return cls({(sphi, cphi, spsi, cpsi): PhaseScalar.coerce(coeff)})

    @classmethod
    def coerce(cls, x) -> "TrigCoeff":
        if isinstance(x, TrigCoeff):
            return x
        return cls.const(x)

    # -- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.den == (0, 0, 0)

    def is_constant(self) -> bool:
        return not self.num or (self.is_polynomial() and set(self.num) == {_ONE_MONO})

    def constant_value(self) -> PhaseScalar:
        if not self.is_constant():
            raise ValueError(f"{self} depends on the angles")
        return self.num.get(_ONE_MONO, PhaseScalar.zero())

    def __eq__(self, other):
        if not isinstance(other, TrigCoeff):
            try:
                other = TrigCoeff.coerce(other)
            except TypeError:
                return NotImplemented
        return self.den == other.den and self.num == other.num

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.den, frozenset(self.num.items())))
        return self._hash

    # -- arithmetic -----------------------------------------------------
    def __neg__(self):
        return TrigCoeff._raw({m: -c for m, c in self.num.items()}, self.den)

    def __add__(self, other):
        if not isinstance(other, TrigCoeff):
            try:
                other = TrigCoeff.coerce(other)
            except TypeError:
                return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            acc = dict(self.num)
            for m, c in other.num.items():
                prev = acc.get(m)
                if prev is None:
                    acc[m] = c
                else:
                    s = prev + c
                    if s.terms:
                        acc[m] = s
                    else:
                        del acc[m]
            if self.den == (0, 0, 0):
                return TrigCoeff._raw(acc)
            num, den = _cancel(acc, self.den)
            return TrigCoeff._raw(num, den)
        den = tuple(max(x, y) for x, y in zip(self.den, other.den))
        acc: dict = {}
        for src in (self, other):
            lift = _den_to_mono(tuple(d - s for d, s in zip(den, src.den)))
            for m, c in src.num.items():
                _add_into(acc, _mono_mul(m, lift), c)
        num, den = _cancel(acc, den)
        return TrigCoeff._raw(num, den)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, TrigCoeff):
            try:
                other = TrigCoeff.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PhaseScalar):
            if not other.terms:
                return TrigCoeff._raw({})
            return TrigCoeff._raw({m: c * other for m, c in self.num.items()}, self.den)
        if not isinstance(other, TrigCoeff):
            try:
                other = TrigCoeff.coerce(other)
            except TypeError:
                return NotImplemented
        if not self.num or not other.num:
            return TrigCoeff._raw({})
        acc: dict = {}
        for m1, c1 in self.num.items():
            for m2, c2 in other.num.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3])
                c = c1 * c2
                if m[1] < 2 and m[3] < 2:
                    prev = acc.get(m)
                    if prev is None:
                        acc[m] = c
                    else:
                        s = prev + c
                        if s.terms:
                            acc[m] = s
                        else:
                            del acc[m]
                else:
                    _add_into(acc, m, c)
        den = (self.den[0] + other.den[0], self.den[1] + other.den[1], self.den[2] + other.den[2])
        if den == (0, 0, 0):
            return TrigCoeff._raw(acc)
        num, den = _cancel(acc, den)
        return TrigCoeff._raw(num, den)

    __rmul__ = __mul__

    def mul_phase(self, k: int) -> "TrigCoeff":
        if k == 0:
            return self
        return TrigCoeff._raw({m: c.mul_phase(k) for m, c in self.num.items()}, self.den)

    def scale(self, c) -> "TrigCoeff":
        c = as_qi(c)
        if not c:
            return TrigCoeff._raw({})
        return TrigCoeff._raw({m: v.scale(c) for m, v in self.num.items()}, self.den)

    def conjugate(self) -> "TrigCoeff":
        """Complex conjugation; the angle functions are real."""
        return TrigCoeff._raw({m: c.conjugate() for m, c in self.num.items()}, self.den)

    conj = conjugate

    def divide_monomial(self, sphi=0, cphi=0, cpsi=0) -> "TrigCoeff":
        """Divide by ``sφ^sphi cφ^cphi cψ^cpsi`` (cancelling where possible)."""
        den = (self.den[0] + sphi, self.den[1] + cphi, self.den[2] + cpsi)
        num, den = _cancel(dict(self.num), den)
        return TrigCoeff._raw(num, den)

    # -- calculus -------------------------------------------------------
    def d_phi(self) -> "TrigCoeff":
        """Derivative with respect to φ (``sφ' = cφ``, ``cφ' = -sφ``)."""
        p, q, r = self.den
        acc: dict = {}
        for (a, b, c, d), coef in self.num.items():
            # N' * sφ cφ
            if a:
                _add_into(acc, (a, b + 2, c, d), coef.scale(a))
            if b:
                _add_into(acc, (a + 2, b, c, d), coef.scale(-b))
            # - N (p cφ² - q sφ²)
            if p:
                _add_into(acc, (a, b + 2, c, d), coef.scale(-p))
            if q:
                _add_into(acc, (a + 2, b, c, d), coef.scale(q))
        num, den = _cancel(acc, (p + 1, q + 1, r))
        return TrigCoeff._raw(num, den)

    def d_psi(self) -> "TrigCoeff":
        """Derivative with respect to ψ (``sψ' = cψ``, ``cψ' = -sψ``)."""
        p, q, r = self.den
        acc: dict = {}
        for (a, b, c, d), coef in self.num.items():
            # N' cψ
            if c:
                _add_into(acc, (a, b, c - 1, d + 2), coef.scale(c))
            if d:
                _add_into(acc, (a, b, c + 1, d), coef.scale(-d))
            # + r sψ N
            if r:
                _add_into(acc, (a, b, c + 1, d), coef.scale(r))
        num, den = _cancel(acc, (p, q, r + 1))
        return TrigCoeff._raw(num, den)

    # -- evaluation -----------------------------------------------------
    def evaluate(self, lam: complex, phi: float, psi: float) -> complex:
        vals = (math.sin(phi), math.cos(phi), math.sin(psi), math.cos(psi))
        total = 0j
        for m, c in self.num.items():
            term = c.evaluate(lam)
            for v, e in zip(vals, m):
                if e:
                    term *= v**e
            total += term
        p, q, r = self.den
        return total / (vals[0] ** p * vals[1] ** q * vals[3] ** r)

    def specialize_phase(self, fn) -> "TrigCoeff":
        """Apply ``fn`` to every PhaseScalar coefficient (e.g. ``λ -> 1``)."""
        return TrigCoeff({m: fn(c) for m, c in self.num.items()}, self.den)

    def monomials(self):
        return sorted(self.num)

    def __repr__(self):
        return f"TrigCoeff({self})"

    def __str__(self):
        if not self.num:
            return "0"
        parts = []
        for m in sorted(self.num):
            mono = "·".join(
                (s if e == 1 else f"{s}^{e}") for s, e in zip(SYMBOLS, m) if e
            )
            c = f"[{self.num[m]}]"
            parts.append(c if not mono else f"{c}·{mono}")
        body = " + ".join(parts)
        if self.den == (0, 0, 0):
            return body
        dm = "·".join(
            (s if e == 1 else f"{s}^{e}")
            for s, e in zip(("sφ", "cφ", "cψ"), self.den)
            if e
        )
        return f"({body}) / ({dm})"


def _mono_mul(m1: tuple, m2: tuple) -> tuple:
    return (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3])


def _den_to_mono(den: tuple) -> tuple:
    return (den[0], den[1], 0, den[2])


def _cancel(num: dict, den: tuple):
    """Cancel common monomial factors between a reduced numerator and ``den``."""
    if not num:
        return {}, (0, 0, 0)
    p, q, r = den
    while p and all(m[0] >= 1 for m in num):
        num = {(m[0] - 1, m[1], m[2], m[3]): c for m, c in num.items()}
        p -= 1
    while q:
        out = _divide_cosine(num, 0)
        if out is None:
            break
        num, q = out, q - 1
    while r:
        out = _divide_cosine(num, 2)
        if out is None:
            break
        num, r = out, r - 1
    return num, (p, q, r)


def _divide_cosine(num: dict, slot: int):
    """Exact division of a reduced numerator by the cosine of one angle.

    ``slot`` is 0 for φ and 2 for ψ.  Writing ``N = A(s) + c B(s)``, ``c``
    divides ``N`` iff ``(1 - s²)`` divides ``A``; then ``N / c = B + c A/(1-s²)``.
    Returns ``None`` when the division is not exact.
    """
    s_i, c_i = slot, slot + 1
    groups: dict = {}
    for m, coef in num.items():
        rest = tuple(e for j, e in enumerate(m) if j not in (s_i, c_i))
        g = groups.setdefault(rest, ({}, {}))
        g[m[c_i]][m[s_i]] = coef
    out: dict = {}

    def put(rest, s_exp, c_exp, coef):
        m = [0, 0, 0, 0]
        others = [j for j in range(4) if j not in (s_i, c_i)]
        for j, e in zip(others, rest):
            m[j] = e
        m[s_i], m[c_i] = s_exp, c_exp
        out[tuple(m)] = coef

    for rest, (a_part, b_part) in groups.items():
        if a_part:
            n = max(a_part)
            qs: dict = {}
            for k in range(n + 1):
                val = a_part.get(k, PhaseScalar.zero()) + qs.get(k - 2, PhaseScalar.zero())
                qs[k] = val
            if qs.get(n - 1, PhaseScalar.zero()).terms or qs[n].terms:
                return None
            for k in range(n - 1):
                if qs[k].terms:
                    put(rest, k, 1, qs[k])
        for k, coef in b_part.items():
            put(rest, k, 0, coef)
    return out


def trig_reduce(x: TrigCoeff) -> TrigCoeff:
    """Pythagorean reduction to fixpoint followed by denominator cancellation."""
    return TrigCoeff(dict(x.num), x.den)
