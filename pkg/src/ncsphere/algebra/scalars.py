"""Exact ground field and the Laurent ring in the deformation parameter.

``GaussianRational`` is the exact field Q(i).  ``PhaseScalar`` is a Laurent
polynomial in a formal unit ``λ`` (with ``λ* = λ^-1``) over that field; it is
the coefficient ring of every symbolic computation over the deformed sphere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Mapping

__all__ = ["GaussianRational", "PhaseScalar", "QI", "as_qi"]


class GaussianRational:
    """Exact complex rational ``(re + im*i) / den`` with ``den > 0`` and reduced."""

    __slots__ = ("re", "im", "den", "_hash")

    def __init__(self, re=0, im=0, den=1):
        if isinstance(re, Fraction) or isinstance(im, Fraction):
            re, im = Fraction(re), Fraction(im)
            d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
            re, im, den = re.numerator * (d // re.denominator), im.numerator * (d // im.denominator), d * den
        if den < 0:
            re, im, den = -re, -im, -den
        if den == 0:
            raise ZeroDivisionError("GaussianRational with zero denominator")
        g = gcd(gcd(re, im), den)
        if g > 1:
            re, im, den = re // g, im // g, den // g
        self.re = re
        self.im = im
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, re, im, den):
        # caller guarantees reduction
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        obj.den = den
        obj._hash = None
        return obj

    @property
    def real(self) -> Fraction:
        return Fraction(self.re, self.den)

    @property
    def imag(self) -> Fraction:
        return Fraction(self.im, self.den)

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im and self.den == other.den
        try:
            other = as_qi(other)
        except TypeError:
            return NotImplemented
        return self == other

    def __hash__(self):
        if self._hash is None:
            if self.im == 0:
                self._hash = hash(Fraction(self.re, self.den))
            else:
                self._hash = hash((self.re, self.im, self.den))
        return self._hash

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im, self.den)

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = as_qi(other)
            except TypeError:
                return NotImplemented
        if self.den == other.den:
            return GaussianRational(self.re + other.re, self.im + other.im, self.den)
        return GaussianRational(
            self.re * other.den + other.re * self.den,
            self.im * other.den + other.im * self.den,
            self.den * other.den,
        )

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = as_qi(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = as_qi(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational(a * c - b * d, a * d + b * c, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = as_qi(other)
            except TypeError:
                return NotImplemented
        if not other:
            raise ZeroDivisionError("division by zero GaussianRational")
        # (a+bi)/D / ((c+di)/E) = (a+bi)(c-di) E / (D (c^2+d^2))
        a, b, c, d = self.re, self.im, other.re, other.im
        n = c * c + d * d
        return GaussianRational((a * c + b * d) * other.den, (b * c - a * d) * other.den, self.den * n)

    def __rtruediv__(self, other):
        return as_qi(other) / self

    def conjugate(self):
        return GaussianRational._raw(self.re, -self.im, self.den)

    def __complex__(self):
        return complex(self.re / self.den, self.im / self.den)

    def is_real(self) -> bool:
        return self.im == 0

    def __repr__(self):
        return f"GaussianRational({self.real}, {self.imag})"

    def __str__(self):
        return format_qi(self)


QI = GaussianRational
_ZERO = GaussianRational._raw(0, 0, 1)
_ONE = GaussianRational._raw(1, 0, 1)


def as_qi(x) -> GaussianRational:
    """Coerce ints, Fractions and exact Gaussian values into ``GaussianRational``."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, bool):
        return GaussianRational(int(x))
    if isinstance(x, int):
        return GaussianRational._raw(x, 0, 1)
    if isinstance(x, Fraction) or isinstance(x, Rational):
        x = Fraction(x)
        return GaussianRational._raw(x.numerator, 0, x.denominator)
    if isinstance(x, complex) and x.real == int(x.real) and x.imag == int(x.imag):
        return GaussianRational(int(x.real), int(x.imag))
    raise TypeError(f"cannot coerce {type(x).__name__} to an exact Gaussian rational")


def _fmt_frac(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def format_qi(q: GaussianRational) -> str:
    """Render as ``a/b``, ``c/d i`` or ``a/b + c/d i`` (no parentheses)."""
    re, im = q.real, q.imag
    if im == 0:
        return _fmt_frac(re)
    if re == 0:
        return f"{_fmt_frac(im)} i"
    sign = "+" if im > 0 else "-"
    return f"{_fmt_frac(re)} {sign} {_fmt_frac(abs(im))} i"


class PhaseScalar:
    """Laurent polynomial ``sum_k c_k λ^k`` with Gaussian-rational coefficients.

    Zero coefficients are never stored.  Instances are treated as immutable.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean = {}
        if terms:
            for k, c in terms.items():
                c = as_qi(c)
                if c:
                    clean[int(k)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict):
        obj = object.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def lam(cls, k: int = 1, coeff=1) -> "PhaseScalar":
        """The monomial ``coeff * λ^k``."""
        return cls({k: coeff})

    @classmethod
    def const(cls, c) -> "PhaseScalar":
        return cls({0: c})

    @classmethod
    def one(cls) -> "PhaseScalar":
        return cls._raw({0: _ONE})

    @classmethod
    def zero(cls) -> "PhaseScalar":
        return cls._raw({})

    @classmethod
    def coerce(cls, x) -> "PhaseScalar":
        if isinstance(x, PhaseScalar):
            return x
        return cls.const(x)

    # -- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        """True when no power of λ other than ``λ^0`` occurs."""
        return all(k == 0 for k in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError(f"{self} depends on λ")
        return self.terms.get(0, _ZERO)

    # -- arithmetic -----------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, PhaseScalar):
            try:
                other = PhaseScalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __neg__(self):
        return PhaseScalar._raw({k: -c for k, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, PhaseScalar):
            try:
                other = PhaseScalar.coerce(other)
            except TypeError:
                return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            if s is None:
                out[k] = c
            else:
                s = s + c
                if s:
                    out[k] = s
                else:
                    del out[k]
        return PhaseScalar._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, PhaseScalar):
            try:
                other = PhaseScalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, PhaseScalar):
            try:
                other = PhaseScalar.coerce(other)
            except TypeError:
                return NotImplemented
        a, b = self.terms, other.terms
        if len(a) == 1 and len(b) == 1:
            (k1, c1), = a.items()
            (k2, c2), = b.items()
            return PhaseScalar._raw({k1 + k2: c1 * c2})
        out: dict = {}
        for k1, c1 in a.items():
            for k2, c2 in b.items():
                k = k1 + k2
                s = out.get(k)
                out[k] = c1 * c2 if s is None else s + c1 * c2
        return PhaseScalar._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def mul_phase(self, k: int) -> "PhaseScalar":
        """Multiply by ``λ^k``."""
        if k == 0:
            return self
        return PhaseScalar._raw({j + k: c for j, c in self.terms.items()})

    def scale(self, c) -> "PhaseScalar":
        c = as_qi(c)
        if not c:
            return PhaseScalar._raw({})
        return PhaseScalar._raw({k: v * c for k, v in self.terms.items()})

    def conjugate(self) -> "PhaseScalar":
        """Complex conjugation: ``λ^k -> λ^-k`` and ``i -> -i``."""
        return PhaseScalar._raw({-k: c.conjugate() for k, c in self.terms.items()})

    conj = conjugate

    def inverse(self) -> "PhaseScalar":
        """Inverse of a monomial ``c λ^k``; other elements are not units here."""
        if len(self.terms) != 1:
            raise ZeroDivisionError(f"{self} is not a unit of the Laurent ring")
        (k, c), = self.terms.items()
        return PhaseScalar._raw({-k: _ONE / c})

    def __truediv__(self, other):
        other = PhaseScalar.coerce(other)
        return self * other.inverse()

    # -- specialisation -------------------------------------------------
    def evaluate(self, lam: complex) -> complex:
        return sum(complex(c) * lam**k for k, c in self.terms.items()) if self.terms else 0j

    def at_one(self) -> GaussianRational:
        """Value at ``λ = 1``."""
        total = _ZERO
        for c in self.terms.values():
            total = total + c
        return total

    def reduce_cyclotomic(self, q: int) -> "PhaseScalar":
        """Canonical representative modulo the cyclotomic polynomial ``Φ_q(λ)``.

        The result uses exponents ``0 .. φ(q)-1``.  Unique over Q(i) only when
        ``4`` does not divide ``q``.
        """
        if q < 1:
            raise ValueError("cyclotomic order must be positive")
        if q % 4 == 0:
            raise ValueError("roots of unity of order divisible by 4 are not supported")
        coeffs: dict[int, GaussianRational] = {}
        for k, c in self.terms.items():
            j = k % q
            coeffs[j] = coeffs.get(j, _ZERO) + c
        phi = _cyclotomic(q)
        deg = len(phi) - 1
        # long division by the monic Φ_q, highest exponent first
        top = max(coeffs) if coeffs else -1
        for j in range(top, deg - 1, -1):
            c = coeffs.get(j)
            if not c:
                continue
            del coeffs[j]
            shift = j - deg
            for i, a in enumerate(phi[:-1]):
                if a:
                    coeffs[shift + i] = coeffs.get(shift + i, _ZERO) - c * a
        return PhaseScalar(coeffs)

    def __repr__(self):
        return f"PhaseScalar({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            c = self.terms[k]
            parts.append(f"({format_qi(c)})" + ("" if k == 0 else f" λ^{k}"))
        return " + ".join(parts)


def _cyclotomic(q: int) -> list[int]:
    """Integer coefficients of ``Φ_q`` in ascending order."""
    from sympy import Poly, cyclotomic_poly, symbols

    x = symbols("x")
    return [int(c) for c in reversed(Poly(cyclotomic_poly(q, x), x).all_coeffs())]


def sum_phase(items: Iterable[PhaseScalar]) -> PhaseScalar:
    total = PhaseScalar.zero()
    for x in items:
        total = total + x
    return total
