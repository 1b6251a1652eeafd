"""Normalized Hochschild chains, the operators b and B, and Chern characters.

Chains are finite sums of elementary tensors ``w0 ⊗ w1 ⊗ ... ⊗ wn`` of
normal words with :class:`PhaseScalar` coefficients.  Positions ``1..n``
live in the algebra modulo scalars, so any tensor with the unit word in one
of those slots is dropped on construction.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import factorial
from typing import Sequence

from .algebra.ncpoly import NCPoly, random_phase, random_word
from .algebra.presentation import Presentation
from .algebra.scalars import GaussianRational, PhaseScalar
from .errors import PreconditionError, ShapeError

__all__ = [
    "TensorChain",
    "boundary_b",
    "operator_B",
    "ch_even",
    "ch_odd",
    "even_normalization",
    "odd_normalization",
    "transgression_ratio",
    "TransgressionReport",
    "is_zero",
    "random_chain",
    "matmul",
    "identity_matrix",
]


def _acc(acc: dict, key, c) -> None:
    prev = acc.get(key)
    if prev is None:
        acc[key] = c
    else:
        s = prev + c
        if s.terms:
            acc[key] = s
        else:
            del acc[key]


class TensorChain:
    """Element of ``A ⊗ Ā^{⊗n}`` in canonical (fully expanded) form."""

    __slots__ = ("pres", "degree", "terms")

    def __init__(self, pres: Presentation, degree: int, terms: dict):
        self.pres = pres
        self.degree = degree
        self.terms = terms

    @classmethod
    def zero(cls, pres: Presentation, degree: int) -> "TensorChain":
        return cls(pres, degree, {})

    @classmethod
    def from_word_terms(cls, pres: Presentation, degree: int, terms) -> "TensorChain":
        """Build from ``{(w0, ..., wn): coeff}``; words are normalised here."""
        out = cls(pres, degree, {})
        items = terms.items() if isinstance(terms, dict) else terms
        for tensor, c in items:
            if len(tensor) != degree + 1:
                raise ShapeError(f"tensor of length {len(tensor)} in a degree-{degree} chain")
            out._add_entries(PhaseScalar.coerce(c), [NCPoly.from_word(pres, w) for w in tensor])
        return out

    @classmethod
    def from_tensor(cls, entries: Sequence[NCPoly], coeff=1) -> "TensorChain":
        """Multilinear expansion of ``coeff * a0 ⊗ a1 ⊗ ... ⊗ an``."""
        pres = entries[0].pres
        out = cls(pres, len(entries) - 1, {})
        out._add_entries(PhaseScalar.coerce(coeff), entries)
        return out

    def _add_entries(self, coeff: PhaseScalar, entries: Sequence[NCPoly]) -> None:
        lists = [list(entries[0].terms.items())]
        for e in entries[1:]:
            items = [(w, c) for w, c in e.terms.items() if w]
            if not items:
                return
            lists.append(items)
        q = self.pres.cyclotomic
        for combo in itertools.product(*lists):
            c = coeff
            for _, ci in combo:
                c = c * ci
            if q:
                c = c.reduce_cyclotomic(q)
            if c.terms:
                _acc(self.terms, tuple(w for w, _ in combo), c)

    # -- arithmetic -----------------------------------------------------
    def _check(self, other: "TensorChain") -> None:
        if other.pres != self.pres or other.degree != self.degree:
            raise ShapeError("chains differ in presentation or degree")

    def __add__(self, other: "TensorChain") -> "TensorChain":
        self._check(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            _acc(acc, k, c)
        return TensorChain(self.pres, self.degree, acc)

    def __neg__(self) -> "TensorChain":
        return TensorChain(self.pres, self.degree, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "TensorChain") -> "TensorChain":
        return self + (-other)

    def scale(self, c) -> "TensorChain":
        c = PhaseScalar.coerce(c)
        q = self.pres.cyclotomic
        acc = {}
        for k, v in self.terms.items():
            x = v * c
            if q:
                x = x.reduce_cyclotomic(q)
            if x.terms:
                acc[k] = x
        return TensorChain(self.pres, self.degree, acc)

    def __eq__(self, other):
        if not isinstance(other, TensorChain):
            return NotImplemented
        return self.pres == other.pres and self.degree == other.degree and self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def map_words(self, fn) -> "TensorChain":
        """Apply ``fn(coeff, tensor) -> [(coeff', tensor'), ...]`` termwise."""
        acc: dict = {}
        for k, c in self.terms.items():
            for c2, k2 in fn(c, k):
                if all(k2[1:]) and c2.terms:
                    _acc(acc, k2, c2)
        return TensorChain(self.pres, self.degree, acc)

    def sorted_terms(self) -> list:
        key = self.pres.word_sort_key
        return sorted(self.terms.items(), key=lambda kc: tuple(key(w) for w in kc[0]))

    def dump(self) -> str:
        from .algebra.dump import dump_chain

        return dump_chain(self)

    def __repr__(self):
        return f"TensorChain(degree={self.degree}, terms={len(self.terms)})"


def is_zero(c: TensorChain) -> bool:
    return c.is_zero()


def boundary_b(c: TensorChain, stats: dict | None = None) -> TensorChain:
    """Hochschild boundary; ``stats['raw_terms']`` counts terms before cancellation."""
    n = c.degree
    if n == 0:
        return TensorChain.zero(c.pres, 0)
    mono = c.pres.mono_mul
    q = c.pres.cyclotomic
    acc: dict = {}
    raw = 0
    for t, coeff in c.terms.items():
        for i in range(n):
            sgn = -coeff if i % 2 else coeff
            for ps, w in mono(t[i], t[i + 1]):
                if i > 0 and not w:
                    continue
                raw += 1
                x = sgn * ps
                if q:
                    x = x.reduce_cyclotomic(q)
                _acc(acc, t[:i] + (w,) + t[i + 2 :], x)
        sgn = -coeff if n % 2 else coeff
        for ps, w in mono(t[n], t[0]):
            raw += 1
            x = sgn * ps
            if q:
                x = x.reduce_cyclotomic(q)
            _acc(acc, (w,) + t[1:n], x)
    if stats is not None:
        stats["raw_terms"] = stats.get("raw_terms", 0) + raw
    return TensorChain(c.pres, n - 1, acc)


def operator_B(c: TensorChain) -> TensorChain:
    """Normalized Connes operator ``B(a0 ⊗ ... ⊗ an) = Σ (-1)^{ni} 1 ⊗ a_i ⊗ ... ⊗ a_{i-1}``."""
    n = c.degree
    acc: dict = {}
    for t, coeff in c.terms.items():
        if not t[0]:
            continue
        for i in range(n + 1):
            sgn = -coeff if (n * i) % 2 else coeff
            _acc(acc, ((),) + t[i:] + t[:i], sgn)
    return TensorChain(c.pres, n + 1, acc)


def identity_matrix(pres: Presentation, r: int) -> list:
    one, zero = NCPoly.one(pres), NCPoly.zero(pres)
    return [[one if i == j else zero for j in range(r)] for i in range(r)]


def matmul(a: list, b: list) -> list:
    n, k, m = len(a), len(b), len(b[0])
    if any(len(row) != k for row in a):
        raise ShapeError("inner dimensions differ")
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            s = a[i][0] * b[0][j]
            for l in range(1, k):
                s = s + a[i][l] * b[l][j]
            row.append(s)
        out.append(row)
    return out


def _square(e: list) -> int:
    r = len(e)
    if r == 0 or any(len(row) != r for row in e):
        raise ShapeError("Chern characters need a square matrix")
    return r


def even_normalization(n: int) -> int:
    """``λ_n = (-1)^n (2n)! / n!``."""
    return (-1) ** n * factorial(2 * n) // factorial(n)


def odd_normalization(n: int) -> int:
    """Constant ``(n-1)!`` of the degree ``2n-1`` odd character."""
    return factorial(n - 1)


def _cyclic_sum(pres: Presentation, mats: list, coeff) -> TensorChain:
    """``coeff Σ m0[i0,i1] ⊗ m1[i1,i2] ⊗ ... ⊗ mk[ik,i0]`` over all indices."""
    r = len(mats[0])
    degree = len(mats) - 1
    out = TensorChain(pres, degree, {})
    coeff = PhaseScalar.coerce(coeff)
    # entries beyond slot 0 are taken modulo scalars
    reduced = [mats[0]] + [[[x.without_scalar() for x in row] for row in m] for m in mats[1:]]

    def walk(pos: int, start: int, cur: int, entries: list):
        if pos == degree:
            last = reduced[pos][cur][start]
            if last:
                out._add_entries(coeff, entries + [last])
            return
        for nxt in range(r):
            x = reduced[pos][cur][nxt]
            if not x:
                continue
            walk(pos + 1, start, nxt, entries + [x])

    for i0 in range(r):
        if degree == 0:
            x = reduced[0][i0][i0]
            if x:
                out._add_entries(coeff, [x])
        else:
            walk(0, i0, i0, [])
    return out


def ch_even(e: list, n: int) -> TensorChain:
    """``λ_n Σ (e - 1/2)_{i0 i1} ⊗ ẽ_{i1 i2} ⊗ ... ⊗ ẽ_{i2n i0}`` (degree ``2n``)."""
    r = _square(e)
    pres = e[0][0].pres
    half = GaussianRational(1, 0, 2)
    shifted = [[e[i][j] - half if i == j else e[i][j] for j in range(r)] for i in range(r)]
    mats = [shifted] + [e] * (2 * n)
    return _cyclic_sum(pres, mats, even_normalization(n))


def ch_odd(u: list, u_inv: list, n: int) -> TensorChain:
    """Odd character of degree ``2n-1`` of an invertible matrix.

    ``(n-1)! (Σ u ⊗ u⁻¹ ⊗ ... ⊗ u⁻¹ - Σ u⁻¹ ⊗ u ⊗ ... ⊗ u)``; raises
    :class:`PreconditionError` unless ``u u_inv = u_inv u = 1``.
    """
    if n < 1:
        raise ValueError("odd characters start at n = 1 (degree 1)")
    r = _square(u)
    _square(u_inv)
    pres = u[0][0].pres
    ident = identity_matrix(pres, r)
    if matmul(u, u_inv) != ident or matmul(u_inv, u) != ident:
        raise PreconditionError("supplied inverse does not invert the matrix")
    first = [u, u_inv] * n
    second = [u_inv, u] * n
    c = odd_normalization(n)
    return _cyclic_sum(pres, first, c) - _cyclic_sum(pres, second, c)


@dataclass
class TransgressionReport:
    """Outcome of comparing ``b ch_{n+1}`` with ``B ch_n``."""

    verdict: str
    ratio: GaussianRational | None = None
    b_terms: int = 0
    B_terms: int = 0
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.verdict in ("proportional", "both zero")


def transgression_ratio(x: list, n: int, x_inv: list | None = None) -> TransgressionReport:
    """Find ``k`` with ``b ch_{n+1} = k B ch_n``.

    With ``x_inv`` given the odd characters of degrees ``2n-1`` and ``2n+1``
    are compared, otherwise the even ones of degrees ``2n`` and ``2n+2``.
    """
    if x_inv is None:
        lhs = boundary_b(ch_even(x, n + 1))
        rhs = operator_B(ch_even(x, n))
    else:
        lhs = boundary_b(ch_odd(x, x_inv, n + 1))
        rhs = operator_B(ch_odd(x, x_inv, n))
    rep = TransgressionReport("not proportional", None, len(lhs), len(rhs))
    if lhs.is_zero() and rhs.is_zero():
        rep.verdict = "both zero"
        return rep
    if rhs.is_zero() or lhs.is_zero():
        return rep
    key = min(rhs.terms, key=repr)
    cr = rhs.terms[key]
    cl = lhs.terms.get(key)
    if cl is None:
        return rep
    k0 = min(cr.terms)
    if k0 not in cl.terms:
        return rep
    k = cl.terms[k0] / cr.terms[k0]
    if (lhs - rhs.scale(k)).is_zero():
        rep.verdict = "proportional"
        rep.ratio = k
    return rep


def random_chain(pres: Presentation, rng: random.Random, degree: int, n_terms: int = 3, max_len: int = 3) -> TensorChain:
    """Random chain with nonunit words in the reduced slots."""
    terms = []
    for _ in range(n_terms):
        tensor = [random_word(pres, rng, max_len)]
        tensor += [random_word(pres, rng, max_len, min_len=1) for _ in range(degree)]
        terms.append((tuple(tensor), random_phase(rng)))
    return TensorChain.from_word_terms(pres, degree, terms)
