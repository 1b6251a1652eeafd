"""Bounded-degree membership in two-sided ideals of a free algebra.

Every product ``w₁ · r · w₂`` of free-word degree at most ``d`` is expanded
and reduced against the rows already collected (leading word first in
degree-lex order).  A polynomial of degree ``≤ d`` lies in the span exactly
when it reduces to zero, and the tracked combination gives the witness.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra.dump import dump_word
from .algebra.ncpoly import NCPoly
from .algebra.presentation import Presentation, flatten, grass, unflatten
from .algebra.scalars import GaussianRational, PhaseScalar, as_qi, format_qi
from .errors import DegreeOverflowError, UnsupportedKindError

__all__ = [
    "RelationSet",
    "DegreeBasis",
    "Witness",
    "MembershipResult",
    "gr12_relations",
    "span_to_degree",
    "member_test",
    "reconstruct",
    "gr12_targets",
    "gr12_suite",
    "grass_points",
    "evaluate_at",
    "random_nonmember",
    "dump_witness",
]

_ZERO = GaussianRational(0)


def _qi(c) -> GaussianRational:
    c = PhaseScalar.coerce(c)
    if not c.is_constant():
        raise UnsupportedKindError("membership coefficients must be λ-independent")
    return c.constant_value()


def _vector(p: NCPoly) -> dict:
    """``{flat word: coefficient}`` with zero entries removed."""
    return {flatten(w): _qi(c) for w, c in p.terms.items()}


@dataclass(frozen=True)
class RelationSet:
    """Nonzero relations over a relational presentation, terms in a fixed order."""

    pres: Presentation
    relations: tuple

    def __post_init__(self):
        for r in self.relations:
            if r.is_zero():
                raise ValueError("relations must be nonzero")

    @property
    def alphabet(self) -> tuple:
        return self.pres.order

    def degree(self) -> int:
        return max((r.degree() for r in self.relations), default=0)

    @classmethod
    def from_presentation(cls, pres: Presentation, extra: Sequence[NCPoly] = ()) -> "RelationSet":
        rels = [NCPoly(pres, [(w, c) for c, w in terms]) for terms in pres.relations]
        return cls(pres, tuple(rels) + tuple(extra))


def gr12_relations() -> RelationSet:
    """Entries of ``e² - e`` for a 2×2 matrix ``e`` together with ``e11 + e22 - 1``."""
    G = grass(2)
    trace = NCPoly.gen(G, "e11") + NCPoly.gen(G, "e22") - 1
    return RelationSet.from_presentation(G, [trace])


@dataclass
class DegreeBasis:
    """Echelon form of the span of ``w₁ r w₂`` up to degree ``d``.

    ``rows`` maps a leading word to ``(vector, combination)``; a combination
    maps ``(left, relation index, right)`` to its coefficient.
    """

    relations: RelationSet
    d: int
    products: int = 0
    rows: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.rows)

    def _order_key(self, w: tuple):
        idx = self.relations.pres.index
        return (len(w), tuple(idx[g] for g in w))

    def leading(self, vec: dict) -> tuple:
        return max(vec, key=self._order_key)

    def reduce(self, vec: dict, combo: dict | None = None) -> tuple:
        """Reduce ``vec`` against the rows; returns ``(remainder, combination)``.

        The combination expresses ``vec - remainder`` through the products.
        """
        vec = dict(vec)
        acc = dict(combo or {})
        done: dict = {}
        while vec:
            lead = self.leading(vec)
            if lead not in self.rows:
                done[lead] = vec.pop(lead)
                continue
            row, rcombo = self.rows[lead]
            f = vec[lead] / row[lead]
            for w, c in row.items():
                v = vec.get(w, _ZERO) - f * c
                if v:
                    vec[w] = v
                else:
                    vec.pop(w, None)
            for k, c in rcombo.items():
                v = acc.get(k, _ZERO) + f * c
                if v:
                    acc[k] = v
                else:
                    acc.pop(k, None)
        return done, acc


def _words(alphabet: Sequence[str], max_len: int):
    for n in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=n)


def span_to_degree(R: RelationSet, d: int) -> DegreeBasis:
    """Echelon basis of all ``w₁ r w₂`` with free-word degree ``≤ d``."""
    B = DegreeBasis(R, d)
    if not R.relations:
        return B
    if d < R.degree():
        raise DegreeOverflowError(f"degree bound {d} is below the relation degree {R.degree()}")
    alphabet = R.alphabet
    for k, r in enumerate(R.relations):
        rv = _vector(r)
        slack = d - r.degree()
        for n in range(slack + 1):
            for left_len in range(n + 1):
                for left in itertools.product(alphabet, repeat=left_len):
                    for right in itertools.product(alphabet, repeat=n - left_len):
                        vec = {left + w + right: c for w, c in rv.items()}
                        B.products += 1
                        rem, combo = B.reduce(vec)
                        if not rem:
                            continue
                        key = (left, k, right)
                        combo = {q: -c for q, c in combo.items()}
                        combo[key] = combo.get(key, _ZERO) + as_qi(1)
                        lead = B.leading(rem)
                        B.rows[lead] = (rem, combo)
    return B


@dataclass(frozen=True)
class Witness:
    coefficient: GaussianRational
    left: tuple
    relation: int
    right: tuple


@dataclass
class MembershipResult:
    member: bool
    witness: list
    remainder: dict

    def __bool__(self):
        return self.member


def member_test(p: NCPoly, B: DegreeBasis) -> MembershipResult:
    """Decide whether ``p`` is in the span of ``B``; members carry a witness."""
    if p.degree() > B.d:
        raise DegreeOverflowError(f"degree {p.degree()} exceeds the bound {B.d}")
    rem, combo = B.reduce(_vector(p))
    if rem:
        return MembershipResult(False, [], rem)
    rows = [Witness(c, left, k, right) for (left, k, right), c in sorted(combo.items(), key=_witness_key)]
    return MembershipResult(True, rows, {})


def _witness_key(item):
    (left, k, right), _ = item
    return (k, len(left), left, len(right), right)


def reconstruct(witness: Sequence[Witness], R: RelationSet) -> NCPoly:
    """``Σ c · w₁ r w₂`` expanded in the free algebra."""
    P = R.pres
    out = NCPoly.zero(P)
    for row in witness:
        left = NCPoly.from_word(P, unflatten(row.left))
        right = NCPoly.from_word(P, unflatten(row.right))
        out = out + (left * R.relations[row.relation] * right).scale(PhaseScalar.const(row.coefficient))
    return out


def dump_witness(witness: Sequence[Witness]) -> str:
    """One ``coefficient | left | relation index | right`` row per line."""
    lines = []
    for row in witness:
        lines.append(
            f"({format_qi(row.coefficient)}) | {dump_word(unflatten(row.left))} | r{row.relation} | {dump_word(unflatten(row.right))}"
        )
    return "\n".join(lines)


# -- the Gr(1,2) derivation ------------------------------------------------

def gr12_targets() -> dict:
    G = grass(2)
    e = {n: NCPoly.gen(G, n) for n in G.order}

    def comm(a, b):
        return e[a] * e[b] - e[b] * e[a]

    return {
        "[e12,e21]": comm("e12", "e21"),
        "[e11,e12]": comm("e11", "e12"),
        "[e11,e21]": comm("e11", "e21"),
        "e11-e11^2-(e22-e22^2)": e["e11"] - e["e11"] * e["e11"] - (e["e22"] - e["e22"] * e["e22"]),
    }


def gr12_suite(d: int = 3) -> dict:
    """Membership with reconstructed witnesses for each derived identity.

    Returns ``{name: (verdict, witness rows)}``; the verdict is true only when
    the witness re-expands exactly to the target.
    """
    R = gr12_relations()
    B = span_to_degree(R, d)
    out = {}
    for name, p in gr12_targets().items():
        res = member_test(p, B)
        ok = res.member and reconstruct(res.witness, R) == p
        out[name] = (ok, res.witness)
    return out


# -- points of the commutative quotient ---------------------------------------

def grass_points(count: int = 6) -> list:
    """Rational 2×2 idempotents of trace one, as ``{e_ij: value}``.

    ``[[x, y], [z, 1 - x]]`` with ``yz = x - x²``.
    """
    pts = []
    for x in range(-1, count - 1):
        y = Fraction(x + 2)
        z = Fraction(x - x * x) / y
        pts.append({"e11": Fraction(x), "e12": y, "e21": z, "e22": 1 - Fraction(x)})
    return pts


def evaluate_at(p: NCPoly, point: dict) -> GaussianRational:
    total = _ZERO
    for w, c in p.terms.items():
        v = as_qi(1)
        for g, k in w:
            for _ in range(k):
                v = v * as_qi(point[g])
        total = total + _qi(c) * v
    return total


def random_nonmember(rng: random.Random, degree: int = 2, n_terms: int = 4) -> NCPoly:
    """Random free polynomial of degree ``≤ degree`` that is nonzero at some point of the quotient."""
    G = grass(2)
    words = [w for w in _words(G.order, degree)]
    pts = grass_points()
    while True:
        terms = {}
        for _ in range(n_terms):
            w = unflatten(rng.choice(words))
            terms[w] = PhaseScalar.const(as_qi(Fraction(rng.randint(-4, 4), rng.randint(1, 3))))
        p = NCPoly(G, terms)
        if p.is_zero():
            continue
        if any(evaluate_at(p, pt) for pt in pts):
            return p
