"""Generator/relation presentations and the word rewriting that realises them.

A *confluent* presentation is a λ-commutation system: every ordered pair of
generators exchanges up to a power of λ, some adjacent pairs cancel to the
unit (``u u* = 1``) and a few central products are rewritten by auxiliary
rules (``β β* -> t - t² - α α*``).  Normal words are sorted in generator
order with no reducible pair left.  A *relational* presentation only records
relations in the free algebra; it is consumed by ideal membership.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..errors import AlphabetError, UnsupportedKindError
from .scalars import PhaseScalar

__all__ = [
    "Word",
    "Presentation",
    "sphere_theta",
    "torus_theta",
    "sphere_comm",
    "grass",
    "word",
    "flatten",
    "unflatten",
    "word_degree",
]

Word = tuple  # tuple[tuple[str, int], ...]; () is the unit
UNIT: Word = ()


def unflatten(gens: Iterable[str]) -> Word:
    """Merge a generator sequence into ``(generator, power)`` pairs."""
    out: list = []
    for g in gens:
        if out and out[-1][0] == g:
            out[-1][1] += 1
        else:
            out.append([g, 1])
    return tuple((g, p) for g, p in out)


def flatten(w: Word) -> tuple:
    return tuple(g for g, p in w for _ in range(p))


def word(*items) -> Word:
    """Build a word from generator names and ``(name, power)`` pairs."""
    seq: list = []
    for it in items:
        if isinstance(it, tuple):
            g, p = it
            if p < 1:
                raise ValueError("powers in a word must be positive")
            seq.extend([g] * p)
        else:
            seq.append(it)
    return unflatten(seq)


def word_degree(w: Word) -> int:
    return sum(p for _, p in w)


@dataclass(frozen=True, eq=False)
class Presentation:
    """Generators, adjoint map and rewrite data of an algebra.

    ``exchange[(g, h)] = k`` for ``g`` later than ``h`` in ``order`` means
    ``g h = λ^k h g``.  ``unit_pairs`` lists adjacent ``(g, g*)`` with
    ``g g* = g* g = 1``.  ``aux[(g, h)]`` is the replacement of the central
    product ``g h`` as a tuple of ``(PhaseScalar, Word)`` pairs.
    """

    name: str
    kind: str
    order: tuple
    adjoint: dict
    exchange: dict = field(default_factory=dict)
    unit_pairs: tuple = ()
    aux: dict = field(default_factory=dict)
    relations: tuple = ()
    cyclotomic: int | None = None
    lam_power: int = 1

    def __post_init__(self):
        if self.kind not in ("confluent", "relational"):
            raise ValueError(f"unknown presentation kind {self.kind!r}")
        idx = {g: i for i, g in enumerate(self.order)}
        object.__setattr__(self, "index", idx)
        object.__setattr__(self, "_cache", {})
        for g, h in self.adjoint.items():
            if self.adjoint.get(h) != g:
                raise ValueError(f"adjoint map is not an involution at {g!r}")
        n = len(self.order)
        table = [[0] * n for _ in range(n)]
        for (g, h), k in self.exchange.items():
            table[idx[g]][idx[h]] = k
        object.__setattr__(self, "_table", table)
        for g, h in list(self.unit_pairs) + list(self.aux):
            i, j = idx[g], idx[h]
            if j - i not in (0, 1):
                raise ValueError(f"rule pair ({g}, {h}) must be adjacent in generator order")
        unit = {}
        for g, h in self.unit_pairs:
            unit[(g, h)] = unit[(h, g)] = True
        object.__setattr__(self, "_unit", unit)

    # presentations are compared by identity of their data
    def key(self):
        return (self.name, self.cyclotomic, self.lam_power)

    def __eq__(self, other):
        return isinstance(other, Presentation) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Presentation({self.name!r})"

    @property
    def is_confluent(self) -> bool:
        return self.kind == "confluent"

    def check_word(self, w: Word) -> None:
        for g, p in w:
            if g not in self.index:
                raise AlphabetError(f"generator {g!r} not in alphabet of {self.name}")

    def exchange_phase(self, g: str, h: str) -> int:
        """k with ``g h = λ^k h g`` (any order of g, h)."""
        i, j = self.index[g], self.index[h]
        if i > j:
            return self._table[i][j]
        if i < j:
            return -self._table[j][i]
        return 0

    def specialize(self, q: int = 1, p: int = 1) -> "Presentation":
        """Same presentation with λ sent to ``exp(2πi p/q)``.

        The target keeps a symbol ``λ`` standing for ``exp(2πi/q)``; exchange
        phases are multiplied by ``p`` and coefficients are reduced modulo the
        cyclotomic polynomial of order ``q`` (``q = 1`` is the classical limit).
        """
        exchange = {k: v * p for k, v in self.exchange.items()}
        label = "1" if q == 1 else f"exp(2πi·{p}/{q})"
        return Presentation(
            name=f"{self.name}|λ={label}",
            kind=self.kind,
            order=self.order,
            adjoint=self.adjoint,
            exchange=exchange,
            unit_pairs=self.unit_pairs,
            aux=self.aux,
            relations=self.relations,
            cyclotomic=q,
            lam_power=p,
        )

    # -- normal forms of monomials --------------------------------------
    def to_vec(self, w: Word) -> tuple:
        vec = [0] * len(self.order)
        for g, p in w:
            vec[self.index[g]] += p
        return tuple(vec)

    def from_vec(self, vec) -> Word:
        return tuple((g, e) for g, e in zip(self.order, vec) if e)

    def is_normal(self, w: Word) -> bool:
        if not self.is_confluent:
            return True
        last = -1
        for g, _ in w:
            i = self.index[g]
            if i <= last:
                return False
            last = i
        vec = self.to_vec(w)
        for g, h in self.unit_pairs:
            if vec[self.index[g]] and vec[self.index[h]]:
                return False
        for g, h in self.aux:
            i, j = self.index[g], self.index[h]
            if (i == j and vec[i] >= 2) or (i != j and vec[i] and vec[j]):
                return False
        return True

    def mono_mul(self, w1: Word, w2: Word) -> tuple:
        """Product of two normal words as ``((PhaseScalar, Word), ...)``."""
        key = (w1, w2)
        cache = self._cache
        hit = cache.get(key)
        if hit is not None:
            return hit
        if not self.is_confluent:
            res = ((PhaseScalar.one(), _concat(w1, w2)),)
        elif not w1:
            res = ((PhaseScalar.one(), w2),)
        elif not w2:
            res = ((PhaseScalar.one(), w1),)
        else:
            a = self.to_vec(w1)
            b = self.to_vec(w2)
            table = self._table
            phase = 0
            for i, ai in enumerate(a):
                if ai:
                    row = table[i]
                    for j in range(i):
                        if b[j] and row[j]:
                            phase += ai * b[j] * row[j]
            c = [x + y for x, y in zip(a, b)]
            res = tuple(
                (ps.mul_phase(phase), w) for ps, w in self._reduce_vec(c)
            )
        cache[key] = res
        return res

    def _reduce_vec(self, c: list) -> list:
        idx = self.index
        for g, h in self.unit_pairs:
            i, j = idx[g], idx[h]
            k = min(c[i], c[j])
            if k:
                c[i] -= k
                c[j] -= k
        for (g, h), repl in self.aux.items():
            i, j = idx[g], idx[h]
            if (i == j and c[i] >= 2) or (i != j and c[i] and c[j]):
                c[i] -= 1
                c[j] -= 1
                rest = self.from_vec(c)
                acc: dict = {}
                for coeff, rw in repl:
                    for ps, w in self.mono_mul(rw, rest):
                        prev = acc.get(w)
                        acc[w] = coeff * ps if prev is None else prev + coeff * ps
                return [(ps, w) for w, ps in acc.items() if ps.terms]
        return [(PhaseScalar.one(), self.from_vec(c))]

    def normal_terms(self, w: Word) -> list:
        """Normal form of an arbitrary word as ``[(PhaseScalar, Word), ...]``."""
        self.check_word(w)
        if not self.is_confluent:
            raise UnsupportedKindError(f"{self.name} is relational; no rewrite normal form")
        acc = {UNIT: PhaseScalar.one()}
        for g, p in w:
            step = ((g, 1),)
            for _ in range(p):
                nxt: dict = {}
                for u, cu in acc.items():
                    for ps, v in self.mono_mul(u, step):
                        val = cu * ps
                        prev = nxt.get(v)
                        nxt[v] = val if prev is None else prev + val
                acc = {k: c for k, c in nxt.items() if c.terms}
        return [(c, k) for k, c in acc.items()]

    # -- rule-by-rule rewriting -----------------------------------------
    def redexes(self, seq: Sequence[str]) -> list:
        """Positions ``i`` where a rule applies to ``seq[i], seq[i+1]``."""
        out = []
        idx = self.index
        for i in range(len(seq) - 1):
            g, h = seq[i], seq[i + 1]
            if (g, h) in self._unit or (g, h) in self.aux or idx[g] > idx[h]:
                out.append(i)
        return out

    def rewrite_at(self, seq: tuple, i: int, rng: random.Random | None = None) -> list:
        """Apply one rule at position ``i``; returns ``[(PhaseScalar, seq'), ...]``.

        When several rules match the same pair one is chosen with ``rng``.
        """
        g, h = seq[i], seq[i + 1]
        left, right = seq[:i], seq[i + 2 :]
        options = []
        if (g, h) in self._unit:
            options.append([(PhaseScalar.one(), left + right)])
        if (g, h) in self.aux:
            options.append(
                [(c, left + flatten(rw) + right) for c, rw in self.aux[(g, h)]]
            )
        if self.index[g] > self.index[h]:
            k = self.exchange_phase(g, h)
            options.append([(PhaseScalar.lam(k), left + (h, g) + right)])
        if not options:
            raise ValueError(f"no rule applies at position {i}")
        if rng is None or len(options) == 1:
            return options[0]
        return rng.choice(options)

    def rewrite_random(self, w: Word, rng: random.Random, max_steps: int = 100000) -> dict:
        """Rewrite ``w`` to normal form choosing redexes (and rules) at random."""
        self.check_word(w)
        if not self.is_confluent:
            raise UnsupportedKindError(f"{self.name} is relational; no rewrite normal form")
        work = {flatten(w): PhaseScalar.one()}
        done: dict = {}
        steps = 0
        while work:
            seq = rng.choice(sorted(work))
            coeff = work.pop(seq)
            pos = self.redexes(seq)
            if not pos:
                nw = unflatten(seq)
                prev = done.get(nw)
                s = coeff if prev is None else prev + coeff
                if s.terms:
                    done[nw] = s
                else:
                    done.pop(nw, None)
                continue
            for c, s2 in self.rewrite_at(seq, rng.choice(pos), rng):
                val = coeff * c
                prev = work.get(s2)
                tot = val if prev is None else prev + val
                if tot.terms:
                    work[s2] = tot
                else:
                    work.pop(s2, None)
            steps += 1
            if steps > max_steps:
                raise RuntimeError("rewriting did not terminate within the step budget")
        return done

    def word_sort_key(self, w: Word):
        return (word_degree(w), tuple((self.index.get(g, -1), g, p) for g, p in w))


def _concat(w1: Word, w2: Word) -> Word:
    if w1 and w2 and w1[-1][0] == w2[0][0]:
        return w1[:-1] + ((w1[-1][0], w1[-1][1] + w2[0][1]),) + w2[1:]
    return w1 + w2


def _bidegree_exchange(order, degrees) -> dict:
    """Exchange table of a λ-commutation system graded by bidegrees.

    ``x y = λ^{σ(x, y)} y x`` with ``σ(n, n') = n₁ n'₂ - n₂ n'₁``.
    """
    ex = {}
    for i, g in enumerate(order):
        for h in order[:i]:
            (a1, a2), (b1, b2) = degrees[g], degrees[h]
            k = a1 * b2 - a2 * b1
            if k:
                ex[(g, h)] = k
    return ex


_BUILTINS: dict = {}


def sphere_theta() -> Presentation:
    """Generators α, α*, β, β*, t of the deformed 4-sphere.

    ``αβ = λβα`` and its adjoints; ``t`` central and self-adjoint;
    ``ββ* = β*β`` rewritten to ``t - t² - αα*``.
    """
    if "sphere_theta" not in _BUILTINS:
        order = ("α", "α*", "β", "β*", "t")
        deg = {"α": (1, 0), "α*": (-1, 0), "β": (0, 1), "β*": (0, -1), "t": (0, 0)}
        one = PhaseScalar.one()
        _BUILTINS["sphere_theta"] = Presentation(
            name="sphere_theta",
            kind="confluent",
            order=order,
            adjoint={"α": "α*", "α*": "α", "β": "β*", "β*": "β", "t": "t"},
            exchange=_bidegree_exchange(order, deg),
            aux={
                ("β", "β*"): (
                    (one, (("t", 1),)),
                    (-one, (("t", 2),)),
                    (-one, (("α", 1), ("α*", 1))),
                )
            },
        )
    return _BUILTINS["sphere_theta"]


def torus_theta() -> Presentation:
    """Unitaries u, v of the noncommutative torus with ``uv = λvu``."""
    if "torus_theta" not in _BUILTINS:
        order = ("u", "u*", "v", "v*")
        deg = {"u": (1, 0), "u*": (-1, 0), "v": (0, 1), "v*": (0, -1)}
        _BUILTINS["torus_theta"] = Presentation(
            name="torus_theta",
            kind="confluent",
            order=order,
            adjoint={"u": "u*", "u*": "u", "v": "v*", "v*": "v"},
            exchange=_bidegree_exchange(order, deg),
            unit_pairs=(("u", "u*"), ("v", "v*")),
        )
    return _BUILTINS["torus_theta"]


def sphere_comm(dim: int) -> Presentation:
    """Commutative coordinates ξ1..ξdim, t of the round sphere ``Σξ² + t² = 1``."""
    key = f"sphere_comm({dim})"
    if key not in _BUILTINS:
        xis = tuple(f"ξ{i}" for i in range(1, dim + 1))
        order = xis + ("t",)
        one = PhaseScalar.one()
        repl = ((one, ()),) + tuple((-one, ((x, 2),)) for x in xis)
        _BUILTINS[key] = Presentation(
            name=key,
            kind="confluent",
            order=order,
            adjoint={g: g for g in order},
            aux={("t", "t"): repl},
        )
    return _BUILTINS[key]


def grass(r: int) -> Presentation:
    """Free algebra on the r² matrix entries ``e_ij`` with the relations ``e² = e``."""
    key = f"grass({r})"
    if key not in _BUILTINS:
        names = [[f"e{i}{j}" for j in range(1, r + 1)] for i in range(1, r + 1)]
        order = tuple(n for row in names for n in row)
        adj = {names[i][j]: names[j][i] for i in range(r) for j in range(r)}
        one = PhaseScalar.one()
        rels = []
        for i in range(r):
            for j in range(r):
                terms = [(one, ((names[i][k], 1), (names[k][j], 1)) if names[i][k] != names[k][j] else ((names[i][k], 2),)) for k in range(r)]
                terms.append((-one, ((names[i][j], 1),)))
                rels.append(tuple(terms))
        _BUILTINS[key] = Presentation(
            name=key,
            kind="relational",
            order=order,
            adjoint=adj,
            relations=tuple(rels),
        )
    return _BUILTINS[key]
