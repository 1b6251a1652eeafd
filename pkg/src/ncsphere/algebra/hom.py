"""Algebra homomorphisms given by generator images, checked on every relation."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from ..errors import NotAHomomorphismError, PresentationMismatchError
from .ncpoly import NCPoly
from .presentation import Presentation, sphere_theta, torus_theta
from .scalars import PhaseScalar
from .trig import TrigCoeff

__all__ = ["AlgebraHom", "apply_hom", "torus_embed", "lambda_specialize"]


@dataclass(frozen=True)
class AlgebraHom:
    """Unital *-homomorphism ``source -> target`` fixed by generator images.

    ``coeff_map`` acts on coefficients (identity unless λ is specialised).
    Construction fails with :class:`NotAHomomorphismError` when an image
    violates a defining relation or the adjoint map.
    """

    name: str
    source: Presentation
    target: Presentation
    images: dict
    coeff_map: Callable | None = None

    def __post_init__(self):
        missing = set(self.source.order) - set(self.images)
        if missing:
            raise ValueError(f"no image for generators {sorted(missing)}")
        for g, img in self.images.items():
            if img.pres != self.target:
                raise PresentationMismatchError(f"image of {g} is not over {self.target.name}")
        bad = self.violations()
        if bad:
            raise NotAHomomorphismError(f"{self.name}: " + "; ".join(bad))

    def map_coeff(self, c):
        return self.coeff_map(c) if self.coeff_map else c

    def __call__(self, p: NCPoly) -> NCPoly:
        return apply_hom(p, self)

    def _relations(self):
        """Yield ``(label, lhs, rhs)`` source-side identities as (coeff, word) lists."""
        src = self.source
        one = PhaseScalar.one()
        if not src.is_confluent:
            for i, rel in enumerate(src.relations):
                yield f"relation {i}", list(rel), []
            return
        for i, g in enumerate(src.order):
            for h in src.order[:i]:
                k = src.exchange_phase(g, h)
                yield f"{g}{h} = λ^{k} {h}{g}", [(one, ((g, 1), (h, 1)))], [(PhaseScalar.lam(k), ((h, 1), (g, 1)))]
        for g, h in src.unit_pairs:
            yield f"{g}{h} = 1", [(one, ((g, 1), (h, 1)))], [(one, ())]
            yield f"{h}{g} = 1", [(one, ((h, 1), (g, 1)))], [(one, ())]
        for (g, h), repl in src.aux.items():
            lhs = ((g, 2),) if g == h else ((g, 1), (h, 1))
            yield f"{g}{h} rule", [(one, lhs)], list(repl)

    def _image_terms(self, items) -> NCPoly:
        acc = NCPoly.zero(self.target)
        for c, w in items:
            acc = acc + self._image_word(w).scale(self.map_coeff(c))
        return acc

    def _image_word(self, w) -> NCPoly:
        out = NCPoly.one(self.target)
        for g, p in w:
            for _ in range(p):
                out = out * self.images[g]
        return out

    def violations(self) -> list:
        bad = []
        for label, lhs, rhs in self._relations():
            diff = self._image_terms(lhs) - self._image_terms(rhs)
            if diff:
                bad.append(f"{label} fails: {diff}")
        for g, img in self.images.items():
            if self.images[self.source.adjoint[g]] != img.adjoint():
                bad.append(f"image of {g}* is not the adjoint of the image of {g}")
        return bad


def apply_hom(p: NCPoly, h: AlgebraHom) -> NCPoly:
    """Image of ``p`` under ``h``."""
    if p.pres != h.source:
        raise PresentationMismatchError(f"{h.name} expects {h.source.name}, got {p.pres.name}")
    cache: dict = {}
    acc = NCPoly.zero(h.target)
    for w, c in p.terms.items():
        img = cache.get(w)
        if img is None:
            img = cache[w] = h._image_word(w)
        acc = acc + img.scale(h.map_coeff(c))
    return acc


_EMBED = {}


def torus_embed() -> AlgebraHom:
    """``α -> (u/2) cφ cψ``, ``β -> (v/2) sφ cψ``, ``t -> 1/2 + sψ/2`` into the torus with angle coefficients."""
    if "embed" not in _EMBED:
        S, T = sphere_theta(), torus_theta()
        sf, cf, sp, cp = (TrigCoeff.symbol(x) for x in ("sφ", "cφ", "sψ", "cψ"))
        half = PhaseScalar.const(Fraction(1, 2))
        a = cf * cp * half
        b = sf * cp * half
        imgs = {
            "α": NCPoly(T, {(("u", 1),): a}),
            "α*": NCPoly(T, {(("u*", 1),): a}),
            "β": NCPoly(T, {(("v", 1),): b}),
            "β*": NCPoly(T, {(("v*", 1),): b}),
            "t": NCPoly(T, {(): TrigCoeff.const(half) + sp * half}),
        }
        _EMBED["embed"] = AlgebraHom("torus_embed", S, T, imgs)
    return _EMBED["embed"]


def lambda_specialize(source: Presentation, q: int = 1, p: int = 1) -> AlgebraHom:
    """Send λ to ``exp(2πi p/q)``; ``q = 1`` is the commutative limit."""
    target = source.specialize(q, p)
    imgs = {g: NCPoly.gen(target, g) for g in source.order}

    def coeff_map(c):
        if isinstance(c, TrigCoeff):
            return c.specialize_phase(lambda ps: PhaseScalar({k * p: v for k, v in ps.terms.items()}))
        return PhaseScalar({k * p: v for k, v in c.terms.items()})

    return AlgebraHom(f"λ->exp(2πi·{p}/{q})", source, target, imgs, coeff_map)
