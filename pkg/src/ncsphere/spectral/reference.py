"""Closed-form second Chern component of the 4-sphere projection.

``ch₂`` (trace normalization, no ``λ₂`` factor) is written as

    (t - 1/2) Γ_t + α Γ_α + α* Γ_α* + β Γ_β + β* Γ_β*

with each ``Γ`` a sum of products of two 2-forms.  The tables below list
every product as ``(prefactor, left form, right form)``; a form such as
``"dα dβ - λ dβ dα"`` becomes ``1 ⊗ α ⊗ β - λ 1 ⊗ β ⊗ α`` style tensor slots
(``d`` replaced by ``⊗``).  ``λ̄`` is ``λ^-1``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..algebra.ncpoly import NCPoly
from ..algebra.presentation import Presentation, sphere_theta
from ..algebra.scalars import PhaseScalar
from ..chains import TensorChain

__all__ = [
    "GAMMA",
    "PREFIX",
    "CLASSICAL_ORDER",
    "five_component_chain",
    "component_chain",
    "parse_form",
    "split_components",
    "antisymmetrization",
    "chern2_explicit_check",
]

GAMMA = {
    "t": [
        ("1", "dα dα* - dα* dα", "dβ dβ* - dβ* dβ"),
        ("1", "dβ dβ* - dβ* dβ", "dα dα* - dα* dα"),
        ("1", "dα dβ - λ dβ dα", "dβ* dα* - λ̄ dα* dβ*"),
        ("1", "dβ* dα* - λ̄ dα* dβ*", "dα dβ - λ dβ dα"),
        ("1", "dα* dβ - λ̄ dβ dα*", "λ dα dβ* - dβ* dα"),
        ("1", "λ dα dβ* - dβ* dα", "dα* dβ - λ̄ dβ dα*"),
    ],
    "α": [
        ("1", "dt dα* - dα* dt", "dβ* dβ - dβ dβ*"),
        ("1", "dβ* dβ - dβ dβ*", "dt dα* - dα* dt"),
        ("1", "dβ dt - dt dβ", "dβ* dα* - λ̄ dα* dβ*"),
        ("λ", "dβ* dα* - λ̄ dα* dβ*", "dβ dt - dt dβ"),
        ("1", "dα* dβ - λ̄ dβ dα*", "dβ* dt - dt dβ*"),
        ("λ", "dβ* dt - dt dβ*", "dα* dβ - λ̄ dβ dα*"),
    ],
    "α*": [
        ("1", "dt dα - dα dt", "dβ dβ* - dβ* dβ"),
        ("1", "dβ dβ* - dβ* dβ", "dt dα - dα dt"),
        ("1", "dα dβ - λ dβ dα", "dt dβ* - dβ* dt"),
        ("λ̄", "dt dβ* - dβ* dt", "dα dβ - λ dβ dα"),
        ("1", "dt dβ - dβ dt", "dβ* dα - λ dα dβ*"),
        ("λ̄", "dβ* dα - λ dα dβ*", "dt dβ - dβ dt"),
    ],
    "β": [
        ("1", "dt dβ* - dβ* dt", "dα* dα - dα dα*"),
        ("1", "dα* dα - dα dα*", "dt dβ* - dβ* dt"),
        ("λ", "dt dα - dα dt", "dβ* dα* - λ̄ dα* dβ*"),
        ("1", "dβ* dα* - λ̄ dα* dβ*", "dt dα - dα dt"),
        ("λ̄", "dα* dt - dt dα*", "dβ* dα - λ dα dβ*"),
        ("1", "dβ* dα - λ dα dβ*", "dα* dt - dt dα*"),
    ],
    "β*": [
        ("1", "dt dβ - dβ dt", "dα dα* - dα* dα"),
        ("1", "dα dα* - dα* dα", "dt dβ - dβ dt"),
        ("1", "dα* dt - dt dα*", "dα dβ - λ dβ dα"),
        ("λ̄", "dα dβ - λ dβ dα", "dα* dt - dt dα*"),
        ("1", "dt dα - dα dt", "dα* dβ - λ̄ dβ dα*"),
        ("λ", "dα* dβ - λ̄ dβ dα*", "dt dα - dα dt"),
    ],
}

# element multiplying each Γ in slot 0 (``t`` is shifted by -1/2)
PREFIX = {"t": "t - 1/2", "α": "α", "α*": "α*", "β": "β", "β*": "β*"}

_COEF = {"": PhaseScalar.one(), "1": PhaseScalar.one(), "λ": PhaseScalar.lam(1), "λ̄": PhaseScalar.lam(-1)}
_TERM = re.compile(r"^(?P<c>λ̄|λ)?\s*d(?P<x>\S+)\s+d(?P<y>\S+)$")


def parse_form(text: str) -> list:
    """``"dα dβ - λ dβ dα"`` -> ``[(1, ("α", "β")), (-λ, ("β", "α"))]``."""
    out = []
    sign = 1
    for tok in re.split(r"\s+([+-])\s+", " + " + text.strip())[1:]:
        if tok in "+-":
            sign = 1 if tok == "+" else -1
            continue
        m = _TERM.match(tok.strip())
        if not m:
            raise ValueError(f"cannot read form term {tok!r}")
        c = _COEF[m.group("c") or ""]
        out.append((c if sign > 0 else -c, (m.group("x"), m.group("y"))))
    return out


def _prefix_poly(pres: Presentation, key: str) -> NCPoly:
    g = NCPoly.gen(pres, key)
    return g - PhaseScalar.const(Fraction(1, 2)) if key == "t" else g


def component_chain(key: str, pres: Presentation | None = None) -> TensorChain:
    """``prefix ⊗ Γ_key`` as a degree-4 chain."""
    pres = pres or sphere_theta()
    out = TensorChain.zero(pres, 4)
    prefix = _prefix_poly(pres, key)
    for pre, left, right in GAMMA[key]:
        pc = _COEF[pre]
        for cl, (x1, x2) in parse_form(left):
            for cr, (x3, x4) in parse_form(right):
                entries = [prefix] + [NCPoly.gen(pres, x) for x in (x1, x2, x3, x4)]
                out = out + TensorChain.from_tensor(entries, pc * cl * cr)
    return out


def five_component_chain(pres: Presentation | None = None) -> TensorChain:
    pres = pres or sphere_theta()
    out = TensorChain.zero(pres, 4)
    for key in GAMMA:
        out = out + component_chain(key, pres)
    return out


# λ = 1 limit: each component is the full antisymmetrization of four generators
CLASSICAL_ORDER = {
    "t": ("α", "α*", "β", "β*"),
    "α": ("t", "α*", "β*", "β"),
    "α*": ("t", "α", "β", "β*"),
    "β": ("t", "β*", "α*", "α"),
    "β*": ("t", "β", "α", "α*"),
}


def antisymmetrization(gens: tuple, pres: Presentation) -> dict:
    """``{(w1, .., w4): ±1}`` summing ``sgn(σ) gσ1 ⊗ ... ⊗ gσ4``."""
    from itertools import permutations

    out = {}
    for perm in permutations(range(4)):
        inv = sum(1 for i in range(4) for j in range(i + 1, 4) if perm[i] > perm[j])
        key = tuple(((gens[k], 1),) for k in perm)
        out[key] = PhaseScalar.const(-1 if inv % 2 else 1)
    return out


def split_components(chain: TensorChain) -> tuple:
    """Group a degree-4 chain by its slot-0 word.

    Returns ``(components, stray)`` where ``components[key]`` maps the
    remaining four slots to coefficients and ``stray`` holds terms whose
    slot-0 word is not one of ``1, t, α, α*, β, β*`` or whose unit-word part
    is not ``-1/2`` of the ``t`` part.
    """
    comps = {k: {} for k in GAMMA}
    unit = {}
    stray = {}
    for tensor, c in chain.terms.items():
        head = tensor[0]
        if head == ():
            unit[tensor[1:]] = c
        elif len(head) == 1 and head[0][1] == 1 and head[0][0] in comps:
            comps[head[0][0]][tensor[1:]] = c
        else:
            stray[tensor] = c
    half = PhaseScalar.const(Fraction(-1, 2))
    for rest, c in comps["t"].items():
        if unit.pop(rest, None) != c * half:
            stray[((),) + rest] = c
    for rest, c in unit.items():
        stray[((),) + rest] = c
    return comps, stray


def _component_terms(key: str, pres: Presentation) -> dict:
    comps, _ = split_components(component_chain(key, pres))
    return comps[key]


def chern2_explicit_check(chain: TensorChain, scale) -> dict:
    """Compare ``chain / scale`` with the tabulated five-component form.

    Returns ``{"ok", "mismatch": {key: diff terms}, "stray", "classical": {key: bool}}``.
    ``classical[key]`` is true when the λ = 1 value of the computed component
    equals the antisymmetrization in :data:`CLASSICAL_ORDER`.
    """
    pres = chain.pres
    inv = PhaseScalar.const(Fraction(1, 1) / Fraction(scale))
    comps, stray = split_components(chain.scale(inv))
    mismatch = {}
    classical = {}
    for key in GAMMA:
        want = _component_terms(key, pres)
        got = comps[key]
        diff = {}
        for rest in set(want) | set(got):
            d = got.get(rest, PhaseScalar.zero()) - want.get(rest, PhaseScalar.zero())
            if d:
                diff[rest] = d
        if diff:
            mismatch[key] = diff
        at_one = {}
        for rest, c in got.items():
            v = PhaseScalar.const(c.at_one())
            if v:
                at_one[rest] = v
        classical[key] = at_one == antisymmetrization(CLASSICAL_ORDER[key], pres)
    ok = not mismatch and not stray and all(classical.values())
    return {"ok": ok, "mismatch": mismatch, "stray": stray, "classical": classical}

