"""Text format for polynomials and chains.

A polynomial is printed as terms joined by ``" + "``; each term is
``(a/b + c/d i) λ^k · g·h^2`` where the ``λ^k`` part is omitted for ``k = 0``
and the unit word prints as ``1``.  A chain prints one term per line as
``coef · [w0 | w1 | ...]``.  Both forms parse back exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import ParseError
from .presentation import Presentation, Word
from .scalars import GaussianRational, PhaseScalar, format_qi
from .trig import TrigCoeff

__all__ = [
    "dump_word",
    "parse_word",
    "dump_coeff_terms",
    "dump_poly",
    "parse_poly",
    "dump_chain",
    "parse_chain",
    "parse_qi",
]

_TERM = re.compile(r"^\((?P<c>[^()]*)\)(?: λ\^(?P<k>-?\d+))? · (?P<w>.+)$")
_FRAC = r"-?\d+(?:/\d+)?"
_QI = re.compile(
    rf"^(?:(?P<re>{_FRAC})(?: (?P<sgn>[+-]) (?P<im>\d+(?:/\d+)?) i)?|(?P<only>{_FRAC}) i)$"
)


def dump_word(w: Word) -> str:
    if not w:
        return "1"
    return "·".join(g if p == 1 else f"{g}^{p}" for g, p in w)


def parse_word(text: str) -> Word:
    text = text.strip()
    if text == "1":
        return ()
    out = []
    for tok in text.split("·"):
        tok = tok.strip()
        if not tok:
            raise ParseError(f"empty generator in word {text!r}")
        name, _, power = tok.partition("^")
        p = int(power) if power else 1
        if p < 1:
            raise ParseError(f"non-positive power in {tok!r}")
        if out and out[-1][0] == name:
            raise ParseError(f"adjacent repeated generator in {text!r}")
        out.append((name, p))
    return tuple(out)


def parse_qi(text: str) -> GaussianRational:
    m = _QI.match(text.strip())
    if not m:
        raise ParseError(f"bad coefficient {text!r}")
    if m.group("only") is not None:
        return GaussianRational(Fraction(0), Fraction(m.group("only")))
    re_part = Fraction(m.group("re"))
    im_part = Fraction(0)
    if m.group("im") is not None:
        im_part = Fraction(m.group("im")) * (1 if m.group("sgn") == "+" else -1)
    return GaussianRational(re_part, im_part)


def dump_coeff_terms(c: PhaseScalar) -> list:
    """One ``(qi) λ^k`` string per λ-power, lowest power first."""
    out = []
    for k in sorted(c.terms):
        s = f"({format_qi(c.terms[k])})"
        out.append(s if k == 0 else f"{s} λ^{k}")
    return out


def _coeff_strings(c) -> list:
    if isinstance(c, TrigCoeff):
        if c.is_constant():
            return dump_coeff_terms(c.constant_value())
        return [f"{{{c}}}"]
    return dump_coeff_terms(c)


def dump_poly(p) -> str:
    if not p.terms:
        return "0"
    parts = []
    for w, c in p.sorted_terms():
        ws = dump_word(w)
        parts.extend(f"{cs} · {ws}" for cs in _coeff_strings(c))
    return " + ".join(parts)


def _split_top(text: str, sep: str) -> list:
    parts, depth, start, i = [], 0, 0, 0
    n = len(sep)
    while i < len(text):
        ch = text[i]
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        elif depth == 0 and text.startswith(sep, i):
            parts.append(text[start:i])
            i += n
            start = i
            continue
        i += 1
    parts.append(text[start:])
    return parts


def _parse_term(text: str):
    m = _TERM.match(text.strip())
    if not m:
        raise ParseError(f"bad term {text!r}")
    k = int(m.group("k") or 0)
    return PhaseScalar.lam(k, parse_qi(m.group("c"))), m.group("w")


def parse_poly(text: str, pres: Presentation):
    from .ncpoly import NCPoly

    text = text.strip()
    if text == "0":
        return NCPoly.zero(pres)
    items = []
    for part in _split_top(text, " + "):
        c, wtext = _parse_term(part)
        items.append((parse_word(wtext), c))
    return NCPoly(pres, items)


def dump_chain(chain) -> str:
    """One line per term: ``coef · [w0 | w1 | ...]``; sorted for reproducibility."""
    lines = []
    for tensor, c in chain.sorted_terms():
        inner = " | ".join(dump_word(w) for w in tensor)
        lines.extend(f"{cs} · [{inner}]" for cs in dump_coeff_terms(c))
    return "\n".join(lines)


def parse_chain(text: str, pres: Presentation):
    from ..chains import TensorChain

    terms: dict = {}
    degree = None
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        c, body = _parse_term(line)
        if not (body.startswith("[") and body.endswith("]")):
            raise ParseError(f"bad chain term {line!r}")
        tensor = tuple(parse_word(x) for x in body[1:-1].split(" | "))
        if degree is None:
            degree = len(tensor) - 1
        elif degree != len(tensor) - 1:
            raise ParseError("chain terms of mixed degree")
        prev = terms.get(tensor)
        terms[tensor] = c if prev is None else prev + c
    return TensorChain.from_word_terms(pres, degree or 0, terms)
