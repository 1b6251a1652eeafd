"""Verification suites and report rendering used by the command line."""

from __future__ import annotations

import json
import random
import re
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import deform
from .algebra import NCPoly, parse_chain, sphere_theta, torus_embed, torus_theta
from .algebra.scalars import format_qi
from .chains import boundary_b, ch_even, even_normalization, matmul, transgression_ratio
from .clifford import idempotent_E, idempotent_E_abstract, odd_trace_scan, rational_sphere_point
from .ideal import gr12_relations, gr12_suite, member_test, random_nonmember, span_to_degree
from .spectral.commutative import classical_quartic, projection_matches_clifford
from .spectral.dirac import commutator_table_check, dirac_commutator, spinor_scale
from .spectral.oracle import ClockShiftOracle, parse_theta
from .spectral.quartic import pi_map, quartic_invariant, quartic_operator
from .spectral.reference import chern2_explicit_check
from .spectral.sphere import build_e_theta, idempotent_suite

__all__ = [
    "VerdictRecord",
    "Options",
    "SUITES",
    "run_suite",
    "emit_report",
    "parse_oracle",
    "golden_path",
    "REPORT_VERSION",
]

REPORT_VERSION = 1


@dataclass(frozen=True)
class VerdictRecord:
    suite: str
    name: str
    status: str
    details: dict
    millis: int = 0


@dataclass(frozen=True)
class Options:
    N: int = 5
    theta: Fraction = Fraction(1, 5)
    degree: int = 3
    seed: int = 0
    golden: Path | None = None


def golden_path() -> Path:
    return Path(__file__).with_name("fixtures") / "ch2_e_theta.txt"


def parse_oracle(text: str) -> tuple:
    """``"N=5,theta=1/5"`` → ``(5, Fraction(1, 5))``."""
    vals = {}
    for part in text.split(","):
        key, sep, val = part.partition("=")
        if not sep:
            raise ValueError(f"bad oracle setting {part!r}")
        vals[key.strip()] = val.strip()
    unknown = set(vals) - {"N", "theta"}
    if unknown:
        raise ValueError(f"unknown oracle keys {sorted(unknown)}")
    N = int(vals.get("N", 5))
    raw = vals.get("theta", "1/5")
    if not re.fullmatch(r"-?\d+(/\d+)?", raw):
        raise ValueError(f"theta must be written p/q, got {raw!r}")
    theta = parse_theta(raw)
    if N % theta.denominator:
        raise ValueError(f"N = {N} is not a multiple of the denominator of θ = {theta}")
    return N, theta


class _Recorder:
    def __init__(self, suite: str):
        self.suite = suite
        self.records: list = []

    def check(self, name: str, fn):
        """Run ``fn() -> (ok, details)`` and record the verdict with timing."""
        t0 = time.perf_counter()
        try:
            ok, details = fn()
        except Exception as exc:  # a crash is a failed check, not a crashed run
            ok, details = False, {"error": f"{type(exc).__name__}: {exc}"}
        ms = int(round((time.perf_counter() - t0) * 1000))
        self.records.append(VerdictRecord(self.suite, name, "pass" if ok else "fail", details, ms))

    def skip(self, name: str, reason: str):
        self.records.append(VerdictRecord(self.suite, name, "skip", {"reason": reason}, 0))


def _qi(x) -> str:
    return format_qi(x) if x is not None else "none"


def _phase(ps) -> str:
    return str(ps) if ps is not None else "none"


# -- chern ---------------------------------------------------------------

def _suite_chern(opts: Options) -> list:
    rec = _Recorder("chern")
    e = build_e_theta()
    state: dict = {}

    def idem():
        rep = idempotent_suite(e)
        return rep.ok, {"failures": [str(f) for f in rep.failures]}

    def low(n):
        def run():
            c = ch_even(e, n)
            return c.is_zero(), {"terms": len(c), "offending": [str(t) for t in list(c.sorted_terms())[:3]]}
        return run

    def b_ch2():
        c = ch_even(e, 2)
        state["ch2"] = c
        stats: dict = {}
        b = boundary_b(c, stats)
        ok = b.is_zero() and stats["raw_terms"] >= 600
        return ok, {"ch2_terms": len(c), "raw_terms": stats["raw_terms"], "surviving_terms": len(b)}

    def five():
        c = state.get("ch2") or ch_even(e, 2)
        scale = even_normalization(2)
        res = chern2_explicit_check(c, scale)
        return res["ok"], {
            "scale": scale,
            "mismatched_components": sorted(res["mismatch"]),
            "stray_terms": len(res["stray"]),
            "classical_antisymmetrization": {k: res["classical"][k] for k in sorted(res["classical"])},
        }

    def golden():
        path = opts.golden or golden_path()
        c = state.get("ch2") or ch_even(e, 2)
        want = parse_chain(Path(path).read_text(encoding="utf-8"), sphere_theta())
        diff = c - want
        return diff.is_zero(), {"path": Path(path).name, "differing_terms": len(diff)}

    def transgression():
        rows = {}
        ok = True
        cases = [
            ("e_theta n=0", build_e_theta(), 0, None),
            ("e_theta n=1", build_e_theta(), 1, None),
            ("clifford m=1 n=1", idempotent_E(1), 1, None),
        ]
        T = torus_theta()
        u, ui = [[NCPoly.gen(T, "u")]], [[NCPoly.gen(T, "u*")]]
        cases += [("torus u odd n=1", u, 1, ui), ("torus u odd n=2", u, 2, ui)]
        for name, x, n, xi in cases:
            r = transgression_ratio(x, n, xi)
            ok = ok and r.ok
            rows[name] = {"verdict": r.verdict, "ratio": _qi(r.ratio)}
        return ok, {"ratios": rows}

    rec.check("e_theta_projection", idem)
    rec.check("ch0_vanishes", low(0))
    rec.check("ch1_vanishes", low(1))
    rec.check("b_ch2_zero", b_ch2)
    rec.check("ch2_five_components", five)
    rec.check("ch2_golden", golden)
    rec.check("transgression", transgression)
    return rec.records


# -- quartic ----------------------------------------------------------------

def _suite_quartic(opts: Options, oracle: bool) -> list:
    rec = _Recorder("quartic")
    e = build_e_theta()
    state: dict = {}

    def symbolic():
        q = quartic_invariant(e)
        state["q"] = q
        return q.ok, {"c": _phase(q.c), "residual_components": len(q.residual)}

    def classical():
        cq = classical_quartic()
        state["classical"] = cq
        sym = state["q"].c
        agree = sym is not None and sym.is_constant() and Fraction(sym.constant_value().real) == cq.c
        return cq.residual_zero and agree, {"c_classical": str(cq.c), "c_symbolic": _phase(sym)}

    def projection():
        h = torus_embed()
        ok = projection_matches_clifford([[h(x) for x in row] for row in e])
        return ok, {}

    def pi_ch2():
        c = ch_even(e, 2)
        lhs = pi_map(c)
        factor = even_normalization(2) * len(e)
        rhs = spinor_scale(quartic_operator(e), factor)
        diff = lhs - rhs
        return diff.is_zero(), {"factor": factor, "differing_components": len(diff.terms)}

    rec.check("quartic_symbolic", symbolic)
    rec.check("quartic_classical_agreement", classical)
    rec.check("projection_classical_limit", projection)
    rec.check("pi_ch2_equals_trace_quartic", pi_ch2)
    if oracle:
        def numeric():
            orc = ClockShiftOracle(opts.N, opts.theta)
            c = complex(state["q"].c.evaluate(orc.lam))
            dev = 0.0
            g5 = orc.gamma5()
            for phi in (0.3, 0.7, 1.1):
                for psi in (-0.9, 0.2, 1.0):
                    dev = max(dev, float(np.abs(orc.quartic(e, phi, psi) - c * g5).max()))
            return dev < 1e-9, {"max_deviation": f"{dev:.3e}", "grid": "3x3", "N": opts.N, "theta": str(opts.theta)}

        rec.check("quartic_numeric", numeric)
    return rec.records


# -- clifford -------------------------------------------------------------------

def _suite_clifford(opts: Options) -> list:
    rec = _Recorder("clifford")

    def idem(m):
        def run():
            E = idempotent_E(m)
            A = idempotent_E_abstract(m)
            return matmul(E, E) == E and A * A == A, {"m": m}
        return run

    def low(m):
        def run():
            E = idempotent_E(m)
            sizes = {j: len(ch_even(E, j)) for j in range(m)}
            top = len(ch_even(E, m))
            return all(v == 0 for v in sizes.values()) and top > 0, {
                "vanishing_terms": {str(k): v for k, v in sizes.items()},
                f"ch{m}_terms": top,
            }
        return run

    def odd_scan():
        rng = random.Random(opts.seed)
        out = {}
        ok = True
        for m, ell in ((2, 1), (2, 3)):
            pts = [tuple(rational_sphere_point(rng, m) for _ in range(ell)) for _ in range(100)]
            r = odd_trace_scan(m, ell, pts)
            ok = ok and r.ok
            out[f"m={m},l={ell}"] = {"points": r.points, "nonzero": len(r.nonzero)}
        return ok, out

    for m in (1, 2):
        rec.check(f"E_idempotent_m{m}", idem(m))
        rec.check(f"E_low_chern_vanish_m{m}", low(m))
    rec.check("odd_trace_identities", odd_scan)
    return rec.records


# -- deform ------------------------------------------------------------------

def _suite_deform(opts: Options, oracle: bool) -> list:
    rec = _Recorder("deform")
    mons = deform.monomials_in_box(3)

    def count(pred, pairs):
        bad = [p for p in pairs if not pred(*p)]
        return not bad, {"cases": len(pairs), "failures": len(bad), "first": [str(tuple(a.name for a in p)) for p in bad[:3]]}

    pairs = [(x, y) for x in mons for y in mons]
    rec.check("lemma1a_free", lambda: count(lambda x, y: deform.lemma1_check(x, y), pairs))
    rec.check(
        "lemma1a_commuting_base",
        lambda: count(
            lambda x, y: (
                deform.left_twist(x, deform.CLASSICAL) * deform.right_twist(y, deform.CLASSICAL)
                - deform.right_twist(y, deform.CLASSICAL) * deform.left_twist(x, deform.CLASSICAL)
            ).is_zero(),
            pairs,
        ),
    )
    rec.check("lemma1b", lambda: count(deform.lemma1b_check, pairs))

    def lemma2(key):
        def run():
            bad = [x for x in mons if not deform.twist_J_check(x)[key]]
            return not bad, {"cases": len(mons), "failures": len(bad), "first": [x.name for x in bad[:3]]}
        return run

    rec.check("lemma2_stated_phase", lemma2("minus"))
    rec.check("lemma2_antilinear_phase", lemma2("plus"))
    rec.check("order_one", lambda: count(deform.order_one_check, pairs))
    rec.check("opposite_commutes", lambda: count(deform.commut_check, pairs))

    def assoc():
        bad = 0
        n = 0
        for x in mons:
            for y in mons:
                for z in mons:
                    n += 1
                    if not deform.star_associativity_check(x, y, z):
                        bad += 1
        return bad == 0, {"cases": n, "failures": bad}

    rec.check("star_associativity", assoc)
    rec.check("J_tilde_squared", lambda: (deform.J_tilde() * deform.J_tilde() == deform.J() * deform.J(), {}))

    def confluence():
        rng = random.Random(opts.seed)
        bad = 0
        for _ in range(200):
            factors = _random_factors(rng, mons)
            for model in (deform.FREE, deform.CLASSICAL):
                if deform.canonicalize_random(factors, rng, model) != deform.push_weight(factors, model):
                    bad += 1
        return bad == 0, {"cases": 400, "failures": bad}

    rec.check("canonical_confluence", confluence)
    if oracle:
        def numeric():
            dev = deform.numeric_confirmation(deform.DeformNumericModel(opts.N, opts.theta))
            ok = max(dev["lemma1a"], dev["lemma1b"], dev["twist_J_plus"], dev["canonical"]) < 1e-10
            return ok, {k: f"{v:.3e}" for k, v in sorted(dev.items())}

        rec.check("numeric_confirmation", numeric)
    return rec.records


def _random_factors(rng: random.Random, mons: list) -> list:
    out = []
    for _ in range(rng.randint(1, 6)):
        kind = rng.random()
        if kind < 0.5:
            a = rng.choice(mons)
            r = rng.random()
            if r < 0.2:
                a = deform.dirac_atom(a)
            elif r < 0.4:
                a = deform.j_conj(a)
            out.append(a)
        elif kind < 0.8:
            out.append(("W", rng.randint(-2, 2), rng.randint(-2, 2), rng.randint(-1, 1)))
        else:
            out.append(rng.choice(["J", "Jinv"]))
    return out


# -- membership -------------------------------------------------------------

def _suite_membership(opts: Options) -> list:
    rec = _Recorder("membership")
    R = gr12_relations()
    d = opts.degree

    def targets():
        res = gr12_suite(d)
        return all(ok for ok, _ in res.values()), {
            name: {"member": ok, "witness_rows": len(w)} for name, (ok, w) in res.items()
        }

    def size():
        B = span_to_degree(R, d)
        return True, {"degree": d, "products": B.products, "basis": len(B)}

    def negatives():
        B = span_to_degree(R, d)
        rng = random.Random(opts.seed)
        samples = [NCPoly.gen(R.pres, "e12")] + [random_nonmember(rng) for _ in range(5)]
        rejected = [not member_test(p, B).member for p in samples]
        return all(rejected), {"samples": len(samples), "rejected": sum(rejected)}

    def monotone():
        res = gr12_suite(d + 1)
        return all(ok for ok, _ in res.values()), {"degree": d + 1}

    rec.check("gr12_memberships", targets)
    rec.check("basis_size", size)
    rec.check("non_members_rejected", negatives)
    rec.check("monotone_in_degree", monotone)
    return rec.records


# -- oracle -------------------------------------------------------------------

def _suite_oracle(opts: Options) -> list:
    rec = _Recorder("oracle")
    orc = ClockShiftOracle(opts.N, opts.theta)

    def relations():
        r = orc.relation_residual()
        return r < 1e-12, {"max_residual": f"{r:.3e}"}

    def table():
        rep = commutator_table_check()
        return rep.ok, {"mismatched": sorted(rep.mismatches)}

    def numeric_dirac():
        S = sphere_theta()
        dev = 0.0
        for g in ("α", "α*", "β", "β*", "t"):
            f = NCPoly.gen(S, g)
            sym = dirac_commutator(f)
            for phi, psi in ((0.7, 0.3), (0.2, -0.8), (1.3, 1.1)):
                dev = max(dev, float(np.abs(orc.spinor(sym, phi, psi) - orc.dirac(f, phi, psi)).max()))
        return dev < 1e-10, {"max_deviation": f"{dev:.3e}", "N": opts.N, "theta": str(opts.theta)}

    rec.check("torus_relations", relations)
    rec.check("dirac_table", table)
    rec.check("dirac_numeric", numeric_dirac)
    return rec.records


SUITES = ("chern", "quartic", "clifford", "deform", "membership", "oracle")


def run_suite(name: str, opts: Options | None = None, *, oracle: bool = True) -> list:
    """Records of one suite, or of every suite for ``"all"``."""
    opts = opts or Options()
    if name == "all":
        out = []
        for s in SUITES:
            out.extend(run_suite(s, opts, oracle=oracle))
        return out
    if name == "chern":
        return _suite_chern(opts)
    if name == "quartic":
        return _suite_quartic(opts, oracle)
    if name == "clifford":
        return _suite_clifford(opts)
    if name == "deform":
        return _suite_deform(opts, oracle)
    if name == "membership":
        return _suite_membership(opts)
    if name == "oracle":
        return _suite_oracle(opts)
    raise KeyError(name)


def emit_report(records: list, fmt: str = "text") -> str:
    """Render records as text or as the versioned JSON document."""
    suites: dict = {}
    for r in records:
        suites.setdefault(r.suite, []).append(r)
    if fmt == "json":
        doc = {
            "version": REPORT_VERSION,
            "suites": [
                {
                    "name": name,
                    "checks": [
                        {"name": r.name, "status": r.status, "details": r.details, "millis": r.millis}
                        for r in recs
                    ],
                }
                for name, recs in suites.items()
            ],
        }
        return json.dumps(doc, indent=2, ensure_ascii=False)
    lines = []
    for name, recs in suites.items():
        lines.append(f"[{name}]")
        for r in recs:
            lines.append(f"  {r.status.upper():4}  {r.name}  ({r.millis} ms)")
            if r.status == "fail" or r.details:
                lines.append(f"        {json.dumps(r.details, ensure_ascii=False, sort_keys=True)}")
    failed = sum(r.status == "fail" for r in records)
    lines.append(f"{len(records)} checks, {failed} failed")
    return "\n".join(lines)
