"""Acceptance criteria, one test each, at their stated tolerances.

Each test records a PASS/FAIL line that is printed in the terminal summary.
"""

import random
import time
from fractions import Fraction

import numpy as np

from ncsphere.algebra import NCPoly, nc_adjoint, normal_form, sphere_comm, sphere_theta, torus_embed, torus_theta
from ncsphere.algebra.ncpoly import random_ncpoly, random_word
from ncsphere.chains import boundary_b, ch_even, even_normalization, matmul, operator_B, random_chain
from ncsphere.clifford import CliffordElement, idempotent_E, idempotent_E_abstract, odd_trace_scan, rational_sphere_point
from ncsphere.deform import (
    CLASSICAL,
    FREE,
    lemma1_check,
    lemma1b_check,
    monomials_in_box,
    order_one_check,
    star_associativity_check,
    twist_J_check,
)
from ncsphere.ideal import evaluate_at, gr12_relations, gr12_suite, grass_points, member_test, random_nonmember, span_to_degree
from ncsphere.spectral.commutative import classical_quartic
from ncsphere.spectral.dirac import dirac_commutator, listed_commutator, spinor_scale
from ncsphere.spectral.oracle import ClockShiftOracle
from ncsphere.spectral.quartic import pi_map, quartic_invariant, quartic_operator
from ncsphere.spectral.reference import chern2_explicit_check, five_component_chain
from ncsphere.spectral.sphere import build_e_theta

GENERATORS = ("α", "α*", "β", "β*", "t")
PRESENTATIONS = [sphere_theta(), torus_theta(), sphere_comm(2), sphere_comm(4)]


def test_criterion_01_low_chern_characters_vanish(verdict):
    start = time.perf_counter()
    e = build_e_theta()
    ch0, ch1 = ch_even(e, 0), ch_even(e, 1)
    secs = time.perf_counter() - start
    ok = ch0.is_zero() and ch1.is_zero() and secs < 1.0
    assert verdict(1, "ch0(e) = 0 and ch1(e) = 0 with symbolic λ", ok, f"{secs:.2f} s, limit 1 s")


def test_criterion_02_b_of_ch2_vanishes(verdict):
    start = time.perf_counter()
    c = ch_even(build_e_theta(), 2)
    stats: dict = {}
    b = boundary_b(c, stats)
    secs = time.perf_counter() - start
    ok = b.is_zero() and stats["raw_terms"] >= 600 and secs < 10.0
    detail = f"{stats['raw_terms']} raw terms, {len(b)} survive, {secs:.2f} s"
    assert verdict(2, "b(ch2(e)) = 0 after at least 600 intermediate terms", ok, detail)


def test_criterion_03_ch2_five_components(verdict):
    ch2 = ch_even(build_e_theta(), 2)
    res = chern2_explicit_check(ch2, even_normalization(2))
    ok = res["ok"] and all(res["classical"].values())
    detail = f"mismatched {sorted(res['mismatch'])}, stray {len(res['stray'])}, λ=1 antisymmetrizations {sum(res['classical'].values())}/5"
    assert verdict(3, "ch2(e) matches the five-component expansion term for term", ok, detail)


def test_criterion_04_clifford_model(verdict):
    idem = all(matmul(idempotent_E(m), idempotent_E(m)) == idempotent_E(m) for m in (1, 2))
    idem = idem and all(idempotent_E_abstract(m) * idempotent_E_abstract(m) == idempotent_E_abstract(m) for m in (1, 2))
    low = all(ch_even(idempotent_E(m), j).is_zero() for m in (1, 2) for j in range(m))
    rng = random.Random(0)
    scans = []
    for ell in (1, 3):
        pts = [tuple(rational_sphere_point(rng, 2) for _ in range(ell)) for _ in range(100)]
        scans.append(odd_trace_scan(2, ell, pts))
    odd = all(r.ok and r.points >= 100 for r in scans)
    ok = idem and low and odd
    detail = f"E^2=E {idem}, ch_j(E)=0 for j<m {low}, odd traces zero at {[r.points for r in scans]} points {odd}"
    assert verdict(4, "Clifford idempotents, vanishing low characters, odd trace identities", ok, detail)


def test_criterion_05_dirac_commutators(verdict):
    exact = all(dirac_commutator(NCPoly.gen(sphere_theta(), g)) == listed_commutator(g) for g in GENERATORS)
    orc = ClockShiftOracle(5, Fraction(1, 5))
    dev = 0.0
    for g in GENERATORS:
        f = NCPoly.gen(sphere_theta(), g)
        for phi, psi in ((0.7, 0.3), (-1.2, 0.9)):
            dev = max(dev, float(np.abs(orc.spinor(dirac_commutator(f), phi, psi) - orc.dirac(f, phi, psi)).max()))
    ok = exact and dev < 1e-10
    assert verdict(5, "Dirac commutators of the five generators", ok, f"exact {exact}, numeric deviation {dev:.1e} at N=5, θ=1/5")


def test_criterion_06_quartic_identity(verdict):
    start = time.perf_counter()
    e = build_e_theta()
    q = quartic_invariant(e)
    cq = classical_quartic()
    agree = q.ok and q.c.is_constant() and q.c.at_one() == cq.c and cq.residual_zero
    orc = ClockShiftOracle(5, Fraction(1, 5))
    c = complex(q.c.evaluate(orc.lam))
    dev = 0.0
    for phi in (0.3, 0.7, 1.1):
        for psi in (-0.9, 0.2, 1.0):
            dev = max(dev, float(np.abs(orc.quartic(e, phi, psi) - c * orc.gamma5()).max()))
    secs = time.perf_counter() - start
    ok = agree and dev < 1e-9 and secs < 60
    detail = f"c = {q.c}, λ=1 model c = {cq.c}, residual terms {len(q.residual)}, grid deviation {dev:.1e}, {secs:.1f} s"
    assert verdict(6, "⟨(e-1/2)[D,e]^4⟩ = c γ5 with constant c", ok, detail)


def test_criterion_07_operator_image_of_ch2(verdict):
    e = build_e_theta()
    # unnormalized trace over the 4x4 factor: four times the normalized expectation
    traced = spinor_scale(quartic_operator(e), len(e))
    cycle = (pi_map(five_component_chain()) - traced).is_zero()
    full = (pi_map(ch_even(e, 2)) - spinor_scale(traced, even_normalization(2))).is_zero()
    ok = cycle and full
    detail = f"π(c) = Tr(quartic) {cycle}, π(ch2) = 12 Tr(quartic) {full}"
    assert verdict(7, "π(ch2(e)) equals the traced quartic expression", ok, detail)


def test_criterion_08_deformation_lemmas(verdict):
    mons = monomials_in_box(3)
    l1a = all(lemma1_check(x, y, m) for m in (FREE, CLASSICAL) for x in mons for y in mons)
    l1b = all(lemma1b_check(x, y) for x in mons for y in mons)
    stated = [twist_J_check(x)["minus"] for x in mons]
    l2 = all(stated)
    order = all(order_one_check(a, b) for a in mons for b in mons)
    assoc = all(star_associativity_check(x, y, z) for x in mons for y in mons for z in mons)
    ok = l1a and l1b and l2 and order and assoc
    detail = (
        f"1a {l1a}, 1b {l1b}, twisted-J phase λ^(-n1 n2) holds on {sum(stated)}/{len(mons)}, "
        f"order one {order}, associativity {assoc}"
    )
    assert verdict(8, "deformation lemmas, order one, star associativity for |n1|,|n2| <= 3", ok, detail)


def test_criterion_09_gr12_membership(verdict):
    suite = gr12_suite(3)
    members = all(ok and witness for ok, witness in suite.values())
    B = span_to_degree(gr12_relations(), 3)
    rng = random.Random(0)
    p = random_nonmember(rng)
    outside = any(evaluate_at(p, pt) for pt in grass_points())
    rejected = outside and not member_test(p, B).member
    ok = members and rejected
    detail = f"{sum(ok for ok, _ in suite.values())}/4 with reconstructed witnesses, random non-member rejected {rejected}"
    assert verdict(9, "Gr(1,2) commutativity memberships at degree 3", ok, detail)


def test_criterion_10_structural_properties(verdict):
    results = {}
    rng = random.Random(10)
    chains_ok = True
    for P in PRESENTATIONS:
        for _ in range(100):
            c = random_chain(P, rng, 2, n_terms=2, max_len=2)
            chains_ok = chains_ok and boundary_b(boundary_b(c)).is_zero()
            chains_ok = chains_ok and operator_B(operator_B(c)).is_zero()
            chains_ok = chains_ok and (boundary_b(operator_B(c)) + operator_B(boundary_b(c))).is_zero()
    results["b^2, B^2, bB+Bb"] = chains_ok
    confluent = True
    for P in PRESENTATIONS:
        for _ in range(1000):
            w = random_word(P, rng, max_len=5)
            confluent = confluent and NCPoly(P, P.rewrite_random(w, rng)) == normal_form(w, P)
    results["confluence"] = confluent
    involution = True
    for P in PRESENTATIONS:
        for _ in range(40):
            p, q = random_ncpoly(P, rng), random_ncpoly(P, rng)
            involution = involution and nc_adjoint(nc_adjoint(p)) == p and nc_adjoint(p * q) == nc_adjoint(q) * nc_adjoint(p)
    results["involution"] = involution
    leibniz = True
    S, embed = sphere_theta(), torus_embed()
    for _ in range(25):
        f = random_ncpoly(S, rng, n_terms=2, max_len=3)
        g = random_ncpoly(S, rng, n_terms=2, max_len=3)
        df, dg = dirac_commutator(f), dirac_commutator(g)
        rhs = CliffordElement(2, {k: v * embed(g) for k, v in df.terms.items()}) + CliffordElement(
            2, {k: embed(f) * v for k, v in dg.terms.items()}
        )
        leibniz = leibniz and dirac_commutator(f * g) == rhs
    results["Leibniz"] = leibniz
    ok = all(results.values())
    assert verdict(10, "structural properties on seeded random inputs", ok, ", ".join(f"{k} {v}" for k, v in results.items()))
