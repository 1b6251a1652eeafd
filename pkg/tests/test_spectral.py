import itertools
import random
from fractions import Fraction

import numpy as np
import pytest

from ncsphere.algebra import NCPoly, PhaseScalar, TrigCoeff, lambda_specialize, sphere_theta, torus_embed
from ncsphere.algebra.ncpoly import random_ncpoly
from ncsphere.chains import boundary_b, ch_even
from ncsphere.clifford import CliffordElement
from ncsphere.errors import PreconditionError, UnsupportedKindError
from ncsphere.spectral.commutative import classical_quartic, projection_matches_clifford
from ncsphere.spectral.dirac import (
    GAMMA5,
    commutator_table_check,
    dirac_commutator,
    listed_commutator,
    spinor_is_polynomial,
    spinor_scale,
)
from ncsphere.spectral.oracle import ClockShiftOracle, parse_theta
from ncsphere.spectral.quartic import cond_expect, pi_map, quartic_invariant, quartic_operator
from ncsphere.spectral.reference import chern2_explicit_check, five_component_chain
from ncsphere.spectral.sphere import build_e_theta, constant_projector, idempotent_suite, partial_trace

S = sphere_theta()


def gen(name):
    return NCPoly.gen(S, name)


@pytest.fixture(scope="module")
def e():
    return build_e_theta()


@pytest.fixture(scope="module")
def oracle():
    return ClockShiftOracle(5, Fraction(1, 5))


# -- the projection -----------------------------------------------------------

def test_e_theta_entries(e):
    t = gen("t")
    assert e[0][0] == t
    assert e[2][2] == 1 - t
    assert e[1][2] == gen("β*").scale(PhaseScalar.lam(1, -1))


def test_idempotent_suite(e):
    assert idempotent_suite(e).ok
    assert not idempotent_suite(build_e_theta(drop_phase=True)).ok
    assert idempotent_suite(constant_projector(S, (1, 1, 0, 0))).ok


def test_partial_trace_of_shifted_projection(e):
    half = PhaseScalar.const(Fraction(1, 2))
    shifted = [[x - half if i == j else x for j, x in enumerate(row)] for i, row in enumerate(e)]
    assert partial_trace(shifted).is_zero()


def test_classical_limit_is_quaternionic(e):
    h = lambda_specialize(S)
    e1 = [[h(x) for x in row] for row in e]
    assert idempotent_suite(e1).ok
    embed = torus_embed()
    assert projection_matches_clifford([[embed(x) for x in row] for row in e])


# -- Dirac commutators -------------------------------------------------------------

def test_dirac_of_t():
    want = CliffordElement(2, {(4,): NCPoly(torus_embed().target, {(): TrigCoeff.monomial(cpsi=1, coeff=complex(0, 1)) * PhaseScalar.const(Fraction(1, 2))})})
    assert dirac_commutator(gen("t")) == want


def test_dirac_of_unit():
    assert dirac_commutator(NCPoly.one(S)).is_zero()


def test_commutator_table():
    assert commutator_table_check().ok
    for g in ("α", "α*", "β", "β*", "t"):
        assert dirac_commutator(gen(g)) == listed_commutator(g)


def test_dirac_leibniz():
    rng = random.Random(6)
    embed = torus_embed()
    for _ in range(25):
        f = random_ncpoly(S, rng, n_terms=2, max_len=3)
        g = random_ncpoly(S, rng, n_terms=2, max_len=3)
        lhs = dirac_commutator(f * g)
        df, dg = dirac_commutator(f), dirac_commutator(g)
        ef, eg = embed(f), embed(g)
        rhs = CliffordElement(2, {k: v * eg for k, v in df.terms.items()}) + CliffordElement(
            2, {k: ef * v for k, v in dg.terms.items()}
        )
        assert lhs == rhs


def test_dirac_polynomial_up_to_degree_four():
    count = 0
    for vec in itertools.product(range(5), repeat=5):
        if sum(vec) > 4:
            continue
        w = S.from_vec(vec)
        if not S.is_normal(w):
            continue
        assert spinor_is_polynomial(dirac_commutator(NCPoly.from_word(S, w)))
        count += 1
    assert count > 50


def test_dirac_numeric(oracle):
    for g in ("α", "α*", "β", "β*", "t"):
        f = gen(g)
        sym = oracle.spinor(dirac_commutator(f), 0.7, 0.3)
        num = oracle.dirac(f, 0.7, 0.3)
        assert np.abs(sym - num).max() < 1e-10


# -- conditional expectation and the quartic -----------------------------------------

def test_cond_expect_basics():
    T = torus_embed().target
    one = NCPoly.one(T)
    eye = [[CliffordElement(2, {(): one}) if i == j else CliffordElement(2, {}) for j in range(4)] for i in range(4)]
    assert cond_expect(eye) == CliffordElement(2, {(): one})
    s = CliffordElement(2, {(1, 3): one})
    m = [[s.__class__(2, {k: v.scale(PhaseScalar.const(i + 1)) for k, v in s.terms.items()}) if i == j else CliffordElement(2, {}) for j in range(4)] for i in range(4)]
    assert cond_expect(m) == CliffordElement(2, {(1, 3): one.scale(PhaseScalar.const(Fraction(10, 4)))})


def test_quartic_is_constant_multiple_of_gamma5(e):
    q = quartic_invariant(e)
    assert q.ok
    assert set(q.operator.terms) == {GAMMA5}
    coef = q.operator.terms[GAMMA5]
    assert set(coef.terms) == {()}
    assert q.c == PhaseScalar.const(Fraction(3, 4))


def test_quartic_classical_cross_check(e):
    cq = classical_quartic()
    assert cq.residual_zero
    assert cq.c == Fraction(3, 4)
    assert quartic_invariant(e).c.at_one() == cq.c


def test_quartic_numeric_grid(e, oracle):
    c = complex(quartic_invariant(e).c.evaluate(oracle.lam))
    for phi in (0.3, 0.7, 1.1):
        for psi in (-0.9, 0.2, 1.0):
            assert np.abs(oracle.quartic(e, phi, psi) - c * oracle.gamma5()).max() < 1e-9


# -- ch2 and its operator image ------------------------------------------------

def test_five_components(e):
    ch2 = ch_even(e, 2)
    assert chern2_explicit_check(ch2, 12)["ok"]
    assert not chern2_explicit_check(ch2, -12)["ok"]
    c = five_component_chain()
    assert boundary_b(c).is_zero()


def test_pi_of_cycle_is_traced_quartic(e):
    # unnormalized trace over the 4x4 factor, so four times the normalized one
    traced = spinor_scale(quartic_operator(e), 4)
    assert (pi_map(five_component_chain()) - traced).is_zero()
    assert (pi_map(ch_even(e, 2)) - spinor_scale(traced, 12)).is_zero()


def test_pi_numeric(e, oracle):
    c = five_component_chain()
    sym = oracle.spinor(pi_map(c), 0.5, 0.4)
    assert np.abs(oracle.pi_chain(c, 0.5, 0.4) - sym).max() < 1e-9


# -- oracle -----------------------------------------------------------------------

def test_oracle_projection(e, oracle):
    X = oracle.matrix(e, 0.6, -0.3)
    assert np.abs(X @ X - X).max() < 1e-12
    assert np.abs(X - X.conj().T).max() < 1e-12


def test_oracle_errors():
    with pytest.raises(UnsupportedKindError):
        parse_theta(0.2)
    with pytest.raises(PreconditionError):
        ClockShiftOracle(6, Fraction(1, 5))
