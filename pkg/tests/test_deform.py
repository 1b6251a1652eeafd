import random

import pytest

from ncsphere.algebra import NCPoly, PhaseScalar, torus_theta
from ncsphere.deform import (
    CLASSICAL,
    FREE,
    J,
    J_tilde,
    J_tilde_inv,
    OperatorExpr,
    bidegree,
    canonicalize_random,
    commut_check,
    dirac_atom,
    dump_expr,
    j_conj,
    left_twist,
    lemma1_check,
    lemma1b_check,
    monomial,
    monomials_in_box,
    numeric_confirmation,
    order_one_check,
    push_weight,
    right_twist,
    star_associativity_check,
    star_left,
    star_right,
    twist_J_check,
    weight,
)
from ncsphere.errors import PreconditionError

U, V = monomial(1, 0), monomial(0, 1)
MONS = monomials_in_box(3)


def lam(k):
    return PhaseScalar.lam(k)


# -- bidegrees and twists -------------------------------------------------------------

def test_bidegree():
    T = torus_theta()
    g = {n: NCPoly.gen(T, n) for n in T.order}
    assert bidegree(U) == (1, 0)
    assert bidegree(g["u*"] * g["v"] * g["v"]) == (-1, 2)
    assert bidegree(()) == (0, 0)
    assert bidegree(j_conj(monomial(2, -1))) == (-2, 1)
    with pytest.raises(PreconditionError):
        bidegree(g["u"] + g["v"])


def test_twists_of_generators():
    assert left_twist(U) == OperatorExpr.atom(U)
    assert left_twist(V) == OperatorExpr.atom(V) * weight(1, 0)
    assert right_twist(U) == OperatorExpr.atom(U) * weight(0, 1)
    assert dump_expr(left_twist(V)) == "(1) · v·Λ^(1,0)"


def test_push_rule():
    assert push_weight([("W", 1, 0), U]) == OperatorExpr.atom(U, coeff=lam(1)) * weight(1, 0)
    assert push_weight([("W", 0, 1), U]) == OperatorExpr.atom(U) * weight(0, 1)
    assert push_weight([("W", 1, 0), ("W", 0, 1)]) == push_weight([("W", 0, 1), ("W", 1, 0)])
    # weight exponents combine linearly in the bidegree
    x = monomial(2, -3)
    assert push_weight([("W", 2, 5), x]) == OperatorExpr.atom(x, coeff=lam(4 - 15)) * weight(2, 5)


def test_star_products():
    assert star_left(U, V) == [(PhaseScalar.one(), (U, V))]
    assert star_left(V, U) == [(lam(1), (V, U))]
    assert star_right(U, V) == [(lam(1), (U, V))]
    assert left_twist(V) * left_twist(U) == left_twist(star_left(V, U))


def test_star_associativity_exhaustive():
    assert all(star_associativity_check(x, y, z) for x in MONS for y in MONS for z in MONS)


# -- Lemma 1 ---------------------------------------------------------------------------

def test_lemma1a_examples():
    # a commuting base: [u, v] = 0 there, so the twists commute
    lhs = left_twist(U, CLASSICAL) * right_twist(V, CLASSICAL) - right_twist(V, CLASSICAL) * left_twist(U, CLASSICAL)
    assert lhs.is_zero()
    assert lemma1_check(monomial(2, 1), monomial(1, -1))
    x = monomial(1, 2)
    lhs = left_twist(x) * right_twist(x) - right_twist(x) * left_twist(x)
    assert lhs.is_zero()


@pytest.mark.parametrize("model", [FREE, CLASSICAL], ids=["free", "commuting"])
def test_lemma1a_exhaustive(model):
    assert all(lemma1_check(x, y, model) for x in MONS for y in MONS)


def test_lemma1b_exhaustive():
    assert all(lemma1b_check(x, y) for x in MONS for y in MONS)


# -- the twisted J ---------------------------------------------------------------------

def test_twist_J_without_cross_term():
    for x in (U, V, monomial(-3, 0), monomial(0, 2)):
        r = twist_J_check(x)
        assert r["minus"] and r["plus"]


def test_twist_J_antilinear_phase_exhaustive():
    assert all(twist_J_check(x)["plus"] for x in MONS)


def test_twist_J_uv_phase():
    r = twist_J_check(monomial(1, 1))
    want = right_twist(j_conj(monomial(1, 1))).scale(lam(1))
    assert r["lhs"] == want


def test_J_tilde_squared():
    assert J_tilde() * J_tilde() == J() * J()
    assert J_tilde() * J_tilde_inv() == OperatorExpr.scalar(1)


def test_J_conjugates_scalars():
    assert J() * OperatorExpr.scalar(lam(1)) == OperatorExpr.scalar(lam(-1)) * J()


# -- order one -------------------------------------------------------------------------

def test_order_one_examples():
    assert order_one_check(U, V)
    assert order_one_check(U, U)
    assert commut_check(U, U)


def test_order_one_exhaustive():
    gens = [monomial(1, 0), monomial(-1, 0), monomial(0, 1), monomial(0, -1)]
    assert all(order_one_check(a, b) for a in gens for b in gens)
    assert all(order_one_check(a, b) and commut_check(a, b) for a in MONS for b in MONS)


def test_order_one_needs_D_to_commute_with_functions():
    # in the free base nothing commutes, so the check is not vacuous
    a = dirac_atom(U)
    x = left_twist(a, FREE)
    y = J_tilde(FREE) * left_twist(V, FREE).adjoint() * J_tilde_inv(FREE)
    assert not (x * y - y * x).is_zero()


# -- canonical forms -----------------------------------------------------------------------

def _random_factors(rng):
    out = []
    for _ in range(rng.randint(2, 7)):
        k = rng.random()
        if k < 0.45:
            out.append(monomial(rng.randint(-2, 2), rng.randint(-2, 2)))
        elif k < 0.8:
            out.append(("W", rng.randint(-2, 2), rng.randint(-2, 2), rng.randint(-1, 1)))
        else:
            out.append(rng.choice(["J", "Jinv"]))
    return out


@pytest.mark.parametrize("model", [FREE, CLASSICAL], ids=["free", "commuting"])
def test_canonical_confluence(model):
    rng = random.Random(11)
    for _ in range(300):
        fs = _random_factors(rng)
        target = push_weight(fs, model)
        for _ in range(3):
            assert canonicalize_random(fs, rng, model) == target


def test_numeric_confirmation():
    dev = numeric_confirmation()
    assert dev["lemma1a"] < 1e-10
    assert dev["lemma1b"] < 1e-10
    assert dev["canonical"] < 1e-10
    assert dev["twist_J_plus"] < 1e-10
    assert dev["twist_J_minus"] > 0.1
