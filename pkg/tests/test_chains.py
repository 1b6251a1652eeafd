import random

import pytest

from ncsphere.algebra import NCPoly, PhaseScalar, lambda_specialize, sphere_comm, sphere_theta, torus_theta
from ncsphere.chains import (
    TensorChain,
    boundary_b,
    ch_even,
    ch_odd,
    even_normalization,
    operator_B,
    random_chain,
    transgression_ratio,
)
from ncsphere.clifford import idempotent_E
from ncsphere.errors import PreconditionError, ShapeError
from ncsphere.spectral.sphere import build_e_theta, constant_projector

PRESENTATIONS = [sphere_theta(), torus_theta(), sphere_comm(2), sphere_comm(4)]


def gen(P, name):
    return NCPoly.gen(P, name)


def test_b_degree_one():
    S = sphere_theta()
    a, b = gen(S, "α"), gen(S, "β")
    c = TensorChain.from_tensor([a, b])
    assert boundary_b(c) == TensorChain.from_tensor([a * b - b * a])


def test_B_degree_zero():
    S = sphere_theta()
    a = gen(S, "α")
    assert operator_B(TensorChain.from_tensor([a])) == TensorChain.from_tensor([NCPoly.one(S), a])


def test_normalization_drops_scalar_entries():
    S = sphere_theta()
    a, b = gen(S, "α"), gen(S, "t")
    c = TensorChain.from_tensor([a, b, gen(S, "β")])
    junk = TensorChain.from_tensor([b, NCPoly.one(S).scale(3), a])
    assert junk.is_zero()
    assert c + junk == c
    shifted = TensorChain.from_tensor([a, b + 5, gen(S, "β")])
    assert shifted == c


@pytest.mark.parametrize("P", PRESENTATIONS, ids=lambda P: P.name)
def test_b_squared_zero(P):
    rng = random.Random(17)
    for _ in range(100):
        c = random_chain(P, rng, 3, n_terms=2, max_len=2)
        assert boundary_b(boundary_b(c)).is_zero()


@pytest.mark.parametrize("P", PRESENTATIONS, ids=lambda P: P.name)
def test_B_squared_zero(P):
    rng = random.Random(18)
    for k in range(100):
        c = random_chain(P, rng, k % 3, n_terms=2, max_len=2)
        assert operator_B(operator_B(c)).is_zero()


@pytest.mark.parametrize("P", PRESENTATIONS, ids=lambda P: P.name)
def test_bB_plus_Bb_zero(P):
    rng = random.Random(19)
    for _ in range(100):
        c = random_chain(P, rng, 2, n_terms=2, max_len=2)
        assert (boundary_b(operator_B(c)) + operator_B(boundary_b(c))).is_zero()


def test_low_chern_characters_of_e_theta():
    e = build_e_theta()
    assert ch_even(e, 0).is_zero()
    assert ch_even(e, 1).is_zero()
    assert not ch_even(e, 2).is_zero()


def test_b_ch2_counts_raw_terms():
    stats = {}
    assert boundary_b(ch_even(build_e_theta(), 2), stats).is_zero()
    assert stats["raw_terms"] >= 600


def test_ch0_trace_identity():
    P = sphere_theta()
    assert ch_even(constant_projector(P, (1, 0)), 0).is_zero()
    c = ch_even(constant_projector(P, (1, 1, 1, 0)), 0)
    want = TensorChain.from_tensor([NCPoly.one(P)], even_normalization(0))
    assert c == want


def test_ch1_clifford_m1_nonzero():
    assert not ch_even(idempotent_E(1), 1).is_zero()


def test_shape_error():
    P = sphere_theta()
    with pytest.raises(ShapeError):
        ch_even([[gen(P, "t"), gen(P, "α")]], 1)


def test_odd_character_of_torus_generator():
    T = torus_theta()
    u, ui = gen(T, "u"), gen(T, "u*")
    c = ch_odd([[u]], [[ui]], 1)
    assert c == TensorChain.from_tensor([u, ui]) - TensorChain.from_tensor([ui, u])
    assert ch_odd([[NCPoly.one(T)]], [[NCPoly.one(T)]], 1).is_zero()
    with pytest.raises(PreconditionError):
        ch_odd([[u]], [[u]], 1)


def test_transgression_ratios():
    T = torus_theta()
    u, ui = [[gen(T, "u")]], [[gen(T, "u*")]]
    for n in (1, 2):
        r = transgression_ratio(u, n, ui)
        assert r.verdict == "proportional" and r.ratio == 1
    assert transgression_ratio(build_e_theta(), 0).verdict == "both zero"
    assert transgression_ratio(constant_projector(sphere_theta(), (1, 0)), 0).ok
    # measured for the even normalization; constant in n
    E = idempotent_E(1)
    assert transgression_ratio(E, 0).verdict == "both zero"
    ratios = [transgression_ratio(E, n).ratio for n in (1, 2)]
    assert ratios == [-1, -1]


def _specialize_chain(c: TensorChain, h) -> TensorChain:
    out = TensorChain.zero(h.target, c.degree)
    for tensor, coeff in c.terms.items():
        entries = [h(NCPoly.from_word(c.pres, w)) for w in tensor]
        out = out + TensorChain.from_tensor(entries, PhaseScalar.const(coeff.at_one()))
    return out


def test_lambda_one_specialization_commutes_with_chern():
    S = sphere_theta()
    h = lambda_specialize(S)
    e = build_e_theta()
    e1 = [[h(x) for x in row] for row in e]
    for n in (0, 1, 2):
        assert ch_even(e1, n) == _specialize_chain(ch_even(e, n), h)
