import random
from fractions import Fraction

import numpy as np
import pytest

from ncsphere.algebra import NCPoly, PhaseScalar, sphere_comm
from ncsphere.chains import ch_even, matmul
from ncsphere.clifford import (
    CliffordElement,
    chirality,
    cl_trace,
    gamma_vector,
    idempotent_E,
    idempotent_E_abstract,
    odd_trace_scan,
    qi_matrix_mul,
    rational_sphere_point,
    spin_rep_m2,
)
from ncsphere.errors import PreconditionError, UnsupportedKindError
from ncsphere.spectral.sphere import mat_adjoint


def e(m, *idx):
    return CliffordElement.basis(m, *idx)


def test_anticommutation():
    assert e(2, 1) * e(2, 2) == -(e(2, 2) * e(2, 1))
    assert e(2, 3) * e(2, 3) == CliffordElement.scalar(2, 1)


def test_gamma_vector_squares_to_norm():
    P = sphere_comm(4)
    xi = [NCPoly.gen(P, f"ξ{i}") for i in range(1, 5)]
    g = gamma_vector(2, xi)
    norm = sum((x * x for x in xi), NCPoly.zero(P))
    assert g * g == CliffordElement.scalar(2, norm)


@pytest.mark.parametrize("m", [1, 2])
def test_chirality_anticommutes(m):
    gam = chirality(m)
    assert gam * gam == CliffordElement.scalar(m, 1)
    for i in range(1, 2 * m + 1):
        assert (gam * e(m, i) + e(m, i) * gam).is_zero()


def test_trace_values():
    assert cl_trace(CliffordElement.scalar(2, 1)) == 4
    rng = random.Random(2)
    for _ in range(20):
        a = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(4)]
        b = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(4)]
        got = cl_trace(gamma_vector(2, a) * gamma_vector(2, b))
        assert got == 4 * sum(x * y for x, y in zip(a, b))
    # γ is orthogonal to the lower filtration
    assert cl_trace(e(2, 1) * e(2, 2) * chirality(2)) == 0


def test_spin_rep_matches_abstract_products():
    rep = spin_rep_m2()
    subsets = [()] + [(i,) for i in range(1, 5)] + [(1, 2), (1, 3), (2, 4), (1, 2, 3), (1, 2, 3, 4)]
    for s in subsets:
        for t in subsets:
            x, y = e(2, *s), e(2, *t)
            assert rep.image(x * y) == qi_matrix_mul(rep.image(x), rep.image(y))


def test_spin_rep_anticommutators():
    g = spin_rep_m2().numeric()
    for i in range(4):
        assert np.allclose(g[i], g[i].conj().T)
        assert abs(np.trace(g[i])) < 1e-15
        for j in range(4):
            assert np.allclose(g[i] @ g[j] + g[j] @ g[i], 2 * (i == j) * np.eye(4))
    g5 = g[4]
    assert np.allclose(g5 @ g5, np.eye(4))
    assert abs(np.trace(g5)) < 1e-15
    assert np.allclose(g[0] @ g[1] @ g[2] @ g[3], g5)


@pytest.mark.parametrize("m", [1, 2])
def test_idempotent(m):
    E = idempotent_E(m)
    assert matmul(E, E) == E
    assert mat_adjoint(E) == E
    A = idempotent_E_abstract(m)
    assert A * A == A


def _evaluate(p, point):
    total = 0
    for w, c in p.terms.items():
        v = complex(c.at_one())
        for g, k in w:
            v *= point[g] ** k
        total += v
    return total


def test_pole_value():
    E = idempotent_E(2)
    point = {"ξ1": 0, "ξ2": 0, "ξ3": 0, "ξ4": 0, "t": 1}
    got = np.array([[_evaluate(x, point) for x in row] for row in E])
    g5 = spin_rep_m2().numeric()[4]
    assert np.allclose(got, (np.eye(4) + g5) / 2)


@pytest.mark.parametrize("m", [1, 2])
def test_low_chern_characters_vanish(m):
    E = idempotent_E(m)
    for j in range(m):
        assert ch_even(E, j).is_zero()
    assert not ch_even(E, m).is_zero()


def test_odd_trace_scan():
    rng = random.Random(0)
    for ell in (1, 3):
        pts = [tuple(rational_sphere_point(rng, 2) for _ in range(ell)) for _ in range(100)]
        rep = odd_trace_scan(2, ell, pts)
        assert rep.ok and rep.points == 100


@pytest.mark.parametrize("m", [1, 2])
def test_odd_trace_symbolic_degree_one(m):
    A = idempotent_E_abstract(m)
    P = sphere_comm(2 * m)
    shifted = A - CliffordElement.scalar(m, NCPoly.const(P, PhaseScalar.const(Fraction(1, 2))))
    assert not cl_trace(shifted)


def test_odd_trace_preconditions():
    with pytest.raises(PreconditionError):
        odd_trace_scan(2, 2, [])
    with pytest.raises(PreconditionError):
        odd_trace_scan(2, 1, [(((Fraction(1), 0, 0, 0), Fraction(1)),)])
    with pytest.raises(UnsupportedKindError):
        idempotent_E(3)
