import random

import pytest

from ncsphere.algebra import NCPoly
from ncsphere.algebra.presentation import grass
from ncsphere.errors import DegreeOverflowError
from ncsphere.ideal import (
    RelationSet,
    dump_witness,
    evaluate_at,
    gr12_relations,
    gr12_suite,
    gr12_targets,
    grass_points,
    member_test,
    random_nonmember,
    reconstruct,
    span_to_degree,
)

G = grass(2)


def e(name):
    return NCPoly.gen(G, name)


@pytest.fixture(scope="module")
def basis3():
    return span_to_degree(gr12_relations(), 3)


def test_basis_at_relation_degree_is_the_relations():
    R = RelationSet.from_presentation(G)
    B = span_to_degree(R, 2)
    assert B.products == len(R.relations) == len(B)


def test_basis_size_is_deterministic(basis3):
    again = span_to_degree(gr12_relations(), 3)
    assert (basis3.products, len(basis3)) == (again.products, len(again)) == (93, 69)
    assert list(basis3.rows) == list(again.rows)


def test_empty_relation_set():
    B = span_to_degree(RelationSet(G, ()), 2)
    assert len(B) == 0
    assert not member_test(e("e11"), B)
    assert member_test(NCPoly.zero(G), B)


def test_trace_relation_is_member(basis3):
    res = member_test(e("e11") + e("e22") - 1, basis3)
    assert res.member
    assert reconstruct(res.witness, gr12_relations()) == e("e11") + e("e22") - 1


def test_single_entry_is_not_member(basis3):
    res = member_test(e("e12"), basis3)
    assert not res.member
    assert res.witness == []
    assert res.remainder


def test_gr12_suite_with_witnesses():
    out = gr12_suite(3)
    assert set(out) == set(gr12_targets())
    for name, (ok, witness) in out.items():
        assert ok, name
        assert witness


def test_witness_rows_reexpand(basis3):
    R = gr12_relations()
    for p in gr12_targets().values():
        res = member_test(p, basis3)
        assert reconstruct(res.witness, R) == p
        rows = dump_witness(res.witness).splitlines()
        assert len(rows) == len(res.witness)
        assert all(row.count(" | ") == 3 for row in rows)


def test_monotone_in_degree():
    R = gr12_relations()
    for p in gr12_targets().values():
        assert member_test(p, span_to_degree(R, 3))
        assert member_test(p, span_to_degree(R, 4))


def test_targets_already_in_degree_two_span():
    # the linear trace relation times a generator already has degree two
    B = span_to_degree(gr12_relations(), 2)
    assert all(member_test(p, B) for p in gr12_targets().values())


def test_points_satisfy_relations():
    R = gr12_relations()
    for pt in grass_points():
        assert all(not evaluate_at(r, pt) for r in R.relations)


def test_random_nonmembers_rejected(basis3):
    rng = random.Random(3)
    for _ in range(20):
        p = random_nonmember(rng)
        assert any(evaluate_at(p, pt) for pt in grass_points())
        assert not member_test(p, basis3)


def test_degree_errors(basis3):
    with pytest.raises(DegreeOverflowError):
        member_test(e("e11") * e("e11") * e("e12") * e("e21"), basis3)
    with pytest.raises(DegreeOverflowError):
        span_to_degree(gr12_relations(), 1)


def test_zero_relation_rejected():
    with pytest.raises(ValueError):
        RelationSet(G, (NCPoly.zero(G),))
