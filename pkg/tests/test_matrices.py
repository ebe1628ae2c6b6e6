"""Matrix algebra and group enumeration."""

import random

import pytest

import oracles
from sl2q.field import make_field
from sl2q.matrices import (
    Mat2,
    conjugate,
    det,
    enumerate_sl2,
    from_literal,
    identity,
    is_central,
    mat,
    mat_inv,
    mat_mul,
    pack,
    sl2_order,
    trace,
)


def test_count_matches_filter_oracle():
    for q in (2, 3):
        F = oracles.field_for(q)
        listed = [(M.a, M.b, M.c, M.d) for M in enumerate_sl2(F)]
        assert sorted(listed) == sorted(oracles.sl2_by_filter(F))


@pytest.mark.parametrize("q,count", [(2, 6), (3, 24), (4, 60), (5, 120), (8, 504), (9, 720)])
def test_group_order(q, count):
    F = oracles.field_for(q)
    assert sl2_order(q) == count
    assert sum(1 for _ in enumerate_sl2(F)) == count


def test_enumeration_is_lexicographic_and_distinct():
    for q in (3, 4, 5):
        F = oracles.field_for(q)
        tuples = [(M.a, M.b, M.c, M.d) for M in enumerate_sl2(F)]
        assert tuples == sorted(tuples)
        assert len(set(tuples)) == len(tuples)
    assert next(iter(enumerate_sl2(make_field(2, 1)))) == Mat2(0, 1, 1, 0, 2)


def test_mat_mul_examples():
    F = make_field(5, 1)
    X = mat(F, 1, 1, 0, 1)
    assert mat_mul(F, X, identity(F)) == X
    assert mat_mul(F, X, X) == mat(F, 1, 2, 0, 1)


def test_det_multiplicative():
    F = make_field(3, 2)
    rng = random.Random(7)
    elems = list(enumerate_sl2(F))
    for _ in range(50):
        X, Y = rng.choice(elems), rng.choice(elems)
        assert det(F, mat_mul(F, X, Y)) == F.mul(det(F, X), det(F, Y))


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_inverse_formula_everywhere(q):
    F = oracles.field_for(q)
    I = identity(F)
    neg = F._neg
    for X in enumerate_sl2(F):
        inv = mat_inv(F, X)
        assert inv == Mat2(X.d, neg[X.b], neg[X.c], X.a, q)
        assert mat_mul(F, X, inv) == I


def test_inverse_examples_and_rejection():
    F = make_field(5, 1)
    assert mat_inv(F, identity(F)) == identity(F)
    assert mat_inv(F, mat(F, 1, 1, 0, 1)) == mat(F, 1, 4, 0, 1)
    with pytest.raises(ValueError, match="determinant"):
        mat_inv(F, mat(F, 2, 0, 0, 1))


def test_conjugate_by_identity():
    F = make_field(7, 1)
    A = mat(F, 3, 1, 2, 4)
    assert conjugate(F, A, identity(F)) == A


def test_conjugation_preserves_trace_exhaustive_q5():
    F = make_field(5, 1)
    elems = list(enumerate_sl2(F))
    for A in elems:
        tA = trace(F, A)
        for C in elems:
            assert trace(F, conjugate(F, A, C)) == tA


def test_conjugate_diagonal_closed_form():
    F = make_field(5, 1)
    C = mat(F, 1, 2, 3, 2)  # det = 2 - 6 = 1
    r, s = 2, 3
    got = conjugate(F, mat(F, r, 0, 0, s), C)
    mul, sub, neg = F.mul, F.sub, F.neg
    a, b, c, d = 1, 2, 3, 2
    assert got == mat(
        F,
        sub(mul(mul(a, d), r), mul(mul(b, c), s)),
        mul(mul(b, d), sub(r, s)),
        neg(mul(mul(a, c), sub(r, s))),
        sub(mul(mul(a, d), s), mul(mul(b, c), r)),
    )


def test_conjugation_right_action():
    F3 = make_field(3, 1)
    elems = list(enumerate_sl2(F3))
    for A in elems:
        for C1 in elems:
            AC1 = conjugate(F3, A, C1)
            for C2 in elems:
                assert conjugate(F3, A, mat_mul(F3, C1, C2)) == conjugate(F3, AC1, C2)
    F9 = make_field(3, 2)
    rng = random.Random(11)
    elems9 = list(enumerate_sl2(F9))
    for _ in range(200):
        A, C1, C2 = (rng.choice(elems9) for _ in range(3))
        assert conjugate(F9, A, mat_mul(F9, C1, C2)) == conjugate(F9, conjugate(F9, A, C1), C2)


@pytest.mark.parametrize("q,centrals", [(2, 1), (3, 2), (4, 1), (5, 2), (8, 1), (9, 2)])
def test_center_size(q, centrals):
    F = oracles.field_for(q)
    assert sum(is_central(F, M) for M in enumerate_sl2(F)) == centrals


def test_is_central_examples():
    F = make_field(5, 1)
    assert is_central(F, identity(F))
    assert is_central(F, mat(F, 4, 0, 0, 4))
    assert not is_central(F, mat(F, 1, 1, 0, 1))
    assert not is_central(F, mat(F, 2, 0, 0, 3))


def test_closure():
    for q in (2, 3, 4):
        F = oracles.field_for(q)
        elems = list(enumerate_sl2(F))
        packed = {pack(M) for M in elems}
        for X in elems:
            for Y in elems:
                assert pack(mat_mul(F, X, Y)) in packed
    F9 = make_field(3, 2)
    elems9 = list(enumerate_sl2(F9))
    packed9 = {pack(M) for M in elems9}
    rng = random.Random(3)
    for _ in range(300):
        assert pack(mat_mul(F9, rng.choice(elems9), rng.choice(elems9))) in packed9


def test_pack_is_injective():
    F = make_field(3, 1)
    assert len({pack(M) for M in enumerate_sl2(F)}) == 24


def test_field_mismatch_rejected():
    F5, F7 = make_field(5, 1), make_field(7, 1)
    X5 = mat(F5, 1, 1, 0, 1)
    with pytest.raises(ValueError, match="mismatch"):
        mat_mul(F7, X5, identity(F7))
    with pytest.raises(ValueError, match="mismatch"):
        trace(F7, X5)


def test_literal_round_trip():
    F = make_field(2, 2)
    M = mat(F, 2, 1, 3, 0)
    assert from_literal(F, str(M)) == M
    assert str(M) == "[[2,1],[3,0]]"


def test_literal_negative_entries():
    F5 = make_field(5, 1)
    assert from_literal(F5, "[[1,-1],[0,1]]") == mat(F5, 1, 4, 0, 1)
    F4 = make_field(2, 2)
    with pytest.raises(ValueError, match="prime fields"):
        from_literal(F4, "[[1,-1],[0,1]]")


def test_literal_rejects_garbage():
    F = make_field(5, 1)
    for text in ("[[1,2],[3]]", "[1,2,3,4]", "nonsense", "[[1,2],[3,4.5]]", "[[1,2],[3,9]]"):
        with pytest.raises(ValueError):
            from_literal(F, text)
