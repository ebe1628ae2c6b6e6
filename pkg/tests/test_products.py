"""Class products: orbit methods against each other, the fixed-factor
product against double enumeration, and the headline minimum values."""

import random

import pytest

import oracles
from sl2q.classes import ClassLabel, class_table, classify
from sl2q.field import make_field
from sl2q.matrices import conjugate, enumerate_sl2, identity, mat, trace
from sl2q.products import (
    ProductReport,
    class_product_labels,
    conjugacy_orbit,
    label_trace,
    min_product_classes,
    product_report,
    product_trace_set,
)

ORACLE_QS = [2, 3, 4, 5, 7, 8, 9]


@pytest.mark.parametrize("q", ORACLE_QS)
def test_generator_orbits_match_full_enumeration(q):
    F = oracles.field_for(q)
    for e in class_table(F).entries:
        fast = conjugacy_orbit(F, e.rep)
        assert fast == conjugacy_orbit(F, e.rep, method="full")
        assert len(fast) == e.size


def test_orbit_rejects_bad_input():
    F = make_field(5, 1)
    with pytest.raises(ValueError, match="determinant"):
        conjugacy_orbit(F, mat(F, 2, 0, 0, 1))
    with pytest.raises(ValueError, match="unknown orbit method"):
        conjugacy_orbit(F, identity(F), method="magic")


@pytest.mark.parametrize("q", [2, 3, 4])
def test_products_match_double_enumeration(q):
    F = oracles.field_for(q)
    table = class_table(F)
    for i, ea in enumerate(table.entries):
        for eb in table.entries[i:]:
            oracle = {
                classify(F, mat(F, *t))
                for t in oracles.double_product_tuples(F, ea.rep, eb.rep)
            }
            assert class_product_labels(F, ea.rep, eb.rep) == oracle


def test_central_factor_collapses():
    for q in (5, 8):
        F = oracles.field_for(q)
        table = class_table(F)
        for ze in table.entries:
            if ze.label.kind != "Z":
                continue
            for e in table.entries:
                labels = class_product_labels(F, ze.rep, e.rep)
                assert len(labels) == 1


def test_identity_factor_gives_other_class():
    F = make_field(5, 1)
    B = mat(F, 0, 1, 4, 1)
    assert class_product_labels(F, identity(F), B) == {classify(F, B)}
    assert product_trace_set(F, identity(F), B) == {trace(F, B)}


def test_even_optimal_pair_gf4():
    F = make_field(2, 2)
    t = class_table(F)
    labels = class_product_labels(F, t.rep(ClassLabel("U", 1)), t.rep(ClassLabel("W", 2)))
    assert len(labels) == 3
    assert labels == {ClassLabel("D", 2), ClassLabel("U", 1, True), ClassLabel("W", 3)}


def test_gf3_pair_with_two_classes():
    F = make_field(3, 1)
    t = class_table(F)
    nc = t.noncentral_labels()
    assert any(
        len(class_product_labels(F, t.rep(a), t.rep(b))) == 2
        for i, a in enumerate(nc) for b in nc[i:]
    )


def test_report_examples():
    F5 = make_field(5, 1)
    r = product_report(F5, ClassLabel("U", 1, True), ClassLabel("U", 1, False))
    assert r.num_classes == 4
    assert set(r.labels) == {ClassLabel("D", 2), ClassLabel("U", 1, True),
                             ClassLabel("U", 1, False), ClassLabel("W", 4)}
    F7 = make_field(7, 1)
    e = ClassLabel("U", 1, True)
    assert product_report(F7, e, e).num_classes == 5
    # central times anything stays a single class
    for q in (5, 8):
        F = oracles.field_for(q)
        table = class_table(F)
        for lz in table.labels():
            if lz.kind != "Z":
                continue
            for lb in table.labels():
                assert product_report(F, lz, lb).num_classes == 1


def test_self_product_of_square_unipotent_gf5():
    # the square witness value is 0 here, so the product picks up the
    # central class rather than the square unipotent one
    F = make_field(5, 1)
    t = class_table(F)
    E = t.rep(ClassLabel("U", 1, True))
    assert class_product_labels(F, E, E) == {
        ClassLabel("Z", 1), ClassLabel("U", 1, False),
        ClassLabel("U", 4, True), ClassLabel("W", 1),
    }


@pytest.mark.parametrize("q", ORACLE_QS)
def test_product_symmetric_in_operands(q):
    F = oracles.field_for(q)
    table = class_table(F)
    labels = table.labels()
    for la in labels:
        for lb in labels:
            ra = product_report(F, la, lb)
            rb = product_report(F, lb, la)
            assert ra.num_classes == rb.num_classes
            assert ra.labels == rb.labels


@pytest.mark.parametrize("q,expected", [(2, 1), (3, 2), (4, 3), (5, 4), (7, 5),
                                        (8, 7), (9, 6), (11, 7), (13, 8)])
def test_min_product_classes(q, expected):
    F = oracles.field_for(q)
    value, (la, lb) = min_product_classes(F)
    assert value == expected
    assert la.kind != "Z" and lb.kind != "Z"
    assert product_report(F, la, lb).num_classes == value


def test_split_class_covers_all_traces():
    F = make_field(5, 1)
    A = mat(F, 2, 0, 0, 3)
    B = mat(F, 1, 1, 0, 1)
    assert product_trace_set(F, A, B) == frozenset(range(5))


def test_even_trace_exclusion_gf4():
    F = make_field(2, 2)
    t = class_table(F)
    for w in (2, 3):
        ts = product_trace_set(F, t.rep(ClassLabel("U", 1)), t.rep(ClassLabel("W", w)))
        assert ts == frozenset(range(4)) - {w}


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13])
def test_trace_count_vs_class_count_bounds(q):
    # classes sharing a trace: only the repeated-eigenvalue traces can host
    # several (central + both square variants), giving slack at most 4 for
    # odd q (both such traces saturate, e.g. split self-products at q = 5)
    # and 1 for even q
    F = oracles.field_for(q)
    table = class_table(F)
    nc = table.noncentral_labels()
    slack_cap = 4 if q % 2 else 1
    for i, la in enumerate(nc):
        for lb in nc[i:]:
            ra, rb = table.rep(la), table.rep(lb)
            n_classes = len(class_product_labels(F, ra, rb))
            n_traces = len(product_trace_set(F, ra, rb))
            assert n_traces <= n_classes <= n_traces + slack_cap


def test_slack_four_is_attained_at_q5():
    F = make_field(5, 1)
    A = mat(F, 2, 0, 0, 3)
    n_classes = len(class_product_labels(F, A, A))
    n_traces = len(product_trace_set(F, A, A))
    assert n_classes - n_traces == 4


@pytest.mark.parametrize("q", [4, 8, 16])
def test_even_noncentral_products_never_single_class(q):
    F = oracles.field_for(q)
    table = class_table(F)
    nc = table.noncentral_labels()
    for i, la in enumerate(nc):
        for lb in nc[i:]:
            assert len(class_product_labels(F, table.rep(la), table.rep(lb))) > 1


@pytest.mark.parametrize("q", [3, 4, 5, 7])
def test_product_is_class_invariant(q):
    F = oracles.field_for(q)
    table = class_table(F)
    elems = list(enumerate_sl2(F))
    rng = random.Random(q)
    nc = table.noncentral_labels()
    for i, la in enumerate(nc):
        for lb in nc[i:]:
            expected = class_product_labels(F, table.rep(la), table.rep(lb))
            A = conjugate(F, table.rep(la), rng.choice(elems))
            B = conjugate(F, table.rep(lb), rng.choice(elems))
            assert class_product_labels(F, A, B) == expected


def test_report_traces_match_member_traces():
    for q in (5, 8):
        F = oracles.field_for(q)
        table = class_table(F)
        nc = table.noncentral_labels()
        for i, la in enumerate(nc):
            for lb in nc[i:]:
                r = product_report(F, la, lb)
                assert set(r.traces) == set(product_trace_set(F, table.rep(la), table.rep(lb)))
                assert set(r.traces) == {label_trace(F, l) for l in r.labels}


def test_report_json_round_trip():
    F = make_field(3, 2)
    table = class_table(F)
    nc = table.noncentral_labels()
    r = product_report(F, nc[0], nc[-1])
    assert ProductReport.from_json(r.to_json()) == r
    row = r.csv_row()
    assert row.startswith(f"9,3,2,{nc[0]},{nc[-1]},{r.num_classes},")


def test_unknown_label_rejected():
    F = make_field(5, 1)
    with pytest.raises(ValueError, match="no conjugacy class"):
        product_report(F, ClassLabel("W", 0), ClassLabel("U", 1, True))
