import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewbrace import braces as fb
from skewbrace.enumeration import enumerate_braces
from skewbrace.errors import BraceIdentityViolation, IdentityMismatch, NotAnIdeal, NotCharacteristic, OrderBoundExceeded
from skewbrace.groups import Holomorph, cyclic, direct_product, small_groups, symmetric
from skewbrace.oracle import satisfies_brace_identity

S3 = symmetric(3)
A3 = frozenset({0, 3, 4})
V4 = direct_product(cyclic(2), cyclic(2))


def all_small_braces(max_n=8):
    return [b for n in range(1, max_n + 1) for g in small_groups(n) for b in enumerate_braces(g)]


SMALL = all_small_braces(6)
brace_st = st.sampled_from(SMALL + enumerate_braces(small_groups(8)[3]))


def test_verify_examples():
    assert fb.classify_triviality(fb.verify_brace(S3, S3)) == "trivial"
    assert fb.classify_triviality(fb.verify_brace(S3, S3.opposite())) == "almost_trivial"
    c4 = cyclic(4)
    # circ = the C2 x C2 table placed on the same labels: decided by the exhaustive check
    assert fb.is_brace(c4, V4) == satisfies_brace_identity(c4.rows, V4.rows)
    if not fb.is_brace(c4, V4):
        with pytest.raises(BraceIdentityViolation):
            fb.verify_brace(c4, V4)


def test_identity_mismatch():
    swapped = [[(a ^ b) for b in range(4)] for a in range(4)]  # same identity, fine
    fb.verify_brace(V4, swapped)
    shifted = [[(a + b + 1) % 3 for b in range(3)] for a in range(3)]  # identity is 2
    with pytest.raises(IdentityMismatch):
        fb.verify_brace(cyclic(3), shifted)


def test_lambda_and_star_formulas():
    t = fb.trivial_brace(S3)
    assert all(t.lambda_map(a) == tuple(range(6)) for a in range(6))
    assert all(t.star(x, y) == 0 for x in range(6) for y in range(6))
    o = fb.almost_trivial_brace(S3)
    for a in range(6):
        assert o.lambda_map(a) == tuple(S3.conj(S3.inv(a), x) for x in range(6))
    for x in range(6):
        for y in range(6):
            expected = S3.mul(S3.mul(S3.inv(x), y), S3.mul(x, S3.inv(y)))
            assert o.star(x, y) == expected


def test_ideal_examples():
    o = fb.almost_trivial_brace(S3)
    assert fb.is_ideal(o, A3)
    assert fb.all_ideals(o) == [frozenset({0}), A3, frozenset(range(6))]
    t = fb.trivial_brace(V4)
    assert len(fb.all_ideals(t)) == len(V4.all_subgroups()) == 5
    c4 = fb.trivial_brace(cyclic(4))
    assert [len(i) for i in fb.all_ideals(c4)] == [1, 2, 4]
    assert not fb.is_simple(c4)
    bad = fb.is_ideal(o, {0, 1})
    assert not bad and bad.failed
    with pytest.raises(OrderBoundExceeded):
        fb.all_ideals(o, max_order=5)


def test_quotient_examples():
    o = fb.almost_trivial_brace(S3)
    q, labels = fb.quotient(o, A3)
    assert q.order == 2 and fb.classify_triviality(q) == "trivial"
    assert fb.is_brace_morphism(o, q, labels)
    one, _ = fb.quotient(o, range(6))
    assert one.order == 1
    same, labels = fb.quotient(o, {0})
    assert fb.brace_isomorphic(same, o)
    with pytest.raises(NotAnIdeal):
        fb.quotient(o, {0, 1})


def test_derived_series_examples():
    series, solvable = fb.derived_series(fb.trivial_brace(cyclic(4)))
    assert [len(s) for s in series] == [4, 1] and solvable
    series, solvable = fb.derived_series(fb.almost_trivial_brace(S3))
    assert series == [frozenset(range(6)), A3, frozenset({0})] and solvable


def test_criterion_checks_examples():
    o = fb.almost_trivial_brace(S3)
    for h in ({0}, range(6)):
        r = fb.criterion_checks(o, h)
        assert r.char_star and r.fund_lemma_lhs and r.fund_lemma_rhs
    with pytest.raises(NotCharacteristic):
        fb.criterion_checks(o, {0, 1})


def test_regular_embedding_round_trip():
    for b in all_small_braces(8):
        hol = Holomorph(b.dot)
        emb = fb.regular_embedding(b, hol)
        assert fb.brace_from_regular_subgroup(hol, emb) == b
    t = fb.trivial_brace(S3)
    hol = Holomorph(S3)
    assert all(f == 0 for _, f in fb.regular_embedding(t, hol))
    o = fb.almost_trivial_brace(S3)
    assert [hol.auts[f] for _, f in fb.regular_embedding(o, hol)] == [o.lambda_map(a) for a in range(6)]


@settings(max_examples=60)
@given(brace_st, st.data())
def test_brace_laws(b, data):
    n = b.order
    a, x, y = (data.draw(st.integers(0, n - 1)) for _ in range(3))
    lam = b.lambda_map
    # lambda is a homomorphism from circ into Aut(dot)
    assert lam(b.circ.mul(a, x)) == tuple(lam(a)[lam(x)[k]] for k in range(n))
    assert b.star(x, 0) == 0
    assert b.circ.mul(a, b.dot.mul(x, y)) == b.dot.mul(b.dot.mul(b.circ.mul(a, x), b.dot.inv(a)), b.circ.mul(a, y))


@settings(max_examples=30)
@given(brace_st)
def test_ideals_and_quotients(b):
    ideals = fb.all_ideals(b)
    assert frozenset({0}) in ideals and frozenset(range(b.order)) in ideals
    for i in ideals:
        q, labels = fb.quotient(b, i)
        fb.verify_brace(q.dot, q.circ)
        assert q.order * len(i) == b.order
        assert fb.is_brace_morphism(b, q, labels)
    series, solvable = fb.derived_series(b)
    assert all(s in ideals for s in series)
    if solvable:
        assert b.dot.is_solvable() and b.circ.is_solvable()


def test_commutator_fund_lemma_exhaustive():
    for b in all_small_braces(8):
        h = b.dot.commutator_subgroup()
        r = fb.criterion_checks(b, h)
        assert r.fund_lemma_lhs == r.fund_lemma_rhs
        if r.char_star:
            assert fb.is_ideal(b, h)


def test_brace_isomorphism_opposite_classes():
    o1 = fb.almost_trivial_brace(S3)
    assert fb.brace_isomorphic(o1, o1)
    assert not fb.brace_isomorphic(o1, fb.trivial_brace(S3))
