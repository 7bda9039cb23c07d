import pytest

from skewbrace import braces as fb
from skewbrace.enumeration import enumerate_braces, enumeration_report, regular_subgroups
from skewbrace.errors import OrderBoundExceeded
from skewbrace.groups import cyclic, direct_product, identify, small_groups
from skewbrace.oracle import count_braces, group_tables
from skewbrace.presets import c3xc2cubed

# labelled braces (circ laws on the fixed additive table) and isomorphism classes
FIXTURES = {
    "C1": (1, 1), "C2": (1, 1), "C3": (1, 1), "C4": (2, 2), "C2xC2": (4, 2), "C5": (1, 1),
    "C6": (2, 2), "S3": (8, 4), "C7": (1, 1),
    "C8": (6, 5), "C4xC2": (28, 14), "C2xC2xC2": (232, 8), "D8": (20, 12), "Q8": (28, 8),
    "C12": (6, 5), "C6xC2": (12, 5), "A4": (42, 8), "D12": (28, 10), "Dic12": (28, 10),
}


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7, 8, 12])
def test_counts_match_fixtures(n):
    for g in small_groups(n):
        rep, braces = enumeration_report(g)
        assert (rep.braces, rep.classes) == FIXTURES[g.name]
        assert len({b.key for b in braces}) == len(braces)
        assert rep.triviality["trivial"] == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_counts_match_oracle(n):
    tables = group_tables(n)
    for g in small_groups(n):
        assert len(enumerate_braces(g)) == count_braces(g.rows, tables)


def test_order_totals():
    # isomorphism classes of skew braces of orders 4, 6, 8, 12
    totals = {n: sum(FIXTURES[g.name][1] for g in small_groups(n)) for n in (4, 6, 8, 12)}
    assert totals == {4: 4, 6: 6, 8: 47, 12: 38}


def test_c2_single_trivial_brace():
    (b,) = enumerate_braces(cyclic(2))
    assert fb.classify_triviality(b) == "trivial"


def test_regular_subgroups_are_regular():
    g = small_groups(8)[3]
    for lam in regular_subgroups(g):
        assert len(lam) == g.order and lam[0] == 0


def test_order_bound():
    with pytest.raises(OrderBoundExceeded):
        enumerate_braces(cyclic(7), max_order=6)


def test_order_12_simple_braces():
    found = {}
    for g in small_groups(12):
        rep, _ = enumeration_report(g, report_simple=True)
        found[g.name] = [(identify(b.circ), fb.classify_triviality(b), size) for b, size in rep.simple]
    assert found == {"C12": [], "C6xC2": [], "D12": [], "Dic12": [],
                     "A4": [("Dic12", "neither", 12), ("Dic12", "neither", 12)]}


@pytest.fixture(scope="module")
def order24():
    return enumeration_report(c3xc2cubed(), report_simple=True)


def test_order24_simple_brace(order24):
    rep, braces = order24
    assert rep.automorphisms == 336
    assert rep.braces == 1856 and rep.classes == 30
    assert len(rep.simple) == 1
    b, size = rep.simple[0]
    assert size == 168
    assert identify(b.circ) == "S4"
    assert fb.classify_triviality(b) == "neither"
    assert len(fb.all_ideals(b)) == 2
    series, solvable = fb.derived_series(b)
    assert not solvable and series == [frozenset(range(24))]  # the first derived term is G again
    assert b.dot.is_solvable() and b.circ.is_solvable()


def test_isomorphism_classes_are_consistent():
    g = direct_product(cyclic(4), cyclic(2))
    rep, braces = enumeration_report(g)
    reps = []
    for b in braces:
        if not any(fb.brace_isomorphic(b, r) for r in reps):
            reps.append(b)
    assert len(reps) == rep.classes
