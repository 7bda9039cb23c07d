from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from helpers import transport_lie
from skewbrace import lie
from skewbrace.errors import (AntisymmetryViolation, DimTooLarge, IncompleteOverRationals, JacobiViolation,
                              NotSemisimple)
from skewbrace.lie import LieAlgebraSC, a1_1_circ, affine_line, direct_sum, sl2, so3
from skewbrace.linalg import RationalMatrix, RationalSubspace


def span(n, *vectors):
    return RationalSubspace(n, [tuple(F(x) for x in v) for v in vectors])


def heisenberg():
    return LieAlgebraSC.from_brackets(3, {(0, 1): (0, 0, 1)})


def test_jacobi_examples():
    for L in (LieAlgebraSC.abelian(3), a1_1_circ(), sl2(), so3()):
        lie.check_jacobi(L)
    assert sl2().bracket((1, 0, 0), (0, 1, 0)) == (0, 2, 0)


def test_jacobi_and_antisymmetry_failures():
    with pytest.raises(JacobiViolation):
        LieAlgebraSC.from_brackets(3, {(0, 1): (0, 0, 1), (1, 2): (1, 0, 0), (0, 2): (1, 0, 0)})
    c = LieAlgebraSC.abelian(2).c
    bad = [[list(v) for v in row] for row in c]
    bad[0][1][0] = F(1)
    with pytest.raises(AntisymmetryViolation):
        LieAlgebraSC(bad)


def test_series_examples():
    a = a1_1_circ()
    assert lie.derived_series(a) == [RationalSubspace.full(3), span(3, (0, 1, 0), (0, 0, 1)), RationalSubspace.zero(3)]
    assert lie.is_solvable(a)
    s = sl2()
    assert lie.killing_form(s) == RationalMatrix([[8, 0, 0], [0, 0, 4], [0, 4, 0]])
    assert lie.is_semisimple(s) and lie.derived_series(s) == [RationalSubspace.full(3)]
    ab = LieAlgebraSC.abelian(3)
    assert lie.derived_series(ab) == [RationalSubspace.full(3), RationalSubspace.zero(3)]
    assert lie.killing_form(ab).is_zero()
    h = heisenberg()
    assert lie.lower_central_series(h)[-1].is_zero() and lie.center(h) == span(3, (0, 0, 1))


def test_ideal_generated_examples():
    assert lie.ideal_generated(sl2(), span(3, (0, 1, 0))).is_full()
    e2 = span(3, (0, 1, 0))
    assert lie.ideal_generated(a1_1_circ(), e2) == e2
    assert lie.ideal_generated(a1_1_circ(), RationalSubspace.zero(3)).is_zero()


def test_all_ideals_examples():
    res = lie.all_ideals_lowdim(a1_1_circ())
    assert set(res.subspaces) == {RationalSubspace.zero(3), span(3, (0, 1, 0)), span(3, (0, 0, 1)),
                                  span(3, (0, 1, 0), (0, 0, 1)), RationalSubspace.full(3)}
    assert not res.continuous
    ab = lie.all_ideals_lowdim(LieAlgebraSC.abelian(2))
    assert ab.continuous and ab.line_families == [RationalSubspace.full(2)]
    assert lie.all_ideals_lowdim(sl2()).only_trivial()
    assert lie.all_ideals_lowdim(so3()).only_trivial()
    aff = lie.all_ideals_lowdim(affine_line())
    assert aff.subspaces == [RationalSubspace.zero(2), span(2, (1, 0)), RationalSubspace.full(2)]
    with pytest.raises(DimTooLarge):
        lie.all_ideals_lowdim(direct_sum(sl2(), LieAlgebraSC.abelian(1)))


def test_irrational_eigenvalues_reported():
    # ad(e1) acts on span(e2, e3) with eigenvalues +-sqrt(2)
    L = LieAlgebraSC.from_brackets(3, {(0, 1): (0, 0, 1), (0, 2): (0, 2, 0)})
    with pytest.raises(IncompleteOverRationals):
        lie.all_ideals_lowdim(L)


def test_irrational_eigenvalues_irrelevant_when_lines_not_invariant():
    # in this basis ad of each basis vector of sl2 has irrational real eigenvalues
    p = RationalMatrix([[1, 0, 0], [1, 1, 2], [1, 2, 1]], 3)
    M = transport_lie(sl2(), p)
    res = lie.all_ideals_lowdim(M)
    assert res.only_trivial()
    assert len(res.subspaces) == 2


def test_summand_counts():
    assert lie.simple_summand_count(sl2()).count == 1
    assert lie.simple_summand_count(direct_sum(sl2(), sl2())).count == 2
    assert lie.simple_summand_count(so3()).count == 1
    assert lie.simple_summand_count(direct_sum(so3(), sl2())).count == 2
    with pytest.raises(NotSemisimple):
        lie.simple_summand_count(a1_1_circ())
    assert lie.is_simple(sl2()) and not lie.is_simple(direct_sum(sl2(), sl2()))


def test_format_brackets():
    assert lie.format_brackets(a1_1_circ().c) == "[e1,e2]=e2, [e1,e3]=-e3"
    assert lie.format_brackets(LieAlgebraSC.abelian(2).c) == "abelian"


small = st.integers(-3, 3)


@st.composite
def invertible(draw, n):
    rows = draw(st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n))
    m = RationalMatrix(rows)
    assume(m.det() != 0)
    return m


algebras = st.sampled_from([sl2(), so3(), a1_1_circ(), heisenberg(), LieAlgebraSC.abelian(3),
                            direct_sum(affine_line(), LieAlgebraSC.abelian(1))])


@settings(max_examples=40, deadline=None)
@given(algebras, invertible(3))
def test_invariants_under_change_of_basis(L, p):
    M = transport_lie(L, p)
    lie.check_jacobi(M)
    assert lie.is_semisimple(M) == lie.is_semisimple(L)
    assert lie.is_solvable(M) == lie.is_solvable(L)
    assert [s.dim for s in lie.derived_series(M)] == [s.dim for s in lie.derived_series(L)]
    assert lie.center(M).dim == lie.center(L).dim
    a, b = lie.all_ideals_lowdim(L), lie.all_ideals_lowdim(M)
    assert len(a.subspaces) == len(b.subspaces)
    assert a.continuous == b.continuous
    for s in b.subspaces:
        assert lie.ideal_generated(M, s) == s


@settings(max_examples=40, deadline=None)
@given(algebras, st.lists(st.tuples(small, small, small), min_size=1, max_size=2))
def test_ideal_generated_is_smallest_ideal(L, vs):
    seed = RationalSubspace(3, vs)
    i = lie.ideal_generated(L, seed)
    assert seed <= i
    assert i in lie.all_ideals_lowdim(L).subspaces or lie.all_ideals_lowdim(L).continuous
