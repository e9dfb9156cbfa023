import pytest
import sympy
from hypothesis import given, settings, strategies as st

from pseudofield.errors import NotCoprime
from pseudofield.poly import (
    HomogeneousForm,
    IntPoly,
    content,
    coprime_divisibility_check,
    form_resultant,
    resultant_cofactors,
    sylvester_matrix,
    sylvester_resultant,
)

X = sympy.Symbol("x")
polys = st.lists(st.integers(-9, 9), min_size=2, max_size=6).filter(lambda c: c[-1] != 0).map(IntPoly)


def sym(f: IntPoly):
    return sympy.Poly(list(reversed(f.coeffs)), X)


def test_parse_format_roundtrip():
    f = IntPoly.parse("2,3,0,1")
    assert f == IntPoly([2, 3, 0, 1]) and f.format() == "2,3,0,1" and f.degree == 3
    h = HomogeneousForm.parse("deg=3;1,0,2")
    assert h.degree == 3 and HomogeneousForm.parse(h.format()) == h


def test_content_examples():
    assert content(IntPoly([4, 2])) == 2
    assert content(IntPoly([4, 2]) * IntPoly([9, 3])) == 6
    assert content(IntPoly.x()) == 1


@given(polys, polys)
def test_content_multiplicative(f, g):
    assert content(f * g) == content(f) * content(g)


def test_resultant_examples():
    assert sylvester_resultant(IntPoly([-2, 1]), IntPoly([-5, 1])) == -3
    assert sylvester_resultant(IntPoly([1, 0, 1]), IntPoly.x()) == 1
    assert sylvester_resultant(IntPoly([1, 2, 3]), IntPoly([5])) == 25


@given(polys, polys)
@settings(max_examples=80)
def test_resultant_matches_sylvester_determinant(f, g):
    M = sylvester_matrix(list(reversed(f.coeffs)), list(reversed(g.coeffs)))
    assert sylvester_resultant(f, g) == int(sympy.Matrix(M).det())


@given(polys, polys, polys)
@settings(max_examples=60)
def test_resultant_laws(f, g, h):
    assert sylvester_resultant(f * g, h) == sylvester_resultant(f, h) * sylvester_resultant(g, h)
    assert sylvester_resultant(g, f) == (-1) ** (f.degree * g.degree) * sylvester_resultant(f, g)


@given(polys, polys)
@settings(max_examples=60)
def test_cofactors(f, g):
    r = sylvester_resultant(f, g)
    if r == 0:
        with pytest.raises(NotCoprime):
            resultant_cofactors(f, g)
        return
    a, b = resultant_cofactors(f, g)
    assert a * f + b * g == IntPoly([r])
    assert a.degree < g.degree and b.degree < f.degree


@given(polys, polys)
def test_divmod_and_arithmetic_match_sympy(f, g):
    assert sym(f * g) == sym(f) * sym(g)
    assert sym(f + g) == sym(f) + sym(g)
    if g.is_monic():
        q, r = f.divmod(g)
        assert q * g + r == f and r.degree < g.degree


def test_coprime_divisibility():
    p, q = IntPoly([-1, 1]), IntPoly([1, 1])
    assert coprime_divisibility_check(p, q, IntPoly([-1, 0, 1]))
    assert coprime_divisibility_check(p, q, IntPoly([-1, 0, 1]) * IntPoly([7, 0, 0, 1]))
    assert coprime_divisibility_check(p, q, p)


def test_forms():
    x, y = HomogeneousForm.x(), HomogeneousForm.y()
    assert form_resultant(x, y) in (1, -1)
    p = HomogeneousForm(1, [-1, 1])
    q = HomogeneousForm(1, [1, 1])
    assert abs(form_resultant(p, q)) == 2
    h = (x + y) ** 2
    assert h.coeffs == (1, 2, 1)
    assert h(2, 3) == 25
    assert HomogeneousForm(3, [1, 1]).at_x1() == IntPoly([0, 0, 1, 1])


@given(polys, polys)
@settings(max_examples=40)
def test_form_resultant_matches_poly_resultant_for_full_degree(f, g):
    pf, pg = HomogeneousForm.from_poly(f), HomogeneousForm.from_poly(g)
    assert abs(form_resultant(pf, pg)) == abs(sylvester_resultant(f, g))
