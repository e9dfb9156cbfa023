import pytest
from hypothesis import given, strategies as st

from pseudofield.numberfield import QuadraticField, element_norm_search, squarefree_part


@pytest.mark.parametrize("n, expected", [(12, (3, 2)), (-20, (-5, 2)), (7, (7, 1)), (72, (2, 6))])
def test_squarefree_part(n, expected):
    assert squarefree_part(n) == expected


def test_field_validation():
    with pytest.raises(ValueError):
        QuadraticField(8)
    with pytest.raises(ValueError):
        QuadraticField(1)


@given(st.sampled_from([-5, -3, -1, 2, 5, 13]), st.tuples(st.integers(-20, 20), st.integers(-20, 20)),
       st.tuples(st.integers(-20, 20), st.integers(-20, 20)))
def test_norm_is_multiplicative(D, u, v):
    K = QuadraticField(D)
    assert K.norm(K.mul(u, v)) == K.norm(u) * K.norm(v)


def test_half_integral_basis():
    K = QuadraticField(5)
    w = (0, 1)
    assert K.mul(w, w) == (1, 1)  # w^2 = w + 1 for the golden ratio
    assert K.from_sqrt(1, 1) == (0, 2)


def test_ideal_arithmetic_in_q_sqrt_minus_5():
    K = QuadraticField(-5)
    I = K.ideal([(2, 0), (1, 1)])
    assert I.norm() == 2
    assert not I.contains((1, 0)) and I.contains((1, 1)) and I.contains((3, 1))
    assert I * I == K.ideal([(2, 0)])
    assert (I ** 2).norm() == 4
    J = K.ideal([(3, 0), (1, 1)])
    assert J.norm() == 3 and (I * J).norm() == 6


def test_rational_field():
    Q = QuadraticField()
    I = Q.ideal([(6, 0), (4, 0)])
    assert I.norm() == 2 and I == Q.ideal([(2, 0)])


def test_element_norm_search():
    K = QuadraticField(-5)
    found = list(element_norm_search(K, [(2, 0), (0, 2)], 4, 2))
    assert (2, 0) in found and (-2, 0) in found
    assert all(abs(K.norm(e)) == 4 for e in found)
