import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from pseudofield.algebraic import (
    AlgebraicWitness,
    IntMatrix,
    ceil_log2,
    det_mod,
    scalar_witness,
    verify_witness,
    witness_inverse,
    witness_neg,
    witness_poly_root,
    witness_product,
    witness_sum,
)
from pseudofield.errors import FieldMismatch, NotARoot, ZeroTarget
from pseudofield.field import GF


def paper_witness(F):
    return AlgebraicWitness(IntMatrix([[0, 1], [2, 0]]), 2, 2, F(10))


def test_ceil_log2():
    assert [ceil_log2(t) for t in range(1, 10)] == [0, 1, 2, 2, 3, 3, 3, 3, 4]


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=3, max_size=3))
@settings(max_examples=60)
def test_charpoly_matches_sympy(rows):
    lam = sympy.Symbol("lam")
    expected = sympy.Poly(sympy.Matrix(rows).charpoly(lam).as_expr(), lam).all_coeffs()[::-1]
    assert IntMatrix(rows).charpoly() == [int(c) for c in expected]


@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=3, max_size=3))
@settings(max_examples=60)
def test_det_mod_matches_sympy(rows):
    assert det_mod(rows, 13) == int(sympy.Matrix(rows).det()) % 13


def test_verify_examples(F199, F13):
    assert verify_witness(paper_witness(F199))
    assert verify_witness(AlgebraicWitness(IntMatrix([[0]]), 1, 0, F13(0)))
    assert not verify_witness(AlgebraicWitness(IntMatrix([[5]]), 1, 5, F13(4)))


def test_verify_rejects_bad_multiplier_and_bound(F13):
    assert not verify_witness(AlgebraicWitness(IntMatrix([[0]]), 13, 0, F13(0)))
    assert not verify_witness(AlgebraicWitness(IntMatrix([[3]]), 1, 2, F13(3)))


def test_product_examples(F199):
    w = witness_product(scalar_witness(F199(2)), scalar_witness(F199(3)))
    assert w.M.rows == ((6,),) and w.k == 1 and w.target.value == 6
    w = witness_product(paper_witness(F199), scalar_witness(F199(3)))
    assert w.target.value == 30 and verify_witness(w) and w.cost() <= 3 * 3
    w = witness_product(paper_witness(F199), scalar_witness(F199(1)))
    assert w.target.value == 10 and verify_witness(w)


def test_sum_examples(F199):
    w = witness_sum(scalar_witness(F199(2)), scalar_witness(F199(3)))
    assert w.M.rows == ((5,),) and w.target.value == 5
    w = witness_sum(paper_witness(F199), scalar_witness(F199(1)))
    assert w.target.value == 11 and verify_witness(w)
    assert witness_sum(paper_witness(F199), scalar_witness(F199(0))).target.value == 10


def test_neg_examples(F199):
    w = witness_neg(scalar_witness(F199(3)))
    assert w.M.rows == ((-3,),) and w.target.value == 196
    pw = paper_witness(F199)
    assert witness_neg(witness_neg(pw)).cost() == pw.cost()
    assert witness_neg(pw).target.value == 189 and verify_witness(witness_neg(pw)) and witness_neg(pw).cost() == 3


def test_inverse_examples(F13, F199):
    w = witness_inverse(scalar_witness(F13(2)))
    assert w.target.value == 7 and w.k == 2 and w.n == 1 and verify_witness(w)
    assert witness_inverse(scalar_witness(F13(1))).target.value == 1
    pw = paper_witness(F199)
    w = witness_inverse(pw)
    assert w.target.value == 20 and verify_witness(w) and w.cost() <= 21
    with pytest.raises(ZeroTarget):
        witness_inverse(scalar_witness(F13(0)))


def test_poly_root_examples(F199, F13):
    w = witness_poly_root([scalar_witness(F199(-2)), scalar_witness(F199(0))], F199(20))
    assert verify_witness(w)
    assert w.cost() <= 2 * scalar_witness(F199(0)).cost() * scalar_witness(F199(-2)).cost()
    w = witness_poly_root([scalar_witness(F13(-5))], F13(5))
    assert w.target.value == 5 and verify_witness(w)
    w = witness_poly_root([scalar_witness(F13(-4)), scalar_witness(F13(0))], F13(2))
    assert verify_witness(w)
    with pytest.raises(NotARoot):
        witness_poly_root([scalar_witness(F13(-4)), scalar_witness(F13(0))], F13(3))


def test_field_mismatch(F13, F199):
    with pytest.raises(FieldMismatch):
        witness_sum(scalar_witness(F13(1)), scalar_witness(F199(1)))


def test_json_roundtrip_with_big_entries():
    F = GF(2**61 - 1)
    w = scalar_witness(F(2**60))
    d = w.to_dict()
    assert isinstance(d["p"], str)
    assert AlgebraicWitness.from_json(w.to_json()) == w


@pytest.mark.parametrize("p", [7, 13, 199, 1009])
def test_random_compositions_verify(p):
    from pseudofield.acceptance import random_leaf

    rng = np.random.default_rng(p)
    F = GF(p)
    for _ in range(40):
        a, b = random_leaf(rng, F), random_leaf(rng, F)
        assert verify_witness(a) and verify_witness(b)
        assert verify_witness(witness_product(a, b)) and witness_product(a, b).cost() <= a.cost() * b.cost()
        assert verify_witness(witness_sum(a, b)) and witness_sum(a, b).cost() <= a.cost() * b.cost() + 1
        if a.target.value:
            inv_w = witness_inverse(a)
            assert verify_witness(inv_w) and inv_w.cost() <= 2 * a.cost() ** 2 + a.cost()
