import pytest
from hypothesis import given, strategies as st

from pseudofield.errors import BadModulus, FieldMismatch, NotResidue, ZeroInverse
from pseudofield.field import GF, egcd, inv, inv_mod, is_prime, is_square, order_le, sqrt_3mod4

SMALL_PRIMES = [p for p in range(3, 400) if all(p % d for d in range(2, int(p**0.5) + 1))]


def test_is_prime_matches_trial_division():
    assert [n for n in range(400) if is_prime(n)] == [2] + SMALL_PRIMES
    assert is_prime(2**61 - 1) and not is_prime(2**61 + 1)


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_egcd_identity(a, b):
    g, s, t = egcd(a, b)
    assert s * a + t * b == g and g >= 0


@pytest.mark.parametrize("x, expected", [(2, 7), (1, 1), (12, 12)])
def test_inverse_examples(x, expected):
    assert inv(GF(13)(x)).value == expected


def test_inverse_of_zero():
    with pytest.raises(ZeroInverse):
        inv(GF(13)(0))
    with pytest.raises(ZeroDivisionError):
        inv_mod(0, 13)


def test_is_square_agrees_with_squares_set():
    for p in SMALL_PRIMES[:30]:
        F = GF(p)
        squares = {x * x % p for x in range(p)}
        assert all(is_square(F(a)) == (a in squares) for a in range(p))


def test_is_square_examples():
    F = GF(7)
    assert is_square(F(0)) and is_square(F(2)) and not is_square(F(3))


def test_sqrt_3mod4_canonical_root():
    assert sqrt_3mod4(GF(7)(2)).value == 3
    assert sqrt_3mod4(GF(7)(0)).value == 0
    assert sqrt_3mod4(GF(11)(1)).value == 1
    for p in [p for p in SMALL_PRIMES if p % 4 == 3][:15]:
        F = GF(p)
        for a in range(p):
            roots = [r for r in range(p) if r * r % p == a]
            if roots:
                assert sqrt_3mod4(F(a)).value == min(roots)
            else:
                with pytest.raises(NotResidue):
                    sqrt_3mod4(F(a))


def test_sqrt_needs_3_mod_4():
    with pytest.raises(BadModulus):
        sqrt_3mod4(GF(13)(4))


def test_order_le_examples():
    F = GF(7)
    assert all(order_le(F(a), F(a)) for a in range(7))
    assert order_le(F(0), F(2)) and not order_le(F(0), F(3))


def test_field_validation_and_mixing():
    with pytest.raises(BadModulus):
        GF(15)
    with pytest.raises(FieldMismatch):
        GF(7)(1) + GF(11)(1)


@given(st.integers(), st.integers())
def test_residue_arithmetic_matches_integers(a, b):
    F = GF(101)
    assert (F(a) + F(b)).value == (a + b) % 101
    assert (F(a) * F(b)).value == (a * b) % 101
    assert (F(a) - F(b)).value == (a - b) % 101
    assert (-F(a)).value == (-a) % 101
    assert abs(F(a).signed()) <= 50
