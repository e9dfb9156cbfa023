import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from pseudofield.errors import NotCoprime, NotMonicModL, PreconditionViolated
from pseudofield.modpoly import (
    ModPoly,
    bezout_mod_l,
    coprime_lift,
    factor_mod_l,
    gcd_mod_l,
    has_root_mod_p,
    monic_multiple,
)

X = sympy.Symbol("x")


def sympy_factor(coeffs, ell):
    lc, facs = sympy.Poly(list(reversed(coeffs)), X, modulus=ell).factor_list()
    out = []
    for g, m in facs:
        cs = [int(c) % ell for c in reversed(g.all_coeffs())]
        out.append((tuple(cs), m))
    return sorted(out)


def test_gcd_and_bezout_examples():
    g = gcd_mod_l(ModPoly(3, 1, [-1, 0, 1]), ModPoly(3, 1, [-1, 1]), 3)
    assert g.coeffs == (2, 1)
    r1, r2 = ModPoly(3, 1, [1, 1]), ModPoly(3, 1, [2, 1])
    u, v = bezout_mod_l(r1, r2, 3)
    assert (u * r1 + v * r2).coeffs == (1,)
    f = ModPoly(5, 1, [2, 0, 3])
    assert gcd_mod_l(f, ModPoly(5, 1, []), 5) == f.monic()
    with pytest.raises(NotCoprime):
        bezout_mod_l(ModPoly(3, 1, [1, 1]), ModPoly(3, 1, [1, 2, 1]), 3)


def test_factor_examples():
    assert [(g.coeffs, m) for g, m in factor_mod_l(ModPoly(3, 1, [2, 3, 1]), 3)] == [((1, 1), 1), ((2, 1), 1)]
    assert [(g.coeffs, m) for g, m in factor_mod_l(ModPoly(2, 1, [1, 1, 1]), 2)] == [((1, 1, 1), 1)]
    assert [(g.coeffs, m) for g, m in factor_mod_l(ModPoly(5, 1, [0, 0, 1]), 5)] == [((0, 1), 2)]


@pytest.mark.parametrize("ell", [2, 3, 5, 7, 11])
def test_factor_matches_sympy(ell):
    rng = np.random.default_rng(ell)
    for _ in range(40):
        d = int(rng.integers(1, 9))
        cs = [int(c) for c in rng.integers(0, ell, size=d)] + [1]
        got = sorted((g.coeffs, m) for g, m in factor_mod_l(ModPoly(ell, 1, cs), ell))
        assert got == sympy_factor(cs, ell)


@given(st.lists(st.integers(0, 12), min_size=1, max_size=6))
def test_has_root_by_scan(cs):
    assert has_root_mod_p(cs, 13) == any(sum(c * x**i for i, c in enumerate(cs)) % 13 == 0 for x in range(13))


def test_monic_multiple_examples():
    u = ModPoly(2, 2, [0, 3, 2])
    v = monic_multiple(u)
    assert v.coeffs == (0, 1)
    w = (ModPoly(2, 2, [1]) + v * 2) * u
    assert w.coeffs == (0, 3) and w.is_monic()
    assert monic_multiple(ModPoly(3, 3, [1, 2, 1])).is_zero()
    with pytest.raises(NotMonicModL):
        monic_multiple(ModPoly(2, 3, [2, 4]))


@pytest.mark.parametrize("ell", [2, 3, 5])
def test_monic_multiple_random(ell):
    rng = np.random.default_rng(ell + 100)
    for _ in range(50):
        n = int(rng.integers(1, 6))
        d = int(rng.integers(0, 4))
        low = [int(c) for c in rng.integers(0, ell**n, size=d)]
        high = [ell * int(c) for c in rng.integers(0, ell**n, size=int(rng.integers(0, 4)))]
        u = ModPoly(ell, n, low + [int(rng.integers(1, ell))] + high)
        w = (ModPoly(ell, n, [1]) + monic_multiple(u) * ell) * u
        assert w.is_monic() and w.degree == d


def test_coprime_lift_examples():
    w = ModPoly(3, 2, [2, 3, 1])
    a, b = coprime_lift(w, ModPoly(3, 1, [1, 1]), ModPoly(3, 1, [2, 1]))
    assert (a.coeffs, b.coeffs) == ((1, 1), (2, 1))
    w = ModPoly(5, 1, [2, 3, 1])
    a, b = coprime_lift(w, ModPoly(5, 1, [1, 1]), ModPoly(5, 1, [2, 1]))
    assert (a.coeffs, b.coeffs) == ((1, 1), (2, 1))


def test_coprime_lift_preconditions():
    with pytest.raises(PreconditionViolated):
        coprime_lift(ModPoly(3, 2, [1, 2, 1]), ModPoly(3, 1, [1, 1]), ModPoly(3, 1, [1, 1]))
    with pytest.raises(PreconditionViolated):
        coprime_lift(ModPoly(3, 2, [1, 2, 2]), ModPoly(3, 1, [1, 1]), ModPoly(3, 1, [2, 1]))


@given(st.sampled_from([2, 3, 5, 7]), st.integers(1, 5), st.data())
@settings(max_examples=80)
def test_coprime_lift_roundtrip(ell, n, data):
    def monic(deg):
        return [data.draw(st.integers(0, ell - 1)) for _ in range(deg)] + [1]

    r1 = ModPoly(ell, 1, monic(data.draw(st.integers(1, 3))))
    r2 = ModPoly(ell, 1, monic(data.draw(st.integers(1, 3))))
    if gcd_mod_l(r1, r2, ell).degree > 0:
        return
    noise = lambda r: ModPoly(ell, n, [ell * data.draw(st.integers(0, ell**n)) for _ in range(r.degree)])
    R1 = ModPoly(ell, n, r1.coeffs) + noise(r1)
    R2 = ModPoly(ell, n, r2.coeffs) + noise(r2)
    a, b = coprime_lift(R1 * R2, r1, r2)
    assert a * b == R1 * R2
    assert ModPoly(ell, 1, a.coeffs) == r1 and ModPoly(ell, 1, b.coeffs) == r2
    assert a.is_strictly_monic() and b.is_strictly_monic()
