"""
Algebraic integers with unit values
===================================

Given polynomials p_i and an interval I, find an algebraic integer alpha
in I such that every 1/p_i(alpha) is again an algebraic integer.  The
route: a monic q with res(p, q) = +-1, pushed so that it has a root in I,
and then the irreducible factor of q owning that root.
"""

from pseudofield.numberfield import QuadraticField
from pseudofield.poly import HomogeneousForm, IntPoly, form_resultant
from pseudofield.units import (
    RationalInterval,
    ideal_power_generator,
    res_one_combine,
    res_one_in_interval,
    res_one_partner,
    unit_value_alg_integer,
)

# The ideal (2, 1 + sqrt -5) is not principal, but its square is.
K = QuadraticField(-5)
r = ideal_power_generator(K, [(2, 0), (1, 1)])
print("exponent", r.exponent, "form", r.binary_form().format(), "value", r.value)

# Partners with resultant +-1, glued across coprime factors.
x, y = HomogeneousForm.x(), HomogeneousForm.y()
h = res_one_combine(x, y, x - y, x)
print("res(xy, h) =", form_resultant(x * y, h))
p = IntPoly([0, 1, 0, 1])  # x^3 + x
print("partner of", p, "is", res_one_partner(p))

# Force a root into [1, 2].
q, _ = res_one_in_interval(IntPoly([1, 0, 1]), RationalInterval(1, 2))
print("q =", q, " q(1), q(2) =", q(1), q(2))

# alpha in [1, 2] with 1/alpha integral: its minimal polynomial has unit constant term.
res = unit_value_alg_integer([IntPoly.x()], RationalInterval(1, 2))
print(res.alpha.to_json())
print(res.to_dict()["verification"])
