"""
Eigenvalue witnesses
====================

A residue x has an algebraic witness (M, k) when k*x is an eigenvalue of
the integer matrix M mod p.  Its cost is the matrix size plus the number
of bits in max(entry bound, k).  Witnesses compose, so cheap residues
generate cheap sums, products, inverses and roots.
"""

from pseudofield.algebraic import (
    AlgebraicWitness,
    IntMatrix,
    scalar_witness,
    verify_witness,
    witness_inverse,
    witness_poly_root,
    witness_product,
    witness_sum,
)
from pseudofield.field import GF
from pseudofield.search import f_qbar_oracle, level_map

F = GF(199)

# 10 in F_199: the exhaustive search finds a cost-3 witness and proves
# nothing of cost <= 2 exists.
value, w = f_qbar_oracle(F(10), 4)
print(value, w.M.rows, "k =", w.k)
print("cost <= 2 possible?", f_qbar_oracle(F(10), 2) is not None)

# A hand-made witness: [[0, 1], [2, 0]] has eigenvalues +-sqrt 2, and 20^2 = 2.
hand = AlgebraicWitness(IntMatrix([[0, 1], [2, 0]]), 2, 2, F(10))
print(verify_witness(hand))

# Compose.
for name, out in [("10 * 3", witness_product(hand, scalar_witness(F(3)))),
                  ("10 + 1", witness_sum(hand, scalar_witness(F(1)))),
                  ("1 / 10", witness_inverse(hand)),
                  ("sqrt 2", witness_poly_root([scalar_witness(F(-2)), scalar_witness(F(0))], F(20)))]:
    print(f"{name:7s} -> target {out.target.value:3d}, cost {out.cost()}, valid {verify_witness(out)}")

# How many residues sit at each level?  Level 0 means "above the budget".
levels = level_map(F, 3)
print({c: int((levels == c).sum()) for c in range(4)})
