"""
Squares as an order
===================

Declare a <= b when b - a is a square.  Over F_p with p = 3 mod 4 this is
total and antisymmetric, but never transitive on the whole field.  It is
transitive on residues of low complexity exactly as long as sums of two
small squares stay squares.
"""

from pseudofield.field import GF
from pseudofield.probes import guarded_transitivity_check, max_threshold, order_axioms, transitivity_counterexample

for p in (7, 11, 13):
    print(p, order_axioms(GF(p)))

# The full relation fails transitivity.
print("counterexample in F_7:", transitivity_counterexample(GF(7)))

# The sum-of-two-squares formula over the set of residues of level < B.
rep = max_threshold(GF(3), 2, 2)
print(rep.to_csv())

# Whenever the guard holds the order is transitive on that set.
for B in range(4):
    print(B, guarded_transitivity_check(GF(199), B, 3))
