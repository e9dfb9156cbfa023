"""
How small is a residue?
=======================

Every residue x mod p is congruent to some signed fraction n/m.  The
height f_Q(x) = max(n, m) of the smallest such fraction measures how
"rational" x looks.  We compute it two ways and watch how it behaves.
"""

import numpy as np

from pseudofield.field import GF
from pseudofield.rational import check_fq_bounds, f_q_fast, f_q_oracle, fq_values

# 7 is 1/2 mod 13, so its height is 2.
F = GF(13)
print(f_q_fast(F(7)))

# The oracle tabulates every fraction up to sqrt(p); the fast path walks
# the Euclidean remainder sequence of (p, x).  They agree everywhere.
F = GF(997)
assert all(f_q_fast(F(x)) == f_q_oracle(F(x)) for x in range(997))

# Heights cluster just below sqrt(p): most residues look "irrational".
h = fq_values(F)
print("sqrt(p) =", round(997**0.5, 1))
print("histogram of heights:", np.bincount(h)[-10:])

# Sets of bounded height are closed under the field operations up to a
# controlled blow-up, checked here over all pairs.
print(check_fq_bounds(GF(199)).ok)
