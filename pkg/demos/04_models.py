"""Commutative models: every increasing sequence is a point of C(I^+_{k,n}).

Run: python3 demos/04_models.py
"""

from qisv import IncreasingSequence, beta_consistency, commutative_model, complete, evaluate
from qisv.models import beta_matrix

k, n = 3, 5
s = IncreasingSequence((1, 3, 4), n)
m = commutative_model(s, k, n)
p = m.presentation.entry
print("p11 p33 - p33 at", s.values, "=", evaluate(p(1, 1) * p(3, 3) - p(3, 3), m))

# The quantum map evaluated at a point is the classical completion.
print(beta_matrix(k, n, s))
print(complete(s).matrix())

for kk in range(1, n + 1):
    print(beta_consistency(kk, n).summary())
