"""Completing increasing sequences to permutations, then generating S_n.

Run: python3 demos/01_completion_and_closure.py
"""

import math

from qisv import IncreasingSequence, closure, complete, enumerate_sequences, matrix_rep, witness_generators
from qisv.classical import completions

# The worked example: 2 < 3 < 5 < 6 < 8 inside {1, ..., 9}.
s = IncreasingSequence((2, 3, 5, 6, 8), 9)
print("matrix representation (rows 1..9, one column per entry):")
print(matrix_rep(s))

sigma = complete(s)
print("completion, one-line:", sigma)
print("completion, cycles:  ", sigma.cycle_str())

# Every completed sequence of length k generates the whole symmetric group.
for n in range(2, 8):
    sizes = {len(closure(completions(k, n), n)) for k in range(1, n)}
    print(f"n={n}: closure sizes {sorted(sizes)} vs n! = {math.factorial(n)}")

# Three completions already suffice; they are a transposition and two cycles.
k, n = 3, 7
gens = witness_generators(k, n)
print(f"generators for (k, n) = ({k}, {n}):", ", ".join(g.cycle_str() for g in gens))
print("they generate", len(closure(gens, n)), "elements")
print("number of increasing sequences of length 5 in 1..9:", len(enumerate_sequences(5, 9)))
