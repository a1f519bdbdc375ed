"""Normal forms in the universal algebras.

Run: python3 demos/02_rewriting.py
"""

from qisv import involution, is_zero, normalize, qis_presentation, magic_presentation

pres = qis_presentation(2, 4)
p = pres.entry

# Projections square to themselves and the increasing condition kills p21 p22.
x = p(1, 1) * p(1, 1) + 3 * p(2, 1) * p(2, 2) - p(3, 2)
print("x            =", x)
print("normalize(x) =", normalize(x, pres))
print("x* =", involution(x))

# The first column is a partition of unity, so this telescoping sum is zero.
e = sum((p(i, 0) - p(i + 1, 1) for i in range(3)), pres.zero())
print("telescoping sum:", e, "->", is_zero(e, pres).verdict.value)

# A true identity that needs a derived rule: p11 p22 = p22.
print("p11 p22 - p22 ->", is_zero(p(1, 1) * p(2, 2) - p(2, 2), pres).verdict.value)

# What the checker cannot decide comes back with its residual.
zt = is_zero(p(1, 1) - p(2, 2), pres)
print("p11 - p22 ->", zt.verdict.value, "residual", zt.normal_form)

magic = magic_presentation(3)
rw = magic.rewriter
print(f"C(S_3^+): {len(rw.rules)} rules, {len(rw.derived_rules)} derived during completion")
