"""The completion map, the restriction maps and the two commuting squares.

Run: python3 demos/03_maps_and_diagrams.py
"""

from qisv import check_well_defined, curran_map, diagram_dot, diagram_tilde, eta_dot, eta_tilde

beta = curran_map(2, 4)
for g in beta.domain.generators[:8]:
    print(f"beta({g}) = {beta.images[g]}")

for f in (beta, eta_tilde(2, 4), eta_dot(2, 4)):
    print(check_well_defined(f).summary())

for report in (diagram_tilde(3, 6), diagram_dot(3, 6)):
    print(report.summary())
    print("  proof cases:", ", ".join(report.case_labels))

# A corrupted map is caught, and the witness says where.
t = eta_tilde(2, 4)
bad = t.with_image(t.domain.generator(2, 1), t.codomain.entry(3, 1))
r = check_well_defined(bad)
print(r.summary())
print("  first witness:", r.witnesses[0].item, "->", r.witnesses[0].residual, f"[{r.witnesses[0].channel}]")
