"""Dominant p-stable elements outside type A and their Shi tableaux."""

from ratcat import rootsystem as rs
from ratcat.verify import c_phi_p

for name, p in (("B2", 5), ("G2", 7), ("B3", 7), ("D4", 5)):
    system = rs.parse_root_system(name)
    elems = rs.enumerate_dominant_p_stable(system, p)
    print(f"{name}  h={system.coxeter_number}  p={p}  elements={len(elems)}  "
          f"product formula={rs.rational_catalan_number(system, p)}")
    tableaux = {rs.shi_tableau(e, p) for e in elems}
    print(f"    distinct Shi tableaux: {len(tableaux)}")
    print(f"    C(q) = {c_phi_p(system, p)}")

g2 = rs.parse_root_system("G2")
e = rs.enumerate_dominant_p_stable(g2, 7)[-1]
print("\nlast G2 element:", e.to_dict())
for idx, root in enumerate(g2.positive_roots):
    print(f"    root {root}: k = {rs.k_alpha(e, idx)}, t = {rs.t_alpha_p(e, idx, 7)}")
