"""Sweedler's four-dimensional Hopf algebra: axioms, antipode, a YD module and its braiding.

Run: python3 demos/sweedler_tour.py
"""

from ydforge.catalog import sweedler_h4
from ydforge.hopf import check_hopf, compute_antipode
from ydforge.reps import regular_module
from ydforge.yd import adjoint_module, braid_map, check_yd_module, coaction_to_halfbraid, halfbraid_to_coaction, trivial_datum

h = sweedler_h4()
print("basis: 1, g, x, gx")
print("axioms:", check_hopf(h).verdict)

S, S_inv = compute_antipode(h)
print("antipode:")
for row in S.to_strings():
    print("   ", row)
S2 = S @ S
print("S^2 == id:", S2 == h.id(), "  S^4 == id:", S2 @ S2 == h.id())

# the adjoint module over the plain datum (H, H, H, H)
m = adjoint_module(trivial_datum(h))
print("adjoint module is YD:", check_yd_module(m).verdict)

b = braid_map(m, regular_module(h))
print(f"braiding H (x) M -> M (x) (H (x)_H H): {b.matrix.rows} x {b.matrix.cols}")

# coaction -> half-braid -> coaction
hb = coaction_to_halfbraid(m)
print("round trip recovers the coaction:", halfbraid_to_coaction(hb) == m.coaction)
