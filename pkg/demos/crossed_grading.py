"""Scaling classes over GF(7): grading of tensor products, the class action, crossed braidings.

Run: python3 demos/crossed_grading.py
"""

from ydforge.catalog import scaling_automorphism, sweedler_h4
from ydforge.grading import COMPOSITION_ORDER, GradedClass, alpha_beta_datum, check_grading_and_crossing, class_witness, graded, phi_action
from ydforge.linalg import Field
from ydforge.yd import adjoint_module, tensor_yd

F7 = Field.gf(7)
h = sweedler_h4(F7)


def lam(a):
    return scaling_automorphism(h, a)


X = graded(adjoint_module(alpha_beta_datum(h, None, None, lam(2), None)), "X")
Y = graded(adjoint_module(alpha_beta_datum(h, None, None, lam(3), None)), "Y")
print("composition order:", COMPOSITION_ORDER)
print("class of X: scale by", X.right.rep[2, 2], "  class of Y: scale by", Y.right.rep[2, 2])

t = tensor_yd(X.module, Y.module)
six = GradedClass("galois_coobject", h, lam(6))
w = class_witness(t.module.datum.C, six)
print("X (x) Y sits in class 6:", w is not None)

g = GradedClass("galois_coobject", h, lam(5))
Xg = phi_action(g, X)
print("class of X^g:", Xg.right.rep[2, 2], "(conjugation is trivial here, the scalings commute)")

r = check_grading_and_crossing([X, Y])
print(f"grading, action and crossed braidings: {r.verdict} over {len(r.findings)} findings")
