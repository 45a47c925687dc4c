"""Scaling twists of Sweedler's algebra as Galois co-objects, and lifting YD modules along them.

Run: python3 demos/galois_scalings.py
"""

from ydforge.catalog import scaling_automorphism, sweedler_h4
from ydforge.galois import check_sigma, galois_coobject_report, lift_yd, lifted_coalgebra_to_K, transport
from ydforge.linalg import identity
from ydforge.reps import regular_bimodule_coalgebra, twist_regular
from ydforge.yd import adjoint_module, check_yd_module, trivial_datum

h = sweedler_h4()
V = adjoint_module(trivial_datum(h))

for label, C in [
    ("H", regular_bimodule_coalgebra(h)),
    ("H twisted by x -> 2x", twist_regular(h, None, scaling_automorphism(h, 2), "module_coalgebra")),
    ("H twisted by x -> 3x", twist_regular(h, None, scaling_automorphism(h, 3), "module_coalgebra")),
]:
    report, cert = galois_coobject_report(C)
    print(f"{label}: {report.verdict}, {len(report.findings)} findings")
    print("   u =", [str(v) for v in cert.u.column_values(0)])
    print("   sigma identities:", check_sigma(cert).verdict)
    lifted = lift_yd(cert, V)
    g = lifted_coalgebra_to_K(cert, lifted)
    classical = transport(lifted.module, identity(h.field, lifted.module.dim), g, trivial_datum(h))
    print("   lifted adjoint module is classical YD:", check_yd_module(classical).verdict)

one = report.findings[0]
print("sample finding:", one.check, "|", one.anchor)
