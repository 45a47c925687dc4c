"""Export the built-in examples as JSON documents.

``python3 -m ydforge.fixtures DIR`` writes one file per family into ``DIR``.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

from .catalog import builtin_hopf_algebras, classical_yd_examples, conjugation_automorphism, scaling_automorphism
from .documents import DocumentBuilder
from .grading import alpha_beta_datum
from .reps import twist_regular
from .yd import adjoint_module, coaction_to_halfbraid, free_module, trivial_datum


def _classical(b: DocumentBuilder, hname: str, h, table=None) -> str:
    """The regular datum of ``h`` and its classical modules."""
    b.hopf(hname, h)
    datum = b.datum(f"trivial_{hname}", h, h, "regular", "regular")
    for m in classical_yd_examples(h, table):
        b.module(f"{hname}_{m.name}", datum, m)
    return datum


def _twisted(b: DocumentBuilder, name: str, h, auts: dict, alpha=None, beta=None, gamma=None, delta=None) -> str:
    """Datum with ``^alpha H^beta`` and ``_gamma H_delta`` plus its adjoint module."""
    A = b.twisted("bicomodule_algebras", f"{name}_A", h, alpha, beta) if alpha or beta else "regular"
    C = b.twisted("bimodule_coalgebras", f"{name}_C", h, gamma, delta) if gamma or delta else "regular"
    datum = b.datum(name, h, h, A, C)
    d = alpha_beta_datum(h, *(auts[x] if x else None for x in (alpha, beta, gamma, delta)))
    b.module(f"{name}_adjoint", datum, adjoint_module(d, name="adjoint"))
    return datum


def sweedler_document() -> dict:
    hs = builtin_hopf_algebras()
    h = hs["H4"].hopf
    b = DocumentBuilder(h.field, "Sweedler's four-dimensional Hopf algebra over Q with twisted data")
    datum = _classical(b, "H4", h)
    b.module("H4_free", datum, free_module(trivial_datum(h), name="free"))
    auts = {"lambda2": scaling_automorphism(h, 2), "lambda_neg1": scaling_automorphism(h, -1), "S_squared": h.S @ h.S}
    for k, v in auts.items():
        b.automorphism(k, h, v)
    _twisted(b, "H4_coobject2", h, auts, gamma="lambda2")
    _twisted(b, "H4_object2", h, auts, alpha="lambda2")
    _twisted(b, "H4_anti", h, auts, beta="S_squared")
    # the same co-object written out explicitly, and an explicit object
    Cx = twist_regular(h, auts["lambda_neg1"], None, "module_coalgebra")
    b.bimodule_coalgebra("H4_coobject_neg1_explicit", Cx, "H4")
    Ax = twist_regular(h, auts["lambda_neg1"], None, "comodule_algebra")
    b.bicomodule_algebra("H4_object_neg1_explicit", Ax, "H4")
    hb = coaction_to_halfbraid(adjoint_module(trivial_datum(h), name="adjoint"))
    b.half_braid("H4_adjoint_halfbraid", datum, hb)
    return b.build()


def group_document(key: str, description: str, extra_conj: bool = False) -> dict:
    hs = builtin_hopf_algebras()
    bt = hs[key]
    b = DocumentBuilder(bt.hopf.field, description)
    _classical(b, key, bt.hopf, bt.table)
    if extra_conj:
        b.automorphism("conj1", bt.hopf, conjugation_automorphism(bt.table, 1, bt.hopf.field))
        _twisted(b, f"{key}_coobject_conj", bt.hopf, {"conj1": conjugation_automorphism(bt.table, 1, bt.hopf.field)}, gamma="conj1")
    return b.build()


def plain_document(key: str, description: str) -> dict:
    bt = builtin_hopf_algebras()[key]
    b = DocumentBuilder(bt.hopf.field, description)
    _classical(b, key, bt.hopf, bt.table)
    return b.build()


def graded_document() -> dict:
    h = builtin_hopf_algebras()["H4_F7"].hopf
    b = DocumentBuilder(h.field, "Sweedler's algebra over GF(7) with scaling twists")
    _classical(b, "H4_F7", h)
    auts = {"lambda2": scaling_automorphism(h, 2), "lambda3": scaling_automorphism(h, 3)}
    for k, v in auts.items():
        b.automorphism(k, h, v)
    _twisted(b, "H4_F7_coobject2", h, auts, gamma="lambda2")
    _twisted(b, "H4_F7_coobject3", h, auts, gamma="lambda3")
    _twisted(b, "H4_F7_object2", h, auts, alpha="lambda2")
    return b.build()


def builtin_documents() -> dict[str, dict]:
    """File name to document for every exported fixture."""
    return {
        "sweedler.json": sweedler_document(),
        "classical_kc2.json": group_document("kC2", "group algebra of C2 over Q"),
        "kc3_f7.json": group_document("kC3_F7", "group algebra of C3 over GF(7)"),
        "ks3.json": group_document("kS3", "group algebra of S3 over Q with a conjugation twist", extra_conj=True),
        "kc2_dual.json": plain_document("kC2_dual", "functions on C2 over Q"),
        "taft3_f7.json": plain_document("T3_F7", "Taft algebra of dimension 9 over GF(7), q = 2"),
        "h4_f7_graded.json": graded_document(),
    }


def write_fixtures(directory) -> list[Path]:
    out_dir = Path(directory)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for fname, doc in builtin_documents().items():
        p = out_dir / fname
        p.write_text(json.dumps(doc, indent=1, sort_keys=True) + "\n")
        written.append(p)
    return written


if __name__ == "__main__":
    for p in write_fixtures(sys.argv[1] if len(sys.argv) > 1 else "fixtures"):
        print(p)
