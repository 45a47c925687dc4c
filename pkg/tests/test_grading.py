import pytest
from hypothesis import given, strategies as st

from ydforge.catalog import conjugation_automorphism, scaling_automorphism, sweedler_h4
from ydforge.grading import (
    COMPOSITION_ORDER,
    GradedClass,
    alpha_beta_datum,
    check_alpha_beta_module,
    check_crossed_braiding,
    check_graded,
    check_grading_and_crossing,
    class_witness,
    crossed_braiding,
    graded,
    identity_class,
    phi_action,
    same_structure,
    search_linear_then_verify,
    twist_iso,
)
from ydforge.linalg import Field, Matrix, identity, inverse
from ydforge.reps import twist_regular
from ydforge.report import StructureError
from ydforge.yd import adjoint_module, check_datum, check_yd_module, tensor_yd, trivial_datum

QQ = Field.rationals()
F7 = Field.gf(7)


@pytest.fixture(scope="module")
def h7():
    return sweedler_h4(F7)


def lam(h, x):
    return scaling_automorphism(h, x)


def coobject_module(h, x, name=""):
    return graded(adjoint_module(alpha_beta_datum(h, None, None, lam(h, x), None)), name or f"co{x}")


# data


def test_identity_twists_give_the_trivial_datum():
    h = sweedler_h4()
    d = alpha_beta_datum(h)
    t = trivial_datum(h)
    assert d.A.same_as(t.A) and d.C.same_as(t.C)


@pytest.mark.parametrize("twists", [(2, None, None, None), (None, "S2", None, None), (None, None, 3, None), (2, 3, "1/2", -1)])
def test_alpha_beta_data_are_valid(twists):
    h = sweedler_h4()
    mats = [None if x is None else (h.S @ h.S if x == "S2" else lam(h, x)) for x in twists]
    d = alpha_beta_datum(h, *mats)
    assert check_datum(d).empty
    m = adjoint_module(d)
    r = check_alpha_beta_module(m)
    assert r.empty


def test_alpha_beta_rejects_non_automorphism():
    h = sweedler_h4()
    with pytest.raises(StructureError):
        alpha_beta_datum(h, Matrix.zeros(QQ, 4, 4))


@given(st.data())
def test_specialized_and_general_compatibility_agree(data):
    h = sweedler_h4(F7)
    twists = [lam(h, data.draw(st.integers(1, 6))) for _ in range(4)]
    m = adjoint_module(alpha_beta_datum(h, *twists))
    A, C = m.action.entries(), m.coaction.entries()
    mat = A if data.draw(st.booleans()) else C
    i, j = data.draw(st.integers(0, len(mat) - 1)), data.draw(st.integers(0, len(mat[0]) - 1))
    mat[i][j] += data.draw(st.integers(0, 6))
    mm = m.with_structure(Matrix.from_rows(F7, A), Matrix.from_rows(F7, C))
    r = check_alpha_beta_module(mm)
    agree = next(f for f in r.findings if f.check == "specialized and general forms agree")
    assert agree.ok


def test_s3_conjugation_twist(hopfs):
    b = hopfs["kS3"]
    c = conjugation_automorphism(b.table, 1)
    for twists in ((c, None, None, None), (None, None, c, None), (c, c, c, c)):
        m = adjoint_module(alpha_beta_datum(b.hopf, *twists))
        assert check_alpha_beta_module(m).empty


# twist isomorphisms


def test_twist_iso_identity(h7):
    i = h7.id()
    assert twist_iso(h7, i, i, i) == (i, i)


def test_twist_isos_compose(h7):
    a, b = lam(h7, 2), lam(h7, 5)
    g1, g2 = lam(h7, 3), lam(h7, 4)
    x1, _ = twist_iso(h7, a, b, g1)
    x2, _ = twist_iso(h7, a @ g1, b @ g1, g2)
    x12, _ = twist_iso(h7, a, b, g1 @ g2)
    assert x1 @ x2 == x12


def test_twist_iso_rejects_non_automorphism(h7):
    with pytest.raises(StructureError):
        twist_iso(h7, h7.id(), h7.id(), Matrix.zeros(F7, 4, 4))


# classes


def test_class_algebra(h7):
    g, k = GradedClass("galois_coobject", h7, lam(h7, 2)), GradedClass("galois_coobject", h7, lam(h7, 3))
    assert g.compose(k).rep == lam(h7, 6)
    assert g.inverse().rep == lam(h7, 4)
    assert g.compose(g.inverse()).is_identity()
    assert g.conjugate(k).rep == g.rep  # scalings commute
    with pytest.raises(StructureError):
        g.compose(GradedClass("galois_object", h7, lam(h7, 2)))
    with pytest.raises(ValueError):
        GradedClass("other", h7, h7.id())


def test_class_witness_for_twists(h7):
    for kind, s in (("galois_object", "comodule_algebra"), ("galois_coobject", "module_coalgebra")):
        c = GradedClass(kind, h7, lam(h7, 3))
        struct = twist_regular(h7, lam(h7, 3), None, s)
        assert class_witness(struct, c) is not None
        other = twist_regular(h7, lam(h7, 2), None, s)
        assert class_witness(other, c) is None


def test_search_prefers_a_valid_hint():
    target = Matrix.from_rows(QQ, [[2, 0], [0, 2]])
    hint = identity(QQ, 2).scale(2)
    cons = [(lambda X: X, target)]
    assert search_linear_then_verify(QQ, 2, 2, cons, lambda X: True, hint=hint) == hint
    assert search_linear_then_verify(QQ, 2, 2, cons, lambda X: True, hint=identity(QQ, 2)) == target
    assert search_linear_then_verify(QQ, 2, 2, cons, lambda X: False) is None


# graded modules and the action


def test_graded_modules_match_their_classes(h7):
    for x in (2, 3):
        gm = coobject_module(h7, x)
        assert gm.right.rep == lam(h7, x)
        assert gm.left.is_identity()
        assert check_graded(gm).ok
    obj = graded(adjoint_module(alpha_beta_datum(h7, lam(h7, 2))))
    assert obj.left.rep == lam(h7, 2) and obj.right.is_identity()
    assert check_graded(obj).ok


def test_identity_class_acts_trivially(h7):
    gm = coobject_module(h7, 2)
    for kind in ("galois_coobject",):
        assert same_structure(phi_action(identity_class(h7, kind), gm), gm)
    cl = graded(adjoint_module(trivial_datum(h7)) if False else adjoint_module(alpha_beta_datum(h7)))
    assert same_structure(phi_action(identity_class(h7, "galois_object"), cl), cl)


def test_coobject_action_twists_the_action(h7):
    gm = graded(adjoint_module(alpha_beta_datum(h7)))
    g = GradedClass("galois_coobject", h7, lam(h7, 2))
    xg = phi_action(g, gm)
    assert xg.module.coaction == gm.module.coaction
    assert xg.module.action != gm.module.action
    assert check_yd_module(xg.module).empty
    assert same_structure(phi_action(g.inverse(), xg), gm)


def test_object_action_twists_the_coaction(h7):
    gm = graded(adjoint_module(alpha_beta_datum(h7, lam(h7, 3))))
    g = GradedClass("galois_object", h7, lam(h7, 2))
    xg = phi_action(g, gm)
    assert xg.module.action == gm.module.action
    assert check_yd_module(xg.module).empty
    assert same_structure(phi_action(g.inverse(), xg), gm)


@given(st.integers(1, 6), st.integers(1, 6), st.sampled_from(["galois_object", "galois_coobject"]))
def test_action_law(a, b, kind):
    h = sweedler_h4(F7)
    gm = graded(adjoint_module(alpha_beta_datum(h)))
    g, k = GradedClass(kind, h, lam(h, a)), GradedClass(kind, h, lam(h, b))
    assert same_structure(phi_action(k, phi_action(g, gm)), phi_action(g.compose(k), gm))


def test_action_rejects_mismatched_kind(h7):
    gm = coobject_module(h7, 2)  # C is twisted, so the object action does not apply
    with pytest.raises(StructureError):
        phi_action(GradedClass("galois_object", h7, lam(h7, 2)), gm)


# tensor grading and crossings


def test_composite_class_of_two_scalings(h7):
    x, y = coobject_module(h7, 2, "X"), coobject_module(h7, 3, "Y")
    t = tensor_yd(x.module, y.module)
    six = GradedClass("galois_coobject", h7, lam(h7, 6))
    assert x.right.compose(y.right).rep == six.rep
    w = class_witness(t.module.datum.C, six)
    assert w is not None and inverse(w) is not None
    # and it is not the class of either factor
    assert class_witness(t.module.datum.C, x.right) is None


def test_crossed_braiding_is_invertible(h7):
    x, y = coobject_module(h7, 2, "X"), coobject_module(h7, 3, "Y")
    cb = crossed_braiding(x, y)
    n = x.module.dim * y.module.dim
    assert cb.inverse @ cb.matrix == identity(F7, n)
    assert cb.matrix @ cb.inverse == identity(F7, n)
    assert cb.target.right.rep == x.right.conjugate(y.right).rep
    assert check_crossed_braiding(x, y).empty


def test_grading_and_crossing_report(h7):
    ms = [coobject_module(h7, 2, "X"), coobject_module(h7, 3, "Y")]
    r = check_grading_and_crossing(ms)
    assert r.empty, [f.check for f in r.failures]
    assert r.header["composition_order"] == COMPOSITION_ORDER
    checks = [f.check for f in r.findings]
    assert "X (x) Y: co-object class composes" in checks
    assert any("braiding intertwines coactions" in c for c in checks)


def test_identity_classes_pass_degenerately():
    h = sweedler_h4(F7)
    r = check_grading_and_crossing([graded(adjoint_module(alpha_beta_datum(h)), "M")])
    assert r.empty


def test_non_composable_pair_reports_empty_composite(hopfs, h7):
    kc2 = hopfs["kC2"].hopf
    ms = [graded(adjoint_module(alpha_beta_datum(h7)), "M"), graded(adjoint_module(alpha_beta_datum(kc2)), "N")]
    r = check_grading_and_crossing(ms)
    empties = [f for f in r.findings if f.detail == "empty composite"]
    assert {f.check for f in empties} == {"M (x) N: empty composite", "N (x) M: empty composite"}
    assert r.ok
