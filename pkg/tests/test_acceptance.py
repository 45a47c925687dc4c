"""Acceptance criteria, each at its stated exactness and under a minute.

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints one
pass/fail line per criterion.
"""

import json
import os
import random
import time

import pytest

from corruption import corrupt, differing_witnesses, scalar_slots
from ydforge.catalog import builtin_data, builtin_hopf_algebras, builtin_yd_modules, scaling_automorphism, sweedler_h4
from ydforge.cli import Options, main, run_command
from ydforge.documents import parse_document
from ydforge.galois import (
    check_bigalois_coobject,
    check_galois_braiding,
    check_lift_identity,
    check_sigma,
    galois_braiding,
    galois_coobject_report,
    lift_yd,
    lifted_coalgebra_to_K,
    transport,
)
from ydforge.grading import (
    GradedClass,
    alpha_beta_datum,
    check_crossed_braiding,
    check_grading_and_crossing,
    class_witness,
    crossed_braiding,
    graded,
    phi_action,
    same_structure,
)
from ydforge.hopf import Coalgebra, check_antipode_anti_properties, check_hopf, compute_antipode
from ydforge.linalg import Field, Matrix, identity, inverse, tensor_of_maps
from ydforge.reps import BimoduleCoalgebra, regular_bimodule_coalgebra, regular_module, trivial_module, twist_regular
from ydforge.yd import (
    YDDatum,
    adjoint_module,
    braid_map,
    check_braid_coherence,
    check_braid_linearity,
    check_halfbraid,
    check_yd_module,
    coaction_to_halfbraid,
    compatibility_verdicts,
    halfbraid_to_coaction,
    identify_regular,
    one_dimensional_module,
    tensor_yd,
    trivial_datum,
)

QQ = Field.rationals()
F7 = Field.gf(7)
BUDGET = 60.0
PERTURBATIONS = int(os.environ.get("YDFORGE_PERTURBATIONS", "10"))


@pytest.fixture(autouse=True)
def within_budget():
    t = time.perf_counter()
    yield
    assert time.perf_counter() - t < BUDGET


def criterion(n, title):
    return pytest.mark.criterion(n, title)


def failing(report):
    return [f.check for f in report.failures][:5]


def scaled_coobject(h, lam):
    return twist_regular(h, None, scaling_automorphism(h, lam), "module_coalgebra")


def same_datum(d, e):
    return d.H.field == e.H.field and d.H.same_as(e.H) and d.K.same_as(e.K) and d.A.same_as(e.A) and d.C.same_as(e.C)


def modules_over(d, modules):
    return {k: m for k, m in modules.items() if same_datum(d, m.datum)}


# 1. Hopf suite


@criterion(1, "Hopf suite: axioms, antipodes, S^2 != id and S^4 = id on H4")
def test_criterion_1_hopf_suite():
    hs = builtin_hopf_algebras()
    for name in ("kC2", "kC3_F7", "kC2_dual", "H4", "T3_F7", "kS3", "H4_F7"):
        h = hs[name].hopf
        assert check_hopf(h).empty, (name, failing(check_hopf(h)))
        assert check_antipode_anti_properties(h).empty, name
        S, S_inv = compute_antipode(h)
        assert S == h.S and S_inv == h.S_inv, name
    h = hs["H4"].hopf
    S2 = h.S @ h.S
    assert S2 != h.id()
    assert S2 @ S2 == h.id()


# 2. both compatibility forms agree


def _transported(m, P):
    F = m.field
    Pi = inverse(P)
    act = P @ m.action @ tensor_of_maps(identity(F, m.datum.A.dim), Pi)
    co = tensor_of_maps(P, identity(F, m.datum.C.dim)) @ m.coaction @ Pi
    return m.with_structure(act, co)


def _random_invertible(field, n, rng):
    while True:
        P = Matrix.from_rows(field, [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])
        if inverse(P) is not None:
            return P


def _raw_perturbation(m, rng):
    A, C = m.action.entries(), m.coaction.entries()
    for mat in rng.sample([A, C], rng.randint(1, 2)):
        i, j = rng.randrange(len(mat)), rng.randrange(len(mat[0]))
        mat[i][j] += rng.randint(1, 5)
    return m.with_structure(Matrix.from_rows(m.field, A), Matrix.from_rows(m.field, C))


@criterion(2, "compatibility: both forms agree on randomized perturbations per datum")
def test_criterion_2_compatibility_forms_agree():
    data, modules = builtin_data(), builtin_yd_modules()
    rng = random.Random(20261016)
    for dname, d in sorted(data.items()):
        over = [m for _, m in sorted(modules_over(d, modules).items())]
        assert over, dname
        counts = {"raw": 0, "transport": 0}
        verdicts = set()
        for trial in range(max(PERTURBATIONS, 10)):
            m = rng.choice(over)
            kind = "transport" if trial % 3 == 0 else "raw"
            mm = _transported(m, _random_invertible(m.field, m.dim, rng)) if kind == "transport" else _raw_perturbation(m, rng)
            if trial % 5 == 4:
                mm = _raw_perturbation(_transported(m, _random_invertible(m.field, m.dim, rng)), rng)
            plain, anti = compatibility_verdicts(mm)
            assert plain == anti, (dname, m.name, kind)
            counts[kind] += 1
            verdicts.add(plain)
        assert counts["raw"] >= 5 and counts["transport"] >= 3
        assert verdicts == {True, False}, dname


# 3. half-braid round trip


@criterion(3, "coaction -> half-braid -> coaction is the identity; heptagon at V = W = H")
def test_criterion_3_halfbraid_round_trip():
    for name, m in sorted(builtin_yd_modules().items()):
        b = coaction_to_halfbraid(m)
        assert halfbraid_to_coaction(b) == m.coaction, name
        r = check_halfbraid(b)
        assert r.empty, (name, failing(r))
        assert "heptagon" in [f.check for f in r.findings]


# 4. classical specialization


def _classical_braid(m):
    """``v (x) m -> m0 (x) m1 v`` at ``V = H``, written directly from the coaction."""
    h, F = m.datum.H, m.field
    out = [[0] * (h.dim * m.dim) for _ in range(m.dim * h.dim)]
    co = m.coaction
    for v in range(h.dim):
        for i in range(m.dim):
            col = v * m.dim + i
            for a in range(m.dim):
                for c in range(h.dim):
                    coef = co[a * h.dim + c, i]
                    if coef == 0:
                        continue
                    for t in range(h.dim):
                        prod = h.mult[t, c * h.dim + v]
                        if prod:
                            out[a * h.dim + t][col] += coef * prod
    return Matrix.from_rows(F, out)


@criterion(4, "classical braiding formula and both coherences on the trivial datum")
def test_criterion_4_classical_specialization():
    data, modules = builtin_data(), builtin_yd_modules()
    classical = {}
    for n, d in data.items():
        if n.startswith("trivial_"):
            classical.update(modules_over(d, modules))
    assert len(classical) >= 15
    for name, m in sorted(classical.items()):
        h = m.datum.H
        H, k = regular_module(h), trivial_module(h)
        b = braid_map(m, H)
        iota = identify_regular(m.datum.C, b.target)
        assert tensor_of_maps(identity(m.field, m.dim), iota) @ b.matrix == _classical_braid(m), name
        assert check_braid_linearity(b).empty, name
        r = check_braid_coherence(m, m, H, k)
        assert r.empty, (name, failing(r))
        assert {f.check for f in r.findings} >= {"beta vs psi", "beta on a tensor product"}


# 5. Galois suite


def _point_coalgebra(h):
    one = Matrix.identity(h.field, 1)
    return BimoduleCoalgebra(Coalgebra(one, one), h.counit, h.counit, h, h, "k")


@criterion(5, "Galois certificates, Morita and sigma identities, braiding inverses, dimension obstruction")
def test_criterion_5_galois_suite():
    h = sweedler_h4()
    needed = {
        "wedge on a coproduct",
        "vee on a coproduct",
        "wedge/vee associativity",
        "u1(x)u2 grouplike",
        "vee^-1(1) = u1(x)u2",
    }
    sigma_needed = {"sigma is a coalgebra map", "sigma inverts against wedge", "sigma twists the actions"}
    V = adjoint_module(trivial_datum(h))
    for C in (regular_bimodule_coalgebra(h), scaled_coobject(h, 2), scaled_coobject(h, 3)):
        r, cert = galois_coobject_report(C)
        assert cert is not None and r.empty, failing(r)
        assert needed <= {f.check for f in r.findings}
        s = check_sigma(cert)
        assert s.empty and sigma_needed <= {f.check for f in s.findings}
        d = YDDatum(h, h, trivial_datum(h).A, C)
        for m in (adjoint_module(d), one_dimensional_module(d, grouplike=h.unit)):
            gb = galois_braiding(cert, m, V)
            assert gb.backward @ gb.forward == identity(QQ, gb.forward.cols)
            assert gb.forward @ gb.backward == identity(QQ, gb.forward.rows)
            assert check_galois_braiding(cert, m, V).empty
    r, cert = galois_coobject_report(_point_coalgebra(h))
    assert cert is None
    assert r.failures[0].check == "not Galois: dimension obstruction"


# 6. lifting


@criterion(6, "lift along scaled co-objects is classical; lift along H is the identity")
def test_criterion_6_lift():
    modules = builtin_yd_modules()
    h = modules["H4_adjoint"].datum.H
    for lam in (2, 3):
        cert = check_bigalois_coobject(scaled_coobject(h, lam))
        for name in ("H4_adjoint", "H4_k", "H4_free"):
            L = lift_yd(cert, modules[name])
            g = lifted_coalgebra_to_K(cert, L)
            assert inverse(g) is not None
            T = transport(L.module, identity(QQ, L.module.dim), g, trivial_datum(h))
            r = check_yd_module(T)
            assert r.empty, (lam, name, failing(r))
    for name in ("H4_adjoint", "H4_free", "kC2_conjugation", "kS3_adjoint", "T3_F7_adjoint"):
        V = modules[name]
        cert = check_bigalois_coobject(regular_bimodule_coalgebra(V.datum.H))
        r = check_lift_identity(cert, V)
        assert r.empty, (name, failing(r))
        assert "space identification bijective" in [f.check for f in r.findings]


# 7. crossed grading


@criterion(7, "crossed grading over GF(7): 2 * 3 = 6, the action law, crossed braiding")
def test_criterion_7_crossed_grading():
    h = sweedler_h4(F7)
    lam = lambda x: scaling_automorphism(h, x)  # noqa: E731
    X = graded(adjoint_module(alpha_beta_datum(h, None, None, lam(2), None)), "X")
    Y = graded(adjoint_module(alpha_beta_datum(h, None, None, lam(3), None)), "Y")
    Z = graded(adjoint_module(alpha_beta_datum(h, lam(2))), "Z")

    # the tensor grading, with an explicit intertwiner
    six = GradedClass("galois_coobject", h, lam(6))
    assert X.right.compose(Y.right).rep == six.rep
    t = tensor_yd(X.module, Y.module)
    w = class_witness(t.module.datum.C, six)
    assert w is not None and inverse(w) is not None

    # the action law and the conjugated class
    for kind, M in (("galois_coobject", X), ("galois_object", Z)):
        for a in range(1, 7):
            g = GradedClass(kind, h, lam(a))
            Mg = phi_action(g, M)
            assert check_yd_module(Mg.module).empty
            side = Mg.right if kind == "galois_coobject" else Mg.left
            base = M.right if kind == "galois_coobject" else M.left
            assert side.rep == g.inverse().compose(base).compose(g).rep
            assert same_structure(phi_action(g.inverse(), Mg), M)
            for b in (2, 3, 5):
                k = GradedClass(kind, h, lam(b))
                assert same_structure(phi_action(k, Mg), phi_action(g.compose(k), M))

    # the crossed braiding
    for P, Q in ((X, Y), (Y, X), (X, X)):
        cb = crossed_braiding(P, Q)
        n = P.module.dim * Q.module.dim
        assert cb.inverse @ cb.matrix == identity(F7, n)
        r = check_crossed_braiding(P, Q)
        assert r.empty, failing(r)
        assert {"braiding intertwines actions", "braiding intertwines coactions"} <= {f.check for f in r.findings}
    r = check_grading_and_crossing([X, Y, Z])
    assert r.empty, failing(r)


# 8. the command line


@criterion(8, "CLI: all fixtures pass; single corruptions fail with a differing witness")
def test_criterion_8_all_fixtures_pass(fixtures_dir, capsys):
    code = main(["all", str(fixtures_dir)])
    out = json.loads(capsys.readouterr().out)
    assert code == 0 and out["verdict"] == "pass"
    assert len(out["findings"]) > 1000


def _corruptions(fixtures_dir, names, per_file, seed):
    rng = random.Random(seed)
    for name in names:
        raw = json.loads((fixtures_dir / name).read_text())
        slots = scalar_slots(raw)
        chosen = slots if per_file is None else rng.sample(slots, per_file)
        for path in chosen:
            yield name, path, corrupt(raw, path)


def _assert_flips(name, path, raw):
    r = run_command(parse_document(raw), "all", Options(matrices=False))
    assert r.verdict == "fail", (name, path)
    assert differing_witnesses(r), (name, path)


@criterion(8, "CLI: all fixtures pass; single corruptions fail with a differing witness")
def test_criterion_8_every_constant_of_small_fixtures(fixtures_dir):
    for name, path, raw in _corruptions(fixtures_dir, ["classical_kc2.json", "kc2_dual.json"], None, 0):
        _assert_flips(name, path, raw)


@criterion(8, "CLI: all fixtures pass; single corruptions fail with a differing witness")
def test_criterion_8_sampled_constants_of_medium_fixtures(fixtures_dir):
    files = ["kc3_f7.json", "h4_f7_graded.json", "ks3.json"]
    for name, path, raw in _corruptions(fixtures_dir, files, 3, 1):
        _assert_flips(name, path, raw)


@criterion(8, "CLI: all fixtures pass; single corruptions fail with a differing witness")
@pytest.mark.parametrize("name", ["sweedler.json", "taft3_f7.json"])
def test_criterion_8_sampled_constants_of_large_fixtures(fixtures_dir, name):
    for name, path, raw in _corruptions(fixtures_dir, [name], 2, 2):
        _assert_flips(name, path, raw)
