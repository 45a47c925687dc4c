import itertools

import pytest
from hypothesis import given, strategies as st

from ydforge.catalog import scaling_automorphism, sweedler_h4
from ydforge.grading import find_algebra_iso
from ydforge.linalg import Field, Matrix, hstack, identity, rank, tensor_of_maps
from ydforge.reps import (
    BimoduleCoalgebra,
    Comodule,
    Module,
    algebra_generators,
    balanced_coalgebra,
    balanced_tensor,
    bicomodule_algebra_from_cotensor,
    check_bicomodule_algebra,
    check_bimodule_coalgebra,
    check_comodule,
    check_module,
    check_psi_coherence,
    cotensor,
    opmonoidal_psi,
    regular_bicomodule_algebra,
    regular_bimodule_coalgebra,
    regular_module,
    tensor_module,
    trivial_comodule,
    trivial_module,
    twist_regular,
)
from ydforge.report import StructureError

QQ = Field.rationals()
F7 = Field.gf(7)
ALL = ["kC2", "kC3_F7", "kS3", "kC2_dual", "H4", "H4_F7", "T3_F7"]


def full_relations(right: Module, left: Module) -> Matrix:
    """Balancing relations over every basis element, not just generators."""
    F = right.field
    d = right.algebra.dim
    ix, iv = identity(F, right.dim), identity(F, left.dim)
    blocks = []
    for h in range(d):
        e = Matrix.unit_vector(F, d, h)
        blocks.append(tensor_of_maps(right.action @ tensor_of_maps(ix, e), iv) - tensor_of_maps(ix, left.action @ tensor_of_maps(e, iv)))
    return hstack(blocks)


@pytest.mark.parametrize("name", ALL)
def test_regular_and_trivial_structures(hopfs, name):
    h = hopfs[name].hopf
    for side in ("left", "right"):
        assert check_module(regular_module(h, side)).empty
        assert check_module(trivial_module(h, side)).empty
    assert check_comodule(trivial_comodule(h)).empty
    assert check_comodule(Comodule(h.coalg, h.dim, h.comult, "left")).empty
    assert check_bicomodule_algebra(regular_bicomodule_algebra(h)).empty
    assert check_bimodule_coalgebra(regular_bimodule_coalgebra(h)).empty


def test_perturbed_action_fails_with_witness():
    h = sweedler_h4()
    e = h.mult.entries()
    e[2][1 * 4 + 0] += 1  # g . 1 gains an x
    r = check_module(Module(h.alg, 4, Matrix.from_rows(QQ, e)))
    assert not r.ok
    w = r.failures[0].witness
    assert w["lhs"] != w["rhs"]


def test_module_shape_is_validated():
    h = sweedler_h4()
    with pytest.raises(ValueError):
        Module(h.alg, 3, h.mult)


@pytest.mark.parametrize("lam_a,lam_b", [(2, 1), (1, 3), (2, -1), ("1/2", 5)])
def test_twisted_bicomodule_algebras_pass(lam_a, lam_b):
    h = sweedler_h4()
    A = twist_regular(h, scaling_automorphism(h, lam_a), scaling_automorphism(h, lam_b), "comodule_algebra")
    C = twist_regular(h, scaling_automorphism(h, lam_a), scaling_automorphism(h, lam_b), "module_coalgebra")
    assert check_bicomodule_algebra(A).empty
    assert check_bimodule_coalgebra(C).empty


def test_twist_by_identity_is_regular():
    h = sweedler_h4()
    assert twist_regular(h, h.id(), h.id(), "comodule_algebra").same_as(regular_bicomodule_algebra(h))
    assert twist_regular(h, None, None, "module_coalgebra").same_as(regular_bimodule_coalgebra(h))


def test_left_twisted_coaction_of_x():
    # x -> alpha(x1) (x) x2 = 2x (x) 1 + g (x) x
    h = sweedler_h4()
    A = twist_regular(h, scaling_automorphism(h, 2), None, "comodule_algebra")
    col = A.left_coaction.column_values(2)
    expected = [0] * 16
    expected[2 * 4 + 0] = 2
    expected[1 * 4 + 2] = 1
    assert col == expected


def test_twist_by_non_automorphism_rejected():
    h = sweedler_h4()
    bad = Matrix.from_rows(QQ, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    with pytest.raises(StructureError):
        twist_regular(h, bad, None, "module_coalgebra")
    C = twist_regular(h, bad, None, "module_coalgebra", check=False)
    assert not check_bimodule_coalgebra(C).ok


# balanced tensor products


def test_balanced_examples():
    h = sweedler_h4()
    C = regular_bimodule_coalgebra(h)
    H = regular_module(h)
    assert balanced_tensor(C.right_module(), H).dim == C.dim
    assert balanced_tensor(regular_module(h, "right"), trivial_module(h)).dim == 1
    # H4 (x)_H4 H4: the balancing relations have rank 12
    assert rank(full_relations(regular_module(h, "right"), H)) == 12
    assert balanced_tensor(regular_module(h, "right"), H).dim == 4


@pytest.mark.parametrize("name", ALL)
def test_generator_relations_span_all_relations(hopfs, name):
    h = hopfs[name].hopf
    gens = algebra_generators(h.alg)
    assert len(gens) < h.dim
    for right, left in (
        (regular_module(h, "right"), regular_module(h)),
        (regular_module(h, "right"), trivial_module(h)),
        (trivial_module(h, "right"), tensor_module(h, regular_module(h), trivial_module(h))),
    ):
        full = full_relations(right, left)
        q = balanced_tensor(right, left)
        assert q.dim == right.dim * left.dim - rank(full)
        assert (q.projection @ full).is_zero()


# cotensor products


def test_cotensor_examples():
    h = sweedler_h4()
    A = regular_bicomodule_algebra(h)
    assert cotensor(A.right_comodule(), A.left_comodule()).dim == 4
    k = Comodule(h.coalg, 1, h.unit, "left")
    assert cotensor(A.right_comodule(), k).dim == 1


@pytest.mark.parametrize("field,a,b", [(QQ, 2, 3), (QQ, -1, "1/2"), (F7, 2, 3), (F7, 3, 5)])
def test_cotensor_of_twists_is_twist_of_product(field, a, b):
    h = sweedler_h4(field)
    sa, sb = scaling_automorphism(h, a), scaling_automorphism(h, b)
    A = twist_regular(h, sa, None, "comodule_algebra")
    B = twist_regular(h, sb, None, "comodule_algebra")
    AB, sub = bicomodule_algebra_from_cotensor(A, B)
    assert sub.dim == 4
    assert check_bicomodule_algebra(AB).empty
    target = twist_regular(h, sa @ sb, None, "comodule_algebra")
    assert find_algebra_iso(target, AB) is not None


# psi


def test_psi_on_trivial_modules_is_identity():
    h = sweedler_h4()
    C = regular_bimodule_coalgebra(h)
    k = trivial_module(h)
    psi = opmonoidal_psi(C, k, k)
    assert psi == identity(QQ, 1)


def test_psi_matches_representative_oracle():
    h = sweedler_h4()
    C = regular_bimodule_coalgebra(h)
    V = regular_module(h)
    VW = tensor_module(h, V, V)
    src = balanced_tensor(C.right_module(), VW)
    q = balanced_tensor(C.right_module(), V)
    psi = opmonoidal_psi(C, V, V)
    D = h.comult.entries()
    for col in range(src.dim):
        rep = src.section.column_values(col)
        idx = next(i for i, v in enumerate(rep) if v)
        c, v, w = idx // 16, (idx // 4) % 4, idx % 4
        # c1 (x) v (x) c2 (x) w by hand, then project each half
        out = Matrix.zeros(QQ, q.dim * q.dim, 1)
        for a, b in itertools.product(range(4), repeat=2):
            coeff = D[a * 4 + b][c]
            if coeff:
                left = q.projection @ Matrix.unit_vector(QQ, 16, a * 4 + v)
                right = q.projection @ Matrix.unit_vector(QQ, 16, b * 4 + w)
                out = out + tensor_of_maps(left, right).scale(coeff)
        assert psi.take_cols([col]) == out


@pytest.mark.parametrize("lam", [1, 2])
def test_psi_coherence(lam):
    h = sweedler_h4()
    C = twist_regular(h, None, scaling_automorphism(h, lam), "module_coalgebra")
    V, k = regular_module(h), trivial_module(h)
    assert check_psi_coherence(C, V, k, V).ok


def test_psi_rejects_inconsistent_coalgebra():
    h = sweedler_h4()
    C = regular_bimodule_coalgebra(h)
    # a comultiplication that ignores the right action is not balanced
    swapped = BimoduleCoalgebra(C.coalg, C.left_action, h.mult @ tensor_of_maps(h.id(), h.S), h, h)
    V = regular_module(h)
    with pytest.raises(StructureError):
        opmonoidal_psi(swapped, V, V)


def test_balanced_coalgebra_of_regulars():
    h = sweedler_h4()
    R = regular_bimodule_coalgebra(h)
    bc = balanced_coalgebra(R, R)
    assert bc.coalgebra.dim == 4
    assert check_bimodule_coalgebra(bc.coalgebra).empty


@given(st.integers(1, 6), st.integers(1, 6))
def test_balanced_coalgebra_of_twists_is_valid(a, b):
    h = sweedler_h4(F7)
    C1 = twist_regular(h, scaling_automorphism(h, a), None, "module_coalgebra")
    C2 = twist_regular(h, None, scaling_automorphism(h, b), "module_coalgebra")
    bc = balanced_coalgebra(C1, C2)
    assert bc.coalgebra.dim == 4
    assert check_bimodule_coalgebra(bc.coalgebra).empty
