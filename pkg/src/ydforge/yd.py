"""YD data, generalized YD modules, their tensor product, braidings and
half-braids.

All modules are left-right: a left ``A``-action and a right ``C``-coaction.
Sweedler legs follow the usual pattern ``a-1 (x) a0 (x) a1`` for the two
coactions of ``A`` and ``m0 (x) m1`` for the coaction of ``M``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .hopf import Bialgebra, HopfAlgebra, check_bialgebra, check_hopf
from .linalg import DimensionError, Field, Matrix, MatrixMemo, QuotientSpace, apply_on_factor, hstack, identity, quotient_by, tensor_of_maps
from .reps import (
    BicomoduleAlgebra,
    BimoduleCoalgebra,
    Comodule,
    Module,
    balanced_coalgebra,
    balanced_tensor,
    balancing_relations,
    bicomodule_algebra_from_cotensor,
    check_bicomodule_algebra,
    check_bimodule_coalgebra,
    check_comodule,
    check_module,
    cotensor,
    opmonoidal_psi,
    regular_bicomodule_algebra,
    regular_bimodule_coalgebra,
    regular_module,
    tensor_module,
)
from .report import Report, StructureError, compare_maps, expect


def _id(F: Field, n: int) -> Matrix:
    return identity(F, n)


@dataclass(eq=False)
class YDDatum:
    """``(H, K, A, C)``: an ``(H,K)``-bicomodule algebra and a ``(K,H)``-bimodule coalgebra."""

    H: Bialgebra
    K: Bialgebra
    A: BicomoduleAlgebra
    C: BimoduleCoalgebra
    name: str = ""
    meta: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        if not (self.A.H.same_as(self.H) and self.A.K.same_as(self.K)):
            raise StructureError("datum: A is not an (H,K)-bicomodule algebra")
        if not (self.C.K.same_as(self.K) and self.C.H.same_as(self.H)):
            raise StructureError("datum: C is not a (K,H)-bimodule coalgebra")
        fields = {self.H.field, self.K.field, self.A.field, self.C.field}
        if len(fields) != 1:
            raise StructureError("datum: structures live over different fields")

    @property
    def field(self) -> Field:
        return self.H.field


def trivial_datum(h: HopfAlgebra) -> YDDatum:
    """``(H, H, H, H)`` with the regular structures; its modules are classical YD modules."""
    return YDDatum(h, h, regular_bicomodule_algebra(h), regular_bimodule_coalgebra(h), f"trivial({h.name})")


def check_datum(d: YDDatum) -> Report:
    r = Report("check_datum")
    for label, b in (("H", d.H), ("K", d.K)):
        sub = check_hopf(b) if isinstance(b, HopfAlgebra) else check_bialgebra(b)
        r.extend(sub, f"{label}: ")
        if d.K is d.H:
            break
    r.extend(check_bicomodule_algebra(d.A), "A: ")
    r.extend(check_bimodule_coalgebra(d.C), "C: ")
    return r


@dataclass(eq=False)
class GenYDModule:
    """A left ``A``-module and right ``C``-comodule over a datum."""

    datum: YDDatum
    dim: int
    action: Matrix
    coaction: Matrix
    name: str = ""

    def __post_init__(self):
        da, dc = self.datum.A.dim, self.datum.C.dim
        if self.action.shape != (self.dim, da * self.dim):
            raise DimensionError(f"action shape {self.action.shape} does not fit dim {self.dim}")
        if self.coaction.shape != (self.dim * dc, self.dim):
            raise DimensionError(f"coaction shape {self.coaction.shape} does not fit dim {self.dim}")

    @property
    def field(self) -> Field:
        return self.datum.field

    def module(self) -> Module:
        return Module(self.datum.A.alg, self.dim, self.action, "left")

    def comodule(self) -> Comodule:
        return Comodule(self.datum.C.coalg, self.dim, self.coaction, "right")

    def with_structure(self, action: Matrix | None = None, coaction: Matrix | None = None, name: str | None = None) -> "GenYDModule":
        return GenYDModule(
            self.datum,
            self.dim,
            self.action if action is None else action,
            self.coaction if coaction is None else coaction,
            self.name if name is None else name,
        )


# compatibility


def compatibility_sides(m: GenYDModule) -> tuple[Matrix, Matrix]:
    """Both sides of ``(a0 m)0 (x) (a0 m)1 < a-1 = a0 m0 (x) a1 > m1`` as maps ``A (x) M -> M (x) C``."""
    d = m.datum
    F = m.field
    dh, dk, da, dc, dm = d.H.dim, d.K.dim, d.A.dim, d.C.dim, m.dim
    lam, rhoA = d.A.left_coaction, d.A.right_coaction
    # LHS: A M -> H A M -> H M -> H M C -> M C H -> M C
    s = tensor_of_maps(lam, _id(F, dm))
    s = apply_on_factor(m.action, s, dh)
    s = apply_on_factor(m.coaction, s, dh)
    s = s.permute_out([dh, dm, dc], [1, 2, 0])
    lhs = apply_on_factor(d.C.right_action, s, dm)
    # RHS, one basis vector a_j at a time: sum over a_j -> a' (x) k of a' m0 (x) k > m1
    coeffs = [rhoA.take_cols([j]) for j in range(da)]
    rhs = _sum_over_legs(m, coeffs, dk, lambda w: d.C.left_action @ tensor_of_maps(w, _id(F, dc)))
    return lhs, rhs


def antipode_compatibility_sides(m: GenYDModule) -> tuple[Matrix, Matrix] | None:
    """``(am)0 (x) (am)1 = a0 m0 (x) a1 > m1 < S^-1(a-1)``; None without ``S^-1`` on ``H``."""
    d = m.datum
    if not isinstance(d.H, HopfAlgebra) or d.H.antipode_inverse is None:
        return None
    F = m.field
    dh, dk, da, dc, dm = d.H.dim, d.K.dim, d.A.dim, d.C.dim, m.dim
    lhs = m.coaction @ m.action
    both = tensor_of_maps(_id(F, dh), d.A.right_coaction) @ d.A.left_coaction  # A -> H A K
    # k (x) c (x) h -> k > c < S^-1(h)
    right = d.C.right_action @ tensor_of_maps(d.C.left_action, d.H.S_inv)
    coeffs = [both.take_cols([j]).permute_out([dh, da, dk], [1, 0, 2]) for j in range(da)]
    endo = lambda w: right @ tensor_of_maps(w, _id(F, dc)).permute_out([dh, dk, dc], [1, 2, 0])  # noqa: E731
    return lhs, _sum_over_legs(m, coeffs, dh * dk, endo)


def _sum_over_legs(m: GenYDModule, coeffs: list[Matrix], daux: int, endo) -> Matrix:
    """Map ``a_j (x) m -> sum a' m0 (x) endo(w) m1`` where ``a_j = sum a' (x) w`` is ``coeffs[j]``.

    ``coeffs[j]`` is a column over ``A (x) Aux``; ``endo(w)`` is the ``C``-endomorphism
    attached to the coefficient vector ``w`` in ``Aux``.  Working per basis vector
    keeps every intermediate at size ``dim M * dim C``.
    """
    F = m.field
    d = m.datum
    da, dc, dm = d.A.dim, d.C.dim, m.dim
    blocks = []
    for col in coeffs:
        block = Matrix.zeros(F, dm * dc, dm)
        for a in range(da):
            w = col.take_rows(range(a * daux, (a + 1) * daux))
            if w.is_zero():
                continue
            act = m.action.take_cols(range(a * dm, (a + 1) * dm))
            block = block + apply_on_factor(act, apply_on_factor(endo(w), m.coaction, dm), 1, dc)
        blocks.append(block)
    return hstack(blocks)


def check_yd_module(m: GenYDModule, structure: bool = True) -> Report:
    """Module and comodule axioms plus both forms of the YD compatibility."""
    r = Report("check_yd_module")
    if structure:
        r.extend(check_module(m.module()), "action: ")
        r.extend(check_comodule(m.comodule()), "coaction: ")
    d = m.datum
    dom = [d.A.dim, m.dim]
    lhs, rhs = compatibility_sides(m)
    first = r.add(compare_maps("YD compatibility", "(a0m)0 (x) (a0m)1<a-1 = a0m0 (x) a1>m1", lhs, rhs, dom))
    sides = antipode_compatibility_sides(m)
    if sides is not None:
        second = r.add(compare_maps("YD compatibility (S^-1 form)", "(am)0 (x) (am)1 = a0m0 (x) a1>m1<S^-1(a-1)", *sides, dom))
        r.note(
            "compatibility forms agree",
            "both forms are equivalent when S^-1 exists",
            first.ok == second.ok,
            None if first.ok == second.ok else f"plain form {first.ok}, S^-1 form {second.ok}",
        )
    return r


def compatibility_verdicts(m: GenYDModule) -> tuple[bool, bool | None]:
    """Pass/fail of the plain and the ``S^-1`` compatibility forms (no axiom checks)."""
    lhs, rhs = compatibility_sides(m)
    sides = antipode_compatibility_sides(m)
    return lhs == rhs, None if sides is None else sides[0] == sides[1]


# module builders


def one_dimensional_module(d: YDDatum, character: Matrix | None = None, grouplike: Matrix | None = None, name: str = "k") -> GenYDModule:
    """``k`` with ``a . 1 = chi(a)`` and ``1 -> 1 (x) u`` for a grouplike ``u`` of ``C``.

    Defaults use the counit of ``H`` and the unit of ``H`` when ``A`` and ``C`` have the
    dimension of ``H`` (twisted regular data).
    """
    if character is None:
        if d.A.dim != d.H.dim:
            raise StructureError("no default character for A")
        character = d.H.counit
    if grouplike is None:
        if d.C.dim != d.H.dim:
            raise StructureError("no default grouplike for C")
        grouplike = d.H.unit
    return GenYDModule(d, 1, character, grouplike, name)


def adjoint_module(d: YDDatum, character: Matrix | None = None, name: str = "") -> GenYDModule:
    """``M = C`` with ``rho = Delta_C`` and ``a . c = chi(a0) a1 > c < S^-1(a-1)``."""
    F = d.field
    dh, dk, da, dc = d.H.dim, d.K.dim, d.A.dim, d.C.dim
    if character is None:
        if d.A.dim != d.H.dim:
            raise StructureError("no default character for A")
        character = d.H.counit
    both = tensor_of_maps(_id(F, dh), d.A.right_coaction) @ d.A.left_coaction
    legs = tensor_of_maps(_id(F, dh), character, _id(F, dk)) @ both  # A -> H K
    t = tensor_of_maps(legs, _id(F, dc)).permute_out([dh, dk, dc], [1, 2, 0])
    act = d.C.right_action @ tensor_of_maps(d.C.left_action, d.H.S_inv) @ t
    return GenYDModule(d, dc, act, d.C.coalg.comult, name or f"adjoint({d.C.name or 'C'})")


def free_module(d: YDDatum, name: str = "") -> GenYDModule:
    """``A (x) C`` with ``a'(a (x) c) = a'0 a (x) a'1 > c < S^-1(a'-1)`` and ``rho = a (x) Delta c``."""
    F = d.field
    dh, dk, da, dc = d.H.dim, d.K.dim, d.A.dim, d.C.dim
    both = tensor_of_maps(_id(F, dh), d.A.right_coaction) @ d.A.left_coaction  # A -> H A K
    t = tensor_of_maps(both, _id(F, da * dc)).permute_out([dh, da, dk, da, dc], [1, 3, 2, 4, 0])
    act = tensor_of_maps(d.A.alg.mult, d.C.right_action @ tensor_of_maps(d.C.left_action, d.H.S_inv)) @ t
    coact = tensor_of_maps(_id(F, da), d.C.coalg.comult)
    return GenYDModule(d, da * dc, act, coact, name or "free")


def conjugation_module(table, h: HopfAlgebra, twist: list[int] | None = None, name: str = "") -> GenYDModule:
    """``kG`` with ``x . e_g = e_{x g t(x)^-1}`` and ``e_g -> e_g (x) g`` over the trivial datum.

    ``twist`` is a group automorphism as an index permutation (identity by default).
    """
    from .catalog import group_data

    _, inv = group_data(table)
    n = len(table)
    t = twist or list(range(n))
    F = h.field
    act = Matrix.zeros(F, n, n * n).fractions()
    for x in range(n):
        for g in range(n):
            act[table[table[x][g]][inv[t[x]]], x * n + g] = 1
    coact = Matrix.zeros(F, n * n, n).fractions()
    for g in range(n):
        coact[g * n + g, g] = 1
    return GenYDModule(trivial_datum(h), n, Matrix.from_scalars(F, act), Matrix.from_scalars(F, coact), name or "conjugation")


# tensor product


@dataclass(eq=False)
class TensorProduct:
    """``M (x) N`` over the composed datum, with the cotensor inclusion and the coalgebra quotient."""

    module: GenYDModule
    left: GenYDModule
    right: GenYDModule
    inclusion: Matrix
    coalgebra_quotient: QuotientSpace


def _datum_key(d: YDDatum) -> tuple:
    parts = []
    for b in (d.H, d.K):
        parts += [b.mult, b.unit, b.comult, b.counit]
    parts += [d.A.alg.mult, d.A.alg.unit, d.A.left_coaction, d.A.right_coaction]
    parts += [d.C.coalg.comult, d.C.coalg.counit, d.C.left_action, d.C.right_action]
    return MatrixMemo.key(*parts)


_composed_memo = MatrixMemo(128)


def compose_data(d1: YDDatum, d2: YDDatum) -> tuple[YDDatum, Matrix, QuotientSpace]:
    """``(H,K,A,C)`` and ``(K,L,B,D)`` give ``(H, L, A box^K B, D (x)_K C)``.

    The result is cached by content, so repeated tensor products share one composite datum.
    """
    if not d1.K.same_as(d2.H):
        raise StructureError("tensor: the inner bialgebras differ")
    key = (_datum_key(d1), _datum_key(d2))
    hit = _composed_memo.get(key)
    if hit is not None:
        return hit
    return _composed_memo.put(key, _compose_data(d1, d2))


def _compose_data(d1: YDDatum, d2: YDDatum) -> tuple[YDDatum, Matrix, QuotientSpace]:
    AB, sub = bicomodule_algebra_from_cotensor(d1.A, d2.A)
    DC = balanced_coalgebra(d2.C, d1.C)
    datum = YDDatum(d1.H, d2.K, AB, DC.coalgebra, f"({d1.name}*{d2.name})")
    return datum, sub.basis, DC.quotient


def tensor_yd(m: GenYDModule, n: GenYDModule) -> TensorProduct:
    """``(a (x) b)(m (x) n) = am (x) bn`` and ``m (x) n -> m0 (x) n0 (x) (n1 (x)_K m1)``."""
    d, inc, q = compose_data(m.datum, n.datum)
    F = m.field
    da, db, dm, dn = m.datum.A.dim, n.datum.A.dim, m.dim, n.dim
    dc, dd = m.datum.C.dim, n.datum.C.dim
    pair = tensor_of_maps(m.action, n.action).permute_in([da, db, dm, dn], [0, 2, 1, 3])
    act = pair @ tensor_of_maps(inc, _id(F, dm * dn))
    co = tensor_of_maps(m.coaction, n.coaction).permute_out([dm, dc, dn, dd], [0, 2, 3, 1])
    coact = tensor_of_maps(_id(F, dm * dn), q.projection) @ co
    out = GenYDModule(d, dm * dn, act, coact, f"({m.name}(x){n.name})")
    return TensorProduct(out, m, n, inc, q)


# braidings


@dataclass(eq=False)
class Braid:
    """``beta: V (x) M -> M (x) (C (x)_H V)`` together with the target quotient."""

    matrix: Matrix
    target: QuotientSpace
    V: Module
    M: GenYDModule


def _coefficient_quotient(m: GenYDModule, V: Module) -> QuotientSpace:
    if V.side != "left" or V.algebra.dim != m.datum.H.dim:
        raise StructureError("braid: V must be a left H-module")
    return balanced_tensor(m.datum.C.right_module(), V)


def braid_map(m: GenYDModule, V: Module) -> Braid:
    """``beta(v (x) m) = m0 (x) (m1 (x)_H v)``."""
    F = m.field
    q = _coefficient_quotient(m, V)
    dv, dm, dc = V.dim, m.dim, m.datum.C.dim
    s = tensor_of_maps(_id(F, dv), m.coaction).permute_out([dv, dm, dc], [1, 2, 0])
    return Braid(tensor_of_maps(_id(F, dm), q.projection) @ s, q, V, m)


def coefficient_action(C: BimoduleCoalgebra, q: QuotientSpace, dv: int) -> Matrix:
    """Left ``K``-action on ``C (x)_H V`` through the first factor."""
    F = C.field
    rep = q.projection @ tensor_of_maps(C.left_action, _id(F, dv))
    return rep @ tensor_of_maps(_id(F, C.K.dim), q.section)


def diagonal_source_action(m: GenYDModule, V: Module) -> Matrix:
    """``a (v (x) m) = a-1 v (x) a0 m`` on ``V (x) M``."""
    d, F = m.datum, m.field
    dh, da, dv, dm = d.H.dim, d.A.dim, V.dim, m.dim
    t = tensor_of_maps(d.A.left_coaction, _id(F, dv * dm)).permute_out([dh, da, dv, dm], [0, 2, 1, 3])
    return tensor_of_maps(V.action, m.action) @ t


def diagonal_target_action(m: GenYDModule, q_action: Matrix, dq: int) -> Matrix:
    """``a (m (x) x) = a0 m (x) a1 x`` on ``M (x) X`` for a left ``K``-module ``X``."""
    d, F = m.datum, m.field
    da, dk, dm = d.A.dim, d.K.dim, m.dim
    t = tensor_of_maps(d.A.right_coaction, _id(F, dm * dq)).permute_out([da, dk, dm, dq], [0, 2, 1, 3])
    return tensor_of_maps(m.action, q_action) @ t


def check_braid_linearity(b: Braid) -> Report:
    """``beta`` is ``A``-linear and well defined."""
    r = Report("braid A-linearity")
    m, V, q = b.M, b.V, b.target
    F = m.field
    da = m.datum.A.dim
    src = diagonal_source_action(m, V)
    qa = coefficient_action(m.datum.C, q, V.dim)
    rel = q.relations.basis
    rep = q.projection @ tensor_of_maps(m.datum.C.left_action, _id(F, V.dim))
    r.note("K-action on C (x)_H V well defined", "k>(c<h) (x) v = k>c (x) h>v", (rep @ tensor_of_maps(_id(F, m.datum.K.dim), rel)).is_zero())
    tgt = diagonal_target_action(m, qa, q.dim)
    expect(
        r,
        "beta is A-linear",
        "beta(a-1 v (x) a0 m) = a0 m0 (x) a1>(m1 (x)_H v)",
        b.matrix @ src,
        tgt @ tensor_of_maps(_id(F, da), b.matrix),
        [da, V.dim, m.dim],
    )
    return r


def induced_map(C: BimoduleCoalgebra, f: Matrix, V: Module, W: Module) -> Matrix:
    """``id_C (x)_H f: C (x)_H V -> C (x)_H W``."""
    qv = balanced_tensor(C.right_module(), V)
    qw = balanced_tensor(C.right_module(), W)
    return qv.descend(qw.projection @ tensor_of_maps(_id(C.field, C.dim), f), "id (x)_H f")


def check_braid_naturality(m: GenYDModule, V: Module, W: Module, f: Matrix) -> Report:
    """``(id_M (x) (id_C (x)_H f)) beta_V = beta_W (f (x) id_M)`` for an ``H``-linear ``f: V -> W``."""
    r = Report("braid naturality")
    F = m.field
    dh = m.datum.H.dim
    r.add(compare_maps("f is H-linear", "f(h v) = h f(v)", f @ V.action, W.action @ tensor_of_maps(_id(F, dh), f), [dh, V.dim]))
    bv, bw = braid_map(m, V), braid_map(m, W)
    fq = induced_map(m.datum.C, f, V, W)
    expect(
        r,
        "beta natural in V",
        "(id (x) (id (x)_H f)) beta_V = beta_W (f (x) id)",
        tensor_of_maps(_id(F, m.dim), fq) @ bv.matrix,
        bw.matrix @ tensor_of_maps(f, _id(F, m.dim)),
        [V.dim, m.dim],
    )
    return r


def check_braid_coherence(m: GenYDModule, n: GenYDModule | None, V: Module, W: Module) -> Report:
    """The two coherences of ``beta``.

    ``(id_M (x) psi_{V,W}) beta_{V(x)W} = (beta_V (x) id)(id_V (x) beta_W)`` always, and with ``n``
    given also ``beta_{V, M(x)N} = (id_M (x) beta_{C(x)_H V, N})(beta_{V,M} (x) id_N)``.
    """
    r = Report("braid coherence")
    F = m.field
    d = m.datum
    C = d.C
    VW = tensor_module(d.H, V, W)
    b_vw = braid_map(m, VW)
    b_v, b_w = braid_map(m, V), braid_map(m, W)
    psi = opmonoidal_psi(C, V, W)
    dm, dv, dw = m.dim, V.dim, W.dim
    qw = b_w.target.dim
    lhs = tensor_of_maps(_id(F, dm), psi) @ b_vw.matrix
    # V W M -> V M Qw -> M Qv Qw
    rhs = tensor_of_maps(b_v.matrix, _id(F, qw)) @ tensor_of_maps(_id(F, dv), b_w.matrix)
    expect(r, "beta vs psi", "(id(x)psi) beta_{V(x)W} = (beta_V(x)id)(id(x)beta_W)", lhs, rhs, [dv, dw, dm])
    if n is None:
        return r
    r.extend(_check_braid_tensor_coherence(m, n, V))
    return r


def _check_braid_tensor_coherence(m: GenYDModule, n: GenYDModule, V: Module) -> Report:
    r = Report("braid tensor coherence")
    F = m.field
    tp = tensor_yd(m, n)
    MN = tp.module
    C, D = m.datum.C, n.datum.C
    dc, dd, dv, dm, dn = C.dim, D.dim, V.dim, m.dim, n.dim
    # left side: V (x) M N -> M N (x) (D (x)_K C) (x)_H V
    b_whole = braid_map(MN, V)
    q_dc = tp.coalgebra_quotient
    to_dcv_left = tensor_of_maps(q_dc.section, _id(F, dv)) @ b_whole.target.section
    # right side: V M N -> M Qv N -> M N (D (x)_K Qv)
    b_v = braid_map(m, V)
    qv = b_v.target
    QV = Module(C.K.alg, qv.dim, coefficient_action(C, qv, dv), "left")
    b_q = braid_map(n, QV)
    to_dcv_right = tensor_of_maps(_id(F, dd), qv.section) @ b_q.target.section
    # joint quotient of D (x) C (x) V by both balancings
    rel_k = tensor_of_maps(balancing_relations(D.right_module(), C.left_module()), _id(F, dv))
    rel_h = tensor_of_maps(_id(F, dd), balancing_relations(C.right_module(), V))
    joint = quotient_by(dd * dc * dv, hstack([rel_k, rel_h]))
    lhs = tensor_of_maps(_id(F, dm * dn), joint.projection @ to_dcv_left) @ b_whole.matrix
    step1 = tensor_of_maps(b_v.matrix, _id(F, dn))  # V M N -> M Qv N
    step2 = tensor_of_maps(_id(F, dm), b_q.matrix)  # M Qv N -> M N Q'
    rhs = tensor_of_maps(_id(F, dm * dn), joint.projection @ to_dcv_right) @ step2 @ step1
    expect(r, "beta on a tensor product", "beta_{V,M(x)N} = (id(x)beta_{C(x)V,N})(beta_{V,M}(x)id)", lhs, rhs, [dv, dm, dn])
    return r


def identify_regular(C: BimoduleCoalgebra, q: QuotientSpace) -> Matrix:
    """``C (x)_H H -> C``, ``c (x) h -> c < h``."""
    return C.right_action @ q.section


# half-braids


@dataclass(eq=False)
class HalfBraid:
    """A half-braid stored by its component ``H (x) M -> M (x) C`` at the regular module."""

    datum: YDDatum
    dim: int
    action: Matrix
    component: Matrix
    name: str = ""

    def __post_init__(self):
        dh, dc = self.datum.H.dim, self.datum.C.dim
        if self.component.shape != (self.dim * dc, dh * self.dim):
            raise DimensionError(f"half-braid component shape {self.component.shape} does not fit dim {self.dim}")

    @property
    def field(self) -> Field:
        return self.datum.field

    def seed(self) -> Matrix:
        """``m -> beta_H(1 (x) m)`` in ``M (x) C``."""
        return self.component @ tensor_of_maps(self.datum.H.unit, _id(self.field, self.dim))

    def at(self, V: Module) -> Braid:
        """Component at ``V`` by naturality: ``v (x) m -> m_b (x) (c_b (x)_H v)``."""
        F = self.field
        q = balanced_tensor(self.datum.C.right_module(), V)
        dv, dm, dc = V.dim, self.dim, self.datum.C.dim
        s = tensor_of_maps(_id(F, dv), self.seed()).permute_out([dv, dm, dc], [1, 2, 0])
        pseudo = GenYDModule(self.datum, dm, self.action, self.seed())
        return Braid(tensor_of_maps(_id(F, dm), q.projection) @ s, q, V, pseudo)

    def phi(self) -> Matrix:
        """``Phi(a (x) m) = beta_H(a-1 (x) a0 m)``."""
        F = self.field
        d = self.datum
        lam = tensor_of_maps(_id(F, d.H.dim), self.action) @ tensor_of_maps(d.A.left_coaction, _id(F, self.dim))
        return self.component @ lam


def coaction_to_halfbraid(m: GenYDModule) -> HalfBraid:
    """``beta_H(h (x) m) = m0 (x) m1 < h``."""
    F = m.field
    d = m.datum
    dh, dm, dc = d.H.dim, m.dim, d.C.dim
    s = tensor_of_maps(_id(F, dh), m.coaction).permute_out([dh, dm, dc], [1, 2, 0])
    comp = tensor_of_maps(_id(F, dm), d.C.right_action) @ s
    return HalfBraid(d, dm, m.action, comp, m.name)


def check_halfbraid(b: HalfBraid) -> Report:
    """Naturality, heptagon at ``V = W = H``, unit law and ``A``-linearity of ``Phi``."""
    r = Report("check_halfbraid")
    F = b.field
    d = b.datum
    dh, dk, da, dc, dm = d.H.dim, d.K.dim, d.A.dim, d.C.dim, b.dim
    C = d.C
    seed = b.seed()
    # naturality along right multiplications H -> H pins the component to its seed
    s = tensor_of_maps(_id(F, dh), seed).permute_out([dh, dm, dc], [1, 2, 0])
    extended = tensor_of_maps(_id(F, dm), C.right_action) @ s
    expect(r, "naturality at H", "beta_H(h (x) m) = m_b (x) c_b < h", b.component, extended, [dh, dm])
    expect(r, "unit", "(id (x) e) beta_H(1 (x) m) = m", tensor_of_maps(_id(F, dm), C.coalg.counit) @ seed, _id(F, dm), [dm])
    # heptagon at V = W = H
    Hm = regular_module(d.H)
    HH = tensor_module(d.H, Hm, Hm)
    b_hh = b.at(HH)
    psi = opmonoidal_psi(C, Hm, Hm)
    q_h = balanced_tensor(C.right_module(), Hm)
    iota = identify_regular(C, q_h)
    lhs = tensor_of_maps(_id(F, dm), tensor_of_maps(iota, iota) @ psi) @ b_hh.matrix
    rhs = tensor_of_maps(b.component, _id(F, dc)) @ tensor_of_maps(_id(F, dh), b.component)
    expect(r, "heptagon", "(id (x) psi_{H,H}) beta_{H(x)H} = (beta_H (x) id)(id (x) beta_H)", lhs, rhs, [dh, dh, dm])
    # A-linearity of Phi: free action on A (x) M, diagonal action on M (x) C
    phi = b.phi()
    diag = diagonal_target_action(GenYDModule(d, dm, b.action, seed), C.left_action, dc)
    expect(
        r,
        "Phi is A-linear",
        "Phi(a'a (x) m) = a'0 m_b (x) a'1 > c_b",
        phi @ tensor_of_maps(d.A.alg.mult, _id(F, dm)),
        diag @ tensor_of_maps(_id(F, da), phi),
        [da, da, dm],
    )
    return r


def halfbraid_to_coaction(b: HalfBraid, check: bool = True) -> Matrix:
    """``rho(m) = Phi(1_A (x) m)``; rejects half-braids failing their axioms."""
    if check:
        rep = check_halfbraid(b)
        if not rep.ok:
            names = ", ".join(f.check for f in rep.failures)
            raise StructureError(f"not a half-braid ({names})", rep)
    return b.phi() @ tensor_of_maps(b.datum.A.alg.unit, _id(b.field, b.dim))


# dual braiding


@dataclass(eq=False)
class DualBraid:
    """``M (x) (V box^H A) -> V (x) M``, ``m (x) v (x) a -> v (x) am``."""

    matrix: Matrix
    source_coaction: Matrix
    target_coaction: Matrix
    cotensor_basis: Matrix


def dual_braid_map(m: GenYDModule, V: Comodule) -> DualBraid:
    d = m.datum
    F = m.field
    if V.side != "right" or V.coalgebra.dim != d.H.dim:
        raise StructureError("dual braid: V must be a right H-comodule")
    sub = cotensor(V, d.A.left_comodule())
    inc = sub.basis
    dv, da, dm, dh, dk, dc = V.dim, d.A.dim, m.dim, d.H.dim, d.K.dim, d.C.dim
    mat = tensor_of_maps(_id(F, dv), m.action) @ tensor_of_maps(_id(F, dm), inc).permute_out([dm, dv, da], [1, 2, 0])
    # m (x) v (x) a -> m0 (x) v (x) a0 (x) a1 > m1
    t = tensor_of_maps(m.coaction, _id(F, dv), d.A.right_coaction) @ tensor_of_maps(_id(F, dm), inc)
    t = t.permute_out([dm, dc, dv, da, dk], [0, 2, 3, 4, 1])
    full = tensor_of_maps(_id(F, dm * dv * da), d.C.left_action) @ t
    coords = identity(F, dv * da).take_rows(sub.pivots)
    src = tensor_of_maps(_id(F, dm), coords, _id(F, dc)) @ full
    if not tensor_of_maps(_id(F, dm), inc, _id(F, dc)) @ src == full:
        raise StructureError("dual braid: coaction leaves the cotensor product")
    # v (x) m -> v0 (x) m0 (x) m1 < v1
    u = tensor_of_maps(V.coaction, m.coaction).permute_out([dv, dh, dm, dc], [0, 2, 3, 1])
    tgt = tensor_of_maps(_id(F, dv * dm), d.C.right_action) @ u
    return DualBraid(mat, src, tgt, inc)


def check_dual_braid(m: GenYDModule, V: Comodule) -> Report:
    r = Report("dual braid colinearity")
    F = m.field
    db = dual_braid_map(m, V)
    dc = m.datum.C.dim
    s = db.cotensor_basis.cols
    expect(
        r,
        "dual braid is C-colinear",
        "rho(v (x) am) = (beta (x) id) rho(m (x) v (x) a)",
        db.target_coaction @ db.matrix,
        tensor_of_maps(db.matrix, _id(F, dc)) @ db.source_coaction,
        [m.dim, s],
    )
    return r
