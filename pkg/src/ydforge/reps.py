"""Modules, comodules, bicomodule algebras, bimodule coalgebras and their tensor
constructions (balanced tensor, cotensor, the op-monoidal map psi).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .hopf import Algebra, Bialgebra, Coalgebra, HopfAlgebra, check_algebra_axioms, check_coalgebra_axioms, require_automorphism
from .linalg import (
    DimensionError,
    Field,
    Matrix,
    MatrixMemo,
    QuotientSpace,
    Subspace,
    check_ambient,
    hstack,
    identity,
    image_basis,
    inverse,
    kernel_basis,
    rank,
    quotient_by,
    tensor_of_maps,
)
from .report import Report, StructureError, expect

Side = Literal["left", "right"]


@dataclass(eq=False)
class Module:
    """``action`` is ``A (x) M -> M`` (left) or ``M (x) A -> M`` (right)."""

    algebra: Algebra
    dim: int
    action: Matrix
    side: Side = "left"

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError(f"bad side {self.side!r}")
        if self.action.shape != (self.dim, self.algebra.dim * self.dim):
            raise DimensionError(f"action shape {self.action.shape} does not fit dim {self.dim} over dim {self.algebra.dim}")

    @property
    def field(self) -> Field:
        return self.algebra.field


@dataclass(eq=False)
class Comodule:
    """``coaction`` is ``M -> M (x) C`` (right) or ``M -> C (x) M`` (left)."""

    coalgebra: Coalgebra
    dim: int
    coaction: Matrix
    side: Side = "right"

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError(f"bad side {self.side!r}")
        if self.coaction.shape != (self.dim * self.coalgebra.dim, self.dim):
            raise DimensionError(f"coaction shape {self.coaction.shape} does not fit dim {self.dim}")

    @property
    def field(self) -> Field:
        return self.coalgebra.field


@dataclass(eq=False)
class BicomoduleAlgebra:
    """An algebra ``A`` with a left ``H``- and a right ``K``-coaction."""

    alg: Algebra
    left_coaction: Matrix
    right_coaction: Matrix
    H: Bialgebra
    K: Bialgebra
    name: str = ""

    def __post_init__(self):
        d = self.alg.dim
        if self.left_coaction.shape != (self.H.dim * d, d) or self.right_coaction.shape != (d * self.K.dim, d):
            raise DimensionError("bicomodule algebra coaction shapes disagree")

    @property
    def dim(self) -> int:
        return self.alg.dim

    @property
    def field(self) -> Field:
        return self.alg.field

    def left_comodule(self) -> Comodule:
        return Comodule(self.H.coalg, self.dim, self.left_coaction, "left")

    def right_comodule(self) -> Comodule:
        return Comodule(self.K.coalg, self.dim, self.right_coaction, "right")

    def same_as(self, other: "BicomoduleAlgebra") -> bool:
        return (
            self.alg.mult == other.alg.mult
            and self.alg.unit == other.alg.unit
            and self.left_coaction == other.left_coaction
            and self.right_coaction == other.right_coaction
        )


@dataclass(eq=False)
class BimoduleCoalgebra:
    """A coalgebra ``C`` with a left ``K``- and a right ``H``-action."""

    coalg: Coalgebra
    left_action: Matrix
    right_action: Matrix
    K: Bialgebra
    H: Bialgebra
    name: str = ""

    def __post_init__(self):
        d = self.coalg.dim
        if self.left_action.shape != (d, self.K.dim * d) or self.right_action.shape != (d, d * self.H.dim):
            raise DimensionError("bimodule coalgebra action shapes disagree")

    @property
    def dim(self) -> int:
        return self.coalg.dim

    @property
    def field(self) -> Field:
        return self.coalg.field

    def left_module(self) -> Module:
        return Module(self.K.alg, self.dim, self.left_action, "left")

    def right_module(self) -> Module:
        return Module(self.H.alg, self.dim, self.right_action, "right")

    def same_as(self, other: "BimoduleCoalgebra") -> bool:
        return (
            self.coalg.comult == other.coalg.comult
            and self.coalg.counit == other.coalg.counit
            and self.left_action == other.left_action
            and self.right_action == other.right_action
        )


# regular and trivial structures


def regular_module(h: Bialgebra | Algebra, side: Side = "left") -> Module:
    alg = h.alg if isinstance(h, Bialgebra) else h
    return Module(alg, alg.dim, alg.mult, side)


def trivial_module(h: Bialgebra, side: Side = "left") -> Module:
    """``k`` with action through the counit."""
    return Module(h.alg, 1, h.counit, side)


def trivial_comodule(h: Bialgebra, side: Side = "right") -> Comodule:
    return Comodule(h.coalg, 1, h.unit, side)


def tensor_module(h: Bialgebra, v: Module, w: Module) -> Module:
    """Diagonal action ``h (v (x) w) = h1 v (x) h2 w``."""
    if v.side != "left" or w.side != "left":
        raise ValueError("diagonal action needs left modules")
    d, dv, dw = h.dim, v.dim, w.dim
    check_ambient(dv * dw)
    split = tensor_of_maps(h.comult, identity(h.field, dv * dw)).permute_out([d, d, dv, dw], [0, 2, 1, 3])
    return Module(h.alg, dv * dw, tensor_of_maps(v.action, w.action) @ split, "left")


# checkers


def check_module(m: Module) -> Report:
    r = Report("check_module")
    a, d, act = m.algebra, m.dim, m.action
    i = identity(m.field, d)
    ia = identity(m.field, a.dim)
    if m.side == "left":
        expect(r, "associativity", "(ab)m = a(bm)", act @ tensor_of_maps(a.mult, i), act @ tensor_of_maps(ia, act), [a.dim, a.dim, d])
        expect(r, "unitality", "1m = m", act @ tensor_of_maps(a.unit, i), i, [d])
    else:
        expect(r, "associativity", "m(ab) = (ma)b", act @ tensor_of_maps(i, a.mult), act @ tensor_of_maps(act, ia), [d, a.dim, a.dim])
        expect(r, "unitality", "m1 = m", act @ tensor_of_maps(i, a.unit), i, [d])
    return r


def check_comodule(c: Comodule) -> Report:
    r = Report("check_comodule")
    C, d, rho = c.coalgebra, c.dim, c.coaction
    i = identity(c.field, d)
    ic = identity(c.field, C.dim)
    if c.side == "right":
        expect(r, "coassociativity", "(rho(x)id)rho = (id(x)D)rho", tensor_of_maps(rho, ic) @ rho, tensor_of_maps(i, C.comult) @ rho, [d])
        expect(r, "counitality", "(id(x)e)rho = id", tensor_of_maps(i, C.counit) @ rho, i, [d])
    else:
        expect(r, "coassociativity", "(id(x)rho)rho = (D(x)id)rho", tensor_of_maps(ic, rho) @ rho, tensor_of_maps(C.comult, i) @ rho, [d])
        expect(r, "counitality", "(e(x)id)rho = id", tensor_of_maps(C.counit, i) @ rho, i, [d])
    return r


def check_bicomodule_algebra(a: BicomoduleAlgebra) -> Report:
    r = Report("check_bicomodule_algebra")
    r.extend(check_algebra_axioms(a.alg), "algebra: ")
    r.extend(check_comodule(a.left_comodule()), "left coaction: ")
    r.extend(check_comodule(a.right_comodule()), "right coaction: ")
    d, dh, dk = a.dim, a.H.dim, a.K.dim
    F = a.field
    lam, rho = a.left_coaction, a.right_coaction
    mult_hA = tensor_of_maps(a.H.mult, a.alg.mult).permute_in([dh, d, dh, d], [0, 2, 1, 3])
    mult_Ak = tensor_of_maps(a.alg.mult, a.K.mult).permute_in([d, dk, d, dk], [0, 2, 1, 3])
    expect(r, "left coaction multiplicative", "(ab)-1(x)(ab)0 = a-1 b-1 (x) a0 b0", lam @ a.alg.mult, mult_hA @ tensor_of_maps(lam, lam), [d, d])
    expect(r, "left coaction unital", "1-1(x)10 = 1(x)1", lam @ a.alg.unit, tensor_of_maps(a.H.unit, a.alg.unit), [1])
    expect(r, "right coaction multiplicative", "(ab)0(x)(ab)1 = a0 b0 (x) a1 b1", rho @ a.alg.mult, mult_Ak @ tensor_of_maps(rho, rho), [d, d])
    expect(r, "right coaction unital", "10(x)11 = 1(x)1", rho @ a.alg.unit, tensor_of_maps(a.alg.unit, a.K.unit), [1])
    expect(
        r,
        "coactions commute",
        "(id(x)rho)lambda = (lambda(x)id)rho",
        tensor_of_maps(identity(F, dh), rho) @ lam,
        tensor_of_maps(lam, identity(F, dk)) @ rho,
        [d],
    )
    return r


def check_bimodule_coalgebra(c: BimoduleCoalgebra) -> Report:
    r = Report("check_bimodule_coalgebra")
    r.extend(check_coalgebra_axioms(c.coalg), "coalgebra: ")
    r.extend(check_module(c.left_module()), "left action: ")
    r.extend(check_module(c.right_module()), "right action: ")
    d, dk, dh = c.dim, c.K.dim, c.H.dim
    F = c.field
    lt, rt, D = c.left_action, c.right_action, c.coalg.comult
    expect(
        r,
        "actions commute",
        "(k>c)<h = k>(c<h)",
        rt @ tensor_of_maps(lt, identity(F, dh)),
        lt @ tensor_of_maps(identity(F, dk), rt),
        [dk, d, dh],
    )
    both_left = tensor_of_maps(lt, lt) @ tensor_of_maps(c.K.comult, D).permute_out([dk, dk, d, d], [0, 2, 1, 3])
    expect(r, "left action comultiplicative", "D(k>c) = k1>c1 (x) k2>c2", D @ lt, both_left, [dk, d])
    expect(r, "left action counital", "e(k>c) = e(k)e(c)", c.coalg.counit @ lt, tensor_of_maps(c.K.counit, c.coalg.counit), [dk, d])
    both_right = tensor_of_maps(rt, rt) @ tensor_of_maps(D, c.H.comult).permute_out([d, d, dh, dh], [0, 2, 1, 3])
    expect(r, "right action comultiplicative", "D(c<h) = c1<h1 (x) c2<h2", D @ rt, both_right, [d, dh])
    expect(r, "right action counital", "e(c<h) = e(c)e(h)", c.coalg.counit @ rt, tensor_of_maps(c.coalg.counit, c.H.counit), [d, dh])
    return r


# twists of the regular structures


def twist_regular(
    h: HopfAlgebra,
    left: Matrix | None,
    right: Matrix | None,
    kind: Literal["comodule_algebra", "module_coalgebra"],
    check: bool = True,
) -> BicomoduleAlgebra | BimoduleCoalgebra:
    """Regular bicomodule algebra or bimodule coalgebra twisted by automorphisms.

    ``comodule_algebra``: coactions ``alpha(h1) (x) h2`` and ``h1 (x) beta(h2)``.
    ``module_coalgebra``: actions ``k > c = gamma(k) c`` and ``c < h = c delta(h)``.
    """
    i = h.id()
    left = i if left is None else left
    right = i if right is None else right
    if check:
        require_automorphism(h, left, "left twist")
        require_automorphism(h, right, "right twist")
    if kind == "comodule_algebra":
        return BicomoduleAlgebra(h.alg, tensor_of_maps(left, i) @ h.comult, tensor_of_maps(i, right) @ h.comult, h, h)
    if kind == "module_coalgebra":
        return BimoduleCoalgebra(h.coalg, h.mult @ tensor_of_maps(left, i), h.mult @ tensor_of_maps(i, right), h, h)
    raise ValueError(f"unknown twist kind {kind!r}")


def regular_bicomodule_algebra(h: HopfAlgebra) -> BicomoduleAlgebra:
    return twist_regular(h, None, None, "comodule_algebra", check=False)


def regular_bimodule_coalgebra(h: HopfAlgebra) -> BimoduleCoalgebra:
    return twist_regular(h, None, None, "module_coalgebra", check=False)


# tensor constructions


def algebra_generators(alg: Algebra) -> list[int]:
    """Basis indices that generate ``alg`` as a unital algebra (greedy, first first)."""
    cached = getattr(alg, "_generators", None)
    if cached is not None:
        return cached
    F, d = alg.field, alg.dim
    gens: list[int] = []
    left_mult = [alg.mult @ tensor_of_maps(Matrix.unit_vector(F, d, i), identity(F, d)) for i in range(d)]

    def closure(gs):
        span = image_basis(alg.unit)
        while True:
            grown = hstack([span.basis] + [left_mult[g] @ span.basis for g in gs])
            new = image_basis(grown)
            if new.dim == span.dim:
                return span
            span = new

    span = closure(gens)
    for i in range(d):
        if span.dim == d:
            break
        e = Matrix.unit_vector(F, d, i)
        if rank(hstack([span.basis, e])) > span.dim:
            gens.append(i)
            span = closure(gens)
    alg._generators = gens
    return gens


def balancing_relations(right: Module, left: Module) -> Matrix:
    """Generators ``(x<h)(x)v - x(x)(h>v)``, with ``h`` running over algebra generators."""
    if right.side != "right" or left.side != "left":
        raise ValueError("balanced tensor needs a right module and a left module")
    if right.algebra.dim != left.algebra.dim:
        raise DimensionError("balanced tensor over algebras of different dimension")
    F = right.field
    d = right.algebra.dim
    ix, iv = identity(F, right.dim), identity(F, left.dim)
    blocks = []
    for h in algebra_generators(right.algebra):
        e = Matrix.unit_vector(F, d, h)
        r_h = right.action @ tensor_of_maps(ix, e)
        l_h = left.action @ tensor_of_maps(e, iv)
        blocks.append(tensor_of_maps(r_h, iv) - tensor_of_maps(ix, l_h))
    if not blocks:
        return Matrix.zeros(F, right.dim * left.dim, 0)
    return hstack(blocks)


_balanced_memo = MatrixMemo()


def balanced_tensor(right: Module, left: Module) -> QuotientSpace:
    check_ambient(right.dim * left.dim)
    a = right.algebra
    key = _balanced_memo.key(right.action, left.action, a.mult, a.unit, right.side, left.side)
    return _balanced_memo.get(key) or _balanced_memo.put(key, quotient_by(right.dim * left.dim, balancing_relations(right, left)))


def cotensor(right: Comodule, left: Comodule) -> Subspace:
    """``A box B``: kernel of ``rho_A (x) id - id (x) lambda_B``."""
    if right.side != "right" or left.side != "left":
        raise ValueError("cotensor needs a right comodule and a left comodule")
    if right.coalgebra.dim != left.coalgebra.dim:
        raise DimensionError("cotensor over coalgebras of different dimension")
    check_ambient(right.dim * left.dim)
    F = right.field
    diff = tensor_of_maps(right.coaction, identity(F, left.dim)) - tensor_of_maps(identity(F, right.dim), left.coaction)
    return kernel_basis(diff)


def opmonoidal_psi(C: BimoduleCoalgebra, V: Module, W: Module) -> Matrix:
    """``C (x)_H (V (x) W) -> (C (x)_H V) (x) (C (x)_H W)``, ``c(x)v(x)w -> c1(x)v (x) c2(x)w``."""
    H = C.H
    VW = tensor_module(H, V, W)
    src = balanced_tensor(C.right_module(), VW)
    qv = balanced_tensor(C.right_module(), V)
    qw = balanced_tensor(C.right_module(), W)
    d, dv, dw = C.dim, V.dim, W.dim
    lifted = tensor_of_maps(C.coalg.comult, identity(C.field, dv * dw)).permute_out([d, d, dv, dw], [0, 2, 1, 3])
    try:
        return src.descend(tensor_of_maps(qv.projection, qw.projection) @ lifted, "psi")
    except ValueError as exc:
        raise StructureError(str(exc)) from exc


def check_psi_coherence(C: BimoduleCoalgebra, V: Module, W: Module, Z: Module) -> Report:
    """``(psi_{V,W} (x) id) psi_{VW,Z} = (id (x) psi_{W,Z}) psi_{V,WZ}``."""
    r = Report("psi coherence")
    H = C.H
    VW = tensor_module(H, V, W)
    WZ = tensor_module(H, W, Z)
    qz = balanced_tensor(C.right_module(), Z).dim
    qv = balanced_tensor(C.right_module(), V).dim
    lhs = tensor_of_maps(opmonoidal_psi(C, V, W), identity(C.field, qz)) @ opmonoidal_psi(C, VW, Z)
    rhs = tensor_of_maps(identity(C.field, qv), opmonoidal_psi(C, W, Z)) @ opmonoidal_psi(C, V, WZ)
    expect(r, "psi coassociativity", "(psi(x)id)psi = (id(x)psi)psi", lhs, rhs)
    return r


def bicomodule_algebra_from_cotensor(A: BicomoduleAlgebra, B: BicomoduleAlgebra) -> tuple[BicomoduleAlgebra, Subspace]:
    """``A box^K B`` as an ``(H, L)``-bicomodule algebra, with its inclusion."""
    if not A.K.same_as(B.H):
        raise StructureError("cotensor: inner bialgebras differ")
    sub = cotensor(A.right_comodule(), B.left_comodule())
    F = A.field
    da, db, dh, dl = A.dim, B.dim, A.H.dim, B.K.dim
    inc = sub.basis
    mult_ab = tensor_of_maps(A.alg.mult, B.alg.mult).permute_in([da, db, da, db], [0, 2, 1, 3])
    prod = mult_ab @ tensor_of_maps(inc, inc)
    mult = sub.coordinates_checked(prod)
    unit = sub.coordinates_checked(tensor_of_maps(A.alg.unit, B.alg.unit))
    lam_full = tensor_of_maps(A.left_coaction, identity(F, db)) @ inc
    lam = _coords_on_factor(lam_full, sub, dh, "left")
    rho_full = tensor_of_maps(identity(F, da), B.right_coaction) @ inc
    rho = _coords_on_factor(rho_full, sub, dl, "right")
    return BicomoduleAlgebra(Algebra(mult, unit), lam, rho, A.H, B.K, f"({A.name} box {B.name})"), sub


def _coords_on_factor(m: Matrix, sub: Subspace, extra: int, side: Side) -> Matrix:
    """Coordinates in ``E (x) S`` (left) or ``S (x) E`` (right) of vectors in ``E (x) span`` etc."""
    F = m.field
    if side == "left":
        coords_map = tensor_of_maps(identity(F, extra), sub.basis)
        out = tensor_of_maps(identity(F, extra), identity(F, sub.ambient).take_rows(sub.pivots)) @ m
    else:
        coords_map = tensor_of_maps(sub.basis, identity(F, extra))
        out = tensor_of_maps(identity(F, sub.ambient).take_rows(sub.pivots), identity(F, extra)) @ m
    if not coords_map @ out == m:
        raise StructureError("coaction does not preserve the cotensor product")
    return out


@dataclass(eq=False)
class BalancedCoalgebra:
    """``D (x)_K C`` for bimodule coalgebras ``D`` over ``(L, K)`` and ``C`` over ``(K, H)``."""

    coalgebra: BimoduleCoalgebra
    quotient: QuotientSpace
    left: BimoduleCoalgebra
    right: BimoduleCoalgebra

    @property
    def section(self) -> Matrix:
        return self.quotient.section

    @property
    def projection(self) -> Matrix:
        return self.quotient.projection


def balanced_coalgebra(D: BimoduleCoalgebra, C: BimoduleCoalgebra) -> BalancedCoalgebra:
    if not D.H.same_as(C.K):
        raise StructureError("balanced coalgebra: inner bialgebras differ")
    q = balanced_tensor(D.right_module(), C.left_module())
    F = D.field
    dd, dc, dl, dh = D.dim, C.dim, D.K.dim, C.H.dim
    P, S = q.projection, q.section
    both = tensor_of_maps(D.coalg.comult, C.coalg.comult).permute_out([dd, dd, dc, dc], [0, 2, 1, 3])
    comult = q.descend(tensor_of_maps(P, P) @ both, "comultiplication on D (x)_K C")
    counit = q.descend(tensor_of_maps(D.coalg.counit, C.coalg.counit), "counit on D (x)_K C")
    # actions: left on the D factor, right on the C factor
    lt_rep = P @ tensor_of_maps(D.left_action, identity(F, dc))
    lt = lt_rep @ tensor_of_maps(identity(F, dl), S)
    rt_rep = P @ tensor_of_maps(identity(F, dd), C.right_action)
    rt = rt_rep @ tensor_of_maps(S, identity(F, dh))
    # well-definedness of the actions on the quotient
    rel = q.relations.basis
    if not (lt_rep @ tensor_of_maps(identity(F, dl), rel)).is_zero() or not (rt_rep @ tensor_of_maps(rel, identity(F, dh))).is_zero():
        raise StructureError("actions are not well defined on the balanced tensor")
    coalg = BimoduleCoalgebra(Coalgebra(comult, counit), lt, rt, D.K, C.H, f"({D.name} (x) {C.name})")
    return BalancedCoalgebra(coalg, q, D, C)


# isomorphisms of structures


def bicomodule_algebra_map_report(f: Matrix, src: BicomoduleAlgebra, tgt: BicomoduleAlgebra, label: str = "f") -> Report:
    """``f: src -> tgt`` is a bijective algebra map commuting with both coactions."""
    r = Report(f"{label}: bicomodule algebra isomorphism")
    F = f.field
    ds, dh, dk = src.dim, src.H.dim, src.K.dim
    r.note(f"{label} bijective", "explicit inverse", f.rows == f.cols and inverse(f) is not None)
    expect(r, f"{label} multiplicative", "f(ab) = f(a)f(b)", f @ src.alg.mult, tgt.alg.mult @ tensor_of_maps(f, f), [ds, ds])
    expect(r, f"{label} unital", "f(1) = 1", f @ src.alg.unit, tgt.alg.unit, [1])
    expect(r, f"{label} left colinear", "f(a)-1 (x) f(a)0 = a-1 (x) f(a0)", tgt.left_coaction @ f, tensor_of_maps(identity(F, dh), f) @ src.left_coaction, [ds])
    expect(r, f"{label} right colinear", "f(a)0 (x) f(a)1 = f(a0) (x) a1", tgt.right_coaction @ f, tensor_of_maps(f, identity(F, dk)) @ src.right_coaction, [ds])
    return r


def bimodule_coalgebra_map_report(f: Matrix, src: BimoduleCoalgebra, tgt: BimoduleCoalgebra, label: str = "f") -> Report:
    """``f: src -> tgt`` is a bijective coalgebra map commuting with both actions."""
    r = Report(f"{label}: bimodule coalgebra isomorphism")
    F = f.field
    ds, dl, dr = src.dim, src.K.dim, src.H.dim
    r.note(f"{label} bijective", "explicit inverse", f.rows == f.cols and inverse(f) is not None)
    expect(r, f"{label} comultiplicative", "D f = (f(x)f) D", tgt.coalg.comult @ f, tensor_of_maps(f, f) @ src.coalg.comult, [ds])
    expect(r, f"{label} counital", "e f = e", tgt.coalg.counit @ f, src.coalg.counit, [ds])
    expect(r, f"{label} left linear", "f(k>c) = k>f(c)", f @ src.left_action, tgt.left_action @ tensor_of_maps(identity(F, dl), f), [dl, ds])
    expect(r, f"{label} right linear", "f(c<h) = f(c)<h", f @ src.right_action, tgt.right_action @ tensor_of_maps(f, identity(F, dr)), [ds, dr])
    return r
