"""Algebras, coalgebras, bialgebras and Hopf algebras as structure constants.

Maps are matrices acting on column vectors: ``mult`` is ``dim x dim^2``,
``unit`` is ``dim x 1``, ``comult`` is ``dim^2 x dim`` and ``counit`` is
``1 x dim``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import (
    DimensionError,
    Field,
    Matrix,
    identity,
    inverse,
    linear_operator_matrix,
    solve,
    swap,
    tensor_of_maps,
    unvec,
    vec,
)
from .report import Report, compare_maps, expect


@dataclass(eq=False)
class Algebra:
    mult: Matrix
    unit: Matrix

    @property
    def dim(self) -> int:
        return self.unit.rows

    @property
    def field(self) -> Field:
        return self.mult.field

    def __post_init__(self):
        d = self.unit.rows
        if self.unit.shape != (d, 1) or self.mult.shape != (d, d * d):
            raise DimensionError(f"algebra shapes mult {self.mult.shape}, unit {self.unit.shape} disagree")


@dataclass(eq=False)
class Coalgebra:
    comult: Matrix
    counit: Matrix

    @property
    def dim(self) -> int:
        return self.counit.cols

    @property
    def field(self) -> Field:
        return self.comult.field

    def __post_init__(self):
        d = self.counit.cols
        if self.counit.shape != (1, d) or self.comult.shape != (d * d, d):
            raise DimensionError(f"coalgebra shapes comult {self.comult.shape}, counit {self.counit.shape} disagree")

    def opposite(self) -> "Coalgebra":
        """Co-opposite coalgebra (flipped comultiplication)."""
        return Coalgebra(swap(self.field, self.dim, self.dim) @ self.comult, self.counit)


@dataclass(eq=False)
class Bialgebra:
    alg: Algebra
    coalg: Coalgebra
    name: str = ""

    def __post_init__(self):
        if self.alg.dim != self.coalg.dim:
            raise DimensionError(f"algebra dim {self.alg.dim} != coalgebra dim {self.coalg.dim}")

    @property
    def dim(self) -> int:
        return self.alg.dim

    @property
    def field(self) -> Field:
        return self.alg.field

    mult = property(lambda self: self.alg.mult)
    unit = property(lambda self: self.alg.unit)
    comult = property(lambda self: self.coalg.comult)
    counit = property(lambda self: self.coalg.counit)

    def id(self) -> Matrix:
        return identity(self.field, self.dim)

    def same_as(self, other: "Bialgebra") -> bool:
        return (
            self.field == other.field
            and self.dim == other.dim
            and self.mult == other.mult
            and self.unit == other.unit
            and self.comult == other.comult
            and self.counit == other.counit
        )


@dataclass(eq=False)
class HopfAlgebra(Bialgebra):
    antipode: Matrix | None = None
    antipode_inverse: Matrix | None = None

    def __post_init__(self):
        super().__post_init__()
        if self.antipode is None:
            raise ValueError("a Hopf algebra needs an antipode")
        if self.antipode.shape != (self.dim, self.dim):
            raise DimensionError("antipode must be dim x dim")
        if self.antipode_inverse is None:
            self.antipode_inverse = inverse(self.antipode)

    @property
    def S(self) -> Matrix:
        return self.antipode

    @property
    def S_inv(self) -> Matrix:
        if self.antipode_inverse is None:
            raise ValueError("antipode is not invertible")
        return self.antipode_inverse


def make_hopf(b: Bialgebra, antipode: Matrix | None = None) -> HopfAlgebra:
    """Upgrade a bialgebra, computing the antipode when none is supplied."""
    if antipode is None:
        found = compute_antipode(b)
        if found is None:
            raise ValueError("bialgebra has no antipode")
        antipode = found[0]
    return HopfAlgebra(b.alg, b.coalg, b.name, antipode)


# checkers


def check_algebra_axioms(a: Algebra) -> Report:
    r = Report("check_algebra_axioms")
    d, m, u = a.dim, a.mult, a.unit
    i = identity(a.field, d)
    expect(r, "associativity", "m(m(x)id) = m(id(x)m)", m @ tensor_of_maps(m, i), m @ tensor_of_maps(i, m), [d, d, d])
    expect(r, "left unit", "m(1(x)a) = a", m @ tensor_of_maps(u, i), i, [d])
    expect(r, "right unit", "m(a(x)1) = a", m @ tensor_of_maps(i, u), i, [d])
    return r


def check_coalgebra_axioms(c: Coalgebra) -> Report:
    r = Report("check_coalgebra_axioms")
    d, D, e = c.dim, c.comult, c.counit
    i = identity(c.field, d)
    expect(r, "coassociativity", "(D(x)id)D = (id(x)D)D", tensor_of_maps(D, i) @ D, tensor_of_maps(i, D) @ D, [d])
    expect(r, "left counit", "(e(x)id)D = id", tensor_of_maps(e, i) @ D, i, [d])
    expect(r, "right counit", "(id(x)e)D = id", tensor_of_maps(i, e) @ D, i, [d])
    return r


def tensor_square_mult(b: Bialgebra) -> Matrix:
    """Multiplication of the tensor algebra ``H (x) H``."""
    d = b.dim
    return tensor_of_maps(b.mult, b.mult).permute_in([d, d, d, d], [0, 2, 1, 3])


def check_bialgebra(b: Bialgebra) -> Report:
    if b.alg.dim != b.coalg.dim:
        raise DimensionError("algebra and coalgebra dimensions differ")
    r = Report("check_bialgebra")
    r.extend(check_algebra_axioms(b.alg), "algebra: ")
    r.extend(check_coalgebra_axioms(b.coalg), "coalgebra: ")
    d, F = b.dim, b.field
    one = Matrix.identity(F, 1)
    mm = tensor_square_mult(b)
    expect(r, "comultiplication is multiplicative", "D(ab) = D(a)D(b)", b.comult @ b.mult, mm @ tensor_of_maps(b.comult, b.comult), [d, d])
    expect(r, "comultiplication is unital", "D(1) = 1(x)1", b.comult @ b.unit, tensor_of_maps(b.unit, b.unit), [1])
    expect(r, "counit is multiplicative", "e(ab) = e(a)e(b)", b.counit @ b.mult, tensor_of_maps(b.counit, b.counit), [d, d])
    expect(r, "counit is unital", "e(1) = 1", b.counit @ b.unit, one, [1])
    return r


def antipode_laws(b: Bialgebra, S: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    i = b.id()
    left = b.mult @ tensor_of_maps(S, i) @ b.comult
    right = b.mult @ tensor_of_maps(i, S) @ b.comult
    return left, right, b.unit @ b.counit


def compute_antipode(b: Bialgebra) -> tuple[Matrix, Matrix | None] | None:
    """Solve the convolution-inverse system for S; return (S, S^-1) or None."""
    d, F = b.dim, b.field
    i = b.id()
    system = linear_operator_matrix(lambda X: b.mult @ tensor_of_maps(X, i) @ b.comult, F, d, d)
    target = vec(b.unit @ b.counit)
    sol = solve(system, target)
    if sol is None:
        return None
    S = unvec(sol, d, d)
    left, right, ue = antipode_laws(b, S)
    if not (left == ue and right == ue):
        return None
    return S, inverse(S)


def check_hopf(h: HopfAlgebra) -> Report:
    r = check_bialgebra(h)
    r.command = "check_hopf"
    d = h.dim
    left, right, ue = antipode_laws(h, h.S)
    expect(r, "left antipode law", "m(S(x)id)D = 1e", left, ue, [d])
    expect(r, "right antipode law", "m(id(x)S)D = 1e", right, ue, [d])
    if r.ok:
        found = compute_antipode(h)
        if found is None:
            r.note("antipode recomputed", "convolution inverse of id", False, "linear system has no solution")
        else:
            r.add(compare_maps("antipode recomputed", "convolution inverse of id", h.S, found[0], [d]))
    if h.antipode_inverse is None:
        r.note("antipode invertible", "S bijective", False, "S is singular")
    else:
        expect(r, "antipode inverse", "S S^-1 = id", h.S @ h.S_inv, h.id(), [d])
        expect(r, "antipode inverse (other side)", "S^-1 S = id", h.S_inv @ h.S, h.id(), [d])
    return r


def check_antipode_anti_properties(h: HopfAlgebra) -> Report:
    r = Report("antipode anti-properties")
    d, F = h.dim, h.field
    tw = swap(F, d, d)
    S = h.S
    expect(r, "S anti-multiplicative", "S(ab) = S(b)S(a)", S @ h.mult, h.mult @ tw @ tensor_of_maps(S, S), [d, d])
    expect(r, "S anti-comultiplicative", "D(S(a)) = S(a2)(x)S(a1)", h.comult @ S, tw @ tensor_of_maps(S, S) @ h.comult, [d])
    return r


def automorphism_report(h: HopfAlgebra | Bialgebra, phi: Matrix) -> Report:
    r = Report("check_hopf_automorphism")
    d = h.dim
    if phi.shape != (d, d):
        r.note("shape", "phi is dim x dim", False, f"got {phi.shape}")
        return r
    r.note("invertible", "phi bijective", inverse(phi) is not None)
    expect(r, "multiplicative", "phi(ab) = phi(a)phi(b)", phi @ h.mult, h.mult @ tensor_of_maps(phi, phi), [d, d])
    expect(r, "unital", "phi(1) = 1", phi @ h.unit, h.unit, [1])
    expect(r, "comultiplicative", "D phi = (phi(x)phi) D", h.comult @ phi, tensor_of_maps(phi, phi) @ h.comult, [d])
    expect(r, "counital", "e phi = e", h.counit @ phi, h.counit, [d])
    if isinstance(h, HopfAlgebra):
        expect(r, "commutes with antipode", "phi S = S phi", phi @ h.S, h.S @ phi, [d])
    return r


def check_hopf_automorphism(h: HopfAlgebra, phi: Matrix) -> bool:
    return automorphism_report(h, phi).ok


def require_automorphism(h: HopfAlgebra, phi: Matrix, what: str = "automorphism") -> None:
    from .report import StructureError

    rep = automorphism_report(h, phi)
    if not rep.ok:
        names = ", ".join(f.check for f in rep.failures)
        raise StructureError(f"{what} is not a Hopf automorphism ({names})", rep)
