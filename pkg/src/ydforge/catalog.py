"""Concrete Hopf algebras, automorphisms and YD modules used throughout."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .hopf import Algebra, Bialgebra, Coalgebra, HopfAlgebra, compute_antipode
from .linalg import Field, Matrix, identity

QQ = Field.rationals()


def _mult_from_products(field: Field, d: int, product) -> Matrix:
    """``product(i, j)`` returns ``{k: coeff}`` for ``e_i e_j``."""
    m = Matrix.zeros(field, d, d * d).fractions()
    for i in range(d):
        for j in range(d):
            for k, c in product(i, j).items():
                m[k, i * d + j] += c
    return Matrix.from_scalars(field, m)


def _comult_from_terms(field: Field, d: int, terms) -> Matrix:
    """``terms(i)`` returns ``{(a, b): coeff}`` for ``Delta(e_i)``."""
    D = Matrix.zeros(field, d * d, d).fractions()
    for i in range(d):
        for (a, b), c in terms(i).items():
            D[a * d + b, i] += c
    return Matrix.from_scalars(field, D)


def cyclic_group_table(n: int) -> list[list[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def symmetric_group_table(n: int = 3) -> list[list[int]]:
    """Permutations of ``range(n)`` in lexicographic order; index 0 is the identity."""
    perms = list(itertools.permutations(range(n)))
    index = {p: k for k, p in enumerate(perms)}
    # (p q)(i) = p(q(i))
    return [[index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]


def group_data(table: Sequence[Sequence[int]]) -> tuple[int, list[int]]:
    """Validate a group table; return the identity index and inverses."""
    n = len(table)
    if any(len(row) != n or any(not 0 <= x < n for x in row) for row in table):
        raise ValueError("not a group: table is not a closed square")
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise ValueError(f"not a group: associativity fails at {(a, b, c)}")
    ids = [e for e in range(n) if all(table[e][g] == g == table[g][e] for g in range(n))]
    if not ids:
        raise ValueError("not a group: no identity")
    e = ids[0]
    inv = []
    for g in range(n):
        cands = [h for h in range(n) if table[g][h] == e == table[h][g]]
        if not cands:
            raise ValueError(f"not a group: element {g} has no inverse")
        inv.append(cands[0])
    return e, inv


def group_algebra(table: Sequence[Sequence[int]], field: Field = QQ, name: str = "") -> HopfAlgebra:
    """``kG`` with grouplike basis: Delta(g) = g (x) g, e(g) = 1, S(g) = g^-1."""
    e, inv = group_data(table)
    n = len(table)
    mult = _mult_from_products(field, n, lambda i, j: {table[i][j]: 1})
    unit = Matrix.unit_vector(field, n, e)
    comult = _comult_from_terms(field, n, lambda i: {(i, i): 1})
    counit = Matrix.row(field, [1] * n)
    S = identity(field, n).take_rows(inv)
    return HopfAlgebra(Algebra(mult, unit), Coalgebra(comult, counit), name or f"k[G{n}]", S)


def function_algebra(table: Sequence[Sequence[int]], field: Field = QQ, name: str = "") -> HopfAlgebra:
    """The dual ``k^G`` on the basis of point indicators."""
    e, inv = group_data(table)
    n = len(table)
    mult = _mult_from_products(field, n, lambda i, j: {i: 1} if i == j else {})
    unit = Matrix.column(field, [1] * n)

    def terms(g):
        return {(a, b): 1 for a in range(n) for b in range(n) if table[a][b] == g}

    comult = _comult_from_terms(field, n, terms)
    counit = Matrix.row(field, [1 if g == e else 0 for g in range(n)])
    S = identity(field, n).take_rows(inv)
    return HopfAlgebra(Algebra(mult, unit), Coalgebra(comult, counit), name or f"k^G{n}", S)


def monoid_bialgebra(field: Field = QQ) -> Bialgebra:
    """Monoid algebra of ``{1, z}`` with ``z^2 = z``; a bialgebra with no antipode."""
    table = [[0, 1], [1, 1]]
    mult = _mult_from_products(field, 2, lambda i, j: {table[i][j]: 1})
    comult = _comult_from_terms(field, 2, lambda i: {(i, i): 1})
    return Bialgebra(Algebra(mult, Matrix.unit_vector(field, 2, 0)), Coalgebra(comult, Matrix.row(field, [1, 1])), "k[{1,z}]")


def sweedler_h4(field: Field = QQ) -> HopfAlgebra:
    """Sweedler's algebra on the basis ``1, g, x, gx`` (indices 0..3)."""
    if field.prime == 2:
        raise ValueError("Sweedler's algebra needs characteristic different from 2")
    # products of basis words; xg = -gx
    table = {
        (0, 0): {0: 1}, (0, 1): {1: 1}, (0, 2): {2: 1}, (0, 3): {3: 1},
        (1, 0): {1: 1}, (1, 1): {0: 1}, (1, 2): {3: 1}, (1, 3): {2: 1},
        (2, 0): {2: 1}, (2, 1): {3: -1}, (2, 2): {}, (2, 3): {},
        (3, 0): {3: 1}, (3, 1): {2: -1}, (3, 2): {}, (3, 3): {},
    }
    mult = _mult_from_products(field, 4, lambda i, j: table[(i, j)])
    cop = {
        0: {(0, 0): 1},
        1: {(1, 1): 1},
        2: {(2, 0): 1, (1, 2): 1},
        3: {(3, 1): 1, (0, 3): 1},
    }
    comult = _comult_from_terms(field, 4, lambda i: cop[i])
    counit = Matrix.row(field, [1, 1, 0, 0])
    S = Matrix.from_rows(field, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
    return HopfAlgebra(Algebra(mult, Matrix.unit_vector(field, 4, 0)), Coalgebra(comult, counit), "H4", S)


def taft_index(n: int, i: int, j: int) -> int:
    """Index of ``g^i x^j``; matches ``1, g, x, gx`` for ``n = 2``."""
    return j * n + i


def taft(n: int, q, field: Field) -> HopfAlgebra:
    """Taft algebra: ``g^n = 1``, ``x^n = 0``, ``xg = q gx``, ``Delta x = x(x)1 + g(x)x``."""
    if n < 2:
        raise ValueError("Taft algebras need n >= 2")
    q = field.scalar(q)
    powers = [q**k if field.prime is None else pow(int(q), k, field.prime) for k in range(n + 1)]
    if powers[n] != 1 or any(powers[k] == 1 for k in range(1, n)):
        raise ValueError(f"q = {q} is not a primitive {n}-th root of unity in {field}")
    d = n * n

    def product(a, b):
        i1, j1 = a % n, a // n
        i2, j2 = b % n, b // n
        if j1 + j2 >= n:
            return {}
        # x^j1 g^i2 = q^(j1 i2) g^i2 x^j1
        return {taft_index(n, (i1 + i2) % n, j1 + j2): powers[(j1 * i2) % n]}

    mult = _mult_from_products(field, d, product)
    alg = Algebra(mult, Matrix.unit_vector(field, d, 0))
    # Delta is multiplicative: build it from Delta(g) and Delta(x) in H (x) H
    g, x = taft_index(n, 1, 0), taft_index(n, 0, 1)
    one = 0
    dg = {(g, g): 1}
    dx = {(x, one): 1, (g, x): 1}

    def mul2(u, v):
        out = {}
        for (a, b), c in u.items():
            for (a2, b2), c2 in v.items():
                for k1, c3 in product(a, a2).items():
                    for k2, c4 in product(b, b2).items():
                        out[(k1, k2)] = out.get((k1, k2), 0) + c * c2 * c3 * c4
        return {k: v for k, v in out.items() if v != 0}

    def terms(idx):
        i, j = idx % n, idx // n
        t = {(one, one): 1}
        for _ in range(i):
            t = mul2(t, dg)
        for _ in range(j):
            t = mul2(t, dx)
        return t

    comult = _comult_from_terms(field, d, terms)
    counit = Matrix.row(field, [1 if idx // n == 0 else 0 for idx in range(d)])
    b = Bialgebra(alg, Coalgebra(comult, counit), f"T{n}({q})")
    found = compute_antipode(b)
    if found is None:
        raise ValueError("Taft bialgebra without antipode")
    return HopfAlgebra(b.alg, b.coalg, b.name, found[0])


def scaling_automorphism(h: HopfAlgebra, lam, n: int | None = None) -> Matrix:
    """``g -> g``, ``x -> lam x`` on a Taft algebra (``n = 2`` is Sweedler's)."""
    F = h.field
    n = n or int(round(h.dim**0.5))
    lam = F.scalar(lam)
    diag = [lam ** (idx // n) if F.prime is None else pow(int(lam), idx // n, F.prime) for idx in range(h.dim)]
    return Matrix.from_rows(F, [[diag[i] if i == j else 0 for j in range(h.dim)] for i in range(h.dim)])


def group_automorphism(table: Sequence[Sequence[int]], perm: Sequence[int], field: Field = QQ) -> Matrix:
    """Linear extension of a group automorphism given as an index permutation."""
    n = len(table)
    for a in range(n):
        for b in range(n):
            if perm[table[a][b]] != table[perm[a]][perm[b]]:
                raise ValueError("permutation is not a group automorphism")
    return identity(field, n).take_cols([]) if n == 0 else Matrix.from_rows(
        field, [[1 if perm[j] == i else 0 for j in range(n)] for i in range(n)]
    )


def conjugation_automorphism(table: Sequence[Sequence[int]], h: int, field: Field = QQ) -> Matrix:
    """Inner automorphism ``g -> h g h^-1`` of ``kG``."""
    _, inv = group_data(table)
    perm = [table[table[h][g]][inv[h]] for g in range(len(table))]
    return group_automorphism(table, perm, field)


# classical YD modules and the built-in zoo


def classical_yd_examples(h: HopfAlgebra, table: Sequence[Sequence[int]] | None = None) -> list:
    """YD modules over the trivial datum: ``k``, the adjoint module and, for ``kG``, the conjugation module."""
    from .yd import adjoint_module, conjugation_module, one_dimensional_module, trivial_datum

    d = trivial_datum(h)
    out = [one_dimensional_module(d, name="k"), adjoint_module(d, name="adjoint")]
    if table is not None:
        out.append(conjugation_module(table, h, name="conjugation"))
    return out


@dataclass(eq=False)
class Builtin:
    """A named Hopf algebra with its group table when it is ``kG``."""

    name: str
    hopf: HopfAlgebra
    table: list[list[int]] | None = None


def builtin_hopf_algebras() -> dict[str, Builtin]:
    F7 = Field.gf(7)
    c2, c3, s3 = cyclic_group_table(2), cyclic_group_table(3), symmetric_group_table(3)
    items = [
        Builtin("kC2", group_algebra(c2, QQ, "kC2"), c2),
        Builtin("kC3_F7", group_algebra(c3, F7, "kC3"), c3),
        Builtin("kS3", group_algebra(s3, QQ, "kS3"), s3),
        Builtin("kC2_dual", function_algebra(c2, QQ, "k^C2")),
        Builtin("H4", sweedler_h4(QQ)),
        Builtin("H4_F7", sweedler_h4(F7)),
        Builtin("T3_F7", taft(3, 2, F7)),
    ]
    return {b.name: b for b in items}


def builtin_data() -> dict:
    """Named YD data: the trivial datum of every built-in plus automorphism twists."""
    from .grading import alpha_beta_datum
    from .yd import trivial_datum

    hs = builtin_hopf_algebras()
    out = {f"trivial_{name}": trivial_datum(b.hopf) for name, b in hs.items()}
    h4, h7, s3 = hs["H4"].hopf, hs["H4_F7"].hopf, hs["kS3"]
    out["H4_alpha2"] = alpha_beta_datum(h4, scaling_automorphism(h4, 2))
    out["H4_anti"] = alpha_beta_datum(h4, None, h4.S @ h4.S)
    out["H4_F7_object2"] = alpha_beta_datum(h7, scaling_automorphism(h7, 2))
    out["H4_F7_coobject2"] = alpha_beta_datum(h7, None, None, scaling_automorphism(h7, 2))
    out["H4_F7_coobject3"] = alpha_beta_datum(h7, None, None, scaling_automorphism(h7, 3))
    out["kS3_coobject_conj"] = alpha_beta_datum(s3.hopf, None, None, conjugation_automorphism(s3.table, 1))
    return out


def builtin_yd_modules() -> dict:
    """Named YD modules over the built-in data, every one passing the YD check."""
    from .yd import adjoint_module, free_module

    hs = builtin_hopf_algebras()
    out = {}
    for name, b in hs.items():
        for m in classical_yd_examples(b.hopf, b.table):
            out[f"{name}_{m.name}"] = m
    data = builtin_data()
    out["H4_free"] = free_module(data["trivial_H4"], name="free")
    for name in ("H4_alpha2", "H4_anti", "H4_F7_object2", "H4_F7_coobject2", "H4_F7_coobject3", "kS3_coobject_conj"):
        out[f"{name}_adjoint"] = adjoint_module(data[name], name="adjoint")
    return out
