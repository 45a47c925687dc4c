"""Exact dense linear algebra over the rationals and prime fields.

Entries are stored as integer arrays.  Over the rationals a matrix is an
integer array together with one positive common denominator, kept in lowest
terms; the array is int64 while every entry is below ``SMALL`` in absolute
value and an object array of Python ints otherwise.  Over GF(p) entries live in ``[0, p)``; small primes use
int64 storage so that products cannot overflow.

Tensor bases are ordered left-factor-major, so the basis vector
``e_i (x) f_j`` of ``V (x) W`` has flat index ``i * dim W + j``.
"""

from __future__ import annotations

import math
import os
from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

DEFAULT_MAX_DIM = 4096
SMALL = 2**31


class DimensionError(ValueError):
    """Raised when shapes do not line up or a size cap is exceeded."""


def max_dim() -> int:
    value = os.environ.get("YDFORGE_MAX_DIM")
    return int(value) if value else DEFAULT_MAX_DIM


def check_ambient(dim: int, what: str = "tensor space") -> int:
    cap = max_dim()
    if dim > cap:
        raise DimensionError(f"{what} of dimension {dim} exceeds cap {cap} (YDFORGE_MAX_DIM)")
    return dim


@dataclass(frozen=True)
class Field:
    """The rationals (``prime is None``) or GF(prime)."""

    prime: int | None = None

    def __post_init__(self):
        if self.prime is not None:
            p = self.prime
            if p < 2 or any(p % d == 0 for d in range(2, math.isqrt(p) + 1)):
                raise ValueError(f"{p} is not prime")

    @classmethod
    def rationals(cls) -> "Field":
        return cls(None)

    @classmethod
    def gf(cls, p: int) -> "Field":
        return cls(p)

    @property
    def is_rational(self) -> bool:
        return self.prime is None

    @property
    def dtype(self):
        if self.prime is not None and self.prime < 2**20:
            return np.int64
        return object

    def __str__(self) -> str:
        return "Q" if self.prime is None else f"GF({self.prime})"

    def scalar(self, x) -> Fraction | int:
        """Canonical scalar: a Fraction over Q, an int in [0, p) over GF(p)."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        elif isinstance(x, float):
            raise TypeError("floating point scalars are not exact")
        if self.prime is None:
            return Fraction(x)
        x = Fraction(x)
        return (x.numerator * pow(x.denominator, -1, self.prime)) % self.prime

    def fmt(self, x) -> str:
        x = self.scalar(x)
        return str(x)

    def inv(self, x):
        x = self.scalar(x)
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / x if self.prime is None else pow(int(x), -1, self.prime)

    def elements(self) -> list[int]:
        if self.prime is None:
            raise ValueError("the rationals are infinite")
        return list(range(self.prime))


def _storage(field: Field):
    return np.int64 if field.prime is None else field.dtype


def _split(field: Field, rows) -> tuple[np.ndarray, int]:
    vals = [[field.scalar(x) for x in row] for row in rows]
    if field.prime is not None:
        return np.array(vals, dtype=field.dtype).reshape(len(vals), -1), 1
    den = reduce(math.lcm, (v.denominator for row in vals for v in row), 1)
    data = np.empty((len(vals), len(vals[0]) if vals else 0), dtype=object)
    for i, row in enumerate(vals):
        for j, v in enumerate(row):
            data[i, j] = v.numerator * (den // v.denominator)
    return data, den


class Matrix:
    """Immutable exact matrix; ``f @ g`` is composition ``f after g``."""

    __slots__ = ("field", "data", "den")

    def __init__(self, field: Field, data: np.ndarray, den: int = 1, *, _raw: bool = False):
        self.field = field
        if data.ndim != 2:
            raise DimensionError("matrix data must be two dimensional")
        if _raw:
            self.data, self.den = data, den
            return
        if field.prime is not None:
            if data.dtype == object:
                data = data % field.prime
            self.data = np.mod(data.astype(field.dtype), field.prime)
            self.den = 1
            return
        if data.dtype != object and data.dtype != np.int64:
            data = data.astype(np.int64)
        den = int(den)
        if den < 0:
            data, den = -data.astype(object), -den
        if den != 1 and data.size:
            g = math.gcd(int(np.gcd.reduce(data, axis=None)), den)
            if g > 1:
                data = data // g
                den //= g
        elif den != 1:
            den = 1
        self.data, self.den = _compact(data), den

    # construction
    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise DimensionError("ragged matrix rows")
        data, den = _split(field, rows)
        return cls(field, data, den)

    @classmethod
    def column(cls, field: Field, values: Sequence) -> "Matrix":
        return cls.from_rows(field, [[v] for v in values]) if values else cls.zeros(field, 0, 1)

    @classmethod
    def row(cls, field: Field, values: Sequence) -> "Matrix":
        return cls.from_rows(field, [list(values)])

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls(field, np.zeros((rows, cols), dtype=_storage(field)), 1, _raw=True)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        data = np.zeros((n, n), dtype=_storage(field))
        for i in range(n):
            data[i, i] = 1
        return cls(field, data, 1, _raw=True)

    @classmethod
    def unit_vector(cls, field: Field, n: int, i: int) -> "Matrix":
        m = cls.zeros(field, n, 1)
        m.data[i, 0] = 1
        return m

    @classmethod
    def from_function(cls, field: Field, rows: int, cols: int, fn) -> "Matrix":
        return cls.from_rows(field, [[fn(i, j) for j in range(cols)] for i in range(rows)])

    # shape and entries
    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def __getitem__(self, ij):
        i, j = ij
        v = self.data[i, j]
        return Fraction(int(v), self.den) if self.field.prime is None else int(v)

    def entries(self) -> list[list]:
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def column_values(self, j: int) -> list:
        return [self[i, j] for i in range(self.rows)]

    def to_strings(self) -> list[list[str]]:
        return [[str(v) for v in row] for row in self.entries()]

    def is_zero(self) -> bool:
        return not np.any(self.data != 0)

    def nonzero_columns(self) -> list[int]:
        return [int(j) for j in np.nonzero(np.any(self.data != 0, axis=0))[0]]

    def __repr__(self) -> str:
        return f"Matrix[{self.field}]({self.to_strings()})"

    # arithmetic
    def _same(self, other: "Matrix"):
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.field != self.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and self.den == other.den
            and bool(np.all(self.data == other.data))
        )

    __hash__ = None

    def _combine(self, other: "Matrix", sign: int) -> "Matrix":
        self._same(other)
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        if self.field.prime is not None:
            return Matrix(self.field, (self.data + sign * other.data) % self.field.prime, _raw=True)
        den = math.lcm(self.den, other.den)
        data = _widen(self.data, den // self.den) + sign * _widen(other.data, den // other.den)
        return Matrix(self.field, data, den)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        if self.field.prime is not None:
            return Matrix(self.field, (-self.data) % self.field.prime, _raw=True)
        return Matrix(self.field, -self.data, self.den, _raw=True)

    def scale(self, c) -> "Matrix":
        c = self.field.scalar(c)
        if self.field.prime is not None:
            return Matrix(self.field, (self.data * c) % self.field.prime, _raw=True)
        return Matrix(self.field, _widen(self.data, c.numerator), self.den * c.denominator)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._same(other)
        if self.cols != other.rows:
            raise DimensionError(f"cannot compose {self.shape} after {other.shape}")
        if self.cols == 0:
            return Matrix.zeros(self.field, self.rows, other.cols)
        if self.field.prime is not None:
            p = self.field.prime
            prod = _exact_int_matmul(self.data, other.data, p - 1, p - 1)
            return Matrix(self.field, (prod % p).astype(self.field.dtype), _raw=True)
        return Matrix(self.field, _exact_int_matmul(self.data, other.data), self.den * other.den)

    def kron(self, other: "Matrix") -> "Matrix":
        self._same(other)
        if self.field.prime is not None:
            return Matrix(self.field, _kron(self.data, other.data) % self.field.prime, _raw=True)
        if self.data.dtype == object or other.data.dtype == object:
            return Matrix(self.field, _kron(self.data.astype(object), other.data.astype(object)), self.den * other.den)
        return Matrix(self.field, _kron(self.data, other.data), self.den * other.den)

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, self.data.T.copy(), self.den, _raw=True)

    def take_rows(self, idx) -> "Matrix":
        return Matrix(self.field, self.data[np.asarray(idx, dtype=np.int64)], self.den)

    def take_cols(self, idx) -> "Matrix":
        return Matrix(self.field, self.data[:, np.asarray(idx, dtype=np.int64)], self.den)

    def hstack(self, *others: "Matrix") -> "Matrix":
        return hstack([self, *others])

    def permute_out(self, dims: Sequence[int], order: Sequence[int]) -> "Matrix":
        """Compose with the tensor-factor permutation on the output side."""
        return self.take_rows(factor_permutation(dims, order))

    def permute_in(self, dims: Sequence[int], order: Sequence[int]) -> "Matrix":
        """Precompose with the factor permutation ``V_0..V_k -> V_order[0]..``."""
        idx = factor_permutation(dims, order)
        inv = np.empty_like(idx)
        inv[idx] = np.arange(idx.size)
        return self.take_cols(inv)

    def fractions(self) -> np.ndarray:
        """Entries as an object array of canonical scalars."""
        if self.field.prime is not None:
            return self.data.astype(object)
        out = np.empty(self.shape, dtype=object)
        for idx, v in np.ndenumerate(self.data):
            out[idx] = Fraction(int(v), self.den)
        return out

    @classmethod
    def from_scalars(cls, field: Field, arr: np.ndarray) -> "Matrix":
        if field.prime is not None:
            return cls(field, np.asarray(arr, dtype=object).reshape(arr.shape))
        flat = [Fraction(v) for v in arr.flat]
        den = reduce(math.lcm, (v.denominator for v in flat), 1)
        data = np.array([v.numerator * (den // v.denominator) for v in flat], dtype=object).reshape(arr.shape)
        return cls(field, data, den)


def _kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of 2-d arrays (left factor major), without ``np.kron``'s overhead."""
    (r1, c1), (r2, c2) = a.shape, b.shape
    return (a[:, None, :, None] * b[None, :, None, :]).reshape(r1 * r2, c1 * c2)


def _compact(a: np.ndarray) -> np.ndarray:
    """int64 when every entry is small, Python ints otherwise."""
    small = _max_abs(a) < SMALL
    if a.dtype == object:
        return a.astype(np.int64) if small else a
    return a if small else a.astype(object)


def _widen(a: np.ndarray, c: int) -> np.ndarray:
    """``c * a`` without int64 overflow."""
    if c == 1:
        return a
    if a.dtype != object and abs(c) < SMALL:
        return a * c
    return a.astype(object) * c


def _max_abs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype != object:
        return int(np.abs(a).max())
    return max(abs(int(a.max())), abs(int(a.min())))


def _exact_int_matmul(a: np.ndarray, b: np.ndarray, bound_a: int | None = None, bound_b: int | None = None) -> np.ndarray:
    """Integer matrix product, routed through float64 BLAS when it is exact."""
    ba = _max_abs(a) if bound_a is None else bound_a
    bb = _max_abs(b) if bound_b is None else bound_b
    worst = ba * bb * a.shape[1]
    if worst < 2**52:
        out = a.astype(np.float64) @ b.astype(np.float64)
        return out.astype(np.int64)
    if worst < 2**62:
        return a.astype(np.int64) @ b.astype(np.int64)
    return a.astype(object) @ b.astype(object)


def hstack(ms: Sequence[Matrix]) -> Matrix:
    field = ms[0].field
    if field.prime is not None:
        return Matrix(field, np.hstack([m.data for m in ms]), _raw=True)
    den = reduce(math.lcm, (m.den for m in ms), 1)
    parts = [_widen(m.data, den // m.den) for m in ms]
    if any(p.dtype == object for p in parts):
        parts = [p.astype(object) for p in parts]
    return Matrix(field, np.hstack(parts), den)


def vstack(ms: Sequence[Matrix]) -> Matrix:
    return hstack([m.T for m in ms]).T


def identity(field: Field, n: int) -> Matrix:
    return Matrix.identity(field, n)


def factor_permutation(dims: Sequence[int], order: Sequence[int]) -> np.ndarray:
    """Row index array for ``V_0 (x) ... (x) V_k -> V_order[0] (x) ...``.

    Position ``new`` of the result holds the flat index of the same basis
    tuple in the original ordering.
    """
    n = int(np.prod(dims)) if len(dims) else 1
    return np.arange(n).reshape(tuple(dims)).transpose(tuple(order)).ravel()


def permutation_matrix(field: Field, dims: Sequence[int], order: Sequence[int]) -> Matrix:
    n = int(np.prod(dims))
    return identity(field, n).permute_out(dims, order)


def swap(field: Field, dv: int, dw: int) -> Matrix:
    return permutation_matrix(field, [dv, dw], [1, 0])


def tensor_of_maps(*maps: Matrix) -> Matrix:
    """Kronecker product; the left factor is the slow index."""
    return reduce(lambda a, b: a.kron(b), maps)


def apply_on_factor(f: Matrix, m: Matrix, left: int, right: int = 1) -> Matrix:
    """``(id_left (x) f (x) id_right) @ m`` without forming the Kronecker product."""
    f._same(m)
    if m.rows != left * f.cols * right:
        raise DimensionError(f"cannot apply {f.shape} on a factor of {m.shape} with outer dims {left}, {right}")
    rest = right * m.cols
    flat = m.data.reshape(left, f.cols, rest).transpose(1, 0, 2).reshape(f.cols, left * rest)
    if f.field.prime is not None:
        p = f.field.prime
        prod = (_exact_int_matmul(f.data, flat, p - 1, p - 1) % p).astype(f.field.dtype)
        den = 1
    else:
        prod = _exact_int_matmul(f.data, flat)
        den = f.den * m.den
    out = prod.reshape(f.rows, left, rest).transpose(1, 0, 2).reshape(left * f.rows * right, m.cols)
    return Matrix(f.field, np.ascontiguousarray(out), den, _raw=f.field.prime is not None)


def compose(*maps: Matrix) -> Matrix:
    """``compose(f, g, h) == f @ g @ h``."""
    return reduce(lambda a, b: a @ b, maps)


def multi_index(dims: Sequence[int], flat: int) -> tuple[int, ...]:
    return tuple(int(i) for i in np.unravel_index(flat, tuple(dims))) if dims else ()


# content-keyed memo for expensive constructions on immutable matrices


class MatrixMemo:
    """Bounded LRU cache whose keys may contain matrices (compared by content)."""

    def __init__(self, maxsize: int = 256):
        self.maxsize = maxsize
        self._store: OrderedDict = OrderedDict()

    @staticmethod
    def key(*parts) -> tuple:
        out = []
        for p in parts:
            if isinstance(p, Matrix):
                out.append((p.field.prime, p.shape, p.den, p.data.dtype.str, p.data.tobytes() if p.data.dtype != object else tuple(map(int, p.data.flat))))
            else:
                out.append(p)
        return tuple(out)

    def get(self, key):
        v = self._store.get(key)
        if v is not None:
            self._store.move_to_end(key)
        return v

    def put(self, key, value):
        self._store[key] = value
        if len(self._store) > self.maxsize:
            self._store.popitem(last=False)
        return value

    def clear(self):
        self._store.clear()


# Gauss-Jordan elimination


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form with first-nonzero pivoting.

    Returns the nonzero rows as a matrix and the pivot columns.
    """
    field = m.field
    rows, cols = m.shape
    if field.prime is not None:
        p = field.prime
        a = m.data.astype(np.int64 if field.dtype is np.int64 else object).copy()
        pivots: list[int] = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.nonzero(a[r:, c] != 0)[0]
            if nz.size == 0:
                continue
            k = r + int(nz[0])
            if k != r:
                a[[r, k]] = a[[k, r]]
            a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
            col = a[:, c].copy()
            col[r] = 0
            nzr = np.nonzero(col)[0]
            if nzr.size:
                a[nzr] = (a[nzr] - np.outer(col[nzr], a[r])) % p
            pivots.append(c)
            r += 1
        return Matrix(field, a[:r]), pivots
    # fraction-free elimination on primitive integer rows, divided out at the end
    a = _distinct_rows(m.data)
    pivots = []
    r = 0
    nrows = a.shape[0]
    for c in range(cols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c] != 0)[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        piv = a[r, c]
        col = a[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col != 0)[0]
        if nzr.size:
            block = a[nzr] * piv - np.outer(col[nzr], a[r])
            g = np.gcd.reduce(block, axis=1)
            g[g == 0] = 1
            a[nzr] = block // g[:, None]
        pivots.append(c)
        r += 1
    # scale every row to pivot value L = lcm of the pivots
    pivvals = [int(a[i, c]) for i, c in enumerate(pivots)]
    L = reduce(math.lcm, (abs(v) for v in pivvals), 1)
    out = a[:r].copy()
    for i, v in enumerate(pivvals):
        out[i] = out[i] * (L // v)
    return Matrix(field, out, L), pivots


def _distinct_rows(data: np.ndarray) -> np.ndarray:
    """Nonzero rows made primitive, duplicates (up to sign) removed; order kept."""
    if data.dtype != object and data.size:
        rows = data[np.any(data != 0, axis=1)]
        if rows.shape[0] == 0:
            return np.zeros((0, data.shape[1]), dtype=object)
        g = np.gcd.reduce(rows, axis=1)
        first = rows[np.arange(rows.shape[0]), np.argmax(rows != 0, axis=1)]
        g = np.where(first < 0, -g, g)
        prim = rows // g[:, None]
        _, idx = np.unique(prim, axis=0, return_index=True)
        return prim[np.sort(idx)].astype(object)
    seen = set()
    keep = []
    for row in data:
        if not np.any(row != 0):
            continue
        g = int(np.gcd.reduce(row))
        first = next(int(v) for v in row if v != 0)
        if first < 0:
            g = -g
        prim = tuple(int(v) // g for v in row)
        if prim not in seen:
            seen.add(prim)
            keep.append(prim)
    if not keep:
        return np.zeros((0, data.shape[1]), dtype=object)
    out = np.empty((len(keep), data.shape[1]), dtype=object)
    for i, row in enumerate(keep):
        out[i] = row
    return out


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


@dataclass(eq=False)
class Subspace:
    """Span of the columns of ``basis`` inside ``F^ambient``.

    ``pivots`` lists rows on which the basis restricts to the identity, which
    makes coordinates a row selection.
    """

    ambient: int
    basis: Matrix
    pivots: list[int]

    @property
    def dim(self) -> int:
        return self.basis.cols

    @property
    def field(self) -> Field:
        return self.basis.field

    def coordinates(self, vectors: Matrix) -> Matrix:
        """Coordinates of columns known to lie in the subspace."""
        return vectors.take_rows(self.pivots)

    def contains(self, vectors: Matrix) -> bool:
        return self.basis @ self.coordinates(vectors) == vectors

    def coordinates_checked(self, vectors: Matrix) -> Matrix:
        coords = self.coordinates(vectors)
        if not self.basis @ coords == vectors:
            raise ValueError("vectors do not lie in the subspace")
        return coords


def image_basis(m: Matrix) -> Subspace:
    """Column space of ``m`` with its reduced echelon basis."""
    field = m.field
    ech, pivots = rref(m.T)
    if not pivots:
        return Subspace(m.rows, Matrix.zeros(field, m.rows, 0), [])
    return Subspace(m.rows, ech.T, pivots)


def _zeros_like(field: Field, rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=object if field.prime is None else field.dtype)


def kernel_basis(m: Matrix) -> Subspace:
    """Basis of ``{x : m x = 0}``, one vector per free column."""
    field = m.field
    n = m.cols
    ech, pivots = rref(m)
    piv_set = set(pivots)
    free = [c for c in range(n) if c not in piv_set]
    if not free:
        return Subspace(n, Matrix.zeros(field, n, 0), [])
    out = _zeros_like(field, n, len(free))
    out[free, np.arange(len(free))] = ech.den
    if pivots:
        out[pivots, :] = -ech.data[:, free]
    return Subspace(n, Matrix(field, out, ech.den), free)


def solve(a: Matrix, b: Matrix) -> Matrix | None:
    """One solution ``x`` of ``a x = b`` (free variables set to zero), or None."""
    if a.rows != b.rows:
        raise DimensionError("solve: row mismatch")
    field = a.field
    ech, pivots = rref(hstack([a, b]))
    n = a.cols
    if pivots and pivots[-1] >= n:
        return None
    x = _zeros_like(field, n, b.cols)
    if pivots:
        x[pivots, :] = ech.data[:, n:]
    return Matrix(field, x, ech.den)


def inverse(m: Matrix) -> Matrix | None:
    """Two-sided inverse of a square matrix, or None when singular."""
    if m.rows != m.cols:
        return None
    n = m.rows
    ech, pivots = rref(hstack([m, identity(m.field, n)]))
    if pivots != list(range(n)):
        return None
    return Matrix(m.field, ech.data[:, n:], ech.den)


def solve_or_invert(m: Matrix, b: Matrix | None = None) -> Matrix | None:
    """Inverse of ``m`` when ``b`` is None, otherwise a solution of ``m x = b``."""
    return inverse(m) if b is None else solve(m, b)


@dataclass(eq=False)
class QuotientSpace:
    """``F^ambient / relations`` with projection and reduced-echelon section."""

    ambient: int
    relations: Subspace
    projection: Matrix
    section: Matrix

    @property
    def dim(self) -> int:
        return self.projection.rows

    @property
    def field(self) -> Field:
        return self.projection.field

    def descend(self, lifted: Matrix, what: str = "map") -> Matrix:
        """Map out of the quotient induced by ``lifted`` on representatives.

        Raises ``ValueError`` when ``lifted`` does not kill the relations.
        """
        if not (lifted @ self.relations.basis).is_zero():
            raise ValueError(f"{what} is not well defined on the quotient")
        return lifted @ self.section


def quotient_by(ambient: int, relations: Matrix) -> QuotientSpace:
    """Quotient of ``F^ambient`` by the column span of ``relations``.

    The complement is spanned by the standard vectors at non-pivot positions
    of the reduced echelon form of the relations, and the section picks
    exactly those representatives.
    """
    field = relations.field
    check_ambient(ambient, "quotient ambient")
    sub = image_basis(relations) if relations.cols else Subspace(ambient, Matrix.zeros(field, ambient, 0), [])
    pivots = sub.pivots
    piv_set = set(pivots)
    free = [c for c in range(ambient) if c not in piv_set]
    proj = _zeros_like(field, len(free), ambient)
    den = sub.basis.den
    if free:
        proj[np.arange(len(free)), free] = den
        if pivots:
            # rows of the reduced echelon form are the basis columns
            proj[:, pivots] = -sub.basis.data[free, :]
    projection = Matrix(field, proj, den) if free else Matrix.zeros(field, 0, ambient)
    section = identity(field, ambient).take_cols(free) if free else Matrix.zeros(field, ambient, 0)
    return QuotientSpace(ambient, sub, projection, section)


def as_columns(field: Field, vectors: Iterable[Sequence]) -> Matrix:
    vecs = [list(v) for v in vectors]
    return Matrix.from_rows(field, vecs).T


def vec(m: Matrix) -> Matrix:
    """Row-major flattening into a column."""
    return Matrix(m.field, m.data.reshape(-1, 1).copy(), m.den, _raw=True)


def unvec(v: Matrix, rows: int, cols: int) -> Matrix:
    return Matrix(v.field, v.data.reshape(rows, cols).copy(), v.den, _raw=True)


def matrix_units(field: Field, rows: int, cols: int):
    """Yield ``E_ij`` in row-major order."""
    for i in range(rows):
        for j in range(cols):
            e = Matrix.zeros(field, rows, cols)
            e.data[i, j] = 1
            yield e


def linear_operator_matrix(fn, field: Field, rows: int, cols: int) -> Matrix:
    """Matrix of a linear map on ``rows x cols`` matrices, in ``vec`` coordinates."""
    return hstack([vec(fn(e)) for e in matrix_units(field, rows, cols)])
