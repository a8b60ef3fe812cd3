"""Exact linear algebra over the rationals.

Matrices are stored as flat integer arrays with one positive common
denominator; gcd(content, denominator) = 1, so the representation of a
rational matrix is canonical and equality is structural.  All heavy
loops (multiplication, row reduction) run in the integer kernels
selected by lralg._kernels.

Vectors at the API boundary are tuples of fractions.Fraction.
Subspaces carry their reduced row echelon basis, which again makes
equality structural: two subspaces are equal iff their bases are
identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import _kernels as K
from .errors import (
    DimensionMismatchError,
    NonCommutingFamilyError,
    PreconditionError,
)

Vector = tuple[Fraction, ...]


def to_fraction(x) -> Fraction:
    """Coerce an int, string or Fraction to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def vector(xs) -> Vector:
    return tuple(to_fraction(x) for x in xs)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def standard_basis(n: int) -> list[Vector]:
    return [tuple(Fraction(1 if j == i else 0) for j in range(n)) for i in range(n)]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _scale_fractions(entries) -> tuple[list[int], int]:
    """Common-denominator form of a flat Fraction sequence."""
    den = 1
    for e in entries:
        den = _lcm(den, e.denominator)
    return [e.numerator * (den // e.denominator) for e in entries], den


class Matrix:
    """Immutable exact rational matrix.

    Do not mutate the internal arrays; every operation returns a new
    instance.
    """

    __slots__ = ("rows", "cols", "_num", "_den")

    def __init__(self, rows_of_entries):
        rows = [[to_fraction(x) for x in row] for row in rows_of_entries]
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        for row in rows:
            if len(row) != ncols:
                raise DimensionMismatchError("ragged rows")
        flat = [x for row in rows for x in row]
        num, den = _scale_fractions(flat)
        self.rows = nrows
        self.cols = ncols
        self._num = num
        self._den = den

    @classmethod
    def _raw(cls, rows: int, cols: int, num: list[int], den: int) -> "Matrix":
        """Normalized construction from kernel-level data."""
        if den < 0:
            den = -den
            num = [-x for x in num]
        g = gcd(K.content(num), den)
        if g > 1:
            num = [x // g for x in num]
            den //= g
        m = object.__new__(cls)
        m.rows = rows
        m.cols = cols
        m._num = num
        m._den = den
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls._raw(rows, cols, [0] * (rows * cols), 1)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        num = [0] * (n * n)
        for i in range(n):
            num[i * n + i] = 1
        return cls._raw(n, n, num, 1)

    @classmethod
    def from_rows(cls, rows_of_vectors) -> "Matrix":
        return cls(rows_of_vectors)

    @classmethod
    def from_columns(cls, columns) -> "Matrix":
        cols = [list(c) for c in columns]
        if not cols:
            return cls.zeros(0, 0)
        n = len(cols[0])
        for c in cols:
            if len(c) != n:
                raise DimensionMismatchError("ragged columns")
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_zero(self) -> bool:
        return not any(self._num)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return Fraction(self._num[i * self.cols + j], self._den)

    def row(self, i: int) -> Vector:
        d = self._den
        base = i * self.cols
        return tuple(Fraction(self._num[base + j], d) for j in range(self.cols))

    def column(self, j: int) -> Vector:
        d = self._den
        return tuple(Fraction(self._num[i * self.cols + j], d) for i in range(self.rows))

    def row_list(self) -> list[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self._den == other._den
            and self._num == other._num
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(str(self[i, j]) for j in range(self.cols)) for i in range(self.rows)
        )
        return f"Matrix[{self.rows}x{self.cols}: {body}]"

    def __neg__(self) -> "Matrix":
        return Matrix._raw(self.rows, self.cols, [-x for x in self._num], self._den)

    def _same_shape(self, other: "Matrix"):
        if self.shape != other.shape:
            raise DimensionMismatchError(f"{self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_shape(other)
        da, db = self._den, other._den
        sa, sb = db // gcd(da, db), da // gcd(da, db)
        num = [x * sa + y * sb for x, y in zip(self._num, other._num)]
        return Matrix._raw(self.rows, self.cols, num, da * sa)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionMismatchError(f"{self.shape} * {other.shape}")
            num = K.mat_mul(self._num, other._num, self.rows, self.cols, other.cols)
            return Matrix._raw(self.rows, other.cols, num, self._den * other._den)
        s = to_fraction(other)
        return Matrix._raw(
            self.rows, self.cols, [x * s.numerator for x in self._num], self._den * s.denominator
        )

    def __rmul__(self, other):
        return self * to_fraction(other)

    def apply(self, vec) -> Vector:
        """Matrix times column vector."""
        v = vector(vec)
        if len(v) != self.cols:
            raise DimensionMismatchError(f"{self.shape} applied to length {len(v)}")
        vnum, vden = _scale_fractions(v)
        out = [0] * self.rows
        num, cols = self._num, self.cols
        for j, x in enumerate(vnum):
            if x:
                for i in range(self.rows):
                    a = num[i * cols + j]
                    if a:
                        out[i] += a * x
        d = self._den * vden
        return tuple(Fraction(x, d) for x in out)

    def transpose(self) -> "Matrix":
        num = [0] * (self.rows * self.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                num[j * self.rows + i] = self._num[i * self.cols + j]
        return Matrix._raw(self.cols, self.rows, num, self._den)

    def power(self, k: int) -> "Matrix":
        if not self.is_square:
            raise DimensionMismatchError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative power")
        result = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def rref(self) -> tuple["Matrix", tuple[int, ...], int]:
        """Reduced row echelon form, pivot columns, rank."""
        num, den, pivots = K.rref(self._num, self.rows, self.cols)
        return Matrix._raw(self.rows, self.cols, num, den), pivots, len(pivots)

    def inverse(self) -> "Matrix":
        if not self.is_square:
            raise DimensionMismatchError("inverse of a non-square matrix")
        n = self.rows
        aug = [0] * (n * 2 * n)
        for i in range(n):
            aug[i * 2 * n: i * 2 * n + n] = self._num[i * n:(i + 1) * n]
            aug[i * 2 * n + n + i] = self._den
        rnum, rden, pivots = K.rref(aug, n, 2 * n)
        if tuple(pivots) != tuple(range(n)):
            raise PreconditionError("matrix is singular")
        inv = [0] * (n * n)
        for i in range(n):
            inv[i * n:(i + 1) * n] = rnum[i * 2 * n + n:(i + 1) * 2 * n]
        return Matrix._raw(n, n, inv, rden)


def _scaled_power_numerator(m: Matrix, k: int) -> list[int]:
    """Integer matrix proportional (positive factor) to m**k.

    Content is divided out after every kernel product, which keeps the
    entries small; kernels, images and zero tests of the true power are
    unaffected by the positive scalar.
    """
    n = m.rows
    def reduce(a: list[int]) -> list[int]:
        g = K.content(a)
        return [x // g for x in a] if g > 1 else a

    ident = Matrix.identity(n)._num
    result = ident
    base = reduce(list(m._num))
    while k:
        if k & 1:
            result = reduce(K.mat_mul(result, base, n, n, n)) if result is not ident else base
        if k > 1:
            base = reduce(K.mat_mul(base, base, n, n, n))
        k >>= 1
    return result


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...], int]:
    return m.rref()


@dataclass(frozen=True)
class Subspace:
    """Linear subspace given by its reduced row echelon basis.

    The basis is canonical, so == compares subspaces, not just bases.
    """

    ambient_dim: int
    basis: tuple[Vector, ...]
    pivots: tuple[int, ...]

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors_) -> "Subspace":
        vecs = [vector(v) for v in vectors_]
        for v in vecs:
            if len(v) != ambient_dim:
                raise DimensionMismatchError("vector length differs from ambient dimension")
        if not vecs:
            return cls(ambient_dim, (), ())
        reduced, pivots, rank = Matrix(vecs).rref()
        return cls(ambient_dim, tuple(reduced.row(i) for i in range(rank)), pivots)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, (), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        basis = tuple(
            tuple(Fraction(1 if i == j else 0) for j in range(ambient_dim))
            for i in range(ambient_dim)
        )
        return cls(ambient_dim, basis, tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> Matrix:
        if not self.basis:
            return Matrix.zeros(0, self.ambient_dim)
        return Matrix(self.basis)

    def reduce(self, vec) -> Vector:
        """Remainder of vec after eliminating all pivot coordinates.

        vec minus the remainder lies in the subspace; the remainder has
        zeros at every pivot position.
        """
        v = list(vector(vec))
        if len(v) != self.ambient_dim:
            raise DimensionMismatchError("vector length differs from ambient dimension")
        for b, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                for j in range(self.ambient_dim):
                    if b[j]:
                        v[j] -= c * b[j]
        return tuple(v)

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec))

    def coordinates(self, vec) -> Vector | None:
        """Coefficients of vec in the RREF basis, or None if outside."""
        v = vector(vec)
        if not self.contains(v):
            return None
        return tuple(v[p] for p in self.pivots)

    def contains_subspace(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError("ambient dimensions differ")
        return all(self.contains(b) for b in other.basis)

    def from_coordinates(self, coords) -> Vector:
        """Ambient vector with the given coefficients in the RREF basis."""
        cs = vector(coords)
        if len(cs) != self.dim:
            raise DimensionMismatchError("coordinate length differs from subspace dimension")
        out = [Fraction(0)] * self.ambient_dim
        for c, b in zip(cs, self.basis):
            if c:
                for j in range(self.ambient_dim):
                    if b[j]:
                        out[j] += c * b[j]
        return tuple(out)


def kernel(m: Matrix) -> Subspace:
    """Null space of m, a subspace of the domain."""
    reduced, pivots, rank = m.rref()
    n = m.cols
    pivot_set = set(pivots)
    vecs = []
    for j in range(n):
        if j in pivot_set:
            continue
        v = [Fraction(0)] * n
        v[j] = Fraction(1)
        for t, p in enumerate(pivots):
            v[p] = -reduced[t, j]
        vecs.append(v)
    return Subspace.from_vectors(n, vecs)


def image(m: Matrix) -> Subspace:
    """Column space of m, a subspace of the codomain."""
    return Subspace.from_vectors(m.rows, [m.column(j) for j in range(m.cols)])


def solve(m: Matrix, b) -> Vector | None:
    """One exact solution of m x = b, or None if there is none.

    Free variables are set to zero, so the answer is deterministic.
    """
    bv = vector(b)
    if len(bv) != m.rows:
        raise DimensionMismatchError("right-hand side length differs from row count")
    bnum, bden = _scale_fractions(bv)
    width = m.cols + 1
    s_m = bden
    s_b = m._den
    aug = [0] * (m.rows * width)
    for i in range(m.rows):
        base = i * width
        mbase = i * m.cols
        for j in range(m.cols):
            aug[base + j] = m._num[mbase + j] * s_m
        aug[base + m.cols] = bnum[i] * s_b
    rnum, rden, pivots = K.rref(aug, m.rows, width)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [Fraction(0)] * m.cols
    for t, p in enumerate(pivots):
        x[p] = Fraction(rnum[t * width + m.cols], rden)
    return tuple(x)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError("ambient dimensions differ")
    return Subspace.from_vectors(a.ambient_dim, list(a.basis) + list(b.basis))


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via the kernel of the stacked coefficient matrix.

    x in both spans means x = sum c_i a_i = sum d_j b_j; the pairs
    (c, d) with sum c_i a_i - sum d_j b_j = 0 form the kernel of the
    matrix whose columns are the a_i and the negated b_j.
    """
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError("ambient dimensions differ")
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(a.ambient_dim)
    cols = [list(v) for v in a.basis] + [[-x for x in v] for v in b.basis]
    coeff = Matrix.from_columns(cols)
    vecs = []
    for kv in kernel(coeff).basis:
        x = [Fraction(0)] * a.ambient_dim
        for i, c in enumerate(kv[: a.dim]):
            if c:
                for j in range(a.ambient_dim):
                    x[j] += c * a.basis[i][j]
        vecs.append(x)
    return Subspace.from_vectors(a.ambient_dim, vecs)


def complement(s: Subspace) -> Subspace:
    """Standard-basis complement: coordinate vectors at non-pivot positions."""
    n = s.ambient_dim
    pivot_set = set(s.pivots)
    vecs = [
        tuple(Fraction(1 if j == c else 0) for j in range(n))
        for c in range(n)
        if c not in pivot_set
    ]
    free = tuple(c for c in range(n) if c not in pivot_set)
    return Subspace(n, tuple(vecs), free)


def restrict_operator(m: Matrix, s: Subspace) -> Matrix:
    """Matrix of m on an invariant subspace, in the RREF basis of s.

    Raises PreconditionError if s is not invariant under m.
    """
    if not m.is_square or m.rows != s.ambient_dim:
        raise DimensionMismatchError("operator does not act on the ambient space")
    k = s.dim
    cols = []
    for b in s.basis:
        img = m.apply(b)
        coords = tuple(img[p] for p in s.pivots)
        if s.from_coordinates(coords) != img:
            raise PreconditionError("subspace is not invariant under the operator")
        cols.append(coords)
    if k == 0:
        return Matrix.zeros(0, 0)
    return Matrix.from_columns(cols)


def _embed(coord_space: Subspace, host: Subspace) -> Subspace:
    """Map a subspace of host-coordinates back into the ambient space."""
    vecs = [host.from_coordinates(c) for c in coord_space.basis]
    return Subspace.from_vectors(host.ambient_dim, vecs)


def is_nilpotent_operator(m: Matrix) -> bool:
    """True iff m**dim is the zero matrix."""
    if not m.is_square:
        raise DimensionMismatchError("nilpotency of a non-square matrix")
    if m.rows == 0:
        return True
    return not any(_scaled_power_numerator(m, m.rows))


@dataclass(frozen=True)
class FittingSplit:
    """Decomposition into the nilpotent and co-nilpotent invariant parts.

    proj_n is the projection onto v_n along v_0.
    """

    v_n: Subspace
    v_0: Subspace
    proj_n: Matrix


def _projection_onto(v_n: Subspace, v_0: Subspace) -> Matrix:
    n = v_n.ambient_dim
    cols = [list(b) for b in v_n.basis] + [list(b) for b in v_0.basis]
    if len(cols) != n:
        raise PreconditionError("subspaces do not decompose the ambient space")
    basis_mat = Matrix.from_columns(cols)
    target = Matrix.from_columns(
        [list(b) for b in v_n.basis] + [[Fraction(0)] * n for _ in v_0.basis]
    )
    return target * basis_mat.inverse()


def fitting_split_single(m: Matrix) -> FittingSplit:
    """Fitting decomposition of one operator.

    v_n is the kernel and v_0 the image of m**dim; m is nilpotent on
    v_n and invertible on v_0.
    """
    if not m.is_square:
        raise DimensionMismatchError("Fitting split of a non-square matrix")
    n = m.rows
    pw = Matrix._raw(n, n, list(_scaled_power_numerator(m, n)), 1)
    v_n = kernel(pw)
    v_0 = image(pw)
    return FittingSplit(v_n, v_0, _projection_onto(v_n, v_0))


def fitting_split_family(ms) -> FittingSplit:
    """Joint Fitting decomposition of a pairwise commuting family.

    v_n is the largest subspace on which every operator is nilpotent,
    computed by splitting off the invertible part of each operator in
    turn; the leftover is the intersection of the generalized kernels.
    """
    mats = list(ms)
    if not mats:
        raise DimensionMismatchError("empty operator family")
    n = mats[0].rows
    for m in mats:
        if not m.is_square or m.rows != n:
            raise DimensionMismatchError("family members must be square of equal size")
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            a, b = mats[i], mats[j]
            ab = K.mat_mul(a._num, b._num, n, n, n)
            ba = K.mat_mul(b._num, a._num, n, n, n)
            if ab != ba:
                raise NonCommutingFamilyError(f"operators {i} and {j} do not commute")

    running = Subspace.full(n)
    v0_parts: list[Subspace] = []
    for m in mats:
        if running.dim == 0:
            break
        sub = fitting_split_single(restrict_operator(m, running))
        v0_parts.append(_embed(sub.v_0, running))
        running = _embed(sub.v_n, running)
    v_0 = Subspace.zero(n)
    for part in v0_parts:
        v_0 = subspace_sum(v_0, part)
    return FittingSplit(running, v_0, _projection_onto(running, v_0))
