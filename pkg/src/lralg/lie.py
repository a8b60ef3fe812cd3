"""Lie algebras over the rationals, given by structure constants.

A LieAlgebra stores the full bracket tensor c[i][j][k], meaning
[e_i, e_j] = sum_k c[i][j][k] e_k.  Construction does not validate the
axioms; validate_lie reports violations and operations whose contracts
require a Lie algebra call it first (the result is cached on the
instance).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DimensionMismatchError,
    InternalConsistencyError,
    InvalidLieAlgebraError,
    NotAnIdealError,
    NotTwoStepSolvableError,
)
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    complement,
    solve,
    standard_basis,
    subspace_sum,
    to_fraction,
    vector,
    zero_vector,
)

Tensor = tuple[tuple[Vector, ...], ...]


@dataclass(frozen=True)
class Violation:
    """One failed identity: which identity, at which basis indices, and
    the exact defect (a vector or a matrix, never approximate)."""

    identity: str
    indices: tuple[int, ...]
    defect: object

    def __str__(self) -> str:
        where = ", ".join(str(i + 1) for i in self.indices)
        return f"{self.identity} at ({where})"


def _freeze_tensor(dim: int, entries) -> Tensor:
    t = []
    for i in range(dim):
        row = []
        for j in range(dim):
            row.append(tuple(to_fraction(x) for x in entries[i][j]))
            if len(row[-1]) != dim:
                raise DimensionMismatchError("tensor slice of wrong length")
        t.append(tuple(row))
    return tuple(t)


class LieAlgebra:
    __slots__ = ("dim", "brackets", "basis_names", "_valid")

    def __init__(self, brackets, basis_names=None):
        entries = [[list(v) for v in row] for row in brackets]
        dim = len(entries)
        self.dim = dim
        self.brackets = _freeze_tensor(dim, entries)
        if basis_names is not None:
            basis_names = tuple(str(s) for s in basis_names)
            if len(basis_names) != dim:
                raise DimensionMismatchError("one basis name per basis vector")
        self.basis_names = basis_names
        self._valid = None

    @classmethod
    def from_brackets(cls, dim: int, pairs, basis_names=None) -> "LieAlgebra":
        """Build from a sparse {(i, j): {k: value}} map with i < j.

        Indices are 0-based; the antisymmetric counterparts are filled
        in automatically.
        """
        t = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), comps in pairs.items():
            if not (0 <= i < j < dim):
                raise DimensionMismatchError(f"bracket pair ({i}, {j}) needs 0 <= i < j < dim")
            for k, val in comps.items():
                if not 0 <= k < dim:
                    raise DimensionMismatchError(f"component index {k} out of range")
                v = to_fraction(val)
                t[i][j][k] = v
                t[j][i][k] = -v
        return cls(t, basis_names)

    def name(self, i: int) -> str:
        if self.basis_names is not None:
            return self.basis_names[i]
        return f"e{i + 1}"

    def bracket(self, x, y) -> Vector:
        xv, yv = vector(x), vector(y)
        n = self.dim
        if len(xv) != n or len(yv) != n:
            raise DimensionMismatchError("vector length differs from algebra dimension")
        out = [Fraction(0)] * n
        for i, xi in enumerate(xv):
            if not xi:
                continue
            ci = self.brackets[i]
            for j, yj in enumerate(yv):
                if not yj:
                    continue
                row = ci[j]
                s = xi * yj
                for k in range(n):
                    if row[k]:
                        out[k] += s * row[k]
        return tuple(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.brackets == other.brackets
            and self.basis_names == other.basis_names
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim})"

    def ensure_valid(self) -> None:
        if self._valid is None:
            ok, violations = validate_lie(self)
            if not ok:
                raise InvalidLieAlgebraError(
                    f"{len(violations)} violated identities, first: {violations[0]}"
                )
        elif self._valid is False:
            raise InvalidLieAlgebraError("structure constants fail the Lie axioms")


def _bracket_std(g: LieAlgebra, i: int, w) -> Vector:
    """[e_i, w] for a standard basis vector e_i."""
    n = g.dim
    out = [Fraction(0)] * n
    ci = g.brackets[i]
    for j, wj in enumerate(w):
        if wj:
            row = ci[j]
            for k in range(n):
                if row[k]:
                    out[k] += wj * row[k]
    return tuple(out)


def validate_lie(g: LieAlgebra) -> tuple[bool, list[Violation]]:
    """Check antisymmetry and the Jacobi identity on all basis tuples.

    Returns (ok, violations); each violation carries the basis indices
    and the defect vector.
    """
    n = g.dim
    c = g.brackets
    violations: list[Violation] = []
    zero = zero_vector(n)
    for i in range(n):
        for j in range(i, n):
            defect = tuple(a + b for a, b in zip(c[i][j], c[j][i]))
            if any(defect):
                violations.append(Violation("antisymmetry", (i, j), defect))
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                d1 = _bracket_std(g, i, c[j][k])
                d2 = _bracket_std(g, j, c[k][i])
                d3 = _bracket_std(g, k, c[i][j])
                defect = tuple(a + b + d for a, b, d in zip(d1, d2, d3))
                if defect != zero:
                    violations.append(Violation("jacobi", (i, j, k), defect))
    ok = not violations
    g._valid = ok
    return ok, violations


def ad(g: LieAlgebra, x) -> Matrix:
    """Adjoint operator of x: the matrix of y -> [x, y]."""
    xv = vector(x)
    if len(xv) != g.dim:
        raise DimensionMismatchError("vector length differs from algebra dimension")
    n = g.dim
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i, xi in enumerate(xv):
        if not xi:
            continue
        ci = g.brackets[i]
        for j in range(n):
            row = ci[j]
            for k in range(n):
                if row[k]:
                    rows[k][j] += xi * row[k]
    return Matrix(rows)


def bracket_of_subspaces(g: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    """Span of all [u, v] with u in a, v in b."""
    if a.ambient_dim != g.dim or b.ambient_dim != g.dim:
        raise DimensionMismatchError("subspace ambient dimension differs from algebra")
    vecs = [g.bracket(u, v) for u in a.basis for v in b.basis]
    return Subspace.from_vectors(g.dim, vecs)


@dataclass(frozen=True)
class SeriesReport:
    """Lower central and derived series, with the standard flags.

    Both series are listed from the whole algebra down to their first
    stabilized term; g_infinity is the stabilized lower central term.
    solvable_class is None when the derived series does not reach zero.
    """

    lower_central: tuple[Subspace, ...]
    g_infinity: Subspace
    derived: tuple[Subspace, ...]
    nilpotent: bool
    solvable_class: int | None

    @property
    def solvable(self) -> bool:
        return self.solvable_class is not None


def series(g: LieAlgebra) -> SeriesReport:
    g.ensure_valid()
    full = Subspace.full(g.dim)

    lower = [full]
    while True:
        nxt = bracket_of_subspaces(g, full, lower[-1])
        if nxt == lower[-1]:
            break
        lower.append(nxt)

    derived = [full]
    while True:
        nxt = bracket_of_subspaces(g, derived[-1], derived[-1])
        if nxt == derived[-1]:
            break
        derived.append(nxt)

    g_infinity = lower[-1]
    solvable = derived[-1].dim == 0
    return SeriesReport(
        lower_central=tuple(lower),
        g_infinity=g_infinity,
        derived=tuple(derived),
        nilpotent=g_infinity.dim == 0,
        solvable_class=len(derived) - 1 if solvable else None,
    )


def is_two_step_solvable(g: LieAlgebra) -> bool:
    """True iff the second derived algebra [[g,g],[g,g]] vanishes."""
    g.ensure_valid()
    full = Subspace.full(g.dim)
    d1 = bracket_of_subspaces(g, full, full)
    return bracket_of_subspaces(g, d1, d1).dim == 0


def subalgebra_generated(g: LieAlgebra, vectors_) -> Subspace:
    """Smallest bracket-closed subspace containing the given vectors."""
    g.ensure_valid()
    s = Subspace.from_vectors(g.dim, [vector(v) for v in vectors_])
    while True:
        grown = subspace_sum(s, bracket_of_subspaces(g, s, s))
        if grown == s:
            return s
        s = grown


def quotient(g: LieAlgebra, ideal: Subspace) -> tuple[LieAlgebra, Matrix, Matrix]:
    """Quotient algebra by an ideal, with projection and section.

    The quotient basis is the image of the standard basis vectors at
    the non-pivot coordinates of the ideal; the section maps them back,
    so projection * section is the identity on the quotient.
    """
    g.ensure_valid()
    if ideal.ambient_dim != g.dim:
        raise DimensionMismatchError("ideal ambient dimension differs from algebra")
    n = g.dim
    std = standard_basis(n)
    for b in ideal.basis:
        for i in range(n):
            img = _bracket_std(g, i, b)
            if not ideal.contains(img):
                raise NotAnIdealError(
                    f"[{g.name(i)}, ideal basis vector] leaves the subspace"
                )
    free = [c for c in range(n) if c not in set(ideal.pivots)]
    q = len(free)
    proj_cols = []
    for j in range(n):
        r = ideal.reduce(std[j])
        proj_cols.append([r[f] for f in free])
    projection = Matrix.from_columns(proj_cols) if q else Matrix.zeros(0, n)
    section = Matrix.from_columns([std[f] for f in free]) if q else Matrix.zeros(n, 0)

    tensor = [[zero_vector(q) for _ in range(q)] for _ in range(q)]
    for a in range(q):
        for b in range(q):
            w = g.bracket(std[free[a]], std[free[b]])
            tensor[a][b] = projection.apply(w)
    names = None
    if g.basis_names is not None:
        names = tuple(g.basis_names[f] for f in free)
    return LieAlgebra(tensor, names), projection, section


@dataclass(frozen=True)
class SplitDecomposition:
    """Splitting of a two-step solvable algebra over its stabilized
    lower central term.

    complement_basis spans a subalgebra; phi[j] is the matrix of
    x -> [complement_basis[j], x] on the span of g_infinity_basis, in
    the coordinates of that basis.  change_of_basis has the adapted
    basis (g_infinity vectors first, then the complement) as columns.
    algebra is the algebra that was split.
    """

    algebra: "LieAlgebra"
    g_infinity_basis: tuple[Vector, ...]
    complement_basis: tuple[Vector, ...]
    phi: tuple[Matrix, ...]
    change_of_basis: Matrix

    @property
    def ambient_dim(self) -> int:
        return self.change_of_basis.rows

    def phi_of(self, coords) -> Matrix:
        """phi of a complement-coordinate vector (linear combination)."""
        k = len(self.g_infinity_basis)
        acc = Matrix.zeros(k, k)
        for c, m in zip(vector(coords), self.phi):
            if c:
                acc = acc + c * m
        return acc


def _phi_matrix(g: LieAlgebra, w, ginf: Subspace) -> Matrix:
    """Matrix of x -> [w, x] restricted to ginf, in ginf coordinates."""
    k = ginf.dim
    if k == 0:
        return Matrix.zeros(0, 0)
    cols = []
    for b in ginf.basis:
        img = g.bracket(w, b)
        coords = ginf.coordinates(img)
        if coords is None:
            raise InternalConsistencyError("bracket left the stabilized term")
        cols.append(coords)
    return Matrix.from_columns(cols)


def split_metabelian(g: LieAlgebra) -> SplitDecomposition:
    """Split g as a semidirect sum of g_infinity and a complement
    subalgebra.

    Works for two-step solvable algebras.  The complement starts from
    the standard basis vectors at the non-pivot coordinates of
    g_infinity and is corrected by a linear solve so that it closes
    under the bracket; solvability of that system is guaranteed in this
    setting, so failure raises InternalConsistencyError.
    """
    g.ensure_valid()
    if not is_two_step_solvable(g):
        raise NotTwoStepSolvableError("second derived algebra does not vanish")
    rep = series(g)
    ginf = rep.g_infinity
    n = g.dim
    if bracket_of_subspaces(g, ginf, ginf).dim != 0:
        raise InternalConsistencyError("stabilized lower central term is not abelian")
    if bracket_of_subspaces(g, Subspace.full(n), ginf) != ginf:
        raise InternalConsistencyError("stabilized lower central term is not stable")

    comp = complement(ginf)
    free = list(comp.pivots)
    q = len(free)
    k = ginf.dim
    std = standard_basis(n)
    w_basis = [std[f] for f in free]
    phi_w = [_phi_matrix(g, w, ginf) for w in w_basis]

    # Correction tau: W -> g_infinity making {w + tau(w)} bracket-closed.
    # Unknown T[j][t] = coefficient of the t-th g_infinity basis vector
    # in tau(w_j); one block of k equations per unordered pair.
    tau = [zero_vector(k) for _ in range(q)]
    pairs = [(a, b) for a in range(q) for b in range(a + 1, q)]
    if k and pairs:
        nvars = q * k
        rows: list[list[Fraction]] = []
        rhs: list[Fraction] = []
        for a, b in pairs:
            v = g.bracket(w_basis[a], w_basis[b])
            r = ginf.reduce(v)            # component in W
            c_ab = tuple(v[p] for p in ginf.pivots)  # g_infinity coordinates
            beta = [r[f] for f in free]   # W coordinates of the bracket
            for s in range(k):
                row = [Fraction(0)] * nvars
                for t in range(k):
                    row[b * k + t] += phi_w[a][s, t]
                    row[a * k + t] -= phi_w[b][s, t]
                for mth, bm in enumerate(beta):
                    if bm:
                        row[mth * k + s] -= bm
                rows.append(row)
                rhs.append(-c_ab[s])
        sol = solve(Matrix(rows), rhs)
        if sol is None:
            raise InternalConsistencyError("complement correction system is unsolvable")
        tau = [tuple(sol[j * k + t] for t in range(k)) for j in range(q)]

    comp_basis = []
    for j in range(q):
        corr = ginf.from_coordinates(tau[j])
        comp_basis.append(tuple(a + b for a, b in zip(w_basis[j], corr)))

    comp_space = Subspace.from_vectors(n, comp_basis)
    if comp_space.dim != q:
        raise InternalConsistencyError("corrected complement lost dimension")
    for a in range(q):
        for b in range(a + 1, q):
            if not comp_space.contains(g.bracket(comp_basis[a], comp_basis[b])):
                raise InternalConsistencyError("corrected complement is not a subalgebra")

    phi = tuple(_phi_matrix(g, w, ginf) for w in comp_basis)
    for a in range(q):
        for b in range(a + 1, q):
            br = g.bracket(comp_basis[a], comp_basis[b])
            lhs = phi[a] * phi[b] - phi[b] * phi[a]
            if lhs != _phi_matrix(g, br, ginf):
                raise InternalConsistencyError("phi is not a homomorphism")

    cols = [list(b) for b in ginf.basis] + [list(b) for b in comp_basis]
    change = Matrix.from_columns(cols)
    return SplitDecomposition(
        algebra=g,
        g_infinity_basis=ginf.basis,
        complement_basis=tuple(comp_basis),
        phi=phi,
        change_of_basis=change,
    )
