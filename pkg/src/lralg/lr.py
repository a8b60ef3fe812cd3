"""Products on a vector space and the LR identities.

A Product stores the full table p[i][j][k], meaning
e_i * e_j = sum_k p[i][j][k] e_k.  The two LR identities are

    x * (y * z) = y * (x * z)        (left multiplications commute)
    (x * y) * z = (x * z) * y        (right multiplications commute)

and a product is compatible with a bracket when x*y - y*x = [x, y].
Complete means every right multiplication is nilpotent.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DimensionMismatchError,
    NotLrProductError,
    NotTwoSidedIdealError,
    PreconditionError,
)
from .lie import LieAlgebra, Violation, series
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    is_nilpotent_operator,
    standard_basis,
    to_fraction,
    vector,
    zero_vector,
)

LR_LEFT = "x(yz) = y(xz)"
LR_RIGHT = "(xy)z = (xz)y"
COMPATIBILITY = "xy - yx = [x,y]"


class Product:
    __slots__ = ("dim", "table")

    def __init__(self, table):
        entries = [[tuple(to_fraction(x) for x in v) for v in row] for row in table]
        dim = len(entries)
        for row in entries:
            if len(row) != dim or any(len(v) != dim for v in row):
                raise DimensionMismatchError("product table must be dim x dim x dim")
        self.dim = dim
        self.table = tuple(tuple(row) for row in entries)

    @classmethod
    def from_entries(cls, dim: int, pairs) -> "Product":
        """Build from a sparse {(i, j): {k: value}} map, 0-based, no
        symmetry assumed."""
        t = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), comps in pairs.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionMismatchError(f"product pair ({i}, {j}) out of range")
            for k, val in comps.items():
                if not 0 <= k < dim:
                    raise DimensionMismatchError(f"component index {k} out of range")
                t[i][j][k] = to_fraction(val)
        return cls(t)

    @classmethod
    def zero(cls, dim: int) -> "Product":
        z = zero_vector(dim)
        return cls(tuple(tuple(z for _ in range(dim)) for _ in range(dim)))

    def evaluate(self, x, y) -> Vector:
        xv, yv = vector(x), vector(y)
        n = self.dim
        if len(xv) != n or len(yv) != n:
            raise DimensionMismatchError("vector length differs from product dimension")
        out = [Fraction(0)] * n
        for i, xi in enumerate(xv):
            if not xi:
                continue
            ti = self.table[i]
            for j, yj in enumerate(yv):
                if not yj:
                    continue
                row = ti[j]
                s = xi * yj
                for k in range(n):
                    if row[k]:
                        out[k] += s * row[k]
        return tuple(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Product):
            return NotImplemented
        return self.dim == other.dim and self.table == other.table

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Product(dim={self.dim})"


def left_op(p: Product, x) -> Matrix:
    """Matrix of y -> x * y."""
    xv = vector(x)
    if len(xv) != p.dim:
        raise DimensionMismatchError("vector length differs from product dimension")
    n = p.dim
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i, xi in enumerate(xv):
        if not xi:
            continue
        ti = p.table[i]
        for j in range(n):
            row = ti[j]
            for k in range(n):
                if row[k]:
                    rows[k][j] += xi * row[k]
    return Matrix(rows)


def right_op(p: Product, x) -> Matrix:
    """Matrix of y -> y * x."""
    xv = vector(x)
    if len(xv) != p.dim:
        raise DimensionMismatchError("vector length differs from product dimension")
    n = p.dim
    rows = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        tj = p.table[j]
        for m, xm in enumerate(xv):
            if not xm:
                continue
            row = tj[m]
            for k in range(n):
                if row[k]:
                    rows[k][j] += xm * row[k]
    return Matrix(rows)


def _basis_ops(p: Product) -> tuple[list[Matrix], list[Matrix]]:
    std = standard_basis(p.dim)
    return [left_op(p, e) for e in std], [right_op(p, e) for e in std]


def _commutator_violations(mats: list[Matrix], identity: str) -> list[Violation]:
    out = []
    n = len(mats)
    for i in range(n):
        for j in range(i + 1, n):
            d = mats[i] * mats[j] - mats[j] * mats[i]
            if not d.is_zero:
                for k in range(d.cols):
                    col = d.column(k)
                    if any(col):
                        out.append(Violation(identity, (i, j, k), col))
    return out


@dataclass(frozen=True)
class LrReport:
    is_lr: bool
    is_compatible: bool
    is_complete: bool
    violations: tuple[Violation, ...]


def check_lr(g: LieAlgebra, p: Product) -> LrReport:
    """Full report: the two LR identities, compatibility with the
    bracket, and completeness.

    Completeness is reported as False whenever the right
    multiplications fail to commute, since the notion only makes sense
    past that point.
    """
    g.ensure_valid()
    if g.dim != p.dim:
        raise DimensionMismatchError("algebra and product dimensions differ")
    n = g.dim
    lmats, rmats = _basis_ops(p)
    left_violations = _commutator_violations(lmats, LR_LEFT)
    right_violations = _commutator_violations(rmats, LR_RIGHT)
    violations = left_violations + right_violations
    is_lr = not violations
    compatible = True
    for i in range(n):
        for j in range(i + 1, n):
            defect = tuple(
                p.table[i][j][k] - p.table[j][i][k] - g.brackets[i][j][k] for k in range(n)
            )
            if any(defect):
                compatible = False
                violations.append(Violation(COMPATIBILITY, (i, j), defect))
    complete = False
    if not right_violations:
        complete = all(is_nilpotent_operator(r) for r in rmats)
    return LrReport(
        is_lr=is_lr,
        is_compatible=compatible,
        is_complete=complete,
        violations=tuple(violations),
    )


def check_complete(p: Product) -> bool:
    """True iff every right multiplication is nilpotent.

    Requires the right multiplications to commute; then nilpotency of
    the basis operators already covers all linear combinations.
    """
    lmats, rmats = _basis_ops(p)
    n = p.dim
    for i in range(n):
        for j in range(i + 1, n):
            if not (rmats[i] * rmats[j] - rmats[j] * rmats[i]).is_zero:
                raise PreconditionError("right multiplications do not commute")
    return all(is_nilpotent_operator(r) for r in rmats)


def opposite(p: Product) -> Product:
    """The product x . y = -(y * x); swaps the roles of left and right."""
    n = p.dim
    return Product(
        tuple(
            tuple(tuple(-x for x in p.table[j][i]) for j in range(n))
            for i in range(n)
        )
    )


def _lr_axiom_violations(p: Product) -> list[Violation]:
    lmats, rmats = _basis_ops(p)
    return _commutator_violations(lmats, LR_LEFT) + _commutator_violations(rmats, LR_RIGHT)


LEMMA_IDENTITIES = (
    "L(x)R(y) = R(xy)",
    "R(x)L(y) = L(yx)",
    "L(x)R(yz) = R(x(yz))",
    "R(x)L(yz) = L((yz)x)",
    "L(x)L(yz) = L(y(xz))",
    "R(x)R(yz) = R((yx)z)",
)


def _lemma_defects(p: Product, x, y, z) -> list[tuple[str, Matrix]]:
    lx, rx = left_op(p, x), right_op(p, x)
    ly = left_op(p, y)
    ry = right_op(p, y)
    xy = p.evaluate(x, y)
    yx = p.evaluate(y, x)
    yz = p.evaluate(y, z)
    xz = p.evaluate(x, z)
    checks = [
        (LEMMA_IDENTITIES[0], lx * ry - right_op(p, xy)),
        (LEMMA_IDENTITIES[1], rx * ly - left_op(p, yx)),
        (LEMMA_IDENTITIES[2], lx * right_op(p, yz) - right_op(p, p.evaluate(x, yz))),
        (LEMMA_IDENTITIES[3], rx * left_op(p, yz) - left_op(p, p.evaluate(yz, x))),
        (LEMMA_IDENTITIES[4], lx * left_op(p, yz) - left_op(p, p.evaluate(y, xz))),
        (LEMMA_IDENTITIES[5], rx * right_op(p, yz) - right_op(p, p.evaluate(yx, z))),
    ]
    return [(name, d) for name, d in checks if not d.is_zero]


def check_lemma14(p: Product, samples=()) -> list[Violation]:
    """Verify the six derived operator identities of LR products.

    Checked on all basis triples and on every supplied sample triple
    (x, y, z).  If the product fails the LR axioms themselves, those
    violations are returned and nothing else is attempted.
    """
    gate = _lr_axiom_violations(p)
    if gate:
        return gate
    n = p.dim
    std = standard_basis(n)
    lmats, rmats = _basis_ops(p)
    violations: list[Violation] = []

    def op_of(vec, mats):
        acc = None
        for m, c in zip(mats, vec):
            if c:
                term = m * c
                acc = term if acc is None else acc + term
        return acc if acc is not None else Matrix.zeros(n, n)

    # Pair identities once per (i, j).
    for i in range(n):
        for j in range(n):
            d = lmats[i] * rmats[j] - op_of(p.table[i][j], rmats)
            if not d.is_zero:
                violations.append(Violation(LEMMA_IDENTITIES[0], (i, j), d))
            d = rmats[i] * lmats[j] - op_of(p.table[j][i], lmats)
            if not d.is_zero:
                violations.append(Violation(LEMMA_IDENTITIES[1], (i, j), d))

    # Triple identities; the inner product e_j * e_k is usually zero,
    # in which case every remaining check is trivially 0 = 0.
    for j in range(n):
        for k in range(n):
            yz = p.table[j][k]
            if not any(yz):
                continue
            l_yz = op_of(yz, lmats)
            r_yz = op_of(yz, rmats)
            for i in range(n):
                checks = (
                    (2, lmats[i] * r_yz - op_of(p.evaluate(std[i], yz), rmats)),
                    (3, rmats[i] * l_yz - op_of(p.evaluate(yz, std[i]), lmats)),
                    (4, lmats[i] * l_yz - op_of(p.evaluate(std[j], p.table[i][k]), lmats)),
                    (5, rmats[i] * r_yz - op_of(p.evaluate(p.table[j][i], std[k]), rmats)),
                )
                for which, d in checks:
                    if not d.is_zero:
                        violations.append(Violation(LEMMA_IDENTITIES[which], (i, j, k), d))

    for s, (x, y, z) in enumerate(samples):
        for name, d in _lemma_defects(p, vector(x), vector(y), vector(z)):
            violations.append(Violation(name + " (sampled)", (s,), d))
    return violations


def sample_triples(dim: int, count: int, seed: int) -> list[tuple[Vector, Vector, Vector]]:
    """Deterministic pseudorandom triples of rational vectors."""
    rng = random.Random(seed)

    def rand_vec() -> Vector:
        return tuple(
            Fraction(rng.randint(-4, 4), rng.choice((1, 1, 2, 3))) for _ in range(dim)
        )

    return [(rand_vec(), rand_vec(), rand_vec()) for _ in range(count)]


@dataclass(frozen=True)
class TwoOfThree:
    """The three nilpotency statements and their mutual consistency.

    Any two of {all left multiplications nilpotent, all right
    multiplications nilpotent, the algebra nilpotent} force the third,
    so observing exactly one failure among the three is inconsistent.
    """

    left_nilpotent: bool
    right_nilpotent: bool
    algebra_nilpotent: bool
    consistent: bool


def two_of_three(g: LieAlgebra, p: Product) -> TwoOfThree:
    report = check_lr(g, p)
    if not (report.is_lr and report.is_compatible):
        raise NotLrProductError("two-of-three requires an LR product compatible with g")
    lmats, rmats = _basis_ops(p)
    a = all(is_nilpotent_operator(m) for m in lmats)
    b = all(is_nilpotent_operator(m) for m in rmats)
    c = series(g).nilpotent
    consistent = (a, b, c).count(False) != 1
    return TwoOfThree(a, b, c, consistent)


def product_span(p: Product) -> Subspace:
    """Span of all products of basis vectors."""
    vecs = [p.table[i][j] for i in range(p.dim) for j in range(p.dim)]
    return Subspace.from_vectors(p.dim, vecs)


def quotient_product(g: LieAlgebra, p: Product, ideal: Subspace) -> Product:
    """Product induced on the canonical quotient basis.

    The ideal must absorb the product from both sides; that is checked
    directly, entry by entry.
    """
    if g.dim != p.dim or ideal.ambient_dim != p.dim:
        raise DimensionMismatchError("algebra, product and ideal dimensions differ")
    n = p.dim
    std = standard_basis(n)
    for b in ideal.basis:
        for i in range(n):
            if not ideal.contains(p.evaluate(std[i], b)):
                raise NotTwoSidedIdealError("subspace is not stable under left products")
            if not ideal.contains(p.evaluate(b, std[i])):
                raise NotTwoSidedIdealError("subspace is not stable under right products")
    free = [c for c in range(n) if c not in set(ideal.pivots)]
    q = len(free)
    table = [[zero_vector(q) for _ in range(q)] for _ in range(q)]
    for a in range(q):
        for b in range(q):
            w = ideal.reduce(p.table[free[a]][free[b]])
            table[a][b] = tuple(w[f] for f in free)
    return Product(table)
