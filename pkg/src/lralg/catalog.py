"""Named algebras and product fixtures used by tests and the CLI.

Fixture tables are written out literally so they stay independent of
the constructors they exercise; expected flags are recorded next to
each fixture and say exactly which checks should pass or fail.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError, UnknownFixtureError
from .lie import LieAlgebra
from .lr import COMPATIBILITY, LR_LEFT, LR_RIGHT, Product
from .linalg import to_fraction


def abelian(n: int) -> LieAlgebra:
    if n < 1:
        raise PreconditionError("dimension must be at least 1")
    return LieAlgebra.from_brackets(n, {})


def heisenberg() -> LieAlgebra:
    return LieAlgebra.from_brackets(3, {(0, 1): {2: 1}})


def filiform(n: int) -> LieAlgebra:
    """[e1, e_i] = e_{i+1} for 2 <= i <= n-1, everything else zero."""
    if n < 3:
        raise PreconditionError("filiform algebras here start at dimension 3")
    return LieAlgebra.from_brackets(n, {(0, j): {j + 1: 1} for j in range(1, n - 1)})


def r2() -> LieAlgebra:
    """The two-dimensional algebra [x, y] = y."""
    return LieAlgebra.from_brackets(2, {(0, 1): {1: 1}}, basis_names=("x", "y"))


def diag_solvable(weights) -> LieAlgebra:
    """[x, y_i] = w_i y_i with one y per weight."""
    ws = [to_fraction(w) for w in weights]
    if not ws:
        raise PreconditionError("at least one weight required")
    names = ("x",) + tuple(f"y{i + 1}" for i in range(len(ws)))
    return LieAlgebra.from_brackets(
        len(ws) + 1, {(0, i + 1): {i + 1: w} for i, w in enumerate(ws)}, basis_names=names
    )


def free_two_step(gens: int) -> LieAlgebra:
    """Free nilpotent algebra of class two: [x_i, x_j] = z_ij, z central."""
    if gens < 1:
        raise PreconditionError("at least one generator required")
    pairs = [(i, j) for i in range(gens) for j in range(i + 1, gens)]
    dim = gens + len(pairs)
    brackets = {(i, j): {gens + t: 1} for t, (i, j) in enumerate(pairs)}
    names = tuple(f"x{i + 1}" for i in range(gens)) + tuple(
        f"z{i + 1}{j + 1}" for i, j in pairs
    )
    return LieAlgebra.from_brackets(dim, brackets, basis_names=names)


def _half_table(g: LieAlgebra) -> Product:
    half = Fraction(1, 2)
    return Product(
        tuple(tuple(tuple(half * x for x in v) for v in row) for row in g.brackets)
    )


def _filiform_shift(n: int) -> tuple[LieAlgebra, Product]:
    g = filiform(n)
    p = Product.from_entries(n, {(i, 0): {i + 1: -1} for i in range(1, n - 1)})
    return g, p


@dataclass(frozen=True)
class Fixture:
    """A named (algebra, product) pair with its documented expectations.

    failing lists the identities expected to be violated; empty for the
    positive fixtures.
    """

    name: str
    is_lr: bool
    is_compatible: bool
    is_complete: bool
    failing: tuple[str, ...]
    description: str


def _fx_heisenberg_half():
    return heisenberg(), Product.from_entries(
        3, {(0, 1): {2: "1/2"}, (1, 0): {2: "-1/2"}}
    )


def _fx_heisenberg_onesided():
    return heisenberg(), Product.from_entries(3, {(0, 1): {2: 1}})


def _fx_heisenberg_fullbracket():
    return heisenberg(), Product.from_entries(3, {(0, 1): {2: 1}, (1, 0): {2: -1}})


def _fx_abelian1_idempotent():
    return abelian(1), Product.from_entries(1, {(0, 0): {0: 1}})


def _fx_abelian2_idempotent_line():
    return abelian(2), Product.from_entries(2, {(0, 0): {0: 1}})


def _fx_r2_twogen():
    return r2(), Product.from_entries(2, {(1, 0): {1: -1}})


def _fx_r2_completed():
    return r2(), Product.from_entries(2, {(0, 1): {1: 1}})


def _fx_diag11_twogen():
    return diag_solvable([1, 1]), Product.from_entries(
        3, {(1, 0): {1: -1}, (2, 0): {2: -1}}
    )


def _fx_free2step3_half():
    g = free_two_step(3)
    return g, _half_table(g)


def _fx_filiform12_shift():
    return _filiform_shift(12)


def _fx_r2_right_broken():
    return r2(), Product.from_entries(2, {(1, 0): {1: -1}, (1, 1): {0: 1}})


def _fx_r2_left_broken():
    return r2(), Product.from_entries(2, {(0, 1): {1: 1}, (1, 1): {0: -1}})


_FIXTURES: dict[str, tuple] = {
    "heisenberg-half": (
        _fx_heisenberg_half,
        Fixture(
            "heisenberg-half", True, True, True, (),
            "half the bracket on the Heisenberg algebra",
        ),
    ),
    "heisenberg-onesided": (
        _fx_heisenberg_onesided,
        Fixture(
            "heisenberg-onesided", True, True, True, (),
            "e1*e2 = e3 and nothing else",
        ),
    ),
    "heisenberg-fullbracket": (
        _fx_heisenberg_fullbracket,
        Fixture(
            "heisenberg-fullbracket", True, False, True, (COMPATIBILITY,),
            "the full bracket as a product; commutators come out doubled",
        ),
    ),
    "abelian1-idempotent": (
        _fx_abelian1_idempotent,
        Fixture(
            "abelian1-idempotent", True, True, False, (),
            "one idempotent on a line",
        ),
    ),
    "abelian2-idempotent-line": (
        _fx_abelian2_idempotent_line,
        Fixture(
            "abelian2-idempotent-line", True, True, False, (),
            "an idempotent direction inside the plane",
        ),
    ),
    "r2-twogen": (
        _fx_r2_twogen,
        Fixture(
            "r2-twogen", True, True, False, (),
            "y*x = -y, the two-generator product on r2",
        ),
    ),
    "r2-completed": (
        _fx_r2_completed,
        Fixture(
            "r2-completed", True, True, True, (),
            "x*y = y, the completed product on r2",
        ),
    ),
    "diag11-twogen": (
        _fx_diag11_twogen,
        Fixture(
            "diag11-twogen", True, True, False, (),
            "y_i*x = -y_i on the diagonal solvable algebra with weights 1, 1",
        ),
    ),
    "free2step3-half": (
        _fx_free2step3_half,
        Fixture(
            "free2step3-half", True, True, True, (),
            "half the bracket on the free two-step algebra on three generators",
        ),
    ),
    "filiform12-shift": (
        _fx_filiform12_shift,
        Fixture(
            "filiform12-shift", True, True, True, (),
            "e_i*e1 = -e_{i+1} on the dimension-12 filiform algebra",
        ),
    ),
    "r2-right-broken": (
        _fx_r2_right_broken,
        Fixture(
            "r2-right-broken", False, True, False, (LR_RIGHT,),
            "y*x = -y plus y*y = x; right multiplications stop commuting",
        ),
    ),
    "r2-left-broken": (
        _fx_r2_left_broken,
        Fixture(
            "r2-left-broken", False, True, False, (LR_LEFT,),
            "opposite of r2-right-broken; left multiplications stop commuting",
        ),
    ),
}


def known_lr_names() -> tuple[str, ...]:
    return tuple(_FIXTURES)


def known_lr(name: str) -> tuple[LieAlgebra, Product]:
    try:
        build = _FIXTURES[name][0]
    except KeyError:
        raise UnknownFixtureError(name) from None
    return build()


def fixture_expectations(name: str) -> Fixture:
    try:
        return _FIXTURES[name][1]
    except KeyError:
        raise UnknownFixtureError(name) from None


def named_algebra(name: str, arg: str | None = None) -> LieAlgebra:
    """Parametrized catalog lookup used by the command line.

    abelian, filiform and free-two-step take an integer; diag-solvable
    takes comma-separated rational weights; heisenberg and r2 take
    nothing.
    """
    def as_int() -> int:
        if arg is None:
            raise PreconditionError(f"{name} needs an integer parameter")
        try:
            return int(arg)
        except ValueError:
            raise PreconditionError(f"{name} needs an integer parameter, got {arg!r}") from None

    def no_arg() -> None:
        if arg is not None:
            raise PreconditionError(f"{name} takes no parameter")

    if name == "abelian":
        return abelian(as_int())
    if name == "heisenberg":
        no_arg()
        return heisenberg()
    if name == "filiform":
        return filiform(as_int())
    if name == "r2":
        no_arg()
        return r2()
    if name == "diag-solvable":
        if arg is None:
            raise PreconditionError("diag-solvable needs comma-separated weights")
        try:
            weights = [Fraction(part) for part in arg.split(",")]
        except (ValueError, ZeroDivisionError):
            raise PreconditionError(f"bad weight list {arg!r}") from None
        return diag_solvable(weights)
    if name == "free-two-step":
        return free_two_step(as_int())
    raise UnknownFixtureError(name)
