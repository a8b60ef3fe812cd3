"""Lie algebras from structure constants: validation, series, quotients,
and the metabelian splitting."""

from fractions import Fraction

import pytest

from lralg.catalog import abelian, diag_solvable, filiform, free_two_step, heisenberg, r2
from lralg.errors import (
    DimensionMismatchError,
    InvalidLieAlgebraError,
    NotAnIdealError,
    NotTwoStepSolvableError,
)
from lralg.lie import (
    LieAlgebra,
    ad,
    bracket_of_subspaces,
    is_two_step_solvable,
    quotient,
    series,
    split_metabelian,
    subalgebra_generated,
    validate_lie,
)
from lralg.linalg import Matrix, Subspace, standard_basis

F = Fraction


def sl2() -> LieAlgebra:
    return LieAlgebra.from_brackets(3, {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}})


class TestConstruction:
    def test_from_brackets_antisymmetrizes(self):
        g = heisenberg()
        assert g.brackets[0][1][2] == 1
        assert g.brackets[1][0][2] == -1

    def test_bracket_evaluation(self):
        g = heisenberg()
        assert g.bracket((1, 0, 0), (0, 1, 0)) == (F(0), F(0), F(1))
        assert g.bracket((0, 1, 0), (1, 0, 0)) == (F(0), F(0), F(-1))
        assert g.bracket((1, 2, 3), (1, 2, 3)) == (F(0), F(0), F(0))

    def test_names(self):
        g = r2()
        assert g.name(0) == "x" and g.name(1) == "y"
        assert heisenberg().name(2) == "e3"

    def test_equality(self):
        assert heisenberg() == heisenberg()
        assert heisenberg() != abelian(3)

    def test_bad_index(self):
        with pytest.raises(DimensionMismatchError):
            LieAlgebra.from_brackets(2, {(0, 5): {0: 1}})


class TestValidation:
    def test_valid_algebras(self):
        for g in (heisenberg(), r2(), sl2(), filiform(6), free_two_step(3)):
            ok, violations = validate_lie(g)
            assert ok and not violations

    def test_antisymmetry_violation(self):
        # raw constructor does not antisymmetrize
        g = LieAlgebra([[[0, 0], [1, 0]], [[1, 0], [0, 0]]])
        ok, violations = validate_lie(g)
        assert not ok
        assert any(v.identity == "antisymmetry" for v in violations)

    def test_jacobi_violation(self):
        # [e1,e2]=e3, [e1,e3]=e1 breaks Jacobi on (1,2,3)
        g = LieAlgebra.from_brackets(3, {(0, 1): {2: 1}, (0, 2): {0: 1}})
        ok, violations = validate_lie(g)
        assert not ok
        labels = {v.identity for v in violations}
        assert labels == {"jacobi"}
        assert violations[0].indices == (0, 1, 2)

    def test_ensure_valid_raises(self):
        g = LieAlgebra.from_brackets(3, {(0, 1): {2: 1}, (0, 2): {0: 1}})
        with pytest.raises(InvalidLieAlgebraError):
            g.ensure_valid()

    def test_str_of_violation_is_one_based(self):
        g = LieAlgebra.from_brackets(3, {(0, 1): {2: 1}, (0, 2): {0: 1}})
        _, violations = validate_lie(g)
        assert str(violations[0]) == "jacobi at (1, 2, 3)"


class TestAdjoint:
    def test_ad_heisenberg(self):
        g = heisenberg()
        m = ad(g, (1, 0, 0))
        assert m == Matrix([[0, 0, 0], [0, 0, 0], [0, 1, 0]])

    def test_ad_is_bracket(self):
        g = sl2()
        x, y = (1, 2, 0), (0, 1, 1)
        assert ad(g, x).apply(y) == g.bracket(x, y)


class TestSeries:
    def test_heisenberg(self):
        rep = series(heisenberg())
        assert [s.dim for s in rep.lower_central] == [3, 1, 0]
        assert rep.g_infinity.dim == 0
        assert rep.nilpotent and rep.solvable
        assert rep.solvable_class == 2

    def test_r2(self):
        rep = series(r2())
        assert [s.dim for s in rep.lower_central] == [2, 1]
        assert rep.g_infinity.dim == 1
        assert not rep.nilpotent
        assert rep.solvable and rep.solvable_class == 2

    def test_sl2(self):
        rep = series(sl2())
        assert rep.g_infinity.dim == 3
        assert not rep.nilpotent and not rep.solvable
        assert rep.solvable_class is None

    def test_abelian(self):
        rep = series(abelian(4))
        assert [s.dim for s in rep.lower_central] == [4, 0]
        assert rep.nilpotent and rep.solvable_class == 1

    def test_filiform_class(self):
        rep = series(filiform(6))
        assert [s.dim for s in rep.lower_central] == [6, 4, 3, 2, 1, 0]
        assert rep.nilpotent

    def test_two_step_solvable(self):
        assert is_two_step_solvable(r2())
        assert is_two_step_solvable(heisenberg())
        assert is_two_step_solvable(filiform(8))
        assert is_two_step_solvable(abelian(2))
        assert not is_two_step_solvable(sl2())


class TestSubalgebraGenerated:
    def test_two_generators_fill_r2(self):
        g = r2()
        assert subalgebra_generated(g, [(1, 0), (0, 1)]).dim == 2

    def test_single_generator(self):
        g = heisenberg()
        assert subalgebra_generated(g, [(1, 0, 0)]).dim == 1

    def test_generators_of_filiform(self):
        g = filiform(7)
        e = standard_basis(7)
        assert subalgebra_generated(g, [e[0], e[1]]).dim == 7
        assert subalgebra_generated(g, [e[1], e[2]]).dim == 2


class TestBracketOfSubspaces:
    def test_derived_of_heisenberg(self):
        g = heisenberg()
        full = Subspace.full(3)
        d = bracket_of_subspaces(g, full, full)
        assert d.dim == 1
        assert d.contains((0, 0, 1))


class TestQuotient:
    def test_heisenberg_mod_center(self):
        g = heisenberg()
        center = Subspace.from_vectors(3, [(0, 0, 1)])
        q, proj, sect = quotient(g, center)
        assert q.dim == 2
        assert all(not any(v) for row in q.brackets for v in row)
        assert proj * sect == Matrix.identity(2)

    def test_not_an_ideal(self):
        g = heisenberg()
        line = Subspace.from_vectors(3, [(1, 0, 0)])
        with pytest.raises(NotAnIdealError):
            quotient(g, line)

    def test_projection_is_homomorphism(self):
        g = filiform(5)
        rep = series(g)
        ideal = rep.lower_central[-2]  # the last nonzero term, central
        q, proj, _ = quotient(g, ideal)
        for i in range(5):
            for j in range(5):
                lhs = proj.apply(g.brackets[i][j])
                rhs = q.bracket(proj.column(i), proj.column(j))
                assert lhs == rhs


class TestSplitMetabelian:
    def test_r2_frozen(self):
        sp = split_metabelian(r2())
        assert sp.g_infinity_basis == ((F(0), F(1)),)
        assert sp.complement_basis == ((F(1), F(0)),)
        assert sp.phi[0] == Matrix([[1]])
        assert sp.change_of_basis == Matrix([[0, 1], [1, 0]])

    def test_complement_correction(self):
        # [x, z] = z and [x, y] = z force the complement through y - z
        g = LieAlgebra.from_brackets(3, {(0, 2): {2: 1}, (0, 1): {2: 1}})
        sp = split_metabelian(g)
        assert sp.g_infinity_basis == ((F(0), F(0), F(1)),)
        assert sp.complement_basis == ((F(1), F(0), F(0)), (F(0), F(1), F(-1)))

    def test_complement_is_subalgebra(self):
        g = diag_solvable([1, 2, "1/3"])
        sp = split_metabelian(g)
        comp = Subspace.from_vectors(g.dim, sp.complement_basis)
        for a in sp.complement_basis:
            for b in sp.complement_basis:
                assert comp.contains(g.bracket(a, b))

    def test_phi_is_action_by_bracket(self):
        g = diag_solvable([1, 2])
        sp = split_metabelian(g)
        ginf = Subspace.from_vectors(g.dim, sp.g_infinity_basis)
        for a, w in enumerate(sp.complement_basis):
            m = sp.phi[a]
            for t, b in enumerate(sp.g_infinity_basis):
                expect = ginf.coordinates(g.bracket(w, b))
                assert m.column(t) == expect

    def test_nilpotent_gives_trivial_split(self):
        sp = split_metabelian(filiform(5))
        assert sp.g_infinity_basis == ()
        assert len(sp.complement_basis) == 5
        assert sp.change_of_basis == Matrix.identity(5)

    def test_rejects_non_metabelian(self):
        with pytest.raises(NotTwoStepSolvableError):
            split_metabelian(sl2())
