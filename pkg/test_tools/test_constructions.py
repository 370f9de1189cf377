# -*- coding: utf-8 -*-
"""
构造测试：前置条件、输出验证与已知结构的对应关系
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weakhopf import catalog
from weakhopf.axioms import AxiomId, Level, verify
from weakhopf.catalog import Kind
from weakhopf.constructions import (
    RawAlgebra, adjoin_two_units, adjoin_unit_to_bialgebra, adjoin_unit_to_hopf,
    chain_construction, cyclic_group_algebra, group_bialgebra, left_zero_band, max_algebra_whopf,
    max_semilattice, null_algebra, orthogonal_idempotents_example, orthogonal_idempotents_whopf,
    rectangular_band, right_zero_band, semigroup_algebra, sweedler5, sweedler_hopf4, taft_hopf,
    taft_weak_hopf, trivial_bialgebra, try_identity_antipode, two_unit_variant, weak_from_idempotent
)
from weakhopf.errors import ConstructionError
from weakhopf.exactmath import ONE, Scalar, Vec
from weakhopf.structure import counit, counit_on_unit, multiply
from weakhopf.transport import is_morphism_witness, permutation_change

WBA = Kind.WEAK_BIALGEBRA

semigroups = st.one_of(
    st.integers(1, 3).map(max_semilattice),
    st.integers(1, 3).map(left_zero_band),
    st.integers(1, 3).map(right_zero_band),
    st.tuples(st.integers(1, 2), st.integers(1, 2)).map(lambda pq: rectangular_band(*pq)),
    st.integers(1, 3).map(cyclic_group_algebra),
)


def _code(excinfo) -> str:
    return excinfo.value.code


class TestTwoUnits:
    """添加两个单位"""

    def test_empty_input_is_catalog_entry(self):
        assert adjoin_two_units() == catalog.get(2, WBA, 3).structure

    def test_one_point_semilattice_is_catalog_entry(self):
        assert adjoin_two_units(max_semilattice(1)) == catalog.get(3, WBA, 8).structure

    def test_counit_values(self):
        H = adjoin_two_units(max_semilattice(2))
        assert counit_on_unit(H) == 2
        assert [counit(H, Vec.basis(4, i)) for i in range(2, 5)] == [1, 1, 1]

    @given(semigroups)
    def test_any_semigroup(self, A):
        H = adjoin_two_units(A)
        assert H.dim == A.dim + 2
        assert verify(H, Level.WEAK_BIALGEBRA).passed
        failed = set(verify(H, Level.STRICT_BIALGEBRA).failed_axioms())
        assert {AxiomId.STRICT_DELTA_UNIT, AxiomId.STRICT_EPS_MULT} <= failed

    def test_null_algebra_rejected(self):
        with pytest.raises(ConstructionError) as excinfo:
            adjoin_two_units(null_algebra(1))
        assert _code(excinfo) == "not-basis-multiplicative"

    def test_null_algebra_breaks_weak_counit(self):
        H = adjoin_two_units(null_algebra(1), strict=False)
        failed = set(verify(H, Level.WEAK_BIALGEBRA).failed_axioms())
        assert failed & {AxiomId.WEAK_COUNIT_A, AxiomId.WEAK_COUNIT_B}

    def test_non_associative_rejected(self):
        # (e0 e0) e0 = e1，e0 (e0 e0) = e0
        A = semigroup_algebra([[1, 0], [1, 1]])
        with pytest.raises(ConstructionError) as excinfo:
            adjoin_two_units(A)
        assert _code(excinfo) == "not-associative"


class TestIdempotent:
    """幂等相对单位"""

    @staticmethod
    def _max3() -> RawAlgebra:
        return RawAlgebra(3, max_semilattice(3).mult, {0: ONE})

    def test_matches_catalog(self):
        H = weak_from_idempotent(self._max3(), {1: ONE})
        assert H == catalog.get(3, WBA, 8).structure

    @pytest.mark.parametrize("e, code", [
        ({0: ONE}, "not-in-complement"),
        ({1: Scalar.of(2)}, "not-idempotent"),
        ({2: ONE}, "not-relative-unit"),
    ])
    def test_bad_idempotent(self, e, code):
        with pytest.raises(ConstructionError) as excinfo:
            weak_from_idempotent(self._max3(), e)
        assert _code(excinfo) == code

    def test_complement_not_subalgebra(self):
        with pytest.raises(ConstructionError) as excinfo:
            weak_from_idempotent(cyclic_group_algebra(2), {1: ONE})
        assert _code(excinfo) == "not-subalgebra"

    def test_unit_must_be_basis(self):
        with pytest.raises(ConstructionError) as excinfo:
            weak_from_idempotent(null_algebra(2), {1: ONE})
        assert _code(excinfo) == "unit-not-basis"

    def test_orthogonal_idempotents(self):
        assert orthogonal_idempotents_example(3, 2).dim == 3
        with pytest.raises(ConstructionError) as excinfo:
            orthogonal_idempotents_example(4, 2)
        assert _code(excinfo) == "output-failed-verification"
        assert not excinfo.value.report.passed

    def test_unital_input_checked(self):
        with pytest.raises(ConstructionError) as excinfo:
            RawAlgebra(2, {}, {0: ONE})
        assert _code(excinfo) == "not-unital"


class TestChain:
    """链式构造与 max 代数"""

    def test_small_cases_are_catalog_entries(self):
        assert chain_construction(2) == catalog.get(2, WBA, 3).structure
        assert chain_construction(3) == catalog.get(3, WBA, 10).structure

    @given(st.integers(1, 4), st.integers(0, 2))
    def test_counit_descends(self, p, k):
        H = chain_construction(p, max_semilattice(k) if k else None)
        expected = [p - i for i in range(p)] + [1] * k
        assert [counit(H, Vec.basis(H.dim, i + 1)) for i in range(H.dim)] == expected

    def test_chain_rejects_zero(self):
        with pytest.raises(ConstructionError) as excinfo:
            chain_construction(0)
        assert _code(excinfo) == "dimension-too-small"

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_max_algebra(self, n):
        H = max_algebra_whopf(n)
        assert H.dim == n
        assert verify(H, Level.WEAK_HOPF).passed

    def test_max_algebra_three_is_catalog_entry(self):
        assert max_algebra_whopf(3) == catalog.get(3, Kind.WEAK_HOPF, 3).structure

    def test_max_algebra_rejects_one(self):
        with pytest.raises(ConstructionError):
            max_algebra_whopf(1)

    def test_orthogonal_basis_form(self):
        H = orthogonal_idempotents_whopf(3)
        assert verify(H, Level.WEAK_HOPF).passed


class TestAdjoinUnit:
    """从双代数添加单位元"""

    def test_bialgebra_dimension(self):
        assert adjoin_unit_to_bialgebra(group_bialgebra(3)).dim == 4

    def test_sweedler_four_gives_sweedler_five(self):
        assert adjoin_unit_to_hopf(sweedler_hopf4()) == sweedler5()

    def test_weak_input_rejected(self):
        with pytest.raises(ConstructionError) as excinfo:
            adjoin_unit_to_bialgebra(sweedler5())
        assert _code(excinfo) == "not-strict-bialgebra"

    def test_hopf_needs_antipode(self):
        with pytest.raises(ConstructionError) as excinfo:
            adjoin_unit_to_hopf(group_bialgebra(2, with_antipode=False))
        assert _code(excinfo) == "not-hopf"

    @given(st.integers(1, 4))
    def test_group_inputs(self, k):
        H = adjoin_unit_to_hopf(group_bialgebra(k))
        assert H.dim == k + 1
        assert counit_on_unit(H) == 2


class TestTwoUnitVariants:
    """两个单位的变体"""

    def test_variant_b_of_trivial_is_catalog_entry(self):
        assert two_unit_variant(trivial_bialgebra(), "b") == catalog.get(3, WBA, 10).structure

    def test_variant_a_of_trivial(self):
        H = two_unit_variant(trivial_bialgebra(), "a")
        assert H.dim == 3
        assert counit(H, Vec.basis(3, 2)) == 2

    def test_variant_b_with_antipode(self):
        H = two_unit_variant(group_bialgebra(2), "b", with_antipode=True)
        assert verify(H, Level.WEAK_HOPF).passed

    def test_variant_a_antipode_fails(self):
        with pytest.raises(ConstructionError) as excinfo:
            two_unit_variant(trivial_bialgebra(), "a", with_antipode=True)
        assert _code(excinfo) == "output-failed-verification"
        failed = set(excinfo.value.report.failed_axioms())
        assert failed & {AxiomId.ANTIPODE_1, AxiomId.ANTIPODE_2}

    def test_unknown_variant(self):
        with pytest.raises(ConstructionError) as excinfo:
            two_unit_variant(trivial_bialgebra(), "c")
        assert _code(excinfo) == "unknown-variant"


class TestExamples:
    """Sweedler 与 Taft"""

    def test_identity_antipode(self):
        assert try_identity_antipode(adjoin_two_units()).passed
        assert not try_identity_antipode(sweedler5()).passed

    def test_taft_two_is_sweedler(self):
        H = taft_weak_hopf(2)
        result = is_morphism_witness(H, sweedler5(), permutation_change((1, 2, 4, 3, 5)))
        assert result.passed

    def test_taft_three(self):
        H = taft_weak_hopf(3)
        assert H.dim == 10
        assert H.conductor == 3
        assert verify(H, Level.WEAK_HOPF).passed

    def test_taft_nilpotent(self):
        H = taft_hopf(3)
        x = Vec.basis(9, 4)
        x2 = multiply(H, x, x)
        assert not x2.is_zero()
        assert multiply(H, x2, x).is_zero()

    def test_taft_rejects_small(self):
        with pytest.raises(ConstructionError):
            taft_hopf(1)

    def test_group_bialgebra_one_is_trivial(self):
        assert group_bialgebra(1) == trivial_bialgebra()
