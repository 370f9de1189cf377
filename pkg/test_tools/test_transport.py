# -*- coding: utf-8 -*-
"""
基变换迁移、同构见证与自同构群测试
"""

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from weakhopf import catalog
from weakhopf.axioms import Level, verify
from weakhopf.catalog import Kind
from weakhopf.constructions import trivial_bialgebra
from weakhopf.errors import DimensionError, GroupBoundError, SingularMatrixError, ToolkitError
from weakhopf.exactmath import Mat, Vec
from weakhopf.fingerprint import fingerprint
from weakhopf.transport import (
    BasisChange, ParamMatrix, check_parametric_automorphism, compose, group_closure,
    is_automorphism, is_morphism_witness, normalize_unit, permutation_change, sample_values,
    stabilizer_tangent_dim, transport
)

WBA = Kind.WEAK_BIALGEBRA
ORDER2 = Mat.of([[1, 1], [0, -1]])
GEN_A = Mat.of([[1, 0, 0], [0, 1, 1], [0, 0, -1]])
GEN_B = Mat.of([[1, 1, 0], [0, 0, 1], [0, -1, -1]])
SCALING = ParamMatrix((("1", "0", "0"), ("0", "1", "0"), ("0", "0", "alpha")), ("alpha",), ("alpha",))

matrices3 = st.lists(st.lists(st.integers(-2, 2), min_size=3, max_size=3),
                     min_size=3, max_size=3).map(Mat.of)

# 分类表三维弱双代数中自同构群切空间维数非零的条目
TANGENT_DIM3 = {12: 1, 14: 1, 15: 1, 17: 1, 19: 1}


def rational_matrices(n: int):
    entries = st.fractions(min_value=-2, max_value=2, max_denominator=3)
    return st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n).map(Mat.of)


class TestBasisChange:
    """基变换"""

    def test_singular_rejected(self):
        with pytest.raises(SingularMatrixError):
            BasisChange(Mat.of([[1, 1], [1, 1]]))

    def test_unknown_convention(self):
        with pytest.raises(ToolkitError):
            BasisChange(Mat.identity(2), "diagonal")

    def test_permutation_images(self):
        g = permutation_change((2, 3, 1))
        assert g.columns.column(0) == Vec.basis(3, 2)

    def test_bad_permutation(self):
        with pytest.raises(ToolkitError):
            permutation_change((1, 1, 2))

    def test_dimension_mismatch(self, sweedler):
        with pytest.raises(DimensionError):
            transport(sweedler, BasisChange(Mat.identity(2)))

    def test_rows_convention_is_transpose(self, wba3):
        H = wba3[12].structure
        m = Mat.of([[1, 0, 0], [1, 1, 0], [0, 2, 1]])
        assert transport(H, BasisChange(m, "rows")) == transport(H, BasisChange(m.transpose()))


class TestTransport:
    """迁移保持公理与指纹"""

    def test_identity(self, sweedler):
        assert transport(sweedler, BasisChange(Mat.identity(5))) == sweedler

    @pytest.mark.parametrize("entry", catalog.entries(), ids=lambda e: e.key)
    @settings(max_examples=10)
    @given(data=st.data())
    def test_equivariance(self, entry, data):
        m = data.draw(rational_matrices(entry.dim).filter(lambda m: m.is_invertible()))
        H = entry.structure
        moved = transport(H, BasisChange(m))
        levels = [entry.kind.level]
        if entry.kind is not Kind.ALGEBRA:
            levels.append(Level.STRICT_BIALGEBRA)
        for level in levels:
            before = [(s.axiom, s.passed) for s in verify(H, level).statuses]
            after = [(s.axiom, s.passed) for s in verify(moved, level).statuses]
            assert before == after
        assert verify(moved, entry.kind.level).passed
        if entry.kind is not Kind.ALGEBRA:
            assert fingerprint(moved) == fingerprint(H)

    @given(matrices3, matrices3)
    def test_compose(self, wba3, a, b):
        assume(a.is_invertible() and b.is_invertible())
        H = wba3[10].structure
        g, h = BasisChange(a), BasisChange(b)
        assert transport(transport(H, h), g) == transport(H, compose(g, h))

    @given(matrices3)
    def test_inverse_round_trip(self, wba3, m):
        assume(m.is_invertible())
        H = wba3[5].structure
        there = transport(H, BasisChange(m))
        assert transport(there, BasisChange(m.inverse())) == H

    def test_witness_matches_transport(self, wba3):
        H = wba3[12].structure
        g = BasisChange(Mat.of([[1, 2, 0], [0, 1, 0], [0, 0, 3]]))
        assert is_morphism_witness(H, transport(H, g), g).passed
        failed = is_morphism_witness(H, wba3[13].structure, g)
        assert not failed.passed
        assert "≠" in failed.describe()

    def test_normalize_unit(self, wba3):
        H = wba3[7].structure
        moved = transport(H, permutation_change((3, 1, 2)))
        assert moved.alg.unit != Vec.basis(3, 1)
        normalized, g = normalize_unit(moved)
        assert normalized.alg.unit == Vec.basis(3, 1)
        assert is_morphism_witness(moved, normalized, g).passed


class TestAutomorphisms:
    """自同构与群闭包"""

    def test_order_two_under_columns(self, wba2):
        H = wba2[3].structure
        assert is_automorphism(H, BasisChange(ORDER2, "columns")).passed
        assert not is_automorphism(H, BasisChange(ORDER2, "rows")).passed

    @pytest.mark.parametrize("index", [1, 2])
    def test_order_two_refuted(self, wba2, index):
        H = wba2[index].structure
        for convention in ("columns", "rows"):
            assert not is_automorphism(H, BasisChange(ORDER2, convention)).passed

    def test_group_orders(self):
        assert len(group_closure([ORDER2])) == 2
        assert len(group_closure([GEN_A, GEN_B])) == 6

    def test_group_bound(self):
        with pytest.raises(GroupBoundError):
            group_closure([Mat.of([[2]])], 10)

    def test_group_needs_invertible(self):
        with pytest.raises(SingularMatrixError):
            group_closure([Mat.of([[0]])])

    def test_generators_of_entry_ten(self, wba3):
        H = wba3[10].structure
        for m in (GEN_A, GEN_B):
            assert is_automorphism(H, BasisChange(m, "columns")).passed

    def test_tangent_dimensions(self, wba2):
        assert stabilizer_tangent_dim(wba2[3].structure) == 0
        assert stabilizer_tangent_dim(trivial_bialgebra()) == 0

    @pytest.mark.parametrize("index", range(1, 21))
    def test_tangent_dimensions_dim_three(self, wba3, index):
        assert stabilizer_tangent_dim(wba3[index].structure) == TANGENT_DIM3.get(index, 0)

    def test_tangent_invariant_under_transport(self, wba3):
        H = wba3[12].structure
        g = BasisChange(Mat.of([[1, 1, 0], [0, 1, 0], [0, 0, 2]]))
        assert stabilizer_tangent_dim(transport(H, g)) == stabilizer_tangent_dim(H)


class TestParametric:
    """参数族"""

    def test_scaling_holds_for_entry_twelve(self, wba3):
        result = check_parametric_automorphism(wba3[12].structure, SCALING)
        assert result.status == "pass"
        # alpha 取 0, 1, 2, -1, 3，其中 alpha = 0 不容许
        assert result.points_evaluated == 5
        assert result.points_checked == 4
        assert result.admissible_passed == 4

    @pytest.mark.parametrize("index", [13, 16])
    def test_scaling_fails(self, wba3, index):
        result = check_parametric_automorphism(wba3[index].structure, SCALING)
        assert result.status == "fail"
        assert result.witness is not None
        assert result.witness_point is not None

    def test_constant_family(self, wba2):
        P = ParamMatrix((("1", "1"), ("0", "-1")))
        assert check_parametric_automorphism(wba2[3].structure, P).status == "pass"

    def test_irrational_family_inconclusive(self, wba3):
        P = ParamMatrix((("1", "0", "0"), ("0", "1", "0"), ("0", "0", "sqrt(t)")), ("t",), ("t",))
        result = check_parametric_automorphism(wba3[12].structure, P)
        assert result.status == "inconclusive"

    def test_sample_values_extend_past_pool(self):
        values = sample_values(29)
        assert len(set(values)) == 29
        assert values[:3] == [Fraction(0), Fraction(1), Fraction(2)]

    def test_high_degree_family_uses_enough_points(self, wba3):
        # 在前 14 个样本点上 alpha 都等于 1，更大的参数值才暴露失败
        vanishing = "*".join(f"(t - ({v}))" for v in sample_values(14))
        P = ParamMatrix((("1", "0", "0"), ("0", "1", "0"), ("0", "0", f"1 + {vanishing}")), ("t",))
        assert P.degree_bound() == 28
        result = check_parametric_automorphism(wba3[16].structure, P)
        assert result.status == "fail"
        assert result.points_evaluated > 14
        assert Fraction(result.witness_point["t"]) not in sample_values(14)

    def test_inadmissible_points_not_counted(self, wba3):
        P = ParamMatrix((("1", "0", "0"), ("0", "1", "0"), ("0", "0", "alpha**2 - alpha")),
                        ("alpha",), ("alpha",))
        result = check_parametric_automorphism(wba3[12].structure, P)
        assert result.status == "pass"
        # alpha = 0 违反约束，alpha = 1 时矩阵奇异
        assert result.points_evaluated == 5
        assert result.points_checked == 3

    def test_evaluate(self):
        m = SCALING.evaluate({"alpha": 3})
        assert m == Mat.of([[1, 0, 0], [0, 1, 0], [0, 0, 3]])
        assert not SCALING.admissible({"alpha": 0})
