# -*- coding: utf-8 -*-
"""
不变量指纹与区分测试
"""

import json

from weakhopf import catalog
from weakhopf.catalog import Kind
from weakhopf.constructions import group_bialgebra, taft_weak_hopf
from weakhopf.fingerprint import COMPONENTS, first_difference, fingerprint, separate

WBA = Kind.WEAK_BIALGEBRA


class TestFingerprint:
    """指纹分量"""

    def test_components_in_order(self, sweedler):
        fp = fingerprint(sweedler)
        assert [name for name, _ in fp.values()] == [name for name, _ in COMPONENTS]

    def test_sweedler_values(self, sweedler):
        fp = fingerprint(sweedler)
        assert fp.eps_unit == 2
        assert not fp.commutative
        assert not fp.cocommutative
        assert fp.grouplikes is None

    def test_grid_enables_grouplikes(self, sweedler):
        fp = fingerprint(sweedler, grid=[0, 1])
        assert fp.grouplikes is not None

    def test_group_algebra(self):
        fp = fingerprint(group_bialgebra(3))
        assert fp.grouplikes == (3, (1, 1, 1))
        assert fp.delta_unit_rank == 1

    def test_taft_matches_sweedler(self, sweedler):
        assert fingerprint(taft_weak_hopf(2)) == fingerprint(sweedler)

    def test_key_and_dict(self, wba2):
        fp = fingerprint(wba2[3].structure)
        assert fp.key().startswith("eps_unit=2|")
        json.dumps(fp.to_dict())


class TestSeparation:
    """两两区分"""

    def test_dim_two_separated(self):
        seps = catalog.pairwise_separation(2, WBA)
        assert len(seps) == 3
        by_pair = {(s.first, s.second): s.component for s in seps}
        assert by_pair[("2-weak-bialgebra-1", "2-weak-bialgebra-2")] == "trace_m_delta"
        assert by_pair[("2-weak-bialgebra-1", "2-weak-bialgebra-3")] == "eps_unit"
        assert by_pair[("2-weak-bialgebra-2", "2-weak-bialgebra-3")] == "eps_unit"

    def test_trace_values(self, wba2):
        assert fingerprint(wba2[1].structure).trace_m_delta == 2
        assert fingerprint(wba2[2].structure).trace_m_delta == 1

    def test_duplicate_is_inconclusive(self, wba3):
        fp = fingerprint(wba3[12].structure)
        (sep,) = separate([("a", fp), ("b", fp)])
        assert not sep.separated
        assert sep.to_dict()["separated_by"] == "inconclusive"

    def test_dim_three_matrix_complete(self):
        seps = catalog.pairwise_separation(3, WBA)
        assert len(seps) == 20 * 19 // 2
        by_pair = {(s.first, s.second): s.to_dict()["separated_by"] for s in seps}
        # ε(1) 分别为 1, 2, 3
        assert by_pair[("3-weak-bialgebra-2", "3-weak-bialgebra-8")] == "eps_unit"
        assert by_pair[("3-weak-bialgebra-8", "3-weak-bialgebra-10")] == "eps_unit"
        # ε(1) 相同，tr(m∘Δ) 分别为 3, 2, 2
        assert by_pair[("3-weak-bialgebra-2", "3-weak-bialgebra-3")] == "trace_m_delta"
        assert by_pair[("3-weak-bialgebra-2", "3-weak-bialgebra-7")] == "trace_m_delta"

    def test_match_catalog(self, wba2):
        for index, entry in wba2.items():
            assert catalog.match_fingerprint(fingerprint(entry.structure), 2) == [index]

    def test_first_difference_none_when_equal(self, sweedler):
        fp = fingerprint(sweedler)
        assert first_difference(fp, fp) is None
