# -*- coding: utf-8 -*-
"""
网格搜索测试
"""

import json
import os
from fractions import Fraction

import pytest

from weakhopf.catalog import algebra_structure
from weakhopf.constructions import semigroup_algebra
from weakhopf.errors import BudgetExceededError, ToolkitError
from weakhopf.search import (
    SearchSpec, enumerate_structures, estimate, parse_freeze, unknown_names, write_results
)

FROZEN_COUNIT = {"f1": Fraction(1), "f2": Fraction(1)}


@pytest.fixture(scope="module")
def small_spec():
    return SearchSpec.create(algebra_structure("m2^2"), [-1, 0, 1], FROZEN_COUNIT, "m2^2")


@pytest.fixture(scope="module")
def pruned(small_spec):
    return enumerate_structures(small_spec)


class TestSpec:
    """搜索规格"""

    def test_unknown_names(self):
        names = unknown_names(2)
        assert names[:2] == ["f1", "f2"]
        assert names[2] == "D1_1_1"
        assert names[-1] == "D2_2_2"
        assert len(names) == 10

    def test_parse_freeze(self):
        assert parse_freeze("f1=2, D1_2_1=-1/2") == {"f1": Fraction(2), "D1_2_1": Fraction(-1, 2)}
        with pytest.raises(ToolkitError):
            parse_freeze("f1")
        with pytest.raises(ToolkitError):
            parse_freeze("f1=x")

    def test_unknown_freeze_name(self):
        with pytest.raises(ToolkitError):
            SearchSpec.create(algebra_structure("m2^2"), freeze={"D3_1_1": Fraction(0)})

    def test_base_must_be_unital(self):
        no_unit = semigroup_algebra([[0, 1], [1, 0]]).as_structure()
        with pytest.raises(ToolkitError):
            SearchSpec.create(no_unit)

    def test_any_unital_base(self, sweedler):
        assert SearchSpec.create(sweedler).dim == 5

    def test_estimate(self, small_spec):
        est = estimate(small_spec)
        assert est.pre_prune == 3 ** 8
        assert 0 < est.after_counit < est.pre_prune

    def test_budget(self):
        spec = SearchSpec.create(algebra_structure("m2^2"))
        est = estimate(spec)
        assert est.pre_prune == 4 ** 10
        with pytest.raises(BudgetExceededError) as excinfo:
            enumerate_structures(spec, budget=10)
        assert excinfo.value.estimate == est.after_counit


class TestEnumeration:
    """枚举"""

    def test_finds_grouplike_bialgebra(self, pruned, wba2):
        assert wba2[1].structure in pruned.survivors

    def test_survivors_labelled_in_order(self, pruned):
        labels = [H.label for H in pruned.survivors]
        assert labels == [f"m2^2-survivor-{n}" for n in range(1, len(labels) + 1)]

    def test_pruning_matches_brute_force(self, small_spec, pruned):
        brute = enumerate_structures(small_spec, prune=False)
        assert brute.survivors == pruned.survivors
        assert brute.candidates_after_counit == 3 ** 8

    def test_workers_do_not_change_result(self, small_spec, pruned):
        parallel = enumerate_structures(small_spec, max_workers=4)
        assert parallel.survivors == pruned.survivors
        assert [c.key for c in parallel.classes] == [c.key for c in pruned.classes]

    def test_classes_match_catalog(self, pruned):
        assert sum(c.count for c in pruned.classes) == len(pruned.survivors)
        matched = {i for c in pruned.classes for i in c.matched}
        assert 1 in matched

    def test_full_grid_finds_every_catalog_class(self):
        spec = SearchSpec.create(algebra_structure("m2^2"), algebra="m2^2")
        result = enumerate_structures(spec)
        assert result.estimate.pre_prune == 4 ** 10
        assert len(result.survivors) == 4
        assert {i for c in result.classes for i in c.matched} == {1, 2, 3}
        assert all(len(c.matched) == 1 for c in result.classes)

    def test_full_grid_null_algebra(self):
        result = enumerate_structures(SearchSpec.create(algebra_structure("m1^2"), algebra="m1^2"))
        assert result.survivors == ()

    def test_no_counit_no_survivors(self):
        spec = SearchSpec.create(algebra_structure("m1^2"), [-1, 0, 1], FROZEN_COUNIT)
        assert enumerate_structures(spec).survivors == ()


class TestResults:
    """结果文件"""

    def test_write_results(self, tmp_path, pruned):
        paths = write_results(pruned, str(tmp_path))
        assert len(paths) == len(pruned.survivors) + 1
        assert os.path.basename(paths[0]) == "survivor-0001.json"
        with open(paths[-1], encoding="utf-8") as f:
            summary = json.load(f)
        assert summary["candidates_total"] == 3 ** 8
        assert summary["survivors"] == len(pruned.survivors)
        assert summary["freeze"] == {"f1": "1", "f2": "1"}
