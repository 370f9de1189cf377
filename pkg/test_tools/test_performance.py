# -*- coding: utf-8 -*-
"""
性能测试：分类表验证与构造的耗时上限
"""

import pytest

from performance_timer import PerformanceTimer, ToolkitBenchmark


@pytest.fixture
def bench():
    return ToolkitBenchmark()


def test_catalog_under_five_seconds(bench):
    assert bench.benchmark_catalog()
    assert len(bench.timer.results) == 35
    assert bench.timer.total_time < 5


def test_constructions_under_thirty_seconds(bench):
    assert bench.benchmark_constructions()
    assert bench.timer.step("taft-weak(3)").success
    assert bench.timer.total_time < 30


def test_small_search(bench):
    assert bench.benchmark_search() > 0
    assert bench.timer.get_summary()["total_steps"] == 1


def test_failed_step_recorded():
    timer = PerformanceTimer()
    timer.start_timing("失败")
    with pytest.raises(ValueError):
        with timer.time_step("boom"):
            raise ValueError("x")
    step = timer.step("boom")
    assert not step.success
    assert step.error_message == "x"
