#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
WeakHopf 性能计时器
测量分类表验证、构造与搜索各步骤的耗时
"""

import sys
import time
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from weakhopf import catalog, constructions  # noqa: E402
from weakhopf.axioms import Level, verify  # noqa: E402
from weakhopf.catalog import algebra_structure  # noqa: E402
from weakhopf.search import SearchSpec, enumerate_structures  # noqa: E402


@dataclass
class TimingResult:
    """计时结果"""
    step_name: str
    duration: float
    success: bool = True
    error_message: str = ""


class PerformanceTimer:
    """性能计时器"""

    def __init__(self):
        self.results: List[TimingResult] = []
        self.label = ""

    def start_timing(self, label: str = "总计时"):
        """开始一轮计时，清空之前的结果"""
        self.label = label
        self.results.clear()

    @contextmanager
    def time_step(self, step_name: str):
        """计时上下文管理器；异常照常抛出，但记录为失败步骤"""
        start = time.perf_counter()
        success = True
        error_msg = ""
        try:
            yield
        except Exception as e:
            success = False
            error_msg = str(e)
            raise
        finally:
            self.results.append(TimingResult(step_name, time.perf_counter() - start, success, error_msg))

    @property
    def total_time(self) -> float:
        return sum(r.duration for r in self.results)

    def step(self, step_name: str) -> Optional[TimingResult]:
        return next((r for r in self.results if r.step_name == step_name), None)

    def get_summary(self) -> Dict[str, Any]:
        """获取计时摘要"""
        if not self.results:
            return {}
        total_time = self.total_time
        return {
            "label": self.label,
            "total_steps": len(self.results),
            "successful_steps": sum(1 for r in self.results if r.success),
            "failed_steps": sum(1 for r in self.results if not r.success),
            "total_time": total_time,
            "step_details": [
                {
                    "step_name": r.step_name,
                    "duration": r.duration,
                    "percentage": (r.duration / total_time * 100) if total_time > 0 else 0,
                    "success": r.success,
                    "error_message": r.error_message
                }
                for r in self.results
            ]
        }

    def print_summary(self):
        """打印计时摘要"""
        summary = self.get_summary()
        if not summary:
            print("没有计时数据")
            return

        print("\n" + "=" * 60)
        print(f"性能分析报告: {summary['label']}")
        print("=" * 60)
        print(f"总步骤数: {summary['total_steps']}")
        print(f"成功步骤: {summary['successful_steps']}")
        print(f"失败步骤: {summary['failed_steps']}")
        print(f"总耗时: {summary['total_time']:.4f}秒")
        print("\n详细步骤分析:")
        print("-" * 60)
        for detail in summary["step_details"]:
            status = "✓" if detail["success"] else "✗"
            print(f"{status} {detail['step_name']:<32} {detail['duration']:.4f}秒 ({detail['percentage']:.1f}%)")
            if not detail["success"] and detail["error_message"]:
                print(f"    错误: {detail['error_message']}")
        print("-" * 60)


FROZEN_COUNIT = {"f1": Fraction(1), "f2": Fraction(1)}

# 构造基准：(步骤名, 构造, 验证级别)
CONSTRUCTION_CASES: List[tuple] = [
    ("two-units(max3)", lambda: constructions.adjoin_two_units(constructions.max_semilattice(3)),
     Level.WEAK_BIALGEBRA),
    ("chain(4, max2)", lambda: constructions.chain_construction(4, constructions.max_semilattice(2)),
     Level.WEAK_BIALGEBRA),
    *[(f"max-algebra({n})", (lambda n=n: constructions.max_algebra_whopf(n)), Level.WEAK_HOPF)
      for n in range(2, 7)],
    ("adjoin-unit(Z3)", lambda: constructions.adjoin_unit_to_bialgebra(constructions.group_bialgebra(3)),
     Level.WEAK_BIALGEBRA),
    ("adjoin-unit-hopf(sweedler4)", lambda: constructions.adjoin_unit_to_hopf(constructions.sweedler_hopf4()),
     Level.WEAK_HOPF),
    ("two-unit-a(trivial)", lambda: constructions.two_unit_variant(constructions.trivial_bialgebra(), "a"),
     Level.WEAK_BIALGEBRA),
    ("two-unit-b(Z2)", lambda: constructions.two_unit_variant(constructions.group_bialgebra(2), "b", True),
     Level.WEAK_HOPF),
    ("sweedler5", constructions.sweedler5, Level.WEAK_HOPF),
    ("taft-weak(2)", lambda: constructions.taft_weak_hopf(2), Level.WEAK_HOPF),
    ("taft-weak(3)", lambda: constructions.taft_weak_hopf(3), Level.WEAK_HOPF),
]


class ToolkitBenchmark:
    """工具包基准"""

    def __init__(self):
        self.timer = PerformanceTimer()

    def _run(self, step_name: str, action: Callable[[], bool]) -> bool:
        with self.timer.time_step(step_name):
            return action()

    def benchmark_catalog(self) -> bool:
        """逐条验证分类表"""
        self.timer.start_timing("分类表验证")
        ok = True
        for entry in catalog.entries():
            ok &= self._run(entry.key, lambda e=entry: verify(e.structure, e.kind.level).passed)
        return ok

    def benchmark_constructions(self) -> bool:
        """运行全部构造并在承诺的级别上复验"""
        self.timer.start_timing("构造")
        ok = True
        for name, build, level in CONSTRUCTION_CASES:
            ok &= self._run(name, lambda b=build, lv=level: verify(b(), lv).passed)
        return ok

    def benchmark_search(self, coefficients=(-1, 0, 1)) -> int:
        """二维 m2^2 网格搜索（余单位固定为 1），返回幸存者个数"""
        self.timer.start_timing("网格搜索")
        spec = SearchSpec.create(algebra_structure("m2^2"), coefficients, FROZEN_COUNIT, "m2^2")
        with self.timer.time_step("m2^2"):
            result = enumerate_structures(spec)
        return len(result.survivors)


def main():
    """运行全部基准并打印报告"""
    bench = ToolkitBenchmark()
    print(f"分类表验证: {'通过' if bench.benchmark_catalog() else '失败'}")
    bench.timer.print_summary()
    print(f"构造: {'通过' if bench.benchmark_constructions() else '失败'}")
    bench.timer.print_summary()
    print(f"网格搜索幸存者: {bench.benchmark_search()}")
    bench.timer.print_summary()


if __name__ == "__main__":
    main()
