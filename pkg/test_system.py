#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
系统功能测试脚本
通过命令行入口端到端验证 WeakHopf 的各项功能
可以直接运行，也可以由 pytest 收集
"""

import io
import json
import shutil
import tempfile
import time
from contextlib import redirect_stdout
from pathlib import Path
from typing import List, Tuple

import pytest

from weakhopf.cli import EXIT_FAILED, EXIT_INCONCLUSIVE, EXIT_INPUT, EXIT_OK, main
from weakhopf.constructions import sweedler5
from weakhopf.structfile import load_structure

IDENTITY_5 = json.dumps([[int(i == j) for j in range(5)] for i in range(5)])


class SystemTester:
    """系统测试器"""

    def __init__(self):
        self.test_dir = None
        self.config_path = None
        self.test_results = []

    def setup_test_environment(self):
        """设置测试环境"""
        self.test_dir = Path(tempfile.mkdtemp(prefix="weakhopf_test_"))

        test_config = {
            "logging": {
                "level": "INFO",
                "file": str(self.test_dir / "test.log")
            },
            "search": {
                "coefficients": [-1, 0, 1, 2],
                "budget": 1000000,
                "max_workers": 1,
                "max_dim": 3
            },
            "docs": {
                "output_dir": str(self.test_dir / "docs")
            }
        }
        self.config_path = self.test_dir / "test_config.json"
        with open(self.config_path, 'w', encoding='utf-8') as f:
            json.dump(test_config, f, ensure_ascii=False, indent=2)

    def cleanup_test_environment(self):
        """清理测试环境"""
        if self.test_dir and self.test_dir.exists():
            shutil.rmtree(self.test_dir, ignore_errors=True)

    def path(self, name: str) -> str:
        return str(self.test_dir / name)

    def run_cli(self, *argv: str) -> Tuple[int, str]:
        """运行一条命令，返回 (退出码, 标准输出)"""
        buffer = io.StringIO()
        with redirect_stdout(buffer):
            code = main(["--config", str(self.config_path), *argv])
        return code, buffer.getvalue()

    def run_json(self, *argv: str) -> Tuple[int, dict]:
        code, out = self.run_cli("--report", "json", *argv)
        return code, json.loads(out)

    def run_test(self, test_name: str, test_func):
        """运行单个测试"""
        print(f"\n运行测试: {test_name}")
        print("-" * 40)
        start_time = time.time()
        try:
            test_func()
            status, error = 'PASS', None
            print(f"✓ {test_name} - 通过 ({time.time() - start_time:.3f}s)")
        except Exception as e:
            status, error = 'FAIL', str(e)
            print(f"✗ {test_name} - 失败: {e} ({time.time() - start_time:.3f}s)")
        self.test_results.append({
            'name': test_name,
            'status': status,
            'duration': time.time() - start_time,
            'error': error
        })

    # ===============================================
    # 测试用例
    # ===============================================

    def test_verify(self):
        """验证命令与退出码"""
        assert self.run_cli("verify", "sweedler5", "--level", "weak-hopf")[0] == EXIT_OK
        assert self.run_cli("verify", "sweedler5", "--level", "strict-bialgebra")[0] == EXIT_FAILED
        code, report = self.run_json("verify", "catalog:3-weak-bialgebra-12", "--cross-check")
        assert code == EXIT_OK
        assert report["cross_check"]["consistent"]

    def test_input_errors(self):
        """输入错误统一返回 2"""
        assert self.run_cli("verify", self.path("missing.json"))[0] == EXIT_INPUT
        assert self.run_cli("verify", "sweedler5", "--level", "bogus")[0] == EXIT_INPUT
        assert self.run_cli("construct", "bogus")[0] == EXIT_INPUT
        assert self.run_cli("catalog", "show", "3-weak-bialgebra-99")[0] == EXIT_INPUT
        assert self.run_cli("aut", "check", "sweedler5", "--matrix", "[[1, 0], [0, 1]]")[0] == EXIT_INPUT
        assert self.run_cli()[0] == EXIT_INPUT
        assert main(["--config", self.path("missing.json"), "catalog", "list"]) == EXIT_INPUT

    def test_construct(self):
        """构造、写出、再读回验证"""
        out = self.path("sweedler5.json")
        assert self.run_cli("construct", "sweedler5", "--out", out)[0] == EXIT_OK
        assert load_structure(out) == sweedler5()
        assert self.run_cli("verify", out, "--level", "weak-hopf")[0] == EXIT_OK
        assert self.run_cli("construct", "max-algebra", "--n", "4")[0] == EXIT_OK
        assert self.run_cli("construct", "two-unit-b", "--input", "group:2", "--with-antipode")[0] == EXIT_OK
        code, listing = self.run_json("construct", "list")
        assert code == EXIT_OK
        assert "taft-weak" in listing["constructions"]

    def test_construct_counterexample(self):
        """零乘代数输入：输出不满足公理时返回 1"""
        code, payload = self.run_json("construct", "two-units", "--algebra", "null:1")
        assert code == EXIT_FAILED
        assert payload["error"] == "output-failed-verification"

    def test_catalog(self):
        """分类表列出、验证、区分、导出"""
        code, listing = self.run_json("catalog", "list", "--dim", "2", "--kind", "weak-bialgebra")
        assert code == EXIT_OK
        assert [e["key"] for e in listing["entries"]] == [f"2-weak-bialgebra-{i}" for i in (1, 2, 3)]
        assert self.run_cli("catalog", "verify")[0] == EXIT_OK
        assert self.run_cli("catalog", "separation", "--dim", "2")[0] == EXIT_OK
        out = self.path("entry.json")
        assert self.run_cli("catalog", "export", "2-weak-bialgebra-3", "--out", out)[0] == EXIT_OK
        assert self.run_cli("verify", out)[0] == EXIT_OK
        assert "分类表验证完成" in (self.test_dir / "test.log").read_text(encoding="utf-8")

    def test_claims(self):
        """二维自同构声明有被否定的条目"""
        code, payload = self.run_json("catalog", "claims", "--dim", "2")
        assert code == EXIT_FAILED
        statuses = {c["key"]: c["status"] for c in payload["claims"]}
        assert statuses["2-weak-bialgebra-3"] == "confirmed"
        assert statuses["2-weak-bialgebra-1"] == "refuted"

    def test_transport_and_aut(self):
        """基变换迁移与自同构"""
        code, payload = self.run_json("transport", "catalog:2-weak-bialgebra-3", "--matrix", "[[1, 0], [1, 1]]")
        assert code == EXIT_OK
        assert payload["structure"]["dim"] == 2
        assert self.run_cli("aut", "check", "sweedler5", "--matrix", IDENTITY_5)[0] == EXIT_OK
        code, group = self.run_json("aut", "group", "--matrices", "[[[0, 1], [1, 0]]]")
        assert code == EXIT_OK
        assert group["order"] == 2
        code, tangent = self.run_json("aut", "tangent", "catalog:2-weak-bialgebra-3")
        assert code == EXIT_OK
        assert tangent["tangent_dim"] + tangent["orbit_dim"] == 4

    def test_search(self):
        """网格搜索：估计、超维、写出结果"""
        code, est = self.run_json("search", "--dim", "2", "--algebra", "m2^2", "--estimate-only")
        assert code == EXIT_OK
        assert est["pre_prune"] == 4 ** 10
        assert self.run_cli("search", "--dim", "3", "--algebra", "m2^2")[0] == EXIT_INPUT
        out = self.path("search")
        code, _ = self.run_cli("search", "--dim", "2", "--algebra", "m2^2", "--coeffs=-1,0,1",
                               "--freeze", "f1=1,f2=1", "--out", out)
        assert code == EXIT_OK
        assert (Path(out) / "summary.json").exists()
        assert (Path(out) / "survivor-0001.json").exists()

    def test_iso(self):
        """同构见证与指纹比较"""
        assert self.run_cli("iso", "witness", "sweedler5", "sweedler5", "--matrix", IDENTITY_5)[0] == EXIT_OK
        code, payload = self.run_json("iso", "fingerprint-compare",
                                      "catalog:2-weak-bialgebra-1", "catalog:2-weak-bialgebra-3")
        assert code == EXIT_OK
        assert payload["separated_by"] == "eps_unit"
        assert self.run_cli("iso", "fingerprint-compare", "sweedler5", "sweedler5")[0] == EXIT_INCONCLUSIVE

    def test_docs(self):
        """文档生成"""
        code, payload = self.run_json("docs", "generate")
        assert code == EXIT_OK
        assert sorted(Path(p).name for p in payload["written"]) == ["CATALOG.md", "PAPER-ERRATA.md", "SWEEDLER.md"]

    def cases(self) -> List[Tuple[str, object]]:
        return [
            ("验证", self.test_verify),
            ("输入错误", self.test_input_errors),
            ("构造", self.test_construct),
            ("构造反例", self.test_construct_counterexample),
            ("分类表", self.test_catalog),
            ("自同构声明", self.test_claims),
            ("迁移与自同构", self.test_transport_and_aut),
            ("网格搜索", self.test_search),
            ("同构", self.test_iso),
            ("文档", self.test_docs),
        ]

    def run_all_tests(self):
        """运行所有测试"""
        print("=" * 60)
        print("WeakHopf 系统功能测试")
        print("=" * 60)
        try:
            self.setup_test_environment()
            for name, func in self.cases():
                self.run_test(name, func)
        finally:
            self.cleanup_test_environment()
        self.print_test_summary()

    def print_test_summary(self):
        """打印测试摘要"""
        print("\n" + "=" * 60)
        print("测试结果摘要")
        print("=" * 60)
        total_tests = len(self.test_results)
        passed_tests = len([r for r in self.test_results if r['status'] == 'PASS'])
        failed_tests = total_tests - passed_tests
        print(f"总测试数: {total_tests}")
        print(f"通过: {passed_tests}")
        print(f"失败: {failed_tests}")
        print(f"总耗时: {sum(r['duration'] for r in self.test_results):.3f} 秒")
        if failed_tests:
            print("\n失败的测试:")
            for result in self.test_results:
                if result['status'] == 'FAIL':
                    print(f"  ✗ {result['name']}: {result['error']}")
        print("=" * 60)
        print("所有测试通过" if not failed_tests else f"{failed_tests} 个测试失败")


# ===============================================
# pytest 入口
# ===============================================

@pytest.fixture
def tester():
    t = SystemTester()
    t.setup_test_environment()
    yield t
    t.cleanup_test_environment()


@pytest.mark.parametrize("case", [name for name, _ in SystemTester().cases()])
def test_cli(tester, case):
    dict(tester.cases())[case]()


def main_entry():
    tester = SystemTester()
    tester.run_all_tests()
    return 0 if all(r['status'] == 'PASS' for r in tester.test_results) else 1


if __name__ == "__main__":
    raise SystemExit(main_entry())
