# -*- coding: utf-8 -*-
"""
固定乘法下的网格搜索
未知量为余单位 f_k 与余乘常数 D_k^{ij}，取值于有限有理系数集合；
先按余单位线性约束逐行剪枝，再依次检查余结合、相容性和弱公理
"""

import itertools
import json
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from .axioms import AxiomId, Level, axiom_passes, verify
from .catalog import Kind, match_fingerprint
from .errors import BudgetExceededError, ToolkitError
from .exactmath import Scalar
from .fingerprint import Fingerprint, fingerprint
from .structfile import save_structure
from .structure import WeakStructure

logger = logging.getLogger(__name__)

DEFAULT_COEFFICIENTS = (Fraction(-1), Fraction(0), Fraction(1), Fraction(2))

# 剪枝顺序：代价低、淘汰率高的公理在前
PRUNE_ORDER = (
    AxiomId.COUNIT, AxiomId.COASSOC, AxiomId.COMPAT,
    AxiomId.WEAK_UNIT_A, AxiomId.WEAK_UNIT_B, AxiomId.WEAK_COUNIT_A, AxiomId.WEAK_COUNIT_B,
)

Matrix = Tuple[Tuple[Fraction, ...], ...]


def unknown_names(n: int) -> List[str]:
    """f1..fn，然后 D{k}_{i}_{j}，按 (k, i, j) 字典序"""
    names = [f"f{k + 1}" for k in range(n)]
    names += [f"D{k + 1}_{i + 1}_{j + 1}" for k in range(n) for i in range(n) for j in range(n)]
    return names


def parse_freeze(text: str) -> Dict[str, Fraction]:
    """解析 "f1=2,D1_2_1=0" """
    out: Dict[str, Fraction] = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        name, sep, value = part.partition("=")
        if not sep:
            raise ToolkitError(f"固定项格式应为 名称=值: {part!r}")
        try:
            out[name.strip()] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ToolkitError(f"固定项的值不是有理数: {part!r}")
    return out


@dataclass(frozen=True)
class SearchSpec:
    base: WeakStructure
    coefficients: Tuple[Fraction, ...] = DEFAULT_COEFFICIENTS
    freeze: Tuple[Tuple[str, Fraction], ...] = ()
    algebra: str = ""

    def __post_init__(self):
        if not self.coefficients:
            raise ToolkitError("系数集合不能为空")
        names = set(unknown_names(self.dim))
        for name, _ in self.freeze:
            if name not in names:
                raise ToolkitError(f"未知的未知量 {name}，例如 f1 或 D1_2_1")
        report = verify(self.base, Level.ALGEBRA)
        if not report.passed:
            raise ToolkitError(f"基代数 {self.base.label} 不是结合单位代数")

    @classmethod
    def create(cls, base: WeakStructure, coefficients: Optional[Iterable] = None,
               freeze: Optional[Dict[str, Fraction]] = None, algebra: str = "") -> 'SearchSpec':
        coeffs = DEFAULT_COEFFICIENTS if coefficients is None else tuple(
            sorted({Fraction(c) for c in coefficients}))
        return cls(base, coeffs, tuple(sorted((freeze or {}).items())), algebra or base.label)

    @property
    def dim(self) -> int:
        return self.base.dim

    def domain(self, name: str) -> Tuple[Fraction, ...]:
        frozen = dict(self.freeze)
        return (frozen[name],) if name in frozen else self.coefficients

    def free_unknowns(self) -> int:
        n = self.dim
        return n ** 3 + n - len(self.freeze)


@dataclass(frozen=True)
class SearchEstimate:
    pre_prune: int
    after_counit: int

    def over_budget(self, budget: int) -> bool:
        return self.after_counit > budget

    def to_dict(self) -> Dict[str, Any]:
        return {"pre_prune": self.pre_prune, "after_counit": self.after_counit}


# ===============================================
# 余单位剪枝
# ===============================================

def _counit_vectors(spec: SearchSpec) -> List[Tuple[Fraction, ...]]:
    return list(itertools.product(*(spec.domain(f"f{k + 1}") for k in range(spec.dim))))


def _row_options(spec: SearchSpec, f: Sequence[Fraction], k: int, i: int) -> List[Tuple[Fraction, ...]]:
    # (id⊗ε)Δ(e_k) = e_k：Σ_j D_k^{ij} f_j = δ_ik
    n = spec.dim
    domains = [spec.domain(f"D{k + 1}_{i + 1}_{j + 1}") for j in range(n)]
    target = 1 if i == k else 0
    return [row for row in itertools.product(*domains)
            if sum(a * b for a, b in zip(row, f)) == target]


def _counit_matrices(spec: SearchSpec, f: Sequence[Fraction], k: int) -> List[Matrix]:
    """满足两侧余单位方程的全部 D_k 矩阵"""
    n = spec.dim
    # (ε⊗id)Δ(e_k) = e_k：Σ_i f_i D_k^{ij} = δ_jk，按行累加列和
    partial: Dict[Tuple[Fraction, ...], List[Matrix]] = {(Fraction(0),) * n: [()]}
    for i in range(n):
        nxt: Dict[Tuple[Fraction, ...], List[Matrix]] = {}
        for row in _row_options(spec, f, k, i):
            for sums, mats in partial.items():
                key = tuple(s + f[i] * a for s, a in zip(sums, row))
                nxt.setdefault(key, []).extend(m + (row,) for m in mats)
        partial = nxt
    target = tuple(Fraction(int(j == k)) for j in range(n))
    return sorted(partial.get(target, []))


def _counit_count(spec: SearchSpec, f: Sequence[Fraction], k: int) -> int:
    n = spec.dim
    partial: Dict[Tuple[Fraction, ...], int] = {(Fraction(0),) * n: 1}
    for i in range(n):
        nxt: Dict[Tuple[Fraction, ...], int] = {}
        for row in _row_options(spec, f, k, i):
            for sums, count in partial.items():
                key = tuple(s + f[i] * a for s, a in zip(sums, row))
                nxt[key] = nxt.get(key, 0) + count
        partial = nxt
    return partial.get(tuple(Fraction(int(j == k)) for j in range(n)), 0)


def estimate(spec: SearchSpec) -> SearchEstimate:
    """剪枝前候选数与余单位剪枝后的精确候选数"""
    pre = len(spec.coefficients) ** spec.free_unknowns()
    after = 0
    for f in _counit_vectors(spec):
        product = 1
        for k in range(spec.dim):
            product *= _counit_count(spec, f, k)
            if product == 0:
                break
        after += product
    return SearchEstimate(pre, after)


# ===============================================
# 枚举
# ===============================================

def _assemble(spec: SearchSpec, f: Sequence[Fraction], mats: Sequence[Matrix], label: str) -> WeakStructure:
    n = spec.dim
    comult = {k: {(i, j): Scalar.of(mats[k][i][j]) for i in range(n) for j in range(n) if mats[k][i][j]}
              for k in range(n)}
    counit = {k: Scalar.of(f[k]) for k in range(n)}
    return WeakStructure.from_sparse(n, spec.base.mult_table, spec.base.unit_elem, comult, counit,
                                     label=label)


def _assignment(f: Sequence[Fraction], mats: Sequence[Matrix]) -> Tuple[Fraction, ...]:
    return tuple(f) + tuple(v for m in mats for row in m for v in row)


def _passes(H: WeakStructure) -> bool:
    return all(axiom_passes(H, ax) for ax in PRUNE_ORDER)


def _search_partition(spec: SearchSpec, f: Tuple[Fraction, ...]) -> Tuple[int, List[Tuple[Tuple, WeakStructure]]]:
    per_k = [_counit_matrices(spec, f, k) for k in range(spec.dim)]
    admissible = 1
    for options in per_k:
        admissible *= len(options)
    found = []
    if admissible:
        for mats in itertools.product(*per_k):
            H = _assemble(spec, f, mats, "")
            if _passes(H):
                found.append((_assignment(f, mats), H))
    logger.debug(f"余单位 {[str(v) for v in f]}: {admissible} 个候选，{len(found)} 个通过")
    return admissible, found


def _brute_force(spec: SearchSpec) -> Tuple[int, List[Tuple[Tuple, WeakStructure]]]:
    n = spec.dim
    names = unknown_names(n)
    found = []
    total = 0
    for values in itertools.product(*(spec.domain(name) for name in names)):
        total += 1
        f = values[:n]
        flat = values[n:]
        mats = tuple(tuple(tuple(flat[(k * n + i) * n: (k * n + i) * n + n]) for i in range(n))
                     for k in range(n))
        H = _assemble(spec, f, mats, "")
        if _passes(H):
            found.append((tuple(values), H))
    return total, found


@dataclass(frozen=True)
class SearchClass:
    key: str
    fingerprint: Fingerprint
    count: int
    matched: Tuple[int, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "fingerprint_key": self.key,
            "fingerprint": self.fingerprint.to_dict(),
            "count": self.count,
            "matched_catalog_indices": list(self.matched)
        }


@dataclass(frozen=True)
class SearchResult:
    spec: SearchSpec
    estimate: SearchEstimate
    candidates_after_counit: int
    survivors: Tuple[WeakStructure, ...]
    classes: Tuple[SearchClass, ...] = field(default=())

    def summary(self) -> Dict[str, Any]:
        return {
            "algebra": self.spec.algebra,
            "dim": self.spec.dim,
            "coefficients": [str(c) for c in self.spec.coefficients],
            "freeze": {name: str(v) for name, v in self.spec.freeze},
            "candidates_total": self.estimate.pre_prune,
            "candidates_after_counit": self.candidates_after_counit,
            "survivors": len(self.survivors),
            "classes": [c.to_dict() for c in self.classes]
        }


def _classify(survivors: Sequence[WeakStructure]) -> Tuple[SearchClass, ...]:
    groups: Dict[str, List[Fingerprint]] = {}
    for H in survivors:
        fp = fingerprint(H)
        groups.setdefault(fp.key(), []).append(fp)
    out = []
    for key in sorted(groups):
        fp = groups[key][0]
        dim = survivors[0].dim
        matched = tuple(match_fingerprint(fp, dim, Kind.WEAK_BIALGEBRA)) if dim <= 3 else ()
        if len(matched) > 1:
            logger.warning(f"指纹类 {key} 对应多个分类条目 {list(matched)}，可能合并了不同构的结构")
        out.append(SearchClass(key, fp, len(groups[key]), matched))
    return tuple(out)


def enumerate_structures(spec: SearchSpec, budget: int = 100_000_000, max_workers: int = 1,
                         prune: bool = True) -> SearchResult:
    """
    枚举网格上全部弱双代数

    Args:
        spec: 搜索规格
        budget: 候选数上限（剪枝时按余单位剪枝后的数目，不剪枝时按总数）
        max_workers: 按余单位向量划分候选空间的线程数
        prune: False 时逐个检查全部网格点
    """
    est = estimate(spec)
    limit = est.after_counit if prune else est.pre_prune
    if limit > budget:
        raise BudgetExceededError(f"候选数 {limit} 超出预算 {budget}，请用 freeze 固定部分未知量", limit)
    logger.info(f"开始搜索 {spec.algebra}: 网格 {est.pre_prune} 点，余单位剪枝后 {est.after_counit} 个候选")

    if prune:
        vectors = _counit_vectors(spec)
        if max_workers > 1:
            with ThreadPoolExecutor(max_workers=max_workers) as executor:
                parts = list(executor.map(lambda f: _search_partition(spec, f), vectors))
        else:
            parts = [_search_partition(spec, f) for f in vectors]
        after = sum(count for count, _ in parts)
        found = [item for _, items in parts for item in items]
    else:
        after, found = _brute_force(spec)

    found.sort(key=lambda item: item[0])
    survivors = []
    for n, (_, H) in enumerate(found, 1):
        H = H.with_label(f"{spec.algebra}-survivor-{n}")
        if not verify(H, Level.WEAK_BIALGEBRA).passed:
            raise ToolkitError(f"{H.label} 未通过事后验证")
        survivors.append(H)
    result = SearchResult(spec, est, after, tuple(survivors), _classify(survivors) if survivors else ())
    logger.info(f"搜索完成: {len(survivors)} 个弱双代数，{len(result.classes)} 个指纹类")
    return result


def write_results(result: SearchResult, out_dir: str) -> List[str]:
    """写出每个结构文件和 summary.json，返回写出的路径"""
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    for n, H in enumerate(result.survivors, 1):
        path = os.path.join(out_dir, f"survivor-{n:04d}.json")
        save_structure(H, path)
        paths.append(path)
    summary_path = os.path.join(out_dir, "summary.json")
    with open(summary_path, "w", encoding="utf-8") as f:
        json.dump(result.summary(), f, ensure_ascii=False, indent=2, sort_keys=True)
        f.write("\n")
    paths.append(summary_path)
    return paths
