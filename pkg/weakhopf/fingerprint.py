# -*- coding: utf-8 -*-
"""
基无关的不变量指纹
每个分量在任意可逆基变换下不变，可用来区分不同构的结构；
指纹相同并不说明同构
"""

import logging
from dataclasses import dataclass, fields
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .errors import GrouplikeError
from .exactmath import ONE, ZERO, Mat, Scalar, Tensor2, Tensor3, tensor2_rank, trace_bilinear_rank
from .structure import (
    WeakStructure, comul_elem, counit, counit_elem, grouplikes, is_cocommutative, is_commutative
)

logger = logging.getLogger(__name__)

COMPONENTS = (
    ("eps_unit", "ε(1)"),
    ("trace_m_delta", "tr(m∘Δ)"),
    ("trace_m_delta_sq", "tr((m∘Δ)²)"),
    ("trace_m_tau_delta", "tr(m∘τ∘Δ)"),
    ("commutative", "交换"),
    ("cocommutative", "余交换"),
    ("algebra_trace_rank", "代数迹形式秩"),
    ("dual_trace_rank", "对偶代数迹形式秩"),
    ("delta_unit_rank", "Δ(1) 的张量秩"),
    ("grouplikes", "类群元个数与 ε 值"),
)


@dataclass(frozen=True)
class Fingerprint:
    eps_unit: Scalar
    trace_m_delta: Scalar
    trace_m_delta_sq: Scalar
    trace_m_tau_delta: Scalar
    commutative: bool
    cocommutative: bool
    algebra_trace_rank: int
    dual_trace_rank: int
    delta_unit_rank: int
    grouplikes: Optional[Tuple[int, Tuple[Scalar, ...]]] = None

    def values(self) -> List[Tuple[str, Any]]:
        return [(f.name, getattr(self, f.name)) for f in fields(self)]

    def key(self) -> str:
        """稳定的文本键，用于分组"""
        return "|".join(f"{name}={_text(value)}" for name, value in self.values())

    def to_dict(self) -> Dict[str, Any]:
        return {name: _json_value(value) for name, value in self.values()}


def _text(value: Any) -> str:
    if value is None:
        return "n/a"
    if isinstance(value, tuple):
        count, eps = value
        return f"{count}:[{','.join(str(v) for v in eps)}]"
    if isinstance(value, bool):
        return "1" if value else "0"
    return str(value)


def _json_value(value: Any) -> Any:
    if isinstance(value, Scalar):
        return str(value)
    if isinstance(value, tuple):
        count, eps = value
        return {"count": count, "counit_values": [str(v) for v in eps]}
    return value


def _m_delta_matrix(H: WeakStructure, flip: bool = False) -> Mat:
    """(m∘Δ) 或 (m∘τ∘Δ) 的矩阵，第 j 列是 e_j 的像"""
    n = H.dim
    images = []
    for j in range(n):
        image: Dict[int, Scalar] = {}
        for (a, b), v in comul_elem(H, {j: ONE}).items():
            left, right = (b, a) if flip else (a, b)
            for k, c in H.mult_table.get((left, right), {}).items():
                image[k] = image.get(k, ZERO) + v * c
        images.append(image)
    return Mat(tuple(tuple(images[j].get(i, ZERO) for j in range(n)) for i in range(n)))


def _trace(m: Mat) -> Scalar:
    total = ZERO
    for i in range(m.nrows):
        total = total + m[i, i]
    return total


def _dual_tensor(H: WeakStructure) -> Tensor3:
    """对偶代数的结构常数 (f·g)(e_k) = Σ D_k^{ij} f_i g_j"""
    n = H.dim
    return Tensor3.from_sparse(n, {(i, j, k): v for (k, i, j), v in H.coalg.D.nonzero()})


def fingerprint(H: WeakStructure, grid: Optional[Sequence] = None) -> Fingerprint:
    """计算全部分量；维数 > 3 或导子 > 1 且没有网格时类群元分量为 None"""
    m_delta = _m_delta_matrix(H)
    delta_unit = comul_elem(H, H.unit_elem)
    try:
        found = grouplikes(H, grid)
        group = (len(found), tuple(sorted((counit(H, g) for g in found), key=_scalar_sort_key)))
    except GrouplikeError as e:
        logger.debug(f"{H.label}: 类群元分量不可用: {e}")
        group = None
    return Fingerprint(
        eps_unit=counit_elem(H, H.unit_elem),
        trace_m_delta=_trace(m_delta),
        trace_m_delta_sq=_trace(m_delta @ m_delta),
        trace_m_tau_delta=_trace(_m_delta_matrix(H, flip=True)),
        commutative=is_commutative(H),
        cocommutative=is_cocommutative(H),
        algebra_trace_rank=trace_bilinear_rank(H.alg.C),
        dual_trace_rank=trace_bilinear_rank(_dual_tensor(H)),
        delta_unit_rank=tensor2_rank(Tensor2.from_sparse(H.dim, delta_unit)),
        grouplikes=group,
    )


def _scalar_sort_key(s: Scalar):
    return (s.conductor, s.coeffs)


def first_difference(a: Fingerprint, b: Fingerprint) -> Optional[str]:
    """第一个不同的分量名；grouplikes 有一方不可用时跳过"""
    for (name, x), (_, y) in zip(a.values(), b.values()):
        if x is None or y is None:
            continue
        if x != y:
            return name
    return None


@dataclass(frozen=True)
class Separation:
    first: str
    second: str
    component: Optional[str]

    @property
    def separated(self) -> bool:
        return self.component is not None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pair": [self.first, self.second],
            "separated_by": self.component if self.separated else "inconclusive"
        }


def separate(labelled: Sequence[Tuple[str, Fingerprint]]) -> List[Separation]:
    """两两比较指纹；只报告区分依据，从不断言同构"""
    out = []
    for x in range(len(labelled)):
        for y in range(x + 1, len(labelled)):
            (la, fa), (lb, fb) = labelled[x], labelled[y]
            sep = Separation(la, lb, first_difference(fa, fb))
            if not sep.separated:
                logger.warning(f"指纹无法区分 {la} 与 {lb}")
            out.append(sep)
    return out
