# -*- coding: utf-8 -*-
"""
结构数据模型
结构常数约定：
  e_i e_j = Σ_k C_{ij}^k e_k        C.get(i, j, k)
  Δ(e_k) = Σ D_k^{ij} e_i⊗e_j       D.get(k, i, j)
  ε(e_k) = f_k
  S(e_i) = Σ_j s_{ij} e_j           antipode.rows[i][j]
内部下标从 0 开始；对外报告的见证下标从 1 开始
"""

import itertools
import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import sympy

from .errors import AxiomError, DimensionError, GrouplikeError
from .exactmath import ONE, ZERO, Mat, Scalar, Tensor2, Tensor3, Vec

logger = logging.getLogger(__name__)

Elem = Dict[int, Scalar]
Elem2 = Dict[Tuple[int, int], Scalar]
Elem3 = Dict[Tuple[int, int, int], Scalar]


@dataclass(frozen=True)
class AlgebraStruct:
    """代数部分"""
    dim: int
    C: Tensor3
    unit: Vec
    unital: bool = True

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionError("维数必须至少为 1")
        if self.C.dim != self.dim or self.unit.dim != self.dim:
            raise DimensionError(f"代数结构常数与维数 {self.dim} 不一致")


@dataclass(frozen=True)
class CoalgebraStruct:
    """余代数部分"""
    dim: int
    D: Tensor3
    f: Vec

    def __post_init__(self):
        if self.D.dim != self.dim or self.f.dim != self.dim:
            raise DimensionError(f"余代数结构常数与维数 {self.dim} 不一致")


@dataclass(frozen=True)
class WeakStructure:
    """(C, 1, D, f, S) 全部结构常数；相等比较忽略 label"""
    alg: AlgebraStruct
    coalg: CoalgebraStruct
    antipode: Optional[Mat] = None
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.alg.dim != self.coalg.dim:
            raise DimensionError(f"代数维数 {self.alg.dim} 与余代数维数 {self.coalg.dim} 不一致")
        if self.antipode is not None and (self.antipode.nrows, self.antipode.ncols) != (self.dim, self.dim):
            raise DimensionError(f"对极矩阵必须是 {self.dim}×{self.dim}")

    @classmethod
    def from_sparse(cls, dim: int, mult: Dict[Tuple[int, int], Elem], unit: Elem,
                    comult: Dict[int, Elem2], counit: Dict[int, Scalar],
                    antipode: Optional[Dict[int, Elem]] = None, label: str = "") -> 'WeakStructure':
        """由稀疏表构造：mult[(i, j)] = e_i e_j，comult[k] = Δ(e_k)，antipode[i] = S(e_i)"""
        C = Tensor3.from_sparse(dim, {(i, j, k): v for (i, j), prod in mult.items() for k, v in prod.items()})
        D = Tensor3.from_sparse(dim, {(k, i, j): v for k, co in comult.items() for (i, j), v in co.items()})
        S = None
        if antipode is not None:
            S = Mat(tuple(tuple(Scalar.of(antipode.get(i, {}).get(j, ZERO)) for j in range(dim))
                          for i in range(dim)))
        return cls(
            alg=AlgebraStruct(dim, C, vec_of(dim, unit)),
            coalg=CoalgebraStruct(dim, D, Vec(tuple(Scalar.of(counit.get(k, ZERO)) for k in range(dim)))),
            antipode=S,
            label=label
        )

    @property
    def dim(self) -> int:
        return self.alg.dim

    @cached_property
    def conductor(self) -> int:
        conductors = {s.conductor for s in self._all_scalars()}
        return max(conductors) if conductors else 1

    def _all_scalars(self) -> Iterable[Scalar]:
        yield from self.alg.C.entries
        yield from self.alg.unit.entries
        yield from self.coalg.D.entries
        yield from self.coalg.f.entries
        if self.antipode is not None:
            for row in self.antipode.rows:
                yield from row

    def with_label(self, label: str) -> 'WeakStructure':
        return replace(self, label=label)

    def with_antipode(self, antipode: Optional[Mat]) -> 'WeakStructure':
        return replace(self, antipode=antipode)

    # ---------- 稀疏缓存 ----------

    @cached_property
    def mult_table(self) -> Dict[Tuple[int, int], Elem]:
        table: Dict[Tuple[int, int], Elem] = {}
        for (i, j, k), v in self.alg.C.nonzero():
            table.setdefault((i, j), {})[k] = v
        return table

    @cached_property
    def comult_table(self) -> List[Elem2]:
        table: List[Elem2] = [{} for _ in range(self.dim)]
        for (k, i, j), v in self.coalg.D.nonzero():
            table[k][(i, j)] = v
        return table

    @cached_property
    def counit_values(self) -> Tuple[Scalar, ...]:
        return self.coalg.f.entries

    @cached_property
    def unit_elem(self) -> Elem:
        return elem_of(self.alg.unit)

    @cached_property
    def antipode_table(self) -> Optional[List[Elem]]:
        if self.antipode is None:
            return None
        return [{j: v for j, v in enumerate(row) if v} for row in self.antipode.rows]


@dataclass(frozen=True)
class Endo:
    """线性自映射，matrix 第 i 行是 φ(e_i) 的坐标"""
    matrix: Mat

    @classmethod
    def identity(cls, n: int) -> 'Endo':
        return cls(Mat.identity(n))

    @property
    def dim(self) -> int:
        return self.matrix.nrows

    def table(self) -> List[Elem]:
        return [{j: v for j, v in enumerate(row) if v} for row in self.matrix.rows]


# ===============================================
# 稀疏元素运算
# ===============================================

def add_into(target: Dict, key, value: Scalar) -> None:
    """target[key] += value，结果为零时删除"""
    if not value:
        return
    current = target.get(key)
    if current is None:
        target[key] = value
        return
    total = current + value
    if total:
        target[key] = total
    else:
        del target[key]


def elem_of(x: Vec) -> Elem:
    return {i: v for i, v in enumerate(x.entries) if v}


def vec_of(n: int, x: Elem) -> Vec:
    return Vec(tuple(Scalar.of(x.get(i, ZERO)) for i in range(n)))


def linear_combination(x: Elem, y: Elem, a: Scalar = ONE, b: Scalar = ONE) -> Elem:
    out: Elem = {}
    for k, v in x.items():
        add_into(out, k, a * v)
    for k, v in y.items():
        add_into(out, k, b * v)
    return out


def apply_table(table: Sequence[Elem], x: Elem) -> Elem:
    """按基像表作用线性映射"""
    out: Elem = {}
    for i, a in x.items():
        for j, v in table[i].items():
            add_into(out, j, a * v)
    return out


def mul_elem(H: WeakStructure, x: Elem, y: Elem) -> Elem:
    table = H.mult_table
    out: Elem = {}
    for i, a in x.items():
        for j, b in y.items():
            prod = table.get((i, j))
            if prod:
                ab = a * b
                for k, c in prod.items():
                    add_into(out, k, ab * c)
    return out


def comul_elem(H: WeakStructure, x: Elem) -> Elem2:
    table = H.comult_table
    out: Elem2 = {}
    for k, a in x.items():
        for key, d in table[k].items():
            add_into(out, key, a * d)
    return out


def counit_elem(H: WeakStructure, x: Elem) -> Scalar:
    f = H.counit_values
    total = ZERO
    for k, a in x.items():
        if f[k]:
            total = total + a * f[k]
    return total


def antipode_elem(H: WeakStructure, x: Elem) -> Elem:
    table = H.antipode_table
    if table is None:
        raise AxiomError(f"结构 {H.label or '(未命名)'} 没有对极")
    return apply_table(table, x)


def mul2(H: WeakStructure, X: Elem2, Y: Elem2) -> Elem2:
    """V⊗V 中的分量乘法 (a⊗b)•(c⊗d) = ac⊗bd"""
    table = H.mult_table
    out: Elem2 = {}
    for (i, j), a in X.items():
        for (k, l), b in Y.items():
            left = table.get((i, k))
            if not left:
                continue
            right = table.get((j, l))
            if not right:
                continue
            ab = a * b
            for p, c1 in left.items():
                for q, c2 in right.items():
                    add_into(out, (p, q), ab * c1 * c2)
    return out


def mul3(H: WeakStructure, X: Elem3, Y: Elem3) -> Elem3:
    table = H.mult_table
    out: Elem3 = {}
    for (i, j, k), a in X.items():
        for (p, q, r), b in Y.items():
            first = table.get((i, p))
            second = table.get((j, q))
            third = table.get((k, r))
            if not (first and second and third):
                continue
            ab = a * b
            for s, c1 in first.items():
                for t, c2 in second.items():
                    c12 = ab * c1 * c2
                    for u, c3 in third.items():
                        add_into(out, (s, t, u), c12 * c3)
    return out


def comul_left(H: WeakStructure, X: Elem2) -> Elem3:
    """(Δ⊗id)X"""
    table = H.comult_table
    out: Elem3 = {}
    for (i, j), a in X.items():
        for (p, q), d in table[i].items():
            add_into(out, (p, q, j), a * d)
    return out


def comul_right(H: WeakStructure, X: Elem2) -> Elem3:
    """(id⊗Δ)X"""
    table = H.comult_table
    out: Elem3 = {}
    for (i, j), a in X.items():
        for (p, q), d in table[j].items():
            add_into(out, (i, p, q), a * d)
    return out


def tensor_with_unit(H: WeakStructure, X: Elem2, position: int) -> Elem3:
    """在第 position 个位置（0、1、2 中的 0 或 2）插入单位元"""
    out: Elem3 = {}
    for (i, j), a in X.items():
        for u, b in H.unit_elem.items():
            key = (u, i, j) if position == 0 else (i, j, u)
            add_into(out, key, a * b)
    return out


# ===============================================
# 对外操作
# ===============================================

def _check_vec(H: WeakStructure, x: Vec) -> None:
    if x.dim != H.dim:
        raise DimensionError(f"向量维数 {x.dim} 与结构维数 {H.dim} 不一致")


def multiply(H: WeakStructure, x: Vec, y: Vec) -> Vec:
    """m(x⊗y)"""
    _check_vec(H, x)
    _check_vec(H, y)
    return vec_of(H.dim, mul_elem(H, elem_of(x), elem_of(y)))


def comultiply(H: WeakStructure, x: Vec) -> Tensor2:
    """Δ(x)"""
    _check_vec(H, x)
    return Tensor2.from_sparse(H.dim, comul_elem(H, elem_of(x)))


def counit(H: WeakStructure, x: Vec) -> Scalar:
    """ε(x)"""
    _check_vec(H, x)
    return counit_elem(H, elem_of(x))


def counit_on_unit(H: WeakStructure) -> Scalar:
    return counit_elem(H, H.unit_elem)


def apply_antipode(H: WeakStructure, x: Vec) -> Vec:
    _check_vec(H, x)
    return vec_of(H.dim, antipode_elem(H, elem_of(x)))


def with_antipode(H: WeakStructure, antipode: Mat) -> WeakStructure:
    return H.with_antipode(antipode)


def convolve(H: WeakStructure, phi: Endo, psi: Endo) -> Endo:
    """卷积 φ⋆ψ = m∘(φ⊗ψ)∘Δ"""
    if phi.dim != H.dim or psi.dim != H.dim:
        raise DimensionError("卷积的映射维数与结构不一致")
    phi_table, psi_table = phi.table(), psi.table()
    rows = []
    for a in range(H.dim):
        image: Elem = {}
        for (i, j), d in H.comult_table[a].items():
            for k, v in mul_elem(H, phi_table[i], psi_table[j]).items():
                add_into(image, k, d * v)
        rows.append(vec_of(H.dim, image).entries)
    return Endo(Mat(tuple(rows)))


def is_commutative(H: WeakStructure) -> bool:
    C, n = H.alg.C, H.dim
    return all(C.get(i, j, k) == C.get(j, i, k) for i in range(n) for j in range(i + 1, n) for k in range(n))


def is_cocommutative(H: WeakStructure) -> bool:
    D, n = H.coalg.D, H.dim
    return all(D.get(k, i, j) == D.get(k, j, i) for k in range(n) for i in range(n) for j in range(i + 1, n))


def is_grouplike(H: WeakStructure, x: Vec) -> bool:
    """Δ(x) = x⊗x 且 x ≠ 0"""
    if x.is_zero():
        return False
    return comultiply(H, x) == Tensor2.outer(x, x)


def grouplikes(H: WeakStructure, grid: Optional[Sequence] = None) -> List[Vec]:
    """
    求 Δ(x) = x⊗x 的全部非零解

    Args:
        H: 结构
        grid: 候选系数集合；给出时在网格上穷举，否则精确求解（维数不超过 3、有理结构）

    Returns:
        按坐标字典序排列的类群元列表
    """
    n = H.dim
    if grid is not None:
        values = [Scalar.of(v) for v in grid]
        found = [Vec(combo) for combo in itertools.product(values, repeat=n)
                 if is_grouplike(H, Vec(combo))]
        return _sorted_vectors(found)

    if n > 3:
        raise GrouplikeError(f"维数 {n} 超过精确求解范围，请提供候选网格")
    if H.conductor != 1:
        raise GrouplikeError("精确求解只支持有理结构常数")

    xs = sympy.symbols(f'x1:{n + 1}')
    D = H.coalg.D
    equations = []
    for i in range(n):
        for j in range(n):
            rhs = sum((_to_sympy(D.get(k, i, j)) * xs[k] for k in range(n)), sympy.Integer(0))
            equations.append(xs[i] * xs[j] - rhs)
    solutions = sympy.solve(equations, xs, dict=True)

    found = []
    for solution in solutions:
        if len(solution) < n or any(sympy.sympify(v).free_symbols for v in solution.values()):
            raise GrouplikeError("类群元方程有无穷多解")
        values = [sympy.sympify(solution[x]) for x in xs]
        if not all(v.is_rational for v in values):
            continue
        vec = Vec(tuple(Scalar.of(_from_sympy(v)) for v in values))
        if is_grouplike(H, vec):
            found.append(vec)
    logger.debug(f"{H.label or '结构'} 共找到 {len(found)} 个类群元")
    return _sorted_vectors(found)


def _to_sympy(s: Scalar):
    q = s.to_fraction()
    return sympy.Rational(q.numerator, q.denominator)


def _from_sympy(value):
    r = sympy.Rational(value)
    return Fraction(int(r.p), int(r.q))


def _sorted_vectors(vectors: List[Vec]) -> List[Vec]:
    unique = {v: None for v in vectors}
    return sorted(unique, key=lambda v: tuple(s.coeffs for s in v.entries))
