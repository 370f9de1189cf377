# -*- coding: utf-8 -*-
"""
基变换迁移、同构见证、自同构群与参数族检查

矩阵约定：
  columns  第 j 列是 g(e_j) 的坐标（默认）
  rows     第 i 行是 g(e_i) 的坐标
迁移 g·H 把 H 的结构常数改写到基 {g(e_j)} 下：
  (g·m)(x⊗y) = g⁻¹ m(gx⊗gy)，(g·Δ) = (g⁻¹⊗g⁻¹)Δg，g·ε = εg，g·1 = g⁻¹(1)，g·S = g⁻¹Sg
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, List, Optional, Sequence, Tuple

import sympy

from .builder import default_names, format_element, format_tensor
from .errors import DimensionError, GroupBoundError, SingularMatrixError, ToolkitError
from .exactmath import ONE, ZERO, Mat, Scalar, sparse_rank
from .structure import (
    Elem, Elem2, WeakStructure, add_into, antipode_elem, apply_table, comul_elem,
    counit_elem, mul_elem
)

logger = logging.getLogger(__name__)

CONVENTIONS = ("columns", "rows")


@dataclass(frozen=True)
class BasisChange:
    """可逆线性映射 g"""
    matrix: Mat
    convention: str = "columns"

    def __post_init__(self):
        if self.convention not in CONVENTIONS:
            raise ToolkitError(f"未知的矩阵约定 {self.convention!r}，可选: {', '.join(CONVENTIONS)}")
        if not self.matrix.is_square():
            raise DimensionError("基变换矩阵必须是方阵")
        if not self.matrix.is_invertible():
            raise SingularMatrixError(f"基变换矩阵不可逆: {self.matrix}")

    @property
    def dim(self) -> int:
        return self.matrix.nrows

    @cached_property
    def columns(self) -> Mat:
        """列约定下的矩阵"""
        return self.matrix if self.convention == "columns" else self.matrix.transpose()

    @cached_property
    def images(self) -> List[Elem]:
        """images[j] = g(e_j)"""
        return _column_images(self.columns)

    @cached_property
    def inverse_images(self) -> List[Elem]:
        return _column_images(self.columns.inverse())


def _column_images(m: Mat) -> List[Elem]:
    n = m.nrows
    return [{i: m[i, j] for i in range(n) if m[i, j]} for j in range(n)]


def permutation_change(perm: Sequence[int]) -> BasisChange:
    """g(e_j) = e_{perm[j]}，下标从 1 开始"""
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise ToolkitError(f"不是置换: {list(perm)}")
    rows = [[ZERO] * n for _ in range(n)]
    for j, target in enumerate(perm):
        rows[target - 1][j] = ONE
    return BasisChange(Mat(tuple(tuple(r) for r in rows)))


def compose(g: BasisChange, h: BasisChange) -> BasisChange:
    """先作用 g 再作用 h 的映射 h∘g；transport(transport(H, h), g) == transport(H, compose(g, h))"""
    return BasisChange(h.columns @ g.columns, "columns")


def _apply2(table: Sequence[Elem], X: Elem2) -> Elem2:
    out: Elem2 = {}
    for (a, b), v in X.items():
        for p, c1 in table[a].items():
            for q, c2 in table[b].items():
                add_into(out, (p, q), v * c1 * c2)
    return out


def transport(H: WeakStructure, g: BasisChange) -> WeakStructure:
    """把全部结构常数迁移到基 {g(e_j)} 下"""
    if g.dim != H.dim:
        raise DimensionError(f"基变换维数 {g.dim} 与结构维数 {H.dim} 不一致")
    n = H.dim
    G, Ginv = g.images, g.inverse_images
    mult = {}
    for i in range(n):
        for j in range(n):
            prod = apply_table(Ginv, mul_elem(H, G[i], G[j]))
            if prod:
                mult[(i, j)] = prod
    comult = {k: _apply2(Ginv, comul_elem(H, G[k])) for k in range(n)}
    counit = {k: counit_elem(H, G[k]) for k in range(n)}
    unit = apply_table(Ginv, H.unit_elem)
    antipode = None
    if H.antipode is not None:
        antipode = {i: apply_table(Ginv, antipode_elem(H, G[i])) for i in range(n)}
    return WeakStructure.from_sparse(n, mult, unit, comult, counit, antipode, label=H.label)


def normalize_unit(H: WeakStructure) -> Tuple[WeakStructure, BasisChange]:
    """迁移到单位元为 e_1 的基"""
    u = H.unit_elem
    if not u:
        raise ToolkitError("单位向量为零，无法规范化")
    pivot = min(u)
    columns = [u] + [{j: ONE} for j in range(H.dim) if j != pivot]
    n = H.dim
    m = Mat(tuple(tuple(columns[j].get(i, ZERO) for j in range(n)) for i in range(n)))
    g = BasisChange(m, "columns")
    return transport(H, g), g


# ===============================================
# 同构见证
# ===============================================

@dataclass(frozen=True)
class WitnessResult:
    """见证方程检查结果；失败时记录第一个不成立的方程"""
    passed: bool
    family: Optional[str] = None
    index: Optional[Tuple[int, ...]] = None
    lhs: str = ""
    rhs: str = ""

    def describe(self) -> str:
        if self.passed:
            return "成立"
        index = ", ".join(str(i) for i in self.index or ())
        return f"{self.family}({index}): {self.lhs} ≠ {self.rhs}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "family": self.family,
            "index": list(self.index) if self.index is not None else None,
            "lhs": self.lhs,
            "rhs": self.rhs
        }


def _witness_equations(H1: WeakStructure, H2: WeakStructure, G: List[Elem]) -> WitnessResult:
    """
    g: H2 → H1 的三组方程（以及两边都有对极时的对极方程）
      代数   g(m2(e_i, e_j)) = m1(g e_i, g e_j)
      余代数 Δ1(g e_k) = (g⊗g)Δ2(e_k)
      余单位 ε1(g e_k) = ε2(e_k)
    G 不要求可逆
    """
    n = H1.dim
    names = default_names(n)
    for i in range(n):
        for j in range(n):
            lhs = apply_table(G, H2.mult_table.get((i, j), {}))
            rhs = mul_elem(H1, G[i], G[j])
            if lhs != rhs:
                return WitnessResult(False, "algebra", (i + 1, j + 1),
                                     format_element(lhs, names), format_element(rhs, names))
    for k in range(n):
        lhs2 = comul_elem(H1, G[k])
        rhs2 = _apply2(G, H2.comult_table[k])
        if lhs2 != rhs2:
            return WitnessResult(False, "coalgebra", (k + 1,),
                                 format_tensor(lhs2, names), format_tensor(rhs2, names))
    for k in range(n):
        lhs_s = counit_elem(H1, G[k])
        rhs_s = H2.counit_values[k]
        if lhs_s != rhs_s:
            return WitnessResult(False, "counit", (k + 1,), str(lhs_s), str(rhs_s))
    if H1.antipode is not None and H2.antipode is not None:
        for i in range(n):
            lhs = apply_table(G, antipode_elem(H2, {i: ONE}))
            rhs = antipode_elem(H1, G[i])
            if lhs != rhs:
                return WitnessResult(False, "antipode", (i + 1,),
                                     format_element(lhs, names), format_element(rhs, names))
    return WitnessResult(True)


def is_morphism_witness(H1: WeakStructure, H2: WeakStructure, g: BasisChange) -> WitnessResult:
    """g 是否给出 H2 ≅ H1，即 transport(H1, g) == H2"""
    if not (H1.dim == H2.dim == g.dim):
        raise DimensionError("见证检查要求两个结构和矩阵维数一致")
    return _witness_equations(H1, H2, g.images)


def is_automorphism(H: WeakStructure, g: BasisChange) -> WitnessResult:
    return is_morphism_witness(H, H, g)


def group_closure(generators: Sequence[Mat], bound: int = 1000) -> List[Mat]:
    """生成元在矩阵乘法下的闭包；元素个数超过 bound 时报错"""
    if not generators:
        raise ToolkitError("至少需要一个生成元")
    n = generators[0].nrows
    for m in generators:
        if (m.nrows, m.ncols) != (n, n):
            raise DimensionError("生成元维数不一致")
        if not m.is_invertible():
            raise SingularMatrixError(f"生成元不可逆: {m}")
    identity = Mat.identity(n)
    seen = {identity: None}
    queue = [identity]
    while queue:
        x = queue.pop()
        for g in generators:
            y = x @ g
            if y not in seen:
                seen[y] = None
                if len(seen) > bound:
                    raise GroupBoundError(f"群闭包超过上界 {bound}")
                queue.append(y)
    return sorted(seen, key=str)


def stabilizer_tangent_dim(H: WeakStructure) -> int:
    """
    自同构群在单位元处的切空间维数
    线性化 g = I + εX 后，X 满足导子、余导子和 εX = 0 三组线性方程
    """
    n = H.dim
    C, D, f = H.alg.C, H.coalg.D, H.coalg.f.entries

    def var(a: int, i: int) -> int:
        # X e_i = Σ_a X_{a,i} e_a
        return a * n + i

    rows: List[Dict[int, Scalar]] = []
    # X(e_i e_j) = (X e_i) e_j + e_i (X e_j)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                row: Dict[int, Scalar] = {}
                for t in range(n):
                    c = C.get(i, j, t)
                    if c:
                        add_into(row, var(k, t), c)
                for a in range(n):
                    c = C.get(a, j, k)
                    if c:
                        add_into(row, var(a, i), -c)
                    c = C.get(i, a, k)
                    if c:
                        add_into(row, var(a, j), -c)
                if row:
                    rows.append(row)
    # Δ(X e_i) = (X⊗id + id⊗X)Δ(e_i)
    for i in range(n):
        for s in range(n):
            for r in range(n):
                row = {}
                for a in range(n):
                    d = D.get(a, s, r)
                    if d:
                        add_into(row, var(a, i), d)
                for p in range(n):
                    d = D.get(i, p, r)
                    if d:
                        add_into(row, var(s, p), -d)
                    d = D.get(i, s, p)
                    if d:
                        add_into(row, var(r, p), -d)
                if row:
                    rows.append(row)
    # ε(X e_i) = 0
    for i in range(n):
        row = {}
        for a in range(n):
            if f[a]:
                add_into(row, var(a, i), f[a])
        if row:
            rows.append(row)
    return n * n - sparse_rank(rows)


# ===============================================
# 参数族
# ===============================================

_SAMPLE_POOL = [Fraction(v) for v in
                ("0", "1", "2", "-1", "3", "-2", "1/2", "4", "-3", "1/4", "5/4", "5", "17/4", "-1/2")]


@dataclass(frozen=True)
class ParamMatrix:
    """
    参数化矩阵

    Args:
        entries: 每个元素是 sympy 可解析的表达式文本
        params: 参数名
        nonzero: 必须非零的表达式（参数容许条件）
    """
    entries: Tuple[Tuple[str, ...], ...]
    params: Tuple[str, ...] = ()
    nonzero: Tuple[str, ...] = ()

    @cached_property
    def symbols(self) -> Tuple[sympy.Symbol, ...]:
        return tuple(sympy.Symbol(p) for p in self.params)

    @cached_property
    def expressions(self) -> Tuple[Tuple[Any, ...], ...]:
        local = {p: s for p, s in zip(self.params, self.symbols)}
        return tuple(tuple(sympy.sympify(e, locals=local) for e in row) for row in self.entries)

    @cached_property
    def constraints(self) -> Tuple[Any, ...]:
        local = {p: s for p, s in zip(self.params, self.symbols)}
        return tuple(sympy.sympify(e, locals=local) for e in self.nonzero)

    def is_polynomial(self) -> bool:
        return all(e.is_polynomial(*self.symbols) for row in self.expressions for e in row)

    def degree_bound(self) -> int:
        """见证方程在每个参数上的次数上界"""
        degree = 0
        for row in self.expressions:
            for e in row:
                if e == 0:
                    continue
                for s in self.symbols:
                    degree = max(degree, int(sympy.degree(e, s)))
        return 2 * degree

    def evaluate(self, point: Dict[str, Fraction]) -> Optional[Mat]:
        """代入参数；结果含无理数时返回 None"""
        subs = {s: sympy.Rational(point[p].numerator, point[p].denominator)
                for p, s in zip(self.params, self.symbols)}
        values = []
        for row in self.expressions:
            out_row = []
            for e in row:
                v = sympy.sympify(e.subs(subs))
                if not v.is_rational:
                    return None
                r = sympy.Rational(v)
                out_row.append(Scalar.of(Fraction(int(r.p), int(r.q))))
            values.append(tuple(out_row))
        return Mat(tuple(values))

    def admissible(self, point: Dict[str, Fraction]) -> bool:
        subs = {s: sympy.Rational(point[p].numerator, point[p].denominator)
                for p, s in zip(self.params, self.symbols)}
        return all(sympy.simplify(c.subs(subs)) != 0 for c in self.constraints)


def sample_values(count: int) -> List[Fraction]:
    """count 个互不相同的有理数；固定池用完后依次补 6, 7, 8, ..."""
    values = list(_SAMPLE_POOL[:count])
    extra = 6
    while len(values) < count:
        candidate = Fraction(extra)
        if candidate not in values:
            values.append(candidate)
        extra += 1
    return values


@dataclass(frozen=True)
class ParametricResult:
    """
    status:
      pass          多项式族，在足够大的网格上方程全部成立，因而恒成立
      fail          某个容许点不成立
      inconclusive  非多项式族或没有可用的容许点
    points_checked 只计容许点（矩阵可逆且约束非零）；points_evaluated 计所有求值过的网格点
    """
    status: str
    points_checked: int
    admissible_passed: int
    witness_point: Optional[Dict[str, str]] = None
    witness: Optional[WitnessResult] = None
    points_evaluated: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status,
            "points_checked": self.points_checked,
            "points_evaluated": self.points_evaluated,
            "admissible_passed": self.admissible_passed,
            "witness_point": self.witness_point,
            "witness": self.witness.to_dict() if self.witness is not None else None
        }


def _images_of(m: Mat, convention: str) -> List[Elem]:
    return _column_images(m if convention == "columns" else m.transpose())


def check_parametric_automorphism(H: WeakStructure, P: ParamMatrix, samples: int = 5,
                                  convention: str = "columns") -> ParametricResult:
    """在参数网格上检查 P(θ) 是否都是 H 的自同构"""
    if convention not in CONVENTIONS:
        raise ToolkitError(f"未知的矩阵约定 {convention!r}")
    if not P.params:
        m = P.evaluate({})
        if m is None or not m.is_invertible():
            raise SingularMatrixError(f"常数矩阵不可逆或不是有理矩阵: {P.entries}")
        result = is_automorphism(H, BasisChange(m, convention))
        status = "pass" if result.passed else "fail"
        return ParametricResult(status, 1, int(result.passed), {} if not result.passed else None,
                                None if result.passed else result, 1)

    polynomial = P.is_polynomial()
    per_param = max(samples, P.degree_bound() + 1) if polynomial else samples + 3
    values = sample_values(per_param)
    grid = 0
    evaluated = 0
    checked = 0
    passed = 0
    identity_holds = polynomial
    for combo in itertools.product(values, repeat=len(P.params)):
        grid += 1
        point = dict(zip(P.params, combo))
        m = P.evaluate(point)
        if m is None:
            continue
        result = _witness_equations(H, H, _images_of(m, convention))
        evaluated += 1
        admissible = P.admissible(point) and m.is_invertible()
        checked += int(admissible)
        if not result.passed:
            identity_holds = False
            if admissible:
                return ParametricResult("fail", checked, passed,
                                        {k: str(v) for k, v in point.items()}, result, evaluated)
        elif admissible:
            passed += 1
    # 每个参数取 次数+1 个不同值且全部点都求值成功，方程才恒成立
    if identity_holds and polynomial and evaluated == grid:
        status = "pass"
    else:
        status = "inconclusive"
    logger.debug(f"参数族检查 {H.label}: {status}，求值 {evaluated} 个点，其中容许点 {checked} 个")
    return ParametricResult(status, checked, passed, points_evaluated=evaluated)
