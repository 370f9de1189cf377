# -*- coding: utf-8 -*-
"""
结构构造
每个构造先检查前置条件（失败时抛 ConstructionError 并给出代码），
再生成结构常数，最后用 verify 验证输出
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .axioms import AxiomId, Level, VerificationReport, axiom_passes, verify
from .builder import StructureBuilder
from .errors import ConstructionError
from .exactmath import ONE, ZERO, Mat, Scalar, Tensor3, Vec
from .structure import (
    Elem, Elem2, WeakStructure, add_into, antipode_elem, linear_combination, mul2, mul_elem
)
from .transport import BasisChange, transport

logger = logging.getLogger(__name__)


# ===============================================
# 输入代数
# ===============================================

@dataclass(frozen=True)
class RawAlgebra:
    """
    构造的输入代数：mult[(i, j)] = e_i e_j（稀疏），unit 可选
    维数可以为 0（空代数）
    """
    dim: int
    mult: Dict[Tuple[int, int], Elem] = field(default_factory=dict, compare=False)
    unit: Optional[Elem] = field(default=None, compare=False)
    label: str = ""

    def __post_init__(self):
        if self.unit is not None and self.dim > 0:
            s = self.as_structure()
            if not axiom_passes(s, AxiomId.UNIT):
                raise ConstructionError("not-unital", f"{self.label or '输入代数'} 的单位元不满足单位律")

    def as_structure(self) -> WeakStructure:
        """零余代数的结构，用于复用公理检查"""
        return WeakStructure.from_sparse(self.dim, self.mult, self.unit or {}, {}, {}, label=self.label)

    def is_associative(self) -> bool:
        return self.dim == 0 or axiom_passes(self.as_structure(), AxiomId.ASSOC)

    def semigroup_table(self) -> Optional[Dict[Tuple[int, int], int]]:
        """每个基乘积都恰好是一个基元素时返回乘法表，否则返回 None"""
        table = {}
        for i in range(self.dim):
            for j in range(self.dim):
                prod = self.mult.get((i, j), {})
                if len(prod) != 1:
                    return None
                (k, v), = prod.items()
                if v != 1:
                    return None
                table[(i, j)] = k
        return table


def semigroup_algebra(table: Sequence[Sequence[int]], label: str = "") -> RawAlgebra:
    """半群代数，table[i][j] = k 表示 e_i e_j = e_k（下标从 0 开始）"""
    n = len(table)
    mult = {(i, j): {table[i][j]: ONE} for i in range(n) for j in range(n)}
    return RawAlgebra(n, mult, label=label or f"semigroup{n}")


def null_algebra(n: int) -> RawAlgebra:
    """所有乘积为零"""
    return RawAlgebra(n, {}, label=f"null{n}")


def max_semilattice(n: int) -> RawAlgebra:
    """e_i e_j = e_max(i, j)"""
    return semigroup_algebra([[max(i, j) for j in range(n)] for i in range(n)], f"max{n}")


def left_zero_band(n: int) -> RawAlgebra:
    """e_i e_j = e_i"""
    return semigroup_algebra([[i for _ in range(n)] for i in range(n)], f"leftzero{n}")


def right_zero_band(n: int) -> RawAlgebra:
    """e_i e_j = e_j"""
    return semigroup_algebra([[j for j in range(n)] for _ in range(n)], f"rightzero{n}")


def rectangular_band(p: int, q: int) -> RawAlgebra:
    """(a, b)(c, d) = (a, d)，基元素 (a, b) 编号为 a*q + b"""
    n = p * q
    table = [[(i // q) * q + (j % q) for j in range(n)] for i in range(n)]
    return semigroup_algebra(table, f"rect{p}x{q}")


def cyclic_group_algebra(k: int) -> RawAlgebra:
    """ℤ/k 的群代数，e_0 是单位元"""
    table = [[(i + j) % k for j in range(k)] for i in range(k)]
    algebra = semigroup_algebra(table, f"cyclic{k}")
    return RawAlgebra(k, algebra.mult, {0: ONE}, label=algebra.label)


# ===============================================
# 公共检查
# ===============================================

def _require_associative(A: RawAlgebra) -> None:
    if not A.is_associative():
        raise ConstructionError("not-associative", f"{A.label or '输入代数'} 不满足结合律")


def _require_semigroup(A: RawAlgebra) -> None:
    if A.dim > 0 and A.semigroup_table() is None:
        raise ConstructionError(
            "not-basis-multiplicative",
            f"{A.label or '输入代数'} 的基乘积必须都是基元素（基构成半群）"
        )


def _verify_output(H: WeakStructure, level: Level) -> WeakStructure:
    report = verify(H, level)
    if not report.passed:
        failed = ", ".join(a.value for a in report.failed_axioms())
        logger.warning(f"构造 {H.label} 的输出未通过 {level.value} 验证: {failed}")
        raise ConstructionError("output-failed-verification",
                                f"{H.label} 未通过 {level.value} 验证: {failed}", report)
    logger.info(f"构造 {H.label} 完成，已通过 {level.value} 验证")
    return H


def _shift(x: Elem, offset: int) -> Elem:
    return {k + offset: v for k, v in x.items()}


def _shift2(x: Elem2, offset: int) -> Elem2:
    return {(i + offset, j + offset): v for (i, j), v in x.items()}


def _outer(x: Elem, y: Elem) -> Elem2:
    out: Elem2 = {}
    for i, a in x.items():
        for j, b in y.items():
            add_into(out, (i, j), a * b)
    return out


def _sum2(*terms: Elem2) -> Elem2:
    out: Elem2 = {}
    for term in terms:
        for key, v in term.items():
            add_into(out, key, v)
    return out


def _combo(*pairs: Tuple[int, int]) -> Elem:
    """(系数, 下标) 列表 → 元素"""
    out: Elem = {}
    for coeff, index in pairs:
        add_into(out, index, Scalar.of(coeff))
    return out


def _unit_rows(mult: Dict[Tuple[int, int], Elem], unit: int, n: int) -> None:
    for i in range(n):
        mult[(unit, i)] = {i: ONE}
        mult[(i, unit)] = {i: ONE}


# ===============================================
# 添加两个单位 / 幂等元构造
# ===============================================

def adjoin_two_units(A: Optional[RawAlgebra] = None, strict: bool = True) -> WeakStructure:
    """
    在半群代数 A 上添加单位元 1 和相对单位 e
    基顺序 (1, e, A 的基)：
      Δ(1) = (1-e)⊗(1-e) + e⊗e，Δ(e) = e⊗e，Δ(a) = a⊗a
      ε(1) = 2，ε(e) = ε(a) = 1

    Args:
        A: 输入代数，None 表示空代数
        strict: False 时跳过前置条件和输出验证（用于展示反例）
    """
    A = A or RawAlgebra(0)
    if strict:
        _require_associative(A)
        _require_semigroup(A)
    n = A.dim + 2
    mult: Dict[Tuple[int, int], Elem] = {}
    for (i, j), prod in A.mult.items():
        if prod:
            mult[(i + 2, j + 2)] = _shift(prod, 2)
    for a in range(1, n):
        mult[(1, a)] = {a: ONE}
        mult[(a, 1)] = {a: ONE}
    _unit_rows(mult, 0, n)

    one_minus_e = _combo((1, 0), (-1, 1))
    comult = {0: _sum2(_outer(one_minus_e, one_minus_e), {(1, 1): ONE})}
    for a in range(1, n):
        comult[a] = {(a, a): ONE}
    counit = {0: Scalar.of(2)}
    counit.update({a: ONE for a in range(1, n)})
    H = WeakStructure.from_sparse(n, mult, {0: ONE}, comult, counit,
                                  label=f"two-units({A.label or A.dim})")
    return _verify_output(H, Level.WEAK_BIALGEBRA) if strict else H


def weak_from_idempotent(A: RawAlgebra, e: Elem) -> WeakStructure:
    """
    单位代数 A（单位元是基元素）与补空间中的幂等相对单位 e：
      Δ(1) = (1-e)⊗(1-e) + e⊗e，Δ(a) = a⊗a，ε(1) = 2，ε(a) = 1
    """
    _require_associative(A)
    if A.unit is None or len(A.unit) != 1 or next(iter(A.unit.values())) != 1:
        raise ConstructionError("unit-not-basis", "输入代数的单位元必须是某个基元素")
    p = next(iter(A.unit))
    complement = [a for a in range(A.dim) if a != p]
    S = A.as_structure()

    for a in complement:
        for b in complement:
            if p in A.mult.get((a, b), {}):
                raise ConstructionError("not-subalgebra", "去掉单位元后的基张成的空间不是子代数")
    if not e or p in e:
        raise ConstructionError("not-in-complement", "e 必须是补空间中的非零元素")
    if mul_elem(S, e, e) != e:
        raise ConstructionError("not-idempotent", "e 不是幂等元")
    for a in complement:
        if mul_elem(S, e, {a: ONE}) != {a: ONE} or mul_elem(S, {a: ONE}, e) != {a: ONE}:
            raise ConstructionError("not-relative-unit", f"e 不是补空间的单位（基元素 e{a + 1}）")
    for a in complement:
        for b in complement:
            prod = A.mult.get((a, b), {})
            if len(prod) != 1 or next(iter(prod.values())) != 1:
                raise ConstructionError("not-basis-multiplicative", "补空间的基乘积必须都是基元素")

    one_minus_e = linear_combination({p: ONE}, e, ONE, -ONE)
    comult = {p: _sum2(_outer(one_minus_e, one_minus_e), _outer(e, e))}
    for a in complement:
        comult[a] = {(a, a): ONE}
    counit = {a: ONE for a in complement}
    counit[p] = Scalar.of(2)
    H = WeakStructure.from_sparse(A.dim, dict(A.mult), {p: ONE}, comult, counit,
                                  label=f"idempotent({A.label or A.dim})")
    return _verify_output(H, Level.WEAK_BIALGEBRA)


def orthogonal_idempotents_example(n: int, k: int, strict: bool = True) -> WeakStructure:
    """
    e_1 = 1，e_2..e_n 两两正交的幂等元，取 e = e_k：
      Δ(1) = (1-e_k)⊗(1-e_k) + e_k⊗e_k，Δ(e_i) = e_i⊗e_i，ε(1) = 2，ε(e_i) = 1
    n ≤ 3 时通过验证；n ≥ 4 时弱余单位公理在 (e_i, 1, e_l)（i ≠ l，都不等于 k）失败
    """
    if n < 2 or not 2 <= k <= n:
        raise ConstructionError("dimension-too-small", f"需要 n ≥ 2 且 2 ≤ k ≤ n，得到 n={n}, k={k}")
    mult: Dict[Tuple[int, int], Elem] = {(i, i): {i: ONE} for i in range(1, n)}
    _unit_rows(mult, 0, n)
    e = k - 1
    one_minus_e = _combo((1, 0), (-1, e))
    comult = {0: _sum2(_outer(one_minus_e, one_minus_e), {(e, e): ONE})}
    comult.update({i: {(i, i): ONE} for i in range(1, n)})
    counit = {0: Scalar.of(2)}
    counit.update({i: ONE for i in range(1, n)})
    H = WeakStructure.from_sparse(n, mult, {0: ONE}, comult, counit, label=f"orthogonal-idempotents({n},{k})")
    return _verify_output(H, Level.WEAK_BIALGEBRA) if strict else H


# ===============================================
# 链式构造
# ===============================================

def chain_construction(p: int, B2: Optional[RawAlgebra] = None) -> WeakStructure:
    """
    基 (e_1..e_p, B2 的基)，e_i e_j = e_max(i,j)，e_i f = f e_i = f：
      Δ(e_i) = Σ_{l=i}^{p-1} (e_l - e_{l+1})⊗(e_l - e_{l+1}) + e_p⊗e_p
      Δ(f) = f⊗f，ε(e_i) = p - i + 1，ε(f) = 1
    """
    if p < 1:
        raise ConstructionError("dimension-too-small", f"p 必须至少为 1，得到 {p}")
    B2 = B2 or RawAlgebra(0)
    _require_associative(B2)
    _require_semigroup(B2)
    n = p + B2.dim
    mult: Dict[Tuple[int, int], Elem] = {}
    for i in range(p):
        for j in range(p):
            mult[(i, j)] = {max(i, j): ONE}
        for f in range(p, n):
            mult[(i, f)] = {f: ONE}
            mult[(f, i)] = {f: ONE}
    for (a, b), prod in B2.mult.items():
        if prod:
            mult[(a + p, b + p)] = _shift(prod, p)

    comult: Dict[int, Elem2] = {}
    for i in range(p):
        terms = [{(p - 1, p - 1): ONE}]
        for l in range(i, p - 1):
            diff = _combo((1, l), (-1, l + 1))
            terms.append(_outer(diff, diff))
        comult[i] = _sum2(*terms)
    for f in range(p, n):
        comult[f] = {(f, f): ONE}
    counit = {i: Scalar.of(p - i) for i in range(p)}
    counit.update({f: ONE for f in range(p, n)})
    H = WeakStructure.from_sparse(n, mult, {0: ONE}, comult, counit,
                                  label=f"chain({p},{B2.label or B2.dim})")
    return _verify_output(H, Level.WEAK_BIALGEBRA)


def max_algebra_whopf(n: int) -> WeakStructure:
    """n 维 max 代数上的弱 Hopf 代数，S = id"""
    if n < 2:
        raise ConstructionError("dimension-too-small", f"n 必须至少为 2，得到 {n}")
    H = chain_construction(n)
    H = H.with_antipode(Mat.identity(n)).with_label(f"max-algebra({n})")
    return _verify_output(H, Level.WEAK_HOPF)


def orthogonal_idempotents_whopf(n: int) -> WeakStructure:
    """max_algebra_whopf(n) 在基 p_i = e_i - e_{i+1}，p_n = e_n 下的形式"""
    H = max_algebra_whopf(n)
    rows = [[ZERO] * n for _ in range(n)]
    for j in range(n):
        rows[j][j] = ONE
        if j + 1 < n:
            rows[j + 1][j] = -ONE
    g = BasisChange(Mat(tuple(tuple(r) for r in rows)), "columns")
    return _verify_output(transport(H, g).with_label(f"orthogonal-idempotents-whopf({n})"), Level.WEAK_HOPF)


# ===============================================
# 从（Hopf）双代数添加单位元
# ===============================================

def _adjoin_unit_parts(B: WeakStructure):
    n = B.dim + 1
    mult: Dict[Tuple[int, int], Elem] = {}
    for (i, j), prod in B.mult_table.items():
        mult[(i + 1, j + 1)] = _shift(prod, 1)
    _unit_rows(mult, 0, n)
    u = _shift(B.unit_elem, 1)
    one_minus_u = linear_combination({0: ONE}, u, ONE, -ONE)
    comult = {0: _sum2(_outer(one_minus_u, one_minus_u), _outer(u, u))}
    for k in range(B.dim):
        comult[k + 1] = _shift2(B.comult_table[k], 1)
    counit = {0: Scalar.of(2)}
    counit.update({k + 1: B.counit_values[k] for k in range(B.dim)})
    return n, mult, comult, counit


def adjoin_unit_to_bialgebra(B: WeakStructure) -> WeakStructure:
    """
    严格双代数 B（单位元 u）添加新单位元 1：
      Δ(1) = (1-u)⊗(1-u) + u⊗u，ε(1) = 2，其余结构沿用 B
    """
    if not verify(B, Level.STRICT_BIALGEBRA).passed:
        raise ConstructionError("not-strict-bialgebra", f"{B.label or '输入'} 不是严格双代数")
    n, mult, comult, counit = _adjoin_unit_parts(B)
    H = WeakStructure.from_sparse(n, mult, {0: ONE}, comult, counit, label=f"adjoin-unit({B.label})")
    return _verify_output(H, Level.WEAK_BIALGEBRA)


def adjoin_unit_to_hopf(B: WeakStructure) -> WeakStructure:
    """在 adjoin_unit_to_bialgebra 的基础上令 S(1) = 1"""
    if B.antipode is None or not verify(B, Level.STRICT_HOPF).passed:
        raise ConstructionError("not-hopf", f"{B.label or '输入'} 不是 Hopf 代数")
    n, mult, comult, counit = _adjoin_unit_parts(B)
    antipode = {0: {0: ONE}}
    for i in range(B.dim):
        antipode[i + 1] = _shift(antipode_elem(B, {i: ONE}), 1)
    H = WeakStructure.from_sparse(n, mult, {0: ONE}, comult, counit, antipode,
                                  label=f"adjoin-unit({B.label})")
    return _verify_output(H, Level.WEAK_HOPF)


def two_unit_variant(B: WeakStructure, variant: str, with_antipode: bool = False) -> WeakStructure:
    """
    严格双代数 B（单位元 u）添加 1 与 e，基顺序 (1, e, B 的基)
      a: Δ(1) = 1⊗(e-u) + u⊗(1-2e+2u)，Δ(e) = e⊗(e-u) + u⊗(2u-e)，ε(1) = ε(e) = 2
      b: Δ(1) = (1-e)⊗(1-e) + (e-u)⊗(e-u) + u⊗u，Δ(e) = (e-u)⊗(e-u) + u⊗u，ε(1) = 3，ε(e) = 2
    with_antipode 时要求 B 是 Hopf 代数，并令 S(1) = 1，S(e) = e
    """
    if variant not in ("a", "b"):
        raise ConstructionError("unknown-variant", f"未知的变体 {variant!r}")
    level = Level.STRICT_HOPF if with_antipode else Level.STRICT_BIALGEBRA
    if (with_antipode and B.antipode is None) or not verify(B, level).passed:
        code = "not-hopf" if with_antipode else "not-strict-bialgebra"
        raise ConstructionError(code, f"{B.label or '输入'} 不满足 {level.value}")

    n = B.dim + 2
    mult: Dict[Tuple[int, int], Elem] = {}
    for (i, j), prod in B.mult_table.items():
        mult[(i + 2, j + 2)] = _shift(prod, 2)
    for a in range(1, n):
        mult[(1, a)] = {a: ONE}
        mult[(a, 1)] = {a: ONE}
    _unit_rows(mult, 0, n)

    one, e = {0: ONE}, {1: ONE}
    u = _shift(B.unit_elem, 2)

    def lin(*terms: Tuple[int, Elem]) -> Elem:
        out: Elem = {}
        for coeff, x in terms:
            for k, v in x.items():
                add_into(out, k, Scalar.of(coeff) * v)
        return out

    if variant == "a":
        delta_one = _sum2(_outer(one, lin((1, e), (-1, u))), _outer(u, lin((1, one), (-2, e), (2, u))))
        delta_e = _sum2(_outer(e, lin((1, e), (-1, u))), _outer(u, lin((2, u), (-1, e))))
        eps = (Scalar.of(2), Scalar.of(2))
    else:
        one_minus_e = lin((1, one), (-1, e))
        e_minus_u = lin((1, e), (-1, u))
        delta_one = _sum2(_outer(one_minus_e, one_minus_e), _outer(e_minus_u, e_minus_u), _outer(u, u))
        delta_e = _sum2(_outer(e_minus_u, e_minus_u), _outer(u, u))
        eps = (Scalar.of(3), Scalar.of(2))

    comult = {0: delta_one, 1: delta_e}
    for k in range(B.dim):
        comult[k + 2] = _shift2(B.comult_table[k], 2)
    counit = {0: eps[0], 1: eps[1]}
    counit.update({k + 2: B.counit_values[k] for k in range(B.dim)})
    antipode = None
    if with_antipode:
        antipode = {0: {0: ONE}, 1: {1: ONE}}
        for i in range(B.dim):
            antipode[i + 2] = _shift(antipode_elem(B, {i: ONE}), 2)
    H = WeakStructure.from_sparse(n, mult, {0: ONE}, comult, counit, antipode,
                                  label=f"two-unit-{variant}({B.label})")
    return _verify_output(H, Level.WEAK_HOPF if with_antipode else Level.WEAK_BIALGEBRA)


def try_identity_antipode(H: WeakStructure) -> VerificationReport:
    """令 S = id 后在 weak-hopf 级别验证"""
    return verify(H.with_antipode(Mat.identity(H.dim)), Level.WEAK_HOPF)


# ===============================================
# 具体例子
# ===============================================

def trivial_bialgebra() -> WeakStructure:
    """一维 Hopf 代数 𝕂"""
    return (StructureBuilder(["u"]).unit("u").grouplike("u").counit([1])
            .antipode_identity().build("trivial"))


def group_bialgebra(k: int, with_antipode: bool = True) -> WeakStructure:
    """ℤ/k 的群 Hopf 代数，基 g^0..g^{k-1}"""
    if k < 1:
        raise ConstructionError("dimension-too-small", f"k 必须至少为 1，得到 {k}")
    A = cyclic_group_algebra(k)
    comult = {i: {(i, i): ONE} for i in range(k)}
    counit = {i: ONE for i in range(k)}
    antipode = {i: {(-i) % k: ONE} for i in range(k)} if with_antipode else None
    return WeakStructure.from_sparse(k, A.mult, {0: ONE}, comult, counit, antipode, label=f"Z{k}")


_SWEEDLER_PRODUCTS = {
    "x*x": "0", "x*c": "-cx", "x*cx": "0",
    "c*x": "cx", "c*c": "e", "c*cx": "x",
    "cx*x": "0", "cx*c": "-x", "cx*cx": "0",
}


def sweedler_hopf4() -> WeakStructure:
    """四维 Sweedler Hopf 代数，基 (e, x, c, cx)"""
    return (StructureBuilder(["e", "x", "c", "cx"])
            .unit("e")
            .products(_SWEEDLER_PRODUCTS)
            .grouplike("e", "c")
            .coproduct("x", "c⊗x + x⊗e")
            .coproduct("cx", "e⊗cx + cx⊗c")
            .counit([1, 0, 1, 0])
            .antipode("e", "e").antipode("x", "-cx").antipode("c", "c").antipode("cx", "x")
            .build("sweedler4"))


def sweedler5() -> WeakStructure:
    """五维弱 Hopf 代数，基 (1, e, x, c, cx)，由生成关系直接写出"""
    builder = (StructureBuilder(["one", "e", "x", "c", "cx"])
               .unit("one")
               .products({"e*e": "e", "e*x": "x", "x*e": "x", "e*c": "c", "c*e": "c",
                          "e*cx": "cx", "cx*e": "cx"})
               .products(_SWEEDLER_PRODUCTS)
               .coproduct("one", "(one-e)⊗(one-e) + e⊗e")
               .grouplike("e", "c")
               .coproduct("x", "c⊗x + x⊗e")
               .coproduct("cx", "e⊗cx + cx⊗c")
               .counit([2, 1, 0, 1, 0])
               .antipode("one", "one").antipode("e", "e").antipode("x", "-cx")
               .antipode("c", "c").antipode("cx", "x"))
    return _verify_output(builder.build("sweedler5"), Level.WEAK_HOPF)


def taft_hopf(n: int) -> WeakStructure:
    """
    n² 维 Taft Hopf 代数，λ = ζ_n
    基 c^i x^j 按 j 优先、i 次之排序：下标 j*n + i
    (c^i x^j)(c^k x^l) = λ^{jk} c^{i+k} x^{j+l}，Δ(c) = c⊗c，Δ(x) = c⊗x + x⊗e
    """
    if n < 2:
        raise ConstructionError("dimension-too-small", f"n 必须至少为 2，得到 {n}")
    lam = Scalar.zeta(n)
    dim = n * n

    def idx(i: int, j: int) -> int:
        return j * n + (i % n)

    mult: Dict[Tuple[int, int], Elem] = {}
    for j in range(n):
        for i in range(n):
            for l in range(n):
                for k in range(n):
                    if j + l < n:
                        mult[(idx(i, j), idx(k, l))] = {idx(i + k, j + l): lam ** (j * k)}
    algebra = WeakStructure.from_sparse(dim, mult, {0: ONE}, {}, {})

    c, x, e = idx(1, 0), idx(0, 1), idx(0, 0)
    delta_c = {(c, c): ONE}
    delta_x = {(c, x): ONE, (x, e): ONE}
    comult: Dict[int, Elem2] = {}
    for j in range(n):
        for i in range(n):
            value = {(e, e): ONE}
            for _ in range(i):
                value = mul2(algebra, value, delta_c)
            for _ in range(j):
                value = mul2(algebra, value, delta_x)
            comult[idx(i, j)] = value

    s_c = {idx(n - 1, 0): ONE}
    s_x = {idx(n - 1, 1): -ONE}
    antipode: Dict[int, Elem] = {}
    for j in range(n):
        for i in range(n):
            value: Elem = {e: ONE}
            for _ in range(j):
                value = mul_elem(algebra, value, s_x)
            for _ in range(i):
                value = mul_elem(algebra, value, s_c)
            antipode[idx(i, j)] = value
    counit = {idx(i, 0): ONE for i in range(n)}
    return WeakStructure.from_sparse(dim, mult, {0: ONE}, comult, counit, antipode, label=f"taft{n}")


def taft_weak_hopf(n: int) -> WeakStructure:
    """Taft Hopf 代数添加单位元，维数 n² + 1，基 (1, e, c, ..., x, cx, ...)"""
    return adjoin_unit_to_hopf(taft_hopf(n)).with_label(f"taft-weak({n})")
