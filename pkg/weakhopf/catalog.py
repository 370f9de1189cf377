# -*- coding: utf-8 -*-
"""
二维、三维分类表
条目按原表编号；抄录时修正的印刷问题写在条目 notes 中，
原样印刷的版本由 printed_variant 给出，供勘误文档对照
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .axioms import Level, VerificationReport, verify
from .builder import StructureBuilder
from .errors import CatalogError, GroupBoundError
from .exactmath import Mat
from .fingerprint import Fingerprint, Separation, fingerprint, separate
from .structfile import dump_structure
from .structure import WeakStructure
from .transport import (
    BasisChange, ParamMatrix, WitnessResult, check_parametric_automorphism, group_closure,
    is_automorphism, stabilizer_tangent_dim
)

logger = logging.getLogger(__name__)


class Kind(Enum):
    ALGEBRA = "algebra"
    WEAK_BIALGEBRA = "weak-bialgebra"
    WEAK_HOPF = "weak-hopf"

    @property
    def level(self) -> Level:
        return {
            Kind.ALGEBRA: Level.ALGEBRA,
            Kind.WEAK_BIALGEBRA: Level.WEAK_BIALGEBRA,
            Kind.WEAK_HOPF: Level.WEAK_HOPF,
        }[self]

    @classmethod
    def parse(cls, text: str) -> 'Kind':
        try:
            return cls(text)
        except ValueError:
            raise CatalogError(f"未知的条目类型 {text!r}，可选: {', '.join(k.value for k in cls)}")


@dataclass(frozen=True)
class ClaimedAutomorphisms:
    """原表给出的自同构群；矩阵按印刷的行形式保存"""
    generators: Tuple[Mat, ...] = ()
    families: Tuple[ParamMatrix, ...] = ()
    order: Optional[int] = None
    quote: str = ""


@dataclass(frozen=True)
class CatalogEntry:
    dim: int
    kind: Kind
    index: int
    structure: WeakStructure
    algebra: str
    claim: Optional[ClaimedAutomorphisms] = None
    notes: Tuple[str, ...] = ()

    @property
    def key(self) -> str:
        return f"{self.dim}-{self.kind.value}-{self.index}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "key": self.key,
            "dim": self.dim,
            "kind": self.kind.value,
            "index": self.index,
            "algebra": self.algebra,
            "notes": list(self.notes),
        }


# ===============================================
# 代数
# ===============================================

ALGEBRA_TABLES: Dict[str, Dict[str, str]] = {
    "m1^2": {},
    "m2^2": {"e2*e2": "e2"},
    "m1^3": {"e2*e2": "e2", "e2*e3": "e3", "e3*e2": "e3", "e3*e3": "e3"},
    "m2^3": {"e2*e2": "e2", "e2*e3": "e3", "e3*e2": "e3"},
    "m3^3": {"e2*e2": "e2"},
    "m4^3": {},
    "m5^3": {"e2*e2": "e2", "e2*e3": "e3"},
}

_NAMES = {2: ["e1", "e2"], 3: ["e1", "e2", "e3"]}


def _builder(algebra: str) -> StructureBuilder:
    dim = int(algebra[-1])
    return StructureBuilder(_NAMES[dim]).unit("e1").products(ALGEBRA_TABLES[algebra])


def algebra_structure(name: str) -> WeakStructure:
    """单位代数 m_i^n（余代数部分为零）"""
    if name not in ALGEBRA_TABLES:
        raise CatalogError(f"未知的代数 {name}")
    return _builder(name).build(name)


# ===============================================
# 条目数据
# ===============================================

# (编号, 代数, 余乘, 余单位, 对极) ；未列出的余乘视为类群元
_WBA2 = [
    (1, "m2^2", {}, [1, 1]),
    (2, "m2^2", {"e2": "(e1-e2)⊗(e1-e2) + e2⊗e2"}, [1, 1]),
    (3, "m2^2", {"e1": "(e1-e2)⊗(e1-e2) + e2⊗e2"}, [2, 1]),
]

_WBA3 = [
    (1, "m1^3", {"e2": "e1⊗(e1-e3) + e2⊗(2e3-e2) + e3⊗(2e2-e3-e1)",
                 "e3": "e1⊗(e2-e3) + e2⊗(e1-2e2+e3) + e3⊗(e2+e3-e1)"}, [1, 1, 1]),
    (2, "m1^3", {}, [1, 1, 1]),
    (3, "m1^3", {"e3": "(e2-e3)⊗e3 + e3⊗(e2-e3)"}, [1, 1, 0]),
    (4, "m1^3", {"e2": "(e2-e3)⊗e3 + e3⊗e2"}, [1, 1, 1]),
    (5, "m1^3", {"e2": "e2⊗e2 + (e1-e2)⊗e3", "e3": "(e1-e3)⊗e3 + e3⊗e2"}, [1, 1, 0]),
    (6, "m1^3", {"e2": "e2⊗e2 + e3⊗(e1-e2)", "e3": "e2⊗e3 + e3⊗e1 - e3⊗e3"}, [1, 1, 0]),
    (7, "m1^3", {"e2": "(e1-e2)⊗(e1-e2) + e2⊗e2"}, [1, 1, 1]),
    (8, "m1^3", {"e1": "(e1-e2)⊗(e1-e2) + e2⊗e2"}, [2, 1, 1]),
    (9, "m1^3", {"e1": "(e1-e2)⊗(e1-e2) + e2⊗e2", "e3": "(e2-e3)⊗e3 + e3⊗(e2-e3)"}, [2, 1, 0]),
    (10, "m1^3", {"e1": "(e1-e2)⊗(e1-e2) + (e2-e3)⊗(e2-e3) + e3⊗e3",
                  "e2": "(e2-e3)⊗(e2-e3) + e3⊗e3"}, [3, 2, 1]),
    (11, "m1^3", {"e1": "e1⊗(e2-e3) + e3⊗(e1-2e2+2e3)",
                  "e2": "(e2-e3)⊗(e2-e3) + e3⊗e3"}, [2, 2, 1]),
    (12, "m2^3", {"e2": "e1⊗e2 + e2⊗e1 - e2⊗e2", "e3": "e1⊗e3 + e3⊗e1 - e3⊗e2"}, [1, 0, 0]),
    (13, "m2^3", {"e2": "e1⊗e2 + e2⊗e1 - e2⊗e2",
                  "e3": "e1⊗e3 - e2⊗e3 + e3⊗e1 - e3⊗e2 + e3⊗e3"}, [1, 0, 0]),
    (14, "m2^3", {"e2": "e1⊗e2 + e2⊗e1 - e2⊗e2", "e3": "e1⊗e3 - e2⊗e3 + e3⊗e1"}, [1, 0, 0]),
    (15, "m2^3", {"e2": "e1⊗e2 + e2⊗e1 - e2⊗e2",
                  "e3": "e1⊗e3 - e3⊗e2 + e3⊗e1 - e2⊗e3"}, [1, 0, 0]),
    (16, "m5^3", {"e1": "(e1-e2)⊗(e1-e2) + e2⊗e2"}, [2, 1, 1]),
    (17, "m5^3", {"e2": "e1⊗e2 + e2⊗e1 - e2⊗e2",
                  "e3": "e1⊗e3 + e3⊗e1 - e2⊗e3 - e3⊗e2"}, [1, 0, 0]),
    (18, "m5^3", {"e2": "e1⊗e2 + e2⊗e1 - e2⊗e2 - e3⊗e3",
                  "e3": "e1⊗e3 - e2⊗e3 + e3⊗e1 - e3⊗e2"}, [1, 0, 0]),
    (19, "m5^3", {"e3": "e2⊗e3 + e3⊗e2"}, [1, 1, 0]),
    (20, "m5^3", {"e2": "e2⊗e2 + e3⊗e3", "e3": "e2⊗e3 + e3⊗e2"}, [1, 1, 0]),
]

_WHA3_1 = ("m1^3", {"e2": "e1⊗e2 + e2⊗e1 - e2⊗e2 - e2⊗e3 - e3⊗e2 + 2e3⊗e3",
                    "e3": "e1⊗e3 + e2⊗e2 - 2e2⊗e3 + e3⊗e1 - 2e3⊗e2 + e3⊗e3"}, [1, 0, 0])

_NOTES: Dict[Tuple[int, Kind, int], Tuple[str, ...]] = {
    (2, Kind.WEAK_BIALGEBRA, 2): (
        "原表 Δ(e2) 印作 \"(e1-e2)⊗(e1-e2)⊗ + e2⊗e2\"，多出一个悬空的 ⊗，按 (e1-e2)⊗(e1-e2) + e2⊗e2 抄录",),
    (3, Kind.WEAK_BIALGEBRA, 6): (
        "原表印作 ε(e3) = 1，此时余单位公理不成立；按 ε(e3) = 0 抄录",),
}
for _i in (16, 17, 18, 19):
    _NOTES[(3, Kind.WEAK_BIALGEBRA, _i)] = (
        "原表标注代数 m3^3，但印出的乘法表 (e2·e3 = e3, e3·e2 = 0) 是 m5^3 的；按印出的乘法表抄录",)

_ALGEBRA_LABEL = {(3, Kind.WEAK_BIALGEBRA, i): "m3^3" for i in (16, 17, 18, 19)}


def _build(dim: int, algebra: str, comult: Dict[str, str], counit: Sequence[int],
           antipode: Optional[Dict[str, str]], label: str) -> WeakStructure:
    builder = _builder(algebra)
    for name in _NAMES[dim]:
        if name in comult:
            builder.coproduct(name, comult[name])
        else:
            builder.grouplike(name)
    builder.counit(counit)
    if antipode is not None:
        for name in _NAMES[dim]:
            builder.antipode(name, antipode.get(name, name))
    return builder.build(label)


_ORDER2 = Mat.of([[1, 1], [0, -1]])
_GEN_A = Mat.of([[1, 0, 0], [0, 1, 1], [0, 0, -1]])
_GEN_B = Mat.of([[1, 1, 0], [0, 0, 1], [0, -1, -1]])

_CLAIM_DIM2 = ClaimedAutomorphisms((_ORDER2,), order=2, quote="are groups of order 2")
_CLAIM_ORDER6 = ClaimedAutomorphisms((_GEN_A, _GEN_B), order=6, quote="the group of order 6")
_CLAIM_SCALING = ClaimedAutomorphisms(
    families=(ParamMatrix((("1", "0", "0"), ("0", "1", "0"), ("0", "0", "alpha")), ("alpha",), ("alpha",)),),
    quote="θ∈ℤ, α∈ℂ*")


def _root_family(sign_r: str, radicand: str) -> ClaimedAutomorphisms:
    families = tuple(
        ParamMatrix((("1", "0", "0"), ("0", "1", "0"), ("0", f"{sign_r}r/2", f"{pm}sqrt({radicand})/2")),
                    ("r", "e"), (radicand,))
        for pm in ("", "-"))
    return ClaimedAutomorphisms(families=families, quote=f"{radicand}≠0")


def _claim(dim: int, kind: Kind, index: int) -> Optional[ClaimedAutomorphisms]:
    if kind is Kind.ALGEBRA:
        return None
    if dim == 2:
        return _CLAIM_DIM2
    if kind is Kind.WEAK_HOPF or index <= 11:
        return _CLAIM_ORDER6
    if index == 18:
        return _root_family("-", "4*e - r**2")
    if index == 20:
        return _root_family("", "4*e + r**2")
    return _CLAIM_SCALING


@lru_cache(maxsize=None)
def _entries() -> Tuple[CatalogEntry, ...]:
    out: List[CatalogEntry] = []

    def add(dim: int, kind: Kind, index: int, algebra: str, structure: WeakStructure) -> None:
        key = (dim, kind, index)
        out.append(CatalogEntry(dim, kind, index, structure, _ALGEBRA_LABEL.get(key, algebra),
                                _claim(dim, kind, index), _NOTES.get(key, ())))

    for i, name in enumerate(("m1^2", "m2^2"), 1):
        add(2, Kind.ALGEBRA, i, name, algebra_structure(name))
    for i, name in enumerate(("m1^3", "m2^3", "m3^3", "m4^3", "m5^3"), 1):
        add(3, Kind.ALGEBRA, i, name, algebra_structure(name))

    rows2 = {index: (algebra, comult, counit) for index, algebra, comult, counit in _WBA2}
    for index, (algebra, comult, counit) in rows2.items():
        add(2, Kind.WEAK_BIALGEBRA, index, algebra,
            _build(2, algebra, comult, counit, None, f"2-weak-bialgebra-{index}"))
    for whopf, source in ((1, 2), (2, 3)):
        algebra, comult, counit = rows2[source]
        add(2, Kind.WEAK_HOPF, whopf, algebra, _build(2, algebra, comult, counit, {}, f"2-weak-hopf-{whopf}"))

    rows3 = {index: (algebra, comult, counit) for index, algebra, comult, counit in _WBA3}
    for index, (algebra, comult, counit) in rows3.items():
        add(3, Kind.WEAK_BIALGEBRA, index, algebra,
            _build(3, algebra, comult, counit, None, f"3-weak-bialgebra-{index}"))
    algebra, comult, counit = _WHA3_1
    add(3, Kind.WEAK_HOPF, 1, algebra,
        _build(3, algebra, comult, counit, {"e3": "e2 - e3"}, "3-weak-hopf-1"))
    for whopf, source in ((2, 9), (3, 10)):
        algebra, comult, counit = rows3[source]
        add(3, Kind.WEAK_HOPF, whopf, algebra,
            _build(3, algebra, comult, counit, {}, f"3-weak-hopf-{whopf}"))
    return tuple(out)


def entries(dim: Optional[int] = None, kind: Optional[Kind] = None) -> List[CatalogEntry]:
    """按维数和类型筛选条目，保持原表顺序"""
    return [e for e in _entries()
            if (dim is None or e.dim == dim) and (kind is None or e.kind is kind)]


def get(dim: int, kind: Kind, index: int) -> CatalogEntry:
    for entry in _entries():
        if (entry.dim, entry.kind, entry.index) == (dim, kind, index):
            return entry
    raise CatalogError(f"分类表中没有条目 dim={dim}, kind={kind.value}, index={index}")


def parse_key(text: str) -> CatalogEntry:
    """解析 "3-weak-bialgebra-12" 形式的条目名"""
    try:
        dim_text, rest = text.split("-", 1)
        kind_text, index_text = rest.rsplit("-", 1)
        return get(int(dim_text), Kind.parse(kind_text), int(index_text))
    except ValueError:
        raise CatalogError(f"无法解析条目名 {text!r}，格式如 3-weak-bialgebra-12")


def printed_variant(dim: int, kind: Kind, index: int) -> Optional[WeakStructure]:
    """原样印刷的版本；与抄录版本相同时返回 None"""
    if (dim, kind, index) == (3, Kind.WEAK_BIALGEBRA, 6):
        _, algebra, comult, _ = _WBA3[5]
        return _build(3, algebra, comult, [1, 1, 1], None, "3-weak-bialgebra-6-printed")
    if (dim, kind) == (3, Kind.WEAK_BIALGEBRA) and index in (16, 17, 18, 19):
        _, _, comult, counit = _WBA3[index - 1]
        return _build(3, "m3^3", comult, counit, None, f"3-weak-bialgebra-{index}-printed")
    return None


# ===============================================
# 验证
# ===============================================

@dataclass(frozen=True)
class CatalogReport:
    reports: Tuple[Tuple[CatalogEntry, VerificationReport], ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for _, r in self.reports)

    def failures(self) -> List[Tuple[CatalogEntry, VerificationReport]]:
        return [(e, r) for e, r in self.reports if not r.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "entries": [{"key": e.key, "passed": r.passed, "report": r.to_dict()} for e, r in self.reports]
        }


def verify_entries(selected: Sequence[CatalogEntry], max_workers: int = 1) -> CatalogReport:
    reports = tuple((e, verify(e.structure, e.kind.level, max_workers)) for e in selected)
    report = CatalogReport(reports)
    logger.info(f"分类表验证完成: {len(reports)} 个条目，失败 {len(report.failures())} 个")
    return report


def verify_all(max_workers: int = 1) -> CatalogReport:
    """按各自类型的级别验证全部条目"""
    return verify_entries(entries(), max_workers)


# ===============================================
# 自同构声明
# ===============================================

@dataclass(frozen=True)
class ClaimCheck:
    """一种矩阵约定下的检查结果"""
    convention: str
    status: str
    detail: str
    order: Optional[int] = None
    tangent_dim: Optional[int] = None
    witness: Optional[WitnessResult] = None
    witness_point: Optional[Dict[str, str]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "convention": self.convention,
            "status": self.status,
            "detail": self.detail,
            "order": self.order,
            "tangent_dim": self.tangent_dim,
            "witness": self.witness.to_dict() if self.witness is not None else None,
            "witness_point": self.witness_point,
        }


@dataclass(frozen=True)
class ClaimStatus:
    entry: CatalogEntry
    primary: str
    checks: Tuple[ClaimCheck, ...]

    @property
    def status(self) -> str:
        return next(c.status for c in self.checks if c.convention == self.primary)

    def check(self, convention: str) -> ClaimCheck:
        return next(c for c in self.checks if c.convention == convention)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "key": self.entry.key,
            "status": self.status,
            "primary_convention": self.primary,
            "checks": [c.to_dict() for c in self.checks]
        }


def _check_finite(H: WeakStructure, claim: ClaimedAutomorphisms, convention: str,
                  group_bound: int) -> ClaimCheck:
    changes = [BasisChange(m, convention) for m in claim.generators]
    for n, g in enumerate(changes, 1):
        result = is_automorphism(H, g)
        if not result.passed:
            return ClaimCheck(convention, "refuted", f"第 {n} 个生成元不是自同构", witness=result)
    try:
        order = len(group_closure([g.columns for g in changes], group_bound))
    except GroupBoundError:
        return ClaimCheck(convention, "inconclusive", f"生成的群超过上界 {group_bound}")
    tangent = stabilizer_tangent_dim(H)
    if claim.order is not None and order != claim.order:
        return ClaimCheck(convention, "refuted", f"生成的群阶为 {order}，声明为 {claim.order}",
                          order, tangent)
    if tangent > 0:
        return ClaimCheck(convention, "refuted", f"自同构群的切空间维数为 {tangent}，不是有限群",
                          order, tangent)
    return ClaimCheck(convention, "confirmed", f"生成元都是自同构，生成 {order} 阶群", order, tangent)


def _check_families(H: WeakStructure, claim: ClaimedAutomorphisms, convention: str,
                    samples: int) -> ClaimCheck:
    statuses = []
    for P in claim.families:
        result = check_parametric_automorphism(H, P, samples, convention)
        if result.status == "fail":
            return ClaimCheck(convention, "refuted", f"参数族 {list(P.entries)} 在容许点上不是自同构",
                              witness=result.witness, witness_point=result.witness_point)
        statuses.append(result)
    if all(r.status == "pass" for r in statuses):
        return ClaimCheck(convention, "confirmed", "参数族在次数上界网格上全部成立，恒为自同构")
    checked = sum(r.admissible_passed for r in statuses)
    logger.warning(f"{H.label}: 参数族含无理表达式，只在 {checked} 个有理点上成立")
    return ClaimCheck(convention, "inconclusive", f"只在 {checked} 个有理容许点上检查通过")


def verify_claim(entry: CatalogEntry, convention: str = "columns", samples: int = 5,
                 group_bound: int = 1000) -> ClaimStatus:
    """在两种矩阵约定下检查条目的自同构声明，主结论取 convention"""
    if entry.claim is None:
        raise CatalogError(f"条目 {entry.key} 没有自同构声明")
    checks = []
    for conv in ("columns", "rows"):
        if entry.claim.generators:
            checks.append(_check_finite(entry.structure, entry.claim, conv, group_bound))
        else:
            checks.append(_check_families(entry.structure, entry.claim, conv, samples))
    status = ClaimStatus(entry, convention, tuple(checks))
    logger.debug(f"自同构声明 {entry.key}: {status.status}")
    return status


def verify_claims(dim: int, kind: Kind, convention: str = "columns", samples: int = 5,
                  group_bound: int = 1000) -> List[ClaimStatus]:
    return [verify_claim(e, convention, samples, group_bound)
            for e in entries(dim, kind) if e.claim is not None]


# ===============================================
# 导出
# ===============================================

def export(entry: CatalogEntry, path: str) -> None:
    """把条目写成规范结构文件"""
    with open(path, "w", encoding="utf-8") as f:
        f.write(dump_structure(entry.structure))
    logger.info(f"条目 {entry.key} 已导出到 {path}")


# ===============================================
# 指纹与区分
# ===============================================

@lru_cache(maxsize=None)
def fingerprints(dim: int, kind: Kind) -> Tuple[Tuple[CatalogEntry, Fingerprint], ...]:
    return tuple((e, fingerprint(e.structure)) for e in entries(dim, kind))


def pairwise_separation(dim: int, kind: Kind) -> List[Separation]:
    """同一维数、类型的条目两两比较指纹"""
    seps = separate([(e.key, fp) for e, fp in fingerprints(dim, kind)])
    unseparated = [s for s in seps if not s.separated]
    logger.info(f"{dim} 维 {kind.value}: {len(seps)} 对中 {len(unseparated)} 对无法区分")
    return seps


def match_fingerprint(fp: Fingerprint, dim: int, kind: Kind = Kind.WEAK_BIALGEBRA) -> List[int]:
    """指纹与 fp 完全一致的条目编号"""
    return [e.index for e, other in fingerprints(dim, kind) if other == fp]
