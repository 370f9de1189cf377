# -*- coding: utf-8 -*-
"""
文档生成
SWEEDLER.md  五维 Sweedler 弱 Hopf 代数的完整演算
CATALOG.md   分类表条目、验证结果与指纹
PAPER-ERRATA.md  原始表述中的勘误，每一项都附带工具证据和复现命令
同一分类表重复生成得到逐字节相同的文件
"""

import logging
import os
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from . import CATALOG_REVISION, __version__
from . import catalog
from .axioms import PRINTED_FORM_NOTES, AxiomId, Level, ScEquation, cross_check, verify
from .builder import describe_structure
from .catalog import Kind
from .constructions import adjoin_two_units, null_algebra, sweedler5, taft_weak_hopf, try_identity_antipode
from .fingerprint import COMPONENTS, fingerprint
from .structure import counit_on_unit, is_cocommutative, is_commutative
from .transport import is_morphism_witness, permutation_change, stabilizer_tangent_dim

logger = logging.getLogger(__name__)

CLI = "python run_toolkit.py"

_SWEEDLER_NAMES = ("1", "e", "x", "c", "cx")
_SWAP_34 = "[[1,0,0,0,0],[0,1,0,0,0],[0,0,0,1,0],[0,0,1,0,0],[0,0,0,0,1]]"

# (维数, 类型) 按文档中出现的次序
_CLAIM_GROUPS = (
    (2, Kind.WEAK_BIALGEBRA),
    (2, Kind.WEAK_HOPF),
    (3, Kind.WEAK_BIALGEBRA),
    (3, Kind.WEAK_HOPF),
)


@dataclass(frozen=True)
class ErrataItem:
    """一条勘误：位置、原文片段、问题、证据、复现命令"""
    title: str
    location: str
    quote: str
    issue: str
    evidence: Tuple[str, ...]
    repro: str

    def markdown(self, number: int) -> List[str]:
        lines = [
            f"## {number}. {self.title}",
            "",
            f"- 位置: {self.location}",
            f"- 原文: `{self.quote}`",
            f"- 问题: {self.issue}",
            "- 证据:",
        ]
        lines.extend(f"  - {e}" for e in self.evidence)
        lines.append(f"- 复现: `{self.repro}`")
        lines.append("")
        return lines


def _table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> List[str]:
    out = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    out.extend("| " + " | ".join(str(c) for c in row) + " |" for row in rows)
    return out


def _failed(report) -> str:
    failed = report.failed_axioms()
    return "通过" if not failed else "失败: " + ", ".join(a.value for a in failed)


def _axiom_rows(report) -> List[Tuple[str, str, str]]:
    rows = []
    for s in report.statuses:
        witness = "" if s.passed or s.witness is None else str(s.witness)
        rows.append((s.axiom.value, "通过" if s.passed else "失败", witness))
    return rows


# ===============================================
# SWEEDLER.md
# ===============================================

def sweedler_document() -> str:
    H = sweedler5()
    names = list(_SWEEDLER_NAMES)
    weak = verify(H, Level.WEAK_HOPF)
    strict = verify(H, Level.STRICT_BIALGEBRA)
    eps_mult = strict.status(AxiomId.STRICT_EPS_MULT)
    identity = try_identity_antipode(H)
    witness = is_morphism_witness(taft_weak_hopf(2), H, permutation_change((1, 2, 4, 3, 5)))

    lines = [
        "# 五维 Sweedler 弱 Hopf 代数",
        "",
        "在四维 Sweedler Hopf 代数（基 e, x, c, cx；c² = e，x² = 0，xc = -cx）上添加新的单位元 1。",
        "",
        "## 结构",
        "",
        "```",
    ]
    lines.extend(describe_structure(H, names))
    lines += [
        "```",
        "",
        "## 弱 Hopf 公理",
        "",
    ]
    lines.extend(_table(("公理", "结果", "见证"), _axiom_rows(weak)))
    lines += [
        "",
        f"结论: {_failed(weak)}",
        "",
        "## 不是严格双代数",
        "",
        f"- ε(1) = {counit_on_unit(H)}",
        f"- 严格余单位乘性 ε(ab) = ε(a)ε(b): {'成立' if eps_mult.passed else '不成立'}"
        + ("" if eps_mult.passed else f"，见证 {eps_mult.witness}"),
        f"- 严格双代数级别: {_failed(strict)}",
        "",
        "## 性质",
        "",
        f"- 交换: {'是' if is_commutative(H) else '否'}",
        f"- 余交换: {'是' if is_cocommutative(H) else '否'}",
        f"- 令 S = id: {_failed(identity)}",
        "",
        "## 与 Taft 弱 Hopf 代数 (n = 2) 的同构",
        "",
        "Taft 基次序为 (1, e, c, x, cx)，交换第 3、4 个基元素即得上面的基。",
        "",
        f"- 置换见证 (1, 2, 4, 3, 5): {'成立' if witness.passed else '不成立 ' + witness.describe()}",
        f"- 复现: `{CLI} iso witness taft-weak.json sweedler5 --matrix '{_SWAP_34}'`，"
        f"其中 taft-weak.json 由 `{CLI} construct taft-weak --n 2 --out taft-weak.json` 生成",
        "",
    ]
    return "\n".join(lines)


# ===============================================
# CATALOG.md
# ===============================================

def catalog_document() -> str:
    labels = dict(COMPONENTS)
    lines = [
        "# 分类表",
        "",
        f"工具版本 {__version__}，分类表修订 {CATALOG_REVISION}。",
        "",
    ]
    for dim in (2, 3):
        for kind in (Kind.ALGEBRA, Kind.WEAK_BIALGEBRA, Kind.WEAK_HOPF):
            selected = catalog.entries(dim, kind)
            if not selected:
                continue
            report = catalog.verify_entries(selected)
            lines += [f"## {dim} 维 {kind.value}", ""]
            rows = [(e.index, e.algebra, _failed(r)) for e, r in report.reports]
            lines.extend(_table(("编号", "代数", f"{kind.level.value} 验证"), rows))
            lines.append("")
            for e, _ in report.reports:
                lines += [f"### {e.key}", "", "```"]
                lines.extend(describe_structure(e.structure))
                lines += ["```", ""]
                lines.extend(f"> {note}" for note in e.notes)
                if e.notes:
                    lines.append("")
                if kind is not Kind.ALGEBRA:
                    fp = fingerprint(e.structure)
                    lines.extend(_table(("不变量", "值"),
                                        [(labels[name], value) for name, value in fp.to_dict().items()]))
                    lines.append("")
    return "\n".join(lines)


# ===============================================
# PAPER-ERRATA.md
# ===============================================

def _consistency(selected: Sequence[catalog.CatalogEntry], equation: ScEquation) -> str:
    agree = 0
    total = 0
    for e in selected:
        for row in cross_check(e.structure).rows:
            if row.equation is equation:
                total += 1
                agree += row.consistent
    return f"{equation.value} 的完整展开式与映射层面结论在 {agree}/{total} 个分类表条目上一致"


def _claim_evidence(convention: str) -> Tuple[List[str], List[str]]:
    """(各条目状态, 被否定的条目)"""
    statuses = []
    refuted = []
    for dim, kind in _CLAIM_GROUPS:
        for claim in catalog.verify_claims(dim, kind, convention):
            parts = []
            for check in claim.checks:
                text = f"[{check.convention}] {check.status}: {check.detail}"
                if check.witness is not None:
                    text += f"；{check.witness.describe()}"
                if check.witness_point:
                    text += f"；参数 {check.witness_point}"
                parts.append(text)
            statuses.append(f"{claim.entry.key}: {claim.status}（{'；'.join(parts)}）")
            if claim.status == "refuted":
                refuted.append(claim.entry.key)
    return statuses, refuted


def errata_items(convention: str = "columns") -> List[ErrataItem]:
    wb = catalog.entries(None, Kind.WEAK_BIALGEBRA)
    wh = catalog.entries(None, Kind.WEAK_HOPF)

    entry22 = catalog.get(2, Kind.WEAK_BIALGEBRA, 2)
    printed6 = catalog.printed_variant(3, Kind.WEAK_BIALGEBRA, 6)
    label_evidence = []
    for index in (16, 17, 18, 19):
        printed = catalog.printed_variant(3, Kind.WEAK_BIALGEBRA, index)
        entry = catalog.get(3, Kind.WEAK_BIALGEBRA, index)
        label_evidence.append(
            f"条目 {index}: 按 m3^3 {_failed(verify(printed, Level.WEAK_BIALGEBRA))}；"
            f"按印出的乘法表 {_failed(verify(entry.structure, Level.WEAK_BIALGEBRA))}")

    counterexample = adjoin_two_units(null_algebra(1), strict=False)
    semigroup = verify(counterexample, Level.WEAK_BIALGEBRA)
    semigroup_witness = [f"{s.axiom.value} 在 {s.witness} 处不成立，最大残差 {s.max_residual}"
                         for s in semigroup.statuses if not s.passed]

    tangents = [(e.index, stabilizer_tangent_dim(e.structure))
                for e in catalog.entries(3, Kind.WEAK_BIALGEBRA) if e.claim is not None and e.claim.families]
    discrete = [index for index, t in tangents if t == 0]

    claims, refuted = _claim_evidence(convention)
    convention_evidence = [
        f"{c.entry.key}: columns {c.check('columns').status}，rows {c.check('rows').status}"
        for c in catalog.verify_claims(2, Kind.WEAK_BIALGEBRA, convention)
    ]

    return [
        ErrataItem(
            "余单位方程截断",
            "结构常数方程组中的余单位方程",
            r"\sum_{k=1}^{n}D_{i}^{j,k}f_{k}=\displaystyle",
            PRINTED_FORM_NOTES[ScEquation.SC2],
            (_consistency(wb, ScEquation.SC2),),
            f"{CLI} verify catalog:3-weak-bialgebra-12 --cross-check",
        ),
        ErrataItem(
            "弱单位方程的下标接线",
            "结构常数方程组中的弱单位方程",
            r"D_{1}^{s,\ell }D_{\ell }^{r,k}-\sum D_{1}^{p,q}D_{1}^{t,l}C_{1,t}^{s}C_{p,\ell }^{r}C_{q,1}^{k}",
            PRINTED_FORM_NOTES[ScEquation.SC4],
            (_consistency(wb, ScEquation.SC4),),
            f"{CLI} verify catalog:2-weak-bialgebra-2 --cross-check",
        ),
        ErrataItem(
            "弱余单位方程的因子次序",
            "结构常数方程组中的弱余单位方程",
            r"D_{j}^{p,q} C_{q,k}^{r} C_{i,p}^{t} f_{t} f_{r}",
            "印刷形式的因子次序与展开式 ε(x y(1)) ε(y(2) z) 不同，逐项对照后两者含义一致",
            (_consistency(wb, ScEquation.SC5),),
            f"{CLI} verify catalog:3-weak-bialgebra-1 --cross-check",
        ),
        ErrataItem(
            "对极方程的下标",
            "结构常数方程组中的第三个对极方程",
            r"s_{r,m}s_{q,\ell }C_{m,r}^{t}",
            PRINTED_FORM_NOTES[ScEquation.SCS3],
            (_consistency(wh, ScEquation.SCS3),),
            f"{CLI} verify catalog:3-weak-hopf-1 --level weak-hopf --cross-check",
        ),
        ErrataItem(
            "二维条目 (2) 悬空的张量符号",
            "二维弱双代数分类的条目 (2)",
            r"(e_{1}-e_{2})\otimes(e_{1}-e_{2})\otimes  +e_{2}\otimes e_{2}",
            "Δ(e2) 中多出一个 ⊗，没有右因子",
            (f"按 (e1-e2)⊗(e1-e2) + e2⊗e2 抄录后: {_failed(verify(entry22.structure, Level.WEAK_BIALGEBRA))}",),
            f"{CLI} verify catalog:2-weak-bialgebra-2",
        ),
        ErrataItem(
            "三维条目 (6) 的余单位",
            "三维弱双代数分类的条目 (6)",
            r"\varepsilon (e_3)=1",
            "按印刷值 ε(e3) = 1，余单位公理不成立；ε(e3) = 0 时全部公理成立",
            (f"印刷版本: {_failed(verify(printed6, Level.WEAK_BIALGEBRA))}",
             f"抄录版本: {_failed(verify(catalog.get(3, Kind.WEAK_BIALGEBRA, 6).structure, Level.WEAK_BIALGEBRA))}"),
            f"{CLI} catalog verify --dim 3 --kind weak-bialgebra",
        ),
        ErrataItem(
            "三维条目 (16)-(19) 的代数标注",
            "三维弱双代数分类的条目 (16)-(19)",
            "m_3^3",
            "标注为 m3^3，印出的乘法表 (e2·e3 = e3, e3·e2 = 0) 却是 m5^3",
            tuple(label_evidence),
            f"{CLI} catalog show 3-weak-bialgebra-16",
        ),
        ErrataItem(
            "自同构矩阵的约定",
            "二维弱双代数自同构群",
            "are groups of order 2",
            "矩阵按行读（第 i 行是 g(e_i)）时连代数同态都不是；按列读时只对部分条目成立",
            tuple(convention_evidence),
            f"{CLI} catalog claims --dim 2 --kind weak-bialgebra",
        ),
        ErrataItem(
            "添加两个单位的构造需要半群代数",
            "添加单位元与相对单位的构造",
            r"\Delta(a)=a\otimes a",
            "只假定 A 结合时弱余单位公理可能不成立；需要任意两个基元素的乘积仍是基元素",
            (f"输入零乘代数 null:1: {_failed(semigroup)}",) + tuple(semigroup_witness),
            f"{CLI} construct two-units --algebra null:1",
        ),
        ErrataItem(
            "连续自同构族与切空间维数",
            "三维弱双代数分类中带参数的自同构群",
            "θ∈ℤ, α∈ℂ*",
            f"声明含连续参数的条目中，{', '.join(f'({i})' for i in discrete) or '无'} 的自同构群切空间维数为 0，"
            "只有有限多个自同构",
            tuple(f"条目 {index}: 切空间维数 {t}" for index, t in tangents),
            f"{CLI} aut tangent catalog:3-weak-bialgebra-13",
        ),
        ErrataItem(
            "自同构群声明",
            "二维与三维分类的自同构群",
            "is the group of order 6",
            f"主约定 {convention} 下被否定的条目: {', '.join(refuted) or '无'}",
            tuple(claims),
            f"{CLI} catalog claims --dim 3 --kind weak-bialgebra",
        ),
    ]


def errata_document(convention: str = "columns") -> str:
    lines = [
        "# 勘误",
        "",
        f"工具版本 {__version__}，分类表修订 {CATALOG_REVISION}，主矩阵约定 {convention}。",
        "",
    ]
    for number, item in enumerate(errata_items(convention), 1):
        lines.extend(item.markdown(number))
    return "\n".join(lines)


def generate(output_dir: str, convention: str = "columns") -> List[str]:
    """写出三份文档，返回文件路径"""
    os.makedirs(output_dir, exist_ok=True)
    documents = (
        ("SWEEDLER.md", sweedler_document()),
        ("CATALOG.md", catalog_document()),
        ("PAPER-ERRATA.md", errata_document(convention)),
    )
    paths = []
    for name, text in documents:
        path = os.path.join(output_dir, name)
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
        paths.append(path)
        logger.info(f"已生成 {path}")
    return paths
