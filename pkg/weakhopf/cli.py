# -*- coding: utf-8 -*-
"""
命令行入口
退出码：0 成功/通过，1 验证失败或声明被否定，2 输入错误，3 无法判定
"""

import argparse
import json
import logging
import os
import sys
from typing import Any, Callable, Dict, List, Optional, Tuple

from . import CATALOG_REVISION, __version__
from . import catalog, constructions
from .axioms import Level, cross_check, verify
from .builder import describe_structure
from .catalog import Kind
from .config import ConfigManager, setup_logging
from .errata import generate
from .errors import ConstructionError, ToolkitError
from .fingerprint import COMPONENTS, fingerprint, first_difference
from .search import SearchSpec, enumerate_structures, estimate, parse_freeze, write_results
from .structfile import load_structure, parse_matrix, save_structure, structure_to_dict
from .structure import WeakStructure
from .transport import (
    CONVENTIONS, BasisChange, ParamMatrix, check_parametric_automorphism, group_closure,
    is_automorphism, is_morphism_witness, stabilizer_tangent_dim, transport
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_INCONCLUSIVE = 3


class _Context:
    """一次命令执行的配置与输出方式"""

    def __init__(self, args: argparse.Namespace, config: ConfigManager):
        self.args = args
        self.config = config
        self.report = args.report or config.get('report.format', 'text')
        self.conductor = args.conductor

    def emit(self, payload: Dict[str, Any], lines: List[str]) -> None:
        if self.report == 'json':
            print(json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True))
        else:
            for line in lines:
                print(line)

    def convention(self) -> str:
        return getattr(self.args, 'convention', None) or self.config.get('transport.convention', 'columns')


# ===============================================
# 输入解析
# ===============================================

def _semigroup(text: Optional[str]) -> Optional[constructions.RawAlgebra]:
    """null:N | max:N | leftzero:N | rightzero:N | rect:PxQ | cyclic:K | empty"""
    if text is None or text == 'empty':
        return None
    name, _, arg = text.partition(':')
    makers: Dict[str, Callable[[str], constructions.RawAlgebra]] = {
        'null': lambda a: constructions.null_algebra(int(a)),
        'max': lambda a: constructions.max_semilattice(int(a)),
        'leftzero': lambda a: constructions.left_zero_band(int(a)),
        'rightzero': lambda a: constructions.right_zero_band(int(a)),
        'rect': lambda a: constructions.rectangular_band(*(int(x) for x in a.split('x'))),
        'cyclic': lambda a: constructions.cyclic_group_algebra(int(a)),
    }
    if name not in makers:
        raise ToolkitError(f"未知的输入代数 {text!r}，可选: {', '.join(makers)}, empty")
    try:
        return makers[name](arg)
    except (TypeError, ValueError) as e:
        if isinstance(e, ToolkitError):
            raise
        raise ToolkitError(f"输入代数参数错误 {text!r}: {e}")


def load_ref(ref: str, conductor: Optional[int] = None) -> WeakStructure:
    """
    结构引用：
      catalog:KEY    分类表条目，如 catalog:3-weak-bialgebra-12
      trivial / sweedler4 / sweedler5 / group:K / taft:N
      其他           结构文件路径
    """
    name, _, arg = ref.partition(':')
    try:
        if name == 'catalog' and arg:
            return catalog.parse_key(arg).structure
        if ref == 'trivial':
            return constructions.trivial_bialgebra()
        if ref == 'sweedler4':
            return constructions.sweedler_hopf4()
        if ref == 'sweedler5':
            return constructions.sweedler5()
        if name == 'group' and arg:
            return constructions.group_bialgebra(int(arg))
        if name == 'taft' and arg:
            return constructions.taft_hopf(int(arg))
    except ValueError as e:
        if isinstance(e, ToolkitError):
            raise
        raise ToolkitError(f"无法解析结构引用 {ref!r}: {e}")
    return load_structure(ref, conductor)


def _matrix(ctx: _Context, text: str) -> BasisChange:
    return BasisChange(parse_matrix(text, ctx.conductor), ctx.convention())


# ===============================================
# 报告文本
# ===============================================

def _report_lines(report) -> List[str]:
    lines = [f"{report.label or '(未命名)'} @ {report.level.value}: {'通过' if report.passed else '失败'}"]
    for s in report.statuses:
        if s.passed:
            lines.append(f"  {s.axiom.value:<22} 通过")
        elif s.note:
            lines.append(f"  {s.axiom.value:<22} 失败 ({s.note})")
        else:
            lines.append(f"  {s.axiom.value:<22} 失败  见证 {s.witness}  最大残差 {s.max_residual}")
    return lines


def _structure_lines(H: WeakStructure) -> List[str]:
    header = f"{H.label or '(未命名)'}  维数 {H.dim}  导子 {H.conductor}"
    return [header] + ["  " + line for line in describe_structure(H)]


# ===============================================
# 子命令
# ===============================================

def cmd_verify(ctx: _Context) -> int:
    args = ctx.args
    H = load_ref(args.structure, ctx.conductor)
    report = verify(H, Level.parse(args.level), ctx.config.get('search.max_workers', 1))
    payload: Dict[str, Any] = {"verification": report.to_dict()}
    lines = _report_lines(report)
    ok = report.passed
    if args.cross_check:
        cc = cross_check(H)
        payload["cross_check"] = cc.to_dict()
        lines.append(f"结构常数交叉检查: {'一致' if cc.consistent else '不一致'}")
        ok = ok and cc.consistent
    ctx.emit(payload, lines)
    return EXIT_OK if ok else EXIT_FAILED


def _construct_table() -> Dict[str, Tuple[str, Callable[[argparse.Namespace], WeakStructure]]]:
    return {
        'two-units': ("添加两个单位（--algebra 指定半群代数）",
                      lambda a: constructions.adjoin_two_units(_semigroup(a.algebra))),
        'chain': ("链式构造（--p，--algebra 指定 B2）",
                  lambda a: constructions.chain_construction(a.p, _semigroup(a.algebra))),
        'max-algebra': ("max 代数上的弱 Hopf 代数（--n）",
                        lambda a: constructions.max_algebra_whopf(a.n)),
        'orthogonal-idempotents': ("正交幂等元例子（--n，--k）",
                                   lambda a: constructions.orthogonal_idempotents_example(a.n, a.k)),
        'orthogonal-idempotents-whopf': ("正交幂等元基下的弱 Hopf 代数（--n）",
                                         lambda a: constructions.orthogonal_idempotents_whopf(a.n)),
        'adjoin-unit': ("严格双代数添加单位元（--input）",
                        lambda a: constructions.adjoin_unit_to_bialgebra(load_ref(a.input))),
        'adjoin-unit-hopf': ("Hopf 代数添加单位元（--input）",
                             lambda a: constructions.adjoin_unit_to_hopf(load_ref(a.input))),
        'two-unit-a': ("添加两个单位的变体 a（--input，--with-antipode）",
                       lambda a: constructions.two_unit_variant(load_ref(a.input), 'a', a.with_antipode)),
        'two-unit-b': ("添加两个单位的变体 b（--input，--with-antipode）",
                       lambda a: constructions.two_unit_variant(load_ref(a.input), 'b', a.with_antipode)),
        'group': ("ℤ/k 群 Hopf 代数（--k）", lambda a: constructions.group_bialgebra(a.k)),
        'sweedler4': ("四维 Sweedler Hopf 代数", lambda a: constructions.sweedler_hopf4()),
        'sweedler5': ("五维 Sweedler 弱 Hopf 代数", lambda a: constructions.sweedler5()),
        'taft': ("Taft Hopf 代数（--n）", lambda a: constructions.taft_hopf(a.n)),
        'taft-weak': ("Taft 弱 Hopf 代数（--n）", lambda a: constructions.taft_weak_hopf(a.n)),
    }


def cmd_construct(ctx: _Context) -> int:
    args = ctx.args
    table = _construct_table()
    if args.name == 'list':
        ctx.emit({"constructions": {name: desc for name, (desc, _) in table.items()}},
                 [f"{name:<30} {desc}" for name, (desc, _) in table.items()])
        return EXIT_OK
    if args.name not in table:
        raise ToolkitError(f"未知的构造 {args.name!r}，用 construct list 查看")
    try:
        H = table[args.name][1](args)
    except ConstructionError as e:
        if e.code != "output-failed-verification":
            raise
        ctx.emit({"error": e.code, "verification": e.report.to_dict()}, [str(e)] + _report_lines(e.report))
        return EXIT_FAILED
    if args.out:
        save_structure(H, args.out)
    level = Level.WEAK_HOPF if H.antipode is not None else Level.WEAK_BIALGEBRA
    report = verify(H, level)
    ctx.emit({"label": H.label, "dim": H.dim, "out": args.out, "verification": report.to_dict()},
             _structure_lines(H) + _report_lines(report))
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_transport(ctx: _Context) -> int:
    args = ctx.args
    H = load_ref(args.structure, ctx.conductor)
    moved = transport(H, _matrix(ctx, args.matrix))
    if args.out:
        save_structure(moved, args.out)
    ctx.emit({"structure": structure_to_dict(moved), "out": args.out}, _structure_lines(moved))
    return EXIT_OK


def cmd_aut(ctx: _Context) -> int:
    args = ctx.args
    if args.aut_command == 'check':
        H = load_ref(args.structure, ctx.conductor)
        if args.family:
            entries = tuple(tuple(str(e) for e in row) for row in json.loads(args.family))
            params = tuple(p for p in (args.params or '').split(',') if p)
            nonzero = tuple(p for p in (args.nonzero or '').split(',') if p)
            P = ParamMatrix(entries, params, nonzero)
            samples = args.samples or ctx.config.get('parametric.samples', 5)
            result = check_parametric_automorphism(H, P, samples, ctx.convention())
            ctx.emit(result.to_dict(), [f"参数族检查: {result.status}，容许点 {result.points_checked} 个，求值 {result.points_evaluated} 个点"]
                     + ([f"  反例参数 {result.witness_point}: {result.witness.describe()}"]
                        if result.witness is not None else []))
            return {"pass": EXIT_OK, "fail": EXIT_FAILED}.get(result.status, EXIT_INCONCLUSIVE)
        result = is_automorphism(H, _matrix(ctx, args.matrix))
        ctx.emit(result.to_dict(), ["自同构: 是" if result.passed else f"自同构: 否  {result.describe()}"])
        return EXIT_OK if result.passed else EXIT_FAILED
    if args.aut_command == 'group':
        matrices = json.loads(args.matrices)
        gens = [BasisChange(parse_matrix(json.dumps(m), ctx.conductor), ctx.convention()).columns
                for m in matrices]
        bound = args.bound or ctx.config.get('transport.group_bound', 1000)
        group = group_closure(gens, bound)
        ctx.emit({"order": len(group), "elements": [str(g) for g in group]},
                 [f"群阶: {len(group)}"] + [f"  {g}" for g in group])
        return EXIT_OK
    H = load_ref(args.structure, ctx.conductor)
    tangent = stabilizer_tangent_dim(H)
    orbit = H.dim ** 2 - tangent
    ctx.emit({"tangent_dim": tangent, "orbit_dim": orbit},
             [f"自同构群切空间维数: {tangent}", f"轨道维数: {orbit}"])
    return EXIT_OK


def _selected(args) -> List[catalog.CatalogEntry]:
    kind = Kind.parse(args.kind) if getattr(args, 'kind', None) else None
    return catalog.entries(getattr(args, 'dim', None), kind)


def cmd_catalog(ctx: _Context) -> int:
    args = ctx.args
    sub = args.catalog_command
    if sub == 'list':
        rows = _selected(args)
        ctx.emit({"entries": [e.to_dict() for e in rows]},
                 [f"{e.key:<22} {e.algebra:<6} {'; '.join(e.notes)}" for e in rows])
        return EXIT_OK
    if sub == 'show':
        entry = catalog.parse_key(args.key)
        ctx.emit({"entry": entry.to_dict(), "structure": structure_to_dict(entry.structure)},
                 _structure_lines(entry.structure) + [f"  注: {n}" for n in entry.notes])
        return EXIT_OK
    if sub == 'verify':
        report = catalog.verify_entries(_selected(args), ctx.config.get('search.max_workers', 1))
        lines = [f"{e.key:<22} {'通过' if r.passed else '失败 ' + ', '.join(a.value for a in r.failed_axioms())}"
                 for e, r in report.reports]
        ctx.emit(report.to_dict(), lines)
        return EXIT_OK if report.passed else EXIT_FAILED
    if sub == 'fingerprint':
        entry = catalog.parse_key(args.key)
        fp = fingerprint(entry.structure)
        labels = dict(COMPONENTS)
        ctx.emit({"key": entry.key, "fingerprint": fp.to_dict()},
                 [f"{labels[name]:<18} {value}" for name, value in fp.to_dict().items()])
        return EXIT_OK
    if sub == 'separation':
        seps = catalog.pairwise_separation(args.dim, Kind.parse(args.kind))
        ctx.emit({"pairs": [s.to_dict() for s in seps]},
                 [f"{s.first} / {s.second}: {s.component or 'inconclusive'}" for s in seps])
        return EXIT_OK if all(s.separated for s in seps) else EXIT_INCONCLUSIVE
    if sub == 'claims':
        claims = catalog.verify_claims(
            args.dim, Kind.parse(args.kind), ctx.convention(),
            ctx.config.get('parametric.samples', 5), ctx.config.get('transport.group_bound', 1000))
        lines = []
        for c in claims:
            lines.append(f"{c.entry.key:<22} {c.status}")
            for check in c.checks:
                witness = f"  {check.witness.describe()}" if check.witness is not None else ""
                lines.append(f"    [{check.convention}] {check.status}: {check.detail}{witness}")
        ctx.emit({"claims": [c.to_dict() for c in claims]}, lines)
        statuses = {c.status for c in claims}
        if "refuted" in statuses:
            return EXIT_FAILED
        return EXIT_INCONCLUSIVE if "inconclusive" in statuses else EXIT_OK
    entry = catalog.parse_key(args.key)
    catalog.export(entry, args.out)
    ctx.emit({"key": entry.key, "out": args.out}, [f"{entry.key} 已导出到 {args.out}"])
    return EXIT_OK


def cmd_search(ctx: _Context) -> int:
    args = ctx.args
    base = catalog.algebra_structure(args.algebra)
    if base.dim != args.dim:
        raise ToolkitError(f"代数 {args.algebra} 的维数是 {base.dim}，与 --dim {args.dim} 不一致")
    max_dim = ctx.config.get('search.max_dim', 3)
    if args.dim > max_dim:
        raise ToolkitError(f"搜索维数 {args.dim} 超过配置上限 {max_dim}")
    coeffs = args.coeffs.split(',') if args.coeffs else ctx.config.get('search.coefficients')
    spec = SearchSpec.create(base, coeffs, parse_freeze(args.freeze or ''), args.algebra)
    budget = args.budget or ctx.config.get('search.budget', 100_000_000)
    if args.estimate_only:
        est = estimate(spec)
        ctx.emit({**est.to_dict(), "budget": budget, "over_budget": est.over_budget(budget)},
                 [f"剪枝前候选数: {est.pre_prune}", f"余单位剪枝后: {est.after_counit}",
                  f"预算 {budget}: {'超出' if est.over_budget(budget) else '可行'}"])
        return EXIT_OK
    workers = args.workers or ctx.config.get('search.max_workers', 1)
    result = enumerate_structures(spec, budget, workers, prune=not args.no_prune)
    if args.out:
        write_results(result, args.out)
    summary = result.summary()
    lines = [f"候选总数 {summary['candidates_total']}，余单位剪枝后 {summary['candidates_after_counit']}，"
             f"弱双代数 {summary['survivors']} 个"]
    for c in result.classes:
        lines.append(f"  {c.count:>5} 个  对应条目 {list(c.matched) or '无'}  {c.key}")
    ctx.emit(summary, lines)
    return EXIT_OK


def cmd_iso(ctx: _Context) -> int:
    args = ctx.args
    H1 = load_ref(args.first, ctx.conductor)
    H2 = load_ref(args.second, ctx.conductor)
    if args.iso_command == 'witness':
        result = is_morphism_witness(H1, H2, _matrix(ctx, args.matrix))
        ctx.emit(result.to_dict(), ["见证成立" if result.passed else f"见证不成立  {result.describe()}"])
        return EXIT_OK if result.passed else EXIT_FAILED
    component = first_difference(fingerprint(H1), fingerprint(H2))
    ctx.emit({"separated_by": component or "inconclusive"},
             [f"由 {component} 区分，不同构" if component else "指纹相同，无法判定"])
    return EXIT_OK if component else EXIT_INCONCLUSIVE


def cmd_docs(ctx: _Context) -> int:
    out_dir = ctx.args.out or ctx.config.get('docs.output_dir', 'docs')
    paths = generate(out_dir, ctx.convention())
    ctx.emit({"written": paths}, [f"已生成 {p}" for p in paths])
    return EXIT_OK


# ===============================================
# 参数解析
# ===============================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='weakhopf', description='弱双代数与弱 Hopf 代数精确计算工具')
    parser.add_argument('--version', action='version',
                        version=f'weakhopf {__version__} (catalog revision {CATALOG_REVISION})')
    parser.add_argument('--config', '-c', help='配置文件路径（默认读取 config.json，不存在时使用内置默认值）')
    parser.add_argument('--log-level', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'], help='日志级别')
    parser.add_argument('--report', choices=['text', 'json'], help='报告格式')
    parser.add_argument('--conductor', type=int, help='标量所在分圆域 ℚ(ζ_N) 的 N')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('verify', help='验证结构')
    p.add_argument('structure', help='结构文件或引用（catalog:KEY, sweedler5, group:K ...）')
    p.add_argument('--level', default='weak-bialgebra', help='验证级别')
    p.add_argument('--cross-check', action='store_true', help='同时做结构常数交叉检查')
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser('construct', help='运行构造')
    p.add_argument('name', help='构造名，list 列出全部')
    p.add_argument('--n', type=int, default=2)
    p.add_argument('--k', type=int, default=2)
    p.add_argument('--p', type=int, default=2)
    p.add_argument('--algebra', help='输入半群代数: null:N, max:N, leftzero:N, rightzero:N, rect:PxQ, cyclic:K, empty')
    p.add_argument('--input', default='trivial', help='输入（Hopf）双代数引用')
    p.add_argument('--with-antipode', action='store_true')
    p.add_argument('--out', help='输出结构文件')
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser('transport', help='基变换迁移')
    p.add_argument('structure')
    p.add_argument('--matrix', required=True, help='JSON 二维数组')
    p.add_argument('--convention', choices=CONVENTIONS)
    p.add_argument('--out')
    p.set_defaults(handler=cmd_transport)

    p = sub.add_parser('aut', help='自同构')
    aut = p.add_subparsers(dest='aut_command', required=True)
    q = aut.add_parser('check')
    q.add_argument('structure')
    group = q.add_mutually_exclusive_group(required=True)
    group.add_argument('--matrix')
    group.add_argument('--family', help='参数化矩阵，JSON 二维数组（表达式文本）')
    q.add_argument('--params', help='参数名，逗号分隔')
    q.add_argument('--nonzero', help='必须非零的表达式，逗号分隔')
    q.add_argument('--samples', type=int)
    q.add_argument('--convention', choices=CONVENTIONS)
    q = aut.add_parser('group')
    q.add_argument('--matrices', required=True, help='JSON 矩阵列表')
    q.add_argument('--bound', type=int)
    q.add_argument('--convention', choices=CONVENTIONS)
    q = aut.add_parser('tangent')
    q.add_argument('structure')
    p.set_defaults(handler=cmd_aut)

    p = sub.add_parser('catalog', help='分类表')
    cat = p.add_subparsers(dest='catalog_command', required=True)
    q = cat.add_parser('list')
    q.add_argument('--dim', type=int)
    q.add_argument('--kind')
    q = cat.add_parser('show')
    q.add_argument('key')
    q = cat.add_parser('verify')
    q.add_argument('--dim', type=int)
    q.add_argument('--kind')
    q = cat.add_parser('fingerprint')
    q.add_argument('key')
    q = cat.add_parser('separation')
    q.add_argument('--dim', type=int, required=True)
    q.add_argument('--kind', default='weak-bialgebra')
    q = cat.add_parser('claims')
    q.add_argument('--dim', type=int, required=True)
    q.add_argument('--kind', default='weak-bialgebra')
    q.add_argument('--convention', choices=CONVENTIONS)
    q = cat.add_parser('export')
    q.add_argument('key')
    q.add_argument('--out', required=True)
    p.set_defaults(handler=cmd_catalog)

    p = sub.add_parser('search', help='网格搜索')
    p.add_argument('--dim', type=int, required=True)
    p.add_argument('--algebra', required=True, help='分类表中的代数，如 m2^2')
    p.add_argument('--coeffs', help='系数集合，逗号分隔')
    p.add_argument('--freeze', help='固定未知量，如 f1=2,D1_2_1=0')
    p.add_argument('--budget', type=int)
    p.add_argument('--workers', type=int)
    p.add_argument('--no-prune', action='store_true', help='不剪枝，逐点检查')
    p.add_argument('--estimate-only', action='store_true')
    p.add_argument('--out', help='输出目录')
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser('iso', help='同构见证与指纹比较')
    iso = p.add_subparsers(dest='iso_command', required=True)
    q = iso.add_parser('witness')
    q.add_argument('first')
    q.add_argument('second')
    q.add_argument('--matrix', required=True)
    q.add_argument('--convention', choices=CONVENTIONS)
    q = iso.add_parser('fingerprint-compare')
    q.add_argument('first')
    q.add_argument('second')
    p.set_defaults(handler=cmd_iso)

    p = sub.add_parser('docs', help='生成文档')
    docs = p.add_subparsers(dest='docs_command', required=True)
    q = docs.add_parser('generate')
    q.add_argument('--out', help='输出目录')
    q.add_argument('--convention', choices=CONVENTIONS)
    p.set_defaults(handler=cmd_docs)
    return parser


def _load_config(path: Optional[str]) -> ConfigManager:
    if path is not None:
        return ConfigManager(path)
    if os.path.exists('config.json'):
        return ConfigManager('config.json')
    return ConfigManager.defaults()


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_INPUT

    try:
        config = _load_config(args.config)
    except (FileNotFoundError, ValueError) as e:
        print(f"错误: {e}", file=sys.stderr)
        return EXIT_INPUT
    setup_logging(config, args.log_level)

    try:
        return args.handler(_Context(args, config))
    except (ToolkitError, OSError, json.JSONDecodeError) as e:
        logger.error(str(e))
        return EXIT_INPUT
    except Exception:
        logger.exception("未预期的错误")
        return EXIT_INPUT


if __name__ == '__main__':
    sys.exit(main())
