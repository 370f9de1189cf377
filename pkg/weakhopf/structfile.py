# -*- coding: utf-8 -*-
"""
规范结构文件
JSON 格式，标量用文本形式（"p/q" 或 "[c0, c1, ...] @ N"），下标从 1 开始：
  {
    "format": "weakhopf-structure", "version": 1,
    "label": ..., "dim": n, "conductor": N,
    "unit": [...],
    "mult":   [{"i": i, "j": j, "k": k, "c": "C_ij^k"}, ...],
    "comult": [{"k": k, "i": i, "j": j, "c": "D_k^ij"}, ...],
    "counit": [...],
    "antipode": [[...], ...] 或 null
  }
稀疏项也接受紧凑的数组形式 [i, j, k, "c"]（comult 为 [k, i, j, "c"]）
同一结构总是输出逐字节相同的文本
"""

import json
import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .errors import ScalarError, StructureFileError
from .exactmath import Mat, Scalar
from .structure import WeakStructure

logger = logging.getLogger(__name__)

FORMAT_NAME = "weakhopf-structure"
FORMAT_VERSION = 1

MULT_KEYS = ("i", "j", "k")
COMULT_KEYS = ("k", "i", "j")


def structure_to_dict(H: WeakStructure) -> Dict[str, Any]:
    n = H.dim
    return {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "label": H.label,
        "dim": n,
        "conductor": H.conductor,
        "unit": [str(v) for v in H.alg.unit.entries],
        "mult": [{"i": i + 1, "j": j + 1, "k": k + 1, "c": str(v)} for (i, j, k), v in H.alg.C.nonzero()],
        "comult": [{"k": k + 1, "i": i + 1, "j": j + 1, "c": str(v)} for (k, i, j), v in H.coalg.D.nonzero()],
        "counit": [str(v) for v in H.counit_values],
        "antipode": None if H.antipode is None else [[str(v) for v in row] for row in H.antipode.rows],
    }


def dump_structure(H: WeakStructure) -> str:
    """规范文本：键排序，两格缩进，末尾换行"""
    return json.dumps(structure_to_dict(H), ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def save_structure(H: WeakStructure, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(dump_structure(H))
    logger.debug(f"结构 {H.label} 已写入 {path}")


class _Reader:
    """逐字段读取并校验，错误信息带字段路径"""

    def __init__(self, data: Dict[str, Any], conductor: Optional[int]):
        self.data = data
        self.conductor = conductor

    def field(self, name: str, kind, required: bool = True):
        if name not in self.data:
            if required:
                raise StructureFileError(name, "缺少字段")
            return None
        value = self.data[name]
        if isinstance(value, bool) or (kind is not None and not isinstance(value, kind)):
            raise StructureFileError(name, f"类型错误，期望 {getattr(kind, '__name__', kind)}")
        return value

    def scalar(self, path: str, value) -> Scalar:
        if isinstance(value, bool) or not isinstance(value, (str, int)):
            raise StructureFileError(path, "标量必须是文本或整数")
        try:
            if isinstance(value, int):
                return Scalar.of(value)
            return Scalar.parse(value, self.conductor)
        except ScalarError as e:
            raise StructureFileError(path, str(e))

    def vector(self, name: str, n: int) -> List[Scalar]:
        values = self.field(name, list)
        if len(values) != n:
            raise StructureFileError(name, f"需要 {n} 个分量，得到 {len(values)} 个")
        return [self.scalar(f"{name}[{i}]", v) for i, v in enumerate(values)]

    def _split_entry(self, path: str, item, keys: Sequence[str]) -> Tuple[list, Any, str]:
        """对象项 {"i", "j", "k", "c"} 或数组项 [a, b, c, 系数]，返回 (下标, 系数, 系数路径)"""
        if isinstance(item, dict):
            for name in (*keys, "c"):
                if name not in item:
                    raise StructureFileError(f"{path}.{name}", "缺少字段")
            extra = sorted(set(item) - {*keys, "c"})
            if extra:
                raise StructureFileError(path, f"未知字段 {extra}")
            return [item[name] for name in keys], item["c"], f"{path}.c"
        if isinstance(item, list) and len(item) == 4:
            return list(item[:3]), item[3], f"{path}[3]"
        raise StructureFileError(path, f"每项必须是含 {', '.join(keys)}, c 的对象")

    def entries(self, name: str, n: int, keys: Sequence[str]) -> Dict[tuple, Scalar]:
        out: Dict[tuple, Scalar] = {}
        for pos, item in enumerate(self.field(name, list)):
            path = f"{name}[{pos}]"
            index, value, value_path = self._split_entry(path, item, keys)
            if not all(isinstance(a, int) and not isinstance(a, bool) and 1 <= a <= n for a in index):
                raise StructureFileError(path, f"下标必须是 1..{n} 的整数")
            key = tuple(a - 1 for a in index)
            if key in out:
                raise StructureFileError(path, f"下标 {index} 重复")
            out[key] = self.scalar(value_path, value)
        return out


def structure_from_dict(data: Any, conductor: Optional[int] = None) -> WeakStructure:
    if not isinstance(data, dict):
        raise StructureFileError("$", "顶层必须是对象")
    reader = _Reader(data, None)
    fmt = reader.field("format", str, required=False)
    if fmt is not None and fmt != FORMAT_NAME:
        raise StructureFileError("format", f"未知的格式 {fmt!r}")
    n = reader.field("dim", int)
    if n < 1:
        raise StructureFileError("dim", "维数必须至少为 1")
    declared = reader.field("conductor", int, required=False)
    if declared is not None and declared < 1:
        raise StructureFileError("conductor", "导子必须是正整数")
    if declared is not None and conductor is not None and declared != conductor:
        raise StructureFileError("conductor", f"文件声明导子 {declared}，命令行指定 {conductor}")
    reader.conductor = declared or conductor

    unit = reader.vector("unit", n)
    mult = reader.entries("mult", n, MULT_KEYS)
    comult = reader.entries("comult", n, COMULT_KEYS)
    counit = reader.vector("counit", n)
    antipode = None
    rows = reader.field("antipode", list, required=False)
    if rows is not None:
        if len(rows) != n or not all(isinstance(r, list) and len(r) == n for r in rows):
            raise StructureFileError("antipode", f"对极必须是 {n}×{n} 矩阵")
        antipode = {i: {j: reader.scalar(f"antipode[{i}][{j}]", v) for j, v in enumerate(row)}
                    for i, row in enumerate(rows)}

    mult_sparse: Dict = {}
    for (i, j, k), v in mult.items():
        mult_sparse.setdefault((i, j), {})[k] = v
    comult_sparse: Dict = {}
    for (k, i, j), v in comult.items():
        comult_sparse.setdefault(k, {})[(i, j)] = v
    label = reader.field("label", str, required=False) or ""
    return WeakStructure.from_sparse(
        n, mult_sparse, {k: v for k, v in enumerate(unit) if v},
        comult_sparse, dict(enumerate(counit)), antipode, label
    )


def load_structure_text(text: str, conductor: Optional[int] = None) -> WeakStructure:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise StructureFileError("$", f"JSON 语法错误: {e.msg}", line=e.lineno)
    return structure_from_dict(data, conductor)


def load_structure(path: str, conductor: Optional[int] = None) -> WeakStructure:
    """读取结构文件；文件不存在时抛 FileNotFoundError"""
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except FileNotFoundError:
        raise FileNotFoundError(f"结构文件 {path} 不存在")
    H = load_structure_text(text, conductor)
    logger.debug(f"已读取结构 {H.label or path}，维数 {H.dim}")
    return H


def parse_matrix(text: str, conductor: Optional[int] = None):
    """把 JSON 二维数组（标量文本）解析为 Mat"""
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as e:
        raise StructureFileError("matrix", f"JSON 语法错误: {e.msg}", line=e.lineno)
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise StructureFileError("matrix", "矩阵必须是非空二维数组")
    reader = _Reader({}, conductor)
    return Mat(tuple(tuple(reader.scalar(f"matrix[{i}][{j}]", v) for j, v in enumerate(row))
                     for i, row in enumerate(rows)))
