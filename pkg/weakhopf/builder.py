# -*- coding: utf-8 -*-
"""
结构构建器
用可读的记号（如 "(e1-e2)⊗(e1-e2) + e2⊗e2"）逐项填写结构常数
"""

import re
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import StructureFileError
from .exactmath import ONE, Scalar
from .structure import Elem, Elem2, WeakStructure, add_into

_TOKEN = re.compile(r'\s*(?:(\d+(?:/\d+)?)|([A-Za-z_]\w*)|(\S))')


class _NotationParser:
    """线性组合与二阶张量记号的递归下降解析"""

    def __init__(self, text: str, names: Sequence[str]):
        self.text = text
        self.index_of = {name: i for i, name in enumerate(names)}
        self.tokens = self._tokenize(text)
        self.pos = 0

    def _tokenize(self, text: str) -> List[Tuple[str, str]]:
        tokens = []
        for number, name, symbol in _TOKEN.findall(text):
            if number:
                tokens.append(('num', number))
            elif name:
                tokens.append(('name', name))
            elif symbol:
                tokens.append(('sym', symbol))
        return tokens

    def _error(self, message: str) -> StructureFileError:
        return StructureFileError('notation', f"{message}: {self.text!r}")

    def _peek(self) -> Optional[Tuple[str, str]]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _take(self, kind: str, value: Optional[str] = None) -> str:
        token = self._peek()
        if token is None or token[0] != kind or (value is not None and token[1] != value):
            raise self._error(f"期望 {value or kind}")
        self.pos += 1
        return token[1]

    def _accept(self, value: str) -> bool:
        token = self._peek()
        if token is not None and token == ('sym', value):
            self.pos += 1
            return True
        return False

    def _coefficient(self) -> Fraction:
        token = self._peek()
        if token is not None and token[0] == 'num':
            self.pos += 1
            self._accept('*')
            return Fraction(token[1])
        return Fraction(1)

    def _signed_terms(self, term):
        out: Dict = {}
        sign = -1 if self._accept('-') else 1
        if sign == 1:
            self._accept('+')
        while True:
            for key, value in term().items():
                out[key] = out.get(key, Fraction(0)) + sign * value
            if self._accept('+'):
                sign = 1
            elif self._accept('-'):
                sign = -1
            else:
                break
        return {k: v for k, v in out.items() if v}

    def _factor(self) -> Dict[int, Fraction]:
        if self._accept('('):
            inner = self._signed_terms(self._element_term)
            self._take('sym', ')')
            return inner
        name = self._take('name')
        if name not in self.index_of:
            raise self._error(f"未知的基元素 {name}")
        return {self.index_of[name]: Fraction(1)}

    def _element_term(self) -> Dict[int, Fraction]:
        c = self._coefficient()
        return {k: c * v for k, v in self._factor().items()}

    def _tensor_term(self) -> Dict[Tuple[int, int], Fraction]:
        c = self._coefficient()
        left = self._factor()
        self._take('sym', '⊗')
        right = self._factor()
        return {(i, j): c * a * b for i, a in left.items() for j, b in right.items()}

    def _finish(self, result):
        if self.pos != len(self.tokens):
            raise self._error("存在多余的记号")
        return result

    def element(self) -> Dict[int, Fraction]:
        if not self.tokens or self.tokens == [('num', '0')]:
            return {}
        return self._finish(self._signed_terms(self._element_term))

    def tensor(self) -> Dict[Tuple[int, int], Fraction]:
        if not self.tokens or self.tokens == [('num', '0')]:
            return {}
        return self._finish(self._signed_terms(self._tensor_term))


def parse_element(text: str, names: Sequence[str]) -> Elem:
    """解析 "2e3 - e2" 形式的线性组合"""
    return {k: Scalar.of(v) for k, v in _NotationParser(text, names).element().items()}


def parse_tensor(text: str, names: Sequence[str]) -> Elem2:
    """解析 "(e1-e2)⊗(e1-e2) + e2⊗e2" 形式的二阶张量"""
    return {k: Scalar.of(v) for k, v in _NotationParser(text, names).tensor().items()}


class StructureBuilder:
    """结构构建器，所有填写方法都返回自身以便链式调用"""

    def __init__(self, names: Sequence[str]):
        self.names = list(names)
        self.dim = len(self.names)
        self.clear()

    def clear(self) -> 'StructureBuilder':
        """清空已填写的结构常数"""
        self._mult: Dict[Tuple[int, int], Elem] = {}
        self._unit: Elem = {}
        self._comult: Dict[int, Elem2] = {}
        self._counit: Dict[int, Scalar] = {}
        self._antipode: Optional[Dict[int, Elem]] = None
        return self

    def _index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise StructureFileError('notation', f"未知的基元素 {name}")

    # ---------- 代数 ----------

    def product(self, left: str, right: str, value: str) -> 'StructureBuilder':
        """设置 left·right = value"""
        self._mult[(self._index(left), self._index(right))] = parse_element(value, self.names)
        return self

    def products(self, table: Dict[str, str]) -> 'StructureBuilder':
        """
        批量设置乘积

        Args:
            table: {"e2*e3": "e3", ...}，未列出的乘积为零
        """
        for key, value in table.items():
            left, right = (part.strip() for part in key.split('*'))
            self.product(left, right, value)
        return self

    def unit(self, name: str) -> 'StructureBuilder':
        """把基元素 name 设为单位元，并填写 1·x = x·1 = x"""
        u = self._index(name)
        self._unit = {u: ONE}
        for i in range(self.dim):
            self._mult[(u, i)] = {i: ONE}
            self._mult[(i, u)] = {i: ONE}
        return self

    def unit_elem(self, value: Elem) -> 'StructureBuilder':
        self._unit = dict(value)
        return self

    # ---------- 余代数 ----------

    def coproduct(self, name: str, tensor: str) -> 'StructureBuilder':
        """设置 Δ(name)"""
        self._comult[self._index(name)] = parse_tensor(tensor, self.names)
        return self

    def grouplike(self, *names: str) -> 'StructureBuilder':
        """Δ(x) = x⊗x"""
        for name in names:
            k = self._index(name)
            self._comult[k] = {(k, k): ONE}
        return self

    def counit(self, values: Sequence) -> 'StructureBuilder':
        """按基顺序设置 ε(e_k)"""
        if len(values) != self.dim:
            raise StructureFileError('counit', f"需要 {self.dim} 个值")
        self._counit = {k: Scalar.of(v) for k, v in enumerate(values)}
        return self

    # ---------- 对极 ----------

    def antipode(self, name: str, value: str) -> 'StructureBuilder':
        if self._antipode is None:
            self._antipode = {}
        self._antipode[self._index(name)] = parse_element(value, self.names)
        return self

    def antipode_elem(self, i: int, value: Elem) -> 'StructureBuilder':
        if self._antipode is None:
            self._antipode = {}
        self._antipode[i] = dict(value)
        return self

    def antipode_identity(self) -> 'StructureBuilder':
        self._antipode = {i: {i: ONE} for i in range(self.dim)}
        return self

    def build(self, label: str = "") -> WeakStructure:
        """生成结构；未填写的系数为零"""
        comult = {}
        for k, value in self._comult.items():
            merged: Elem2 = {}
            for key, v in value.items():
                add_into(merged, key, v)
            comult[k] = merged
        return WeakStructure.from_sparse(
            self.dim, self._mult, self._unit, comult, self._counit,
            antipode=self._antipode, label=label
        )


def default_names(n: int) -> List[str]:
    return [f"e{i + 1}" for i in range(n)]


def _format_terms(terms: List[Tuple[Scalar, str]]) -> str:
    if not terms:
        return "0"
    parts = []
    for value, name in terms:
        if value == 1:
            text = name
        elif value == -1:
            text = f"-{name}"
        elif value.is_rational():
            text = f"{value}*{name}"
        else:
            text = f"({value})*{name}"
        if parts and not text.startswith('-'):
            text = "+ " + text
        elif parts:
            text = "- " + text[1:]
        parts.append(text)
    return " ".join(parts)


def format_element(x: Elem, names: Sequence[str]) -> str:
    """把稀疏元素写成 "e1 - e2" 形式"""
    return _format_terms([(x[k], names[k]) for k in sorted(x)])


def format_tensor(x: Elem2, names: Sequence[str]) -> str:
    return _format_terms([(x[k], f"{names[k[0]]}⊗{names[k[1]]}") for k in sorted(x)])


def describe_structure(H: WeakStructure, names: Optional[Sequence[str]] = None) -> List[str]:
    """逐行写出乘法、余乘法、余单位与对极，零乘积省略"""
    names = list(names) if names is not None else default_names(H.dim)
    lines = [f"1 = {format_element(H.unit_elem, names)}"]
    for (i, j), prod in sorted(H.mult_table.items()):
        if prod:
            lines.append(f"{names[i]}·{names[j]} = {format_element(prod, names)}")
    for k in range(H.dim):
        lines.append(f"Δ({names[k]}) = {format_tensor(H.comult_table[k], names)}")
    lines.append("ε = (" + ", ".join(str(v) for v in H.counit_values) + ")")
    if H.antipode_table is not None:
        for i, image in enumerate(H.antipode_table):
            lines.append(f"S({names[i]}) = {format_element(image, names)}")
    return lines
