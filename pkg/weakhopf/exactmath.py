# -*- coding: utf-8 -*-
"""
精确算术内核
分圆域 ℚ(ζ_N) 上的标量，以及向量、矩阵和二阶/三阶张量

标量用 ζ_N 的幂基坐标表示（长度 φ(N)，有理系数），
有理数一律规范化为导子 1，因此相等的标量表示唯一。
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import sympy

from .errors import DimensionError, ScalarError, SingularMatrixError

_X = sympy.Symbol('x')
_RATIONAL_TEXT = re.compile(r'^[+-]?\d+(/\d+)?$')
_CYCLOTOMIC_TEXT = re.compile(r'^\[(.*)\]\s*@\s*(\d+)$')


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    """欧拉函数 φ(n)"""
    return int(sympy.totient(n))


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> Tuple[int, ...]:
    """第 n 个分圆多项式的整系数，低次在前"""
    poly = sympy.Poly(sympy.cyclotomic_poly(n, _X), _X)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def _reduce(poly: Sequence[Fraction], conductor: int) -> Tuple[Fraction, ...]:
    phi = cyclotomic_coeffs(conductor)
    deg = len(phi) - 1
    work = list(poly)
    for d in range(len(work) - 1, deg - 1, -1):
        lead = work[d]
        if lead:
            for k in range(deg + 1):
                work[d - deg + k] -= lead * phi[k]
    work = work[:deg]
    work.extend([Fraction(0)] * (deg - len(work)))
    return tuple(work)


def _to_fraction(value) -> Fraction:
    if isinstance(value, bool):
        raise ScalarError(f"不支持的标量类型: {type(value).__name__}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_TEXT.match(text):
            raise ScalarError(f"无法解析有理数: {value!r}")
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise ScalarError(f"分母为零: {value!r}")
    raise ScalarError(f"不支持的标量类型: {type(value).__name__}")


class Scalar:
    """ℚ(ζ_N) 中的元素"""

    __slots__ = ('conductor', 'coeffs')

    def __init__(self, coeffs: Sequence = (0,), conductor: int = 1):
        if not isinstance(conductor, int) or conductor < 1:
            raise ScalarError(f"导子必须是正整数: {conductor!r}")
        poly = [_to_fraction(c) for c in coeffs] or [Fraction(0)]
        reduced = _reduce(poly, conductor)
        _init(self, conductor, reduced)

    # ---------- 构造 ----------

    @classmethod
    def of(cls, value: Union['Scalar', int, Fraction, str]) -> 'Scalar':
        """从 Scalar / int / Fraction / 文本得到标量"""
        if isinstance(value, Scalar):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        return _rational(_to_fraction(value))

    @classmethod
    def zeta(cls, n: int) -> 'Scalar':
        """本原 n 次单位根 ζ_n"""
        return cls((0, 1), n)

    @classmethod
    def parse(cls, text: str, conductor: Optional[int] = None) -> 'Scalar':
        """解析 "p/q" 或 "[c0, c1, ...] @ N" """
        stripped = text.strip()
        match = _CYCLOTOMIC_TEXT.match(stripped)
        if match is None:
            return _rational(_to_fraction(stripped))
        n = int(match.group(2))
        if n < 1:
            raise ScalarError(f"导子必须是正整数: {text!r}")
        if conductor is not None and n != conductor:
            raise ScalarError(f"标量导子 {n} 与声明的导子 {conductor} 不一致")
        parts = [p for p in (s.strip() for s in match.group(1).split(',')) if p]
        if len(parts) != euler_phi(n):
            raise ScalarError(f"导子 {n} 需要 {euler_phi(n)} 个系数: {text!r}")
        return cls([_to_fraction(p) for p in parts], n)

    # ---------- 查询 ----------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return self.conductor == 1

    def to_fraction(self) -> Fraction:
        if self.conductor != 1:
            raise ScalarError(f"{self} 不是有理数")
        return self.coeffs[0]

    def height(self) -> Fraction:
        """系数绝对值的最大值"""
        return max(abs(c) for c in self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.conductor == other.conductor and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self.conductor == 1:
            return hash(self.coeffs[0])
        return hash((self.conductor, self.coeffs))

    def __str__(self) -> str:
        if self.conductor == 1:
            return str(self.coeffs[0])
        return "[" + ", ".join(str(c) for c in self.coeffs) + f"] @ {self.conductor}"

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r})"

    # ---------- 运算 ----------

    def __neg__(self) -> 'Scalar':
        return _new(self.conductor, tuple(-c for c in self.coeffs))

    def __add__(self, other) -> 'Scalar':
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.conductor == 1 and other.conductor == 1:
            return _rational(self.coeffs[0] + other.coeffs[0])
        n, a, b = _align(self, other)
        return _new(n, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __sub__(self, other) -> 'Scalar':
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> 'Scalar':
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> 'Scalar':
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.conductor == 1:
            q = self.coeffs[0]
            if other.conductor == 1:
                return _rational(q * other.coeffs[0])
            return _new(other.conductor, tuple(q * c for c in other.coeffs))
        if other.conductor == 1:
            q = other.coeffs[0]
            return _new(self.conductor, tuple(q * c for c in self.coeffs))
        n, a, b = _align(self, other)
        product = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        product[i + j] += x * y
        return _new(n, _reduce(product, n))

    __rmul__ = __mul__

    def inverse(self) -> 'Scalar':
        if self.is_zero():
            raise ScalarError("除数为零")
        if self.conductor == 1:
            return _rational(1 / self.coeffs[0])
        n = self.conductor
        p = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)],
                       _X, domain=sympy.QQ)
        modulus = sympy.Poly(list(reversed(cyclotomic_coeffs(n))), _X, domain=sympy.QQ)
        inv = p.invert(modulus)
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(inv.all_coeffs())]
        return Scalar(coeffs, n)

    def __truediv__(self, other) -> 'Scalar':
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> 'Scalar':
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> 'Scalar':
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = ONE
        for _ in range(abs(exponent)):
            result = result * base
        return result


def _init(obj: Scalar, conductor: int, coeffs: Tuple[Fraction, ...]) -> None:
    if conductor != 1 and not any(coeffs[1:]):
        conductor, coeffs = 1, (coeffs[0],)
    object.__setattr__(obj, 'conductor', conductor)
    object.__setattr__(obj, 'coeffs', coeffs)


def _new(conductor: int, coeffs: Tuple[Fraction, ...]) -> Scalar:
    obj = object.__new__(Scalar)
    _init(obj, conductor, coeffs)
    return obj


def _rational(q: Fraction) -> Scalar:
    obj = object.__new__(Scalar)
    object.__setattr__(obj, 'conductor', 1)
    object.__setattr__(obj, 'coeffs', (q,))
    return obj


def _coerce(value) -> Optional[Scalar]:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return _rational(Fraction(value))
    return None


def _align(a: Scalar, b: Scalar) -> Tuple[int, Tuple[Fraction, ...], Tuple[Fraction, ...]]:
    if a.conductor == b.conductor:
        return a.conductor, a.coeffs, b.coeffs
    if a.conductor == 1:
        pad = (Fraction(0),) * (euler_phi(b.conductor) - 1)
        return b.conductor, a.coeffs + pad, b.coeffs
    if b.conductor == 1:
        pad = (Fraction(0),) * (euler_phi(a.conductor) - 1)
        return a.conductor, a.coeffs, b.coeffs + pad
    raise ScalarError(f"导子不兼容: {a.conductor} 与 {b.conductor}")


ZERO = _rational(Fraction(0))
ONE = _rational(Fraction(1))


# ===============================================
# 向量与矩阵
# ===============================================

@dataclass(frozen=True)
class Vec:
    """列向量"""
    entries: Tuple[Scalar, ...]

    @classmethod
    def of(cls, values: Iterable) -> 'Vec':
        return cls(tuple(Scalar.of(v) for v in values))

    @classmethod
    def zeros(cls, n: int) -> 'Vec':
        return cls((ZERO,) * n)

    @classmethod
    def basis(cls, n: int, i: int) -> 'Vec':
        """基向量 e_i，i 从 1 开始"""
        if not 1 <= i <= n:
            raise DimensionError(f"基向量下标 {i} 超出维数 {n}")
        return cls(tuple(ONE if k == i - 1 else ZERO for k in range(n)))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Scalar:
        return self.entries[i]

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self.entries)

    def _check(self, other: 'Vec') -> None:
        if other.dim != self.dim:
            raise DimensionError(f"向量维数不一致: {self.dim} 与 {other.dim}")

    def __add__(self, other: 'Vec') -> 'Vec':
        self._check(other)
        return Vec(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: 'Vec') -> 'Vec':
        self._check(other)
        return Vec(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> 'Vec':
        return Vec(tuple(-a for a in self.entries))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __str__(self) -> str:
        return "(" + ", ".join(str(a) for a in self.entries) + ")"


@dataclass(frozen=True)
class Mat:
    """矩阵，按行存储"""
    rows: Tuple[Tuple[Scalar, ...], ...]

    def __post_init__(self):
        if self.rows and len({len(r) for r in self.rows}) != 1:
            raise DimensionError("矩阵各行长度不一致")

    @classmethod
    def of(cls, values: Iterable[Iterable]) -> 'Mat':
        return cls(tuple(tuple(Scalar.of(v) for v in row) for row in values))

    @classmethod
    def identity(cls, n: int) -> 'Mat':
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> 'Mat':
        return cls(tuple((ZERO,) * ncols for _ in range(nrows)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, index: Tuple[int, int]) -> Scalar:
        i, j = index
        return self.rows[i][j]

    def column(self, j: int) -> Vec:
        return Vec(tuple(row[j] for row in self.rows))

    def transpose(self) -> 'Mat':
        return Mat(tuple(zip(*self.rows))) if self.rows else self

    def __add__(self, other: 'Mat') -> 'Mat':
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionError("矩阵形状不一致")
        return Mat(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __matmul__(self, other):
        if isinstance(other, Vec):
            if other.dim != self.ncols:
                raise DimensionError(f"矩阵列数 {self.ncols} 与向量维数 {other.dim} 不一致")
            return Vec(tuple(_dot(row, other.entries) for row in self.rows))
        if isinstance(other, Mat):
            if self.ncols != other.nrows:
                raise DimensionError(f"矩阵乘法形状不一致: {self.ncols} 与 {other.nrows}")
            cols = tuple(zip(*other.rows))
            return Mat(tuple(tuple(_dot(row, col) for col in cols) for row in self.rows))
        return NotImplemented

    def rank(self) -> int:
        _, pivots = _row_reduce(self.rows, self.ncols)
        return len(pivots)

    def nullspace_dim(self) -> int:
        return self.ncols - self.rank()

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.nrows

    def det(self) -> Scalar:
        if not self.is_square():
            raise DimensionError("行列式要求方阵")
        m = [list(r) for r in self.rows]
        n = self.nrows
        result = ONE
        for c in range(n):
            piv = next((i for i in range(c, n) if m[i][c]), None)
            if piv is None:
                return ZERO
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                result = -result
            result = result * m[c][c]
            inv = m[c][c].inverse()
            for i in range(c + 1, n):
                if m[i][c]:
                    factor = m[i][c] * inv
                    m[i] = [a - factor * b for a, b in zip(m[i], m[c])]
        return result

    def inverse(self) -> 'Mat':
        if not self.is_square():
            raise DimensionError("只有方阵可以求逆")
        n = self.nrows
        augmented = [tuple(row) + tuple(ONE if i == j else ZERO for j in range(n))
                     for i, row in enumerate(self.rows)]
        reduced, pivots = _row_reduce(augmented, n)
        if pivots[:n] != list(range(n)):
            raise SingularMatrixError("矩阵不可逆")
        return Mat(tuple(tuple(row[n:]) for row in reduced[:n]))

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(a) for a in row) + "]" for row in self.rows) + "]"


def _dot(a: Sequence[Scalar], b: Sequence[Scalar]) -> Scalar:
    total = ZERO
    for x, y in zip(a, b):
        if x and y:
            total = total + x * y
    return total


def _row_reduce(rows, pivot_cols: int) -> Tuple[List[List[Scalar]], List[int]]:
    """化为行最简形，只在前 pivot_cols 列中选主元"""
    m = [list(r) for r in rows]
    nrows = len(m)
    pivots: List[int] = []
    r = 0
    for c in range(pivot_cols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def sparse_rank(rows: Iterable[Dict[int, Scalar]]) -> int:
    """稀疏行组（列下标 → 非零系数）的秩"""
    basis: Dict[int, Dict[int, Scalar]] = {}
    for row in rows:
        work = {k: v for k, v in row.items() if v}
        while work:
            lead = min(work)
            if lead not in basis:
                inv = work[lead].inverse()
                basis[lead] = {k: v * inv for k, v in work.items()}
                break
            factor = work[lead]
            for k, v in basis[lead].items():
                value = work.get(k, ZERO) - factor * v
                if value:
                    work[k] = value
                else:
                    work.pop(k, None)
    return len(basis)


# ===============================================
# 张量
# ===============================================

@dataclass(frozen=True)
class Tensor2:
    """V⊗V 中的元素，entries[i][j] 是 e_i⊗e_j 的系数"""
    entries: Tuple[Tuple[Scalar, ...], ...]

    @classmethod
    def from_sparse(cls, n: int, values: Dict[Tuple[int, int], Scalar]) -> 'Tensor2':
        rows = [[ZERO] * n for _ in range(n)]
        for (i, j), v in values.items():
            rows[i][j] = Scalar.of(v)
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def outer(cls, u: Vec, v: Vec) -> 'Tensor2':
        return cls(tuple(tuple(a * b for b in v.entries) for a in u.entries))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: Tuple[int, int]) -> Scalar:
        i, j = index
        return self.entries[i][j]

    def as_mat(self) -> Mat:
        return Mat(self.entries)


@dataclass(frozen=True)
class Tensor3:
    """三阶张量，扁平存储，下标 (a, b, c) 从 0 开始"""
    dim: int
    entries: Tuple[Scalar, ...]

    def __post_init__(self):
        if len(self.entries) != self.dim ** 3:
            raise DimensionError(f"三阶张量需要 {self.dim ** 3} 个分量")

    @classmethod
    def zeros(cls, n: int) -> 'Tensor3':
        return cls(n, (ZERO,) * (n ** 3))

    @classmethod
    def from_sparse(cls, n: int, values: Dict[Tuple[int, int, int], object]) -> 'Tensor3':
        flat = [ZERO] * (n ** 3)
        for (a, b, c), v in values.items():
            for idx in (a, b, c):
                if not 0 <= idx < n:
                    raise DimensionError(f"张量下标 {(a, b, c)} 超出维数 {n}")
            flat[(a * n + b) * n + c] = Scalar.of(v)
        return cls(n, tuple(flat))

    def get(self, a: int, b: int, c: int) -> Scalar:
        return self.entries[(a * self.dim + b) * self.dim + c]

    def __getitem__(self, index: Tuple[int, int, int]) -> Scalar:
        return self.get(*index)

    def nonzero(self) -> Iterator[Tuple[Tuple[int, int, int], Scalar]]:
        n = self.dim
        for flat, v in enumerate(self.entries):
            if v:
                yield (flat // (n * n), (flat // n) % n, flat % n), v


def tensor2_rank(t: Tensor2) -> int:
    return t.as_mat().rank()


def trace_bilinear_rank(C: Tensor3) -> int:
    """迹形式 (a, b) ↦ tr(L_a L_b) 的秩，C[i][j][k] = C_{ij}^k"""
    n = C.dim
    # L_a[k][j] = C_{a j}^k
    gram = []
    for a in range(n):
        row = []
        for b in range(n):
            total = ZERO
            for k in range(n):
                for j in range(n):
                    x = C.get(a, j, k)
                    if x:
                        y = C.get(b, k, j)
                        if y:
                            total = total + x * y
            row.append(total)
        gram.append(tuple(row))
    return Mat(tuple(gram)).rank()
