# -*- coding: utf-8 -*-
"""
工具包异常定义
所有异常继承 ValueError，调用方可以统一捕获
"""

from typing import Any, Optional


class ToolkitError(ValueError):
    """工具包异常基类"""


class ScalarError(ToolkitError):
    """标量解析或运算错误（除零、分圆域不兼容）"""


class DimensionError(ToolkitError):
    """维度不匹配"""


class SingularMatrixError(ToolkitError):
    """矩阵不可逆"""


class AxiomError(ToolkitError):
    """公理无法求值（例如缺少对极）"""


class ConstructionError(ToolkitError):
    """构造前置条件不满足或输出未通过验证"""

    def __init__(self, code: str, message: str, report: Optional[Any] = None):
        super().__init__(f"[{code}] {message}")
        self.code = code
        self.report = report


class CatalogError(ToolkitError):
    """目录条目不存在"""


class GrouplikeError(ToolkitError):
    """类群元求解超出支持范围"""


class BudgetExceededError(ToolkitError):
    """搜索候选数超出预算"""

    def __init__(self, message: str, estimate: Optional[int] = None):
        super().__init__(message)
        self.estimate = estimate


class GroupBoundError(ToolkitError):
    """群闭包超出上界"""


class StructureFileError(ToolkitError):
    """结构文件格式错误"""

    def __init__(self, field: str, message: str, line: Optional[int] = None):
        location = f"{field}" if line is None else f"{field} (第 {line} 行)"
        super().__init__(f"结构文件字段 {location}: {message}")
        self.field = field
        self.line = line
