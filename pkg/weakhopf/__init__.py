"""
弱 Hopf 代数精确计算工具包
结构常数层面的公理验证、构造、迁移、目录与搜索
"""

from .errors import (
    ToolkitError,
    ScalarError,
    DimensionError,
    SingularMatrixError,
    AxiomError,
    ConstructionError,
    CatalogError,
    GrouplikeError,
    BudgetExceededError,
    GroupBoundError,
    StructureFileError
)
from .exactmath import Scalar, Vec, Mat, Tensor2, Tensor3
from .structure import AlgebraStruct, CoalgebraStruct, WeakStructure, Endo

__version__ = "1.0.0"
__author__ = "WeakHopf Team"

# 目录转录修订号，条目内容变化时递增
CATALOG_REVISION = "3"

__all__ = [
    "ToolkitError",
    "ScalarError",
    "DimensionError",
    "SingularMatrixError",
    "AxiomError",
    "ConstructionError",
    "CatalogError",
    "GrouplikeError",
    "BudgetExceededError",
    "GroupBoundError",
    "StructureFileError",
    "Scalar",
    "Vec",
    "Mat",
    "Tensor2",
    "Tensor3",
    "AlgebraStruct",
    "CoalgebraStruct",
    "WeakStructure",
    "Endo",
    "CATALOG_REVISION"
]
