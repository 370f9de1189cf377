# -*- coding: utf-8 -*-
"""
pytest 公共夹具
"""

import pytest
from hypothesis import settings

from weakhopf import catalog
from weakhopf.catalog import Kind
from weakhopf.constructions import sweedler5

# 精确算术较慢，性质测试统一关闭单例超时
settings.register_profile("weakhopf", deadline=None, max_examples=25)
settings.load_profile("weakhopf")


@pytest.fixture(scope="session")
def sweedler():
    return sweedler5()


@pytest.fixture(scope="session")
def wba2():
    """二维弱双代数条目，按编号索引"""
    return {e.index: e for e in catalog.entries(2, Kind.WEAK_BIALGEBRA)}


@pytest.fixture(scope="session")
def wba3():
    return {e.index: e for e in catalog.entries(3, Kind.WEAK_BIALGEBRA)}
