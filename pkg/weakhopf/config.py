# -*- coding: utf-8 -*-
"""
配置与日志
"""

import copy
import json
import logging
import sys
from typing import Any, Dict, Optional

DEFAULT_CONFIG: Dict[str, Any] = {
    "logging": {
        "level": "INFO",
        "file": None,
        "format": "%(asctime)s - %(levelname)s - %(message)s"
    },
    "report": {
        "format": "text"
    },
    "search": {
        "coefficients": [-1, 0, 1, 2],
        "budget": 100000000,
        "max_workers": 1,
        "max_dim": 3
    },
    "transport": {
        "convention": "columns",
        "group_bound": 1000
    },
    "parametric": {
        "samples": 5
    },
    "docs": {
        "output_dir": "docs"
    }
}


class ConfigManager:
    """配置管理器"""

    def __init__(self, config_path: Optional[str] = "config.json"):
        self.config_path = config_path
        self.config = self._load_config()

    @classmethod
    def defaults(cls) -> 'ConfigManager':
        """不读文件，直接使用默认配置"""
        manager = cls.__new__(cls)
        manager.config_path = None
        manager.config = copy.deepcopy(DEFAULT_CONFIG)
        return manager

    def _load_config(self) -> Dict[str, Any]:
        try:
            with open(self.config_path, 'r', encoding='utf-8') as f:
                loaded = json.load(f)
        except FileNotFoundError:
            raise FileNotFoundError(f"配置文件 {self.config_path} 不存在")
        except json.JSONDecodeError as e:
            raise ValueError(f"配置文件格式错误: {e}")
        if not isinstance(loaded, dict):
            raise ValueError("配置文件格式错误: 顶层必须是对象")
        return _merge(copy.deepcopy(DEFAULT_CONFIG), loaded)

    def get(self, key: str, default=None):
        keys = key.split('.')
        value = self.config
        for k in keys:
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default
        return value


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(base.get(key), dict):
            _merge(base[key], value)
        else:
            base[key] = value
    return base


def setup_logging(config: ConfigManager, level_override: Optional[str] = None) -> None:
    """设置日志；报告走 stdout，日志只写 stderr 和可选文件"""
    level_name = level_override or config.get('logging.level', 'INFO')
    handlers = [logging.StreamHandler(sys.stderr)]
    log_file = config.get('logging.file')
    if log_file:
        handlers.append(logging.FileHandler(log_file, encoding='utf-8'))

    logging.basicConfig(
        level=getattr(logging, str(level_name).upper(), logging.INFO),
        format=config.get('logging.format', DEFAULT_CONFIG['logging']['format']),
        handlers=handlers,
        force=True
    )
