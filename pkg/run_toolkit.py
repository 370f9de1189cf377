#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
弱 Hopf 代数工具启动脚本
用法: python run_toolkit.py [--config config.json] [--log-level INFO] <子命令> ...
"""

import signal
import sys

from weakhopf.cli import main


def setup_signal_handlers():
    """设置信号处理器，长时间搜索可用 Ctrl+C 中断"""
    def signal_handler(signum, frame):
        print("\n接收到停止信号，已中断", file=sys.stderr)
        sys.exit(130)

    signal.signal(signal.SIGINT, signal_handler)
    signal.signal(signal.SIGTERM, signal_handler)


if __name__ == "__main__":
    setup_signal_handlers()
    sys.exit(main())
