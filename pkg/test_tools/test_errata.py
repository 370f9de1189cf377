# -*- coding: utf-8 -*-
"""
文档生成测试
"""

import os

from weakhopf import errata

DOCUMENTS = ("SWEEDLER.md", "CATALOG.md", "PAPER-ERRATA.md")


def test_generate_is_deterministic(tmp_path):
    first = errata.generate(str(tmp_path / "a"))
    second = errata.generate(str(tmp_path / "b"))
    assert [os.path.basename(p) for p in first] == list(DOCUMENTS)
    for p, q in zip(first, second):
        with open(p, "rb") as f, open(q, "rb") as g:
            assert f.read() == g.read()


def test_errata_items_have_repro():
    items = errata.errata_items()
    assert len(items) == 11
    for item in items:
        assert item.repro.startswith(errata.CLI)
        assert item.evidence


def test_claims_item_lists_refuted_entries():
    item = errata.errata_items()[-1]
    refuted = [key.strip() for key in item.issue.split(":", 1)[1].split(",")]
    assert "3-weak-bialgebra-13" in refuted
    assert "2-weak-bialgebra-1" in refuted
    assert "2-weak-bialgebra-3" not in refuted


def test_tangent_item_lists_discrete_entries():
    item = next(i for i in errata.errata_items() if i.title == "连续自同构族与切空间维数")
    assert "(13), (16), (18), (20)" in item.issue
    assert "条目 12: 切空间维数 1" in item.evidence
    assert "条目 13: 切空间维数 0" in item.evidence
    assert len(item.evidence) == 9


def test_sweedler_document():
    text = errata.sweedler_document()
    assert text.startswith("# 五维 Sweedler 弱 Hopf 代数")
    assert "不是严格双代数" in text


def test_errata_markdown_numbering():
    lines = errata.errata_document().splitlines()
    headings = [line for line in lines if line.startswith("## ")]
    assert headings[0].startswith("## 1. ")
    assert headings[-1].startswith("## 11. ")
