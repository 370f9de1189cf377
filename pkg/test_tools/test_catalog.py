# -*- coding: utf-8 -*-
"""
分类表测试：条目数目、验证、印刷版本与自同构声明
"""

from fractions import Fraction

import pytest

from weakhopf import catalog
from weakhopf.axioms import AxiomId, Level, verify
from weakhopf.catalog import Kind
from weakhopf.errors import CatalogError
from weakhopf.exactmath import Mat
from weakhopf.structfile import load_structure
from weakhopf.transport import BasisChange, is_automorphism

WBA = Kind.WEAK_BIALGEBRA


class TestEntries:
    """条目"""

    @pytest.mark.parametrize("dim, kind, count", [
        (2, Kind.WEAK_BIALGEBRA, 3),
        (3, Kind.WEAK_BIALGEBRA, 20),
        (2, Kind.WEAK_HOPF, 2),
        (3, Kind.WEAK_HOPF, 3),
        (2, Kind.ALGEBRA, 2),
        (3, Kind.ALGEBRA, 5),
    ])
    def test_counts(self, dim, kind, count):
        assert len(catalog.entries(dim, kind)) == count

    def test_keys(self):
        entry = catalog.parse_key("3-weak-bialgebra-12")
        assert (entry.dim, entry.kind, entry.index) == (3, WBA, 12)
        assert entry.key == "3-weak-bialgebra-12"
        assert entry.structure.label == "3-weak-bialgebra-12"

    @pytest.mark.parametrize("key", ["bogus", "3-weak-bialgebra-21", "3-quasi-hopf-1", "x-weak-hopf-1"])
    def test_bad_keys(self, key):
        with pytest.raises(CatalogError):
            catalog.parse_key(key)

    def test_missing_entry(self):
        with pytest.raises(CatalogError):
            catalog.get(2, WBA, 9)

    def test_algebra_labels(self, wba3):
        for index in (16, 17, 18, 19):
            assert wba3[index].algebra == "m3^3"
            assert wba3[index].notes
        assert wba3[20].algebra == "m5^3"

    def test_transcription_notes(self, wba2, wba3):
        assert wba2[2].notes
        assert wba3[6].notes
        assert not wba2[1].notes

    def test_unknown_algebra(self):
        with pytest.raises(CatalogError):
            catalog.algebra_structure("m9^3")


class TestVerification:
    """全部条目通过各自级别的验证"""

    def test_verify_all(self):
        report = catalog.verify_all()
        assert report.passed
        assert len(report.reports) == 35
        assert report.failures() == []

    def test_parallel_verification(self):
        selected = catalog.entries(3, Kind.WEAK_HOPF)
        assert catalog.verify_entries(selected, max_workers=3) == catalog.verify_entries(selected)

    def test_weak_hopf_entries_share_bialgebras(self):
        assert (catalog.get(2, Kind.WEAK_HOPF, 2).structure.with_antipode(None)
                == catalog.get(2, WBA, 3).structure)
        assert (catalog.get(3, Kind.WEAK_HOPF, 3).structure.with_antipode(None)
                == catalog.get(3, WBA, 10).structure)


class TestPrintedVariants:
    """原样印刷的版本"""

    def test_entry_six_counit(self):
        printed = catalog.printed_variant(3, WBA, 6)
        assert AxiomId.COUNIT in verify(printed, Level.WEAK_BIALGEBRA).failed_axioms()

    def test_entry_sixteen_algebra(self):
        printed = catalog.printed_variant(3, WBA, 16)
        failed = set(verify(printed, Level.WEAK_BIALGEBRA).failed_axioms())
        assert failed & {AxiomId.WEAK_COUNIT_A, AxiomId.WEAK_COUNIT_B}

    def test_no_variant(self):
        assert catalog.printed_variant(2, WBA, 1) is None


class TestClaims:
    """自同构声明"""

    def test_dim_two_order_two(self, wba2):
        status = catalog.verify_claim(wba2[3])
        assert status.status == "confirmed"
        columns = status.check("columns")
        assert columns.order == 2
        assert columns.tangent_dim == 0
        assert status.check("rows").status == "refuted"
        assert status.check("rows").witness is not None

    @pytest.mark.parametrize("index", [1, 2])
    def test_dim_two_refuted(self, wba2, index):
        status = catalog.verify_claim(wba2[index])
        for convention in ("columns", "rows"):
            assert status.check(convention).status == "refuted"

    def test_order_six(self, wba3):
        status = catalog.verify_claim(wba3[10])
        assert status.status == "confirmed"
        assert status.check("columns").order == 6
        assert status.check("columns").tangent_dim == 0

    @pytest.mark.parametrize("index", [1, 2])
    def test_order_six_refuted(self, wba3, index):
        assert catalog.verify_claim(wba3[index]).status == "refuted"

    def test_scaling_family(self, wba3):
        assert catalog.verify_claim(wba3[12]).status == "confirmed"
        refuted = catalog.verify_claim(wba3[13])
        assert refuted.status == "refuted"
        assert refuted.check("columns").witness_point is not None

    def test_root_family_refuted(self, wba3):
        status = catalog.verify_claim(wba3[18])
        assert status.status == "refuted"
        point = {k: Fraction(v) for k, v in status.check("columns").witness_point.items()}
        H = wba3[18].structure
        assert any(not is_automorphism(H, BasisChange(P.evaluate(point))).passed
                   for P in wba3[18].claim.families if P.evaluate(point) is not None)

    @pytest.mark.parametrize("index", [18, 20])
    def test_root_family_sign_points(self, wba3, index):
        H = wba3[index].structure
        for P, sign in zip(wba3[index].claim.families, (1, -1)):
            at_unit = P.evaluate({"r": Fraction(0), "e": Fraction(1)})
            assert at_unit == Mat.of([[1, 0, 0], [0, 1, 0], [0, 0, sign]])
            assert is_automorphism(H, BasisChange(at_unit)).passed
            at_four = P.evaluate({"r": Fraction(0), "e": Fraction(4)})
            assert at_four == Mat.of([[1, 0, 0], [0, 1, 0], [0, 0, 2 * sign]])
            assert not is_automorphism(H, BasisChange(at_four)).passed

    def test_primary_convention(self, wba2):
        assert catalog.verify_claim(wba2[3], convention="rows").status == "refuted"

    def test_algebra_has_no_claim(self):
        with pytest.raises(CatalogError):
            catalog.verify_claim(catalog.get(2, Kind.ALGEBRA, 1))

    def test_claims_listing(self):
        statuses = catalog.verify_claims(2, WBA)
        assert [s.entry.index for s in statuses] == [1, 2, 3]
        assert all(s.to_dict()["key"].startswith("2-weak-bialgebra-") for s in statuses)


class TestExport:
    """导出"""

    def test_export_round_trip(self, tmp_path, wba3):
        path = tmp_path / "entry.json"
        catalog.export(wba3[12], str(path))
        assert load_structure(str(path)) == wba3[12].structure
        first = path.read_text(encoding="utf-8")
        catalog.export(wba3[12], str(path))
        assert path.read_text(encoding="utf-8") == first
