# -*- coding: utf-8 -*-
"""
结构文件读写测试
"""

import json

import pytest

from weakhopf import catalog
from weakhopf.catalog import Kind
from weakhopf.constructions import taft_hopf
from weakhopf.errors import StructureFileError
from weakhopf.exactmath import Mat
from weakhopf.structfile import (
    dump_structure, load_structure, load_structure_text, parse_matrix, save_structure,
    structure_from_dict, structure_to_dict
)

README_EXAMPLE = """
{
  "format": "weakhopf-structure",
  "version": 1,
  "label": "example",
  "dim": 2,
  "conductor": 1,
  "unit": ["1", "0"],
  "mult": [
    {"i": 1, "j": 1, "k": 1, "c": "1"},
    {"i": 1, "j": 2, "k": 2, "c": "1"},
    {"i": 2, "j": 1, "k": 2, "c": "1"},
    {"i": 2, "j": 2, "k": 2, "c": "1"}
  ],
  "comult": [
    {"k": 1, "i": 1, "j": 1, "c": "1"},
    {"k": 1, "i": 1, "j": 2, "c": "-1"},
    {"k": 1, "i": 2, "j": 1, "c": "-1"},
    {"k": 1, "i": 2, "j": 2, "c": "2"},
    {"k": 2, "i": 2, "j": 2, "c": "1"}
  ],
  "counit": ["2", "1"],
  "antipode": null
}
"""


def _example() -> dict:
    return json.loads(README_EXAMPLE)


class TestRoundTrip:
    """写出再读回"""

    def test_readme_example_is_catalog_entry(self):
        H = load_structure_text(README_EXAMPLE)
        assert H == catalog.get(2, Kind.WEAK_BIALGEBRA, 3).structure
        assert H.label == "example"

    def test_sweedler(self, sweedler, tmp_path):
        path = tmp_path / "sweedler5.json"
        save_structure(sweedler, str(path))
        loaded = load_structure(str(path))
        assert loaded == sweedler
        assert dump_structure(loaded) == path.read_text(encoding="utf-8")

    def test_cyclotomic(self):
        H = taft_hopf(3)
        text = dump_structure(H)
        assert '"conductor": 3' in text
        assert load_structure_text(text) == H

    def test_dump_is_canonical(self, wba3):
        H = wba3[18].structure
        assert dump_structure(H) == dump_structure(structure_from_dict(structure_to_dict(H)))
        assert dump_structure(H).endswith("}\n")

    def test_hand_written_object_entries(self):
        text = """{
          "label": "hand", "dim": 2, "conductor": 1,
          "unit": ["1", "0"],
          "mult": [{"i": 1, "j": 1, "k": 1, "c": "1"}, {"i": 1, "j": 2, "k": 2, "c": "1"},
                   {"i": 2, "j": 1, "k": 2, "c": "1"}, {"i": 2, "j": 2, "k": 2, "c": "1"}],
          "comult": [{"k": 1, "i": 1, "j": 1, "c": "1"}, {"k": 1, "i": 1, "j": 2, "c": "-1"},
                     {"k": 1, "i": 2, "j": 1, "c": "-1"}, {"k": 1, "i": 2, "j": 2, "c": "2"},
                     {"k": 2, "i": 2, "j": 2, "c": "1"}],
          "counit": ["2", "1"],
          "antipode": null
        }"""
        H = load_structure_text(text)
        assert H == catalog.get(2, Kind.WEAK_BIALGEBRA, 3).structure
        assert load_structure_text(dump_structure(H)) == H

    def test_dump_writes_object_entries(self):
        data = structure_to_dict(catalog.get(2, Kind.WEAK_BIALGEBRA, 3).structure)
        assert {"i": 1, "j": 2, "k": 2, "c": "1"} in data["mult"]
        assert {"k": 1, "i": 1, "j": 2, "c": "-1"} in data["comult"]

    def test_compact_array_entries(self):
        data = _example()
        data["mult"] = [[e["i"], e["j"], e["k"], e["c"]] for e in data["mult"]]
        data["comult"] = [[e["k"], e["i"], e["j"], e["c"]] for e in data["comult"]]
        assert structure_from_dict(data) == structure_from_dict(_example())


class TestErrors:
    """格式错误定位到字段"""

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_structure(str(tmp_path / "missing.json"))

    def test_bad_json_line(self):
        with pytest.raises(StructureFileError) as excinfo:
            load_structure_text('{\n  "dim": 2,\n  oops\n}')
        assert excinfo.value.line == 3

    def test_missing_field(self):
        data = _example()
        del data["dim"]
        with pytest.raises(StructureFileError) as excinfo:
            structure_from_dict(data)
        assert excinfo.value.field == "dim"

    def test_counit_length(self):
        data = _example()
        data["counit"] = ["1"]
        with pytest.raises(StructureFileError) as excinfo:
            structure_from_dict(data)
        assert excinfo.value.field == "counit"

    def test_index_out_of_range(self):
        data = _example()
        data["mult"].append({"i": 3, "j": 1, "k": 1, "c": "1"})
        with pytest.raises(StructureFileError) as excinfo:
            structure_from_dict(data)
        assert excinfo.value.field == "mult[4]"

    def test_duplicate_index(self):
        data = _example()
        data["comult"].append([2, 2, 2, "3"])
        with pytest.raises(StructureFileError) as excinfo:
            structure_from_dict(data)
        assert excinfo.value.field == "comult[5]"

    def test_entry_missing_key(self):
        data = _example()
        del data["mult"][0]["c"]
        with pytest.raises(StructureFileError) as excinfo:
            structure_from_dict(data)
        assert excinfo.value.field == "mult[0].c"
        data = _example()
        del data["comult"][2]["k"]
        with pytest.raises(StructureFileError) as excinfo:
            structure_from_dict(data)
        assert excinfo.value.field == "comult[2].k"

    def test_entry_bad_coefficient(self):
        data = _example()
        data["comult"][1]["c"] = "1/0"
        with pytest.raises(StructureFileError) as excinfo:
            structure_from_dict(data)
        assert excinfo.value.field == "comult[1].c"

    def test_bad_scalar(self):
        data = _example()
        data["unit"] = ["1/0", "0"]
        with pytest.raises(StructureFileError) as excinfo:
            structure_from_dict(data)
        assert excinfo.value.field == "unit[0]"

    def test_conductor_mismatch(self):
        data = _example()
        data["conductor"] = 4
        with pytest.raises(StructureFileError) as excinfo:
            structure_from_dict(data, conductor=3)
        assert excinfo.value.field == "conductor"

    def test_cyclotomic_coefficient_count(self):
        data = _example()
        data["conductor"] = 4
        data["counit"] = ["[2] @ 4", "1"]
        with pytest.raises(StructureFileError) as excinfo:
            structure_from_dict(data)
        assert excinfo.value.field == "counit[0]"

    def test_unknown_format(self):
        data = _example()
        data["format"] = "other"
        with pytest.raises(StructureFileError):
            structure_from_dict(data)

    def test_antipode_shape(self):
        data = _example()
        data["antipode"] = [["1"]]
        with pytest.raises(StructureFileError) as excinfo:
            structure_from_dict(data)
        assert excinfo.value.field == "antipode"


class TestMatrix:
    """矩阵参数"""

    def test_parse(self):
        assert parse_matrix('[[1, "1/2"], [0, -1]]') == Mat.of([[1, "1/2"], [0, -1]])

    def test_cyclotomic_entries(self):
        m = parse_matrix('[["[0, 1] @ 4", 0], [0, 1]]', conductor=4)
        assert m[(0, 0)] ** 2 == -1

    @pytest.mark.parametrize("text", ["[]", "[1, 2]", "not json"])
    def test_invalid(self, text):
        with pytest.raises(StructureFileError):
            parse_matrix(text)
