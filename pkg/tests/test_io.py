import pytest

from selfext import catalog as cat
from selfext import hybrid as hy
from selfext import io as sio
from selfext.io import SchemaError


class TestPresentationRoundTrip:
    @pytest.mark.parametrize("name", sorted(cat.catalog()))
    def test_catalog_entry(self, name):
        entry = cat.get_entry(name)
        text = sio.dump_presentation(entry.presentation, name)
        pres, loaded_name = sio.load_presentation(text)
        assert loaded_name == name
        assert pres == entry.presentation
        # the writer is deterministic, so the dump itself round-trips
        assert sio.dump_presentation(pres, loaded_name) == text

    def test_file_round_trip(self, tmp_path):
        entry = cat.get_entry("example_2_8")
        path = tmp_path / "pres.toml"
        path.write_text(sio.dump_presentation(entry.presentation, entry.name))
        pres, name = sio.load_presentation_file(path)
        assert name == "example_2_8" and pres == entry.presentation


class TestBiserialRoundTrip:
    @pytest.mark.parametrize("weight,triangles", [(2, True), (1, False), (3, True)])
    def test_triangle_data(self, weight, triangles):
        data = hy.triangle_data(weight=weight, triangles=triangles)
        text = sio.dump_biserial(data, 2, "triangle")
        loaded, p, name = sio.load_biserial(text)
        assert (p, name) == (2, "triangle")
        assert loaded.f == hy.validate_biserial(data).f
        assert loaded.triangles == data.triangles
        assert loaded.m == data.m and loaded.c == data.c
        assert sio.dump_biserial(loaded, p, name) == text

    def test_file_round_trip(self, tmp_path):
        path = tmp_path / "bis.toml"
        path.write_text(sio.dump_biserial(hy.triangle_data(), 3))
        loaded, p, name = sio.load_biserial_file(path)
        assert p == 3 and name is None
        assert loaded.triangles == hy.triangle_data().triangles


class TestSchemaErrors:
    def test_wrong_schema_version(self):
        with pytest.raises(SchemaError):
            sio.load_presentation("schema_version = 99\nchar = 2\nloewy_bound = 2\n"
                                  "[quiver]\nvertices = [0]\n")

    def test_missing_schema_version(self):
        with pytest.raises(SchemaError):
            sio.load_presentation("char = 2\nloewy_bound = 2\n"
                                  "[quiver]\nvertices = [0]\n")

    def test_missing_quiver_table(self):
        with pytest.raises(SchemaError):
            sio.load_presentation("schema_version = 1\nchar = 2\nloewy_bound = 2\n")

    def test_missing_char(self):
        with pytest.raises(SchemaError):
            sio.load_presentation("schema_version = 1\nloewy_bound = 2\n"
                                  "[quiver]\nvertices = [0]\n")

    def test_relation_without_terms(self):
        text = ("schema_version = 1\nchar = 2\nloewy_bound = 2\n"
                "[quiver]\nvertices = [0]\n[[relation]]\nfoo = 1\n")
        with pytest.raises(SchemaError):
            sio.load_presentation(text)

    def test_biserial_missing_table(self):
        with pytest.raises(SchemaError):
            sio.load_biserial("schema_version = 1\nchar = 2\n"
                              "[quiver]\nvertices = [0]\n")

    def test_unserializable_value(self):
        with pytest.raises(SchemaError):
            sio._fmt_value(1.5)
