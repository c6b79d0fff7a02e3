import pytest

from selfext import catalog as cat
from selfext import oracle as orc
from selfext.catalog import UnknownCatalogEntry, UnknownModuleName

ALL_NAMES = sorted(cat.catalog())


def test_catalog_is_nonempty_and_cached():
    assert len(ALL_NAMES) >= 14
    assert cat.get_entry("klein").presentation == cat.catalog()["klein"].presentation


def test_unknown_entry():
    with pytest.raises(UnknownCatalogEntry):
        cat.get_entry("nonexistent")


@pytest.mark.parametrize("name", ALL_NAMES)
def test_verify_suite_passes(name):
    entry = cat.get_entry(name)
    verdicts = entry.verify()
    assert verdicts, name
    bad = [v for v in verdicts if v.failed]
    assert not bad, [(v.check, v.witness) for v in bad]


class TestModuleResolution:
    def test_generic_expressions(self):
        entry = cat.get_entry("example_2_8")
        assert entry.module("S1").total_dim == 1
        cm = entry.table().cartan_matrix()
        assert entry.module("P1").total_dim == sum(cm[(1, j)] for j in (1, 2, 3))
        assert entry.module("arrow:a1").total_dim == 5
        assert entry.module("path:b1.b2").dims[3] >= 1

    def test_unknown_module_name(self):
        entry = cat.get_entry("example_2_8")
        with pytest.raises(UnknownModuleName):
            entry.module("W")
        with pytest.raises(UnknownModuleName):
            entry.module("S9")

    def test_sd3c_named_modules(self):
        entry = cat.get_entry("sd3c1")
        s = entry.params["s"]
        assert entry.module("rho").dimension_vector() == entry.module(
            "arrow:r").dimension_vector()
        assert entry.module("U").total_dim == entry.module("W").total_dim - 1 or \
            entry.module("W").total_dim >= entry.module("U").total_dim
        assert entry.module("W").dimension_vector() == (s - 1, s - 1, s - 1)

    def test_sd2b3_named_modules(self):
        for name in ("sd2b3_s2_c0", "sd2b3_s3"):
            entry = cat.get_entry(name)
            s = entry.params["s"]
            assert entry.module("W").dimension_vector() == (s + 1, s + 1)
            assert entry.module("H").dimension_vector() == (s, s)

    def test_sd2a2_named_modules(self):
        entry = cat.get_entry("sd2a2")
        assert entry.module("X").total_dim == 5
        assert entry.module("W").dimension_vector() == (4, 3)
        assert orc.is_indecomposable(entry.module("W")) == "indecomposable"


class TestKnownInvariants:
    def test_example_2_8_build(self):
        t = cat.get_entry("example_2_8").table()
        assert t.dimension == 18
        assert orc.weakly_symmetric_check(t)

    def test_sd2b3_cartan(self):
        t = cat.get_entry("sd2b3_s2_c1").table()
        cm = t.cartan_matrix()
        assert (cm[(0, 0)], cm[(0, 1)], cm[(1, 0)], cm[(1, 1)]) == (4, 2, 2, 4)

    def test_sd2a2_cartan(self):
        t = cat.get_entry("sd2a2").table()
        cm = t.cartan_matrix()
        assert t.dimension == 19
        assert (cm[(0, 0)], cm[(0, 1)], cm[(1, 0)], cm[(1, 1)]) == (8, 4, 4, 3)

    def test_local_group_dimensions(self):
        for name in ("local_c2", "local_c4", "local_c3", "local_c5"):
            entry = cat.get_entry(name)
            assert entry.table().dimension == entry.params["c"]

    def test_hybrid_family_dimensions(self):
        assert cat.get_entry("triangle").table().dimension == 24
        assert cat.get_entry("brauer_triangle").table().dimension == 12
        assert cat.get_entry("hybrid_triangle").table().dimension == 24
