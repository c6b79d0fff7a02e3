import pytest

from selfext import lab
from selfext import nakayama as nk
from selfext.lab import SweepConfig, Verdict
from selfext.nakayama import SerialModule, Shape


def cyc(*series):
    return nk.validate_kupisch(series, Shape.CYCLIC)


class TestEnumeration:
    def test_small_linear_range(self):
        config = SweepConfig(n_max=2, c_max=2, shapes=(Shape.LINEAR,))
        keys = [a.key() for a in lab.enumerate_kupisch(config)]
        assert keys == ["linear:2,1"]

    def test_cyclic_rotation_dedup(self):
        config = SweepConfig(n_max=2, c_max=3, shapes=(Shape.CYCLIC,))
        keys = [a.key() for a in lab.enumerate_kupisch(config)]
        assert "cyclic:2,3" in keys and "cyclic:3,2" not in keys

    def test_all_enumerated_are_valid(self):
        config = SweepConfig(n_max=3, c_max=5)
        for a in lab.enumerate_kupisch(config):
            nk.validate_kupisch(a.kupisch, a.shape)  # no exception

    def test_bad_config(self):
        with pytest.raises(ValueError):
            SweepConfig(n_max=0, c_max=3)


class TestCombinatorialChecks:
    @pytest.mark.parametrize("series", [(4, 4), (2, 3), (5, 5, 5), (9, 9)])
    def test_checks_pass(self, series):
        a = cyc(*series)
        config = SweepConfig(n_max=3, c_max=9)
        for name, fn in lab.CHECKS.items():
            verdict = fn(a, config)
            assert not verdict.failed, (name, verdict.witness)

    def test_theorem_1_7_certificate(self):
        verdict = lab.check_theorem_1_7(cyc(4, 4))
        assert verdict.status == "pass"
        assert verdict.witness["certificate"] == "all_i"

    def test_theorem_1_7_skipped_when_all_rigid(self):
        assert lab.check_theorem_1_7(cyc(2, 3)).status == "skipped"

    def test_extremal_series(self):
        for n in (2, 3, 4):
            a = lab.extremal_series(n)
            assert a.kupisch[0] == n and a.loewy_length() == 2 * n - 1
            assert lab.gldim_finite(a)

    def test_verdict_roundtrip(self):
        v = Verdict("cyclic:4,4", "rigidity", "fail", {"module": [0, 2]})
        d = v.to_dict()
        assert d["witness"] == {"module": [0, 2]} and v.failed


class TestOracleCrossCheck:
    @pytest.mark.parametrize("series,shape", [
        ((4, 4), Shape.CYCLIC),
        ((2, 3), Shape.CYCLIC),
        ((5,), Shape.CYCLIC),
        ((3, 2, 1), Shape.LINEAR),
    ])
    @pytest.mark.parametrize("p", [2, 3])
    def test_agreement(self, series, shape, p):
        a = nk.validate_kupisch(series, shape)
        verdict = lab.cross_check_oracle(a, p, depth=8)
        assert verdict.status == "pass", verdict.witness

    def test_realized_dimension(self):
        a = cyc(4, 4)
        import selfext.oracle as orc
        table = orc.build_algebra(lab.realize_presentation(a, 2))
        assert table.dimension == a.dimension()
        m = lab.realize_serial(table, a, SerialModule(0, 2))
        assert m.total_dim == 2


def test_run_sweep_small_all_pass():
    config = SweepConfig(n_max=2, c_max=4, ext_depth=8)
    verdicts = list(lab.run_sweep(config))
    assert verdicts and not any(v.failed for v in verdicts)
    # deterministic instance order
    instances = [v.instance for v in verdicts]
    assert instances == sorted(instances, key=instances.index)
