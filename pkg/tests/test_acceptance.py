"""Acceptance suite: one test per headline claim.

Criteria 1 and 2 share a cached oracle realization of every cyclic Kupisch
algebra with n <= 3 and c_i <= 9 over F_2 and F_3; the remaining criteria
run against the combinatorial layer and the named catalog instances.
"""

import pytest

from selfext import catalog as cat
from selfext import lab
from selfext import nakayama as nk
from selfext import oracle as orc
from selfext.nakayama import INFINITE, Shape

PRIMES = (2, 3)
EXT_DEPTH = 20


@pytest.fixture(scope="module")
def sweep():
    config = lab.SweepConfig(n_max=3, c_max=9, shapes=(Shape.CYCLIC,),
                             ext_depth=EXT_DEPTH)
    algebras = list(lab.enumerate_kupisch(config))
    views = {(a.key(), p): lab._OracleView(a, p)
             for a in algebras for p in PRIMES}
    return algebras, views


def test_criterion_01_rigidity_matches_oracle(sweep):
    algebras, views = sweep
    mismatches = []
    for a in algebras:
        for p in PRIMES:
            view = views[(a.key(), p)]
            for m in view.mods:
                if nk.is_rigid(a, m) != (view.ext1(m, m) == 0):
                    mismatches.append((a.key(), p, (m.i, m.k)))
    assert mismatches == []


def test_criterion_02_formula_oracle_agreement(sweep):
    algebras, views = sweep
    mismatches = []
    for a in algebras:
        for p in PRIMES:
            view = views[(a.key(), p)]
            if view.table.dimension != a.dimension():
                mismatches.append((a.key(), p, "dimension"))
            for m in view.mods:
                if view.proj_dim(m) != nk.proj_dim(a, m):
                    mismatches.append((a.key(), p, "proj_dim", (m.i, m.k)))
                for n in view.mods:
                    if view.hom[(m, n)] != nk.hom_dim(a, m, n):
                        mismatches.append((a.key(), p, "hom", (m.i, m.k), (n.i, n.k)))
                    if view.ext1(m, n) != nk.ext1_dim(a, m, n):
                        mismatches.append((a.key(), p, "ext1", (m.i, m.k), (n.i, n.k)))
                    for i in range(2, EXT_DEPTH + 1):
                        if view.ext(m, n, i) != nk.ext_dim(a, m, n, i):
                            mismatches.append(
                                (a.key(), p, "ext", i, (m.i, m.k), (n.i, n.k)))
    assert mismatches == []


def test_criterion_03_nonrigid_ext_never_vanishes(sweep):
    algebras, _ = sweep
    for a in algebras:
        verdict = lab.check_theorem_1_7(a, depth=EXT_DEPTH)
        assert not verdict.failed, (a.key(), verdict.witness)
        if verdict.status == "pass":
            assert verdict.witness["certificate"] == "all_i", a.key()


def test_criterion_04_min_inequalities(sweep):
    algebras, _ = sweep
    for a in algebras:
        verdict = lab.check_theorem_1_5(a)
        assert not verdict.failed, (a.key(), verdict.witness)


def test_criterion_05_finite_gldim_forces_rigidity(sweep):
    algebras, _ = sweep
    for a in algebras:
        verdict = lab.check_prop_1_8(a, depth=EXT_DEPTH)
        assert not verdict.failed, (a.key(), verdict.witness)
        if lab.gldim_finite(a):
            assert a.loewy_length() <= 2 * a.n - 1
            assert all(nk.is_rigid(a, m) for m in a.modules())
    for n in (2, 3, 4):
        a = lab.extremal_series(n)
        assert lab.gldim_finite(a)
        assert a.loewy_length() == 2 * n - 1


def test_criterion_06_ext1_nonzero_ext3_zero():
    t = cat.get_entry("example_2_8").table()
    s1 = t.simple_module(1)
    res = orc.Resolution(s1)
    assert orc.ext_dim(s1, s1, 1, res) >= 1
    assert orc.ext_dim(s1, s1, 3, res) == 0


@pytest.mark.parametrize("name", ["sd2b3_s2_c0", "sd2b3_s2_c1"])
def test_criterion_07_two_loop_algebra(name):
    entry = cat.get_entry(name)
    t = entry.table()
    cm = t.cartan_matrix()
    assert (cm[(0, 0)], cm[(0, 1)], cm[(1, 0)], cm[(1, 1)]) == (4, 2, 2, 4)
    w = entry.module("W")
    assert w.dimension_vector() == (3, 3)
    assert orc.iso_test(orc.Resolution(w).syzygy(2), w) == "isomorphic"
    for v in (0, 1):
        s = t.simple_module(v)
        res = orc.Resolution(s)
        for n in range(1, 13):
            assert orc.hom_space_dim(res.syzygy(n), s) > 0, (name, v, n)


@pytest.mark.parametrize("name", ["sd3c1", "sd3c2"])
def test_criterion_08_three_vertex_period_3(name):
    entry = cat.get_entry(name)
    t = entry.table()
    assert orc.omega_period(entry.module("rho"), 4) == 3
    assert orc.omega_period(entry.module("W"), 4) == 3
    s0 = t.simple_module(0)
    res = orc.Resolution(s0)
    for n in range(1, 13):
        assert orc.ext_dim(s0, s0, n, res) > 0, (name, n)


def test_criterion_09_hybrid_vertex_syzygy_chain():
    entry = cat.get_entry("sd2a2")
    t = entry.table()
    x = entry.module("X")
    res_x = orc.Resolution(x)
    assert orc.iso_test(res_x.syzygy(1), t.arrow_module("a")) == "isomorphic"
    ab = t.path_module(0, ("a", "b"))
    assert orc.iso_test(res_x.syzygy(2), ab) == "isomorphic"
    assert orc.iso_test(orc.Resolution(t.simple_module(0)).syzygy(3),
                        orc.radical(ab)) == "isomorphic"
    w = entry.module("W")
    assert orc.is_indecomposable(w) == "indecomposable"
    assert orc.omega_period(w, 6) == 3


@pytest.mark.parametrize("name", ["triangle", "brauer_triangle"])
def test_criterion_10_structural_identities(name):
    verdicts = cat.structural_checks(cat.get_entry(name))
    checks = {v.check: v.status for v in verdicts}
    assert checks == {"weakly_symmetric": "pass", "dim_eL": "pass",
                      "dim_arrowL": "pass", "dim_alpha_g_alpha_L": "pass"}


def test_criterion_11_quaternion_vertices():
    entry = cat.get_entry("triangle")
    t = entry.table()
    for v in (0, 1, 2):
        for verdict in cat.verify_quaternion_period4(entry, v):
            assert verdict.status == "pass", (verdict.check, verdict.witness)
        # the hearts rad P_v / soc P_v are 4-periodic non-rigid witnesses
        p = t.projective_module(v)
        rad = orc.radical(p)
        heart = orc.quotient_module(rad, orc.restrict_to(rad, orc.socle(p)))
        assert orc.omega_period(heart, 8) == 4
        res = orc.Resolution(heart)
        assert orc.ext_dim(heart, heart, 1, res) > 0
        assert all(orc.ext_dim(heart, heart, i, res) > 0 for i in range(1, 5))
    scan = cat.verify_four_periodic_nonrigid(entry)
    assert scan.status == "pass" and scan.witness["modules_checked"] >= 3


def test_criterion_12_local_group_algebras():
    for name in ("local_c2", "local_c4", "local_c3", "local_c5"):
        entry = cat.get_entry(name)
        for verdict in cat.verify_local_group(entry):
            assert verdict.status == "pass", (name, verdict.check, verdict.witness)
        a = nk.validate_kupisch(entry.params["kupisch"], Shape.CYCLIC)
        for m in a.modules():
            if m.k == a.c(m.i):
                continue  # projective
            assert not nk.is_rigid(a, m)
            assert nk.proj_dim(a, m) == INFINITE
            period = nk.omega_period(a, m)
            assert all(nk.ext_dim(a, m, m, i) > 0 for i in range(1, period + 1))
    klein = cat.get_entry("klein")
    t = klein.table()
    s = t.simple_module(0)
    res = orc.Resolution(s)
    assert orc.ext_dim(s, s, 1, res) == 2 == t.gabriel_arrow_count(0, 0)
    for i in range(2, 11):
        assert orc.ext_dim(s, s, i, res) > 0, i
