import math

import pytest

from selfext import nakayama as nk
from selfext.nakayama import (
    INFINITE,
    DisconnectedQuiver,
    LinearOverflow,
    MissingTerminalSimple,
    MonotonicityViolation,
    NotSelfInjective,
    ProjectiveInput,
    SerialModule,
    Shape,
)


def cyc(*series):
    return nk.validate_kupisch(series, Shape.CYCLIC)


def lin(*series):
    return nk.validate_kupisch(series, Shape.LINEAR)


class TestValidation:
    def test_valid_examples(self):
        assert cyc(4, 4).n == 2
        assert cyc(1).dimension() == 1
        assert lin(2, 2, 1).loewy_length() == 2

    def test_monotonicity(self):
        with pytest.raises(MonotonicityViolation):
            cyc(4, 2)
        with pytest.raises(MonotonicityViolation):
            lin(3, 1, 1)

    def test_cyclic_needs_c_at_least_2(self):
        with pytest.raises(DisconnectedQuiver):
            cyc(1, 1)

    def test_linear_terminal_simple(self):
        with pytest.raises(MissingTerminalSimple):
            lin(2, 2)

    def test_linear_overflow(self):
        with pytest.raises(LinearOverflow):
            lin(4, 3, 1)

    def test_positive_lengths(self):
        with pytest.raises(nk.KupischError):
            cyc(0)


class TestSyzygyAndHom:
    def test_syzygy_formula(self):
        a = cyc(4, 4)
        assert nk.syzygy(a, SerialModule(0, 2)) == SerialModule(0, 2)
        assert nk.syzygy(a, SerialModule(0, 4)) is None
        assert nk.syzygy(a, SerialModule(0, 1)) == SerialModule(1, 3)

    def test_hom_path_count(self):
        a = cyc(4, 4)
        # Hom((i,k),(j,l)) counts paths j -> i of length max(0,l-k)..l-1
        assert nk.hom_dim(a, SerialModule(0, 4), SerialModule(0, 4)) == 2
        assert nk.hom_dim(a, SerialModule(0, 1), SerialModule(0, 4)) == 0
        assert nk.hom_dim(a, SerialModule(0, 1), SerialModule(1, 4)) == 1

    def test_hom_linear_no_wraparound(self):
        a = lin(2, 2, 1)
        assert nk.hom_dim(a, SerialModule(0, 2), SerialModule(0, 2)) == 1
        assert nk.hom_dim(a, SerialModule(0, 2), SerialModule(2, 1)) == 0

    def test_ext1_via_four_term_sequence(self):
        a = cyc(4, 4)
        assert nk.ext1_dim(a, SerialModule(0, 2), SerialModule(0, 2)) == 1
        assert nk.ext1_dim(a, SerialModule(0, 1), SerialModule(0, 1)) == 0

    def test_ext_higher_degrees(self):
        a = cyc(3, 3, 3)
        m = SerialModule(0, 1)
        vals = [nk.ext_dim(a, m, m, i) for i in range(1, 7)]
        assert vals == [0, 1, 0, 1, 0, 1]


class TestRigidity:
    def test_criterion_window(self):
        a = cyc(4, 4)
        # non-rigid iff n <= k <= c_i - n, here 2 <= k <= 2
        assert not nk.is_rigid(a, SerialModule(0, 2))
        assert nk.is_rigid(a, SerialModule(0, 1))
        assert nk.is_rigid(a, SerialModule(0, 3))

    def test_linear_always_rigid(self):
        a = lin(3, 2, 1)
        assert all(nk.is_rigid(a, m) for m in a.modules())


class TestProjAndInjDim:
    def test_finite_pd(self):
        a = cyc(2, 3)
        assert nk.proj_dim(a, SerialModule(0, 1)) == 2

    def test_infinite_pd_on_self_injective(self):
        a = cyc(3, 3)
        assert nk.proj_dim(a, SerialModule(0, 1)) == INFINITE

    def test_opposite_involution_and_dimension(self):
        for a in [cyc(2, 3), cyc(4, 4), lin(3, 2, 1), lin(2, 2, 1)]:
            aop = nk.opposite_algebra(a)
            assert aop.dimension() == a.dimension()
            assert nk.opposite_algebra(aop).kupisch == a.kupisch

    def test_inj_dim_matches_dual_pd(self):
        a = cyc(2, 3)
        for m in a.modules():
            assert nk.inj_dim(a, m) == nk.proj_dim(
                nk.opposite_algebra(a), nk.dual_module(a, m)
            )


class TestOmegaOrbitAndTate:
    def test_orbit_cycles_on_self_injective(self):
        a = cyc(3, 3, 3)
        chain, start = nk.omega_orbit(a, SerialModule(0, 1))
        assert start >= 0
        assert nk.omega_period(a, SerialModule(0, 1)) == len(chain) - start

    def test_orbit_terminates_for_finite_pd(self):
        a = cyc(2, 3)
        chain, start = nk.omega_orbit(a, SerialModule(0, 1))
        assert start == -1 and len(chain) == 3

    def test_tate_requires_self_injective(self):
        with pytest.raises(NotSelfInjective):
            nk.tate_ext_dim(cyc(2, 3), SerialModule(0, 1), -1)
        with pytest.raises(ProjectiveInput):
            nk.tate_ext_dim(cyc(3, 3), SerialModule(0, 3), -1)

    def test_tate_periodicity(self):
        a = cyc(3, 3, 3)
        m = SerialModule(0, 1)
        period = nk.omega_period(a, m)
        for i in range(-6, 0):
            assert nk.tate_ext_dim(a, m, i) == nk.tate_ext_dim(a, m, i + period)
        assert nk.tate_ext_dim(a, m, 2) == nk.ext_dim(a, m, m, 2)


def test_report_contents():
    a = cyc(4, 4)
    rep = nk.report(a, SerialModule(0, 2), depth=5)
    assert rep.proj_dim == INFINITE
    assert not rep.rigid
    assert rep.ext_dims == [1, 1, 1, 1, 1]
    assert math.isinf(rep.inj_dim)
