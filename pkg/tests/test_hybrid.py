import pytest

from selfext import hybrid as hy
from selfext import oracle as orc
from selfext.hybrid import (
    BiserialQuiverData,
    FPermutationMismatch,
    NotTwoRegular,
    TriangleSetNotFInvariant,
    VertexClass,
    VirtualArrowPresent,
    ZeroParameter,
)
from selfext.oracle import Arrow


def swap_f():
    """An f on the triangle quiver whose orbits all have length 2."""
    return {"a0": "b1", "b1": "a0", "a1": "b2", "b2": "a1", "a2": "b0", "b0": "a2"}


class TestValidation:
    def test_triangle_derived_data(self):
        data = hy.validate_biserial(hy.triangle_data())
        assert data.g == {"a0": "b1", "b1": "a0", "a1": "b2",
                          "b2": "a1", "a2": "b0", "b0": "a2"}
        assert all(data.n[lab] == 2 for lab in data.m)
        assert all(data.vertex_class[v] is VertexClass.QUATERNION for v in [0, 1, 2])

    def test_vertex_classes_mixed(self):
        data = hy.triangle_data()
        data.triangles = frozenset(["a0", "a1", "a2"])
        data = hy.validate_biserial(data)
        assert all(data.vertex_class[v] is VertexClass.HYBRID for v in [0, 1, 2])
        data = hy.triangle_data(weight=1, triangles=False)
        data = hy.validate_biserial(data)
        assert all(data.vertex_class[v] is VertexClass.BISERIAL for v in [0, 1, 2])

    def test_not_two_regular(self):
        data = hy.triangle_data()
        data.arrows = data.arrows[:-1]
        data.f = {k: v for k, v in data.f.items() if "b1" not in (k, v)}
        with pytest.raises(NotTwoRegular):
            hy.validate_biserial(data)

    def test_f_axiom_violation(self):
        data = hy.triangle_data()
        # a2 -> a0 replaced by a2 -> a1, whose source 1 is not t(a2) = 0
        data.f = dict(data.f, a2="a1", a1="a0", a0="a2")
        with pytest.raises(FPermutationMismatch):
            hy.validate_biserial(data)

    def test_f_not_a_permutation(self):
        data = hy.triangle_data()
        data.f = dict(data.f)
        del data.f["b0"]
        with pytest.raises(FPermutationMismatch):
            hy.validate_biserial(data)

    def test_triangle_set_cuts_orbit(self):
        data = hy.triangle_data()
        data.triangles = frozenset(["a0"])  # f-orbit is {a0, a1, a2}
        with pytest.raises(TriangleSetNotFInvariant):
            hy.validate_biserial(data)

    def test_two_orbit_cannot_be_triangle(self):
        data = hy.triangle_data()
        data.f = swap_f()
        data.triangles = frozenset(["a0", "b1"])
        with pytest.raises(TriangleSetNotFInvariant):
            hy.validate_biserial(data)

    def test_virtual_arrow_rejected(self):
        with pytest.raises(VirtualArrowPresent):
            hy.validate_biserial(hy.triangle_data(weight=1, triangles=True))

    def test_zero_scalar_rejected(self):
        with pytest.raises(ZeroParameter):
            hy.build_hybrid(hy.triangle_data(scalar=2), 2)


class TestMonomials:
    def test_cycle_and_submonomial(self):
        data = hy.validate_biserial(hy.triangle_data(weight=2))
        b = hy.cycle_monomial(data, "a0")
        assert b == ("a0", "b1", "a0", "b1")
        assert hy.submonomial(data, "a0") == b[:-1]


class TestBuild:
    def test_weighted_surface_dimension(self):
        pres = hy.build_hybrid(hy.triangle_data(weight=2), 2)
        table = orc.build_algebra(pres)
        assert table.dimension == 24
        assert orc.weakly_symmetric_check(table)

    def test_brauer_graph_dimension(self):
        pres = hy.build_hybrid(hy.triangle_data(weight=1, triangles=False), 2)
        table = orc.build_algebra(pres)
        assert table.dimension == 12
        assert orc.weakly_symmetric_check(table)

    def test_no_triangles_gives_monomial_squares(self):
        pres = hy.build_hybrid(hy.triangle_data(weight=1, triangles=False), 3)
        data = hy.validate_biserial(hy.triangle_data(weight=1, triangles=False))
        for a in ("a0", "a1", "a2", "b0", "b1", "b2"):
            assert [(1, (a, data.f[a]))] in pres.relations

    def test_triangles_deform_squares(self):
        data = hy.validate_biserial(hy.triangle_data(weight=2))
        pres = hy.build_hybrid(hy.triangle_data(weight=2), 5)
        for a in ("a0", "b0"):
            rel = next(r for r in pres.relations
                       if len(r) == 2 and r[0][1] == (a, data.f[a]))
            coeff, mono = rel[1]
            assert mono == hy.submonomial(data, data.bar[a])
            assert coeff == (-1) % 5

    def test_odd_characteristic(self):
        pres = hy.build_hybrid(hy.triangle_data(weight=2), 3)
        assert orc.build_algebra(pres).dimension == 24


def test_structural_identities_on_triangle():
    """Per-vertex and per-arrow dimension identities of the defining relations."""
    data = hy.validate_biserial(hy.triangle_data(weight=2))
    table = orc.build_algebra(hy.build_hybrid(hy.triangle_data(weight=2), 2))
    for v in data.vertices:
        out = [lab for lab in data.m if data.source(lab) == v]
        expected = sum(data.m[lab] * data.n[lab] for lab in out)
        assert table.projective_module(v).total_dim == expected
    for lab in data.m:
        mn = data.m[lab] * data.n[lab]
        expected = mn + 1 if lab in data.triangles else mn
        assert table.arrow_module(lab).total_dim == expected
