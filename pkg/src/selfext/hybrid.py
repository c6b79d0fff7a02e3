"""Hybrid algebra presentations from biserial quiver data.

A biserial quiver is a connected 2-regular quiver Q with a permutation f of
the arrows satisfying s(f(a)) = t(a).  The second permutation g sends a to
the conjugate of f(a) under the "other arrow at the same source" involution.
A hybrid algebra is cut out by the relations of the defining presentation,
parametrised by a set of f-triangles, a weight per g-cycle and a nonzero
scalar per g-cycle.  Triangles switch the relation type at their arrows:
no triangles gives a Brauer graph algebra, all arrows in triangles gives a
weighted surface algebra.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from selfext.oracle import Arrow, BoundQuiverPresentation


class BiserialError(ValueError):
    pass


class NotTwoRegular(BiserialError):
    pass


class FPermutationMismatch(BiserialError):
    pass


class TriangleSetNotFInvariant(BiserialError):
    pass


class VirtualArrowPresent(BiserialError):
    pass


class ZeroParameter(BiserialError):
    pass


class VertexClass(enum.Enum):
    BISERIAL = "biserial"
    QUATERNION = "quaternion"
    HYBRID = "hybrid"


@dataclass
class BiserialQuiverData:
    vertices: list
    arrows: list[Arrow]
    f: dict[str, str]  # permutation of arrow labels
    triangles: frozenset[str]  # arrows lying in f-orbits of length 3 or 1
    weights: dict[str, int]  # m, constant on g-cycles (any cycle member as key)
    scalars: dict[str, int]  # c, nonzero mod p, constant on g-cycles

    # filled in by validate()
    bar: dict[str, str] = field(default_factory=dict, repr=False)
    g: dict[str, str] = field(default_factory=dict, repr=False)
    m: dict[str, int] = field(default_factory=dict, repr=False)
    c: dict[str, int] = field(default_factory=dict, repr=False)
    n: dict[str, int] = field(default_factory=dict, repr=False)
    vertex_class: dict = field(default_factory=dict, repr=False)

    def source(self, label):
        return self._by_label[label].source

    def target(self, label):
        return self._by_label[label].target


def _perm_cycles(perm: dict) -> list[list]:
    seen = set()
    cycles = []
    for start in perm:
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = perm[x]
        cycles.append(cyc)
    return cycles


def validate_biserial(data: BiserialQuiverData) -> BiserialQuiverData:
    """Check 2-regularity, the f axiom, triangle invariance and the no-virtual-arrow
    assumption; derive bar, g, g-cycle lengths and the vertex classification."""
    by_label = {a.label: a for a in data.arrows}
    if len(by_label) != len(data.arrows):
        raise BiserialError("duplicate arrow labels")
    data._by_label = by_label
    out_at = {v: [] for v in data.vertices}
    in_at = {v: [] for v in data.vertices}
    for a in data.arrows:
        out_at[a.source].append(a.label)
        in_at[a.target].append(a.label)
    for v in data.vertices:
        if len(out_at[v]) != 2 or len(in_at[v]) != 2:
            raise NotTwoRegular(
                f"vertex {v} has {len(out_at[v])} out / {len(in_at[v])} in arrows"
            )
    if set(data.f) != set(by_label) or set(data.f.values()) != set(by_label):
        raise FPermutationMismatch("f is not a permutation of the arrows")
    for lab, img in data.f.items():
        if by_label[img].source != by_label[lab].target:
            raise FPermutationMismatch(f"s(f({lab})) = {by_label[img].source} != t({lab})")
    data.bar = {}
    for v in data.vertices:
        x, y = out_at[v]
        data.bar[x] = y
        data.bar[y] = x
    data.g = {lab: data.bar[data.f[lab]] for lab in by_label}
    finv = {img: lab for lab, img in data.f.items()}
    for lab in by_label:
        ginv = {img: l for l, img in data.g.items()}
        assert ginv[lab] == finv[data.bar[lab]], f"g^-1 != f^-1 bar at {lab}"
    f_orbits = _perm_cycles(data.f)
    tri = set(data.triangles)
    for orb in f_orbits:
        hit = tri.intersection(orb)
        if hit and set(orb) != hit:
            raise TriangleSetNotFInvariant(f"triangle set cuts f-orbit {orb}")
        if hit and len(orb) not in (1, 3):
            raise TriangleSetNotFInvariant(
                f"f-orbit {orb} of length {len(orb)} cannot be a triangle"
            )
    g_cycles = _perm_cycles(data.g)
    data.m, data.c, data.n = {}, {}, {}
    for cyc in g_cycles:
        keys_m = [lab for lab in cyc if lab in data.weights]
        keys_c = [lab for lab in cyc if lab in data.scalars]
        if not keys_m:
            raise BiserialError(f"no weight given for g-cycle {cyc}")
        mvals = {data.weights[k] for k in keys_m}
        cvals = {data.scalars[k] for k in keys_c} if keys_c else {1}
        if len(mvals) != 1 or len(cvals) != 1:
            raise BiserialError(f"conflicting parameters on g-cycle {cyc}")
        mval, cval = mvals.pop(), cvals.pop()
        if mval < 1:
            raise BiserialError(f"weight on {cyc} must be positive")
        for lab in cyc:
            data.m[lab] = mval
            data.c[lab] = cval
            data.n[lab] = len(cyc)
    for lab in by_label:
        mn = data.m[lab] * data.n[lab]
        need = 3 if data.bar[lab] in tri else 2
        if mn < need:
            raise VirtualArrowPresent(
                f"m*n = {mn} < {need} at arrow {lab} (virtual arrows unsupported)"
            )
    data.vertex_class = {}
    for v in data.vertices:
        x, y = out_at[v]
        in_tri = (x in tri) + (y in tri)
        data.vertex_class[v] = (
            VertexClass.BISERIAL if in_tri == 0
            else VertexClass.QUATERNION if in_tri == 2
            else VertexClass.HYBRID
        )
    return data


def cycle_monomial(data: BiserialQuiverData, label: str) -> tuple[str, ...]:
    """B_label: the g-cycle monomial of length m*n starting with `label`."""
    mn = data.m[label] * data.n[label]
    out = []
    x = label
    for _ in range(mn):
        out.append(x)
        x = data.g[x]
    return tuple(out)


def submonomial(data: BiserialQuiverData, label: str) -> tuple[str, ...]:
    """A_label: B_label with its last arrow dropped."""
    return cycle_monomial(data, label)[:-1]


def build_hybrid(data: BiserialQuiverData, p: int) -> BoundQuiverPresentation:
    """Defining presentation of the hybrid algebra over F_p."""
    validate_biserial(data)
    for lab, cval in data.c.items():
        if cval % p == 0:
            raise ZeroParameter(f"scalar c on the g-cycle of {lab} vanishes mod {p}")
    relations = []
    tri = data.triangles
    for a in sorted(l.label for l in data.arrows):
        fa = data.f[a]
        if a in tri:
            bar = data.bar[a]
            relations.append(
                [(1, (a, fa)), (-data.c[bar] % p, submonomial(data, bar))]
            )
        else:
            relations.append([(1, (a, fa))])
        relations.append([(1, (a, fa, data.g[fa]))])
        ga = data.g[a]
        relations.append([(1, (a, ga, data.f[ga]))])
    done = set()
    for a in sorted(l.label for l in data.arrows):
        bar = data.bar[a]
        if (bar, a) in done:
            continue
        done.add((a, bar))
        relations.append(
            [(data.c[a] % p, cycle_monomial(data, a)),
             (-data.c[bar] % p, cycle_monomial(data, bar))]
        )
    bound = max(data.m[l.label] * data.n[l.label] for l in data.arrows) + 2
    return BoundQuiverPresentation(
        vertices=list(data.vertices),
        arrows=list(data.arrows),
        char_p=p,
        relations=relations,
        loewy_bound=bound,
    )


def triangle_data(weight: int = 2, triangles: bool = True, scalar: int = 1) -> BiserialQuiverData:
    """The 3-vertex testbed: a_i: i -> i+1, b_i: i -> i-1 (mod 3),
    f = (a0 a1 a2)(b0 b2 b1).  With all arrows in triangles and weight 2 every
    vertex is quaternion; with no triangles it is a Brauer graph algebra."""
    arrows = [Arrow(f"a{i}", i, (i + 1) % 3) for i in range(3)]
    arrows += [Arrow(f"b{i}", i, (i - 1) % 3) for i in range(3)]
    f = {"a0": "a1", "a1": "a2", "a2": "a0", "b0": "b2", "b2": "b1", "b1": "b0"}
    tri = frozenset(a.label for a in arrows) if triangles else frozenset()
    weights = {a.label: weight for a in arrows}
    scalars = {a.label: scalar for a in arrows}
    return BiserialQuiverData([0, 1, 2], arrows, f, tri, weights, scalars)
