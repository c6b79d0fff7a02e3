"""Fixed catalog of bound quiver algebras and their verification suites.

Each entry packages a presentation over a prime field with pinned parameter
choices and a Loewy bound, named modules for the CLI (W, X, rho, ...), and a
verify() method that runs the structural checks relevant to that family:
syzygy periodicity, loop nonvanishing patterns, quaternion-vertex period-4
resolutions, biserial- and hybrid-vertex syzygy sequences, and the local
group algebra desk checks.

Exact-sequence claims are verified by dimension bookkeeping, simplicity of
quotients and isomorphism testing rather than by chasing explicit maps.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from selfext import gfp
from selfext import nakayama as nk
from selfext import oracle as orc
from selfext.hybrid import (
    BiserialQuiverData,
    build_hybrid,
    cycle_monomial,
    submonomial,
    triangle_data,
    validate_biserial,
)
from selfext.lab import Verdict
from selfext.nakayama import Shape
from selfext.oracle import Arrow, BoundQuiverPresentation


class UnknownCatalogEntry(KeyError):
    pass


class UnknownModuleName(KeyError):
    pass


class NotACatalogSDAlgebra(ValueError):
    pass


class NoLoopAtVertex(ValueError):
    pass


class VertexNotQuaternion(ValueError):
    pass


class VertexNotHybrid(ValueError):
    pass


class VertexNotBiserial(ValueError):
    pass


class MissingBiserialData(ValueError):
    pass


# ---------------------------------------------------------------------------
# element and homomorphism plumbing over oracle modules


def sum_element(table: orc.AlgebraTable, pmods: list, parts: list) -> dict:
    """Element of direct_sum(pmods); parts[i] is a list of (coeff, path labels)
    read in the i-th projective summand."""
    p = table.p
    elem = {
        v: [np.zeros(pm.dims[v], dtype=np.int64) for pm in pmods]
        for v in table.pres.vertices
    }
    for i, terms in enumerate(parts):
        pm = pmods[i]
        src = pm._proj_layout[0]
        for coeff, labels in terms:
            e = table._element_in_projective(pm, src, tuple(labels))
            for v in table.pres.vertices:
                elem[v][i] = (elem[v][i] + coeff * e[v]) % p
    return {v: np.concatenate(elem[v]) for v in table.pres.vertices}


def kernel_of_hom(m: orc.OracleModule, n: orc.OracleModule, h: dict) -> orc.OracleModule:
    """Kernel of a homomorphism h: m -> n (per-vertex matrices), as a submodule of m."""
    gens = []
    for v in m.table.pres.vertices:
        if m.dims[v] == 0:
            continue
        if n.dims[v] == 0:
            ker = np.eye(m.dims[v], dtype=np.int64)
        else:
            ker = gfp.nullspace(h[v].T % m.p, m.p)
        for row in ker:
            g = {u: np.zeros(m.dims[u], dtype=np.int64) for u in m.table.pres.vertices}
            g[v] = row
            gens.append(g)
    return orc.submodule(m, gens)


def left_multiplication_cover(table: orc.AlgebraTable, summands: list, paths: list,
                              target: orc.OracleModule) -> dict:
    """The map d: P_{s1} + ... + P_{sk} -> P_i, (x_1..x_k) -> sum lambda_j x_j,
    for left factors lambda_j (paths from i).  Kernel = syzygy of the image."""
    tv, _, tpos = target._proj_layout
    h = {}
    for v in table.pres.vertices:
        rows = []
        for pm, lam in zip(summands, paths):
            _, slay, _ = pm._proj_layout
            for key in slay[v]:
                _, q = key
                vec = table.reduce_path(tv, tuple(lam) + q)
                out = np.zeros(target.dims[v], dtype=np.int64)
                for j in np.nonzero(vec)[0]:
                    out[tpos[table.basis[j]]] = vec[j]
                rows.append(out)
        h[v] = np.array(rows, dtype=np.int64).reshape(len(rows), target.dims[v])
    return h


def maximal_submodules_with_simple_quotient(m: orc.OracleModule, v):
    """All kernels of nonzero maps m -> S_v, in a deterministic order."""
    s = m.table.simple_module(v)
    basis = orc.hom_basis(m, s)
    p = m.p
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        if not any(coeffs):
            continue
        h = {
            u: sum(c * hh[u] for c, hh in zip(coeffs, basis)) % p
            for u in m.table.pres.vertices
        }
        yield kernel_of_hom(m, s, h)


def loewy_layers(m: orc.OracleModule) -> list[dict]:
    """Top-to-socle composition factor layers."""
    layers = []
    while m.total_dim:
        layers.append(m.top_dims())
        m = orc.radical(m)
    return layers


# ---------------------------------------------------------------------------
# catalog entries


@dataclass
class CatalogEntry:
    name: str
    description: str
    family: str
    presentation: BoundQuiverPresentation
    params: dict = field(default_factory=dict)
    biserial: BiserialQuiverData | None = None
    _table: orc.AlgebraTable | None = field(default=None, repr=False)

    @property
    def p(self) -> int:
        return self.presentation.char_p

    def table(self) -> orc.AlgebraTable:
        if self._table is None:
            self._table = orc.build_algebra(self.presentation)
        return self._table

    def module(self, name: str) -> orc.OracleModule:
        """Resolve a module expression: S<v>, P<v>, arrow:<label>, path:<l1.l2...>,
        or an entry-specific name (W, X, rho, U, H)."""
        t = self.table()
        builders = _SPECIAL_MODULES.get(self.family, {})
        if name in builders:
            return builders[name](self)
        if name.startswith("arrow:"):
            return t.arrow_module(name[len("arrow:"):])
        if name.startswith("path:"):
            labels = tuple(name[len("path:"):].split("."))
            src, _ = self.presentation.path_endpoints(labels)
            return t.path_module(src, labels)
        for prefix, fn in (("S", t.simple_module), ("P", t.projective_module)):
            if name.startswith(prefix):
                try:
                    v = int(name[len(prefix):])
                except ValueError:
                    break
                if v not in self.presentation.vertices:
                    raise UnknownModuleName(f"no vertex {v} in {self.name}")
                return fn(v)
        raise UnknownModuleName(f"{name!r} is not a module of catalog entry {self.name}")

    def verify(self, depth: int = 12, seed: int = 0) -> list[Verdict]:
        return _SUITES[self.family](self, depth, seed)


def _ws_verdict(entry: CatalogEntry) -> Verdict:
    ok = orc.weakly_symmetric_check(entry.table())
    return Verdict(entry.name, "weakly_symmetric", "pass" if ok else "fail",
                   None if ok else {"socles": entry.table().projective_module(
                       entry.presentation.vertices[0]).socle_dims()})


# -- local group algebras ----------------------------------------------------


def _local_nakayama_entry(name, p, a):
    c = p ** a
    pres = BoundQuiverPresentation([0], [Arrow("x", 0, 0)], p,
                                   [[(1, ("x",) * c)]], c)
    return CatalogEntry(
        name=name,
        description=f"group algebra F_{p}[C_{c}], local Nakayama with J^{c} = 0",
        family="local_group",
        presentation=pres,
        params={"p": p, "a": a, "c": c, "kupisch": [c]},
    )


def _klein_entry():
    pres = BoundQuiverPresentation(
        [0],
        [Arrow("x", 0, 0), Arrow("y", 0, 0)],
        2,
        [[(1, ("x", "x"))], [(1, ("y", "y"))],
         [(1, ("x", "y")), (-1, ("y", "x"))]],
        3,
    )
    return CatalogEntry(
        name="klein",
        description="group algebra F_2[C_2 x C_2], commutative local, two loops",
        family="klein",
        presentation=pres,
        params={"ext_depth": 10, "ext1_expected": 2},
    )


def verify_local_group(entry: CatalogEntry, depth: int = 12, seed: int = 0) -> list[Verdict]:
    """Every non-projective module over F_p[G], G a p-group, is non-rigid with
    Ext^i != 0 for all i.  Cyclic case certified through the Kupisch orbit;
    Klein four checked to the configured depth with dim Ext^1 = loop count."""
    t = entry.table()
    out = [_ws_verdict(entry)]
    if entry.family == "local_group":
        a = nk.validate_kupisch(entry.params["kupisch"], Shape.CYCLIC)
        for m in a.modules():
            if nk.is_projective(a, m):
                continue
            chain, cycle_start = nk.omega_orbit(a, m)
            vals = [nk.ext1_dim(a, x, m) for x in chain]
            if nk.is_rigid(a, m) or cycle_start < 0 or any(v == 0 for v in vals):
                out.append(Verdict(entry.name, "all_ext_nonzero", "fail",
                                   {"module": [m.i, m.k], "orbit_values": vals}))
                return out
        real = orc.build_algebra(entry.presentation)
        if real.dimension != a.dimension():
            out.append(Verdict(entry.name, "all_ext_nonzero", "fail",
                               {"reason": "oracle dimension mismatch"}))
            return out
        out.append(Verdict(entry.name, "all_ext_nonzero", "pass",
                           {"certificate": "all_i"}))
        return out
    s = t.simple_module(0)
    res = orc.Resolution(s)
    vals = [orc.ext_to_simple(s, i, 0, res) for i in range(1, entry.params["ext_depth"] + 1)]
    ok = all(v > 0 for v in vals) and vals[0] == entry.params["ext1_expected"]
    ok = ok and vals[0] == t.gabriel_arrow_count(0, 0)
    out.append(Verdict(entry.name, "simple_ext_nonzero", "pass" if ok else "fail",
                       {"ext_dims": vals}))
    return out


# -- Example 2.8 and loop nonvanishing patterns ------------------------------


def _example_2_8_entry():
    arrows = [Arrow("a1", 1, 1), Arrow("b1", 1, 2), Arrow("b2", 2, 3), Arrow("b3", 3, 1)]
    rels = [
        [(1, ("b3", "b1"))],
        [(1, ("a1", "a1", "b1"))],
        [(1, ("b1", "b2", "b3")), (-1, ("a1", "a1"))],
        [(1, ("b3", "a1", "a1"))],
        [(1, ("a1", "a1", "a1", "a1"))],
        [(1, ("b2", "b3", "a1", "b1", "b2"))],
    ]
    pres = BoundQuiverPresentation([1, 2, 3], arrows, 2, rels, 6)
    return CatalogEntry(
        name="example_2_8",
        description="representation-finite symmetric algebra with Ext^1(S_1,S_1) != 0 "
                    "but Ext^3(S_1,S_1) = 0",
        family="example_2_8",
        presentation=pres,
        params={"loop_vertex": 1, "expected_pattern": "exception", "zero_at": 3},
    )


def verify_loop_nonvanishing(entry: CatalogEntry, v, depth: int = 12,
                             seed: int = 0) -> Verdict:
    """Nonvanishing pattern of Ext^n(S_v, S_v) for a loop vertex v, classified
    against the expected pattern (all n, or the documented exception)."""
    t = entry.table()
    if t.gabriel_arrow_count(v, v) == 0:
        raise NoLoopAtVertex(f"no loop at vertex {v} in {entry.name}")
    s = t.simple_module(v)
    res = orc.Resolution(s)
    vals = [orc.ext_to_simple(s, n, v, res) for n in range(1, depth + 1)]
    zeros = [n + 1 for n, val in enumerate(vals) if val == 0]
    expected = entry.params.get("expected_pattern", "all_n")
    if expected == "all_n":
        status = "pass" if not zeros else "fail"
    else:
        want = entry.params["zero_at"]
        status = "pass" if (vals[0] > 0 and want in zeros) else "fail"
    return Verdict(entry.name, f"loop_nonvanishing_v{v}", status,
                   {"ext_dims": vals, "zeros_at": zeros, "expected": expected})


def verify_example_2_8(entry: CatalogEntry, depth: int = 12, seed: int = 0) -> list[Verdict]:
    out = [_ws_verdict(entry)]
    v = entry.params["loop_vertex"]
    t = entry.table()
    s = t.simple_module(v)
    res = orc.Resolution(s)
    e1 = orc.ext_to_simple(s, 1, v, res)
    e3 = orc.ext_to_simple(s, 3, v, res)
    out.append(Verdict(entry.name, "ext1_nonzero_ext3_zero",
                       "pass" if (e1 >= 1 and e3 == 0) else "fail",
                       {"ext1": e1, "ext3": e3}))
    out.append(verify_loop_nonvanishing(entry, v, depth, seed))
    return out


# -- semidihedral-type entries ------------------------------------------------

_SD3C_QUIVER = [Arrow("b", 1, 0), Arrow("g", 0, 1), Arrow("d", 0, 2),
                Arrow("e", 2, 0), Arrow("r", 0, 0)]


def _sd3c1_entry(s: int = 3):
    rels = [
        [(1, ("b", "d"))], [(1, ("b", "r"))], [(1, ("r", "g"))],
        [(1, ("e", "g"))], [(1, ("e", "r"))], [(1, ("r", "d"))],
        [(1, ("r",) * s), (-1, ("g", "b"))],
        [(1, ("g", "b")), (-1, ("d", "e"))],
        [(1, ("b", "g", "b"))], [(1, ("e", "d", "e"))],
    ]
    pres = BoundQuiverPresentation([0, 1, 2], _SD3C_QUIVER, 2, rels, s + 2)
    return CatalogEntry(
        name="sd3c1",
        description=f"semidihedral-type three-vertex algebra, first family, s={s}",
        family="sd3c",
        presentation=pres,
        params={"s": s, "loop_vertex": 0, "expected_pattern": "all_n"},
    )


def _sd3c2_entry(s: int = 2, k: int = 2):
    # The two pure zero relations are the images of each other under the
    # vertex swap 1 <-> 2 (published versions misprint the first of them).
    rels = [
        [(1, ("b", "r"))], [(1, ("r", "d"))], [(1, ("e", "r"))], [(1, ("r", "g"))],
        [(1, ("g", "b")), (-1, ("d", "e"))],
        [(1, ("g", "b") * k), (-1, ("r",) * s)],
        [(1, ("b", "g") * (k - 1) + ("b", "d"))],
        [(1, ("e", "d") * (k - 1) + ("e", "g"))],
    ]
    pres = BoundQuiverPresentation([0, 1, 2], _SD3C_QUIVER, 2, rels, 2 * k + 1)
    return CatalogEntry(
        name="sd3c2",
        description=f"semidihedral-type three-vertex algebra, second family, s={s}, k={k}",
        family="sd3c",
        presentation=pres,
        params={"s": s, "k": k, "loop_vertex": 0, "expected_pattern": "all_n"},
    )


def _sd3c_W(entry: CatalogEntry) -> orc.OracleModule:
    """The period-3 maximal submodule W of Omega^2(S_0) with quotient S_0."""
    t = entry.table()
    o2 = orc.Resolution(t.simple_module(0)).syzygy(2)
    for w in maximal_submodules_with_simple_quotient(o2, 0):
        if w.total_dim != o2.total_dim - 1:
            continue
        if not orc.is_top_good(o2, w):
            continue
        if orc.omega_period(w, 4) == 3:
            return w
    raise NotACatalogSDAlgebra(f"no period-3 W inside Omega^2(S_0) of {entry.name}")


def verify_sd_syzygy_structure(entry: CatalogEntry, depth: int = 12,
                               seed: int = 0) -> list[Verdict]:
    if entry.family == "sd3c":
        return _verify_sd3c(entry, seed)
    if entry.family == "sd2b3":
        return _verify_sd2b3(entry, seed)
    raise NotACatalogSDAlgebra(f"{entry.name} has no SD syzygy suite")


def _verify_sd3c(entry: CatalogEntry, seed: int = 0) -> list[Verdict]:
    t = entry.table()
    out = [_ws_verdict(entry)]
    rho = t.arrow_module("r")
    per = orc.omega_period(rho, 4, seed=seed)
    out.append(Verdict(entry.name, "rho_period_3", "pass" if per == 3 else "fail",
                       {"period": per}))
    u = orc.syzygy_module(rho)
    if entry.params.get("k") is None:
        # first family: U has Loewy length two, top S_1 + S_2, socle S_0
        ok = (len(loewy_layers(u)) == 2
              and u.top_dims() == {0: 0, 1: 1, 2: 1}
              and u.socle_dims() == {0: 1, 1: 0, 2: 0})
        out.append(Verdict(entry.name, "U_structure", "pass" if ok else "fail",
                           {"dims": u.dimension_vector(), "top": u.top_dims(),
                            "socle": u.socle_dims()}))
    else:
        # second family: U is (P_1 + P_2)/(beta, eta)Lambda
        p1, p2 = t.projective_module(1), t.projective_module(2)
        pp = orc.direct_sum([p1, p2])
        gen = sum_element(t, [p1, p2], [[(1, ("b",))], [(1, ("e",))]])
        alt = orc.quotient_module(pp, orc.submodule(pp, [gen]))
        ok = orc.iso_test(alt, u, seed=seed) == "isomorphic"
        out.append(Verdict(entry.name, "U_structure", "pass" if ok else "fail",
                           {"dims": u.dimension_vector(), "alt": alt.dimension_vector()}))
    ok = orc.iso_test(orc.syzygy_module(orc.syzygy_module(u)), rho, seed=seed) == "isomorphic"
    out.append(Verdict(entry.name, "omega2_U_is_rho", "pass" if ok else "fail"))
    try:
        w = _sd3c_W(entry)
        uu = orc.syzygy_module(u)
        ok = w.total_dim == u.total_dim + uu.total_dim
        out.append(Verdict(entry.name, "W_period_3_top_good", "pass" if ok else "fail",
                           {"dims": w.dimension_vector(),
                            "U_plus_omega_U": u.total_dim + uu.total_dim}))
    except NotACatalogSDAlgebra as exc:
        out.append(Verdict(entry.name, "W_period_3_top_good", "fail", {"error": str(exc)}))
    out.append(verify_loop_nonvanishing(entry, 0, 12, seed))
    return out


def _sd2b3_entry(s: int, c: int, name: str):
    arrows = [Arrow("a", 0, 0), Arrow("b", 0, 1), Arrow("g", 1, 0), Arrow("e", 1, 1)]
    rels = [
        [(1, ("b", "g")), (-1, ("a", "a"))],
        [(1, ("a", "b")), (-1, ("b", "e"))],
        [(1, ("e", "g")), (-1, ("g", "a"))],
        [(1, ("g", "b")), (-1, ("e", "e")), (-c, ("e",) * (s + 1))],
        [(1, ("a",) * s + ("b",))], [(1, ("a",) * (s + 2))],
        [(1, ("e",) * (s + 2))], [(1, ("e",) * s + ("g",))],
        [(1, ("b",) + ("e",) * s)],
    ]
    pres = BoundQuiverPresentation([0, 1], arrows, 2, rels, s + 2)
    return CatalogEntry(
        name=name,
        description=f"semidihedral-type two-vertex algebra with two loops, s={s}, c={c}",
        family="sd2b3",
        presentation=pres,
        params={"s": s, "c": c, "expected_pattern": "all_n"},
    )


def _sd2b3_cover_data(entry: CatalogEntry):
    """The cover P_0 + P_1 -> Omega(S_0) with ker = Omega^2(S_0), and the
    generators phi = (alpha, -gamma), psi = (beta, -eta) of W inside it."""
    t = entry.table()
    p0, p1 = t.projective_module(0), t.projective_module(1)
    pp = orc.direct_sum([p0, p1])
    pi = left_multiplication_cover(t, [p0, p1], [("a",), ("b",)], t.projective_module(0))
    o2 = kernel_of_hom(pp, t.projective_module(0), pi)
    phi = sum_element(t, [p0, p1], [[(1, ("a",))], [(-1, ("g",))]])
    psi = sum_element(t, [p0, p1], [[(1, ("b",))], [(-1, ("e",))]])
    return t, pp, o2, phi, psi


def _sd2b3_W(entry: CatalogEntry) -> orc.OracleModule:
    t, pp, _, phi, psi = _sd2b3_cover_data(entry)
    return orc.submodule(pp, [phi, psi])


def _verify_sd2b3(entry: CatalogEntry, seed: int = 0) -> list[Verdict]:
    t, pp, o2, phi, psi = _sd2b3_cover_data(entry)
    s = entry.params["s"]
    out = [_ws_verdict(entry)]
    cartan = t.cartan_matrix()
    expect = {(0, 0): s + 2, (0, 1): s, (1, 0): s, (1, 1): s + 2}
    out.append(Verdict(entry.name, "cartan", "pass" if cartan == expect else "fail",
                       {"cartan": {f"{i}{j}": cartan[(i, j)] for i, j in cartan}}))
    w = orc.submodule(pp, [phi, psi])
    ok = w.dimension_vector() == (s + 1, s + 1)
    out.append(Verdict(entry.name, "W_dimension", "pass" if ok else "fail",
                       {"dims": w.dimension_vector()}))
    quot = orc.quotient_module(o2, orc.restrict_to(o2, w))
    ok = orc.iso_test(quot, t.simple_module(1), seed=seed) == "isomorphic"
    out.append(Verdict(entry.name, "O2_mod_W_simple", "pass" if ok else "fail",
                       {"quotient_dims": quot.dimension_vector()}))
    # Omega^2(W) = W; the least period drops to 1 when c = 0 since the unit
    # twisting the second generator of Omega(W) degenerates.
    per = orc.omega_period(w, 8, seed=seed)
    ok = orc.iso_test(orc.Resolution(w).syzygy(2), w, seed=seed) == "isomorphic"
    out.append(Verdict(entry.name, "omega2_W_is_W", "pass" if ok else "fail",
                       {"period": per}))
    # phi J = psi J = phi Lambda intersect psi Lambda
    phi_l = orc.submodule(pp, [phi])
    psi_l = orc.submodule(pp, [psi])

    def act_on(elem, label):
        img = {v: np.zeros(pp.dims[v], dtype=np.int64) for v in t.pres.vertices}
        for a in t.pres.arrows:
            if a.label == label:
                img[a.target] = elem[a.source] @ pp.mats[label] % pp.p
        return img

    phi_j = orc.submodule(pp, [act_on(phi, a.label) for a in t.pres.arrows])
    psi_j = orc.submodule(pp, [act_on(psi, a.label) for a in t.pres.arrows])
    inter = orc.intersect_submodules(phi_l, psi_l)
    same = all(
        np.array_equal(phi_j._embedding[v], psi_j._embedding[v])
        and np.array_equal(phi_j._embedding[v], inter._embedding[v])
        for v in t.pres.vertices
    )
    out.append(Verdict(entry.name, "phiJ_eq_psiJ", "pass" if same else "fail",
                       {"phiJ": phi_j.dimension_vector(), "psiJ": psi_j.dimension_vector(),
                        "intersection": inter.dimension_vector()}))
    # phi J isomorphic to H = rad(P_0)/soc(P_0), dimension vector (s, s)
    rad0 = orc.radical(t.projective_module(0))
    h = orc.quotient_module(rad0, orc.restrict_to(rad0, orc.socle(rad0._ambient)))
    ok = (h.dimension_vector() == (s, s)
          and orc.iso_test(phi_j, h, seed=seed) == "isomorphic")
    out.append(Verdict(entry.name, "WJ_is_H", "pass" if ok else "fail",
                       {"H": h.dimension_vector()}))
    res = orc.Resolution(w)
    bad = [
        (r, i)
        for r in range(0, 9)
        for i in (0, 1)
        if orc.hom_space_dim(res.syzygy(r), t.simple_module(i)) == 0
    ]
    out.append(Verdict(entry.name, "hom_omega_W_nonzero", "pass" if not bad else "fail",
                       {"zero_pairs": bad}))
    for v in (0, 1):
        out.append(verify_loop_nonvanishing(entry, v, 12, seed))
    return out


# -- hybrid vertices (Example 3.14 family) ------------------------------------


def _sd2a2_entry(k: int = 2):
    arrows = [Arrow("a", 0, 0), Arrow("b", 0, 1), Arrow("g", 1, 0)]
    rels = [
        [(1, ("g", "b"))],
        [(1, ("a", "a")), (-1, ("b", "g", "a") * (k - 1) + ("b", "g"))],
        [(1, ("a", "b", "g") * k), (-1, ("b", "g", "a") * k)],
    ]
    pres = BoundQuiverPresentation([0, 1], arrows, 2, rels, 3 * k + 1)
    return CatalogEntry(
        name="sd2a2",
        description=f"semidihedral-type hybrid-vertex algebra, k={k}, c=0",
        family="sd2a2",
        presentation=pres,
        params={"k": k, "c": 0, "loop_vertex": 0, "expected_pattern": "all_n"},
    )


def _sd2a2_X(entry: CatalogEntry) -> orc.OracleModule:
    t = entry.table()
    p0 = t.projective_module(0)
    a_l = orc.submodule(p0, [t._element_in_projective(p0, 0, ("a",))])
    b_l = orc.submodule(p0, [t._element_in_projective(p0, 0, ("b",))])
    inter = orc.intersect_submodules(a_l, b_l)
    return orc.quotient_module(a_l, orc.restrict_to(a_l, inter))


def _sd2a2_W(entry: CatalogEntry) -> orc.OracleModule:
    """Indecomposable period-3 extension of S_1 by the arrow module beta Lambda,
    realized as a pushout of the cover P_1 -> S_1 along gamma Lambda -> beta Lambda."""
    t = entry.table()
    p = t.p
    b_l = t.arrow_module("b")
    p1 = t.projective_module(1)
    g_sub = orc.submodule(p1, [t._element_in_projective(p1, 1, ("g",))])
    for h in orc.hom_basis(g_sub, b_l):
        glue = []
        for v in t.pres.vertices:
            for row in g_sub._embedding[v]:
                coords = gfp.solve_matrix_in_rows(g_sub._embedding[v],
                                                  row.reshape(1, -1), p)[0]
                img = coords @ h[v] % p
                e = {u: np.zeros(p1.dims[u] + b_l.dims[u], dtype=np.int64)
                     for u in t.pres.vertices}
                e[v][:p1.dims[v]] = row
                e[v][p1.dims[v]:] = (-img) % p
                glue.append(e)
        pb = orc.direct_sum([p1, b_l])
        w = orc.quotient_module(pb, orc.submodule(pb, glue))
        if w.total_dim != b_l.total_dim + 1:
            continue
        if orc.is_indecomposable(w) == "indecomposable" and orc.omega_period(w, 6) == 3:
            return w
    raise NotACatalogSDAlgebra(f"no indecomposable period-3 W for {entry.name}")


def verify_hybrid_vertex_lemma(entry: CatalogEntry, alpha: str | None = None,
                               depth: int = 12, seed: int = 0) -> list[Verdict]:
    """Syzygy chain of X = alpha L / (alpha L cap beta L) at a hybrid vertex:
    Omega(X) = alpha_1 L, Omega(alpha_1 L) = alpha_2 beta L, and the kernel
    sequence 0 -> beta_1 L -> Omega(alpha_2 beta L) -> S_{i0} -> 0."""
    if entry.family == "sd2a2":
        return _verify_sd2a2(entry, seed)
    if entry.biserial is None:
        raise VertexNotHybrid(f"{entry.name} carries no biserial data")
    data = entry.biserial
    if alpha is None:
        alpha = next(lab for lab in sorted(data.f)
                     if lab in data.triangles and data.bar[lab] not in data.triangles)
    if alpha not in data.triangles or data.bar[alpha] in data.triangles:
        raise VertexNotHybrid(f"{alpha} is not the triangle arrow of a hybrid vertex")
    t = entry.table()
    i0 = data.source(alpha)
    beta = data.bar[alpha]
    a1, a2 = data.f[alpha], data.f[data.f[alpha]]
    b1 = data.f[beta]
    out = []
    p_i0 = t.projective_module(i0)
    a_l = orc.submodule(p_i0, [t._element_in_projective(p_i0, i0, (alpha,))])
    b_l = orc.submodule(p_i0, [t._element_in_projective(p_i0, i0, (beta,))])
    x = orc.quotient_module(a_l, orc.restrict_to(a_l, orc.intersect_submodules(a_l, b_l)))
    ok = orc.iso_test(orc.syzygy_module(x), t.arrow_module(a1), seed=seed) == "isomorphic"
    out.append(Verdict(entry.name, "omega_X_is_alpha1", "pass" if ok else "fail"))
    a2b = t.path_module(data.source(a2), (a2, beta))
    ok = orc.iso_test(orc.syzygy_module(t.arrow_module(a1)), a2b, seed=seed) == "isomorphic"
    out.append(Verdict(entry.name, "omega_alpha1_is_alpha2beta", "pass" if ok else "fail"))
    u = orc.syzygy_module(a2b)
    want = data.m[b1] * data.n[b1] + 1
    ok = u.total_dim == want
    b1_l = t.arrow_module(b1)
    found = any(
        orc.iso_test(k, b1_l, seed=seed) == "isomorphic"
        for k in maximal_submodules_with_simple_quotient(u, i0)
        if k.total_dim == u.total_dim - 1
    )
    out.append(Verdict(entry.name, "U_extension_of_simple_by_beta1",
                       "pass" if (ok and found) else "fail",
                       {"dim_U": u.total_dim, "expected": want}))
    return out


def _verify_sd2a2(entry: CatalogEntry, seed: int = 0) -> list[Verdict]:
    t = entry.table()
    out = [_ws_verdict(entry)]
    x = _sd2a2_X(entry)
    layers = [tuple(lay[v] for v in (0, 1)) for lay in loewy_layers(x)]
    ok = layers == [(1, 0), (0, 1), (1, 0), (1, 0), (0, 1)]
    out.append(Verdict(entry.name, "X_uniserial", "pass" if ok else "fail",
                       {"layers": layers}))
    a_l = t.arrow_module("a")
    ok = orc.iso_test(orc.syzygy_module(x), a_l, seed=seed) == "isomorphic"
    out.append(Verdict(entry.name, "omega_X_is_alphaL", "pass" if ok else "fail"))
    ab_l = t.path_module(0, ("a", "b"))
    ok = orc.iso_test(orc.Resolution(x).syzygy(2), ab_l, seed=seed) == "isomorphic"
    out.append(Verdict(entry.name, "omega2_X_is_abL", "pass" if ok else "fail"))
    ok = orc.iso_test(orc.Resolution(t.simple_module(0)).syzygy(3),
                      orc.radical(ab_l), seed=seed) == "isomorphic"
    out.append(Verdict(entry.name, "omega3_S0_is_rad_abL", "pass" if ok else "fail"))
    ok = orc.iso_test(orc.syzygy_module(t.arrow_module("b")),
                      t.simple_module(1), seed=seed) == "isomorphic"
    out.append(Verdict(entry.name, "omega_betaL_simple", "pass" if ok else "fail"))
    try:
        w = _sd2a2_W(entry)
        out.append(Verdict(entry.name, "W_indecomposable_period_3", "pass",
                           {"dims": w.dimension_vector()}))
    except NotACatalogSDAlgebra as exc:
        out.append(Verdict(entry.name, "W_indecomposable_period_3", "fail",
                           {"error": str(exc)}))
    out.append(verify_loop_nonvanishing(entry, 0, 12, seed))
    return out


# -- hybrid algebra instances from biserial data ------------------------------


def _hybrid_entry(name, description, data: BiserialQuiverData, p: int = 2):
    pres = build_hybrid(data, p)
    return CatalogEntry(name=name, description=description, family="hybrid",
                        presentation=pres, biserial=data)


def structural_checks(entry: CatalogEntry, depth: int = 12, seed: int = 0) -> list[Verdict]:
    """Dimension identities of hybrid algebras: dim e_i L, dim alpha L
    (split by triangle membership), dim alpha g(alpha) L, plus weak symmetry."""
    if entry.biserial is None:
        raise MissingBiserialData(f"{entry.name} carries no biserial data")
    data = entry.biserial
    t = entry.table()
    out = [_ws_verdict(entry)]
    cartan = t.cartan_matrix()
    for v in data.vertices:
        outs = [a.label for a in data.arrows if a.source == v]
        want = sum(data.m[lab] * data.n[lab] for lab in outs)
        got = sum(cartan[(v, w)] for w in data.vertices)
        if got != want:
            out.append(Verdict(entry.name, "dim_eL", "fail",
                               {"vertex": v, "got": got, "want": want}))
            break
    else:
        out.append(Verdict(entry.name, "dim_eL", "pass"))
    for lab in sorted(data.f):
        mn = data.m[lab] * data.n[lab]
        want = mn + 1 if lab in data.triangles else mn
        got = t.arrow_module(lab).total_dim
        if got != want:
            out.append(Verdict(entry.name, "dim_arrowL", "fail",
                               {"arrow": lab, "got": got, "want": want}))
            break
    else:
        out.append(Verdict(entry.name, "dim_arrowL", "pass"))
    for lab in sorted(data.f):
        mn = data.m[lab] * data.n[lab]
        src = data.source(lab)
        got = t.path_module(src, (lab, data.g[lab])).total_dim
        if got != mn - 1:
            out.append(Verdict(entry.name, "dim_alpha_g_alpha_L", "fail",
                               {"arrow": lab, "got": got, "want": mn - 1}))
            break
    else:
        out.append(Verdict(entry.name, "dim_alpha_g_alpha_L", "pass"))
    return out


def verify_quaternion_period4(entry: CatalogEntry, v, depth: int = 12,
                              seed: int = 0) -> list[Verdict]:
    """Period-4 simple at a quaternion vertex, with the resolution covers
    matching the out-arrow and in-arrow projective sums."""
    data = entry.biserial
    if data is None or any(
        lab not in data.triangles for lab in data.f if data.source(lab) == v
    ):
        raise VertexNotQuaternion(f"vertex {v} of {entry.name} is not quaternion")
    t = entry.table()
    s = t.simple_module(v)
    out = []
    per = orc.omega_period(s, 8, seed=seed)
    out.append(Verdict(entry.name, f"simple_period_4_v{v}",
                       "pass" if per == 4 else "fail", {"period": per}))
    res = orc.Resolution(s)
    plus = {u: 0 for u in data.vertices}
    minus = {u: 0 for u in data.vertices}
    for a in data.arrows:
        if a.source == v:
            plus[a.target] += 1
        if a.target == v:
            minus[a.source] += 1
    step1 = res.cover_multiplicities(1)
    step2 = res.cover_multiplicities(2)
    step3 = res.cover_multiplicities(3)
    ok = (step1 == plus and step2 == minus
          and step3 == {u: (1 if u == v else 0) for u in data.vertices})
    out.append(Verdict(entry.name, f"resolution_covers_v{v}", "pass" if ok else "fail",
                       {"step1": step1, "plus": plus, "step2": step2, "minus": minus}))
    return out


def verify_four_periodic_nonrigid(entry: CatalogEntry, depth: int = 12,
                                  seed: int = 0) -> Verdict:
    """Any 4-periodic non-rigid module found on the instance has
    Ext^{1..4} all nonzero (scanned over simples and arrow modules)."""
    t = entry.table()
    data = entry.biserial
    candidates = [t.simple_module(v) for v in data.vertices]
    candidates += [t.arrow_module(lab) for lab in sorted(data.f)]
    for v in data.vertices:
        p = t.projective_module(v)
        rad = orc.radical(p)
        candidates.append(orc.quotient_module(rad, orc.restrict_to(rad, orc.socle(p))))
    checked = []
    for m in candidates:
        if m.is_zero() or orc.syzygy_module(m).is_zero():
            continue
        if orc.omega_period(m, 4, seed=seed) != 4:
            continue
        res = orc.Resolution(m)
        exts = [orc.ext_dim(m, m, i, res) for i in range(1, 5)]
        if exts[0] == 0:
            continue
        checked.append(exts)
        if any(e == 0 for e in exts):
            return Verdict(entry.name, "four_periodic_nonrigid", "fail",
                           {"ext_dims": exts, "module_dims": m.dimension_vector()})
    return Verdict(entry.name, "four_periodic_nonrigid", "pass",
                   {"modules_checked": len(checked)})


def verify_biserial_vertex(entry: CatalogEntry, v, depth: int = 12,
                           seed: int = 0) -> list[Verdict]:
    """Biserial-vertex syzygy sequence: W = (alpha_1, 0)L + (0, bar_1)L and
    psi span Omega^2(S_v), the sequence 0 -> W -> Omega^2(S_v) -> S_v -> 0 is
    top good, and Omega(W) = alpha_2 L + bar_2 L."""
    data = entry.biserial
    if data is None or any(
        lab in data.triangles for lab in data.f if data.source(lab) == v
    ):
        raise VertexNotBiserial(f"vertex {v} of {entry.name} is not biserial")
    t = entry.table()
    alpha, bar = [lab for lab in sorted(data.f) if data.source(lab) == v]
    a1, b1 = data.f[alpha], data.f[bar]
    a2, b2 = data.f[a1], data.f[b1]
    pa = t.projective_module(data.target(alpha))
    pb = t.projective_module(data.target(bar))
    pp = orc.direct_sum([pa, pb])
    d1 = left_multiplication_cover(t, [pa, pb], [(alpha,), (bar,)],
                                   t.projective_module(v))
    o2 = kernel_of_hom(pp, t.projective_module(v), d1)
    w1 = sum_element(t, [pa, pb], [[(1, (a1,))], []])
    w2 = sum_element(t, [pa, pb], [[], [(1, (b1,))]])
    psi = sum_element(t, [pa, pb], [
        [(data.c[alpha], submonomial(data, data.g[alpha]))],
        [(-data.c[bar], submonomial(data, data.g[bar]))],
    ])
    w = orc.submodule(pp, [w1, w2])
    full = orc.submodule(pp, [w1, w2, psi])
    out = []
    ok = full.dimension_vector() == o2.dimension_vector()
    out.append(Verdict(entry.name, f"W_plus_psi_spans_v{v}", "pass" if ok else "fail",
                       {"W_psi": full.dimension_vector(), "O2": o2.dimension_vector()}))
    w_in = orc.restrict_to(o2, w)
    ok = (orc.is_top_good(o2, w_in)
          and orc.iso_test(orc.quotient_module(o2, w_in), t.simple_module(v),
                           seed=seed) == "isomorphic")
    out.append(Verdict(entry.name, f"top_good_sequence_v{v}", "pass" if ok else "fail"))
    ok = orc.iso_test(
        orc.syzygy_module(w),
        orc.direct_sum([t.arrow_module(a2), t.arrow_module(b2)]),
        seed=seed,
    ) == "isomorphic"
    out.append(Verdict(entry.name, f"omega_W_arrow_sum_v{v}", "pass" if ok else "fail"))
    return out


def _verify_hybrid(entry: CatalogEntry, depth: int = 12, seed: int = 0) -> list[Verdict]:
    data = entry.biserial
    out = structural_checks(entry, depth, seed)
    for v in data.vertices:
        cls = data.vertex_class[v].value
        if cls == "quaternion":
            out.extend(verify_quaternion_period4(entry, v, depth, seed))
        elif cls == "biserial":
            out.extend(verify_biserial_vertex(entry, v, depth, seed))
    if all(data.vertex_class[v].value == "quaternion" for v in data.vertices):
        out.append(verify_four_periodic_nonrigid(entry, depth, seed))
    if any(data.vertex_class[v].value == "hybrid" for v in data.vertices):
        out.extend(verify_hybrid_vertex_lemma(entry, None, depth, seed))
    return out


# ---------------------------------------------------------------------------
# catalog assembly

_SPECIAL_MODULES = {
    "sd3c": {
        "rho": lambda e: e.table().arrow_module("r"),
        "U": lambda e: orc.syzygy_module(e.table().arrow_module("r")),
        "W": _sd3c_W,
    },
    "sd2b3": {
        "W": _sd2b3_W,
        "H": lambda e: (lambda rad0: orc.quotient_module(
            rad0, orc.restrict_to(rad0, orc.socle(rad0._ambient))
        ))(orc.radical(e.table().projective_module(0))),
    },
    "sd2a2": {"X": _sd2a2_X, "W": _sd2a2_W},
}

_SUITES = {
    "local_group": verify_local_group,
    "klein": verify_local_group,
    "example_2_8": verify_example_2_8,
    "sd3c": lambda e, d, s: _verify_sd3c(e, s),
    "sd2b3": lambda e, d, s: _verify_sd2b3(e, s),
    "sd2a2": lambda e, d, s: _verify_sd2a2(e, s),
    "hybrid": _verify_hybrid,
}


def _hybrid_triangle_data() -> BiserialQuiverData:
    data = triangle_data(weight=2, triangles=True)
    return BiserialQuiverData(data.vertices, data.arrows, data.f,
                              frozenset({"a0", "a1", "a2"}),
                              data.weights, data.scalars)


def catalog() -> dict[str, CatalogEntry]:
    """All named catalog entries, keyed by name."""
    entries = [
        _example_2_8_entry(),
        _sd3c1_entry(s=3),
        _sd3c2_entry(s=2, k=2),
        _sd2b3_entry(2, 0, "sd2b3_s2_c0"),
        _sd2b3_entry(2, 1, "sd2b3_s2_c1"),
        _sd2b3_entry(3, 0, "sd2b3_s3"),
        _sd2a2_entry(k=2),
        _hybrid_entry("triangle",
                      "weighted surface algebra on the 3-cycle quiver, weight 2, "
                      "all vertices quaternion",
                      triangle_data(weight=2, triangles=True)),
        _hybrid_entry("brauer_triangle",
                      "Brauer graph algebra on the 3-cycle quiver (no triangles), "
                      "all vertices biserial",
                      triangle_data(weight=1, triangles=False)),
        _hybrid_entry("hybrid_triangle",
                      "hybrid algebra on the 3-cycle quiver with one f-orbit of "
                      "triangles, all vertices hybrid",
                      _hybrid_triangle_data()),
        _local_nakayama_entry("local_c2", 2, 1),
        _local_nakayama_entry("local_c4", 2, 2),
        _local_nakayama_entry("local_c3", 3, 1),
        _local_nakayama_entry("local_c5", 5, 1),
        _klein_entry(),
    ]
    return {e.name: e for e in entries}


def get_entry(name: str) -> CatalogEntry:
    entries = catalog()
    if name not in entries:
        raise UnknownCatalogEntry(
            f"unknown catalog entry {name!r}; known: {', '.join(sorted(entries))}"
        )
    return entries[name]
