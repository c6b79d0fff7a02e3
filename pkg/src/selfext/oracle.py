"""Brute-force bound quiver algebras over prime fields.

A presentation is a quiver, a prime p, a list of admissible relations
(F_p-combinations of parallel paths of length >= 2) and a Loewy bound L
with J^L = 0 in the quotient.  The algebra is materialised as a monomial
path basis obtained by row reduction of the relation ideal, and right
modules are per-vertex vector spaces with one matrix per arrow.

This engine knows nothing about Kupisch series or hybrid combinatorics; it
only does linear algebra, which is what makes it usable as an independent
ground truth.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

import numpy as np

from selfext import gfp

Path = tuple[str, ...]  # arrow labels, source to target reading left to right


class OracleError(ValueError):
    pass


class NonAdmissibleRelation(OracleError):
    pass


class UnstableLoewyBound(OracleError):
    pass


class OracleBuildFailure(OracleError):
    pass


class ProjectiveInputError(OracleError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class Arrow:
    label: str
    source: object
    target: object


@dataclass
class BoundQuiverPresentation:
    vertices: list
    arrows: list[Arrow]
    char_p: int
    relations: list[list[tuple[int, Path]]]
    loewy_bound: int

    def __post_init__(self):
        if not _is_prime(self.char_p):
            raise OracleError(f"characteristic {self.char_p} is not prime")
        if self.loewy_bound < 1:
            raise OracleError("loewy_bound must be positive")
        labels = [a.label for a in self.arrows]
        if len(set(labels)) != len(labels):
            raise OracleError("duplicate arrow labels")
        self.arrow_by_label = {a.label: a for a in self.arrows}
        for a in self.arrows:
            if a.source not in self.vertices or a.target not in self.vertices:
                raise OracleError(f"arrow {a.label} has unknown endpoint")
        for rel in self.relations:
            ends = set()
            for coeff, path in rel:
                if len(path) < 2:
                    raise NonAdmissibleRelation(f"path {path} has length < 2")
                src, dst = self.path_endpoints(path)
                ends.add((src, dst))
            if len(ends) != 1:
                raise NonAdmissibleRelation(f"relation {rel} mixes endpoints")

    def path_endpoints(self, path: Path):
        if not path:
            raise OracleError("empty path has no canonical endpoints")
        src = self.arrow_by_label[path[0]].source
        cur = src
        for lab in path:
            a = self.arrow_by_label[lab]
            if a.source != cur:
                raise OracleError(f"path {path} is not composable at {lab}")
            cur = a.target
        return src, cur


def _path_sort_key(item):
    src, path = item
    return (len(path), path, str(src))


class AlgebraTable:
    """Monomial basis and reduction data for a bound quiver algebra."""

    def __init__(self, pres: BoundQuiverPresentation):
        self.pres = pres
        self.p = pres.char_p
        dim = self._build(pres.loewy_bound)
        dim_next = self._probe_dimension(pres.loewy_bound + 1)
        if dim_next != dim:
            raise UnstableLoewyBound(
                f"dimension {dim} at L={pres.loewy_bound} but {dim_next} at L+1"
            )
        self.dimension = dim
        self._cartan = None
        self._right_mult = {}

    # -- construction ---------------------------------------------------

    def _all_paths(self, bound: int) -> list[tuple[object, Path]]:
        """All quiver paths of length < bound as (source, labels), deg-lex sorted."""
        out_arrows: dict[object, list[Arrow]] = {v: [] for v in self.pres.vertices}
        for a in self.pres.arrows:
            out_arrows[a.source].append(a)
        for v in out_arrows:
            out_arrows[v].sort(key=lambda a: a.label)
        paths = [(v, ()) for v in self.pres.vertices]
        frontier = [(v, (), v) for v in self.pres.vertices]  # (src, labels, target)
        for _ in range(bound - 1):
            nxt = []
            for src, labels, tgt in frontier:
                for a in out_arrows[tgt]:
                    nxt.append((src, labels + (a.label,), a.target))
            frontier = nxt
            paths.extend((src, labels) for src, labels, _ in frontier)
        paths.sort(key=_path_sort_key)
        return paths

    def _ideal_rows(self, paths, index, bound):
        """Span of u * relation * w inside the length-truncated path algebra."""
        by_target = {}
        by_source = {}
        for src, labels in paths:
            _, tgt = (src, src) if not labels else self.pres.path_endpoints(labels)
            by_target.setdefault(tgt, []).append((src, labels))
            by_source.setdefault(src, []).append((src, labels))
        rows = []
        for rel in self.pres.relations:
            rel_src, rel_tgt = self.pres.path_endpoints(rel[0][1])
            min_len = min(len(path) for _, path in rel)
            for u_src, u in by_target.get(rel_src, []):
                if len(u) + min_len >= bound:
                    continue
                for _, w in by_source.get(rel_tgt, []):
                    if len(u) + min_len + len(w) >= bound:
                        continue
                    row = np.zeros(len(paths), dtype=np.int64)
                    nonzero = False
                    for coeff, q in rel:
                        full = u + q + w
                        if len(full) < bound:
                            row[index[(u_src, full)]] += coeff
                            nonzero = True
                    if nonzero and (row % self.p).any():
                        rows.append(row % self.p)
        return rows

    def _reduction(self, bound: int):
        paths = self._all_paths(bound)
        index = {pkey: i for i, pkey in enumerate(paths)}
        rows = self._ideal_rows(paths, index, bound)
        npaths = len(paths)
        if rows:
            # Reverse column order so pivots land on deg-lex larger paths and
            # the surviving basis consists of the smaller ones.
            mat = np.array(rows, dtype=np.int64)[:, ::-1]
            red, pivots = gfp.rref(mat, self.p)
            pivot_cols = {npaths - 1 - c for c in pivots}
            red = red[:, ::-1]
        else:
            red, pivots, pivot_cols = np.zeros((0, npaths), dtype=np.int64), [], set()
        basis = [paths[i] for i in range(npaths) if i not in pivot_cols]
        basis_pos = {pkey: j for j, pkey in enumerate(basis)}
        # pivot path -> vector over the basis
        reduce_map = {}
        if rows:
            rev_pivots = [npaths - 1 - c for c in pivots]
            for r_i, col in enumerate(rev_pivots):
                vec = np.zeros(len(basis), dtype=np.int64)
                row = red[r_i]
                for j in np.nonzero(row)[0]:
                    if j == col:
                        continue
                    vec[basis_pos[paths[j]]] = (-int(row[j])) % self.p
                reduce_map[paths[col]] = vec
        return paths, basis, basis_pos, reduce_map

    def _probe_dimension(self, bound: int) -> int:
        _, basis, _, _ = self._reduction(bound)
        return len(basis)

    def _build(self, bound: int) -> int:
        paths, basis, basis_pos, reduce_map = self._reduction(bound)
        self.bound = bound
        self.basis = basis
        self.basis_pos = basis_pos
        self._reduce_map = reduce_map
        self.basis_by_source = {v: [] for v in self.pres.vertices}
        self.basis_target = {}
        for src, labels in basis:
            tgt = src if not labels else self.pres.path_endpoints(labels)[1]
            self.basis_by_source[src].append((src, labels))
            self.basis_target[(src, labels)] = tgt
        return len(basis)

    # -- algebra data ---------------------------------------------------

    def reduce_path(self, src, labels: Path) -> np.ndarray:
        """Image of a quiver path in the quotient, as a vector over the basis."""
        vec = np.zeros(self.dimension, dtype=np.int64)
        if len(labels) >= self.bound:
            return vec  # J^L = 0, certified by the L+1 stability check
        key = (src, labels)
        if key in self.basis_pos:
            vec[self.basis_pos[key]] = 1
            return vec
        return self._reduce_map[key].copy()

    def right_multiply(self, vec: np.ndarray, label: str) -> np.ndarray:
        """Multiply a basis-coordinate vector by an arrow on the right."""
        out = np.zeros(self.dimension, dtype=np.int64)
        a = self.pres.arrow_by_label[label]
        for j in np.nonzero(vec)[0]:
            src, labels = self.basis[j]
            if self.basis_target[(src, labels)] != a.source:
                continue
            key = (src, labels + (label,))
            if key not in self._right_mult:
                self._right_mult[key] = self.reduce_path(src, labels + (label,))
            out = out + int(vec[j]) * self._right_mult[key]
        return out % self.p

    def multiply(self, b1: int, b2: int) -> np.ndarray:
        """Product of two basis monomials, as a basis-coordinate vector."""
        src1, lab1 = self.basis[b1]
        src2, lab2 = self.basis[b2]
        tgt1 = self.basis_target[(src1, lab1)]
        if tgt1 != src2:
            return np.zeros(self.dimension, dtype=np.int64)
        vec = np.zeros(self.dimension, dtype=np.int64)
        vec[b1] = 1
        for lab in lab2:
            vec = self.right_multiply(vec, lab)
        return vec

    def cartan_matrix(self) -> dict:
        """dict (i, j) -> dim e_i Λ e_j."""
        if self._cartan is None:
            cartan = {(i, j): 0 for i in self.pres.vertices for j in self.pres.vertices}
            for (src, labels), tgt in self.basis_target.items():
                cartan[(src, tgt)] += 1
            self._cartan = cartan
        return self._cartan

    def gabriel_arrow_count(self, v, w) -> int:
        return sum(1 for a in self.pres.arrows if a.source == v and a.target == w)

    # -- module constructors ---------------------------------------------

    def projective_module(self, v) -> "OracleModule":
        layout = {u: [] for u in self.pres.vertices}
        for key in self.basis_by_source[v]:
            layout[self.basis_target[key]].append(key)
        dims = {u: len(layout[u]) for u in self.pres.vertices}
        pos = {key: i for u in self.pres.vertices for i, key in enumerate(layout[u])}
        mats = {}
        for a in self.pres.arrows:
            m = np.zeros((dims[a.source], dims[a.target]), dtype=np.int64)
            for key in layout[a.source]:
                vec = self.right_multiply(_unit(self, key), a.label)
                for j in np.nonzero(vec)[0]:
                    bkey = self.basis[j]
                    m[pos[key], pos[bkey]] = vec[j]
            mats[a.label] = m
        mod = OracleModule(self, dims, mats)
        mod._proj_layout = (v, layout, pos)
        return mod

    def simple_module(self, v) -> "OracleModule":
        dims = {u: (1 if u == v else 0) for u in self.pres.vertices}
        mats = {
            a.label: np.zeros((dims[a.source], dims[a.target]), dtype=np.int64)
            for a in self.pres.arrows
        }
        return OracleModule(self, dims, mats)

    def arrow_module(self, label: str) -> "OracleModule":
        a = self.pres.arrow_by_label[label]
        return self.path_module(a.source, (label,))

    def path_module(self, src, labels: Path) -> "OracleModule":
        """Right submodule of P_src generated by the image of a path."""
        pmod = self.projective_module(src)
        gen = self._element_in_projective(pmod, src, labels)
        return submodule(pmod, [gen])

    def _element_in_projective(self, pmod, src, labels: Path):
        vec = self.reduce_path(src, labels)
        v, layout, pos = pmod._proj_layout
        assert v == src
        elem = {u: np.zeros(pmod.dims[u], dtype=np.int64) for u in self.pres.vertices}
        for j in np.nonzero(vec)[0]:
            key = self.basis[j]
            elem[self.basis_target[key]][pos[key]] = vec[j]
        return elem


def _unit(table: AlgebraTable, key) -> np.ndarray:
    vec = np.zeros(table.dimension, dtype=np.int64)
    vec[table.basis_pos[key]] = 1
    return vec


def build_algebra(pres: BoundQuiverPresentation) -> AlgebraTable:
    try:
        table = AlgebraTable(pres)
    except (UnstableLoewyBound, NonAdmissibleRelation):
        raise
    except OracleError as exc:
        raise OracleBuildFailure(str(exc)) from exc
    _check_relation_closure(table)
    return table


def _check_relation_closure(table: AlgebraTable) -> None:
    """Each relation must reduce to zero in the quotient."""
    for rel in table.pres.relations:
        acc = np.zeros(table.dimension, dtype=np.int64)
        for coeff, path in rel:
            src, _ = table.pres.path_endpoints(path)
            acc = acc + coeff * table.reduce_path(src, path)
        if (acc % table.p).any():
            raise OracleBuildFailure(f"relation {rel} does not vanish in quotient")


# ---------------------------------------------------------------------------
# Modules


class OracleModule:
    """Right module: per-vertex row spaces, one (dim_s x dim_t) matrix per arrow."""

    def __init__(self, table: AlgebraTable, dims: dict, mats: dict, check: bool = True):
        self.table = table
        self.p = table.p
        self.dims = dims
        self.mats = {lab: gfp.normalize(m, self.p) for lab, m in mats.items()}
        for a in table.pres.arrows:
            m = self.mats[a.label]
            assert m.shape == (dims[a.source], dims[a.target]), (a.label, m.shape)
        if check:
            self._check_relations()

    def _check_relations(self):
        for rel in self.table.pres.relations:
            src, tgt = self.table.pres.path_endpoints(rel[0][1])
            acc = np.zeros((self.dims[src], self.dims[tgt]), dtype=np.int64)
            for coeff, path in rel:
                acc = acc + coeff * self.act(path)
            if (acc % self.p).any():
                raise OracleError(f"module does not satisfy relation {rel}")

    def act(self, labels: Path) -> np.ndarray:
        """Matrix of the right action of a path (source space -> target space)."""
        src, _ = self.table.pres.path_endpoints(labels)
        m = np.eye(self.dims[src], dtype=np.int64)
        for lab in labels:
            m = m @ self.mats[lab] % self.p
        return m

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def dimension_vector(self) -> tuple:
        return tuple(self.dims[v] for v in self.table.pres.vertices)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def zero_element(self) -> dict:
        return {v: np.zeros(self.dims[v], dtype=np.int64) for v in self.table.pres.vertices}

    def radical_rows(self) -> dict:
        """Per-vertex rref basis of rad M = sum of arrow images."""
        rows = {v: [] for v in self.table.pres.vertices}
        for a in self.table.pres.arrows:
            if self.mats[a.label].size:
                rows[a.target].append(self.mats[a.label])
        return {
            v: (gfp.row_space(np.vstack(rs), self.p) if rs
                else np.zeros((0, self.dims[v]), dtype=np.int64))
            for v, rs in rows.items()
        }

    def top_dims(self) -> dict:
        rad = self.radical_rows()
        return {v: self.dims[v] - rad[v].shape[0] for v in self.table.pres.vertices}

    def socle_dims(self) -> dict:
        return {v: b.shape[0] for v, b in self.socle_rows().items()}

    def socle_rows(self) -> dict:
        out = {}
        for v in self.table.pres.vertices:
            mats = [self.mats[a.label] for a in self.table.pres.arrows if a.source == v]
            if not mats or self.dims[v] == 0:
                out[v] = np.eye(self.dims[v], dtype=np.int64)
                continue
            out[v] = gfp.nullspace(np.hstack(mats).T % self.p, self.p)
        return out


def direct_sum(mods: list[OracleModule]) -> OracleModule:
    table = mods[0].table
    dims = {v: sum(m.dims[v] for m in mods) for v in table.pres.vertices}
    mats = {}
    for a in table.pres.arrows:
        blocks = [m.mats[a.label] for m in mods]
        big = np.zeros((dims[a.source], dims[a.target]), dtype=np.int64)
        r = c = 0
        for b in blocks:
            big[r : r + b.shape[0], c : c + b.shape[1]] = b
            r += b.shape[0]
            c += b.shape[1]
        mats[a.label] = big
    return OracleModule(table, dims, mats, check=False)


def submodule(m: OracleModule, generators: list[dict]) -> OracleModule:
    """Submodule of m generated by elements (dict vertex -> coordinate row)."""
    table = m.table
    p = m.p
    span = {v: np.zeros((0, m.dims[v]), dtype=np.int64) for v in table.pres.vertices}
    queue = []
    for g in generators:
        for v in table.pres.vertices:
            vec = gfp.normalize(g[v], p)
            if vec.any() and not gfp.in_row_space(span[v], vec, p):
                span[v] = gfp.row_space(np.vstack([span[v], vec.reshape(1, -1)]), p)
                queue.append((v, vec))
    while queue:
        v, vec = queue.pop()
        for a in table.pres.arrows:
            if a.source != v:
                continue
            img = vec @ m.mats[a.label] % p
            if img.any() and not gfp.in_row_space(span[a.target], img, p):
                span[a.target] = gfp.row_space(
                    np.vstack([span[a.target], img.reshape(1, -1)]), p
                )
                queue.append((a.target, img))
    return _restrict(m, span)


def _restrict(m: OracleModule, span: dict) -> OracleModule:
    """Module structure on per-vertex row spaces closed under the action."""
    table = m.table
    p = m.p
    dims = {v: span[v].shape[0] for v in table.pres.vertices}
    mats = {}
    for a in table.pres.arrows:
        img = span[a.source] @ m.mats[a.label] % p
        mats[a.label] = gfp.solve_matrix_in_rows(span[a.target], img, p)
    sub = OracleModule(table, dims, mats, check=False)
    sub._embedding = span  # ambient coordinates of the chosen basis
    sub._ambient = m
    return sub


def quotient_module(m: OracleModule, sub: OracleModule) -> OracleModule:
    """m / sub, for sub given with ambient embedding into m."""
    table = m.table
    p = m.p
    span = sub._embedding
    assert sub._ambient is m
    comp = {}
    reducers = {}
    for v in table.pres.vertices:
        red, pivots = gfp.rref(span[v], p)
        free = [c for c in range(m.dims[v]) if c not in pivots]
        comp[v] = free
        reducers[v] = (red, pivots)

    def project(v, vec):
        red, pivots = reducers[v]
        vec = vec.copy() % p
        for row, pc in enumerate(pivots):
            vec = (vec - int(vec[pc]) * red[row]) % p
        return vec[comp[v]]

    dims = {v: len(comp[v]) for v in table.pres.vertices}
    mats = {}
    for a in table.pres.arrows:
        mm = np.zeros((dims[a.source], dims[a.target]), dtype=np.int64)
        for i, c in enumerate(comp[a.source]):
            vec = np.zeros(m.dims[a.source], dtype=np.int64)
            vec[c] = 1
            mm[i] = project(a.target, vec @ m.mats[a.label] % p)
        mats[a.label] = mm
    quot = OracleModule(table, dims, mats, check=False)
    quot._projection = (comp, reducers, project)
    return quot


def restrict_to(sub: OracleModule, inner: OracleModule) -> OracleModule:
    """Re-express `inner` (a submodule of sub's ambient, contained in sub)
    as a submodule of `sub`, enabling subquotients."""
    assert inner._ambient is sub._ambient
    p = sub.p
    span = {
        v: gfp.solve_matrix_in_rows(sub._embedding[v], inner._embedding[v], p)
        for v in sub.table.pres.vertices
    }
    return _restrict(sub, {v: gfp.row_space(s, p) for v, s in span.items()})


def intersect_submodules(s1: OracleModule, s2: OracleModule) -> OracleModule:
    """Intersection of two submodules of the same ambient module."""
    assert s1._ambient is s2._ambient
    m = s1._ambient
    span = {
        v: gfp.intersect_row_spaces(s1._embedding[v], s2._embedding[v], m.p)
        for v in m.table.pres.vertices
    }
    return _restrict(m, span)


def top(m: OracleModule) -> dict:
    return m.top_dims()


def radical(m: OracleModule) -> OracleModule:
    return _restrict(m, m.radical_rows())


def socle(m: OracleModule) -> OracleModule:
    rows = m.socle_rows()
    return _restrict(m, {v: gfp.row_space(rows[v], m.p) for v in rows})


def projective_cover(m: OracleModule):
    """Minimal projective cover (P, F) with F given per vertex (P_v -> M_v).

    Returns (p_module, f_mats, multiplicities).
    """
    table = m.table
    p = m.p
    rad = m.radical_rows()
    lifts = []  # (vertex, ambient row vector)
    mult = {v: 0 for v in table.pres.vertices}
    for v in table.pres.vertices:
        red, pivots = gfp.rref(rad[v], p)
        for c in range(m.dims[v]):
            if c not in pivots:
                vec = np.zeros(m.dims[v], dtype=np.int64)
                vec[c] = 1
                lifts.append((v, vec))
                mult[v] += 1
    summands = []
    for v, _ in lifts:
        summands.append(table.projective_module(v))
    if not summands:
        zero = OracleModule(
            table,
            {v: 0 for v in table.pres.vertices},
            {
                a.label: np.zeros((0, 0), dtype=np.int64)
                for a in table.pres.arrows
            },
            check=False,
        )
        return zero, {v: np.zeros((0, m.dims[v]), dtype=np.int64) for v in table.pres.vertices}, mult
    big = direct_sum(summands)
    # map each projective basis element (copy c, path q from v to w) to lift_c . q
    f = {v: np.zeros((big.dims[v], m.dims[v]), dtype=np.int64) for v in table.pres.vertices}
    offsets = {v: 0 for v in table.pres.vertices}
    for (gen_v, lift), summand in zip(lifts, summands):
        _, layout, pos = summand._proj_layout
        for w in table.pres.vertices:
            for key in layout[w]:
                _, labels = key
                img = lift @ m.act(labels) % p if labels else lift
                f[w][offsets[w] + pos[key]] = img
            offsets[w] += summand.dims[w]
    # minimality/surjectivity sanity
    for v in table.pres.vertices:
        if m.dims[v]:
            assert gfp.rank(f[v], p) == m.dims[v], "cover not surjective"
    return big, f, mult


def syzygy_module(m: OracleModule) -> OracleModule:
    """First syzygy: kernel of the minimal projective cover."""
    big, f, _ = projective_cover(m)
    span = {
        v: gfp.row_space(gfp.nullspace(f[v].T % m.p, m.p), m.p)
        for v in m.table.pres.vertices
    }
    return _restrict(big, span)


class Resolution:
    """Lazily extended minimal projective resolution of a module."""

    def __init__(self, m: OracleModule):
        self.module = m
        self._syzygies = [m]  # Ω^0 = m
        self._covers: list[dict] = []  # multiplicities of P_i

    def syzygy(self, i: int) -> OracleModule:
        while len(self._syzygies) <= i:
            self._extend()
        return self._syzygies[i]

    def cover_multiplicities(self, i: int) -> dict:
        while len(self._covers) <= i:
            self._extend()
        return self._covers[i]

    def _extend(self):
        last = self._syzygies[-1]
        big, f, mult = projective_cover(last)
        span = {
            v: gfp.row_space(gfp.nullspace(f[v].T % last.p, last.p), last.p)
            for v in last.table.pres.vertices
        }
        self._syzygies.append(_restrict(big, span))
        self._covers.append(mult)


def hom_basis(m: OracleModule, n: OracleModule) -> list[dict]:
    """Basis of Hom(m, n): list of per-vertex matrices F_v with M_a F_t = F_s N_a."""
    table = m.table
    p = m.p
    verts = list(table.pres.vertices)
    sizes = {v: m.dims[v] * n.dims[v] for v in verts}
    offset = {}
    total = 0
    for v in verts:
        offset[v] = total
        total += sizes[v]
    if total == 0:
        return []
    rows = []
    for a in table.pres.arrows:
        s, t = a.source, a.target
        neq = m.dims[s] * n.dims[t]
        if neq == 0:
            continue
        block = np.zeros((neq, total), dtype=np.int64)
        if sizes[t]:
            block[:, offset[t] : offset[t] + sizes[t]] = np.kron(
                m.mats[a.label], np.eye(n.dims[t], dtype=np.int64)
            )
        if sizes[s]:
            block[:, offset[s] : offset[s] + sizes[s]] -= np.kron(
                np.eye(m.dims[s], dtype=np.int64), n.mats[a.label].T
            )
        rows.append(block % p)
    if rows:
        ns = gfp.nullspace(np.vstack(rows), p)
    else:
        ns = np.eye(total, dtype=np.int64)
    basis = []
    for row in ns:
        fs = {
            v: row[offset[v] : offset[v] + sizes[v]].reshape(m.dims[v], n.dims[v])
            for v in verts
        }
        basis.append(fs)
    return basis


def hom_space_dim(m: OracleModule, n: OracleModule) -> int:
    return len(hom_basis(m, n))


def ext_dim(m: OracleModule, n: OracleModule, i: int, res: Resolution | None = None) -> int:
    """dim Ext^i(m, n) via the minimal resolution (i >= 1)."""
    if i < 1:
        raise ValueError("i must be >= 1")
    res = res or Resolution(m)
    prev = res.syzygy(i - 1)
    if prev.is_zero():
        return 0
    mult = res.cover_multiplicities(i - 1)
    hom_p = sum(mult[v] * n.dims[v] for v in m.table.pres.vertices)
    val = hom_space_dim(res.syzygy(i), n) - hom_p + hom_space_dim(prev, n)
    assert val >= 0
    return val


def ext_to_simple(m: OracleModule, n: int, v, res: Resolution | None = None) -> int:
    """Multiplicity of S_v in top(Ω^n m) = dim Ext^n(m, S_v), n >= 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    res = res or Resolution(m)
    val = res.syzygy(n).top_dims()[v]
    assert val == ext_dim(m, m.table.simple_module(v), n, res)
    return val


ISO_ENUM_LIMIT = 2**20
ISO_SAMPLES = 64


def iso_test(m: OracleModule, n: OracleModule, seed: int = 0) -> str:
    """'isomorphic' / 'not_isomorphic' / 'undetermined'."""
    if m.dimension_vector() != n.dimension_vector():
        return "not_isomorphic"
    if m.is_zero():
        return "isomorphic"
    basis = hom_basis(m, n)
    r = len(basis)
    if r == 0:
        return "not_isomorphic"
    p = m.p

    def invertible(coeffs):
        for v in m.table.pres.vertices:
            if m.dims[v] == 0:
                continue
            f = sum(int(c) * b[v] for c, b in zip(coeffs, basis)) % p
            if gfp.rank(f, p) < m.dims[v]:
                return False
        return True

    if p**r <= ISO_ENUM_LIMIT:
        for coeffs in itertools.product(range(p), repeat=r):
            if any(coeffs) and invertible(coeffs):
                return "isomorphic"
        return "not_isomorphic"
    rng = random.Random(seed)
    for _ in range(ISO_SAMPLES):
        coeffs = [rng.randrange(p) for _ in range(r)]
        if any(coeffs) and invertible(coeffs):
            return "isomorphic"
    return "undetermined"


def omega_period(m: OracleModule, bound: int, seed: int = 0) -> int | None:
    """Least 1 <= j <= bound with Ω^j m isomorphic to m, else None."""
    if m.is_zero() or syzygy_module(m).is_zero():
        raise ProjectiveInputError("module is projective (or zero)")
    res = Resolution(m)
    for j in range(1, bound + 1):
        if iso_test(res.syzygy(j), m, seed=seed) == "isomorphic":
            return j
    return None


def is_top_good(m: OracleModule, sub: OracleModule) -> bool:
    """top(m) = top(sub) + top(m/sub) vertexwise (sub a submodule of m)."""
    quot = quotient_module(m, sub)
    tm, ts, tq = m.top_dims(), sub.top_dims(), quot.top_dims()
    return all(tm[v] == ts[v] + tq[v] for v in m.table.pres.vertices)


def is_indecomposable(m: OracleModule, seed: int = 0) -> str:
    """'indecomposable' / 'decomposable' / 'undetermined' via idempotent search."""
    if m.is_zero():
        return "decomposable"
    basis = hom_basis(m, m)
    r = len(basis)
    p = m.p
    if p**r > ISO_ENUM_LIMIT:
        return "undetermined"
    verts = [v for v in m.table.pres.vertices if m.dims[v]]
    ident = tuple(np.eye(m.dims[v], dtype=np.int64) for v in verts)
    for coeffs in itertools.product(range(p), repeat=r):
        if not any(coeffs):
            continue
        f = tuple(
            sum(int(c) * b[v] for c, b in zip(coeffs, basis)) % p for v in verts
        )
        sq = tuple(a @ a % p for a in f)
        if all((x == y).all() for x, y in zip(sq, f)):
            if all(not x.any() for x in f):
                continue
            if all((x == e).all() for x, e in zip(f, ident)):
                continue
            return "decomposable"
    return "indecomposable"


def weakly_symmetric_check(table: AlgebraTable) -> bool:
    """Every projective has one-dimensional socle concentrated at its own vertex."""
    for v in table.pres.vertices:
        soc = table.projective_module(v).socle_dims()
        if soc[v] != 1 or sum(soc.values()) != 1:
            return False
    return True


def transpose_presentation(pres: BoundQuiverPresentation) -> BoundQuiverPresentation:
    arrows = [Arrow(a.label, a.target, a.source) for a in pres.arrows]
    relations = [
        [(coeff, tuple(reversed(path))) for coeff, path in rel] for rel in pres.relations
    ]
    return BoundQuiverPresentation(
        vertices=list(pres.vertices),
        arrows=arrows,
        char_p=pres.char_p,
        relations=relations,
        loewy_bound=pres.loewy_bound,
    )


def dual_module(m: OracleModule, transpose_table: AlgebraTable) -> OracleModule:
    """D(m) as a right module over the transposed presentation."""
    mats = {lab: mat.T % m.p for lab, mat in m.mats.items()}
    return OracleModule(transpose_table, dict(m.dims), mats, check=False)
