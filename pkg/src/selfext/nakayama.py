"""Exact combinatorial homological calculator for connected Nakayama algebras.

An algebra is given by its Kupisch series [c_0, ..., c_{n-1}] (Loewy length
of the projective at vertex i) on a cyclic or linear quiver with arrows
i -> i+1.  Every indecomposable module is serial and is named by the pair
(vertex, length).  All operations below are closed-form path counts; the
bound quiver oracle re-derives the same numbers by brute force linear
algebra and the two are compared in the test suite.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field


class KupischError(ValueError):
    """Invalid Kupisch series."""


class MonotonicityViolation(KupischError):
    pass


class DisconnectedQuiver(KupischError):
    pass


class LinearOverflow(KupischError):
    pass


class MissingTerminalSimple(KupischError):
    pass


class NotSelfInjective(ValueError):
    pass


class ProjectiveInput(ValueError):
    pass


class Shape(enum.Enum):
    CYCLIC = "cyclic"
    LINEAR = "linear"


INFINITE = math.inf


@dataclass(frozen=True)
class NakayamaAlgebra:
    shape: Shape
    kupisch: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.kupisch)

    def c(self, i: int) -> int:
        """Loewy length of the projective at vertex i, indices mod n for cyclic."""
        if self.shape is Shape.CYCLIC:
            return self.kupisch[i % self.n]
        if not 0 <= i < self.n:
            raise IndexError(f"vertex {i} outside linear quiver of size {self.n}")
        return self.kupisch[i]

    def vertex(self, i: int) -> int:
        return i % self.n if self.shape is Shape.CYCLIC else i

    def modules(self):
        """All serial modules (i, k), 1 <= k <= c_i."""
        for i in range(self.n):
            for k in range(1, self.kupisch[i] + 1):
                yield SerialModule(i, k)

    def loewy_length(self) -> int:
        return max(self.kupisch)

    def dimension(self) -> int:
        return sum(self.kupisch)

    def is_self_injective(self) -> bool:
        return self.shape is Shape.CYCLIC and len(set(self.kupisch)) == 1

    def key(self) -> str:
        return f"{self.shape.value}:{','.join(map(str, self.kupisch))}"


@dataclass(frozen=True)
class SerialModule:
    i: int
    k: int

    def __repr__(self):
        return f"({self.i},{self.k})"


@dataclass
class HomologicalReport:
    module: SerialModule
    proj_dim: float
    inj_dim: float
    rigid: bool
    ext_dims: list[int] = field(default_factory=list)


def validate_kupisch(series, shape: Shape) -> NakayamaAlgebra:
    series = tuple(int(c) for c in series)
    if not series:
        raise KupischError("empty Kupisch series")
    n = len(series)
    if any(c < 1 for c in series):
        raise KupischError(f"Loewy lengths must be positive, got {series}")
    if shape is Shape.CYCLIC:
        for i in range(n):
            if series[(i + 1) % n] < series[i] - 1:
                raise MonotonicityViolation(
                    f"c_{(i + 1) % n}={series[(i + 1) % n]} < c_{i}-1={series[i] - 1}"
                )
        if n >= 2 and any(c < 2 for c in series):
            raise DisconnectedQuiver(f"cyclic series with some c_i < 2: {series}")
    else:
        if series[n - 1] != 1:
            raise MissingTerminalSimple(f"linear series must end with 1: {series}")
        for i in range(n - 1):
            if series[i] < 2:
                raise DisconnectedQuiver(f"interior c_{i} < 2 in linear series {series}")
            if series[i] > n - i:
                raise LinearOverflow(f"c_{i}={series[i]} > n-i={n - i}")
            if series[i + 1] < series[i] - 1:
                raise MonotonicityViolation(
                    f"c_{i + 1}={series[i + 1]} < c_{i}-1={series[i] - 1}"
                )
    return NakayamaAlgebra(shape, series)


def check_module(a: NakayamaAlgebra, m: SerialModule) -> None:
    if not 0 <= m.i < a.n:
        raise ValueError(f"vertex {m.i} out of range")
    if not 1 <= m.k <= a.c(m.i):
        raise ValueError(f"length {m.k} not in [1, c_{m.i}={a.c(m.i)}]")


def is_projective(a: NakayamaAlgebra, m: SerialModule) -> bool:
    return m.k == a.c(m.i)


def syzygy(a: NakayamaAlgebra, m: SerialModule) -> SerialModule | None:
    """First syzygy; None encodes the zero module (m projective)."""
    check_module(a, m)
    if is_projective(a, m):
        return None
    res = SerialModule(a.vertex(m.i + m.k), a.c(m.i) - m.k)
    # Kupisch monotonicity guarantees the result is a valid module.
    assert res.k <= a.c(res.i), (a, m, res)
    return res


def _path_count(a: NakayamaAlgebra, src: int, dst: int, lo: int, hi: int) -> int:
    """Number of quiver paths src -> dst with length d, lo <= d <= hi."""
    if hi < lo:
        return 0
    if a.shape is Shape.CYCLIC:
        d0 = (dst - src) % a.n
        if d0 > hi:
            return 0
        first = d0 if d0 >= lo else d0 + a.n * ((lo - d0 + a.n - 1) // a.n)
        if first > hi:
            return 0
        return (hi - first) // a.n + 1
    d = dst - src
    return 1 if lo <= d <= hi else 0


def hom_dim(a: NakayamaAlgebra, m: SerialModule, n: SerialModule) -> int:
    """dim Hom((i,k), (j,l)) = paths j -> i of length d, max(0, l-k) <= d <= l-1."""
    check_module(a, m)
    check_module(a, n)
    return _path_count(a, n.i, m.i, max(0, n.k - m.k), n.k - 1)


def ext1_dim(a: NakayamaAlgebra, m: SerialModule, n: SerialModule) -> int:
    """dim Ext^1(M, N) from the four-term Hom sequence of 0 -> ΩM -> P(M) -> M -> 0."""
    check_module(a, m)
    check_module(a, n)
    om = syzygy(a, m)
    if om is None:
        return 0
    p = SerialModule(m.i, a.c(m.i))
    val = hom_dim(a, om, n) - hom_dim(a, p, n) + hom_dim(a, m, n)
    assert val >= 0
    if m.k >= n.k:
        # Lemma shortcut: when dim M >= dim N the whole Hom(ΩM, N) survives.
        assert val == hom_dim(a, om, n), (a, m, n)
    return val


def ext_dim(a: NakayamaAlgebra, m: SerialModule, n: SerialModule, i: int) -> int:
    """dim Ext^i(M, N) by dimension shifting along the syzygy orbit."""
    if i < 1:
        raise ValueError("i must be >= 1")
    x: SerialModule | None = m
    for _ in range(i - 1):
        x = syzygy(a, x)
        if x is None:
            return 0
    if x is None or is_projective(a, x):
        return 0
    return ext1_dim(a, x, n)


def is_rigid(a: NakayamaAlgebra, m: SerialModule) -> bool:
    check_module(a, m)
    if a.shape is Shape.LINEAR:
        assert ext1_dim(a, m, m) == 0
        return True
    rigid = not (a.n <= m.k <= a.c(m.i) - a.n)
    assert rigid == (ext1_dim(a, m, m) == 0), (a, m)
    return rigid


def proj_dim(a: NakayamaAlgebra, m: SerialModule) -> float:
    """Projective dimension; math.inf when the syzygy orbit cycles."""
    check_module(a, m)
    seen = set()
    x: SerialModule | None = m
    steps = 0
    while x is not None:
        if (x.i, x.k) in seen:
            return INFINITE
        seen.add((x.i, x.k))
        x = syzygy(a, x)
        if x is None:
            return steps
        steps += 1
    return steps


def _relabel(a: NakayamaAlgebra, v: int) -> int:
    """Vertex relabeling identifying A^op with a Kupisch-presented algebra."""
    return (-v) % a.n if a.shape is Shape.CYCLIC else a.n - 1 - v


def opposite_algebra(a: NakayamaAlgebra) -> NakayamaAlgebra:
    """Kupisch series of A^op.

    The projective e_j A^op is the left projective A e_j, whose Loewy length
    is the first d >= 0 at which the length-d path into j dies:
    c'_{relabel(j)} = min{ d >= 0 : c_{j-d} <= d } (for linear, paths from
    negative vertices do not exist, so the search also stops there).
    """
    n = a.n
    opp = [0] * n
    for j in range(n):
        d = 0
        while True:
            src = j - d
            if a.shape is Shape.LINEAR and src < 0:
                break
            if a.c(src) <= d:
                break
            d += 1
        opp[_relabel(a, j)] = d
    result = validate_kupisch(opp, a.shape)
    assert result.dimension() == a.dimension()
    return result


def dual_module(a: NakayamaAlgebra, m: SerialModule) -> SerialModule:
    """D(M) as a serial module over opposite_algebra(a); same length, top at relabel(socle vertex)."""
    check_module(a, m)
    aop = opposite_algebra(a)
    top = _relabel(a, a.vertex(m.i + m.k - 1))
    dm = SerialModule(top, m.k)
    check_module(aop, dm)
    return dm


def inj_dim(a: NakayamaAlgebra, m: SerialModule) -> float:
    return proj_dim(opposite_algebra(a), dual_module(a, m))


def omega_orbit(a: NakayamaAlgebra, m: SerialModule) -> tuple[list[SerialModule], int]:
    """Syzygy chain until the zero module or a repeat.

    Returns (chain, cycle_start) where cycle_start = -1 when the chain ends
    at zero (finite projective dimension), otherwise the index where the
    orbit starts repeating.
    """
    chain = [m]
    index = {(m.i, m.k): 0}
    x: SerialModule | None = m
    while True:
        x = syzygy(a, x)
        if x is None:
            return chain, -1
        if (x.i, x.k) in index:
            return chain, index[(x.i, x.k)]
        index[(x.i, x.k)] = len(chain)
        chain.append(x)


def omega_period(a: NakayamaAlgebra, m: SerialModule) -> int:
    """Least m >= 1 with Ω^m M = M; self-injective (constant cyclic series) only."""
    if not a.is_self_injective():
        raise NotSelfInjective(f"{a.key()} is not self-injective")
    check_module(a, m)
    if is_projective(a, m):
        raise ProjectiveInput(f"{m} is projective")
    x = syzygy(a, m)
    period = 1
    while x != m:
        x = syzygy(a, x)
        period += 1
        assert period <= a.dimension()
    return period


def tate_ext_dim(a: NakayamaAlgebra, n: SerialModule, i: int) -> int:
    """Tate self-extension dimension in any integer degree (self-injective case)."""
    if not a.is_self_injective():
        raise NotSelfInjective(f"{a.key()} is not self-injective")
    check_module(a, n)
    if is_projective(a, n):
        raise ProjectiveInput(f"{n} is projective")
    if i >= 1:
        return ext_dim(a, n, n, i)
    m = omega_period(a, n)
    l = (i - 1) % m
    if l == 0:
        l = m
    x = n
    for _ in range(l):
        x = syzygy(a, x)
    return ext1_dim(a, x, n)


def report(a: NakayamaAlgebra, m: SerialModule, depth: int = 20) -> HomologicalReport:
    ext_dims = [ext_dim(a, m, m, i) for i in range(1, depth + 1)]
    return HomologicalReport(
        module=m,
        proj_dim=proj_dim(a, m),
        inj_dim=inj_dim(a, m),
        rigid=is_rigid(a, m),
        ext_dims=ext_dims,
    )
