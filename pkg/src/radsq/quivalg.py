"""Quivers, radical-square-zero algebras ``kQ/J^2`` and their double quivers.

Vertices are 0-based in the Python API and 1-based in files and labels.
An arrow ``a: i -> j`` acts on a representation as a map ``V_i -> V_j``;
with this convention ``Hom(P_j, rad P_i)`` has a basis indexed by the
arrows ``i -> j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import exactla as la


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    n: int
    arrows: tuple[Arrow, ...] = ()
    labels: tuple[str, ...] | None = field(default=None, compare=True)

    def __post_init__(self):
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            dup = next(x for x in names if names.count(x) > 1)
            raise ValueError(f"duplicate arrow name {dup!r}")
        for a in self.arrows:
            if not (0 <= a.source < self.n and 0 <= a.target < self.n):
                raise ValueError(f"arrow {a.name!r} has a vertex out of range")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("one label per vertex required")

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i + 1)

    def opposite(self) -> Quiver:
        return Quiver(
            self.n,
            tuple(Arrow(a.name, a.target, a.source) for a in self.arrows),
            self.labels,
        )


@dataclass(frozen=True)
class Algebra:
    """``A = kQ/J^2`` over ``F_p``; fully determined by the quiver and ``p``."""

    quiver: Quiver
    p: int

    def __post_init__(self):
        la.check_modulus(self.p)

    @property
    def n(self) -> int:
        return self.quiver.n

    @property
    def arrows(self) -> tuple[Arrow, ...]:
        return self.quiver.arrows

    @property
    def dim(self) -> int:
        return self.n + len(self.arrows)

    def label(self, i: int) -> str:
        return self.quiver.label(i)

    @cached_property
    def out_arrows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(k for k, a in enumerate(self.arrows) if a.source == i) for i in range(self.n)
        )

    @cached_property
    def in_arrows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(k for k, a in enumerate(self.arrows) if a.target == i) for i in range(self.n)
        )

    @cached_property
    def composable_pairs(self) -> tuple[tuple[int, int], ...]:
        """Pairs ``(a, b)`` of arrow indices with ``t(a) = s(b)``."""
        return tuple(
            (ka, kb)
            for ka, a in enumerate(self.arrows)
            for kb, b in enumerate(self.arrows)
            if a.target == b.source
        )

    @property
    def is_hereditary(self) -> bool:
        return not self.composable_pairs

    def arrow_count(self, i: int, j: int) -> int:
        """Number of arrows ``i -> j``; equals ``h_ij = dim Hom(P_j, rad P_i)``."""
        return sum(1 for a in self.arrows if a.source == i and a.target == j)

    def arrow_index(self, name: str) -> int:
        for k, a in enumerate(self.arrows):
            if a.name == name:
                return k
        raise KeyError(name)

    @cached_property
    def opposite(self) -> Algebra:
        return Algebra(self.quiver.opposite(), self.p)


@dataclass(frozen=True)
class BipartiteQuiver:
    """The double quiver: vertices ``i+`` (index ``i``) and ``j-`` (index ``n + j``).

    Each arrow ``a: i -> j`` of the base quiver gives the arrow ``a: j- -> i+``;
    ``correspondence[k]`` is the base arrow behind the k-th arrow.
    """

    quiver: Quiver
    n: int
    correspondence: tuple[int, ...]

    def plus(self, i: int) -> int:
        return i

    def minus(self, j: int) -> int:
        return self.n + j

    def is_plus(self, v: int) -> bool:
        return v < self.n

    def base_vertex(self, v: int) -> int:
        return v if v < self.n else v - self.n


def gamma_labels(n: int) -> tuple[str, ...]:
    return tuple(f"{i + 1}+" for i in range(n)) + tuple(f"{i + 1}-" for i in range(n))


def double_species(a: Algebra) -> BipartiteQuiver:
    n = a.n
    arrows = tuple(Arrow(ar.name, n + ar.target, ar.source) for ar in a.arrows)
    q = Quiver(2 * n, arrows, gamma_labels(n))
    return BipartiteQuiver(q, n, tuple(range(len(arrows))))


def as_algebra(g: BipartiteQuiver, p: int) -> Algebra:
    for ar in g.quiver.arrows:
        if g.is_plus(ar.source) or not g.is_plus(ar.target):
            raise ValueError("not bipartite: arrows must run from minus to plus vertices")
    return Algebra(g.quiver, p)


def gamma(a: Algebra) -> Algebra:
    """``as_algebra(double_species(a))``."""
    return as_algebra(double_species(a), a.p)


def parse_quiver(text: str) -> Algebra:
    p = None
    n = None
    arrows: list[Arrow] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        key = tok[0]
        try:
            if key == "field" and len(tok) == 2:
                p = int(tok[1])
            elif key == "vertices" and len(tok) == 2:
                n = int(tok[1])
            elif key == "arrow" and len(tok) == 4:
                arrows.append(Arrow(tok[1], int(tok[2]) - 1, int(tok[3]) - 1))
            else:
                raise ValueError
        except ValueError:
            raise ValueError(f"line {lineno}: cannot parse {raw.strip()!r}") from None
    if p is None or n is None:
        raise ValueError("quiver file needs 'field' and 'vertices' lines")
    return Algebra(Quiver(n, tuple(arrows)), p)


def format_quiver(a: Algebra) -> str:
    lines = [f"field {a.p}", f"vertices {a.n}"]
    if a.quiver.labels is not None:
        lines += [f"# vertex {i + 1} = {a.label(i)}" for i in range(a.n)]
    lines += [f"arrow {ar.name} {ar.source + 1} {ar.target + 1}" for ar in a.arrows]
    return "\n".join(lines) + "\n"


def standard_module(a: Algebra, kind: str, i: int):
    """``P_i``, ``E_i`` or ``U_i`` as a :class:`~radsq.repmod.Rep`."""
    from .repmod.rep import Rep, dualize, free_module

    if not 0 <= i < a.n:
        raise ValueError(f"vertex {i} out of range")
    unit = tuple(int(k == i) for k in range(a.n))
    if kind == "projective":
        return free_module(a, unit)
    if kind == "injective":
        return dualize(free_module(a.opposite, unit))
    if kind == "simple":
        return Rep.zero_maps(a, unit)
    raise ValueError(f"unknown kind {kind!r}")


def random_algebra(n: int, n_arrows: int, p: int, seed: int, max_outdeg: int | None = None) -> Algebra:
    """A random quiver (loops and multiple arrows allowed)."""
    if max_outdeg is not None and max_outdeg * n < n_arrows:
        raise ValueError("too many arrows for the out-degree cap")
    rng = np.random.default_rng(seed)
    arrows: list[Arrow] = []
    outdeg = [0] * n
    while len(arrows) < n_arrows:
        s, t = (int(x) for x in rng.integers(0, n, size=2))
        if max_outdeg is not None and outdeg[s] >= max_outdeg:
            continue
        outdeg[s] += 1
        arrows.append(Arrow(f"a{len(arrows) + 1}", s, t))
    return Algebra(Quiver(n, tuple(arrows)), p)
