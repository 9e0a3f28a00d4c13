"""Representations of ``kQ/J^2`` and their morphisms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .. import exactla as la
from ..quivalg import Algebra


@dataclass(frozen=True, eq=False)
class Rep:
    """One space ``k^{dims[i]}`` per vertex and one matrix per arrow.

    ``maps[k]`` has shape ``(dims[t], dims[s])`` for the k-th arrow ``s -> t``.
    """

    algebra: Algebra
    dims: tuple[int, ...]
    maps: tuple[np.ndarray, ...]

    @classmethod
    def zero_maps(cls, a: Algebra, dims: Sequence[int]) -> Rep:
        dims = tuple(int(d) for d in dims)
        return cls(a, dims, tuple(la.zeros(dims[ar.target], dims[ar.source]) for ar in a.arrows))

    @classmethod
    def from_maps(cls, a: Algebra, dims: Sequence[int], maps: dict | Sequence | None = None) -> Rep:
        """Build and validate; ``maps`` keyed by arrow name, omitted ones are zero."""
        dims = tuple(int(d) for d in dims)
        if len(dims) != a.n:
            raise ValueError(f"expected {a.n} dimensions, got {len(dims)}")
        if maps is None:
            maps = {}
        if not isinstance(maps, dict):
            maps = {ar.name: m for ar, m in zip(a.arrows, maps)}
        unknown = set(maps) - {ar.name for ar in a.arrows}
        if unknown:
            raise ValueError(f"unknown arrows {sorted(unknown)}")
        mats = []
        for ar in a.arrows:
            shape = (dims[ar.target], dims[ar.source])
            if ar.name in maps:
                m = np.asarray(maps[ar.name], dtype=np.int64).reshape(shape) % a.p
            else:
                m = la.zeros(*shape)
            mats.append(m)
        rep = cls(a, dims, tuple(mats))
        err = validate(rep)
        if err:
            raise ValueError(err)
        return rep

    @property
    def p(self) -> int:
        return self.algebra.p

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def map(self, name: str) -> np.ndarray:
        return self.maps[self.algebra.arrow_index(name)]

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def is_semisimple(self) -> bool:
        return all(not m.any() for m in self.maps)

    def __repr__(self):
        return f"Rep(dims={self.dims})"


@dataclass(frozen=True, eq=False)
class Morphism:
    """Per-vertex blocks ``alpha_i: V_i -> W_i``."""

    source: Rep
    target: Rep
    blocks: tuple[np.ndarray, ...]

    @property
    def p(self) -> int:
        return self.source.p

    @classmethod
    def identity(cls, m: Rep) -> Morphism:
        return cls(m, m, tuple(la.eye(d) for d in m.dims))

    @classmethod
    def zero(cls, m: Rep, n: Rep) -> Morphism:
        return cls(m, n, tuple(la.zeros(e, d) for d, e in zip(m.dims, n.dims)))

    @classmethod
    def from_vector(cls, m: Rep, n: Rep, vec: np.ndarray) -> Morphism:
        blocks, off = [], 0
        for d, e in zip(m.dims, n.dims):
            blocks.append(np.asarray(vec[off : off + d * e], dtype=np.int64).reshape(e, d))
            off += d * e
        return cls(m, n, tuple(blocks))

    def vector(self) -> np.ndarray:
        if not self.blocks:
            return np.zeros(0, dtype=np.int64)
        return np.concatenate([b.reshape(-1) for b in self.blocks])

    def __matmul__(self, other: Morphism) -> Morphism:
        """``self @ other`` is ``self`` after ``other``."""
        p = self.p
        return Morphism(
            other.source,
            self.target,
            tuple(la.matmul(f, g, p) for f, g in zip(self.blocks, other.blocks)),
        )

    def __add__(self, other: Morphism) -> Morphism:
        p = self.p
        return Morphism(self.source, self.target, tuple((f + g) % p for f, g in zip(self.blocks, other.blocks)))

    def scale(self, c: int) -> Morphism:
        p = self.p
        return Morphism(self.source, self.target, tuple((c * f) % p for f in self.blocks))

    def is_zero(self) -> bool:
        return all(not b.any() for b in self.blocks)

    def is_iso(self) -> bool:
        p = self.p
        return self.source.dims == self.target.dims and all(la.is_invertible(b, p) for b in self.blocks)

    def inverse(self) -> Morphism:
        p = self.p
        return Morphism(self.target, self.source, tuple(la.inverse(b, p) for b in self.blocks))

    def is_morphism(self) -> bool:
        """Check that every arrow square commutes."""
        p = self.p
        for ar, f, g in zip(self.source.algebra.arrows, self.source.maps, self.target.maps):
            lhs = la.matmul(g, self.blocks[ar.source], p)
            rhs = la.matmul(self.blocks[ar.target], f, p)
            if not np.array_equal(lhs, rhs):
                return False
        return True

    def total_matrix(self) -> np.ndarray:
        return block_diag(self.blocks)

    def is_nilpotent(self) -> bool:
        return all(_nilpotent(b, self.p) for b in self.blocks)


def _nilpotent(b: np.ndarray, p: int) -> bool:
    x = b
    n = b.shape[0]
    k = 1
    while k < n:
        x = la.matmul(x, x, p)
        k *= 2
    return not la.matmul(x, b, p).any() if n else True


def block_diag(blocks: Sequence[np.ndarray]) -> np.ndarray:
    r = sum(b.shape[0] for b in blocks)
    c = sum(b.shape[1] for b in blocks)
    out = la.zeros(r, c)
    i = j = 0
    for b in blocks:
        out[i : i + b.shape[0], j : j + b.shape[1]] = b
        i += b.shape[0]
        j += b.shape[1]
    return out


def validate(m: Rep) -> str | None:
    """``None`` if ``m`` is a valid module, else a description of the first problem."""
    a = m.algebra
    if len(m.dims) != a.n or len(m.maps) != len(a.arrows):
        return "wrong number of spaces or maps"
    for ar, f in zip(a.arrows, m.maps):
        if f.shape != (m.dims[ar.target], m.dims[ar.source]):
            return f"arrow {ar.name}: matrix shape {f.shape} does not match dims"
        if f.size and (f.min() < 0 or f.max() >= a.p):
            return f"arrow {ar.name}: entries not reduced mod {a.p}"
    for ka, kb in a.composable_pairs:
        prod = la.matmul(m.maps[kb], m.maps[ka], a.p)
        if prod.any():
            return (
                f"composition {a.arrows[kb].name}*{a.arrows[ka].name} is nonzero "
                f"(violates rad^2 = 0)"
            )
    return None


def hom_system(m: Rep, n: Rep) -> np.ndarray:
    """Matrix whose kernel is ``Hom(m, n)`` in :meth:`Morphism.vector` coordinates."""
    a = m.algebra
    p = a.p
    offs = [0]
    for d, e in zip(m.dims, n.dims):
        offs.append(offs[-1] + d * e)
    rows = []
    for ar, f, g in zip(a.arrows, m.maps, n.maps):
        s, t = ar.source, ar.target
        ds, dt, es, et = m.dims[s], m.dims[t], n.dims[s], n.dims[t]
        if et * ds == 0:
            continue
        block = la.zeros(et * ds, offs[-1])
        # g alpha_s - alpha_t f, row-major vec
        block[:, offs[s] : offs[s + 1]] += np.kron(g, la.eye(ds))
        block[:, offs[t] : offs[t + 1]] -= np.kron(la.eye(et), f.T)
        rows.append(block % p)
    if not rows:
        return la.zeros(0, offs[-1])
    return np.concatenate(rows, axis=0)


def hom_matrix(m: Rep, n: Rep) -> np.ndarray:
    """Rows form a basis of ``Hom(m, n)`` as flattened morphisms."""
    if m.algebra != n.algebra:
        raise ValueError("modules over different algebras")
    return la.kernel_basis(hom_system(m, n), m.p).T.copy()


def hom_basis(m: Rep, n: Rep) -> list[Morphism]:
    return [Morphism.from_vector(m, n, row) for row in hom_matrix(m, n)]


def hom_dim(m: Rep, n: Rep) -> int:
    sys = hom_system(m, n)
    return sys.shape[1] - la.rank(sys, m.p)


def submodule(m: Rep, bases: Sequence[np.ndarray]) -> tuple[Rep, Morphism]:
    """The submodule spanned by per-vertex column ``bases`` (assumed invariant)."""
    a, p = m.algebra, m.p
    maps = []
    for ar, f in zip(a.arrows, m.maps):
        bs, bt = bases[ar.source], bases[ar.target]
        img = la.matmul(f, bs, p)
        x = la.solve_right(bt, img, p)
        if x is None:
            raise ValueError(f"subspace not invariant under arrow {ar.name}")
        maps.append(x)
    sub = Rep(a, tuple(b.shape[1] for b in bases), tuple(maps))
    return sub, Morphism(sub, m, tuple(b.copy() for b in bases))


def quotient(m: Rep, bases: Sequence[np.ndarray]) -> tuple[Rep, Morphism]:
    """``m`` modulo the submodule spanned by per-vertex column ``bases``."""
    a, p = m.algebra, m.p
    qs, sections = [], []
    for d, b in zip(m.dims, bases):
        q, _ = la.cokernel_projection(b, p)
        comp = la.complement_indices(la.column_space(b, p), p)
        qs.append(q)
        sections.append(la.eye(d)[:, comp])
    maps = tuple(
        la.matmul(la.matmul(qs[ar.target], f, p), sections[ar.source], p)
        for ar, f in zip(a.arrows, m.maps)
    )
    quo = Rep(a, tuple(q.shape[0] for q in qs), maps)
    return quo, Morphism(m, quo, tuple(qs))


def image(f: Morphism) -> list[np.ndarray]:
    return [la.column_space(b, f.p) for b in f.blocks]


def kernel(f: Morphism) -> list[np.ndarray]:
    return [la.kernel_basis(b, f.p) for b in f.blocks]


def direct_sum(reps: Sequence[Rep], algebra: Algebra | None = None) -> Rep:
    if not reps:
        if algebra is None:
            raise ValueError("empty direct sum needs an algebra")
        return Rep.zero_maps(algebra, [0] * algebra.n)
    a = reps[0].algebra
    if any(r.algebra != a for r in reps):
        raise ValueError("modules over different algebras")
    dims = tuple(sum(r.dims[i] for r in reps) for i in range(a.n))
    maps = tuple(block_diag([r.maps[k] for r in reps]) for k in range(len(a.arrows)))
    return Rep(a, dims, maps)


def sum_inclusions(reps: Sequence[Rep], total: Rep) -> list[Morphism]:
    """Canonical inclusions ``reps[k] -> total`` for ``total = direct_sum(reps)``."""
    out = []
    offs = [0] * total.algebra.n
    for r in reps:
        blocks = []
        for i, d in enumerate(r.dims):
            b = la.zeros(total.dims[i], d)
            b[offs[i] : offs[i] + d] = la.eye(d)
            offs[i] += d
            blocks.append(b)
        out.append(Morphism(r, total, tuple(blocks)))
    return out


def morphism_sum(fs: Sequence[Morphism], source: Rep, target: Rep) -> Morphism:
    """``\\oplus fs``: block-diagonal morphism between the direct sums."""
    blocks = tuple(block_diag([f.blocks[i] for f in fs]) for i in range(source.algebra.n))
    return Morphism(source, target, blocks)


def row_morphism(fs: Sequence[Morphism], source: Rep, target: Rep) -> Morphism:
    """``[f_1 ... f_k]: \\oplus sources -> target``."""
    blocks = []
    for i in range(target.algebra.n):
        parts = [f.blocks[i] for f in fs]
        blocks.append(np.concatenate(parts, axis=1) if parts else la.zeros(target.dims[i], 0))
    return Morphism(source, target, tuple(blocks))


class Parts(NamedTuple):
    rad: Rep
    rad_incl: Morphism
    top: Rep
    top_proj: Morphism
    soc: Rep
    soc_incl: Morphism


def radical_bases(m: Rep) -> list[np.ndarray]:
    a, p = m.algebra, m.p
    out = []
    for i in range(a.n):
        cols = [m.maps[k] for k in a.in_arrows[i]]
        if cols:
            out.append(la.column_space(np.concatenate(cols, axis=1), p))
        else:
            out.append(la.zeros(m.dims[i], 0))
    return out


def socle_bases(m: Rep) -> list[np.ndarray]:
    a, p = m.algebra, m.p
    out = []
    for i in range(a.n):
        rows = [m.maps[k] for k in a.out_arrows[i]]
        if rows:
            out.append(la.kernel_basis(np.concatenate(rows, axis=0), p))
        else:
            out.append(la.eye(m.dims[i]))
    return out


def parts(m: Rep) -> Parts:
    rad, rad_incl = submodule(m, radical_bases(m))
    top, top_proj = quotient(m, radical_bases(m))
    soc, soc_incl = submodule(m, socle_bases(m))
    return Parts(rad, rad_incl, top, top_proj, soc, soc_incl)


def free_module(a: Algebra, mult: Sequence[int]) -> Rep:
    """``\\oplus_i P_i^{mult[i]}`` with a fixed basis.

    At vertex ``v`` the basis is: the ``mult[v]`` top generators, then for
    each arrow ``x: i -> v`` (arrow order) the vectors ``x e_{i,k}``,
    ``k < mult[i]``.
    """
    mult = tuple(int(x) for x in mult)
    dims = [mult[v] + sum(mult[a.arrows[k].source] for k in a.in_arrows[v]) for v in range(a.n)]
    maps = []
    for k, ar in enumerate(a.arrows):
        f = la.zeros(dims[ar.target], dims[ar.source])
        off = free_offset(a, mult, ar.target, k)
        for c in range(mult[ar.source]):
            f[off + c, c] = 1
        maps.append(f)
    return Rep(a, tuple(dims), tuple(maps))


def free_offset(a: Algebra, mult: Sequence[int], v: int, arrow: int) -> int:
    """Offset of the block ``arrow * e_{s,*}`` inside vertex ``v`` of :func:`free_module`."""
    off = mult[v]
    for k in a.in_arrows[v]:
        if k == arrow:
            return off
        off += mult[a.arrows[k].source]
    raise ValueError("arrow does not end at v")


def dualize(m: Rep) -> Rep:
    """The k-dual, a module over the opposite algebra."""
    return Rep(m.algebra.opposite, m.dims, tuple(f.T.copy() for f in m.maps))


def dualize_morphism(f: Morphism, source_dual: Rep | None = None, target_dual: Rep | None = None) -> Morphism:
    """``D f: D target -> D source``."""
    s = target_dual if target_dual is not None else dualize(f.target)
    t = source_dual if source_dual is not None else dualize(f.source)
    return Morphism(s, t, tuple(b.T.copy() for b in f.blocks))


def change_basis(m: Rep, gs: Sequence[np.ndarray]) -> tuple[Rep, Morphism]:
    """``m`` transported along invertible ``gs``; returns the new module and ``m -> new``."""
    a, p = m.algebra, m.p
    ginv = [la.inverse(g, p) for g in gs]
    maps = tuple(
        la.matmul(la.matmul(gs[ar.target], f, p), ginv[ar.source], p) for ar, f in zip(a.arrows, m.maps)
    )
    new = Rep(a, m.dims, maps)
    return new, Morphism(m, new, tuple(g % p for g in gs))


def encode(m: Rep) -> bytes:
    """Byte string of dims and matrices; used for deterministic ordering only."""
    parts_ = [np.asarray(m.dims, dtype=np.int64).tobytes()]
    parts_ += [f.astype(np.int64).tobytes() for f in m.maps]
    return b"|".join(parts_)
