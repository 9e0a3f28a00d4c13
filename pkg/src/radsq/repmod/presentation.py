"""Projective covers and minimal projective presentations.

For ``J^2 = 0`` a minimal presentation ``P- -> P+ -> M -> 0`` is stored by
multiplicities and one ``m_i x n_j`` block per arrow ``a: i -> j``: column
``l`` of the generators of ``P-`` at ``j`` maps to the element of
``rad P+`` whose ``a e_{i,k}`` coordinate is ``block[k, l]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .. import exactla as la
from ..quivalg import Algebra
from .rep import Morphism, Rep, free_module, free_offset, quotient, radical_bases


@dataclass(frozen=True, eq=False)
class Presentation:
    algebra: Algebra
    plus: tuple[int, ...]
    minus: tuple[int, ...]
    blocks: tuple[np.ndarray, ...]

    def __post_init__(self):
        for ar, b in zip(self.algebra.arrows, self.blocks):
            if b.shape != (self.plus[ar.source], self.minus[ar.target]):
                raise ValueError(f"block for arrow {ar.name} has shape {b.shape}")

    def kernel_vectors(self, j: int) -> np.ndarray:
        """Images of the generators of ``P-`` at ``j``, as columns of ``P+(j)``."""
        a = self.algebra
        rows = [la.zeros(self.plus[j], self.minus[j])]
        rows += [self.blocks[k] for k in a.in_arrows[j]]
        return np.concatenate(rows, axis=0)

    def is_minimal(self) -> bool:
        """``ker phi`` inside ``rad P-`` (independent columns) and image in ``rad P+``."""
        p = self.algebra.p
        return all(
            la.rank(self.kernel_vectors(j), p) == self.minus[j] for j in range(self.algebra.n)
        )


class Cover(NamedTuple):
    module: Rep  # the free module P(M)
    proj: Morphism  # P(M) -> M
    mult: tuple[int, ...]
    tops: list[np.ndarray]  # columns: chosen lifts of a basis of top M, per vertex


def free_hom(a: Algebra, mult: Sequence[int], target: Rep, gens: Sequence[np.ndarray]) -> Morphism:
    """The morphism ``free_module(mult) -> target`` sending top generators to ``gens[v]`` columns."""
    p = a.p
    src = free_module(a, mult)
    blocks = []
    for v in range(a.n):
        cols = [gens[v]]
        for k in a.in_arrows[v]:
            s = a.arrows[k].source
            cols.append(la.matmul(target.maps[k], gens[s], p))
        blocks.append(np.concatenate(cols, axis=1) if cols else la.zeros(target.dims[v], 0))
    return Morphism(src, target, tuple(b.reshape(target.dims[v], src.dims[v]) for v, b in enumerate(blocks)))


def projective_cover(m: Rep) -> Cover:
    a = m.algebra
    rad = radical_bases(m)
    tops = []
    for v in range(a.n):
        comp = la.complement_indices(rad[v], m.p)
        tops.append(la.eye(m.dims[v])[:, comp])
    mult = tuple(t.shape[1] for t in tops)
    pi = free_hom(a, mult, m, tops)
    return Cover(pi.source, pi, mult, tops)


def lift_generators(cover: Cover, targets: Sequence[np.ndarray]) -> list[np.ndarray]:
    """Preimages under the cover of the column vectors ``targets[v]`` (elements of ``N_v``)."""
    p = cover.proj.p
    out = []
    for v, t in enumerate(targets):
        x = la.solve_right(cover.proj.blocks[v], t, p)
        if x is None:
            raise ArithmeticError("cover is not surjective")
        out.append(x)
    return out


def min_proj_presentation(m: Rep, cover: Cover | None = None) -> Presentation:
    a, p = m.algebra, m.p
    cover = cover or projective_cover(m)
    mult = cover.mult
    kers = []
    for j in range(a.n):
        rad_part = cover.proj.blocks[j][:, mult[j] :]
        kers.append(la.kernel_basis(rad_part, p))
    minus = tuple(k.shape[1] for k in kers)
    blocks = []
    for k, ar in enumerate(a.arrows):
        i, j = ar.source, ar.target
        off = free_offset(a, mult, j, k) - mult[j]
        blocks.append(kers[j][off : off + mult[i], :].copy())
    return Presentation(a, mult, minus, tuple(blocks))


def kernel_of_cover(cover: Cover) -> list[np.ndarray]:
    """Per-vertex bases of ``ker(P(M) -> M)`` inside the free module, rad coordinates padded."""
    p = cover.proj.p
    out = []
    for j, b in enumerate(cover.proj.blocks):
        mj = cover.mult[j]
        k = la.kernel_basis(b[:, mj:], p)
        out.append(np.concatenate([la.zeros(mj, k.shape[1]), k], axis=0))
    return out


def cokernel_of(pres: Presentation) -> tuple[Rep, Morphism]:
    """``coker phi`` and the quotient map from ``P+``."""
    free = free_module(pres.algebra, pres.plus)
    bases = [pres.kernel_vectors(j) for j in range(pres.algebra.n)]
    return quotient(free, bases)
