"""Duality, transpose, Auslander-Reiten translates and irreducible maps."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import exactla as la
from .quivalg import Algebra
from .repmod.decompose import EndAlgebra, iso_indecomposable
from .repmod.presentation import Presentation, cokernel_of, min_proj_presentation
from .repmod.rep import (
    Morphism,
    Rep,
    dualize,
    dualize_morphism,
    free_module,
    free_offset,
    hom_basis,
    hom_matrix,
    quotient,
)

__all__ = [
    "AlmostSplitSeq",
    "RadicalSpaces",
    "ass_simple",
    "dualize",
    "irr_dim",
    "tau",
    "tau_inverse",
    "translate",
    "transpose",
]


class ProjectiveInput(ValueError):
    pass


class InjectiveInput(ValueError):
    pass


def _strip_projective_part(pres: Presentation) -> Presentation:
    """Drop the ``P_i`` summands of ``P+`` that the presentation does not touch."""
    a, p = pres.algebra, pres.algebra.p
    keep = []
    for i in range(a.n):
        outs = [pres.blocks[k] for k in a.out_arrows[i]]
        if outs:
            keep.append(la.column_space(np.concatenate(outs, axis=1), p))
        else:
            keep.append(la.zeros(pres.plus[i], 0))
    blocks = []
    for k, ar in enumerate(a.arrows):
        x = la.solve_right(keep[ar.source], pres.blocks[k], p)
        blocks.append(x)
    return Presentation(a, tuple(b.shape[1] for b in keep), pres.minus, tuple(blocks))


def transpose(m: Rep) -> Rep:
    """``Tr M`` over the opposite algebra; projective summands of ``M`` are ignored."""
    a = m.algebra
    pres = _strip_projective_part(min_proj_presentation(m))
    if not any(pres.plus):
        raise ProjectiveInput("projective input: Tr is defined on non-projective modules")
    dual = Presentation(a.opposite, pres.minus, pres.plus, tuple(b.T.copy() for b in pres.blocks))
    return cokernel_of(dual)[0]


def tau(m: Rep) -> Rep:
    """``D Tr``."""
    return dualize(transpose(m))


def tau_inverse(m: Rep) -> Rep:
    """``Tr D``."""
    try:
        return transpose(dualize(m))
    except ProjectiveInput:
        raise InjectiveInput("injective input: tau^-1 is defined on non-injective modules") from None


def translate(m: Rep, direction: str = "tau") -> Rep:
    if direction == "tau":
        return tau(m)
    if direction in ("tauInv", "tau_inverse", "inverse"):
        return tau_inverse(m)
    raise ValueError(f"unknown direction {direction!r}")


@dataclass(frozen=True, eq=False)
class AlmostSplitSeq:
    left: Rep
    middle: Rep
    right: Rep
    inj: Morphism
    surj: Morphism
    components: tuple[tuple[int, int, int], ...]  # (i, j, k) for each copy of P_i (or E_i)

    def is_exact(self) -> bool:
        p = self.middle.p
        if not (self.inj.is_morphism() and self.surj.is_morphism()):
            return False
        for v in range(self.middle.algebra.n):
            f, g = self.inj.blocks[v], self.surj.blocks[v]
            if la.rank(f, p) != f.shape[1] or la.rank(g, p) != g.shape[0]:
                return False
            if la.matmul(g, f, p).any():
                return False
            if f.shape[1] + g.shape[0] != self.middle.dims[v]:
                return False
        return True

    def section(self) -> Morphism | None:
        """Some ``s`` with ``surj s = id``, or ``None``."""
        basis = hom_basis(self.right, self.middle)
        target = Morphism.identity(self.right).vector()
        if not basis:
            return None if target.size else Morphism.zero(self.right, self.middle)
        cols = np.array([(self.surj @ s).vector() for s in basis]).T
        c = la.solve_right(cols, target.reshape(-1, 1), self.middle.p)
        if c is None:
            return None
        return Morphism.from_vector(self.right, self.middle, la.matmul(c.T, hom_matrix(self.right, self.middle), self.middle.p).reshape(-1))

    def is_split(self) -> bool:
        return self.section() is not None


def ass_simple(a: Algebra, j: int, direction: str = "fromSimple") -> AlmostSplitSeq:
    """``0 -> U_j -> (+)_i P_i^{h_ij} -> tU_j -> 0`` or its dual ending in ``U_j``."""
    if direction == "toSimple":
        try:
            seq = ass_simple(a.opposite, j, "fromSimple")
        except InjectiveInput:
            raise ProjectiveInput(f"U_{j + 1} projective: no arrows start at vertex {j + 1}") from None
        left = dualize(seq.right)
        middle = dualize(seq.middle)
        right = dualize(seq.left)
        return AlmostSplitSeq(
            left,
            middle,
            right,
            dualize_morphism(seq.surj, middle, left),
            dualize_morphism(seq.inj, right, middle),
            seq.components,
        )
    if direction != "fromSimple":
        raise ValueError(f"unknown direction {direction!r}")
    into = a.in_arrows[j]
    if not into:
        raise InjectiveInput(f"U_{j + 1} injective: no arrows end at vertex {j + 1}")
    mult = [0] * a.n
    comps = []
    copy_of = {}
    for k in into:
        i = a.arrows[k].source
        copy_of[k] = mult[i]
        comps.append((i, j, mult[i]))
        mult[i] += 1
    middle = free_module(a, mult)
    u = Rep.zero_maps(a, [int(v == j) for v in range(a.n)])
    col = la.zeros(middle.dims[j], 1)
    for k in into:
        col[free_offset(a, mult, j, k) + copy_of[k], 0] = 1
    blocks = [la.zeros(middle.dims[v], u.dims[v]) for v in range(a.n)]
    blocks[j] = col
    theta = Morphism(u, middle, tuple(blocks))
    bases = [blocks[v] for v in range(a.n)]
    right, eta = quotient(middle, bases)
    return AlmostSplitSeq(u, middle, right, theta, eta, tuple(comps))


class RadicalSpaces:
    """``Rad`` and ``Rad^2`` between indecomposables of a fixed finite universe."""

    def __init__(self, universe: Sequence[Rep]):
        self.universe = list(universe)
        self._rad: dict[tuple[int, int], list[np.ndarray]] = {}
        self._keep: dict[int, Rep] = {}

    def _iso(self, m: Rep, n: Rep) -> Morphism | None:
        if m is n:
            return Morphism.identity(m)
        return iso_indecomposable(m, n)

    def rad(self, m: Rep, n: Rep) -> list[np.ndarray]:
        """Per-vertex block tensors ``(r, dim N_v, dim M_v)`` spanning ``Rad(M, N)``."""
        key = (id(m), id(n))
        if key in self._rad:
            return self._rad[key]
        self._keep[id(m)], self._keep[id(n)] = m, n
        g = self._iso(m, n)
        if g is None:
            gens = hom_basis(m, n)
        else:
            gens = [g @ r for r in EndAlgebra(m).radical()]
        tens = [
            np.array([f.blocks[v] for f in gens], dtype=np.int64).reshape(len(gens), n.dims[v], m.dims[v])
            for v in range(m.algebra.n)
        ]
        self._rad[key] = tens
        return tens

    def rad_dim(self, m: Rep, n: Rep) -> int:
        return self.rad(m, n)[0].shape[0] if m.algebra.n else 0

    def rad2_dim(self, m: Rep, n: Rep) -> int:
        p = m.p
        full = self.rad_dim(m, n)
        if full == 0:
            return 0
        span = np.zeros((0, sum(n.dims[v] * m.dims[v] for v in range(m.algebra.n))), dtype=np.int64)
        rk = 0
        for x in self.universe:
            first, second = self.rad(m, x), self.rad(x, n)
            r1, r2 = first[0].shape[0], second[0].shape[0]
            if r1 == 0 or r2 == 0:
                continue
            prods = [
                np.einsum("aex,bxd->abed", second[v], first[v]).reshape(r1 * r2, -1) % p
                for v in range(m.algebra.n)
            ]
            span = np.concatenate([span, np.concatenate(prods, axis=1)], axis=0)
            red, rk, _ = la.rref(span, p)
            span = red[:rk]
            if rk == full:
                break
        return rk

    def irr_dim(self, m: Rep, n: Rep) -> int:
        return self.rad_dim(m, n) - self.rad2_dim(m, n)


def irr_dim(m: Rep, n: Rep, universe: Sequence[Rep] | RadicalSpaces) -> int:
    """``dim Rad(M, N) - dim Rad^2(M, N)`` with factorizations through ``universe``."""
    spaces = universe if isinstance(universe, RadicalSpaces) else RadicalSpaces(universe)
    return spaces.irr_dim(m, n)
