"""The functor ``Phi`` from the stable category of ``A`` to flat modules over ``Gamma(A)``.

``Phi(M)`` is read off a minimal presentation ``P- -> P+`` of ``M``: the
space at ``i+`` is the multiplicity space ``k^{m_i}`` of ``P_i`` in ``P+``,
the space at ``j-`` is ``k^{n_j}``, and the arrow coming from ``a: i -> j``
carries the ``a``-block of the presentation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import exactla as la
from .quivalg import Algebra, Arrow, Quiver, gamma
from .repmod.presentation import (
    Presentation,
    cokernel_of,
    lift_generators,
    min_proj_presentation,
    projective_cover,
)
from .repmod.rep import (
    Morphism,
    Rep,
    block_diag,
    dualize,
    hom_basis,
    hom_dim,
    parts,
)


def phi(a: Algebra, m: Rep) -> Rep:
    if m.algebra != a:
        raise ValueError("module is not over the given algebra")
    pres = min_proj_presentation(m)
    return presentation_to_gamma(pres)


def presentation_to_gamma(pres: Presentation) -> Rep:
    g = gamma(pres.algebra)
    return Rep(g, pres.plus + pres.minus, tuple(b.copy() for b in pres.blocks))


def gamma_to_presentation(a: Algebra, v: Rep) -> Presentation:
    n = a.n
    if v.algebra != gamma(a):
        raise ValueError("module is not over Gamma(A)")
    return Presentation(a, v.dims[:n], v.dims[n:], tuple(f.copy() for f in v.maps))


def minus_simple_multiplicity(v: Rep, j: int) -> int:
    """Multiplicity of ``S-_j`` as a summand: the kernel of everything leaving ``j-``."""
    g = v.algebra
    src = g.n // 2 + j
    outs = [v.maps[k] for k in g.out_arrows[src]]
    d = v.dims[src]
    if not outs:
        return d
    return d - la.rank(np.concatenate(outs, axis=0), v.p)


def plus_simple_multiplicity(v: Rep, i: int) -> int:
    """Multiplicity of ``S+_i`` as a summand: the codimension of the images at ``i+``."""
    g = v.algebra
    ins = [v.maps[k] for k in g.in_arrows[i]]
    d = v.dims[i]
    if not ins:
        return d
    return d - la.rank(np.concatenate(ins, axis=1), v.p)


def has_minus_simple_summand(v: Rep) -> bool:
    return any(minus_simple_multiplicity(v, j) for j in range(v.algebra.n // 2))


def has_plus_simple_summand(v: Rep) -> bool:
    return any(plus_simple_multiplicity(v, i) for i in range(v.algebra.n // 2))


def is_flat(v: Rep) -> bool:
    """No simple direct summands."""
    return not (has_minus_simple_summand(v) or has_plus_simple_summand(v))


def phi_inverse(a: Algebra, v: Rep) -> Rep:
    if has_minus_simple_summand(v):
        raise ValueError("V has a direct summand S-_j; its presentation would not be minimal")
    return cokernel_of(gamma_to_presentation(a, v))[0]


def _cover_kernels(cover) -> list[np.ndarray]:
    p = cover.proj.p
    return [
        la.kernel_basis(b[:, cover.mult[j] :], p) for j, b in enumerate(cover.proj.blocks)
    ]


def phi_mor(a: Algebra, f: Morphism, source: Rep | None = None, target: Rep | None = None) -> Morphism:
    """A representative of ``Phi(f)``; ``source``/``target`` default to ``Phi`` of the ends."""
    p = a.p
    m, n = f.source, f.target
    cm, cn = projective_cover(m), projective_cover(n)
    images = [la.matmul(f.blocks[v], cm.tops[v], p) for v in range(a.n)]
    lifts = lift_generators(cn, images)
    plus = [u[: cn.mult[v], :] for v, u in enumerate(lifts)]
    km, kn = _cover_kernels(cm), _cover_kernels(cn)
    minus = []
    for j in range(a.n):
        # on rad P(j) the lift acts blockwise through the top parts
        rad_map = block_diag([plus[a.arrows[k].source] for k in a.in_arrows[j]])
        moved = la.matmul(rad_map, km[j], p)
        x = la.solve_right(kn[j], moved, p)
        if x is None:
            raise ArithmeticError("lift does not preserve the kernels")
        minus.append(x)
    source = source if source is not None else phi(a, m)
    target = target if target is not None else phi(a, n)
    return Morphism(source, target, tuple(plus + minus))


@dataclass(frozen=True)
class StableHomReport:
    dimHom: int
    dimProjFactoring: int

    @property
    def dimStable(self) -> int:
        return self.dimHom - self.dimProjFactoring


def stable_hom_dim(a: Algebra, m: Rep, n: Rep) -> StableHomReport:
    """Maps factoring through projectives are exactly those through the cover of ``n``."""
    p = a.p
    total = hom_dim(m, n)
    cover = projective_cover(n)
    through = [(cover.proj @ g).vector() for g in hom_basis(m, cover.module)]
    if not through or not total:
        return StableHomReport(total, 0)
    return StableHomReport(total, la.rank(np.array(through), p))


def flat_hom_dim(v: Rep, w: Rep) -> int:
    """``dim Hom(V, W)`` modulo maps factoring through semisimple modules.

    With ``J^2 = 0`` such maps are exactly those with image in ``soc W``.
    """
    soc = parts(w).soc
    return hom_dim(v, w) - hom_dim(v, soc)


def semisimple_factoring_dim(v: Rep, w: Rep) -> int:
    return hom_dim(v, parts(w).soc)


def gamma_star(a: Algebra) -> Algebra:
    """``Gamma(A^op)`` with its plus vertices renamed ``i_-`` and minus vertices ``i_+``.

    Indexed like ``Gamma(A)``: ``i_+`` is ``i`` and ``j_-`` is ``n + j``; the
    arrow ``a: i -> j`` of ``A`` gives ``a: j_- -> i_+``.
    """
    n = a.n
    labels = tuple(f"{i + 1}_+" for i in range(n)) + tuple(f"{i + 1}_-" for i in range(n))
    arrows = tuple(Arrow(ar.name, n + ar.target, ar.source) for ar in a.arrows)
    return Algebra(Quiver(2 * n, arrows, labels), a.p)


def phi_star(a: Algebra, m: Rep) -> Rep:
    """``D Phi_{A^op} D``, re-indexed over :func:`gamma_star`."""
    n = a.n
    w = dualize(phi(a.opposite, dualize(m)))
    dims = w.dims[n:] + w.dims[:n]
    return Rep(gamma_star(a), dims, tuple(f.copy() for f in w.maps))


__all__ = [
    "StableHomReport",
    "flat_hom_dim",
    "gamma_star",
    "gamma_to_presentation",
    "has_minus_simple_summand",
    "has_plus_simple_summand",
    "is_flat",
    "minus_simple_multiplicity",
    "phi",
    "phi_inverse",
    "phi_mor",
    "phi_star",
    "plus_simple_multiplicity",
    "presentation_to_gamma",
    "stable_hom_dim",
]
