"""Krull-Schmidt decomposition and isomorphism testing.

Everything works inside ``E = End(M)`` written in coordinates of a fixed
basis, with structure constants ``b_i b_j = sum_k c[i, j, k] b_k``.

Locality of ``E`` is certified without search: if ``E`` is local then
``E/J`` is a finite field, so the ideal ``C`` generated by commutators lies
in ``J``; on the commutative quotient ``E/C`` the Frobenius map is linear,
which gives its nilradical and, through the Frobenius fixed space, the
number of field factors of the semisimple quotient.  ``E`` is local iff the
resulting ideal ``K`` is nilpotent and ``E/K`` is a field; then ``K = J``.

Splittings use the Fitting decomposition of ``g(x)`` for a random ``x``
whose minimal polynomial has a proper coprime factor ``g``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from sympy import ZZ
from sympy.polys.galoistools import gf_factor

from .. import exactla as la
from .rep import (
    Morphism,
    Rep,
    direct_sum,
    encode,
    hom_basis,
    hom_matrix,
    row_morphism,
    submodule,
)

RANDOM_TRIES = 64
EXHAUSTIVE_CAP = 1 << 20


class EndAlgebra:
    """``End(M)`` as an abstract algebra in the coordinates of a k-basis."""

    def __init__(self, m: Rep):
        self.module = m
        self.p = m.p
        self.rows = hom_matrix(m, m)
        self.basis = [Morphism.from_vector(m, m, r) for r in self.rows]
        self.r = len(self.basis)
        self.mats = [f.total_matrix() for f in self.basis]

    @cached_property
    def _coord_solver(self):
        # pivots of the basis rows give an invertible r x r minor
        _, _, piv = la.rref(self.rows, self.p)
        minor = self.rows[:, piv]
        return piv, la.inverse(minor, self.p)

    def coords(self, f: Morphism) -> np.ndarray:
        piv, inv = self._coord_solver
        v = f.vector()[piv]
        return la.matmul(v.reshape(1, -1), inv, self.p).reshape(-1)

    def element(self, c: np.ndarray) -> Morphism:
        vec = la.matmul(np.asarray(c, dtype=np.int64).reshape(1, -1), self.rows, self.p).reshape(-1)
        return Morphism.from_vector(self.module, self.module, vec)

    @cached_property
    def structure(self) -> np.ndarray:
        p, r = self.p, self.r
        c = np.zeros((r, r, r), dtype=np.int64)
        for i, j in itertools.product(range(r), repeat=2):
            c[i, j] = self.coords(self.basis[i] @ self.basis[j])
        return c

    @cached_property
    def one(self) -> np.ndarray:
        return self.coords(Morphism.identity(self.module))

    def mul(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        outer = np.outer(u, v) % self.p
        return np.tensordot(outer, self.structure, axes=([0, 1], [0, 1])) % self.p

    def power(self, u: np.ndarray, k: int) -> np.ndarray:
        result = self.one.copy()
        base = u.copy()
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def left_matrix(self, i: int) -> np.ndarray:
        """``v -> b_i v`` acting on row vectors from the right."""
        return self.structure[i]

    def right_matrix(self, j: int) -> np.ndarray:
        """``v -> v b_j`` acting on row vectors from the right."""
        return self.structure[:, j, :]

    def ideal_closure(self, gens: np.ndarray) -> np.ndarray:
        """Rows spanning the two-sided ideal generated by ``gens``."""
        p, r = self.p, self.r
        basis = _row_basis(gens, p, r)
        while True:
            new = [basis]
            for i in range(r):
                new.append(la.matmul(basis, self.right_matrix(i), p))
                # b_i x: coefficient of b_k is sum_j x_j c[i, j, k]
                new.append(la.matmul(basis, self.left_matrix(i), p))
            grown = _row_basis(np.concatenate(new, axis=0), p, r)
            if grown.shape[0] == basis.shape[0]:
                return basis
            basis = grown

    def ideal_product(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if a.shape[0] == 0 or b.shape[0] == 0:
            return np.zeros((0, self.r), dtype=np.int64)
        prods = [self.mul(x, y) for x in a for y in b]
        return _row_basis(np.array(prods), self.p, self.r)

    @cached_property
    def radical_certificate(self) -> tuple[bool, np.ndarray]:
        """``(is_local, K)``; when local, rows of ``K`` span ``rad End(M)``."""
        p, r = self.p, self.r
        if r == 0:
            return False, np.zeros((0, 0), dtype=np.int64)
        comm = [
            (self.structure[i, j] - self.structure[j, i]) % p
            for i in range(r)
            for j in range(i + 1, r)
        ]
        c_ideal = self.ideal_closure(np.array(comm).reshape(-1, r)) if comm else np.zeros((0, r), dtype=np.int64)
        if c_ideal.shape[0] == r:
            return False, c_ideal
        # quotient R = E / C with section = unit vectors at complement coords
        comp = la.complement_indices(c_ideal.T, p)
        proj = _quotient_map(c_ideal, r, comp, p)
        frob = self._frobenius_matrix(comp, proj)
        rq = len(comp)
        steps = 1
        while p**steps < rq:
            steps += 1
        fn = la.eye(rq)
        for _ in range(steps):
            fn = la.matmul(fn, frob, p)
        nil = la.kernel_basis(fn.T, p).T  # rows v of R with v F^steps = 0
        lifted = np.zeros((nil.shape[0], r), dtype=np.int64)
        lifted[:, comp] = nil
        k_ideal = _row_basis(np.concatenate([c_ideal, lifted], axis=0), p, r)
        d = r - k_ideal.shape[0]
        # Frobenius fixed space on E/K counts the field factors
        comp2 = la.complement_indices(k_ideal.T, p)
        proj2 = _quotient_map(k_ideal, r, comp2, p)
        frob2 = self._frobenius_matrix(comp2, proj2)
        fixed = d - la.rank((frob2 - la.eye(d)) % p, p)
        if fixed != 1:
            return False, k_ideal
        power = k_ideal
        while power.shape[0]:
            nxt = self.ideal_product(power, k_ideal)
            if nxt.shape[0] == power.shape[0]:
                return False, k_ideal
            power = nxt
        return True, k_ideal

    def _frobenius_matrix(self, comp: list[int], proj: np.ndarray) -> np.ndarray:
        rows = []
        for k in comp:
            e = np.zeros(self.r, dtype=np.int64)
            e[k] = 1
            rows.append(la.matmul(self.power(e, self.p).reshape(1, -1), proj, self.p).reshape(-1))
        return np.array(rows, dtype=np.int64).reshape(len(comp), len(comp))

    @property
    def is_local(self) -> bool:
        return self.radical_certificate[0]

    def radical(self) -> list[Morphism]:
        local, k = self.radical_certificate
        if not local:
            raise ValueError("End(M) is not local")
        return [self.element(row) for row in k]

    def minimal_polynomial(self, u: np.ndarray) -> list[int]:
        """Monic coefficients, highest degree first."""
        p = self.p
        powers = [self.one]
        while True:
            nxt = self.mul(powers[-1], u)
            a = np.array(powers).T
            sol = la.solve_right(a, nxt.reshape(-1, 1), p)
            if sol is not None:
                # x^d = sum sol_k x^k
                coeffs = [1] + [int((-sol[k, 0]) % p) for k in range(len(powers) - 1, -1, -1)]
                return coeffs
            powers.append(nxt)


def _row_basis(rows: np.ndarray, p: int, r: int) -> np.ndarray:
    if rows.size == 0:
        return np.zeros((0, r), dtype=np.int64)
    red, rk, _ = la.rref(rows, p)
    return red[:rk].copy()


def _quotient_map(sub: np.ndarray, r: int, comp: list[int], p: int) -> np.ndarray:
    """Matrix (r x len(comp)) sending a row vector to its class in ``F^r / sub``."""
    b = np.concatenate([sub, la.eye(r)[comp]], axis=0)
    binv = la.inverse(b, p)
    return binv[:, sub.shape[0] :]


def _poly_eval(end: EndAlgebra, coeffs: list[int], u: np.ndarray) -> np.ndarray:
    acc = np.zeros(end.r, dtype=np.int64)
    for c in coeffs:
        acc = (end.mul(acc, u) + c * end.one) % end.p
    return acc


def _fitting_split(m: Rep, y: Morphism) -> tuple[list[np.ndarray], list[np.ndarray]] | None:
    """``(ker y^N, im y^N)`` bases when both are nonzero."""
    p = m.p
    n = m.total_dim
    blocks = list(y.blocks)
    k = 1
    while k < n:
        blocks = [la.matmul(b, b, p) for b in blocks]
        k *= 2
    ker = [la.kernel_basis(b, p) for b in blocks]
    img = [la.column_space(b, p) for b in blocks]
    if sum(b.shape[1] for b in ker) in (0, n):
        return None
    return ker, img


def find_splitting(m: Rep, rng: np.random.Generator, end: EndAlgebra | None = None):
    """Two complementary submodule bases, or ``None`` if ``m`` is indecomposable."""
    if m.total_dim == 0:
        return None
    end = end or EndAlgebra(m)
    if end.is_local:
        return None
    p = m.p
    for _ in range(RANDOM_TRIES):
        u = rng.integers(0, p, size=end.r)
        split = _split_by_element(m, end, u)
        if split is not None:
            return split
    if p**end.r > EXHAUSTIVE_CAP:
        raise RuntimeError(f"no splitting found and End(M) too large (p^{end.r}) for exhaustive search")
    for c in itertools.product(range(p), repeat=end.r):
        u = np.array(c, dtype=np.int64)
        if np.array_equal(end.mul(u, u), u) and u.any() and not np.array_equal(u, end.one):
            e = end.element(u)
            split = _fitting_split(m, e)
            if split is not None:
                return split
    raise RuntimeError("End(M) certified non-local but no idempotent found")


def _split_by_element(m: Rep, end: EndAlgebra, u: np.ndarray):
    p = m.p
    mp = end.minimal_polynomial(u)
    _, factors = gf_factor([int(c) for c in mp], p, ZZ)
    if len(factors) < 2:
        return None
    g = [int(c) for c in factors[0][0]]
    y = end.element(_poly_eval(end, g, u))
    return _fitting_split(m, y)


def indecomposable_summands(m: Rep, seed: int = 0) -> list[tuple[Rep, Morphism]]:
    """Indecomposable summands with their inclusions into ``m`` (no grouping)."""
    rng = np.random.default_rng(seed)
    out: list[tuple[Rep, Morphism]] = []
    stack = [(m, Morphism.identity(m))]
    while stack:
        x, incl = stack.pop()
        if x.total_dim == 0:
            continue
        split = find_splitting(x, rng)
        if split is None:
            out.append((x, incl))
            continue
        for bases in split:
            sub, j = submodule(x, bases)
            stack.append((sub, incl @ j))
    return out


def is_indecomposable(m: Rep) -> bool:
    return m.total_dim > 0 and EndAlgebra(m).is_local


def iso_indecomposable(x: Rep, y: Rep) -> Morphism | None:
    """An isomorphism between indecomposables, or ``None``.

    For local ``End(x)``: ``x`` is iso to ``y`` iff some composite ``g f``
    of basis elements is a unit, and then ``f`` is an isomorphism.
    """
    if x.dims != y.dims or x.algebra != y.algebra:
        return None
    fs = hom_basis(x, y)
    for f in fs:
        if f.is_iso():
            return f
    if not fs:
        return None
    gs = hom_basis(y, x)
    for f in fs:
        for g in gs:
            if not (g @ f).is_nilpotent():
                return f
    return None


def sort_key(m: Rep) -> tuple:
    return (m.total_dim, m.dims, encode(m))


@dataclass(frozen=True, eq=False)
class Decomposition:
    summands: list[tuple[Rep, int]]
    iso: Morphism  # from the direct sum of summands (in order, with repeats) to the module

    def expanded(self) -> list[Rep]:
        return [x for x, k in self.summands for _ in range(k)]


def decompose(m: Rep, seed: int = 0) -> Decomposition:
    raw = indecomposable_summands(m, seed)
    groups: list[list] = []  # [rep, [inclusions]]
    for x, incl in raw:
        for grp in groups:
            g = iso_indecomposable(grp[0], x)
            if g is not None:
                grp[1].append(incl @ g)
                break
        else:
            groups.append([x, [incl]])
    groups.sort(key=lambda grp: sort_key(grp[0]))
    summands = [(grp[0], len(grp[1])) for grp in groups]
    expanded = [grp[0] for grp in groups for _ in grp[1]]
    total = direct_sum(expanded, m.algebra)
    iso = row_morphism([j for grp in groups for j in grp[1]], total, m)
    return Decomposition(summands, iso)


def is_isomorphic(m: Rep, n: Rep, seed: int = 0) -> Morphism | None:
    """An isomorphism ``m -> n`` or ``None``."""
    if m.algebra != n.algebra or m.dims != n.dims:
        return None
    if m.total_dim == 0:
        return Morphism.identity(m) if n is m else Morphism(m, n, tuple(la.zeros(0, 0) for _ in m.dims))
    for f in hom_basis(m, n):
        if f.is_iso():
            return f
    dm, dn = decompose(m, seed), decompose(n, seed)
    if sorted(k for _, k in dm.summands) != sorted(k for _, k in dn.summands):
        return None
    used: set[int] = set()
    pieces: list[tuple[int, Morphism]] = []  # (index into dn.summands, iso)
    for x, k in dm.summands:
        for idx, (y, l) in enumerate(dn.summands):
            if idx in used or l != k:
                continue
            g = iso_indecomposable(x, y)
            if g is not None:
                used.add(idx)
                pieces.append((idx, g))
                break
        else:
            return None
    # assemble sum_M -> sum_N following dn's order
    src = direct_sum(dm.expanded(), m.algebra)
    tgt = direct_sum(dn.expanded(), m.algebra)
    offsets_n = []
    off = [0] * m.algebra.n
    for y, l in dn.summands:
        offsets_n.append(list(off))
        for i in range(m.algebra.n):
            off[i] += y.dims[i] * l
    blocks = [la.zeros(tgt.dims[i], src.dims[i]) for i in range(m.algebra.n)]
    off_m = [0] * m.algebra.n
    for (x, k), (idx, g) in zip(dm.summands, pieces):
        for rep in range(k):
            for i in range(m.algebra.n):
                d = x.dims[i]
                r0 = offsets_n[idx][i] + rep * d
                blocks[i][r0 : r0 + d, off_m[i] : off_m[i] + d] = g.blocks[i]
                off_m[i] += d
    mid = Morphism(src, tgt, tuple(blocks))
    return dn.iso @ mid @ dm.iso.inverse()
