"""Brute-force enumeration of indecomposable modules up to a total dimension.

Every module over ``kQ/J^2`` is isomorphic to one in *adapted form*: at
each vertex ``M_i = T_i (+) R_i`` with ``R = rad M`` and the arrow ``a: s -> t``
acting by a block ``F_a: T_s -> R_t`` only.  Non-simple indecomposables
satisfy two conditions:

* the blocks entering ``t`` span ``R_t`` (otherwise ``rad M != R``);
* the blocks leaving ``s`` are jointly injective on ``T_s`` (otherwise a
  top vector spans a simple summand).

Row operations at ``R_t`` let the stacked block entering ``t`` be taken in
reduced row echelon form, which is what the enumeration runs over.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .. import exactla as la
from ..quivalg import Algebra, standard_module
from ..repmod.decompose import EndAlgebra, iso_indecomposable, sort_key
from ..repmod.rep import Rep

EXHAUSTIVE_GUARD = 1 << 24
RANDOM_SAMPLES = 4096


class Infeasible(RuntimeError):
    pass


@dataclass
class Universe:
    algebra: Algebra
    bound: int
    modules: list[Rep] = field(default_factory=list)
    exhaustive: bool = True

    @property
    def p(self) -> int:
        return self.algebra.p

    def __len__(self) -> int:
        return len(self.modules)

    def __iter__(self):
        return iter(self.modules)

    def restrict(self, bound: int) -> Universe:
        return Universe(self.algebra, bound, [m for m in self.modules if m.total_dim <= bound], self.exhaustive)

    def find(self, m: Rep) -> int | None:
        """Index of the member isomorphic to the indecomposable ``m``."""
        for k, x in enumerate(self.modules):
            if x.dims == m.dims and iso_indecomposable(x, m) is not None:
                return k
        return None


def thread_count() -> int:
    env = os.environ.get("RADSQ_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def rref_full_rank(rows: int, cols: int, p: int) -> Iterator[np.ndarray]:
    """All ``rows x cols`` matrices of rank ``rows`` in reduced row echelon form."""
    if rows == 0:
        yield la.zeros(0, cols)
        return
    for piv in itertools.combinations(range(cols), rows):
        free = [(r, c) for r in range(rows) for c in range(piv[r] + 1, cols) if c not in piv]
        for vals in itertools.product(range(p), repeat=len(free)):
            m = la.zeros(rows, cols)
            for r, c in enumerate(piv):
                m[r, c] = 1
            for (r, c), v in zip(free, vals):
                m[r, c] = v
            yield m


def count_rref_full_rank(rows: int, cols: int, p: int) -> int:
    """Gaussian binomial: the number of ``rows``-dimensional subspaces of ``F_p^cols``."""
    if rows > cols:
        return 0
    num = den = 1
    for k in range(rows):
        num *= p ** (cols - k) - 1
        den *= p ** (k + 1) - 1
    return num // den


def _compositions(total: int, k: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, k - 1):
            yield (first,) + rest


def _splits(n: int, total: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Pairs ``(t, r)`` of vectors with ``sum t + sum r = total``, both nonzero."""
    for parts in _compositions(total, 2 * n):
        t, r = parts[:n], parts[n:]
        if sum(t) and sum(r):
            yield t, r


def _assemble(a: Algebra, t, r, stacks: list[np.ndarray]) -> Rep | None:
    """Module from the per-vertex stacked blocks; ``None`` if it has a simple top summand."""
    p = a.p
    dims = tuple(x + y for x, y in zip(t, r))
    maps = []
    for k, ar in enumerate(a.arrows):
        s, tg = ar.source, ar.target
        off = sum(t[a.arrows[q].source] for q in a.in_arrows[tg] if q < k)
        f = la.zeros(dims[tg], dims[s])
        f[t[tg] :, : t[s]] = stacks[tg][:, off : off + t[s]]
        maps.append(f)
    for s in range(a.n):
        if not t[s]:
            continue
        outs = [maps[k][t[a.arrows[k].target] :, : t[s]] for k in a.out_arrows[s]]
        if not outs or la.rank(np.concatenate(outs, axis=0), p) < t[s]:
            return None
    return Rep(a, dims, tuple(maps))


def _candidates(a: Algebra, t, r, mode: str, rng: np.random.Generator) -> tuple[Iterator, bool]:
    p = a.p
    cols = [sum(t[a.arrows[k].source] for k in a.in_arrows[v]) for v in range(a.n)]
    count = 1
    for v in range(a.n):
        count *= count_rref_full_rank(r[v], cols[v], p)
    if count == 0:
        return iter(()), True
    if count <= EXHAUSTIVE_GUARD:
        per_vertex = [list(rref_full_rank(r[v], cols[v], p)) for v in range(a.n)]
        return itertools.product(*per_vertex), True
    if mode == "exhaustive":
        raise Infeasible(f"split t={t}, r={r} has {count} candidates (guard {EXHAUSTIVE_GUARD})")

    def sample():
        for _ in range(RANDOM_SAMPLES):
            stacks = []
            for v in range(a.n):
                m = rng.integers(0, p, size=(r[v], cols[v]))
                red, rk, _ = la.rref(m, p)
                if rk < r[v]:
                    break
                stacks.append(red[: r[v]])
            else:
                yield tuple(stacks)

    return sample(), False


def _bucket_key(m: Rep) -> tuple:
    p = m.p
    return (m.dims, tuple(la.rank(f, p) for f in m.maps))


def _enumerate_dim(a: Algebra, total: int, mode: str, seed: int) -> tuple[list[Rep], bool]:
    rng = np.random.default_rng([seed, total])
    found: dict[tuple, list[Rep]] = {}
    exhaustive = True
    for t, r in _splits(a.n, total):
        cands, exact = _candidates(a, t, r, mode, rng)
        exhaustive &= exact
        for stacks in cands:
            m = _assemble(a, t, r, list(stacks))
            if m is None:
                continue
            bucket = found.setdefault(_bucket_key(m), [])
            if any(iso_indecomposable(x, m) is not None for x in bucket):
                continue
            if EndAlgebra(m).is_local:
                bucket.append(m)
    out = [m for bucket in found.values() for m in bucket]
    return out, exhaustive


def _job(args):
    return _enumerate_dim(*args)


def enumerate_indecomposables(a: Algebra, bound: int, seed: int = 0, mode: str = "auto") -> Universe:
    """All indecomposables of total dimension ``<= bound``, one per iso class.

    ``mode`` is ``"auto"`` (random sampling beyond the guard, flagged as
    non-exhaustive) or ``"exhaustive"`` (raise :class:`Infeasible` instead).
    """
    if mode not in ("auto", "exhaustive"):
        raise ValueError(f"unknown mode {mode!r}")
    modules = [standard_module(a, "simple", i) for i in range(a.n)] if bound >= 1 else []
    jobs = [(a, d, mode, seed) for d in range(2, bound + 1)]
    workers = min(thread_count(), len(jobs))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_job, jobs))
    else:
        results = [_job(j) for j in jobs]
    exhaustive = True
    for mods, exact in results:
        modules.extend(mods)
        exhaustive &= exact
    modules.sort(key=sort_key)
    return Universe(a, bound, modules, exhaustive)
