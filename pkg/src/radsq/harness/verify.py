"""The invariant suite, run against brute-force universes of ``A`` and ``Gamma(A)``."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

from .. import exactla as la
from ..artheory import RadicalSpaces, ass_simple, tau, tau_inverse, transpose
from ..formats import format_module
from ..quivalg import Algebra, gamma, standard_module
from ..repmod.decompose import is_indecomposable, is_isomorphic, iso_indecomposable
from ..repmod.rep import Rep, direct_sum, dualize
from ..stabfun import flat_hom_dim, is_flat, phi, phi_inverse, phi_star, stable_hom_dim
from .oracle import Universe, enumerate_indecomposables

PhiFn = Callable[[Algebra, Rep], Rep]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    counterexample: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass
class VerifyReport:
    algebra: Algebra
    bound: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def text(self) -> str:
        out = []
        for c in self.checks:
            out.append(c.line())
            for ce in c.counterexample:
                out.extend("    " + line for line in ce.rstrip().splitlines())
        return "\n".join(out) + "\n"


class _Fail(Exception):
    def __init__(self, detail: str, *modules: Rep):
        super().__init__(detail)
        self.detail = detail
        self.modules = modules


def corrupted_phi(a: Algebra, m: Rep) -> Rep:
    """``Phi`` with its arrow blocks transposed; used to show the suite can fail.

    The multiplicity spaces at ``i+`` and ``i-`` are swapped; a loop keeps its
    transposed block, every other arrow gets the zero map.
    """
    v = phi(a, m)
    n = a.n
    dims = v.dims[n:] + v.dims[:n]
    maps = []
    for ar, f in zip(a.arrows, v.maps):
        if ar.source == ar.target:
            maps.append(f.T.copy())
        else:
            maps.append(la.zeros(dims[ar.source], dims[n + ar.target]))
    return Rep(v.algebra, dims, tuple(maps))


def is_projective(m: Rep) -> bool:
    """``M`` projective iff its cover is an isomorphism (no relations)."""
    from ..repmod.presentation import min_proj_presentation

    return not any(min_proj_presentation(m).minus)


def is_injective(m: Rep) -> bool:
    return is_projective(dualize(m))


class Suite:
    """Shared state for the checks of one algebra."""

    def __init__(self, a: Algebra, bound: int, seed: int, phi_fn: PhiFn | None = None,
                 ua: Universe | None = None, ug: Universe | None = None):
        self.a = a
        self.g = gamma(a)
        self.bound = bound
        self.seed = seed
        self.phi = phi_fn or phi
        self.ua = ua or enumerate_indecomposables(a, bound, seed)
        self.ug = ug or enumerate_indecomposables(self.g, bound, seed)
        self.proj = [is_projective(m) for m in self.ua]
        self.inj = [is_injective(m) for m in self.ua]
        self.nonproj = [m for m, pr in zip(self.ua, self.proj) if not pr]

    def phi_image(self, m: Rep) -> Rep:
        return self.phi(self.a, m)

    # -- checks ------------------------------------------------------------
    def universe_completeness(self):
        if self.bound < 2:
            return "bound too small to compare"
        smaller = enumerate_indecomposables(self.a, self.bound - 1, self.seed)
        restricted = self.ua.restrict(self.bound - 1)
        if len(smaller) != len(restricted):
            raise _Fail(f"{len(smaller)} classes at bound {self.bound - 1}, {len(restricted)} after filtering")
        for m in smaller:
            if restricted.find(m) is None:
                raise _Fail("class missing after filtering", m)
        return f"{len(self.ua)} classes for A, {len(self.ug)} for Gamma"

    def gamma_simples(self):
        n = self.a.n
        for i in range(n):
            s_plus = standard_module(self.g, "simple", i)
            if iso_indecomposable(s_plus, standard_module(self.g, "projective", i)) is None:
                raise _Fail(f"S+_{i + 1} is not projective", s_plus)
            s_minus = standard_module(self.g, "simple", n + i)
            if iso_indecomposable(s_minus, standard_module(self.g, "injective", n + i)) is None:
                raise _Fail(f"S-_{i + 1} is not injective", s_minus)
        return ""

    def phi_bijection(self):
        lo = {}
        for m in self.nonproj:
            v = self.phi_image(m)
            if v.total_dim > self.bound:
                continue
            if not is_indecomposable(v) or not is_flat(v):
                raise _Fail("Phi(M) is not a flat indecomposable", m, v)
            k = self.ug.find(v)
            if k is None:
                raise _Fail("Phi(M) missing from the Gamma universe", m, v)
            if k in lo:
                raise _Fail("two non-isomorphic modules with isomorphic images", lo[k], m)
            lo[k] = m
        hits = 0
        for k, v in enumerate(self.ug):
            if not is_flat(v):
                continue
            m = phi_inverse(self.a, v)
            if m.total_dim > self.bound:
                continue
            hits += 1
            if k not in lo:
                raise _Fail("flat Gamma-module not hit by Phi", v, m)
        if hits != len(lo):
            raise _Fail(f"{len(lo)} modules vs {hits} flat classes")
        return f"{len(lo)} classes matched"

    def phi_roundtrip(self):
        for m in self.nonproj:
            back = phi_inverse(self.a, self.phi_image(m))
            if is_isomorphic(back, m, self.seed) is None:
                raise _Fail("Phi^-1 Phi M is not M", m, back)
        for v in self.ug:
            if is_flat(v):
                w = self.phi_image(phi_inverse(self.a, v))
                if is_isomorphic(w, v, self.seed) is None:
                    raise _Fail("Phi Phi^-1 V is not V", v, w)
        return ""

    def phi_simple_summands(self):
        for m, pr in zip(self.ua, self.proj):
            v = self.phi_image(m)
            if is_flat(v) == pr:
                raise _Fail("flatness of Phi(M) disagrees with projectivity of M", m, v)
        return ""

    def phi_additive(self):
        mods = self.ua.modules[:6]
        for m, n in itertools.combinations_with_replacement(mods, 2):
            lhs = self.phi_image(direct_sum([m, n]))
            rhs = direct_sum([self.phi_image(m), self.phi_image(n)])
            if is_isomorphic(lhs, rhs, self.seed) is None:
                raise _Fail("Phi(M + N) differs from Phi(M) + Phi(N)", m, n)
        return ""

    def stable_equals_flat(self):
        count = 0
        images = [self.phi_image(m) for m in self.ua]
        for (m, v), (n, w) in itertools.product(zip(self.ua, images), repeat=2):
            st = stable_hom_dim(self.a, m, n).dimStable
            fl = flat_hom_dim(v, w)
            if st != fl:
                raise _Fail(f"stable dim {st} but flat dim {fl}", m, n)
            count += 1
        return f"{count} pairs"

    def translate_consistency(self):
        for j in range(self.a.n):
            u = standard_module(self.a, "simple", j)
            if self.a.in_arrows[j]:
                seq = ass_simple(self.a, j, "fromSimple")
                if not seq.is_exact() or seq.is_split():
                    raise _Fail(f"sequence starting at U_{j + 1} is not almost split")
                if is_isomorphic(seq.right, tau_inverse(u), self.seed) is None:
                    raise _Fail(f"right end of the sequence at U_{j + 1} is not tau^-1 U_{j + 1}", seq.right)
                if is_isomorphic(tau(seq.right), u, self.seed) is None:
                    raise _Fail(f"tau of tU_{j + 1} is not U_{j + 1}", seq.right)
            if self.a.out_arrows[j]:
                seq = ass_simple(self.a, j, "toSimple")
                if not seq.is_exact() or seq.is_split():
                    raise _Fail(f"sequence ending at U_{j + 1} is not almost split")
                if is_isomorphic(seq.left, tau(u), self.seed) is None:
                    raise _Fail(f"left end of the sequence at U_{j + 1} is not tau U_{j + 1}", seq.left)
        n = 0
        for m, pr, inj in zip(self.ua, self.proj, self.inj):
            if pr or inj:
                continue
            n += 1
            if is_isomorphic(tau(tau_inverse(m)), m, self.seed) is None:
                raise _Fail("tau tau^-1 M is not M", m)
            if is_isomorphic(tau_inverse(tau(m)), m, self.seed) is None:
                raise _Fail("tau^-1 tau M is not M", m)
        return f"{n} modules"

    def transpose_involution(self):
        for m in self.nonproj:
            if is_isomorphic(transpose(transpose(m)), m, self.seed) is None:
                raise _Fail("Tr Tr M is not M", m)
        return ""

    def _spaces(self) -> RadicalSpaces:
        if not hasattr(self, "_rs"):
            self._rs = RadicalSpaces(self.ua.modules)
        return self._rs

    def _projective_members(self) -> dict[int, Rep]:
        out = {}
        for i in range(self.a.n):
            k = self.ua.find(standard_module(self.a, "projective", i))
            if k is not None:
                out[i] = self.ua.modules[k]
        return out

    def irreducibles_from_simples(self):
        # the left almost split map out of U_j ends in the P_i with h_ij > 0;
        # Rad^2 is only exact when all of them are in the universe
        rs = self._spaces()
        projs = self._projective_members()
        checked = 0
        for j in range(self.a.n):
            needed = {self.a.arrows[k].source for k in self.a.in_arrows[j]}
            if not needed <= projs.keys():
                continue
            checked += 1
            u = self.ua.modules[self.ua.find(standard_module(self.a, "simple", j))]
            for i, pm in projs.items():
                d = rs.irr_dim(u, pm)
                if d != self.a.arrow_count(i, j):
                    raise _Fail(f"dim Irr(U_{j + 1}, P_{i + 1}) = {d}, expected {self.a.arrow_count(i, j)}")
            for x, pr in zip(self.ua, self.proj):
                if not pr and rs.irr_dim(u, x):
                    raise _Fail(f"irreducible map from U_{j + 1} to a non-projective", x)
        return f"{checked} of {self.a.n} simples checked"

    def no_irreducibles_between_projectives(self):
        rs = self._spaces()
        projs = self._projective_members()
        for (i, p1), (k, p2) in itertools.product(projs.items(), repeat=2):
            if p1.total_dim > 1 and rs.irr_dim(p1, p2):
                raise _Fail(f"irreducible map P_{i + 1} -> P_{k + 1}")
        return ""

    def irreducibles_from_projectives(self):
        # checked only for P_i whose candidate targets tU_j all fit in the universe
        rs = self._spaces()
        projs = self._projective_members()
        checked = 0
        for i, pm in projs.items():
            if pm.total_dim == 1:
                continue
            targets = [tau_inverse(standard_module(self.a, "simple", j))
                       for j in range(self.a.n) if self.a.arrow_count(i, j)]
            if any(t.total_dim > self.bound for t in targets):
                continue
            checked += 1
            for x in self.ua:
                if rs.irr_dim(pm, x) and not any(iso_indecomposable(t, x) is not None for t in targets):
                    raise _Fail(f"irreducible map out of P_{i + 1} to a module that is no tU_j", x)
        return f"{checked} projectives checked"

    def irreducibility_transfer(self):
        rs = self._spaces()
        images = [self.phi_image(m) for m in self.nonproj]
        simples = [standard_module(self.g, "simple", v) for v in range(self.g.n)]
        rg = RadicalSpaces(images + simples)
        count = 0
        for (m, v), (n, w) in itertools.product(zip(self.nonproj, images), repeat=2):
            d1, d2 = rs.irr_dim(m, n), rg.irr_dim(v, w)
            if d1 != d2:
                raise _Fail(f"dim Irr(M, N) = {d1} but dim Irr(Phi M, Phi N) = {d2}", m, n)
            count += 1
        return f"{count} pairs"

    def phi_star_flat(self):
        for m, inj in zip(self.ua, self.inj):
            v = phi_star(self.a, m)
            if is_flat(v) == inj:
                raise _Fail("flatness of Phi*(M) disagrees with injectivity of M", m)
        return ""


CHECKS = [
    ("universe-completeness", Suite.universe_completeness),
    ("gamma-simples", Suite.gamma_simples),
    ("phi-simple-summands", Suite.phi_simple_summands),
    ("phi-bijection", Suite.phi_bijection),
    ("phi-roundtrip", Suite.phi_roundtrip),
    ("phi-additive", Suite.phi_additive),
    ("stable-equals-flat", Suite.stable_equals_flat),
    ("transpose-involution", Suite.transpose_involution),
    ("translate-consistency", Suite.translate_consistency),
    ("irr-from-simples", Suite.irreducibles_from_simples),
    ("irr-between-projectives", Suite.no_irreducibles_between_projectives),
    ("irr-from-projectives", Suite.irreducibles_from_projectives),
    ("irr-transfer", Suite.irreducibility_transfer),
    ("phi-star-flat", Suite.phi_star_flat),
]


def verify(a: Algebra, bound: int = 4, seed: int = 0, phi_fn: PhiFn | None = None,
           only: list[str] | None = None, suite: Suite | None = None) -> VerifyReport:
    """Run the suite; ``phi_fn`` replaces ``Phi`` everywhere (mutation testing)."""
    suite = suite or Suite(a, bound, seed, phi_fn)
    report = VerifyReport(a, bound)
    for name, fn in CHECKS:
        if only is not None and name not in only:
            continue
        try:
            detail = fn(suite)
            report.checks.append(CheckResult(name, True, detail or ""))
        except _Fail as e:
            report.checks.append(CheckResult(name, False, e.detail, [format_module(m) for m in e.modules]))
        except (ValueError, ArithmeticError) as e:
            report.checks.append(CheckResult(name, False, f"{type(e).__name__}: {e}"))
    return report
