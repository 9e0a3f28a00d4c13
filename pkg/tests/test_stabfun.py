import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import algebra, universe
from radsq import exactla as la
from radsq.artheory import tau_inverse
from radsq.quivalg import gamma, standard_module
from radsq.repmod import direct_sum
from radsq.repmod.decompose import decompose, is_isomorphic
from radsq.repmod.rep import hom_basis, hom_dim
from radsq.stabfun import (
    flat_hom_dim, is_flat, phi, phi_inverse, phi_mor, phi_star, stable_hom_dim,
)
from radsq.harness.verify import is_projective

SMALL = ["ex1", "ex2", "random0", "random20"]


def factoring_dim(m, n, middles):
    """dim of the span of all g f with f: m -> X, g: X -> n, X in ``middles``."""
    vecs = [(g @ f).vector() for x in middles for f in hom_basis(m, x) for g in hom_basis(x, n)]
    if not vecs:
        return 0
    return la.rank(np.array(vecs), m.p)


def test_example1_phi_values(ex1):
    u = standard_module(ex1, "simple", 0)
    v = phi(ex1, u)
    assert v.dims == (1, 2)
    assert la.format_matrix(v.map("x")) == "1 0" and la.format_matrix(v.map("y")) == "0 1"
    assert phi(ex1, standard_module(ex1, "projective", 0)).dims == (1, 0)
    assert phi_star(ex1, standard_module(ex1, "injective", 0)).dims == (0, 1)
    assert phi_star(ex1, u).dims == (2, 1)


@pytest.mark.parametrize("name", SMALL)
def test_standard_images(name):
    a = algebra(name)
    g = gamma(a)
    n = a.n
    for i in range(n):
        # Phi(U_i) is the injective at i+, Phi(P_i) the simple at i+
        assert is_isomorphic(phi(a, standard_module(a, "simple", i)), standard_module(g, "injective", i))
        assert is_isomorphic(phi(a, standard_module(a, "projective", i)), standard_module(g, "simple", i))
        pm = standard_module(g, "projective", n + i)
        if a.in_arrows[i]:
            assert is_isomorphic(phi_inverse(a, pm), tau_inverse(standard_module(a, "simple", i)))
        with pytest.raises(ValueError):
            phi_inverse(a, standard_module(g, "simple", n + i))


@pytest.mark.parametrize("name", SMALL)
def test_roundtrip_on_universe(name):
    a = algebra(name)
    for m in universe(name):
        v = phi(a, m)
        if is_projective(m):
            continue
        assert is_flat(v)
        assert is_isomorphic(phi_inverse(a, v), m) is not None


@pytest.mark.parametrize("name", ["ex2", "random0"])
def test_flatness_matches_decomposition(name):
    g = list(universe(name, 3, on_gamma=True))
    for x, y in itertools.combinations_with_replacement(g, 2):
        v = direct_sum([x, y])
        has_simple = any(s.total_dim == 1 for s in decompose(v).expanded())
        assert is_flat(v) == (not has_simple)


@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_phi_additive(i, j):
    a = algebra("ex2")
    u = list(universe("ex2"))
    x, y = u[i % len(u)], u[j % len(u)]
    assert is_isomorphic(phi(a, direct_sum([x, y])), direct_sum([phi(a, x), phi(a, y)])) is not None


@pytest.mark.parametrize("name", ["ex1", "ex2"])
def test_stable_hom_against_composition_oracle(name):
    a = algebra(name)
    projs = [standard_module(a, "projective", i) for i in range(a.n)]
    u = list(universe(name))
    for m, n in itertools.product(u, u):
        rep = stable_hom_dim(a, m, n)
        assert rep.dimProjFactoring == factoring_dim(m, n, projs)
        assert rep.dimStable == hom_dim(m, n) - rep.dimProjFactoring


@pytest.mark.parametrize("name", ["ex1", "ex2"])
def test_flat_hom_against_composition_oracle(name):
    a = algebra(name)
    g = gamma(a)
    simples = [standard_module(g, "simple", v) for v in range(g.n)]
    vs = [phi(a, m) for m in universe(name)]
    for v, w in itertools.product(vs, vs):
        assert flat_hom_dim(v, w) == hom_dim(v, w) - factoring_dim(v, w, simples)


def test_phi_mor_functorial(ex2):
    u = list(universe("ex2"))
    for m, n in itertools.product(u, u):
        if is_projective(m) or is_projective(n):
            continue
        for f in hom_basis(m, n)[:2]:
            pf = phi_mor(ex2, f)
            assert pf.is_morphism()
            assert pf.source.dims == phi(ex2, m).dims and pf.target.dims == phi(ex2, n).dims
