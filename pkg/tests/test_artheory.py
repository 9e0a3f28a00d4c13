import itertools

import numpy as np
import pytest
import sympy

from conftest import algebra, universe
from radsq.artheory import (
    InjectiveInput, ProjectiveInput, RadicalSpaces, ass_simple, irr_dim, tau, tau_inverse, translate, transpose,
)
from radsq.harness.verify import is_injective, is_projective
from radsq.quivalg import gamma, standard_module
from radsq.repmod.decompose import is_isomorphic
from radsq.repmod.rep import hom_dim

SMALL = ["ex1", "ex2", "random0", "random20"]


def coxeter(b):
    """``-C^T C^-1`` with the dimension vectors of the projectives as columns of ``C``."""
    c = sympy.Matrix([[standard_module(b, "projective", j).dims[i] for j in range(b.n)] for i in range(b.n)])
    return -c.T * c.inv()


def euler(b, x, y):
    """``<x, y> = sum x_i y_i - sum over arrows x_s y_t`` for a hereditary quiver."""
    return sum(a * c for a, c in zip(x, y)) - sum(x[ar.source] * y[ar.target] for ar in b.arrows)


def test_example1_translates(ex1):
    u = standard_module(ex1, "simple", 0)
    assert tau_inverse(u).dims == (5,) and tau(u).dims == (5,)
    with pytest.raises(ProjectiveInput):
        tau(standard_module(ex1, "projective", 0))
    with pytest.raises(InjectiveInput):
        tau_inverse(standard_module(ex1, "injective", 0))


def test_example2_translates(ex2):
    u1, u2 = (standard_module(ex2, "simple", j) for j in range(2))
    # U_2 is tU_1 and P_2 is E_1
    assert is_isomorphic(tau_inverse(u1), u2) is not None
    assert is_isomorphic(standard_module(ex2, "projective", 1), standard_module(ex2, "injective", 0)) is not None
    assert ass_simple(ex2, 1).right.dims == (2, 3)


@pytest.mark.parametrize("name", SMALL)
def test_transpose_and_translate_inverse(name):
    for m in universe(name):
        if not is_projective(m):
            assert is_isomorphic(transpose(transpose(m)), m) is not None
            assert is_isomorphic(tau_inverse(tau(m)), m) is not None
        if not is_injective(m):
            assert is_isomorphic(tau(tau_inverse(m)), m) is not None
            assert is_isomorphic(translate(m, "tauInv"), tau_inverse(m)) is not None


@pytest.mark.parametrize("name", SMALL)
def test_almost_split_sequences_with_simple_ends(name):
    a = algebra(name)
    for j in range(a.n):
        u = standard_module(a, "simple", j)
        if not is_injective(u):
            seq = ass_simple(a, j, "fromSimple")
            assert seq.is_exact() and not seq.is_split()
            assert is_isomorphic(seq.left, u) is not None
            assert is_isomorphic(seq.right, tau_inverse(u)) is not None
        if not is_projective(u):
            seq = ass_simple(a, j, "toSimple")
            assert seq.is_exact() and not seq.is_split()
            assert is_isomorphic(seq.right, u) is not None
            assert is_isomorphic(seq.left, tau(u)) is not None


@pytest.mark.parametrize("name", SMALL)
def test_coxeter_on_gamma(name):
    """On the hereditary Gamma, dim tau M is the Coxeter image of dim M."""
    g = gamma(algebra(name))
    phi_c = coxeter(g)
    for m in universe(name, 4, on_gamma=True):
        if not is_projective(m):
            assert list(tau(m).dims) == list(phi_c * sympy.Matrix(m.dims))
        if not is_injective(m):
            assert list(tau_inverse(m).dims) == list(phi_c.inv() * sympy.Matrix(m.dims))


@pytest.mark.parametrize("name", ["ex1", "ex2", "random0"])
def test_auslander_reiten_formula_on_gamma(name):
    """hom(M, N) - dim Ext(M, N) = <dim M, dim N>, with Ext(M, N) = D Hom(N, tau M)."""
    g = gamma(algebra(name))
    u = list(universe(name, 3, on_gamma=True))
    for m, n in itertools.product(u, u):
        ext = 0 if is_projective(m) else hom_dim(n, tau(m))
        assert hom_dim(m, n) - ext == euler(g, m.dims, n.dims)


def test_irr_in_example1(ex1):
    u = list(universe("ex1", 5))
    s = standard_module(ex1, "simple", 0)
    pm = standard_module(ex1, "projective", 0)
    spaces = RadicalSpaces(u + [pm])
    assert irr_dim(s, pm, spaces) == 2
    assert irr_dim(pm, tau_inverse(s), spaces) == 2
    assert irr_dim(s, tau_inverse(s), spaces) == 0
    assert spaces.rad_dim(s, s) == 0


def test_translate_rejects_bad_direction(ex1):
    with pytest.raises(ValueError):
        translate(standard_module(ex1, "simple", 0), "sideways")
