import pytest
from hypothesis import given
from hypothesis import strategies as st

from radsq.quivalg import (
    double_species, format_quiver, gamma, gamma_labels, parse_quiver, random_algebra, standard_module,
)


def test_roundtrip(ex2):
    b = parse_quiver(format_quiver(ex2))
    assert b.n == ex2.n and b.p == ex2.p
    assert [(x.name, x.source, x.target) for x in b.arrows] == [(x.name, x.source, x.target) for x in ex2.arrows]


@pytest.mark.parametrize("text", [
    "vertices 1\narrow x 1 1\n",
    "field 2\nvertices 1\narrow x 1\n",
    "field 2\nvertices two\n",
    "field 4\nvertices 1\n",
    "field 2\nvertices 1\narrow x 1 3\n",
])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        parse_quiver(text)


def test_gamma_of_example1_is_kronecker(ex1):
    g = gamma(ex1)
    assert g.n == 2 and g.quiver.labels == ("1+", "1-")
    assert sorted((x.source, x.target) for x in g.arrows) == [(1, 0), (1, 0)]
    assert g.is_hereditary


def test_gamma_of_example2(ex2):
    g = gamma(ex2)
    assert gamma_labels(2) == ("1+", "2+", "1-", "2-")
    # a: i -> j becomes j- -> i+
    assert {x.name: (g.label(x.source), g.label(x.target)) for x in g.arrows} == {
        "a1": ("2-", "1+"), "a2": ("2-", "1+"), "b": ("1-", "2+"),
    }
    bip = double_species(ex2)
    assert [bip.plus(i) for i in range(2)] == [0, 1] and [bip.minus(j) for j in range(2)] == [2, 3]
    assert bip.correspondence == (0, 1, 2) and bip.base_vertex(3) == 1


def test_hereditary_and_composable(ex1, ex2, kron):
    assert not ex1.is_hereditary and not ex2.is_hereditary and kron.is_hereditary
    assert len(ex2.composable_pairs) == 4  # a1 b, a2 b, b a1, b a2
    assert ex1.dim == 3 and ex2.dim == 5


def test_opposite_reverses(ex2):
    op = ex2.opposite
    assert [(x.source, x.target) for x in op.arrows] == [(x.target, x.source) for x in ex2.arrows]
    assert op.opposite.arrows == ex2.arrows


@given(st.integers(0, 500))
def test_standard_dims(seed):
    a = random_algebra(3, 4, 2, seed)
    for i in range(a.n):
        p = standard_module(a, "projective", i).dims
        e = standard_module(a, "injective", i).dims
        for j in range(a.n):
            assert p[j] == (i == j) + a.arrow_count(i, j)
            assert e[j] == (i == j) + a.arrow_count(j, i)
        assert standard_module(a, "simple", i).total_dim == 1


def test_random_algebra_deterministic_and_capped():
    a, b = random_algebra(3, 6, 2, 7, 2), random_algebra(3, 6, 2, 7, 2)
    assert a.arrows == b.arrows
    assert all(len(a.out_arrows[i]) <= 2 for i in range(3))
    with pytest.raises(ValueError):
        random_algebra(2, 5, 2, 0, 2)
