import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from radsq import exactla as la

PRIMES = st.sampled_from([2, 3, 5])


@st.composite
def matrices(draw, max_side=5):
    p = draw(PRIMES)
    r = draw(st.integers(0, max_side))
    c = draw(st.integers(0, max_side))
    m = draw(arrays(np.int64, (r, c), elements=st.integers(0, p - 1)))
    return m, p


def brute_rank(m, p):
    """log_p of the number of vectors in the row space."""
    r, c = m.shape
    if r == 0 or c == 0:
        return 0
    seen = {tuple(np.array(v) @ m % p) for v in itertools.product(range(p), repeat=r)}
    return round(np.log(len(seen)) / np.log(p))


def test_is_prime():
    assert [q for q in range(20) if la.is_prime(q)] == [2, 3, 5, 7, 11, 13, 17, 19]
    with pytest.raises(ValueError):
        la.check_modulus(4)


def test_inv_scalar():
    for p in (2, 3, 5, 7):
        for x in range(1, p):
            assert x * la.inv_scalar(x, p) % p == 1
    with pytest.raises(ZeroDivisionError):
        la.inv_scalar(0, 5)


@given(matrices(max_side=4))
def test_rank_matches_brute_force(mp):
    m, p = mp
    if m.shape[0] <= 4 and p ** m.shape[0] <= 625:
        assert la.rank(m, p) == brute_rank(m, p)


@given(matrices())
def test_rank_nullity(mp):
    m, p = mp
    k = la.kernel_basis(m, p)
    assert k.shape == (m.shape[1], m.shape[1] - la.rank(m, p))
    assert not (la.matmul(m, k, p)).any()
    assert la.rank(k, p) == k.shape[1]


@given(matrices())
def test_rref_idempotent(mp):
    m, p = mp
    r, rk, piv = la.rref(m, p)
    r2, rk2, piv2 = la.rref(r, p)
    assert np.array_equal(r, r2) and rk == rk2 and piv == piv2
    assert all(r[i, c] == 1 for i, c in enumerate(piv))


@given(matrices())
def test_cokernel_projection(mp):
    m, p = mp
    q, d = la.cokernel_projection(m, p)
    assert d == m.shape[0] - la.rank(m, p)
    assert not la.matmul(q, m, p).any()
    assert la.rank(q, p) == d


@given(matrices(), st.data())
def test_solve_right(mp, data):
    a, p = mp
    x = data.draw(arrays(np.int64, (a.shape[1], 2), elements=st.integers(0, p - 1)))
    b = la.matmul(a, x, p)
    sol = la.solve_right(a, b, p)
    assert sol is not None and np.array_equal(la.matmul(a, sol, p), b)


def test_solve_right_inconsistent():
    assert la.solve_right(np.array([[1, 1], [1, 1]]), np.array([[0], [1]]), 2) is None


@given(st.integers(1, 4), PRIMES, st.integers(0, 2**32 - 1))
def test_inverse(n, p, seed):
    rng = np.random.default_rng(seed)
    g = rng.integers(0, p, size=(n, n))
    if la.is_invertible(g, p):
        assert np.array_equal(la.matmul(g, la.inverse(g, p), p), la.eye(n))
    else:
        with pytest.raises(ZeroDivisionError):
            la.inverse(g, p)


@given(matrices(max_side=4), st.data())
def test_intersect_dimension(mp, data):
    a, p = mp
    b = data.draw(arrays(np.int64, (a.shape[0], data.draw(st.integers(0, 4))), elements=st.integers(0, p - 1)))
    ca, cb = la.column_space(a, p), la.column_space(b, p)
    both = np.concatenate([ca, cb], axis=1)
    # dim(A ∩ B) = dim A + dim B - dim(A + B)
    assert la.intersect(ca, cb, p).shape[1] == ca.shape[1] + cb.shape[1] - la.rank(both, p)


def test_parse_format_roundtrip():
    m = la.parse_matrix("1 0 2; 0 1 1", 3)
    assert la.format_matrix(m) == "1 0 2; 0 1 1"
    assert la.parse_matrix("", 2, 3, 0).shape == (3, 0)
    with pytest.raises(ValueError):
        la.parse_matrix("1 0; 1", 2)
    with pytest.raises(ValueError):
        la.parse_matrix("1 0", 2, 2, 2)
