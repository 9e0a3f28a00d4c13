"""Dense linear algebra over prime fields F_p.

Matrices are plain ``numpy.int64`` arrays with entries in ``[0, p)``; the
modulus travels separately.  ``p <= 2**16`` keeps every product of two
entries far below the int64 range, so a single ``% p`` after each
matrix product is enough.
"""

from __future__ import annotations

import numpy as np

MAX_PRIME = 1 << 16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def check_modulus(p: int) -> None:
    if not (2 <= p <= MAX_PRIME) or not is_prime(p):
        raise ValueError(f"modulus must be a prime in [2, 2^16], got {p}")


def asmat(a, p: int) -> np.ndarray:
    """Coerce ``a`` to a reduced int64 matrix (1-d input is one row)."""
    m = np.asarray(a, dtype=np.int64)
    if m.ndim == 1:
        m = m.reshape(1, -1)
    return m % p


def zeros(r: int, c: int) -> np.ndarray:
    return np.zeros((r, c), dtype=np.int64)


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.shape[1] == 0 or b.shape[0] == 0:
        return zeros(a.shape[0], b.shape[1])
    return (a @ b) % p


def inv_scalar(x: int, p: int) -> int:
    x %= p
    if x == 0:
        raise ZeroDivisionError("0 has no inverse mod p")
    return pow(int(x), p - 2, p)


def _rref_loop(r: np.ndarray, p: int, pivots: np.ndarray) -> int:
    rows, cols = r.shape
    row = 0
    for col in range(cols):
        if row == rows:
            break
        piv = -1
        for i in range(row, rows):
            if r[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != row:
            for c in range(cols):
                r[row, c], r[piv, c] = r[piv, c], r[row, c]
        # p is prime, so x^(p-2) inverts x
        x, e, inv = r[row, col], p - 2, 1
        while e:
            if e & 1:
                inv = inv * x % p
            x = x * x % p
            e >>= 1
        for c in range(cols):
            r[row, c] = r[row, c] * inv % p
        for i in range(rows):
            f = r[i, col]
            if i != row and f != 0:
                for c in range(cols):
                    r[i, c] = (r[i, c] - f * r[row, c]) % p
        pivots[row] = col
        row += 1
    return row


try:
    from numba import njit

    _rref_kernel = njit(cache=True)(_rref_loop)
except ImportError:  # pragma: no cover - plain Python fallback
    _rref_kernel = _rref_loop


def rref(m: np.ndarray, p: int) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row echelon form.

    Pivots are chosen as the first nonzero entry scanning columns left to
    right, so the result is unique and reproducible.

    Returns ``(R, rank, pivots)``.
    """
    r = np.ascontiguousarray(np.array(m, dtype=np.int64) % p)
    pivots = np.zeros(min(r.shape), dtype=np.int64)
    if r.size == 0:
        return r, 0, []
    rk = _rref_kernel(r, p, pivots)
    return r, int(rk), [int(c) for c in pivots[:rk]]


def rank(m: np.ndarray, p: int) -> int:
    if m.size == 0:
        return 0
    return rref(m, p)[1]


def kernel_basis(m: np.ndarray, p: int) -> np.ndarray:
    """Columns of the result form a basis of ``{x : m x = 0}``."""
    rows, cols = m.shape
    r, rk, pivots = rref(m, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    k = zeros(cols, len(free))
    for j, f in enumerate(free):
        k[f, j] = 1
        for i, pc in enumerate(pivots):
            k[pc, j] = (-r[i, f]) % p
    return k


def solve_right(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """Some ``X`` with ``a X = b``, or ``None`` when no solution exists."""
    if a.shape[0] != b.shape[0]:
        raise ValueError("row counts differ")
    n = a.shape[1]
    aug = np.concatenate([a % p, b % p], axis=1)
    r, rk, pivots = rref(aug, p)
    if any(pc >= n for pc in pivots):
        return None
    x = zeros(n, b.shape[1])
    for i, pc in enumerate(pivots):
        x[pc] = r[i, n:]
    return x


def column_space(m: np.ndarray, p: int) -> np.ndarray:
    """A basis (as columns) of the column space, in rref-normalized form."""
    r, rk, _ = rref(m.T, p)
    return r[:rk].T.copy()


def complement_indices(basis: np.ndarray, p: int) -> list[int]:
    """Coordinates ``k`` whose unit vectors complete ``basis`` to a basis."""
    n = basis.shape[0]
    if basis.shape[1] == 0:
        return list(range(n))
    _, _, pivots = rref(basis.T, p)
    return [k for k in range(n) if k not in set(pivots)]


def cokernel_projection(m: np.ndarray, p: int) -> tuple[np.ndarray, int]:
    """Quotient map onto ``coker m`` in a fixed basis.

    The basis of the cokernel is the image of the unit vectors at the
    non-pivot coordinates of ``rref(m^T)``; hence ``Q[:, nonpivots]`` is an
    identity block and those unit vectors form a section of ``Q``.
    """
    n = m.shape[0]
    img = column_space(m, p)
    comp = complement_indices(img, p)
    if not comp:
        return zeros(0, n), 0
    b = np.concatenate([img, eye(n)[:, comp]], axis=1)
    binv = inverse(b, p)
    q = binv[img.shape[1]:, :]
    return q, len(comp)


def inverse(m: np.ndarray, p: int) -> np.ndarray:
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    x = solve_right(m, eye(n), p)
    if x is None:
        raise ZeroDivisionError("singular matrix")
    return x


def is_invertible(m: np.ndarray, p: int) -> bool:
    return m.shape[0] == m.shape[1] and rank(m, p) == m.shape[0]


def intersect(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Basis of ``span(a) ∩ span(b)`` for column bases ``a``, ``b``."""
    if a.shape[1] == 0 or b.shape[1] == 0:
        return zeros(a.shape[0], 0)
    k = kernel_basis(np.concatenate([a, (-b) % p], axis=1), p)
    return column_space(matmul(a, k[: a.shape[1]], p), p)


def parse_matrix(text: str, p: int, rows: int | None = None, cols: int | None = None) -> np.ndarray:
    """Parse ``"1 0; 1 1"``.  ``rows``/``cols`` give the shape of empty matrices."""
    text = text.strip()
    if not text:
        return zeros(rows or 0, cols or 0)
    data = [[int(tok) for tok in row.split()] for row in text.split(";")]
    widths = {len(r) for r in data}
    if len(widths) != 1:
        raise ValueError(f"ragged matrix: {text!r}")
    m = np.array(data, dtype=np.int64) % p
    if rows is not None and cols is not None and m.shape != (rows, cols):
        raise ValueError(f"matrix {text!r} has shape {m.shape}, expected {(rows, cols)}")
    return m


def format_matrix(m: np.ndarray) -> str:
    return "; ".join(" ".join(str(int(x)) for x in row) for row in m)
