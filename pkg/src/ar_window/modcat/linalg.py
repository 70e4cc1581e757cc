"""
Dense linear algebra over GF(p) on int64 arrays.

Entries are kept reduced to [0, p). Field orders must stay below
``MAX_FIELD_ORDER`` so a single product of two entries fits in int64;
products whose sums could still overflow are done on Python integers.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

import numpy as np
from sympy import isprime

DEFAULT_PRIME = 32003
MAX_FIELD_ORDER = 2**31
INT64_MAX = 2**63 - 1


def check_field_order(p: int) -> int:
    """Raises ValueError unless ``p`` is a prime below ``MAX_FIELD_ORDER``"""
    p = int(p)
    if not isprime(p):
        raise ValueError(f"Field order must be prime, got {p}")
    if p >= MAX_FIELD_ORDER:
        raise ValueError(f"Field order {p} is too large (must be below 2^31)")
    return p


def accumulation_fits(terms: int, p: int) -> bool:
    """True when a sum of ``terms`` products of reduced entries stays inside int64"""
    return (p - 1) ** 2 * max(terms, 1) <= INT64_MAX


def mod_p(a: np.ndarray, p: int) -> np.ndarray:
    return np.asarray(a, dtype=np.int64) % p


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.shape[1] == 0 or b.shape[0] == 0:
        return zeros(a.shape[0], b.shape[1])
    if accumulation_fits(a.shape[1], p):
        return mod_p(a @ b, p)
    exact = (np.asarray(a).astype(object) @ np.asarray(b).astype(object)) % p
    return exact.astype(np.int64)


def inv_mod_scalar(a: int, p: int) -> int:
    a = int(a) % p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse mod p")
    return pow(a, p - 2, p)


def rref_mod(a: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form over GF(p). Returns (R, pivot columns)."""
    r_mat = mod_p(a, p).copy()
    m, n = r_mat.shape
    pivots: List[int] = []
    row = 0
    for col in range(n):
        if row >= m:
            break
        nonzero = np.nonzero(r_mat[row:, col])[0]
        if nonzero.size == 0:
            continue
        piv = row + int(nonzero[0])
        if piv != row:
            r_mat[[row, piv]] = r_mat[[piv, row]]
        r_mat[row] = (r_mat[row] * inv_mod_scalar(r_mat[row, col], p)) % p
        factors = r_mat[:, col].copy()
        factors[row] = 0
        if factors.any():
            r_mat = (r_mat - np.outer(factors, r_mat[row])) % p
        pivots.append(col)
        row += 1
    return r_mat, pivots


def rank_mod(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    return len(rref_mod(a, p)[1])


def nullspace_mod(a: np.ndarray, p: int) -> np.ndarray:
    """Right nullspace of ``a``; columns form a basis (free variables in increasing order)."""
    m, n = a.shape
    if m == 0:
        return identity(n)
    r_mat, pivots = rref_mod(a, p)
    free = [j for j in range(n) if j not in set(pivots)]
    basis = zeros(n, len(free))
    for k, f in enumerate(free):
        basis[f, k] = 1
        for row, pc in enumerate(pivots):
            basis[pc, k] = (-r_mat[row, f]) % p
    return basis


def solve_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """
    One solution X of A X = B (free variables zero).
    Raises ValueError if the system is inconsistent.
    """
    if b.ndim == 1:
        b = b.reshape(-1, 1)
    m, n = a.shape
    if b.shape[1] == 0:
        return zeros(n, 0)
    if m == 0:
        return zeros(n, b.shape[1])
    aug = np.concatenate([mod_p(a, p), mod_p(b, p)], axis=1)
    r_mat, pivots = rref_mod(aug, p)
    if any(pc >= n for pc in pivots):
        raise ValueError("No solution to linear system over GF(p)")
    x = zeros(n, b.shape[1])
    for row, pc in enumerate(pivots):
        x[pc] = r_mat[row, n:]
    return x


def inv_mod_mat(a: np.ndarray, p: int) -> np.ndarray:
    """Gauss-Jordan inverse over GF(p). Raises ValueError if singular."""
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("Matrix must be square")
    if n == 0:
        return zeros(0, 0)
    r_mat, _ = rref_mod(np.concatenate([mod_p(a, p), identity(n)], axis=1), p)
    if not np.array_equal(r_mat[:, :n], identity(n)):
        raise ValueError("Matrix not invertible mod p")
    return r_mat[:, n:]


def is_invertible(a: np.ndarray, p: int) -> bool:
    return a.shape[0] == a.shape[1] and rank_mod(a, p) == a.shape[0]


def column_basis(a: np.ndarray, p: int) -> np.ndarray:
    """Linearly independent columns of ``a`` spanning its column space (pivot columns)"""
    if a.shape[1] == 0:
        return zeros(a.shape[0], 0)
    _, pivots = rref_mod(a, p)
    return mod_p(a[:, pivots], p)


def extend_to_basis(b: np.ndarray, n: int, p: int) -> np.ndarray:
    """Standard basis vectors completing the independent columns ``b`` to a basis of GF(p)^n"""
    base = b if b.size else zeros(n, 0)
    _, pivots = rref_mod(np.concatenate([base, identity(n)], axis=1), p)
    chosen = [pc - base.shape[1] for pc in pivots if pc >= base.shape[1]]
    return identity(n)[:, chosen]


def in_column_span(a: np.ndarray, v: np.ndarray, p: int) -> bool:
    v = v.reshape(-1, 1)
    if a.shape[1] == 0:
        return not (mod_p(v, p)).any()
    return rank_mod(np.concatenate([a, v], axis=1), p) == rank_mod(a, p)


def block_diag(blocks: Sequence[np.ndarray]) -> np.ndarray:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = zeros(rows, cols)
    r = c = 0
    for blk in blocks:
        out[r : r + blk.shape[0], c : c + blk.shape[1]] = blk
        r += blk.shape[0]
        c += blk.shape[1]
    return out


def kron_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return mod_p(np.kron(a, b), p)
