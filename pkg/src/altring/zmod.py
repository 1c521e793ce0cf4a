"""Exact linear algebra over Z/kZ built on the Howell normal form.

Matrices are numpy integer arrays of row vectors with entries reduced into
[0, k).  The Howell form is the canonical echelon form for row spans over
Z/kZ: two generating sets span the same submodule of (Z/kZ)^n iff their
Howell forms are byte-identical.  Unlike plain Gaussian elimination it stays
correct when k has zero divisors, which is what makes span equality,
membership, kernels and intersections decidable for composite k.
"""

from __future__ import annotations

import math

import numpy as np


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: (g, s, t) with s*a + t*b == g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def unit_multiplier(a: int, k: int) -> int:
    """A unit u mod k with u*a == gcd(a, k) (mod k).

    Any lift u + t*(k/g) of the inverse of a/g mod k/g satisfies the
    congruence; at least one lift with t < g is a unit mod k.
    """
    a %= k
    if a == 0:
        return 1
    g = math.gcd(a, k)
    ad, kd = a // g, k // g
    u = pow(ad, -1, kd) if kd > 1 else 1
    for t in range(g + 1):
        cand = (u + t * kd) % k
        if cand and math.gcd(cand, k) == 1:
            return cand
    raise ArithmeticError(f"no unit lift for {a} mod {k}")


def as_matrix(rows, k: int, width: int | None = None) -> np.ndarray:
    """Coerce ``rows`` to a 2-D int64 array reduced mod k."""
    a = np.array(rows, dtype=np.int64)
    if a.size == 0:
        return np.zeros((0, width or 0), dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    return a % k


def _howell_inplace(work: list[np.ndarray], k: int, npivot: int) -> int:
    """Reduce ``work`` so its first r rows are the Howell echelon over the
    first ``npivot`` columns and every later row is zero there.

    Columns beyond ``npivot`` ride along unreduced, which is what the
    kernel and transform helpers rely on.  Returns r.
    """
    r = 0
    for c in range(npivot):
        pivot_at = None
        for i in range(r, len(work)):
            if work[i][c]:
                pivot_at = i
                break
        if pivot_at is None:
            continue
        work[r], work[pivot_at] = work[pivot_at], work[r]
        for i in range(r + 1, len(work)):
            b = int(work[i][c])
            if b == 0:
                continue
            a = int(work[r][c])
            if b % a == 0:
                work[i] = (work[i] - (b // a) * work[r]) % k
            else:
                g, s, t = egcd(a, b)
                new_r = (s * work[r] + t * work[i]) % k
                new_i = ((a // g) * work[i] - (b // g) * work[r]) % k
                work[r], work[i] = new_r, new_i
        u = unit_multiplier(int(work[r][c]), k)
        if u != 1:
            work[r] = (work[r] * u) % k
        p = int(work[r][c])
        for i in range(r):
            q = int(work[i][c]) // p
            if q:
                work[i] = (work[i] - q * work[r]) % k
        ann = k // p
        if ann % k:
            extra = (work[r] * ann) % k
            if extra.any():
                work.append(extra)
        r += 1
    return r


def howell(rows, k: int, width: int | None = None) -> np.ndarray:
    """Canonical Howell form of the row span; zero rows dropped."""
    a = as_matrix(rows, k, width)
    work = [row.copy() for row in a if row.any()]
    r = _howell_inplace(work, k, a.shape[1])
    if r == 0:
        return np.zeros((0, a.shape[1]), dtype=np.int64)
    return np.vstack(work[:r])


def howell_transformed(rows, k: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return (H, U, K): H = howell(A), U with H == U @ A mod k, and K a
    canonical basis of the left kernel {x : x @ A == 0 mod k}."""
    a = as_matrix(rows, k)
    m, n = a.shape
    aug = np.hstack([a, np.eye(m, dtype=np.int64)])
    work = [row.copy() for row in aug]
    r = _howell_inplace(work, k, n)
    top = np.vstack(work[:r]) if r else np.zeros((0, n + m), dtype=np.int64)
    rest = np.vstack(work[r:]) if len(work) > r else np.zeros((0, n + m), dtype=np.int64)
    kern = howell(rest[:, n:], k, width=m)
    return top[:, :n], top[:, n:], kern


def left_kernel(rows, k: int) -> np.ndarray:
    """Canonical basis of {x : x @ rows == 0 mod k}."""
    return howell_transformed(rows, k)[2]


def kernel(mat, k: int) -> np.ndarray:
    """Canonical basis (as rows) of the right kernel {v : mat @ v == 0 mod k}."""
    a = as_matrix(mat, k)
    ker = left_kernel(a.T, k)
    if ker.size:
        assert not ((a @ ker.T) % k).any(), "kernel re-substitution failed"
    return ker


def pivots(h: np.ndarray) -> list[tuple[int, int]]:
    """(column, value) of each pivot of a matrix in Howell form."""
    out = []
    for row in h:
        c = int(np.argmax(row != 0))
        out.append((c, int(row[c])))
    return out


def reduce_mod_span(h: np.ndarray, v, k: int) -> np.ndarray:
    """Residue of v after reduction against Howell rows h (zero iff member)."""
    v = np.array(v, dtype=np.int64) % k
    for row, (c, p) in zip(h, pivots(h)):
        if v[c] % p == 0:
            q = (int(v[c]) // p) % k
            if q:
                v = (v - q * row) % k
    return v


def member(h: np.ndarray, v, k: int) -> bool:
    """Is v in the row span of the Howell-form matrix h?"""
    return not reduce_mod_span(h, v, k).any()


def solve(mat, target, k: int) -> np.ndarray | None:
    """A particular solution x of mat @ x == target mod k, or None."""
    a = as_matrix(mat, k)
    t = np.array(target, dtype=np.int64) % k
    h, u, _ = howell_transformed(a.T, k)
    coeffs = np.zeros(len(h), dtype=np.int64)
    residual = t.copy()
    for i, (row, (c, p)) in enumerate(zip(h, pivots(h))):
        if residual[c] % p == 0:
            q = (int(residual[c]) // p) % k
            residual = (residual - q * row) % k
            coeffs[i] = q
    if residual.any():
        return None
    x = (coeffs @ u) % k
    assert not ((a @ x - t) % k).any()
    return x


def intersect(rows_a, rows_b, k: int, width: int) -> np.ndarray:
    """Canonical basis of the intersection of two row spans (Zassenhaus)."""
    a = as_matrix(rows_a, k, width)
    b = as_matrix(rows_b, k, width)
    if not a.size or not b.size:
        return np.zeros((0, width), dtype=np.int64)
    stacked = np.vstack([np.hstack([a, a]), np.hstack([b, np.zeros_like(b)])])
    work = [row.copy() for row in stacked]
    r = _howell_inplace(work, k, width)
    tail = [row[width:] for row in work[r:]]
    return howell(tail, k, width=width)


def span_count(h: np.ndarray, k: int) -> int:
    """Number of elements of the span of a Howell-form matrix."""
    n = 1
    for _, p in pivots(h):
        n *= k // p
    return n


def span_elements(h: np.ndarray, k: int, width: int):
    """Iterate every element of the span exactly once.

    Row i is taken with coefficients in [0, k/p_i); for a Howell basis this
    enumerates the span without repeats.
    """
    if not h.size:
        yield np.zeros(width, dtype=np.int64)
        return
    ranges = [k // p for _, p in pivots(h)]
    counters = [0] * len(ranges)
    while True:
        acc = np.zeros(width, dtype=np.int64)
        for c, row in zip(counters, h):
            if c:
                acc = acc + c * row
        yield acc % k
        i = len(counters) - 1
        while i >= 0:
            counters[i] += 1
            if counters[i] < ranges[i]:
                break
            counters[i] = 0
            i -= 1
        if i < 0:
            return
