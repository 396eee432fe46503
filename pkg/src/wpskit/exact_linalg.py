"""Exact integer and rational matrix utilities.

Matrices are tuples of row tuples holding Python ints (or Fractions where a
rational result is documented). Every function is pure and returns new
immutable values, so results can be shared freely.

Indices are 0-based throughout the library; permutations are sequences
``sigma`` with ``sigma[i]`` the image of ``i``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from numbers import Rational
from typing import Sequence

from .errors import InternalConsistencyError, SingularMatrixError

Matrix = tuple[tuple[int, ...], ...]
RatMatrix = tuple[tuple[Fraction, ...], ...]
Permutation = tuple[int, ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    """Freeze a nested sequence into a rectangular integer matrix."""
    out = tuple(tuple(_as_int(x) for x in row) for row in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return out


def _as_int(x) -> int:
    if isinstance(x, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(x, int):
        return x
    if isinstance(x, Rational) and x.denominator == 1:
        return int(x.numerator)
    raise TypeError(f"expected an integer entry, got {x!r}")


def shape(A: Sequence[Sequence]) -> tuple[int, int]:
    return len(A), (len(A[0]) if A else 0)


def identity(k: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(k)) for i in range(k))


def transpose(A: Sequence[Sequence]) -> tuple[tuple, ...]:
    return tuple(zip(*A))


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> tuple[tuple, ...]:
    if shape(A)[1] != len(B):
        raise ValueError(f"cannot multiply {shape(A)} by {shape(B)}")
    cols = tuple(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in A)


def matvec(A: Sequence[Sequence], x: Sequence) -> tuple:
    return tuple(sum(a * b for a, b in zip(row, x)) for row in A)


def scale(A: Sequence[Sequence], c) -> tuple[tuple, ...]:
    return tuple(tuple(c * a for a in row) for row in A)


def content(values) -> int:
    """gcd of all entries of a (possibly nested) integer collection."""
    flat = []
    for v in values:
        if isinstance(v, (tuple, list)):
            flat.append(content(v))
        else:
            flat.append(v)
    return reduce(gcd, flat, 0)


def exact_div(A: Sequence[Sequence[int]], d: int) -> Matrix:
    """Divide every entry by ``d``; a remainder is an internal error."""
    out = []
    for row in A:
        new = []
        for a in row:
            q, r = divmod(a, d)
            if r:
                raise InternalConsistencyError(f"{a} is not divisible by {d}")
            new.append(q)
        out.append(tuple(new))
    return tuple(out)


def to_integral(A: Sequence[Sequence]) -> Matrix:
    """Convert a rational matrix with integral entries to an integer matrix."""
    out = []
    for row in A:
        new = []
        for a in row:
            a = Fraction(a)
            if a.denominator != 1:
                raise InternalConsistencyError(f"non-integral entry {a}")
            new.append(a.numerator)
        out.append(tuple(new))
    return tuple(out)


# ---------------------------------------------------------------- determinants


def det(A: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free Bareiss elimination."""
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    M = [list(r) for r in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        pivot = M[k][k]
        for i in range(k + 1, n):
            row_i, mik = M[i], M[i][k]
            row_k = M[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
        prev = pivot
    return sign * M[n - 1][n - 1]


def inverse(A: Sequence[Sequence]) -> RatMatrix:
    """Exact rational inverse by Gauss-Jordan elimination."""
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("inverse of a non-square matrix")
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c] != 0), None)
        if p is None:
            raise SingularMatrixError("matrix is singular")
        M[c], M[p] = M[p], M[c]
        piv = M[c][c]
        M[c] = [x / piv for x in M[c]]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return tuple(tuple(row[n:]) for row in M)


def delete_column(M: Sequence[Sequence[int]], j: int) -> Matrix:
    """Drop column ``j`` (0-based)."""
    cols = shape(M)[1]
    if not 0 <= j < cols:
        raise IndexError(f"column {j} out of range for {cols} columns")
    return tuple(tuple(x for k, x in enumerate(row) if k != j) for row in M)


def delete_row(M: Sequence[Sequence[int]], i: int) -> Matrix:
    if not 0 <= i < len(M):
        raise IndexError(f"row {i} out of range for {len(M)} rows")
    return tuple(tuple(r) for k, r in enumerate(M) if k != i)


def adjugate(A: Sequence[Sequence[int]]) -> Matrix:
    """Classical adjoint, so that ``A @ adj(A) == det(A) * I``."""
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("adjugate of a non-square matrix")
    if n == 1:
        return ((1,),)
    d = det(A)
    if d != 0:
        return to_integral(scale(inverse(A), d))
    # singular: fall back to cofactors
    return tuple(
        tuple((-1) ** (i + j) * det(delete_column(delete_row(A, j), i)) for j in range(n))
        for i in range(n)
    )


def maximal_minors(M: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Determinants of ``M`` with each column deleted in turn (n x (n+1) input)."""
    rows, cols = shape(M)
    if cols != rows + 1:
        raise ValueError(f"expected an n x (n+1) matrix, got {rows} x {cols}")
    return tuple(det(delete_column(M, j)) for j in range(cols))


# ------------------------------------------------------------------------ HNF


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    if b == 0:
        return abs(a), (1 if a >= 0 else -1), 0
    g, s, t = _egcd(b, a % b)
    return g, t, s - (a // b) * t


def _solve_with_u1(q: Sequence[int], k: int, u1: int) -> list[int] | None:
    # find u with u.q = 1 and u[1] = u1, filling u[k], ..., u[2] with the
    # smallest non-positive residues and solving the rest through q[0]
    rhs = 1 - q[1] * u1
    u = [0] * len(q)
    u[1] = u1
    for j in range(k, 1, -1):
        h = reduce(gcd, [q[0], *q[2:j]])
        g = gcd(h, q[j])
        mod = h // g
        if mod == 1:
            uj = 0
        else:
            if rhs % g:
                return None
            uj = (rhs // g * pow(q[j] // g, -1, mod)) % mod
            if uj:
                uj -= mod
        u[j] = uj
        rhs -= q[j] * uj
    if rhs % q[0]:
        return None
    u[0] = rhs // q[0]
    return u


def _positive_column_transform(q: Sequence[int]) -> Matrix | None:
    """Unimodular U with U.q = (1,0,...,0) for a coprime positive column q.

    The rows below the first are kernel vectors of q arranged so that they
    reproduce the worksheet's printed fans. Returns None when this layout is
    not available; callers then use the generic elimination.
    """
    size = len(q)
    k = next(j for j in range(1, size) if reduce(gcd, q[: j + 1]) == 1)
    if k == 1:
        _, s, t = _egcd(q[0], q[1])
        u = [s, t] + [0] * (size - 2)
        first = [-q[1], q[0]] + [0] * (size - 2)
    else:
        u = _solve_with_u1(q, k, -1) or _solve_with_u1(q, k, 1)
        if u is None:
            return None
        first = [int(i == 0) - q[0] * x for i, x in enumerate(u)]
        if first[1] < 0:
            first = [-x for x in first]
    rows = [first]
    for j in range(2, size):
        r = [int(i == j) - q[j] * x for i, x in enumerate(u)]
        c = r[1] // first[1]
        rows.append([a - c * b for a, b in zip(r, first)])
    U = as_matrix([u, *rows])
    if abs(det(U)) != 1:
        return None
    return U


def _generic_hnf(A: Matrix) -> tuple[Matrix, Matrix]:
    rows, cols = shape(A)
    H = [list(r) for r in A]
    U = [list(r) for r in identity(rows)]

    def axpy(dst: int, src: int, c: int) -> None:
        # row dst -= c * row src
        H[dst] = [a - c * b for a, b in zip(H[dst], H[src])]
        U[dst] = [a - c * b for a, b in zip(U[dst], U[src])]

    r = 0
    for c in range(cols):
        if r == rows:
            break
        while True:
            nonzero = [i for i in range(r, rows) if H[i][c] != 0]
            if not nonzero:
                break
            p = min(nonzero, key=lambda i: abs(H[i][c]))
            H[r], H[p] = H[p], H[r]
            U[r], U[p] = U[p], U[r]
            finished = True
            for i in range(r + 1, rows):
                if H[i][c]:
                    axpy(i, r, H[i][c] // H[r][c])
                    if H[i][c]:
                        finished = False
            if finished:
                break
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-a for a in H[r]]
            U[r] = [-a for a in U[r]]
        for i in range(r):
            axpy(i, r, H[i][c] // H[r][c])
        r += 1
    return as_matrix(H), as_matrix(U)


def hnf_row(A: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix]:
    """Row-style Hermite normal form with transformation: ``H = U @ A``.

    Pivots are positive and the entries above each pivot lie in
    ``[0, pivot)``. For a single positive column the transform follows the
    layout that reproduces the worksheet fans (see ``fan_from_weights``);
    any other input uses plain Euclidean elimination.
    """
    A = as_matrix(A)
    rows, cols = shape(A)
    if cols == 1 and rows >= 2 and all(r[0] > 0 for r in A):
        g = content(A)
        U = _positive_column_transform([r[0] // g for r in A])
        if U is not None:
            H = tuple((g,) if i == 0 else (0,) for i in range(rows))
            return H, U
    return _generic_hnf(A)


# --------------------------------------------------------------- permutations


def perm_match(s1: Sequence, s2: Sequence) -> Permutation:
    """Permutation sigma with ``s1[i] == s2[sigma[i]]``, first unused index wins."""
    if len(s1) != len(s2) or sorted(s1) != sorted(s2):
        raise ValueError("sequences are not rearrangements of each other")
    used = [False] * len(s2)
    sigma = []
    for x in s1:
        j = next(j for j, y in enumerate(s2) if not used[j] and y == x)
        used[j] = True
        sigma.append(j)
    return tuple(sigma)


def _check_permutation(sigma: Sequence[int], k: int) -> None:
    if len(sigma) != k:
        raise ValueError(f"permutation of length {len(sigma)} applied to {k} columns")
    if sorted(sigma) != list(range(k)):
        raise ValueError(f"{tuple(sigma)} is not a bijection of range({k})")


def apply_column_permutation(M: Sequence[Sequence], sigma: Sequence[int]) -> tuple[tuple, ...]:
    """Column i of the result is column ``sigma[i]`` of ``M``."""
    _check_permutation(sigma, shape(M)[1])
    return tuple(tuple(row[s] for s in sigma) for row in M)


def perm_matrix(k: int, sigma: Sequence[int]) -> Matrix:
    """Permutation matrix P with ``M @ P == apply_column_permutation(M, sigma)``."""
    return apply_column_permutation(identity(k), sigma)
