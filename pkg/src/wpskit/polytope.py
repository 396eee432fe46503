"""Polytopes of polarized weighted projective spaces.

Going from a fan to a polytope is weighted transversion; the reverse
direction, the WPP decomposition, reads pseudo-weights, a pseudo-fan and
the polarization off a square matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence, Union

from . import exact_linalg as la
from .errors import InternalConsistencyError, NotAdmissible, SingularMatrixError
from .fan import Fan, FanLike, as_fan, fan_from_weights, fan_weights
from .weights import WeightsLike, WeightsVector, q_delta


@dataclass(frozen=True)
class SimplexPolytope:
    """n+1 integer vertices spanning an n-simplex; the first is the base point."""

    vertices: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        verts = la.as_matrix(self.vertices)
        object.__setattr__(self, "vertices", verts)
        if len(verts) < 2 or any(len(v) != len(verts) - 1 for v in verts):
            raise ValueError(f"expected n+1 vertices in Z^n, got {len(verts)} of length {len(verts[0]) if verts else 0}")
        if la.det(_edge_matrix(verts)) == 0:
            raise ValueError("vertices do not span a simplex")

    @property
    def n(self) -> int:
        return len(self.vertices) - 1

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    def __eq__(self, other):
        if isinstance(other, SimplexPolytope):
            return self.vertices == other.vertices
        if isinstance(other, (tuple, list)):
            return self.vertices == la.as_matrix(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"SimplexPolytope({[list(v) for v in self.vertices]})"

    def translate(self, t: Sequence[int]) -> SimplexPolytope:
        return SimplexPolytope(tuple(tuple(a + b for a, b in zip(v, t)) for v in self.vertices))

    def scale(self, k: int) -> SimplexPolytope:
        return SimplexPolytope(la.scale(self.vertices, k))


PolytopeLike = Union[SimplexPolytope, Sequence[Sequence[int]]]


def as_polytope(P: PolytopeLike) -> SimplexPolytope:
    return P if isinstance(P, SimplexPolytope) else SimplexPolytope(la.as_matrix(P))


def _edge_matrix(verts) -> la.Matrix:
    base = verts[0]
    return la.transpose([tuple(a - b for a, b in zip(v, base)) for v in verts[1:]])


@dataclass(frozen=True)
class WppDecomposition:
    pseudo_weights: tuple[int, ...]
    what: la.Matrix
    pseudo_fan: tuple[tuple[Fraction, ...], ...]
    polarization: int

    @property
    def admissible(self) -> bool:
        return all(x.denominator == 1 for x in self.pseudo_fan[0])


def polytope_matrix(P: PolytopeLike) -> la.Matrix:
    """Columns are the edge vectors P[i] - P[0], i = 1..n."""
    return _edge_matrix(as_polytope(P).vertices)


def matrix_polytope(W: Sequence[Sequence[int]]) -> SimplexPolytope:
    W = la.as_matrix(W)
    rows, cols = la.shape(W)
    if rows != cols:
        raise ValueError(f"expected a square matrix, got {rows} x {cols}")
    return SimplexPolytope(((0,) * rows,) + la.transpose(W))


def weighted_transverse(F: FanLike, m: int = 1) -> la.Matrix:
    """Integer matrix W with <v_k, w_j> = (m delta / q_j) [k == j] for k, j >= 1.

    Its columns, together with the origin, are the vertices of the polytope
    of (P(Q), O(m)) for the fan F; <v_0, w_j> = -m delta / q_0 follows.
    """
    if m < 1:
        raise ValueError("polarization must be a positive integer")
    F = as_fan(F)
    Q = fan_weights(F)
    scale_ = m * q_delta(Q)
    A_t = F.generators[1:]  # rows are v_1..v_n, i.e. the transpose of A
    inv = la.inverse(A_t)
    W = tuple(
        tuple(inv[i][j] * scale_ / Q[j + 1] for j in range(F.n))
        for i in range(F.n)
    )
    return la.to_integral(W)


def qpol_mat(Q: WeightsLike, m: int = 1) -> la.Matrix:
    return weighted_transverse(fan_from_weights(Q), m)


def polytope_from_fan(F: FanLike, m: int = 1) -> SimplexPolytope:
    return matrix_polytope(weighted_transverse(F, m))


def polytope_from_weights(Q: WeightsLike, m: int = 1) -> SimplexPolytope:
    return matrix_polytope(qpol_mat(Q, m))


def wpp_decompose(W1: Sequence[Sequence[int]]) -> WppDecomposition:
    W1 = la.as_matrix(W1)
    n = len(W1)
    if la.shape(W1) != (n, n):
        raise ValueError("wpp_decompose needs a square matrix")
    m = la.content(W1)
    if m == 0 or la.det(W1) == 0:
        raise SingularMatrixError("matrix is singular")
    W = la.exact_div(W1, m)
    sign = 1 if la.det(W) > 0 else -1
    M = la.scale(la.adjugate(W), sign)
    M1 = tuple(la.exact_div([row], la.content(row))[0] for row in M)
    IQ = la.matmul(M1, W)
    diag = [IQ[i][i] for i in range(n)]
    if any(IQ[i][j] for i in range(n) for j in range(n) if i != j) or min(diag) <= 0:
        raise InternalConsistencyError("M1 W is not a positive diagonal matrix")
    q0 = abs(la.det(M1))
    de_q = lcm(q0, *diag)
    tail = [de_q // d for d in diag]
    v0 = tuple(
        -Fraction(sum(t * row[k] for t, row in zip(tail, M1)), q0) for k in range(n)
    )
    pseudo_fan = (v0,) + tuple(tuple(Fraction(x) for x in row) for row in M1)
    return WppDecomposition(
        pseudo_weights=(q0, *tail),
        what=la.transpose(M1),
        pseudo_fan=pseudo_fan,
        polarization=m,
    )


def is_admissible_matrix(W: Sequence[Sequence[int]]) -> bool:
    return wpp_decompose(W).admissible


def _recognize(P: PolytopeLike) -> WppDecomposition:
    try:
        P = as_polytope(P)
    except ValueError:
        raise NotAdmissible() from None
    wpp = wpp_decompose(polytope_matrix(P))
    if not wpp.admissible:
        raise NotAdmissible()
    return wpp


def is_admissible_polytope(P: PolytopeLike) -> bool:
    try:
        _recognize(P)
    except NotAdmissible:
        return False
    return True


def polytope_weights(P: PolytopeLike) -> WeightsVector:
    q = _recognize(P).pseudo_weights
    try:
        return WeightsVector(q)
    except ValueError:
        raise NotAdmissible() from None


def polytope_fan(P: PolytopeLike) -> Fan:
    return Fan(la.to_integral(_recognize(P).pseudo_fan))


def polytope_polarization(P: PolytopeLike) -> int:
    return _recognize(P).polarization
