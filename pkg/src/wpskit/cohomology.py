"""Cohomology of O(m) and of twisted forms on P(Q) by lattice-point counting."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb
from typing import Union

from .errors import NegativeLevel
from .lattice import count_lattice_points, face_dimension_counts
from .polytope import polytope_from_weights
from .weights import WeightsLike, as_weights, is_gorenstein, q_delta, q_sum


class Reason(enum.Enum):
    NON_GORENSTEIN_NEGATIVE = "Unable to compute it: no Gorenstein case, please use hOmega"
    GORENSTEIN_GAP_RANGE = "Unable to compute it in this range. Please use hOmega"


@dataclass(frozen=True)
class Value:
    h: int


@dataclass(frozen=True)
class Indeterminate:
    reason: Reason


CohomologyAnswer = Union[Value, Indeterminate]


def _binomial(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0


def h_line_bundle(q: int, m: int, Q: WeightsLike, max_cells: int | None = None) -> CohomologyAnswer:
    """dim H^q(P(Q), O(m)).

    Non-negative twists count lattice points of the polytope of O(m); negative
    twists go through Serre duality, which needs Q Gorenstein.
    """
    if q < 0:
        raise NegativeLevel("Cohomology of negative level")
    Q = as_weights(Q)
    if m >= 0:
        if q != 0:
            return Value(0)
        if m == 0:
            return Value(1)
        return Value(count_lattice_points(polytope_from_weights(Q, m), max_cells=max_cells))
    if not is_gorenstein(Q):
        return Indeterminate(Reason.NON_GORENSTEIN_NEGATIVE)
    canonical = q_sum(Q) // q_delta(Q)
    if m <= -canonical:
        if q == Q.n:
            return h_line_bundle(0, -m - canonical, Q, max_cells)
        return Value(0)
    return Indeterminate(Reason.GORENSTEIN_GAP_RANGE)


def h_omega(q: int, p: int, m: int, Q: WeightsLike, max_cells: int | None = None) -> int:
    """dim H^q(P(Q), Omega^p(m)) from the face dimensions s(u) of lattice points u."""
    if q < 0:
        raise NegativeLevel("Cohomology of negative level")
    if p < 0:
        raise NegativeLevel("Cohomology of negative level differential forms")
    Q = as_weights(Q)
    n = Q.n
    if m == 0:
        return int(q == p)
    if m > 0:
        if q != 0:
            return 0
        faces = face_dimension_counts(polytope_from_weights(Q, m), max_cells)
        return sum(count * _binomial(s, p) for s, count in faces.items())
    if q != n:
        return 0
    faces = face_dimension_counts(polytope_from_weights(Q, -m), max_cells)
    return sum(count * _binomial(s, n - p) for s, count in faces.items())


def weighted_monomial_count(Q: WeightsLike, d: int, strict: bool = False) -> int:
    """Number of exponent vectors a with sum a_i q_i = d (a_i >= 1 if strict).

    Independent of any polytope code; used as an oracle for h_line_bundle.
    Uses the recurrence N_i(r) = N_{i-1}(r) + N_i(r - q_i), which counts
    the same exponent vectors as a nested loop over a_0, ..., a_n.
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    q = list(as_weights(Q))
    if strict:
        d -= sum(q)
        if d < 0:
            return 0
    ways = [1] + [0] * d
    for qi in q:
        for r in range(qi, d + 1):
            ways[r] += ways[r - qi]
    return ways[d]
