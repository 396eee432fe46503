"""Equivalence of fans and polytopes, with explicit switching transforms."""

from __future__ import annotations

from dataclasses import dataclass

from . import exact_linalg as la
from .errors import InternalConsistencyError, NotAdmissible, NotAWpsFan, NotEquivalent
from .fan import FanLike, as_fan, fan_matrix, fan_weights, generator_contents, reduced_fan
from .polytope import (
    PolytopeLike,
    as_polytope,
    polytope_fan,
    polytope_polarization,
    polytope_weights,
)
from .weights import WeightsVector, reduced_weights


@dataclass(frozen=True)
class FanSwitchData:
    """gamma @ V(red f2) @ delta == V(red f1); V(f) == V(red f) @ alpha (beta for f2)."""

    alpha: la.Matrix
    beta: la.Matrix
    gamma: la.Matrix
    delta: la.Matrix
    sigma: la.Permutation


@dataclass(frozen=True)
class PolytopeSwitchData:
    """theta @ CP2 @ delta + nu == CP1, with CPi the vertices of pi as columns."""

    theta: la.Matrix
    delta: la.Matrix
    nu: tuple[int, ...]


def _diag(values) -> la.Matrix:
    k = len(values)
    return tuple(tuple(values[i] if i == j else 0 for j in range(k)) for i in range(k))


def _weights_or(F: FanLike, message: str) -> WeightsVector:
    try:
        return fan_weights(F)
    except (NotAWpsFan, ValueError):
        raise NotAWpsFan(message) from None


def _reduced_pair(f1: FanLike, f2: FanLike) -> tuple[WeightsVector, WeightsVector]:
    rw1 = reduced_weights(_weights_or(f1, "The first one is not a fan of a WPS"))
    rw2 = reduced_weights(_weights_or(f2, "The second one is not a fan of a WPS"))
    return rw1, rw2


def are_equivalent_fans(f1: FanLike, f2: FanLike) -> bool:
    """True iff both fans define the same wps (equal reduced weights up to order)."""
    rw1, rw2 = _reduced_pair(f1, f2)
    return sorted(rw1) == sorted(rw2)


def fan_switch_matrices(f1: FanLike, f2: FanLike) -> FanSwitchData:
    rw1, rw2 = _reduced_pair(f1, f2)
    if sorted(rw1) != sorted(rw2):
        raise NotEquivalent("The two fans are not equivalent")
    f1, f2 = as_fan(f1), as_fan(f2)
    sigma = la.perm_match(rw1.q, rw2.q)
    delta = la.perm_matrix(len(sigma), sigma)
    V1 = fan_matrix(reduced_fan(f1))
    V2 = fan_matrix(reduced_fan(f2))
    Z1 = la.delete_column(V1, 0)
    Z2 = la.delete_column(la.matmul(V2, delta), 0)
    gamma = la.to_integral(la.matmul(Z1, la.inverse(Z2)))
    if la.matmul(la.matmul(gamma, V2), delta) != V1:
        raise InternalConsistencyError("switch matrices do not map the second fan onto the first")
    return FanSwitchData(
        alpha=_diag(generator_contents(f1)),
        beta=_diag(generator_contents(f2)),
        gamma=gamma,
        delta=delta,
        sigma=sigma,
    )


def _recognized(P: PolytopeLike, message: str) -> tuple[list[int], int]:
    try:
        return sorted(polytope_weights(P)), polytope_polarization(P)
    except NotAdmissible:
        raise NotAdmissible(message) from None


def are_equivalent_polytopes(p1: PolytopeLike, p2: PolytopeLike) -> bool:
    """Same polarized wps: equal weights up to order and equal polarization."""
    r1 = _recognized(p1, "The first one is not admissible")
    r2 = _recognized(p2, "The second one is not admissible")
    return r1 == r2


def polytope_switch_data(p1: PolytopeLike, p2: PolytopeLike) -> PolytopeSwitchData:
    if not are_equivalent_polytopes(p1, p2):
        raise NotEquivalent("The two polytopes are not equivalent")
    p1, p2 = as_polytope(p1), as_polytope(p2)
    fan_data = fan_switch_matrices(polytope_fan(p1), polytope_fan(p2))
    theta = la.to_integral(la.inverse(la.transpose(fan_data.gamma)))
    delta = fan_data.delta
    moved = la.matmul(la.matmul(theta, la.transpose(p2.vertices)), delta)
    nu = tuple(a - row[0] for a, row in zip(p1.vertices[0], moved))
    shifted = tuple(tuple(x + t for x in row) for row, t in zip(moved, nu))
    if shifted != la.transpose(p1.vertices):
        raise InternalConsistencyError("switch data do not map the second polytope onto the first")
    return PolytopeSwitchData(theta=theta, delta=delta, nu=nu)
