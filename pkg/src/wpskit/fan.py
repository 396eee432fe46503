"""Fans of weighted projective spaces.

A fan is stored by its ordered 1-skeleton: n+1 integer generators
v_0, ..., v_n in Z^n. The fan matrix has these generators as columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Sequence, Union

from . import exact_linalg as la
from .errors import NotAWpsFan
from .weights import WeightsLike, WeightsVector, as_weights


@dataclass(frozen=True)
class Fan:
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        gens = la.as_matrix(self.generators)
        object.__setattr__(self, "generators", gens)
        if len(gens) < 2:
            raise ValueError("a fan needs at least two generators")
        if any(len(v) != len(gens) - 1 for v in gens):
            raise ValueError(f"expected {len(gens)} generators of length {len(gens) - 1}")

    @property
    def n(self) -> int:
        return len(self.generators) - 1

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __getitem__(self, i):
        return self.generators[i]

    def __eq__(self, other):
        if isinstance(other, Fan):
            return self.generators == other.generators
        if isinstance(other, (tuple, list)):
            return self.generators == la.as_matrix(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return f"Fan({[list(v) for v in self.generators]})"


FanLike = Union[Fan, Sequence[Sequence[int]]]


def as_fan(F: FanLike) -> Fan:
    return F if isinstance(F, Fan) else Fan(la.as_matrix(F))


def fan_matrix(F: FanLike) -> la.Matrix:
    return la.transpose(as_fan(F).generators)


def matrix_fan(V: Sequence[Sequence[int]]) -> Fan:
    V = la.as_matrix(V)
    rows, cols = la.shape(V)
    if cols != rows + 1:
        raise ValueError(f"a fan matrix is n x (n+1), got {rows} x {cols}")
    return Fan(la.transpose(V))


def fan_from_weights(Q: WeightsLike) -> Fan:
    """Fan of P(Q) read off the unimodular transform reducing Q^T.

    Rows 1..n of U span the integer kernel of Q; their columns are
    generators with sum q_i v_i = 0.
    """
    Q = as_weights(Q)
    _, U = la.hnf_row([[q] for q in Q])
    return matrix_fan(U[1:])


def canonical_fan(Q: WeightsLike) -> Fan:
    """Deterministic fan of P(Q): rotate Q, take the kernel block, reduce
    it to Hermite normal form, and move the last generator to the front."""
    Q = as_weights(Q)
    rotated = Q.q[1:] + Q.q[:1]
    _, U = la.hnf_row([[q] for q in rotated])
    H, _ = la.hnf_row(U[1:])
    gens = la.transpose(H)
    return Fan(gens[-1:] + gens[:-1])


def reduced_fan(F: FanLike) -> Fan:
    """Make every generator primitive, keeping the order."""
    out = []
    for v in as_fan(F):
        g = reduce(gcd, v, 0)
        if g == 0:
            raise ValueError("zero generator")
        out.append(tuple(x // g for x in v))
    return Fan(tuple(out))


def generator_contents(F: FanLike) -> tuple[int, ...]:
    """gcd of the entries of each generator."""
    return tuple(reduce(gcd, v, 0) for v in as_fan(F))


def _signed_minors(F: Fan) -> tuple[int, ...]:
    return la.maximal_minors(fan_matrix(F))


def is_wps_fan(V: FanLike) -> bool:
    F = as_fan(V)
    ss = _signed_minors(F)
    tt = [abs(s) for s in ss]
    if 0 in tt or reduce(gcd, tt) != 1:
        return False
    return all(sum(t * v[k] for t, v in zip(tt, F)) == 0 for k in range(F.n))


def fan_weights(V: FanLike) -> WeightsVector:
    """Weights Q with sum q_i v_i = 0 (absolute maximal minors)."""
    F = as_fan(V)
    if not is_wps_fan(F):
        raise NotAWpsFan()
    return WeightsVector(tuple(abs(s) for s in _signed_minors(F)))


def is_fan_of(V: FanLike, Q: WeightsLike) -> bool:
    """True iff V is a fan of P(Q), comparing weights as multisets."""
    return sorted(fan_weights(V)) == sorted(as_weights(Q))
