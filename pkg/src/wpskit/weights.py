"""Weights vectors, their reduction and the Gorenstein predicate."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterator, Sequence, Union

from .errors import InvalidWeights


@dataclass(frozen=True)
class WeightsVector:
    """Coprime positive integers (q0, ..., qn) with n >= 1."""

    q: tuple[int, ...]

    def __post_init__(self):
        q = tuple(self.q)
        object.__setattr__(self, "q", q)
        if len(q) < 2:
            raise InvalidWeights("a weights vector needs at least two entries")
        if any(isinstance(x, bool) or not isinstance(x, int) for x in q):
            raise InvalidWeights(f"weights must be integers, got {q}")
        if min(q) < 1:
            raise InvalidWeights(f"weights must be positive, got {q}")
        if reduce(gcd, q) != 1:
            raise InvalidWeights(f"weights must be coprime, got {q}")

    @property
    def n(self) -> int:
        """Dimension of P(Q)."""
        return len(self.q) - 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.q)

    def __len__(self) -> int:
        return len(self.q)

    def __getitem__(self, i):
        return self.q[i]

    def __eq__(self, other):
        if isinstance(other, WeightsVector):
            return self.q == other.q
        if isinstance(other, (tuple, list)):
            return self.q == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.q)

    def __repr__(self):
        return f"WeightsVector({list(self.q)})"


WeightsLike = Union[WeightsVector, Sequence[int]]


def as_weights(Q: WeightsLike) -> WeightsVector:
    return Q if isinstance(Q, WeightsVector) else WeightsVector(tuple(Q))


def reduced_weights(Q: WeightsLike) -> WeightsVector:
    """Reduction q_i / a_i, where a_i = lcm of the d_j (j != i) and
    d_j = gcd of all weights but q_j."""
    q = as_weights(Q).q
    d = [reduce(gcd, q[:i] + q[i + 1:]) for i in range(len(q))]
    a = [lcm(*(d[:i] + d[i + 1:])) for i in range(len(q))]
    return WeightsVector(tuple(qi // ai for qi, ai in zip(q, a)))


def q_sum(Q: WeightsLike) -> int:
    return sum(as_weights(Q))


def q_delta(Q: WeightsLike) -> int:
    return lcm(*as_weights(Q))


def gorenstein_index(Q: WeightsLike) -> Fraction:
    return Fraction(q_sum(Q), q_delta(Q))


def is_gorenstein(Q: WeightsLike) -> bool:
    # Gorenstein and Fano coincide for weighted projective spaces
    return gorenstein_index(Q).denominator == 1


is_fano = is_gorenstein
