"""Lattice points of simplices.

Membership uses the half-space system of the simplex: n+1 integer normals
built from the adjugate of the edge matrix, one per facet. Enumeration
walks the integer points in lexicographic order. At each depth the range of
the next coordinate comes from the projection of the simplex onto the
leading coordinates, computed once per call by Fourier-Motzkin
elimination with non-facet inequalities dropped. Scanning the full
bounding box would give the same points in the same order, only slower.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import ceil, floor, gcd, prod
from typing import Iterator, Sequence, Union

from . import exact_linalg as la
from .errors import EnumerationBudgetExceeded
from .polytope import PolytopeLike, SimplexPolytope, as_polytope, polytope_matrix

Point = tuple


@dataclass(frozen=True)
class HalfSpaceSystem:
    """x is in the simplex iff <normals[i], x> >= offsets[i] for every i.

    normals[0] is the facet opposite the base vertex P[0]; normals[i] for
    i >= 1 is the facet through P[0] opposite P[i].
    """

    normals: la.Matrix
    offsets: tuple[int, ...]

    def evaluate(self, x: Sequence) -> tuple:
        return tuple(
            sum(a * b for a, b in zip(nv, x)) - off for nv, off in zip(self.normals, self.offsets)
        )


@dataclass(frozen=True)
class FaceDim:
    k: int


@dataclass(frozen=True)
class Outside:
    pass


FacePosition = Union[FaceDim, Outside]


def half_space_system(P: PolytopeLike) -> HalfSpaceSystem:
    P = as_polytope(P)
    M = polytope_matrix(P)
    sign = 1 if la.det(M) > 0 else -1
    A = la.scale(la.adjugate(M), sign)
    first = tuple(-sum(col) for col in zip(*A))
    normals = (first,) + A
    base, second = P.vertices[0], P.vertices[1]
    offsets = (sum(a * b for a, b in zip(first, second)),) + tuple(
        sum(a * b for a, b in zip(row, base)) for row in A
    )
    return HalfSpaceSystem(normals=normals, offsets=offsets)


def bounding_box(P: Sequence[Sequence]) -> tuple[tuple, tuple]:
    """Coordinatewise minimum and maximum over the vertices."""
    cols = list(zip(*P))
    return tuple(min(c) for c in cols), tuple(max(c) for c in cols)


def box_cells(P: Sequence[Sequence]) -> int:
    lo, hi = bounding_box(P)
    return prod(max(0, floor(b) - ceil(a) + 1) for a, b in zip(lo, hi))


def reduced_polytope(P: Sequence[Sequence[int]]):
    """Divide all vertices by the gcd of all their coordinates."""
    verts = P.vertices if isinstance(P, SimplexPolytope) else la.as_matrix(P)
    g = la.content(verts)
    if g == 0:
        raise ValueError("all coordinates are zero")
    out = la.exact_div(verts, g)
    return SimplexPolytope(out) if isinstance(P, SimplexPolytope) else out


def _checked_point(x: Sequence, n: int) -> tuple:
    if len(x) != n:
        raise ValueError(f"point of dimension {len(x)} for a polytope in dimension {n}")
    return tuple(Fraction(c) for c in x)


def contains(x: Sequence, P: PolytopeLike) -> bool:
    P = as_polytope(P)
    return all(v >= 0 for v in half_space_system(P).evaluate(_checked_point(x, P.n)))


def contains_strictly(x: Sequence, P: PolytopeLike) -> bool:
    P = as_polytope(P)
    return all(v > 0 for v in half_space_system(P).evaluate(_checked_point(x, P.n)))


def face_dimension(x: Sequence, P: PolytopeLike) -> FacePosition:
    """Dimension of the smallest face containing x, or Outside."""
    P = as_polytope(P)
    values = half_space_system(P).evaluate(_checked_point(x, P.n))
    if any(v < 0 for v in values):
        return Outside()
    return FaceDim(P.n - sum(1 for v in values if v == 0))


# ------------------------------------------------------------------ slicing

Ineq = tuple[tuple[int, ...], int]  # (a, b) meaning a.x >= b


def _normalize(a: Sequence[int], b: int) -> Ineq:
    g = reduce(gcd, a, 0)
    if g == 0:
        return tuple(a), b
    # rounding b up is exact for integer points
    return tuple(x // g for x in a), -((-b) // g)


def _affine_rank(points: Sequence[Sequence[int]]) -> int:
    if len(points) <= 1:
        return 0
    base = points[0]
    rows = [[Fraction(a - b) for a, b in zip(p, base)] for p in points[1:]]
    rank, cols = 0, len(base)
    for c in range(cols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(rank + 1, len(rows)):
            if rows[i][c]:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _facets_only(ineqs: Sequence[Ineq], verts: Sequence[Sequence[int]]) -> list[Ineq]:
    """Keep the inequalities that define facets of conv(verts)."""
    dim = len(verts[0])
    keep = []
    for a, b in dict.fromkeys(ineqs):
        tight = [v for v in verts if sum(x * y for x, y in zip(a, v)) == b]
        if _affine_rank(tight) == dim - 1:
            keep.append((a, b))
    return keep


def _projections(system: HalfSpaceSystem, verts: Sequence[Sequence[int]]) -> list[list[Ineq]]:
    """levels[k] describes the projection onto coordinates 0..k."""
    n = len(verts[0])
    level = [_normalize(a, b) for a, b in zip(system.normals, system.offsets)]
    levels = [level]
    for k in range(n - 1, 0, -1):
        pos = [c for c in level if c[0][k] > 0]
        neg = [c for c in level if c[0][k] < 0]
        new = [(a[:k], b) for a, b in level if a[k] == 0]
        for (ap, bp), (an, bn) in ((p, q) for p in pos for q in neg):
            cp, cn = ap[k], -an[k]
            a = tuple(cn * x + cp * y for x, y in zip(ap[:k], an[:k]))
            new.append(_normalize(a, cn * bp + cp * bn))
        level = _facets_only(new, [v[:k] for v in verts])
        levels.append(level)
    return levels[::-1]


def _coordinate_range(ineqs: Sequence[Ineq], prefix: Sequence[int], k: int) -> tuple[int, int]:
    lo, hi = None, None
    for a, b in ineqs:
        s = b - sum(x * y for x, y in zip(a, prefix))
        c = a[k]
        if c > 0:
            bound = -((-s) // c)
            lo = bound if lo is None or bound > lo else lo
        elif c < 0:
            bound = s // c
            hi = bound if hi is None or bound < hi else hi
        elif s > 0:
            return 1, 0
    return lo, hi


def _prefixes(levels: list[list[Ineq]], n: int) -> Iterator[tuple[int, ...]]:
    """Integer points of the projection onto coordinates 0..n-2, in lex order."""
    if n == 1:
        yield ()
        return

    def walk(prefix: tuple[int, ...]):
        k = len(prefix)
        lo, hi = _coordinate_range(levels[k], prefix, k)
        for x in range(lo, hi + 1):
            if k == n - 2:
                yield prefix + (x,)
            else:
                yield from walk(prefix + (x,))

    yield from walk(())


def _last_ranges(P: SimplexPolytope, shift: int) -> Iterator[tuple[tuple[int, ...], int, int]]:
    system = half_space_system(P)
    levels = _projections(system, P.vertices)
    n = P.n
    last = [(a, b + shift) for a, b in zip(system.normals, system.offsets)]
    for prefix in _prefixes(levels, n):
        lo, hi = _coordinate_range(last, prefix, n - 1)
        if lo <= hi:
            yield prefix, lo, hi


def _guard(P: SimplexPolytope, max_cells: int | None) -> None:
    if max_cells is not None:
        cells = box_cells(P.vertices)
        if cells > max_cells:
            raise EnumerationBudgetExceeded(cells, max_cells)


def _enumerate(P: PolytopeLike, shift: int, max_cells: int | None) -> tuple[int, list[Point]]:
    P = as_polytope(P)
    _guard(P, max_cells)
    points = [
        prefix + (t,) for prefix, lo, hi in _last_ranges(P, shift) for t in range(lo, hi + 1)
    ]
    return len(points), points


def enumerate_lattice_points(P: PolytopeLike, max_cells: int | None = None) -> tuple[int, list[Point]]:
    """All integer points of P in lexicographic order, with their count."""
    return _enumerate(P, 0, max_cells)


def enumerate_interior_points(P: PolytopeLike, max_cells: int | None = None) -> tuple[int, list[Point]]:
    """Integer points strictly inside P, in lexicographic order."""
    # at integer points every evaluation is an integer, so > 0 means >= 1
    return _enumerate(P, 1, max_cells)


# ---------------------------------------------------------------- counting


def _longest_edge_vertical(P: SimplexPolytope) -> SimplexPolytope:
    """Unimodular image of P whose longest lattice edge is parallel to the last axis.

    Long vertical fibres keep the number of prefixes small relative to the
    number of points; counts and face dimensions are unchanged.
    """
    verts = P.vertices
    if P.n == 1:
        return P
    edges = (tuple(a - b for a, b in zip(verts[j], verts[i])) for i, j in combinations(range(len(verts)), 2))
    e = max(edges, key=lambda v: la.content(v))
    g = la.content(e)
    _, U = la.hnf_row([[x // g] for x in e])
    U = U[1:] + U[:1]
    return SimplexPolytope(tuple(la.matvec(U, v) for v in verts))


def normalized_for_counting(P: PolytopeLike) -> SimplexPolytope:
    P = as_polytope(P)
    image = _longest_edge_vertical(P)
    base = image.vertices[0]
    return image.translate([-x for x in base])


def count_lattice_points(P: PolytopeLike, interior: bool = False, max_cells: int | None = None) -> int:
    P = normalized_for_counting(P)
    _guard(P, max_cells)
    return sum(hi - lo + 1 for _, lo, hi in _last_ranges(P, int(interior)))


def face_dimension_counts(P: PolytopeLike, max_cells: int | None = None) -> dict[int, int]:
    """Number of lattice points of P whose smallest face has dimension k, for each k."""
    P = normalized_for_counting(P)
    _guard(P, max_cells)
    system = half_space_system(P)
    n = P.n
    hist: Counter = Counter()
    for prefix, lo, hi in _last_ranges(P, 0):
        zeros_everywhere = 0
        special: Counter = Counter()
        for a, off in zip(system.normals, system.offsets):
            c = sum(x * y for x, y in zip(a, prefix)) - off
            slope = a[n - 1]
            if slope == 0:
                zeros_everywhere += c == 0
            elif c % slope == 0 and lo <= -c // slope <= hi:
                special[-c // slope] += 1
        hist[n - zeros_everywhere] += hi - lo + 1 - len(special)
        for extra in special.values():
            hist[n - zeros_everywhere - extra] += 1
    return {k: hist[k] for k in sorted(hist) if hist[k]}
