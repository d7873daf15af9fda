"""Projective spaces PG(n,3) as fully enumerable incidence structures.

A point is a nonzero coordinate tuple over GF(3), stored in canonical form:
the first nonzero coordinate equals 1, so every point has exactly one stored
representative and sets of points compare by value.  Hyperplanes use the same
canonical tuples read as dual coordinates; a point lies on a hyperplane iff
the dot product vanishes.  Flats are canonical rref bases, collineations are
invertible matrices acting on row vectors (x -> x * M), identified up to
scalar by normalizing the first nonzero entry in row-major order to 1.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Sequence

from . import gf3
from .gf3 import Matrix, Vector

Point = Vector
Hyperplane = Vector
Flat = Matrix          # nonzero rref rows; projective dimension = len - 1
Collineation = Matrix


def canonical_point(v: Sequence[int]) -> Point:
    w = gf3.vec(v)
    lead = next((x for x in w if x), None)
    if lead is None:
        raise ValueError("zero vector has no projective point")
    return w if lead == 1 else gf3.vec_scale(2, w)


def format_point(p: Sequence[int]) -> str:
    return ":".join(str(x) for x in p)


def parse_point(text: str) -> Point:
    sep = ":" if ":" in text else ","
    return canonical_point(int(t) for t in text.split(sep))


@lru_cache(maxsize=None)
def enumerate_points(n: int) -> tuple[Point, ...]:
    """All (3^(n+1)-1)/2 canonical points of PG(n,3), in lexicographic order."""
    pts = [
        v
        for v in itertools.product((0, 1, 2), repeat=n + 1)
        if next((x for x in v if x), None) == 1
    ]
    return tuple(pts)


def enumerate_hyperplanes(n: int) -> tuple[Hyperplane, ...]:
    return enumerate_points(n)


def incident(p: Sequence[int], h: Sequence[int]) -> bool:
    return gf3.dot(p, h) == 0


@lru_cache(maxsize=None)
def point_index(n: int) -> dict[Point, int]:
    return {p: i for i, p in enumerate(enumerate_points(n))}


@lru_cache(maxsize=None)
def hyperplane_point_masks(n: int) -> tuple[int, ...]:
    """For each hyperplane (enumeration order), the incident points as a bitmask
    over point indices.  Backs all the 364-prime scans."""
    points = enumerate_points(n)
    masks = []
    for h in enumerate_hyperplanes(n):
        m = 0
        for i, p in enumerate(points):
            if gf3.dot(p, h) == 0:
                m |= 1 << i
        masks.append(m)
    return tuple(masks)


def points_mask(n: int, pts: Iterable[Point]) -> int:
    idx = point_index(n)
    m = 0
    for p in pts:
        m |= 1 << idx[p]
    return m


def line_through(a: Point, b: Point) -> tuple[Point, ...]:
    """The 4 points of the line through a and b, sorted canonically."""
    if len(a) != len(b):
        raise ValueError("points from different spaces")
    a = canonical_point(a)
    b = canonical_point(b)
    if a == b:
        raise ValueError("need two distinct points")
    pts = [a, b,
           canonical_point(gf3.vec_add(a, b)),
           canonical_point(gf3.vec_add(a, gf3.vec_scale(2, b)))]
    return tuple(sorted(pts))


def span(points: Iterable[Sequence[int]]) -> Flat:
    rows = gf3.mat(list(points))
    if not rows:
        raise ValueError("span of the empty set is undefined")
    return gf3.row_basis(rows)


def flat_dim(f: Flat) -> int:
    return len(f) - 1


def flat_contains(f: Flat, p: Sequence[int]) -> bool:
    """Membership via the pivot trick: rref basis rows have unit pivot columns,
    so the candidate coefficients are read off directly."""
    ncols = len(p)
    pivots = [next(c for c in range(ncols) if row[c]) for row in f]
    coeffs = [p[c] for c in pivots]
    combo = [0] * ncols
    for c, row in zip(coeffs, f):
        for j in range(ncols):
            combo[j] = (combo[j] + c * row[j]) % 3
    return tuple(combo) == tuple(x % 3 for x in p)


def flat_coordinates(f: Flat, p: Sequence[int]) -> Point:
    """Coefficients of a flat point w.r.t. the rref basis, as a canonical
    point of the coefficient space."""
    if not flat_contains(f, p):
        raise ValueError("point is not in the flat")
    ncols = len(p)
    pivots = [next(c for c in range(ncols) if row[c]) for row in f]
    return canonical_point(tuple(p[c] for c in pivots))


def flat_points(f: Flat) -> tuple[Point, ...]:
    """All canonical points of a flat, ordered by coefficient enumeration."""
    k = len(f)
    out = []
    for coeff in enumerate_points(k - 1):
        v = [0] * len(f[0])
        for c, row in zip(coeff, f):
            for j in range(len(v)):
                v[j] = (v[j] + c * row[j]) % 3
        out.append(canonical_point(v))
    return tuple(out)


def dual_basis(f: Flat) -> Matrix:
    """Hyperplane coordinates cutting out the flat."""
    return tuple(gf3.nullspace(f))


def flat_from_dual(constraints: Iterable[Sequence[int]]) -> Flat:
    stacked = gf3.mat(list(constraints))
    return gf3.row_basis(gf3.mat(gf3.nullspace(stacked)))


def meet(f: Flat, g: Flat) -> Flat:
    """Intersection of flats, via the union of their dual constraints."""
    return flat_from_dual(dual_basis(f) + dual_basis(g))


def canonical_collineation(m: Matrix) -> Collineation:
    flat = [x for row in m for x in row]
    lead = next((x for x in flat if x), None)
    if lead is None:
        raise ValueError("zero matrix is not a collineation")
    return m if lead == 1 else tuple(gf3.vec_scale(2, row) for row in m)


def collineation(rows: Iterable[Iterable[int]]) -> Collineation:
    m = gf3.mat(rows)
    if gf3.rank(m) != len(m):
        raise ValueError("collineation matrix must be invertible")
    return canonical_collineation(m)


def apply_collineation(c: Collineation, p: Sequence[int]) -> Point:
    return canonical_point(gf3.vec_mat(p, c))


def compose(a: Collineation, b: Collineation) -> Collineation:
    """Apply a, then b (row-vector convention: x * (a b) = (x * a) * b)."""
    return canonical_collineation(gf3.mat_mul(a, b))


def inverse(c: Collineation) -> Collineation:
    return canonical_collineation(gf3.mat_inv(c))


def perspectivity(
    centre: Point, axis: Hyperplane, pair: tuple[Point, Point]
) -> Collineation:
    """The unique collineation fixing `axis` pointwise and `centre` linewise
    that maps pair[0] to pair[1].

    Built from the one-parameter family I + t * axis^T centre, which is every
    central collineation with this centre and axis (elation when the centre
    lies on the axis, homology otherwise).  The pair must be collinear with
    the centre, with pair[0] off the axis and distinct from the centre.
    """
    centre = canonical_point(centre)
    axis = canonical_point(axis)
    x, y = canonical_point(pair[0]), canonical_point(pair[1])
    if gf3.dot(x, axis) == 0:
        raise ValueError("pair[0] lies on the axis")
    if x == centre:
        raise ValueError("pair[0] equals the centre")
    if y != x and y not in line_through(centre, x):
        raise ValueError("centre, pair[0], pair[1] are not collinear")
    n = len(centre)
    for t in (0, 1, 2):
        m = tuple(
            tuple((int(i == j) + t * axis[i] * centre[j]) % 3 for j in range(n))
            for i in range(n)
        )
        if gf3.rank(m) == n and apply_collineation(m, x) == y:
            return canonical_collineation(m)
    raise ValueError("no central collineation maps pair[0] to pair[1]")
