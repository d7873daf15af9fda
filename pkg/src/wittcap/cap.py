"""The 12-cap of internal points and its Witt design structure.

Fix a surface point P.  The four conics through P carry 3 internal points
each, and those 12 points form a cap: no three collinear, disjoint from the
surface.  Its 6-point hyperplane sections are the blocks of a 5-(12,6,1)
design, exactly 12 of the 364 primes miss the cap entirely, and those 12
primes are the 9 osculating primes along conics avoiding P together with the
3 primes meeting the surface in P alone.

For the default base point (1,0,0,0,0,0) the cap also has a closed-form
parametrization on PG(2,3) minus one point:

    (x0, x1, x2)  ->  (x0^2 + 1, x0 x1, x0 x2, x1^2, x1 x2, x2^2)

The constant term is unambiguous because 1 is the only nonzero square in
GF(3).  Both routes are implemented and must agree point for point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import gf3, pg
from .pg import Hyperplane, Point
from .veronese import VeroneseModel, classify_conic_plane, veronese_map

DEFAULT_BASE_PREIMAGE: Point = (1, 0, 0)


@dataclass(frozen=True)
class CapSet:
    points: frozenset[Point]
    base_point: Point
    origin: str  # "conics" (union of internal triples) or "formula"


@dataclass(frozen=True)
class DualCap:
    primes: frozenset[Hyperplane]


@dataclass(frozen=True)
class Block:
    points: frozenset[Point]
    prime: Hyperplane


@dataclass(frozen=True)
class Design:
    points: tuple[Point, ...]
    blocks: tuple[Block, ...]


@dataclass(frozen=True)
class WittReport:
    ok: bool
    point_count: int
    block_count: int
    block_sizes_ok: bool
    five_cover_unique: bool
    first_violation: tuple[tuple[Point, ...], int] | None
    quad_cover_value: int | None
    quad_cover_constant: bool


def internal_partner(model: VeroneseModel, base: Point, y: Point) -> Point:
    """The unique internal point of the conic through base and y that is
    collinear with both.  Each bisecant of an order-3 conic carries exactly
    one internal point, so this is well defined."""
    if not model.is_surface_point(y) or y == base:
        raise ValueError("need a surface point distinct from the base")
    conic = model.conic_through(base, y)
    internal = classify_conic_plane(conic).internal
    hits = [p for p in pg.line_through(base, y) if p in internal]
    assert len(hits) == 1
    return hits[0]


def cap_map(x: Sequence[int]) -> Point:
    """Closed-form cap parametrization for the default base point.

    Defined on PG(2,3) minus (1,0,0); raises off the domain.
    """
    x = pg.canonical_point(x)
    if x == DEFAULT_BASE_PREIMAGE:
        raise ValueError("outside domain: the removed point of the dual affine plane")
    x0, x1, x2 = x
    return pg.canonical_point(
        (x0 * x0 + 1, x0 * x1, x0 * x2, x1 * x1, x1 * x2, x2 * x2)
    )


def cap_domain() -> tuple[Point, ...]:
    """The dual affine plane parametrizing the cap, in lexicographic order."""
    return tuple(x for x in pg.enumerate_points(2) if x != DEFAULT_BASE_PREIMAGE)


def build_cap(model: VeroneseModel, base: Point) -> CapSet:
    """The cap as the union of the internal triples of the four conics
    through the base point."""
    if not model.is_surface_point(base):
        raise ValueError("base must be a surface point")
    pts: set[Point] = set()
    for conic in model.conics_through(base):
        pts |= classify_conic_plane(conic).internal
    return CapSet(points=frozenset(pts), base_point=base, origin="conics")


def build_cap_from_formula(model: VeroneseModel) -> CapSet:
    """The same cap via the closed-form parametrization (default base)."""
    base = veronese_map(DEFAULT_BASE_PREIMAGE)
    return CapSet(
        points=frozenset(cap_map(x) for x in cap_domain()),
        base_point=base,
        origin="formula",
    )


def build_dual_cap(model: VeroneseModel, base: Point) -> DualCap:
    """The 12 primes dual to the cap: the 9 osculating primes along conics
    missing the base plus the 3 primes meeting the surface in the base only
    (found by exhaustive scan)."""
    if not model.is_surface_point(base):
        raise ValueError("base must be a surface point")
    primes = {
        model.osculating_primes[c] for c in model.conics if base not in c.points
    }
    surface = set(model.points)
    for h in pg.enumerate_hyperplanes(5):
        if all((p == base) == pg.incident(p, h) for p in surface):
            primes.add(h)
    return DualCap(primes=frozenset(primes))


def _point_set(cap: CapSet | Iterable[Point]) -> frozenset[Point]:
    return cap.points if isinstance(cap, CapSet) else frozenset(cap)


def blocks(cap: CapSet | Iterable[Point]) -> Design:
    """All 6-point hyperplane sections of a 12-point set, with carriers."""
    pts = sorted(_point_set(cap))
    mask = pg.points_mask(5, pts)
    out = []
    for h, hmask in zip(pg.enumerate_hyperplanes(5), pg.hyperplane_point_masks(5)):
        if (hmask & mask).bit_count() == 6:
            section = frozenset(p for p in pts if pg.incident(p, h))
            out.append(Block(points=section, prime=h))
    return Design(points=tuple(pts), blocks=tuple(out))


def empty_prime_count(cap: CapSet | Iterable[Point]) -> int:
    mask = pg.points_mask(5, _point_set(cap))
    return sum(1 for hmask in pg.hyperplane_point_masks(5) if not (hmask & mask))


def missed_primes(cap: CapSet | Iterable[Point]) -> tuple[Hyperplane, ...]:
    """The primes carrying no point of the set, in enumeration order."""
    mask = pg.points_mask(5, _point_set(cap))
    return tuple(
        h
        for h, hmask in zip(pg.enumerate_hyperplanes(5), pg.hyperplane_point_masks(5))
        if not (hmask & mask)
    )


def is_cap(points: Iterable[Point]) -> bool:
    """No three of the points collinear."""
    pts = sorted(points)
    for a, b, c in itertools.combinations(pts, 3):
        if c in pg.line_through(a, b):
            return False
    return True


def verify_witt(design: Design) -> WittReport:
    """Check the 5-(12,6,1) axioms by full enumeration of the 792 5-subsets.

    Also reports the 4-subset covering number, which must be constant.  The
    first violating 5-subset (with its cover count) is recorded on failure.
    """
    pts = design.points
    point_pos = {p: i for i, p in enumerate(pts)}
    block_masks = []
    sizes_ok = True
    for b in design.blocks:
        if len(b.points) != 6:
            sizes_ok = False
        block_masks.append(sum(1 << point_pos[p] for p in b.points))
    five_ok = True
    violation = None
    for sub in itertools.combinations(range(len(pts)), 5):
        smask = sum(1 << i for i in sub)
        cover = sum(1 for bm in block_masks if smask & bm == smask)
        if cover != 1:
            five_ok = False
            violation = (tuple(pts[i] for i in sub), cover)
            break
    quad_counts = set()
    if five_ok:
        for sub in itertools.combinations(range(len(pts)), 4):
            smask = sum(1 << i for i in sub)
            quad_counts.add(sum(1 for bm in block_masks if smask & bm == smask))
    quad_constant = len(quad_counts) == 1
    ok = len(pts) == 12 and sizes_ok and five_ok
    return WittReport(
        ok=ok,
        point_count=len(pts),
        block_count=len(design.blocks),
        block_sizes_ok=sizes_ok,
        five_cover_unique=five_ok,
        first_violation=violation,
        quad_cover_value=quad_counts.pop() if quad_constant else None,
        quad_cover_constant=quad_constant,
    )


def disjointness_check(cap: CapSet, dual: DualCap) -> bool:
    """True iff no cap point lies on any dual-cap prime."""
    return not any(
        pg.incident(p, h) for p in cap.points for h in dual.primes
    )


def vector_identity_check() -> bool:
    """Exhaustively verify the two identities behind the parametrization.

    For each direction (x1,x2) != (0,0) the conic through the base is spanned
    by v_u = (u^2, u x1, u x2, x1^2, x1 x2, x2^2) and v_inf = (1,0,0,0,0,0),
    and v_u + v_inf = 2 v_{u+1} + 2 v_{u+2} holds for every u.  Every
    coordinate function in play is also invariant under rescaling the
    argument, since 2^2 = 1.
    """
    v_inf = (1, 0, 0, 0, 0, 0)
    for x1, x2 in itertools.product((0, 1, 2), repeat=2):
        if (x1, x2) == (0, 0):
            continue
        v = {
            u: gf3.vec((u * u, u * x1, u * x2, x1 * x1, x1 * x2, x2 * x2))
            for u in (0, 1, 2)
        }
        for u in (0, 1, 2):
            lhs = gf3.vec_add(v[u], v_inf)
            rhs = gf3.vec_scale(2, gf3.vec_add(v[(u + 1) % 3], v[(u + 2) % 3]))
            if lhs != rhs:
                return False
    raw_quadratics = [
        lambda x: tuple(x[i] * x[j] % 3 for i, j in
                        ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))),
        lambda x: tuple(v % 3 for v in (
            x[0] * x[0] + 1, x[0] * x[1], x[0] * x[2],
            x[1] * x[1], x[1] * x[2], x[2] * x[2])),
    ]
    for f in raw_quadratics:
        for x in itertools.product((0, 1, 2), repeat=3):
            doubled = tuple((2 * t) % 3 for t in x)
            if f(x) != f(doubled):
                return False
    return True


def automorphism_order(design: Design) -> int:
    """Order of the permutation group of the design's points preserving the
    block system.

    Counted along a point-stabilizer chain: the order is the product of the
    orbit sizes of successive base points, and each orbit membership question
    is settled by a backtracking search over point images with partial-block
    pruning (the image of every partially assigned block must stay inside
    some block).  Terminates on arbitrary block systems, degenerate or not.
    """
    pts = design.points
    n = len(pts)
    point_pos = {p: i for i, p in enumerate(pts)}
    block_masks = tuple(
        sum(1 << point_pos[p] for p in b.points) for b in design.blocks
    )
    blocks_of = tuple(
        tuple(bi for bi, bm in enumerate(block_masks) if bm >> i & 1) for i in range(n)
    )
    coverable: set[int] = set()
    for bm in block_masks:
        bits = [i for i in range(n) if bm >> i & 1]
        for r in range(len(bits) + 1):
            for sub in itertools.combinations(bits, r):
                coverable.add(sum(1 << i for i in sub))

    # Constrained points first: order the base by block-degree fingerprint.
    base = sorted(range(n), key=lambda i: (-len(blocks_of[i]), i))

    def extends(assigned: dict[int, int]) -> bool:
        """Is there a full block-preserving permutation extending `assigned`?"""
        images = [0] * len(block_masks)
        for p, v in assigned.items():
            for bi in blocks_of[p]:
                images[bi] |= 1 << v
        if any(im not in coverable for im in images):
            return False
        used = 0
        for v in assigned.values():
            used |= 1 << v
        todo = [p for p in base if p not in assigned]

        def dfs(depth: int, used: int) -> bool:
            if depth == len(todo):
                return True
            p = todo[depth]
            for v in range(n):
                if used >> v & 1:
                    continue
                touched = []
                ok = True
                for bi in blocks_of[p]:
                    new = images[bi] | 1 << v
                    if new not in coverable:
                        ok = False
                        break
                    touched.append((bi, images[bi]))
                    images[bi] = new
                if ok and dfs(depth + 1, used | 1 << v):
                    return True
                for bi, old in touched:
                    images[bi] = old
            return False

        return dfs(0, used)

    order = 1
    fixed: dict[int, int] = {}
    for p in base:
        orbit = 0
        for v in range(n):
            if v in fixed.values():
                continue  # earlier base points are held fixed
            if extends({**fixed, p: v}):
                orbit += 1
        order *= orbit
        fixed[p] = p
    return order
