"""Replacing conic layers: the 81 twelve-point sets around a surface point.

Each of the four conic planes through the base point splits, away from the
base and its tangent line, into three 3-point layers: the remaining conic
points (layer 0), the internal points (layer 1), and the external points off
the tangent (layer 2).  A unique plane elation with centre at the base and
axis the tangent cycles the layers 0 -> 1 -> 2 -> 0.  Choosing one layer
index per conic gives 81 twelve-point sets, indexed by quadruples in F^4:

  * quadruple sum 0 mod 3: projectively a punctured Veronese surface,
  * sum 1: a Witt-design cap,
  * sum 2: an exotic set with exactly 42 six-point primes, all sharing
    only the base point.

The layer elations of index quadruples summing to 0 extend jointly to
space collineations; the group of those extensions has order 27 and its
orbits sweep out the sum-0 and sum-1 classes.  Exotic sets are studied by
projecting from the base point: the four conic planes flatten to four
mutually skew lines, the tangent plane to their unique common transversal,
and the twelve points land exactly on the lines minus the transversal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import inf

from . import gf3, pg
from .pg import Collineation, Hyperplane, Point
from .veronese import (
    Conic,
    VeroneseModel,
    classify_conic_plane,
    lift_collineation,
    tangent_lines,
    veronese_map,
)

Label = float | int          # 0, 1, 2 or math.inf
LABEL_ORDER: tuple[Label, ...] = (0, 1, 2, inf)

Quadruple = tuple[int, int, int, int]

CLASS_NAMES = {0: "surface", 1: "cap", 2: "exotic"}

# The space elation fixing the prime {y22 = 0} pointwise and the base point
# (1,0,0,0,0,0) linewise that extends the label-0 layer elation trivially and
# the other three in their cycling direction: it adds y22 to y00.
BASE_EXTENSION = pg.collineation(
    (
        (1, 0, 0, 0, 0, 0),
        (0, 1, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 0),
        (0, 0, 0, 1, 0, 0),
        (0, 0, 0, 0, 1, 0),
        (1, 0, 0, 0, 0, 1),
    )
)

DEFAULT_BASE: Point = (1, 0, 0, 0, 0, 0)

_PLANE_AT_INFINITY: Hyperplane = (1, 0, 0)   # line {x0 = 0} of the parameter plane


@dataclass(frozen=True, eq=False)
class LayerSystem:
    base: Point
    conics: dict[Label, Conic]
    tangents: dict[Label, frozenset[Point]]
    layers: dict[tuple[Label, int], frozenset[Point]]


@dataclass(frozen=True)
class TwelveSet:
    points: frozenset[Point]
    quadruple: Quadruple


@dataclass(frozen=True, eq=False)
class OrbitReport:
    group_order: int
    powers_sum_zero: bool        # every induced power quadruple sums to 0 mod 3
    powers_bijective: bool       # group -> quadruples is one-to-one
    joint_unit_extension: bool   # some element induces all four first powers
    surface_witnesses: dict[Quadruple, Collineation]
    cap_witnesses: dict[Quadruple, Collineation]
    surface_complete: bool
    cap_complete: bool
    induced_quadruples: dict[Collineation, Quadruple]


@dataclass(frozen=True, eq=False)
class ProjectionReport:
    target: Hyperplane
    lines: dict[Label, tuple[Point, ...]]
    transversal: tuple[Point, ...]
    image_points: tuple[Point, ...]


@dataclass(frozen=True, eq=False)
class ExoticReport:
    six_point_primes: tuple[Hyperplane, ...]
    common_point: Point
    projection: ProjectionReport


def _preimage(model: VeroneseModel, base: Point) -> Point:
    for x in pg.enumerate_points(2):
        if veronese_map(x) == base:
            return x
    raise ValueError("base must be a surface point")


def labeled_conics(model: VeroneseModel, base: Point) -> dict[Label, Conic]:
    """The four conics through the base, labelled by the direction of their
    preimage lines: a line through the base preimage meets {x0 = 0} in one
    point (0, x1, x2), and the label is x2/x1, with inf for x1 = 0.

    If the base preimage itself lies on {x0 = 0} that rule degenerates; the
    line {x0 = 0} then takes the label inf and the rest are labelled 0, 1, 2
    in lexicographic order of their dual coordinates.
    """
    pre = _preimage(model, base)
    through = [c for c in model.conics if base in c.points]
    assert len(through) == 4
    out: dict[Label, Conic] = {}
    if pg.incident(pre, _PLANE_AT_INFINITY):
        rest = sorted(
            (c for c in through if c.preimage_line != _PLANE_AT_INFINITY),
            key=lambda c: c.preimage_line,
        )
        for label, c in zip((0, 1, 2), rest):
            out[label] = c
        (omega,) = [c for c in through if c.preimage_line == _PLANE_AT_INFINITY]
        out[inf] = omega
    else:
        for c in through:
            a = c.preimage_line
            direction = pg.canonical_point((0, a[2], (-a[1]) % 3))
            # canonical form pins direction = (0, 1, k) or (0, 0, 1)
            out[inf if direction[1] == 0 else direction[2]] = c
    assert len(out) == 4
    return out


_layer_cache: dict[tuple[int, Point], LayerSystem] = {}


def conic_layers(model: VeroneseModel, base: Point) -> LayerSystem:
    """For each conic through the base: layer 0 = conic minus base, layer 1 =
    internal points, layer 2 = external points off the tangent at the base."""
    key = (id(model), base)
    if key in _layer_cache:
        return _layer_cache[key]
    conics = labeled_conics(model, base)
    tangents: dict[Label, frozenset[Point]] = {}
    layers: dict[tuple[Label, int], frozenset[Point]] = {}
    for k, c in conics.items():
        part = classify_conic_plane(c)
        t = tangent_lines(c)[base]
        tangents[k] = t
        layers[(k, 0)] = c.points - {base}
        layers[(k, 1)] = part.internal
        layers[(k, 2)] = part.external - t
    system = LayerSystem(base=base, conics=conics, tangents=tangents, layers=layers)
    _layer_cache[key] = system
    return system


_elation_cache: dict[tuple[int, Point, Label], dict[Point, Point]] = {}


def layer_elation(model: VeroneseModel, base: Point, k: Label) -> dict[Point, Point]:
    """The plane elation with centre at the base and axis the tangent there
    that cycles layer 0 -> 1 -> 2 -> 0, as an explicit permutation of the 13
    points of the conic plane."""
    key = (id(model), base, k)
    if key in _elation_cache:
        return _elation_cache[key]
    system = conic_layers(model, base)
    c = system.conics[k]
    plane = c.plane
    actual = pg.flat_points(plane)
    coeff_of = {p: pg.flat_coordinates(plane, p) for p in actual}
    centre = coeff_of[base]
    axis_rows = gf3.mat([coeff_of[p] for p in sorted(system.tangents[k])])
    (axis,) = gf3.nullspace(axis_rows)
    seed = next(iter(system.layers[(k, 0)]))
    for t in (1, 2):
        m = tuple(
            tuple((int(i == j) + t * axis[i] * centre[j]) % 3 for j in range(3))
            for i in range(3)
        )
        perm = {
            p: _from_coeff(plane, pg.apply_collineation(m, coeff_of[p])) for p in actual
        }
        if perm[seed] in system.layers[(k, 1)]:
            for j in (0, 1, 2):
                source = system.layers[(k, j)]
                target = system.layers[(k, (j + 1) % 3)]
                assert {perm[p] for p in source} == target
            _elation_cache[key] = perm
            return perm
    raise AssertionError("no elation cycles the layers")


def _from_coeff(plane, coeff: Point) -> Point:
    v = [0] * len(plane[0])
    for c, row in zip(coeff, plane):
        for j in range(len(v)):
            v[j] = (v[j] + c * row[j]) % 3
    return pg.canonical_point(v)


def elation_power(
    model: VeroneseModel, base: Point, k: Label, e: int
) -> dict[Point, Point]:
    kappa = layer_elation(model, base, k)
    perm = {p: p for p in kappa}
    for _ in range(e % 3):
        perm = {p: kappa[q] for p, q in perm.items()}
    return perm


def _transport_matrix(model: VeroneseModel, base: Point) -> gf3.Matrix:
    """A plane collineation matrix carrying (1,0,0) to the base preimage,
    completed deterministically with standard basis rows."""
    pre = _preimage(model, base)
    rows = [pre]
    for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        if len(rows) == 3:
            break
        if gf3.rank(gf3.mat(rows + [e])) > len(rows):
            rows.append(e)
    return gf3.mat(rows)


def _default_label_of_line(line: Hyperplane) -> Label:
    duals = {(0, 0, 1): 0, (0, 1, 2): 1, (0, 1, 1): 2, (0, 1, 0): inf}
    return duals[line]


def extended_elation(model: VeroneseModel, base: Point, k: Label) -> Collineation:
    """The space collineation with centre at the base and axis the osculating
    prime of conic k that restricts to the identity on conic k's plane and to
    a nontrivial layer elation on each of the other three.

    For the default base and k = 0 this is the literal matrix BASE_EXTENSION;
    the other labels are conjugates of it under lifted plane collineations
    (fixing the base preimage and carrying the label-0 line to the label-k
    line).  Other base points are handled by transporting the whole system.
    The restriction behaviour is asserted, not assumed.
    """
    if base != DEFAULT_BASE:
        h = _transport_matrix(model, base)
        g = lift_collineation(h)
        the_line = labeled_conics(model, base)[k].preimage_line
        # pull the line back through h: duals transform by the transpose
        line_at_default = pg.canonical_point(gf3.vec_mat(the_line, gf3.transpose(h)))
        k0 = _default_label_of_line(line_at_default)
        mu0 = extended_elation(model, DEFAULT_BASE, k0)
        mu = pg.compose(pg.compose(pg.inverse(g), mu0), g)
    elif k == 0:
        mu = BASE_EXTENSION
    else:
        conjugators = {
            1: ((1, 0, 0), (0, 1, 1), (0, 0, 1)),
            2: ((1, 0, 0), (0, 1, 2), (0, 0, 1)),
            inf: ((1, 0, 0), (0, 0, 1), (0, 1, 0)),
        }
        g = lift_collineation(gf3.mat(conjugators[k]))
        mu = pg.compose(pg.compose(pg.inverse(g), BASE_EXTENSION), g)
    powers = induced_layer_powers(model, base, mu)
    pos = LABEL_ORDER.index(k)
    if powers is None or powers[pos] != 0 or any(
        e == 0 for i, e in enumerate(powers) if i != pos
    ):
        raise AssertionError("conjugate does not restrict to the expected elations")
    return mu


def induced_layer_powers(
    model: VeroneseModel, base: Point, g: Collineation
) -> tuple[int, ...] | None:
    """Which power of each conic plane's layer elation a collineation induces,
    or None if it fails to preserve some conic plane or induces something
    else entirely."""
    system = conic_layers(model, base)
    out = []
    for k in LABEL_ORDER:
        plane_pts = set(pg.flat_points(system.conics[k].plane))
        perm = {}
        for p in plane_pts:
            q = pg.apply_collineation(g, p)
            if q not in plane_pts:
                return None
            perm[p] = q
        for e in (0, 1, 2):
            if perm == elation_power(model, base, k, e):
                out.append(e)
                break
        else:
            return None
    return tuple(out)


def all_quadruples() -> tuple[Quadruple, ...]:
    return tuple(itertools.product((0, 1, 2), repeat=4))


def twelve_set(model: VeroneseModel, base: Point, quad: Quadruple) -> TwelveSet:
    """Union of one layer per conic, as dictated by the quadruple."""
    system = conic_layers(model, base)
    quad = tuple(q % 3 for q in quad)
    pts: set[Point] = set()
    for k, j in zip(LABEL_ORDER, quad):
        pts |= system.layers[(k, j)]
    return TwelveSet(points=frozenset(pts), quadruple=quad)


def hyperplane_profile(points) -> dict[int, int]:
    """Histogram of |prime and set| over all 364 primes of PG(5,3)."""
    pts = points.points if isinstance(points, TwelveSet) else points
    mask = pg.points_mask(5, pts)
    hist: dict[int, int] = {}
    for hmask in pg.hyperplane_point_masks(5):
        c = (hmask & mask).bit_count()
        hist[c] = hist.get(c, 0) + 1
    return dict(sorted(hist.items()))


_profile_cache: dict[tuple[int, Point], dict[int, dict[int, int]]] = {}


def reference_profiles(model: VeroneseModel, base: Point) -> dict[int, dict[int, int]]:
    """The three per-class hyperplane profiles, computed from one
    representative each; they must be pairwise distinct."""
    key = (id(model), base)
    if key not in _profile_cache:
        reps = {0: (0, 0, 0, 0), 1: (1, 0, 0, 0), 2: (2, 0, 0, 0)}
        profiles = {
            cls: hyperplane_profile(twelve_set(model, base, q))
            for cls, q in reps.items()
        }
        assert len({tuple(p.items()) for p in profiles.values()}) == 3
        _profile_cache[key] = profiles
    return _profile_cache[key]


def classify(model: VeroneseModel, base: Point, s: TwelveSet) -> str:
    """Class of a twelve-set: quadruple sum mod 3, cross-validated against
    the hyperplane profile invariant."""
    cls = sum(s.quadruple) % 3
    expected = reference_profiles(model, base)[cls]
    actual = hyperplane_profile(s)
    if actual != expected:
        raise ValueError(
            f"profile/sum mismatch for quadruple {s.quadruple}: {actual} != {expected}"
        )
    return CLASS_NAMES[cls]


def group_closure(generators) -> set[Collineation]:
    gens = [pg.canonical_collineation(g) for g in generators]
    n = len(gens[0])
    found = {gf3.identity(n)} | set(gens)
    frontier = list(found)
    while frontier:
        fresh = []
        for g in frontier:
            for h in gens:
                gh = pg.compose(g, h)
                if gh not in found:
                    found.add(gh)
                    fresh.append(gh)
        frontier = fresh
    return found


def apply_to_set(g: Collineation, pts: frozenset[Point]) -> frozenset[Point]:
    return frozenset(pg.apply_collineation(g, p) for p in pts)


def verify_orbit_equivalence(model: VeroneseModel, base: Point) -> OrbitReport:
    """Generate the group of extended layer elations and check its action.

    The group must have order 27, each element must induce a quadruple of
    layer-elation powers summing to 0 mod 3 (bijectively), and its orbits on
    the base twelve-sets must cover the whole sum-0 class and the whole sum-1
    class.  No element induces the all-first-powers quadruple.
    """
    mus = [extended_elation(model, base, k) for k in LABEL_ORDER]
    group = group_closure(mus)
    induced: dict[Collineation, Quadruple] = {}
    for g in sorted(group):
        powers = induced_layer_powers(model, base, g)
        assert powers is not None, "group element does not preserve the conic planes"
        induced[g] = powers
    sums_ok = all(sum(q) % 3 == 0 for q in induced.values())
    bijective = len(set(induced.values())) == len(group)
    joint_unit = any(q == (1, 1, 1, 1) for q in induced.values())
    sets_by_points = {
        twelve_set(model, base, q).points: q for q in all_quadruples()
    }
    witnesses: dict[int, dict[Quadruple, Collineation]] = {0: {}, 1: {}}
    for cls, rep in ((0, (0, 0, 0, 0)), (1, (1, 1, 1, 1))):
        start = twelve_set(model, base, rep).points
        for g in sorted(group):
            image = apply_to_set(g, start)
            q = sets_by_points.get(image)
            if q is not None and q not in witnesses[cls]:
                witnesses[cls][q] = g
    surface_quads = {q for q in all_quadruples() if sum(q) % 3 == 0}
    cap_quads = {q for q in all_quadruples() if sum(q) % 3 == 1}
    return OrbitReport(
        group_order=len(group),
        powers_sum_zero=sums_ok,
        powers_bijective=bijective,
        joint_unit_extension=joint_unit,
        surface_witnesses=witnesses[0],
        cap_witnesses=witnesses[1],
        surface_complete=set(witnesses[0]) == surface_quads,
        cap_complete=set(witnesses[1]) == cap_quads,
        induced_quadruples=induced,
    )


def default_projection_target(base: Point) -> Hyperplane:
    """First prime in enumeration order that misses the base point."""
    for h in pg.enumerate_hyperplanes(5):
        if not pg.incident(base, h):
            return h
    raise AssertionError("unreachable")


def project_from_base(
    model: VeroneseModel, base: Point, s: TwelveSet, target: Hyperplane
) -> ProjectionReport:
    """Project the set through the base point onto a prime off the base.

    The four conic planes land on four mutually skew lines, the tangent plane
    on their unique common transversal, and the twelve points on exactly the
    line points off the transversal.  The stated geometry is verified here
    and a violation raises.
    """
    if pg.incident(base, target):
        raise ValueError("target prime contains the base point")
    target_flat = pg.flat_from_dual([target])
    system = conic_layers(model, base)

    def project(x: Point) -> Point:
        hits = [p for p in pg.line_through(base, x) if pg.incident(p, target)]
        assert len(hits) == 1
        return hits[0]

    lines: dict[Label, tuple[Point, ...]] = {}
    for k in LABEL_ORDER:
        line_flat = pg.meet(system.conics[k].plane, target_flat)
        lines[k] = tuple(sorted(pg.flat_points(line_flat)))
    transversal_flat = pg.meet(model.tangent_planes[base], target_flat)
    transversal = tuple(sorted(pg.flat_points(transversal_flat)))
    if len(transversal) != 4 or any(len(l) != 4 for l in lines.values()):
        raise ValueError("projection did not produce lines")
    for a, b in itertools.combinations(LABEL_ORDER, 2):
        if set(lines[a]) & set(lines[b]):
            raise ValueError("projected conic planes are not skew")
    for k in LABEL_ORDER:
        if len(set(transversal) & set(lines[k])) != 1:
            raise ValueError("transversal fails to meet a projected line once")
    image = frozenset(project(x) for x in s.points)
    expected = frozenset(itertools.chain.from_iterable(lines.values())) - set(
        transversal
    )
    if image != expected:
        raise ValueError("image is not the line points off the transversal")
    return ProjectionReport(
        target=target,
        lines=lines,
        transversal=transversal,
        image_points=tuple(sorted(image)),
    )


def analyze_exotic(
    model: VeroneseModel, base: Point, s: TwelveSet, target: Hyperplane | None = None
) -> ExoticReport:
    """Full analysis of a sum-2 set: its 42 six-point primes, their unique
    common point, and the projection picture from that point."""
    if classify(model, base, s) != "exotic":
        raise ValueError("not an exotic (sum 2 mod 3) twelve-set")
    mask = pg.points_mask(5, s.points)
    primes = tuple(
        h
        for h, hmask in zip(pg.enumerate_hyperplanes(5), pg.hyperplane_point_masks(5))
        if (hmask & mask).bit_count() == 6
    )
    common = gf3.nullspace(gf3.mat(primes))
    if len(common) != 1:
        raise ValueError("six-point primes do not meet in a single point")
    common_point = pg.canonical_point(common[0])
    if target is None:
        target = default_projection_target(base)
    projection = project_from_base(model, base, s, target)
    return ExoticReport(
        six_point_primes=primes, common_point=common_point, projection=projection
    )
