"""The extended ternary Golay code read off the cap's coordinate vectors.

Writing the 12 canonical cap vectors as the columns of a 6x12 matrix over
GF(3) yields a generator matrix of the [12,6,6] self-dual code.  Codewords
are evaluations of linear forms at the cap, so zero entries of a word mark
the cap points on the corresponding prime; the weight-6 words come in
negation pairs whose supports are exactly the 132 design blocks.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from . import gf3, pg
from .gf3 import Matrix, Vector
from .pg import Point
from .cap import CapSet, cap_domain, cap_map


@dataclass(frozen=True)
class TernaryCode:
    generator: Matrix                      # 6x12, columns = cap point vectors
    column_points: tuple[Point, ...]       # cap points, one per column
    column_preimages: tuple[Point, ...]    # their parameter-plane preimages


def generator_matrix(cap: CapSet) -> TernaryCode:
    """Columns are the cap points in parameter-domain lexicographic order.

    Only formula-built caps carry that order, so anything else is rejected.
    """
    if cap.origin != "formula":
        raise ValueError("column order is defined by the formula parametrization")
    preimages = cap_domain()
    columns = tuple(cap_map(x) for x in preimages)
    generator = tuple(tuple(col[r] for col in columns) for r in range(6))
    return TernaryCode(
        generator=generator, column_points=columns, column_preimages=preimages
    )


def code_rank(code: TernaryCode) -> int:
    return gf3.rank(code.generator)


def enumerate_codewords(code: TernaryCode) -> tuple[Vector, ...]:
    """All 3^6 = 729 row-space vectors, in lexicographic order of the
    coefficient tuples."""
    return tuple(
        gf3.vec_mat(a, code.generator)
        for a in itertools.product((0, 1, 2), repeat=6)
    )


def weight_distribution(code: TernaryCode) -> dict[int, int]:
    """Hamming weight histogram over the full codeword enumeration."""
    counts = Counter(sum(1 for x in w if x) for w in enumerate_codewords(code))
    return dict(sorted(counts.items()))


def minimum_distance(code: TernaryCode) -> int:
    return min(w for w in weight_distribution(code) if w > 0)


def is_self_dual(code: TernaryCode) -> bool:
    """All generator rows pairwise (and self) orthogonal, and rank 6."""
    g = code.generator
    if gf3.rank(g) != 6:
        return False
    return all(
        gf3.dot(g[i], g[j]) == 0 for i in range(6) for j in range(i, 6)
    )


def weight6_supports(code: TernaryCode) -> set[frozenset[Point]]:
    """Supports of the weight-6 codewords, as sets of cap points."""
    out = set()
    for w in enumerate_codewords(code):
        support = [i for i, x in enumerate(w) if x]
        if len(support) == 6:
            out.add(frozenset(code.column_points[i] for i in support))
    return out
